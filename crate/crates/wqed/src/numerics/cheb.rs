//! Chebyshev expansion of smooth kernels against the half-circle weight.
//!
//! A function `f` that is smooth on [-1, 1] is expanded in Chebyshev
//! polynomials of the second kind, `f(y) = sum_n b_n U_n(y)`. Against the
//! weight `sqrt(1 - y^2)` the oscillatory moments are exact Bessel values,
//!
//!   int_{-1}^{1} sqrt(1-y^2) U_n(y) e^{i w y} dy = pi i^n (n+1) J_{n+1}(w)/w,
//!
//! so one coefficient fit serves every oscillation frequency. This treats
//! the oscillator exactly (a Filon scheme with the edge weight folded into
//! the moments) and stays uniformly accurate from w = 0 to w ~ 1e6.
//!
//! Coefficients come from a type-I sine transform: with `y = cos(phi)`,
//! `f(cos phi) sin(phi) = sum_m b_{m-1} sin(m phi)`.

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::bessel;
use crate::error::{Result, WqedError};

const MIN_POINTS: usize = 512;
const MAX_POINTS: usize = 1 << 17;

pub struct ChebUSeries {
    coeffs: Vec<Complex64>,
}

impl ChebUSeries {
    /// Fit `f` on [-1, 1], doubling the sample count until the weighted
    /// coefficient tail falls below `rel_tail_tol` of the largest weight.
    pub fn fit<F: Fn(f64) -> Complex64>(f: &F, rel_tail_tol: f64) -> Result<Self> {
        let mut planner = FftPlanner::new();
        let mut m = MIN_POINTS;
        loop {
            let coeffs = dst_coefficients(f, m, &mut planner);
            let weight: Vec<f64> = coeffs
                .iter()
                .enumerate()
                .map(|(n, b)| b.norm() * (n + 1) as f64)
                .collect();
            let w_max = weight.iter().copied().fold(0.0, f64::max);
            if w_max == 0.0 {
                return Ok(Self { coeffs: vec![Complex64::new(0.0, 0.0)] });
            }
            let tail_start = m - 1 - (m - 1) / 8;
            let tail_max = weight[tail_start..].iter().copied().fold(0.0, f64::max);
            if w_max > 0.0 && tail_max <= rel_tail_tol * w_max {
                // drop the converged tail
                let cut = rel_tail_tol * 0.1 * w_max;
                let keep = weight.iter().rposition(|&w| w > cut).map_or(1, |i| i + 1);
                return Ok(Self { coeffs: coeffs[..keep].to_vec() });
            }
            if m >= MAX_POINTS {
                return Err(WqedError::SeriesNonConvergence { max_points: MAX_POINTS });
            }
            m *= 2;
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `int_{-1}^{1} sqrt(1-y^2) f(y) e^{i w y} dy` for `w >= 0`.
    pub fn oscillatory_integral(&self, w: f64) -> Complex64 {
        assert!(w >= 0.0 && w.is_finite());
        if w < 1e-280 {
            return self.weighted_integral();
        }
        let n_terms = self.coeffs.len();
        let js = bessel::j_sequence(w, n_terms);
        let mut acc = Complex64::new(0.0, 0.0);
        // i^n cycles with period 4; accumulate per residue class and combine
        let mut re_acc = [0.0f64; 2]; // n % 4 == 0, 2
        let mut im_acc = [0.0f64; 2]; // n % 4 == 1, 3
        for (n, b) in self.coeffs.iter().enumerate() {
            let term = *b * ((n + 1) as f64 * js[n + 1]);
            match n % 4 {
                0 => {
                    re_acc[0] += term.re;
                    im_acc[0] += term.im;
                }
                1 => {
                    re_acc[1] -= term.im;
                    im_acc[1] += term.re;
                }
                2 => {
                    re_acc[0] -= term.re;
                    im_acc[0] -= term.im;
                }
                _ => {
                    re_acc[1] += term.im;
                    im_acc[1] -= term.re;
                }
            }
        }
        acc.re = re_acc[0] + re_acc[1];
        acc.im = im_acc[0] + im_acc[1];
        acc * (std::f64::consts::PI / w)
    }

    /// `int_{-1}^{1} sqrt(1-y^2) f(y) dy` (the `w = 0` moment).
    pub fn weighted_integral(&self) -> Complex64 {
        self.coeffs[0] * (std::f64::consts::PI / 2.0)
    }
}

fn dst_coefficients<F: Fn(f64) -> Complex64>(
    f: &F,
    m: usize,
    planner: &mut FftPlanner<f64>,
) -> Vec<Complex64> {
    // odd extension of q_j = f(cos(j pi / m)) sin(j pi / m) over 2m points
    let mut buf = vec![Complex64::new(0.0, 0.0); 2 * m];
    for j in 1..m {
        let phi = j as f64 * std::f64::consts::PI / m as f64;
        let q = f(phi.cos()) * phi.sin();
        buf[j] = q;
        buf[2 * m - j] = -q;
    }
    let fft = planner.plan_fft_forward(2 * m);
    fft.process(&mut buf);
    // sum_j q_j sin(pi j k / m) = i Z_k / 2; b_{k-1} = (2/m) * that
    (1..m)
        .map(|k| Complex64::new(0.0, 1.0) * buf[k] / m as f64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::quad;
    use approx::assert_abs_diff_eq;

    fn lorentzian_kernel(g4: f64) -> impl Fn(f64) -> Complex64 {
        move |y: f64| Complex64::new(1.0 / (16.0 * y * y * (1.0 - y * y) + g4), 0.0)
    }

    #[test]
    fn zero_frequency_moment_matches_quadrature() {
        let g4 = 0.2f64.powi(4);
        let f = lorentzian_kernel(g4);
        let series = ChebUSeries::fit(&f, 1e-12).unwrap();
        let direct = quad::integrate(
            &|y: f64| Complex64::new((1.0 - y * y).sqrt(), 0.0) * f(y),
            -1.0,
            1.0,
            &[-0.05, 0.0, 0.05],
            1e-12,
        )
        .unwrap();
        assert_abs_diff_eq!(
            series.weighted_integral().re,
            direct.value.re,
            epsilon = 1e-10
        );
    }

    #[test]
    fn oscillatory_moments_match_quadrature() {
        let g4 = 0.2f64.powi(4);
        let f = lorentzian_kernel(g4);
        let series = ChebUSeries::fit(&f, 1e-12).unwrap();
        for &w in &[0.7, 20.0, 311.0, 1999.0] {
            let direct = quad::integrate(
                &|theta: f64| {
                    // y = -cos(theta) removes the sqrt edge behavior
                    let y = -theta.cos();
                    let s = theta.sin();
                    Complex64::new(0.0, w * y).exp() * f(y) * (s * s)
                },
                0.0,
                std::f64::consts::PI,
                &[1e-3, 0.1, 1.4708, 1.5708, 1.6708, 3.0, 3.14],
                1e-13,
            )
            .unwrap();
            let via_series = series.oscillatory_integral(w);
            assert!(
                (via_series - direct.value).norm() < 1e-10,
                "w={w}: {via_series} vs {}",
                direct.value
            );
        }
    }

    #[test]
    fn pure_weight_gives_bessel_j1() {
        // f = 1: integral is pi J_1(w)/w
        let series = ChebUSeries::fit(&|_| Complex64::new(1.0, 0.0), 1e-13).unwrap();
        for &w in &[0.5, 3.0, 50.0, 1.0e4] {
            let expect = std::f64::consts::PI * crate::numerics::bessel::j1(w) / w;
            assert_abs_diff_eq!(series.oscillatory_integral(w).re, expect, epsilon = 1e-12);
            assert_abs_diff_eq!(series.oscillatory_integral(w).im, 0.0, epsilon = 1e-12);
        }
    }
}
