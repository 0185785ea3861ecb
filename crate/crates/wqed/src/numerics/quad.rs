//! Panel-adaptive Gauss-Kronrod quadrature for complex-valued integrands.
//!
//! A 15-point Kronrod rule with the embedded 7-point Gauss rule supplies the
//! per-panel error estimate; the panel with the largest estimate is split
//! until the summed estimate drops below the requested absolute tolerance.
//! Callers pass breakpoints at known sharp features (resonances, edge peaks)
//! so no structure is narrower than its starting panel.

use num_complex::Complex64;
use std::collections::BinaryHeap;

use crate::error::{Result, WqedError};

// QUADPACK 15-point Kronrod abscissae and weights with the embedded
// 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_97,
    0.417_959_183_673_469_387_755_102_040_816_33,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut res_gauss = Complex64::new(0.0, 0.0);
    let mut res_kronrod = f_center * WGK[7];
    let mut res_abs = res_kronrod.norm();
    let mut fv = [[Complex64::new(0.0, 0.0); 2]; 7];

    for j in 0..7 {
        let absc = half * XGK[j];
        let f1 = f(center - absc);
        let f2 = f(center + absc);
        fv[j] = [f1, f2];
        let fsum = f1 + f2;
        res_kronrod += WGK[j] * fsum;
        res_abs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * fsum;
        }
    }
    res_gauss += WG[3] * f_center;

    let mean = res_kronrod * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).norm();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j][0] - mean).norm() + (fv[j][1] - mean).norm());
    }

    let value = res_kronrod * half;
    res_abs *= half.abs();
    res_asc *= half.abs();

    let mut err = ((res_kronrod - res_gauss) * half).norm();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

struct Panel {
    err: f64,
    a: f64,
    b: f64,
    value: Complex64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

pub struct QuadOutcome {
    pub value: Complex64,
    pub error: f64,
    pub evaluations: usize,
}

const MAX_PANELS: usize = 30_000;

/// Integrate `f` over `[a, b]` to absolute tolerance `abs_tol`.
///
/// `breakpoints` seeds extra initial panel boundaries (values outside
/// `(a, b)` are ignored, duplicates collapsed).
pub fn integrate<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    abs_tol: f64,
) -> Result<QuadOutcome> {
    assert!(b > a);
    let mut edges: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&x| x > a && x < b)
        .collect();
    edges.push(a);
    edges.push(b);
    edges.sort_by(f64::total_cmp);
    edges.dedup_by(|x, y| (*x - *y).abs() < 1e-15);

    let mut heap = BinaryHeap::new();
    let mut evals = 0usize;
    for w in edges.windows(2) {
        let (value, err) = gk15(f, w[0], w[1]);
        evals += 15;
        heap.push(Panel { err, a: w[0], b: w[1], value });
    }

    loop {
        let total_err: f64 = heap.iter().map(|p| p.err).sum();
        if total_err <= abs_tol {
            let value = heap.iter().map(|p| p.value).sum();
            return Ok(QuadOutcome { value, error: total_err, evaluations: evals });
        }
        if heap.len() >= MAX_PANELS {
            return Err(WqedError::QuadratureNonConvergence {
                requested: abs_tol,
                achieved: total_err,
            });
        }
        let worst = heap.pop().expect("heap cannot be empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel width at floating-point resolution; keep its estimate
            let mut value = worst.value;
            let mut error = worst.err;
            for p in heap.iter() {
                value += p.value;
                error += p.err;
            }
            if error <= 10.0 * abs_tol {
                return Ok(QuadOutcome { value, error, evaluations: evals });
            }
            return Err(WqedError::QuadratureNonConvergence {
                requested: abs_tol,
                achieved: error,
            });
        }
        let (v1, e1) = gk15(f, worst.a, mid);
        let (v2, e2) = gk15(f, mid, worst.b);
        evals += 30;
        heap.push(Panel { err: e1, a: worst.a, b: mid, value: v1 });
        heap.push(Panel { err: e2, a: mid, b: worst.b, value: v2 });
    }
}

/// Real-valued convenience wrapper.
pub fn integrate_real<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    abs_tol: f64,
) -> Result<(f64, f64)> {
    let out = integrate(&|x| Complex64::new(f(x), 0.0), a, b, breakpoints, abs_tol)?;
    Ok((out.value.re, out.error))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn integrates_oscillatory_exponential() {
        // int_0^pi e^{i 40 x} dx = (e^{i 40 pi} - 1)/(40 i) = 0
        let out = integrate(&|x| Complex64::new(0.0, 40.0 * x).exp(), 0.0, PI, &[], 1e-12).unwrap();
        assert!(out.value.norm() < 1e-11, "{}", out.value.norm());
    }

    #[test]
    fn narrow_lorentzian_needs_breakpoint_seeds() {
        // int_{-1}^{1} w/(x^2 + w^2) dx = 2 atan(1/w)
        let w = 1e-5;
        let f = |x: f64| Complex64::new(w / (x * x + w * w), 0.0);
        let expect = 2.0 * (1.0 / w).atan();
        let out = integrate(&f, -1.0, 1.0, &[-8.0 * w, 0.0, 8.0 * w], 1e-12).unwrap();
        assert_abs_diff_eq!(out.value.re, expect, epsilon = 1e-10);
    }

    #[test]
    fn sin_integral() {
        let (v, _) = integrate_real(&|x: f64| x.sin(), 0.0, PI, &[], 1e-13).unwrap();
        assert_abs_diff_eq!(v, 2.0, epsilon = 1e-12);
    }
}
