//! Minimal FFI wrappers around the three LAPACK routines the crate needs.
//!
//! Matrices are stored column-major (LAPACK convention); eigenvector `j`
//! occupies column `j` of the returned storage.

use num_complex::Complex64;
use std::os::raw::c_char;

use crate::error::{Result, WqedError};

extern "C" {
    fn dsyevd_(
        jobz: *const c_char,
        uplo: *const c_char,
        n: *const i32,
        a: *mut f64,
        lda: *const i32,
        w: *mut f64,
        work: *mut f64,
        lwork: *const i32,
        iwork: *mut i32,
        liwork: *const i32,
        info: *mut i32,
    );

    fn zgeev_(
        jobvl: *const c_char,
        jobvr: *const c_char,
        n: *const i32,
        a: *mut Complex64,
        lda: *const i32,
        w: *mut Complex64,
        vl: *mut Complex64,
        ldvl: *const i32,
        vr: *mut Complex64,
        ldvr: *const i32,
        work: *mut Complex64,
        lwork: *const i32,
        rwork: *mut f64,
        info: *mut i32,
    );

    fn zgesv_(
        n: *const i32,
        nrhs: *const i32,
        a: *mut Complex64,
        lda: *const i32,
        ipiv: *mut i32,
        b: *mut Complex64,
        ldb: *const i32,
        info: *mut i32,
    );
}

/// Eigendecomposition of a real symmetric matrix (divide and conquer).
///
/// `a` holds the matrix column-major on entry and the orthonormal
/// eigenvectors on exit; the return value is the ascending eigenvalue list.
pub fn eigh_inplace(a: &mut [f64], n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    let nn = n as i32;
    let mut w = vec![0.0f64; n];
    let (jobz, uplo) = (b'V' as c_char, b'L' as c_char);
    let mut info: i32 = 0;

    // workspace query
    let minus_one: i32 = -1;
    let mut work_query = [0.0f64; 1];
    let mut iwork_query = [0i32; 1];
    unsafe {
        dsyevd_(
            &jobz,
            &uplo,
            &nn,
            a.as_mut_ptr(),
            &nn,
            w.as_mut_ptr(),
            work_query.as_mut_ptr(),
            &minus_one,
            iwork_query.as_mut_ptr(),
            &minus_one,
            &mut info,
        );
    }
    if info != 0 {
        return Err(WqedError::Lapack { routine: "dsyevd (workspace query)", info });
    }
    let lwork = work_query[0] as i32;
    let liwork = iwork_query[0];
    let mut work = vec![0.0f64; lwork.max(1) as usize];
    let mut iwork = vec![0i32; liwork.max(1) as usize];
    unsafe {
        dsyevd_(
            &jobz,
            &uplo,
            &nn,
            a.as_mut_ptr(),
            &nn,
            w.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            iwork.as_mut_ptr(),
            &liwork,
            &mut info,
        );
    }
    if info != 0 {
        return Err(WqedError::Lapack { routine: "dsyevd", info });
    }
    Ok(w)
}

/// Eigenvalues and right eigenvectors of a general complex matrix.
pub struct ComplexEig {
    pub values: Vec<Complex64>,
    /// Right eigenvectors, column-major; column `j` pairs with `values[j]`.
    pub vectors: Vec<Complex64>,
}

pub fn eig_complex(mut a: Vec<Complex64>, n: usize) -> Result<ComplexEig> {
    assert_eq!(a.len(), n * n);
    let nn = n as i32;
    let mut w = vec![Complex64::new(0.0, 0.0); n];
    let mut vr = vec![Complex64::new(0.0, 0.0); n * n];
    let mut rwork = vec![0.0f64; 2 * n];
    let (jobvl, jobvr) = (b'N' as c_char, b'V' as c_char);
    let ldvl: i32 = 1;
    let mut info: i32 = 0;

    let minus_one: i32 = -1;
    let mut work_query = [Complex64::new(0.0, 0.0); 1];
    unsafe {
        zgeev_(
            &jobvl,
            &jobvr,
            &nn,
            a.as_mut_ptr(),
            &nn,
            w.as_mut_ptr(),
            std::ptr::null_mut(),
            &ldvl,
            vr.as_mut_ptr(),
            &nn,
            work_query.as_mut_ptr(),
            &minus_one,
            rwork.as_mut_ptr(),
            &mut info,
        );
    }
    if info != 0 {
        return Err(WqedError::Lapack { routine: "zgeev (workspace query)", info });
    }
    let lwork = work_query[0].re as i32;
    let mut work = vec![Complex64::new(0.0, 0.0); lwork.max(1) as usize];
    unsafe {
        zgeev_(
            &jobvl,
            &jobvr,
            &nn,
            a.as_mut_ptr(),
            &nn,
            w.as_mut_ptr(),
            std::ptr::null_mut(),
            &ldvl,
            vr.as_mut_ptr(),
            &nn,
            work.as_mut_ptr(),
            &lwork,
            rwork.as_mut_ptr(),
            &mut info,
        );
    }
    if info != 0 {
        return Err(WqedError::Lapack { routine: "zgeev", info });
    }
    Ok(ComplexEig { values: w, vectors: vr })
}

/// Solve the dense complex system `A x = b` (LU with partial pivoting).
/// `a` is consumed (overwritten by the factorization); `b` is overwritten
/// with the solution and returned.
pub fn solve_complex(mut a: Vec<Complex64>, mut b: Vec<Complex64>, n: usize) -> Result<Vec<Complex64>> {
    assert_eq!(a.len(), n * n);
    assert_eq!(b.len(), n);
    let nn = n as i32;
    let one: i32 = 1;
    let mut ipiv = vec![0i32; n];
    let mut info: i32 = 0;
    unsafe {
        zgesv_(
            &nn,
            &one,
            a.as_mut_ptr(),
            &nn,
            ipiv.as_mut_ptr(),
            b.as_mut_ptr(),
            &nn,
            &mut info,
        );
    }
    if info != 0 {
        return Err(WqedError::Lapack { routine: "zgesv", info });
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn eigh_recovers_known_tridiagonal_spectrum() {
        // open chain with hopping -1: eigenvalues -2 cos(q pi / (n+1))
        let n = 8;
        let mut a = vec![0.0; n * n];
        for i in 0..n - 1 {
            a[i * n + i + 1] = -1.0;
            a[(i + 1) * n + i] = -1.0;
        }
        let w = eigh_inplace(&mut a, n).unwrap();
        for (q, lam) in w.iter().enumerate() {
            let expect = -2.0 * ((n - q) as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert_abs_diff_eq!(*lam, expect, epsilon = 1e-12);
        }
        // columns are orthonormal
        let mut dot01 = 0.0;
        let mut n0 = 0.0;
        for i in 0..n {
            dot01 += a[i] * a[n + i];
            n0 += a[i] * a[i];
        }
        assert_abs_diff_eq!(dot01, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(n0, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn complex_eig_diagonalizes_small_matrix() {
        // [[i, 1], [1, -i]] has eigenvalues 0 (double) ... use a clean one:
        // [[1, 2], [3, 4]] complexified
        let a = vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(3.0, 0.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(4.0, 0.0),
        ];
        let eig = eig_complex(a.clone(), 2).unwrap();
        let mut vals: Vec<f64> = eig.values.iter().map(|z| z.re).collect();
        vals.sort_by(f64::total_cmp);
        let disc = (25.0f64 / 4.0 + 2.0).sqrt(); // sqrt((tr/2)^2 - det) with tr=5, det=-2
        assert_abs_diff_eq!(vals[0], 2.5 - disc, epsilon = 1e-12);
        assert_abs_diff_eq!(vals[1], 2.5 + disc, epsilon = 1e-12);
    }

    #[test]
    fn solve_complex_roundtrip() {
        let a = vec![
            Complex64::new(2.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(3.0, 0.5),
        ];
        let x_true = [Complex64::new(1.0, -2.0), Complex64::new(0.5, 0.25)];
        // b = A x (column-major: a[col*n + row])
        let b = vec![
            a[0] * x_true[0] + a[2] * x_true[1],
            a[1] * x_true[0] + a[3] * x_true[1],
        ];
        let x = solve_complex(a, b, 2).unwrap();
        assert!((x[0] - x_true[0]).norm() < 1e-13);
        assert!((x[1] - x_true[1]).norm() < 1e-13);
    }
}
