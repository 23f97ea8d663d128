use crate::error::{Error, Result};

use super::matrix::{DensityMatrix, PSD_TOL};

/// `-x log2 x` with the `0 log 0 = 0` convention.
#[inline]
pub(crate) fn neg_xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// Shannon entropy (bits) of a spectrum. Values in `[-1e-10, 0)` are clamped
/// to zero; anything more negative is rejected.
pub fn spectrum_entropy(eigenvalues: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in eigenvalues {
        if l < -PSD_TOL {
            return Err(Error::NotAState(format!("negative eigenvalue {l:e}")));
        }
        s += neg_xlog2x(l.max(0.0));
    }
    Ok(s.max(0.0))
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    spectrum_entropy(&rho.eigenvalues())
}

/// Binary entropy `h(x)` in bits. Endpoints return exactly 0.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-1e-12..=1.0 + 1e-12).contains(&x) {
        return Err(Error::Domain(format!("binary entropy argument {x} outside [0, 1]")));
    }
    let x = x.clamp(0.0, 1.0);
    Ok(h2(x))
}

/// Binary entropy without domain checking; callers guarantee `x ∈ [0, 1]`.
#[inline]
pub(crate) fn h2(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    neg_xlog2x(x) + neg_xlog2x(1.0 - x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::Matrix;
    use num_complex::Complex64 as C64;

    #[test]
    fn binary_entropy_values() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        let h = binary_entropy(0.75).unwrap();
        assert!((h - 0.8112781245).abs() < 1e-10);
        let rho = DensityMatrix::new(Matrix::diag(&[0.75, 0.25])).unwrap();
        assert!((von_neumann_entropy(&rho).unwrap() - h).abs() < 1e-14);
    }

    #[test]
    fn binary_entropy_domain() {
        assert!(matches!(binary_entropy(1.1), Err(Error::Domain(_))));
        assert!(matches!(binary_entropy(-0.01), Err(Error::Domain(_))));
        assert_eq!(binary_entropy(-1e-13).unwrap(), 0.0);
    }

    #[test]
    fn von_neumann_reference_states() {
        let pure = DensityMatrix::new(Matrix::diag(&[1.0, 0.0])).unwrap();
        assert_eq!(von_neumann_entropy(&pure).unwrap(), 0.0);
        let mixed = DensityMatrix::maximally_mixed(2);
        assert!((von_neumann_entropy(&mixed).unwrap() - 1.0).abs() < 1e-15);
        let mixed4 = DensityMatrix::new(Matrix::diag(&[0.25; 4])).unwrap();
        assert!((von_neumann_entropy(&mixed4).unwrap() - 2.0).abs() < 1e-15);
        // |+><+| has eigenvalues {1, 0} but is not diagonal
        let plus = Matrix::from_fn(2, 2, |_, _| C64::new(0.5, 0.0));
        let plus = DensityMatrix::new(plus).unwrap();
        assert!(von_neumann_entropy(&plus).unwrap().abs() < 1e-14);
    }

    #[test]
    fn spectrum_entropy_clamps_and_rejects() {
        assert_eq!(spectrum_entropy(&[1.0, -5e-11]).unwrap(), 0.0);
        assert!(spectrum_entropy(&[1.1, -0.1]).is_err());
    }
}
