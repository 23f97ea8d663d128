//! Dense complex linear algebra for qubit channels: Hermitian spectra,
//! entropies, Kraus maps, complements, Choi matrices and partial transposes.

mod eigen;
mod entropy;
mod kraus;
mod matrix;

pub use eigen::{eigenvalues_2x2, eigenvalues_hermitian, jacobi_eigenvalues, OFF_DIAGONAL_TOL};
pub use entropy::{binary_entropy, spectrum_entropy, von_neumann_entropy};
pub use kraus::{apply_kraus, choi_matrix, complement_kraus, partial_transpose, KrausSet, COMPLETENESS_TOL};
pub use matrix::{DensityMatrix, HermitianMatrix, Matrix, HERMITIAN_TOL, PSD_TOL, TRACE_TOL};

pub(crate) use entropy::h2;

pub use num_complex::Complex64 as C64;

/// Pauli matrices `I, X, Y, Z`.
pub mod pauli {
    use super::{Matrix, C64};

    pub fn i() -> Matrix {
        Matrix::identity(2)
    }

    pub fn x() -> Matrix {
        let (o, l) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0));
        Matrix::from_rows(&[[o, l], [l, o]])
    }

    pub fn y() -> Matrix {
        let o = C64::new(0.0, 0.0);
        Matrix::from_rows(&[[o, C64::new(0.0, -1.0)], [C64::new(0.0, 1.0), o]])
    }

    pub fn z() -> Matrix {
        Matrix::diag(&[1.0, -1.0])
    }
}
