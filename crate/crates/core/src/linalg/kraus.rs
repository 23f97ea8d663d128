use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

use super::matrix::{DensityMatrix, HermitianMatrix, Matrix};

/// Tolerance on `||Σ K† K − I||_F`.
pub const COMPLETENESS_TOL: f64 = 1e-10;

/// Ordered Kraus representation of a channel `L(C^dim_in) → L(C^dim_out)`.
///
/// Order matters: the complement built by [`complement_kraus`] indexes its
/// output basis by position in `ops`.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausSet {
    dim_in: usize,
    dim_out: usize,
    ops: Vec<Matrix>,
}

impl KrausSet {
    pub fn new(ops: Vec<Matrix>) -> Result<Self> {
        let first = ops
            .first()
            .ok_or_else(|| Error::InvalidKraus("empty operator list".into()))?;
        let (dim_out, dim_in) = (first.rows(), first.cols());
        if dim_in == 0 || dim_out == 0 {
            return Err(Error::InvalidKraus("zero-sized operator".into()));
        }
        for (i, k) in ops.iter().enumerate() {
            if k.rows() != dim_out || k.cols() != dim_in {
                return Err(Error::InvalidKraus(format!(
                    "operator {i} is {}x{}, expected {dim_out}x{dim_in}",
                    k.rows(),
                    k.cols()
                )));
            }
        }
        let set = Self { dim_in, dim_out, ops };
        let deviation = set.completeness_deviation();
        if deviation > COMPLETENESS_TOL || deviation.is_nan() {
            return Err(Error::Incomplete { deviation });
        }
        Ok(set)
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn ops(&self) -> &[Matrix] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// `||Σ K† K − I||_F`.
    pub fn completeness_deviation(&self) -> f64 {
        let mut sum = Matrix::zeros(self.dim_in, self.dim_in);
        for k in &self.ops {
            sum = &sum + &(&k.adjoint() * k);
        }
        (&sum - &Matrix::identity(self.dim_in)).frobenius_norm()
    }

    /// `Σ K X K†` for an arbitrary `dim_in × dim_in` operator `X`.
    pub fn apply_operator(&self, x: &Matrix) -> Result<Matrix> {
        if x.rows() != self.dim_in || x.cols() != self.dim_in {
            return Err(Error::DimensionMismatch {
                expected: self.dim_in,
                actual: x.rows().max(x.cols()),
            });
        }
        let mut out = Matrix::zeros(self.dim_out, self.dim_out);
        for k in &self.ops {
            out = &out + &(&(k * x) * &k.adjoint());
        }
        Ok(out)
    }
}

/// `Λ(ρ) = Σ K ρ K†`.
pub fn apply_kraus(k: &KrausSet, rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dim() != k.dim_in {
        return Err(Error::DimensionMismatch {
            expected: k.dim_in,
            actual: rho.dim(),
        });
    }
    let out = k.apply_operator(rho.matrix())?;
    Ok(DensityMatrix::new_unchecked(out.hermitian_part()))
}

/// Kraus operators of the complementary channel: `(R_i)_{α,j} = (K_α)_{i,j}`.
///
/// One `R_i` per output basis index `i` of the original channel; each `R_i` maps
/// the input space onto the environment spanned by the original Kraus labels.
pub fn complement_kraus(k: &KrausSet) -> KrausSet {
    let env = k.ops.len();
    let ops = (0..k.dim_out)
        .map(|i| Matrix::from_fn(env, k.dim_in, |alpha, j| k.ops[alpha][(i, j)]))
        .collect();
    // Completeness carries over: Σ_i R_i† R_i = Σ_α K_α† K_α.
    KrausSet {
        dim_in: k.dim_in,
        dim_out: env,
        ops,
    }
}

/// Choi matrix `J = Σ_{ij} |i⟩⟨j| ⊗ Λ(|i⟩⟨j|)`, normalized to trace `dim_in = 2`.
///
/// The input (reference) factor is the outer block index: block `(i, j)` is
/// `Λ(|i⟩⟨j|)`. Only qubit inputs are supported.
pub fn choi_matrix(k: &KrausSet) -> Result<HermitianMatrix> {
    if k.dim_in != 2 {
        return Err(Error::UnsupportedDimension(k.dim_in));
    }
    let d_out = k.dim_out;
    let mut choi = Matrix::zeros(2 * d_out, 2 * d_out);
    for i in 0..2 {
        for j in 0..2 {
            let mut e = Matrix::zeros(2, 2);
            e[(i, j)] = C64::new(1.0, 0.0);
            let block = k.apply_operator(&e)?;
            for a in 0..d_out {
                for b in 0..d_out {
                    choi[(i * d_out + a, j * d_out + b)] = block[(a, b)];
                }
            }
        }
    }
    Ok(HermitianMatrix::new_unchecked(choi.hermitian_part()))
}

/// Partial transpose on the second tensor factor of a two-qubit operator:
/// every 2×2 block is transposed in place.
pub fn partial_transpose(m: &HermitianMatrix) -> Result<HermitianMatrix> {
    if m.dim() != 4 {
        return Err(Error::UnsupportedDimension(m.dim()));
    }
    let src = m.matrix();
    let out = Matrix::from_fn(4, 4, |r, c| {
        let (i, a) = (r / 2, r % 2);
        let (j, b) = (c / 2, c % 2);
        src[(2 * i + b, 2 * j + a)]
    });
    Ok(HermitianMatrix::new_unchecked(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eigen::eigenvalues_hermitian;
    use proptest::prelude::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn identity_channel() -> KrausSet {
        KrausSet::new(vec![Matrix::identity(2)]).unwrap()
    }

    #[test]
    fn rejects_bad_sets() {
        assert!(matches!(KrausSet::new(vec![]), Err(Error::InvalidKraus(_))));
        let half = Matrix::identity(2).scale_real(0.5);
        assert!(matches!(KrausSet::new(vec![half]), Err(Error::Incomplete { .. })));
        let ragged = vec![Matrix::identity(2), Matrix::zeros(3, 2)];
        assert!(matches!(KrausSet::new(ragged), Err(Error::InvalidKraus(_))));
    }

    #[test]
    fn identity_channel_is_identity() {
        let rho = DensityMatrix::new(Matrix::from_rows(&[
            [c(0.7), C64::new(0.1, -0.2)],
            [C64::new(0.1, 0.2), c(0.3)],
        ]))
        .unwrap();
        let out = apply_kraus(&identity_channel(), &rho).unwrap();
        assert_eq!(out.matrix(), rho.matrix());
    }

    #[test]
    fn apply_kraus_dimension_mismatch() {
        let rho = DensityMatrix::maximally_mixed(4);
        assert!(matches!(
            apply_kraus(&identity_channel(), &rho),
            Err(Error::DimensionMismatch { expected: 2, actual: 4 })
        ));
    }

    #[test]
    fn trivial_environment_complement() {
        let comp = complement_kraus(&identity_channel());
        assert_eq!((comp.dim_in(), comp.dim_out()), (2, 1));
        let rho = DensityMatrix::new(Matrix::diag(&[0.9, 0.1])).unwrap();
        let out = apply_kraus(&comp, &rho).unwrap();
        assert_eq!(out.matrix(), &Matrix::identity(1));
    }

    #[test]
    fn identity_choi_and_its_partial_transpose() {
        let choi = choi_matrix(&identity_channel()).unwrap();
        assert!((choi.trace() - 2.0).abs() < 1e-15);
        let e = eigenvalues_hermitian(&choi);
        for (a, b) in e.iter().zip([2.0, 0.0, 0.0, 0.0]) {
            assert!((a - b).abs() < 1e-14, "{e:?}");
        }
        let pt = partial_transpose(&choi).unwrap();
        let mut swap = Matrix::zeros(4, 4);
        for (r, col) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            swap[(r, col)] = c(1.0);
        }
        assert_eq!(pt.matrix(), &swap);
        let e = eigenvalues_hermitian(&pt);
        for (a, b) in e.iter().zip([1.0, 1.0, 1.0, -1.0]) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn partial_transpose_dimension_checks() {
        let h = HermitianMatrix::new(Matrix::identity(2)).unwrap();
        assert_eq!(partial_transpose(&h), Err(Error::UnsupportedDimension(2)));
        let diag = HermitianMatrix::new(Matrix::diag(&[0.1, 0.2, 0.3, 0.4])).unwrap();
        assert_eq!(partial_transpose(&diag).unwrap(), diag);
    }

    #[test]
    fn choi_requires_qubit_input() {
        let k = KrausSet::new(vec![Matrix::identity(3)]).unwrap();
        assert_eq!(choi_matrix(&k), Err(Error::UnsupportedDimension(3)));
    }

    fn hermitian4() -> impl Strategy<Value = HermitianMatrix> {
        prop::collection::vec(-1.0f64..1.0, 32).prop_map(|v| {
            let raw = Matrix::from_fn(4, 4, |i, j| C64::new(v[2 * (i * 4 + j)], v[2 * (i * 4 + j) + 1]));
            HermitianMatrix::new(raw.hermitian_part()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn partial_transpose_is_an_exact_involution(h in hermitian4()) {
            let twice = partial_transpose(&partial_transpose(&h).unwrap()).unwrap();
            prop_assert_eq!(twice, h);
        }
    }
}
