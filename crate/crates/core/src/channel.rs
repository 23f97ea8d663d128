//! The SO(2)-covariant Pauli channel
//! `Λ(ρ) = p0 ρ + p1 (XρX + YρY) + p3 ZρZ` with `p0 + 2 p1 + p3 = 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{apply_kraus, complement_kraus, pauli, DensityMatrix, KrausSet, Matrix, C64};

/// Slack allowed on the simplex constraints (grid points like `0.7 + 0.3`).
pub const SIMPLEX_TOL: f64 = 1e-12;

/// A point `(p0, p3)` of the parameter simplex; `p1 = p2` is derived.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    p0: f64,
    p3: f64,
}

impl ChannelParams {
    pub fn new(p0: f64, p3: f64) -> Result<Self> {
        if !p0.is_finite() || !p3.is_finite() {
            return Err(Error::InvalidParams(format!("non-finite p0={p0}, p3={p3}")));
        }
        if p0 < -SIMPLEX_TOL {
            return Err(Error::InvalidParams(format!("p0 = {p0} must be >= 0")));
        }
        if p3 < -SIMPLEX_TOL {
            return Err(Error::InvalidParams(format!("p3 = {p3} must be >= 0")));
        }
        if p0 + p3 > 1.0 + SIMPLEX_TOL {
            return Err(Error::InvalidParams(format!(
                "p0 + p3 = {} must be <= 1 (p1 = (1 - p0 - p3)/2 >= 0)",
                p0 + p3
            )));
        }
        Ok(Self {
            p0: p0.clamp(0.0, 1.0),
            p3: p3.clamp(0.0, 1.0),
        })
    }

    /// Parameterization by total weight `s = p0 + p3` and asymmetry `ε`:
    /// `p0 = s(1+ε)/2`, `p3 = s(1−ε)/2`.
    pub fn from_weight_asymmetry(s: f64, eps: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&eps) {
            return Err(Error::InvalidParams(format!("asymmetry {eps} outside [-1, 1]")));
        }
        Self::new(0.5 * s * (1.0 + eps), 0.5 * s * (1.0 - eps))
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn p3(&self) -> f64 {
        self.p3
    }

    /// `p1 = p2 = (1 − p0 − p3)/2`.
    pub fn p1(&self) -> f64 {
        (0.5 * (1.0 - self.p0 - self.p3)).max(0.0)
    }

    /// `p0 + p3`.
    pub fn weight(&self) -> f64 {
        self.p0 + self.p3
    }

    /// `ε = (p0 − p3)/(p0 + p3)`, defined as 0 when `p0 + p3 = 0`.
    pub fn epsilon(&self) -> f64 {
        let s = self.weight();
        if s == 0.0 {
            0.0
        } else {
            (self.p0 - self.p3) / s
        }
    }

    /// The exchanged point `(p3, p0)`.
    pub fn swapped(&self) -> Self {
        Self {
            p0: self.p3,
            p3: self.p0,
        }
    }

    /// `[√p0 I, √p1 X, √p1 Y, √p3 Z]`, in this fixed order.
    pub fn kraus_operators(&self) -> KrausSet {
        kraus_operators(self)
    }
}

/// Input Bloch vector `(x, y, z)` with `|r| ≤ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let n2 = x * x + y * y + z * z;
        if !n2.is_finite() || n2 > 1.0 + 1e-12 {
            return Err(Error::Domain(format!("Bloch vector ({x}, {y}, {z}) outside the unit ball")));
        }
        Ok(Self { x, y, z })
    }

    pub const fn origin() -> Self {
        Self { x: 0.0, y: 0.0, z: 0.0 }
    }

    /// Transverse radius `√(x² + y²)`.
    pub fn r(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn neg(&self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    /// Coordinates of `U_z(θ) ρ U_z(θ)†` with `U_z(θ) = exp(iθZ/2)`:
    /// `(x cos θ + y sin θ, −x sin θ + y cos θ, z)`.
    pub fn rotated_z(&self, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            x: self.x * c + self.y * s,
            y: -self.x * s + self.y * c,
            z: self.z,
        }
    }

    /// `ρ = (I + xX + yY + zZ)/2`.
    pub fn density(&self) -> DensityMatrix {
        let half = 0.5;
        let m = Matrix::from_rows(&[
            [C64::new(half * (1.0 + self.z), 0.0), C64::new(half * self.x, -half * self.y)],
            [C64::new(half * self.x, half * self.y), C64::new(half * (1.0 - self.z), 0.0)],
        ]);
        DensityMatrix::new_unchecked(m)
    }
}

/// `[√p0 I, √p1 X, √p1 Y, √p3 Z]`.
pub fn kraus_operators(p: &ChannelParams) -> KrausSet {
    let p1 = p.p1();
    let ops = vec![
        pauli::i().scale_real(p.p0.sqrt()),
        pauli::x().scale_real(p1.sqrt()),
        pauli::y().scale_real(p1.sqrt()),
        pauli::z().scale_real(p.p3.sqrt()),
    ];
    KrausSet::new(ops).expect("Pauli weights sum to one")
}

/// Closed-form `Λ(ρ)`:
/// `½ [[1 + (p0+p3−2p1) z, (p0−p3)(x−iy)], [(p0−p3)(x+iy), 1 − (p0+p3−2p1) z]]`.
pub fn channel_output(p: &ChannelParams, b: &BlochVector) -> DensityMatrix {
    let shrink_z = p.p0 + p.p3 - 2.0 * p.p1();
    let shrink_xy = p.p0 - p.p3;
    let m = Matrix::from_rows(&[
        [
            C64::new(0.5 * (1.0 + shrink_z * b.z), 0.0),
            C64::new(0.5 * shrink_xy * b.x, -0.5 * shrink_xy * b.y),
        ],
        [
            C64::new(0.5 * shrink_xy * b.x, 0.5 * shrink_xy * b.y),
            C64::new(0.5 * (1.0 - shrink_z * b.z), 0.0),
        ],
    ]);
    DensityMatrix::new_unchecked(m)
}

/// Closed-form spectrum `λ± = ½(1 ± √((p0−p3)²(x²+y²) + (2p0+2p3−1)² z²))`.
pub fn channel_output_spectrum(p: &ChannelParams, b: &BlochVector) -> (f64, f64) {
    let d = p.p0 - p.p3;
    let w = 2.0 * p.p0 + 2.0 * p.p3 - 1.0;
    let radius = (d * d * (b.x * b.x + b.y * b.y) + w * w * b.z * b.z).sqrt();
    (0.5 * (1.0 + radius), 0.5 * (1.0 - radius))
}

/// Closed-form complementary output on the 4-dimensional environment.
pub fn complement_output(p: &ChannelParams, b: &BlochVector) -> DensityMatrix {
    let (p0, p1, p3) = (p.p0, p.p1(), p.p3);
    let (x, y, z) = (b.x, b.y, b.z);
    let s01 = (p0 * p1).sqrt();
    let s03 = (p0 * p3).sqrt();
    let s13 = (p1 * p3).sqrt();
    let re = |v: f64| C64::new(v, 0.0);
    let im = |v: f64| C64::new(0.0, v);
    let m = Matrix::from_rows(&[
        [re(p0), re(s01 * x), re(s01 * y), re(s03 * z)],
        [re(s01 * x), re(p1), im(-p1 * z), im(s13 * y)],
        [re(s01 * y), im(p1 * z), re(p1), im(-s13 * x)],
        [re(s03 * z), im(-s13 * y), im(s13 * x), re(p3)],
    ]);
    DensityMatrix::new_unchecked(m)
}

/// `U_z(θ) = exp(iθZ/2)`.
pub fn rotation_z(theta: f64) -> Matrix {
    let mut u = Matrix::zeros(2, 2);
    u[(0, 0)] = C64::from_polar(1.0, 0.5 * theta);
    u[(1, 1)] = C64::from_polar(1.0, -0.5 * theta);
    u
}

/// Environment representation of the rotation: a planar rotation acting on
/// the `X`/`Y` Kraus labels.
pub fn environment_rotation(theta: f64) -> Matrix {
    let (s, c) = theta.sin_cos();
    let mut omega = Matrix::identity(4);
    omega[(1, 1)] = C64::new(c, 0.0);
    omega[(1, 2)] = C64::new(-s, 0.0);
    omega[(2, 1)] = C64::new(s, 0.0);
    omega[(2, 2)] = C64::new(c, 0.0);
    omega
}

/// Kraus-label matrix `S` with `K_α* = Σ_β S_αβ K_β` for the canonical
/// ordering: only `Y` changes sign under conjugation.
pub fn conjugation_matrix() -> Matrix {
    Matrix::diag(&[1.0, 1.0, -1.0, 1.0])
}

/// `||Λ(UρU†) − U Λ(ρ) U†||_F` with `U = U_z(θ)`.
pub fn verify_channel_covariance(p: &ChannelParams, theta: f64, b: &BlochVector) -> f64 {
    let k = p.kraus_operators();
    let u = rotation_z(theta);
    let rho = b.density();
    let rotated_in = DensityMatrix::new_unchecked(&(&u * rho.matrix()) * &u.adjoint());
    let lhs = apply_kraus(&k, &rotated_in).expect("qubit input");
    let out = apply_kraus(&k, &rho).expect("qubit input");
    let rhs = &(&u * out.matrix()) * &u.adjoint();
    (lhs.matrix() - &rhs).frobenius_norm()
}

/// `||Λ^c(ρ_{x',y',z}) − Ω† Λ^c(ρ_{x,y,z}) Ω||_F`, where `(x', y')` are the
/// rotated coordinates and `Λ^c` is built from the generic complement.
pub fn verify_complement_covariance(p: &ChannelParams, theta: f64, b: &BlochVector) -> f64 {
    let comp = complement_kraus(&p.kraus_operators());
    let omega = environment_rotation(theta);
    let lhs = apply_kraus(&comp, &b.rotated_z(theta).density()).expect("qubit input");
    let out = apply_kraus(&comp, &b.density()).expect("qubit input");
    let rhs = &(&omega.adjoint() * out.matrix()) * &omega;
    (lhs.matrix() - &rhs).frobenius_norm()
}

/// `||Λ_{p3,p0}(ρ) − Z Λ_{p0,p3}(ρ) Z||_F`.
pub fn verify_z2_exchange(p: &ChannelParams, b: &BlochVector) -> f64 {
    let rho = b.density();
    let swapped = apply_kraus(&p.swapped().kraus_operators(), &rho).expect("qubit input");
    let out = apply_kraus(&p.kraus_operators(), &rho).expect("qubit input");
    let z = pauli::z();
    let rhs = &(&z * out.matrix()) * &z;
    (swapped.matrix() - &rhs).frobenius_norm()
}

/// Residuals of the conjugation symmetry for the channel and its complement:
/// `(||Λ(ρ*) − Λ(ρ)*||_F, ||Λ^c(ρ*) − Sᵀ Λ^c(ρ)* S*||_F)`.
pub fn verify_conjugation_property(p: &ChannelParams, b: &BlochVector) -> (f64, f64) {
    let k = p.kraus_operators();
    let comp = complement_kraus(&k);
    let rho = b.density();
    let rho_conj = rho.conj();

    let channel = {
        let lhs = apply_kraus(&k, &rho_conj).expect("qubit input");
        let rhs = apply_kraus(&k, &rho).expect("qubit input").matrix().conj();
        (lhs.matrix() - &rhs).frobenius_norm()
    };
    let complement = {
        let s = conjugation_matrix();
        let lhs = apply_kraus(&comp, &rho_conj).expect("qubit input");
        let out = apply_kraus(&comp, &rho).expect("qubit input");
        let rhs = &(&s.transpose() * &out.matrix().conj()) * &s.conj();
        (lhs.matrix() - &rhs).frobenius_norm()
    };
    (channel, complement)
}
