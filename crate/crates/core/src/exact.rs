//! Closed-form classical and entanglement-assisted capacities.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::channel::{channel_output, complement_output, BlochVector, ChannelParams};
use crate::error::Result;
use crate::linalg::{h2, von_neumann_entropy};

/// Which family of antipodal input states minimizes the output entropy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// Optimal states on the equator (θ = π/2).
    Equatorial,
    /// Optimal states at the poles (θ ∈ {0, π}).
    Polar,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Equatorial => "equatorial",
            Branch::Polar => "polar",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalCapacityResult {
    /// Capacity in bits, `1 − h(xi)`.
    pub value: f64,
    pub xi: f64,
    pub branch: Branch,
}

/// Equatorial iff `(p0 − p3)² ≥ (2p0 + 2p3 − 1)²`; ties go to equatorial.
pub fn classical_branch(p: &ChannelParams) -> Branch {
    let transverse = p.p0() - p.p3();
    let longitudinal = 2.0 * p.weight() - 1.0;
    if transverse * transverse >= longitudinal * longitudinal {
        Branch::Equatorial
    } else {
        Branch::Polar
    }
}

/// `C_cl = 1 − h(ξ)` with `ξ = (1 + p0 − p3)/2` on the equatorial branch and
/// `ξ = p0 + p3` on the polar branch.
pub fn classical_capacity(p: &ChannelParams) -> ClassicalCapacityResult {
    let branch = classical_branch(p);
    let xi = match branch {
        Branch::Equatorial => 0.5 * (1.0 + p.p0() - p.p3()),
        Branch::Polar => p.weight(),
    };
    ClassicalCapacityResult {
        value: 1.0 - h2(xi),
        xi,
        branch,
    }
}

/// `C_E = 2 + p0 log p0 + (1−p0−p3) log((1−p0−p3)/2) + p3 log p3`, i.e. the
/// mutual information at the maximally mixed input.
pub fn entanglement_assisted_capacity(p: &ChannelParams) -> f64 {
    let xlog = |x: f64| if x <= 0.0 { 0.0 } else { x * x.log2() };
    let rest = 2.0 * p.p1();
    2.0 + xlog(p.p0()) + if rest > 0.0 { rest * (rest / 2.0).log2() } else { 0.0 } + xlog(p.p3())
}

/// Quantum mutual information `S(ρ) + S(Λ(ρ)) − S(Λ^c(ρ))` in bits.
pub fn mutual_information(p: &ChannelParams, b: &BlochVector) -> Result<f64> {
    let s_in = von_neumann_entropy(&b.density())?;
    let s_out = von_neumann_entropy(&channel_output(p, b))?;
    let s_env = von_neumann_entropy(&complement_output(p, b))?;
    Ok(s_in + s_out - s_env)
}
