//! Quantum-capacity bounds: zero-capacity regions (entanglement breaking,
//! anti-degradable), flag-extension upper bounds, the single-shot lower bound
//! and the `C_cl = A` boundary curve.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::channel::{channel_output_spectrum, complement_output, BlochVector, ChannelParams};
use crate::error::{Error, Result};
use crate::exact::classical_capacity;
use crate::linalg::{
    choi_matrix, complement_kraus, eigenvalues_hermitian, h2, partial_transpose, pauli, spectrum_entropy,
    KrausSet, Matrix,
};
use crate::optimize::{maximize_half_disc, OptimizerConfig};

/// Minimum partial-transpose eigenvalue still counted as nonnegative.
pub const PPT_TOL: f64 = 1e-10;
/// Slack on the closed-form anti-degradability margin.
pub const AD_TOL: f64 = 1e-12;
/// Slack on margins computed numerically from Choi matrices.
pub const CHOI_AD_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntanglementBreakingTest {
    pub entanglement_breaking: bool,
    /// Numeric spectrum of the partially transposed Choi matrix, descending.
    pub pt_eigenvalues: [f64; 4],
    /// `{p0+p3, p0+p3, 1−2p3, 1−2p0}`, descending.
    pub closed_form: [f64; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AntidegradabilityTest {
    pub antidegradable: bool,
    /// `2(p0²+p3²) + (1−p0−p3)² − 4(1−p0−p3)√(p0p3) − 1`; `≤ 0` means anti-degradable.
    pub margin: f64,
    /// `tr(J²) − 4√det J − tr(Λ(I)²)` evaluated on the numeric Choi matrix.
    pub choi_margin: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionFlags {
    pub entanglement_breaking: bool,
    pub antidegradable: bool,
    pub pt_eigenvalues: [f64; 4],
    pub ad_margin: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundSource {
    A,
    B,
    Ccl,
}

impl BoundSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundSource::A => "A",
            BoundSource::B => "B",
            BoundSource::Ccl => "Ccl",
        }
    }
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Degradability of the four subchannels of the two convex decompositions.
/// `None` marks a subchannel with zero weight (not checked).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubchannelDegradability {
    pub lambda0: Option<bool>,
    pub lambda1: Option<bool>,
    pub lambda2: Option<bool>,
    pub lambda3: Option<bool>,
}

impl SubchannelDegradability {
    /// True when every checked subchannel is degradable.
    pub fn all_degradable(&self) -> bool {
        [self.lambda0, self.lambda1, self.lambda2, self.lambda3]
            .iter()
            .all(|f| f.unwrap_or(true))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingleShot {
    /// Maximum coherent information clamped below at 0.
    pub value: f64,
    /// Maximum before clamping.
    pub unclamped: f64,
    pub r: f64,
    pub z: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantumCapacityBounds {
    pub upper_a: f64,
    pub upper_b: f64,
    pub classical_upper: f64,
    pub best_upper: f64,
    pub best_upper_source: BoundSource,
    pub lower_single_shot: f64,
    /// Optimizer argmax `(r, z)`; `None` when the optimizer was skipped
    /// because the channel is anti-degradable.
    pub lower_argmax: Option<(f64, f64)>,
    pub capacity_known_zero: bool,
}

/// Closed-form spectrum of the partially transposed Choi matrix, descending.
pub fn pt_eigenvalues_closed_form(p: &ChannelParams) -> [f64; 4] {
    let s = p.weight();
    let mut e = [s, s, 1.0 - 2.0 * p.p3(), 1.0 - 2.0 * p.p0()];
    e.sort_by(|a, b| b.total_cmp(a));
    e
}

/// Peres test on the Choi matrix.
pub fn entanglement_breaking_test(p: &ChannelParams) -> EntanglementBreakingTest {
    let choi = choi_matrix(&p.kraus_operators()).expect("qubit input");
    let pt = partial_transpose(&choi).expect("4x4 Choi matrix");
    let e = eigenvalues_hermitian(&pt);
    let pt_eigenvalues = [e[0], e[1], e[2], e[3]];
    let closed_form = pt_eigenvalues_closed_form(p);
    debug_assert!(
        pt_eigenvalues.iter().zip(&closed_form).all(|(a, b)| (a - b).abs() < 1e-10),
        "PT spectrum {pt_eigenvalues:?} disagrees with {closed_form:?}"
    );
    EntanglementBreakingTest {
        entanglement_breaking: pt_eigenvalues[3] >= -PPT_TOL,
        pt_eigenvalues,
        closed_form,
    }
}

/// Closed-form anti-degradability margin (`≤ 0` means anti-degradable).
pub fn antidegradability_margin(p: &ChannelParams) -> f64 {
    let (p0, p3) = (p.p0(), p.p3());
    let rest = 1.0 - p0 - p3;
    2.0 * (p0 * p0 + p3 * p3) + rest * rest - 4.0 * rest * (p0 * p3).sqrt() - 1.0
}

/// `tr(J²) − 4√det(J) − tr(Λ(I)²)` for a qubit-to-qubit channel, with `J` the
/// trace-2 Choi matrix. Nonpositive values certify anti-degradability.
pub fn choi_antidegradability_margin(k: &KrausSet) -> Result<f64> {
    if k.dim_out() != 2 {
        return Err(Error::UnsupportedDimension(k.dim_out()));
    }
    let choi = choi_matrix(k)?;
    let j = choi.matrix();
    let tr_j2 = (j * j).trace().re;
    let det = j.determinant()?.re.max(0.0);
    let unital_image = k.apply_operator(&Matrix::identity(2))?;
    let tr_out2 = (&unital_image * &unital_image).trace().re;
    Ok(tr_j2 - 4.0 * det.sqrt() - tr_out2)
}

pub fn antidegradability_test(p: &ChannelParams) -> AntidegradabilityTest {
    let margin = antidegradability_margin(p);
    let choi_margin = choi_antidegradability_margin(&p.kraus_operators()).expect("qubit channel");
    AntidegradabilityTest {
        antidegradable: margin <= AD_TOL,
        margin,
        choi_margin,
    }
}

pub fn region_flags(p: &ChannelParams) -> RegionFlags {
    let eb = entanglement_breaking_test(p);
    let ad = antidegradability_test(p);
    RegionFlags {
        entanglement_breaking: eb.entanglement_breaking,
        antidegradable: ad.antidegradable,
        pt_eigenvalues: eb.pt_eigenvalues,
        ad_margin: ad.margin,
    }
}

/// `w (1 − h(q))`, contributing 0 when the weight vanishes.
fn weighted_dephasing_capacity(weight: f64, q: f64) -> f64 {
    if weight <= 0.0 {
        0.0
    } else {
        weight * (1.0 - h2((q / weight).clamp(0.0, 1.0)))
    }
}

/// `A = (p0+p3)(1 − h(p0/(p0+p3)))`.
pub fn flag_bound_a(p: &ChannelParams) -> f64 {
    weighted_dephasing_capacity(p.weight(), p.p0())
}

/// `B = (p0+p1)(1 − h(p1/(p0+p1))) + (p1+p3)(1 − h(p1/(p1+p3)))`.
pub fn flag_bound_b(p: &ChannelParams) -> f64 {
    let p1 = p.p1();
    weighted_dephasing_capacity(p.p0() + p1, p1) + weighted_dephasing_capacity(p1 + p.p3(), p1)
}

/// `min{A, B, C_cl}`; exact ties label in the order A, Ccl, B.
pub fn best_quantum_upper_bound(p: &ChannelParams) -> (f64, BoundSource) {
    let a = flag_bound_a(p);
    let b = flag_bound_b(p);
    let c = classical_capacity(p).value;
    if a <= c && a <= b {
        (a, BoundSource::A)
    } else if c <= b {
        (c, BoundSource::Ccl)
    } else {
        (b, BoundSource::B)
    }
}

/// The flag bound `A` doubles as the private-capacity upper bound.
pub fn private_capacity_upper(p: &ChannelParams) -> f64 {
    flag_bound_a(p)
}

fn mixture(terms: &[(f64, Matrix)]) -> Option<KrausSet> {
    let total: f64 = terms.iter().map(|(w, _)| w).sum();
    if total <= 0.0 {
        return None;
    }
    let ops = terms.iter().map(|(w, m)| m.scale_real((w / total).sqrt())).collect();
    Some(KrausSet::new(ops).expect("normalized Pauli mixture"))
}

/// Kraus sets of `Λ0 ∝ p0 ρ + p3 ZρZ`, `Λ1 = ½(XρX + YρY)`,
/// `Λ2 ∝ p0 ρ + p1 XρX`, `Λ3 ∝ p1 YρY + p3 ZρZ`; `None` for zero weight.
pub fn subchannels(p: &ChannelParams) -> [Option<KrausSet>; 4] {
    let (p0, p1, p3) = (p.p0(), p.p1(), p.p3());
    [
        mixture(&[(p0, pauli::i()), (p3, pauli::z())]),
        if p1 > 0.0 {
            mixture(&[(1.0, pauli::x()), (1.0, pauli::y())])
        } else {
            None
        },
        mixture(&[(p0, pauli::i()), (p1, pauli::x())]),
        mixture(&[(p1, pauli::y()), (p3, pauli::z())]),
    ]
}

/// Each subchannel is degradable iff its complement is anti-degradable.
pub fn subchannel_degradability_check(p: &ChannelParams) -> SubchannelDegradability {
    let flags = subchannels(p).map(|k| {
        k.map(|k| {
            let comp = complement_kraus(&k);
            choi_antidegradability_margin(&comp).expect("qubit subchannel") <= CHOI_AD_TOL
        })
    });
    SubchannelDegradability {
        lambda0: flags[0],
        lambda1: flags[1],
        lambda2: flags[2],
        lambda3: flags[3],
    }
}

/// Coherent information `S(Λ(ρ)) − S(Λ^c(ρ))` at Bloch point `(r, 0, z)`.
pub fn coherent_information(p: &ChannelParams, r: f64, z: f64) -> Result<f64> {
    if r < 0.0 || r * r + z * z > 1.0 + 1e-12 || !r.is_finite() || !z.is_finite() {
        return Err(Error::Domain(format!("(r, z) = ({r}, {z}) outside the Bloch half-disc")));
    }
    let b = BlochVector { x: r, y: 0.0, z };
    let (l1, l2) = channel_output_spectrum(p, &b);
    let s_out = spectrum_entropy(&[l1, l2])?;
    let env = complement_output(p, &b);
    let s_env = spectrum_entropy(&eigenvalues_hermitian(env.hermitian()))?;
    Ok(s_out - s_env)
}

/// Maximum coherent information over the Bloch half-disc.
pub fn single_shot_quantum_capacity(p: &ChannelParams, cfg: &OptimizerConfig) -> SingleShot {
    let objective = |r: f64, z: f64| coherent_information(p, r, z).unwrap_or(f64::NEG_INFINITY);
    let m = maximize_half_disc(&objective, cfg);
    SingleShot {
        value: m.value.max(0.0),
        unclamped: m.value,
        r: m.r,
        z: m.z,
    }
}

pub fn quantum_capacity_interval(p: &ChannelParams, cfg: &OptimizerConfig) -> QuantumCapacityBounds {
    let upper_a = flag_bound_a(p);
    let upper_b = flag_bound_b(p);
    let classical_upper = classical_capacity(p).value;
    let (best_upper, best_upper_source) = best_quantum_upper_bound(p);
    let capacity_known_zero = antidegradability_test(p).antidegradable;
    let (lower_single_shot, lower_argmax) = if capacity_known_zero {
        (0.0, None)
    } else {
        let ss = single_shot_quantum_capacity(p, cfg);
        (ss.value, Some((ss.r, ss.z)))
    };
    QuantumCapacityBounds {
        upper_a,
        upper_b,
        classical_upper,
        best_upper,
        best_upper_source,
        lower_single_shot,
        lower_argmax,
        capacity_known_zero,
    }
}

/// Bisection tolerance used by the boundary solvers.
pub const BOUNDARY_TOL: f64 = 1e-10;
const BOUNDARY_SCAN: usize = 1000;

/// Smallest `ε ∈ [0, 1]` with `A(s, ε) = C_cl(s, ε)` at fixed `s = p0 + p3`,
/// or `None` when `A − C_cl` never changes sign on `[0, 1]`.
pub fn classical_equals_a_boundary(s: f64, tol: f64) -> Result<Option<f64>> {
    if !(s > 0.0 && s <= 1.0) {
        return Err(Error::Domain(format!("weight p0 + p3 = {s} outside (0, 1]")));
    }
    let f = |eps: f64| {
        let p = ChannelParams::from_weight_asymmetry(s, eps).expect("s in (0, 1]");
        flag_bound_a(&p) - classical_capacity(&p).value
    };
    let node = |i: usize| i as f64 / BOUNDARY_SCAN as f64;
    let mut a = 0.0;
    let mut fa = f(a);
    if fa == 0.0 {
        return Ok(Some(a));
    }
    for i in 1..=BOUNDARY_SCAN {
        let b = node(i);
        let fb = f(b);
        if fb == 0.0 {
            return Ok(Some(b));
        }
        if fa.signum() != fb.signum() {
            return Ok(Some(bisect(&f, a, b, fa, tol)));
        }
        a = b;
        fa = fb;
    }
    Ok(None)
}

fn bisect(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, mut fa: f64, tol: f64) -> f64 {
    while b - a > tol {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    let fb = f(b);
    if fa.abs() <= fb.abs() {
        a
    } else {
        b
    }
}

/// Zero contour of the anti-degradability margin, from `(2/3, 0)` through
/// `(1/2, 1/2)` to `(0, 2/3)`, as `(p0, p3)` pairs.
///
/// Parameterized by `d = p0 − p3 ∈ [−2/3, 2/3]`; for each `d` the root in
/// `s = p0 + p3 ∈ [|d|, 1]` is found by bisection.
pub fn antidegradability_contour(samples: usize) -> Vec<(f64, f64)> {
    assert!(samples >= 2);
    let d_max = 2.0 / 3.0;
    (0..samples)
        .map(|i| {
            let d = d_max - 2.0 * d_max * i as f64 / (samples - 1) as f64;
            let margin = |s: f64| {
                let (p0, p3) = (0.5 * (s + d), (0.5 * (s - d)).max(0.0));
                let rest = 1.0 - s;
                2.0 * (p0 * p0 + p3 * p3) + rest * rest - 4.0 * rest * (p0 * p3).sqrt() - 1.0
            };
            let (mut lo, mut hi) = (d.abs(), 1.0);
            let s = if margin(hi) <= 0.0 {
                hi
            } else if margin(lo) >= 0.0 {
                lo
            } else {
                while hi - lo > 1e-14 {
                    let m = 0.5 * (lo + hi);
                    if m <= lo || m >= hi {
                        break;
                    }
                    if margin(m) <= 0.0 {
                        lo = m;
                    } else {
                        hi = m;
                    }
                }
                if margin(lo).abs() <= margin(hi).abs() {
                    lo
                } else {
                    hi
                }
            };
            (0.5 * (s + d), (0.5 * (s - d)).max(0.0))
        })
        .collect()
}
