//! Brute-force oracles for the closed-form results.
//!
//! Oracles go through the generic linear-algebra layer (Kraus application,
//! numeric spectra, the generic complement) and transcribe formulas directly;
//! they never call into the capacity modules except for the value under test.
//!
//! Random pure states are drawn uniformly on the Bloch sphere from uniform
//! `(cos θ, φ)`; ensemble weights are uniform draws normalized to sum to one.
//! All sampling uses a seeded ChaCha8 stream.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{channel_output, channel_output_spectrum, complement_output, BlochVector, ChannelParams};
use crate::exact::{classical_capacity, entanglement_assisted_capacity};
use crate::linalg::{
    apply_kraus, choi_matrix, complement_kraus, eigenvalues_hermitian, partial_transpose, von_neumann_entropy,
    DensityMatrix, Matrix,
};

/// Tolerance for algebraic identities checked entrywise.
pub const ALGEBRAIC_TOL: f64 = 1e-12;
/// Tolerance for the partial-transpose spectrum.
pub const SPECTRAL_TOL: f64 = 1e-10;
/// Tolerance for comparisons against a discretized optimum.
pub const OPTIMIZATION_TOL: f64 = 1e-6;
/// Slack allowed when an oracle tries to beat a claimed maximum.
pub const FALSIFICATION_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub name: String,
    pub samples: usize,
    pub max_abs_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub seed: u64,
}

impl OracleReport {
    fn new(name: &str, samples: usize, max_abs_deviation: f64, tolerance: f64, seed: u64) -> Self {
        Self {
            name: name.to_owned(),
            samples,
            max_abs_deviation,
            tolerance,
            passed: max_abs_deviation <= tolerance,
            seed,
        }
    }
}

/// Uniform point of the parameter triangle `p0, p3 ≥ 0, p0 + p3 ≤ 1`.
pub fn random_params(rng: &mut impl Rng) -> ChannelParams {
    let (mut a, mut b): (f64, f64) = (rng.gen(), rng.gen());
    if a + b > 1.0 {
        a = 1.0 - a;
        b = 1.0 - b;
    }
    ChannelParams::new(a, b).expect("reflected point lies in the triangle")
}

/// Uniform point on the Bloch sphere.
pub fn random_pure_state(rng: &mut impl Rng) -> BlochVector {
    let cos_t: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..2.0 * PI);
    let sin_t = (1.0 - cos_t * cos_t).max(0.0).sqrt();
    BlochVector {
        x: sin_t * phi.cos(),
        y: sin_t * phi.sin(),
        z: cos_t,
    }
}

/// Uniform point in the Bloch ball (pure direction, radius `u^{1/3}`).
pub fn random_bloch(rng: &mut impl Rng) -> BlochVector {
    let dir = random_pure_state(rng);
    let rad = rng.gen::<f64>().cbrt();
    BlochVector {
        x: dir.x * rad,
        y: dir.y * rad,
        z: dir.z * rad,
    }
}

/// `max_θ 1 − S(Λ(ρ(θ)))` over a uniform θ-grid on `[0, π]`, with input Bloch
/// vector `(sin θ, 0, cos θ)`.
pub fn oracle_holevo_classical(p: &ChannelParams, theta_grid_size: usize) -> f64 {
    assert!(theta_grid_size >= 2);
    let k = p.kraus_operators();
    (0..theta_grid_size)
        .map(|i| {
            let theta = PI * i as f64 / (theta_grid_size - 1) as f64;
            let b = BlochVector {
                x: theta.sin(),
                y: 0.0,
                z: theta.cos(),
            };
            let out = apply_kraus(&k, &b.density()).expect("qubit input");
            1.0 - von_neumann_entropy(&out).expect("channel output is a state")
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Holevo quantity `S(Σ w Λ(ρ_i)) − Σ w S(Λ(ρ_i))` of one output ensemble.
fn holevo_of_outputs(weights: &[f64], outputs: &[DensityMatrix]) -> f64 {
    let mut avg = Matrix::zeros(2, 2);
    let mut mean_entropy = 0.0;
    for (w, rho) in weights.iter().zip(outputs) {
        avg = &avg + &rho.matrix().scale_real(*w);
        mean_entropy += w * von_neumann_entropy(rho).expect("channel output is a state");
    }
    let avg = DensityMatrix::new(avg.hermitian_part()).expect("convex mixture of states");
    von_neumann_entropy(&avg).expect("state") - mean_entropy
}

/// Largest Holevo quantity found over `n_ensembles` random ensembles of 2–4
/// pure states.
pub fn oracle_holevo_random_ensembles(p: &ChannelParams, n_ensembles: usize, seed: u64) -> f64 {
    let k = p.kraus_operators();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = f64::NEG_INFINITY;
    for _ in 0..n_ensembles {
        let size = rng.gen_range(2..=4);
        let raw: Vec<f64> = (0..size).map(|_| rng.gen::<f64>() + 1e-12).collect();
        let total: f64 = raw.iter().sum();
        let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
        let outputs: Vec<DensityMatrix> = (0..size)
            .map(|_| apply_kraus(&k, &random_pure_state(&mut rng).density()).expect("qubit input"))
            .collect();
        best = best.max(holevo_of_outputs(&weights, &outputs));
    }
    best
}

/// Grid maximum of `S(ρ) + S(Λ(ρ)) − S(Λ^c(ρ))` over the `(r, z)` half-disc,
/// evaluated through the generic Kraus and complement construction.
/// Returns `(max, (r, z))`; ties go to the smallest `r`, then `z`.
pub fn oracle_mutual_info_grid(p: &ChannelParams, grid: usize) -> (f64, (f64, f64)) {
    assert!(grid >= 2);
    let k = p.kraus_operators();
    let comp = complement_kraus(&k);
    let last = (grid - 1) as f64;
    let pts: Vec<(f64, f64)> = (0..grid)
        .flat_map(|i| (0..grid).map(move |j| (i as f64 / last, -1.0 + 2.0 * j as f64 / last)))
        .filter(|(r, z)| r * r + z * z <= 1.0 + 1e-12)
        .collect();
    let values: Vec<f64> = pts
        .par_iter()
        .map(|&(r, z)| {
            let n = (r * r + z * z).sqrt().max(1.0);
            let b = BlochVector { x: r / n, y: 0.0, z: z / n };
            let rho = b.density();
            let s_in = von_neumann_entropy(&rho).expect("state");
            let s_out = von_neumann_entropy(&apply_kraus(&k, &rho).expect("qubit")).expect("state");
            let s_env = von_neumann_entropy(&apply_kraus(&comp, &rho).expect("qubit")).expect("state");
            s_in + s_out - s_env
        })
        .collect();
    let mut best = (f64::NEG_INFINITY, (0.0, 0.0));
    for (&pt, &v) in pts.iter().zip(&values) {
        if v > best.0 {
            best = (v, pt);
        }
    }
    best
}

/// Generic Kraus route vs the closed-form output, spectrum and complementary
/// output, over `n_states` seeded random Bloch vectors.
pub fn oracle_closed_forms(p: &ChannelParams, n_states: usize, seed: u64) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let states: Vec<BlochVector> = (0..n_states).map(|_| random_bloch(&mut rng)).collect();
    let deviation = closed_form_deviation(p, &states);
    OracleReport::new("closed_forms", n_states, deviation, ALGEBRAIC_TOL, seed)
}

fn closed_form_deviation(p: &ChannelParams, states: &[BlochVector]) -> f64 {
    let k = p.kraus_operators();
    let comp = complement_kraus(&k);
    states
        .iter()
        .map(|b| {
            let rho = b.density();
            let out = apply_kraus(&k, &rho).expect("qubit input");
            let d_out = out.matrix().max_abs_diff(channel_output(p, b).matrix());

            let numeric = eigenvalues_hermitian(out.hermitian());
            let (l1, l2) = channel_output_spectrum(p, b);
            let d_spec = (numeric[0] - l1).abs().max((numeric[1] - l2).abs());

            let env = apply_kraus(&comp, &rho).expect("qubit input");
            let d_env = env.matrix().max_abs_diff(complement_output(p, b).matrix());
            d_out.max(d_spec).max(d_env)
        })
        .fold(0.0, f64::max)
}

/// Numeric partial-transpose spectrum vs `{p0+p3, p0+p3, 1−2p3, 1−2p0}` on the
/// `grid × grid` simplex lattice.
pub fn oracle_pt_eigenvalues(grid: usize) -> OracleReport {
    let pts = simplex_lattice(grid);
    let deviation = pts
        .par_iter()
        .map(|p| {
            let choi = choi_matrix(&p.kraus_operators()).expect("qubit input");
            let numeric = eigenvalues_hermitian(&partial_transpose(&choi).expect("4x4"));
            let (p0, p3) = (p.p0(), p.p3());
            let mut exact = [p0 + p3, p0 + p3, 1.0 - 2.0 * p3, 1.0 - 2.0 * p0];
            exact.sort_by(|a, b| b.total_cmp(a));
            numeric
                .iter()
                .zip(exact)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(0.0, f64::max);
    OracleReport::new("pt_eigenvalues", pts.len(), deviation, SPECTRAL_TOL, 0)
}

/// Feasible points `(i/(n−1), j/(n−1))` with `i + j ≤ n − 1`, ordered by `(p0, p3)`.
pub fn simplex_lattice(n: usize) -> Vec<ChannelParams> {
    assert!(n >= 2);
    let last = (n - 1) as f64;
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in 0..(n - i) {
            out.push(ChannelParams::new(i as f64 / last, j as f64 / last).expect("lattice point in simplex"));
        }
    }
    out
}

/// Sizes for [`run_all`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random parameter points per oracle.
    pub samples: usize,
    pub states_per_point: usize,
    pub theta_grid: usize,
    pub ensembles_per_point: usize,
    pub mutual_info_grid: usize,
    /// Parameter points for the (expensive) mutual-information grid oracle.
    pub mutual_info_points: usize,
    pub pt_grid: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 2024,
            samples: 50,
            states_per_point: 1000,
            theta_grid: 10_000,
            ensembles_per_point: 200,
            mutual_info_grid: 201,
            mutual_info_points: 20,
            pt_grid: 201,
        }
    }
}

/// Every oracle, each against its own tolerance.
pub fn run_all(cfg: &VerifyConfig) -> Vec<OracleReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let params: Vec<ChannelParams> = (0..cfg.samples).map(|_| random_params(&mut rng)).collect();
    let sub_seeds: Vec<u64> = (0..cfg.samples).map(|_| rng.gen()).collect();

    let mut reports = Vec::new();

    let closed = params
        .par_iter()
        .zip(&sub_seeds)
        .map(|(p, &s)| oracle_closed_forms(p, cfg.states_per_point, s).max_abs_deviation)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(0.0, f64::max);
    reports.push(OracleReport::new(
        "closed_forms",
        cfg.samples * cfg.states_per_point,
        closed,
        ALGEBRAIC_TOL,
        cfg.seed,
    ));

    let holevo = params
        .par_iter()
        .map(|p| (oracle_holevo_classical(p, cfg.theta_grid) - classical_capacity(p).value).abs())
        .collect::<Vec<_>>()
        .into_iter()
        .fold(0.0, f64::max);
    reports.push(OracleReport::new(
        "holevo_classical",
        cfg.samples,
        holevo,
        OPTIMIZATION_TOL,
        cfg.seed,
    ));

    let excess = params
        .par_iter()
        .zip(&sub_seeds)
        .map(|(p, &s)| {
            let found = oracle_holevo_random_ensembles(p, cfg.ensembles_per_point, s);
            (found - classical_capacity(p).value).max(0.0)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(0.0, f64::max);
    reports.push(OracleReport::new(
        "holevo_random_ensembles",
        cfg.samples * cfg.ensembles_per_point,
        excess,
        FALSIFICATION_TOL,
        cfg.seed,
    ));

    let spacing = 2.0 / (cfg.mutual_info_grid.max(2) - 1) as f64;
    let mi_points = &params[..cfg.mutual_info_points.min(params.len())];
    let mut mi_dev: f64 = 0.0;
    let mut argmax_ok = true;
    for p in mi_points {
        let (max, (r, z)) = oracle_mutual_info_grid(p, cfg.mutual_info_grid);
        mi_dev = mi_dev.max((max - entanglement_assisted_capacity(p)).abs());
        argmax_ok &= r.hypot(z) <= spacing + 1e-12;
    }
    let mut mi = OracleReport::new(
        "mutual_info_grid",
        mi_points.len(),
        mi_dev,
        OPTIMIZATION_TOL,
        cfg.seed,
    );
    mi.passed &= argmax_ok;
    reports.push(mi);

    reports.push(oracle_pt_eigenvalues(cfg.pt_grid));
    reports
}
