//! Derivative-free maximization over the half-disc
//! `{(r, z) : r ∈ [0, 1], z ∈ [−1, 1], r² + z² ≤ 1}`.
//!
//! A uniform grid seeds the search and a compass pattern search refines the
//! best grid point. Grid evaluation runs in parallel; the reduction is a
//! sequential scan in grid order, so ties always resolve to the smallest `r`
//! and then the smallest `z`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Slack on `r² + z² ≤ 1` for grid points landing on the unit circle.
const DISC_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    /// Points per axis of the seeding grid (`r` and `z` axes alike).
    pub grid_resolution: usize,
    /// Pattern search stops once the step size falls below this.
    pub refine_tolerance: f64,
    pub refine_max_iterations: usize,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            grid_resolution: 201,
            refine_tolerance: 1e-9,
            refine_max_iterations: 10_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Maximum {
    pub value: f64,
    pub r: f64,
    pub z: f64,
}

/// The feasible grid points in row-major `(r, z)` order.
pub fn half_disc_grid(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 2, "grid needs at least two points per axis");
    let last = (n - 1) as f64;
    let mut pts = Vec::new();
    for i in 0..n {
        let r = i as f64 / last;
        for j in 0..n {
            let z = -1.0 + 2.0 * j as f64 / last;
            if r * r + z * z <= 1.0 + DISC_TOL {
                pts.push(project(r, z));
            }
        }
    }
    pts
}

/// Maximum of `f` over the feasible grid.
pub fn grid_maximum<F>(f: &F, n: usize) -> Maximum
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    let pts = half_disc_grid(n);
    let values: Vec<f64> = pts.par_iter().map(|&(r, z)| f(r, z)).collect();
    let mut best = Maximum {
        value: f64::NEG_INFINITY,
        r: 0.0,
        z: 0.0,
    };
    for (&(r, z), &v) in pts.iter().zip(&values) {
        if v > best.value {
            best = Maximum { value: v, r, z };
        }
    }
    best
}

/// Grid seeding followed by compass search with halving steps.
pub fn maximize_half_disc<F>(f: &F, cfg: &OptimizerConfig) -> Maximum
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    let seed = grid_maximum(f, cfg.grid_resolution);
    refine(f, seed, cfg)
}

fn refine<F>(f: &F, seed: Maximum, cfg: &OptimizerConfig) -> Maximum
where
    F: Fn(f64, f64) -> f64,
{
    let last = (cfg.grid_resolution.max(2) - 1) as f64;
    let (mut step_r, mut step_z) = (1.0 / last, 2.0 / last);
    let mut best = seed;
    let mut iterations = 0;
    while step_r.max(step_z) >= cfg.refine_tolerance && iterations < cfg.refine_max_iterations {
        iterations += 1;
        let mut poll_best = best;
        for (dr, dz) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
            let (r, z) = project(best.r + dr * step_r, best.z + dz * step_z);
            if r == best.r && z == best.z {
                continue;
            }
            let v = f(r, z);
            if v > poll_best.value {
                poll_best = Maximum { value: v, r, z };
            }
        }
        if poll_best.value > best.value {
            best = poll_best;
        } else {
            step_r *= 0.5;
            step_z *= 0.5;
        }
    }
    best
}

/// Nearest feasible point: `r` clamped to `[0, 1]`, then radial projection
/// onto the unit circle when outside.
fn project(r: f64, z: f64) -> (f64, f64) {
    let r = r.clamp(0.0, 1.0);
    let z = z.clamp(-1.0, 1.0);
    let n2 = r * r + z * z;
    if n2 > 1.0 {
        let n = n2.sqrt();
        ((r / n).min(1.0), z / n)
    } else {
        (r, z)
    }
}
