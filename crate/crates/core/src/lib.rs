//! Capacities of the SO(2)-covariant Pauli qubit channel
//! `Λ(ρ) = p0 ρ + p1 (XρX + YρY) + p3 ZρZ`.
//!
//! - [`linalg`]: complex matrices, Hermitian spectra, entropies, Kraus maps,
//!   complements, Choi matrices.
//! - [`channel`]: the channel family, closed-form outputs and symmetry checks.
//! - [`exact`]: classical and entanglement-assisted capacities.
//! - [`bounds`]: zero-capacity regions, flag-extension upper bounds and the
//!   single-shot lower bound.
//! - [`oracle`]: brute-force cross-checks.
//! - [`report`]: per-point reports, scans and figure data.
//!
//! All entropies are in bits.

pub mod bounds;
pub mod channel;
pub mod error;
pub mod exact;
pub mod linalg;
pub mod optimize;
pub mod oracle;
pub mod report;

pub use bounds::{
    antidegradability_test, best_quantum_upper_bound, classical_equals_a_boundary, coherent_information,
    entanglement_breaking_test, flag_bound_a, flag_bound_b, private_capacity_upper, quantum_capacity_interval,
    single_shot_quantum_capacity, subchannel_degradability_check, BoundSource, QuantumCapacityBounds, RegionFlags,
};
pub use channel::{BlochVector, ChannelParams};
pub use error::{Error, Result};
pub use exact::{
    classical_capacity, entanglement_assisted_capacity, mutual_information, Branch, ClassicalCapacityResult,
};
pub use linalg::{DensityMatrix, HermitianMatrix, KrausSet, Matrix};
pub use optimize::OptimizerConfig;
pub use oracle::OracleReport;
pub use report::{CapacityReport, Figure, FigureOptions, ScanRow};
