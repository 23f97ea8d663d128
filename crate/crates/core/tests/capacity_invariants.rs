use std::f64::consts::PI;

use covpauli_core::bounds::{
    antidegradability_test, best_quantum_upper_bound, coherent_information, entanglement_breaking_test,
    flag_bound_a, private_capacity_upper, quantum_capacity_interval, single_shot_quantum_capacity,
    subchannel_degradability_check,
};
use covpauli_core::channel::{channel_output, complement_output, BlochVector, ChannelParams};
use covpauli_core::exact::{classical_capacity, entanglement_assisted_capacity};
use covpauli_core::linalg::eigenvalues_hermitian;
use covpauli_core::oracle::{oracle_mutual_info_grid, random_params, simplex_lattice};
use covpauli_core::OptimizerConfig;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn params() -> impl Strategy<Value = ChannelParams> {
    (0.0f64..=1.0, 0.0f64..=1.0).prop_map(|(a, b)| {
        let (a, b) = if a + b > 1.0 { (1.0 - a, 1.0 - b) } else { (a, b) };
        ChannelParams::new(a, b).unwrap()
    })
}

fn bloch() -> impl Strategy<Value = BlochVector> {
    (-1.0f64..=1.0, 0.0f64..2.0 * PI, 0.0f64..=1.0).prop_map(|(c, phi, u)| {
        let s = (1.0 - c * c).max(0.0).sqrt();
        let r = u.cbrt();
        BlochVector {
            x: r * s * phi.cos(),
            y: r * s * phi.sin(),
            z: r * c,
        }
    })
}

fn spectrum_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn capacities_within_range_and_ordered_on_grid() {
    for p in simplex_lattice(201) {
        let c_cl = classical_capacity(&p).value;
        let c_e = entanglement_assisted_capacity(&p);
        assert!((-1e-15..=1.0 + 1e-15).contains(&c_cl), "{p:?}: C_cl = {c_cl}");
        assert!((-1e-15..=2.0 + 1e-15).contains(&c_e), "{p:?}: C_E = {c_e}");
        assert!(c_e >= c_cl - 1e-12, "{p:?}: C_E = {c_e} < C_cl = {c_cl}");
        let (best, _) = best_quantum_upper_bound(&p);
        assert!(best <= c_cl + 1e-15);
    }
}

#[test]
fn eb_implies_ad_on_grid() {
    for p in simplex_lattice(201) {
        if entanglement_breaking_test(&p).entanglement_breaking {
            assert!(antidegradability_test(&p).antidegradable, "{p:?}");
        }
    }
}

#[test]
fn antidegradable_points_have_no_positive_coherent_information() {
    let cfg = OptimizerConfig::default();
    let mut checked = 0;
    for p in simplex_lattice(41) {
        if antidegradability_test(&p).antidegradable {
            let ss = single_shot_quantum_capacity(&p, &cfg);
            assert!(ss.unclamped <= 1e-9, "{p:?}: {}", ss.unclamped);
            checked += 1;
        }
    }
    assert!(checked > 400);
}

#[test]
fn symmetric_line_has_zero_flag_bound_and_zero_lower_bound() {
    let cfg = OptimizerConfig {
        grid_resolution: 101,
        ..Default::default()
    };
    for i in 0..=50 {
        let x = i as f64 / 100.0;
        let p = ChannelParams::new(x, x).unwrap();
        assert_eq!(flag_bound_a(&p), 0.0);
        assert!(single_shot_quantum_capacity(&p, &cfg).value < 1e-12);
        assert_eq!(quantum_capacity_interval(&p, &cfg).lower_single_shot, 0.0);
    }
}

#[test]
fn single_shot_is_bit_reproducible() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let cfg = OptimizerConfig::default();
    for _ in 0..5 {
        let p = random_params(&mut rng);
        let a = single_shot_quantum_capacity(&p, &cfg);
        let b = single_shot_quantum_capacity(&p, &cfg);
        assert_eq!(a.unclamped.to_bits(), b.unclamped.to_bits());
        assert_eq!((a.r.to_bits(), a.z.to_bits()), (b.r.to_bits(), b.z.to_bits()));
    }
}

#[test]
fn wrong_log_base_is_caught_by_the_mutual_information_oracle() {
    let p = ChannelParams::new(0.6, 0.1).unwrap();
    let xlog = |x: f64| if x > 0.0 { x * x.ln() } else { 0.0 };
    let rest = 1.0 - p.p0() - p.p3();
    let corrupted = 2.0 + xlog(p.p0()) + rest * (rest / 2.0).ln() + xlog(p.p3());
    let (oracle, _) = oracle_mutual_info_grid(&p, 51);
    assert!((oracle - entanglement_assisted_capacity(&p)).abs() < 1e-6);
    assert!((oracle - corrupted).abs() > 1e-6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn exchange_symmetry_of_exact_capacities(p in params()) {
        let q = p.swapped();
        prop_assert!((classical_capacity(&p).value - classical_capacity(&q).value).abs() < 1e-12);
        prop_assert!((entanglement_assisted_capacity(&p) - entanglement_assisted_capacity(&q)).abs() < 1e-12);
    }

    #[test]
    fn entanglement_assisted_is_one_plus_coherent_information_at_origin(p in params()) {
        let j = coherent_information(&p, 0.0, 0.0).unwrap();
        prop_assert!((entanglement_assisted_capacity(&p) - 1.0 - j).abs() < 1e-12);
    }

    #[test]
    fn spectra_invariant_under_inversion(p in params(), b in bloch()) {
        let out = |b: &BlochVector| eigenvalues_hermitian(channel_output(&p, b).hermitian());
        let env = |b: &BlochVector| eigenvalues_hermitian(complement_output(&p, b).hermitian());
        let nb = b.neg();
        prop_assert!(spectrum_gap(&out(&b), &out(&nb)) < 1e-12);
        prop_assert!(spectrum_gap(&env(&b), &env(&nb)) < 1e-12);
    }

    #[test]
    fn spectra_invariant_under_z_rotation(p in params(), b in bloch(), theta in 0.0f64..2.0 * PI) {
        let rb = b.rotated_z(theta);
        let out = |b: &BlochVector| eigenvalues_hermitian(channel_output(&p, b).hermitian());
        let env = |b: &BlochVector| eigenvalues_hermitian(complement_output(&p, b).hermitian());
        prop_assert!(spectrum_gap(&out(&b), &out(&rb)) < 1e-12);
        prop_assert!(spectrum_gap(&env(&b), &env(&rb)) < 1e-12);
    }

    #[test]
    fn subchannels_are_degradable(p in params()) {
        prop_assert!(subchannel_degradability_check(&p).all_degradable());
    }

    #[test]
    fn private_upper_bound_is_flag_bound_a(p in params()) {
        prop_assert_eq!(private_capacity_upper(&p), flag_bound_a(&p));
    }

    #[test]
    fn flag_bound_a_lies_between_zero_and_weight(p in params()) {
        let a = flag_bound_a(&p);
        prop_assert!(a >= 0.0 && a <= p.weight() + 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lower_bound_never_exceeds_upper_bound(p in params()) {
        let cfg = OptimizerConfig { grid_resolution: 61, ..Default::default() };
        let q = quantum_capacity_interval(&p, &cfg);
        prop_assert!(q.lower_single_shot <= q.best_upper + 1e-9);
        let swapped = single_shot_quantum_capacity(&p.swapped(), &cfg).value;
        prop_assert!((single_shot_quantum_capacity(&p, &cfg).value - swapped).abs() < 1e-9);
    }
}
