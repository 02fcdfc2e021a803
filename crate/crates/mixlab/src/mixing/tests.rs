use super::*;
use crate::hypothesis_graph::{gen_parity, gen_random, gen_threshold};

fn single_ones() -> HypothesisClass {
    HypothesisClass::from_rows(&[vec![true, true]]).unwrap()
}

#[test]
fn discrepancy_examples() {
    let th = gen_threshold(8).unwrap();
    // first half of the hypotheses against the last half of the examples: no edges
    let pair = SubsetPair::new(0..4, 4..8);
    assert_eq!(discrepancy(&th, &pair, Baseline::Half).unwrap(), 2.0);

    let c = single_ones();
    let v = discrepancy(&c, &SubsetPair::full(&c), Baseline::Half).unwrap();
    assert!((v - 2f64.sqrt() / 2.0).abs() < 1e-15);

    let rnd = gen_random(5, 7, 1).unwrap();
    let pair = SubsetPair::new([0, 2], [1, 3, 4]);
    let e = rnd.edge_count(&pair).unwrap() as u64;
    let p = Baseline::Ratio { num: e, den: 6 };
    assert_eq!(discrepancy(&rnd, &pair, p).unwrap(), 0.0);
}

#[test]
fn discrepancy_rejects_empty() {
    let c = single_ones();
    assert!(matches!(
        discrepancy(&c, &SubsetPair::new([], [0]), Baseline::Half),
        Err(crate::Error::Input(_))
    ));
}

#[test]
fn parity2_exact() {
    let p = gen_parity(2).unwrap();
    let r = d_min_exact(&p, Baseline::Half, &ExactConfig::default()).unwrap();
    assert!((r.d_value - 3f64.sqrt() / 2.0).abs() < 1e-12);
    assert_eq!(r.witness, Some(SubsetPair::new([0, 1, 2], [0])));
    assert!((r.mixing_complexity - 4.0).abs() < 1e-12);
    assert!(r.is_mixing);
}

#[test]
fn tiny_classes() {
    let c = single_ones();
    let r = d_min_exact(&c, Baseline::Half, &ExactConfig::default()).unwrap();
    assert!((r.d_value - 2f64.sqrt() / 2.0).abs() < 1e-15);
    assert!((r.mixing_complexity - 2.0).abs() < 1e-12);
    let one = HypothesisClass::from_rows(&[vec![true]]).unwrap();
    assert_eq!(d_min_bruteforce_oracle(&one, Baseline::Half).unwrap().d_value, 0.5);
}

#[test]
fn zero_discrepancy_has_infinite_mc() {
    let ones = HypothesisClass::from_fn(3, 3, |_, _| true).unwrap();
    let r = d_min_exact(&ones, Baseline::Density, &ExactConfig::default()).unwrap();
    assert_eq!(r.d_value, 0.0);
    assert!(r.mixing_complexity.is_infinite());
    assert_eq!(r.witness, Some(SubsetPair::new([0], [0])));
    assert_eq!(r.warnings.len(), 1);
    assert!(r.to_json().contains("\"mc\": null"));
    let o = d_min_bruteforce_oracle(&ones, Baseline::Density).unwrap();
    assert_eq!(o.witness, r.witness);
}

#[test]
fn exact_matches_oracle_including_witness() {
    for seed in 0..40 {
        for (h, x) in [(3, 5), (5, 3), (6, 6), (4, 7)] {
            let c = gen_random(h, x, seed).unwrap();
            let a = d_min_exact(&c, Baseline::Half, &ExactConfig::default()).unwrap();
            let b = d_min_bruteforce_oracle(&c, Baseline::Half).unwrap();
            assert_eq!(a.cmp_exact(&b), Some(Ordering::Equal), "seed {seed} {h}x{x}");
            assert_eq!(a.witness, b.witness, "seed {seed} {h}x{x}");
        }
    }
}

#[test]
fn exact_matches_oracle_with_density_baseline() {
    for seed in 0..20 {
        let c = gen_random(5, 6, seed).unwrap();
        let a = d_min_exact(&c, Baseline::Density, &ExactConfig::default()).unwrap();
        let b = d_min_bruteforce_oracle(&c, Baseline::Density).unwrap();
        assert_eq!(a.cmp_exact(&b), Some(Ordering::Equal));
        assert_eq!(a.witness, b.witness);
    }
}

#[test]
fn witness_reproduces_value() {
    for seed in 0..10 {
        let c = gen_random(9, 13, seed).unwrap();
        let r = d_min_exact(&c, Baseline::Half, &ExactConfig::default()).unwrap();
        let w = r.witness.as_ref().unwrap();
        assert!((discrepancy(&c, w, Baseline::Half).unwrap() - r.d_value).abs() <= 1e-12);
    }
}

#[test]
fn capacity_errors() {
    let big = gen_random(30, 30, 0).unwrap();
    assert!(matches!(
        d_min_exact(&big, Baseline::Half, &ExactConfig::default()),
        Err(crate::Error::Capacity(_))
    ));
    assert!(matches!(
        d_min_bruteforce_oracle(&gen_random(13, 2, 0).unwrap(), Baseline::Half),
        Err(crate::Error::Capacity(_))
    ));
    // tall and thin classes enumerate the short side
    assert!(d_min_exact(&gen_random(300, 5, 0).unwrap(), Baseline::Half, &ExactConfig::default()).is_ok());
}

#[test]
fn spectral_examples() {
    let c = single_ones();
    let r = d_spectral_bound(&c, Baseline::Half, &SpectralConfig::default()).unwrap();
    assert!((r.d_value - 2f64.sqrt() / 2.0).abs() < 1e-9);
    assert_eq!(r.mc_kind, McKind::Lower);

    for n in 2..=8 {
        let p = gen_parity(n).unwrap();
        let r = d_spectral_bound(&p, Baseline::Half, &SpectralConfig::default()).unwrap();
        let half_sqrt_x = ((1u64 << n) as f64).sqrt() / 2.0;
        assert!(r.d_value <= half_sqrt_x + 1e-6, "n={n}: {}", r.d_value);
    }
}

#[test]
fn spectral_dominates_exact() {
    let cfg = SpectralConfig::default();
    for seed in 0..30 {
        let c = gen_random(12, 12, seed).unwrap();
        let exact = d_min_exact(&c, Baseline::Half, &ExactConfig::default()).unwrap();
        let spec = d_spectral_bound(&c, Baseline::Half, &cfg).unwrap();
        assert!(exact.d_value <= spec.d_value * (1.0 + cfg.tol), "seed {seed}");
    }
}

#[test]
fn spectral_non_convergence_is_reported() {
    let c = gen_random(20, 20, 3).unwrap();
    let cfg = SpectralConfig {
        tol: 1e-300,
        max_iters: 3,
        ..SpectralConfig::default()
    };
    match d_spectral_bound(&c, Baseline::Half, &cfg) {
        Err(crate::Error::Convergence { iterations, last, .. }) => {
            assert_eq!(iterations, 3);
            assert!(last > 0.0);
        }
        other => panic!("expected convergence error, got {other:?}"),
    }
}

#[test]
fn search_is_a_lower_bound() {
    for seed in 0..20 {
        let c = gen_random(8, 9, seed).unwrap();
        let exact = d_min_exact(&c, Baseline::Half, &ExactConfig::default()).unwrap();
        let cfg = SearchConfig { seed, ..SearchConfig::default() };
        let s = d_search_lower_bound(&c, Baseline::Half, &cfg).unwrap();
        assert_ne!(s.cmp_exact(&exact), Some(Ordering::Greater));
        assert_eq!(s.mc_kind, McKind::Upper);
    }
}

#[test]
fn search_zero_budget_returns_initial_pair() {
    let th = gen_threshold(6).unwrap();
    let pair = SubsetPair::new([1, 4], [0, 5]);
    let cfg = SearchConfig {
        seed: 3,
        restarts: 0,
        budget: 0,
        initial: Some(pair.clone()),
    };
    let r = d_search_lower_bound(&th, Baseline::Half, &cfg).unwrap();
    assert_eq!(r.witness.as_ref(), Some(&pair));
    assert_eq!(r.d_value, discrepancy(&th, &pair, Baseline::Half).unwrap());
}

#[test]
fn search_finds_threshold_block() {
    let th = gen_threshold(32).unwrap();
    let r = d_search_lower_bound(&th, Baseline::Half, &SearchConfig::default()).unwrap();
    assert!(r.d_value >= 8.0, "{}", r.d_value);
}

#[test]
fn search_is_deterministic() {
    let c = gen_random(40, 50, 1).unwrap();
    let cfg = SearchConfig { seed: 9, ..SearchConfig::default() };
    let a = d_search_lower_bound(&c, Baseline::Half, &cfg).unwrap();
    let b = d_search_lower_bound(&c, Baseline::Half, &cfg).unwrap();
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn mixing_verdicts() {
    let p = gen_parity(2).unwrap();
    assert!(is_mixing(&p, &Method::exact(), 1.0).unwrap());
    let th = gen_threshold(16).unwrap();
    assert!(!is_mixing(&th, &Method::exact(), 1.0).unwrap());
    for seed in 0..5 {
        let c = gen_random(7, 9, seed).unwrap();
        let c_max = (7f64).sqrt() / 2.0;
        assert!(is_mixing(&c, &Method::exact(), c_max).unwrap());
    }
}

#[test]
fn threshold_mixing_complexity_is_bounded() {
    for n in 4..=16 {
        let th = gen_threshold(n).unwrap();
        let mc = mixing_complexity(&th, &Method::exact()).unwrap();
        assert!(mc <= 4.0, "n={n}: {mc}");
    }
}

#[test]
fn theorem1_parity() {
    let p = gen_parity(4).unwrap();
    let r = check_theorem1_preconditions(&p, 0.0, 0.1, 2.0).unwrap();
    assert!(r.mixing_condition && r.density_condition && r.preconditions_hold);
    assert!((r.memory_state_bound - 15f64.powf(1.15)).abs() < 1e-9);
    assert!(r.interesting);
    assert_eq!(r.smallest_a, Some(0.0));
}

#[test]
fn theorem1_trivial_d_fails() {
    let c = gen_random(20, 20, 1).unwrap();
    let d = (400f64).sqrt() / 2.0;
    for a in [0.0, 0.25, 0.5] {
        assert!(!check_theorem1_preconditions(&c, a, 0.5, d).unwrap().mixing_condition);
    }
    // d^2 = 5.29 <= 8 still passes at |X| = 8; from |X| = 16 on the threshold
    // class violates the condition at a = 0.
    let th = gen_threshold(8).unwrap();
    let d = d_min_exact(&th, Baseline::Half, &ExactConfig::default()).unwrap().d_value;
    assert!(check_theorem1_preconditions(&th, 0.0, 0.5, d).unwrap().mixing_condition);
    let th = gen_threshold(16).unwrap();
    let d = d_min_exact(&th, Baseline::Half, &ExactConfig::default()).unwrap().d_value;
    assert!(!check_theorem1_preconditions(&th, 0.0, 0.5, d).unwrap().mixing_condition);
}

#[test]
fn theorem1_input_errors() {
    let p = gen_parity(2).unwrap();
    assert!(check_theorem1_preconditions(&p, 1.5, 0.1, 1.0).is_err());
    assert!(check_theorem1_preconditions(&p, 0.5, 0.0, 1.0).is_err());
    assert!(check_theorem1_preconditions(&p, 0.5, 1.0, 1.0).is_err());
    assert!(check_theorem1_preconditions(&p, 0.5, 0.5, f64::NAN).is_err());
}

#[test]
fn report_json_fields() {
    let p = gen_parity(2).unwrap();
    let r = d_min_exact(&p, Baseline::Half, &ExactConfig::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in [
        "method", "d_value", "mc", "density_baseline", "is_mixing", "mixing_constant", "witness", "bounds",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["method"], "exact");
    assert_eq!(v["witness"]["T"], serde_json::json!([0, 1, 2]));
    assert_eq!(v["d_value"], serde_json::json!(0.866025403784));
}
