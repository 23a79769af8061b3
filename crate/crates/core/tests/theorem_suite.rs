//! Regression suite over the theorem verifiers: determinism of the
//! reference builders, filtered random configurations, and the global
//! no-violation rule.

use biamalg_core::theorems::{
    build_example_2_5, build_example_2_7, random_config, verify_cor_2_2, verify_cor_2_3,
    verify_prop_2_4, verify_prop_2_6, verify_theorem_2_1, GenBounds, HypothesisFilter,
    TheoremStatus, TransferProperty,
};
use biamalg_core::{
    all_ideals, is_arithmetical, is_gaussian, is_local, is_regular_ideal, Ideal, RingHom,
};
use biamalg_core::corpus::standard_corpus;

#[test]
fn reference_builders_are_deterministic() {
    let a = build_example_2_5();
    let b = build_example_2_5();
    assert_eq!(a.d.ring.size(), b.d.ring.size());
    assert_eq!(a.d.ring.labels(), b.d.ring.labels());
    let va = is_gaussian(&a.d.ring);
    let vb = is_gaussian(&b.d.ring);
    assert_eq!(
        serde_json::to_string(&va).unwrap(),
        serde_json::to_string(&vb).unwrap()
    );
    let wa = is_arithmetical(&a.d.ring);
    let wb = is_arithmetical(&b.d.ring);
    assert_eq!(
        serde_json::to_string(&wa).unwrap(),
        serde_json::to_string(&wb).unwrap()
    );

    let c = build_example_2_7();
    let d = build_example_2_7();
    assert_eq!(c.d.ring.labels(), d.d.ring.labels());
}

#[test]
fn example_verdicts_match_the_reference_results() {
    let ex5 = build_example_2_5();
    assert!(is_gaussian(&ex5.d.ring).holds);
    assert!(!is_arithmetical(&ex5.d.ring).holds);

    let ex7 = build_example_2_7();
    assert!(is_local(&ex7.d.ring).0.holds);
    assert!(!is_gaussian(&ex7.d.ring).holds);
    assert!(biamalg_core::is_prufer(&ex7.d.ring).holds);
}

#[test]
fn kernel_identities_on_example_2_7_legs() {
    // f is the injective leg: ker f = 0 = preimage of the zero ideal
    let ex = build_example_2_7();
    let f = ex.cfg.f();
    let zero = Ideal::zero(f.codomain());
    assert_eq!(f.kernel(), f.preimage_ideal(&zero).unwrap());
    assert!(f.is_injective());
    assert!(f.kernel().is_zero());
    // while example 2.5's g is surjective with a nonzero kernel
    let ex5 = build_example_2_5();
    let g = ex5.cfg.g();
    assert!(!g.is_injective());
    assert_eq!(g.kernel().len(), 2);
}

#[test]
fn no_violation_across_the_regression_suites() {
    let ex5 = build_example_2_5();
    let ex7 = build_example_2_7();
    let mut reports = vec![
        verify_theorem_2_1(&ex5.cfg, TransferProperty::Gaussian).unwrap(),
        verify_theorem_2_1(&ex5.cfg, TransferProperty::Prufer).unwrap(),
        verify_prop_2_4(1, &ex5.cfg).unwrap(),
        verify_prop_2_4(2, &ex5.cfg).unwrap(),
        verify_prop_2_4(3, &ex5.cfg).unwrap(),
        verify_prop_2_6(&ex5.cfg).unwrap(),
        verify_prop_2_4(1, &ex7.cfg).unwrap(),
        verify_prop_2_4(2, &ex7.cfg).unwrap(),
        verify_prop_2_4(3, &ex7.cfg).unwrap(),
        verify_prop_2_6(&ex7.cfg).unwrap(),
    ];
    let z4 = biamalg_core::make_zmod(4).unwrap();
    let id = RingHom::identity(&z4);
    reports.push(verify_cor_2_2(&id, &Ideal::unit(&z4), TransferProperty::Gaussian).unwrap());
    reports.push(verify_cor_2_3(&z4, &Ideal::unit(&z4), TransferProperty::Prufer).unwrap());
    for report in &reports {
        assert_ne!(
            report.status,
            TheoremStatus::Violation,
            "violation in {}: {report:?}",
            report.theorem
        );
    }
}

#[test]
fn filtered_random_configs_verify_prop_2_4_2() {
    // the acceptance suite runs one hundred; keep a quick regression here
    let bounds = GenBounds::default();
    for seed in 0..10u64 {
        let cfg = random_config(seed, &bounds, HypothesisFilter::Prop242).unwrap();
        let report = verify_prop_2_4(2, &cfg).unwrap();
        assert_eq!(
            report.status,
            TheoremStatus::Verified,
            "seed {seed}: {report:?}"
        );
    }
}

#[test]
fn filtered_random_configs_verify_prop_2_6() {
    let bounds = GenBounds::default();
    for seed in 0..10u64 {
        let cfg = random_config(seed, &bounds, HypothesisFilter::Prop26).unwrap();
        let report = verify_prop_2_6(&cfg).unwrap();
        assert_eq!(
            report.status,
            TheoremStatus::Verified,
            "seed {seed}: {report:?}"
        );
    }
}

#[test]
fn degenerate_theorem_2_1_configs_verify() {
    let bounds = GenBounds::default();
    for seed in 0..10u64 {
        let cfg = random_config(seed, &bounds, HypothesisFilter::Thm21Degenerate).unwrap();
        for mode in [TransferProperty::Gaussian, TransferProperty::Prufer] {
            let report = verify_theorem_2_1(&cfg, mode).unwrap();
            assert_eq!(
                report.status,
                TheoremStatus::Verified,
                "seed {seed}: {report:?}"
            );
        }
    }
}

#[test]
fn proper_ideals_of_small_rings_are_never_regular() {
    for ring in standard_corpus().into_iter().filter(|r| r.size() <= 16) {
        for ideal in all_ideals(&ring).unwrap() {
            if ideal.is_proper() {
                let (regular, witness) = is_regular_ideal(&ideal);
                assert!(!regular, "proper regular ideal in {ring:?}: {witness:?}");
            }
        }
    }
}
