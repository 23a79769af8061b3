//! Lattice-theoretic invariants of the ideal machinery on small rings.

use biamalg_core::corpus::standard_corpus;
use biamalg_core::{
    all_ideals, ideal_combine, jacobson_radical, make_product, make_zmod, maximal_ideals,
    quotient_ring, span, Ideal, IdealOp,
};
use biamalg_core::theorems::build_example_2_5;
use proptest::prelude::*;

#[test]
fn product_contained_in_intersection_and_colon_identity() {
    for ring in standard_corpus().into_iter().filter(|r| r.size() <= 16) {
        let ideals = all_ideals(&ring).unwrap();
        for i in &ideals {
            for k in &ideals {
                let prod = ideal_combine(IdealOp::Product, i, k).unwrap();
                let meet = ideal_combine(IdealOp::Intersect, i, k).unwrap();
                assert!(prod.is_subset_of(&meet), "IK ⊄ I∩K in {ring:?}");
                let colon = ideal_combine(IdealOp::Colon, i, k).unwrap();
                let back = ideal_combine(IdealOp::Product, &colon, k).unwrap();
                assert!(back.is_subset_of(i), "(I:K)K ⊄ I in {ring:?}");
            }
        }
    }
}

#[test]
fn sum_and_intersection_are_join_and_meet() {
    for ring in standard_corpus().into_iter().filter(|r| r.size() <= 16) {
        let ideals = all_ideals(&ring).unwrap();
        for i in &ideals {
            for k in &ideals {
                let join = ideal_combine(IdealOp::Sum, i, k).unwrap();
                assert!(i.is_subset_of(&join) && k.is_subset_of(&join));
                let meet = ideal_combine(IdealOp::Intersect, i, k).unwrap();
                assert!(meet.is_subset_of(i) && meet.is_subset_of(k));
                for l in &ideals {
                    if i.is_subset_of(l) && k.is_subset_of(l) {
                        assert!(join.is_subset_of(l), "sum is not the least upper bound");
                    }
                    if l.is_subset_of(i) && l.is_subset_of(k) {
                        assert!(l.is_subset_of(&meet), "intersection is not the greatest lower bound");
                    }
                }
            }
        }
    }
}

#[test]
fn spans_are_minimal_closed_sets() {
    // removing any nonzero non-generator element breaks closure
    for ring in standard_corpus().into_iter().filter(|r| r.size() <= 16) {
        for g in ring.elems() {
            let ideal = span(&ring, &[g]);
            for x in ideal.elems() {
                if ring.is_zero(x) || x == g {
                    continue;
                }
                let without: Vec<_> = ideal.elems().filter(|&e| e != x).collect();
                let closed = without.iter().all(|&a| {
                    without
                        .iter()
                        .all(|&b| ideal.contains(ring.add(a, b)) && ring.add(a, b) != x)
                }) && without
                    .iter()
                    .all(|&a| ring.elems().all(|r| ring.mul(r, a) != x));
                assert!(!closed, "span minus {} stayed closed in {ring:?}", ring.label(x));
            }
        }
    }
}

#[test]
fn quotient_surjections_have_the_right_kernel() {
    for ring in standard_corpus().into_iter().filter(|r| r.size() <= 32) {
        for i in all_ideals(&ring).unwrap_or_default() {
            let (q, surjection) = quotient_ring(&ring, &i).unwrap();
            assert_eq!(q.size() * i.len(), ring.size());
            assert!(surjection.is_surjective());
            assert_eq!(surjection.kernel(), i);
        }
    }
}

#[test]
fn jacobson_radical_properties() {
    for ring in standard_corpus().into_iter().filter(|r| r.size() <= 64) {
        let jac = jacobson_radical(&ring);
        for m in maximal_ideals(&ring) {
            assert!(jac.is_subset_of(&m), "Jac ⊄ maximal in {ring:?}");
        }
        // every nilpotent element is in the radical
        for x in ring.elems() {
            let mut pow = x;
            let mut nilpotent = false;
            for _ in 0..ring.size() {
                if ring.is_zero(pow) {
                    nilpotent = true;
                    break;
                }
                pow = ring.mul(pow, x);
            }
            if nilpotent {
                assert!(jac.contains(x), "nilpotent outside Jac in {ring:?}");
            }
        }
    }
}

#[test]
fn jacobson_of_product_is_product_of_jacobsons() {
    let ex = build_example_2_5();
    let b = &ex.b_ext.ring;
    let c = ex.cfg.g().codomain();
    let p = make_product(b, c).unwrap();
    let jac_p = jacobson_radical(&p);
    let jac_b = jacobson_radical(b);
    let jac_c = jacobson_radical(c);
    assert_eq!(jac_p.len(), jac_b.len() * jac_c.len());
    for x in jac_b.elems() {
        for y in jac_c.elems() {
            let e = biamalg_core::product_join(&p, x, y).unwrap();
            assert!(jac_p.contains(e));
        }
    }
}

#[test]
fn prime_power_residue_rings_have_chain_lattices() {
    for (p, kmax) in [(2usize, 6u32), (3, 3), (5, 2), (7, 2)] {
        for k in 1..=kmax {
            let n = p.pow(k);
            if n > 64 {
                continue;
            }
            let ring = make_zmod(n).unwrap();
            let ideals = all_ideals(&ring).unwrap();
            assert_eq!(ideals.len(), k as usize + 1, "Z/{n}");
            for w in ideals.windows(2) {
                assert!(w[0].is_subset_of(&w[1]), "not a chain for Z/{n}");
            }
        }
    }
}

proptest! {
    #[test]
    fn span_is_monotone_and_idempotent(n in 2usize..24, gens in proptest::collection::vec(0usize..24, 0..3)) {
        let ring = make_zmod(n).unwrap();
        let gens: Vec<_> = gens.into_iter().map(|g| ring.elem(g % n)).collect();
        let ideal = span(&ring, &gens);
        for &g in &gens {
            prop_assert!(ideal.contains(g));
        }
        let elems: Vec<_> = ideal.elems().collect();
        let re_span = span(&ring, &elems);
        prop_assert_eq!(re_span.sorted_indices(), ideal.sorted_indices());
    }

    #[test]
    fn two_generated_ideals_match_subgroup_sums(n in 2usize..30, a in 0usize..30, b in 0usize..30) {
        // span (BFS closure) against the sum of two principal ideals
        let ring = make_zmod(n).unwrap();
        let x = ring.elem(a % n);
        let y = ring.elem(b % n);
        let direct = span(&ring, &[x, y]);
        let via_sum = ideal_combine(
            IdealOp::Sum,
            &Ideal::principal(&ring, x),
            &Ideal::principal(&ring, y),
        ).unwrap();
        prop_assert_eq!(direct.sorted_indices(), via_sum.sorted_indices());
    }
}
