//! Cross-checks of the amalgamation constructions: size formulas, subring
//! closure, the canonical quotient isomorphisms, and the amalgamation
//! identity against a direct enumeration oracle.

use std::collections::HashSet;

use biamalg_core::theorems::{build_example_2_5, build_example_2_7};
use biamalg_core::{
    all_ideals, amalg, duplicate, ideal_combine, is_maximal_ideal, make_zmod, quotient_ring,
    ring_isomorphic, subring_of_image_plus_ideal, Ideal, IdealOp, RingHom,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn size_formula_holds_on_reference_configs() {
    let ex5 = build_example_2_5();
    let c5 = &ex5.cfg;
    assert_eq!(
        ex5.d.ring.size(),
        c5.base().size() / c5.i0().len() * c5.j().len() * c5.j_prime().len()
    );
    assert_eq!(ex5.d.ring.size(), 32);

    let ex7 = build_example_2_7();
    let c7 = &ex7.cfg;
    assert_eq!(
        ex7.d.ring.size(),
        c7.base().size() / c7.i0().len() * c7.j().len() * c7.j_prime().len()
    );
    assert_eq!(ex7.d.ring.size(), 256);
}

#[test]
fn biamalg_is_closed_in_the_product() {
    // closure under + and · of the pair set, checked exhaustively
    for d in [build_example_2_5().d, build_example_2_7().d] {
        let b = d.config.f().codomain().clone();
        let c = d.config.g().codomain().clone();
        for e1 in d.ring.elems() {
            for e2 in d.ring.elems() {
                let (b1, c1) = d.pair(e1);
                let (b2, c2) = d.pair(e2);
                assert!(d.elem_from_pair(b.add(b1, b2), c.add(c1, c2)).is_some());
                assert!(d.elem_from_pair(b.mul(b1, b2), c.mul(c1, c2)).is_some());
            }
        }
    }
}

#[test]
fn quotients_by_cross_ideals_give_the_image_subrings() {
    for d in [build_example_2_5().d, build_example_2_7().d] {
        let faj = subring_of_image_plus_ideal(d.config.f(), d.config.j()).unwrap();
        let (q1, _) = quotient_ring(&d.ring, &d.zero_cross_j_prime()).unwrap();
        let iso1 = ring_isomorphic(&q1, &faj.ring).unwrap();
        assert!(iso1.verdict.holds, "D/(0 x J') must match f(A)+J");

        let gaj = subring_of_image_plus_ideal(d.config.g(), d.config.j_prime()).unwrap();
        let (q2, _) = quotient_ring(&d.ring, &d.j_cross_zero()).unwrap();
        let iso2 = ring_isomorphic(&q2, &gaj.ring).unwrap();
        assert!(iso2.verdict.holds, "D/(J x 0) must match g(A)+J'");
    }
}

#[test]
fn example_2_5_image_subring_is_all_of_b() {
    let ex = build_example_2_5();
    let faj = subring_of_image_plus_ideal(ex.cfg.f(), ex.cfg.j()).unwrap();
    assert_eq!(faj.ring.size(), ex.b_ext.ring.size());
}

#[test]
fn example_2_7_image_subring_is_all_of_b() {
    let ex = build_example_2_7();
    let faj = subring_of_image_plus_ideal(ex.cfg.f(), ex.cfg.j()).unwrap();
    assert_eq!(faj.ring.size(), 64);
}

#[test]
fn amalgamation_matches_direct_enumeration() {
    // oracle: A ⋈^f J = {(a, f(a)+j)} as a set of pairs, computed directly
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 10 {
        let n = rng.gen_range(2usize..=9);
        let a = make_zmod(n).unwrap();
        let ideals = all_ideals(&a).unwrap();
        let i = &ideals[rng.gen_range(0..ideals.len())];
        let (b, f) = quotient_ring(&a, i).unwrap();
        let j_ideals = all_ideals(&b).unwrap();
        let j = &j_ideals[rng.gen_range(0..j_ideals.len())];
        let d = amalg(&f, j).unwrap();

        let mut expected: HashSet<(usize, usize)> = HashSet::new();
        for x in a.elems() {
            for jj in j.elems() {
                expected.insert((x.index(), b.add(f.apply(x), jj).index()));
            }
        }
        let got: HashSet<(usize, usize)> = d
            .ring
            .elems()
            .map(|e| {
                let (l, r) = d.pair(e);
                (l.index(), r.index())
            })
            .collect();
        assert_eq!(expected, got, "amalgamation differs from the direct set");
        checked += 1;
    }
}

#[test]
fn duplication_of_z6_has_expected_shape() {
    let z6 = make_zmod(6).unwrap();
    let i = Ideal::principal(&z6, z6.elem(2));
    let d = duplicate(&z6, &i).unwrap();
    assert_eq!(d.ring.size(), 18);
    for e in d.ring.elems() {
        let (x, y) = d.pair(e);
        assert!(i.contains(z6.sub(y, x)), "second coordinate must differ by I");
    }
}

#[test]
fn extended_primes_are_maximal() {
    let ex = build_example_2_5();
    let p = ex.d.extend_prime(&ex.m).unwrap();
    assert_eq!(p.len(), 16);
    assert!(is_maximal_ideal(&ex.d.ring, &p).unwrap());

    let ex7 = build_example_2_7();
    // I0 = 0, so every maximal ideal of A qualifies; A is local with m
    let p7 = ex7.d.extend_prime(&ex7.m).unwrap();
    assert_eq!(p7.len(), 128);
    assert!(is_maximal_ideal(&ex7.d.ring, &p7).unwrap());
}

#[test]
fn cross_ideals_square_to_zero_on_example_2_5() {
    let ex = build_example_2_5();
    let zj = ex.d.zero_cross_j_prime();
    let jz = ex.d.j_cross_zero();
    assert_eq!(zj.len(), ex.cfg.j_prime().len());
    assert_eq!(jz.len(), ex.cfg.j().len());
    assert!(biamalg_core::ideal_square(&zj).is_zero());
    assert!(biamalg_core::ideal_square(&jz).is_zero());
    let meet = ideal_combine(IdealOp::Intersect, &zj, &jz).unwrap();
    assert!(meet.is_zero());
}

#[test]
fn provenance_witnesses_reconstruct_elements() {
    let ex = build_example_2_5();
    let d = &ex.d;
    let b = d.config.f().codomain().clone();
    let c = d.config.g().codomain().clone();
    for e in d.ring.elems() {
        let (a, j, jp) = d.provenance(e);
        let (bl, cl) = d.pair(e);
        assert_eq!(b.add(d.config.f().apply(a), j), bl);
        assert_eq!(c.add(d.config.g().apply(a), jp), cl);
        assert!(d.config.j().contains(j));
        assert!(d.config.j_prime().contains(jp));
    }
}

#[test]
fn identity_amalgamation_with_zero_ideal_is_isomorphic_to_base() {
    let z6 = make_zmod(6).unwrap();
    let d = amalg(&RingHom::identity(&z6), &Ideal::zero(&z6)).unwrap();
    let iso = ring_isomorphic(&d.ring, &z6).unwrap();
    assert!(iso.verdict.holds);
}
