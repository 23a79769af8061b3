//! Agreement between the fast property deciders and their brute-force
//! oracles, and the implication chain between the three conditions.

use biamalg_core::corpus::{extended_corpus, standard_corpus};
use biamalg_core::{
    content_equation_sample, from_tables, is_arithmetical, is_arithmetical_bruteforce,
    is_gaussian, is_local, is_prufer, is_total_quotient_ring, ring_isomorphic,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn chain_criterion_agrees_with_distributivity_oracle() {
    for ring in standard_corpus().into_iter().filter(|r| r.size() <= 64) {
        let fast = is_arithmetical(&ring);
        let oracle = is_arithmetical_bruteforce(&ring).unwrap();
        assert_eq!(fast.holds, oracle.holds, "disagreement on {ring:?}");
    }
}

#[test]
fn arithmetical_implies_gaussian_implies_prufer() {
    for ring in extended_corpus() {
        let arith = is_arithmetical(&ring).holds;
        let gauss = is_gaussian(&ring).holds;
        let prufer = is_prufer(&ring).holds;
        if arith {
            assert!(gauss, "arithmetical but not Gaussian: {ring:?}");
        }
        if gauss {
            assert!(prufer, "Gaussian but not Prüfer: {ring:?}");
        }
    }
}

#[test]
fn every_finite_corpus_ring_is_a_total_quotient_ring() {
    for ring in extended_corpus() {
        assert!(is_total_quotient_ring(&ring).holds, "{ring:?}");
    }
}

#[test]
fn content_sampler_consistent_with_pair_criterion() {
    // a smaller sweep than the acceptance run, same property
    for ring in standard_corpus().into_iter().filter(|r| r.size() <= 32) {
        let verdict = content_equation_sample(&ring, 3, 400, 21);
        if is_gaussian(&ring).holds {
            assert!(
                verdict.holds,
                "sampler contradicted the pair criterion on {ring:?}"
            );
        }
    }
}

#[test]
fn gaussian_verdict_is_isomorphism_invariant() {
    // five permuted table copies, each first confirmed isomorphic
    let picks: Vec<_> = standard_corpus()
        .into_iter()
        .filter(|r| (2..=16).contains(&r.size()))
        .take(5)
        .collect();
    assert_eq!(picks.len(), 5);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for ring in picks {
        let n = ring.size();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut inv = vec![0usize; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table = |op: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..n)
                .map(|a| (0..n).map(|b| perm[op(inv[a], inv[b])]).collect())
                .collect()
        };
        let copy = from_tables(
            table(&|a, b| ring.add(ring.elem(a), ring.elem(b)).index()),
            table(&|a, b| ring.mul(ring.elem(a), ring.elem(b)).index()),
        )
        .unwrap();
        assert!(ring_isomorphic(&ring, &copy).unwrap().verdict.holds);
        assert_eq!(
            is_gaussian(&ring).holds,
            is_gaussian(&copy).holds,
            "Gaussian verdict changed under isomorphism for {ring:?}"
        );
    }
}

#[test]
fn local_rings_have_trivial_idempotents() {
    for ring in standard_corpus() {
        let (loc, _) = is_local(&ring);
        if loc.holds {
            assert_eq!(ring.idempotents().len(), 2.min(ring.size()), "{ring:?}");
        }
    }
}
