//! Localization of finite rings, the multiplicative sets S_p = f(A−p)+J,
//! the induced maps between localizations, and the localization-isomorphism
//! verifier for bi-amalgamations.
//!
//! For a finite ring, localizing at a multiplicative set S is a quotient:
//! R_S = R/I with I = {r : sr = 0 for some s ∈ S}. Images of S become
//! regular in R/I, and regular elements of a finite ring are units, so the
//! quotient already inverts S; the canonical map is the surjection.

use crate::construct::{biamalg, BiAmalgConfig};
use crate::error::{Result, RingError};
use crate::hom::RingHom;
use crate::ideal::{is_maximal_ideal, quotient_ring, span, Ideal};
use crate::iso::ring_isomorphic;
use crate::ring::{Elem, FiniteRing};
use crate::set::ElemSet;
use crate::verdict::{Verdict, Witness};

/// A subset containing 1 and closed under multiplication.
#[derive(Clone)]
pub struct MultSet {
    ring: FiniteRing,
    set: ElemSet,
}

impl MultSet {
    pub fn new(ring: &FiniteRing, elems: &[Elem]) -> Result<MultSet> {
        let mut set = ElemSet::new(ring.size());
        for &e in elems {
            assert!(e.ring_id() == ring.id(), "element of a different ring");
            set.insert(e.raw());
        }
        MultSet::from_set(ring, set)
    }

    pub(crate) fn from_set(ring: &FiniteRing, set: ElemSet) -> Result<MultSet> {
        if !set.contains(ring.one().raw()) {
            return Err(RingError::InvalidArgument(
                "a multiplicative set must contain 1".into(),
            ));
        }
        for x in set.iter() {
            for y in set.iter() {
                if !set.contains(ring.mul_idx(x, y)) {
                    return Err(RingError::InvalidArgument(format!(
                        "set is not multiplicatively closed at ({}, {})",
                        ring.labels()[x as usize], ring.labels()[y as usize]
                    )));
                }
            }
        }
        Ok(MultSet {
            ring: ring.clone(),
            set,
        })
    }

    /// R − p for a prime (= maximal, here) ideal p.
    pub fn complement_of_prime(ring: &FiniteRing, p: &Ideal) -> Result<MultSet> {
        if p.ring().id() != ring.id() {
            return Err(RingError::MismatchedRings(
                "prime ideal of a different ring".into(),
            ));
        }
        let mut set = ElemSet::new(ring.size());
        for x in 0..ring.size() as u32 {
            if !p.contains_idx(x) {
                set.insert(x);
            }
        }
        MultSet::from_set(ring, set).map_err(|_| {
            RingError::InvalidArgument("complement is not multiplicative; ideal is not prime".into())
        })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.ring_id() == self.ring.id() && self.set.contains(e.raw())
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + '_ {
        self.set.iter().map(|i| self.ring.elem(i as usize))
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }
}

/// S_p = f(A − p) + J, a multiplicative subset of the codomain of f.
pub fn mult_set_sp(f: &RingHom, j: &Ideal, p: &Ideal) -> Result<MultSet> {
    if p.ring().id() != f.domain().id() {
        return Err(RingError::MismatchedRings(
            "p must be an ideal of the domain of f".into(),
        ));
    }
    if j.ring().id() != f.codomain().id() {
        return Err(RingError::MismatchedRings(
            "J must be an ideal of the codomain of f".into(),
        ));
    }
    if !is_maximal_ideal(f.domain(), p)? {
        return Err(RingError::InvalidArgument(
            "S_p needs a prime (maximal) ideal p".into(),
        ));
    }
    let b = f.codomain();
    let mut set = ElemSet::new(b.size());
    for a in 0..f.domain().size() as u32 {
        if p.contains_idx(a) {
            continue;
        }
        let fa = f.apply_idx(a);
        for x in j.sorted_indices() {
            set.insert(b.add_idx(fa, x));
        }
    }
    // f(A−p)+J is multiplicatively closed whenever p is prime; a failure
    // here means a bug, not bad input
    MultSet::from_set(b, set)
        .map_err(|e| RingError::Internal(format!("S_p must be multiplicative: {e}")))
}

/// A localization R_S realized as a quotient, with its canonical map.
pub struct Localization {
    pub ring: FiniteRing,
    pub map: RingHom,
    pub kernel: Ideal,
}

/// Localizes a finite ring at a multiplicative set.
pub fn localize(ring: &FiniteRing, s: &MultSet) -> Localization {
    assert!(s.ring().id() == ring.id(), "multiplicative set of a different ring");
    let mut kernel_set = ElemSet::new(ring.size());
    for x in 0..ring.size() as u32 {
        if s.set.iter().any(|t| ring.mul_idx(t, x) == ring.zero().raw()) {
            kernel_set.insert(x);
        }
    }
    let kernel = Ideal::from_element_set(ring, kernel_set)
        .expect("elements annihilated by S form an ideal");
    let (q, map) = quotient_ring(ring, &kernel).expect("quotient by the kernel ideal");
    for t in s.elems() {
        assert!(
            q.is_unit(map.apply(t)),
            "images of the multiplicative set must be units"
        );
    }
    Localization { ring: q, map, kernel }
}

/// Localization at a prime: R localized at R − p.
pub fn localize_at_prime(ring: &FiniteRing, p: &Ideal) -> Result<Localization> {
    let s = MultSet::complement_of_prime(ring, p)?;
    Ok(localize(ring, &s))
}

/// The induced map f_p : A_p → B_{S_p} together with the target
/// localization and the localized ideal J_{S_p}.
pub struct InducedLocalizedHom {
    pub hom: RingHom,
    pub target: Localization,
    pub localized_ideal: Ideal,
}

/// Builds f_p : A_p → B_{S_p} from f : A → B. `source` must be the
/// localization of A at A − p. Validates well-definedness and the preimage
/// identity f_p⁻¹(J_{S_p}) = (I₀)_p; failures of either are internal errors
/// because the construction guarantees them.
pub fn induced_localized_hom(
    f: &RingHom,
    j: &Ideal,
    p: &Ideal,
    source: &Localization,
) -> Result<InducedLocalizedHom> {
    if source.map.domain().id() != f.domain().id() {
        return Err(RingError::MismatchedRings(
            "source localization does not localize the domain of f".into(),
        ));
    }
    let sp = mult_set_sp(f, j, p)?;
    let target = localize(f.codomain(), &sp);
    let mut table = vec![u32::MAX; source.ring.size()];
    for a in 0..f.domain().size() as u32 {
        let sc = source.map.apply_idx(a);
        let tc = target.map.apply_idx(f.apply_idx(a));
        if table[sc as usize] == u32::MAX {
            table[sc as usize] = tc;
        } else if table[sc as usize] != tc {
            return Err(RingError::Internal(
                "induced localized map is not well defined".into(),
            ));
        }
    }
    let hom = RingHom::from_raw_table(&source.ring, &target.ring, table)
        .map_err(|e| RingError::Internal(format!("induced map must be a homomorphism: {e}")))?;
    let j_gens: Vec<Elem> = j
        .generators()
        .iter()
        .map(|&g| target.map.apply(g))
        .collect();
    let localized_ideal = span(&target.ring, &j_gens);
    let i0 = f.preimage_ideal(j)?;
    let i0_gens: Vec<Elem> = i0
        .generators()
        .iter()
        .map(|&g| source.map.apply(g))
        .collect();
    let i0_localized = span(&source.ring, &i0_gens);
    if hom.preimage_ideal(&localized_ideal)? != i0_localized {
        return Err(RingError::Internal(
            "preimage identity f_p^{-1}(J_{S_p}) = (I_0)_p failed".into(),
        ));
    }
    Ok(InducedLocalizedHom {
        hom,
        target,
        localized_ideal,
    })
}

/// Checks the localization isomorphism for a bi-amalgamation at a maximal
/// ideal p ⊇ I₀: localizing the bi-amalgamation at P = p⋈(J,J′) must give
/// the bi-amalgamation of the localizations. A failed verdict signals an
/// implementation bug, never a counterexample.
pub fn verify_prop_5_7(cfg: &BiAmalgConfig, p: &Ideal) -> Result<Verdict> {
    let d = biamalg(cfg.clone())?;
    let big_p = d.extend_prime(p)?;
    let s = MultSet::complement_of_prime(&d.ring, &big_p)?;
    let left = localize(&d.ring, &s);

    let a_loc = localize_at_prime(cfg.base(), p)?;
    let fp = induced_localized_hom(cfg.f(), cfg.j(), p, &a_loc)?;
    let gp = induced_localized_hom(cfg.g(), cfg.j_prime(), p, &a_loc)?;
    let local_cfg = BiAmalgConfig::new(fp.hom, gp.hom, fp.localized_ideal, gp.localized_ideal)?;
    let right = biamalg(local_cfg)?;

    let iso = ring_isomorphic(&left.ring, &right.ring)?;
    let method = "localized bi-amalgamation vs bi-amalgamation of localizations";
    if iso.verdict.holds {
        Ok(Verdict::yes(method))
    } else {
        Ok(Verdict::no(
            method,
            Witness::Note {
                text: format!(
                    "no isomorphism between sides of sizes {} and {} (this indicates a bug)",
                    left.ring.size(),
                    right.ring.size()
                ),
            },
        ))
    }
}
