//! Ideals of finite rings: spans, arithmetic, enumeration, quotients,
//! the Jacobson radical, and maximal-ideal listing.
//!
//! For finite commutative rings the prime ideals coincide with the maximal
//! ideals, so `maximal_ideals` doubles as the prime listing.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Result, RingError};
use crate::hom::RingHom;
use crate::ring::{build_ring, Elem, FiniteRing, Recipe};
use crate::set::ElemSet;

/// Rings above this size are rejected by the ideal-enumeration oracle.
pub const IDEAL_ORACLE_CAP: usize = 64;

/// An ideal carried with a generating set and its full closed element set.
#[derive(Clone)]
pub struct Ideal {
    ring: FiniteRing,
    gens: Vec<Elem>,
    set: ElemSet,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.set == other.set
    }
}
impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<&str> = self.gens.iter().map(|&g| self.ring.label(g)).collect();
        write!(
            f,
            "Ideal(({}) in {}, {} elements)",
            gens.join(","),
            self.ring.desc(),
            self.set.len()
        )
    }
}

impl Ideal {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an ideal always contains 0
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.ring_id() == self.ring.id() && self.set.contains(e.raw())
    }

    pub(crate) fn contains_idx(&self, idx: u32) -> bool {
        self.set.contains(idx)
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + '_ {
        self.set.iter().map(|i| self.ring.elem(i as usize))
    }

    pub fn sorted_indices(&self) -> Vec<u32> {
        self.set.to_vec()
    }

    pub(crate) fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn is_zero(&self) -> bool {
        self.set.len() == 1
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.set.len() == self.ring.size()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit_ideal()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        assert!(self.ring.id() == other.ring.id(), "ideals of different rings");
        self.set.is_subset(&other.set)
    }

    /// Canonical order: by size, then by the sorted element-index sequence.
    pub fn canonical_cmp(&self, other: &Ideal) -> Ordering {
        self.set.canonical_cmp(&other.set)
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        span(ring, &[])
    }

    pub fn unit(ring: &FiniteRing) -> Ideal {
        span(ring, &[ring.one()])
    }

    pub fn principal(ring: &FiniteRing, g: Elem) -> Ideal {
        span(ring, &[g])
    }

    /// Wraps an already-closed element set as an ideal, validating closure
    /// under addition and ring multiplication, and choosing a small
    /// generating set greedily.
    pub fn from_element_set(ring: &FiniteRing, set: ElemSet) -> Result<Ideal> {
        if set.universe() != ring.size() {
            return Err(RingError::InvalidArgument(
                "element set sized for a different ring".into(),
            ));
        }
        if !set.contains(ring.zero().raw()) {
            return Err(RingError::InvalidArgument(
                "an ideal must contain zero".into(),
            ));
        }
        let members = set.to_vec();
        for &x in &members {
            for &y in &members {
                if !set.contains(ring.add_idx(x, y)) {
                    return Err(RingError::InvalidArgument(format!(
                        "set is not closed under addition at ({}, {})",
                        ring.labels()[x as usize], ring.labels()[y as usize]
                    )));
                }
            }
            for r in 0..ring.size() as u32 {
                if !set.contains(ring.mul_idx(r, x)) {
                    return Err(RingError::InvalidArgument(format!(
                        "set is not closed under multiplication at ({}, {})",
                        ring.labels()[r as usize], ring.labels()[x as usize]
                    )));
                }
            }
        }
        // greedy generators: sweep ascending, add anything not yet spanned
        let principal = ring.principal_sets();
        let mut gens = Vec::new();
        let mut cur = ElemSet::new(ring.size());
        cur.insert(ring.zero().raw());
        for &x in &members {
            if !cur.contains(x) {
                gens.push(ring.elem(x as usize));
                cur = subgroup_sum(ring, &cur, &principal[x as usize]);
            }
        }
        debug_assert_eq!(cur, set);
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            set,
        })
    }
}

/// Smallest ideal containing `gens`: breadth-first additive closure of the
/// multiples {r·g : r ∈ R, g ∈ gens}.
pub fn span(ring: &FiniteRing, gens: &[Elem]) -> Ideal {
    let mut set = ElemSet::new(ring.size());
    set.insert(ring.zero().raw());
    let mut members: Vec<u32> = vec![ring.zero().raw()];
    for &g in gens {
        assert!(g.ring_id() == ring.id(), "generator from a different ring");
        for r in 0..ring.size() as u32 {
            let m = ring.mul_idx(r, g.raw());
            if set.insert(m) {
                members.push(m);
            }
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for j in 0..=i {
            let s = ring.add_idx(x, members[j]);
            if set.insert(s) {
                members.push(s);
            }
        }
        i += 1;
    }
    Ideal {
        ring: ring.clone(),
        gens: gens.to_vec(),
        set,
    }
}

/// Setwise sum of two additive subgroups (which is again a subgroup).
pub(crate) fn subgroup_sum(ring: &FiniteRing, a: &ElemSet, b: &ElemSet) -> ElemSet {
    if a.is_full() || b.is_subset(a) {
        return a.clone();
    }
    if b.is_full() || a.is_subset(b) {
        return b.clone();
    }
    let mut out = ElemSet::new(ring.size());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(ring.add_idx(x, y));
        }
    }
    out
}

/// The four binary ideal operations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealOp {
    Sum,
    Product,
    Intersect,
    Colon,
}

pub fn ideal_combine(kind: IdealOp, i: &Ideal, k: &Ideal) -> Result<Ideal> {
    if i.ring.id() != k.ring.id() {
        return Err(RingError::MismatchedRings(
            "ideal operation on ideals of different rings".into(),
        ));
    }
    let ring = &i.ring;
    match kind {
        IdealOp::Sum => {
            let set = subgroup_sum(ring, &i.set, &k.set);
            let mut gens = i.gens.clone();
            gens.extend_from_slice(&k.gens);
            debug_assert_eq!(span(ring, &gens).set, set);
            Ok(Ideal {
                ring: ring.clone(),
                gens,
                set,
            })
        }
        IdealOp::Product => {
            let mut gens = Vec::new();
            for &a in &i.gens {
                for &b in &k.gens {
                    gens.push(ring.mul(a, b));
                }
            }
            Ok(span(ring, &gens))
        }
        IdealOp::Intersect => {
            Ideal::from_element_set(ring, i.set.intersect(&k.set))
                .map_err(|e| RingError::Internal(format!("intersection must be an ideal: {e}")))
        }
        IdealOp::Colon => {
            // (I : K) = {x : xK ⊆ I}; generator test suffices since K = span(gens)
            let mut set = ElemSet::new(ring.size());
            for x in 0..ring.size() as u32 {
                if k.gens.iter().all(|g| i.set.contains(ring.mul_idx(x, g.raw()))) {
                    set.insert(x);
                }
            }
            Ideal::from_element_set(ring, set)
                .map_err(|e| RingError::Internal(format!("colon must be an ideal: {e}")))
        }
    }
}

pub fn ideal_square(i: &Ideal) -> Ideal {
    ideal_combine(IdealOp::Product, i, i).expect("square of an ideal in its own ring")
}

/// {x : xK = 0}, the annihilator of K.
pub fn annihilator(k: &Ideal) -> Ideal {
    ideal_combine(IdealOp::Colon, &Ideal::zero(k.ring()), k)
        .expect("annihilator in the same ring")
}

/// Every ideal of R, by closing the set of principal ideals under pairwise
/// sums. Only available below the oracle cap. The result is sorted
/// canonically (size, then element sequence).
pub fn all_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>> {
    if ring.size() > IDEAL_ORACLE_CAP {
        return Err(RingError::SizeLimit {
            requested: ring.size(),
            cap: IDEAL_ORACLE_CAP,
        });
    }
    let principal = ring.principal_sets();
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut list: Vec<ElemSet> = Vec::new();
    for p in principal {
        if seen.insert(p.clone()) {
            list.push(p.clone());
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..=i {
            let s = subgroup_sum(ring, &list[i], &list[j]);
            if !seen.contains(&s) {
                seen.insert(s.clone());
                list.push(s);
            }
        }
        i += 1;
    }
    let mut ideals: Vec<Ideal> = list
        .into_iter()
        .map(|s| Ideal::from_element_set(ring, s).expect("closure produces ideals"))
        .collect();
    ideals.sort_by(|a, b| a.canonical_cmp(b));
    Ok(ideals)
}

/// Coset ring R/I together with the canonical surjection r ↦ r + I.
pub fn quotient_ring(ring: &FiniteRing, i: &Ideal) -> Result<(FiniteRing, RingHom)> {
    if i.ring.id() != ring.id() {
        return Err(RingError::MismatchedRings(
            "quotient by an ideal of a different ring".into(),
        ));
    }
    let n = ring.size();
    let mut to_coset = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n as u32 {
        if to_coset[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for d in i.set.iter() {
            to_coset[ring.add_idx(x, d) as usize] = c;
        }
    }
    debug_assert_eq!(reps.len() * i.len(), n);
    let labels: Vec<String> = reps
        .iter()
        .map(|&r| format!("[{}]", ring.labels()[r as usize]))
        .collect();
    let zero = to_coset[ring.zero().index()];
    let one = to_coset[ring.one().index()];
    let q = build_ring(
        Recipe::Quotient {
            base: ring.clone(),
            reps,
            to_coset: to_coset.clone(),
        },
        format!("{}/I{}", ring.desc(), i.len()),
        labels,
        zero,
        one,
    );
    let surjection = RingHom::from_raw_table(ring, &q, to_coset)?;
    Ok((q, surjection))
}

/// {r : 1 − rx is a unit for every x}; equals the intersection of the
/// maximal ideals.
pub fn jacobson_radical(ring: &FiniteRing) -> Ideal {
    let one = ring.one().raw();
    let mut set = ElemSet::new(ring.size());
    for r in 0..ring.size() as u32 {
        let quasi = (0..ring.size() as u32).all(|x| {
            let e = ring.add_idx(one, ring.neg_idx(ring.mul_idx(r, x)));
            ring.is_unit(ring.elem(e as usize))
        });
        if quasi {
            set.insert(r);
        }
    }
    Ideal::from_element_set(ring, set).expect("Jacobson radical is an ideal")
}

/// All maximal ideals, computed from the idempotent decomposition: one per
/// local factor, as the set of elements whose factor component is a
/// non-unit. In a finite commutative ring these are also all the primes.
pub fn maximal_ideals(ring: &FiniteRing) -> Vec<Ideal> {
    let factors = crate::properties::local_decomposition(ring);
    let mut out: Vec<Ideal> = factors
        .iter()
        .map(|f| {
            let mut set = ElemSet::new(ring.size());
            for x in ring.elems() {
                if !f.ring.is_unit(f.projection.apply(x)) {
                    set.insert(x.raw());
                }
            }
            Ideal::from_element_set(ring, set).expect("projection pullback of a maximal ideal")
        })
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// True when the quotient by `i` is a field (proper, and every nonzero
/// coset is invertible).
pub fn is_maximal_ideal(ring: &FiniteRing, i: &Ideal) -> Result<bool> {
    if i.ring().id() != ring.id() {
        return Err(RingError::MismatchedRings(
            "maximality test against a different ring".into(),
        ));
    }
    if !i.is_proper() {
        return Ok(false);
    }
    let (q, _) = quotient_ring(ring, i)?;
    let field = q.elems().all(|e| q.is_zero(e) || q.is_unit(e));
    Ok(field)
}

/// True iff the ideal contains a regular element; returns the first such
/// element (in index order) as a witness.
pub fn is_regular_ideal(i: &Ideal) -> (bool, Option<Elem>) {
    for e in i.elems() {
        if i.ring.is_regular(e) {
            return (true, Some(e));
        }
    }
    (false, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_monomial_quotient, make_zmod};

    #[test]
    fn span_basics() {
        let z4 = make_zmod(4).unwrap();
        assert_eq!(span(&z4, &[z4.elem(2)]).sorted_indices(), vec![0, 2]);
        assert_eq!(span(&z4, &[]).sorted_indices(), vec![0]);
        let f2xy = make_monomial_quotient(2, &["x", "y"], &[2, 2], &[]).unwrap();
        let x = f2xy.by_label("x").unwrap();
        let y = f2xy.by_label("y").unwrap();
        let m = span(&f2xy, &[x, y]);
        assert_eq!(m.len(), 8);
        // the maximal ideal is exactly the elements with zero constant term
        assert!(m.elems().all(|e| e.index() % 2 == 0));
    }

    #[test]
    fn combine_matches_hand_computations() {
        let z4 = make_zmod(4).unwrap();
        let two = Ideal::principal(&z4, z4.elem(2));
        let prod = ideal_combine(IdealOp::Product, &two, &two).unwrap();
        assert!(prod.is_zero());
        let ann = ideal_combine(IdealOp::Colon, &Ideal::zero(&z4), &two).unwrap();
        assert_eq!(ann.sorted_indices(), vec![0, 2]);

        let z6 = make_zmod(6).unwrap();
        let i2 = Ideal::principal(&z6, z6.elem(2));
        let i3 = Ideal::principal(&z6, z6.elem(3));
        assert!(ideal_combine(IdealOp::Intersect, &i2, &i3).unwrap().is_zero());
        assert!(ideal_combine(IdealOp::Sum, &i2, &i3).unwrap().is_unit_ideal());
    }

    #[test]
    fn combine_rejects_mixed_rings() {
        let z4 = make_zmod(4).unwrap();
        let z6 = make_zmod(6).unwrap();
        let a = Ideal::zero(&z4);
        let b = Ideal::zero(&z6);
        assert!(matches!(
            ideal_combine(IdealOp::Sum, &a, &b),
            Err(RingError::MismatchedRings(_))
        ));
    }

    #[test]
    fn square_examples() {
        let z8 = make_zmod(8).unwrap();
        let two = Ideal::principal(&z8, z8.elem(2));
        assert_eq!(ideal_square(&two).sorted_indices(), vec![0, 4]);
        let unit = Ideal::unit(&z8);
        assert!(ideal_square(&unit).is_unit_ideal());
    }

    #[test]
    fn all_ideals_counts() {
        let z4 = make_zmod(4).unwrap();
        assert_eq!(all_ideals(&z4).unwrap().len(), 3);
        let z6 = make_zmod(6).unwrap();
        assert_eq!(all_ideals(&z6).unwrap().len(), 4);
        // F_2[x,y]/(x^2,y^2): ideals are 0, (xy), (x), (y), (x+y), m, R
        let f2xy = make_monomial_quotient(2, &["x", "y"], &[2, 2], &[]).unwrap();
        let ideals = all_ideals(&f2xy).unwrap();
        assert_eq!(ideals.len(), 7);
        let x = Ideal::principal(&f2xy, f2xy.by_label("x").unwrap());
        let y = Ideal::principal(&f2xy, f2xy.by_label("y").unwrap());
        assert!(ideals.contains(&x) && ideals.contains(&y));
        assert!(!x.is_subset_of(&y) && !y.is_subset_of(&x));
    }

    #[test]
    fn all_ideals_cap() {
        let z128 = make_zmod(128).unwrap();
        assert!(matches!(
            all_ideals(&z128),
            Err(RingError::SizeLimit { .. })
        ));
    }

    #[test]
    fn quotient_examples() {
        let z4 = make_zmod(4).unwrap();
        let two = Ideal::principal(&z4, z4.elem(2));
        let (q, s) = quotient_ring(&z4, &two).unwrap();
        assert_eq!(q.size(), 2);
        assert!(q.elems().all(|e| q.is_zero(e) || q.is_unit(e)));
        assert_eq!(s.kernel(), two);

        let (zero_q, _) = quotient_ring(&z4, &Ideal::unit(&z4)).unwrap();
        assert_eq!(zero_q.size(), 1);
        let (copy, s0) = quotient_ring(&z4, &Ideal::zero(&z4)).unwrap();
        assert_eq!(copy.size(), 4);
        assert!(s0.is_injective());
    }

    #[test]
    fn jacobson_examples() {
        let z4 = make_zmod(4).unwrap();
        assert_eq!(jacobson_radical(&z4).sorted_indices(), vec![0, 2]);
        let z6 = make_zmod(6).unwrap();
        assert!(jacobson_radical(&z6).is_zero());
    }

    #[test]
    fn maximal_ideal_examples() {
        let z6 = make_zmod(6).unwrap();
        let maxes = maximal_ideals(&z6);
        assert_eq!(maxes.len(), 2);
        let sizes: Vec<usize> = maxes.iter().map(|m| m.len()).collect();
        assert_eq!(sizes, vec![2, 3]); // (3) = {0,3} and (2) = {0,2,4}
        let z4 = make_zmod(4).unwrap();
        let maxes4 = maximal_ideals(&z4);
        assert_eq!(maxes4.len(), 1);
        assert_eq!(maxes4[0].sorted_indices(), vec![0, 2]);
        assert!(is_maximal_ideal(&z4, &maxes4[0]).unwrap());
        assert!(!is_maximal_ideal(&z4, &Ideal::unit(&z4)).unwrap());
    }

    #[test]
    fn regular_ideal_detection() {
        let z4 = make_zmod(4).unwrap();
        let two = Ideal::principal(&z4, z4.elem(2));
        assert_eq!(is_regular_ideal(&two), (false, None));
        let unit = Ideal::unit(&z4);
        let (ok, w) = is_regular_ideal(&unit);
        assert!(ok);
        assert_eq!(w.unwrap().index(), 1);
    }
}
