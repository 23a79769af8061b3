//! Ring isomorphism testing by backtracking over generator images, pruned
//! by per-element invariants and constraint propagation.

use std::collections::HashMap;

use crate::error::{Result, RingError};
use crate::hom::RingHom;
use crate::ring::FiniteRing;
use crate::set::ElemSet;
use crate::verdict::{Verdict, Witness};

/// Rings above this size are rejected by the isomorphism tester.
pub const ISO_CAP: usize = 256;

/// Per-element invariant vector; isomorphisms preserve each component.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Invariant {
    add_order: u32,
    nilpotency: u32,
    mult_order: u32,
    idempotent: bool,
    unit: bool,
    zero_divisor: bool,
}

fn invariants(ring: &FiniteRing) -> Vec<Invariant> {
    let n = ring.size() as u32;
    let zero = ring.zero().raw();
    let one = ring.one().raw();
    (0..n)
        .map(|x| {
            let mut acc = x;
            let mut add_order = 1;
            while acc != zero {
                acc = ring.add_idx(acc, x);
                add_order += 1;
            }
            let mut nilpotency = 0;
            let mut pow = x;
            for k in 1..=n {
                if pow == zero {
                    nilpotency = k;
                    break;
                }
                pow = ring.mul_idx(pow, x);
            }
            let e = ring.elem(x as usize);
            let unit = ring.is_unit(e);
            let mult_order = if unit {
                let mut acc = x;
                let mut k = 1;
                while acc != one {
                    acc = ring.mul_idx(acc, x);
                    k += 1;
                }
                k
            } else {
                0
            };
            Invariant {
                add_order,
                nilpotency,
                mult_order,
                idempotent: ring.mul_idx(x, x) == x,
                unit,
                zero_divisor: !unit && x != zero,
            }
        })
        .collect()
}

struct SearchState {
    /// image of each r1 element, u32::MAX when unknown
    map: Vec<u32>,
    /// source of each r2 element, u32::MAX when unused
    used: Vec<u32>,
    known: Vec<u32>,
}

impl SearchState {
    fn assign(&mut self, x: u32, y: u32) -> bool {
        if self.map[x as usize] != u32::MAX {
            return self.map[x as usize] == y;
        }
        if self.used[y as usize] != u32::MAX {
            return false;
        }
        self.map[x as usize] = y;
        self.used[y as usize] = x;
        self.known.push(x);
        true
    }
}

/// Propagates closure constraints: whenever x and y have known images, so
/// do x+y and xy. Returns false on any conflict.
fn propagate(r1: &FiniteRing, r2: &FiniteRing, st: &mut SearchState) -> bool {
    let mut qi = 0;
    while qi < st.known.len() {
        let x = st.known[qi];
        qi += 1;
        let fx = st.map[x as usize];
        let mut j = 0;
        while j < qi {
            let y = st.known[j];
            j += 1;
            let fy = st.map[y as usize];
            if !st.assign(r1.add_idx(x, y), r2.add_idx(fx, fy)) {
                return false;
            }
            if !st.assign(r1.mul_idx(x, y), r2.mul_idx(fx, fy)) {
                return false;
            }
        }
    }
    true
}

fn subring_closure(ring: &FiniteRing, gens: &[u32]) -> ElemSet {
    let mut set = ElemSet::new(ring.size());
    let mut list = vec![ring.zero().raw(), ring.one().raw()];
    set.insert(ring.zero().raw());
    set.insert(ring.one().raw());
    for &g in gens {
        if set.insert(g) {
            list.push(g);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for j in 0..=i {
            let y = list[j];
            for z in [ring.add_idx(x, y), ring.mul_idx(x, y)] {
                if set.insert(z) {
                    list.push(z);
                }
            }
        }
        i += 1;
    }
    set
}

fn search(
    r1: &FiniteRing,
    r2: &FiniteRing,
    gens: &[u32],
    candidates: &[Vec<u32>],
    level: usize,
    st: &SearchState,
) -> Option<Vec<u32>> {
    if level == gens.len() {
        // generators determine everything; propagation has filled the map
        debug_assert_eq!(st.known.len(), r1.size());
        return Some(st.map.clone());
    }
    let g = gens[level];
    if st.map[g as usize] != u32::MAX {
        return search(r1, r2, gens, candidates, level + 1, st);
    }
    for &cand in &candidates[level] {
        if st.used[cand as usize] != u32::MAX {
            continue;
        }
        let mut next = SearchState {
            map: st.map.clone(),
            used: st.used.clone(),
            known: st.known.clone(),
        };
        if !next.assign(g, cand) || !propagate(r1, r2, &mut next) {
            continue;
        }
        if let Some(found) = search(r1, r2, gens, candidates, level + 1, &next) {
            return Some(found);
        }
    }
    None
}

pub struct IsoResult {
    pub verdict: Verdict,
    /// a fully validated bijective homomorphism, when one exists
    pub iso: Option<RingHom>,
}

/// Decides whether two rings are isomorphic; a positive answer carries an
/// explicit isomorphism that has passed full homomorphism validation.
pub fn ring_isomorphic(r1: &FiniteRing, r2: &FiniteRing) -> Result<IsoResult> {
    let cap_check = |r: &FiniteRing| -> Result<()> {
        if r.size() > ISO_CAP {
            Err(RingError::SizeLimit {
                requested: r.size(),
                cap: ISO_CAP,
            })
        } else {
            Ok(())
        }
    };
    cap_check(r1)?;
    cap_check(r2)?;
    let method = "backtracking over generator images with invariant pruning";
    let fail = |text: String| IsoResult {
        verdict: Verdict::no(method, Witness::Note { text }),
        iso: None,
    };
    if r1.size() != r2.size() {
        return Ok(fail(format!(
            "sizes differ: {} vs {}",
            r1.size(),
            r2.size()
        )));
    }
    let inv1 = invariants(r1);
    let inv2 = invariants(r2);
    let mut class2: HashMap<Invariant, Vec<u32>> = HashMap::new();
    for (i, &v) in inv2.iter().enumerate() {
        class2.entry(v).or_default().push(i as u32);
    }
    {
        let mut count1: HashMap<Invariant, usize> = HashMap::new();
        for &v in &inv1 {
            *count1.entry(v).or_default() += 1;
        }
        for (v, c) in &count1 {
            if class2.get(v).map_or(0, |l| l.len()) != *c {
                return Ok(fail("element invariant multisets differ".into()));
            }
        }
    }

    // choose generators greedily, preferring elements from rare classes
    let mut gens: Vec<u32> = Vec::new();
    let mut closure = subring_closure(r1, &gens);
    while closure.len() < r1.size() {
        let pick = (0..r1.size() as u32)
            .filter(|&x| !closure.contains(x))
            .min_by_key(|&x| (class2[&inv1[x as usize]].len(), x))
            .expect("closure is proper");
        gens.push(pick);
        closure = subring_closure(r1, &gens);
    }
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| class2[&inv1[g as usize]].clone())
        .collect();

    let mut st = SearchState {
        map: vec![u32::MAX; r1.size()],
        used: vec![u32::MAX; r2.size()],
        known: Vec::new(),
    };
    if !st.assign(r1.zero().raw(), r2.zero().raw())
        || !st.assign(r1.one().raw(), r2.one().raw())
        || !propagate(r1, r2, &mut st)
    {
        return Ok(fail("prime subrings are incompatible".into()));
    }
    match search(r1, r2, &gens, &candidates, 0, &st) {
        Some(map) => {
            let hom = RingHom::from_raw_table(r1, r2, map).map_err(|e| {
                RingError::Internal(format!("search returned an invalid isomorphism: {e}"))
            })?;
            debug_assert!(hom.is_injective() && hom.is_surjective());
            Ok(IsoResult {
                verdict: Verdict::yes(method),
                iso: Some(hom),
            })
        }
        None => Ok(fail("generator-image search exhausted".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{from_tables, make_monomial_quotient, make_product, make_zmod};

    #[test]
    fn crt_isomorphism() {
        let z6 = make_zmod(6).unwrap();
        let p = make_product(&make_zmod(2).unwrap(), &make_zmod(3).unwrap()).unwrap();
        let res = ring_isomorphic(&z6, &p).unwrap();
        assert!(res.verdict.holds);
        let iso = res.iso.unwrap();
        assert!(iso.is_injective() && iso.is_surjective());
    }

    #[test]
    fn z4_vs_f2x_not_isomorphic() {
        let z4 = make_zmod(4).unwrap();
        let f2x = make_monomial_quotient(2, &["x"], &[2], &[]).unwrap();
        assert_eq!(z4.size(), f2x.size());
        let res = ring_isomorphic(&z4, &f2x).unwrap();
        assert!(!res.verdict.holds);
    }

    #[test]
    fn permuted_copy_is_isomorphic() {
        let z6 = make_zmod(6).unwrap();
        // permute indices with a fixed shuffle
        let perm: Vec<usize> = vec![3, 5, 0, 2, 4, 1];
        let mut inv = vec![0usize; 6];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table = |op: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..6)
                .map(|a| (0..6).map(|b| perm[op(inv[a], inv[b])]).collect())
                .collect()
        };
        let copy = from_tables(
            table(&|a, b| z6.add(z6.elem(a), z6.elem(b)).index()),
            table(&|a, b| z6.mul(z6.elem(a), z6.elem(b)).index()),
        )
        .unwrap();
        let res = ring_isomorphic(&z6, &copy).unwrap();
        assert!(res.verdict.holds);
    }

    #[test]
    fn size_mismatch_and_cap() {
        let z4 = make_zmod(4).unwrap();
        let z6 = make_zmod(6).unwrap();
        assert!(!ring_isomorphic(&z4, &z6).unwrap().verdict.holds);
        let big = make_zmod(512).unwrap();
        assert!(matches!(
            ring_isomorphic(&big, &big),
            Err(RingError::SizeLimit { .. })
        ));
    }

    #[test]
    fn reflexive_and_symmetric() {
        for r in [
            make_zmod(8).unwrap(),
            make_monomial_quotient(2, &["x", "y"], &[2, 2], &[]).unwrap(),
        ] {
            assert!(ring_isomorphic(&r, &r).unwrap().verdict.holds);
        }
        let a = make_zmod(12).unwrap();
        let b = make_product(&make_zmod(4).unwrap(), &make_zmod(3).unwrap()).unwrap();
        assert!(ring_isomorphic(&a, &b).unwrap().verdict.holds);
        assert!(ring_isomorphic(&b, &a).unwrap().verdict.holds);
    }
}
