//! The ring constructions under study: trivial extensions A⋉E,
//! bi-amalgamations A⋈^{f,g}(J,J′), amalgamations A⋈^f J, duplications
//! A⋈I, and the image subrings f(A)+J.

use std::collections::HashMap;

use crate::error::{Result, RingError};
use crate::hom::RingHom;
use crate::ideal::{is_maximal_ideal, Ideal};
use crate::modules::{FiniteModule, ModElem};
use crate::ring::{
    build_ring, check_cap, make_subset_ring, Elem, FiniteRing, Recipe,
};
use crate::set::ElemSet;

/// A⋉E with its two canonical homomorphisms.
#[derive(Clone)]
pub struct TrivialExtension {
    pub ring: FiniteRing,
    /// a ↦ (a, 0); injective and unital.
    pub inclusion: RingHom,
    /// (a, e) ↦ a; surjective with kernel 0⋉E.
    pub projection: RingHom,
    base: FiniteRing,
    module: FiniteModule,
}

/// Trivial ring extension of `base` by `module`: the group base × module
/// with (a,e)(a',e') = (aa', ae' + a'e).
pub fn trivext(base: &FiniteRing, module: &FiniteModule) -> Result<TrivialExtension> {
    if module.base().id() != base.id() {
        return Err(RingError::MismatchedRings(
            "module is not over the extension base".into(),
        ));
    }
    let m = module.size();
    let size = base
        .size()
        .checked_mul(m)
        .ok_or_else(|| RingError::SizeLimit {
            requested: usize::MAX,
            cap: crate::ring::element_cap(),
        })?;
    check_cap(size)?;
    let mut labels = Vec::with_capacity(size);
    for a in 0..base.size() {
        for e in 0..m {
            labels.push(format!(
                "({},{})",
                base.labels()[a],
                module.label(module.elem(e))
            ));
        }
    }
    let zero = 0;
    let one = base.one().raw() * m as u32;
    let ring = build_ring(
        Recipe::TrivExt {
            base: base.clone(),
            module: module.clone(),
        },
        format!("{}⋉M{}", base.desc(), m),
        labels,
        zero,
        one,
    );
    let inclusion = RingHom::from_raw_table(
        base,
        &ring,
        (0..base.size() as u32).map(|a| a * m as u32).collect(),
    )?;
    let projection = RingHom::from_raw_table(
        &ring,
        base,
        (0..size as u32).map(|x| x / m as u32).collect(),
    )?;
    Ok(TrivialExtension {
        ring,
        inclusion,
        projection,
        base: base.clone(),
        module: module.clone(),
    })
}

impl TrivialExtension {
    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    /// The element (a, e).
    pub fn embed(&self, a: Elem, e: ModElem) -> Elem {
        assert!(a.ring_id() == self.base.id(), "base element of a different ring");
        self.ring
            .elem(a.index() * self.module.size() + e.index())
    }

    /// Splits an extension element into its (a, e) parts.
    pub fn parts(&self, x: Elem) -> (Elem, ModElem) {
        assert!(x.ring_id() == self.ring.id(), "element of a different ring");
        let m = self.module.size();
        (self.base.elem(x.index() / m), self.module.elem(x.index() % m))
    }

    /// The ideal 0⋉E (equal to the kernel of the projection).
    pub fn zero_cross_module(&self) -> Ideal {
        self.projection.kernel()
    }
}

/// A validated bi-amalgamation datum: f : A→B, g : A→C, J ⊆ B, J′ ⊆ C with
/// f⁻¹(J) = g⁻¹(J′) =: I₀ (checked at construction, with a witness element
/// on mismatch).
#[derive(Clone)]
pub struct BiAmalgConfig {
    f: RingHom,
    g: RingHom,
    j: Ideal,
    j_prime: Ideal,
    i0: Ideal,
}

impl std::fmt::Debug for BiAmalgConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BiAmalgConfig({})", self.describe())
    }
}

impl BiAmalgConfig {
    pub fn new(f: RingHom, g: RingHom, j: Ideal, j_prime: Ideal) -> Result<Self> {
        if f.domain().id() != g.domain().id() {
            return Err(RingError::MismatchedRings(
                "the two homomorphisms must share their domain".into(),
            ));
        }
        if j.ring().id() != f.codomain().id() {
            return Err(RingError::MismatchedRings(
                "J must be an ideal of the codomain of f".into(),
            ));
        }
        if j_prime.ring().id() != g.codomain().id() {
            return Err(RingError::MismatchedRings(
                "J' must be an ideal of the codomain of g".into(),
            ));
        }
        // conductor check, elementwise for a precise witness
        for a in f.domain().elems() {
            let in_j = j.contains(f.apply(a));
            let in_jp = j_prime.contains(g.apply(a));
            if in_j != in_jp {
                return Err(RingError::ConductorMismatch {
                    witness: format!(
                        "a = {} has f(a) {} J but g(a) {} J'",
                        f.domain().label(a),
                        if in_j { "in" } else { "not in" },
                        if in_jp { "in" } else { "not in" },
                    ),
                });
            }
        }
        let i0 = f.preimage_ideal(&j)?;
        debug_assert_eq!(i0, g.preimage_ideal(&j_prime)?);
        Ok(BiAmalgConfig { f, g, j, j_prime, i0 })
    }

    pub fn f(&self) -> &RingHom {
        &self.f
    }

    pub fn g(&self) -> &RingHom {
        &self.g
    }

    pub fn j(&self) -> &Ideal {
        &self.j
    }

    pub fn j_prime(&self) -> &Ideal {
        &self.j_prime
    }

    /// The conductor ideal I₀ = f⁻¹(J) = g⁻¹(J′).
    pub fn i0(&self) -> &Ideal {
        &self.i0
    }

    pub fn base(&self) -> &FiniteRing {
        self.f.domain()
    }

    pub fn describe(&self) -> String {
        format!(
            "{} ⋈ ({} in {}, {} in {})",
            self.base().desc(),
            self.j.len(),
            self.f.codomain().desc(),
            self.j_prime.len(),
            self.g.codomain().desc()
        )
    }
}

/// The bi-amalgamation of a validated configuration: the subring
/// {(f(a)+j, g(a)+j′)} of B × C, materialized as an explicit pair list with
/// componentwise arithmetic (B × C itself is never built).
pub struct BiAmalgRing {
    pub config: BiAmalgConfig,
    pub ring: FiniteRing,
}

pub fn biamalg(config: BiAmalgConfig) -> Result<BiAmalgRing> {
    let a_ring = config.base();
    let b_ring = config.f.codomain();
    let c_ring = config.g.codomain();
    let expected = a_ring.size() / config.i0.len() * config.j.len() * config.j_prime.len();
    check_cap(expected)?;

    let mut lookup: HashMap<(u32, u32), u32> = HashMap::new();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut provenance: Vec<(u32, u32, u32)> = Vec::new();
    for a in 0..a_ring.size() as u32 {
        let fa = config.f.apply_idx(a);
        let ga = config.g.apply_idx(a);
        for j in config.j.sorted_indices() {
            let bj = b_ring.add_idx(fa, j);
            for jp in config.j_prime.sorted_indices() {
                let cjp = c_ring.add_idx(ga, jp);
                if !lookup.contains_key(&(bj, cjp)) {
                    lookup.insert((bj, cjp), 0);
                    pairs.push((bj, cjp));
                    provenance.push((a, j, jp));
                }
            }
        }
    }
    if pairs.len() != expected {
        return Err(RingError::Internal(format!(
            "bi-amalgamation size {} differs from |A/I0|·|J|·|J'| = {}",
            pairs.len(),
            expected
        )));
    }
    // canonical element order: lexicographic on the (B, C) index pair,
    // provenance keeps the lexicographically first (a, j, j') witness
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    order.sort_by_key(|&k| pairs[k]);
    let pairs_sorted: Vec<(u32, u32)> = order.iter().map(|&k| pairs[k]).collect();
    let provenance_sorted: Vec<(u32, u32, u32)> = order.iter().map(|&k| provenance[k]).collect();
    for (i, &p) in pairs_sorted.iter().enumerate() {
        lookup.insert(p, i as u32);
    }
    let labels: Vec<String> = pairs_sorted
        .iter()
        .map(|&(b, c)| format!("({},{})", b_ring.labels()[b as usize], c_ring.labels()[c as usize]))
        .collect();
    let zero = lookup[&(b_ring.zero().raw(), c_ring.zero().raw())];
    let one = lookup[&(b_ring.one().raw(), c_ring.one().raw())];
    let desc = config.describe();
    let ring = build_ring(
        Recipe::PairSubring {
            b: b_ring.clone(),
            c: c_ring.clone(),
            pairs: pairs_sorted,
            lookup,
            provenance: provenance_sorted,
        },
        desc,
        labels,
        zero,
        one,
    );
    Ok(BiAmalgRing { config, ring })
}

impl BiAmalgRing {
    fn pair_recipe(&self) -> (&FiniteRing, &FiniteRing, &Vec<(u32, u32)>, &HashMap<(u32, u32), u32>, &Vec<(u32, u32, u32)>) {
        match self.ring.recipe() {
            Recipe::PairSubring { b, c, pairs, lookup, provenance } => {
                (b, c, pairs, lookup, provenance)
            }
            _ => unreachable!("bi-amalgamation rings always carry a pair recipe"),
        }
    }

    /// The (B, C) components of an element.
    pub fn pair(&self, e: Elem) -> (Elem, Elem) {
        assert!(e.ring_id() == self.ring.id(), "element of a different ring");
        let (b, c, pairs, _, _) = self.pair_recipe();
        let (bi, ci) = pairs[e.index()];
        (b.elem(bi as usize), c.elem(ci as usize))
    }

    /// One (a, j, j′) witness with e = (f(a)+j, g(a)+j′).
    pub fn provenance(&self, e: Elem) -> (Elem, Elem, Elem) {
        assert!(e.ring_id() == self.ring.id(), "element of a different ring");
        let (b, c, _, _, prov) = self.pair_recipe();
        let (a, j, jp) = prov[e.index()];
        (
            self.config.base().elem(a as usize),
            b.elem(j as usize),
            c.elem(jp as usize),
        )
    }

    pub fn elem_from_pair(&self, b: Elem, c: Elem) -> Option<Elem> {
        let (rb, rc, _, lookup, _) = self.pair_recipe();
        assert!(b.ring_id() == rb.id() && c.ring_id() == rc.id());
        lookup.get(&(b.raw(), c.raw())).map(|&i| self.ring.elem(i as usize))
    }

    fn ideal_from_pairs(
        &self,
        it: impl IntoIterator<Item = (Elem, Elem)>,
        what: &str,
    ) -> Result<Ideal> {
        let mut set = ElemSet::new(self.ring.size());
        for (b, c) in it {
            let e = self.elem_from_pair(b, c).ok_or_else(|| {
                RingError::Internal(format!("{what}: pair not in the bi-amalgamation"))
            })?;
            set.insert(e.raw());
        }
        Ideal::from_element_set(&self.ring, set)
            .map_err(|e| RingError::Internal(format!("{what} must be an ideal: {e}")))
    }

    /// The ideal 0 × J′ of the bi-amalgamation.
    pub fn zero_cross_j_prime(&self) -> Ideal {
        let bz = self.config.f.codomain().zero();
        self.ideal_from_pairs(
            self.config.j_prime.elems().map(|jp| (bz, jp)),
            "0 x J'",
        )
        .expect("0 x J' always lies in the bi-amalgamation")
    }

    /// The ideal J × 0 of the bi-amalgamation.
    pub fn j_cross_zero(&self) -> Ideal {
        let cz = self.config.g.codomain().zero();
        self.ideal_from_pairs(
            self.config.j.elems().map(|j| (j, cz)),
            "J x 0",
        )
        .expect("J x 0 always lies in the bi-amalgamation")
    }

    /// P = p⋈^{f,g}(J,J′) = {(f(a)+j, g(a)+j′) : a ∈ p} for a maximal ideal
    /// p of A containing I₀; the result is verified maximal.
    pub fn extend_prime(&self, p: &Ideal) -> Result<Ideal> {
        let a_ring = self.config.base();
        if p.ring().id() != a_ring.id() {
            return Err(RingError::MismatchedRings(
                "prime must be an ideal of the base ring".into(),
            ));
        }
        if !self.config.i0.is_subset_of(p) {
            return Err(RingError::InvalidArgument(
                "prime does not contain the conductor I0".into(),
            ));
        }
        if !is_maximal_ideal(a_ring, p)? {
            return Err(RingError::InvalidArgument(
                "ideal is not maximal in the base ring".into(),
            ));
        }
        let b_ring = self.config.f.codomain();
        let c_ring = self.config.g.codomain();
        let mut set = ElemSet::new(self.ring.size());
        for a in p.elems() {
            let fa = self.config.f.apply(a);
            let ga = self.config.g.apply(a);
            for j in self.config.j.elems() {
                let bj = b_ring.add(fa, j);
                for jp in self.config.j_prime.elems() {
                    let cjp = c_ring.add(ga, jp);
                    let e = self.elem_from_pair(bj, cjp).ok_or_else(|| {
                        RingError::Internal("extended prime leaves the bi-amalgamation".into())
                    })?;
                    set.insert(e.raw());
                }
            }
        }
        let ideal = Ideal::from_element_set(&self.ring, set)
            .map_err(|e| RingError::Internal(format!("extended prime must be an ideal: {e}")))?;
        if !is_maximal_ideal(&self.ring, &ideal)? {
            return Err(RingError::Internal(
                "extended prime failed the maximality check".into(),
            ));
        }
        Ok(ideal)
    }
}

/// Amalgamation A⋈^f J, realized through the identity
/// A⋈^f J = A⋈^{id,f}(f⁻¹(J), J).
pub fn amalg(f: &RingHom, j: &Ideal) -> Result<BiAmalgRing> {
    if j.ring().id() != f.codomain().id() {
        return Err(RingError::MismatchedRings(
            "J must be an ideal of the codomain of f".into(),
        ));
    }
    let preimage = f.preimage_ideal(j)?;
    let cfg = BiAmalgConfig::new(
        RingHom::identity(f.domain()),
        f.clone(),
        preimage,
        j.clone(),
    )?;
    biamalg(cfg)
}

/// Duplication A⋈I = A⋈^{id} I.
pub fn duplicate(a: &FiniteRing, i: &Ideal) -> Result<BiAmalgRing> {
    amalg(&RingHom::identity(a), i)
}

/// The subring f(A)+J of B, with its inclusion into B.
pub struct SubringWithInclusion {
    pub ring: FiniteRing,
    pub inclusion: RingHom,
}

pub fn subring_of_image_plus_ideal(f: &RingHom, j: &Ideal) -> Result<SubringWithInclusion> {
    if j.ring().id() != f.codomain().id() {
        return Err(RingError::MismatchedRings(
            "J must be an ideal of the codomain of f".into(),
        ));
    }
    let b = f.codomain();
    let mut set = ElemSet::new(b.size());
    for a in 0..f.domain().size() as u32 {
        let fa = f.apply_idx(a);
        for x in j.sorted_indices() {
            set.insert(b.add_idx(fa, x));
        }
    }
    let members = set.to_vec();
    let ring = make_subset_ring(
        b,
        members.clone(),
        b.one().raw(),
        format!("im({})+J{}", f.domain().desc(), j.len()),
    )?;
    let inclusion = RingHom::from_raw_table(&ring, b, members)?;
    Ok(SubringWithInclusion { ring, inclusion })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::span;
    use crate::modules::make_module;
    use crate::ring::make_zmod;

    fn z4_mod2_module() -> (FiniteRing, Ideal, FiniteModule) {
        let z4 = make_zmod(4).unwrap();
        let two = Ideal::principal(&z4, z4.elem(2));
        let e = make_module(&z4, &[two.clone()], 1).unwrap();
        (z4, two, e)
    }

    #[test]
    fn trivext_z4() {
        let (z4, _, e) = z4_mod2_module();
        let t = trivext(&z4, &e).unwrap();
        assert_eq!(t.ring.size(), 8);
        t.ring.verify_axioms().unwrap();
        // (2,e)(2,e') = (0,0): 2·2 = 0 and 2E = 0
        let x = t.embed(z4.elem(2), e.elem(1));
        let y = t.embed(z4.elem(2), e.elem(0));
        assert!(t.ring.is_zero(t.ring.mul(x, y)));
        assert!(t.ring.is_zero(t.ring.mul(x, x)));
        // (0⋉E)^2 = 0
        let z = t.zero_cross_module();
        assert_eq!(z.len(), 2);
        for p in z.elems() {
            for q in z.elems() {
                assert!(t.ring.is_zero(t.ring.mul(p, q)));
            }
        }
        assert!(t.inclusion.is_injective());
        assert!(t.projection.is_surjective());
        assert_eq!(t.projection.kernel(), z);
        assert_eq!(t.ring.label(x), "(2,e1)");
    }

    #[test]
    fn conductor_mismatch_reports_witness() {
        let z4 = make_zmod(4).unwrap();
        let id = RingHom::identity(&z4);
        let j = Ideal::principal(&z4, z4.elem(2));
        let jp = Ideal::zero(&z4);
        let err = BiAmalgConfig::new(id.clone(), id, j, jp).unwrap_err();
        match err {
            RingError::ConductorMismatch { witness } => assert!(witness.contains("a = 2")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn amalg_of_z4_along_two() {
        let z4 = make_zmod(4).unwrap();
        let id = RingHom::identity(&z4);
        let j = Ideal::principal(&z4, z4.elem(2));
        let d = amalg(&id, &j).unwrap();
        assert_eq!(d.ring.size(), 8);
        d.ring.verify_axioms().unwrap();
        // the amalgamation is exactly {(a, a+j)}
        for e in d.ring.elems() {
            let (b, c) = d.pair(e);
            assert!(j.contains(z4.sub(c, b)));
        }
    }

    #[test]
    fn amalg_with_zero_ideal_is_diagonal() {
        let z4 = make_zmod(4).unwrap();
        let id = RingHom::identity(&z4);
        let d = amalg(&id, &Ideal::zero(&z4)).unwrap();
        assert_eq!(d.ring.size(), 4);
        for e in d.ring.elems() {
            let (b, c) = d.pair(e);
            assert_eq!(b, c);
        }
    }

    #[test]
    fn amalg_with_unit_ideal_is_full_product() {
        let z4 = make_zmod(4).unwrap();
        let id = RingHom::identity(&z4);
        let d = amalg(&id, &Ideal::unit(&z4)).unwrap();
        assert_eq!(d.ring.size(), 16);
    }

    #[test]
    fn duplications() {
        let z6 = make_zmod(6).unwrap();
        let i = Ideal::principal(&z6, z6.elem(2));
        let d = duplicate(&z6, &i).unwrap();
        assert_eq!(d.ring.size(), 18);
        assert_eq!(duplicate(&z6, &Ideal::zero(&z6)).unwrap().ring.size(), 6);
        assert_eq!(duplicate(&z6, &Ideal::unit(&z6)).unwrap().ring.size(), 36);
    }

    #[test]
    fn subring_of_image_plus_ideal_cases() {
        let z4 = make_zmod(4).unwrap();
        let id = RingHom::identity(&z4);
        let s = subring_of_image_plus_ideal(&id, &Ideal::zero(&z4)).unwrap();
        assert_eq!(s.ring.size(), 4);
        assert!(s.inclusion.is_injective());
        let (z4b, _, e) = z4_mod2_module();
        let t = trivext(&z4b, &e).unwrap();
        let j = span(&t.ring, &[t.embed(z4b.elem(0), e.elem(1))]);
        let s2 = subring_of_image_plus_ideal(&t.inclusion, &j).unwrap();
        assert_eq!(s2.ring.size(), 8); // all of A⋉E
    }

    #[test]
    fn extend_prime_rejects_unit_ideal() {
        let z4 = make_zmod(4).unwrap();
        let id = RingHom::identity(&z4);
        let j = Ideal::principal(&z4, z4.elem(2));
        let d = amalg(&id, &j).unwrap();
        assert!(d.extend_prime(&Ideal::unit(&z4)).is_err());
        let p = Ideal::principal(&z4, z4.elem(2));
        let ext = d.extend_prime(&p).unwrap();
        assert_eq!(ext.len(), 4); // |p/I0|·|J|·|J'| = 1·2·2
    }
}
