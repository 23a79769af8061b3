//! Validated unital ring homomorphisms, stored as total element maps.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, RingError};
use crate::ideal::Ideal;
use crate::ring::{Elem, FiniteRing};
use crate::set::ElemSet;

/// Domains up to this size are validated over every pair of elements;
/// larger domains are validated on 10,000 seeded pairs.
const EXHAUSTIVE_LIMIT: usize = 256;

/// A unital homomorphism between two finite rings. Every constructor
/// validates the homomorphism identities before returning.
#[derive(Clone)]
pub struct RingHom {
    domain: FiniteRing,
    codomain: FiniteRing,
    map: Arc<Vec<u32>>,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RingHom({} -> {})",
            self.domain.desc(),
            self.codomain.desc()
        )
    }
}

impl RingHom {
    /// Builds a homomorphism from an explicit image table, rejecting any
    /// map that breaks a ring-homomorphism identity (with a witness).
    pub fn from_table(
        domain: &FiniteRing,
        codomain: &FiniteRing,
        images: &[Elem],
    ) -> Result<RingHom> {
        if images.len() != domain.size() {
            return Err(RingError::InvalidArgument(format!(
                "image table has {} entries for a domain of size {}",
                images.len(),
                domain.size()
            )));
        }
        let mut map = Vec::with_capacity(images.len());
        for &e in images {
            if e.ring_id() != codomain.id() {
                return Err(RingError::InvalidArgument(
                    "image table contains elements of a different ring".into(),
                ));
            }
            map.push(e.raw());
        }
        let hom = RingHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map: Arc::new(map),
        };
        hom.validate()?;
        Ok(hom)
    }

    pub(crate) fn from_raw_table(
        domain: &FiniteRing,
        codomain: &FiniteRing,
        map: Vec<u32>,
    ) -> Result<RingHom> {
        let hom = RingHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map: Arc::new(map),
        };
        hom.validate()?;
        Ok(hom)
    }

    pub fn identity(ring: &FiniteRing) -> RingHom {
        RingHom {
            domain: ring.clone(),
            codomain: ring.clone(),
            map: Arc::new((0..ring.size() as u32).collect()),
        }
    }

    /// `second ∘ first`; the codomain of `first` must be the domain of `second`.
    pub fn compose(second: &RingHom, first: &RingHom) -> Result<RingHom> {
        if first.codomain.id() != second.domain.id() {
            return Err(RingError::InvalidArgument(
                "compose: codomain of the first map differs from domain of the second".into(),
            ));
        }
        let map: Vec<u32> = first
            .map
            .iter()
            .map(|&m| second.map[m as usize])
            .collect();
        Ok(RingHom {
            domain: first.domain.clone(),
            codomain: second.codomain.clone(),
            map: Arc::new(map),
        })
    }

    fn validate(&self) -> Result<()> {
        let d = &self.domain;
        let c = &self.codomain;
        let witness = |a: u32, b: u32| {
            format!(
                "({}, {})",
                d.labels()[a as usize],
                d.labels()[b as usize]
            )
        };
        if self.map[d.zero().index()] != c.zero().raw() {
            return Err(RingError::NotAHomomorphism {
                identity: "map(0) = 0".into(),
                witness: d.labels()[d.zero().index()].clone(),
            });
        }
        if self.map[d.one().index()] != c.one().raw() {
            return Err(RingError::NotAHomomorphism {
                identity: "map(1) = 1".into(),
                witness: d.labels()[d.one().index()].clone(),
            });
        }
        let check_pair = |a: u32, b: u32| -> Result<()> {
            let fa = self.map[a as usize];
            let fb = self.map[b as usize];
            if self.map[d.add_idx(a, b) as usize] != c.add_idx(fa, fb) {
                return Err(RingError::NotAHomomorphism {
                    identity: "map(a+b) = map(a)+map(b)".into(),
                    witness: witness(a, b),
                });
            }
            if self.map[d.mul_idx(a, b) as usize] != c.mul_idx(fa, fb) {
                return Err(RingError::NotAHomomorphism {
                    identity: "map(ab) = map(a)map(b)".into(),
                    witness: witness(a, b),
                });
            }
            Ok(())
        };
        let n = d.size() as u32;
        if d.size() <= EXHAUSTIVE_LIMIT {
            for a in 0..n {
                for b in a..n {
                    check_pair(a, b)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x40c ^ d.size() as u64);
            for _ in 0..10_000 {
                check_pair(rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &FiniteRing {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteRing {
        &self.codomain
    }

    pub fn apply(&self, a: Elem) -> Elem {
        assert!(a.ring_id() == self.domain.id(), "element not in the domain");
        self.codomain.elem(self.map[a.index()] as usize)
    }

    pub(crate) fn apply_idx(&self, a: u32) -> u32 {
        self.map[a as usize]
    }

    /// {a : map(a) ∈ K}, as a validated ideal of the domain.
    pub fn preimage_ideal(&self, k: &Ideal) -> Result<Ideal> {
        if k.ring().id() != self.codomain.id() {
            return Err(RingError::MismatchedRings(
                "preimage: ideal lives in a different ring than the codomain".into(),
            ));
        }
        let mut set = ElemSet::new(self.domain.size());
        for a in 0..self.domain.size() as u32 {
            if k.contains_idx(self.map[a as usize]) {
                set.insert(a);
            }
        }
        Ideal::from_element_set(&self.domain, set)
            .map_err(|e| RingError::Internal(format!("preimage of an ideal must be an ideal: {e}")))
    }

    pub fn kernel(&self) -> Ideal {
        self.preimage_ideal(&Ideal::zero(&self.codomain))
            .expect("kernel is always an ideal")
    }

    pub fn image_set(&self) -> ElemSet {
        ElemSet::from_indices(self.codomain.size(), self.map.iter().copied())
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().len() == self.domain.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().len() == self.codomain.size()
    }
}
