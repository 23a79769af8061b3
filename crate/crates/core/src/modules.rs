//! Finite modules presented as direct sums of cyclic quotients (R/I)^k.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Result, RingError};
use crate::hom::RingHom;
use crate::ideal::{quotient_ring, Ideal};
use crate::ring::{check_cap, Elem, FiniteRing};

static NEXT_MODULE_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ModuleId(u64);

/// An element of one specific module.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModElem {
    module: ModuleId,
    index: u32,
}

impl ModElem {
    pub fn index(&self) -> usize {
        self.index as usize
    }
}

impl fmt::Debug for ModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}@M{}", self.index, self.module.0)
    }
}

struct Component {
    ideal: Ideal,
    quotient: FiniteRing,
    map: RingHom,
}

struct ModuleInner {
    id: ModuleId,
    base: FiniteRing,
    components: Vec<Component>,
    size: usize,
    labels: Vec<String>,
}

/// A finite module over a finite ring, a direct sum of cyclic quotients
/// with componentwise coset action. Elements are labeled e0, e1, ...
#[derive(Clone)]
pub struct FiniteModule {
    inner: Arc<ModuleInner>,
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        self.inner.id == other.inner.id
    }
}
impl Eq for FiniteModule {}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteModule(over {}, size {})",
            self.inner.base.desc(),
            self.inner.size
        )
    }
}

/// Direct sum of base/I_k for each listed ideal, the whole list repeated
/// `copies` times.
pub fn make_module(base: &FiniteRing, components: &[Ideal], copies: usize) -> Result<FiniteModule> {
    if copies == 0 {
        return Err(RingError::InvalidArgument(
            "a module needs a positive number of copies".into(),
        ));
    }
    let mut comps = Vec::new();
    let mut size: usize = 1;
    for _ in 0..copies {
        for ideal in components {
            if ideal.ring().id() != base.id() {
                return Err(RingError::MismatchedRings(
                    "module component ideal lives in a different ring".into(),
                ));
            }
            let (quotient, map) = quotient_ring(base, ideal)?;
            size = size
                .checked_mul(quotient.size())
                .ok_or_else(|| RingError::SizeLimit {
                    requested: usize::MAX,
                    cap: crate::ring::element_cap(),
                })?;
            check_cap(size)?;
            comps.push(Component {
                ideal: ideal.clone(),
                quotient,
                map,
            });
        }
    }
    let labels = (0..size).map(|i| format!("e{i}")).collect();
    Ok(FiniteModule {
        inner: Arc::new(ModuleInner {
            id: ModuleId(NEXT_MODULE_ID.fetch_add(1, Ordering::Relaxed)),
            base: base.clone(),
            components: comps,
            size,
            labels,
        }),
    })
}

impl FiniteModule {
    pub fn id(&self) -> ModuleId {
        self.inner.id
    }

    pub fn base(&self) -> &FiniteRing {
        &self.inner.base
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn component_ideals(&self) -> Vec<Ideal> {
        self.inner.components.iter().map(|c| c.ideal.clone()).collect()
    }

    pub fn component_count(&self) -> usize {
        self.inner.components.len()
    }

    pub fn zero(&self) -> ModElem {
        self.elem(0)
    }

    pub fn elem(&self, index: usize) -> ModElem {
        assert!(index < self.inner.size, "module element index out of range");
        ModElem {
            module: self.inner.id,
            index: index as u32,
        }
    }

    pub fn elems(&self) -> impl Iterator<Item = ModElem> + '_ {
        (0..self.inner.size).map(move |i| self.elem(i))
    }

    pub fn label(&self, m: ModElem) -> &str {
        self.check_owned(m);
        &self.inner.labels[m.index()]
    }

    pub fn by_label(&self, label: &str) -> Option<ModElem> {
        let stripped = label.strip_prefix('e')?;
        let idx: usize = stripped.parse().ok()?;
        (idx < self.inner.size).then(|| self.elem(idx))
    }

    fn check_owned(&self, m: ModElem) {
        assert!(
            m.module == self.inner.id,
            "module element belongs to a different module"
        );
    }

    fn split(&self, mut idx: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.inner.components.len());
        for c in &self.inner.components {
            let s = c.quotient.size() as u32;
            out.push(idx % s);
            idx /= s;
        }
        out
    }

    fn join(&self, digits: &[u32]) -> u32 {
        let mut idx = 0u64;
        for (c, &d) in self.inner.components.iter().zip(digits).rev() {
            idx = idx * c.quotient.size() as u64 + d as u64;
        }
        idx as u32
    }

    pub(crate) fn add_idx(&self, a: u32, b: u32) -> u32 {
        let da = self.split(a);
        let db = self.split(b);
        let sum: Vec<u32> = self
            .inner
            .components
            .iter()
            .zip(da.iter().zip(&db))
            .map(|(c, (&x, &y))| c.quotient.add_idx(x, y))
            .collect();
        self.join(&sum)
    }

    pub(crate) fn neg_idx(&self, a: u32) -> u32 {
        let da = self.split(a);
        let neg: Vec<u32> = self
            .inner
            .components
            .iter()
            .zip(&da)
            .map(|(c, &x)| c.quotient.neg_idx(x))
            .collect();
        self.join(&neg)
    }

    /// Scalar action of the base-ring element with index `r`.
    pub(crate) fn scalar_idx(&self, r: u32, a: u32) -> u32 {
        let da = self.split(a);
        let out: Vec<u32> = self
            .inner
            .components
            .iter()
            .zip(&da)
            .map(|(c, &x)| c.quotient.mul_idx(c.map.apply_idx(r), x))
            .collect();
        self.join(&out)
    }

    pub fn add(&self, a: ModElem, b: ModElem) -> ModElem {
        self.check_owned(a);
        self.check_owned(b);
        self.elem(self.add_idx(a.index, b.index) as usize)
    }

    pub fn neg(&self, a: ModElem) -> ModElem {
        self.check_owned(a);
        self.elem(self.neg_idx(a.index) as usize)
    }

    pub fn scalar(&self, r: Elem, a: ModElem) -> ModElem {
        assert!(r.ring_id() == self.inner.base.id(), "scalar from a different ring");
        self.check_owned(a);
        self.elem(self.scalar_idx(r.raw(), a.index) as usize)
    }

    /// The element with coset-of-1 in position `k` and zero elsewhere;
    /// these generate the module.
    pub fn unit(&self, k: usize) -> ModElem {
        assert!(k < self.inner.components.len(), "component out of range");
        let mut digits = vec![0u32; self.inner.components.len()];
        digits[k] = self.inner.components[k].quotient.one().raw() as u32;
        self.elem(self.join(&digits) as usize)
    }
}
