//! Finite commutative unital rings with enumerable elements.
//!
//! Every ring is a table of `size` canonical element indices together with a
//! construction recipe (residues, coefficient vectors, pairs, subsets) that
//! defines the arithmetic. Index 0 is always the additive identity. Rings are
//! immutable after construction; caches are filled lazily and idempotently,
//! so concurrent reads are safe.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, RingError};
use crate::modules::FiniteModule;
use crate::set::ElemSet;

/// Default bound on the number of elements any constructor will materialize.
pub const DEFAULT_ELEMENT_CAP: usize = 4096;

/// Rings at or below this size precompute full addition/multiplication tables.
const TABLE_LIMIT: usize = 1024;

static ELEMENT_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ELEMENT_CAP);
static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Current global element cap.
pub fn element_cap() -> usize {
    ELEMENT_CAP.load(Ordering::Relaxed)
}

/// Overrides the global element cap (the CLI sets this from `--max-elements`).
pub fn set_element_cap(cap: usize) {
    ELEMENT_CAP.store(cap.max(1), Ordering::Relaxed);
}

pub(crate) fn check_cap(requested: usize) -> Result<()> {
    let cap = element_cap();
    if requested > cap {
        Err(RingError::SizeLimit { requested, cap })
    } else {
        Ok(())
    }
}

/// Opaque identity of a constructed ring; element ownership is checked with it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct RingId(u64);

/// An element of one specific ring, referenced by canonical index.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Elem {
    ring: RingId,
    index: u32,
}

impl Elem {
    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub(crate) fn raw(&self) -> u32 {
        self.index
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}@r{}", self.index, self.ring.0)
    }
}

/// Classification of a single element; in a finite commutative ring every
/// nonzero element is exactly one of unit or zero-divisor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElemClass {
    Zero,
    Unit,
    ZeroDivisor,
}

/// How a ring was built. Arithmetic is computed structurally from this
/// recipe; small rings additionally memoize full operation tables.
pub(crate) enum Recipe {
    Zmod {
        n: u32,
    },
    MonomialQuotient {
        p: u32,
        basis_len: usize,
        /// product of basis monomials i, j reduced in the quotient;
        /// `None` when the product is annihilated by a relation.
        basis_prod: Vec<Option<u32>>,
    },
    Product {
        left: FiniteRing,
        right: FiniteRing,
    },
    Quotient {
        base: FiniteRing,
        reps: Vec<u32>,
        to_coset: Vec<u32>,
    },
    TrivExt {
        base: FiniteRing,
        module: FiniteModule,
    },
    /// A subset of a host ring closed under the host operations. Covers
    /// subrings (one = host one) and idempotent factor rings (one = e).
    Subset {
        host: FiniteRing,
        members: Vec<u32>,
        lookup: HashMap<u32, u32>,
    },
    /// Subring of B x C materialized as an explicit pair list.
    PairSubring {
        b: FiniteRing,
        c: FiniteRing,
        pairs: Vec<(u32, u32)>,
        lookup: HashMap<(u32, u32), u32>,
        /// one witness (a, j, j') per element, in enumeration order
        provenance: Vec<(u32, u32, u32)>,
    },
    Table {
        add: Vec<u32>,
        mul: Vec<u32>,
        size: usize,
    },
}

impl Recipe {
    fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            Recipe::Zmod { n } => (a + b) % n,
            Recipe::MonomialQuotient { p, basis_len, .. } => {
                digitwise(*p, *basis_len, a, b, |x, y| (x + y) % p)
            }
            Recipe::Product { left, right } => {
                let rn = right.size() as u32;
                let (a1, a2) = (a / rn, a % rn);
                let (b1, b2) = (b / rn, b % rn);
                left.add_idx(a1, b1) * rn + right.add_idx(a2, b2)
            }
            Recipe::Quotient { base, reps, to_coset } => {
                to_coset[base.add_idx(reps[a as usize], reps[b as usize]) as usize]
            }
            Recipe::TrivExt { base, module } => {
                let m = module.size() as u32;
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                base.add_idx(a1, b1) * m + module.add_idx(a2, b2)
            }
            Recipe::Subset { host, members, lookup } => {
                lookup[&host.add_idx(members[a as usize], members[b as usize])]
            }
            Recipe::PairSubring { b: rb, c: rc, pairs, lookup, .. } => {
                let (ab, ac) = pairs[a as usize];
                let (bb, bc) = pairs[b as usize];
                lookup[&(rb.add_idx(ab, bb), rc.add_idx(ac, bc))]
            }
            Recipe::Table { add, size, .. } => add[a as usize * size + b as usize],
        }
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            Recipe::Zmod { n } => ((a as u64 * b as u64) % *n as u64) as u32,
            Recipe::MonomialQuotient { p, basis_len, basis_prod } => {
                let p64 = *p as u64;
                let mut acc = vec![0u64; *basis_len];
                let da = digits(*p, *basis_len, a);
                let db = digits(*p, *basis_len, b);
                for (i, &ca) in da.iter().enumerate() {
                    if ca == 0 {
                        continue;
                    }
                    for (j, &cb) in db.iter().enumerate() {
                        if cb == 0 {
                            continue;
                        }
                        if let Some(k) = basis_prod[i * basis_len + j] {
                            acc[k as usize] = (acc[k as usize] + ca as u64 * cb as u64) % p64;
                        }
                    }
                }
                let mut idx = 0u64;
                for k in (0..*basis_len).rev() {
                    idx = idx * p64 + acc[k];
                }
                idx as u32
            }
            Recipe::Product { left, right } => {
                let rn = right.size() as u32;
                let (a1, a2) = (a / rn, a % rn);
                let (b1, b2) = (b / rn, b % rn);
                left.mul_idx(a1, b1) * rn + right.mul_idx(a2, b2)
            }
            Recipe::Quotient { base, reps, to_coset } => {
                to_coset[base.mul_idx(reps[a as usize], reps[b as usize]) as usize]
            }
            Recipe::TrivExt { base, module } => {
                let m = module.size() as u32;
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                // (a,e)(a',e') = (aa', ae' + a'e)
                let prod = base.mul_idx(a1, b1);
                let cross = module.add_idx(
                    module.scalar_idx(a1, b2),
                    module.scalar_idx(b1, a2),
                );
                prod * m + cross
            }
            Recipe::Subset { host, members, lookup } => {
                lookup[&host.mul_idx(members[a as usize], members[b as usize])]
            }
            Recipe::PairSubring { b: rb, c: rc, pairs, lookup, .. } => {
                let (ab, ac) = pairs[a as usize];
                let (bb, bc) = pairs[b as usize];
                lookup[&(rb.mul_idx(ab, bb), rc.mul_idx(ac, bc))]
            }
            Recipe::Table { mul, size, .. } => mul[a as usize * size + b as usize],
        }
    }

    fn neg(&self, a: u32) -> u32 {
        match self {
            Recipe::Zmod { n } => if a == 0 { 0 } else { n - a },
            Recipe::MonomialQuotient { p, basis_len, .. } => {
                digitwise(*p, *basis_len, a, 0, |x, _| (p - x) % p)
            }
            Recipe::Product { left, right } => {
                let rn = right.size() as u32;
                left.neg_idx(a / rn) * rn + right.neg_idx(a % rn)
            }
            Recipe::Quotient { base, reps, to_coset } => {
                to_coset[base.neg_idx(reps[a as usize]) as usize]
            }
            Recipe::TrivExt { base, module } => {
                let m = module.size() as u32;
                base.neg_idx(a / m) * m + module.neg_idx(a % m)
            }
            Recipe::Subset { host, members, lookup } => {
                lookup[&host.neg_idx(members[a as usize])]
            }
            Recipe::PairSubring { b, c, pairs, lookup, .. } => {
                let (ab, ac) = pairs[a as usize];
                lookup[&(b.neg_idx(ab), c.neg_idx(ac))]
            }
            Recipe::Table { .. } => unreachable!("table rings precompute negation"),
        }
    }
}

fn digits(p: u32, len: usize, mut x: u32) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
        if x == 0 {
            break;
        }
    }
    out
}

fn digitwise(p: u32, len: usize, a: u32, b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
    let da = digits(p, len, a);
    let db = digits(p, len, b);
    let mut idx = 0u64;
    for k in (0..len).rev() {
        idx = idx * p as u64 + f(da[k], db[k]) as u64;
    }
    idx as u32
}

struct RingInner {
    id: RingId,
    size: usize,
    desc: String,
    labels: Vec<String>,
    zero: u32,
    one: u32,
    recipe: Recipe,
    neg: Vec<u32>,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
    label_lookup: OnceLock<HashMap<String, u32>>,
    units: OnceLock<Vec<bool>>,
    regular: OnceLock<Vec<bool>>,
    principal: OnceLock<Vec<ElemSet>>,
}

/// A finite commutative unital ring. Cheap to clone (shared handle).
#[derive(Clone)]
pub struct FiniteRing {
    inner: Arc<RingInner>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.inner.id == other.inner.id
    }
}
impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, size {})", self.inner.desc, self.inner.size)
    }
}

pub(crate) fn build_ring(
    recipe: Recipe,
    desc: String,
    labels: Vec<String>,
    zero: u32,
    one: u32,
) -> FiniteRing {
    let size = labels.len();
    debug_assert!(size > 0);
    let neg: Vec<u32> = if matches!(recipe, Recipe::Table { .. }) {
        // derive negation by scanning the addition table
        (0..size as u32)
            .map(|a| {
                (0..size as u32)
                    .find(|&b| recipe.add(a, b) == zero)
                    .expect("finite abelian group has inverses")
            })
            .collect()
    } else {
        (0..size as u32).map(|a| recipe.neg(a)).collect()
    };
    let (add_table, mul_table) = if size <= TABLE_LIMIT {
        let mut add = vec![0u32; size * size];
        let mut mul = vec![0u32; size * size];
        for a in 0..size as u32 {
            for b in 0..size as u32 {
                add[a as usize * size + b as usize] = recipe.add(a, b);
                mul[a as usize * size + b as usize] = recipe.mul(a, b);
            }
        }
        (Some(add), Some(mul))
    } else {
        (None, None)
    };
    FiniteRing {
        inner: Arc::new(RingInner {
            id: RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed)),
            size,
            desc,
            labels,
            zero,
            one,
            recipe,
            neg,
            add_table,
            mul_table,
            label_lookup: OnceLock::new(),
            units: OnceLock::new(),
            regular: OnceLock::new(),
            principal: OnceLock::new(),
        }),
    }
}

impl FiniteRing {
    pub fn id(&self) -> RingId {
        self.inner.id
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    /// Short human-readable construction description, e.g. `Z/4` or `A⋉M`.
    pub fn desc(&self) -> &str {
        &self.inner.desc
    }

    pub fn is_zero_ring(&self) -> bool {
        self.inner.size == 1
    }

    pub fn zero(&self) -> Elem {
        self.elem_idx(self.inner.zero)
    }

    pub fn one(&self) -> Elem {
        self.elem_idx(self.inner.one)
    }

    pub fn elem(&self, index: usize) -> Elem {
        assert!(index < self.inner.size, "element index out of range");
        self.elem_idx(index as u32)
    }

    pub(crate) fn elem_idx(&self, index: u32) -> Elem {
        Elem {
            ring: self.inner.id,
            index,
        }
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.inner.size as u32).map(move |i| self.elem_idx(i))
    }

    pub fn label(&self, e: Elem) -> &str {
        self.check_owned(e);
        &self.inner.labels[e.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn by_label(&self, label: &str) -> Option<Elem> {
        let lookup = self.inner.label_lookup.get_or_init(|| {
            self.inner
                .labels
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), i as u32))
                .collect()
        });
        lookup.get(label).map(|&i| self.elem_idx(i))
    }

    #[inline]
    fn check_owned(&self, e: Elem) {
        assert!(
            e.ring == self.inner.id,
            "element belongs to a different ring"
        );
    }

    #[inline]
    pub(crate) fn add_idx(&self, a: u32, b: u32) -> u32 {
        match &self.inner.add_table {
            Some(t) => t[a as usize * self.inner.size + b as usize],
            None => self.inner.recipe.add(a, b),
        }
    }

    #[inline]
    pub(crate) fn mul_idx(&self, a: u32, b: u32) -> u32 {
        match &self.inner.mul_table {
            Some(t) => t[a as usize * self.inner.size + b as usize],
            None => self.inner.recipe.mul(a, b),
        }
    }

    #[inline]
    pub(crate) fn neg_idx(&self, a: u32) -> u32 {
        self.inner.neg[a as usize]
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.check_owned(a);
        self.check_owned(b);
        self.elem_idx(self.add_idx(a.index, b.index))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.check_owned(a);
        self.check_owned(b);
        self.elem_idx(self.mul_idx(a.index, b.index))
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.check_owned(a);
        self.elem_idx(self.neg_idx(a.index))
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        self.check_owned(a);
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_zero(&self, e: Elem) -> bool {
        self.check_owned(e);
        e.index == self.inner.zero
    }

    pub fn is_one(&self, e: Elem) -> bool {
        self.check_owned(e);
        e.index == self.inner.one
    }

    fn unit_flags(&self) -> &[bool] {
        self.inner.units.get_or_init(|| {
            let n = self.inner.size as u32;
            (0..n)
                .map(|a| (0..n).any(|b| self.mul_idx(a, b) == self.inner.one))
                .collect()
        })
    }

    fn regular_flags(&self) -> &[bool] {
        self.inner.regular.get_or_init(|| {
            let n = self.inner.size as u32;
            (0..n)
                .map(|a| {
                    (0..n).all(|b| b == self.inner.zero || self.mul_idx(a, b) != self.inner.zero)
                })
                .collect()
        })
    }

    pub fn is_unit(&self, e: Elem) -> bool {
        self.check_owned(e);
        self.unit_flags()[e.index()]
    }

    /// True when the element has no nonzero annihilator.
    pub fn is_regular(&self, e: Elem) -> bool {
        self.check_owned(e);
        self.regular_flags()[e.index()]
    }

    pub fn units(&self) -> Vec<Elem> {
        self.unit_flags()
            .iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(i, _)| self.elem_idx(i as u32))
            .collect()
    }

    /// All elements with no nonzero annihilator, by brute-force scan.
    pub fn regular_elements(&self) -> Vec<Elem> {
        self.regular_flags()
            .iter()
            .enumerate()
            .filter(|(_, &r)| r)
            .map(|(i, _)| self.elem_idx(i as u32))
            .collect()
    }

    pub fn classify(&self, e: Elem) -> ElemClass {
        self.check_owned(e);
        if self.is_zero(e) {
            ElemClass::Zero
        } else if self.is_unit(e) {
            ElemClass::Unit
        } else {
            // in a finite commutative ring every non-unit is a zero-divisor
            debug_assert!(!self.is_regular(e));
            ElemClass::ZeroDivisor
        }
    }

    /// All e with e^2 = e, including 0 and 1.
    pub fn idempotents(&self) -> Vec<Elem> {
        (0..self.inner.size as u32)
            .filter(|&e| self.mul_idx(e, e) == e)
            .map(|e| self.elem_idx(e))
            .collect()
    }

    /// Additive order of 1.
    pub fn characteristic(&self) -> usize {
        let mut x = self.inner.one;
        let mut k = 1;
        while x != self.inner.zero {
            x = self.add_idx(x, self.inner.one);
            k += 1;
        }
        k
    }

    /// Principal ideal {r*x : r in R} of every element, cached per ring.
    pub(crate) fn principal_sets(&self) -> &[ElemSet] {
        self.inner.principal.get_or_init(|| {
            let n = self.inner.size as u32;
            (0..n)
                .map(|x| {
                    let mut s = ElemSet::new(self.inner.size);
                    for r in 0..n {
                        s.insert(self.mul_idx(r, x));
                    }
                    s
                })
                .collect()
        })
    }

    /// Exhaustively (size <= 64) or statistically (10,000 seeded triples)
    /// verifies the commutative-ring axioms.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.inner.size as u32;
        let zero = self.inner.zero;
        let one = self.inner.one;
        let fail = |law: &str, at: String| {
            Err(RingError::Internal(format!(
                "ring axiom `{law}` fails in {} at {at}",
                self.inner.desc
            )))
        };
        for a in 0..n {
            if self.add_idx(a, zero) != a {
                return fail("a+0=a", format!("a={a}"));
            }
            if self.mul_idx(a, one) != a {
                return fail("a*1=a", format!("a={a}"));
            }
            if self.add_idx(a, self.neg_idx(a)) != zero {
                return fail("a+(-a)=0", format!("a={a}"));
            }
        }
        let check_triple = |a: u32, b: u32, c: u32| -> Result<()> {
            if self.add_idx(a, b) != self.add_idx(b, a) {
                return fail("a+b=b+a", format!("a={a},b={b}"));
            }
            if self.mul_idx(a, b) != self.mul_idx(b, a) {
                return fail("ab=ba", format!("a={a},b={b}"));
            }
            if self.add_idx(self.add_idx(a, b), c) != self.add_idx(a, self.add_idx(b, c)) {
                return fail("(a+b)+c=a+(b+c)", format!("a={a},b={b},c={c}"));
            }
            if self.mul_idx(self.mul_idx(a, b), c) != self.mul_idx(a, self.mul_idx(b, c)) {
                return fail("(ab)c=a(bc)", format!("a={a},b={b},c={c}"));
            }
            if self.mul_idx(a, self.add_idx(b, c))
                != self.add_idx(self.mul_idx(a, b), self.mul_idx(a, c))
            {
                return fail("a(b+c)=ab+ac", format!("a={a},b={b},c={c}"));
            }
            Ok(())
        };
        if self.inner.size <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check_triple(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ self.inner.size as u64);
            for _ in 0..10_000 {
                check_triple(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    pub(crate) fn recipe(&self) -> &Recipe {
        &self.inner.recipe
    }

    /// For rings built as a subset of a host ring (subrings, idempotent
    /// factors), the host and the sorted host indices of the members.
    pub(crate) fn subset_parts(&self) -> Option<(&FiniteRing, &[u32])> {
        match &self.inner.recipe {
            Recipe::Subset { host, members, .. } => Some((host, members)),
            _ => None,
        }
    }

    /// Lifts an element of an idempotent-factor or subring back to its host
    /// ring; identity when the ring is not subset-based.
    pub fn lift_to_host(&self, e: Elem) -> Elem {
        self.check_owned(e);
        match self.subset_parts() {
            Some((host, members)) => host.elem(members[e.index()] as usize),
            None => e,
        }
    }

    /// Maps a host-ring element into this subset-based ring, when present.
    pub fn subset_from_host(&self, e: Elem) -> Option<Elem> {
        match &self.inner.recipe {
            Recipe::Subset { host, lookup, .. } => {
                assert!(e.ring_id() == host.id(), "element not in the host ring");
                lookup.get(&e.raw()).map(|&i| self.elem_idx(i))
            }
            _ => None,
        }
    }
}

/// A subset of `host` that is closed under the host operations, as a ring
/// of its own with the given identity element (`one_host` differs from the
/// host's identity for idempotent factor rings).
pub(crate) fn make_subset_ring(
    host: &FiniteRing,
    members: Vec<u32>,
    one_host: u32,
    desc: String,
) -> Result<FiniteRing> {
    debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
    let lookup: HashMap<u32, u32> = members
        .iter()
        .enumerate()
        .map(|(i, &h)| (h, i as u32))
        .collect();
    if !lookup.contains_key(&host.zero().raw()) {
        return Err(RingError::InvalidArgument(
            "subset ring must contain zero".into(),
        ));
    }
    let one = *lookup
        .get(&one_host)
        .ok_or_else(|| RingError::InvalidArgument("identity not in the subset".into()))?;
    for &x in &members {
        for &y in &members {
            if !lookup.contains_key(&host.add_idx(x, y)) {
                return Err(RingError::InvalidArgument(format!(
                    "subset not closed under addition at ({}, {})",
                    host.labels()[x as usize], host.labels()[y as usize]
                )));
            }
            if !lookup.contains_key(&host.mul_idx(x, y)) {
                return Err(RingError::InvalidArgument(format!(
                    "subset not closed under multiplication at ({}, {})",
                    host.labels()[x as usize], host.labels()[y as usize]
                )));
            }
        }
        if !lookup.contains_key(&host.neg_idx(x)) {
            return Err(RingError::InvalidArgument(
                "subset not closed under negation".into(),
            ));
        }
        // the subset identity must actually act as one on the subset
        if host.mul_idx(one_host, x) != x {
            return Err(RingError::InvalidArgument(format!(
                "designated identity does not fix {}",
                host.labels()[x as usize]
            )));
        }
    }
    let labels = members
        .iter()
        .map(|&h| host.labels()[h as usize].clone())
        .collect();
    let zero = lookup[&host.zero().raw()];
    Ok(build_ring(
        Recipe::Subset {
            host: host.clone(),
            members,
            lookup,
        },
        desc,
        labels,
        zero,
        one,
    ))
}

/// Z/nZ with elements labeled 0..n-1.
pub fn make_zmod(n: usize) -> Result<FiniteRing> {
    if n == 0 {
        return Err(RingError::InvalidArgument(
            "zmod modulus must be positive".into(),
        ));
    }
    check_cap(n)?;
    let labels = (0..n).map(|i| i.to_string()).collect();
    let one = if n == 1 { 0 } else { 1 };
    Ok(build_ring(
        Recipe::Zmod { n: n as u32 },
        format!("Z/{n}"),
        labels,
        0,
        one,
    ))
}

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// F_p[vars]/(x_i^{nilpotency_i}, extra monomial relations).
///
/// Each extra relation is an exponent vector over `vars`. Every variable
/// must carry a positive nilpotency bound, otherwise the quotient is
/// infinite and the constructor refuses.
pub fn make_monomial_quotient(
    p: usize,
    vars: &[&str],
    nilpotency: &[usize],
    extra_relations: &[Vec<usize>],
) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(RingError::InvalidArgument(format!(
            "coefficient modulus {p} is not prime"
        )));
    }
    if vars.len() != nilpotency.len() {
        return Err(RingError::InvalidArgument(
            "one nilpotency bound per variable is required".into(),
        ));
    }
    for (v, &b) in vars.iter().zip(nilpotency) {
        if b == 0 {
            return Err(RingError::InfiniteRing(format!(
                "variable {v} has no nilpotency relation"
            )));
        }
    }
    let mut seen = std::collections::HashSet::new();
    for v in vars {
        if !seen.insert(*v) {
            return Err(RingError::InvalidArgument(format!(
                "duplicate variable name {v}"
            )));
        }
    }
    for rel in extra_relations {
        if rel.len() != vars.len() {
            return Err(RingError::InvalidArgument(
                "relation exponent vector has wrong length".into(),
            ));
        }
    }

    // basis: exponent tuples below the nilpotency bounds and not divisible
    // by any extra relation, in graded order (x before y within a degree)
    let mut basis: Vec<Vec<usize>> = Vec::new();
    let mut tuple = vec![0usize; vars.len()];
    loop {
        let killed = extra_relations
            .iter()
            .any(|rel| rel.iter().zip(&tuple).all(|(r, e)| e >= r));
        if !killed {
            basis.push(tuple.clone());
        }
        // odometer over exponents
        let mut k = 0;
        loop {
            if k == vars.len() {
                break;
            }
            tuple[k] += 1;
            if tuple[k] < nilpotency[k] {
                break;
            }
            tuple[k] = 0;
            k += 1;
        }
        if k == vars.len() {
            break;
        }
    }
    // graded order, with earlier-listed variables first within a degree
    // (so F_2[x,y] gets the basis 1, x, y, xy)
    basis.sort_by(|a, b| {
        let da: usize = a.iter().sum();
        let db: usize = b.iter().sum();
        da.cmp(&db)
            .then_with(|| a.iter().rev().cmp(b.iter().rev()))
    });

    let mut size: usize = 1;
    for _ in &basis {
        size = size
            .checked_mul(p)
            .ok_or_else(|| RingError::SizeLimit {
                requested: usize::MAX,
                cap: element_cap(),
            })?;
        check_cap(size)?;
    }

    let basis_index: HashMap<Vec<usize>, u32> = basis
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i as u32))
        .collect();
    let blen = basis.len();
    let mut basis_prod = vec![None; blen * blen];
    for i in 0..blen {
        for j in 0..blen {
            let sum: Vec<usize> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
            let over = sum.iter().zip(nilpotency).any(|(e, b)| e >= b);
            let killed = extra_relations
                .iter()
                .any(|rel| rel.iter().zip(&sum).all(|(r, e)| e >= r));
            if !over && !killed {
                basis_prod[i * blen + j] = Some(basis_index[&sum]);
            }
        }
    }

    let monomial_label = |t: &[usize]| -> String {
        let parts: Vec<String> = vars
            .iter()
            .zip(t)
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        parts.join("*")
    };
    let mut labels = Vec::with_capacity(size);
    for idx in 0..size as u32 {
        let ds = digits(p as u32, blen, idx);
        let mut terms: Vec<String> = Vec::new();
        for (k, &c) in ds.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = monomial_label(&basis[k]);
            terms.push(match (c, mono.is_empty()) {
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
                (_, true) => c.to_string(),
            });
        }
        labels.push(if terms.is_empty() { "0".into() } else { terms.join("+") });
    }

    let rel_desc: Vec<String> = vars
        .iter()
        .zip(nilpotency)
        .map(|(v, b)| format!("{v}^{b}"))
        .chain(extra_relations.iter().map(|r| monomial_label(r)))
        .collect();
    let desc = format!("F_{p}[{}]/({})", vars.join(","), rel_desc.join(","));
    // element "1" has coefficient 1 on basis[0] = the empty monomial
    let one = if size == 1 { 0 } else { 1 };
    Ok(build_ring(
        Recipe::MonomialQuotient {
            p: p as u32,
            basis_len: blen,
            basis_prod,
        },
        desc,
        labels,
        0,
        one,
    ))
}

/// Componentwise ring structure on R1 x R2.
pub fn make_product(r1: &FiniteRing, r2: &FiniteRing) -> Result<FiniteRing> {
    let size = r1.size() * r2.size();
    check_cap(size)?;
    let mut labels = Vec::with_capacity(size);
    for a in 0..r1.size() {
        for b in 0..r2.size() {
            labels.push(format!("({},{})", r1.labels()[a], r2.labels()[b]));
        }
    }
    let rn = r2.size() as u32;
    let zero = 0;
    let one = r1.one().raw() * rn + r2.one().raw();
    Ok(build_ring(
        Recipe::Product {
            left: r1.clone(),
            right: r2.clone(),
        },
        format!("{}x{}", r1.desc(), r2.desc()),
        labels,
        zero,
        one,
    ))
}

/// Splits a product-ring element into its two components.
pub fn product_split(product: &FiniteRing, e: Elem) -> Result<(Elem, Elem)> {
    match product.recipe() {
        Recipe::Product { left, right } => {
            assert!(e.ring_id() == product.id(), "element of a different ring");
            let rn = right.size() as u32;
            Ok((left.elem_idx(e.raw() / rn), right.elem_idx(e.raw() % rn)))
        }
        _ => Err(RingError::InvalidArgument(
            "ring was not built by make_product".into(),
        )),
    }
}

/// Pairs two component elements into a product-ring element.
pub fn product_join(product: &FiniteRing, a: Elem, b: Elem) -> Result<Elem> {
    match product.recipe() {
        Recipe::Product { left, right } => {
            assert!(a.ring_id() == left.id() && b.ring_id() == right.id());
            Ok(product.elem_idx(a.raw() * right.size() as u32 + b.raw()))
        }
        _ => Err(RingError::InvalidArgument(
            "ring was not built by make_product".into(),
        )),
    }
}

/// Builds a ring from explicit operation tables, validating the axioms.
/// Intended for adversarial tests and isomorphic-copy construction.
pub fn from_tables(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Result<FiniteRing> {
    let n = add.len();
    if n == 0 || mul.len() != n || add.iter().chain(&mul).any(|row| row.len() != n) {
        return Err(RingError::InvalidArgument(
            "operation tables must be square and nonempty".into(),
        ));
    }
    check_cap(n)?;
    let flat = |t: &[Vec<usize>]| -> Result<Vec<u32>> {
        let mut out = Vec::with_capacity(n * n);
        for row in t {
            for &v in row {
                if v >= n {
                    return Err(RingError::InvalidArgument(
                        "table entry out of range".into(),
                    ));
                }
                out.push(v as u32);
            }
        }
        Ok(out)
    };
    let addf = flat(&add)?;
    let mulf = flat(&mul)?;
    let zero = (0..n as u32)
        .find(|&z| (0..n as u32).all(|x| addf[z as usize * n + x as usize] == x))
        .ok_or_else(|| RingError::InvalidArgument("no additive identity in table".into()))?;
    let one = (0..n as u32)
        .find(|&o| (0..n as u32).all(|x| mulf[o as usize * n + x as usize] == x))
        .ok_or_else(|| RingError::InvalidArgument("no multiplicative identity in table".into()))?;
    let labels = (0..n).map(|i| format!("t{i}")).collect();
    let ring = build_ring(
        Recipe::Table {
            add: addf,
            mul: mulf,
            size: n,
        },
        format!("table({n})"),
        labels,
        zero,
        one,
    );
    ring.verify_axioms()?;
    Ok(ring)
}
