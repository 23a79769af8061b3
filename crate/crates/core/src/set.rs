use std::cmp::Ordering;
use std::fmt;

/// Dense bitset over the element indices of one ring.
///
/// All ideal and multiplicative-set machinery works on these; the universe
/// size is fixed at creation and always equals the owning ring's size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
    len: usize,
}

impl ElemSet {
    pub fn new(universe: usize) -> Self {
        ElemSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = ElemSet::new(universe);
        for i in 0..universe {
            s.insert(i as u32);
        }
        s
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = u32>) -> Self {
        let mut s = ElemSet::new(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len == self.universe
    }

    /// Inserts an index, returning true when it was not already present.
    pub fn insert(&mut self, idx: u32) -> bool {
        let i = idx as usize;
        debug_assert!(i < self.universe);
        let (w, b) = (i / 64, i % 64);
        let mask = 1u64 << b;
        if self.words[w] & mask == 0 {
            self.words[w] |= mask;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn contains(&self, idx: u32) -> bool {
        let i = idx as usize;
        i < self.universe && self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros();
                    word &= word - 1;
                    Some((w * 64) as u32 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.universe, other.universe);
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        ElemSet {
            universe: self.universe,
            words,
            len,
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.universe, other.universe);
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        ElemSet {
            universe: self.universe,
            words,
            len,
        }
    }

    /// Canonical order: by size first, then by the sorted index sequence.
    pub fn canonical_cmp(&self, other: &ElemSet) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_roundtrip() {
        let mut s = ElemSet::new(130);
        for i in [0u32, 5, 63, 64, 129] {
            assert!(s.insert(i));
            assert!(!s.insert(i));
        }
        assert_eq!(s.to_vec(), vec![0, 5, 63, 64, 129]);
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn subset_and_canonical_order() {
        let a = ElemSet::from_indices(8, [0, 2]);
        let b = ElemSet::from_indices(8, [0, 2, 4]);
        let c = ElemSet::from_indices(8, [0, 3]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
        assert_eq!(a.canonical_cmp(&c), Ordering::Less);
        assert_eq!(c.canonical_cmp(&c.clone()), Ordering::Equal);
    }
}
