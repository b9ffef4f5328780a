//! Fixed-capacity vertex sets over the 1-based index space `[1, capacity]`.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of `[1, capacity]` stored as a bit vector.
///
/// The capacity is fixed when the set is created; all binary operations
/// require both operands to share it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    capacity: u32,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(capacity: u32) -> Self {
        let n = (capacity as usize).div_ceil(WORD);
        VertexSet {
            capacity,
            words: vec![0; n],
        }
    }

    pub fn full(capacity: u32) -> Self {
        let mut s = Self::empty(capacity);
        for id in 1..=capacity {
            s.insert(id);
        }
        s
    }

    /// Builds a set from 1-based ids, rejecting ids outside `[1, capacity]`.
    pub fn from_ids<I: IntoIterator<Item = u32>>(capacity: u32, ids: I) -> Result<Self> {
        let mut s = Self::empty(capacity);
        for id in ids {
            if id == 0 || id > capacity {
                return Err(Error::input(format!(
                    "vertex {id} outside [1, {capacity}]"
                )));
            }
            s.insert(id);
        }
        Ok(s)
    }

    /// Interprets bit `j` of `mask` as membership of `positions[j]`.
    pub fn from_mask(capacity: u32, positions: &[u32], mask: u64) -> Self {
        let mut s = Self::empty(capacity);
        let mut m = mask;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            s.insert(positions[j]);
            m &= m - 1;
        }
        s
    }

    pub fn capacity(&self) -> u32 {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, id: u32) -> bool {
        if id == 0 || id > self.capacity {
            return false;
        }
        let b = (id - 1) as usize;
        self.words[b / WORD] >> (b % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, id: u32) {
        debug_assert!(id >= 1 && id <= self.capacity);
        let b = (id - 1) as usize;
        self.words[b / WORD] |= 1 << (b % WORD);
    }

    #[inline]
    pub fn remove(&mut self, id: u32) {
        if id == 0 || id > self.capacity {
            return;
        }
        let b = (id - 1) as usize;
        self.words[b / WORD] &= !(1 << (b % WORD));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ascending ids.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some((wi * WORD + t + 1) as u32)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<u32> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn contains_all(&self, ids: &[u32]) -> bool {
        ids.iter().all(|&v| self.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(
            self.capacity, other.capacity,
            "vertex sets over different index spaces"
        );
        VertexSet {
            capacity: self.capacity,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
