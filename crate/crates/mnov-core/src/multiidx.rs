//! Finitely supported maps `K -> ℕ`.
//!
//! One data structure covers commutative monomials in formal variables,
//! commutative letter words, exponent vectors and multiset decorations.
//! Zero values are never stored, so structural equality is equality of the
//! supported part, and the derived ordering is deterministic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::iter;

/// Multi-index over `K`: a finitely supported map `K -> ℕ`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiIdx<K: Ord>(BTreeMap<K, u32>);

impl<K: Ord> Default for MultiIdx<K> {
    fn default() -> Self {
        MultiIdx(BTreeMap::new())
    }
}

impl<K: Ord + Clone> MultiIdx<K> {
    /// The empty multi-index (unit monomial).
    pub fn new() -> Self {
        Self::default()
    }

    /// Single key with multiplicity one.
    pub fn single(key: K) -> Self {
        Self::with(key, 1)
    }

    /// Single key with the given multiplicity.
    pub fn with(key: K, count: u32) -> Self {
        let mut m = Self::new();
        m.add(key, count);
        m
    }

    pub fn from_entries<I: IntoIterator<Item = (K, u32)>>(entries: I) -> Self {
        let mut m = Self::new();
        for (k, c) in entries {
            m.add(k, c);
        }
        m
    }

    /// Multiplicities collected from an iterator of keys.
    pub fn from_keys<I: IntoIterator<Item = K>>(keys: I) -> Self {
        Self::from_entries(keys.into_iter().map(|k| (k, 1)))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, key: &K) -> u32 {
        self.0.get(key).copied().unwrap_or(0)
    }

    /// Number of distinct keys.
    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn add(&mut self, key: K, count: u32) {
        if count == 0 {
            return;
        }
        *self.0.entry(key).or_insert(0) += count;
    }

    /// Removes one occurrence of `key`; `None` if it is not present.
    pub fn removed_one(&self, key: &K) -> Option<Self> {
        let c = self.0.get(key)?;
        let mut m = self.clone();
        if *c == 1 {
            m.0.remove(key);
        } else {
            *m.0.get_mut(key).unwrap() -= 1;
        }
        Some(m)
    }

    /// Adds one occurrence of `key`.
    pub fn added_one(&self, key: K) -> Self {
        let mut m = self.clone();
        m.add(key, 1);
        m
    }

    /// Pointwise sum; multiplication of the underlying monomials.
    pub fn sum(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for (k, c) in other.iter() {
            m.add(k.clone(), c);
        }
        m
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, u32)> {
        self.0.iter().map(|(k, c)| (k, *c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.0.keys()
    }

    /// Keys repeated according to their multiplicity, in key order.
    pub fn expanded(&self) -> impl Iterator<Item = &K> {
        self.0
            .iter()
            .flat_map(|(k, c)| iter::repeat(k).take(*c as usize))
    }

    pub fn to_entries(&self) -> Vec<(K, u32)> {
        self.0.iter().map(|(k, c)| (k.clone(), *c)).collect()
    }
}

impl<K: Ord + Clone> FromIterator<(K, u32)> for MultiIdx<K> {
    fn from_iter<I: IntoIterator<Item = (K, u32)>>(iter: I) -> Self {
        Self::from_entries(iter)
    }
}
