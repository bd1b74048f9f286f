use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest edge count representable by an [`EdgeSet`].
pub const MAX_EDGES: usize = 64;

/// A subset of the edges `0..m` of a graph, stored as a bitmask (bit `i` is edge `i`).
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    /// All edges `0..m`.
    pub fn full(m: usize) -> EdgeSet {
        assert!(m <= MAX_EDGES, "edge sets hold at most {MAX_EDGES} edges");
        if m == 64 {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << m) - 1)
        }
    }

    pub fn singleton(e: usize) -> EdgeSet {
        EdgeSet(1u64 << e)
    }

    pub fn from_edges<I: IntoIterator<Item = usize>>(edges: I) -> EdgeSet {
        let mut s = EdgeSet::EMPTY;
        for e in edges {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        (self.0 >> e) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    #[inline]
    pub fn toggle(&mut self, e: usize) {
        self.0 ^= 1u64 << e;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn xor(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    /// Parity of the number of edges in the set.
    pub fn parity(self) -> bool {
        self.0.count_ones() & 1 == 1
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Binary string of width `m`, most significant edge first (edge 0 is the last character).
    pub fn to_bitstring(self, m: usize) -> String {
        (0..m)
            .rev()
            .map(|e| if self.contains(e) { '1' } else { '0' })
            .collect()
    }

    /// Inverse of [`EdgeSet::to_bitstring`].
    pub fn parse_bitstring(s: &str) -> Option<EdgeSet> {
        let s = s.trim();
        if s.len() > MAX_EDGES {
            return None;
        }
        let mut out = EdgeSet::EMPTY;
        for (i, c) in s.chars().rev().enumerate() {
            match c {
                '1' => out.insert(i),
                '0' => {}
                _ => return None,
            }
        }
        Some(out)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitstring_lsb_is_edge_zero() {
        let s = EdgeSet::from_edges([0, 2]);
        assert_eq!(s.to_bitstring(4), "0101");
        assert_eq!(EdgeSet::parse_bitstring("0101"), Some(s));
        assert_eq!(EdgeSet::parse_bitstring("01x1"), None);
    }

    #[test]
    fn iter_is_increasing() {
        let s = EdgeSet::from_edges([5, 1, 63, 0]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 1, 5, 63]);
        assert_eq!(EdgeSet::full(64).len(), 64);
    }
}
