//! Fixed-width bitsets over vertex indices.
//!
//! The whole solver works on sets of vertices represented as machine words,
//! so every set operation is a handful of bitwise instructions. `u64` covers
//! graphs up to 64 vertices (the default), `u128` up to 128.

use core::fmt;
use core::hash::Hash;
use core::ops::{BitAnd, BitOr, BitXor, Not};

/// Machine word backing a [`VertexSet`].
pub trait Word:
    Copy
    + Eq
    + Ord
    + Hash
    + BitAnd<Output = Self>
    + BitOr<Output = Self>
    + BitXor<Output = Self>
    + Not<Output = Self>
    + 'static
{
    const BITS: u32;
    const ZERO: Self;

    fn bit(i: u32) -> Self;
    fn low_mask(n: u32) -> Self;
    fn count_ones(self) -> u32;
    fn trailing_zeros(self) -> u32;
    /// Mixes the word into a 64-bit hash, used by the fixed-size memo table.
    fn mix64(self) -> u64;
}

macro_rules! impl_word {
    ($t:ty) => {
        impl Word for $t {
            const BITS: u32 = <$t>::BITS;
            const ZERO: Self = 0;

            #[inline]
            fn bit(i: u32) -> Self {
                1 << i
            }

            #[inline]
            fn low_mask(n: u32) -> Self {
                if n >= <$t>::BITS {
                    !0
                } else {
                    (1 << n) - 1
                }
            }

            #[inline]
            fn count_ones(self) -> u32 {
                <$t>::count_ones(self)
            }

            #[inline]
            fn trailing_zeros(self) -> u32 {
                <$t>::trailing_zeros(self)
            }

            #[inline]
            fn mix64(self) -> u64 {
                // splitmix64 over the folded word
                let mut x = (self as u64) ^ ((self as u128 >> 64) as u64);
                x = x.wrapping_add(0x9e3779b97f4a7c15);
                x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
                x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
                x ^ (x >> 31)
            }
        }
    };
}

impl_word!(u64);
impl_word!(u128);

/// A 0-based vertex index, valid for the graph it refers to.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i)
    }
}

/// A set of vertices as a fixed-width bit vector.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet<W: Word>(pub W);

impl<W: Word> VertexSet<W> {
    pub const EMPTY: Self = VertexSet(W::ZERO);

    #[inline]
    pub fn empty() -> Self {
        VertexSet(W::ZERO)
    }

    /// The full set {0, .., n-1}.
    #[inline]
    pub fn full(n: usize) -> Self {
        VertexSet(W::low_mask(n as u32))
    }

    #[inline]
    pub fn singleton(v: VertexId) -> Self {
        VertexSet(W::bit(v.0 as u32))
    }

    #[inline]
    pub fn contains(self, v: VertexId) -> bool {
        self.0 & W::bit(v.0 as u32) != W::ZERO
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        self.0 = self.0 | W::bit(v.0 as u32);
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        self.0 = self.0 & !W::bit(v.0 as u32);
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == W::ZERO
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == W::ZERO
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<VertexId> {
        if self.is_empty() {
            None
        } else {
            Some(VertexId(self.0.trailing_zeros() as usize))
        }
    }

    /// Iterates members in increasing index order.
    #[inline]
    pub fn iter(self) -> SetIter<W> {
        SetIter(self.0)
    }
}

impl<W: Word> FromIterator<VertexId> for VertexSet<W> {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<W: Word> fmt::Debug for VertexSet<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SetIter<W: Word>(W);

impl<W: Word> Iterator for SetIter<W> {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        if self.0 == W::ZERO {
            None
        } else {
            let i = self.0.trailing_zeros();
            self.0 = self.0 & !W::bit(i);
            Some(VertexId(i as usize))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s: VertexSet<u64> = VertexSet::empty();
        s.insert(VertexId(0));
        s.insert(VertexId(5));
        assert!(s.contains(VertexId(5)));
        assert!(!s.contains(VertexId(1)));
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<alloc::vec::Vec<_>>(), [VertexId(0), VertexId(5)]);
        s.remove(VertexId(0));
        assert_eq!(s.first(), Some(VertexId(5)));
    }

    #[test]
    fn full_and_masks() {
        assert_eq!(VertexSet::<u64>::full(64).len(), 64);
        assert_eq!(VertexSet::<u128>::full(128).len(), 128);
        assert_eq!(VertexSet::<u64>::full(3), [0, 1, 2].map(VertexId).into_iter().collect());
    }

    #[test]
    fn subset_and_difference() {
        let a: VertexSet<u64> = [0, 1, 2].map(VertexId).into_iter().collect();
        let b: VertexSet<u64> = [1, 2].map(VertexId).into_iter().collect();
        assert!(b.is_subset(a));
        assert!(!a.is_subset(b));
        assert_eq!(a.difference(b), VertexSet::singleton(VertexId(0)));
    }
}
