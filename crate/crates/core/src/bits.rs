//! Fixed-width 128-bit sets. Every positive root system handled here has at
//! most 120 positive roots, so one word covers both root subsets and ideals of
//! any weight poset.

use std::fmt;

pub const CAPACITY: usize = 128;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mask(pub u128);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    /// The set `{0, 1, …, n-1}`.
    pub fn full(n: usize) -> Mask {
        assert!(n <= CAPACITY, "mask width {n} exceeds {CAPACITY}");
        if n == CAPACITY {
            Mask(u128::MAX)
        } else {
            Mask((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Mask {
        Mask(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Mask {
        it.into_iter().fold(Mask::EMPTY, |m, i| m.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    #[inline]
    pub fn with(self, i: usize) -> Mask {
        Mask(self.0 | (1u128 << i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Mask) -> Mask {
        Mask(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Mask) -> Mask {
        Mask(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Mask) -> Mask {
        Mask(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> MaskIter {
        MaskIter(self.0)
    }
}

pub struct MaskIter(u128);

impl Iterator for MaskIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = Mask::from_indices([0, 3, 127]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(127));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 3, 127]);
        assert_eq!(Mask::full(128).len(), 128);
        assert!(Mask::singleton(3).is_subset(a));
        assert_eq!(a.difference(Mask::full(4)), Mask::singleton(127));
    }
}
