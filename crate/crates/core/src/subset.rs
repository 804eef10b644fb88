//! Subsets of a finite universe, stored as a single 64-bit mask.

use std::fmt;

use crate::error::{Error, Result};

/// Largest universe a [`SubsetOfV`] (and therefore every relation row) can
/// address.
pub const MAX_UNIVERSE: usize = 64;

#[inline]
pub(crate) fn full_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// A subset X ⊆ V. Bit `i` is set iff element `i` is a member.
///
/// Ordering (`Ord`) is by universe size, then by the numeric mask, which is
/// the canonical subset order used for minimal counterexamples.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetOfV {
    len: usize,
    bits: u64,
}

impl SubsetOfV {
    pub fn empty(len: usize) -> Self {
        debug_assert!(len <= MAX_UNIVERSE);
        SubsetOfV { len, bits: 0 }
    }

    pub fn full(len: usize) -> Self {
        debug_assert!(len <= MAX_UNIVERSE);
        SubsetOfV { len, bits: full_mask(len) }
    }

    /// Builds a subset from a raw mask; bits at or above `len` are rejected.
    pub fn from_bits(len: usize, bits: u64) -> Result<Self> {
        if len > MAX_UNIVERSE {
            return Err(Error::Capacity { requested: len, bound: MAX_UNIVERSE });
        }
        if bits & !full_mask(len) != 0 {
            let index = 63 - (bits & !full_mask(len)).leading_zeros() as usize;
            return Err(Error::OutOfRange { index, size: len });
        }
        Ok(SubsetOfV { len, bits })
    }

    /// Caller guarantees `bits` fits in `len`.
    #[inline]
    pub(crate) fn from_bits_unchecked(len: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !full_mask(len), 0);
        SubsetOfV { len, bits }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Result<Self> {
        if len > MAX_UNIVERSE {
            return Err(Error::Capacity { requested: len, bound: MAX_UNIVERSE });
        }
        let mut bits = 0u64;
        for i in indices {
            if i >= len {
                return Err(Error::OutOfRange { index: i, size: len });
            }
            bits |= 1 << i;
        }
        Ok(SubsetOfV { len, bits })
    }

    pub fn singleton(len: usize, x: usize) -> Result<Self> {
        Self::from_indices(len, [x])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    /// Number of members.
    #[inline]
    pub fn count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.len)
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.len && self.bits >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(x < self.len, "element {x} outside universe of size {}", self.len);
        self.bits |= 1 << x;
    }

    #[inline]
    pub fn complement(&self) -> Self {
        SubsetOfV { len: self.len, bits: !self.bits & full_mask(self.len) }
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        SubsetOfV { len: self.len, bits: self.bits | other.bits }
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        SubsetOfV { len: self.len, bits: self.bits & other.bits }
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.bits & other.bits != 0
    }

    /// Ascending member indices.
    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    /// All 2^len subsets in ascending mask order.
    pub fn all(len: usize) -> AllSubsets {
        debug_assert!(len < 64, "enumerating 2^{len} subsets is not meaningful");
        AllSubsets { len, next: 0, end: 1u64 << len }
    }
}

impl fmt::Debug for SubsetOfV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for SubsetOfV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i)
    }
}

pub struct AllSubsets {
    len: usize,
    next: u64,
    end: u64,
}

impl Iterator for AllSubsets {
    type Item = SubsetOfV;

    fn next(&mut self) -> Option<SubsetOfV> {
        if self.next >= self.end {
            return None;
        }
        let s = SubsetOfV { len: self.len, bits: self.next };
        self.next += 1;
        Some(s)
    }
}
