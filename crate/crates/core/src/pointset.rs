//! Fixed-width point sets.
//!
//! Every subset handled by the crate is a set of point *indices* into some
//! space's point list. Ambient spaces hold at most [`MAX_POINTS`] points, but
//! products and disjoint unions can reach [`CAPACITY`], so the set is a
//! 256-bit vector.

use core::cmp::Ordering;
use core::fmt;

/// Largest number of points any constructed space may carry.
pub const CAPACITY: usize = 256;

const WORDS: usize = CAPACITY / 64;

/// A subset of `0..CAPACITY`.
///
/// The total order compares the bit encodings as unsigned integers, so
/// `{0} < {1} < {0,1} < {2}`. This is the "lexicographic order on the bit
/// encoding" used wherever a deterministic choice between sets is needed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSet([u64; WORDS]);

impl PointSet {
    pub const EMPTY: PointSet = PointSet([0; WORDS]);

    /// `{0, 1, …, n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= CAPACITY, "point set of {n} points exceeds capacity");
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        PointSet(words)
    }

    pub fn singleton(x: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(x);
        s
    }

    /// Builds a set from the low bits of `bits` (used by exhaustive
    /// enumeration over small spaces).
    pub fn from_bits(bits: u64) -> Self {
        let mut words = [0u64; WORDS];
        words[0] = bits;
        PointSet(words)
    }

    /// The low 64 bits; exact whenever every member is below 64.
    pub fn low_bits(&self) -> u64 {
        self.0[0]
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < CAPACITY && self.0[x / 64] >> (x % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(x < CAPACITY, "point index {x} exceeds capacity");
        self.0[x / 64] |= 1 << (x % 64);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        if x < CAPACITY {
            self.0[x / 64] &= !(1 << (x % 64));
        }
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= !b;
        }
        out
    }

    /// Complement relative to `{0, …, n-1}`.
    #[inline]
    pub fn complement(&self, n: usize) -> Self {
        PointSet::full(n).difference(self)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|w| *w == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter {
        Iter { words: self.0, word: 0 }
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}
