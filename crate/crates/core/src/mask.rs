//! Characteristic vectors over the positive roots.
//!
//! A [`RootMask`] is a set of positive-root positions `0..N` packed into a
//! `u128`, which covers every finite type up to `E_8` (120 positive roots).
//! The same mask is used for subsets of `Φ⁻`: bit `k` then stands for the
//! negative root `-γ_k`. Inversion sets `N(w)` and `N⁻(w) = -N(w)` therefore
//! share one mask.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RootMask(pub u128);

impl RootMask {
    pub const EMPTY: RootMask = RootMask(0);

    /// The first `n` positions.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 128);
        if n == 128 {
            RootMask(u128::MAX)
        } else {
            RootMask((1u128 << n) - 1)
        }
    }

    pub fn singleton(k: usize) -> Self {
        RootMask(1u128 << k)
    }

    #[inline]
    pub fn contains(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, k: usize) {
        self.0 |= 1u128 << k;
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
    pub fn is_subset(self, other: RootMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersection(self, other: RootMask) -> RootMask {
        RootMask(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: RootMask) -> RootMask {
        RootMask(self.0 | other.0)
    }

    /// `self − other`.
    #[inline]
    pub fn difference(self, other: RootMask) -> RootMask {
        RootMask(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let k = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(k)
            }
        })
    }

    /// Scatters the low `members.len()` bits of `dense` onto the listed
    /// positions. Used to walk all subsets of a sparse ground set.
    pub fn deposit(dense: u64, members: &[usize]) -> RootMask {
        let mut out = RootMask::EMPTY;
        for (bit, &k) in members.iter().enumerate() {
            if dense >> bit & 1 == 1 {
                out.insert(k);
            }
        }
        out
    }
}

impl FromIterator<usize> for RootMask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut m = RootMask::EMPTY;
        for k in iter {
            m.insert(k);
        }
        m
    }
}

/// Canonical order: by cardinality, then lexicographically on the
/// increasing list of members.
impl Ord for RootMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for RootMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RootMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_iter() {
        assert_eq!(RootMask::full(0), RootMask::EMPTY);
        assert_eq!(RootMask::full(3).iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(RootMask::full(128).len(), 128);
        assert_eq!(RootMask::full(120).iter().last(), Some(119));
    }

    #[test]
    fn canonical_order() {
        let a: RootMask = [0, 5].into_iter().collect();
        let b: RootMask = [1, 2].into_iter().collect();
        let c: RootMask = [3].into_iter().collect();
        let mut v = vec![b, a, c, RootMask::EMPTY];
        v.sort();
        assert_eq!(v, vec![RootMask::EMPTY, c, a, b]);
    }

    #[test]
    fn deposit_scatters_bits() {
        let m = RootMask::deposit(0b101, &[2, 7, 9]);
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![2, 9]);
    }

    proptest! {
        #[test]
        fn set_algebra(a in any::<u128>(), b in any::<u128>()) {
            let (a, b) = (RootMask(a), RootMask(b));
            prop_assert_eq!(a.difference(b).len() + a.intersection(b).len(), a.len());
            prop_assert!(a.intersection(b).is_subset(a));
            prop_assert!(a.is_subset(a.union(b)));
            prop_assert_eq!(a.iter().collect::<RootMask>(), a);
        }
    }
}
