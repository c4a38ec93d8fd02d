//! Fixed-width bitset over root indices (up to 256 roots, enough for E8).

use std::cmp::Ordering;
use std::fmt;

use crate::weyl::Perm;

pub const MAX_ROOTS: usize = 256;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RootSet([u64; 4]);

impl RootSet {
    pub fn new() -> Self {
        RootSet([0; 4])
    }

    pub fn from_indices(idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = RootSet::new();
        for i in idx {
            s.insert(i);
        }
        s
    }

    pub fn full(n: usize) -> Self {
        Self::from_indices(0..n)
    }

    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < MAX_ROOTS, "root index {i} out of range");
        let (w, b) = (i / 64, i % 64);
        let was = self.0[w] >> b & 1 == 1;
        self.0[w] |= 1 << b;
        !was
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < MAX_ROOTS && self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        let mut r = *self;
        for k in 0..4 {
            r.0[k] |= other.0[k];
        }
        r
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        let mut r = *self;
        for k in 0..4 {
            r.0[k] &= other.0[k];
        }
        r
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        let mut r = *self;
        for k in 0..4 {
            r.0[k] &= !other.0[k];
        }
        r
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        (0..4).all(|k| self.0[k] & !other.0[k] == 0)
    }

    pub fn intersects(&self, other: &RootSet) -> bool {
        (0..4).any(|k| self.0[k] & other.0[k] != 0)
    }

    pub fn image(&self, w: &Perm) -> RootSet {
        RootSet::from_indices(self.iter().map(|i| w.apply(i)))
    }

    fn lowest_difference(&self, other: &RootSet) -> Option<usize> {
        (0..4).find_map(|k| {
            let x = self.0[k] ^ other.0[k];
            (x != 0).then(|| k * 64 + x.trailing_zeros() as usize)
        })
    }

    fn has_element_above(&self, d: usize) -> bool {
        let mut s = *self;
        for i in 0..=d.min(MAX_ROOTS - 1) {
            s.remove(i);
        }
        !s.is_empty()
    }
}

/// Lexicographic order of the sorted index lists.
impl Ord for RootSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let Some(d) = self.lowest_difference(other) else {
            return Ordering::Equal;
        };
        if self.contains(d) {
            if other.has_element_above(d) {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.has_element_above(d) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for RootSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
