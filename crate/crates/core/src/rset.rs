//! Sorted vertex subsets and the colexicographic order on them.
//!
//! An [`RSet`] is a strictly increasing list of 1-based vertex labels. Sets of
//! equal size are ordered colexicographically: `A < B` iff the largest element
//! of the symmetric difference lies in `B`. For sorted sets this is the same as
//! comparing the element lists from the back, which is what [`Ord`] does.
//!
//! The colex order on `N^(r)` is a well order with a closed-form ranking through
//! the combinatorial number system: `rank(a) = 1 + sum_s C(a_s - 1, s)`.

use std::cmp::Ordering;
use std::fmt;

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A strictly increasing set of 1-based vertex labels.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct RSet(Box<[u32]>);

impl RSet {
    /// Builds a set from labels that are already strictly increasing.
    pub fn new(elements: impl Into<Vec<u32>>) -> Result<Self> {
        let elements = elements.into();
        if elements.is_empty() {
            return Err(Error::InvalidRSet {
                elements,
                reason: "must contain at least one element",
            });
        }
        if elements[0] == 0 {
            return Err(Error::InvalidRSet {
                elements,
                reason: "vertex labels start at 1",
            });
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidRSet {
                elements,
                reason: "elements must be strictly increasing",
            });
        }
        Ok(RSet(elements.into_boxed_slice()))
    }

    /// Sorts the labels first; duplicates are still rejected.
    pub fn from_unsorted(elements: impl Into<Vec<u32>>) -> Result<Self> {
        let mut elements = elements.into();
        elements.sort_unstable();
        Self::new(elements)
    }

    /// `{1, 2, ..., r}`, the colex-first r-set.
    pub fn initial(r: usize) -> Self {
        RSet((1..=r as u32).collect())
    }

    // Callers guarantee the invariants.
    pub(crate) fn from_sorted_unchecked(elements: Vec<u32>) -> Self {
        debug_assert!(elements.first().is_some_and(|&e| e >= 1));
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        RSet(elements.into_boxed_slice())
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn max(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    pub fn min(&self) -> u32 {
        self.0[0]
    }

    pub fn contains(&self, vertex: u32) -> bool {
        self.0.binary_search(&vertex).is_ok()
    }

    pub fn coordinate_sum(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// 1-based position in the colex order of `N^(r)`.
    pub fn colex_rank(&self) -> u64 {
        1 + self
            .0
            .iter()
            .enumerate()
            .map(|(s, &a)| binomial((a - 1) as u64, s as u64 + 1))
            .sum::<u64>()
    }

    /// Inverse of [`RSet::colex_rank`].
    pub fn colex_unrank(rank: u64, r: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParameters("colex ranks start at 1".into()));
        }
        if r == 0 {
            return Err(Error::InvalidParameters("r must be positive".into()));
        }
        let mut remaining = rank - 1;
        let mut elements = vec![0u32; r];
        for s in (1..=r).rev() {
            // largest c with C(c, s) <= remaining; c >= s - 1 always qualifies
            let mut c = (s - 1) as u64;
            while binomial(c + 1, s as u64) <= remaining {
                c += 1;
            }
            remaining -= binomial(c, s as u64);
            elements[s - 1] = (c + 1) as u32;
        }
        Ok(RSet::from_sorted_unchecked(elements))
    }

    /// Colex comparison that refuses sets of different sizes.
    pub fn colex_cmp(&self, other: &RSet) -> Result<Ordering> {
        if self.r() != other.r() {
            return Err(Error::UniformityMismatch {
                expected: self.r(),
                found: other.r(),
            });
        }
        Ok(self.0.iter().rev().cmp(other.0.iter().rev()))
    }

    /// Coordinatewise `self_s <= other_s`.
    pub fn is_dominated_by(&self, other: &RSet) -> bool {
        self.r() == other.r() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Strictly below `other` in the descendant order.
    pub fn is_descendant_of(&self, other: &RSet) -> bool {
        self.is_dominated_by(other) && self.coordinate_sum() < other.coordinate_sum()
    }

    /// All descendants in colex order, or only the direct ones (coordinate sum
    /// exactly one less).
    pub fn descendants(&self, direct_only: bool) -> Vec<RSet> {
        let mut out = if direct_only {
            self.direct_descendants()
        } else {
            let mut out = Vec::new();
            let mut prefix = Vec::with_capacity(self.r());
            collect_dominated(&self.0, &mut prefix, &mut out);
            out.retain(|d| d != self);
            out
        };
        out.sort();
        out
    }

    fn direct_descendants(&self) -> Vec<RSet> {
        let mut out = Vec::new();
        for s in 0..self.r() {
            let floor = if s == 0 { 0 } else { self.0[s - 1] };
            if self.0[s] - 1 > floor {
                let mut d = self.0.to_vec();
                d[s] -= 1;
                out.push(RSet::from_sorted_unchecked(d));
            }
        }
        out
    }

    /// Sets obtained by raising one coordinate by one, staying inside `[n]`.
    pub fn direct_ancestors(&self, n: u32) -> Vec<RSet> {
        let mut out = Vec::new();
        for s in 0..self.r() {
            let ceiling = if s + 1 < self.r() { self.0[s + 1] } else { n + 1 };
            if self.0[s] + 1 < ceiling {
                let mut a = self.0.to_vec();
                a[s] += 1;
                out.push(RSet::from_sorted_unchecked(a));
            }
        }
        out.sort();
        out
    }
}

fn collect_dominated(bound: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<RSet>) {
    let s = prefix.len();
    if s == bound.len() {
        out.push(RSet::from_sorted_unchecked(prefix.clone()));
        return;
    }
    let lo = prefix.last().map_or(1, |&p| p + 1);
    for v in lo..=bound[s] {
        prefix.push(v);
        collect_dominated(bound, prefix, out);
        prefix.pop();
    }
}

/// Colex comparison of two r-sets.
pub fn colex_compare(a: &RSet, b: &RSet) -> Result<Ordering> {
    a.colex_cmp(b)
}

impl Ord for RSet {
    /// Colex order; sets of different sizes compare by size first so that the
    /// order stays total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.r()
            .cmp(&other.r())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for RSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl TryFrom<Vec<u32>> for RSet {
    type Error = Error;

    fn try_from(value: Vec<u32>) -> Result<Self> {
        RSet::new(value)
    }
}

impl From<RSet> for Vec<u32> {
    fn from(value: RSet) -> Self {
        value.0.into_vec()
    }
}
