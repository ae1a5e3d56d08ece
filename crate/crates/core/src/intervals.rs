//! Exact sets of diagonal twists at which a cohomology group is nonzero.
//!
//! For a summand `O(a)` and a subset `S` of factors with `sum_{i in S} n_i = t`,
//! the group `H^t(O(a + j + tau(1,...,1)))` is nonzero exactly when
//! `a_i + j_i + tau >= 0` off `S` and `a_i + j_i + tau <= -n_i - 1` on `S`,
//! which is an integer interval in `tau`. The union over summands and subsets
//! is the full nonvanishing set, so "for all integers tau" becomes a finite check.

use std::fmt;

use serde::Serialize;

use crate::bundle::{LineBundleSum, MultiDegree};
use crate::error::Result;

/// A closed integer interval; `None` endpoints are infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwistInterval {
    pub lo: Option<i128>,
    pub hi: Option<i128>,
}

impl TwistInterval {
    pub fn bounded(lo: i128, hi: i128) -> Self {
        TwistInterval { lo: Some(lo), hi: Some(hi) }
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_some() && self.hi.is_some()
    }

    pub fn contains(&self, tau: i128) -> bool {
        self.lo.is_none_or(|lo| lo <= tau) && self.hi.is_none_or(|hi| tau <= hi)
    }

    fn is_empty(&self) -> bool {
        matches!((self.lo, self.hi), (Some(lo), Some(hi)) if lo > hi)
    }
}

impl fmt::Display for TwistInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.lo, self.hi) {
            (Some(lo), Some(hi)) => write!(f, "[{lo},{hi}]"),
            (None, Some(hi)) => write!(f, "(-inf,{hi}]"),
            (Some(lo), None) => write!(f, "[{lo},+inf)"),
            (None, None) => f.write_str("(-inf,+inf)"),
        }
    }
}

/// Sorted, pairwise disjoint and non-adjacent intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct TwistIntervalSet {
    intervals: Vec<TwistInterval>,
}

impl TwistIntervalSet {
    pub fn empty() -> Self {
        TwistIntervalSet::default()
    }

    /// Normalizes an arbitrary collection: drops empty pieces, sorts, merges
    /// overlapping or adjacent intervals.
    pub fn from_intervals<I: IntoIterator<Item = TwistInterval>>(pieces: I) -> Self {
        let mut pieces: Vec<TwistInterval> = pieces.into_iter().filter(|p| !p.is_empty()).collect();
        // None (= -inf) sorts first
        pieces.sort_by_key(|p| (p.lo, p.hi.is_none(), p.hi));
        let mut out: Vec<TwistInterval> = Vec::with_capacity(pieces.len());
        for p in pieces {
            if let Some(last) = out.last_mut() {
                let touches = match (last.hi, p.lo) {
                    (None, _) | (_, None) => true,
                    (Some(hi), Some(lo)) => lo <= hi + 1,
                };
                if touches {
                    last.hi = match (last.hi, p.hi) {
                        (None, _) | (_, None) => None,
                        (Some(a), Some(b)) => Some(a.max(b)),
                    };
                    continue;
                }
            }
            out.push(p);
        }
        TwistIntervalSet { intervals: out }
    }

    pub fn intervals(&self) -> &[TwistInterval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// False when the set contains a half-line.
    pub fn is_bounded(&self) -> bool {
        self.intervals.iter().all(TwistInterval::is_bounded)
    }

    pub fn contains(&self, tau: i128) -> bool {
        self.intervals.iter().any(|p| p.contains(tau))
    }

    /// Smallest and largest element, when both are finite.
    pub fn hull(&self) -> Option<(i128, i128)> {
        let lo = self.intervals.first()?.lo?;
        let hi = self.intervals.last()?.hi?;
        Some((lo, hi))
    }

    /// Every element, in increasing order. Panics on an unbounded set.
    pub fn points(&self) -> impl Iterator<Item = i128> + '_ {
        assert!(self.is_bounded(), "cannot enumerate a half-line");
        self.intervals.iter().flat_map(|p| p.lo.unwrap()..=p.hi.unwrap())
    }

    pub fn union(&self, other: &TwistIntervalSet) -> TwistIntervalSet {
        TwistIntervalSet::from_intervals(self.intervals.iter().chain(&other.intervals).copied())
    }
}

impl fmt::Display for TwistIntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self.intervals.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The exact set of `tau` with `H^t(E(j + tau(1,...,1))) != 0`.
///
/// For `t = 0` and `t = total_dim` the answer is a half-line, returned with an
/// infinite endpoint rather than truncated.
pub fn nonvanishing_twist_intervals(e: &LineBundleSum, j: &MultiDegree, t: u32) -> Result<TwistIntervalSet> {
    let shape = e.shape();
    shape.check_len(j.len())?;
    let j = j.wide();
    let subsets: Vec<u64> = shape.subsets_with_dim(t).collect();
    let mut pieces = Vec::new();
    for (degree, _) in e.summands() {
        for &mask in &subsets {
            let mut lo: Option<i128> = None;
            let mut hi: Option<i128> = None;
            for (i, (&a, &n)) in degree.entries().iter().zip(shape.dims()).enumerate() {
                let shift = -i128::from(a) - j[i];
                if mask >> i & 1 == 1 {
                    let bound = shift - i128::from(n) - 1;
                    hi = Some(hi.map_or(bound, |h| h.min(bound)));
                } else {
                    lo = Some(lo.map_or(shift, |l| l.max(shift)));
                }
            }
            pieces.push(TwistInterval { lo, hi });
        }
    }
    Ok(TwistIntervalSet::from_intervals(pieces))
}
