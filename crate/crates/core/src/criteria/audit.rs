//! Exhaustive comparison of hypothesis and conclusion over all decomposable
//! bundles with bounded degrees and rank.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::binomial::binomial;
use crate::bundle::{LineBundleSum, MultiDegree, Shape};
use crate::error::{Error, Result};

use super::Criterion;

/// Upper limit on the number of candidate bundles an audit may enumerate.
pub const AUDIT_GUARD: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MismatchKind {
    /// Vanishing hypothesis holds, but the bundle is not of the concluded form.
    HypOnly,
    /// Of the concluded form, but some required vanishing fails.
    ConclOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Mismatch {
    pub kind: MismatchKind,
    pub bundle: LineBundleSum,
}

/// 2x2 contingency counts of (hypothesis, conclusion) plus every mismatch.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct AuditReport {
    pub total: u64,
    pub both: u64,
    pub hyp_only: u64,
    pub concl_only: u64,
    pub neither: u64,
    pub mismatches: Vec<Mismatch>,
}

impl AuditReport {
    fn record(&mut self, bundle: LineBundleSum, hyp: bool, concl: bool) {
        self.total += 1;
        match (hyp, concl) {
            (true, true) => self.both += 1,
            (false, false) => self.neither += 1,
            (true, false) => {
                self.hyp_only += 1;
                self.mismatches.push(Mismatch { kind: MismatchKind::HypOnly, bundle });
            }
            (false, true) => {
                self.concl_only += 1;
                self.mismatches.push(Mismatch { kind: MismatchKind::ConclOnly, bundle });
            }
        }
    }

    /// Associative, order-independent combination of partial reports.
    pub fn merge(mut self, other: AuditReport) -> AuditReport {
        self.total += other.total;
        self.both += other.both;
        self.hyp_only += other.hyp_only;
        self.concl_only += other.concl_only;
        self.neither += other.neither;
        self.mismatches.extend(other.mismatches);
        self.mismatches.sort();
        self
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Number of multisets of size `1..=max_rank` drawn from `(2B+1)^s` degrees.
pub fn audit_candidate_count(shape: &Shape, bound: u32, max_rank: u32) -> BigUint {
    let side = BigUint::from(2 * u64::from(bound) + 1);
    let degrees = side.pow(shape.factors() as u32);
    let degrees = i128::try_from(degrees).unwrap_or(i128::MAX / 2);
    (1..=max_rank).map(|k| binomial(degrees + i128::from(k) - 1, k)).sum()
}

fn degree_cube(shape: &Shape, bound: i64) -> Vec<MultiDegree> {
    let mut all = vec![Vec::new()];
    for _ in 0..shape.factors() {
        all = all
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-bound..=bound).map(move |x| {
                    let mut v = p.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    all.into_iter().map(MultiDegree::new).collect()
}

/// Visits every nondecreasing index sequence starting at `first` with length
/// at most `max_rank`.
fn for_each_multiset<F: FnMut(&[usize])>(first: usize, count: usize, max_rank: usize, f: &mut F) {
    fn go<F: FnMut(&[usize])>(seq: &mut Vec<usize>, count: usize, max_rank: usize, f: &mut F) {
        f(seq);
        if seq.len() == max_rank {
            return;
        }
        let last = *seq.last().unwrap();
        for next in last..count {
            seq.push(next);
            go(seq, count, max_rank, f);
            seq.pop();
        }
    }
    let mut seq = vec![first];
    go(&mut seq, count, max_rank, f);
}

/// Enumerates every canonical bundle with degrees in `[-B, B]^s` and rank at
/// most `R`, evaluates the criterion's hypothesis and conclusion on each, and
/// tallies the results. Work is split by the first summand across threads.
pub fn desk_scale_audit(shape: &Shape, bound: u32, max_rank: u32, criterion: &Criterion) -> Result<AuditReport> {
    if max_rank == 0 {
        return Err(Error::InvalidInput("max rank must be positive".into()));
    }
    let candidates = audit_candidate_count(shape, bound, max_rank);
    if candidates > BigUint::from(AUDIT_GUARD) {
        return Err(Error::GuardExceeded {
            candidates: u128::try_from(&candidates).unwrap_or(u128::MAX),
            guard: AUDIT_GUARD,
        });
    }
    criterion.validate(shape)?;

    let degrees = degree_cube(shape, i64::from(bound));
    let partials: Vec<Result<AuditReport>> = (0..degrees.len())
        .into_par_iter()
        .map(|first| {
            let mut report = AuditReport::default();
            let mut failure = None;
            for_each_multiset(first, degrees.len(), max_rank as usize, &mut |seq| {
                if failure.is_some() {
                    return;
                }
                let summands = seq.iter().map(|&k| (degrees[k].clone(), 1));
                let outcome = LineBundleSum::new(shape.clone(), summands)
                    .and_then(|e| criterion.evaluate(&e).map(|(h, c)| (e, h, c)));
                match outcome {
                    Ok((e, h, c)) => report.record(e, h, c),
                    Err(err) => failure = Some(err),
                }
            });
            match failure {
                Some(err) => Err(err),
                None => Ok(report),
            }
        })
        .collect();
    partials.into_iter().try_fold(AuditReport::default(), |acc, part| Ok(acc.merge(part?)))
}
