//! Cohomological splitting criteria on `P^{n_1} x ... x P^{n_s}`.
//!
//! Each criterion pairs a *hypothesis* (vanishing of `H^i(E(j + t(1,...,1)))`
//! over an admissible region of `(i, j)`, every integer `t`, minus an
//! exceptional set) with a *conclusion* (every summand has a prescribed form
//! up to a diagonal twist). For decomposable bundles both sides are decidable:
//! the `t`-quantifier is made finite by [`nonvanishing_twist_intervals`].

mod audit;
mod exceptional;
mod forms;
mod lemma;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bundle::{LineBundleSum, MultiDegree, Shape};
use crate::cohomology::sum_dim_wide;
use crate::emit::{big_number, Tabular};
use crate::error::{Error, Result};
use crate::intervals::nonvanishing_twist_intervals;
use crate::regularity::twist_box;

pub use audit::{audit_candidate_count, desk_scale_audit, AuditReport, Mismatch, MismatchKind, AUDIT_GUARD};
pub use exceptional::{
    two_factor_excess_tuples, two_factor_deficit_exceptional, ExceptionalSet12, ExceptionalSet13,
};
pub use forms::{
    lemma14_conclusion_match, thm12_conclusion_match, thm13_conclusion_match, FormKind, FormMatch,
    SplitForm, SummandForm,
};
pub use lemma::{lemma14_check, Lemma14Report};

/// A point `(i, j)` of the hypothesis region: `1 <= i <= N - 1`,
/// `-i <= sum j <= 0` and `-n_k <= j_k <= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AdmissibleTuple {
    pub i: u32,
    pub j: MultiDegree,
}

/// The admissible region in `(i, j)` order.
pub fn admissible_region(shape: &Shape) -> Vec<AdmissibleTuple> {
    let top = shape.total_dim();
    let mut out = Vec::new();
    for j in twist_box(shape) {
        let depth = -j.iter().sum::<i64>() as u32;
        let j = MultiDegree::new(j);
        for i in depth.max(1)..top {
            out.push(AdmissibleTuple { i, j: j.clone() });
        }
    }
    out.sort();
    out
}

pub fn is_admissible(shape: &Shape, i: u32, j: &MultiDegree) -> bool {
    j.len() == shape.factors()
        && i >= 1
        && i < shape.total_dim()
        && j.entries().iter().zip(shape.dims()).all(|(&x, &n)| -i64::from(n) <= x && x <= 0)
        && (-i128::from(i)..=0).contains(&j.sum())
}

/// One failure of a required vanishing: `H^i(E(j + t(1,...,1)))` has dimension `dim`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ViolationRow {
    pub i: u32,
    pub j: MultiDegree,
    pub t: i128,
    #[serde(serialize_with = "big_number")]
    pub dim: BigUint,
}

/// Violations in `(i, j, t)` order; empty means the hypothesis holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationReport {
    pub shape: Shape,
    pub rows: Vec<ViolationRow>,
}

impl ViolationReport {
    pub fn new(shape: Shape, mut rows: Vec<ViolationRow>) -> Self {
        rows.sort();
        ViolationReport { shape, rows }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, i: u32, j: &[i64], t: i128) -> bool {
        self.rows.iter().any(|r| r.i == i && r.j.entries() == j && r.t == t)
    }

    /// The `(i, j)` pairs that fail for some `t`.
    pub fn failing_tuples(&self) -> Vec<AdmissibleTuple> {
        let mut v: Vec<AdmissibleTuple> =
            self.rows.iter().map(|r| AdmissibleTuple { i: r.i, j: r.j.clone() }).collect();
        v.dedup();
        v
    }
}

impl Tabular for ViolationReport {
    fn header(&self) -> Vec<String> {
        let mut h = vec!["i".to_string()];
        h.extend((1..=self.shape.factors()).map(|k| format!("j_{k}")));
        h.push("t".into());
        h.push("dim".into());
        h
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                let mut row = vec![r.i.to_string()];
                row.extend(r.j.entries().iter().map(i64::to_string));
                row.push(r.t.to_string());
                row.push(r.dim.to_string());
                row
            })
            .collect()
    }

    fn json(&self) -> String {
        serde_json::to_string(&self.rows).expect("rows serialize")
    }
}

/// Every `(j + t(1,...,1), i)` with nonzero cohomology, for the given `(i, j)`.
pub(crate) fn rows_at(e: &LineBundleSum, i: u32, j: &MultiDegree) -> Vec<ViolationRow> {
    let set = nonvanishing_twist_intervals(e, j, i).expect("j has shape length");
    let base = j.wide();
    set.points()
        .map(|t| {
            let shifted: Vec<i128> = base.iter().map(|x| x + t).collect();
            ViolationRow { i, j: j.clone(), t, dim: sum_dim_wide(e, &shifted, i) }
        })
        .collect()
}

/// Scans the admissible region, skipping tuples the predicate marks exceptional.
pub fn violations_outside<F>(e: &LineBundleSum, exceptional: F) -> ViolationReport
where
    F: Fn(u32, &MultiDegree) -> bool,
{
    let rows = admissible_region(e.shape())
        .into_iter()
        .filter(|tuple| !exceptional(tuple.i, &tuple.j))
        .flat_map(|tuple| rows_at(e, tuple.i, &tuple.j))
        .collect();
    ViolationReport::new(e.shape().clone(), rows)
}

pub(crate) fn require_min_dim(shape: &Shape, min: u32, what: &str) -> Result<()> {
    if shape.dims().iter().any(|&n| n < min) {
        return Err(Error::HypothesisDomain(format!(
            "{what} needs every factor dimension >= {min}, got {:?}",
            shape.dims()
        )));
    }
    Ok(())
}

pub(crate) fn validate_r(shape: &Shape, r: &[u32]) -> Result<()> {
    if r.len() != shape.factors() {
        return Err(Error::ROutOfRange(format!(
            "expected {} entries, got {}",
            shape.factors(),
            r.len()
        )));
    }
    if let Some((k, (&rk, &nk))) = r.iter().zip(shape.dims()).enumerate().find(|(_, (&rk, &nk))| rk > nk) {
        return Err(Error::ROutOfRange(format!("r_{} = {rk} exceeds n_{} = {nk}", k + 1, k + 1)));
    }
    Ok(())
}

/// Hypothesis of the first criterion: vanishing outside [`ExceptionalSet12`].
/// Requires every `n_i >= 2`.
pub fn thm12_violations(e: &LineBundleSum) -> Result<ViolationReport> {
    let set = ExceptionalSet12::new(e.shape())?;
    Ok(violations_outside(e, |i, j| set.contains(i, j)))
}

/// Hypothesis of the `r`-parametrised criterion: vanishing outside [`ExceptionalSet13`].
pub fn thm13_violations(e: &LineBundleSum, r: &[u32]) -> Result<ViolationReport> {
    let set = ExceptionalSet13::new(e.shape(), r)?;
    Ok(violations_outside(e, |i, j| set.contains(i, j)))
}

/// The two-factor criteria with their literal exceptional sets:
/// without `r` the four tuples `(n_1,-n_1,0), (n_1,-n_1+1,0),
/// (n_2,0,-n_2), (n_2,0,-n_2+1)`; with `r` the inequality families
/// `i = n_1, j_2 >= j_1 + n_1 - r_1 + 1` and `i = n_2, j_2 <= j_1 - n_2 + r_2 - 1`.
pub fn two_factor_violations(e: &LineBundleSum, r: Option<&[u32]>) -> Result<ViolationReport> {
    let shape = e.shape();
    if shape.factors() != 2 {
        return Err(Error::HypothesisDomain(format!(
            "the two-factor criteria need s = 2, got s = {}",
            shape.factors()
        )));
    }
    match r {
        None => {
            require_min_dim(shape, 2, "the two-factor criterion")?;
            let tuples = two_factor_excess_tuples(shape);
            Ok(violations_outside(e, |i, j| tuples.iter().any(|t| t.i == i && &t.j == j)))
        }
        Some(r) => {
            validate_r(shape, r)?;
            Ok(violations_outside(e, |i, j| two_factor_deficit_exceptional(shape, r, i, j)))
        }
    }
}

/// Which criterion to evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Criterion {
    Thm12,
    Thm13(Vec<u32>),
    Lemma14,
    /// Literal two-factor form; `Some(r)` selects the `r`-parametrised one.
    TwoFactor(Option<Vec<u32>>),
}

impl Criterion {
    pub fn name(&self) -> &'static str {
        match self {
            Criterion::Thm12 => "thm12",
            Criterion::Thm13(_) => "thm13",
            Criterion::Lemma14 => "lemma14",
            Criterion::TwoFactor(_) => "miyazaki",
        }
    }

    /// `(hypothesis holds, conclusion holds)` for `e`.
    pub fn evaluate(&self, e: &LineBundleSum) -> Result<(bool, bool)> {
        Ok(match self {
            Criterion::Thm12 => {
                (thm12_violations(e)?.is_empty(), thm12_conclusion_match(e).is_match())
            }
            Criterion::Thm13(r) => {
                (thm13_violations(e, r)?.is_empty(), thm13_conclusion_match(e, r)?.is_match())
            }
            Criterion::Lemma14 => (lemma14_check(e)?.conditions_hold, lemma14_conclusion_match(e)?),
            Criterion::TwoFactor(r) => {
                let hyp = two_factor_violations(e, r.as_deref())?.is_empty();
                let concl = match r {
                    None => thm12_conclusion_match(e).is_match(),
                    Some(r) => thm13_conclusion_match(e, r)?.is_match(),
                };
                (hyp, concl)
            }
        })
    }

    /// Checks the criterion's shape preconditions without evaluating anything.
    pub fn validate(&self, shape: &Shape) -> Result<()> {
        let probe = LineBundleSum::structure_sheaf(shape.clone());
        self.evaluate(&probe).map(|_| ())
    }
}
