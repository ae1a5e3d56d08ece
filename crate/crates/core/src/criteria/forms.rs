use serde::Serialize;

use crate::bundle::{LineBundleSum, MultiDegree, Shape};
use crate::error::{Error, Result};

use super::validate_r;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    /// `O(l,...,l) (x) O(c e_k)` with `c in {0, 1, 2}`.
    Thm12,
    /// `O(l,...,l) (x) O(-c e_k)` with `0 <= c <= r_k`.
    Thm13(Vec<u32>),
}

/// How one summand fits the conclusion: `degree = level (1,...,1) +/- excess e_axis`.
/// `axis` is `None` for a pure diagonal twist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandForm {
    pub degree: MultiDegree,
    pub level: i64,
    pub axis: Option<usize>,
    pub excess: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitForm {
    pub kind: FormKind,
    pub assignment: Vec<SummandForm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormMatch {
    Match(SplitForm),
    NoMatch { offending: MultiDegree },
}

impl FormMatch {
    pub fn is_match(&self) -> bool {
        matches!(self, FormMatch::Match(_))
    }

    pub fn form(&self) -> Option<&SplitForm> {
        match self {
            FormMatch::Match(f) => Some(f),
            FormMatch::NoMatch { .. } => None,
        }
    }
}

/// Writes `a` as `l (1,...,1) + c e_k` with `c >= 0`, at most one axis off the minimum.
fn excess_form(a: &MultiDegree) -> Option<SummandForm> {
    let e = a.entries();
    let level = *e.iter().min()?;
    let mut off = e.iter().enumerate().filter(|(_, &x)| x != level);
    let found = off.next();
    if off.next().is_some() {
        return None;
    }
    Some(SummandForm {
        degree: a.clone(),
        level,
        axis: found.map(|(k, _)| k),
        excess: found.map_or(0, |(_, &x)| x - level),
    })
}

/// Writes `a` as `l (1,...,1) - c e_k` with `c >= 0`, at most one axis off the maximum.
fn deficit_form(a: &MultiDegree) -> Option<SummandForm> {
    let e = a.entries();
    let level = *e.iter().max()?;
    let mut off = e.iter().enumerate().filter(|(_, &x)| x != level);
    let found = off.next();
    if off.next().is_some() {
        return None;
    }
    Some(SummandForm {
        degree: a.clone(),
        level,
        axis: found.map(|(k, _)| k),
        excess: found.map_or(0, |(_, &x)| level - x),
    })
}

fn match_all<F>(e: &LineBundleSum, kind: FormKind, fit: F) -> FormMatch
where
    F: Fn(&MultiDegree) -> Option<SummandForm>,
{
    let mut assignment = Vec::with_capacity(e.summands().len());
    for (degree, _) in e.summands() {
        match fit(degree) {
            Some(f) => assignment.push(f),
            None => return FormMatch::NoMatch { offending: degree.clone() },
        }
    }
    FormMatch::Match(SplitForm { kind, assignment })
}

/// Every summand is `O(l,...,l)` twisted by `O`, `O(e_k)` or `O(2 e_k)`.
pub fn thm12_conclusion_match(e: &LineBundleSum) -> FormMatch {
    match_all(e, FormKind::Thm12, |a| excess_form(a).filter(|f| f.excess <= 2))
}

/// Every summand is `O(l,...,l)` with coordinate `k` lowered by at most `r_k`.
/// With two factors: `O(0,c)` up to diagonal twist for `c <= r_1`, `O(c,0)` for `c <= r_2`.
pub fn thm13_conclusion_match(e: &LineBundleSum, r: &[u32]) -> Result<FormMatch> {
    validate_r(e.shape(), r)?;
    Ok(match_all(e, FormKind::Thm13(r.to_vec()), |a| {
        deficit_form(a).filter(|f| f.axis.is_none_or(|k| f.excess <= i64::from(r[k])))
    }))
}

pub(crate) fn power_dim(shape: &Shape) -> Result<u32> {
    match shape.common_dim() {
        Some(n) if shape.factors() >= 2 => Ok(n),
        _ => Err(Error::NotPowerShape(shape.dims().to_vec())),
    }
}

/// On `(P^n)^s`: every summand has `max_i u_i - min_i u_i <= n`.
pub fn lemma14_conclusion_match(e: &LineBundleSum) -> Result<bool> {
    let n = i64::from(power_dim(e.shape())?);
    Ok(e.summands().iter().all(|(d, _)| {
        let v = d.entries();
        v.iter().max().unwrap() - v.iter().min().unwrap() <= n
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle(shape: &[u32], degrees: &[&[i64]]) -> LineBundleSum {
        LineBundleSum::from_degrees(shape, degrees).unwrap()
    }

    #[test]
    fn thm12_forms() {
        let m = thm12_conclusion_match(&bundle(&[2, 2], &[&[1, 1], &[1, 3], &[3, 1]]));
        let f = m.form().unwrap();
        let got: Vec<(i64, Option<usize>, i64)> = f.assignment.iter().map(|s| (s.level, s.axis, s.excess)).collect();
        assert_eq!(got, vec![(1, None, 0), (1, Some(1), 2), (1, Some(0), 2)]);

        assert_eq!(
            thm12_conclusion_match(&bundle(&[2, 2], &[&[0, 0], &[0, 3]])),
            FormMatch::NoMatch { offending: MultiDegree::new(vec![0, 3]) }
        );
        assert!(!thm12_conclusion_match(&bundle(&[2, 2, 2], &[&[1, 2, 2]])).is_match());
        assert!(thm12_conclusion_match(&bundle(&[2, 2, 2], &[&[-1, -1, 1]])).is_match());
    }

    #[test]
    fn thm13_forms() {
        let m = thm13_conclusion_match(&bundle(&[2, 2], &[&[2, 1]]), &[1, 1]).unwrap();
        let f = &m.form().unwrap().assignment[0];
        assert_eq!((f.level, f.axis, f.excess), (2, Some(1), 1));
        // O(2,0) needs two steps below the level on the second axis
        assert!(!thm13_conclusion_match(&bundle(&[2, 2], &[&[2, 0]]), &[2, 1]).unwrap().is_match());
        assert!(thm13_conclusion_match(&bundle(&[2, 2], &[&[2, 0]]), &[0, 2]).unwrap().is_match());
        // O(0,c) for c <= r_1: the first factor sits c below the second
        assert!(thm13_conclusion_match(&bundle(&[2, 2], &[&[0, 1]]), &[1, 0]).unwrap().is_match());
        assert!(!thm13_conclusion_match(&bundle(&[2, 2], &[&[0, 1]]), &[0, 2]).unwrap().is_match());
        assert!(thm13_conclusion_match(&bundle(&[2, 2], &[&[0, 0]]), &[3, 0]).is_err());
    }

    #[test]
    fn thm13_full_r_is_thm12_on_two_factors() {
        for a in -3..=3 {
            for b in -3..=3 {
                let e = bundle(&[2, 2], &[&[a, b]]);
                assert_eq!(
                    thm13_conclusion_match(&e, &[2, 2]).unwrap().is_match(),
                    thm12_conclusion_match(&e).is_match()
                );
            }
        }
    }

    #[test]
    fn thm13_forms_grow_with_r() {
        for a in -3..=3 {
            for b in -3..=3 {
                let e = bundle(&[2, 2], &[&[a, b]]);
                for r1 in 0..=2 {
                    for r2 in 0..=2 {
                        if thm13_conclusion_match(&e, &[r1, r2]).unwrap().is_match() {
                            assert!(thm13_conclusion_match(&e, &[2, r2]).unwrap().is_match());
                            assert!(thm13_conclusion_match(&e, &[r1, 2]).unwrap().is_match());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lemma14_forms() {
        for n in 1..4u32 {
            let ni = i64::from(n);
            assert!(lemma14_conclusion_match(&bundle(&[n, n], &[&[0, ni]])).unwrap());
            assert!(!lemma14_conclusion_match(&bundle(&[n, n], &[&[0, ni + 1]])).unwrap());
            assert!(!lemma14_conclusion_match(&bundle(&[n, n], &[&[0, 0], &[0, ni + 1]])).unwrap());
        }
        assert!(lemma14_conclusion_match(&bundle(&[1, 2], &[&[0, 0]])).is_err());
        assert!(lemma14_conclusion_match(&bundle(&[2], &[&[0]])).is_err());
    }
}
