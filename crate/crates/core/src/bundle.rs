//! Ambient shapes, multidegrees and direct sums of line bundles.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest absolute degree entry accepted in a bundle. Keeps every derived
/// quantity (twists, interval endpoints, duals) well inside `i128`.
pub const DEGREE_LIMIT: i64 = 1 << 62;

/// Factor dimensions `(n_1, ..., n_s)` of `P^{n_1} x ... x P^{n_s}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Shape(Vec<u32>);

impl Shape {
    pub fn new(dims: Vec<u32>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidShape(dims));
        }
        Ok(Shape(dims))
    }

    /// `(P^n)^s`.
    pub fn power(n: u32, s: usize) -> Result<Self> {
        Shape::new(vec![n; s])
    }

    pub fn dims(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Number of factors `s`.
    pub fn factors(&self) -> usize {
        self.0.len()
    }

    /// `n_1 + ... + n_s`, the dimension of the product.
    pub fn total_dim(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `Some(n)` when every factor is `P^n`.
    pub fn common_dim(&self) -> Option<u32> {
        let n = self.0[0];
        self.0.iter().all(|&m| m == n).then_some(n)
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.factors() {
            return Err(Error::LengthMismatch { expected: self.factors(), found: len });
        }
        Ok(())
    }

    pub(crate) fn check_factor(&self, index: usize) -> Result<()> {
        if index >= self.factors() {
            return Err(Error::InvalidFactor { index, factors: self.factors() });
        }
        Ok(())
    }

    /// Twist of the canonical bundle, `(-n_1-1, ..., -n_s-1)`.
    pub fn canonical_degree(&self) -> MultiDegree {
        MultiDegree(self.0.iter().map(|&n| -i64::from(n) - 1).collect())
    }

    /// All subsets of factors, as bitmasks, whose dimensions sum to `t`.
    pub(crate) fn subsets_with_dim(&self, t: u32) -> impl Iterator<Item = u64> + '_ {
        let s = self.factors();
        assert!(s < 64, "too many factors");
        (0..(1u64 << s)).filter(move |mask| {
            (0..s).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).sum::<u32>() == t
        })
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| format!("P^{n}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// An integer twist `(a_1, ..., a_s)`, i.e. the line bundle `O(a_1, ..., a_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree(Vec<i64>);

impl MultiDegree {
    pub fn new(entries: Vec<i64>) -> Self {
        MultiDegree(entries)
    }

    pub fn zero(s: usize) -> Self {
        MultiDegree(vec![0; s])
    }

    /// `(c, ..., c)`.
    pub fn diagonal(c: i64, s: usize) -> Self {
        MultiDegree(vec![c; s])
    }

    /// `c * e_k`.
    pub fn axis(k: usize, c: i64, s: usize) -> Self {
        let mut v = vec![0; s];
        v[k] = c;
        MultiDegree(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i128 {
        self.0.iter().map(|&a| i128::from(a)).sum()
    }

    pub fn checked_add(&self, other: &MultiDegree) -> Result<MultiDegree> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: other.len() });
        }
        let entries = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| bounded(i128::from(a) + i128::from(b)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiDegree(entries))
    }

    pub fn neg(&self) -> MultiDegree {
        MultiDegree(self.0.iter().map(|&a| -a).collect())
    }

    pub(crate) fn wide(&self) -> Vec<i128> {
        self.0.iter().map(|&a| i128::from(a)).collect()
    }

    fn within_limit(&self) -> Result<()> {
        for &a in &self.0 {
            bounded(i128::from(a))?;
        }
        Ok(())
    }
}

impl From<Vec<i64>> for MultiDegree {
    fn from(v: Vec<i64>) -> Self {
        MultiDegree(v)
    }
}

impl From<&[i64]> for MultiDegree {
    fn from(v: &[i64]) -> Self {
        MultiDegree(v.to_vec())
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn bounded(a: i128) -> Result<i64> {
    if a.abs() > i128::from(DEGREE_LIMIT) {
        return Err(Error::DegreeOverflow(a));
    }
    Ok(a as i64)
}

/// A decomposable bundle `E = (+)_k O(a^(k))^{m_k}`, kept in canonical form:
/// summands sorted lexicographically by degree, equal degrees merged.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineBundleSum {
    shape: Shape,
    summands: Vec<(MultiDegree, u64)>,
}

impl LineBundleSum {
    pub fn new<I>(shape: Shape, summands: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiDegree, u64)>,
    {
        let mut merged: BTreeMap<MultiDegree, u64> = BTreeMap::new();
        for (degree, mult) in summands {
            shape.check_len(degree.len())?;
            degree.within_limit()?;
            if mult == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            let slot = merged.entry(degree).or_insert(0);
            *slot = slot
                .checked_add(mult)
                .ok_or_else(|| Error::InvalidInput("multiplicity overflow".into()))?;
        }
        if merged.is_empty() {
            return Err(Error::EmptyBundle);
        }
        Ok(LineBundleSum { shape, summands: merged.into_iter().collect() })
    }

    /// The single line bundle `O(a)`.
    pub fn line(shape: Shape, degree: impl Into<MultiDegree>) -> Result<Self> {
        LineBundleSum::new(shape, [(degree.into(), 1)])
    }

    /// `O_X`.
    pub fn structure_sheaf(shape: Shape) -> Self {
        let s = shape.factors();
        LineBundleSum { shape, summands: vec![(MultiDegree::zero(s), 1)] }
    }

    /// Convenience constructor from plain degree vectors, each with multiplicity one.
    pub fn from_degrees(shape: &[u32], degrees: &[&[i64]]) -> Result<Self> {
        let shape = Shape::new(shape.to_vec())?;
        LineBundleSum::new(shape, degrees.iter().map(|d| (MultiDegree::from(*d), 1)))
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn summands(&self) -> &[(MultiDegree, u64)] {
        &self.summands
    }

    pub fn rank(&self) -> u64 {
        self.summands.iter().map(|(_, m)| m).sum()
    }

    /// `E (+) F` on the same shape.
    pub fn direct_sum(&self, other: &LineBundleSum) -> Result<Self> {
        if self.shape != other.shape {
            return Err(Error::LengthMismatch {
                expected: self.shape.factors(),
                found: other.shape.factors(),
            });
        }
        LineBundleSum::new(
            self.shape.clone(),
            self.summands.iter().chain(&other.summands).cloned(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&BundleJson::from(self)).expect("bundle serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BundleJson =
            serde_json::from_str(text).map_err(|e| Error::MalformedJson(e.to_string()))?;
        raw.try_into()
    }
}

impl fmt::Display for LineBundleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(d, m)| if *m == 1 { format!("O{d}") } else { format!("O{d}^{m}") })
            .collect();
        write!(f, "{} on {}", parts.join(" + "), self.shape)
    }
}

/// Wire form: `{"shape":[2,2],"summands":[{"degree":[0,3],"mult":1}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleJson {
    pub shape: Vec<u32>,
    pub summands: Vec<SummandJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandJson {
    pub degree: Vec<i64>,
    pub mult: u64,
}

impl From<&LineBundleSum> for BundleJson {
    fn from(e: &LineBundleSum) -> Self {
        BundleJson {
            shape: e.shape.dims().to_vec(),
            summands: e
                .summands
                .iter()
                .map(|(d, m)| SummandJson { degree: d.entries().to_vec(), mult: *m })
                .collect(),
        }
    }
}

impl TryFrom<BundleJson> for LineBundleSum {
    type Error = Error;

    fn try_from(raw: BundleJson) -> Result<Self> {
        let shape = Shape::new(raw.shape)?;
        LineBundleSum::new(shape, raw.summands.into_iter().map(|s| (MultiDegree(s.degree), s.mult)))
    }
}

impl Serialize for LineBundleSum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BundleJson::from(self).serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_validation() {
        assert!(Shape::new(vec![]).is_err());
        assert!(Shape::new(vec![2, 0]).is_err());
        let s = Shape::new(vec![2, 3]).unwrap();
        assert_eq!(s.total_dim(), 5);
        assert_eq!(s.common_dim(), None);
        assert_eq!(Shape::power(2, 3).unwrap().common_dim(), Some(2));
    }

    #[test]
    fn canonical_form_sorts_and_merges() {
        let shape = Shape::new(vec![2, 2]).unwrap();
        let e = LineBundleSum::new(
            shape.clone(),
            [
                (MultiDegree::new(vec![1, 0]), 1),
                (MultiDegree::new(vec![0, 2]), 2),
                (MultiDegree::new(vec![1, 0]), 3),
            ],
        )
        .unwrap();
        assert_eq!(
            e.summands(),
            &[(MultiDegree::new(vec![0, 2]), 2), (MultiDegree::new(vec![1, 0]), 4)]
        );
        assert_eq!(e.rank(), 6);
        let f = LineBundleSum::new(
            shape,
            [(MultiDegree::new(vec![1, 0]), 4), (MultiDegree::new(vec![0, 2]), 2)],
        )
        .unwrap();
        assert_eq!(e, f);
    }

    #[test]
    fn constructor_errors() {
        let shape = Shape::new(vec![2, 2]).unwrap();
        assert_eq!(
            LineBundleSum::new(shape.clone(), [(MultiDegree::new(vec![1]), 1)]),
            Err(Error::LengthMismatch { expected: 2, found: 1 })
        );
        assert_eq!(
            LineBundleSum::new(shape.clone(), [(MultiDegree::new(vec![1, 1]), 0)]),
            Err(Error::ZeroMultiplicity)
        );
        assert_eq!(LineBundleSum::new(shape.clone(), []), Err(Error::EmptyBundle));
        assert!(matches!(
            LineBundleSum::new(shape, [(MultiDegree::new(vec![i64::MIN, 0]), 1)]),
            Err(Error::DegreeOverflow(_))
        ));
    }

    #[test]
    fn json_wire_format() {
        let text = r#"{"shape":[2,2],"summands":[{"degree":[0,3],"mult":1}]}"#;
        let e = LineBundleSum::from_json(text).unwrap();
        assert_eq!(e.to_json(), text);
        assert!(matches!(LineBundleSum::from_json("{"), Err(Error::MalformedJson(_))));
        assert!(matches!(
            LineBundleSum::from_json(r#"{"shape":[2,2],"summands":[{"degree":[0],"mult":1}]}"#),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(LineBundleSum::from_json(r#"{"shape":[2],"summands":[],"x":1}"#).is_err());
    }
}
