//! Cohomology of line-bundle sums via the Künneth formula.
//!
//! On a single `P^n` the line bundle `O(a)` has cohomology only in degree 0
//! (when `a >= 0`) or degree `n` (when `a <= -n-1`). On a product the Künneth
//! formula multiplies factor dimensions over the splittings of the total
//! degree, so each `O(a_1, ..., a_s)` is nonzero in at most one degree.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::binomial::{binom_poly, binom_poly_small, binomial};
use crate::bundle::{LineBundleSum, MultiDegree, Shape};
use crate::emit::{big_number, Tabular};
use crate::error::{Error, Result};

/// `dim H^q(P^n, O(a))`.
pub fn factor_cohomology_dim(n: u32, a: i64, q: u32) -> BigUint {
    factor_dim(n, i128::from(a), q)
}

pub(crate) fn factor_dim(n: u32, a: i128, q: u32) -> BigUint {
    let n_wide = i128::from(n);
    if q == 0 && a >= 0 {
        binomial(a + n_wide, n)
    } else if q == n && a <= -n_wide - 1 {
        binomial(-a - 1, n)
    } else {
        BigUint::zero()
    }
}

/// The unique degree in which `O(a)` on `P^n` has cohomology, with its dimension.
fn factor_support(n: u32, a: i128) -> Option<(u32, BigUint)> {
    if a >= 0 {
        Some((0, factor_dim(n, a, 0)))
    } else if a <= -i128::from(n) - 1 {
        Some((n, factor_dim(n, a, n)))
    } else {
        None
    }
}

/// `dim H^t` of the line bundle with (wide) degree `a`.
pub(crate) fn line_dim(shape: &Shape, a: &[i128], t: u32) -> BigUint {
    let mut degree = 0u32;
    let mut acc = BigUint::one();
    for (&n, &ai) in shape.dims().iter().zip(a) {
        match factor_support(n, ai) {
            Some((q, d)) => {
                degree += q;
                acc *= d;
            }
            None => return BigUint::zero(),
        }
    }
    if degree == t {
        acc
    } else {
        BigUint::zero()
    }
}

/// `dim H^t(X, O(a))` on `X = P^{n_1} x ... x P^{n_s}`.
pub fn kunneth_dim(shape: &Shape, a: &MultiDegree, t: u32) -> Result<BigUint> {
    shape.check_len(a.len())?;
    Ok(line_dim(shape, &a.wide(), t))
}

/// `dim H^t(X, E(twist))`.
pub fn sum_cohomology_dim(e: &LineBundleSum, twist: &MultiDegree, t: u32) -> Result<BigUint> {
    e.shape().check_len(twist.len())?;
    Ok(sum_dim_wide(e, &twist.wide(), t))
}

pub(crate) fn sum_dim_wide(e: &LineBundleSum, twist: &[i128], t: u32) -> BigUint {
    let mut total = BigUint::zero();
    let mut shifted = vec![0i128; twist.len()];
    for (degree, mult) in e.summands() {
        for (slot, (&a, &d)) in shifted.iter_mut().zip(degree.entries().iter().zip(twist)) {
            *slot = i128::from(a) + d;
        }
        let d = line_dim(e.shape(), &shifted, t);
        if !d.is_zero() {
            total += d * BigUint::from(*mult);
        }
    }
    total
}

/// `chi(E(twist))` from the closed form `sum_k m_k prod_i C(a_i + n_i, n_i)`,
/// using the polynomial binomial.
pub fn euler_characteristic(e: &LineBundleSum, twist: &MultiDegree) -> Result<BigInt> {
    e.shape().check_len(twist.len())?;
    let twist = twist.wide();
    if let Some(chi) = euler_small(e, &twist) {
        return Ok(BigInt::from(chi));
    }
    let mut chi = BigInt::zero();
    for (degree, mult) in e.summands() {
        let mut term = BigInt::from(*mult);
        for ((&n, &a), &d) in e.shape().dims().iter().zip(degree.entries()).zip(&twist) {
            term *= binom_poly(i128::from(a) + d + i128::from(n), n);
        }
        chi += term;
    }
    Ok(chi)
}

fn euler_small(e: &LineBundleSum, twist: &[i128]) -> Option<i128> {
    let mut chi: i128 = 0;
    for (degree, mult) in e.summands() {
        let mut term = i128::from(*mult);
        for ((&n, &a), &d) in e.shape().dims().iter().zip(degree.entries()).zip(twist) {
            term = term.checked_mul(binom_poly_small(i128::from(a) + d + i128::from(n), n)?)?;
        }
        chi = chi.checked_add(term)?;
    }
    Some(chi)
}

/// `chi(E(twist))` as the alternating sum of dimensions over all degrees.
pub fn euler_characteristic_alternating(e: &LineBundleSum, twist: &MultiDegree) -> Result<BigInt> {
    e.shape().check_len(twist.len())?;
    let twist = twist.wide();
    let mut chi = BigInt::zero();
    for t in 0..=e.shape().total_dim() {
        let d = BigInt::from(sum_dim_wide(e, &twist, t));
        if t % 2 == 0 {
            chi += d;
        } else {
            chi -= d;
        }
    }
    Ok(chi)
}

/// `E^v`: every summand degree negated.
pub fn serre_dual(e: &LineBundleSum) -> LineBundleSum {
    LineBundleSum::new(e.shape().clone(), e.summands().iter().map(|(d, m)| (d.neg(), *m)))
        .expect("negation preserves validity")
}

/// `E(d)`.
pub fn twist(e: &LineBundleSum, d: &MultiDegree) -> Result<LineBundleSum> {
    e.shape().check_len(d.len())?;
    let summands = e
        .summands()
        .iter()
        .map(|(a, m)| Ok((a.checked_add(d)?, *m)))
        .collect::<Result<Vec<_>>>()?;
    LineBundleSum::new(e.shape().clone(), summands)
}

/// Restriction of `E` to `H_i x prod_{k != i} P^{n_k}` for a hyperplane `H_i` of
/// the `i`-th factor (0-based). A factor that becomes `P^0` is dropped.
pub fn restrict_factor(e: &LineBundleSum, i: usize) -> Result<LineBundleSum> {
    let shape = e.shape();
    shape.check_factor(i)?;
    let mut dims = shape.dims().to_vec();
    if dims[i] > 1 {
        dims[i] -= 1;
        return LineBundleSum::new(Shape::new(dims)?, e.summands().iter().cloned());
    }
    if dims.len() == 1 {
        return Err(Error::RestrictionToPoint(i));
    }
    dims.remove(i);
    let summands = e.summands().iter().map(|(d, m)| {
        let mut v = d.entries().to_vec();
        v.remove(i);
        (MultiDegree::new(v), *m)
    });
    LineBundleSum::new(Shape::new(dims)?, summands)
}

/// Nonzero dimensions keyed by `(t, twist)`; absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    shape: Shape,
    rows: BTreeMap<(u32, MultiDegree), BigUint>,
}

impl CohomologyTable {
    pub fn new(shape: Shape) -> Self {
        CohomologyTable { shape, rows: BTreeMap::new() }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Stores a value; zeros are dropped. Panics when `t` exceeds the dimension.
    pub fn insert(&mut self, t: u32, twist: MultiDegree, dim: BigUint) {
        assert!(t <= self.shape.total_dim(), "cohomological degree {t} out of range");
        if dim.is_zero() {
            self.rows.remove(&(t, twist));
        } else {
            self.rows.insert((t, twist), dim);
        }
    }

    pub fn get(&self, t: u32, twist: &MultiDegree) -> BigUint {
        self.rows.get(&(t, twist.clone())).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in lexicographic `(t, twist)` order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &MultiDegree, &BigUint)> {
        self.rows.iter().map(|((t, d), v)| (*t, d, v))
    }
}

#[derive(serde::Serialize)]
struct TableRow<'a> {
    t: u32,
    twist: &'a MultiDegree,
    #[serde(serialize_with = "big_number")]
    dim: BigUint,
}

impl Tabular for CohomologyTable {
    fn header(&self) -> Vec<String> {
        let mut h = vec!["t".to_string()];
        h.extend((1..=self.shape.factors()).map(|k| format!("twist_{k}")));
        h.push("dim".into());
        h
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.iter()
            .map(|(t, d, v)| {
                let mut row = vec![t.to_string()];
                row.extend(d.entries().iter().map(i64::to_string));
                row.push(v.to_string());
                row
            })
            .collect()
    }

    fn json(&self) -> String {
        let rows: Vec<TableRow> = self.iter().map(|(t, twist, dim)| TableRow { t, twist, dim: dim.clone() }).collect();
        serde_json::to_string(&rows).expect("rows serialize")
    }
}

/// Tabulates `dim H^t(E(d))` for every listed twist and degree.
pub fn cohomology_table<'a, I>(e: &LineBundleSum, twists: I, degrees: &[u32]) -> Result<CohomologyTable>
where
    I: IntoIterator<Item = &'a MultiDegree>,
{
    let mut table = CohomologyTable::new(e.shape().clone());
    for d in twists {
        for &t in degrees {
            if t > e.shape().total_dim() {
                return Err(Error::InvalidInput(format!(
                    "cohomological degree {t} exceeds dimension {}",
                    e.shape().total_dim()
                )));
            }
            table.insert(t, d.clone(), sum_cohomology_dim(e, d, t)?);
        }
    }
    Ok(table)
}
