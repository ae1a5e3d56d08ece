use std::collections::BTreeSet;

use crate::bundle::{MultiDegree, Shape};
use crate::error::Result;

use super::{admissible_region, is_admissible, require_min_dim, validate_r, AdmissibleTuple};

/// Tuples exempt from the vanishing hypothesis of the `{0, 1, 2}`-excess criterion.
///
/// These are exactly the admissible `(i, j)` where one of the allowed summands
/// `O(c e_k)`, `c in {1, 2}`, has nonzero cohomology along some diagonal twist:
/// for each factor `k`, `i = N - n_k`, `j_k = 0` and `j_p in {-n_p, -n_p + 1}`
/// for `p != k`. With two factors this is
/// `{(n_1,-n_1,0), (n_1,-n_1+1,0), (n_2,0,-n_2), (n_2,0,-n_2+1)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalSet12 {
    tuples: BTreeSet<AdmissibleTuple>,
}

impl ExceptionalSet12 {
    pub fn new(shape: &Shape) -> Result<Self> {
        require_min_dim(shape, 2, "the {0,1,2}-excess criterion")?;
        let s = shape.factors();
        let total = shape.total_dim();
        let mut tuples = BTreeSet::new();
        for k in 0..s {
            let i = total - shape.dim(k);
            let others: Vec<usize> = (0..s).filter(|&p| p != k).collect();
            for bits in 0..(1u64 << others.len()) {
                let mut j = vec![0i64; s];
                for (b, &p) in others.iter().enumerate() {
                    j[p] = -i64::from(shape.dim(p)) + (bits >> b & 1) as i64;
                }
                let j = MultiDegree::new(j);
                if is_admissible(shape, i, &j) {
                    tuples.insert(AdmissibleTuple { i, j });
                }
            }
        }
        Ok(ExceptionalSet12 { tuples })
    }

    pub fn contains(&self, i: u32, j: &MultiDegree) -> bool {
        self.tuples.contains(&AdmissibleTuple { i, j: j.clone() })
    }

    pub fn tuples(&self) -> impl Iterator<Item = &AdmissibleTuple> {
        self.tuples.iter()
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

/// Tuples exempt from the vanishing hypothesis of the `r`-parametrised criterion:
/// `(i, j)` is exceptional when, for some factor `k`, `i = n_k` and
/// `j_m - j_k >= n_k - r_k + 1` for every `m != k`.
///
/// This is the nonvanishing locus of the allowed summands `O(-c e_k)`,
/// `0 <= c <= r_k`. Empty for factor `k` when `r_k = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalSet13 {
    shape: Shape,
    r: Vec<u32>,
}

impl ExceptionalSet13 {
    pub fn new(shape: &Shape, r: &[u32]) -> Result<Self> {
        validate_r(shape, r)?;
        Ok(ExceptionalSet13 { shape: shape.clone(), r: r.to_vec() })
    }

    pub fn contains(&self, i: u32, j: &MultiDegree) -> bool {
        let j = j.entries();
        (0..self.shape.factors()).any(|k| {
            let nk = self.shape.dim(k);
            let gap = i64::from(nk) - i64::from(self.r[k]) + 1;
            i == nk && (0..j.len()).filter(|&m| m != k).all(|m| j[m] - j[k] >= gap)
        })
    }

    /// The admissible members, in `(i, j)` order.
    pub fn members(&self) -> Vec<AdmissibleTuple> {
        admissible_region(&self.shape).into_iter().filter(|t| self.contains(t.i, &t.j)).collect()
    }
}

/// The four exceptional tuples of the two-factor `{0, 1, 2}` criterion.
pub fn two_factor_excess_tuples(shape: &Shape) -> Vec<AdmissibleTuple> {
    let (n1, n2) = (i64::from(shape.dim(0)), i64::from(shape.dim(1)));
    let t = |i: i64, a: i64, b: i64| AdmissibleTuple { i: i as u32, j: MultiDegree::new(vec![a, b]) };
    vec![t(n1, -n1, 0), t(n1, -n1 + 1, 0), t(n2, 0, -n2), t(n2, 0, -n2 + 1)]
}

/// The two-factor `r`-parametrised exceptions.
pub fn two_factor_deficit_exceptional(shape: &Shape, r: &[u32], i: u32, j: &MultiDegree) -> bool {
    let (n1, n2) = (i64::from(shape.dim(0)), i64::from(shape.dim(1)));
    let (r1, r2) = (i64::from(r[0]), i64::from(r[1]));
    let (j1, j2) = (j.entries()[0], j.entries()[1]);
    let i = i64::from(i);
    (i == n1 && j2 >= j1 + n1 - r1 + 1) || (i == n2 && j2 <= j1 - n2 + r2 - 1)
}
