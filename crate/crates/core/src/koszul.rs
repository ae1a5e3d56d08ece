//! Koszul resolutions pulled back from a single factor.
//!
//! On `P^n` the Koszul complex `0 -> O(-n-1) -> ... -> O(-1)^{n+1} -> O -> 0`
//! is exact. Pulling it back along the `i`-th projection and twisting gives the
//! complexes used throughout the splitting arguments. Differentials are not
//! modelled; exactness is certified through Euler characteristics and the
//! cohomology isomorphisms it implies.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::binomial::binomial;
use crate::bundle::{LineBundleSum, MultiDegree, Shape};
use crate::cohomology::{euler_characteristic, kunneth_dim};
use crate::emit::big_number;
use crate::error::{Error, Result};

/// Terms indexed by homological position `r = 0, 1, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Complex {
    pub shape: Shape,
    pub terms: Vec<LineBundleSum>,
}

impl Complex {
    pub fn new(terms: Vec<LineBundleSum>) -> Result<Self> {
        let shape = terms.first().ok_or(Error::EmptyBundle)?.shape().clone();
        if let Some(bad) = terms.iter().find(|t| t.shape() != &shape) {
            return Err(Error::LengthMismatch { expected: shape.factors(), found: bad.shape().factors() });
        }
        Ok(Complex { shape, terms })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Pullback along factor `i` (0-based) of the Koszul resolution, twisted by `d`:
/// the `r`-th term is `O(d - r e_i)^{C(n_i + 1, r)}` for `r = 0..=n_i + 1`.
pub fn koszul_factor_complex(shape: &Shape, i: usize, d: &MultiDegree) -> Result<Complex> {
    shape.check_factor(i)?;
    shape.check_len(d.len())?;
    let n = shape.dim(i);
    let s = shape.factors();
    let terms = (0..=n + 1)
        .map(|r| {
            let degree = d.checked_add(&MultiDegree::axis(i, -i64::from(r), s))?;
            let mult = binomial(i128::from(n) + 1, r);
            let mult = u64::try_from(mult).map_err(|_| Error::InvalidInput("rank overflow".into()))?;
            LineBundleSum::new(shape.clone(), [(degree, mult)])
        })
        .collect::<Result<Vec<_>>>()?;
    Complex::new(terms)
}

/// `sum_r (-1)^r chi(term_r(extra_twist)) == 0`, a necessary condition for exactness.
pub fn euler_exactness_check(c: &Complex, extra_twist: &MultiDegree) -> Result<bool> {
    let mut total = BigInt::zero();
    for (r, term) in c.terms.iter().enumerate() {
        let chi = euler_characteristic(term, extra_twist)?;
        if r % 2 == 0 {
            total += chi;
        } else {
            total -= chi;
        }
    }
    Ok(total.is_zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoKind {
    /// `H^{n_j}(O(-(n_j+1) e_j)) ~ H^{N}(O(-n_1-1, ..., -n_s-1))`
    FactorToTop,
    /// `H^0(O) ~ H^{n_j}(O(-(n_j+1) e_j))`
    ConstantsToFactor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoDims {
    pub factor: usize,
    pub kind: IsoKind,
    #[serde(serialize_with = "big_number")]
    pub lhs: BigUint,
    #[serde(serialize_with = "big_number")]
    pub rhs: BigUint,
}

/// Both sides, as dimensions, of the isomorphisms obtained by taking cohomology
/// of the factor Koszul complexes. Every pair should read `(1, 1)`.
pub fn proposition_iso_dims(shape: &Shape) -> Vec<IsoDims> {
    let s = shape.factors();
    let n_total = shape.total_dim();
    let top = kunneth_dim(shape, &shape.canonical_degree(), n_total).expect("shape-sized degree");
    let constants = kunneth_dim(shape, &MultiDegree::zero(s), 0).expect("shape-sized degree");
    let mut out = Vec::with_capacity(2 * s);
    for j in 0..s {
        let nj = shape.dim(j);
        let degree = MultiDegree::axis(j, -i64::from(nj) - 1, s);
        let factor = kunneth_dim(shape, &degree, nj).expect("shape-sized degree");
        out.push(IsoDims { factor: j, kind: IsoKind::FactorToTop, lhs: factor.clone(), rhs: top.clone() });
        out.push(IsoDims { factor: j, kind: IsoKind::ConstantsToFactor, lhs: constants.clone(), rhs: factor });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn shape(v: &[u32]) -> Shape {
        Shape::new(v.to_vec()).unwrap()
    }

    fn md(v: &[i64]) -> MultiDegree {
        MultiDegree::from(v)
    }

    fn term(c: &Complex, r: usize) -> (Vec<i64>, u64) {
        let (d, m) = &c.terms[r].summands()[0];
        (d.entries().to_vec(), *m)
    }

    #[test]
    fn factor_complex_terms() {
        let c = koszul_factor_complex(&shape(&[2, 2]), 0, &md(&[0, 0])).unwrap();
        let got: Vec<_> = (0..c.len()).map(|r| term(&c, r)).collect();
        assert_eq!(got, vec![(vec![0, 0], 1), (vec![-1, 0], 3), (vec![-2, 0], 3), (vec![-3, 0], 1)]);

        let c = koszul_factor_complex(&shape(&[1, 1]), 1, &md(&[0, 1])).unwrap();
        let got: Vec<_> = (0..c.len()).map(|r| term(&c, r)).collect();
        assert_eq!(got, vec![(vec![0, 1], 1), (vec![0, 0], 2), (vec![0, -1], 1)]);

        assert!(koszul_factor_complex(&shape(&[1, 1]), 2, &md(&[0, 0])).is_err());
        assert!(koszul_factor_complex(&shape(&[1, 1]), 0, &md(&[0])).is_err());
    }

    #[test]
    fn term_counts_and_ranks() {
        for dims in [&[1u32][..], &[4], &[2, 3], &[1, 1, 2]] {
            let sh = shape(dims);
            for i in 0..dims.len() {
                let c = koszul_factor_complex(&sh, i, &MultiDegree::zero(dims.len())).unwrap();
                assert_eq!(c.len() as u32, dims[i] + 2);
                let ranks: u64 = c.terms.iter().map(LineBundleSum::rank).sum();
                assert_eq!(ranks, 1 << (dims[i] + 1));
            }
        }
    }

    #[test]
    fn euler_exactness() {
        let sh = shape(&[2, 2]);
        let c = koszul_factor_complex(&sh, 0, &md(&[0, 0])).unwrap();
        // chi of the terms at twist 0: 1, 3*0, 3*0, 1 -> 1 - 0 + 0 - 1 = 0
        let chis: Vec<BigInt> =
            c.terms.iter().map(|t| euler_characteristic(t, &md(&[0, 0])).unwrap()).collect();
        assert_eq!(chis, vec![BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()]);
        assert!(euler_exactness_check(&c, &md(&[0, 0])).unwrap());
        for t in -5..=5 {
            assert!(euler_exactness_check(&c, &md(&[t, t])).unwrap());
        }
        let single = Complex::new(vec![LineBundleSum::structure_sheaf(sh)]).unwrap();
        assert!(!euler_exactness_check(&single, &md(&[0, 0])).unwrap());
    }

    #[test]
    fn iso_dims_are_ones() {
        for dims in [&[2u32, 2][..], &[1, 1, 1], &[3]] {
            let pairs = proposition_iso_dims(&shape(dims));
            assert_eq!(pairs.len(), 2 * dims.len());
            for p in pairs {
                assert_eq!((p.lhs, p.rhs), (BigUint::one(), BigUint::one()));
            }
        }
    }
}
