//! Multigraded Castelnuovo–Mumford regularity, global generation and the
//! arithmetically Cohen–Macaulay property for line-bundle sums.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::bundle::{LineBundleSum, MultiDegree, Shape};
use crate::cohomology::{sum_cohomology_dim, twist};
use crate::emit::big_number;
use crate::error::Result;
use crate::intervals::nonvanishing_twist_intervals;

/// A point of the 0-regularity window where cohomology survives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityWitness {
    pub t: u32,
    pub j: MultiDegree,
    #[serde(serialize_with = "big_number")]
    pub dim: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityVerdict {
    pub regular: bool,
    pub witnesses: Vec<RegularityWitness>,
}

/// Every `j` with `-n_i <= j_i <= 0`, in lexicographic order.
pub(crate) fn twist_box(shape: &Shape) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &n in shape.dims() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-i64::from(n)..=0).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// `E` is 0-regular when `H^t(E(j)) = 0` for all `t >= 1`, `sum j = -t`,
/// `-n_i <= j_i <= 0`.
pub fn is_zero_regular(e: &LineBundleSum) -> RegularityVerdict {
    let mut witnesses = Vec::new();
    for j in twist_box(e.shape()) {
        let t = -j.iter().sum::<i64>();
        if t < 1 {
            continue;
        }
        let j = MultiDegree::new(j);
        let dim = sum_cohomology_dim(e, &j, t as u32).expect("box matches shape");
        if !dim.is_zero() {
            witnesses.push(RegularityWitness { t: t as u32, j, dim });
        }
    }
    witnesses.sort_by(|a, b| (a.t, &a.j).cmp(&(b.t, &b.j)));
    RegularityVerdict { regular: witnesses.is_empty(), witnesses }
}

/// `E` is `m`-regular when `E(m)` is 0-regular.
pub fn is_m_regular(e: &LineBundleSum, m: &MultiDegree) -> Result<RegularityVerdict> {
    Ok(is_zero_regular(&twist(e, m)?))
}

/// Least `p` such that `E` is `(p, ..., p)`-regular.
///
/// The closed form `max_k max_i (-a^(k)_i)` is confirmed against the
/// definition at `p` and `p - 1`; should it ever disagree, a direct search
/// from that seed takes over.
pub fn regularity_index(e: &LineBundleSum) -> Result<i64> {
    let s = e.shape().factors();
    let regular_at = |p: i64| -> Result<bool> {
        Ok(is_m_regular(e, &MultiDegree::diagonal(p, s))?.regular)
    };
    let seed = e
        .summands()
        .iter()
        .flat_map(|(d, _)| d.entries().iter().map(|&a| -a))
        .max()
        .expect("bundles are nonempty");
    let mut p = seed;
    if regular_at(p)? {
        while regular_at(p - 1)? {
            p -= 1;
        }
    } else {
        while !regular_at(p)? {
            p += 1;
        }
    }
    Ok(p)
}

/// For a line-bundle sum, global generation means every summand degree is
/// componentwise nonnegative.
pub fn is_globally_generated(e: &LineBundleSum) -> bool {
    e.summands().iter().all(|(d, _)| d.entries().iter().all(|&a| a >= 0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AcmWitness {
    pub i: u32,
    pub t: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AcmVerdict {
    pub acm: bool,
    pub witnesses: Vec<AcmWitness>,
}

/// `E` is aCM when `H^i(E(t, ..., t)) = 0` for every `0 < i < dim X` and
/// every integer `t`. Decided exactly through the twist-interval engine; one
/// witness (the smallest bad `t`) per failing `i`.
pub fn is_acm(e: &LineBundleSum) -> AcmVerdict {
    let s = e.shape().factors();
    let zero = MultiDegree::zero(s);
    let mut witnesses = Vec::new();
    for i in 1..e.shape().total_dim() {
        let set = nonvanishing_twist_intervals(e, &zero, i).expect("zero twist matches shape");
        if let Some(first) = set.intervals().first() {
            let t = first.lo.expect("intermediate degrees give bounded sets");
            witnesses.push(AcmWitness { i, t });
        }
    }
    AcmVerdict { acm: witnesses.is_empty(), witnesses }
}

/// Combinatorial aCM test for a single line bundle `O(a)`: it fails exactly
/// when some proper nonempty set `S` of factors has `a_q - a_p >= n_p + 1`
/// for every `p` in `S` and `q` outside it. With two factors this is the
/// pairwise condition of [`acm_pairwise_form`].
pub fn acm_closed_form(a: &MultiDegree, shape: &Shape) -> Result<bool> {
    shape.check_len(a.len())?;
    let s = shape.factors();
    let a = a.wide();
    for mask in 1..(1u64 << s) - 1 {
        let inside = |i: usize| mask >> i & 1 == 1;
        let separated = (0..s).filter(|&p| inside(p)).all(|p| {
            (0..s)
                .filter(|&q| !inside(q))
                .all(|q| a[q] - a[p] >= i128::from(shape.dim(p)) + 1)
        });
        if separated {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `a_i - a_j >= -n_i` for every ordered pair. Sufficient for aCM on any
/// product; also necessary when there are at most two factors.
pub fn acm_pairwise_form(a: &MultiDegree, shape: &Shape) -> Result<bool> {
    shape.check_len(a.len())?;
    let a = a.wide();
    let s = shape.factors();
    Ok((0..s).all(|i| (0..s).all(|j| a[i] - a[j] >= -i128::from(shape.dim(i)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::restrict_factor;

    fn bundle(shape: &[u32], degrees: &[&[i64]]) -> LineBundleSum {
        LineBundleSum::from_degrees(shape, degrees).unwrap()
    }

    fn md(v: &[i64]) -> MultiDegree {
        MultiDegree::from(v)
    }

    /// All of `[lo, hi]^s`.
    fn cube(lo: i64, hi: i64, s: usize) -> Vec<Vec<i64>> {
        (0..s).fold(vec![Vec::new()], |acc, _| {
            acc.into_iter()
                .flat_map(|p| {
                    (lo..=hi).map(move |x| {
                        let mut v = p.clone();
                        v.push(x);
                        v
                    })
                })
                .collect()
        })
    }

    #[test]
    fn zero_regularity_examples() {
        for dims in [&[2u32, 2][..], &[1, 3, 1]] {
            let s = dims.len();
            let o = bundle(dims, &[&vec![0; s]]);
            assert!(is_zero_regular(&o).regular);
            let v = is_zero_regular(&bundle(dims, &[&vec![-1; s]]));
            assert!(!v.regular);
            for w in &v.witnesses {
                assert!(w.t >= 1);
                assert_eq!(w.j.sum(), -i128::from(w.t));
                assert!(!w.dim.is_zero());
            }
        }
        assert!(is_zero_regular(&bundle(&[2, 1], &[&[2, 0], &[0, 1]])).regular);
    }

    #[test]
    fn m_regularity() {
        let e = bundle(&[2, 2], &[&[-3, 2]]);
        assert!(is_m_regular(&e, &md(&[3, 0])).unwrap().regular);
        let o = bundle(&[2, 2], &[&[0, 0]]);
        assert!(!is_m_regular(&o, &md(&[-1, -1])).unwrap().regular);
        assert!(is_m_regular(&o, &md(&[1])).is_err());
        // regular at m stays regular for larger m
        for m in cube(-3, 1, 2) {
            if is_m_regular(&e, &md(&m)).unwrap().regular {
                for step in cube(0, 2, 2) {
                    let bigger: Vec<i64> = m.iter().zip(&step).map(|(a, b)| a + b).collect();
                    assert!(is_m_regular(&e, &md(&bigger)).unwrap().regular);
                }
            }
        }
    }

    #[test]
    fn regularity_index_examples() {
        assert_eq!(regularity_index(&bundle(&[2, 2], &[&[0, 0]])).unwrap(), 0);
        assert_eq!(regularity_index(&bundle(&[2, 2], &[&[-3, 2]])).unwrap(), 3);
        assert_eq!(regularity_index(&bundle(&[2, 2], &[&[5, 5]])).unwrap(), -5);
        assert_eq!(regularity_index(&bundle(&[1, 2, 1], &[&[5, 5, 7], &[1, -2, 4]])).unwrap(), 2);
    }

    /// Least p found by scanning the definition directly.
    fn reg_by_scan(e: &LineBundleSum) -> i64 {
        let s = e.shape().factors();
        (-20..=20)
            .find(|&p| is_m_regular(e, &MultiDegree::diagonal(p, s)).unwrap().regular)
            .unwrap()
    }

    #[test]
    fn single_line_bundle_regular_iff_nonnegative() {
        for a in cube(-3, 3, 2) {
            let e = bundle(&[2, 2], &[&a]);
            assert_eq!(is_zero_regular(&e).regular, a.iter().all(|&x| x >= 0), "{a:?}");
            assert_eq!(regularity_index(&e).unwrap(), reg_by_scan(&e));
        }
    }

    #[test]
    fn direct_sums_are_regular_iff_parts_are() {
        let degrees = cube(-3, 3, 2);
        for (k, a) in degrees.iter().enumerate() {
            let ea = bundle(&[2, 2], &[a]);
            for b in &degrees[k..] {
                let eb = bundle(&[2, 2], &[b]);
                let sum = ea.direct_sum(&eb).unwrap();
                assert_eq!(
                    is_zero_regular(&sum).regular,
                    is_zero_regular(&ea).regular && is_zero_regular(&eb).regular
                );
                assert_eq!(
                    regularity_index(&sum).unwrap(),
                    regularity_index(&ea).unwrap().max(regularity_index(&eb).unwrap())
                );
            }
        }
    }

    #[test]
    fn global_generation() {
        assert!(is_globally_generated(&bundle(&[2, 2], &[&[0, 0]])));
        assert!(!is_globally_generated(&bundle(&[2, 2], &[&[1, -1]])));
        for a in cube(-2, 2, 2) {
            for b in cube(-1, 2, 2) {
                let e = bundle(&[1, 2], &[&a, &b]);
                if is_zero_regular(&e).regular {
                    assert!(is_globally_generated(&e));
                }
            }
        }
    }

    #[test]
    fn restriction_preserves_zero_regularity() {
        let e = bundle(&[2, 2], &[&[1, 0], &[0, 2]]);
        assert!(is_zero_regular(&e).regular);
        assert!(is_zero_regular(&restrict_factor(&e, 1).unwrap()).regular);
        for a in cube(-1, 2, 3) {
            let e = bundle(&[1, 2, 1], &[&a]);
            if is_zero_regular(&e).regular {
                for i in 0..3 {
                    assert!(is_zero_regular(&restrict_factor(&e, i).unwrap()).regular);
                }
            }
        }
    }

    #[test]
    fn acm_examples() {
        assert!(is_acm(&bundle(&[2, 3], &[&[4, 4]])).acm);
        assert!(is_acm(&bundle(&[1, 2], &[&[0, 1]])).acm);
        let v = is_acm(&bundle(&[1, 2], &[&[0, 2]]));
        assert!(!v.acm);
        assert_eq!(v.witnesses, vec![AcmWitness { i: 1, t: -2 }]);

        let sh = Shape::new(vec![1, 2]).unwrap();
        assert!(acm_closed_form(&md(&[0, 0]), &sh).unwrap());
        assert!(acm_closed_form(&md(&[0, 1]), &sh).unwrap());
        assert!(!acm_closed_form(&md(&[0, 2]), &sh).unwrap());
    }

    #[test]
    fn acm_closed_form_matches_engine() {
        for dims in [&[1u32, 2][..], &[2, 2], &[1, 1, 2]] {
            let sh = Shape::new(dims.to_vec()).unwrap();
            for a in cube(-4, 4, dims.len()) {
                let engine = is_acm(&bundle(dims, &[&a])).acm;
                assert_eq!(acm_closed_form(&md(&a), &sh).unwrap(), engine, "{a:?} on {dims:?}");
            }
        }
    }

    #[test]
    fn pairwise_form_is_sufficient_only() {
        // exact for two factors
        let sh = Shape::new(vec![2, 3]).unwrap();
        for a in cube(-5, 5, 2) {
            assert_eq!(acm_pairwise_form(&md(&a), &sh).unwrap(), acm_closed_form(&md(&a), &sh).unwrap());
        }
        // three factors: still implies aCM
        let sh = Shape::new(vec![1, 1, 2]).unwrap();
        for a in cube(-4, 4, 3) {
            if acm_pairwise_form(&md(&a), &sh).unwrap() {
                assert!(acm_closed_form(&md(&a), &sh).unwrap());
            }
        }
        // but not conversely: O(0,2,1) is aCM although a_2 - a_1 = 2 = n_1 + 1
        assert!(is_acm(&bundle(&[1, 1, 2], &[&[0, 2, 1]])).acm);
        assert!(!acm_pairwise_form(&md(&[0, 2, 1]), &sh).unwrap());
    }

    #[test]
    fn acm_invariant_under_diagonal_twist() {
        for a in cube(-3, 3, 2) {
            let e = bundle(&[1, 2], &[&a, &[0, 0]]);
            let base = is_acm(&e).acm;
            for c in -3..=3 {
                let shifted = twist(&e, &MultiDegree::diagonal(c, 2)).unwrap();
                assert_eq!(is_acm(&shifted).acm, base);
            }
        }
    }
}
