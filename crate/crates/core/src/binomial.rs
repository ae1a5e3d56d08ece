//! Exact binomial coefficients.
//!
//! Two flavours are needed: the combinatorial coefficient, which counts
//! subsets and monomials and is zero whenever the top argument is too small,
//! and the polynomial extension `x(x-1)...(x-k+1)/k!`, which is the right
//! object for Euler characteristics because it stays a polynomial in `x`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Combinatorial `C(top, k)`; zero when `top < k` (in particular for negative `top`).
pub fn binomial(top: i128, k: u32) -> BigUint {
    let k_wide = i128::from(k);
    if top < k_wide {
        return BigUint::zero();
    }
    let k = k.min((top - k_wide).min(k_wide) as u32);
    let base = top - i128::from(k);
    // after step i the accumulator equals C(base + i, i), so every division is exact
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= BigUint::from((base + i128::from(i)) as u128);
        acc /= BigUint::from(i);
    }
    acc
}

/// Polynomial extension of the binomial coefficient, valid for any integer `x`.
pub fn binom_poly(x: i128, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(x - i128::from(i));
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// `binom_poly` in machine integers; `None` on overflow.
pub(crate) fn binom_poly_small(x: i128, k: u32) -> Option<i128> {
    // after step i the accumulator is binom_poly(x, i), an integer
    let mut acc: i128 = 1;
    for i in 0..i128::from(k) {
        acc = acc.checked_mul(x.checked_sub(i)?)? / (i + 1);
    }
    Some(acc)
}
