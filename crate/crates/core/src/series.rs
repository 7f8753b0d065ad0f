//! Exact integer polynomials and truncated power series.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// `C(top, bottom)`, zero outside `0 ≤ bottom ≤ top`.
pub fn binomial(top: i64, bottom: i64) -> BigUint {
    if bottom < 0 || top < 0 || bottom > top {
        return BigUint::zero();
    }
    let bottom = bottom.min(top - bottom) as u64;
    let top = top as u64;
    let mut acc = BigUint::one();
    for i in 0..bottom {
        acc *= top - i;
        acc /= i + 1;
    }
    acc
}

pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Product truncated to the first `len` coefficients.
pub fn series_mul(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1 + sign·z^step)^exp` as a coefficient vector.
pub fn binomial_power(step: usize, sign: i64, exp: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); step * exp as usize + 1];
    for j in 0..=exp as i64 {
        let c = BigInt::from(binomial(exp as i64, j));
        out[step * j as usize] = if sign < 0 && j % 2 == 1 { -c } else { c };
    }
    out
}

/// First `len` coefficients of `num / den`. The constant term of `den` must
/// be `±1`.
pub fn series_div(num: &[BigInt], den: &[BigInt], len: usize) -> Vec<BigInt> {
    let d0 = den.first().expect("nonzero denominator");
    assert!(d0.abs().is_one(), "denominator must have unit constant term");
    let mut out = vec![BigInt::zero(); len];
    for k in 0..len {
        let mut acc = num.get(k).cloned().unwrap_or_default();
        for j in 1..den.len().min(k + 1) {
            if !den[j].is_zero() {
                acc -= &den[j] * &out[k - j];
            }
        }
        out[k] = if d0.is_negative() { -acc } else { acc };
    }
    out
}

/// Drops trailing zero coefficients.
pub fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}
