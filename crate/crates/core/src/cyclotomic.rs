//! Exact arithmetic in the ring of cyclotomic integers `ℤ[ξ_q] ≅ ℤ[x]/Φ_q(x)`.
//!
//! Elements are coefficient vectors over the power basis `1, ξ, …, ξ^{φ(q)−1}`.
//! Every power `ξ^e` is reduced once up front, so multiplication is a plain
//! convolution followed by a table-driven reduction.

use crate::error::{Error, Result};

/// Integer coefficients of the `q`-th cyclotomic polynomial, constant term
/// first. Computed by dividing `x^q − 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(q: usize) -> Vec<i64> {
    assert!(q >= 1);
    let mut poly = vec![0i64; q + 1];
    poly[0] = -1;
    poly[q] = 1;
    for d in 1..q {
        if q.is_multiple_of(d) {
            poly = exact_div_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub type CycElem = Vec<i128>;

#[derive(Debug, Clone)]
pub struct CyclotomicRing {
    q: usize,
    degree: usize,
    // powers[e] = ξ^e in the power basis, for 0 ≤ e < q
    powers: Vec<CycElem>,
}

impl CyclotomicRing {
    pub fn new(q: usize) -> Self {
        let phi = cyclotomic_polynomial(q);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(q);
        let mut cur = vec![0i128; degree];
        cur[0] = 1;
        for _ in 0..q {
            powers.push(cur.clone());
            // multiply by x, then reduce x^degree = −(φ₀ + … + φ_{d−1} x^{d−1})
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..degree {
                cur[i] -= top * phi[i] as i128;
            }
        }
        Self { q, degree, powers }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(&self) -> CycElem {
        vec![0; self.degree]
    }

    pub fn from_int(&self, c: i128) -> CycElem {
        let mut e = self.zero();
        e[0] = c;
        e
    }

    /// `ξ^e` for any integer exponent.
    pub fn root_power(&self, e: i64) -> CycElem {
        self.powers[e.rem_euclid(self.q as i64) as usize].clone()
    }

    pub fn add(&self, a: &CycElem, b: &CycElem) -> Result<CycElem> {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow("adding cyclotomic integers")))
            .collect()
    }

    pub fn sub(&self, a: &CycElem, b: &CycElem) -> Result<CycElem> {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.checked_sub(*y).ok_or(Error::Overflow("subtracting cyclotomic integers")))
            .collect()
    }

    pub fn mul(&self, a: &CycElem, b: &CycElem) -> Result<CycElem> {
        let overflow = || Error::Overflow("multiplying cyclotomic integers");
        let mut conv = vec![0i128; 2 * self.degree - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let t = x.checked_mul(*y).ok_or_else(overflow)?;
                conv[i + j] = conv[i + j].checked_add(t).ok_or_else(overflow)?;
            }
        }
        let mut out = self.zero();
        for (e, c) in conv.into_iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.powers[e % self.q]) {
                let t = c.checked_mul(*p).ok_or_else(overflow)?;
                *o = o.checked_add(t).ok_or_else(overflow)?;
            }
        }
        Ok(out)
    }

    /// The element as a rational integer, if it is one.
    pub fn as_integer(&self, a: &CycElem) -> Option<i128> {
        a[1..].iter().all(|&c| c == 0).then_some(a[0])
    }
}
