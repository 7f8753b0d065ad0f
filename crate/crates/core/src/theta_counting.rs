//! Norm shells, theta series and their exact rational forms.
//!
//! `N_L(k)` counts members of `L` of norm exactly `k`. The theta series is
//! `Σ N_L(k) zᵏ`, except for `SU(n+1)` where one-norms are always even and the
//! series is reindexed as `Σ N_L(2k) zᵏ`.
//!
//! Shell counts are defined by enumerating the bounding box (see
//! [`shell_count`] and [`shell_counts_box`]). Theta series of congruence
//! lattices are produced by a residue dynamic program over coordinates, which
//! is checked against the box enumeration in the tests.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::cyclotomic::CyclotomicRing;
use crate::error::{Error, Result};
use crate::series::{binomial, binomial_power, poly_mul, series_div};
use crate::weight_lattice::{
    norm, CodeLattice, CongruenceLattice, FamilyKind, GroupFamily, Norm, WeightSet,
};

/// Truncated theta series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaSeries {
    family: GroupFamily,
    coeffs: Vec<BigUint>,
}

impl ThetaSeries {
    pub fn new(family: GroupFamily, coeffs: Vec<BigUint>) -> Self {
        Self { family, coeffs }
    }

    fn from_counts(family: GroupFamily, counts: &[u128]) -> Self {
        Self { family, coeffs: counts.iter().map(|&c| BigUint::from(c)).collect() }
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Number of stored coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Calls `f` on every vector of length `dim` whose `which`-norm is at most
/// `max_norm` (for [`Norm::Two`], the squared norm), and whose coordinates sum
/// to zero when `zero_sum` is set.
pub fn for_each_in_box(
    dim: usize,
    which: Norm,
    max_norm: u64,
    zero_sum: bool,
    f: &mut dyn FnMut(&[i64], u64),
) {
    fn rec(
        w: &mut Vec<i64>,
        dim: usize,
        which: Norm,
        max_norm: u64,
        zero_sum: bool,
        f: &mut dyn FnMut(&[i64], u64),
    ) {
        let used = norm(w, which);
        if w.len() == dim {
            if !zero_sum || w.iter().sum::<i64>() == 0 {
                f(w, used);
            }
            return;
        }
        let bound = match which {
            Norm::One => max_norm - used,
            Norm::Two => ((max_norm - used) as f64).sqrt() as u64 + 1,
            Norm::Inf => max_norm,
        } as i64;
        for a in -bound..=bound {
            w.push(a);
            if norm(w, which) <= max_norm {
                rec(w, dim, which, max_norm, zero_sum, f);
            }
            w.pop();
        }
    }
    let mut w = Vec::with_capacity(dim);
    rec(&mut w, dim, which, max_norm, zero_sum, f);
}

/// `N_L(k)` by direct enumeration of the box `{|aᵢ| ≤ k}` (for the two-norm,
/// `k` is the squared norm and the box is `{aᵢ² ≤ k}`).
pub fn shell_count<L: WeightSet + ?Sized>(lattice: &L, k: u64, which: Norm) -> BigUint {
    let mut count = 0u128;
    for_each_in_box(lattice.ambient_dim(), which, k, lattice.zero_sum(), &mut |w, nrm| {
        if nrm == k && lattice.contains(w) {
            count += 1;
        }
    });
    BigUint::from(count)
}

/// All of `N_L(0), …, N_L(max_norm)` from a single box enumeration.
pub fn shell_counts_box<L: WeightSet + ?Sized>(lattice: &L, which: Norm, max_norm: u64) -> Vec<u128> {
    let mut counts = vec![0u128; max_norm as usize + 1];
    for_each_in_box(lattice.ambient_dim(), which, max_norm, lattice.zero_sum(), &mut |w, nrm| {
        if lattice.contains(w) {
            counts[nrm as usize] += 1;
        }
    });
    counts
}

/// Anything with a theta series.
pub trait ThetaLattice {
    /// Family whose indexing and norm the series follows.
    fn theta_family(&self) -> GroupFamily;

    /// First `len` theta coefficients.
    fn theta_counts(&self, len: usize) -> Result<Vec<u128>>;
}

impl ThetaLattice for CongruenceLattice {
    fn theta_family(&self) -> GroupFamily {
        self.family()
    }

    fn theta_counts(&self, len: usize) -> Result<Vec<u128>> {
        match self.family().kind() {
            FamilyKind::A => zero_sum_one_norm_counts(self, len),
            FamilyKind::C2 => max_norm_counts(self, len),
            FamilyKind::B | FamilyKind::D => one_norm_counts(self, len),
        }
    }
}

impl ThetaLattice for CodeLattice {
    fn theta_family(&self) -> GroupFamily {
        GroupFamily::new(FamilyKind::D, self.dim()).expect("code length is a valid rank")
    }

    fn theta_counts(&self, len: usize) -> Result<Vec<u128>> {
        code_shell_counts(self, Norm::One, len.saturating_sub(1) as u64)
    }
}

/// Theta series truncated to `terms` coefficients, in the family's default norm.
pub fn theta_truncated<L: ThetaLattice + ?Sized>(lattice: &L, terms: usize) -> Result<ThetaSeries> {
    if terms == 0 {
        return Err(Error::InvalidParameter("at least one coefficient is required".into()));
    }
    let counts = lattice.theta_counts(terms)?;
    Ok(ThetaSeries::from_counts(lattice.theta_family(), &counts))
}

fn add(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow("counting lattice points"))
}

// One-norm shells of L_{q,s,u} ⊂ ℤⁿ. The table h[m·q + r] counts prefixes of
// norm m and residue r. Appending a coordinate a = ±t adds t to the norm and
// ±t·c to the residue, so the new table is a pair of running sums along the
// diagonals (m, r) → (m−1, r ∓ c).
fn one_norm_counts(l: &CongruenceLattice, len: usize) -> Result<Vec<u128>> {
    let q = l.q() as usize;
    let mut h = vec![0u128; len * q];
    if len == 0 {
        return Ok(Vec::new());
    }
    h[0] = 1;
    let mut plus = vec![0u128; len * q];
    let mut minus = vec![0u128; len * q];
    for &c in l.congruence_coeffs() {
        let c = c as usize % q;
        for m in 0..len {
            for r in 0..q {
                let idx = m * q + r;
                let (p, n) = if m == 0 {
                    (0, 0)
                } else {
                    (plus[(m - 1) * q + (r + q - c) % q], minus[(m - 1) * q + (r + c) % q])
                };
                plus[idx] = add(h[idx], p)?;
                minus[idx] = add(h[idx], n)?;
            }
        }
        for idx in 0..len * q {
            h[idx] = add(plus[idx], minus[idx])? - h[idx];
        }
    }
    let u = l.u() as usize;
    Ok((0..len).map(|m| h[m * q + u]).collect())
}

// Zero-sum vectors of one-norm 2k have positive mass k and negative mass k.
// State: (positive mass, negative mass, residue), each bounded by len − 1.
fn zero_sum_one_norm_counts(l: &CongruenceLattice, len: usize) -> Result<Vec<u128>> {
    if len == 0 {
        return Ok(Vec::new());
    }
    let q = l.q() as usize;
    let size = len
        .checked_mul(len)
        .and_then(|x| x.checked_mul(q))
        .ok_or(Error::Overflow("sizing the shell-count table"))?;
    let at = |p: usize, n: usize, r: usize| (p * len + n) * q + r;
    let mut h = vec![0u128; size];
    h[0] = 1;
    let mut plus = vec![0u128; size];
    let mut minus = vec![0u128; size];
    for &c in l.congruence_coeffs() {
        let c = c as usize % q;
        for p in 0..len {
            for n in 0..len {
                for r in 0..q {
                    let idx = at(p, n, r);
                    let pp = if p == 0 { 0 } else { plus[at(p - 1, n, (r + q - c) % q)] };
                    plus[idx] = add(h[idx], pp)?;
                }
            }
        }
        for p in 0..len {
            for n in 0..len {
                for r in 0..q {
                    let idx = at(p, n, r);
                    let mm = if n == 0 { 0 } else { minus[at(p, n - 1, (r + c) % q)] };
                    minus[idx] = add(h[idx], mm)?;
                }
            }
        }
        for idx in 0..size {
            h[idx] = add(plus[idx], minus[idx])? - h[idx];
        }
    }
    let u = l.u() as usize;
    Ok((0..len).map(|k| h[at(k, k, u)]).collect())
}

// Max-norm shells in rank two: walk the boundary of each square.
fn max_norm_counts(l: &CongruenceLattice, len: usize) -> Result<Vec<u128>> {
    let mut out = Vec::with_capacity(len);
    for k in 0..len as i64 {
        if k == 0 {
            out.push(l.contains(&[0, 0]) as u128);
            continue;
        }
        let mut c = 0u128;
        for a in -k..=k {
            c += l.contains(&[a, k]) as u128 + l.contains(&[a, -k]) as u128;
        }
        for b in -k + 1..k {
            c += l.contains(&[k, b]) as u128 + l.contains(&[-k, b]) as u128;
        }
        out.push(c);
    }
    Ok(out)
}

/// Shell counts of a code lattice for `k ≤ max_norm` in the one-norm or the
/// squared two-norm, by a dynamic program over (norm, parity word).
pub fn code_shell_counts(code: &CodeLattice, which: Norm, max_norm: u64) -> Result<Vec<u128>> {
    let n = code.dim();
    if n > 20 {
        return Err(Error::InvalidParameter("code length too large for parity tracking".into()));
    }
    let len = max_norm as usize + 1;
    let words = 1usize << n;
    let mut h = vec![0u128; len * words];
    h[0] = 1;
    for i in 0..n {
        let mut next = vec![0u128; len * words];
        for m in 0..len {
            for w in 0..words {
                let cur = h[m * words + w];
                if cur == 0 {
                    continue;
                }
                for t in 0u64.. {
                    let cost = match which {
                        Norm::One => t,
                        Norm::Two => t * t,
                        Norm::Inf => {
                            return Err(Error::InvalidParameter(
                                "code lattices support one- and two-norm shells".into(),
                            ))
                        }
                    } as usize;
                    if m + cost >= len {
                        break;
                    }
                    let mult = if t == 0 { 1 } else { 2 };
                    let nw = if t % 2 == 1 { w ^ (1 << i) } else { w };
                    let slot = &mut next[(m + cost) * words + nw];
                    *slot = add(*slot, cur * mult)?;
                }
            }
        }
        h = next;
    }
    Ok((0..len)
        .map(|m| {
            (0..words)
                .filter(|&w| code.contains_parity(w as u64))
                .map(|w| h[m * words + w])
                .sum()
        })
        .collect())
}

/// Numerator `p(z)` of `ϑ_L(z) = (1 − z) p(z) / (1 − z^q)^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalForm {
    q: i64,
    n: usize,
    numerator: Vec<BigInt>,
}

impl RationalForm {
    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `h₀, …, h_{(n+1)q−1}`.
    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    /// `(1 − z) p(z)`.
    pub fn full_numerator(&self) -> Vec<BigInt> {
        poly_mul(&[BigInt::from(1), BigInt::from(-1)], &self.numerator)
    }

    /// `(1 − z^q)^{n+1}`.
    pub fn denominator(&self) -> Vec<BigInt> {
        binomial_power(self.q as usize, -1, self.n as u32 + 1)
    }

    /// First `len` coefficients of the rational function.
    pub fn expand(&self, len: usize) -> Vec<BigInt> {
        series_div(&self.full_numerator(), &self.denominator(), len)
    }
}

/// Cumulative counts `Φ(k) = Σ_{m ≤ k} N_L(m)`.
pub fn cumulative(counts: &[u128]) -> Vec<BigInt> {
    let mut acc = BigInt::zero();
    counts
        .iter()
        .map(|&c| {
            acc += c;
            acc.clone()
        })
        .collect()
}

/// Exact rational form of the theta series of an untwisted lattice, with
/// `h_{k₀+l₀q} = Σ_{j ≤ l₀} (−1)ʲ C(n+1, j) Φ(k₀ + q(l₀ − j))`.
pub fn ehrhart_form(lattice: &CongruenceLattice) -> Result<RationalForm> {
    if lattice.u() != 0 {
        return Err(Error::AffineUnsupported(lattice.u()));
    }
    let q = lattice.q() as usize;
    let n = lattice.family().rank();
    let len = (n + 1) * q;
    let phi = cumulative(&lattice.theta_counts(len)?);
    let mut numerator = vec![BigInt::zero(); len];
    for l0 in 0..=n {
        for k0 in 0..q {
            let mut h = BigInt::zero();
            for j in 0..=l0 {
                let term = BigInt::from(binomial(n as i64 + 1, j as i64)) * &phi[k0 + q * (l0 - j)];
                if j % 2 == 0 {
                    h += term;
                } else {
                    h -= term;
                }
            }
            numerator[k0 + l0 * q] = h;
        }
    }
    Ok(RationalForm { q: lattice.q(), n, numerator })
}

// (1 − z²)^power / q · Σ_l Π_j 1/((z − ξ^{l sⱼ})(z − ξ^{−l sⱼ})), with all
// arithmetic in ℤ[ξ_q]. The l-sum must collapse to rational integers
// divisible by q.
fn cyclotomic_product_sum(q: i64, s: &[i64], len: usize, power: u32) -> Result<Vec<i128>> {
    let ring = CyclotomicRing::new(q as usize);
    let mut total = vec![ring.zero(); len];
    for l in 0..q {
        let mut series = vec![ring.zero(); len];
        if len > 0 {
            series[0] = ring.from_int(1);
        }
        for &sj in s {
            let e = (l as i128 * sj as i128).rem_euclid(q as i128) as i64;
            let c = ring.add(&ring.root_power(e), &ring.root_power(-e))?;
            // divide by 1 − c z + z²: b_k = a_k + c b_{k−1} − b_{k−2}
            for k in 0..len {
                let mut b = series[k].clone();
                if k >= 1 {
                    b = ring.add(&b, &ring.mul(&c, &series[k - 1])?)?;
                }
                if k >= 2 {
                    b = ring.sub(&b, &series[k - 2])?;
                }
                series[k] = b;
            }
        }
        for (t, x) in total.iter_mut().zip(&series) {
            *t = ring.add(t, x)?;
        }
    }
    let mut ints = Vec::with_capacity(len);
    for (k, t) in total.iter().enumerate() {
        ints.push(ring.as_integer(t).ok_or(Error::NonIntegralCoefficient(k))?);
    }
    let factor = binomial_power(2, -1, power);
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = 0i128;
        for (j, f) in factor.iter().enumerate().take(k + 1) {
            let f = f.to_i128().expect("small binomial");
            acc = f
                .checked_mul(ints[k - j])
                .and_then(|x| acc.checked_add(x))
                .ok_or(Error::Overflow("expanding the cyclotomic product"))?;
        }
        if acc.rem_euclid(q as i128) != 0 || acc < 0 {
            return Err(Error::NonIntegralCoefficient(k));
        }
        out.push(acc / q as i128);
    }
    Ok(out)
}

/// Theta series of `L_{q,s}` (one-norm, `u = 0`) from the product formula
/// `ϑ = (1 − z²)ⁿ/q · Σ_l Π_j ((z − ξ^{l sⱼ})(z − ξ^{−l sⱼ}))⁻¹`, evaluated
/// exactly in the cyclotomic integers.
pub fn zagier_theta(q: i64, s: &[i64], terms: usize) -> Result<ThetaSeries> {
    let family = GroupFamily::new(FamilyKind::D, s.len())?;
    // validates gcd(q, s) = 1
    CongruenceLattice::new(family, q, s.to_vec(), 0)?;
    let coeffs = cyclotomic_product_sum(q, s, terms, s.len() as u32)?;
    Ok(ThetaSeries::new(family, coeffs.into_iter().map(|c| BigUint::from(c as u128)).collect()))
}

/// Spectral generating function of the lens space `Γ_{q,s}\S^{2n−1}` from
/// the closed formula `F = (1 − z²)/q · Σ_l Π_j ((z − ξ^{l sⱼ})(z − ξ^{−l sⱼ}))⁻¹`.
pub fn ikeda_generating_function(q: i64, s: &[i64], terms: usize) -> Result<Vec<BigUint>> {
    let family = GroupFamily::new(FamilyKind::D, s.len())?;
    CongruenceLattice::new(family, q, s.to_vec(), 0)?;
    let coeffs = cyclotomic_product_sum(q, s, terms, 1)?;
    Ok(coeffs.into_iter().map(|c| BigUint::from(c as u128)).collect())
}
