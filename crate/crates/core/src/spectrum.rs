//! Laplace spectra of cyclic quotients of `Pⁿ(ℂ)`, `S²ⁿ`, `P¹(ℍ)` and `S²ⁿ⁻¹`.
//!
//! Every eigenvalue is some `λ_k`, and its multiplicity on `Γ\M` twisted by
//! `χ` is `Σ_{μ ∈ L} m_{π_k}(μ)`. Because `m_{π_k}(μ)` depends only on the norm
//! of `μ`, the sum collapses to a finite combination of shell counts.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::{binomial, binomial_power, poly_mul, series_div, series_mul};
use crate::theta_counting::{ehrhart_form, for_each_in_box, ThetaLattice};
use crate::weight_lattice::{norm, CongruenceLattice, FamilyKind, GroupFamily, Norm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    /// `Pⁿ(ℂ) = SU(n+1)/S(U(n)×U(1))`
    CPn(usize),
    /// `S²ⁿ = SO(2n+1)/SO(2n)`
    EvenSphere(usize),
    /// `P¹(ℍ) = Sp(2)/Sp(1)×Sp(1)`
    HP1,
    /// `S²ⁿ⁻¹ = SO(2n)/SO(2n−1)`
    OddSphere(usize),
}

impl SpaceKind {
    pub fn family(&self) -> GroupFamily {
        let (kind, n) = match *self {
            SpaceKind::CPn(n) => (FamilyKind::A, n),
            SpaceKind::EvenSphere(n) => (FamilyKind::B, n),
            SpaceKind::HP1 => (FamilyKind::C2, 2),
            SpaceKind::OddSphere(n) => (FamilyKind::D, n),
        };
        GroupFamily::new(kind, n).expect("space kinds carry valid ranks")
    }

    /// Real dimension of the space.
    pub fn dimension(&self) -> usize {
        match *self {
            SpaceKind::CPn(n) | SpaceKind::EvenSphere(n) => 2 * n,
            SpaceKind::HP1 => 4,
            SpaceKind::OddSphere(n) => 2 * n - 1,
        }
    }

    /// The sphere of dimension `d ≥ 1`.
    pub fn sphere(d: usize) -> Result<Self> {
        match d {
            0 => Err(Error::InvalidSpace("s:0".into())),
            d if d % 2 == 0 => Self::checked(SpaceKind::EvenSphere(d / 2)),
            d => Self::checked(SpaceKind::OddSphere(d.div_ceil(2))),
        }
    }

    fn checked(space: Self) -> Result<Self> {
        let n = match space {
            SpaceKind::CPn(n) | SpaceKind::EvenSphere(n) | SpaceKind::OddSphere(n) => n,
            SpaceKind::HP1 => 2,
        };
        if n == 0 || n > 62 {
            return Err(Error::InvalidSpace(space.to_string()));
        }
        Ok(space)
    }

    /// The lattice whose norm shells govern the spectrum of `Γ_{q,s}\M`
    /// twisted by `χ_u`; for `P¹(ℍ)` this is already intersected with `D₂`.
    pub fn lattice(&self, q: i64, s: Vec<i64>, u: i64) -> Result<CongruenceLattice> {
        let l = CongruenceLattice::new(self.family(), q, s, u)?;
        match self {
            SpaceKind::HP1 => l.d2_intersection(),
            _ => Ok(l),
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpaceKind::CPn(n) => write!(f, "cp:{n}"),
            SpaceKind::HP1 => write!(f, "hp1"),
            other => write!(f, "s:{}", other.dimension()),
        }
    }
}

impl FromStr for SpaceKind {
    type Err = Error;

    /// `cp:<n>`, `s:<d>` or `hp1`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidSpace(text.to_string());
        let lower = text.trim().to_ascii_lowercase();
        if lower == "hp1" {
            return Ok(SpaceKind::HP1);
        }
        let (head, tail) = lower.split_once(':').ok_or_else(bad)?;
        let value: usize = tail.parse().map_err(|_| bad())?;
        match head {
            "cp" => Self::checked(SpaceKind::CPn(value)).map_err(|_| bad()),
            "s" => Self::sphere(value).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

/// `λ_k`: `k(k+n)` on `Pⁿ(ℂ)`, `k(k+2n−1)` on `S²ⁿ`, `k(k+3)` on `P¹(ℍ)`,
/// `k(k+2n−2)` on `S²ⁿ⁻¹`.
pub fn eigenvalue(space: SpaceKind, k: u64) -> u128 {
    let k = k as u128;
    let shift = match space {
        SpaceKind::CPn(n) => n as u128,
        SpaceKind::EvenSphere(n) => 2 * n as u128 - 1,
        SpaceKind::HP1 => 3,
        SpaceKind::OddSphere(n) => 2 * n as u128 - 2,
    };
    k * (k + shift)
}

/// Multiplicity of the weight `μ` in the spherical representation `π_k`.
pub fn weight_multiplicity(family: GroupFamily, k: u64, mu: &[i64]) -> BigUint {
    let n = family.rank() as i64;
    let k = k as i64;
    match family.kind() {
        FamilyKind::A => {
            let one = norm(mu, Norm::One) as i64;
            if one % 2 != 0 || one / 2 > k {
                return BigUint::zero();
            }
            binomial(k - one / 2 + n - 1, n - 1)
        }
        FamilyKind::B => {
            let one = norm(mu, Norm::One) as i64;
            if one > k {
                return BigUint::zero();
            }
            binomial((k - one) / 2 + n - 1, n - 1)
        }
        FamilyKind::C2 => {
            let inf = norm(mu, Norm::Inf) as i64;
            if inf > k || (mu[0] + mu[1]).rem_euclid(2) != 0 {
                return BigUint::zero();
            }
            BigUint::from(((k - inf) / 2 + 1) as u64)
        }
        FamilyKind::D => {
            let one = norm(mu, Norm::One) as i64;
            if one > k || (k - one) % 2 != 0 {
                return BigUint::zero();
            }
            odd_sphere_weight((k - one) / 2, n)
        }
    }
}

// C(j+n−2, n−2); in rank one only the top shell carries weight.
fn odd_sphere_weight(j: i64, n: i64) -> BigUint {
    if n == 1 {
        return if j == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(j + n - 2, n - 2)
}

fn check_family(l: &CongruenceLattice, space: SpaceKind) -> Result<()> {
    if l.family() != space.family() {
        return Err(Error::FamilyMismatch {
            lattice: l.family().to_string(),
            space: space.to_string(),
        });
    }
    Ok(())
}

// For P¹(ℍ) the shells are those of D₂ ∩ L.
fn spectral_lattice(l: &CongruenceLattice, space: SpaceKind) -> Result<CongruenceLattice> {
    check_family(l, space)?;
    match space {
        SpaceKind::HP1 if !l.is_even_sublattice() => l.d2_intersection(),
        _ => Ok(l.clone()),
    }
}

/// Theta coefficients that feed the multiplicity formulas for `space`.
pub fn spectral_theta(l: &CongruenceLattice, space: SpaceKind, len: usize) -> Result<Vec<u128>> {
    spectral_lattice(l, space)?.theta_counts(len)
}

/// Multiplicities of `λ_0, …, λ_{levels−1}` from theta coefficients `theta`
/// (which must hold at least `levels` entries).
pub fn multiplicities_from_theta(space: SpaceKind, theta: &[u128], levels: usize) -> Vec<BigUint> {
    let at = |i: i64| -> BigUint {
        if i < 0 {
            BigUint::zero()
        } else {
            BigUint::from(theta[i as usize])
        }
    };
    (0..levels as i64)
        .map(|k| match space {
            SpaceKind::CPn(n) => (0..=k)
                .map(|r| binomial(r + n as i64 - 1, n as i64 - 1) * at(k - r))
                .sum(),
            SpaceKind::EvenSphere(_) | SpaceKind::HP1 => {
                let n = space.family().rank() as i64;
                (0..=k / 2)
                    .map(|r| binomial(r + n - 1, n - 1) * (at(k - 2 * r) + at(k - 1 - 2 * r)))
                    .sum()
            }
            SpaceKind::OddSphere(n) => (0..=k / 2)
                .map(|r| odd_sphere_weight(r, n as i64) * at(k - 2 * r))
                .sum(),
        })
        .collect()
}

/// Multiplicity of `λ_k` in the spectrum of the twisted Laplacian on the
/// quotient described by `l`.
pub fn multiplicity(l: &CongruenceLattice, space: SpaceKind, k: u64) -> Result<BigUint> {
    let len = k as usize + 1;
    let theta = spectral_theta(l, space, len)?;
    Ok(multiplicities_from_theta(space, &theta, len).pop().expect("len ≥ 1"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub k: u64,
    pub eigenvalue: u128,
    pub multiplicity: BigUint,
}

/// Levels `0 … K−1`, zero multiplicities included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumDescriptor {
    pub space: SpaceKind,
    pub entries: Vec<SpectrumEntry>,
}

pub fn spectrum_table(l: &CongruenceLattice, space: SpaceKind, levels: usize) -> Result<SpectrumDescriptor> {
    let theta = spectral_theta(l, space, levels)?;
    let entries = multiplicities_from_theta(space, &theta, levels)
        .into_iter()
        .enumerate()
        .map(|(k, multiplicity)| SpectrumEntry {
            k: k as u64,
            eigenvalue: eigenvalue(space, k as u64),
            multiplicity,
        })
        .collect();
    Ok(SpectrumDescriptor { space, entries })
}

// Numerator factor and denominator of F / ϑ.
fn theta_to_spectral_factor(space: SpaceKind) -> (Vec<BigInt>, Vec<BigInt>) {
    let one = vec![BigInt::one()];
    let one_plus_z = vec![BigInt::one(), BigInt::one()];
    match space {
        SpaceKind::CPn(n) => (one, binomial_power(1, -1, n as u32)),
        SpaceKind::EvenSphere(n) => (one_plus_z, binomial_power(2, -1, n as u32)),
        SpaceKind::HP1 => (one_plus_z, binomial_power(2, -1, 2)),
        SpaceKind::OddSphere(n) => (one, binomial_power(2, -1, n as u32 - 1)),
    }
}

/// `F(z) = Σ mult(λ_k) zᵏ` as an exact quotient of integer polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralGeneratingFunction {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
}

impl SpectralGeneratingFunction {
    pub fn expand(&self, len: usize) -> Vec<BigInt> {
        series_div(&self.numerator, &self.denominator, len)
    }
}

/// The rational function `F` for an untwisted quotient, assembled from the
/// rational form of the theta series.
pub fn spectral_generating_function(
    l: &CongruenceLattice,
    space: SpaceKind,
) -> Result<SpectralGeneratingFunction> {
    let lattice = spectral_lattice(l, space)?;
    let form = ehrhart_form(&lattice)?;
    let (factor, extra) = theta_to_spectral_factor(space);
    Ok(SpectralGeneratingFunction {
        numerator: poly_mul(&factor, &form.full_numerator()),
        denominator: poly_mul(&form.denominator(), &extra),
    })
}

/// The first `len` coefficients of `F` computed from the truncated theta
/// series, for any character.
pub fn spectral_series(l: &CongruenceLattice, space: SpaceKind, len: usize) -> Result<Vec<BigUint>> {
    let theta: Vec<BigInt> = spectral_theta(l, space, len)?.into_iter().map(BigInt::from).collect();
    let (factor, den) = theta_to_spectral_factor(space);
    let num = series_mul(&factor, &theta, len);
    Ok(series_div(&num, &den, len)
        .into_iter()
        .map(|c| c.to_biguint().expect("multiplicities are non-negative"))
        .collect())
}

/// A rational exponent `num/den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exponent {
    pub num: i64,
    pub den: i64,
}

impl Exponent {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter("exponent denominator must be nonzero".into()));
        }
        let g = num_integer::gcd(num, den).max(1);
        let sign = den.signum();
        Ok(Self { num: sign * num / g, den: sign * den / g })
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("invalid exponent '{text}'"));
        match text.split_once('/') {
            Some((a, b)) => Self::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            None => Self::new(text.trim().parse().map_err(|_| bad())?, 1),
        }
    }
}

/// A zeta partial sum: exact for integral exponents, a double otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum ZetaValue {
    Exact(BigRational),
    Approx(f64),
}

impl ZetaValue {
    /// Decimal rendering with `digits` places after the point (truncated
    /// toward zero for exact values).
    pub fn to_decimal(&self, digits: usize) -> String {
        match self {
            ZetaValue::Approx(x) => format!("{x:.digits$}"),
            ZetaValue::Exact(r) => {
                let neg = r.is_negative();
                let r = r.abs();
                let int = r.numer() / r.denom();
                let mut rem = r.numer() - &int * r.denom();
                let mut out = format!("{}{int}", if neg { "-" } else { "" });
                if digits > 0 {
                    out.push('.');
                    for _ in 0..digits {
                        rem *= 10;
                        let d = &rem / r.denom();
                        rem -= &d * r.denom();
                        out.push_str(&d.to_string());
                    }
                }
                out
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ZetaValue::Approx(x) => *x,
            ZetaValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

/// `Σ_{k=1}^{K−1} mult(λ_k) λ_k^{−exponent}`.
pub fn zeta_partial(
    l: &CongruenceLattice,
    space: SpaceKind,
    exponent: Exponent,
    levels: usize,
) -> Result<ZetaValue> {
    let table = spectrum_table(l, space, levels)?;
    let terms = table.entries.iter().skip(1).filter(|e| !e.multiplicity.is_zero());
    if exponent.den == 1 {
        let mut acc = BigRational::zero();
        for e in terms {
            let lambda = BigInt::from(e.eigenvalue);
            let power = num_traits::pow(lambda, exponent.num.unsigned_abs() as usize);
            let mult = BigInt::from(e.multiplicity.clone());
            acc += if exponent.num >= 0 {
                BigRational::new(mult, power)
            } else {
                BigRational::from_integer(mult * power)
            };
        }
        Ok(ZetaValue::Exact(acc))
    } else {
        let s = exponent.num as f64 / exponent.den as f64;
        let total = terms
            .map(|e| e.multiplicity.to_f64().unwrap_or(f64::INFINITY) * (e.eigenvalue as f64).powf(-s))
            .sum();
        Ok(ZetaValue::Approx(total))
    }
}

/// Highest weight of `π_k` in ε-coordinates.
fn highest_weight(family: GroupFamily, k: i64) -> Vec<i64> {
    let mut hw = vec![0i64; family.ambient_dim()];
    hw[0] = k;
    match family.kind() {
        FamilyKind::A => *hw.last_mut().expect("rank ≥ 1") = -k,
        FamilyKind::C2 => hw[1] = k,
        FamilyKind::B | FamilyKind::D => {}
    }
    hw
}

// Doubled half-sum of positive roots and the positive roots themselves.
fn root_data(family: GroupFamily) -> (Vec<i64>, Vec<Vec<i64>>) {
    let n = family.rank();
    let dim = family.ambient_dim();
    let unit = |i: usize, c: i64| {
        let mut v = vec![0i64; dim];
        v[i] += c;
        v
    };
    let add = |a: Vec<i64>, b: Vec<i64>| a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let mut roots = Vec::new();
    match family.kind() {
        FamilyKind::A => {
            for i in 0..dim {
                for j in i + 1..dim {
                    roots.push(add(unit(i, 1), unit(j, -1)));
                }
            }
        }
        kind => {
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(add(unit(i, 1), unit(j, -1)));
                    roots.push(add(unit(i, 1), unit(j, 1)));
                }
                match kind {
                    FamilyKind::B => roots.push(unit(i, 1)),
                    FamilyKind::C2 => roots.push(unit(i, 2)),
                    _ => {}
                }
            }
        }
    }
    let two_rho = roots.iter().fold(vec![0i64; dim], |acc, r| add(acc, r.clone()));
    (two_rho, roots)
}

/// `dim π_k` from the Weyl dimension formula `Π_α (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(family: GroupFamily, k: u64) -> BigUint {
    let (two_rho, roots) = root_data(family);
    let hw = highest_weight(family, k as i64);
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    let shifted: Vec<i64> = hw.iter().zip(&two_rho).map(|(h, r)| 2 * h + r).collect();
    let mut value = BigRational::one();
    for alpha in &roots {
        value *= BigRational::new(dot(&shifted, alpha).into(), dot(&two_rho, alpha).into());
    }
    value.to_integer().to_biguint().expect("dimensions are positive")
}

/// `Σ_μ m_{π_k}(μ)` over every integral weight of the family.
pub fn full_lattice_dimension(family: GroupFamily, k: u64) -> BigUint {
    let (which, bound) = match family.kind() {
        FamilyKind::A => (Norm::One, 2 * k),
        FamilyKind::C2 => (Norm::Inf, k),
        FamilyKind::B | FamilyKind::D => (Norm::One, k),
    };
    let mut total = BigUint::zero();
    let zero_sum = family.kind() == FamilyKind::A;
    for_each_in_box(family.ambient_dim(), which, bound, zero_sum, &mut |mu, _| {
        total += weight_multiplicity(family, k, mu);
    });
    total
}

/// Whether the weight-multiplicity sum agrees with the Weyl dimension.
pub fn full_lattice_dimension_check(family: GroupFamily, k: u64) -> bool {
    full_lattice_dimension(family, k) == weyl_dimension(family, k)
}
