//! Group families, weights, cyclic subgroup parameters and the affine
//! congruence lattices they cut out of the weight lattice.
//!
//! Coordinates follow the usual ε-basis conventions: a weight of `SU(n+1)` is
//! a zero-sum vector in ℤⁿ⁺¹, every other family uses ℤⁿ. A cyclic subgroup of
//! the maximal torus of order `q` is described by `s ∈ ℤⁿ`, and the character
//! sending the generator to `ξ_q^u` by `u`. The invariant weights twisted by
//! that character are exactly the `μ` with `Σ aᵢsᵢ ≡ u (mod q)`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    /// `SU(n+1)`
    A,
    /// `SO(2n+1)`
    B,
    /// `Sp(2)`
    C2,
    /// `SO(2n)`
    D,
}

/// A classical compact group together with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupFamily {
    kind: FamilyKind,
    n: usize,
}

impl GroupFamily {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        let label = match kind {
            FamilyKind::A => "A",
            FamilyKind::B => "B",
            FamilyKind::C2 => "C2",
            FamilyKind::D => "D",
        };
        if n == 0 || n > 62 || (kind == FamilyKind::C2 && n != 2) {
            return Err(Error::InvalidRank { family: label, n });
        }
        Ok(Self { kind, n })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Length of a weight vector in this family.
    pub fn ambient_dim(&self) -> usize {
        match self.kind {
            FamilyKind::A => self.n + 1,
            _ => self.n,
        }
    }

    pub fn default_norm(&self) -> Norm {
        default_norm(*self)
    }

    /// Name of the compact group, e.g. `SO(6)`.
    pub fn group_name(&self) -> String {
        match self.kind {
            FamilyKind::A => format!("SU({})", self.n + 1),
            FamilyKind::B => format!("SO({})", 2 * self.n + 1),
            FamilyKind::C2 => "Sp(2)".to_string(),
            FamilyKind::D => format!("SO({})", 2 * self.n),
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::A => write!(f, "A{}", self.n),
            FamilyKind::B => write!(f, "B{}", self.n),
            FamilyKind::C2 => write!(f, "C2"),
            FamilyKind::D => write!(f, "D{}", self.n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Norm {
    One,
    /// Squared Euclidean norm, kept as an exact integer.
    Two,
    Inf,
}

/// `‖w‖₁`, `‖w‖₂²` or `‖w‖_∞`.
pub fn norm(w: &[i64], which: Norm) -> u64 {
    match which {
        Norm::One => w.iter().map(|a| a.unsigned_abs()).sum(),
        Norm::Two => w.iter().map(|a| a.unsigned_abs() * a.unsigned_abs()).sum(),
        Norm::Inf => w.iter().map(|a| a.unsigned_abs()).max().unwrap_or(0),
    }
}

/// The norm whose level sets govern weight multiplicities: the maximum norm
/// for `Sp(2)` and the one-norm otherwise.
pub fn default_norm(family: GroupFamily) -> Norm {
    match family.kind {
        FamilyKind::C2 => Norm::Inf,
        _ => Norm::One,
    }
}

/// An integral weight `μ = Σ aᵢεᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    /// Checks the coordinate count and, for `SU(n+1)`, the zero-sum condition.
    pub fn for_family(family: GroupFamily, coords: Vec<i64>) -> Result<Self> {
        check_weight(family, &coords)?;
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn norm(&self, which: Norm) -> u64 {
        norm(&self.coords, which)
    }
}

fn check_weight(family: GroupFamily, coords: &[i64]) -> Result<()> {
    if coords.len() != family.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: family.ambient_dim(),
            got: coords.len(),
        });
    }
    if family.kind == FamilyKind::A && coords.iter().map(|&a| a as i128).sum::<i128>() != 0 {
        return Err(Error::NonZeroSum);
    }
    Ok(())
}

/// Order `q`, rotation parameters `s` (reduced mod `q`) and character index
/// `u ∈ [0, q)` of a cyclic subgroup `Γ_{q,s}` with character `χ_u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicParams {
    q: i64,
    s: Vec<i64>,
    u: i64,
}

impl CyclicParams {
    pub fn new(q: i64, s: Vec<i64>, u: i64) -> Result<Self> {
        if q < 1 {
            return Err(Error::ZeroOrder(q));
        }
        let s = s.into_iter().map(|x| x.rem_euclid(q)).collect();
        Ok(Self { q, s, u: u.rem_euclid(q) })
    }

    /// Like [`CyclicParams::new`], but for `SU(n+1)` also accepts the full
    /// `(s₁, …, s_{n+1})` vector with `Σ sᵢ ≡ 0 (mod q)`, as tables list it.
    pub fn for_family(family: GroupFamily, q: i64, s: Vec<i64>, u: i64) -> Result<Self> {
        let s = normalize_s(family, q, s)?;
        Self::new(q, s, u)
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn s(&self) -> &[i64] {
        &self.s
    }

    pub fn u(&self) -> i64 {
        self.u
    }
}

/// Trims an `SU(n+1)` parameter vector given with `n+1` entries down to `n`.
pub fn normalize_s(family: GroupFamily, q: i64, mut s: Vec<i64>) -> Result<Vec<i64>> {
    if q < 1 {
        return Err(Error::ZeroOrder(q));
    }
    let n = family.rank();
    if family.kind == FamilyKind::A && s.len() == n + 1 {
        let total: i128 = s.iter().map(|&x| x as i128).sum();
        if total.rem_euclid(q as i128) != 0 {
            return Err(Error::InvalidParameter(format!(
                "entries of {s:?} must sum to 0 mod {q}"
            )));
        }
        s.pop();
    }
    if s.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: s.len() });
    }
    Ok(s.into_iter().map(|x| x.rem_euclid(q)).collect())
}

/// The coefficient vector entering the congruence: `s` itself, or for
/// `SU(n+1)` the vector extended by `s_{n+1} = −(s₁ + … + sₙ)`.
pub fn full_s(family: GroupFamily, q: i64, s: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = s.iter().map(|x| x.rem_euclid(q)).collect();
    if family.kind == FamilyKind::A {
        let total: i64 = out.iter().fold(0, |acc, x| (acc + x) % q);
        out.push((q - total) % q);
    }
    out
}

fn gcd_ok(family: GroupFamily, q: i64, s: &[i64]) -> bool {
    full_s(family, q, s).iter().fold(q, |g, &x| g.gcd(&x)) == 1
}

fn check_params(family: GroupFamily, q: i64, s: &[i64]) -> Result<()> {
    if q < 1 {
        return Err(Error::ZeroOrder(q));
    }
    if s.len() != family.rank() {
        return Err(Error::DimensionMismatch { expected: family.rank(), got: s.len() });
    }
    if !gcd_ok(family, q, s) {
        return Err(Error::GcdViolation { q, s: s.to_vec() });
    }
    Ok(())
}

/// A set of weights with a membership test.
pub trait WeightSet: Sync {
    fn ambient_dim(&self) -> usize;

    /// Whether members are constrained to zero coordinate sum.
    fn zero_sum(&self) -> bool {
        false
    }

    /// Membership without dimension checks.
    fn contains(&self, w: &[i64]) -> bool;

    fn membership(&self, w: &Weight) -> Result<bool> {
        if w.coords().len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: w.coords().len(),
            });
        }
        if self.zero_sum() && w.coords().iter().map(|&a| a as i128).sum::<i128>() != 0 {
            return Err(Error::NonZeroSum);
        }
        Ok(self.contains(w.coords()))
    }
}

/// `L_{q,s,u}` (or `L*_{q,s,u}` for `SU(n+1)`), optionally intersected with
/// `D₂ = {a₁ + a₂ even}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CongruenceLattice {
    family: GroupFamily,
    params: CyclicParams,
    coeffs: Vec<i64>,
    even_sublattice: bool,
}

/// Validates the parameters and builds the lattice.
pub fn make_lattice(
    family: GroupFamily,
    params: CyclicParams,
    even_sublattice: bool,
) -> Result<CongruenceLattice> {
    check_params(family, params.q, &params.s)?;
    if even_sublattice && family.kind != FamilyKind::C2 {
        return Err(Error::IllegalEvenSublattice);
    }
    let coeffs = full_s(family, params.q, &params.s);
    Ok(CongruenceLattice { family, params, coeffs, even_sublattice })
}

impl CongruenceLattice {
    /// Shorthand for `make_lattice(family, CyclicParams::for_family(..), false)`.
    pub fn new(family: GroupFamily, q: i64, s: Vec<i64>, u: i64) -> Result<Self> {
        make_lattice(family, CyclicParams::for_family(family, q, s, u)?, false)
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn params(&self) -> &CyclicParams {
        &self.params
    }

    pub fn q(&self) -> i64 {
        self.params.q
    }

    pub fn u(&self) -> i64 {
        self.params.u
    }

    /// Coefficients of the congruence, including `s_{n+1}` for `SU(n+1)`.
    pub fn congruence_coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_even_sublattice(&self) -> bool {
        self.even_sublattice
    }

    /// `D₂ ∩ L`; only meaningful for `Sp(2)`.
    pub fn d2_intersection(&self) -> Result<Self> {
        make_lattice(self.family, self.params.clone(), true)
    }

    /// The same subgroup twisted by `χ_u` instead.
    pub fn with_character(&self, u: i64) -> Self {
        let mut out = self.clone();
        out.params.u = u.rem_euclid(self.params.q);
        out
    }
}

impl WeightSet for CongruenceLattice {
    fn ambient_dim(&self) -> usize {
        self.family.ambient_dim()
    }

    fn zero_sum(&self) -> bool {
        self.family.kind == FamilyKind::A
    }

    fn contains(&self, w: &[i64]) -> bool {
        if self.even_sublattice && (w[0] + w[1]).rem_euclid(2) != 0 {
            return false;
        }
        let q = self.params.q as i128;
        let dot: i128 = w
            .iter()
            .zip(&self.coeffs)
            .map(|(&a, &s)| (a as i128 * s as i128).rem_euclid(q))
            .sum();
        dot.rem_euclid(q) == self.params.u as i128
    }
}

/// `Ψ⁻¹(C)` for a binary linear code `C ⊂ (ℤ/2)ⁿ`, where `Ψ` reduces every
/// coordinate mod 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeLattice {
    n: usize,
    // codewords as bitmasks, bit i = coordinate i; sorted
    words: Vec<u64>,
}

impl CodeLattice {
    /// Builds the lattice from generators (or any spanning list) of the code.
    pub fn new(n: usize, generators: &[Vec<u8>]) -> Result<Self> {
        if n == 0 || n > 63 {
            return Err(Error::InvalidParameter(format!("code length {n} out of range")));
        }
        let mut words = vec![0u64];
        for g in generators {
            if g.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: g.len() });
            }
            let mask = g
                .iter()
                .enumerate()
                .fold(0u64, |m, (i, &b)| if b % 2 == 1 { m | (1 << i) } else { m });
            if !words.contains(&mask) {
                let shifted: Vec<u64> = words.iter().map(|w| w ^ mask).collect();
                words.extend(shifted);
            }
        }
        words.sort_unstable();
        words.dedup();
        Ok(Self { n, words })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Codewords as bitmasks (bit `i` is coordinate `i`), sorted.
    pub fn codewords(&self) -> &[u64] {
        &self.words
    }

    pub fn contains_parity(&self, mask: u64) -> bool {
        self.words.binary_search(&mask).is_ok()
    }
}

impl WeightSet for CodeLattice {
    fn ambient_dim(&self) -> usize {
        self.n
    }

    fn contains(&self, w: &[i64]) -> bool {
        let mask = w
            .iter()
            .enumerate()
            .fold(0u64, |m, (i, &a)| if a.rem_euclid(2) == 1 { m | (1 << i) } else { m });
        self.contains_parity(mask)
    }
}

/// Units of `ℤ/q`, as representatives in `[1, q]`.
pub fn units(q: i64) -> Vec<i64> {
    (1..=q).filter(|l| l.gcd(&q) == 1).collect()
}

fn fold(r: i64, q: i64) -> i64 {
    r.min(q - r)
}

// Sorted image of `full` under multiplication by `l`, folded by sign for
// the orthogonal and symplectic families.
fn orbit_image(family: GroupFamily, q: i64, full: &[i64], l: i64) -> Vec<i64> {
    let mut v: Vec<i64> = full
        .iter()
        .map(|&x| {
            let r = ((x as i128 * l as i128).rem_euclid(q as i128)) as i64;
            if family.kind == FamilyKind::A {
                r
            } else {
                fold(r, q)
            }
        })
        .collect();
    v.sort_unstable();
    v
}

/// Whether `Γ_{q,s}` and `Γ_{q,s'}` are conjugate in the group: there is a
/// unit `ℓ`, a permutation `σ` and (outside `SU(n+1)`) signs `εⱼ` with
/// `s_{σ(j)} ≡ εⱼ ℓ s'ⱼ (mod q)`.
pub fn is_conjugate(family: GroupFamily, q: i64, s: &[i64], s_prime: &[i64]) -> Result<bool> {
    check_params(family, q, s)?;
    check_params(family, q, s_prime)?;
    let lhs = orbit_image(family, q, &full_s(family, q, s), 1);
    let rhs = full_s(family, q, s_prime);
    Ok(units(q).into_iter().any(|l| orbit_image(family, q, &rhs, l) == lhs))
}

/// Lexicographically least sorted (and, outside `SU(n+1)`, sign-folded)
/// image of `s` over all units, together with the smallest unit reaching it.
/// For `SU(n+1)` the returned vector holds the first `n` entries.
pub fn canonical_form_with_unit(family: GroupFamily, q: i64, s: &[i64]) -> Result<(Vec<i64>, i64)> {
    check_params(family, q, s)?;
    let full = full_s(family, q, s);
    let mut best: Option<(Vec<i64>, i64)> = None;
    for l in units(q) {
        let img = orbit_image(family, q, &full, l);
        if best.as_ref().is_none_or(|(b, _)| img < *b) {
            best = Some((img, l));
        }
    }
    let (mut v, l) = best.expect("units(q) is never empty");
    v.truncate(family.rank());
    Ok((v, l))
}

/// Distinguished representative of the conjugacy class of `Γ_{q,s}`.
pub fn canonical_form(family: GroupFamily, q: i64, s: &[i64]) -> Result<Vec<i64>> {
    canonical_form_with_unit(family, q, s).map(|(v, _)| v)
}

/// Maps a table row `(s, u)` onto `(canonical_form(s), u')`, where `u'` is
/// `u` transported by the smallest unit realizing the canonical form and
/// folded into `[0, q/2]`. Both rows describe isometric lattices.
pub fn canonical_member(family: GroupFamily, q: i64, s: &[i64], u: i64) -> Result<(Vec<i64>, i64)> {
    let (v, l) = canonical_form_with_unit(family, q, s)?;
    let r = ((u as i128 * l as i128).rem_euclid(q as i128)) as i64;
    Ok((v, fold(r, q)))
}

/// One canonical `s` per conjugacy class of cyclic subgroups of order `q`,
/// in lexicographic order.
pub fn enumerate_representatives(family: GroupFamily, q: i64) -> Vec<Vec<i64>> {
    if q < 1 {
        return Vec::new();
    }
    let n = family.rank();
    let mut out = Vec::new();
    match family.kind {
        FamilyKind::A => {
            // sorted (n+1)-multisets in [0, q) with zero sum mod q
            let mut cur = Vec::with_capacity(n + 1);
            multisets(n + 1, 0, q - 1, &mut cur, &mut |m| {
                if m.iter().sum::<i64>() % q != 0 {
                    return;
                }
                let s = &m[..n];
                if let Ok(c) = canonical_form(family, q, s) {
                    if c == s {
                        out.push(s.to_vec());
                    }
                }
            });
        }
        _ => {
            let mut cur = Vec::with_capacity(n);
            multisets(n, 0, q / 2, &mut cur, &mut |m| {
                if let Ok(c) = canonical_form(family, q, m) {
                    if c == m {
                        out.push(m.to_vec());
                    }
                }
            });
        }
    }
    out.sort();
    out
}

fn multisets(len: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
    if cur.len() == len {
        f(cur);
        return;
    }
    for x in lo..=hi {
        cur.push(x);
        multisets(len, x, hi, cur, f);
        cur.pop();
    }
}

/// Whether `Γ_{q,s}` acts freely on the covering space. Only the odd sphere
/// (family `D`) admits free actions for `q > 1`, exactly when every `sⱼ` is
/// a unit mod `q`.
pub fn is_manifold(family: GroupFamily, q: i64, s: &[i64]) -> bool {
    q == 1 || (family.kind == FamilyKind::D && s.iter().all(|x| x.gcd(&q) == 1))
}

/// Sorted multiset `{gcd(sᵢ, q)}`.
pub fn singularity_profile(q: i64, s: &[i64]) -> Vec<i64> {
    let mut v: Vec<i64> = s.iter().map(|x| x.gcd(&q)).collect();
    v.sort_unstable();
    v
}
