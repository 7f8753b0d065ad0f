//! Independent reference computations shared by the integration tests.
//! Nothing here calls the counting code of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigUint;

pub fn binom(n: i64, k: i64) -> BigUint {
    if k < 0 || n < k {
        return BigUint::from(0u8);
    }
    let mut acc = BigUint::from(1u8);
    for i in 0..k {
        acc = acc * BigUint::from((n - i) as u64) / BigUint::from((i + 1) as u64);
    }
    acc
}

/// Harmonic polynomials of degree `k` on `ℝ^{d+1}`.
pub fn sphere_harmonics(d: i64, k: i64) -> BigUint {
    let a = binom(d + k, k);
    let b = binom(d + k - 2, k - 2);
    a - b
}

/// `dim H^{k,k}` on `Pⁿ(ℂ)`: `(2k+n)/n · C(k+n−1, k)²`.
pub fn cpn_harmonics(n: i64, k: i64) -> BigUint {
    let c = binom(k + n - 1, k);
    c.clone() * c * BigUint::from((2 * k + n) as u64) / BigUint::from(n as u64)
}

fn residue(coeffs: &[i64], a: &[i64], q: i64) -> i64 {
    a.iter().zip(coeffs).map(|(x, c)| (x * c).rem_euclid(q)).sum::<i64>().rem_euclid(q)
}

// Calls `f` on every vector of `dim` integers with one-norm at most `bound`.
fn one_norm_ball(dim: usize, bound: i64, cur: &mut Vec<i64>, used: i64, f: &mut dyn FnMut(&[i64])) {
    if cur.len() == dim {
        f(cur);
        return;
    }
    let left = bound - used;
    for x in -left..=left {
        cur.push(x);
        one_norm_ball(dim, bound, cur, used + x.abs(), f);
        cur.pop();
    }
}

/// Number of `a ∈ ℤᵈ` with `|a|₁ = k` and `Σ aᵢcᵢ ≡ u (mod q)`, for `k < len`.
/// Coordinates are split into two halves, each enumerated exhaustively,
/// and the halves are matched by norm and residue.
pub fn one_norm_theta(coeffs: &[i64], q: i64, u: i64, len: usize) -> Vec<u128> {
    let bound = len as i64 - 1;
    let half = coeffs.len() / 2;
    let table = |c: &[i64]| {
        let mut t = vec![vec![0u128; q as usize]; len];
        one_norm_ball(c.len(), bound, &mut Vec::new(), 0, &mut |a| {
            let k: i64 = a.iter().map(|x| x.abs()).sum();
            t[k as usize][residue(c, a, q) as usize] += 1;
        });
        t
    };
    let (left, right) = (table(&coeffs[..half]), table(&coeffs[half..]));
    let mut out = vec![0u128; len];
    for k1 in 0..len {
        for k2 in 0..len - k1 {
            for r in 0..q as usize {
                let r2 = (u - r as i64).rem_euclid(q) as usize;
                out[k1 + k2] += left[k1][r] * right[k2][r2];
            }
        }
    }
    out
}

/// Shell counts of `L*_{q,s,u}` for `SU(n+1)`, indexed by half the one-norm.
/// `full` holds all `n+1` coefficients.
pub fn zero_sum_theta(full: &[i64], q: i64, u: i64, len: usize) -> Vec<u128> {
    let n = full.len() - 1;
    let bound = 2 * len as i64 - 2;
    let mut out = vec![0u128; len];
    one_norm_ball(n, bound, &mut Vec::new(), 0, &mut |a| {
        let last = -a.iter().sum::<i64>();
        let norm: i64 = a.iter().map(|x| x.abs()).sum::<i64>() + last.abs();
        if norm > bound {
            return;
        }
        let mut v = a.to_vec();
        v.push(last);
        if residue(full, &v, q) == u.rem_euclid(q) {
            out[(norm / 2) as usize] += 1;
        }
    });
    out
}

/// Max-norm shells in `ℤ²`, optionally restricted to even coordinate sum.
pub fn max_norm_theta(s: &[i64], q: i64, u: i64, even: bool, len: usize) -> Vec<u128> {
    let b = len as i64 - 1;
    let mut out = vec![0u128; len];
    for x in -b..=b {
        for y in -b..=b {
            if even && (x + y).rem_euclid(2) != 0 {
                continue;
            }
            if residue(s, &[x, y], q) == u.rem_euclid(q) {
                out[x.abs().max(y.abs()) as usize] += 1;
            }
        }
    }
    out
}

/// The orbit of `s` under units mod `q`, permutations and (when `signs`)
/// coordinate negations, as sorted vectors reduced into `[0, q)`.
pub fn orbit(q: i64, s: &[i64], signs: bool) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for l in 1..=q {
        if gcd(l, q) != 1 {
            continue;
        }
        let scaled: Vec<i64> = s.iter().map(|x| (x * l).rem_euclid(q)).collect();
        let patterns = if signs { 1u32 << s.len() } else { 1 };
        for mask in 0..patterns {
            let mut v: Vec<i64> = scaled
                .iter()
                .enumerate()
                .map(|(i, &x)| if mask >> i & 1 == 1 { (-x).rem_euclid(q) } else { x })
                .collect();
            v.sort_unstable();
            out.insert(v);
        }
    }
    out
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Every `s ∈ [0, q)ⁿ` with `gcd(q, s) = 1`.
pub fn all_params(q: i64, n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|s| s.iter().fold(q, |g, &x| gcd(g, x)) == 1);
    out
}

/// Deterministic property checks, each returning a description of the first
/// violation found.
pub mod checks {
    use std::collections::{BTreeMap, BTreeSet};

    use isospec_core::isospectral_search::{search, SearchConfig, UMode};
    use isospec_core::weight_lattice::{canonical_form, enumerate_representatives, full_s, is_conjugate};
    use isospec_core::{theta_truncated, CongruenceLattice, FamilyKind, GroupFamily, SpaceKind, WeightSet};

    use super::{all_params, gcd, orbit};

    pub type Check = Result<(), String>;

    pub fn families(n_max: usize) -> Vec<GroupFamily> {
        let mut out = Vec::new();
        for n in 1..=n_max {
            for kind in [FamilyKind::A, FamilyKind::B, FamilyKind::D] {
                out.push(GroupFamily::new(kind, n).unwrap());
            }
        }
        out.push(GroupFamily::new(FamilyKind::C2, 2).unwrap());
        out
    }

    pub fn valid_params(family: GroupFamily, q: i64) -> Vec<Vec<i64>> {
        let n = family.rank();
        if family.kind() != FamilyKind::A {
            return all_params(q, n);
        }
        let mut out = all_params(q, n);
        out.extend(all_params(q, n + 1).into_iter().map(|mut v| {
            v.truncate(n);
            v
        }));
        out.sort();
        out.dedup();
        out.retain(|s| full_s(family, q, s).iter().fold(q, |g, &x| gcd(g, x)) == 1);
        out
    }

    /// The conjugacy test, canonical forms and the representative list all
    /// induce the orbit partition computed by brute force.
    pub fn conjugacy_matches_orbits(family: GroupFamily, q: i64) -> Check {
        let signs = family.kind() != FamilyKind::A;
        let params = valid_params(family, q);
        let mut classes: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
        for s in &params {
            let key = orbit(q, &full_s(family, q, s), signs).into_iter().next().unwrap();
            let canon = canonical_form(family, q, s).map_err(|e| e.to_string())?;
            if canonical_form(family, q, &canon).map_err(|e| e.to_string())? != canon {
                return Err(format!("{family} q={q}: canonical form of {s:?} is not idempotent"));
            }
            match classes.get(&key) {
                Some(c) if *c != canon => {
                    return Err(format!("{family} q={q}: {s:?} canonicalizes to {canon:?}, class has {c:?}"))
                }
                _ => {
                    classes.insert(key, canon);
                }
            }
        }
        let canon_set: BTreeSet<&Vec<i64>> = classes.values().collect();
        if canon_set.len() != classes.len() {
            return Err(format!("{family} q={q}: distinct orbits share a canonical form"));
        }
        let reps = enumerate_representatives(family, q);
        if reps.iter().collect::<BTreeSet<_>>() != canon_set || reps.len() != canon_set.len() {
            return Err(format!("{family} q={q}: representatives differ from the orbit list"));
        }
        for s in &params {
            for r in &reps {
                let expected = canonical_form(family, q, s).unwrap() == *r;
                if is_conjugate(family, q, s, r).map_err(|e| e.to_string())? != expected {
                    return Err(format!("{family} q={q}: is_conjugate({s:?}, {r:?}) != {expected}"));
                }
            }
        }
        Ok(())
    }

    fn lattice(family: GroupFamily, q: i64, s: &[i64], u: i64, even: bool) -> CongruenceLattice {
        let l = CongruenceLattice::new(family, q, s.to_vec(), u).unwrap();
        if even {
            l.d2_intersection().unwrap()
        } else {
            l
        }
    }

    /// `L_{q,s,u}` and `L_{q,s,−u}` have the same theta series.
    pub fn character_symmetry(family: GroupFamily, q: i64, s: &[i64], even: bool, terms: usize) -> Check {
        for u in 0..q {
            let a = theta_truncated(&lattice(family, q, s, u, even), terms).map_err(|e| e.to_string())?;
            let b = theta_truncated(&lattice(family, q, s, q - u, even), terms).map_err(|e| e.to_string())?;
            if a.coeffs() != b.coeffs() {
                return Err(format!("{family} q={q} s={s:?}: u={u} and u={} differ", q - u));
            }
        }
        Ok(())
    }

    /// Membership is unchanged by adding `q` times a lattice direction (`2q`
    /// on `D₂`); for `SU(n+1)` the directions are `eᵢ − eⱼ`.
    pub fn membership_periodic(family: GroupFamily, q: i64, s: &[i64], u: i64, even: bool, a: &[i64]) -> Check {
        let l = lattice(family, q, s, u, even);
        let dim = family.ambient_dim();
        let step = if even { 2 * q } else { q };
        for i in 0..dim {
            let mut b = a.to_vec();
            b[i] += step;
            if family.kind() == FamilyKind::A {
                b[(i + 1) % dim] -= step;
            }
            if l.contains(a) != l.contains(&b) {
                return Err(format!("{family} q={q} s={s:?} u={u}: {a:?} vs {b:?}"));
            }
        }
        Ok(())
    }

    /// Twisted searches only report `1 ≤ u ≤ q/2`, untwisted ones only
    /// `u = 0`, and every family lives at a single `q`.
    pub fn modes_do_not_mix(space: SpaceKind, q_max: i64) -> Check {
        for mode in [UMode::Untwisted, UMode::Twisted] {
            let config = SearchConfig::new(space, 1, q_max, mode).map_err(|e| e.to_string())?;
            for f in search(&config).map_err(|e| e.to_string())? {
                for m in &f.members {
                    let ok = match mode {
                        UMode::Untwisted => m.u == 0,
                        UMode::Twisted => 1 <= m.u && 2 * m.u <= f.q,
                    };
                    if !ok {
                        return Err(format!("{space} {mode:?}: member {m:?} at q={}", f.q));
                    }
                }
            }
        }
        Ok(())
    }
}
