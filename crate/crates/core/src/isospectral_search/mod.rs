//! Isospectrality tests and exhaustive searches over cyclic quotients.
//!
//! Two quotients `Γ_{q,s}\M` and `Γ_{q,s'}\M` twisted by `χ_u`, `χ_{u'}` are
//! isospectral exactly when the associated congruence lattices have the same
//! shell counts in the family's norm, so every comparison here is a
//! comparison of theta series.

mod noncyclic;
mod report;
mod tables;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::spectrum::SpaceKind;
use crate::theta_counting::ThetaLattice;
use crate::weight_lattice::{canonical_form, enumerate_representatives, CongruenceLattice};

pub use noncyclic::{noncyclic_example_check, CheckResult, NoncyclicReport, CODE_C, CODE_C_PRIME};
pub use report::{family_report, Format};
pub use tables::{golden_table, verify_table, GoldenTable, TableReport, TableSection, TABLE_IDS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UMode {
    /// `u = 0` only.
    Untwisted,
    /// `1 ≤ u ≤ ⌊q/2⌋`.
    Twisted,
}

impl UMode {
    pub fn characters(&self, q: i64) -> Vec<i64> {
        match self {
            UMode::Untwisted => vec![0],
            UMode::Twisted => (1..=q / 2).collect(),
        }
    }
}

impl std::str::FromStr for UMode {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text.trim().to_ascii_lowercase().as_str() {
            "untwisted" => Ok(UMode::Untwisted),
            "twisted" => Ok(UMode::Twisted),
            other => Err(Error::InvalidParameter(format!("unknown mode '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub space: SpaceKind,
    pub q_min: i64,
    pub q_max: i64,
    pub u_mode: UMode,
    /// Theta series are compared on `depth_factor · (n+1) · q` coefficients.
    pub depth_factor: usize,
    /// Worker threads; 0 uses the global pool.
    pub threads: usize,
}

impl SearchConfig {
    pub fn new(space: SpaceKind, q_min: i64, q_max: i64, u_mode: UMode) -> Result<Self> {
        if q_min < 1 {
            return Err(Error::ZeroOrder(q_min));
        }
        Ok(Self { space, q_min, q_max, u_mode, depth_factor: 2, threads: 0 })
    }
}

/// A row of an isospectral family: canonical `s` and a character index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Member {
    pub s: Vec<i64>,
    pub u: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IsospectralFamily {
    pub q: i64,
    pub members: Vec<Member>,
    pub space: SpaceKind,
}

/// The lattice governing the spectrum of `Γ_{q,s}\M` twisted by `χ_u`.
pub fn lattice_for(space: SpaceKind, q: i64, s: &[i64], u: i64) -> Result<CongruenceLattice> {
    space.lattice(q, s.to_vec(), u)
}

fn comparison_depth(l: &CongruenceLattice, depth_factor: usize) -> usize {
    depth_factor.max(1) * (l.family().rank() + 1) * l.q() as usize
}

/// Compares theta series on `depth_factor · (n+1) · q` coefficients. For
/// `u = 0` a factor of 1 already decides equality; lattices with different
/// `q` are never isospectral.
pub fn theta_equal(a: &CongruenceLattice, b: &CongruenceLattice, depth_factor: usize) -> Result<bool> {
    if a.family().rank() != b.family().rank() {
        return Err(Error::RankMismatch(a.family().rank(), b.family().rank()));
    }
    if a.family() != b.family() {
        return Err(Error::FamilyMismatch {
            lattice: a.family().to_string(),
            space: b.family().to_string(),
        });
    }
    if a.q() != b.q() {
        return Ok(false);
    }
    let depth = comparison_depth(a, depth_factor);
    Ok(a.theta_counts(depth)? == b.theta_counts(depth)?)
}

/// Whether two twisted quotients of `space` are isospectral.
pub fn is_isospectral(space: SpaceKind, a: (i64, &[i64], i64), b: (i64, &[i64], i64)) -> Result<bool> {
    let la = lattice_for(space, a.0, a.1, a.2)?;
    let lb = lattice_for(space, b.0, b.1, b.2)?;
    theta_equal(&la, &lb, 2)
}

/// Families of size at least two among the canonical representatives of
/// order `q`, for the characters selected by `mode`.
pub fn search_q(space: SpaceKind, q: i64, mode: UMode, depth_factor: usize) -> Result<Vec<IsospectralFamily>> {
    let family = space.family();
    let mut buckets: BTreeMap<Vec<u128>, Vec<Member>> = BTreeMap::new();
    for s in enumerate_representatives(family, q) {
        for u in mode.characters(q) {
            let l = lattice_for(space, q, &s, u)?;
            let theta = l.theta_counts(comparison_depth(&l, depth_factor))?;
            buckets.entry(theta).or_default().push(Member { s: s.clone(), u });
        }
    }
    let mut out: Vec<IsospectralFamily> = buckets
        .into_values()
        .filter(|m| m.len() >= 2)
        .map(|mut members| {
            members.sort();
            IsospectralFamily { q, members, space }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All isospectral families for `q` in the configured range, ordered by `q`
/// and then lexicographically by members.
pub fn search(config: &SearchConfig) -> Result<Vec<IsospectralFamily>> {
    if config.q_min < 1 {
        return Err(Error::ZeroOrder(config.q_min));
    }
    let run = || -> Result<Vec<IsospectralFamily>> {
        // large q first so the slowest jobs start early
        let qs: Vec<i64> = (config.q_min..=config.q_max).rev().collect();
        let per_q: Vec<Vec<IsospectralFamily>> = qs
            .par_iter()
            .map(|&q| search_q(config.space, q, config.u_mode, config.depth_factor))
            .collect::<Result<_>>()?;
        let mut all: Vec<IsospectralFamily> = per_q.into_iter().flatten().collect();
        all.sort();
        Ok(all)
    };
    if config.threads == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(run)
    }
}

/// Whether the families found for `S²ⁿ` and `S²ⁿ⁻¹` coincide.
pub fn duality_check(even: &[IsospectralFamily], odd: &[IsospectralFamily]) -> bool {
    let strip = |fams: &[IsospectralFamily]| -> Vec<(i64, Vec<Member>)> {
        let mut v: Vec<_> = fams.iter().map(|f| (f.q, f.members.clone())).collect();
        v.sort();
        v
    };
    strip(even) == strip(odd)
}

/// Runs the search on `S²ⁿ` and `S²ⁿ⁻¹` and compares the results.
pub fn duality_search(n: usize, q_min: i64, q_max: i64, mode: UMode, threads: usize) -> Result<bool> {
    let mut even = SearchConfig::new(SpaceKind::EvenSphere(n), q_min, q_max, mode)?;
    even.threads = threads;
    let mut odd = even.clone();
    odd.space = SpaceKind::OddSphere(n);
    Ok(duality_check(&search(&even)?, &search(&odd)?))
}

/// Canonicalizes a table row `(s, u)`, accepting `n+1` entries for `Pⁿ(ℂ)`.
pub fn canonical_row(space: SpaceKind, q: i64, s: &[i64], u: i64) -> Result<Member> {
    let family = space.family();
    let s = crate::weight_lattice::normalize_s(family, q, s.to_vec())?;
    let (s, u) = crate::weight_lattice::canonical_member(family, q, &s, u)?;
    Ok(Member { s, u })
}

/// Whether every member is already canonical with `u ≤ q/2`.
pub fn is_canonical_family(f: &IsospectralFamily) -> bool {
    f.members.iter().all(|m| {
        canonical_form(f.space.family(), f.q, &m.s).is_ok_and(|c| c == m.s) && 2 * m.u <= f.q
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_pairs() {
        let s3 = SpaceKind::OddSphere(2);
        assert!(is_isospectral(s3, (4, &[0, 1], 1), (4, &[1, 2], 1)).unwrap());
        assert!(is_isospectral(SpaceKind::OddSphere(3), (11, &[1, 2, 3], 0), (11, &[1, 2, 4], 0)).unwrap());
        assert!(is_isospectral(SpaceKind::HP1, (12, &[1, 2], 0), (12, &[1, 4], 0)).unwrap());
        assert!(is_isospectral(SpaceKind::CPn(2), (6, &[0, 1, 5], 0), (6, &[1, 2, 3], 0)).unwrap());
        let a = lattice_for(SpaceKind::OddSphere(3), 11, &[1, 2, 3], 0).unwrap();
        let b = lattice_for(SpaceKind::OddSphere(3), 13, &[1, 2, 3], 0).unwrap();
        assert!(!theta_equal(&a, &b, 2).unwrap());
        assert!(theta_equal(&a, &a, 2).unwrap());
        let c = lattice_for(s3, 4, &[0, 1], 1).unwrap();
        assert_eq!(theta_equal(&a, &c, 2).unwrap_err(), Error::RankMismatch(3, 2));
    }

    #[test]
    fn small_search() {
        let cfg = SearchConfig::new(SpaceKind::OddSphere(2), 1, 5, UMode::Twisted).unwrap();
        let fams = search(&cfg).unwrap();
        let got: Vec<(i64, Vec<(Vec<i64>, i64)>)> = fams
            .iter()
            .map(|f| (f.q, f.members.iter().map(|m| (m.s.clone(), m.u)).collect()))
            .collect();
        assert_eq!(
            got,
            vec![
                (4, vec![(vec![0, 1], 1), (vec![1, 2], 1)]),
                (5, vec![(vec![0, 1], 1), (vec![1, 2], 1), (vec![1, 2], 2)]),
            ]
        );
        assert!(fams.iter().all(is_canonical_family));
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let mut cfg = SearchConfig::new(SpaceKind::CPn(2), 1, 9, UMode::Untwisted).unwrap();
        let auto = search(&cfg).unwrap();
        cfg.threads = 1;
        assert_eq!(search(&cfg).unwrap(), auto);
        assert!(SearchConfig::new(SpaceKind::HP1, 0, 3, UMode::Twisted).is_err());
    }

    #[test]
    fn canonical_rows() {
        let m = canonical_row(SpaceKind::CPn(2), 6, &[1, 2, 3], 0).unwrap();
        assert_eq!(m.s.len(), 2);
        let m = canonical_row(SpaceKind::OddSphere(2), 7, &[2, 4], 1).unwrap();
        assert_eq!(m, Member { s: vec![1, 2], u: 3 });
    }
}
