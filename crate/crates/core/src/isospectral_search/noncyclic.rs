//! Two non-conjugate subgroups of `SO(12)` isomorphic to `(ℤ/2)³`, made of
//! block-diagonal `±I₂` elements, whose invariant lattices are `Ψ⁻¹(C)` and
//! `Ψ⁻¹(C')` for two binary codes of length 6.

use crate::theta_counting::{code_shell_counts, theta_truncated};
use crate::weight_lattice::{CodeLattice, Norm};

pub const CODE_C: [[u8; 6]; 8] = [
    [0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 1],
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 0, 0],
    [1, 1, 0, 0, 1, 1],
    [0, 0, 1, 1, 1, 1],
];

pub const CODE_C_PRIME: [[u8; 6]; 8] = [
    [0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0],
    [0, 1, 1, 0, 0, 0],
    [1, 1, 1, 1, 1, 1],
    [0, 1, 0, 1, 1, 1],
    [1, 0, 0, 1, 1, 1],
    [0, 0, 1, 1, 1, 1],
];

// Generators as masks of the 2×2 blocks equal to −I₂ (bit i = block i+1).
const GAMMA: [u8; 3] = [0b000011, 0b001100, 0b110000];
const GAMMA_PRIME: [u8; 3] = [0b000011, 0b000101, 0b111111];

// Each element of Γ, as a subset of generators, paired with its partner in Γ'.
const PAIRING: [(&[usize], &[usize]); 8] = [
    (&[], &[]),
    (&[0], &[0]),
    (&[1], &[1]),
    (&[2], &[0, 1]),
    (&[0, 1], &[1, 2]),
    (&[0, 2], &[0, 1, 2]),
    (&[1, 2], &[0, 2]),
    (&[0, 1, 2], &[2]),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoncyclicReport {
    pub checks: Vec<CheckResult>,
}

impl NoncyclicReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn code(rows: &[[u8; 6]; 8]) -> CodeLattice {
    let rows: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
    CodeLattice::new(6, &rows).expect("fixed codes are valid")
}

fn element(gens: &[u8; 3], word: &[usize]) -> u8 {
    word.iter().fold(0, |m, &i| m ^ gens[i])
}

fn name(prefix: &str, word: &[usize]) -> String {
    if word.is_empty() {
        return "id".into();
    }
    word.iter().map(|i| format!("{prefix}{}", i + 1)).collect::<Vec<_>>().join("*")
}

// The spectrum of a ±I₂ block pattern in SO(12): eigenvalue −1 on 2·popcount
// coordinates, +1 on the rest.
fn eigenvalue_multiset(mask: u8) -> (u32, u32) {
    let minus = 2 * mask.count_ones();
    (12 - minus, minus)
}

/// Checks theta equality of the two code lattices in the one-norm (to
/// `theta_depth` coefficients) and two-norm (to squared norm `max_sq_norm`),
/// that each code really is 8 words, and the eight eigenvalue-multiset
/// equalities making `Γ` and `Γ'` almost conjugate.
pub fn noncyclic_example_check(theta_depth: usize, max_sq_norm: u64) -> NoncyclicReport {
    let (c, cp) = (code(&CODE_C), code(&CODE_C_PRIME));
    let mut checks = Vec::new();
    let mut push = |name: String, passed: bool| checks.push(CheckResult { name, passed });

    push(
        "codes have 8 words".into(),
        c.codewords().len() == 8 && cp.codewords().len() == 8,
    );
    let one = match (theta_truncated(&c, theta_depth), theta_truncated(&cp, theta_depth)) {
        (Ok(a), Ok(b)) => a.coeffs() == b.coeffs(),
        _ => false,
    };
    push(format!("one-norm theta equal to depth {theta_depth}"), one);
    let two = match (
        code_shell_counts(&c, Norm::Two, max_sq_norm),
        code_shell_counts(&cp, Norm::Two, max_sq_norm),
    ) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    };
    push(format!("two-norm shells equal up to squared norm {max_sq_norm}"), two);

    for (w, wp) in PAIRING {
        let (g, gp) = (element(&GAMMA, w), element(&GAMMA_PRIME, wp));
        push(
            format!("{} ~ {}", name("g", w), name("g'", wp)),
            eigenvalue_multiset(g) == eigenvalue_multiset(gp),
        );
    }
    push("pairing is a bijection".into(), {
        let mut left: Vec<u8> = PAIRING.iter().map(|(w, _)| element(&GAMMA, w)).collect();
        let mut right: Vec<u8> = PAIRING.iter().map(|(_, w)| element(&GAMMA_PRIME, w)).collect();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        left.len() == 8 && right.len() == 8
    });
    NoncyclicReport { checks }
}
