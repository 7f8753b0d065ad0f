//! Concrete values: published ones, and ones recomputed here by hand.

mod common;

use num_bigint::{BigInt, BigUint};

use isospec_core::isospectral_search::{is_isospectral, search, theta_equal, SearchConfig, UMode};
use isospec_core::spectrum::{
    multiplicity, spectral_generating_function, weyl_dimension, zeta_partial, Exponent, ZetaValue,
};
use isospec_core::theta_counting::{ikeda_generating_function, shell_count};
use isospec_core::weight_lattice::{is_manifold, norm, singularity_profile};
use isospec_core::{
    canonical_form, eigenvalue, ehrhart_form, enumerate_representatives, is_conjugate, spectrum_table, theta_truncated,
    weight_multiplicity, zagier_theta, CongruenceLattice, Error, FamilyKind, GroupFamily, Norm, SpaceKind, Weight,
    WeightSet,
};

fn fam(kind: FamilyKind, n: usize) -> GroupFamily {
    GroupFamily::new(kind, n).unwrap()
}

fn lat(kind: FamilyKind, n: usize, q: i64, s: &[i64], u: i64) -> CongruenceLattice {
    CongruenceLattice::new(fam(kind, n), q, s.to_vec(), u).unwrap()
}

fn coeffs(l: &CongruenceLattice, terms: usize) -> Vec<u64> {
    theta_truncated(l, terms).unwrap().coeffs().iter().map(|c| c.try_into().unwrap()).collect()
}

#[test]
fn lattice_descriptions() {
    // b ≡ 1 (mod 4)
    let l = lat(FamilyKind::D, 2, 4, &[0, 1], 1);
    for a in -6..=6 {
        for b in -6..=6 {
            assert_eq!(l.contains(&[a, b]), (b - 1) % 4 == 0, "({a}, {b})");
        }
    }
    // b ≡ c (mod 6) on A₂
    let l = lat(FamilyKind::A, 2, 6, &[0, 1], 0);
    assert_eq!(l.congruence_coeffs(), &[0, 1, 5]);
    for a in -8..=8i64 {
        for b in -8..=8i64 {
            let c = -a - b;
            assert_eq!(l.contains(&[a, b, c]), (b - c) % 6 == 0);
        }
    }
    let full = lat(FamilyKind::D, 2, 1, &[0, 0], 0);
    assert!(full.contains(&[3, -7]));
}

#[test]
fn lattice_errors() {
    let d2 = fam(FamilyKind::D, 2);
    assert!(matches!(CongruenceLattice::new(d2, 4, vec![0, 2], 0), Err(Error::GcdViolation { .. })));
    assert!(matches!(CongruenceLattice::new(d2, 0, vec![0, 1], 0), Err(Error::ZeroOrder(0))));
    assert_eq!(lat(FamilyKind::D, 2, 4, &[0, 1], 1).d2_intersection().unwrap_err(), Error::IllegalEvenSublattice);
}

#[test]
fn membership_examples() {
    let l = lat(FamilyKind::D, 2, 4, &[1, 2], 1);
    assert!(l.membership(&Weight::new(vec![1, 0])).unwrap());
    let a = lat(FamilyKind::A, 2, 6, &[0, 1], 0);
    assert!(a.membership(&Weight::new(vec![6, 0, -6])).unwrap());
    assert!(a.membership(&Weight::new(vec![-2, 1, 1])).unwrap());
    assert_eq!(a.membership(&Weight::new(vec![1, 0, 0])).unwrap_err(), Error::NonZeroSum);
    assert!(matches!(l.membership(&Weight::new(vec![1, 0, 0])), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn norms() {
    assert_eq!(norm(&[1, -2, 1], Norm::One), 4);
    assert_eq!(norm(&[3, -1], Norm::Inf), 3);
    assert_eq!(norm(&[3, -1], Norm::Two), 10);
    assert_eq!(norm(&[0, 0, 0], Norm::Inf), 0);
    assert_eq!(fam(FamilyKind::A, 3).default_norm(), Norm::One);
    assert_eq!(fam(FamilyKind::C2, 2).default_norm(), Norm::Inf);
    assert_eq!(fam(FamilyKind::D, 4).default_norm(), Norm::One);
}

#[test]
fn conjugacy_examples() {
    let d = |n| fam(FamilyKind::D, n);
    assert!(!is_conjugate(d(3), 11, &[1, 2, 3], &[1, 2, 4]).unwrap());
    assert!(is_conjugate(d(2), 7, &[1, 2], &[2, 4]).unwrap());
    assert_eq!(canonical_form(d(2), 7, &[2, 4]).unwrap(), vec![1, 2]);
    let a2 = fam(FamilyKind::A, 2);
    assert_ne!(canonical_form(a2, 6, &[1, 2]).unwrap(), canonical_form(a2, 6, &[0, 1]).unwrap());
    let reps = enumerate_representatives(d(2), 4);
    assert!(reps.contains(&vec![0, 1]) && reps.contains(&vec![1, 2]));
    assert_eq!(enumerate_representatives(d(3), 1), vec![vec![0, 0, 0]]);
    // brute-force orbit count at q = 5
    let orbits: std::collections::BTreeSet<_> = common::all_params(5, 2)
        .iter()
        .map(|s| common::orbit(5, s, true).into_iter().next().unwrap())
        .collect();
    assert_eq!(enumerate_representatives(d(2), 5).len(), orbits.len());
}

#[test]
fn manifolds_and_isotropy() {
    let d2 = fam(FamilyKind::D, 2);
    assert!(is_manifold(d2, 5, &[1, 2]));
    assert!(!is_manifold(d2, 5, &[0, 1]));
    assert!(is_manifold(fam(FamilyKind::A, 2), 1, &[0, 0]));
    assert!(!is_manifold(fam(FamilyKind::A, 2), 7, &[1, 2]));
    assert_eq!(singularity_profile(15, &[1, 2, 6]), vec![1, 1, 3]);
    assert_eq!(singularity_profile(4, &[0, 1]), vec![1, 4]);
}

#[test]
fn shell_counts() {
    let l = lat(FamilyKind::D, 2, 4, &[0, 1], 1);
    assert_eq!(shell_count(&l, 0, Norm::One), BigUint::from(0u8));
    assert_eq!(shell_count(&l, 1, Norm::One), BigUint::from(1u8));
    assert_eq!(shell_count(&l, 2, Norm::One), BigUint::from(2u8));
    let z2 = lat(FamilyKind::D, 2, 1, &[0, 0], 0);
    for k in 1..12u64 {
        assert_eq!(shell_count(&z2, k, Norm::One), BigUint::from(4 * k));
    }
    assert_eq!(coeffs(&z2, 5), vec![1, 4, 8, 12, 16]);
    assert_eq!(coeffs(&lat(FamilyKind::D, 1, 1, &[0], 0), 6), vec![1, 2, 2, 2, 2, 2]);
    assert_eq!(coeffs(&lat(FamilyKind::A, 2, 6, &[0, 1], 0), 40), coeffs(&lat(FamilyKind::A, 2, 6, &[1, 2], 0), 40));
    assert!(theta_truncated(&z2, 0).is_err());
}

#[test]
fn rational_forms() {
    let z = lat(FamilyKind::D, 1, 1, &[0], 0);
    let form = ehrhart_form(&z).unwrap();
    assert_eq!(form.numerator(), &[BigInt::from(1), BigInt::from(1)]);
    assert_eq!(ehrhart_form(&lat(FamilyKind::D, 2, 4, &[0, 1], 1)).unwrap_err(), Error::AffineUnsupported(1));
    let l = lat(FamilyKind::D, 2, 7, &[1, 2], 0);
    let expanded: Vec<u128> = ehrhart_form(&l).unwrap().expand(42).iter().map(|c| c.try_into().unwrap()).collect();
    assert_eq!(expanded, common::one_norm_theta(&[1, 2], 7, 0, 42));
}

#[test]
fn cyclotomic_products() {
    let ones: Vec<u64> = zagier_theta(1, &[0], 6).unwrap().coeffs().iter().map(|c| c.try_into().unwrap()).collect();
    assert_eq!(ones, vec![1, 2, 2, 2, 2, 2]);
    let z = zagier_theta(4, &[1, 2], 8).unwrap();
    assert_eq!(z.coeffs(), theta_truncated(&lat(FamilyKind::D, 2, 4, &[1, 2], 0), 8).unwrap().coeffs());
    let z: Vec<u128> = zagier_theta(7, &[1, 2], 30).unwrap().coeffs().iter().map(|c| c.try_into().unwrap()).collect();
    assert_eq!(z, common::one_norm_theta(&[1, 2], 7, 0, 30));
    // the spectral generating function of the lens space, two ways
    let l = lat(FamilyKind::D, 2, 7, &[1, 2], 0);
    let f = spectral_generating_function(&l, SpaceKind::OddSphere(2)).unwrap().expand(40);
    let ikeda: Vec<BigInt> = ikeda_generating_function(7, &[1, 2], 40).unwrap().into_iter().map(BigInt::from).collect();
    assert_eq!(f, ikeda);
}

#[test]
fn eigenvalues() {
    assert_eq!(eigenvalue(SpaceKind::CPn(2), 1), 3);
    assert_eq!(eigenvalue(SpaceKind::OddSphere(2), 2), 8);
    assert_eq!(eigenvalue(SpaceKind::EvenSphere(2), 3), 18);
    assert_eq!(eigenvalue(SpaceKind::HP1, 2), 10);
    assert_eq!(eigenvalue(SpaceKind::CPn(5), 0), 0);
}

#[test]
fn weight_multiplicities() {
    assert_eq!(weight_multiplicity(fam(FamilyKind::A, 2), 1, &[0, 0, 0]), BigUint::from(2u8));
    assert_eq!(weight_multiplicity(fam(FamilyKind::D, 2), 3, &[1, 0]), BigUint::from(1u8));
    assert_eq!(weight_multiplicity(fam(FamilyKind::C2, 2), 1, &[1, 0]), BigUint::from(0u8));
    for f in [fam(FamilyKind::A, 3), fam(FamilyKind::B, 2), fam(FamilyKind::C2, 2), fam(FamilyKind::D, 3)] {
        assert_eq!(weight_multiplicity(f, 0, &vec![0; f.ambient_dim()]), BigUint::from(1u8));
    }
}

#[test]
fn spectra() {
    let s3 = SpaceKind::OddSphere(2);
    let full = lat(FamilyKind::D, 2, 1, &[0, 0], 0);
    let rows: Vec<(u64, u128, u64)> = spectrum_table(&full, s3, 3)
        .unwrap()
        .entries
        .iter()
        .map(|e| (e.k, e.eigenvalue, (&e.multiplicity).try_into().unwrap()))
        .collect();
    assert_eq!(rows, vec![(0, 0, 1), (1, 3, 4), (2, 8, 9)]);
    for k in 0..20 {
        assert_eq!(multiplicity(&full, s3, k).unwrap(), BigUint::from((k + 1) * (k + 1)));
    }
    let twisted = lat(FamilyKind::D, 2, 5, &[1, 2], 1);
    assert_eq!(spectrum_table(&twisted, s3, 1).unwrap().entries[0].multiplicity, BigUint::from(0u8));
    let series = spectral_generating_function(&full, s3).unwrap().expand(6);
    assert_eq!(series, [1, 4, 9, 16, 25, 36].map(BigInt::from).to_vec());
    let a = lat(FamilyKind::D, 3, 11, &[1, 2, 3], 0);
    let b = lat(FamilyKind::D, 3, 11, &[1, 2, 4], 0);
    let s5 = SpaceKind::OddSphere(3);
    assert_eq!(spectrum_table(&a, s5, 60).unwrap().entries, spectrum_table(&b, s5, 60).unwrap().entries);
}

#[test]
fn zeta_sums() {
    let s5 = SpaceKind::OddSphere(3);
    let a = lat(FamilyKind::D, 3, 11, &[1, 2, 3], 0);
    let b = lat(FamilyKind::D, 3, 11, &[1, 2, 4], 0);
    for k in 2..30 {
        let e = Exponent::new(3, 1).unwrap();
        assert_eq!(zeta_partial(&a, s5, e, k).unwrap(), zeta_partial(&b, s5, e, k).unwrap());
    }
    let twisted = lat(FamilyKind::D, 2, 4, &[0, 1], 1);
    let m1 = multiplicity(&twisted, SpaceKind::OddSphere(2), 1).unwrap();
    let z = zeta_partial(&twisted, SpaceKind::OddSphere(2), Exponent::new(2, 1).unwrap(), 2).unwrap();
    assert_eq!(z, ZetaValue::Exact(num_rational::BigRational::new(BigInt::from(m1), BigInt::from(9))));
    let full = lat(FamilyKind::D, 2, 1, &[0, 0], 0);
    let mut last = 0.0;
    for k in 2..20 {
        let v = zeta_partial(&full, SpaceKind::OddSphere(2), Exponent::new(5, 2).unwrap(), k).unwrap().to_f64();
        assert!(v > last);
        last = v;
    }
}

#[test]
fn weyl_dimensions() {
    assert_eq!(weyl_dimension(fam(FamilyKind::A, 2), 1), BigUint::from(8u8));
    // harmonic polynomials of degree 1 on ℝ⁴
    assert_eq!(weyl_dimension(fam(FamilyKind::D, 2), 1), BigUint::from(4u8));
    for f in [fam(FamilyKind::A, 4), fam(FamilyKind::B, 3), fam(FamilyKind::C2, 2), fam(FamilyKind::D, 4)] {
        assert_eq!(weyl_dimension(f, 0), BigUint::from(1u8));
    }
}

#[test]
fn isospectral_pairs() {
    let s3 = SpaceKind::OddSphere(2);
    let a = lat(FamilyKind::D, 2, 4, &[0, 1], 1);
    let b = lat(FamilyKind::D, 2, 4, &[1, 2], 1);
    assert!(theta_equal(&a, &b, 2).unwrap());
    assert!(theta_equal(&a, &a, 2).unwrap());
    let c = lat(FamilyKind::D, 3, 11, &[1, 2, 3], 0);
    let d = lat(FamilyKind::D, 3, 13, &[1, 2, 3], 0);
    assert!(!theta_equal(&c, &d, 2).unwrap());
    assert!(is_isospectral(SpaceKind::OddSphere(3), (11, &[1, 2, 3], 0), (11, &[1, 2, 4], 0)).unwrap());
    assert!(is_isospectral(SpaceKind::HP1, (12, &[1, 2], 0), (12, &[1, 4], 0)).unwrap());
    assert!(is_isospectral(SpaceKind::CPn(2), (6, &[0, 1, 5], 0), (6, &[1, 2, 3], 0)).unwrap());
    assert!(!is_isospectral(s3, (5, &[1, 2], 0), (5, &[1, 2], 1)).unwrap());
}

#[test]
fn five_sphere_block() {
    let config = SearchConfig::new(SpaceKind::OddSphere(3), 1, 15, UMode::Untwisted).unwrap();
    let found: Vec<(i64, Vec<Vec<i64>>)> = search(&config)
        .unwrap()
        .into_iter()
        .map(|f| (f.q, f.members.into_iter().map(|m| m.s).collect()))
        .collect();
    assert_eq!(
        found,
        vec![
            (11, vec![vec![1, 2, 3], vec![1, 2, 4]]),
            (13, vec![vec![1, 2, 3], vec![1, 2, 4]]),
            (13, vec![vec![1, 2, 5], vec![1, 3, 4]]),
            (15, vec![vec![1, 2, 6], vec![1, 3, 4]]),
        ]
    );
}
