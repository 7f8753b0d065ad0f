//! Spectra of cyclic quotients of `Pⁿ(ℂ)`, `S²ⁿ`, `P¹(ℍ)` and `S²ⁿ⁻¹`,
//! computed through theta series of congruence lattices, and searches for
//! isospectral non-isometric quotients.

pub mod cyclotomic;
pub mod error;
pub mod isospectral_search;
pub mod series;
pub mod spectrum;
pub mod theta_counting;
pub mod weight_lattice;

pub use error::{Error, Result};
pub use isospectral_search::{
    family_report, is_isospectral, noncyclic_example_check, search, theta_equal, verify_table, Format,
    IsospectralFamily, Member, SearchConfig, UMode,
};
pub use spectrum::{
    eigenvalue, multiplicity, spectral_generating_function, spectrum_table, weight_multiplicity, zeta_partial,
    SpaceKind, SpectrumDescriptor,
};
pub use theta_counting::{ehrhart_form, shell_count, theta_truncated, zagier_theta, RationalForm, ThetaSeries};
pub use weight_lattice::{
    canonical_form, enumerate_representatives, is_conjugate, make_lattice, CodeLattice, CongruenceLattice,
    CyclicParams, FamilyKind, GroupFamily, Norm, Weight, WeightSet,
};
