//! Python bindings: lattices, theta series, spectra and isospectral searches.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use isospec_core::isospectral_search::{self, SearchConfig, UMode};
use isospec_core::weight_lattice::{self, full_s};
use isospec_core::{spectrum, theta_counting, Format, GroupFamily, SpaceKind, WeightSet};

fn err(e: isospec_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn family(name: &str, n: usize) -> PyResult<GroupFamily> {
    let kind = match name.to_ascii_uppercase().as_str() {
        "A" => isospec_core::FamilyKind::A,
        "B" => isospec_core::FamilyKind::B,
        "C" | "C2" => isospec_core::FamilyKind::C2,
        "D" => isospec_core::FamilyKind::D,
        other => return Err(PyValueError::new_err(format!("unknown family '{other}'"))),
    };
    GroupFamily::new(kind, n).map_err(err)
}

fn space(text: &str) -> PyResult<SpaceKind> {
    text.parse().map_err(err)
}

/// The congruence lattice `{a : Σ aᵢsᵢ ≡ u (mod q)}` of a family.
#[pyclass(frozen, module = "isospec")]
struct CongruenceLattice {
    inner: isospec_core::CongruenceLattice,
}

#[pymethods]
impl CongruenceLattice {
    #[new]
    #[pyo3(signature = (family_name, n, q, s, u = 0, even = false))]
    fn new(family_name: &str, n: usize, q: i64, s: Vec<i64>, u: i64, even: bool) -> PyResult<Self> {
        let fam = family(family_name, n)?;
        let params = isospec_core::CyclicParams::for_family(fam, q, s, u).map_err(err)?;
        let inner = isospec_core::make_lattice(fam, params, even).map_err(err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn q(&self) -> i64 {
        self.inner.q()
    }

    #[getter]
    fn u(&self) -> i64 {
        self.inner.u()
    }

    /// All congruence coefficients, including `s_{n+1}` for family A.
    #[getter]
    fn s(&self) -> Vec<i64> {
        self.inner.congruence_coeffs().to_vec()
    }

    fn contains(&self, w: Vec<i64>) -> PyResult<bool> {
        self.inner.membership(&isospec_core::Weight::new(w)).map_err(err)
    }

    /// First `terms` shell counts (indexed by half the norm for family A).
    fn theta(&self, terms: usize) -> PyResult<Vec<BigUint>> {
        Ok(isospec_core::theta_truncated(&self.inner, terms).map_err(err)?.coeffs().to_vec())
    }

    /// Numerator `p` of `θ = (1 − z) p(z) / (1 − z^q)^{n+1}` (untwisted only).
    fn rational_numerator(&self) -> PyResult<Vec<num_bigint::BigInt>> {
        Ok(isospec_core::ehrhart_form(&self.inner).map_err(err)?.numerator().to_vec())
    }

    fn __repr__(&self) -> String {
        format!(
            "CongruenceLattice({}, q={}, s={:?}, u={}{})",
            self.inner.family(),
            self.inner.q(),
            self.inner.congruence_coeffs(),
            self.inner.u(),
            if self.inner.is_even_sublattice() { ", even=True" } else { "" }
        )
    }
}

/// A family of pairwise isospectral, non-conjugate quotients.
#[pyclass(frozen, module = "isospec")]
struct IsospectralFamily {
    inner: isospectral_search::IsospectralFamily,
}

#[pymethods]
impl IsospectralFamily {
    #[getter]
    fn q(&self) -> i64 {
        self.inner.q
    }

    #[getter]
    fn space(&self) -> String {
        self.inner.space.to_string()
    }

    /// `(s, u)` rows, with `n+1` entries of `s` for projective spaces.
    #[getter]
    fn members(&self) -> Vec<(Vec<i64>, i64)> {
        let fam = self.inner.space.family();
        self.inner
            .members
            .iter()
            .map(|m| {
                let s = if fam.kind() == isospec_core::FamilyKind::A { full_s(fam, self.inner.q, &m.s) } else { m.s.clone() };
                (s, m.u)
            })
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.members.len()
    }

    fn __repr__(&self) -> String {
        format!("IsospectralFamily(space='{}', q={}, members={:?})", self.space(), self.q(), self.members())
    }
}

/// `(k, λ_k, multiplicity)` for `k < levels`.
#[pyfunction]
#[pyo3(signature = (space_name, q, s, u = 0, levels = 10))]
fn spectrum_table(space_name: &str, q: i64, s: Vec<i64>, u: i64, levels: usize) -> PyResult<Vec<(u64, u128, BigUint)>> {
    let sp = space(space_name)?;
    let l = sp.lattice(q, s, u).map_err(err)?;
    let table = spectrum::spectrum_table(&l, sp, levels).map_err(err)?;
    Ok(table.entries.into_iter().map(|e| (e.k, e.eigenvalue, e.multiplicity)).collect())
}

#[pyfunction]
fn eigenvalue(space_name: &str, k: u64) -> PyResult<u128> {
    Ok(spectrum::eigenvalue(space(space_name)?, k))
}

/// Whether `(q, s, u)` and `(q', s', u')` give isospectral quotients.
#[pyfunction]
fn is_isospectral(space_name: &str, a: (i64, Vec<i64>, i64), b: (i64, Vec<i64>, i64)) -> PyResult<bool> {
    isospectral_search::is_isospectral(space(space_name)?, (a.0, &a.1, a.2), (b.0, &b.1, b.2)).map_err(err)
}

#[pyfunction]
fn is_conjugate(family_name: &str, n: usize, q: i64, s: Vec<i64>, t: Vec<i64>) -> PyResult<bool> {
    let fam = family(family_name, n)?;
    let s = weight_lattice::normalize_s(fam, q, s).map_err(err)?;
    let t = weight_lattice::normalize_s(fam, q, t).map_err(err)?;
    weight_lattice::is_conjugate(fam, q, &s, &t).map_err(err)
}

#[pyfunction]
fn canonical_form(family_name: &str, n: usize, q: i64, s: Vec<i64>) -> PyResult<Vec<i64>> {
    let fam = family(family_name, n)?;
    let s = weight_lattice::normalize_s(fam, q, s).map_err(err)?;
    weight_lattice::canonical_form(fam, q, &s).map_err(err)
}

#[pyfunction]
fn enumerate_representatives(family_name: &str, n: usize, q: i64) -> PyResult<Vec<Vec<i64>>> {
    Ok(weight_lattice::enumerate_representatives(family(family_name, n)?, q))
}

/// Theta series of `L_{q,s}` from the cyclotomic product formula.
#[pyfunction]
fn zagier_theta(q: i64, s: Vec<i64>, terms: usize) -> PyResult<Vec<BigUint>> {
    Ok(theta_counting::zagier_theta(q, &s, terms).map_err(err)?.coeffs().to_vec())
}

#[pyfunction]
#[pyo3(signature = (space_name, q_max, q_min = 1, mode = "untwisted", depth_factor = 2))]
fn search(
    py: Python<'_>,
    space_name: &str,
    q_max: i64,
    q_min: i64,
    mode: &str,
    depth_factor: usize,
) -> PyResult<Vec<IsospectralFamily>> {
    let mode: UMode = mode.parse().map_err(err)?;
    let mut config = SearchConfig::new(space(space_name)?, q_min, q_max, mode).map_err(err)?;
    config.depth_factor = depth_factor;
    let found = py.detach(|| isospectral_search::search(&config)).map_err(err)?;
    Ok(found.into_iter().map(|inner| IsospectralFamily { inner }).collect())
}

/// Renders families as `json`, `csv` or `md`.
#[pyfunction]
fn report(families: Vec<PyRef<'_, IsospectralFamily>>, format: &str) -> PyResult<String> {
    let format: Format = format.parse().map_err(err)?;
    let fams: Vec<_> = families.iter().map(|f| f.inner.clone()).collect();
    isospectral_search::family_report(&fams, format).map_err(err)
}

/// Per-section `(space, passed, missing, extra)` for reference table `id`.
#[pyfunction]
#[pyo3(signature = (id, q_max = None))]
fn verify_table(py: Python<'_>, id: u8, q_max: Option<i64>) -> PyResult<Vec<(String, bool, usize, usize)>> {
    let r = py.detach(|| isospectral_search::verify_table(id, q_max, 0)).map_err(err)?;
    Ok(r.sections.iter().map(|s| (s.space.to_string(), s.passed(), s.missing.len(), s.extra.len())).collect())
}

/// Named checks of the non-cyclic `(ℤ/2)³` example.
#[pyfunction]
#[pyo3(signature = (depth = 60, max_sq_norm = 50))]
fn noncyclic_check(depth: usize, max_sq_norm: u64) -> Vec<(String, bool)> {
    isospectral_search::noncyclic_example_check(depth, max_sq_norm)
        .checks
        .into_iter()
        .map(|c| (c.name, c.passed))
        .collect()
}

#[pymodule]
fn isospec(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<CongruenceLattice>()?;
    m.add_class::<IsospectralFamily>()?;
    m.add_function(wrap_pyfunction!(spectrum_table, m)?)?;
    m.add_function(wrap_pyfunction!(eigenvalue, m)?)?;
    m.add_function(wrap_pyfunction!(is_isospectral, m)?)?;
    m.add_function(wrap_pyfunction!(is_conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_representatives, m)?)?;
    m.add_function(wrap_pyfunction!(zagier_theta, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    m.add_function(wrap_pyfunction!(verify_table, m)?)?;
    m.add_function(wrap_pyfunction!(noncyclic_check, m)?)?;
    Ok(())
}
