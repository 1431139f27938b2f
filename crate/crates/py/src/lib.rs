//! Python bindings for the singularity-invariants library.
//!
//! Exposes the weight-system core (classification, Milnor algebra, spectrum,
//! `T^1` decomposition), the diagonal defect-zero enumeration, the
//! closed-form series identities, and the dual-complex checker. All integers
//! are exact (`int` on the Python side) and all exponents are exact
//! (`fractions.Fraction`).

use num::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use liminal_core::Rational;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A weight system `(a_1, ..., a_{n+1}; d)`: positive integer weights and a
/// degree with `0 < a_i < d`, describing a quasi-homogeneous isolated
/// hypersurface singularity of dimension `n`.
///
/// Equality and hashing are up to simultaneous scaling (`(1,1;2)` equals
/// `(2,2;4)`); the textual form keeps the weights as given.
#[pyclass(name = "WeightSystem", module = "liminal_py", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyWeightSystem {
    inner: liminal_core::WeightSystem,
}

#[pymethods]
impl PyWeightSystem {
    #[new]
    fn new(weights: Vec<u64>, degree: u64) -> PyResult<Self> {
        let inner = liminal_core::WeightSystem::new(weights, degree).map_err(value_err)?;
        Ok(PyWeightSystem { inner })
    }

    /// Parses the textual form `"a1,a2,...,ak;d"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = liminal_core::WeightSystem::parse(text).map_err(value_err)?;
        Ok(PyWeightSystem { inner })
    }

    /// Weights in the order originally supplied.
    #[getter]
    fn weights(&self) -> Vec<u64> {
        self.inner.original_weights().to_vec()
    }

    #[getter]
    fn degree(&self) -> u64 {
        self.inner.degree()
    }

    /// Number of variables, `n + 1`.
    #[getter]
    fn num_vars(&self) -> usize {
        self.inner.num_vars()
    }

    /// Singularity dimension `n`.
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// The liminal defect `N = sum(a_i) - d`.
    #[getter]
    fn liminal_defect(&self) -> i128 {
        self.inner.liminal_defect()
    }

    /// The minimal exponent `sum(a_i) / d` as an exact `Fraction`.
    #[getter]
    fn minimal_exponent(&self) -> Rational {
        self.inner.minimal_exponent()
    }

    /// Full classification along the Du Bois / rational / liminal ladder.
    fn classify(&self) -> PySingularityClass {
        PySingularityClass {
            inner: self.inner.classify(),
        }
    }

    /// One-line classification, e.g. `"1-liminal"` or
    /// `"2-Du Bois, 1-rational"`.
    fn describe(&self) -> String {
        self.inner.classify().describe()
    }

    /// The Milnor number `prod (d - a_i) / a_i`, exact.
    fn milnor_number(&self) -> PyResult<BigUint> {
        liminal_core::milnor_number(&self.inner).map_err(value_err)
    }

    /// The Poincaré polynomial of the graded Milnor algebra.
    fn poincare_polynomial(&self) -> PyResult<PyPoincarePolynomial> {
        let inner = liminal_core::poincare_polynomial(&self.inner).map_err(value_err)?;
        Ok(PyPoincarePolynomial { inner })
    }

    /// The Steenbrink spectrum as a list of `(value, multiplicity)` pairs
    /// with exact `Fraction` values, in ascending order.
    fn spectrum(&self) -> PyResult<Vec<(Rational, BigUint)>> {
        let spectrum = liminal_core::spectrum(&self.inner).map_err(value_err)?;
        Ok(spectrum
            .entries()
            .iter()
            .map(|e| (e.value.clone(), e.multiplicity.clone()))
            .collect())
    }

    /// `s_p` for `p = 0..=n`: spectrum multiplicity in `(n-p, n-p+1]`.
    fn s_vector(&self) -> PyResult<Vec<BigUint>> {
        liminal_core::s_vector(&self.inner).map_err(value_err)
    }

    /// The torus-weight decomposition of first-order deformations.
    fn t1(&self) -> PyResult<PyT1Decomposition> {
        let inner = liminal_core::t1_decomposition(&self.inner).map_err(value_err)?;
        Ok(PyT1Decomposition { inner })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("WeightSystem.parse({:?})", self.inner.to_string())
    }
}

/// The classification of a weight system, determined by the minimal
/// exponent alone.
#[pyclass(name = "SingularityClass", module = "liminal_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PySingularityClass {
    inner: liminal_core::SingularityClass,
}

#[pymethods]
impl PySingularityClass {
    /// `N = sum(a_i) - d`; negative means not log canonical.
    #[getter]
    fn liminal_defect(&self) -> i128 {
        self.inner.liminal_defect
    }

    /// The minimal exponent as an exact `Fraction`.
    #[getter]
    fn minimal_exponent(&self) -> Rational {
        self.inner.minimal_exponent.clone()
    }

    #[getter]
    fn log_canonical(&self) -> bool {
        self.inner.log_canonical
    }

    #[getter]
    fn rational(&self) -> bool {
        self.inner.rational
    }

    /// Largest `k` with the singularity `k`-Du Bois (`-1` if none).
    #[getter]
    fn max_du_bois(&self) -> i128 {
        self.inner.max_du_bois
    }

    /// Largest `k` with the singularity `k`-rational (`-1` if none).
    #[getter]
    fn max_rational(&self) -> i128 {
        self.inner.max_rational
    }

    /// `k` when the singularity is exactly `k`-liminal (the minimal
    /// exponent is the integer `k + 1`), else `None`.
    #[getter]
    fn liminal_level(&self) -> Option<u64> {
        self.inner.liminal_level
    }

    /// True exactly when the defect is zero (`0`-liminal).
    #[getter]
    fn zero_liminal(&self) -> bool {
        self.inner.zero_liminal
    }

    /// One-line summary of the ladder position.
    fn describe(&self) -> String {
        self.inner.describe()
    }

    fn __repr__(&self) -> String {
        format!(
            "<SingularityClass defect={} alpha={} {:?}>",
            self.inner.liminal_defect,
            self.inner.minimal_exponent,
            self.inner.describe()
        )
    }
}

/// The Poincaré polynomial of a graded Milnor algebra; `coefficients[m]` is
/// the dimension of the degree-`m` piece.
#[pyclass(name = "PoincarePolynomial", module = "liminal_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyPoincarePolynomial {
    inner: liminal_core::PoincarePolynomial,
}

#[pymethods]
impl PyPoincarePolynomial {
    /// Coefficients by degree, `0..=top_degree`.
    #[getter]
    fn coefficients(&self) -> Vec<BigUint> {
        self.inner.coeffs().to_vec()
    }

    /// Degree of the socle, `sum(d - 2 a_i)`.
    #[getter]
    fn top_degree(&self) -> usize {
        self.inner.top_degree()
    }

    /// Total dimension: the Milnor number.
    fn milnor_number(&self) -> BigUint {
        self.inner.milnor_number()
    }

    /// Dimension of the degree-`m` piece (zero outside the support).
    fn graded_dim(&self, m: usize) -> BigUint {
        self.inner.graded_dim(m)
    }

    /// Coefficient symmetry `coeffs[m] == coeffs[top - m]` (always true for
    /// genuine Milnor algebras).
    fn is_palindromic(&self) -> bool {
        self.inner.is_palindromic()
    }

    fn __len__(&self) -> usize {
        self.inner.coeffs().len()
    }

    fn __repr__(&self) -> String {
        format!(
            "<PoincarePolynomial top_degree={} milnor_number={}>",
            self.inner.top_degree(),
            self.inner.milnor_number()
        )
    }
}

/// The torus-weight decomposition of `T^1` with its graded partial sums.
///
/// The Hodge-theoretic names (`gr_link`, `h1_log`, ...) are meaningful when
/// `labels_valid` is true, i.e. for defect zero; the grading itself is
/// always valid.
#[pyclass(name = "T1Decomposition", module = "liminal_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyT1Decomposition {
    inner: liminal_core::T1Decomposition,
}

#[pymethods]
impl PyT1Decomposition {
    /// Nonzero graded dimensions keyed by torus weight, as a dict.
    #[getter]
    fn weights(&self) -> std::collections::BTreeMap<i128, BigUint> {
        self.inner.by_weight().clone()
    }

    /// Dimension of the weight-`a` piece (zero if absent).
    fn weight_dim(&self, a: i128) -> BigUint {
        self.inner.weight_dim(a)
    }

    /// Total dimension of `T^1` (the Milnor number).
    fn total_dim(&self) -> BigUint {
        self.inner.total_dim()
    }

    /// Weights `<= 0`.
    #[getter]
    fn dim_k(&self) -> BigUint {
        self.inner.dim_k().clone()
    }

    /// Weights `< 0` (the link invariant `t_minus`).
    #[getter]
    fn dim_k_prime(&self) -> BigUint {
        self.inner.dim_k_prime().clone()
    }

    /// Alias for `dim_k_prime`.
    #[getter]
    fn t_minus(&self) -> BigUint {
        self.inner.t_minus().clone()
    }

    /// Weight `0` alone: the graded middle cohomology of the link.
    #[getter]
    fn gr_link(&self) -> BigUint {
        self.inner.gr_link().clone()
    }

    /// Weights `>= 0`.
    #[getter]
    fn h1_log(&self) -> BigUint {
        self.inner.h1_log().clone()
    }

    /// Weights `> 0`.
    #[getter]
    fn h1_log_minus_e(&self) -> BigUint {
        self.inner.h1_log_minus_e().clone()
    }

    /// Whether the Hodge-theoretic labels apply (defect zero).
    #[getter]
    fn labels_valid(&self) -> bool {
        self.inner.labels_valid()
    }

    fn __repr__(&self) -> String {
        format!(
            "<T1Decomposition total={} K={} K'={} Gr={}>",
            self.inner.total_dim(),
            self.inner.dim_k(),
            self.inner.dim_k_prime(),
            self.inner.gr_link()
        )
    }
}

/// A diagonal (Fermat-type) defect-zero family: exponents
/// `(p_1, ..., p_{n+1})` with `sum 1/p_i = 1`.
#[pyclass(name = "DiagonalFamily", module = "liminal_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyDiagonalFamily {
    inner: liminal_core::DiagonalFamily,
}

#[pymethods]
impl PyDiagonalFamily {
    #[new]
    fn new(exponents: Vec<u64>) -> PyResult<Self> {
        let inner = liminal_core::DiagonalFamily::new(exponents).map_err(value_err)?;
        Ok(PyDiagonalFamily { inner })
    }

    /// Exponents, non-decreasing.
    #[getter]
    fn exponents(&self) -> Vec<u64> {
        self.inner.exponents().to_vec()
    }

    /// The induced weight system `(L/p_1, ..., L/p_{n+1}; L)`.
    #[getter]
    fn weight_system(&self) -> PyWeightSystem {
        PyWeightSystem {
            inner: self.inner.weight_system().clone(),
        }
    }

    /// Singularity dimension `n`.
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Milnor number `prod (p_i - 1)`.
    fn milnor_number(&self) -> BigUint {
        self.inner.milnor_number()
    }

    fn __repr__(&self) -> String {
        format!("DiagonalFamily({:?})", self.inner.exponents())
    }
}

/// The witness record of `verify_identity`.
#[pyclass(name = "IdentityWitness", module = "liminal_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyIdentityWitness {
    inner: liminal_core::IdentityWitness,
}

#[pymethods]
impl PyIdentityWitness {
    #[getter]
    fn n(&self) -> u64 {
        self.inner.n
    }

    /// `C(2n+2, n) - (n+2)`: the linear system of hypersurface pairs.
    #[getter]
    fn dim_a_system(&self) -> BigUint {
        self.inner.dim_a_system.clone()
    }

    /// `C(2n+1, n+1) - (n+1)^2`: moduli of the hypersurface itself.
    #[getter]
    fn moduli_e(&self) -> BigUint {
        self.inner.moduli_e.clone()
    }

    /// `C(2n+1, n) - (n+1)`: the negative-weight part of the local `T^1`.
    #[getter]
    fn t_minus(&self) -> BigUint {
        self.inner.t_minus.clone()
    }

    /// `C(2n+3, n+2) - (n+2)^2`: the full first-order deformation space.
    #[getter]
    fn global_t1(&self) -> BigUint {
        self.inner.global_t1.clone()
    }

    /// `dim_a_system + moduli_e + t_minus == global_t1`.
    #[getter]
    fn holds(&self) -> bool {
        self.inner.holds
    }

    /// The closed form of `t_minus` agrees with the torus-weight
    /// decomposition of the Fermat cone.
    #[getter]
    fn t_minus_matches_t1(&self) -> bool {
        self.inner.t_minus_matches_t1
    }

    fn __repr__(&self) -> String {
        format!(
            "<IdentityWitness n={} {} + {} + {} == {}: {}>",
            self.inner.n,
            self.inner.dim_a_system,
            self.inner.moduli_e,
            self.inner.t_minus,
            self.inner.global_t1,
            self.inner.holds
        )
    }
}

/// A validated dual complex of a simple normal crossing degeneration, with
/// per-stratum cohomology dimensions.
#[pyclass(name = "DualComplex", module = "liminal_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDualComplex {
    inner: liminal_core::DualComplexData,
}

#[pymethods]
impl PyDualComplex {
    /// Builds a complex on `n`-dimensional ambient strata. `faces` lists
    /// maximal (or any) faces by component index; singletons and the
    /// downward closure are added automatically. `h` optionally overrides
    /// per-stratum cohomology as `(face, q, dim)` triples; every stratum
    /// defaults to `h^0 = 1` and `h^q = 0` otherwise.
    #[new]
    #[pyo3(signature = (n, components, faces=Vec::new(), h=None))]
    fn new(
        n: usize,
        components: Vec<String>,
        faces: Vec<Vec<usize>>,
        h: Option<Vec<(Vec<usize>, usize, u64)>>,
    ) -> PyResult<Self> {
        let h = h
            .unwrap_or_default()
            .into_iter()
            .map(
                |(face, q, dim)| liminal_core::dual_complex::StratumCohomology { face, q, dim },
            )
            .collect();
        let inner = liminal_core::DualComplexData::new(n, components, faces, h).map_err(value_err)?;
        Ok(PyDualComplex { inner })
    }

    /// Parses the JSON input form
    /// `{"n":..,"components":[..],"faces":[[..]],"h":[{"face":..,"q":..,"dim":..}]}`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = liminal_core::DualComplexData::from_json(text).map_err(value_err)?;
        Ok(PyDualComplex { inner })
    }

    /// The same JSON form back, pretty-printed.
    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string_pretty(&self.inner).map_err(value_err)
    }

    /// Ambient germ dimension.
    #[getter]
    fn ambient_dim(&self) -> usize {
        self.inner.ambient_dim()
    }

    #[getter]
    fn components(&self) -> Vec<String> {
        self.inner.components().to_vec()
    }

    /// All faces (downward-closed, singletons included), sorted.
    #[getter]
    fn faces(&self) -> Vec<Vec<usize>> {
        self.inner.faces().map(|f| f.to_vec()).collect()
    }

    /// Number of `p`-dimensional faces (faces on `p + 1` components).
    fn face_count(&self, p: usize) -> usize {
        self.inner.face_count(p)
    }

    /// The Mayer–Vietoris first page as rows indexed by `q`, each row over
    /// `p = 0..n-1`: entry `(p, q)` sums `h^q` over faces on `p + 1`
    /// components.
    fn e1_page(&self) -> Vec<Vec<u64>> {
        self.inner.e1_page().rows().to_vec()
    }

    /// Cohomology dimensions of the dual complex itself, degrees
    /// `0..=n-1`, over the rationals.
    fn cohomology(&self) -> Vec<u64> {
        self.inner.cohomology()
    }

    /// Checks the combinatorial constraints forced in the defect-zero case;
    /// returns `(clause, message)` pairs, empty when everything holds. With
    /// `vanishing_range=m`, additionally requires `h^i` of the complex to
    /// vanish for `0 < i < m`.
    #[pyo3(signature = (vanishing_range=None))]
    fn check_zero_liminal(&self, vanishing_range: Option<usize>) -> Vec<(String, String)> {
        self.inner
            .check_zero_liminal_constraints(vanishing_range)
            .into_iter()
            .map(|v| (v.clause().to_owned(), v.to_string()))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "<DualComplex n={} components={} cohomology={:?}>",
            self.inner.ambient_dim(),
            self.inner.components().len(),
            self.inner.cohomology()
        )
    }
}

/// Enumerates all diagonal defect-zero families of singularity dimension
/// `dim`, in ascending exponent order. `budget` bounds the number of search
/// nodes (default 10 million).
#[pyfunction]
#[pyo3(signature = (dim, budget=None))]
fn enumerate_diagonal_liminal(dim: usize, budget: Option<u64>) -> PyResult<Vec<PyDiagonalFamily>> {
    let budget = budget.unwrap_or(liminal_core::DEFAULT_NODE_BUDGET);
    let families =
        liminal_core::enumerate_diagonal_liminal_with_budget(dim, budget).map_err(value_err)?;
    Ok(families
        .into_iter()
        .map(|inner| PyDiagonalFamily { inner })
        .collect())
}

/// Checks the decomposition identity
/// `dim_a_system + moduli_e + t_minus == global_t1` at `n` and returns the
/// full witness. Requires `3 <= n <= 128`.
#[pyfunction]
fn verify_identity(n: u64) -> PyResult<PyIdentityWitness> {
    let inner = liminal_core::verify_identity(n).map_err(value_err)?;
    Ok(PyIdentityWitness { inner })
}

/// `C(2n+1, n) - (n+1)`, the closed form of the negative-weight `T^1`
/// dimension of the Fermat cone. Requires `3 <= n <= 128`.
#[pyfunction]
fn t_minus_formula(n: u64) -> PyResult<BigUint> {
    liminal_core::t_minus_formula(n).map_err(value_err)
}

/// How much of the local deformation space of the Fermat cone in dimension
/// `n` is hit by global perturbations: `(full, image, codim)` with
/// `full = n^(n+1)`. Requires `2 <= n <= 128`.
#[pyfunction]
fn local_image_dims(n: u64) -> PyResult<(BigUint, BigUint, BigUint)> {
    let dims = liminal_core::local_image_dims(n).map_err(value_err)?;
    Ok((dims.full, dims.image, dims.codim))
}

/// Exact binomial coefficient `C(n, k)` (zero for `k > n`).
#[pyfunction]
fn binomial(n: u64, k: u64) -> BigUint {
    liminal_core::binomial(n, k)
}

#[pymodule]
fn liminal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWeightSystem>()?;
    m.add_class::<PySingularityClass>()?;
    m.add_class::<PyPoincarePolynomial>()?;
    m.add_class::<PyT1Decomposition>()?;
    m.add_class::<PyDiagonalFamily>()?;
    m.add_class::<PyIdentityWitness>()?;
    m.add_class::<PyDualComplex>()?;
    m.add_function(wrap_pyfunction!(enumerate_diagonal_liminal, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(t_minus_formula, m)?)?;
    m.add_function(wrap_pyfunction!(local_image_dims, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
