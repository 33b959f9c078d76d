//! Python bindings for `sln_ext`.
//!
//! Library errors surface as `ValueError`, except internal inconsistencies
//! (a cross-check failed) which raise `RuntimeError`.

use num_rational::BigRational;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use sln_ext::clifford;
use sln_ext::exterior;
use sln_ext::koszul::{self, KoszulComplex};
use sln_ext::tables::{self, CaseTag, ExtTable, Theorem1Config};
use sln_ext::{CycNum, Error, IntMatrix, LatticeRep, LatticeSpec};

fn to_py(err: Error) -> PyErr {
    match err {
        Error::Internal(msg) => PyRuntimeError::new_err(msg),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    let text = obj.str()?.to_string();
    text.trim()
        .parse::<BigRational>()
        .map_err(|_| PyValueError::new_err(format!("{text:?} is not an exact rational")))
}

fn fraction<'py>(py: Python<'py>, q: &BigRational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((q.to_string(),))
}

/// An element of the cyclotomic field `Q(zeta_n)`.
#[pyclass(
    name = "CycNum",
    module = "sln_ext",
    frozen,
    eq,
    skip_from_py_object,
    str
)]
#[derive(Clone, PartialEq)]
pub struct PyCycNum(CycNum);

#[pymethods]
impl PyCycNum {
    /// Builds `sum c_i zeta^i` from the `phi(n)` power-basis coordinates.
    #[new]
    fn new(n: u32, coeffs: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("order must be positive"));
        }
        let coeffs = coeffs.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
        CycNum::from_coeffs(n, coeffs).map(PyCycNum).map_err(to_py)
    }

    #[staticmethod]
    #[pyo3(signature = (n, k = 1))]
    fn zeta(n: u32, k: i64) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("order must be positive"));
        }
        Ok(PyCycNum(sln_ext::zeta_pow(n, k)))
    }

    #[staticmethod]
    fn from_int(n: u32, value: i64) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("order must be positive"));
        }
        Ok(PyCycNum(CycNum::from_int(n, value)))
    }

    #[getter]
    fn order(&self) -> u32 {
        self.0.order()
    }

    /// Power-basis coordinates as `fractions.Fraction`.
    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        self.0.coeffs().iter().map(|c| fraction(py, c)).collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn is_root_of_unity(&self) -> bool {
        self.0.is_root_of_unity()
    }

    fn to_integer(&self) -> Option<i64> {
        self.0.to_integer().and_then(|v| i64::try_from(v).ok())
    }

    fn inv(&self) -> PyResult<Self> {
        self.0.inv().map(PyCycNum).map_err(to_py)
    }

    fn conj(&self) -> Self {
        PyCycNum(self.0.conj())
    }

    fn galois(&self, t: u32) -> PyResult<Self> {
        let n = self.0.order();
        if num_integer::gcd(t, n) != 1 {
            return Err(PyValueError::new_err(format!("{t} is not a unit mod {n}")));
        }
        Ok(PyCycNum(self.0.galois(t)))
    }

    fn pow(&self, e: u64) -> Self {
        PyCycNum(self.0.pow(e))
    }

    fn __add__(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.try_add(&other.0).map(PyCycNum).map_err(to_py)
    }

    fn __sub__(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.try_sub(&other.0).map(PyCycNum).map_err(to_py)
    }

    fn __mul__(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(PyCycNum).map_err(to_py)
    }

    fn __truediv__(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.try_div(&other.0).map(PyCycNum).map_err(to_py)
    }

    fn __neg__(&self) -> Self {
        PyCycNum(-&self.0)
    }

    fn __repr__(&self) -> String {
        format!("CycNum({}, {})", self.0.order(), self.0)
    }
}

impl std::fmt::Display for PyCycNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// A lattice with an integral action of a cyclic group.
#[pyclass(
    name = "LatticeRep",
    module = "sln_ext",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyLatticeRep(LatticeRep);

#[pymethods]
impl PyLatticeRep {
    /// Lattice `Z^m` with generator acting by `action` (columns are images).
    #[new]
    fn new(action: Vec<Vec<i64>>, order: u32) -> PyResult<Self> {
        let action = IntMatrix::from_rows(&action).map_err(to_py)?;
        LatticeRep::from_action(action, order)
            .map(PyLatticeRep)
            .map_err(to_py)
    }

    #[staticmethod]
    fn standard_a(n: u32) -> PyResult<Self> {
        LatticeRep::standard_a(n).map(PyLatticeRep).map_err(to_py)
    }

    /// Parses `{"rank": m, "order": n, "action": [...]}`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        LatticeSpec::from_json(text)
            .and_then(|s| s.to_lattice())
            .map(PyLatticeRep)
            .map_err(to_py)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn order(&self) -> u32 {
        self.0.order()
    }

    #[getter]
    fn action(&self) -> Vec<Vec<i64>> {
        self.0.action().to_rows()
    }

    #[getter]
    fn basis(&self) -> Vec<Vec<i64>> {
        self.0.basis().to_rows()
    }

    fn dual(&self) -> Self {
        PyLatticeRep(self.0.dual())
    }

    fn trace_power(&self, k: i64) -> i64 {
        self.0.trace_power(k)
    }

    fn characteristic_polynomial(&self) -> String {
        self.0.characteristic_polynomial().to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "LatticeRep(rank={}, order={})",
            self.0.rank(),
            self.0.order()
        )
    }
}

/// Ext dimensions `dims[r][j]` with `j = b - a mod n`.
#[pyclass(name = "ExtTable", module = "sln_ext", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyExtTable(ExtTable);

#[pymethods]
impl PyExtTable {
    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    #[getter]
    fn case(&self) -> &'static str {
        self.0.case().as_str()
    }

    #[getter]
    fn provenance(&self) -> &'static str {
        self.0.provenance().as_str()
    }

    #[getter]
    fn dims(&self) -> Vec<Vec<u64>> {
        self.0.dims().to_vec()
    }

    fn dim(&self, r: usize, j: i64) -> u64 {
        self.0.dim(r, j)
    }

    fn column(&self, j: i64) -> Vec<u64> {
        self.0.column(j)
    }

    fn ep_vector(&self) -> Vec<i64> {
        self.0.ep_vector()
    }

    fn check_invariants(&self) -> Vec<String> {
        self.0.check_invariants()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn to_csv(&self) -> String {
        self.0.to_csv()
    }

    fn to_markdown(&self) -> String {
        self.0.to_markdown()
    }

    fn __repr__(&self) -> String {
        format!("ExtTable({})", self.0.to_json())
    }
}

#[pyfunction]
fn exterior_char(l: PyRef<'_, PyLatticeRep>, r: usize, k: i64) -> PyResult<PyCycNum> {
    exterior::exterior_char(&l.0, r, k)
        .map(PyCycNum)
        .map_err(to_py)
}

#[pyfunction]
fn isotypic_mult(l: PyRef<'_, PyLatticeRep>, r: usize, j: i64) -> PyResult<u64> {
    exterior::isotypic_mult(&l.0, r, j).map_err(to_py)
}

#[pyfunction]
fn isotypic_vector(l: PyRef<'_, PyLatticeRep>, r: usize) -> PyResult<Vec<u64>> {
    exterior::isotypic_vector(&l.0, r)
        .map(|v| v.mults)
        .map_err(to_py)
}

#[pyfunction]
fn subset_sum_mult(n: u32, r: usize, j: i64) -> PyResult<u64> {
    exterior::subset_sum_mult(n, r, j).map_err(to_py)
}

#[pyfunction]
fn subset_sum_vector(n: u32, r: usize) -> PyResult<Vec<u64>> {
    exterior::subset_sum_vector(n, r)
        .map(|v| v.mults)
        .map_err(to_py)
}

/// `dim H^i(Z^m, chi)` for `chi(b_i) = zeta_n^{exponents[i]}`.
#[pyfunction]
fn koszul_dims(n: u32, exponents: Vec<i64>) -> PyResult<Vec<usize>> {
    if n == 0 {
        return Err(PyValueError::new_err("order must be positive"));
    }
    KoszulComplex::from_exponents(n, &exponents)
        .map(|k| k.cohomology_dims())
        .map_err(to_py)
}

#[pyfunction]
fn lattice_cohomology_dims(
    l: PyRef<'_, PyLatticeRep>,
    chi: Vec<PyRef<'_, PyCycNum>>,
) -> PyResult<Vec<usize>> {
    let values: Vec<CycNum> = chi.iter().map(|c| c.0.clone()).collect();
    koszul::lattice_cohomology_dims(&l.0, &values).map_err(to_py)
}

#[pyfunction]
fn semidirect_cohomology_dim(l: PyRef<'_, PyLatticeRep>, eta: i64, i: usize) -> PyResult<usize> {
    koszul::semidirect_cohomology_dim(&l.0, eta, i).map_err(to_py)
}

#[pyfunction]
fn orbit_stabilizer(py: Python<'_>, n: u32) -> PyResult<Bound<'_, PyDict>> {
    let o = clifford::orbit_stabilizer(n).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("n", o.n)?;
    d.set_item("orbit_size", o.orbit_size)?;
    d.set_item("generator", o.generator.cycle_notation())?;
    let stab: Vec<String> = o.stabilizer.iter().map(|p| p.cycle_notation()).collect();
    d.set_item("stabilizer", stab)?;
    Ok(d)
}

/// `[(canonical exponents, multiplicity), ...]` in sorted order.
#[pyfunction]
fn restriction_to_a(n: u32) -> PyResult<Vec<(Vec<u32>, usize)>> {
    let r = clifford::restriction_to_a(n).map_err(to_py)?;
    Ok(r.into_iter()
        .map(|(c, m)| (c.exponents().to_vec(), m))
        .collect())
}

#[pyfunction]
fn ext_transfer(n: u32, eta1: i64, eta2: i64) -> PyResult<Vec<usize>> {
    clifford::ext_transfer(n, eta1, eta2).map_err(to_py)
}

#[pyfunction]
fn conjugation_twist(n: u32, d: i64) -> PyResult<u32> {
    clifford::conjugation_twist(n, d).map_err(to_py)
}

#[pyfunction]
fn twist_unit(n: u32) -> PyResult<u32> {
    clifford::twist_unit(n).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (n, case = "ramified", oracle = false))]
fn theorem2_table(n: u32, case: &str, oracle: bool) -> PyResult<PyExtTable> {
    let case: CaseTag = case.parse().map_err(to_py)?;
    let t = if oracle {
        tables::theorem2_oracle_table(n, case)
    } else {
        tables::theorem2_table(n, case)
    };
    t.map(PyExtTable).map_err(to_py)
}

#[pyfunction]
fn conjecture_table(l: PyRef<'_, PyLatticeRep>) -> PyResult<PyExtTable> {
    tables::conjecture_table(&l.0)
        .map(PyExtTable)
        .map_err(to_py)
}

#[pyfunction]
fn euler_poincare(t: PyRef<'_, PyExtTable>, j: i64) -> i64 {
    tables::euler_poincare(&t.0, j)
}

#[pyfunction]
fn ramanujan_sum(n: u32, j: i64) -> PyResult<i64> {
    tables::ramanujan_sum(n, j).map_err(to_py)
}

#[pyfunction]
fn mobius(n: u64) -> PyResult<i64> {
    if n == 0 {
        return Err(PyValueError::new_err("mobius is defined for n >= 1"));
    }
    Ok(tables::mobius(n))
}

#[pyfunction]
#[pyo3(signature = (reducible, sigma_selfconjugate = false, normalizer_trivial = false))]
fn theorem1_ext1(
    reducible: bool,
    sigma_selfconjugate: bool,
    normalizer_trivial: bool,
) -> PyResult<Vec<Vec<u64>>> {
    let cfg = Theorem1Config {
        reducible,
        sigma_selfconjugate,
        normalizer_trivial,
    };
    tables::theorem1_ext1(&cfg).map_err(to_py)
}

/// Cross-pipeline verification report as a dict; `report["mismatches"]` is
/// empty on success.
#[pyfunction]
fn verify(py: Python<'_>, n: u32) -> PyResult<Bound<'_, PyAny>> {
    let report = tables::verify(n).map_err(to_py)?;
    let d = py
        .import("json")?
        .call_method1("loads", (report.to_json(),))?;
    d.set_item("ok", report.ok())?;
    Ok(d)
}

/// Exact Ext-dimension tables for SL_n principal series constituents.
#[pymodule]
#[pyo3(name = "sln_ext")]
pub fn sln_ext_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCycNum>()?;
    m.add_class::<PyLatticeRep>()?;
    m.add_class::<PyExtTable>()?;
    m.add_function(wrap_pyfunction!(exterior_char, m)?)?;
    m.add_function(wrap_pyfunction!(isotypic_mult, m)?)?;
    m.add_function(wrap_pyfunction!(isotypic_vector, m)?)?;
    m.add_function(wrap_pyfunction!(subset_sum_mult, m)?)?;
    m.add_function(wrap_pyfunction!(subset_sum_vector, m)?)?;
    m.add_function(wrap_pyfunction!(koszul_dims, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_cohomology_dims, m)?)?;
    m.add_function(wrap_pyfunction!(semidirect_cohomology_dim, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_stabilizer, m)?)?;
    m.add_function(wrap_pyfunction!(restriction_to_a, m)?)?;
    m.add_function(wrap_pyfunction!(ext_transfer, m)?)?;
    m.add_function(wrap_pyfunction!(conjugation_twist, m)?)?;
    m.add_function(wrap_pyfunction!(twist_unit, m)?)?;
    m.add_function(wrap_pyfunction!(theorem2_table, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_table, m)?)?;
    m.add_function(wrap_pyfunction!(euler_poincare, m)?)?;
    m.add_function(wrap_pyfunction!(ramanujan_sum, m)?)?;
    m.add_function(wrap_pyfunction!(mobius, m)?)?;
    m.add_function(wrap_pyfunction!(theorem1_ext1, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add(
        "__all__",
        PyList::new(
            m.py(),
            [
                "CycNum",
                "LatticeRep",
                "ExtTable",
                "exterior_char",
                "isotypic_mult",
                "isotypic_vector",
                "subset_sum_mult",
                "subset_sum_vector",
                "koszul_dims",
                "lattice_cohomology_dims",
                "semidirect_cohomology_dim",
                "orbit_stabilizer",
                "restriction_to_a",
                "ext_transfer",
                "conjugation_twist",
                "twist_unit",
                "theorem2_table",
                "conjecture_table",
                "euler_poincare",
                "ramanujan_sum",
                "mobius",
                "theorem1_ext1",
                "verify",
            ],
        )?,
    )?;
    Ok(())
}
