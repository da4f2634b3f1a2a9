//! Python bindings: `import coherency`.

use std::fmt;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use coherency::ideals::Meets;
use coherency::pmonoid::{self, AnnVerdict, ChainBounds};
use coherency::{Element, GreenOrder, Kind, Side};

fn err(e: coherency::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn kind(text: &str) -> PyResult<Kind> {
    text.parse()
        .map_err(|e: coherency::ParseError| PyValueError::new_err(e.to_string()))
}

fn side(text: &str) -> PyResult<Side> {
    text.parse()
        .map_err(|e: coherency::ParseError| PyValueError::new_err(e.to_string()))
}

/// A partial map of {1..n}, written like `[2,_,1]`.
#[pyclass(
    name = "PartialMap",
    module = "coherency",
    frozen,
    eq,
    hash,
    str,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartialMap(coherency::PartialMap);

impl fmt::Display for PyPartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl PyPartialMap {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        coherency::PartialMap::parse(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        Self(coherency::PartialMap::identity(n))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    /// Images as 1-based points, `None` where undefined.
    fn images(&self) -> Vec<Option<usize>> {
        self.0.images().iter().map(|y| y.map(|y| y + 1)).collect()
    }

    fn dom(&self) -> Vec<usize> {
        self.0.dom().into_iter().map(|x| x + 1).collect()
    }

    fn im(&self) -> Vec<usize> {
        self.0.im().into_iter().map(|x| x + 1).collect()
    }

    fn belongs_to(&self, kind_name: &str) -> PyResult<bool> {
        Ok(self.0.belongs_to(kind(kind_name)?))
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(Self).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("PartialMap('{}')", self.0)
    }
}

/// A partition of {1..n} ∪ {1'..n'}, written like `{1 2'}{2}{1'}`.
#[pyclass(
    name = "Partition",
    module = "coherency",
    frozen,
    eq,
    hash,
    str,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(coherency::Partition);

impl fmt::Display for PyPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl PyPartition {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        coherency::Partition::parse(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        Self(coherency::Partition::identity(n))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    /// Blocks as lists of point labels such as `"1"` and `"2'"`.
    fn blocks(&self) -> Vec<Vec<String>> {
        self.0.labelled_blocks()
    }

    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn star(&self) -> Self {
        Self(self.0.star())
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    /// DOT source for the two-row diagram.
    fn to_dot(&self) -> String {
        coherency::cli::render_partition(&self.0)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(Self).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Partition('{}')", self.0)
    }
}

/// An element of P(g, h, e), from a normal form `{-2,-1};+2` or a word `gege`.
#[pyclass(
    name = "Nf",
    module = "coherency",
    frozen,
    eq,
    hash,
    str,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyNf(coherency::Nf);

impl fmt::Display for PyNf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl PyNf {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        coherency::cli::parse_nf_or_word(text)
            .map(Self)
            .map_err(err)
    }

    #[staticmethod]
    fn from_parts(excluded: Vec<i64>, shift: i64) -> Self {
        Self(coherency::Nf::new(excluded, shift))
    }

    #[getter]
    fn excluded(&self) -> Vec<i64> {
        self.0.excluded().to_vec()
    }

    #[getter]
    fn shift(&self) -> i64 {
        self.0.shift()
    }

    fn apply(&self, x: i64) -> Option<i64> {
        self.0.apply(x)
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    fn natural_leq(&self, other: &Self) -> bool {
        self.0.natural_leq(&other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(self.0.mul(&other.0))
    }

    fn __repr__(&self) -> String {
        format!("Nf('{}')", self.0)
    }
}

/// Either element family, as accepted by the order and meet functions.
#[derive(FromPyObject)]
enum AnyElement {
    Map(PyPartialMap),
    Partition(PyPartition),
}

fn green_leq(kind_name: &str, a: AnyElement, b: AnyElement, s: Side) -> PyResult<bool> {
    let k = kind(kind_name)?;
    match (a, b) {
        (AnyElement::Map(a), AnyElement::Map(b)) => {
            a.0.check_kind(k).and(b.0.check_kind(k)).map_err(err)?;
            a.0.leq(&b.0, s).map_err(err)
        }
        (AnyElement::Partition(a), AnyElement::Partition(b)) => {
            a.0.check_kind(k).and(b.0.check_kind(k)).map_err(err)?;
            a.0.leq(&b.0, s).map_err(err)
        }
        _ => Err(PyValueError::new_err("elements of different families")),
    }
}

/// `a ≤ b` in Green's right (`side="R"`) or left (`side="L"`) preorder.
#[pyfunction]
#[pyo3(signature = (kind, a, b, side = "R"))]
fn green(kind: &str, a: AnyElement, b: AnyElement, side: &str) -> PyResult<bool> {
    green_leq(kind, a, b, self::side(side)?)
}

/// Generator of aS ∩ bS (or Sa ∩ Sb), or `None` when the intersection is empty.
#[pyfunction]
#[pyo3(signature = (kind, a, b, side = "R"))]
fn meet(
    py: Python<'_>,
    kind: &str,
    a: AnyElement,
    b: AnyElement,
    side: &str,
) -> PyResult<Option<Py<PyAny>>> {
    let (k, s) = (self::kind(kind)?, self::side(side)?);
    let out = match (a, b) {
        (AnyElement::Map(a), AnyElement::Map(b)) => coherency::PartialMap::meet(k, s, &a.0, &b.0)
            .map_err(err)?
            .generator()
            .map(|g| Py::new(py, PyPartialMap(g.clone())).map(Py::into_any))
            .transpose()?,
        (AnyElement::Partition(a), AnyElement::Partition(b)) => {
            coherency::Partition::meet(k, s, &a.0, &b.0)
                .map_err(err)?
                .generator()
                .map(|g| Py::new(py, PyPartition(g.clone())).map(Py::into_any))
                .transpose()?
        }
        _ => return Err(PyValueError::new_err("elements of different families")),
    };
    Ok(out)
}

/// Every element of `kind` ("T", "PT", "I" or "P") at degree `n`, as strings.
#[pyfunction]
fn enumerate(kind: &str, n: usize) -> PyResult<Vec<String>> {
    let k = self::kind(kind)?;
    let cap = coherency::elements::DEFAULT_ENUMERATION_CAP;
    if k.is_partition() {
        let all = coherency::Partition::enumerate(k, n, cap).map_err(err)?;
        Ok(all.iter().map(ToString::to_string).collect())
    } else {
        let all = coherency::PartialMap::enumerate(k, n, cap).map_err(err)?;
        Ok(all.iter().map(ToString::to_string).collect())
    }
}

/// `(n, "g" | "h")` when `(u, v)` is in the annihilator, else `None`.
#[pyfunction]
fn in_annihilator(u: &PyNf, v: &PyNf) -> Option<(u64, String)> {
    match pmonoid::in_annihilator(&u.0, &v.0) {
        AnnVerdict::Yes { n, side } => Some((n, side.to_string())),
        AnnVerdict::No => None,
    }
}

/// Steps `(c, d, t)` of a sequence from `u` to `v`.
#[pyfunction]
fn annihilator_witness(u: &PyNf, v: &PyNf) -> PyResult<Vec<(PyNf, PyNf, PyNf)>> {
    let seq = pmonoid::annihilator_witness(&u.0, &v.0).map_err(err)?;
    Ok(seq
        .steps
        .into_iter()
        .map(|s| (PyNf(s.left), PyNf(s.right), PyNf(s.multiplier)))
        .collect())
}

#[pyfunction]
#[pyo3(signature = (k = 50))]
fn check_presentation(k: usize) -> bool {
    pmonoid::check_presentation(k)
}

#[pyfunction]
#[pyo3(signature = (n = 50))]
fn check_nc(n: usize) -> bool {
    pmonoid::check_nc(n).holds()
}

/// Bounded search for `(g^n e, h^n e g^n)` in `⟨Y_m⟩`; returns
/// `(reached, explored, exhaustive)`.
#[pyfunction]
#[pyo3(signature = (n, generators = None))]
fn chain_search(n: usize, generators: Option<usize>) -> (bool, usize, bool) {
    let m = generators.unwrap_or(n.saturating_sub(1));
    let r = pmonoid::chain_search_with(n, m, ChainBounds::default_for(n));
    (r.reached, r.explored, r.exhaustive())
}

/// Runs a named verification suite; returns `(passed, detail)`.
#[pyfunction]
#[pyo3(signature = (suite, seed = 0))]
fn verify(suite: &str, seed: u64) -> PyResult<(bool, String)> {
    let config = coherency::suites::SuiteConfig {
        seed,
        ..Default::default()
    };
    let outcome = coherency::suites::run(suite, &config)
        .ok_or_else(|| PyValueError::new_err(format!("unknown suite {suite:?}")))?;
    Ok((outcome.passed, outcome.detail))
}

#[pymodule]
#[pyo3(name = "coherency")]
fn coherency_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartialMap>()?;
    m.add_class::<PyPartition>()?;
    m.add_class::<PyNf>()?;
    m.add_function(wrap_pyfunction!(green, m)?)?;
    m.add_function(wrap_pyfunction!(meet, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(in_annihilator, m)?)?;
    m.add_function(wrap_pyfunction!(annihilator_witness, m)?)?;
    m.add_function(wrap_pyfunction!(check_presentation, m)?)?;
    m.add_function(wrap_pyfunction!(check_nc, m)?)?;
    m.add_function(wrap_pyfunction!(chain_search, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
