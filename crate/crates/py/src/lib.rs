//! Python bindings for `rmlab`.
//!
//! Counts are returned as Python integers (exact, arbitrary size); verdicts
//! are returned as dictionaries with the same fields as the CLI's JSON.

use num_bigint::{BigInt, BigUint};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use rmlab::harness::{self, CensusOptions, Method, Sampling, Verdict};
use rmlab::{krawtchouk, rmcodes, spectral, transforms};
use rmlab::{AnfMonomialSet, CosetSpec, Error, Limits, RmParams};

create_exception!(rmlab_py, CapExceededError, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::CapExceeded { .. } => CapExceededError::new_err(e.to_string()),
        Error::Io(_) | Error::Json(_) | Error::Inconsistent(_) | Error::Inexact(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn limits(cap_dim: Option<u32>) -> PyResult<Limits> {
    let base = Limits::from_env().map_err(to_py)?;
    Ok(match cap_dim {
        Some(cap) => base.with_max_dim(cap),
        None => base,
    })
}

fn method(name: Option<&str>) -> PyResult<Method> {
    match name.unwrap_or("auto") {
        "brute" => Ok(Method::Brute),
        "transform" => Ok(Method::Transform),
        "spectral" => Ok(Method::Spectral),
        "auto" => Ok(Method::Auto),
        other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
}

/// Truth table of a Boolean function of `m` variables.
#[pyclass(
    name = "TruthTable",
    module = "rmlab_py",
    eq,
    frozen,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyTruthTable {
    inner: rmlab::TruthTable,
}

#[pymethods]
impl PyTruthTable {
    /// Parse a hex truth table, most significant digit first.
    #[staticmethod]
    fn from_hex(m: u32, text: &str) -> PyResult<Self> {
        let inner = rmlab::TruthTable::from_hex(m, text).map_err(to_py)?;
        Ok(Self { inner })
    }

    /// Build from an algebraic normal form such as `"Y1Y2+Y3+1"`.
    #[staticmethod]
    fn from_anf(m: u32, text: &str) -> PyResult<Self> {
        let anf = AnfMonomialSet::parse(m, text).map_err(to_py)?;
        let inner = rmlab::TruthTable::from_anf(&anf).map_err(to_py)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_bits(m: u32, bits: Vec<bool>) -> PyResult<Self> {
        let inner = rmlab::TruthTable::from_bits(m, &bits).map_err(to_py)?;
        Ok(Self { inner })
    }

    #[getter]
    fn vars(&self) -> u32 {
        self.inner.vars()
    }

    fn weight(&self) -> u64 {
        self.inner.weight()
    }

    fn is_balanced(&self) -> bool {
        self.inner.is_balanced()
    }

    /// Algebraic degree; `None` for the zero function.
    fn degree(&self) -> Option<u32> {
        self.inner.degree()
    }

    fn anf(&self) -> String {
        self.inner.anf().to_string()
    }

    fn to_hex(&self) -> String {
        self.inner.to_hex()
    }

    fn bits(&self) -> Vec<bool> {
        self.inner.bits().collect()
    }

    /// Walsh–Hadamard spectrum indexed by `ω`.
    fn wht(&self) -> Vec<i32> {
        spectral::wht(&self.inner).values().to_vec()
    }

    fn __xor__(&self, other: &Self) -> PyResult<Self> {
        let inner = self.inner.xor(&other.inner).map_err(to_py)?;
        Ok(Self { inner })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "TruthTable.from_hex({}, {:?})",
            self.inner.vars(),
            self.inner.to_hex()
        )
    }
}

/// `K_j(i, n)` by the direct alternating sum.
#[pyfunction]
fn kraw(j: u64, i: u64, n: u64) -> PyResult<BigInt> {
    krawtchouk::kraw_direct(j, i, n).map_err(to_py)
}

/// `K_j(i, n)` for `i = 0..=n`.
#[pyfunction]
fn kraw_column(j: u64, n: u64) -> PyResult<Vec<BigInt>> {
    krawtchouk::kraw_column(j, n).map_err(to_py)
}

/// `K_{n/2}(i, n)` for even `n`.
#[pyfunction]
fn central_k(i: u64, n: u64) -> PyResult<BigInt> {
    krawtchouk::central_k(i, n).map_err(to_py)
}

/// Dense weight distribution of `RM(k, m)`; `method` is `"brute"` or `"macwilliams"`.
#[pyfunction]
#[pyo3(signature = (k, m, method = "brute", cap_dim = None))]
fn weight_distribution(
    k: u32,
    m: u32,
    method: &str,
    cap_dim: Option<u32>,
) -> PyResult<Vec<BigUint>> {
    let p = RmParams::new(k, m).map_err(to_py)?;
    let lim = limits(cap_dim)?;
    let d = match method {
        "brute" => rmcodes::rm_weight_distribution(&p, &lim),
        "macwilliams" => transforms::rm_distribution_via_dual(&p, &lim),
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
    .map_err(to_py)?;
    Ok(d.dense())
}

/// Dense weight distribution of `RM(k, m) + rep`; `method` is `"brute"` or `"transform"`.
#[pyfunction]
#[pyo3(signature = (k, m, rep, method = "brute", cap_dim = None))]
fn coset_distribution(
    k: u32,
    m: u32,
    rep: &PyTruthTable,
    method: &str,
    cap_dim: Option<u32>,
) -> PyResult<Vec<BigUint>> {
    let p = RmParams::new(k, m).map_err(to_py)?;
    let lim = limits(cap_dim)?;
    let d = match method {
        "brute" => rmcodes::coset_weight_distribution(&p, &rep.inner, &lim),
        "transform" => CosetSpec::new(p, rep.inner.clone())
            .and_then(|spec| transforms::coset_distribution_via_dual(&spec, &lim)),
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
    .map_err(to_py)?;
    Ok(d.dense())
}

/// Balanced words in `RM(1, m) + f`, from the zeros of the Walsh spectrum.
#[pyfunction]
fn rm1_coset_balanced_count(f: &PyTruthTable) -> u64 {
    spectral::rm1_coset_balanced_count(&f.inner)
}

/// `(B(m-2, m), d_{n/2})` for the extended Hamming code and its cosets.
#[pyfunction]
fn hamming_closed_forms(m: u32) -> PyResult<(BigUint, BigUint)> {
    transforms::hamming_closed_forms(m).map_err(to_py)
}

/// Every weight of `RM(k, m)` is divisible by `2^⌊(m-1)/k⌋`.
#[pyfunction]
#[pyo3(signature = (k, m, cap_dim = None))]
fn mceliece_check(k: u32, m: u32, cap_dim: Option<u32>) -> PyResult<bool> {
    let p = RmParams::new(k, m).map_err(to_py)?;
    rmcodes::mceliece_check(&p, &limits(cap_dim)?).map_err(to_py)
}

fn verdict_dict<'py>(py: Python<'py>, v: Verdict) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(&v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn census_options(method_name: Option<&str>) -> PyResult<CensusOptions> {
    Ok(CensusOptions {
        method: Some(method(method_name)?),
        checkpoint: None,
    })
}

/// `RM(k, m)` against every nontrivial coset in the full space.
#[pyfunction]
#[pyo3(signature = (k, m, method = None, cap_dim = None))]
fn verify_theorem<'py>(
    py: Python<'py>,
    k: u32,
    m: u32,
    method: Option<&str>,
    cap_dim: Option<u32>,
) -> PyResult<Bound<'py, PyAny>> {
    let options = census_options(method)?;
    let lim = limits(cap_dim)?;
    let v = py
        .detach(|| harness::verify_theorem_basic(k, m, &options, &lim))
        .map_err(to_py)?;
    verdict_dict(py, v)
}

/// `RM(k, m)` against the other cosets in `RM(k+1, m)`.
#[pyfunction]
#[pyo3(signature = (k, m, method = None, cap_dim = None))]
fn verify_quotient_conjecture<'py>(
    py: Python<'py>,
    k: u32,
    m: u32,
    method: Option<&str>,
    cap_dim: Option<u32>,
) -> PyResult<Bound<'py, PyAny>> {
    let options = census_options(method)?;
    let lim = limits(cap_dim)?;
    let v = py
        .detach(|| harness::verify_quotient_conjecture(k, m, &options, &lim))
        .map_err(to_py)?;
    verdict_dict(py, v)
}

/// The first-order coset bound; exhaustive unless `samples` is given.
#[pyfunction]
#[pyo3(signature = (m, samples = None, seed = 0))]
fn verify_rm1<'py>(
    py: Python<'py>,
    m: u32,
    samples: Option<u64>,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let sampling = match samples {
        Some(count) => Sampling::Sampled { count, seed },
        None => Sampling::Exhaustive,
    };
    let lim = limits(None)?;
    let v = py
        .detach(|| harness::verify_rm1_proposition(m, sampling, &lim))
        .map_err(to_py)?;
    verdict_dict(py, v)
}

#[pyfunction]
#[pyo3(signature = (m, method = None))]
fn verify_oddweight<'py>(
    py: Python<'py>,
    m: u32,
    method: Option<&str>,
) -> PyResult<Bound<'py, PyAny>> {
    let method = self::method(method)?;
    let lim = limits(None)?;
    let v = py
        .detach(|| harness::verify_oddweight_cosets(m, method, &lim))
        .map_err(to_py)?;
    verdict_dict(py, v)
}

#[pyfunction]
#[pyo3(signature = (m, method = None))]
fn verify_equidist<'py>(
    py: Python<'py>,
    m: u32,
    method: Option<&str>,
) -> PyResult<Bound<'py, PyAny>> {
    let method = self::method(method)?;
    let lim = limits(None)?;
    let v = py
        .detach(|| harness::verify_hamming_coset_equidistribution(m, method, &lim))
        .map_err(to_py)?;
    verdict_dict(py, v)
}

#[pymodule]
fn rmlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTruthTable>()?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    m.add_function(wrap_pyfunction!(kraw, m)?)?;
    m.add_function(wrap_pyfunction!(kraw_column, m)?)?;
    m.add_function(wrap_pyfunction!(central_k, m)?)?;
    m.add_function(wrap_pyfunction!(weight_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(coset_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(rm1_coset_balanced_count, m)?)?;
    m.add_function(wrap_pyfunction!(hamming_closed_forms, m)?)?;
    m.add_function(wrap_pyfunction!(mceliece_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(verify_quotient_conjecture, m)?)?;
    m.add_function(wrap_pyfunction!(verify_rm1, m)?)?;
    m.add_function(wrap_pyfunction!(verify_oddweight, m)?)?;
    m.add_function(wrap_pyfunction!(verify_equidist, m)?)?;
    Ok(())
}
