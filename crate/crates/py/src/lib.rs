//! Python bindings: thin wrappers returning plain Python values or JSON strings.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use quiverdef::harness::{algebra_file, parse_d_range, run_suite, Suite};
use quiverdef::quiver::{build_algebra, Family, Kind};
use quiverdef::rep::{end_dim, ext1, radical_series, stable_end_dim, string_module_str, QuiverRep};
use quiverdef::witt_rings::{precision_from_env, witt_summary as summary};
use quiverdef::Error;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Parse { .. } | Error::Unsupported(_) | Error::RelationViolation(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn module(family: &str, d: u32, kind: &str, word: &str) -> Result<QuiverRep, Error> {
    let alg = build_algebra(family.parse::<Family>()?, d, kind.parse::<Kind>()?)?;
    string_module_str(&alg, word)
}

/// Algebra summary (dimension, Cartan matrix, basis, projectives) as JSON.
#[pyfunction]
#[pyo3(signature = (family, d, kind = "full"))]
fn algebra_json(family: &str, d: u32, kind: &str) -> PyResult<String> {
    let f = family.parse::<Family>().map_err(to_py)?;
    let k = kind.parse::<Kind>().map_err(to_py)?;
    let alg = build_algebra(f, d, k).map_err(to_py)?;
    serde_json::to_string(&algebra_file(&alg)).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Radical layers of a string module, each as a dimension vector.
#[pyfunction]
#[pyo3(signature = (family, d, word, kind = "full"))]
fn radical_layers(family: &str, d: u32, word: &str, kind: &str) -> PyResult<Vec<[usize; 3]>> {
    Ok(radical_series(&module(family, d, kind, word).map_err(to_py)?))
}

/// `(dim End, dim stable End, dim Ext^1(M, M))` of a string module.
#[pyfunction]
#[pyo3(signature = (family, d, word, kind = "full"))]
fn invariants(family: &str, d: u32, word: &str, kind: &str) -> PyResult<(usize, usize, usize)> {
    let m = module(family, d, kind, word).map_err(to_py)?;
    Ok((end_dim(&m).map_err(to_py)?, stable_end_dim(&m).map_err(to_py)?, ext1(&m, &m).map_err(to_py)?))
}

/// p_(d+1), its reduction mod 2 and the S' check, as JSON.
#[pyfunction]
#[pyo3(signature = (d, precision = None))]
fn witt_summary(d: u32, precision: Option<u32>) -> PyResult<String> {
    let m = match precision {
        Some(m) => m,
        None => precision_from_env(d).map_err(to_py)?,
    };
    serde_json::to_string(&summary(d, m).map_err(to_py)?).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Runs a verification suite; returns `(check id, passed, detail)` per check.
#[pyfunction]
#[pyo3(signature = (suite, d_range = "2..3"))]
fn verify(py: Python<'_>, suite: &str, d_range: &str) -> PyResult<Vec<(String, bool, String)>> {
    let suite = suite.parse::<Suite>().map_err(to_py)?;
    let range = parse_d_range(d_range).map_err(to_py)?;
    let results = py.detach(|| run_suite(suite, range)).map_err(to_py)?;
    Ok(results.into_iter().map(|r| (r.check_id.clone(), r.passed(), r.detail)).collect())
}

#[pymodule]
fn quiverdef_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(algebra_json, m)?)?;
    m.add_function(wrap_pyfunction!(radical_layers, m)?)?;
    m.add_function(wrap_pyfunction!(invariants, m)?)?;
    m.add_function(wrap_pyfunction!(witt_summary, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
