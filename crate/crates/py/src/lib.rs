//! Python bindings for `dickson_core`.

use dickson_core::polyfam::{self, Family};
use dickson_core::report::{Parity, Report, RunConfig};
use dickson_core::subsets::{self, materialize, SubsetId};
use dickson_core::verify::{KMode, KRange};
use dickson_core::{Arith, Error, Fe, FieldCtx};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(q: u64) -> PyResult<FieldCtx> {
    FieldCtx::from_q(q).map_err(py_err)
}

fn element(f: &FieldCtx, x: i64) -> PyResult<Fe> {
    if x < 0 {
        Ok(f.from_int(x))
    } else {
        f.elem(x as u64).map_err(py_err)
    }
}

fn elements(q: u64, spec: &str) -> PyResult<(FieldCtx, Vec<Fe>)> {
    let f = field(q)?;
    let id = SubsetId::parse(&f, spec).map_err(py_err)?;
    let set = materialize(&f, id).map_err(py_err)?;
    Ok((f, set.elems))
}

/// Value of a polynomial family member at `x` in GF(q).
#[pyfunction]
#[pyo3(signature = (q, k, x, family = "D"))]
fn eval(q: u64, k: u64, x: i64, family: &str) -> PyResult<u64> {
    let f = field(q)?;
    let fam: Family = family.parse().map_err(py_err)?;
    let a = element(&f, x)?;
    Ok(polyfam::eval_family(&f, fam, k, a).enc())
}

/// Integer coefficients, highest degree first, as decimal strings.
#[pyfunction]
#[pyo3(signature = (k, family = "D"))]
fn poly(k: usize, family: &str) -> PyResult<Vec<String>> {
    let fam: Family = family.parse().map_err(py_err)?;
    Ok(polyfam::family(fam, k).descending().iter().map(|c| c.to_string()).collect())
}

/// Element encodings of a named subset such as `A2++` or `T0`.
#[pyfunction]
fn subset(q: u64, spec: &str) -> PyResult<Vec<u64>> {
    let (_, elems) = elements(q, spec)?;
    Ok(elems.iter().map(|a| a.enc()).collect())
}

/// Cycle notation for `D_k` on the subset, or its image when not a permutation.
#[pyfunction]
fn cycles(q: u64, k: u64, spec: &str) -> PyResult<String> {
    let (f, elems) = elements(q, spec)?;
    Ok(subsets::image_and_cycles_with(&elems, |a| polyfam::eval_via_functional(&f, k, a)).to_string())
}

/// `prod (shift - a)` over the subset, or `prod a` without a shift.
#[pyfunction]
#[pyo3(signature = (q, spec, shift = None))]
fn product(q: u64, spec: &str, shift: Option<i64>) -> PyResult<u64> {
    let (f, elems) = elements(q, spec)?;
    let value = match shift {
        Some(c) => {
            let c = f.from_int(c);
            let shifted: Vec<Fe> = elems.iter().map(|&a| f.sub(c, a)).collect();
            subsets::set_product(&f, &shifted)
        }
        None => subsets::set_product(&f, &elems),
    };
    Ok(value.enc())
}

/// Elementary symmetric function `sigma_j` of the subset.
#[pyfunction]
fn sigma(q: u64, spec: &str, j: usize) -> PyResult<u64> {
    let (f, elems) = elements(q, spec)?;
    Ok(subsets::elem_sym(&f, &elems, j).map_err(py_err)?.enc())
}

#[pyfunction]
fn check_names() -> Vec<&'static str> {
    dickson_core::verify::check_names()
}

/// Runs the checks and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (q_min, q_max, parity = "both", checks = None, seed = 0, exhaustive = false))]
fn verify(
    py: Python<'_>,
    q_min: u64,
    q_max: u64,
    parity: &str,
    checks: Option<Vec<String>>,
    seed: u64,
    exhaustive: bool,
) -> PyResult<String> {
    let config = RunConfig {
        q_min,
        q_max,
        parity: parity.parse::<Parity>().map_err(py_err)?,
        k_range: KRange {
            mode: if exhaustive { KMode::Exhaustive } else { KMode::Sampled },
            seed,
            ..KRange::default()
        },
        checks: checks.unwrap_or_default(),
    };
    let mut report = py.detach(|| Report::run(config)).map_err(py_err)?;
    report.strip_timings();
    report.to_json().map_err(py_err)
}

/// Adds every binding to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(eval, m)?)?;
    m.add_function(wrap_pyfunction!(poly, m)?)?;
    m.add_function(wrap_pyfunction!(subset, m)?)?;
    m.add_function(wrap_pyfunction!(cycles, m)?)?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(check_names, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

#[pymodule]
fn dickson(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
