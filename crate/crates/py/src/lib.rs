//! Python bindings: a thin text-in/text-out surface over the core crate.
//!
//! Inputs use the same two file formats as the command-line tool — `rank n`
//! plus `i j m` lines for Coxeter matrices, one whitespace-separated facet
//! per line for complexes — and errors surface as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::json;

use artin_actdim::bounds::{bound_report, ReportOptions};
use artin_actdim::complex::SimplicialComplex;
use artin_actdim::coxeter::{component_types, group_order as order_of, CoxeterMatrix};
use artin_actdim::embed::{embed as embed_impl, DEFAULT_EMBED_BUDGET};
use artin_actdim::homology::all_homology;
use artin_actdim::nerve::{build_nerve, type_label};

fn parse_coxmat(text: &str) -> PyResult<CoxeterMatrix> {
    CoxeterMatrix::parse(text).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn parse_complex(text: &str) -> PyResult<SimplicialComplex> {
    SimplicialComplex::parse(text).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Product-type label of the Coxeter group, e.g. `"A(2)×B(2)"`.
#[pyfunction]
fn classify(coxmat: &str) -> PyResult<String> {
    let m = parse_coxmat(coxmat)?;
    let types: Vec<_> = component_types(&m).into_iter().map(|(_, t)| t).collect();
    Ok(type_label(&types))
}

/// Order of the Coxeter group as a decimal string, or None if infinite.
#[pyfunction]
fn group_order(coxmat: &str) -> PyResult<Option<String>> {
    let m = parse_coxmat(coxmat)?;
    Ok(order_of(&m).map(|o| o.to_string()))
}

/// Facets of the nerve, one dot-joined simplex label per entry.
#[pyfunction]
fn nerve_facets(coxmat: &str) -> PyResult<Vec<String>> {
    let m = parse_coxmat(coxmat)?;
    let nerve = build_nerve(&m);
    Ok(nerve
        .complex
        .facets()
        .iter()
        .map(|f| nerve.complex.simplex_label(f))
        .collect())
}

/// Integral homology groups by degree, e.g. `["Z", "Z/2", "0"]`.
#[pyfunction]
fn homology(complex: &str) -> PyResult<Vec<String>> {
    let k = parse_complex(complex)?;
    let groups = all_homology(&k).map_err(value_err)?;
    Ok(groups.iter().map(|g| g.to_string()).collect())
}

/// The action-dimension bound report as a JSON string.
#[pyfunction]
#[pyo3(signature = (coxmat, assert_kpi1 = false, product_rule = false))]
fn bound_report_json(coxmat: &str, assert_kpi1: bool, product_rule: bool) -> PyResult<String> {
    let m = parse_coxmat(coxmat)?;
    let report = bound_report(&m, &ReportOptions { assert_kpi1, product_rule });
    serde_json::to_string(&report.to_json()).map_err(value_err)
}

/// Embed the complex into a contractible complex of the same dimension;
/// returns a JSON string with the host facets and the certificates.
#[pyfunction]
#[pyo3(signature = (complex, budget = DEFAULT_EMBED_BUDGET))]
fn embed(complex: &str, budget: usize) -> PyResult<String> {
    let k = parse_complex(complex)?;
    let r = embed_impl(&k, budget).map_err(value_err)?;
    let v = json!({
        "certified": r.certified(),
        "homology_vanishes": r.homology_vanishes,
        "pi1": {
            "status": r.pi1_triviality.status.to_string(),
            "witness": r.pi1_triviality.witness,
        },
        "facets": r
            .complex
            .facets()
            .iter()
            .map(|f| r.complex.simplex_names(f))
            .collect::<Vec<_>>(),
        "trace": r.trace,
    });
    serde_json::to_string(&v).map_err(value_err)
}

/// Octahedralization (vertex doubling) of a complex, in facet-lines format.
#[pyfunction]
fn octahedralize(complex: &str) -> PyResult<String> {
    let k = parse_complex(complex)?;
    Ok(k.octahedralize().map_err(value_err)?.to_text())
}

#[pymodule]
fn artin_actdim_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(group_order, m)?)?;
    m.add_function(wrap_pyfunction!(nerve_facets, m)?)?;
    m.add_function(wrap_pyfunction!(homology, m)?)?;
    m.add_function(wrap_pyfunction!(bound_report_json, m)?)?;
    m.add_function(wrap_pyfunction!(embed, m)?)?;
    m.add_function(wrap_pyfunction!(octahedralize, m)?)?;
    Ok(())
}
