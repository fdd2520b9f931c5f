//! Python bindings: feasibility queries, construction, verification, and
//! exhaustive search, mirroring the `ccs` command-line tool.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ccs_core::circulant::{Order, RotCycle};
use ccs_core::constructions::build;
use ccs_core::document::SystemDocument;
use ccs_core::feasibility::{self, ParityConstraint, Params};
use ccs_core::verifier;
use ccs_core::Error;

fn pyerr(err: Error) -> PyErr {
    match err {
        Error::BudgetExceeded { .. } | Error::SearchBoundExceeded { .. } => {
            PyRuntimeError::new_err(err.to_string())
        }
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn params(m: u32, t: u32) -> PyResult<Params> {
    Params::new(m, t).map_err(pyerr)
}

/// Outcome of verifying a claimed system.
#[pyclass(frozen)]
struct Report {
    #[pyo3(get)]
    ok: bool,
    #[pyo3(get)]
    summary: String,
    #[pyo3(get)]
    expanded_cycles: usize,
    #[pyo3(get)]
    covered_edges: u64,
    #[pyo3(get)]
    expected_edges: u64,
    #[pyo3(get)]
    missing_edges: usize,
    #[pyo3(get)]
    duplicate_edges: usize,
    #[pyo3(get)]
    missing_lengths: Vec<u32>,
}

#[pymethods]
impl Report {
    fn __repr__(&self) -> String {
        format!("Report(ok={}, {})", self.ok, self.summary)
    }
}

impl Report {
    fn from_core(report: &verifier::VerificationReport) -> Report {
        Report {
            ok: report.ok(),
            summary: report.summary(),
            expanded_cycles: report.expanded_cycles,
            covered_edges: report.covered_edges as u64,
            expected_edges: report.expected_edges,
            missing_edges: report.missing_edges.len(),
            duplicate_edges: report.duplicate_edges.len(),
            missing_lengths: report.missing_lengths().into_iter().collect(),
        }
    }
}

/// A generating set together with its parameters, as emitted by `generate`.
#[pyclass(frozen)]
struct System {
    doc: SystemDocument,
}

#[pymethods]
impl System {
    #[getter]
    fn m(&self) -> u32 {
        self.doc.m
    }

    #[getter]
    fn n(&self) -> u32 {
        self.doc.n
    }

    #[getter]
    fn t(&self) -> u32 {
        self.doc.t
    }

    /// Base cycles as vertex lists.
    #[getter]
    fn cycles(&self) -> Vec<Vec<u32>> {
        self.doc
            .generating_set
            .iter()
            .map(|rec| rec.vertices.clone())
            .collect()
    }

    #[getter]
    fn orbit_lengths(&self) -> Vec<u32> {
        self.doc
            .generating_set
            .iter()
            .map(|rec| rec.orbit_length)
            .collect()
    }

    /// Distinct edge lengths of each base cycle.
    #[getter]
    fn lengths(&self) -> Vec<Vec<u32>> {
        self.doc
            .generating_set
            .iter()
            .map(|rec| rec.lengths.clone())
            .collect()
    }

    #[getter]
    fn provenance(&self) -> Vec<String> {
        self.doc
            .generating_set
            .iter()
            .map(|rec| rec.provenance.clone())
            .collect()
    }

    /// Every cycle of the system, via orbit expansion of the base cycles.
    fn expand(&self) -> PyResult<Vec<Vec<u32>>> {
        if let Some(expanded) = &self.doc.expanded {
            return Ok(expanded.clone());
        }
        let n = Order::new(self.doc.n).map_err(pyerr)?;
        let cycles = self.doc.cycles().map_err(pyerr)?;
        let mut all: Vec<Vec<u32>> = cycles
            .iter()
            .flat_map(|c| ccs_core::orbits::expand_orbit(c, n))
            .map(|c| c.canonical())
            .collect();
        all.sort();
        Ok(all)
    }

    /// Re-verifies the document from scratch.
    fn verify(&self) -> PyResult<Report> {
        self.doc.check_consistency().map_err(pyerr)?;
        let n = Order::new(self.doc.n).map_err(pyerr)?;
        let cycles = self.doc.cycles().map_err(pyerr)?;
        let report = verifier::verify(self.doc.m as usize, n, &cycles).map_err(pyerr)?;
        Ok(Report::from_core(&report))
    }

    fn to_json(&self) -> String {
        self.doc.to_json()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<System> {
        let doc = SystemDocument::from_json(text).map_err(pyerr)?;
        doc.check_consistency().map_err(pyerr)?;
        Ok(System { doc })
    }

    fn __len__(&self) -> usize {
        self.doc.generating_set.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "System(m={}, t={}, n={}, base_cycles={})",
            self.doc.m,
            self.doc.t,
            self.doc.n,
            self.doc.generating_set.len()
        )
    }
}

/// True if a cyclic m-cycle system of K_{mt} - I exists.
#[pyfunction]
fn feasible(m: u32, t: u32) -> PyResult<bool> {
    Ok(feasibility::feasible(params(m, t)?).feasible)
}

/// The existence decision with its clause, reason, and parity constraint.
#[pyfunction]
fn explain(py: Python<'_>, m: u32, t: u32) -> PyResult<Py<PyDict>> {
    let decision = feasibility::feasible(params(m, t)?);
    let out = PyDict::new(py);
    out.set_item("feasible", decision.feasible)?;
    out.set_item("clause", decision.clause)?;
    out.set_item("reason", decision.reason)?;
    let parity = match decision.parity {
        ParityConstraint::Unconstrained => "unconstrained",
        ParityConstraint::RequiresEvenT => "requires even t",
        ParityConstraint::RequiresOddT => "requires odd t",
        ParityConstraint::Impossible => "impossible",
    };
    out.set_item("parity", parity)?;
    Ok(out.into())
}

/// Builds a certified generating set; raises ValueError when none exists.
#[pyfunction]
#[pyo3(signature = (m, t, expand = false))]
fn generate(m: u32, t: u32, expand: bool) -> PyResult<System> {
    let set = build(params(m, t)?).map_err(pyerr)?;
    Ok(System {
        doc: SystemDocument::from_set(&set, expand),
    })
}

/// Verifies claimed base cycles directly.
#[pyfunction]
fn verify(m: u32, n: u32, cycles: Vec<Vec<u32>>) -> PyResult<Report> {
    let order = Order::new(n).map_err(pyerr)?;
    let cycles: Vec<RotCycle> = cycles
        .into_iter()
        .map(|vs| RotCycle::new(vs, order))
        .collect::<ccs_core::Result<_>>()
        .map_err(pyerr)?;
    let report = verifier::verify(m as usize, order, &cycles).map_err(pyerr)?;
    Ok(Report::from_core(&report))
}

/// Exhaustive search for any generating set; None means none exists.
/// Refuses n above the bound (default 24) with RuntimeError.
#[pyfunction]
#[pyo3(signature = (m, n, bound = None))]
fn search(m: u32, n: u32, bound: Option<u32>) -> PyResult<Option<Vec<Vec<u32>>>> {
    let found = verifier::exhaustive_search(m, n, bound).map_err(pyerr)?;
    Ok(found.map(|cycles| cycles.iter().map(|c| c.vertices().to_vec()).collect()))
}

#[pymodule]
fn ccs(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<System>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(feasible, m)?)?;
    m.add_function(wrap_pyfunction!(explain, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    Ok(())
}
