//! Python bindings for the twual library.
//!
//! Exposes a `RibbonGraph` class plus module-level search helpers, so the
//! census and classification machinery can be driven from Python:
//!
//!     import pytwual
//!     g = pytwual.RibbonGraph("[1, -3, 2, 1, 2, -3]")
//!     g.classify()           # {'self_dual': False, ..., 'self_trial': True}
//!     pytwual.census(3)      # [{'n': 3, 'graph': ..., 'sigma': ...}]

// The `?` on PyDict::set_item expands to a no-op error conversion.
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use twual::action;
use twual::search;
use twual::{DiagramForm, EdgeOp, GroupElement, LabeledRibbonGraph, Permutation, RibbonElement};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_gamma(ops: Vec<String>) -> PyResult<RibbonElement> {
    let parsed = ops
        .iter()
        .map(|s| EdgeOp::parse(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(value_err)?;
    Ok(RibbonElement::new(parsed))
}

/// An edge-labeled ribbon graph in end-label text form.
#[pyclass]
#[derive(Clone)]
struct RibbonGraph {
    inner: LabeledRibbonGraph,
}

#[pymethods]
impl RibbonGraph {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(RibbonGraph { inner: LabeledRibbonGraph::parse(text).map_err(value_err)? })
    }

    /// End-label text, e.g. "[1, -3, 2, 1, 2, -3]".
    fn text(&self) -> String {
        self.inner.to_text()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn is_orientable_bouquet(&self) -> bool {
        self.inner.is_oeb()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Vertex, edge, and face counts, Euler characteristic, orientability,
    /// and genus (crosscap number when non-orientable).
    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let inv = self.inner.invariants();
        let d = PyDict::new_bound(py);
        d.set_item("n", self.inner.edge_count())?;
        d.set_item("V", inv.vertices)?;
        d.set_item("E", inv.edges)?;
        d.set_item("F", inv.faces)?;
        d.set_item("euler", inv.euler)?;
        d.set_item("orientable", inv.orientable)?;
        d.set_item("genus", inv.genus)?;
        Ok(d)
    }

    /// The four natural self-twuality flags.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let flags = search::classify(&self.inner);
        let d = PyDict::new_bound(py);
        d.set_item("self_dual", flags.self_dual)?;
        d.set_item("self_petrial", flags.self_petrial)?;
        d.set_item("self_wilsonial", flags.self_wilsonial)?;
        d.set_item("self_trial", flags.self_trial)?;
        Ok(d)
    }

    /// Apply per-edge operations (names "1", "t", "d", "td", "dt", "tdt")
    /// and an optional permutation in cycle notation.
    #[pyo3(signature = (gamma, pi=None))]
    fn apply(&self, gamma: Vec<String>, pi: Option<&str>) -> PyResult<RibbonGraph> {
        let n = self.inner.edge_count();
        let gamma = parse_gamma(gamma)?;
        let pi = match pi {
            Some(text) => Permutation::parse_cycles(text, n).map_err(value_err)?,
            None => Permutation::identity(n),
        };
        let el = GroupElement::new(gamma, pi).map_err(value_err)?;
        let image = action::apply(&el, &self.inner).map_err(value_err)?;
        Ok(RibbonGraph { inner: image })
    }

    /// Apply one operation to every edge.
    fn apply_uniform(&self, op: &str) -> PyResult<RibbonGraph> {
        let op = EdgeOp::parse(op).map_err(value_err)?;
        Ok(RibbonGraph { inner: action::apply_uniform(op, &self.inner) })
    }

    fn is_isomorphic(&self, other: &RibbonGraph) -> bool {
        self.inner.iso(&other.inner).is_some()
    }

    /// 1-based edge bijection onto `other`, or None.
    fn iso_edge_map(&self, other: &RibbonGraph) -> Option<Vec<usize>> {
        self.inner
            .iso(&other.inner)
            .map(|w| w.edge_bijection.one_line().iter().map(|&i| i + 1).collect())
    }

    /// True when `apply(gamma, pi)` returns this graph with labels intact.
    #[pyo3(signature = (gamma, pi=None))]
    fn is_self_fixed(&self, gamma: Vec<String>, pi: Option<&str>) -> PyResult<bool> {
        let n = self.inner.edge_count();
        let gamma = parse_gamma(gamma)?;
        let pi = match pi {
            Some(text) => Permutation::parse_cycles(text, n).map_err(value_err)?,
            None => Permutation::identity(n),
        };
        let el = GroupElement::new(gamma, pi).map_err(value_err)?;
        Ok(action::is_self_gamma(&self.inner, &el))
    }

    /// All (gamma, pi) pairs fixing the labeled graph, as
    /// (list of op names, cycle string) tuples.
    fn stabilizers(&self) -> Vec<(Vec<String>, String)> {
        search::stabilizers(&self.inner)
            .elements
            .iter()
            .map(|el| {
                (
                    el.gamma.ops().iter().map(|op| op.name().to_string()).collect(),
                    el.pi.to_cycle_string(),
                )
            })
            .collect()
    }

    /// An orientable bouquet in the orbit: (bouquet text, op names).
    fn reduce(&self) -> PyResult<(String, Vec<String>)> {
        let (diagram, alpha) = search::reduce_to_oeb(&self.inner).map_err(value_err)?;
        Ok((
            diagram.convert(DiagramForm::EndLabel).to_string(),
            alpha.ops().iter().map(|op| op.name().to_string()).collect(),
        ))
    }

    fn __repr__(&self) -> String {
        format!("RibbonGraph(\"{}\")", self.inner.to_text())
    }

    fn __eq__(&self, other: &RibbonGraph) -> bool {
        self.inner.labeled_eq(&other.inner)
    }
}

/// Number of linear chord diagrams on k chords ((2k-1)!!, or 2^k (2k-1)!!
/// with twist signs).
#[pyfunction]
#[pyo3(signature = (k, signed=false))]
fn linear_diagram_count(k: usize, signed: bool) -> u64 {
    twual::enumerate::linear_diagrams(k, signed).count() as u64
}

/// Canonical representatives of bouquet classes on k chords, in end-label
/// text form.
#[pyfunction]
fn bouquet_classes(k: usize) -> Vec<String> {
    twual::enumerate::oebs_up_to_iso(k)
        .iter()
        .map(|d| d.convert(DiagramForm::EndLabel).to_string())
        .collect()
}

/// The self-trial census on n edges: one record per class (each class
/// standing for a dual pair), as dicts.
#[pyfunction]
#[pyo3(signature = (n, jobs=0))]
fn census(py: Python<'_>, n: usize, jobs: usize) -> PyResult<Vec<Py<PyDict>>> {
    if n == 0 {
        return Err(PyValueError::new_err("census needs n >= 1"));
    }
    let opts = search::CensusOptions { jobs, ..Default::default() };
    let entries = search::census(n, &opts);
    entries
        .iter()
        .map(|e| {
            let r = e.to_record();
            let d = PyDict::new_bound(py);
            d.set_item("n", r.n)?;
            d.set_item("graph", r.graph)?;
            d.set_item("seed_oeb", r.seed_oeb)?;
            d.set_item("alpha", r.alpha)?;
            d.set_item("sigma", r.sigma)?;
            Ok(d.unbind())
        })
        .collect()
}

/// The 3k-edge chain bouquet, its operation vector, and its self-trial
/// image: (h, alpha, g).
#[pyfunction]
fn family(k: usize) -> PyResult<(String, Vec<String>, String)> {
    if k == 0 {
        return Err(PyValueError::new_err("family needs k >= 1"));
    }
    let (h, alpha, g) = search::family(k);
    Ok((
        h.to_text(),
        alpha.ops().iter().map(|op| op.name().to_string()).collect(),
        g.to_text(),
    ))
}

#[pymodule]
fn pytwual(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<RibbonGraph>()?;
    m.add_function(wrap_pyfunction!(linear_diagram_count, m)?)?;
    m.add_function(wrap_pyfunction!(bouquet_classes, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    Ok(())
}
