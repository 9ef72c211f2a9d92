//! Python bindings for `geodesic-hull`.
//!
//! Graphs cross the boundary as `OrientedGraph` objects; vertex sets come
//! back as sorted lists of ints.

use std::collections::HashMap;

use ::geodesic_hull as gh;
use gh::transforms::random;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(geodesic_hull, GeodesicHullError, PyValueError);

fn err(e: gh::Error) -> PyErr {
    GeodesicHullError::new_err(e.to_string())
}

fn to_set(n: usize, vertices: Vec<usize>) -> PyResult<gh::VertexSet> {
    if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
        return Err(err(gh::Error::VertexOutOfRange { vertex: v, n }));
    }
    Ok(gh::VertexSet::from_vertices(n, vertices))
}

/// An oriented graph on vertices `0..n`.
#[pyclass(name = "OrientedGraph", module = "geodesic_hull", frozen)]
struct PyGraph {
    inner: gh::OrientedGraph,
}

impl PyGraph {
    fn wrap(inner: gh::OrientedGraph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        gh::OrientedGraph::new(n, arcs).map(Self::wrap).map_err(err)
    }

    /// Parse the `n m` / `u v` edge-list format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        gh::OrientedGraph::parse(text).map(Self::wrap).map_err(err)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().to_vec()
    }

    fn interval(&self, s: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(gh::interval(&self.inner, &to_set(self.inner.n(), s)?).to_vec())
    }

    fn hull(&self, s: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(gh::hull(&self.inner, &to_set(self.inner.n(), s)?).to_vec())
    }

    fn is_hull_set(&self, s: Vec<usize>) -> PyResult<bool> {
        Ok(gh::is_hull_set(&self.inner, &to_set(self.inner.n(), s)?))
    }

    fn is_geodetic_set(&self, s: Vec<usize>) -> PyResult<bool> {
        Ok(gh::is_geodetic_set(&self.inner, &to_set(self.inner.n(), s)?))
    }

    fn is_coconvex(&self, s: Vec<usize>) -> PyResult<bool> {
        Ok(gh::is_coconvex(&self.inner, &to_set(self.inner.n(), s)?))
    }

    fn extreme_vertices(&self) -> Vec<usize> {
        gh::extreme_set(&self.inner).to_vec()
    }

    /// Class flags of the graph as a dict of bools.
    fn flags(&self) -> HashMap<&'static str, bool> {
        let f = gh::structural_flags(&self.inner);
        HashMap::from([
            ("tournament", f.is_tournament),
            ("dag", f.is_dag),
            ("bipartite", f.is_bipartite_underlying),
            ("cactus", f.is_cactus),
            ("connected", f.is_connected),
        ])
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("OrientedGraph(n={}, arcs={})", self.inner.n(), self.inner.arc_count())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

fn objective(name: &str) -> PyResult<gh::Objective> {
    match name {
        "hull" => Ok(gh::Objective::Hull),
        "geodetic" => Ok(gh::Objective::Geodetic),
        _ => Err(PyValueError::new_err(format!("objective must be \"hull\" or \"geodetic\", not {name:?}"))),
    }
}

/// Exact minimum set; returns `(optimum, witness)`.
#[pyfunction]
#[pyo3(signature = (graph, objective = "hull", max_free = 24))]
fn solve(graph: &PyGraph, objective: &str, max_free: usize) -> PyResult<(usize, Vec<usize>)> {
    let r = gh::solve(&graph.inner, self::objective(objective)?, &gh::SolverConfig { max_free }).map_err(err)?;
    Ok((r.optimum, r.witness.to_vec()))
}

/// Constructed hull set and its guaranteed bound: `(set, bound)`.
#[pyfunction]
#[pyo3(signature = (graph, method = "greedy"))]
fn bound_hull_set(graph: &PyGraph, method: &str) -> PyResult<(Vec<usize>, usize)> {
    let cert = match method {
        "greedy" => gh::greedy_hull_set(&graph.inner),
        "tournament" => gh::tournament_hull_set(&graph.inner).map_err(err)?,
        _ => return Err(PyValueError::new_err(format!("unknown method {method:?}"))),
    };
    Ok((cert.hull_set.to_vec(), cert.bound_value))
}

#[pyfunction]
fn split_hull_set(graph: &PyGraph, stable: Vec<usize>, clique: Vec<usize>) -> PyResult<(Vec<usize>, usize)> {
    let n = graph.inner.n();
    let cert = gh::split_hull_set(&graph.inner, &to_set(n, stable)?, &to_set(n, clique)?).map_err(err)?;
    Ok((cert.hull_set.to_vec(), cert.bound_value))
}

/// Minimum set of a connected oriented cactus: `(set, cycle_classes)`.
#[pyfunction]
#[pyo3(signature = (graph, objective = "hull"))]
fn cactus_solve(graph: &PyGraph, objective: &str) -> PyResult<(Vec<usize>, Vec<&'static str>)> {
    let sol = match self::objective(objective)? {
        gh::Objective::Hull => gh::min_hull_set_cactus(&graph.inner),
        gh::Objective::Geodetic => gh::min_geodetic_set_cactus(&graph.inner),
    }
    .map_err(err)?;
    Ok((sol.set.to_vec(), sol.cycles.iter().map(|c| c.class.as_str()).collect()))
}

#[pyfunction]
fn tight_example(k: usize) -> PyResult<PyGraph> {
    gh::tight_example(k).map(PyGraph::wrap).map_err(err)
}

#[pyfunction]
fn directed_cycle(k: usize) -> PyResult<PyGraph> {
    gh::directed_cycle(k).map(PyGraph::wrap).map_err(err)
}

#[pyfunction]
fn transitive_tournament(k: usize) -> PyResult<PyGraph> {
    gh::transitive_tournament(k).map(PyGraph::wrap).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, seed = 0))]
fn random_tournament(n: usize, seed: u64) -> PyGraph {
    PyGraph::wrap(random::random_tournament(n, seed))
}

#[pyfunction]
#[pyo3(signature = (n, seed = 0))]
fn random_cactus(n: usize, seed: u64) -> PyResult<PyGraph> {
    random::random_cactus(n, seed).map(PyGraph::wrap).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, p, seed = 0))]
fn random_oriented_graph(n: usize, p: f64, seed: u64) -> PyResult<PyGraph> {
    random::random_oriented_graph(n, p, seed).map(PyGraph::wrap).map_err(err)
}

#[pyfunction]
fn lex_product(a: &PyGraph, b: &PyGraph) -> PyGraph {
    PyGraph::wrap(gh::lex_product(&a.inner, &b.inner))
}

/// `G_C4` of an undirected graph given by its edges.
#[pyfunction]
fn orient_c4(n: usize, edges: Vec<(usize, usize)>) -> PyResult<PyGraph> {
    let g = gh::UndirectedGraph::new(n, edges).map_err(err)?;
    Ok(PyGraph::wrap(gh::orient_c4(&g).0))
}

/// Undirected hull number by exhaustive search.
#[pyfunction]
fn undirected_hull_number(n: usize, edges: Vec<(usize, usize)>) -> PyResult<usize> {
    let g = gh::UndirectedGraph::new(n, edges).map_err(err)?;
    Ok(gh::undirected_min_hull_set(&g).map_err(err)?.optimum)
}

fn instance(universe: usize, family: Vec<Vec<usize>>, budget: usize) -> PyResult<gh::SetCoverInstance> {
    gh::SetCoverInstance::new(universe, family, budget).map_err(err)
}

/// Gadget graph and geodetic threshold for a set-cover instance.
#[pyfunction]
fn reduce(universe: usize, family: Vec<Vec<usize>>, budget: usize, target: &str) -> PyResult<(PyGraph, usize)> {
    let kind = match target {
        "bipartite" => gh::GadgetKind::BipartiteDag,
        "split" => gh::GadgetKind::Split,
        "cobipartite" => gh::GadgetKind::Cobipartite,
        _ => return Err(PyValueError::new_err(format!("unknown target {target:?}"))),
    };
    let g = gh::build_gadget(&instance(universe, family, budget)?, kind);
    Ok((PyGraph::wrap(g.graph), g.threshold))
}

/// `(optcover, ogn_bipartite, ogn_split, ogn_cobipartite)`.
#[pyfunction]
fn verify_equivalence(universe: usize, family: Vec<Vec<usize>>) -> PyResult<(usize, usize, usize, usize)> {
    let r = gh::verify_equivalence(&instance(universe, family, 1)?).map_err(err)?;
    Ok((r.optcover, r.ogn_bipartite, r.ogn_split, r.ogn_cobipartite))
}

#[pymodule]
#[pyo3(name = "geodesic_hull")]
fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GeodesicHullError", m.py().get_type::<GeodesicHullError>())?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(bound_hull_set, m)?)?;
    m.add_function(wrap_pyfunction!(split_hull_set, m)?)?;
    m.add_function(wrap_pyfunction!(cactus_solve, m)?)?;
    m.add_function(wrap_pyfunction!(tight_example, m)?)?;
    m.add_function(wrap_pyfunction!(directed_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(transitive_tournament, m)?)?;
    m.add_function(wrap_pyfunction!(random_tournament, m)?)?;
    m.add_function(wrap_pyfunction!(random_cactus, m)?)?;
    m.add_function(wrap_pyfunction!(random_oriented_graph, m)?)?;
    m.add_function(wrap_pyfunction!(lex_product, m)?)?;
    m.add_function(wrap_pyfunction!(orient_c4, m)?)?;
    m.add_function(wrap_pyfunction!(undirected_hull_number, m)?)?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(verify_equivalence, m)?)?;
    Ok(())
}
