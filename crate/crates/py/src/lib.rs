//! Python bindings: graphs, boundary parameters, central measures and the
//! finite-level diagnostics, with exact values crossing as int/Fraction.

use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use bratteli_core::adic::{default_order, orbit_paths};
use bratteli_core::characters::{self, CycleType, ThomaParameter};
use bratteli_core::diagnostics::{
    bernoulli_measure, boundary_separation, poulsen_witness, witness_labels, zeros_measure,
};
use bratteli_core::generators::{
    multidim::multidim_young_graph, pascal::pascal_graph, solvable::solvable_group_graph,
    young::young_graph, GraphKind,
};
use bratteli_core::measures::{thoma_measure, MarkovMeasure};
use bratteli_core::{Budget, Error, GradedGraph, Partition};

fn pyerr(e: Error) -> PyErr {
    match e {
        Error::Resource(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse_kind(kind: &str) -> PyResult<GraphKind> {
    match kind {
        "young" => Ok(GraphKind::Young),
        "pascal" => Ok(GraphKind::Pascal),
        "multidim" => Ok(GraphKind::Multidim),
        "solvable" => Ok(GraphKind::Solvable),
        other => Err(PyValueError::new_err(format!("unknown graph kind {other:?}"))),
    }
}

fn build_kind(kind: GraphKind, levels: u64, d: usize) -> PyResult<GradedGraph> {
    match kind {
        GraphKind::Young => young_graph(levels),
        GraphKind::Pascal => pascal_graph(levels),
        GraphKind::Multidim => multidim_young_graph(d, levels, &Budget::default()),
        GraphKind::Solvable => solvable_group_graph(levels),
    }
    .map_err(pyerr)
}

fn shape_of(parts: Vec<u64>) -> PyResult<Partition> {
    Partition::new(parts).map_err(pyerr)
}

#[pyclass(frozen)]
struct Graph {
    inner: Arc<GradedGraph>,
    kind: GraphKind,
}

#[pymethods]
impl Graph {
    #[staticmethod]
    #[pyo3(signature = (kind, levels, d = 2))]
    fn build(kind: &str, levels: u64, d: usize) -> PyResult<Self> {
        let kind = parse_kind(kind)?;
        Ok(Graph {
            inner: Arc::new(build_kind(kind, levels, d)?),
            kind,
        })
    }

    fn num_levels(&self) -> usize {
        self.inner.num_levels()
    }

    fn level_size(&self, n: usize) -> PyResult<usize> {
        self.inner.level_size(n).map_err(pyerr)
    }

    fn level_labels(&self, n: usize) -> PyResult<Vec<String>> {
        Ok(self.inner.level_labels(n).map_err(pyerr)?.to_vec())
    }

    fn dimension(&self, level: usize, vertex: &str) -> PyResult<BigUint> {
        let v = self.inner.vertex(level, vertex).map_err(pyerr)?;
        self.inner.dimension(v).map_err(pyerr)
    }

    fn skew_dimension(
        &self,
        from_level: usize,
        from_vertex: &str,
        level: usize,
        vertex: &str,
    ) -> PyResult<BigUint> {
        let u = self.inner.vertex(from_level, from_vertex).map_err(pyerr)?;
        let v = self.inner.vertex(level, vertex).map_err(pyerr)?;
        self.inner.skew_dimension(u, v).map_err(pyerr)
    }

    fn total_paths(&self, n: usize) -> PyResult<BigUint> {
        self.inner.total_paths(n).map_err(pyerr)
    }

    fn multiplicity(&self, level: usize, source: &str, target: &str) -> PyResult<u64> {
        let u = self.inner.vertex(level, source).map_err(pyerr)?;
        let v = self.inner.vertex(level + 1, target).map_err(pyerr)?;
        self.inner.multiplicity(u, v).map_err(pyerr)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    /// Successor orbit of the minimal path into the vertex, as label lists.
    fn adic_orbit(&self, level: usize, vertex: &str) -> PyResult<Vec<Vec<String>>> {
        let order = default_order(&self.inner, self.kind).map_err(pyerr)?;
        let v = self.inner.vertex(level, vertex).map_err(pyerr)?;
        let paths = orbit_paths(&self.inner, &order, v, &Budget::default()).map_err(pyerr)?;
        paths
            .iter()
            .map(|p| self.inner.path_labels(p).map_err(pyerr))
            .collect()
    }
}

#[pyclass(frozen, name = "ThomaParameter")]
struct ThomaParam {
    inner: ThomaParameter,
}

#[pymethods]
impl ThomaParam {
    #[new]
    #[pyo3(signature = (alpha = Vec::new(), beta = Vec::new()))]
    fn new(alpha: Vec<BigRational>, beta: Vec<BigRational>) -> PyResult<Self> {
        Ok(ThomaParam {
            inner: ThomaParameter::new(alpha, beta).map_err(pyerr)?,
        })
    }

    #[staticmethod]
    fn parse(alpha: &str, beta: &str) -> PyResult<Self> {
        Ok(ThomaParam {
            inner: ThomaParameter::parse(alpha, beta).map_err(pyerr)?,
        })
    }

    #[getter]
    fn alpha(&self) -> Vec<BigRational> {
        self.inner.alpha().to_vec()
    }

    #[getter]
    fn beta(&self) -> Vec<BigRational> {
        self.inner.beta().to_vec()
    }

    fn gamma(&self) -> BigRational {
        self.inner.gamma()
    }

    fn character(&self, cycles: Vec<u64>) -> PyResult<BigRational> {
        let rho = CycleType::from_parts(cycles).map_err(pyerr)?;
        characters::thoma_character(&self.inner, &rho).map_err(pyerr)
    }

    fn shape_sequence(&self, n: u64) -> PyResult<Vec<u64>> {
        Ok(characters::shape_sequence(&self.inner, n)
            .map_err(pyerr)?
            .parts()
            .to_vec())
    }
}

#[pyclass(frozen)]
struct Measure {
    inner: MarkovMeasure,
    kind: GraphKind,
}

#[pymethods]
impl Measure {
    /// Central measure of a boundary parameter on the Young graph.
    #[staticmethod]
    fn thoma(theta: PyRef<'_, ThomaParam>, levels: u64) -> PyResult<Self> {
        Ok(Measure {
            inner: thoma_measure(&theta.inner, levels).map_err(pyerr)?,
            kind: GraphKind::Young,
        })
    }

    /// Uniform measure on rank-n patterns of the orbit graph.
    #[staticmethod]
    fn bernoulli(levels: u64) -> PyResult<Self> {
        Ok(Measure {
            inner: bernoulli_measure(levels).map_err(pyerr)?,
            kind: GraphKind::Solvable,
        })
    }

    /// Point mass on the all-zeros path of the orbit graph.
    #[staticmethod]
    fn zeros(levels: u64) -> PyResult<Self> {
        Ok(Measure {
            inner: zeros_measure(levels).map_err(pyerr)?,
            kind: GraphKind::Solvable,
        })
    }

    fn graph(&self) -> Graph {
        Graph {
            inner: self.inner.graph().clone(),
            kind: self.kind,
        }
    }

    fn is_coherent(&self) -> bool {
        self.inner.is_coherent()
    }

    fn nu(&self, level: usize, vertex: &str) -> PyResult<BigRational> {
        let v = self.inner.graph().vertex(level, vertex).map_err(pyerr)?;
        Ok(self.inner.nu(v).map_err(pyerr)?.clone())
    }

    fn mass(&self, level: usize, vertex: &str) -> PyResult<BigRational> {
        let v = self.inner.graph().vertex(level, vertex).map_err(pyerr)?;
        self.inner.mass(v).map_err(pyerr)
    }

    fn level_masses(&self, n: usize) -> PyResult<Vec<BigRational>> {
        self.inner.level_masses(n).map_err(pyerr)
    }

    fn transitions(&self, level: usize, vertex: &str) -> PyResult<Vec<(String, u64, BigRational)>> {
        let graph = self.inner.graph();
        let v = graph.vertex(level, vertex).map_err(pyerr)?;
        self.inner
            .transitions(v)
            .map_err(pyerr)?
            .into_iter()
            .map(|(w, mult, p)| Ok((graph.label(w).map_err(pyerr)?.to_string(), mult, p)))
            .collect()
    }

    fn sample_path(&self, length: usize, seed: u64) -> PyResult<Vec<String>> {
        let path = self.inner.sample_path(length, seed).map_err(pyerr)?;
        self.inner.graph().path_labels(&path).map_err(pyerr)
    }
}

#[pyfunction]
fn hook_dimension(shape: Vec<u64>) -> PyResult<BigUint> {
    Ok(characters::hook_dimension(&shape_of(shape)?))
}

#[pyfunction]
fn irreducible_character(shape: Vec<u64>, cycles: Vec<u64>) -> PyResult<num_bigint::BigInt> {
    let lambda = shape_of(shape)?;
    let rho = CycleType::from_parts(cycles).map_err(pyerr)?;
    characters::irreducible_character(&lambda, &rho).map_err(pyerr)
}

/// Balanced orbit mix approximating a measure's cylinders; returns a dict
/// with the depth, exact distance, orbit labels and the invariance recheck.
#[pyfunction]
#[pyo3(signature = (level, eps, target = "bernoulli"))]
fn poulsen(py: Python<'_>, level: usize, eps: BigRational, target: &str) -> PyResult<Py<PyDict>> {
    let measure = match target {
        "bernoulli" => bernoulli_measure(level as u64),
        "zeros" => zeros_measure(level as u64),
        other => return Err(PyValueError::new_err(format!("unknown target {other:?}"))),
    }
    .map_err(pyerr)?;
    let witness = poulsen_witness(&measure, level, &eps, &Budget::default()).map_err(pyerr)?;
    let invariant = witness.measure.is_invariant_at(level).map_err(pyerr)?;
    let out = PyDict::new(py);
    out.set_item("depth", witness.measure.depth())?;
    out.set_item("distance", witness.distance.clone())?;
    out.set_item("reached", witness.reached)?;
    out.set_item("invariant", invariant)?;
    out.set_item("orbits", witness_labels(&witness.measure))?;
    Ok(out.into())
}

/// Pairwise total variation matrix of central measures at one level.
#[pyfunction]
fn separation(thetas: Vec<PyRef<'_, ThomaParam>>, level: u64) -> PyResult<Vec<Vec<BigRational>>> {
    let params: Vec<ThomaParameter> = thetas.iter().map(|t| t.inner.clone()).collect();
    boundary_separation(&params, level).map_err(pyerr)
}

#[pymodule]
fn bratteli(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<ThomaParam>()?;
    m.add_class::<Measure>()?;
    m.add_function(wrap_pyfunction!(hook_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(irreducible_character, m)?)?;
    m.add_function(wrap_pyfunction!(poulsen, m)?)?;
    m.add_function(wrap_pyfunction!(separation, m)?)?;
    Ok(())
}
