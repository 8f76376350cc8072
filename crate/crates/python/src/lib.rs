//! Python bindings for the croissant workspace: graphs, Laplacian spectra,
//! the complexity plane, replicate sweeps, and connectivity-matrix epochs.
//!
//! Build with `cargo build -p croissant-python`, then rename or link the
//! produced `libcroissant.so` to `croissant.so` somewhere on `sys.path`
//! (`python/smoke_test.py` at the repository root does exactly that).

use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use croissant_core as core;

/// Numeric failures (non-finite input, a solver that will not converge)
/// become ArithmeticError; everything else is a ValueError.
fn to_py(err: core::Error) -> PyErr {
    let mut text = err.to_string();
    let mut source = std::error::Error::source(&err);
    while let Some(cause) = source {
        text.push_str(": ");
        text.push_str(&cause.to_string());
        source = cause.source();
    }
    if err.is_numeric() {
        PyArithmeticError::new_err(text)
    } else {
        PyValueError::new_err(text)
    }
}

/// A simple undirected graph on labeled nodes 0..n.
#[pyclass(name = "Graph", module = "croissant", skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    /// An edgeless graph on `n` nodes.
    #[new]
    fn new(n: usize) -> PyResult<Self> {
        Ok(Self { inner: core::Graph::new(n).map_err(to_py)? })
    }

    /// The complete graph on `n` nodes.
    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Ok(Self { inner: core::Graph::complete(n).map_err(to_py)? })
    }

    /// A graph from an explicit edge list.
    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self { inner: core::Graph::from_edges(n, &edges).map_err(to_py)? })
    }

    /// Parses the text edge-list format (`n <count>` header, one `i j` pair
    /// per line, `#` comments).
    #[staticmethod]
    fn parse_edge_list(text: &str) -> PyResult<Self> {
        Ok(Self { inner: core::Graph::parse_edge_list(text).map_err(to_py)? })
    }

    #[getter]
    fn node_count(&self) -> usize {
        self.inner.node_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn add_edge(&mut self, i: usize, j: usize) -> PyResult<()> {
        self.inner.add_edge(i, j).map_err(to_py)
    }

    fn remove_edge(&mut self, i: usize, j: usize) -> PyResult<()> {
        self.inner.remove_edge(i, j).map_err(to_py)
    }

    fn has_edge(&self, i: usize, j: usize) -> bool {
        self.inner.has_edge(i, j)
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    /// Fraction of possible edges present: 2m / (n(n-1)).
    fn link_density(&self) -> PyResult<f64> {
        self.inner.link_density().map_err(to_py)
    }

    fn complement(&self) -> Self {
        Self { inner: self.inner.complement() }
    }

    /// Edges as (i, j) pairs with i < j, lexicographically ordered.
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    /// Solves the Laplacian spectrum of this graph.
    fn spectrum(&self) -> PyResult<PySpectrum> {
        Ok(PySpectrum { inner: core::Spectrum::of(&self.inner).map_err(to_py)? })
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.node_count(), self.inner.edge_count())
    }
}

/// The eigenvalues of a graph Laplacian, sorted non-increasing, and the
/// complexity measure defined on them.
#[pyclass(name = "Spectrum", module = "croissant", skip_from_py_object)]
#[derive(Clone)]
struct PySpectrum {
    inner: core::Spectrum,
}

#[pymethods]
impl PySpectrum {
    /// Builds directly from eigenvalues, for spectra obtained elsewhere.
    #[staticmethod]
    fn from_eigenvalues(values: Vec<f64>) -> PyResult<Self> {
        Ok(Self { inner: core::Spectrum::from_eigenvalues(values).map_err(to_py)? })
    }

    #[getter]
    fn node_count(&self) -> usize {
        self.inner.node_count()
    }

    #[getter]
    fn eigenvalues(&self) -> Vec<f64> {
        self.inner.eigenvalues().to_vec()
    }

    /// The eigenvalues with the structural zero removed.
    #[getter]
    fn reduced(&self) -> Vec<f64> {
        self.inner.reduced().to_vec()
    }

    /// Product of the spectral distances to the edgeless and the complete
    /// graph on the same nodes.
    #[getter]
    fn complexity(&self) -> f64 {
        self.inner.complexity()
    }

    /// The spectrum of the complement graph, computed without re-solving.
    fn complement(&self) -> Self {
        Self { inner: self.inner.complement() }
    }

    fn __repr__(&self) -> String {
        format!(
            "Spectrum(n={}, complexity={})",
            self.inner.node_count(),
            self.inner.complexity()
        )
    }
}

/// A graph's coordinates in the link-density / complexity plane.
#[pyclass(name = "PlanePoint", module = "croissant", get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyPlanePoint {
    rho: f64,
    c_raw: f64,
    c_norm: f64,
}

impl From<core::PlanePoint> for PyPlanePoint {
    fn from(p: core::PlanePoint) -> Self {
        Self { rho: p.rho, c_raw: p.c_raw, c_norm: p.c_norm }
    }
}

#[pymethods]
impl PyPlanePoint {
    fn __repr__(&self) -> String {
        format!(
            "PlanePoint(rho={}, c_raw={}, c_norm={})",
            self.rho, self.c_raw, self.c_norm
        )
    }
}

/// One boundary of the region random graphs occupy in the plane, as a
/// piecewise-linear curve through family vertices.
#[pyclass(name = "Boundary", module = "croissant", skip_from_py_object)]
#[derive(Clone)]
struct PyBoundary {
    inner: core::BoundaryPolyline,
}

#[pymethods]
impl PyBoundary {
    /// "upper" or "lower".
    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind.as_str()
    }

    #[getter]
    fn points(&self) -> Vec<PyPlanePoint> {
        self.inner.points.iter().map(|&p| p.into()).collect()
    }

    /// Linear interpolation of the raw complexity at a density in [0, 1].
    fn interpolate(&self, rho: f64) -> PyResult<f64> {
        if !(0.0..=1.0).contains(&rho) {
            return Err(PyValueError::new_err(format!(
                "density {rho} outside the unit interval"
            )));
        }
        Ok(self.inner.interpolate(rho))
    }

    fn __repr__(&self) -> String {
        format!(
            "Boundary(kind={:?}, points={})",
            self.inner.kind.as_str(),
            self.inner.points.len()
        )
    }
}

/// A generator selection with its parameters, the unit of sweep grids.
#[pyclass(name = "ModelParams", module = "croissant", from_py_object)]
#[derive(Clone)]
struct PyModelParams {
    inner: core::ModelParams,
}

#[pymethods]
impl PyModelParams {
    /// Independent edges: each pair present with probability `p`.
    #[staticmethod]
    fn er(n: usize, p: f64) -> Self {
        Self { inner: core::ModelParams::ErdosRenyi { n, p } }
    }

    /// Ring lattice of half-width `k` with each edge rewired at rate `beta`.
    #[staticmethod]
    fn ws(n: usize, k: usize, beta: f64) -> Self {
        Self { inner: core::ModelParams::WattsStrogatz { n, k, beta } }
    }

    /// Preferential attachment with `ell` edges per arriving node.
    #[staticmethod]
    fn ba(n: usize, ell: usize) -> Self {
        Self { inner: core::ModelParams::BarabasiAlbert { n, ell } }
    }

    /// "er", "ws", or "ba".
    #[getter]
    fn model(&self) -> &'static str {
        self.inner.model_name()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.node_count()
    }

    /// Runs the selected generator with an explicit seed.
    fn generate(&self, seed: u64) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: self.inner.generate(seed).map_err(to_py)? })
    }

    fn __repr__(&self) -> String {
        self.inner.describe()
    }
}

/// Mean and population standard deviation of plane coordinates over a
/// replicate ensemble.
#[pyclass(name = "PlaneStats", module = "croissant", get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyPlaneStats {
    rho_mean: f64,
    rho_std: f64,
    c_mean: f64,
    c_std: f64,
    c_norm_mean: f64,
    c_norm_std: f64,
}

impl From<core::PlaneStats> for PyPlaneStats {
    fn from(s: core::PlaneStats) -> Self {
        Self {
            rho_mean: s.rho_mean,
            rho_std: s.rho_std,
            c_mean: s.c_mean,
            c_std: s.c_std,
            c_norm_mean: s.c_norm_mean,
            c_norm_std: s.c_norm_std,
        }
    }
}

#[pymethods]
impl PyPlaneStats {
    fn __repr__(&self) -> String {
        format!(
            "PlaneStats(rho_mean={}, c_mean={}, c_norm_mean={})",
            self.rho_mean, self.c_mean, self.c_norm_mean
        )
    }
}

/// One grid point of a sweep: the parameters and the aggregated statistics.
#[pyclass(name = "SweepRecord", module = "croissant", get_all, skip_from_py_object)]
#[derive(Clone)]
struct PySweepRecord {
    params: PyModelParams,
    replicates: usize,
    stats: PyPlaneStats,
}

#[pymethods]
impl PySweepRecord {
    fn __repr__(&self) -> String {
        format!(
            "SweepRecord(params={}, replicates={}, c_mean={})",
            self.params.inner.describe(),
            self.replicates,
            self.stats.c_mean
        )
    }
}

/// A symmetric real-valued connectivity matrix with weights in [0, 1].
#[pyclass(name = "ConnectivityMatrix", module = "croissant", from_py_object)]
#[derive(Clone)]
struct PyConnectivityMatrix {
    inner: core::ConnectivityMatrix,
}

#[pymethods]
impl PyConnectivityMatrix {
    /// Parses whitespace- or comma-separated rows, `#` comments allowed.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self { inner: core::ConnectivityMatrix::parse(text).map_err(to_py)? })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn value(&self, i: usize, j: usize) -> f64 {
        self.inner.value(i, j)
    }

    /// Keeps every off-diagonal entry strictly above the threshold as an edge.
    fn binarize(&self, threshold: f64) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: self.inner.binarize(threshold).map_err(to_py)? })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!("ConnectivityMatrix(dim={})", self.inner.dim())
    }
}

/// A labeled set of same-size connectivity matrices (one per epoch).
#[pyclass(name = "EpochSet", module = "croissant", skip_from_py_object)]
#[derive(Clone)]
struct PyEpochSet {
    inner: core::EpochSet,
}

#[pymethods]
impl PyEpochSet {
    #[new]
    fn new(label: &str, matrices: Vec<PyConnectivityMatrix>) -> PyResult<Self> {
        let mats = matrices.into_iter().map(|m| m.inner).collect();
        Ok(Self { inner: core::EpochSet::new(label, mats).map_err(to_py)? })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label.clone()
    }

    #[getter]
    fn epochs(&self) -> usize {
        self.inner.matrices.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "EpochSet(label={:?}, epochs={})",
            self.inner.label,
            self.inner.matrices.len()
        )
    }
}

/// Aggregated plane statistics of one epoch set.
#[pyclass(name = "EpochSummary", module = "croissant", get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyEpochSummary {
    label: String,
    n: usize,
    epochs: usize,
    threshold: f64,
    stats: PyPlaneStats,
}

#[pymethods]
impl PyEpochSummary {
    fn __repr__(&self) -> String {
        format!(
            "EpochSummary(label={:?}, epochs={}, c_norm_mean={})",
            self.label, self.epochs, self.stats.c_norm_mean
        )
    }
}

/// `k` hub nodes joined to everything, the rest otherwise edgeless.
#[pyfunction]
fn multi_star(n: usize, k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: core::multi_star(n, k).map_err(to_py)? })
}

/// Ring lattice: every node joined to its `k` nearest neighbors per side.
#[pyfunction]
fn circulant(n: usize, k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: core::circulant(n, k).map_err(to_py)? })
}

/// Independent edges with probability `p`, from an explicit seed.
#[pyfunction]
fn erdos_renyi(n: usize, p: f64, seed: u64) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: core::erdos_renyi(n, p, seed).map_err(to_py)? })
}

/// Ring lattice of half-width `k`, each edge rewired at rate `beta`.
#[pyfunction]
fn watts_strogatz(n: usize, k: usize, beta: f64, seed: u64) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: core::watts_strogatz(n, k, beta, seed).map_err(to_py)? })
}

/// Preferential attachment, `ell` edges per arriving node.
#[pyfunction]
fn barabasi_albert(n: usize, ell: usize, seed: u64) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: core::barabasi_albert(n, ell, seed).map_err(to_py)? })
}

/// Maps a graph to (density, raw complexity, normalized complexity).
#[pyfunction]
fn locate(g: &PyGraph) -> PyResult<PyPlanePoint> {
    Ok(core::locate(&g.inner).map_err(to_py)?.into())
}

/// The normalization constant N(n): the largest complexity over the
/// hub-family graphs on n nodes.
#[pyfunction]
fn normalization_constant(n: usize) -> PyResult<f64> {
    core::normalization_constant(n).map_err(to_py)
}

/// The upper boundary polyline of the plane region for graphs on n nodes.
#[pyfunction]
fn upper_boundary(n: usize) -> PyResult<PyBoundary> {
    Ok(PyBoundary { inner: core::upper_boundary(n).map_err(to_py)? })
}

/// The lower boundary polyline of the plane region for graphs on n nodes.
#[pyfunction]
fn lower_boundary(n: usize) -> PyResult<PyBoundary> {
    Ok(PyBoundary { inner: core::lower_boundary(n).map_err(to_py)? })
}

/// Runs `replicates` seeded replicates at every grid point and aggregates
/// the plane statistics. Same grid, replicates, and seed: same numbers.
#[pyfunction]
fn run_sweep(
    grid: Vec<PyModelParams>,
    replicates: usize,
    base_seed: u64,
) -> PyResult<Vec<PySweepRecord>> {
    let spec = core::SweepSpec {
        grid: grid.into_iter().map(|p| p.inner).collect(),
        replicates,
        base_seed,
    };
    let records = core::run_sweep(&spec).map_err(to_py)?;
    Ok(records
        .into_iter()
        .map(|r| PySweepRecord {
            params: PyModelParams { inner: r.params },
            replicates: r.replicates,
            stats: r.stats.into(),
        })
        .collect())
}

/// Thresholds every epoch of a set at the same value and aggregates the
/// resulting plane points.
#[pyfunction]
fn analyze_epochs(set: &PyEpochSet, threshold: f64) -> PyResult<PyEpochSummary> {
    let s = core::analyze_epochs(&set.inner, threshold).map_err(to_py)?;
    Ok(PyEpochSummary {
        label: s.label,
        n: s.n,
        epochs: s.epochs,
        threshold: s.threshold,
        stats: s.stats.into(),
    })
}

/// The seed a sweep hands to one replicate at one grid point, for
/// reproducing a single ensemble member outside the sweep.
#[pyfunction]
fn replicate_seed(
    base_seed: u64,
    params: &PyModelParams,
    grid_index: usize,
    replicate: usize,
) -> u64 {
    core::replicate_seed(base_seed, &params.inner, grid_index, replicate)
}

/// Spectral complexity of simple undirected graphs: generators, the
/// link-density / complexity plane, replicate sweeps, and thresholded
/// connectivity-matrix epochs.
#[pymodule]
fn croissant(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PySpectrum>()?;
    m.add_class::<PyPlanePoint>()?;
    m.add_class::<PyBoundary>()?;
    m.add_class::<PyModelParams>()?;
    m.add_class::<PyPlaneStats>()?;
    m.add_class::<PySweepRecord>()?;
    m.add_class::<PyConnectivityMatrix>()?;
    m.add_class::<PyEpochSet>()?;
    m.add_class::<PyEpochSummary>()?;
    m.add_function(wrap_pyfunction!(multi_star, m)?)?;
    m.add_function(wrap_pyfunction!(circulant, m)?)?;
    m.add_function(wrap_pyfunction!(erdos_renyi, m)?)?;
    m.add_function(wrap_pyfunction!(watts_strogatz, m)?)?;
    m.add_function(wrap_pyfunction!(barabasi_albert, m)?)?;
    m.add_function(wrap_pyfunction!(locate, m)?)?;
    m.add_function(wrap_pyfunction!(normalization_constant, m)?)?;
    m.add_function(wrap_pyfunction!(upper_boundary, m)?)?;
    m.add_function(wrap_pyfunction!(lower_boundary, m)?)?;
    m.add_function(wrap_pyfunction!(run_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_epochs, m)?)?;
    m.add_function(wrap_pyfunction!(replicate_seed, m)?)?;
    Ok(())
}
