//! Python bindings: graphs, representations, strategies, and the solvers
//! behind them.  Mirrors the library surface with plain Python types; all
//! failures surface as ValueError.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use widthfill::ic;
use widthfill::search::{self, Flavor, ValidateOptions};
use widthfill::solvers::{self, Limits};
use widthfill::witness::{self, WitnessSpec};
use widthfill::{CanonicalRepr, Graph as CoreGraph, VertexOrdering};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn limits(max_n: Option<usize>) -> Limits {
    match max_n {
        Some(n) => Limits::uniform(n),
        None => Limits::default(),
    }
}

fn ordering_for(g: &CoreGraph, order: Vec<usize>) -> PyResult<VertexOrdering> {
    let f = VertexOrdering::new(order).map_err(err)?;
    if f.n() != g.n() {
        return Err(PyValueError::new_err(format!(
            "ordering covers {} vertices, the graph has {}",
            f.n(),
            g.n()
        )));
    }
    Ok(f)
}

/// An undirected simple graph on vertices 1..=n.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: CoreGraph,
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        CoreGraph::from_edges(n, &edges)
            .map(|inner| Graph { inner })
            .map_err(err)
    }

    /// Parses the edge-list text format: "n m" header, one "u v" per line.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse::<CoreGraph>().map(|inner| Graph { inner }).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn is_chordal(&self) -> bool {
        self.inner.is_chordal()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// A canonical interval representation: open integer intervals with left
/// endpoints exactly {1..n}.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Representation {
    inner: CanonicalRepr,
}

impl Representation {
    fn checked(inner: CanonicalRepr) -> PyResult<Self> {
        let violations = inner.canonical_violations();
        if violations.is_empty() {
            Ok(Representation { inner })
        } else {
            Err(PyValueError::new_err(violations.join("; ")))
        }
    }
}

#[pymethods]
impl Representation {
    /// ends[v-1] is the (left, right) pair of vertex v.
    #[new]
    fn new(ends: Vec<(i64, i64)>) -> PyResult<Self> {
        Representation::checked(CanonicalRepr::new(ends))
    }

    /// Parses the text format: "n" header, one "v left right" per line.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Representation::checked(text.parse::<CanonicalRepr>().map_err(err)?)
    }

    /// (vertex, left, right) triples in vertex order.
    fn intervals(&self) -> Vec<(usize, i64, i64)> {
        self.inner.intervals().collect()
    }

    fn icost(&self) -> usize {
        self.inner.icost()
    }

    fn wid(&self) -> usize {
        self.inner.wid()
    }

    /// The interval graph this representation realizes.
    fn to_graph(&self) -> Graph {
        Graph { inner: self.inner.to_interval_graph() }
    }

    /// Vertices sorted by left endpoint.
    fn left_ordering(&self) -> Vec<usize> {
        self.inner.left_ordering().as_slice().to_vec()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Representation(n={}, wid={}, icost={})",
            self.inner.n(),
            self.inner.wid(),
            self.inner.icost()
        )
    }
}

/// A node-search strategy: per step, the cleared set and the guard set.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Strategy {
    inner: search::SearchStrategy,
}

#[pymethods]
impl Strategy {
    /// Parses the "i | cleared | guarded" text format.
    #[staticmethod]
    fn parse(text: &str, flavor: &str) -> PyResult<Self> {
        let flavor: Flavor = flavor.parse().map_err(err)?;
        search::SearchStrategy::parse(text, flavor)
            .map(|inner| Strategy { inner })
            .map_err(err)
    }

    #[getter]
    fn flavor(&self) -> String {
        self.inner.flavor.to_string()
    }

    /// (cleared, guarded) vertex lists, one pair per step.
    fn steps(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        self.inner
            .steps
            .iter()
            .map(|s| (s.cleared.to_vec(), s.guarded.to_vec()))
            .collect()
    }

    /// Sum of guard-set sizes.
    fn cost(&self) -> usize {
        search::metrics(&self.inner).cost
    }

    /// Largest mid-move occupancy (guards plus the searched vertex).
    fn searchers(&self) -> usize {
        search::metrics(&self.inner).peak_searchers
    }

    fn monotone(&self) -> bool {
        search::metrics(&self.inner).monotone
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        let m = search::metrics(&self.inner);
        format!(
            "Strategy(flavor={}, moves={}, cost={}, searchers={})",
            self.inner.flavor,
            self.inner.moves(),
            m.cost,
            m.peak_searchers
        )
    }
}

/// An exact optimum with its witness ordering; ordering-based parameters
/// also carry the greedy representation of the witness.
#[pyclass(frozen, skip_from_py_object)]
struct SolverResult {
    #[pyo3(get)]
    value: usize,
    #[pyo3(get)]
    ordering: Vec<usize>,
    #[pyo3(get)]
    representation: Option<Representation>,
}

impl SolverResult {
    fn wrap(res: solvers::SolverResult) -> Self {
        SolverResult {
            value: res.value,
            ordering: res.witness.as_slice().to_vec(),
            representation: res.representation.map(|inner| Representation { inner }),
        }
    }
}

#[pymethods]
impl SolverResult {
    fn __repr__(&self) -> String {
        format!("SolverResult(value={}, ordering={:?})", self.value, self.ordering)
    }
}

/// Both tradeoff guarantees for one representation, compared exactly;
/// wid_bound is an exact fraction as a (num, den) pair.
#[pyclass(frozen, skip_from_py_object)]
struct TradeoffReport {
    #[pyo3(get)]
    t: usize,
    #[pyo3(get)]
    width_target: usize,
    #[pyo3(get)]
    profile: usize,
    #[pyo3(get)]
    wid_actual: usize,
    #[pyo3(get)]
    wid_bound: (usize, usize),
    #[pyo3(get)]
    cost_actual: usize,
    #[pyo3(get)]
    cost_bound: usize,
    #[pyo3(get)]
    satisfied: bool,
}

#[pymethods]
impl TradeoffReport {
    fn __repr__(&self) -> String {
        format!(
            "TradeoffReport(t={}, wid {} <= {}/{}, icost {} <= {}, satisfied={})",
            self.t,
            self.wid_actual,
            self.wid_bound.0,
            self.wid_bound.1,
            self.cost_actual,
            self.cost_bound,
            self.satisfied
        )
    }
}

#[pyfunction]
#[pyo3(signature = (g, max_n=None))]
fn profile(g: PyRef<'_, Graph>, max_n: Option<usize>) -> PyResult<SolverResult> {
    solvers::profile_exact(&g.inner, &limits(max_n))
        .map(SolverResult::wrap)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, max_n=None))]
fn pathwidth(g: PyRef<'_, Graph>, max_n: Option<usize>) -> PyResult<SolverResult> {
    solvers::pathwidth_exact(&g.inner, &limits(max_n))
        .map(SolverResult::wrap)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, max_n=None))]
fn iwid(g: PyRef<'_, Graph>, max_n: Option<usize>) -> PyResult<SolverResult> {
    solvers::iwid_exact(&g.inner, &limits(max_n))
        .map(SolverResult::wrap)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, max_n=None))]
fn treewidth(g: PyRef<'_, Graph>, max_n: Option<usize>) -> PyResult<SolverResult> {
    solvers::treewidth_exact(&g.inner, &limits(max_n))
        .map(SolverResult::wrap)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, max_n=None))]
fn fillin(g: PyRef<'_, Graph>, max_n: Option<usize>) -> PyResult<SolverResult> {
    solvers::fillin_exact(&g.inner, &limits(max_n))
        .map(SolverResult::wrap)
        .map_err(err)
}

/// (k, cost, ordering) per non-dominated interval completion.
#[pyfunction]
#[pyo3(signature = (g, max_n=None))]
fn width_cost_frontier(
    g: PyRef<'_, Graph>,
    max_n: Option<usize>,
) -> PyResult<Vec<(usize, usize, Vec<usize>)>> {
    solvers::width_cost_frontier(&g.inner, &limits(max_n))
        .map(|f| {
            f.points
                .into_iter()
                .map(|p| (p.k, p.cost, p.witness.as_slice().to_vec()))
                .collect()
        })
        .map_err(err)
}

/// (k, cost, ordering) per non-dominated chordal completion.
#[pyfunction]
#[pyo3(signature = (g, max_n=None))]
fn clique_fill_frontier(
    g: PyRef<'_, Graph>,
    max_n: Option<usize>,
) -> PyResult<Vec<(usize, usize, Vec<usize>)>> {
    solvers::clique_fill_frontier(&g.inner, &limits(max_n))
        .map(|f| {
            f.points
                .into_iter()
                .map(|p| (p.k, p.cost, p.witness.as_slice().to_vec()))
                .collect()
        })
        .map_err(err)
}

/// The greedy representation of g under the given ordering.
#[pyfunction]
fn greedy_representation(g: PyRef<'_, Graph>, order: Vec<usize>) -> PyResult<Representation> {
    let f = ordering_for(&g.inner, order)?;
    Ok(Representation { inner: widthfill::greedy_representation(&g.inner, &f) })
}

/// Runs the tradeoff completion; returns the representation and the number
/// of splice iterations it took.
#[pyfunction]
#[pyo3(signature = (g, t, max_n=None))]
fn run_ic(g: PyRef<'_, Graph>, t: usize, max_n: Option<usize>) -> PyResult<(Representation, usize)> {
    ic::run_ic(&g.inner, t, &limits(max_n))
        .map(|(r, trace)| (Representation { inner: r }, trace.iterations.len()))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, t, r, max_n=None))]
fn check_tradeoff(
    g: PyRef<'_, Graph>,
    t: usize,
    r: PyRef<'_, Representation>,
    max_n: Option<usize>,
) -> PyResult<TradeoffReport> {
    let report = ic::check_tradeoff(&g.inner, t, &r.inner, &limits(max_n)).map_err(err)?;
    Ok(TradeoffReport {
        t: report.t,
        width_target: report.width_target,
        profile: report.profile,
        wid_actual: report.wid_actual,
        wid_bound: (report.wid_bound.num(), report.wid_bound.den()),
        cost_actual: report.cost_actual,
        cost_bound: report.cost_bound,
        satisfied: report.satisfied(),
    })
}

/// The three-block witness graph W(a,b,c); requires a < b < c and ac > b^2.
#[pyfunction]
fn build_witness(a: usize, b: usize, c: usize) -> PyResult<Graph> {
    let spec = WitnessSpec::new(a, b, c).map_err(err)?;
    Ok(Graph { inner: witness::build_witness(spec).graph().clone() })
}

/// (holds, ppm pairs, tfm pairs): holds means both frontiers have at least
/// two points, so no completion attains both optima.
#[pyfunction]
#[pyo3(signature = (a, b, c, max_n=None))]
fn verify_orthogonality(
    a: usize,
    b: usize,
    c: usize,
    max_n: Option<usize>,
) -> PyResult<(bool, Vec<(usize, usize)>, Vec<(usize, usize)>)> {
    let spec = WitnessSpec::new(a, b, c).map_err(err)?;
    let report = witness::verify_orthogonality(spec, &limits(max_n)).map_err(err)?;
    Ok((
        report.holds(),
        report.interval_frontier.pairs(),
        report.chordal_frontier.pairs(),
    ))
}

/// Derives a strategy from an optimal layout: "active" clears along the
/// cost-optimal representation, "inert" along the fill-optimal elimination.
#[pyfunction]
#[pyo3(signature = (g, flavor, max_n=None))]
fn derive_strategy(g: PyRef<'_, Graph>, flavor: &str, max_n: Option<usize>) -> PyResult<Strategy> {
    let lim = limits(max_n);
    let inner = match flavor.parse::<Flavor>().map_err(err)? {
        Flavor::Active => {
            let res = solvers::profile_exact(&g.inner, &lim).map_err(err)?;
            let r = res.representation.expect("profile result carries a representation");
            search::active_from_representation(&g.inner, &r).map_err(err)?
        }
        Flavor::Inert => {
            let res = solvers::fillin_exact(&g.inner, &lim).map_err(err)?;
            search::inert_from_elimination(&g.inner, &res.witness).map_err(err)?
        }
    };
    Ok(Strategy { inner })
}

/// Derives the active strategy that clears g along a given representation.
#[pyfunction]
fn active_strategy(g: PyRef<'_, Graph>, r: PyRef<'_, Representation>) -> PyResult<Strategy> {
    search::active_from_representation(&g.inner, &r.inner)
        .map(|inner| Strategy { inner })
        .map_err(err)
}

/// (valid, violations, notes) for a strategy on g.
#[pyfunction]
#[pyo3(signature = (g, s, strict=false, literal_paths=false))]
fn validate_strategy(
    g: PyRef<'_, Graph>,
    s: PyRef<'_, Strategy>,
    strict: bool,
    literal_paths: bool,
) -> (bool, Vec<String>, Vec<String>) {
    let report =
        search::validate_strategy(&g.inner, &s.inner, ValidateOptions { strict, literal_paths });
    (
        report.is_valid(),
        report.violations.iter().map(|v| v.to_string()).collect(),
        report.notes.clone(),
    )
}

#[pymodule]
fn widthfill_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Representation>()?;
    m.add_class::<Strategy>()?;
    m.add_class::<SolverResult>()?;
    m.add_class::<TradeoffReport>()?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(pathwidth, m)?)?;
    m.add_function(wrap_pyfunction!(iwid, m)?)?;
    m.add_function(wrap_pyfunction!(treewidth, m)?)?;
    m.add_function(wrap_pyfunction!(fillin, m)?)?;
    m.add_function(wrap_pyfunction!(width_cost_frontier, m)?)?;
    m.add_function(wrap_pyfunction!(clique_fill_frontier, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_representation, m)?)?;
    m.add_function(wrap_pyfunction!(run_ic, m)?)?;
    m.add_function(wrap_pyfunction!(check_tradeoff, m)?)?;
    m.add_function(wrap_pyfunction!(build_witness, m)?)?;
    m.add_function(wrap_pyfunction!(verify_orthogonality, m)?)?;
    m.add_function(wrap_pyfunction!(derive_strategy, m)?)?;
    m.add_function(wrap_pyfunction!(active_strategy, m)?)?;
    m.add_function(wrap_pyfunction!(validate_strategy, m)?)?;
    Ok(())
}
