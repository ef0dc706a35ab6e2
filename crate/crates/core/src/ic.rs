//! Interval completion with a width/cost tradeoff knob.
//!
//! `run_ic` starts from a cost-optimal canonical representation and rebuilds
//! every region whose coverage exceeds a threshold controlled by the
//! parameter `t`, trading interval cost for interval width.  `check_tradeoff`
//! evaluates the two guarantees the rebuild is designed to meet, in exact
//! integer arithmetic.

use crate::error::IcError;
use crate::graph::{Graph, Vertex};
use crate::interval::{CanonicalRepr, Point};
use crate::solvers::{iwid_exact, pathwidth_exact, profile_exact, Limits};

/// One rebuild step of `run_ic`.
///
/// The scan found the maximal run of integer points `run_start ..= run_end`
/// (at or beyond `scan_from`) whose coverage exceeds the threshold.  The
/// splice rebuilds the strip between the below-threshold border points
/// `run_start - 1` and `run_end + 1`: left-straddling intervals stretch to
/// the right border, the `anchor_count` right-straddling intervals are
/// re-anchored on consecutive slots starting at the left border (keeping
/// their right ends), and the intervals confined to the strip are replaced
/// by a translated width-optimal representation of the subgraph they
/// induce.  Anchoring at the borders rather than at the run ends is what
/// caps the rebuilt coverage by the two border coverages plus the window
/// width; the run ends themselves carry excess coverage, so a strip that
/// starts there would leave that excess in place.
#[derive(Clone, Debug)]
pub struct IcIteration {
    /// First point the scan was allowed to consider (`q` in trace output).
    pub scan_from: i64,
    /// First point of the run (`i`).
    pub run_start: i64,
    /// Last point of the run (`j`).
    pub run_end: i64,
    /// Number of right-straddling intervals re-anchored (`p`).
    pub anchor_count: usize,
    /// Vertices whose intervals were confined to the run, in input labels.
    pub window_vertices: Vec<Vertex>,
    /// Width-optimal representation of the window subgraph, in window-local
    /// labels (`window_vertices[v - 1]` is the input vertex for local `v`).
    pub window_repr: CanonicalRepr,
    /// The full representation after this splice.
    pub spliced: CanonicalRepr,
}

/// Full record of a `run_ic` execution.
#[derive(Clone, Debug)]
pub struct IcTrace {
    /// The tradeoff parameter.
    pub t: usize,
    /// The width target `k`: the optimal interval width of the input.
    pub width_target: usize,
    /// The cost-optimal representation the procedure started from.
    pub initial: CanonicalRepr,
    /// One entry per splice, in execution order.
    pub iterations: Vec<IcIteration>,
}

impl IcTrace {
    /// The representation after the last splice (the procedure's output).
    pub fn final_repr(&self) -> &CanonicalRepr {
        self.iterations
            .last()
            .map(|it| &it.spliced)
            .unwrap_or(&self.initial)
    }
}

/// An exact nonnegative rational, kept reduced.  Used for the width bound
/// `(1 + 2/t) * k`, which is not an integer unless `t` divides `2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    num: usize,
    den: usize,
}

impl Ratio {
    pub fn new(num: usize, den: usize) -> Ratio {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> usize {
        self.num
    }

    pub fn den(&self) -> usize {
        self.den
    }

    /// Does `value <= self` hold?  Exact: compares `value * den` to `num`.
    pub fn at_least(&self, value: usize) -> bool {
        value * self.den <= self.num
    }
}

fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a.max(1)
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Evaluation of the two tradeoff guarantees for one representation.
#[derive(Clone, Debug)]
pub struct TradeoffReport {
    /// The tradeoff parameter the bounds are instantiated with.
    pub t: usize,
    /// Optimal interval width of the input graph.
    pub width_target: usize,
    /// Optimal interval cost of the input graph.
    pub profile: usize,
    /// Width bound `(1 + 2/t) * width_target`.
    pub wid_bound: Ratio,
    /// Width of the representation under test.
    pub wid_actual: usize,
    /// Cost bound `(t + 2) * profile`.
    pub cost_bound: usize,
    /// Cost of the representation under test.
    pub cost_actual: usize,
    /// `wid_actual <= wid_bound`, compared exactly.
    pub wid_ok: bool,
    /// `cost_actual <= cost_bound`.
    pub cost_ok: bool,
}

impl TradeoffReport {
    pub fn satisfied(&self) -> bool {
        self.wid_ok && self.cost_ok
    }
}

impl std::fmt::Display for TradeoffReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "t={}: wid {} <= {} ({}); icost {} <= {} ({})",
            self.t,
            self.wid_actual,
            self.wid_bound,
            if self.wid_ok { "ok" } else { "VIOLATED" },
            self.cost_actual,
            self.cost_bound,
            if self.cost_ok { "ok" } else { "VIOLATED" },
        )
    }
}

/// Rebuilds a cost-optimal representation of `g` so that coverage runs above
/// `k/t` (where `k` is the optimal interval width) are replaced by
/// width-optimal layouts, then returns the result and the full trace.
///
/// Requires `1 <= t <= k`.  The output is always canonical and always
/// represents an interval supergraph of `g`; the width and cost it achieves
/// are recorded by `check_tradeoff`.
pub fn run_ic(g: &Graph, t: usize, limits: &Limits) -> Result<(CanonicalRepr, IcTrace), IcError> {
    let k = iwid_exact(g, limits)?.value;
    if t < 1 || t > k {
        return Err(IcError::TradeoffOutOfRange { t, max: k });
    }
    let initial = profile_exact(g, limits)?
        .representation
        .expect("cost solver always attaches a representation");
    let mut trace = IcTrace {
        t,
        width_target: k,
        initial: initial.clone(),
        iterations: Vec::new(),
    };

    let mut cur = initial;
    let mut q: i64 = 1;
    loop {
        // Coverage is zero at and beyond every right endpoint, so the scan
        // can stop at the largest one.
        let hi = cur.max_right();
        let excess = |r: &CanonicalRepr, p: i64| r.coverage(Point::at(p)) * t > k;
        let Some(i) = (q..hi).find(|&p| excess(&cur, p)) else {
            break;
        };
        let mut j = i;
        while excess(&cur, j + 1) {
            j += 1;
        }
        // The scan takes the first excess point at or beyond q, so the point
        // before the run is at the threshold or below.  For i == q that point
        // is the previous strip's right border, which splices preserve.
        debug_assert!(cur.coverage(Point::at(i - 1)) * t <= k);

        // Classify every interval against the open strip between the two
        // below-threshold border points.
        let lo = i - 1;
        let ro = j + 1;
        let mut anchors: Vec<(i64, Vertex)> = Vec::new(); // right-straddlers by old left
        let mut window: Vec<Vertex> = Vec::new();
        let mut ends: Vec<(i64, i64)> = Vec::with_capacity(g.n());
        for (v, l, r) in cur.intervals() {
            if r <= lo || l >= ro {
                // Disjoint from the strip: untouched.
                ends.push((l, r));
            } else if l < lo && r > ro {
                // Covers the whole strip and both borders: untouched.
                ends.push((l, r));
            } else if l < lo {
                // Left-straddler: stretch to the right border.
                ends.push((l, ro));
            } else if r > ro {
                // Right-straddler: re-anchored below, keeps its right end so
                // that every overlap beyond the strip survives.
                anchors.push((l, v));
                ends.push((l, r)); // placeholder, overwritten below
            } else {
                // Confined to the strip: rebuilt from the window subgraph.
                window.push(v);
                ends.push((l, r)); // placeholder, overwritten below
            }
        }
        // Left endpoints are unique, so the strip classes own exactly the
        // integer slots base..=j, where base skips a border at 0 (lefts
        // start at 1).  Anchors take the first p slots, the window the rest.
        let base = lo.max(1);
        anchors.sort_unstable();
        let p = anchors.len();
        for (s, &(l, v)) in anchors.iter().enumerate() {
            // The s-th smallest old left moves down to base + s - 1; it
            // never moves right, so overlaps on the left survive too.
            debug_assert!(base + s as i64 <= l);
            ends[v - 1] = (base + s as i64, cur.right(v));
        }

        // Width-optimal layout for the window subgraph, translated so its
        // left endpoints land exactly on the remaining slots and its right
        // endpoints stay at or below the right border.
        let window_set = window.iter().copied().collect();
        let (sub, labels) = g.induced_subgraph(window_set);
        debug_assert_eq!(sub.n() as i64, ro - base - p as i64);
        let window_repr = pathwidth_exact(&sub, limits)?
            .representation
            .expect("width solver always attaches a representation");
        let shift = base + p as i64 - 1;
        for (local, bl, br) in window_repr.intervals() {
            ends[labels[local - 1] - 1] = (bl + shift, br + shift);
        }

        let spliced = CanonicalRepr::new(ends);
        debug_assert!(spliced.canonical_violations().is_empty());
        // Splices only touch coverage at the run's own points.
        debug_assert!((0..=hi + 1)
            .filter(|&p| p < i || p > j)
            .all(|p| spliced.coverage(Point::at(p)) == cur.coverage(Point::at(p))));

        cur = spliced.clone();
        trace.iterations.push(IcIteration {
            scan_from: q,
            run_start: i,
            run_end: j,
            anchor_count: p,
            window_vertices: window,
            window_repr,
            spliced,
        });
        q = j + 1;
    }

    Ok((cur, trace))
}

/// Computes the exact width and cost bounds for `(g, t)` and evaluates them
/// against the representation `r`, which must be canonical and must
/// represent a supergraph of `g`.
pub fn check_tradeoff(
    g: &Graph,
    t: usize,
    r: &CanonicalRepr,
    limits: &Limits,
) -> Result<TradeoffReport, IcError> {
    let violations = r.canonical_violations();
    if !violations.is_empty() {
        return Err(IcError::NotCanonical(violations.join("; ")));
    }
    if r.n() != g.n() || !r.to_interval_graph().is_supergraph_of(g) {
        return Err(IcError::NotSupergraph);
    }
    let k = iwid_exact(g, limits)?.value;
    if t < 1 || t > k {
        return Err(IcError::TradeoffOutOfRange { t, max: k });
    }
    let profile = profile_exact(g, limits)?.value;
    let wid_bound = Ratio::new((t + 2) * k, t);
    let cost_bound = (t + 2) * profile;
    let wid_actual = r.wid();
    let cost_actual = r.icost();
    Ok(TradeoffReport {
        t,
        width_target: k,
        profile,
        wid_bound,
        wid_actual,
        cost_bound,
        cost_actual,
        wid_ok: wid_bound.at_least(wid_actual),
        cost_ok: cost_actual <= cost_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::SolverError;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        e.push((1, n));
        Graph::from_edges(n, &e).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, &(2..=leaves + 1).map(|v| (1, v)).collect::<Vec<_>>())
            .unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Checks every trace invariant: canonical splices, strictly increasing
    /// scan origins, runs at or beyond their scan origin, window sizes
    /// matching the anchor arithmetic, coverage preserved outside each run,
    /// and the final representation a canonical supergraph layout.
    fn assert_trace_sound(g: &Graph, trace: &IcTrace, out: &CanonicalRepr) {
        assert!(out.canonical_violations().is_empty());
        assert!(out.to_interval_graph().is_supergraph_of(g));
        assert_eq!(trace.final_repr().n(), out.n());
        assert!(trace.iterations.len() <= g.n());
        let mut prev = trace.initial.clone();
        let mut last_q = 0;
        for it in &trace.iterations {
            assert!(it.scan_from > last_q);
            last_q = it.scan_from;
            assert!(it.scan_from <= it.run_start && it.run_start <= it.run_end);
            assert!(it.spliced.canonical_violations().is_empty());
            assert_eq!(
                it.window_vertices.len() as i64,
                it.run_end + 1 - (it.run_start - 1).max(1) - it.anchor_count as i64,
            );
            let hi = prev.max_right().max(it.spliced.max_right()) + 1;
            for p in 0..=hi {
                if p < it.run_start || p > it.run_end {
                    assert_eq!(
                        prev.coverage(Point::at(p)),
                        it.spliced.coverage(Point::at(p)),
                        "coverage at {} moved by a splice of ({}, {})",
                        p,
                        it.run_start,
                        it.run_end,
                    );
                }
            }
            prev = it.spliced.clone();
        }
        assert!(last_q <= g.n() as i64 + 1);
    }

    #[test]
    fn complete_graph_is_left_unchanged() {
        let g = complete(5);
        let (out, trace) = run_ic(&g, 1, &Limits::default()).unwrap();
        assert!(trace.iterations.is_empty());
        assert_eq!(out.icost(), 10);
        assert_eq!(out.wid(), 5);
        assert_trace_sound(&g, &trace, &out);
    }

    #[test]
    fn path_is_left_unchanged_for_every_t() {
        let g = path(4);
        for t in 1..=2 {
            let (out, trace) = run_ic(&g, t, &Limits::default()).unwrap();
            assert!(trace.iterations.is_empty(), "t={}", t);
            assert_eq!(out.wid(), 2);
            assert_eq!(out.icost(), 3);
            assert_trace_sound(&g, &trace, &out);
        }
    }

    #[test]
    fn four_cycle_meets_both_bounds_for_every_t() {
        let g = cycle(4);
        for t in 1..=3 {
            let (out, trace) = run_ic(&g, t, &Limits::default()).unwrap();
            assert_trace_sound(&g, &trace, &out);
            let report = check_tradeoff(&g, t, &out, &Limits::default()).unwrap();
            assert!(report.satisfied(), "{}", report);
        }
        // Every ordering of a cycle has a prefix kept open by two vertices,
        // so the loosest threshold always fires at least once.
        let (_, trace) = run_ic(&g, 3, &Limits::default()).unwrap();
        assert!(!trace.iterations.is_empty());
    }

    #[test]
    fn bounds_for_the_four_cycle_at_t_two() {
        let g = cycle(4);
        let (out, _) = run_ic(&g, 2, &Limits::default()).unwrap();
        let report = check_tradeoff(&g, 2, &out, &Limits::default()).unwrap();
        assert_eq!(report.width_target, 3);
        assert_eq!(report.profile, 5);
        assert_eq!(report.wid_bound, Ratio::new(6, 1));
        assert_eq!(report.cost_bound, 20);
        assert!(report.satisfied());
    }

    #[test]
    fn sweep_over_small_graphs_exercises_the_splice() {
        let graphs = vec![
            path(6),
            cycle(5),
            cycle(6),
            star(4),
            complete(4),
            // complete graph minus one edge
            Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap(),
            // two triangles sharing a vertex
            Graph::from_edges(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap(),
            // cube
            Graph::from_edges(
                8,
                &[
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (1, 4),
                    (5, 6),
                    (6, 7),
                    (7, 8),
                    (5, 8),
                    (1, 5),
                    (2, 6),
                    (3, 7),
                    (4, 8),
                ],
            )
            .unwrap(),
        ];
        let mut splices = 0;
        let mut rebuilt_windows = 0;
        for g in &graphs {
            let k = iwid_exact(g, &Limits::default()).unwrap().value;
            for t in 1..=k {
                let (out, trace) = run_ic(g, t, &Limits::default()).unwrap();
                assert_trace_sound(g, &trace, &out);
                let report = check_tradeoff(g, t, &out, &Limits::default()).unwrap();
                assert!(report.satisfied(), "n={} t={}: {}", g.n(), t, report);
                splices += trace.iterations.len();
                rebuilt_windows += trace
                    .iterations
                    .iter()
                    .filter(|it| !it.window_vertices.is_empty())
                    .count();
            }
        }
        // The sweep must exercise both the splice and the window rebuild.
        assert!(splices > 0);
        assert!(rebuilt_windows > 0);
    }

    #[test]
    fn tradeoff_parameter_is_range_checked() {
        let g = cycle(4);
        match run_ic(&g, 0, &Limits::default()) {
            Err(IcError::TradeoffOutOfRange { t: 0, max: 3 }) => {}
            other => panic!("expected range error, got {:?}", other.map(|r| r.0)),
        }
        match run_ic(&g, 4, &Limits::default()) {
            Err(IcError::TradeoffOutOfRange { t: 4, max: 3 }) => {}
            other => panic!("expected range error, got {:?}", other.map(|r| r.0)),
        }
        let empty = Graph::new(0).unwrap();
        assert!(matches!(
            run_ic(&empty, 1, &Limits::default()),
            Err(IcError::TradeoffOutOfRange { t: 1, max: 0 })
        ));
    }

    #[test]
    fn capacity_errors_propagate() {
        let g = complete(6);
        let tight = Limits {
            single: 5,
            frontier: 5,
        };
        assert!(matches!(
            run_ic(&g, 1, &tight),
            Err(IcError::Solver(SolverError::Capacity { n: 6, limit: 5 }))
        ));
    }

    #[test]
    fn check_tradeoff_rejects_bad_representations() {
        let g = path(4);
        // Duplicate lefts: not canonical.
        let broken = CanonicalRepr::new(vec![(1, 3), (1, 4), (3, 5), (4, 5)]);
        assert!(matches!(
            check_tradeoff(&g, 1, &broken, &Limits::default()),
            Err(IcError::NotCanonical(_))
        ));
        // Unit intervals only touch, so the represented graph has no edges.
        let sparse = CanonicalRepr::new(vec![(1, 2), (2, 3), (3, 4), (4, 5)]);
        assert!(matches!(
            check_tradeoff(&g, 1, &sparse, &Limits::default()),
            Err(IcError::NotSupergraph)
        ));
        // Vertex-count mismatch.
        let short = CanonicalRepr::new(vec![(1, 3), (2, 4), (3, 4)]);
        assert!(matches!(
            check_tradeoff(&g, 1, &short, &Limits::default()),
            Err(IcError::NotSupergraph)
        ));
    }

    #[test]
    fn width_bound_collapses_to_an_integer_at_maximal_t() {
        // At t = k the width bound is (1 + 2/k) * k = k + 2 exactly.
        let g = complete(4);
        let (out, _) = run_ic(&g, 4, &Limits::default()).unwrap();
        let report = check_tradeoff(&g, 4, &out, &Limits::default()).unwrap();
        assert_eq!(report.wid_bound, Ratio::new(6, 1));
        assert_eq!(format!("{}", report.wid_bound), "6");
        assert!(report.satisfied());
    }

    #[test]
    fn ratios_reduce_and_display() {
        assert_eq!(Ratio::new(10, 4), Ratio::new(5, 2));
        assert_eq!(format!("{}", Ratio::new(10, 4)), "5/2");
        assert_eq!(format!("{}", Ratio::new(12, 3)), "4");
        assert!(Ratio::new(5, 2).at_least(2));
        assert!(!Ratio::new(5, 2).at_least(3));
        assert_eq!(Ratio::new(0, 7), Ratio::new(0, 1));
    }
}
