//! Node-search strategies: clearing a graph step by step with guards.
//!
//! A strategy clears one vertex per step while a guard set keeps the
//! already-cleared region sealed off from contamination.  The two flavors
//! differ in where recontamination can start: in the active game it spreads
//! from every contaminated vertex, in the inert game only from the vertex
//! being searched.  `validate_strategy` checks the game rules,
//! `active_from_representation` and `inert_from_elimination` build monotone
//! strategies whose accounting ties back to the layout optimizers: boundary
//! guards of an interval supergraph cost exactly its interval count, and
//! boundary guards of a filled graph cost exactly its edge count.

use std::fmt;

use crate::error::{ParseError, SearchError};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::interval::{CanonicalRepr, VertexOrdering};
use crate::solvers::eliminate;

/// Which recontamination rule the strategy plays against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// Contamination spreads from every contaminated vertex each step.
    Active,
    /// Contamination spreads only from the vertex being searched.
    Inert,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Active => "active",
            Flavor::Inert => "inert",
        })
    }
}

impl std::str::FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "active" => Ok(Flavor::Active),
            "inert" => Ok(Flavor::Inert),
            other => Err(format!("unknown flavor '{other}' (want active or inert)")),
        }
    }
}

/// One position of a strategy: the cleared set `A_i` and the guard set `Z_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub cleared: VertexSet,
    pub guarded: VertexSet,
}

/// A full play: positions 0..=m, starting empty and ending all-cleared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchStrategy {
    pub flavor: Flavor,
    pub steps: Vec<Step>,
}

impl SearchStrategy {
    /// Number of search moves (one less than the number of positions).
    pub fn moves(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    /// Parses the one-line-per-step text format (see the Display impl).
    /// The flavor is not part of the format and is supplied by the caller.
    pub fn parse(text: &str, flavor: Flavor) -> Result<SearchStrategy, ParseError> {
        let mut steps = Vec::new();
        for (lno, line) in text.lines().enumerate() {
            let lno = lno + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('|').collect();
            if fields.len() != 3 {
                return Err(ParseError::new(
                    lno,
                    format!("expected 'i | cleared | guarded', got {} field(s)", fields.len()),
                ));
            }
            let index: usize = fields[0]
                .trim()
                .parse()
                .map_err(|_| ParseError::new(lno, format!("bad step index '{}'", fields[0].trim())))?;
            if index != steps.len() {
                return Err(ParseError::new(
                    lno,
                    format!("step index {index} out of order (expected {})", steps.len()),
                ));
            }
            let cleared = parse_vertex_list(fields[1], lno)?;
            let guarded = parse_vertex_list(fields[2], lno)?;
            steps.push(Step { cleared, guarded });
        }
        if steps.is_empty() {
            return Err(ParseError::new(1, "no steps"));
        }
        Ok(SearchStrategy { flavor, steps })
    }
}

fn parse_vertex_list(field: &str, lno: usize) -> Result<VertexSet, ParseError> {
    let field = field.trim();
    let mut set = VertexSet::default();
    if field.is_empty() || field == "-" {
        return Ok(set);
    }
    for item in field.split(',') {
        let item = item.trim();
        let v: Vertex = item
            .parse()
            .map_err(|_| ParseError::new(lno, format!("bad vertex '{item}'")))?;
        if v < 1 || v > 64 {
            return Err(ParseError::new(lno, format!("vertex {v} out of supported range")));
        }
        set.insert(v);
    }
    Ok(set)
}

fn write_vertex_list(f: &mut fmt::Formatter<'_>, set: VertexSet) -> fmt::Result {
    if set.is_empty() {
        return f.write_str("-");
    }
    for (k, v) in set.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// One line per step: `i | cleared list | guarded list`, lists sorted and
/// comma-separated, `-` for an empty list.
impl fmt::Display for SearchStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            write!(f, "{i} | ")?;
            write_vertex_list(f, step.cleared)?;
            f.write_str(" | ")?;
            write_vertex_list(f, step.guarded)?;
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Totals of a strategy.
///
/// `searchers` counts guards left standing between moves, per the definition
/// of the searcher number.  `peak_searchers` counts the board during a move,
/// when the step's searcher (and any re-placed guards) are already down but
/// nothing has been withdrawn yet; this transient maximum is what matches
/// width-like parameters plus one, while the settled maximum can undershoot
/// them by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrategyMetrics {
    /// Sum of all guard-set sizes.
    pub cost: usize,
    /// Largest settled guard set.
    pub searchers: usize,
    /// Largest mid-move occupancy.
    pub peak_searchers: usize,
    /// Whether the cleared sets only ever grow.
    pub monotone: bool,
}

/// Sums and maxima over the steps; no validity check.
pub fn metrics(s: &SearchStrategy) -> StrategyMetrics {
    let mut cost = 0;
    let mut searchers = 0;
    let mut peak = 0;
    let mut monotone = true;
    for (i, step) in s.steps.iter().enumerate() {
        cost += step.guarded.len();
        searchers = searchers.max(step.guarded.len());
        if i > 0 {
            let prev = &s.steps[i - 1];
            let placed = step.cleared.minus(prev.cleared);
            let board = prev.guarded.union(placed).union(step.guarded);
            peak = peak.max(board.len());
            monotone &= prev.cleared.is_subset_of(step.cleared);
        }
    }
    StrategyMetrics { cost, searchers, peak_searchers: peak, monotone }
}

/// Knobs for `validate_strategy`.
///
/// `strict` additionally demands that each step's searched vertex is in that
/// step's guard set.  The final step is exempt (its guard set must be empty)
/// and the exemption is reported as a note.
///
/// `literal_paths` switches to the written recontamination rule, under which
/// only interior vertices of a path block it: a guard adjacent to
/// contamination is then itself overrun, which rejects even the boundary
/// strategies that realize the optimal costs.  Off by default; kept for
/// side-by-side comparison.  The default reading blocks a path on any
/// guarded vertex other than the contaminated origin, so guards protect
/// themselves.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ValidateOptions {
    pub strict: bool,
    pub literal_paths: bool,
}

/// A broken game rule, with the step where it happened.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A cleared or guard set mentions a vertex the graph does not have.
    OutOfRange { step: usize, vertices: VertexSet },
    /// Position 0 must have nothing cleared and nothing guarded.
    StartNotEmpty,
    /// The final position must have every vertex cleared.
    EndNotAllCleared { missing: VertexSet },
    /// The final position must have no guards left.
    EndStillGuarded { guarded: VertexSet },
    /// Each move must clear exactly one new vertex.
    ClearedCountChanged { step: usize, added: VertexSet },
    /// Guards may only stand on the previous cleared set plus the new vertex.
    GuardOutsideReach { step: usize, vertices: VertexSet },
    /// Guards may not stand on contaminated vertices.
    GuardOnContaminated { step: usize, vertices: VertexSet },
    /// Strict mode: the searched vertex must be guarded in its own step.
    MissingPlacement { step: usize, vertex: Vertex },
    /// Vertices kept as cleared although an unblocked path reaches them.
    Recontaminated { step: usize, vertices: VertexSet },
    /// Vertices dropped from the cleared set although every path is blocked.
    DroppedSafe { step: usize, vertices: VertexSet },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(set: &VertexSet) -> String {
            let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
            items.join(",")
        }
        match self {
            Violation::OutOfRange { step, vertices } => {
                write!(f, "step {step}: vertices {} outside the graph", list(vertices))
            }
            Violation::StartNotEmpty => write!(f, "step 0: must start with nothing cleared or guarded"),
            Violation::EndNotAllCleared { missing } => {
                write!(f, "final step: vertices {} never cleared", list(missing))
            }
            Violation::EndStillGuarded { guarded } => {
                write!(f, "final step: guards {} still standing", list(guarded))
            }
            Violation::ClearedCountChanged { step, added } => {
                write!(f, "step {step}: must clear exactly one new vertex, cleared {{{}}}", list(added))
            }
            Violation::GuardOutsideReach { step, vertices } => {
                write!(f, "step {step}: guards {} beyond the previous cleared set plus the searched vertex", list(vertices))
            }
            Violation::GuardOnContaminated { step, vertices } => {
                write!(f, "step {step}: guards {} on contaminated vertices", list(vertices))
            }
            Violation::MissingPlacement { step, vertex } => {
                write!(f, "step {step}: searched vertex {vertex} is not guarded")
            }
            Violation::Recontaminated { step, vertices } => {
                write!(f, "step {step}: vertices {} kept despite an unblocked path from contamination", list(vertices))
            }
            Violation::DroppedSafe { step, vertices } => {
                write!(f, "step {step}: vertices {} dropped although every path is blocked", list(vertices))
            }
        }
    }
}

/// Outcome of a validation: all broken rules plus informational notes.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            writeln!(f, "valid")?;
        } else {
            writeln!(f, "invalid ({} violation(s))", self.violations.len())?;
        }
        for v in &self.violations {
            writeln!(f, "  violation: {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Checks a strategy against the game rules on `g`.
///
/// Structural rules: empty start, fully cleared and unguarded end, exactly
/// one new vertex per move, guards confined to the previous cleared set plus
/// the searched vertex and never on contaminated vertices.  On top of that,
/// each move must keep exactly the cleared vertices that the flavor's
/// recontamination rule protects: keeping an overrun vertex and dropping a
/// protected one are both violations.  The recontamination check is skipped
/// for a step whose structure is already broken, to avoid cascading noise.
pub fn validate_strategy(g: &Graph, s: &SearchStrategy, opts: ValidateOptions) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = g.n();
    let all = VertexSet::full(n);
    let steps = &s.steps;
    if steps.is_empty() {
        report.violations.push(Violation::StartNotEmpty);
        return report;
    }
    let m = steps.len() - 1;
    if opts.literal_paths {
        report
            .notes
            .push("literal path rule: guards adjacent to contamination are overrun".into());
    }

    for (i, step) in steps.iter().enumerate() {
        let stray = step.cleared.union(step.guarded).minus(all);
        if !stray.is_empty() {
            report.violations.push(Violation::OutOfRange { step: i, vertices: stray });
        }
    }
    if !steps[0].cleared.is_empty() || !steps[0].guarded.is_empty() {
        report.violations.push(Violation::StartNotEmpty);
    }
    let missing = all.minus(steps[m].cleared);
    if !missing.is_empty() {
        report.violations.push(Violation::EndNotAllCleared { missing });
    }
    if !steps[m].guarded.is_empty() {
        report.violations.push(Violation::EndStillGuarded { guarded: steps[m].guarded });
    }

    for i in 1..=m {
        let prev = steps[i - 1];
        let cur = steps[i];
        let added = cur.cleared.minus(prev.cleared);
        let mut sound = true;

        if added.len() != 1 {
            report.violations.push(Violation::ClearedCountChanged { step: i, added });
            sound = false;
        }
        let searched = if added.len() == 1 { added.iter().next() } else { None };
        let reach = prev.cleared.union(added);
        let outside = cur.guarded.minus(reach).intersection(all);
        if !outside.is_empty() {
            report.violations.push(Violation::GuardOutsideReach { step: i, vertices: outside });
            sound = false;
        }
        let contaminated = cur.guarded.minus(cur.cleared).intersection(all);
        if !contaminated.is_empty() {
            report.violations.push(Violation::GuardOnContaminated { step: i, vertices: contaminated });
            sound = false;
        }
        if opts.strict {
            if let Some(v) = searched {
                if i < m && !cur.guarded.contains(v) {
                    report.violations.push(Violation::MissingPlacement { step: i, vertex: v });
                }
                if i == m && !cur.guarded.contains(v) {
                    report
                        .notes
                        .push(format!("step {m}: placement of {v} not required, final guard set must be empty"));
                }
            }
        }
        if !sound || !added.is_subset_of(all) || !prev.guarded.is_subset_of(prev.cleared) {
            continue;
        }

        let v = searched.expect("sound step has one new vertex");
        let before = prev.cleared.intersection(all);
        let sources = match s.flavor {
            Flavor::Active => all.minus(before),
            Flavor::Inert => VertexSet::singleton(v),
        };
        let unguarded = all.minus(prev.guarded);
        let reached = g.reachable_within(sources, unguarded);
        let overrun = if opts.literal_paths {
            reached.union(g.boundary_set(reached)).intersection(before).without(v)
        } else {
            reached.intersection(before)
        };
        let expected = before.minus(overrun).with(v);
        let kept = cur.cleared.intersection(overrun);
        if !kept.is_empty() {
            report.violations.push(Violation::Recontaminated { step: i, vertices: kept });
        }
        let dropped = expected.minus(cur.cleared);
        if !dropped.is_empty() {
            report.violations.push(Violation::DroppedSafe { step: i, vertices: dropped });
        }
    }
    report
}

/// Clears `order[0..]` one by one, guarding the inner boundary of the
/// cleared set in `h` after each move.  The guard sets seal the cleared
/// region in `h`, hence in every subgraph of `h`, so the strategy is valid
/// for any input `h` was built from.
fn strategy_from_clearing(h: &Graph, order: &[Vertex], flavor: Flavor) -> SearchStrategy {
    let mut steps = Vec::with_capacity(order.len() + 1);
    let mut cleared = VertexSet::default();
    steps.push(Step { cleared, guarded: cleared });
    for &v in order {
        cleared.insert(v);
        steps.push(Step { cleared, guarded: h.cut_set(cleared) });
    }
    SearchStrategy { flavor, steps }
}

/// Active strategy from an interval supergraph representation: clears
/// vertices in left-endpoint order, guarding the cleared set's inner
/// boundary in the interval graph.
///
/// Each vertex stays guarded from its own step until the step of its last
/// interval-graph neighbor, so the guard-set sizes are exactly the
/// representation's coverages and the cost equals `r.icost()`; the settled
/// guard sets stay below `r.wid()` and the mid-move peak reaches it exactly
/// for greedy-built representations.
pub fn active_from_representation(g: &Graph, r: &CanonicalRepr) -> Result<SearchStrategy, SearchError> {
    let issues = r.canonical_violations();
    if !issues.is_empty() {
        return Err(SearchError::NotCanonical(issues.join("; ")));
    }
    if r.n() != g.n() {
        return Err(SearchError::NotSupergraph);
    }
    let h = r.to_interval_graph();
    if !h.is_supergraph_of(g) {
        return Err(SearchError::NotSupergraph);
    }
    let order = r.left_ordering();
    Ok(strategy_from_clearing(&h, order.as_slice(), Flavor::Active))
}

/// Inert strategy from an elimination order: clears vertices in reverse
/// elimination order, guarding the cleared set's inner boundary in the
/// filled (chordal) graph.
///
/// The cost is the number of filled-graph edges counted with multiplicity
/// one per step a vertex stays on the boundary; it is at least
/// `|E| + fill`, with equality exactly when the filled graph reads off as
/// an interval representation along the clearing order.
pub fn inert_from_elimination(g: &Graph, elim: &VertexOrdering) -> Result<SearchStrategy, SearchError> {
    if elim.n() != g.n() {
        return Err(SearchError::OrderingMismatch);
    }
    let run = eliminate(g, elim);
    let order: Vec<Vertex> = elim.as_slice().iter().rev().copied().collect();
    Ok(strategy_from_clearing(&run.filled, &order, Flavor::Inert))
}
