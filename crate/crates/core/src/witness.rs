//! Witness family separating width-optimal from cost-optimal completions.
//!
//! The construction takes four vertex blocks A, B, B', C with |A| = a,
//! |B| = |B'| = b, |C| = c, where 1 <= a < b < c and a*c > b*b, and joins
//! every pair of vertices except those across A x C and across B x B'.
//! Exactly two ways exist to complete it into a minimal chordal (in fact
//! interval) supergraph: add all of A x C, or add all of B x B'.  The first
//! is the unique width-optimal completion but pays a*c extra edges; the
//! second pays only b*b but forces a larger clique.  The product constraint
//! makes the two optima land on different supergraphs, so the completion
//! frontier has at least two points.

use crate::error::WitnessError;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::solvers::{clique_fill_frontier, width_cost_frontier, Limits, ParetoFrontier};

/// Validated block sizes for the witness construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessSpec {
    a: usize,
    b: usize,
    c: usize,
}

impl WitnessSpec {
    /// Requires `1 <= a < b < c` and `a*c > b*b`.
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self, WitnessError> {
        if a < 1 || a >= b || b >= c {
            return Err(WitnessError::NotStrictlyIncreasing { a, b, c });
        }
        if a * c <= b * b {
            return Err(WitnessError::ProductTooSmall {
                ac: a * c,
                bsq: b * b,
            });
        }
        Ok(WitnessSpec { a, b, c })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn c(&self) -> usize {
        self.c
    }

    /// Total vertex count `a + 2b + c`.
    pub fn n(&self) -> usize {
        self.a + 2 * self.b + self.c
    }
}

impl std::fmt::Display for WitnessSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "W({},{},{})", self.a, self.b, self.c)
    }
}

/// The four vertex blocks, laid out consecutively: A, then B, then B',
/// then C.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    A,
    B,
    BPrime,
    C,
}

impl std::fmt::Display for Block {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Block::A => write!(f, "A"),
            Block::B => write!(f, "B"),
            Block::BPrime => write!(f, "B'"),
            Block::C => write!(f, "C"),
        }
    }
}

/// The witness graph together with its block labeling.
#[derive(Clone, Debug)]
pub struct Witness {
    spec: WitnessSpec,
    graph: Graph,
}

/// Which of the two missing pair sets a completion fills in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionMode {
    /// Add every edge across A x C.
    Ac,
    /// Add every edge across B x B'.
    Bb,
}

impl std::fmt::Display for CompletionMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CompletionMode::Ac => write!(f, "AC"),
            CompletionMode::Bb => write!(f, "BB"),
        }
    }
}

/// Builds the witness graph: all pairs adjacent except across A x C and
/// across B x B'.
pub fn build_witness(spec: WitnessSpec) -> Witness {
    let n = spec.n();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if !is_missing_pair(spec, u, v) {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::from_edges(n, &edges).expect("witness sizes are pre-validated");
    Witness { spec, graph }
}

fn is_missing_pair(spec: WitnessSpec, u: Vertex, v: Vertex) -> bool {
    let (bu, bv) = (block_of_spec(spec, u), block_of_spec(spec, v));
    matches!(
        (bu, bv),
        (Block::A, Block::C) | (Block::C, Block::A) | (Block::B, Block::BPrime) | (Block::BPrime, Block::B)
    )
}

fn block_of_spec(spec: WitnessSpec, v: Vertex) -> Block {
    assert!(v >= 1 && v <= spec.n(), "vertex {} outside witness", v);
    if v <= spec.a {
        Block::A
    } else if v <= spec.a + spec.b {
        Block::B
    } else if v <= spec.a + 2 * spec.b {
        Block::BPrime
    } else {
        Block::C
    }
}

impl Witness {
    pub fn spec(&self) -> WitnessSpec {
        self.spec
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn block_of(&self, v: Vertex) -> Block {
        block_of_spec(self.spec, v)
    }

    pub fn vertices_in(&self, block: Block) -> VertexSet {
        self.graph
            .vertices()
            .filter(|&v| self.block_of(v) == block)
            .collect()
    }

    /// The non-adjacent pairs, A x C first, then B x B', each in ascending
    /// order.  These are the only candidate fill edges.
    pub fn missing_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let mut pairs = Vec::new();
        for block_pair in [(Block::A, Block::C), (Block::B, Block::BPrime)] {
            for u in self.vertices_in(block_pair.0).iter() {
                for v in self.vertices_in(block_pair.1).iter() {
                    pairs.push((u.min(v), u.max(v)));
                }
            }
        }
        pairs
    }
}

/// Adds every missing pair of the chosen mode and nothing else.
pub fn build_completion(w: &Witness, mode: CompletionMode) -> Graph {
    let (from, to) = match mode {
        CompletionMode::Ac => (Block::A, Block::C),
        CompletionMode::Bb => (Block::B, Block::BPrime),
    };
    let mut g = w.graph.clone();
    for u in w.vertices_in(from).iter() {
        for v in w.vertices_in(to).iter() {
            g = g
                .with_edge(u, v)
                .expect("missing pairs are valid and absent");
        }
    }
    g
}

/// Does `h[set]` induce a clique?
fn is_clique(h: &Graph, set: VertexSet) -> bool {
    set.iter()
        .all(|u| set.iter().all(|v| v == u || h.has_edge(u, v)))
}

/// The structural property the enumeration checks on each minimal chordal
/// supergraph: each of the two block unions induces either a clique or two
/// cliques with no edges between them.
fn blocks_all_or_nothing(w: &Witness, h: &Graph) -> bool {
    for (x, y) in [(Block::A, Block::C), (Block::B, Block::BPrime)] {
        let (sx, sy) = (w.vertices_in(x), w.vertices_in(y));
        if !is_clique(h, sx) || !is_clique(h, sy) {
            return false;
        }
        let crossing = sx
            .iter()
            .flat_map(|u| sy.iter().map(move |v| (u, v)))
            .filter(|&(u, v)| h.has_edge(u, v))
            .count();
        let complete = sx.len() * sy.len();
        if crossing != 0 && crossing != complete {
            return false;
        }
    }
    true
}

/// Is `h` (a chordal supergraph of the witness) minimal, i.e. does removing
/// any single added edge break chordality?
fn is_minimal_chordal(w: &Witness, h: &Graph) -> bool {
    debug_assert!(h.is_chordal());
    w.missing_pairs()
        .iter()
        .filter(|&&(u, v)| h.has_edge(u, v))
        .all(|&(u, v)| !h.without_edge(u, v).unwrap().is_chordal())
}

/// Outcome of enumerating every chordal supergraph of a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AllOrNothingReport {
    /// Candidate fill-edge subsets enumerated (2^missing).
    pub candidates: u128,
    /// How many candidates were chordal.
    pub chordal: usize,
    /// How many chordal candidates were minimal.
    pub minimal: usize,
    /// Every minimal candidate had both block unions all-or-nothing.
    pub all_or_nothing_holds: bool,
    /// The minimal candidates were exactly the two canonical completions.
    pub minimal_are_the_two_completions: bool,
}

/// Enumerates every subset of the missing pairs, keeps the chordal ones,
/// filters those down to the minimal ones (removing any added edge breaks
/// chordality), and checks the block structure of each.  Exponential in
/// `a*c + b*b`: guarded by `limit` (itself capped at 2^40, far beyond
/// anything that can finish).
pub fn verify_all_or_nothing(w: &Witness, limit: u128) -> Result<AllOrNothingReport, WitnessError> {
    let limit = limit.min(1 << 40);
    let pairs = w.missing_pairs();
    let needed = 1u128
        .checked_shl(pairs.len() as u32)
        .ok_or(WitnessError::EnumerationTooLarge {
            needed: u128::MAX,
            limit,
        })?;
    if needed > limit {
        return Err(WitnessError::EnumerationTooLarge { needed, limit });
    }

    let ac_count = w.vertices_in(Block::A).len() * w.vertices_in(Block::C).len();
    let ac_mask = (1u64 << ac_count) - 1;
    let full_mask = if pairs.len() == 64 {
        u64::MAX
    } else {
        (1u64 << pairs.len()) - 1
    };
    let bb_mask = full_mask & !ac_mask;

    let mut report = AllOrNothingReport {
        candidates: needed,
        chordal: 0,
        minimal: 0,
        all_or_nothing_holds: true,
        minimal_are_the_two_completions: true,
    };
    let mut seen_ac = false;
    let mut seen_bb = false;
    for bits in 0..needed as u64 {
        let mut h = w.graph.clone();
        for (s, &(u, v)) in pairs.iter().enumerate() {
            if bits >> s & 1 == 1 {
                h = h.with_edge(u, v)?;
            }
        }
        if !h.is_chordal() {
            continue;
        }
        report.chordal += 1;
        if !is_minimal_chordal(w, &h) {
            continue;
        }
        report.minimal += 1;
        if !blocks_all_or_nothing(w, &h) {
            report.all_or_nothing_holds = false;
        }
        if bits == ac_mask {
            seen_ac = true;
        } else if bits == bb_mask {
            seen_bb = true;
        } else {
            report.minimal_are_the_two_completions = false;
        }
    }
    if !(seen_ac && seen_bb) {
        report.minimal_are_the_two_completions = false;
    }
    Ok(report)
}

/// Targeted form of the same checks for witnesses too large to enumerate:
/// the given completion must be chordal, minimal, and block-structured.
pub fn completion_passes_targeted_checks(w: &Witness, mode: CompletionMode) -> bool {
    let h = build_completion(w, mode);
    h.is_chordal() && is_minimal_chordal(w, &h) && blocks_all_or_nothing(w, &h)
}

/// Both completion frontiers of a witness, with the two spread checks.
#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub spec: WitnessSpec,
    pub n: usize,
    pub m: usize,
    /// Frontier of interval completions (width bound vs. edge cost).
    pub interval_frontier: ParetoFrontier,
    /// Frontier of chordal completions (clique bound vs. edge cost).
    pub chordal_frontier: ParetoFrontier,
    /// The interval frontier has at least two points, so no single interval
    /// supergraph attains both the minimum width and the minimum cost.
    pub interval_spread: bool,
    /// Same for chordal completions.
    pub chordal_spread: bool,
}

impl OrthogonalityReport {
    pub fn holds(&self) -> bool {
        self.interval_spread && self.chordal_spread
    }
}

fn frontier_is_spread(f: &ParetoFrontier) -> bool {
    match (f.points.first(), f.points.last()) {
        (Some(lo), Some(hi)) => lo.k < hi.k && lo.cost > hi.cost,
        _ => false,
    }
}

/// Computes both frontiers of the witness and checks that each is spread:
/// the width-optimal point costs strictly more than the cost optimum, and
/// the cost-optimal point is strictly wider than the width optimum.
pub fn verify_orthogonality(
    spec: WitnessSpec,
    limits: &Limits,
) -> Result<OrthogonalityReport, WitnessError> {
    let w = build_witness(spec);
    let interval_frontier = width_cost_frontier(w.graph(), limits)?;
    let chordal_frontier = clique_fill_frontier(w.graph(), limits)?;
    Ok(OrthogonalityReport {
        spec,
        n: w.graph().n(),
        m: w.graph().m(),
        interval_spread: frontier_is_spread(&interval_frontier),
        chordal_spread: frontier_is_spread(&chordal_frontier),
        interval_frontier,
        chordal_frontier,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::profile_exact;

    #[test]
    fn specs_are_validated() {
        assert!(WitnessSpec::new(2, 3, 5).is_ok());
        assert!(matches!(
            WitnessSpec::new(1, 2, 3),
            Err(WitnessError::ProductTooSmall { ac: 3, bsq: 4 })
        ));
        assert!(matches!(
            WitnessSpec::new(2, 2, 5),
            Err(WitnessError::NotStrictlyIncreasing { .. })
        ));
        assert!(matches!(
            WitnessSpec::new(0, 2, 5),
            Err(WitnessError::NotStrictlyIncreasing { .. })
        ));
        assert!(matches!(
            WitnessSpec::new(2, 3, 3),
            Err(WitnessError::NotStrictlyIncreasing { .. })
        ));
    }

    #[test]
    fn witness_2_3_5_has_the_documented_shape() {
        let w = build_witness(WitnessSpec::new(2, 3, 5).unwrap());
        let g = w.graph();
        assert_eq!(g.n(), 13);
        assert_eq!(g.m(), 59);
        // Blocks are consecutive: A = 1..2, B = 3..5, B' = 6..8, C = 9..13.
        assert_eq!(w.block_of(1), Block::A);
        assert_eq!(w.block_of(3), Block::B);
        assert_eq!(w.block_of(6), Block::BPrime);
        assert_eq!(w.block_of(9), Block::C);
        assert_eq!(w.vertices_in(Block::C).len(), 5);
        // No A-C and no B-B' adjacency; everything else adjacent.
        for u in 1..=13 {
            for v in u + 1..=13usize {
                let blocks = (w.block_of(u), w.block_of(v));
                let expect_absent = matches!(
                    blocks,
                    (Block::A, Block::C) | (Block::B, Block::BPrime)
                );
                assert_eq!(g.has_edge(u, v), !expect_absent, "pair ({}, {})", u, v);
            }
        }
        assert_eq!(w.missing_pairs().len(), 2 * 5 + 3 * 3);
    }

    #[test]
    fn both_completions_are_chordal_interval_supergraphs() {
        let w = build_witness(WitnessSpec::new(2, 3, 5).unwrap());
        let limits = Limits::default();

        let ac = build_completion(&w, CompletionMode::Ac);
        assert_eq!(ac.m(), 69);
        assert!(ac.is_chordal());
        assert!(ac.is_supergraph_of(w.graph()));
        assert_eq!(ac.max_clique_size(), 10);
        // Interval graphs are exactly the graphs whose optimal completion
        // cost equals their own edge count.
        assert_eq!(profile_exact(&ac, &limits).unwrap().value, ac.m());

        let bb = build_completion(&w, CompletionMode::Bb);
        assert_eq!(bb.m(), 68);
        assert!(bb.is_chordal());
        assert!(bb.is_supergraph_of(w.graph()));
        assert_eq!(bb.max_clique_size(), 11);
        assert_eq!(profile_exact(&bb, &limits).unwrap().value, bb.m());
    }

    #[test]
    fn enumeration_confirms_the_two_minimal_completions() {
        // Small enough to enumerate: 1*5 + 2*2 = 9 missing pairs.
        let w = build_witness(WitnessSpec::new(1, 2, 5).unwrap());
        let report = verify_all_or_nothing(&w, 1 << 20).unwrap();
        assert_eq!(report.candidates, 512);
        assert!(report.chordal >= 2);
        assert_eq!(report.minimal, 2);
        assert!(report.all_or_nothing_holds);
        assert!(report.minimal_are_the_two_completions);
    }

    #[test]
    fn enumeration_respects_the_limit() {
        let w = build_witness(WitnessSpec::new(2, 3, 5).unwrap());
        assert!(matches!(
            verify_all_or_nothing(&w, 1000),
            Err(WitnessError::EnumerationTooLarge {
                needed: 524288,
                limit: 1000
            })
        ));
    }

    #[test]
    fn targeted_checks_pass_where_enumeration_is_too_big() {
        let w = build_witness(WitnessSpec::new(2, 3, 5).unwrap());
        assert!(completion_passes_targeted_checks(&w, CompletionMode::Ac));
        assert!(completion_passes_targeted_checks(&w, CompletionMode::Bb));
    }

    #[test]
    fn mixing_the_two_fills_is_not_minimal() {
        // All B x B' edges plus a single A-C edge: still chordal, but the
        // extra edge can be removed without breaking chordality.
        let w = build_witness(WitnessSpec::new(2, 3, 5).unwrap());
        let (u, v) = w.missing_pairs()[0];
        assert_eq!(w.block_of(u), Block::A);
        assert_eq!(w.block_of(v), Block::C);
        let mixed = build_completion(&w, CompletionMode::Bb)
            .with_edge(u, v)
            .unwrap();
        assert!(mixed.is_chordal());
        assert!(mixed.without_edge(u, v).unwrap().is_chordal());
        assert!(!is_minimal_chordal(&w, &mixed));
    }

    #[test]
    fn orthogonality_frontiers_of_w_2_3_5() {
        let spec = WitnessSpec::new(2, 3, 5).unwrap();
        let report = verify_orthogonality(spec, &Limits::default()).unwrap();
        assert_eq!(report.n, 13);
        assert_eq!(report.m, 59);
        assert_eq!(report.interval_frontier.pairs(), vec![(10, 69), (11, 68)]);
        assert_eq!(report.chordal_frontier.pairs(), vec![(10, 69), (11, 68)]);
        assert!(report.interval_spread);
        assert!(report.chordal_spread);
        assert!(report.holds());
    }

    #[test]
    fn orthogonality_matches_the_difference_formulas() {
        // For every valid spec the width optimum is a+b+c and the cost
        // optimum is |E| + min(a*c, b*b).
        for (a, b, c) in [(1, 2, 5), (1, 2, 6), (2, 3, 5)] {
            let spec = WitnessSpec::new(a, b, c).unwrap();
            let report = verify_orthogonality(spec, &Limits::default()).unwrap();
            let first = report.interval_frontier.points.first().unwrap();
            let last = report.interval_frontier.points.last().unwrap();
            assert_eq!(first.k, a + b + c, "{}", spec);
            assert_eq!(last.cost, report.m + (a * c).min(b * b), "{}", spec);
            assert!(report.holds(), "{}", spec);
        }
    }
}
