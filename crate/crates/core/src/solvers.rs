//! Exact solvers: optimal-ordering dynamic programs over vertex subsets.
//!
//! Layout parameters use the cut of a prefix (vertices inside with a
//! neighbor outside). For any ordering f with prefixes P_1, ..., P_n, the
//! greedy representation of f has edge count sum_i cut(P_i) and width
//! 1 + max_i cut(P_i), so the minimizers below double as representation
//! witnesses. Elimination parameters track the neighborhood of each vertex
//! at its elimination time, contracting through already-eliminated vertices.

use crate::error::SolverError;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::interval::{greedy_representation, CanonicalRepr, VertexOrdering};

/// Input-size ceilings for the exact solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest n for single-parameter solvers.
    pub single: usize,
    /// Largest n for full frontier sweeps.
    pub frontier: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { single: 20, frontier: 15 }
    }
}

impl Limits {
    /// Both ceilings set to the same value.
    pub fn uniform(n: usize) -> Self {
        Limits { single: n, frontier: n }
    }
}

// Memory hard caps: the tables below take ~6 bytes per subset.
const HARD_SINGLE: usize = 24;
const HARD_FRONTIER: usize = 20;

/// An exact optimum with the ordering that attains it; ordering-based
/// parameters also carry the greedy representation of the witness.
#[derive(Clone, Debug)]
pub struct SolverResult {
    pub value: usize,
    pub witness: VertexOrdering,
    pub representation: Option<CanonicalRepr>,
}

/// Which two-objective sweep a frontier came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrontierKind {
    /// Interval completion: cap the representation width, minimize edges.
    WidthCost,
    /// Chordal completion: cap the clique size, minimize edges.
    CliqueFill,
}

/// One non-dominated point: the best cost under cap k.
#[derive(Clone, Debug)]
pub struct FrontierPoint {
    pub k: usize,
    pub cost: usize,
    pub witness: VertexOrdering,
}

/// Non-dominated (cap, cost) pairs, caps increasing and costs strictly
/// decreasing; the first cap is the smallest feasible one and the last cost
/// is the unconstrained optimum.
#[derive(Clone, Debug)]
pub struct ParetoFrontier {
    pub kind: FrontierKind,
    pub points: Vec<FrontierPoint>,
}

impl ParetoFrontier {
    /// The points as bare (cap, cost) pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.points.iter().map(|p| (p.k, p.cost)).collect()
    }
}

fn admit(g: &Graph, limit: usize) -> Result<usize, SolverError> {
    if g.n() > limit {
        Err(SolverError::Capacity { n: g.n(), limit })
    } else {
        Ok(g.n())
    }
}

/// cut(mask) for every subset, indexed by bitmask.
fn cuts_table(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut cuts = vec![0u8; 1usize << n];
    for (mask, slot) in cuts.iter_mut().enumerate() {
        let s = VertexSet::from_bits(mask as u64);
        *slot = g.cut_size(s) as u8;
    }
    cuts
}

/// Rebuilds the ordering from per-subset last-element choices.
fn reconstruct(choice: &[u8], n: usize) -> VertexOrdering {
    let mut mask = (1usize << n) - 1;
    let mut rev = Vec::with_capacity(n);
    while mask != 0 {
        let v = choice[mask] as usize;
        debug_assert!(v >= 1);
        rev.push(v);
        mask ^= 1 << (v - 1);
    }
    rev.reverse();
    VertexOrdering::new(rev).expect("choices form a permutation")
}

/// Sum-of-cuts dynamic program. `cap` limits the cut of admissible prefixes
/// (None = unconstrained). Returns (cost, ordering); cost is None when no
/// ordering satisfies the cap.
fn min_cut_sum(cuts: &[u8], n: usize, cap: Option<u8>) -> Option<(usize, VertexOrdering)> {
    let size = 1usize << n;
    let mut dp = vec![u32::MAX; size];
    let mut choice = vec![0u8; size];
    dp[0] = 0;
    for mask in 1..size {
        if let Some(cap) = cap {
            if cuts[mask] > cap {
                continue;
            }
        }
        let mut best = u32::MAX;
        let mut who = 0u8;
        let mut bits = mask as u64;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = dp[mask ^ (1 << i)];
            if prev < best {
                best = prev;
                who = i as u8 + 1;
            }
        }
        if best != u32::MAX {
            dp[mask] = best + cuts[mask] as u32;
            choice[mask] = who;
        }
    }
    if dp[size - 1] == u32::MAX {
        None
    } else {
        Some((dp[size - 1] as usize, reconstruct(&choice, n)))
    }
}

/// Max-of-cuts dynamic program: the vertex separation number.
fn min_cut_max(cuts: &[u8], n: usize) -> (usize, VertexOrdering) {
    let size = 1usize << n;
    let mut dp = vec![u32::MAX; size];
    let mut choice = vec![0u8; size];
    dp[0] = 0;
    for mask in 1..size {
        let mut best = u32::MAX;
        let mut who = 0u8;
        let mut bits = mask as u64;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = dp[mask ^ (1 << i)];
            if prev < best {
                best = prev;
                who = i as u8 + 1;
            }
        }
        dp[mask] = best.max(cuts[mask] as u32);
        choice[mask] = who;
    }
    (dp[size - 1] as usize, reconstruct(&choice, n))
}

/// Minimum sum of prefix cuts: the fewest edges of any interval supergraph.
pub fn profile_exact(g: &Graph, limits: &Limits) -> Result<SolverResult, SolverError> {
    let n = admit(g, limits.single.min(HARD_SINGLE))?;
    let cuts = cuts_table(g);
    let (value, witness) = min_cut_sum(&cuts, n, None).expect("unconstrained is feasible");
    let representation = greedy_representation(g, &witness);
    Ok(SolverResult { value, witness, representation: Some(representation) })
}

/// Minimum over orderings of the largest prefix cut.
pub fn pathwidth_exact(g: &Graph, limits: &Limits) -> Result<SolverResult, SolverError> {
    let n = admit(g, limits.single.min(HARD_SINGLE))?;
    let cuts = cuts_table(g);
    let (value, witness) = min_cut_max(&cuts, n);
    let representation = greedy_representation(g, &witness);
    Ok(SolverResult { value, witness, representation: Some(representation) })
}

/// Smallest width of any canonical interval representation whose graph
/// contains g; one above the pathwidth (zero for the empty graph).
pub fn iwid_exact(g: &Graph, limits: &Limits) -> Result<SolverResult, SolverError> {
    let mut res = pathwidth_exact(g, limits)?;
    if g.n() > 0 {
        res.value += 1;
    }
    Ok(res)
}

/// Best completion cost per width cap: for each k from the optimal width
/// upward, the fewest interval-supergraph edges among representations of
/// width at most k, until the unconstrained optimum is reached.
pub fn width_cost_frontier(g: &Graph, limits: &Limits) -> Result<ParetoFrontier, SolverError> {
    let n = admit(g, limits.frontier.min(HARD_FRONTIER))?;
    if n == 0 {
        let witness = VertexOrdering::identity(0);
        return Ok(ParetoFrontier {
            kind: FrontierKind::WidthCost,
            points: vec![FrontierPoint { k: 0, cost: 0, witness }],
        });
    }
    let cuts = cuts_table(g);
    let (pw, _) = min_cut_max(&cuts, n);
    let (profile, _) = min_cut_sum(&cuts, n, None).expect("unconstrained is feasible");
    let mut points = Vec::new();
    for k in pw + 1..=n {
        let (cost, witness) =
            min_cut_sum(&cuts, n, Some((k - 1) as u8)).expect("cap at least the optimal width");
        if points.last().map_or(true, |p: &FrontierPoint| cost < p.cost) {
            points.push(FrontierPoint { k, cost, witness });
        }
        if cost == profile {
            break;
        }
    }
    Ok(ParetoFrontier { kind: FrontierKind::WidthCost, points })
}

/// Neighbors of v after contracting `through`: vertices outside
/// `through` + v that are adjacent to v or reach it via `through`.
fn contracted_neighbors(g: &Graph, through: u64, v: Vertex) -> u64 {
    let vbit = 1u64 << (v - 1);
    let mut seen = vbit;
    let mut frontier = vbit;
    let mut out = 0u64;
    while frontier != 0 {
        let mut nb = 0u64;
        let mut bits = frontier;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            nb |= g.neighbors(u).bits();
        }
        out |= nb & !through & !vbit;
        frontier = nb & through & !seen;
        seen |= frontier;
    }
    out
}

/// Missing edges among the contracted neighbors of v: the fill created by
/// eliminating v when `through` is already gone.
fn fill_created(g: &Graph, through: u64, v: Vertex) -> u32 {
    let bag = contracted_neighbors(g, through, v);
    let mut total = 0u32;
    let mut xs = bag;
    while xs != 0 {
        let x = xs.trailing_zeros() as usize + 1;
        xs &= xs - 1;
        // xs holds bag members above x, so each pair is counted once.
        let linked = contracted_neighbors(g, through, x);
        total += (xs & !linked).count_ones();
    }
    total
}

/// Elimination dynamic program; masks are eliminated sets, transitions
/// eliminate one more vertex last. `combine` folds the bag of that vertex
/// into the subproblem value; `cap` limits admissible bag sizes.
fn elimination_dp(
    g: &Graph,
    combine: impl Fn(u32, u32) -> u32,
    cap: Option<u32>,
) -> Option<(usize, VertexOrdering)> {
    let n = g.n();
    let size = 1usize << n;
    let mut dp = vec![u32::MAX; size];
    let mut choice = vec![0u8; size];
    dp[0] = 0;
    for mask in 1..size {
        let mut best = u32::MAX;
        let mut who = 0u8;
        let mut bits = mask as u64;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let sub = mask ^ (1 << i);
            if dp[sub] == u32::MAX {
                continue;
            }
            let v = i + 1;
            let through = sub as u64;
            let bag_size = contracted_neighbors(g, through, v).count_ones();
            if let Some(cap) = cap {
                if bag_size > cap {
                    continue;
                }
            }
            let cand = combine(dp[sub], bag_size);
            if cand < best {
                best = cand;
                who = i as u8 + 1;
            }
        }
        if best != u32::MAX {
            dp[mask] = best;
            choice[mask] = who;
        }
    }
    if dp[size - 1] == u32::MAX {
        None
    } else {
        Some((dp[size - 1] as usize, reconstruct(&choice, n)))
    }
}

/// Minimum over elimination orders of the largest bag.
pub fn treewidth_exact(g: &Graph, limits: &Limits) -> Result<SolverResult, SolverError> {
    admit(g, limits.single.min(HARD_SINGLE))?;
    let (value, witness) =
        elimination_dp(g, |sub, bag| sub.max(bag), None).expect("unconstrained is feasible");
    Ok(SolverResult { value, witness, representation: None })
}

/// Minimum number of added edges to make g chordal.
pub fn fillin_exact(g: &Graph, limits: &Limits) -> Result<SolverResult, SolverError> {
    admit(g, limits.single.min(HARD_SINGLE))?;
    let (value, witness) = fill_dp(g, None).expect("unconstrained is feasible");
    Ok(SolverResult { value, witness, representation: None })
}

/// Fill-sum dynamic program with an optional bag-size cap.
fn fill_dp(g: &Graph, cap: Option<u32>) -> Option<(usize, VertexOrdering)> {
    let n = g.n();
    let size = 1usize << n;
    let mut dp = vec![u32::MAX; size];
    let mut choice = vec![0u8; size];
    dp[0] = 0;
    for mask in 1..size {
        let mut best = u32::MAX;
        let mut who = 0u8;
        let mut bits = mask as u64;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let sub = mask ^ (1 << i);
            if dp[sub] == u32::MAX {
                continue;
            }
            let v = i + 1;
            let through = sub as u64;
            if let Some(cap) = cap {
                if contracted_neighbors(g, through, v).count_ones() > cap {
                    continue;
                }
            }
            let cand = dp[sub] + fill_created(g, through, v);
            if cand < best {
                best = cand;
                who = i as u8 + 1;
            }
        }
        if best != u32::MAX {
            dp[mask] = best;
            choice[mask] = who;
        }
    }
    if dp[size - 1] == u32::MAX {
        None
    } else {
        Some((dp[size - 1] as usize, reconstruct(&choice, n)))
    }
}

/// Best chordal completion cost per clique cap: for each k from one above
/// the treewidth upward, the fewest total edges (original + fill) among
/// chordal supergraphs with maximum clique at most k, until the
/// unconstrained optimum is reached.
pub fn clique_fill_frontier(g: &Graph, limits: &Limits) -> Result<ParetoFrontier, SolverError> {
    let n = admit(g, limits.frontier.min(HARD_FRONTIER))?;
    if n == 0 {
        let witness = VertexOrdering::identity(0);
        return Ok(ParetoFrontier {
            kind: FrontierKind::CliqueFill,
            points: vec![FrontierPoint { k: 0, cost: 0, witness }],
        });
    }
    let m = g.m();
    let (tw, _) = elimination_dp(g, |sub, bag| sub.max(bag), None).expect("feasible");
    let (mfi, _) = fill_dp(g, None).expect("feasible");
    let mut points = Vec::new();
    for k in tw + 1..=n {
        let (fill, witness) =
            fill_dp(g, Some((k - 1) as u32)).expect("cap at least the optimal bag size");
        let cost = m + fill;
        if points.last().map_or(true, |p: &FrontierPoint| cost < p.cost) {
            points.push(FrontierPoint { k, cost, witness });
        }
        if fill == mfi {
            break;
        }
    }
    Ok(ParetoFrontier { kind: FrontierKind::CliqueFill, points })
}

/// Outcome of running one elimination order to completion.
#[derive(Clone, Debug)]
pub struct Elimination {
    /// The input plus all fill edges: a chordal supergraph.
    pub filled: Graph,
    pub fill_count: usize,
    pub max_bag: usize,
}

/// Simulates an elimination order: each vertex in turn connects its
/// still-present neighbors into a clique and leaves.
pub fn eliminate(g: &Graph, order: &VertexOrdering) -> Elimination {
    assert_eq!(g.n(), order.n(), "ordering must cover the graph");
    let n = g.n();
    let mut adj: Vec<u64> = (1..=n).map(|v| g.neighbors(v).bits()).collect();
    let mut gone = 0u64;
    let mut fill_count = 0;
    let mut max_bag = 0;
    for p in 1..=n {
        let v = order.vertex_at(p);
        let bag = adj[v - 1] & !gone;
        max_bag = max_bag.max(bag.count_ones() as usize);
        let mut xs = bag;
        while xs != 0 {
            let x = xs.trailing_zeros() as usize + 1;
            xs &= xs - 1;
            let mut ys = xs & !adj[x - 1];
            while ys != 0 {
                let y = ys.trailing_zeros() as usize + 1;
                ys &= ys - 1;
                adj[x - 1] |= 1u64 << (y - 1);
                adj[y - 1] |= 1u64 << (x - 1);
                fill_count += 1;
            }
        }
        gone |= 1u64 << (v - 1);
    }
    let mut edges = Vec::new();
    for u in 1..=n {
        let mut bits = adj[u - 1] & (!0u64).checked_shl(u as u32).unwrap_or(0);
        while bits != 0 {
            let v = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            edges.push((u, v));
        }
    }
    let filled = Graph::from_edges(n, &edges).expect("fill keeps the graph simple");
    Elimination { filled, fill_count, max_bag }
}

/// Sum of prefix cuts of an ordering: the greedy representation's edge count.
pub fn ordering_cost(g: &Graph, f: &VertexOrdering) -> usize {
    prefix_cuts(g, f).into_iter().sum()
}

/// Largest prefix cut of an ordering: one below the greedy width.
pub fn ordering_width(g: &Graph, f: &VertexOrdering) -> usize {
    prefix_cuts(g, f).into_iter().max().unwrap_or(0)
}

fn prefix_cuts(g: &Graph, f: &VertexOrdering) -> Vec<usize> {
    assert_eq!(g.n(), f.n(), "ordering must cover the graph");
    let mut prefix = VertexSet::EMPTY;
    let mut cuts = Vec::with_capacity(g.n());
    for p in 1..=g.n() {
        prefix.insert(f.vertex_at(p));
        cuts.push(g.cut_size(prefix));
    }
    cuts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::naive;

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
        let mut e = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn profile_matches_known_values() {
        assert_eq!(profile_exact(&path(4), &lim()).unwrap().value, 3);
        assert_eq!(profile_exact(&cycle(4), &lim()).unwrap().value, 5);
        assert_eq!(profile_exact(&star(3), &lim()).unwrap().value, 3);
        assert_eq!(profile_exact(&complete(4), &lim()).unwrap().value, 6);
        assert_eq!(profile_exact(&Graph::new(0).unwrap(), &lim()).unwrap().value, 0);
    }

    #[test]
    fn profile_witness_attains_value() {
        for g in [path(5), cycle(5), star(4), cycle(6)] {
            let res = profile_exact(&g, &lim()).unwrap();
            assert_eq!(ordering_cost(&g, &res.witness), res.value);
            let r = res.representation.unwrap();
            assert_eq!(r.icost(), res.value);
            assert!(r.to_interval_graph().is_supergraph_of(&g));
        }
    }

    #[test]
    fn pathwidth_matches_known_values() {
        assert_eq!(pathwidth_exact(&path(5), &lim()).unwrap().value, 1);
        assert_eq!(pathwidth_exact(&cycle(4), &lim()).unwrap().value, 2);
        assert_eq!(pathwidth_exact(&complete(4), &lim()).unwrap().value, 3);
        assert_eq!(pathwidth_exact(&star(4), &lim()).unwrap().value, 1);
    }

    #[test]
    fn iwid_is_pathwidth_plus_one() {
        for g in [path(5), cycle(5), star(4), complete(4)] {
            let pw = pathwidth_exact(&g, &lim()).unwrap().value;
            let res = iwid_exact(&g, &lim()).unwrap();
            assert_eq!(res.value, pw + 1);
            assert_eq!(res.representation.unwrap().wid(), res.value);
        }
        assert_eq!(iwid_exact(&Graph::new(0).unwrap(), &lim()).unwrap().value, 0);
    }

    #[test]
    fn treewidth_and_fillin_match_known_values() {
        assert_eq!(treewidth_exact(&cycle(5), &lim()).unwrap().value, 2);
        assert_eq!(treewidth_exact(&complete(5), &lim()).unwrap().value, 4);
        assert_eq!(treewidth_exact(&star(4), &lim()).unwrap().value, 1);
        assert_eq!(fillin_exact(&cycle(4), &lim()).unwrap().value, 1);
        assert_eq!(fillin_exact(&cycle(6), &lim()).unwrap().value, 3);
        assert_eq!(fillin_exact(&path(6), &lim()).unwrap().value, 0);
    }

    #[test]
    fn elimination_witnesses_attain_values() {
        for g in [cycle(5), cycle(6), star(4), path(6)] {
            let tw = treewidth_exact(&g, &lim()).unwrap();
            let fi = fillin_exact(&g, &lim()).unwrap();
            let tw_run = eliminate(&g, &tw.witness);
            let fi_run = eliminate(&g, &fi.witness);
            assert_eq!(tw_run.max_bag, tw.value);
            assert_eq!(fi_run.fill_count, fi.value);
            assert!(fi_run.filled.is_chordal());
            assert!(fi_run.filled.is_supergraph_of(&g));
        }
    }

    #[test]
    fn agreement_with_brute_force_on_assorted_graphs() {
        let graphs = vec![
            path(6),
            cycle(6),
            star(5),
            complete(5),
            Graph::from_edges(6, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)])
                .unwrap(),
            Graph::from_edges(6, &[(1, 4), (2, 5), (3, 6)]).unwrap(),
            Graph::new(5).unwrap(),
        ];
        for g in graphs {
            assert_eq!(profile_exact(&g, &lim()).unwrap().value, naive::naive_profile(&g));
            assert_eq!(pathwidth_exact(&g, &lim()).unwrap().value, naive::naive_pathwidth(&g));
            assert_eq!(treewidth_exact(&g, &lim()).unwrap().value, naive::naive_treewidth(&g));
            assert_eq!(fillin_exact(&g, &lim()).unwrap().value, naive::naive_fillin(&g));
        }
    }

    #[test]
    fn width_cost_frontier_of_a_cycle() {
        // C_4: optimal width 3 already allows the optimal cost 5.
        let f = width_cost_frontier(&cycle(4), &lim()).unwrap();
        assert_eq!(f.pairs(), vec![(3, 5)]);
        // C_6: the frontier starts at the optimal width and ends at the
        // optimal cost.
        let f = width_cost_frontier(&cycle(6), &lim()).unwrap();
        let first = f.points.first().unwrap();
        let last = f.points.last().unwrap();
        assert_eq!(first.k, pathwidth_exact(&cycle(6), &lim()).unwrap().value + 1);
        assert_eq!(last.cost, profile_exact(&cycle(6), &lim()).unwrap().value);
        for w in f.points.windows(2) {
            assert!(w[0].k < w[1].k && w[0].cost > w[1].cost);
        }
    }

    #[test]
    fn frontier_witnesses_respect_caps() {
        for g in [cycle(6), star(4), complete(4)] {
            let f = width_cost_frontier(&g, &lim()).unwrap();
            for p in &f.points {
                assert_eq!(ordering_cost(&g, &p.witness), p.cost);
                assert!(ordering_width(&g, &p.witness) + 1 <= p.k);
                let r = greedy_representation(&g, &p.witness);
                assert!(r.wid() <= p.k);
                assert_eq!(r.icost(), p.cost);
            }
        }
    }

    #[test]
    fn clique_fill_frontier_of_a_cycle() {
        let f = clique_fill_frontier(&cycle(4), &lim()).unwrap();
        assert_eq!(f.pairs(), vec![(3, 5)]);
        for g in [cycle(6), star(4)] {
            let f = clique_fill_frontier(&g, &lim()).unwrap();
            let last = f.points.last().unwrap();
            assert_eq!(last.cost, g.m() + fillin_exact(&g, &lim()).unwrap().value);
            for p in &f.points {
                let run = eliminate(&g, &p.witness);
                assert!(run.max_bag + 1 <= p.k);
                assert_eq!(g.m() + run.fill_count, p.cost);
                assert!(run.filled.is_chordal());
                assert!(run.filled.max_clique_size() <= p.k);
            }
        }
    }

    #[test]
    fn capacity_errors() {
        let g = Graph::new(16).unwrap();
        let tight = Limits { single: 12, frontier: 9 };
        assert_eq!(
            profile_exact(&g, &tight).unwrap_err(),
            SolverError::Capacity { n: 16, limit: 12 }
        );
        assert_eq!(
            width_cost_frontier(&g, &tight).unwrap_err(),
            SolverError::Capacity { n: 16, limit: 9 }
        );
        assert!(profile_exact(&g, &Limits::uniform(16)).is_ok());
    }

    #[test]
    fn ordering_evaluators_match_greedy() {
        let g = cycle(5);
        for order in [vec![1, 2, 3, 4, 5], vec![3, 1, 4, 2, 5], vec![5, 4, 3, 2, 1]] {
            let f = VertexOrdering::new(order).unwrap();
            let r = greedy_representation(&g, &f);
            assert_eq!(ordering_cost(&g, &f), r.icost());
            assert_eq!(ordering_width(&g, &f) + 1, r.wid());
        }
    }
}
