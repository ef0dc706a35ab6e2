//! Brute-force reference solvers. Everything here enumerates all n!
//! orderings (or all vertex subsets) and is only meant to validate the fast
//! paths on tiny inputs.

use crate::graph::{Graph, Vertex};
use crate::interval::{greedy_representation, VertexOrdering};

/// Calls f on every permutation of 1..=n, via Heap's algorithm.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[Vertex])) {
    let mut items: Vec<Vertex> = (1..=n).collect();
    let mut c = vec![0usize; n];
    f(&items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(&items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn min_over_orderings(n: usize, mut score: impl FnMut(&[Vertex]) -> usize) -> usize {
    let mut best = score(&(1..=n).collect::<Vec<_>>());
    for_each_permutation(n, |order| best = best.min(score(order)));
    best
}

/// Sum of backward spans of an ordering: each vertex pays the distance from
/// its position back to the earliest position in its closed neighborhood.
pub fn span_cost(g: &Graph, order: &[Vertex]) -> usize {
    let n = g.n();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i + 1;
    }
    let mut total = 0;
    for v in g.vertices() {
        let earliest = g
            .neighbors(v)
            .iter()
            .map(|u| pos[u])
            .min()
            .unwrap_or(pos[v])
            .min(pos[v]);
        total += pos[v] - earliest;
    }
    total
}

/// Minimum span cost over all orderings.
pub fn naive_profile(g: &Graph) -> usize {
    min_over_orderings(g.n(), |order| span_cost(g, order))
}

/// Largest number of prefix vertices with a neighbor after the prefix,
/// maximized over the ordering's prefixes.
fn separation(g: &Graph, order: &[Vertex]) -> usize {
    let n = g.n();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i + 1;
    }
    let mut worst = 0;
    for i in 1..n {
        let mut count = 0;
        for &v in &order[..i] {
            if g.neighbors(v).iter().any(|u| pos[u] > i) {
                count += 1;
            }
        }
        worst = worst.max(count);
    }
    worst
}

/// Minimum separation over all orderings (the vertex separation number).
pub fn naive_pathwidth(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    min_over_orderings(g.n(), |order| separation(g, order))
}

/// Fill edges and largest elimination neighborhood of an elimination order,
/// by direct simulation on a copy of the adjacency.
pub fn eliminate_stats(g: &Graph, order: &[Vertex]) -> (usize, usize) {
    let n = g.n();
    let mut adj: Vec<u64> = (1..=n).map(|v| g.neighbors(v).bits()).collect();
    let mut gone = 0u64;
    let mut fill = 0;
    let mut max_bag = 0;
    for &v in order {
        let bag = adj[v - 1] & !gone;
        max_bag = max_bag.max(bag.count_ones() as usize);
        let mut xs = bag;
        while xs != 0 {
            let x = xs.trailing_zeros() as usize + 1;
            xs &= xs - 1;
            // xs now holds the bag members above x: each missing pair once.
            let mut ys = xs & !adj[x - 1];
            while ys != 0 {
                let y = ys.trailing_zeros() as usize + 1;
                ys &= ys - 1;
                adj[x - 1] |= 1u64 << (y - 1);
                adj[y - 1] |= 1u64 << (x - 1);
                fill += 1;
            }
        }
        gone |= 1u64 << (v - 1);
    }
    (fill, max_bag)
}

/// Minimum over orderings of the largest elimination neighborhood.
pub fn naive_treewidth(g: &Graph) -> usize {
    min_over_orderings(g.n(), |order| eliminate_stats(g, order).1)
}

/// Minimum number of fill edges over all elimination orders.
pub fn naive_fillin(g: &Graph) -> usize {
    min_over_orderings(g.n(), |order| eliminate_stats(g, order).0)
}

/// Chordality by exhaustive subset check: a graph is chordal exactly when no
/// vertex subset of size at least 4 induces a cycle.
pub fn naive_is_chordal(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 24, "subset enumeration needs a tiny graph");
    'subsets: for bits in 0u64..(1u64 << n) {
        if bits.count_ones() < 4 {
            continue;
        }
        let s = crate::graph::VertexSet::from_bits(bits);
        // An induced cycle has every degree 2 and is connected.
        let mut edge_count = 0;
        for v in s.iter() {
            let d = g.neighbors(v).intersection(s).len();
            if d != 2 {
                continue 'subsets;
            }
            edge_count += d;
        }
        let start = crate::graph::VertexSet::singleton(s.iter().next().unwrap());
        if g.reachable_within(start, s) == s && edge_count / 2 == s.len() {
            return false;
        }
    }
    true
}

/// Minimum over orderings of the width of the greedy representation.
pub fn naive_min_greedy_width(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    min_over_orderings(g.n(), |order| {
        let f = VertexOrdering::new(order.to_vec()).unwrap();
        greedy_representation(g, &f).wid()
    })
}

/// Minimum over orderings of the edge count of the greedy representation.
pub fn naive_min_greedy_cost(g: &Graph) -> usize {
    min_over_orderings(g.n(), |order| {
        let f = VertexOrdering::new(order.to_vec()).unwrap();
        greedy_representation(g, &f).icost()
    })
}
