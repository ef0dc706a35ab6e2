//! Undirected simple graphs on vertex set {1, ..., n} with bitmask adjacency.

use std::fmt;
use std::str::FromStr;

use crate::error::{GraphError, ParseError};

/// Vertices are 1-based ids.
pub type Vertex = usize;

/// Largest supported vertex count; sets are stored in a single machine word.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices; bit v-1 stands for vertex v.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 { VertexSet(u64::MAX) } else { VertexSet((1u64 << n) - 1) }
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << (v - 1));
    }

    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | 1u64 << (v - 1))
    }

    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An undirected simple graph. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on n vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from edges (u, v) with u < v; rejects loops, duplicates
    /// and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if u > v {
            return Err(GraphError::UnorderedEdge(u, v));
        }
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(GraphError::VertexOutOfRange(w, self.n));
            }
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.adj[u - 1] |= 1u64 << (v - 1);
        self.adj[v - 1] |= 1u64 << (u - 1);
        Ok(())
    }

    /// A copy with one more edge; endpoints may come in either order.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.add_edge_checked(u.min(v), u.max(v))?;
        Ok(g)
    }

    /// A copy without the edge between `u` and `v` (either order).  Removing
    /// an absent edge just returns an identical copy.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if w < 1 || w > self.n {
                return Err(GraphError::VertexOutOfRange(w, self.n));
            }
        }
        let mut g = self.clone();
        g.adj[u - 1] &= !(1u64 << (v - 1));
        g.adj[v - 1] &= !(1u64 << (u - 1));
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m());
        for u in self.vertices() {
            for v in self.neighbors(u).iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Vertices outside s with at least one neighbor inside s.
    pub fn boundary_set(&self, s: VertexSet) -> VertexSet {
        let mut reached = 0u64;
        for v in s.iter() {
            reached |= self.adj[v - 1];
        }
        VertexSet(reached & !s.bits())
    }

    /// Size of the boundary of s.
    pub fn boundary(&self, s: VertexSet) -> usize {
        self.boundary_set(s).len()
    }

    /// Vertices inside s with at least one neighbor outside s (the inner
    /// boundary, i.e. the cut of the prefix s in a layout).
    pub fn cut_set(&self, s: VertexSet) -> VertexSet {
        let mut cut = 0u64;
        for v in s.iter() {
            if self.adj[v - 1] & !s.bits() != 0 {
                cut |= 1u64 << (v - 1);
            }
        }
        VertexSet(cut)
    }

    /// Size of the cut of s.
    pub fn cut_size(&self, s: VertexSet) -> usize {
        self.cut_set(s).len()
    }

    /// True when this graph has every edge of `other` (same vertex count
    /// required; differing counts compare as false).
    pub fn is_supergraph_of(&self, other: &Graph) -> bool {
        self.n == other.n
            && self
                .adj
                .iter()
                .zip(other.adj.iter())
                .all(|(a, b)| b & !a == 0)
    }

    /// The subgraph induced by s, relabeled onto {1, ..., |s|} preserving
    /// relative order, plus the list of original ids indexed by new id - 1.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<Vertex>) {
        let old_ids: Vec<Vertex> = s.iter().collect();
        let mut new_id = vec![0usize; self.n + 1];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i + 1;
        }
        let mut g = Graph { n: old_ids.len(), adj: vec![0; old_ids.len()] };
        for (i, &v) in old_ids.iter().enumerate() {
            for u in self.neighbors(v).intersection(s).iter() {
                g.adj[i] |= 1u64 << (new_id[u] - 1);
            }
        }
        (g, old_ids)
    }

    /// Vertices reachable from `start` without leaving `allowed`.
    /// `start` itself must lie in `allowed`.
    pub fn reachable_within(&self, start: VertexSet, allowed: VertexSet) -> VertexSet {
        debug_assert!(start.is_subset_of(allowed));
        let mut reached = start.bits();
        let mut frontier = start.bits();
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                next |= self.adj[v - 1];
            }
            frontier = next & allowed.bits() & !reached;
            reached |= frontier;
        }
        VertexSet(reached)
    }

    /// Maximum-cardinality search order: repeatedly picks an unvisited vertex
    /// with the most visited neighbors, smallest id on ties.
    pub fn mcs_order(&self) -> Vec<Vertex> {
        let mut visited = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = self
                .vertices()
                .filter(|&v| !visited.contains(v))
                .max_by_key(|&v| (self.neighbors(v).intersection(visited).len(), std::cmp::Reverse(v)))
                .unwrap();
            order.push(v);
            visited.insert(v);
        }
        order
    }

    /// Chordality test: maximum-cardinality search produces a perfect
    /// elimination order exactly on chordal graphs.
    pub fn is_chordal(&self) -> bool {
        let order = self.mcs_order();
        let mut pos = vec![0usize; self.n + 1];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        // Walking the order backwards, each vertex together with its
        // earlier neighbors must form a clique; it suffices to check that
        // the earlier neighbors minus the latest of them are neighbors of
        // that latest one.
        for (i, &v) in order.iter().enumerate() {
            let earlier: Vec<Vertex> = self
                .neighbors(v)
                .iter()
                .filter(|&u| pos[u] < i)
                .collect();
            if let Some(&w) = earlier.iter().max_by_key(|&&u| pos[u]) {
                for &u in &earlier {
                    if u != w && !self.has_edge(u, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Size of a largest clique, by branch and bound over bitmasks.
    pub fn max_clique_size(&self) -> usize {
        fn grow(g: &Graph, candidates: u64, size: usize, best: &mut usize) {
            if size + candidates.count_ones() as usize <= *best {
                return;
            }
            if candidates == 0 {
                *best = (*best).max(size);
                return;
            }
            let mut cands = candidates;
            while cands != 0 {
                if size + cands.count_ones() as usize <= *best {
                    return;
                }
                let v = cands.trailing_zeros() as usize + 1;
                cands &= cands - 1;
                grow(g, cands & g.adj[v - 1], size + 1, best);
            }
        }
        let mut best = 0;
        grow(self, VertexSet::full(self.n).bits(), 0, &mut best);
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Text format: header `n m`, then m lines `u v` with u < v.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.m())?;
        for (u, v) in self.edges() {
            writeln!(f, "{} {}", u, v)?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (lno, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "missing header line 'n m'"))?;
        let mut parts = header.split_whitespace();
        let n: usize = parse_field(&mut parts, lno, "vertex count")?;
        let m: usize = parse_field(&mut parts, lno, "edge count")?;
        reject_trailing(&mut parts, lno)?;
        let mut g = Graph::new(n).map_err(|e| ParseError::new(lno, e.to_string()))?;
        let mut seen = 0usize;
        for (lno, line) in lines {
            if seen == m {
                return Err(ParseError::new(lno, format!("expected {} edge lines, found more", m)));
            }
            let mut parts = line.split_whitespace();
            let u: Vertex = parse_field(&mut parts, lno, "edge endpoint")?;
            let v: Vertex = parse_field(&mut parts, lno, "edge endpoint")?;
            reject_trailing(&mut parts, lno)?;
            g.add_edge_checked(u, v)
                .map_err(|e| ParseError::new(lno, e.to_string()))?;
            seen += 1;
        }
        if seen < m {
            return Err(ParseError::new(
                text.lines().count().max(1),
                format!("expected {} edge lines, found {}", m, seen),
            ));
        }
        Ok(g)
    }
}

pub(crate) fn parse_field<T: FromStr>(
    parts: &mut std::str::SplitWhitespace<'_>,
    line: usize,
    what: &str,
) -> Result<T, ParseError> {
    let tok = parts
        .next()
        .ok_or_else(|| ParseError::new(line, format!("missing {}", what)))?;
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("bad {}: '{}'", what, tok)))
}

pub(crate) fn reject_trailing(
    parts: &mut std::str::SplitWhitespace<'_>,
    line: usize,
) -> Result<(), ParseError> {
    match parts.next() {
        Some(tok) => Err(ParseError::new(line, format!("unexpected trailing token '{}'", tok))),
        None => Ok(()),
    }
}
