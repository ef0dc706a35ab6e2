//! Vertex orderings and canonical interval representations.
//!
//! A representation assigns each vertex an open interval (l, r) with integer
//! endpoints and l < r. It is canonical when the left endpoints are exactly
//! 1, ..., n. Coverage of a point counts the intervals whose interior
//! contains it; for canonical representations the total coverage over left
//! endpoints equals the edge count of the induced interval graph.

use std::fmt;
use std::str::FromStr;

use crate::error::{OrderingError, ParseError};
use crate::graph::{parse_field, reject_trailing, Graph, Vertex};

/// A bijection between vertices 1..=n and positions 1..=n.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<Vertex>,       // order[i] = vertex at position i+1
    position: Vec<usize>,     // position[v-1] = 1-based position of v
}

impl VertexOrdering {
    pub fn new(order: Vec<Vertex>) -> Result<Self, OrderingError> {
        let n = order.len();
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            if v == 0 || v > n {
                return Err(OrderingError { n, reason: format!("vertex {} out of range", v) });
            }
            if position[v - 1] != 0 {
                return Err(OrderingError { n, reason: format!("vertex {} repeated", v) });
            }
            position[v - 1] = i + 1;
        }
        Ok(VertexOrdering { order, position })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering::new((1..=n).collect()).unwrap()
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// The vertex at 1-based position p.
    pub fn vertex_at(&self, p: usize) -> Vertex {
        self.order[p - 1]
    }

    /// The 1-based position of vertex v.
    pub fn position(&self, v: Vertex) -> usize {
        self.position[v - 1]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.order
    }

    pub fn reversed(&self) -> Self {
        VertexOrdering::new(self.order.iter().rev().copied().collect()).unwrap()
    }
}

impl fmt::Debug for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexOrdering({:?})", self.order)
    }
}

impl fmt::Display for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &v in &self.order {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", v)?;
            first = false;
        }
        Ok(())
    }
}

/// A point on the line with half-integer resolution, stored as twice its
/// value so that coverage queries stay in integer arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Point {
    twice: i64,
}

impl Point {
    pub fn at(x: i64) -> Self {
        Point { twice: 2 * x }
    }

    /// The midpoint x + 1/2.
    pub fn after(x: i64) -> Self {
        Point { twice: 2 * x + 1 }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Open integer intervals, one per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct CanonicalRepr {
    ends: Vec<(i64, i64)>, // ends[v-1] = (left, right)
}

impl CanonicalRepr {
    /// Wraps raw intervals; use `canonical_violations` to check the shape.
    pub fn new(ends: Vec<(i64, i64)>) -> Self {
        CanonicalRepr { ends }
    }

    pub fn n(&self) -> usize {
        self.ends.len()
    }

    pub fn left(&self, v: Vertex) -> i64 {
        self.ends[v - 1].0
    }

    pub fn right(&self, v: Vertex) -> i64 {
        self.ends[v - 1].1
    }

    pub fn interval(&self, v: Vertex) -> (i64, i64) {
        self.ends[v - 1]
    }

    pub fn intervals(&self) -> impl Iterator<Item = (Vertex, i64, i64)> + '_ {
        self.ends.iter().enumerate().map(|(i, &(l, r))| (i + 1, l, r))
    }

    /// Everything that keeps this from being canonical: every interval must
    /// be nonempty (l < r) and the left endpoints must be exactly 1..=n.
    pub fn canonical_violations(&self) -> Vec<String> {
        let n = self.ends.len();
        let mut out = Vec::new();
        for (v, &(l, r)) in self.ends.iter().enumerate() {
            if l >= r {
                out.push(format!("interval of vertex {} is empty: ({}, {})", v + 1, l, r));
            }
        }
        let mut owner = vec![0usize; n + 1];
        for (v, &(l, _)) in self.ends.iter().enumerate() {
            if l < 1 || l as usize > n {
                out.push(format!("left endpoint {} of vertex {} outside 1..={}", l, v + 1, n));
            } else if owner[l as usize] != 0 {
                out.push(format!(
                    "vertices {} and {} share left endpoint {}",
                    owner[l as usize],
                    v + 1,
                    l
                ));
            } else {
                owner[l as usize] = v + 1;
            }
        }
        out
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_violations().is_empty()
    }

    /// Number of intervals whose interior contains p.
    pub fn coverage(&self, p: Point) -> usize {
        self.ends
            .iter()
            .filter(|&&(l, r)| 2 * l < p.twice() && p.twice() < 2 * r)
            .count()
    }

    /// Total coverage over the left endpoints; for canonical representations
    /// this equals the edge count of the interval graph.
    pub fn icost(&self) -> usize {
        self.ends.iter().map(|&(l, _)| self.coverage(Point::at(l))).sum()
    }

    /// Maximum coverage over all points. The maximum is attained at a
    /// half-integer: an interval containing an integer p also contains
    /// p - 1/2 and p + 1/2.
    pub fn wid(&self) -> usize {
        let lo = self.ends.iter().map(|&(l, _)| l).min().unwrap_or(0);
        let hi = self.ends.iter().map(|&(_, r)| r).max().unwrap_or(0);
        (lo..hi)
            .map(|x| self.coverage(Point::after(x)))
            .max()
            .unwrap_or(0)
    }

    /// The interval graph: u ~ v when the two open intervals intersect.
    pub fn to_interval_graph(&self) -> Graph {
        let n = self.ends.len();
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                let (lu, ru) = self.ends[u - 1];
                let (lv, rv) = self.ends[v - 1];
                if lu.max(lv) < ru.min(rv) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("interval graph edges are simple")
    }

    /// Vertices sorted by left endpoint; for a canonical representation this
    /// is the ordering whose positions are the left endpoints.
    pub fn left_ordering(&self) -> VertexOrdering {
        let mut vs: Vec<Vertex> = (1..=self.ends.len()).collect();
        vs.sort_by_key(|&v| (self.ends[v - 1].0, v));
        VertexOrdering::new(vs).expect("sorted vertex list is a permutation")
    }

    /// Largest right endpoint (0 when empty).
    pub fn max_right(&self) -> i64 {
        self.ends.iter().map(|&(_, r)| r).max().unwrap_or(0)
    }
}

impl fmt::Debug for CanonicalRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.intervals().map(|(v, l, r)| (v, (l, r))))
            .finish()
    }
}

/// Text format: header `n`, then n lines `v left right`.
impl fmt::Display for CanonicalRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.ends.len())?;
        for (v, l, r) in self.intervals() {
            writeln!(f, "{} {} {}", v, l, r)?;
        }
        Ok(())
    }
}

impl FromStr for CanonicalRepr {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (lno, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "missing header line 'n'"))?;
        let mut parts = header.split_whitespace();
        let n: usize = parse_field(&mut parts, lno, "vertex count")?;
        reject_trailing(&mut parts, lno)?;
        let mut ends = vec![None; n];
        let mut last_line = lno;
        for (lno, line) in lines {
            last_line = lno;
            let mut parts = line.split_whitespace();
            let v: usize = parse_field(&mut parts, lno, "vertex id")?;
            let l: i64 = parse_field(&mut parts, lno, "left endpoint")?;
            let r: i64 = parse_field(&mut parts, lno, "right endpoint")?;
            reject_trailing(&mut parts, lno)?;
            if v == 0 || v > n {
                return Err(ParseError::new(lno, format!("vertex {} out of range 1..={}", v, n)));
            }
            if ends[v - 1].is_some() {
                return Err(ParseError::new(lno, format!("vertex {} listed twice", v)));
            }
            ends[v - 1] = Some((l, r));
        }
        if let Some(v) = ends.iter().position(|e| e.is_none()) {
            return Err(ParseError::new(
                last_line,
                format!("missing interval for vertex {}", v + 1),
            ));
        }
        Ok(CanonicalRepr::new(ends.into_iter().map(|e| e.unwrap()).collect()))
    }
}

/// The minimal canonical representation extending an ordering: vertex v at
/// position p gets left endpoint p, and its right endpoint reaches just past
/// the last later neighbor (p + 1 when none).
pub fn greedy_representation(g: &Graph, f: &VertexOrdering) -> CanonicalRepr {
    assert_eq!(g.n(), f.n(), "ordering must cover the graph");
    let mut ends = vec![(0i64, 0i64); g.n()];
    for v in g.vertices() {
        let p = f.position(v) as i64;
        let reach = g
            .neighbors(v)
            .iter()
            .map(|u| f.position(u) as i64)
            .filter(|&q| q > p)
            .max()
            .unwrap_or(p);
        ends[v - 1] = (p, reach + 1);
    }
    CanonicalRepr::new(ends)
}
