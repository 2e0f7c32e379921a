//! Weighted undirected multigraphs stored as an edge list.

mod generate;
mod io;

pub use generate::{generate, GeneratorSpec};
pub use io::{parse_graph, serialize_graph};

use crate::error::{Error, Result};

/// Position of an edge in its owning graph's edge sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef(pub usize);

impl EdgeRef {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

impl Edge {
    pub fn new(u: usize, v: usize, w: f64) -> Self {
        Edge { u, v, w }
    }

    #[inline]
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    /// Unordered endpoint pair with the smaller id first.
    #[inline]
    pub fn key(&self) -> (usize, usize) {
        if self.u < self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

/// Undirected graph on vertices `0..n` with positive finite edge weights.
///
/// Parallel edges are allowed; self-loops are not.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl WeightedGraph {
    pub fn new(n: usize) -> Self {
        WeightedGraph { n, edges: Vec::new() }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        let mut g = WeightedGraph::new(n);
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: f64) -> Result<EdgeRef> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        if !(w > 0.0 && w.is_finite()) {
            return Err(Error::InvalidGraph(format!(
                "non-positive or non-finite weight {w}"
            )));
        }
        self.edges.push(Edge { u, v, w });
        Ok(EdgeRef(self.edges.len() - 1))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: EdgeRef) -> &Edge {
        &self.edges[e.0]
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.edges.len()).map(EdgeRef)
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.w).sum()
    }

    pub fn weight_of(&self, edges: &[EdgeRef]) -> f64 {
        edges.iter().map(|&e| self.edges[e.0].w).sum()
    }

    /// Keeps one edge per unordered vertex pair: the lightest, ties to the
    /// lowest index. Returned refs are ascending.
    pub fn simple_edges(&self) -> Vec<EdgeRef> {
        let mut order: Vec<((usize, usize), u64, usize)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.key(), e.w.to_bits(), i))
            .collect();
        order.sort_unstable();
        let mut keep = Vec::with_capacity(order.len());
        let mut last = None;
        for (key, _, i) in order {
            if last != Some(key) {
                keep.push(EdgeRef(i));
                last = Some(key);
            }
        }
        keep.sort_unstable();
        keep
    }

    /// Subgraph on the same vertex set containing exactly `edges`, in the given order.
    pub fn subgraph(&self, edges: &[EdgeRef]) -> WeightedGraph {
        WeightedGraph {
            n: self.n,
            edges: edges.iter().map(|&e| self.edges[e.0]).collect(),
        }
    }

    /// Returns the lowest vertex not reachable from vertex 0, if any.
    pub fn unreachable_from_zero(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let adj = Adjacency::from_graph(self);
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &(y, _) in adj.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub fn is_connected(&self) -> bool {
        self.unreachable_from_zero().is_none()
    }
}

/// Compressed adjacency lists; each entry is `(neighbor, payload)`.
#[derive(Debug, Clone)]
pub struct Adjacency {
    first: Vec<usize>,
    entries: Vec<(usize, usize)>,
}

impl Adjacency {
    /// Builds symmetric adjacency from `(u, v, payload)` triples.
    pub fn new(n: usize, edges: impl Iterator<Item = (usize, usize, usize)> + Clone) -> Self {
        let mut first = vec![0usize; n + 1];
        for (u, v, _) in edges.clone() {
            first[u + 1] += 1;
            first[v + 1] += 1;
        }
        for x in 0..n {
            first[x + 1] += first[x];
        }
        let mut fill = first.clone();
        let mut entries = vec![(0, 0); first[n]];
        for (u, v, p) in edges {
            entries[fill[u]] = (v, p);
            fill[u] += 1;
            entries[fill[v]] = (u, p);
            fill[v] += 1;
        }
        Adjacency { first, entries }
    }

    /// Adjacency of the whole graph with edge indices as payload.
    pub fn from_graph(g: &WeightedGraph) -> Self {
        Self::new(g.n(), g.edges().iter().enumerate().map(|(i, e)| (e.u, e.v, i)))
    }

    /// Adjacency restricted to `edges`, with the edge index as payload.
    pub fn from_refs(g: &WeightedGraph, edges: &[EdgeRef]) -> Self {
        Self::new(
            g.n(),
            edges.iter().map(|&r| {
                let e = g.edge(r);
                (e.u, e.v, r.0)
            }),
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.first.len() - 1
    }

    #[inline]
    pub fn neighbors(&self, x: usize) -> &[(usize, usize)] {
        &self.entries[self.first[x]..self.first[x + 1]]
    }
}
