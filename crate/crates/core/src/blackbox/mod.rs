//! Sparse spanner constructions used as black boxes by the light spanner.
//!
//! All three take an edge list over vertices `0..n` and return indices into
//! it, so callers can run them on auxiliary graphs and map the result back.

mod clustering;
mod greedy;

pub use clustering::cluster_spanner;
pub use greedy::greedy_spanner_edges;

use crate::graph::{EdgeRef, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpannerKind {
    /// Cluster spanner on unit weights; stretch counted in hops.
    Unweighted,
    /// Randomized weighted cluster spanner, expected O(k n^{1+1/k}) edges.
    WeightedFast,
    /// Greedy spanner, O(n^{1+1/k}) edges but superlinear time.
    Greedy,
}

/// The stretch/size promise a black box makes for parameter `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpannerContract {
    pub kind: SpannerKind,
    pub k: usize,
    /// 2k - 1; hops for [`SpannerKind::Unweighted`], weighted otherwise.
    pub stretch: f64,
    /// Exponent `1 + 1/k` of the size bound.
    pub size_exponent: f64,
}

impl SpannerContract {
    pub fn new(kind: SpannerKind, k: usize) -> Self {
        assert!(k >= 1, "k must be at least 1");
        SpannerContract {
            kind,
            k,
            stretch: (2 * k - 1) as f64,
            size_exponent: 1.0 + 1.0 / k as f64,
        }
    }

    /// Leading size term: `k n^{1+1/k}` for the cluster spanners,
    /// `n^{1+1/k}` for greedy.
    pub fn size_scale(&self, n: usize) -> f64 {
        let base = (n as f64).powf(self.size_exponent);
        match self.kind {
            SpannerKind::Greedy => base,
            _ => self.k as f64 * base,
        }
    }
}

fn to_refs(idx: Vec<usize>) -> Vec<EdgeRef> {
    idx.into_iter().map(EdgeRef).collect()
}

/// (2k-1)-spanner in hops, ignoring weights. Parallel edges are tolerated.
pub fn unweighted_spanner(g: &WeightedGraph, k: usize, seed: u64) -> Vec<EdgeRef> {
    to_refs(cluster_spanner(g.n(), g.edges(), k, seed, true))
}

/// Weighted (2k-1)-spanner. Parallel edges are tolerated.
pub fn weighted_spanner(g: &WeightedGraph, k: usize, seed: u64) -> Vec<EdgeRef> {
    to_refs(cluster_spanner(g.n(), g.edges(), k, seed, false))
}

/// Greedy t-spanner; see [`greedy_spanner_edges`].
pub fn greedy_spanner(g: &WeightedGraph, t: f64) -> Vec<EdgeRef> {
    to_refs(greedy_spanner_edges(g.n(), g.edges(), t))
}

/// Runs the black box of `kind` with stretch parameter `k`.
pub fn run(kind: SpannerKind, n: usize, edges: &[crate::graph::Edge], k: usize, seed: u64) -> Vec<usize> {
    match kind {
        SpannerKind::Unweighted => cluster_spanner(n, edges, k, seed, true),
        SpannerKind::WeightedFast => cluster_spanner(n, edges, k, seed, false),
        SpannerKind::Greedy => greedy_spanner_edges(n, edges, (2 * k - 1) as f64),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backbone::build_mst;
    use crate::graph::{generate, GeneratorSpec};

    fn triangle(w: [f64; 3]) -> WeightedGraph {
        WeightedGraph::from_edges(3, [(0, 1, w[0]), (1, 2, w[1]), (0, 2, w[2])]).unwrap()
    }

    #[test]
    fn greedy_triangles() {
        assert_eq!(greedy_spanner(&triangle([1.0, 1.0, 1.0]), 1.0).len(), 3);
        assert_eq!(
            greedy_spanner(&triangle([1.0, 1.0, 2.5]), 3.0),
            vec![EdgeRef(0), EdgeRef(1)]
        );
    }

    #[test]
    fn greedy_infinite_stretch_is_mst() {
        for seed in 0..10 {
            let g = generate(&GeneratorSpec::Uniform { n: 60, m: 300, w_min: 1.0, w_max: 50.0 }, seed).unwrap();
            let forest = greedy_spanner(&g, f64::INFINITY);
            assert_eq!(forest, build_mst(&g).unwrap());
            let large = greedy_spanner(&g, 1e300);
            assert_eq!(large, forest);
        }
    }

    #[test]
    fn greedy_drops_parallel_copies() {
        let g = WeightedGraph::from_edges(2, [(0, 1, 3.0), (1, 0, 2.0), (0, 1, 2.0)]).unwrap();
        assert_eq!(greedy_spanner(&g, 1.0), vec![EdgeRef(1)]);
    }

    #[test]
    fn k1_keeps_one_edge_per_pair() {
        let g = WeightedGraph::from_edges(
            4,
            [(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0), (0, 3, 9.0), (1, 0, 0.5), (0, 2, 1.0)],
        )
        .unwrap();
        let w = weighted_spanner(&g, 1, 0);
        assert_eq!(w, vec![EdgeRef(1), EdgeRef(2), EdgeRef(3), EdgeRef(4), EdgeRef(5)]);
        let u = unweighted_spanner(&g, 1, 0);
        // Unit weights: the lower-index parallel copy wins.
        assert_eq!(u, vec![EdgeRef(0), EdgeRef(1), EdgeRef(2), EdgeRef(3), EdgeRef(5)]);
    }

    #[test]
    fn trees_are_kept_whole() {
        for seed in 0..10 {
            let g = generate(&GeneratorSpec::Uniform { n: 80, m: 79, w_min: 1.0, w_max: 9.0 }, seed).unwrap();
            for k in 2..5 {
                assert_eq!(weighted_spanner(&g, k, seed).len(), 79);
                assert_eq!(unweighted_spanner(&g, k, seed).len(), 79);
            }
        }
    }

    #[test]
    fn seeded_determinism() {
        let g = generate(&GeneratorSpec::Uniform { n: 120, m: 1500, w_min: 1.0, w_max: 9.0 }, 4).unwrap();
        assert_eq!(weighted_spanner(&g, 3, 9), weighted_spanner(&g, 3, 9));
        assert_eq!(greedy_spanner(&g, 3.0), greedy_spanner(&g, 3.0));
    }

    #[test]
    fn contract_values() {
        let c = SpannerContract::new(SpannerKind::WeightedFast, 3);
        assert_eq!(c.stretch, 5.0);
        assert!((c.size_scale(8) - 3.0 * 16.0).abs() < 1e-9);
        assert_eq!(SpannerContract::new(SpannerKind::Greedy, 2).size_scale(4), 8.0);
    }
}
