//! The classical greedy t-spanner.

use crate::graph::Edge;
use crate::shortest_path::Dijkstra;
use crate::unionfind::UnionFind;

/// Scans edges by (weight, index) and keeps an edge iff the spanner built so
/// far has no path between its endpoints of length at most `t * w`.
///
/// `t = f64::INFINITY` keeps exactly a minimum spanning forest. Returned
/// indices are ascending.
pub fn greedy_spanner_edges(n: usize, edges: &[Edge], t: f64) -> Vec<usize> {
    assert!(t >= 1.0, "greedy stretch must be at least 1, got {t}");
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_unstable_by(|&a, &b| edges[a].w.total_cmp(&edges[b].w).then(a.cmp(&b)));

    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    let mut components = UnionFind::new(n);
    let mut dijkstra = Dijkstra::new(n);
    let mut kept = Vec::new();
    for e in order {
        let Edge { u, v, w } = edges[e];
        // Endpoints in different components can't be within any finite distance.
        let add = components.union(u, v)
            || dijkstra
                .bounded_distance(adj.as_slice(), u, v, t * w)
                .is_none();
        if add {
            adj[u].push((v, w));
            adj[v].push((u, w));
            kept.push(e);
        }
    }
    kept.sort_unstable();
    kept
}
