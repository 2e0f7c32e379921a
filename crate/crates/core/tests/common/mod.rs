//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use lightspan::{EdgeRef, WeightedGraph};
use proptest::prelude::*;

/// Dense Prim. Returns the chosen weights in ascending order, or `None` if
/// the graph is disconnected.
pub fn prim_weights(g: &WeightedGraph) -> Option<Vec<f64>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut w = vec![vec![f64::INFINITY; n]; n];
    for e in g.edges() {
        if e.w < w[e.u][e.v] {
            w[e.u][e.v] = e.w;
            w[e.v][e.u] = e.w;
        }
    }
    let mut in_tree = vec![false; n];
    let mut best = vec![f64::INFINITY; n];
    best[0] = 0.0;
    let mut chosen = Vec::with_capacity(n - 1);
    for step in 0..n {
        let x = (0..n)
            .filter(|&x| !in_tree[x])
            .min_by(|&a, &b| best[a].total_cmp(&best[b]))
            .unwrap();
        if best[x].is_infinite() {
            return None;
        }
        in_tree[x] = true;
        if step > 0 {
            chosen.push(best[x]);
        }
        for y in 0..n {
            if !in_tree[y] && w[x][y] < best[y] {
                best[y] = w[x][y];
            }
        }
    }
    chosen.sort_by(f64::total_cmp);
    Some(chosen)
}

pub fn sum_sorted(weights: &[f64]) -> f64 {
    let mut v = weights.to_vec();
    v.sort_by(f64::total_cmp);
    v.iter().sum()
}

/// Shortest `s`-`t` distance in the subgraph `h` by enumerating every simple
/// path, summing weights from `s` onward.
pub fn brute_force_distance(g: &WeightedGraph, h: &[EdgeRef], s: usize, t: usize) -> f64 {
    fn walk(adj: &[Vec<(usize, f64)>], x: usize, t: usize, acc: f64, seen: &mut [bool], best: &mut f64) {
        if x == t {
            *best = best.min(acc);
            return;
        }
        for &(y, w) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                walk(adj, y, t, acc + w, seen, best);
                seen[y] = false;
            }
        }
    }
    let mut adj = vec![Vec::new(); g.n()];
    for &r in h {
        let e = g.edge(r);
        adj[e.u].push((e.v, e.w));
        adj[e.v].push((e.u, e.w));
    }
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut best = f64::INFINITY;
    walk(&adj, s, t, 0.0, &mut seen, &mut best);
    best
}

/// Per-edge stretch `dist_H(u, v) / w` by path enumeration.
pub fn brute_force_stretches(g: &WeightedGraph, h: &[EdgeRef]) -> Vec<f64> {
    g.edges()
        .iter()
        .map(|e| brute_force_distance(g, h, e.u, e.v) / e.w)
        .collect()
}

/// Distance between `u` and `v` along the tree formed by `tree`.
pub fn tree_distance(g: &WeightedGraph, tree: &[EdgeRef], u: usize, v: usize) -> f64 {
    let mut adj = vec![Vec::new(); g.n()];
    for &r in tree {
        let e = g.edge(r);
        adj[e.u].push((e.v, e.w));
        adj[e.v].push((e.u, e.w));
    }
    let mut dist = vec![f64::NAN; g.n()];
    dist[u] = 0.0;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &(y, w) in &adj[x] {
            if dist[y].is_nan() {
                dist[y] = dist[x] + w;
                stack.push(y);
            }
        }
    }
    dist[v]
}

/// Connected graph: a random tree plus extra edges, parallel edges allowed.
pub fn connected_graph(max_n: usize, max_extra: usize) -> impl Strategy<Value = WeightedGraph> {
    (2..=max_n)
        .prop_flat_map(move |n| {
            let parents: Vec<_> = (1..n).map(|i| (0..i, 0.5f64..100.0)).collect();
            let extra = prop::collection::vec((0..n, 0..n, 0.5f64..100.0), 0..=max_extra);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut g = WeightedGraph::new(n);
            for (i, (p, w)) in parents.into_iter().enumerate() {
                g.add_edge(i + 1, p, w).unwrap();
            }
            for (u, v, w) in extra {
                if u != v {
                    g.add_edge(u, v, w).unwrap();
                }
            }
            g
        })
}
