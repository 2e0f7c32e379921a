//! Exact verification of spanner claims.
//!
//! Distances are computed with Dijkstra (or BFS for hop counts) in the
//! candidate subgraph; nothing is estimated or sampled.

use std::time::{Duration, Instant};

use crate::backbone::{kruskal, weight_order};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, EdgeRef, WeightedGraph};
use crate::shortest_path::{Bfs, Dijkstra, Weighted};
use crate::unionfind::UnionFind;

/// Relative slack below which an excess over the bound is attributed to
/// floating-point accumulation rather than reported as a violation.
pub const FLOAT_GUARD: f64 = 1.0 / (1u64 << 40) as f64;

/// Largest vertex count accepted by [`verify_all_pairs`].
pub const ALL_PAIRS_MAX_N: usize = 512;

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    /// The input edge being checked; `None` for all-pairs checks.
    pub edge: Option<EdgeRef>,
    pub observed: f64,
    pub bound: f64,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub bound: f64,
    pub max_observed_stretch: f64,
    pub violations: Vec<Violation>,
    /// Ratios above the bound but inside the float guard.
    pub borderline: usize,
    /// Number of edges (or pairs) checked.
    pub checked: usize,
    pub edge_count: usize,
    pub total_weight: f64,
    pub lightness: f64,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measure {
    pub edge_count: usize,
    pub total_weight: f64,
    pub lightness: f64,
}

fn check_subset(g: &WeightedGraph, h: &[EdgeRef]) {
    assert!(
        h.iter().all(|e| e.0 < g.m()),
        "spanner references an edge outside the graph"
    );
}

fn forest_weight(g: &WeightedGraph) -> f64 {
    let mut uf = UnionFind::new(g.n());
    g.weight_of(&kruskal(g, weight_order(g), &mut uf))
}

fn lightness_of(weight: f64, mst_weight: f64) -> f64 {
    if mst_weight > 0.0 {
        weight / mst_weight
    } else if weight == 0.0 {
        1.0
    } else {
        f64::INFINITY
    }
}

/// Size, weight and lightness of `h`, against a freshly built exact MST of `g`.
pub fn measure(g: &WeightedGraph, h: &[EdgeRef]) -> Result<Measure> {
    check_subset(g, h);
    let mst = crate::backbone::build_mst(g)?;
    let total_weight = g.weight_of(h);
    Ok(Measure {
        edge_count: h.len(),
        total_weight,
        lightness: lightness_of(total_weight, g.weight_of(&mst)),
    })
}

/// Exact `dist_H(u, v) / w(e)` for every edge `e = (u, v)` of `g`, in edge order.
/// Unreachable endpoints give infinity.
pub fn edge_stretches(g: &WeightedGraph, h: &[EdgeRef]) -> Vec<f64> {
    check_subset(g, h);
    let adj = Adjacency::from_refs(g, h);
    let view = Weighted { adj: &adj, weight: |p: usize| g.edges()[p].w };
    let by_source = Adjacency::new(
        g.n(),
        g.edges().iter().enumerate().map(|(i, e)| (e.u, e.v, i)),
    );

    let mut ratios = vec![f64::INFINITY; g.m()];
    let mut dijkstra = Dijkstra::new(g.n());
    let mut wanted = vec![usize::MAX; g.n()];
    for s in 0..g.n() {
        // Each edge is checked from its `u` endpoint.
        let mut remaining = 0;
        for &(t, e) in by_source.neighbors(s) {
            if g.edges()[e].u == s && wanted[t] != s {
                wanted[t] = s;
                remaining += 1;
            }
        }
        if remaining == 0 {
            continue;
        }
        dijkstra.run(&view, s, f64::INFINITY, |x, _| {
            if wanted[x] == s {
                remaining -= 1;
            }
            remaining > 0
        });
        for &(t, e) in by_source.neighbors(s) {
            let edge = &g.edges()[e];
            if edge.u == s {
                let d = if dijkstra.is_settled(t) { dijkstra.dist(t) } else { f64::INFINITY };
                ratios[e] = d / edge.w;
            }
        }
    }
    ratios
}

fn report(
    g: &WeightedGraph,
    h: &[EdgeRef],
    bound: f64,
    ratios: impl Iterator<Item = (usize, usize, Option<EdgeRef>, f64)>,
    started: Instant,
) -> VerificationReport {
    let mut max_observed: f64 = 0.0;
    let mut violations = Vec::new();
    let mut borderline = 0;
    let mut checked = 0;
    for (u, v, edge, observed) in ratios {
        checked += 1;
        max_observed = max_observed.max(observed);
        if observed > bound * (1.0 + FLOAT_GUARD) {
            violations.push(Violation { u, v, edge, observed, bound });
        } else if observed > bound {
            borderline += 1;
        }
    }
    let total_weight = g.weight_of(h);
    VerificationReport {
        bound,
        max_observed_stretch: max_observed,
        violations,
        borderline,
        checked,
        edge_count: h.len(),
        total_weight,
        lightness: lightness_of(total_weight, forest_weight(g)),
        elapsed: started.elapsed(),
    }
}

/// Checks `dist_H(u, v) <= bound * w(e)` for every edge of `g`.
///
/// Per-edge checking suffices: a shortest path in `g` is a chain of edges,
/// each of which is stretched by at most `bound`.
pub fn verify_stretch(g: &WeightedGraph, h: &[EdgeRef], bound: f64) -> VerificationReport {
    let started = Instant::now();
    let ratios = edge_stretches(g, h);
    report(
        g,
        h,
        bound,
        g.edges()
            .iter()
            .zip(ratios)
            .enumerate()
            .map(|(i, (e, r))| (e.u, e.v, Some(EdgeRef(i)), r)),
        started,
    )
}

/// Checks that every edge of `g` has a path of at most `2k - 1` edges in `h`.
/// Observed values are hop counts.
pub fn verify_hop_stretch(g: &WeightedGraph, h: &[EdgeRef], k: usize) -> VerificationReport {
    let started = Instant::now();
    check_subset(g, h);
    let bound = (2 * k).saturating_sub(1) as f64;
    let adj = Adjacency::from_refs(g, h);
    let by_source = Adjacency::from_graph(g);
    let mut bfs = Bfs::new(g.n());
    let mut hops = vec![f64::INFINITY; g.m()];
    for s in 0..g.n() {
        if !by_source.neighbors(s).iter().any(|&(_, e)| g.edges()[e].u == s) {
            continue;
        }
        bfs.run(&adj, s, usize::MAX);
        for &(t, e) in by_source.neighbors(s) {
            if g.edges()[e].u == s {
                let h = bfs.hops(t);
                hops[e] = if h == usize::MAX { f64::INFINITY } else { h as f64 };
            }
        }
    }
    report(
        g,
        h,
        bound,
        g.edges()
            .iter()
            .zip(hops)
            .enumerate()
            .map(|(i, (e, r))| (e.u, e.v, Some(EdgeRef(i)), r)),
        started,
    )
}

/// Checks `dist_H(u, v) <= bound * dist_G(u, v)` for every connected pair.
/// Limited to graphs with at most [`ALL_PAIRS_MAX_N`] vertices.
pub fn verify_all_pairs(g: &WeightedGraph, h: &[EdgeRef], bound: f64) -> Result<VerificationReport> {
    if g.n() > ALL_PAIRS_MAX_N {
        return Err(Error::Parameter(format!(
            "all-pairs verification supports at most {ALL_PAIRS_MAX_N} vertices, got {}",
            g.n()
        )));
    }
    check_subset(g, h);
    let started = Instant::now();
    let weight = |p: usize| g.edges()[p].w;
    let g_adj = Adjacency::from_graph(g);
    let h_adj = Adjacency::from_refs(g, h);
    let (gv, hv) = (Weighted { adj: &g_adj, weight }, Weighted { adj: &h_adj, weight });
    let n = g.n();
    let (mut dg, mut dh) = (Dijkstra::new(n), Dijkstra::new(n));
    let mut pairs = Vec::new();
    for s in 0..n {
        dg.run(&gv, s, f64::INFINITY, |_, _| true);
        dh.run(&hv, s, f64::INFINITY, |_, _| true);
        for t in s + 1..n {
            let base = dg.dist(t);
            if base.is_finite() {
                pairs.push((s, t, None, dh.dist(t) / base));
            }
        }
    }
    Ok(report(g, h, bound, pairs.into_iter(), started))
}
