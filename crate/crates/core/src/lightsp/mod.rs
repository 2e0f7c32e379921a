//! Light spanner construction.
//!
//! The MST is laid out as a path by preorder traversal. Edges are split into
//! weight scales; for every scale the path is cut into intervals short
//! enough relative to that scale that each interval behaves like a single
//! vertex. A sparse black-box spanner runs on the graph of intervals, and
//! the edges it keeps are mapped back to the original edges they stand for.
//! The union of the MST and all per-scale outputs is a spanner whose weight
//! is within a small factor of the MST.

mod levels;

pub use levels::{
    build_auxiliary, build_level_plan, bucket_edges, level_count, level_threshold, AuxEdge,
    AuxiliaryGraph, Buckets, LevelPlan,
};

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::backbone::{build_backbone, build_mst, Backbone};
use crate::blackbox::{self, SpannerKind};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeRef, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Weighted cluster spanner on every level.
    Basic,
    /// Cluster spanner on unit weights for levels >= 1; stretch grows by rho.
    Unweighted,
    /// Greedy spanner everywhere.
    Sparse,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Basic, Variant::Unweighted, Variant::Sparse];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Basic => "basic",
            Variant::Unweighted => "unweighted",
            Variant::Sparse => "sparse",
        }
    }

    fn level0_kind(self) -> SpannerKind {
        match self {
            Variant::Basic | Variant::Unweighted => SpannerKind::WeightedFast,
            Variant::Sparse => SpannerKind::Greedy,
        }
    }

    fn level_kind(self) -> SpannerKind {
        match self {
            Variant::Basic => SpannerKind::WeightedFast,
            Variant::Unweighted => SpannerKind::Unweighted,
            Variant::Sparse => SpannerKind::Greedy,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic" => Ok(Variant::Basic),
            "unweighted" | "unweighted-blackbox" => Ok(Variant::Unweighted),
            "sparse" | "sparse-blackbox" => Ok(Variant::Sparse),
            _ => Err(Error::Parameter(format!(
                "unknown variant `{s}` (expected basic, unweighted or sparse)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    /// Black-box stretch parameter; each black box is a (2k-1)-spanner.
    pub k: usize,
    /// Interval refinement: intervals at scale `xi` have length `xi / q`.
    pub q: f64,
    /// Ratio between consecutive weight scales.
    pub rho: f64,
    pub variant: Variant,
    pub seed: u64,
}

impl Default for Params {
    fn default() -> Self {
        Params { k: 2, q: 1.0, rho: 2.0, variant: Variant::Basic, seed: 0 }
    }
}

/// `(2k-1)(1 + 2/q) + 2/q`.
pub fn stretch_bound(k: usize, q: f64) -> f64 {
    (2 * k - 1) as f64 * (1.0 + 2.0 / q) + 2.0 / q
}

/// `rho (2k-1)(1 + 2/q) + 2/q`, for hop-based black boxes on the levels.
pub fn hop_stretch_bound(k: usize, q: f64, rho: f64) -> f64 {
    rho * (2 * k - 1) as f64 * (1.0 + 2.0 / q) + 2.0 / q
}

impl Params {
    pub fn validate(&self) -> Result<()> {
        if self.k < 2 {
            return Err(Error::Parameter(format!(
                "k must be at least 2 (the window 1/(2k-1) < q < k is empty for k = 1), got {}",
                self.k
            )));
        }
        let lo = 1.0 / (2 * self.k - 1) as f64;
        if !(self.q > lo && self.q < self.k as f64) {
            return Err(Error::Parameter(format!(
                "q must satisfy {lo} < q < {}, got {}",
                self.k, self.q
            )));
        }
        if !(self.rho > 1.0 && self.rho <= 2.0) {
            return Err(Error::Parameter(format!("rho must lie in (1, 2], got {}", self.rho)));
        }
        Ok(())
    }

    pub fn declared_stretch(&self) -> f64 {
        match self.variant {
            Variant::Unweighted => hop_stretch_bound(self.k, self.q, self.rho),
            Variant::Basic | Variant::Sparse => stretch_bound(self.k, self.q),
        }
    }

    /// Maps an accuracy target to `q = 3 / epsilon`, clamped into the legal
    /// window. Returns the value and whether it was clamped.
    pub fn q_for_epsilon(k: usize, epsilon: f64) -> Result<(f64, bool)> {
        if !(epsilon > 0.0 && epsilon.is_finite()) {
            return Err(Error::Parameter(format!("epsilon must be positive, got {epsilon}")));
        }
        if k < 2 {
            return Err(Error::Parameter(format!("k must be at least 2, got {k}")));
        }
        let q = 3.0 / epsilon;
        let lo = 1.0 / (2 * k - 1) as f64;
        let hi = k as f64;
        // Stay strictly inside the open window.
        let span = hi - lo;
        let clamped = q.clamp(lo + span * 1e-9, hi - span * 1e-9);
        Ok((clamped, clamped != q))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LevelStats {
    pub level: usize,
    /// Lower weight threshold (exclusive); 0 for level 0.
    pub xi: f64,
    /// Interval length; 0 for level 0, whose vertices are the graph's own.
    pub mu: f64,
    pub n_intervals: usize,
    /// Occupied intervals (vertices of the auxiliary graph).
    pub representatives: usize,
    pub bucket_edges: usize,
    pub aux_edges: usize,
    pub kept: usize,
    pub kept_weight: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PhaseTimes {
    pub simplify: Duration,
    pub mst: Duration,
    pub backbone: Duration,
    pub bucketing: Duration,
    pub level0: Duration,
    pub levels: Duration,
    pub total: Duration,
}

#[derive(Debug, Clone)]
pub struct SpannerResult {
    pub params: Params,
    pub n: usize,
    pub m: usize,
    /// Edges left after collapsing parallel edges.
    pub simple_m: usize,
    /// The spanner, ascending refs into the input graph.
    pub edges: Vec<EdgeRef>,
    pub declared_stretch: f64,
    pub tree_edges: Vec<EdgeRef>,
    pub backbone_length: f64,
    pub mst_weight: f64,
    pub total_weight: f64,
    pub lightness: f64,
    pub discarded: usize,
    /// Per level (0 first), the edges contributed by that level's black box.
    pub level_edges: Vec<Vec<EdgeRef>>,
    pub levels: Vec<LevelStats>,
    pub times: PhaseTimes,
}

/// Seeds for the black box of each level, drawn from one stream.
fn level_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.next_u64()).collect()
}

/// Builds a light spanner of `g` with stretch at most
/// [`Params::declared_stretch`].
///
/// Parallel edges are collapsed to the lightest copy first. Returned edge
/// refs index into `g`.
pub fn construct(g: &WeightedGraph, params: &Params) -> Result<SpannerResult> {
    params.validate()?;
    let started = Instant::now();
    let mut times = PhaseTimes::default();
    let n = g.n();

    let t = Instant::now();
    let simple = g.simple_edges();
    let work = g.subgraph(&simple);
    times.simplify = t.elapsed();
    let to_input = |local: EdgeRef| simple[local.0];

    let t = Instant::now();
    let tree = build_mst(&work)?;
    times.mst = t.elapsed();

    let t = Instant::now();
    let backbone = build_backbone(&work, &tree)?;
    times.backbone = t.elapsed();

    let mut result = SpannerResult {
        params: *params,
        n,
        m: g.m(),
        simple_m: work.m(),
        edges: Vec::new(),
        declared_stretch: params.declared_stretch(),
        tree_edges: tree.iter().map(|&r| to_input(r)).collect(),
        backbone_length: backbone.length,
        mst_weight: backbone.tree_weight,
        total_weight: 0.0,
        lightness: 1.0,
        discarded: 0,
        level_edges: Vec::new(),
        levels: Vec::new(),
        times,
    };
    if n < 2 {
        result.times.total = started.elapsed();
        return Ok(result);
    }

    let t = Instant::now();
    let all: Vec<EdgeRef> = work.edge_refs().collect();
    let buckets = bucket_edges(&work, &all, &backbone, params.rho);
    result.times.bucketing = t.elapsed();
    result.discarded = buckets.discarded.len();
    let seeds = level_seeds(params.seed, buckets.levels + 1);

    // Level 0: the light edges, spanned directly on the original vertices.
    let t = Instant::now();
    let light = &buckets.buckets[0];
    let light_edges: Vec<Edge> = light.iter().map(|&r| *work.edge(r)).collect();
    let kept0: Vec<EdgeRef> = blackbox::run(params.variant.level0_kind(), n, &light_edges, params.k, seeds[0])
        .into_iter()
        .map(|i| light[i])
        .collect();
    result.levels.push(LevelStats {
        level: 0,
        xi: 0.0,
        mu: 0.0,
        n_intervals: n,
        representatives: n,
        bucket_edges: light.len(),
        aux_edges: light.len(),
        kept: kept0.len(),
        kept_weight: work.weight_of(&kept0),
    });
    result.level_edges.push(kept0);
    result.times.level0 = t.elapsed();

    let t = Instant::now();
    for (j, &seed) in seeds.iter().enumerate().skip(1) {
        let (stats, kept) = run_level(&work, &backbone, &buckets, j, params, seed);
        result.levels.push(stats);
        result.level_edges.push(kept);
    }
    result.times.levels = t.elapsed();

    let mut edges: Vec<EdgeRef> = tree
        .iter()
        .chain(result.level_edges.iter().flatten())
        .copied()
        .collect();
    edges.sort_unstable();
    edges.dedup();
    result.total_weight = work.weight_of(&edges);
    result.lightness = result.total_weight / result.mst_weight;
    result.edges = edges.into_iter().map(to_input).collect();
    for level in &mut result.level_edges {
        for r in level.iter_mut() {
            *r = to_input(*r);
        }
    }
    result.times.total = started.elapsed();
    Ok(result)
}

fn run_level(
    g: &WeightedGraph,
    backbone: &Backbone,
    buckets: &Buckets,
    j: usize,
    params: &Params,
    seed: u64,
) -> (LevelStats, Vec<EdgeRef>) {
    let bucket = &buckets.buckets[j];
    let plan = levels::plan_with_threshold(backbone, j, buckets.xi(j), params.q);
    let aux = build_auxiliary(g, bucket, &plan);
    let kept: Vec<EdgeRef> = if aux.aux_edges.is_empty() {
        Vec::new()
    } else {
        let local = aux.local_edges();
        blackbox::run(params.variant.level_kind(), aux.vertices.len(), &local, params.k, seed)
            .into_iter()
            .map(|i| aux.aux_edges[i].source)
            .collect()
    };
    let stats = LevelStats {
        level: j,
        xi: plan.xi,
        mu: plan.mu,
        n_intervals: plan.n_intervals,
        representatives: aux.vertices.len(),
        bucket_edges: bucket.len(),
        aux_edges: aux.aux_edges.len(),
        kept: kept.len(),
        kept_weight: g.weight_of(&kept),
    };
    (stats, kept)
}
