//! Two-pass construction in the streaming model augmented with sorting.
//!
//! The input is only ever read through [`StreamHarness`] passes: one sort
//! pass, a first data pass computing the MST with union-find, and a second
//! data pass that routes every edge to the streaming spanner instance for its
//! weight scale. Between passes only the MST (n - 1 edges) and per-vertex
//! path positions are kept.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::backbone::{build_backbone, finish_tree, sort_by_weight, Backbone};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeRef, WeightedGraph};
use crate::lightsp::{
    hop_stretch_bound, stretch_bound, Buckets, LevelPlan, LevelStats, Params, PhaseTimes, SpannerResult,
};
use crate::stats::Stats;
use crate::unionfind::UnionFind;

/// Replayable edge stream. Edges are reachable only through whole passes.
#[derive(Debug)]
pub struct StreamHarness<'g> {
    graph: &'g WeightedGraph,
    order: Option<Vec<EdgeRef>>,
    pass_count: usize,
}

impl<'g> StreamHarness<'g> {
    pub fn new(graph: &'g WeightedGraph) -> Self {
        StreamHarness { graph, order: None, pass_count: 0 }
    }

    /// Vertex count, known up front from the stream header.
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn pass_count(&self) -> usize {
        self.pass_count
    }

    pub fn is_sorted(&self) -> bool {
        self.order.is_some()
    }

    /// Sort pass: later passes deliver edges by nondecreasing weight, equal
    /// weights in original stream order.
    pub fn sort_pass(&mut self) {
        self.pass_count += 1;
        let mut order: Vec<EdgeRef> = self.graph.edge_refs().collect();
        sort_by_weight(self.graph, &mut order);
        self.order = Some(order);
    }

    /// One sequential pass over the stream.
    pub fn pass(&mut self) -> impl Iterator<Item = (EdgeRef, Edge)> + '_ {
        self.pass_count += 1;
        let g = self.graph;
        let order: Box<dyn Iterator<Item = EdgeRef> + '_> = match &self.order {
            Some(order) => Box::new(order.iter().copied()),
            None => Box::new(g.edge_refs()),
        };
        order.map(move |r| (r, *g.edge(r)))
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Pass1Stats {
    pub edges_read: usize,
    pub unions: u64,
    pub finds: u64,
    /// Parent-pointer hops over all finds.
    pub find_steps: u64,
    pub rejected: usize,
}

impl Pass1Stats {
    /// Union-find work per streamed edge.
    pub fn amortized_work_per_edge(&self) -> f64 {
        if self.edges_read == 0 {
            0.0
        } else {
            (self.finds + self.find_steps) as f64 / self.edges_read as f64
        }
    }
}

#[derive(Debug, Clone)]
pub struct Pass1 {
    pub backbone: Backbone,
    pub stats: Pass1Stats,
}

/// First data pass: Kruskal over the sorted stream, then the backbone is
/// computed from the stored tree edges alone.
pub fn pass1_mst(h: &mut StreamHarness<'_>) -> Result<Pass1> {
    if !h.is_sorted() {
        return Err(Error::Parameter("the MST pass needs a preceding sort pass".into()));
    }
    let n = h.n();
    let mut uf = UnionFind::new(n);
    let mut stats = Pass1Stats::default();
    let mut tree: Vec<(EdgeRef, Edge)> = Vec::with_capacity(n.saturating_sub(1));
    for (r, e) in h.pass() {
        stats.edges_read += 1;
        if uf.union(e.u, e.v) {
            tree.push((r, e));
        } else {
            stats.rejected += 1;
        }
    }
    stats.unions = uf.unions();
    stats.finds = uf.finds();
    stats.find_steps = uf.steps();

    // Work only with the retained tree edges from here on.
    tree.sort_unstable_by_key(|&(r, _)| r);
    let tree_graph = WeightedGraph::from_edges(n, tree.iter().map(|&(_, e)| (e.u, e.v, e.w)))?;
    let local: Vec<EdgeRef> = tree_graph.edge_refs().collect();
    let local = finish_tree(&tree_graph, local, &mut uf)?;
    let mut backbone = build_backbone(&tree_graph, &local)?;
    backbone.tree_edges = tree.iter().map(|&(r, _)| r).collect();
    Ok(Pass1 { backbone, stats })
}

#[derive(Debug, Clone, Copy)]
struct VertexState {
    center: usize,
    depth: u32,
    /// Sampled cluster rank of this vertex as a center.
    rank: u32,
}

/// One-pass clustering spanner for a weight-sorted stream of edges.
///
/// Every vertex starts as its own cluster center with a random rank in
/// `0..k`, `P[rank >= i] = p^i`. A vertex joins a neighbor's cluster when
/// that cluster has strictly higher rank and its depth is below the rank.
/// Otherwise the edge is kept only if neither endpoint already has an edge
/// into the other's cluster. Cluster paths have at most `k - 1` hops, so a
/// dropped edge has a path of at most `2k - 1` earlier, no heavier edges.
#[derive(Debug, Clone)]
pub struct StreamingSpannerInstance {
    pub level: usize,
    k: usize,
    p: f64,
    rng: ChaCha8Rng,
    vertices: HashMap<usize, VertexState>,
    links: HashSet<(usize, usize)>,
    kept: Vec<EdgeRef>,
    processed: usize,
}

impl StreamingSpannerInstance {
    /// `n_bound` bounds the number of distinct vertices the instance will see.
    pub fn new(level: usize, k: usize, n_bound: usize, seed: u64) -> Self {
        assert!(k >= 1);
        let p = if n_bound > 1 { (n_bound as f64).powf(-1.0 / k as f64) } else { 1.0 };
        StreamingSpannerInstance {
            level,
            k,
            p,
            rng: ChaCha8Rng::seed_from_u64(seed),
            vertices: HashMap::new(),
            links: HashSet::new(),
            kept: Vec::new(),
            processed: 0,
        }
    }

    fn state(&mut self, x: usize) -> VertexState {
        if let Some(&s) = self.vertices.get(&x) {
            return s;
        }
        let mut rank = 0;
        while rank + 1 < self.k as u32 && self.rng.gen_bool(self.p) {
            rank += 1;
        }
        let s = VertexState { center: x, depth: 0, rank };
        self.vertices.insert(x, s);
        s
    }

    fn rank_of(&mut self, center: usize) -> u32 {
        self.state(center).rank
    }

    /// Processes one arriving edge between vertices `a` and `b`; returns
    /// whether `source` was kept.
    pub fn process(&mut self, a: usize, b: usize, source: EdgeRef) -> bool {
        self.processed += 1;
        let sa = self.state(a);
        let sb = self.state(b);
        if sa.center == sb.center {
            return false;
        }
        let ra = self.rank_of(sa.center);
        let rb = self.rank_of(sb.center);

        let keep = if rb > ra && sb.depth < rb {
            let entry = self.vertices.get_mut(&a).expect("state exists");
            entry.center = sb.center;
            entry.depth = sb.depth + 1;
            true
        } else if ra > rb && sa.depth < ra {
            let entry = self.vertices.get_mut(&b).expect("state exists");
            entry.center = sa.center;
            entry.depth = sa.depth + 1;
            true
        } else if self.links.contains(&(a, sb.center)) || self.links.contains(&(b, sa.center)) {
            false
        } else {
            self.links.insert((a, sb.center));
            self.links.insert((b, sa.center));
            true
        };
        if keep {
            self.kept.push(source);
        }
        keep
    }

    pub fn kept(&self) -> &[EdgeRef] {
        &self.kept
    }

    pub fn processed(&self) -> usize {
        self.processed
    }

    /// Edges held in memory.
    pub fn resident_edges(&self) -> usize {
        self.kept.len()
    }

    /// Words of per-vertex and per-link bookkeeping.
    pub fn bookkeeping_words(&self) -> usize {
        self.vertices.len() + self.links.len()
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Pass2Stats {
    pub edges_read: usize,
    pub forwarded: usize,
    pub skipped_internal: usize,
    pub discarded_heavy: usize,
    /// Edges processed by each instance, level 0 first.
    pub per_instance: Vec<usize>,
    pub resident_edges: usize,
    pub bookkeeping_words: usize,
}

#[derive(Debug, Clone)]
pub struct StreamResult {
    /// Same shape as the offline result; `declared_stretch` is the bound for
    /// weighted instances on a sorted stream.
    pub spanner: SpannerResult,
    /// The bound obtained if instances are only trusted to be hop spanners.
    pub declared_stretch_hop: f64,
    pub pass_count: usize,
    pub pass1: Pass1Stats,
    pub pass2: Pass2Stats,
}

/// Per-level routing data built between passes.
#[derive(Debug, Clone)]
pub struct LevelRoute {
    /// Interval partition; `ind` is left empty since intervals are computed
    /// from positions on the fly.
    pub plan: LevelPlan,
    pub bucket_edges: usize,
}

/// State after the second pass.
#[derive(Debug, Clone)]
pub struct Pass2Output {
    pub instances: Vec<StreamingSpannerInstance>,
    /// Indexed by level; level 0 has no intervals.
    pub routes: Vec<LevelRoute>,
    pub stats: Pass2Stats,
}

/// Second data pass: buckets each edge in constant time, skips edges inside
/// one interval of their level, and feeds the rest to that level's instance.
pub fn pass2_dispatch(h: &mut StreamHarness<'_>, pass1: &Pass1, params: &Params) -> Result<Pass2Output> {
    params.validate()?;
    let backbone = &pass1.backbone;
    let n = h.n();
    if n < 2 {
        let edges_read = h.pass().count();
        let stats = Pass2Stats { edges_read, ..Default::default() };
        return Ok(Pass2Output { instances: Vec::new(), routes: Vec::new(), stats });
    }
    let buckets = Buckets::new(n, backbone.length, params.rho);
    let levels = buckets.levels;
    let mut routes: Vec<LevelRoute> = (0..=levels)
        .map(|j| {
            let plan = if j == 0 {
                LevelPlan { level: 0, xi: 0.0, mu: 0.0, n_intervals: n, ind: Vec::new() }
            } else {
                let xi = buckets.xi(j);
                let mu = xi / params.q;
                let n_intervals = ((params.q * backbone.length / xi).ceil() as usize).max(1);
                LevelPlan { level: j, xi, mu, n_intervals, ind: Vec::new() }
            };
            LevelRoute { plan, bucket_edges: 0 }
        })
        .collect();
    let mut seeds = ChaCha8Rng::seed_from_u64(params.seed);
    let mut instances: Vec<StreamingSpannerInstance> = routes
        .iter()
        .map(|r| StreamingSpannerInstance::new(r.plan.level, params.k, r.plan.n_intervals.min(n), seeds.gen()))
        .collect();

    let mut stats = Pass2Stats { per_instance: vec![0; levels + 1], ..Default::default() };
    for (r, e) in h.pass() {
        stats.edges_read += 1;
        let Some(j) = buckets.bucket_of(e.w) else {
            stats.discarded_heavy += 1;
            continue;
        };
        let route = &mut routes[j];
        route.bucket_edges += 1;
        let (a, b) = if j == 0 {
            (e.u, e.v)
        } else {
            (route.plan.interval_of(backbone.pos[e.u]), route.plan.interval_of(backbone.pos[e.v]))
        };
        if a == b {
            stats.skipped_internal += 1;
            continue;
        }
        stats.forwarded += 1;
        stats.per_instance[j] += 1;
        instances[j].process(a, b, r);
    }
    stats.resident_edges = instances.iter().map(|i| i.resident_edges()).sum();
    stats.bookkeeping_words = n + instances.iter().map(|i| i.bookkeeping_words()).sum::<usize>();
    Ok(Pass2Output { instances, routes, stats })
}

/// Sort pass, MST pass, dispatch pass; returns the spanner with instrumentation.
pub fn run_stream(g: &WeightedGraph, params: &Params) -> Result<StreamResult> {
    params.validate()?;
    let started = Instant::now();
    let mut h = StreamHarness::new(g);
    h.sort_pass();
    let t = Instant::now();
    let pass1 = pass1_mst(&mut h)?;
    let mst_time = t.elapsed();
    let t = Instant::now();
    let out = pass2_dispatch(&mut h, &pass1, params)?;
    let dispatch_time = t.elapsed();

    let backbone = &pass1.backbone;
    let mut levels = Vec::new();
    let mut level_edges = Vec::new();
    for (inst, route) in out.instances.iter().zip(&out.routes) {
        let mut kept = inst.kept().to_vec();
        kept.sort_unstable();
        levels.push(LevelStats {
            level: route.plan.level,
            xi: route.plan.xi,
            mu: route.plan.mu,
            n_intervals: route.plan.n_intervals,
            representatives: inst.vertices.len(),
            bucket_edges: route.bucket_edges,
            aux_edges: inst.processed(),
            kept: kept.len(),
            kept_weight: g.weight_of(&kept),
        });
        level_edges.push(kept);
    }
    let discarded = out.stats.discarded_heavy;

    let mut edges: Vec<EdgeRef> = backbone
        .tree_edges
        .iter()
        .chain(level_edges.iter().flatten())
        .copied()
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let total_weight = g.weight_of(&edges);
    let lightness = if backbone.tree_weight > 0.0 { total_weight / backbone.tree_weight } else { 1.0 };
    let spanner = SpannerResult {
        params: *params,
        n: g.n(),
        m: g.m(),
        simple_m: g.m(),
        edges,
        declared_stretch: stretch_bound(params.k, params.q),
        tree_edges: backbone.tree_edges.clone(),
        backbone_length: backbone.length,
        mst_weight: backbone.tree_weight,
        total_weight,
        lightness,
        discarded,
        level_edges,
        levels,
        times: PhaseTimes {
            mst: mst_time,
            levels: dispatch_time,
            total: started.elapsed(),
            ..Default::default()
        },
    };
    Ok(StreamResult {
        spanner,
        declared_stretch_hop: hop_stretch_bound(params.k, params.q, params.rho),
        pass_count: h.pass_count(),
        pass1: pass1.stats,
        pass2: out.stats,
    })
}

impl StreamResult {
    pub fn to_stats(&self, timings: bool) -> Stats {
        let mut s = self.spanner.to_stats(false);
        s.push_real("stream.declared_stretch_hop", self.declared_stretch_hop)
            .push("stream.pass_count", self.pass_count)
            .push("stream.sort_passes", 1)
            .push("stream.data_passes", self.pass_count - 1)
            .push("stream.pass1.edges_read", self.pass1.edges_read)
            .push("stream.pass1.unions", self.pass1.unions)
            .push("stream.pass1.finds", self.pass1.finds)
            .push("stream.pass1.find_steps", self.pass1.find_steps)
            .push("stream.pass1.rejected", self.pass1.rejected)
            .push_real("stream.pass1.work_per_edge", self.pass1.amortized_work_per_edge())
            .push("stream.pass2.edges_read", self.pass2.edges_read)
            .push("stream.pass2.forwarded", self.pass2.forwarded)
            .push("stream.pass2.skipped_internal", self.pass2.skipped_internal)
            .push("stream.pass2.discarded_heavy", self.pass2.discarded_heavy)
            .push("stream.memory.resident_edges", self.pass2.resident_edges)
            .push("stream.memory.bookkeeping_words", self.pass2.bookkeeping_words)
            .push("stream.memory.unit", "edges+words");
        if timings {
            let t = &self.spanner.times;
            s.push_real("time.pass1_ms", ms(t.mst))
                .push_real("time.pass2_ms", ms(t.levels))
                .push_real("time.total_ms", ms(t.total));
        }
        s
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}
