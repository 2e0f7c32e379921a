//! Weight buckets, per-level interval partitions of the backbone path, and
//! the auxiliary graphs on interval representatives.

use crate::backbone::Backbone;
use crate::graph::{Edge, EdgeRef, WeightedGraph};

/// Partition of the edges into weight scales.
///
/// Bucket 0 holds weights in `(0, L/n]`; bucket `j >= 1` holds
/// `(xi_j, rho * xi_j]` with `xi_j = rho^(j-1) * L/n`. Heavier edges are
/// discarded: the tree path alone already spans them.
#[derive(Debug, Clone)]
pub struct Buckets {
    /// Number of scales above bucket 0, `ceil(log_rho n)`.
    pub levels: usize,
    /// `bounds[j]` is the inclusive upper weight of bucket `j`, i.e.
    /// `rho^j * L/n`, so `xi_j = bounds[j - 1]`.
    pub bounds: Vec<f64>,
    pub buckets: Vec<Vec<EdgeRef>>,
    pub discarded: Vec<EdgeRef>,
    rho_ln: f64,
}

/// `ceil(log_rho n)`, computed without logarithms.
pub fn level_count(n: usize, rho: f64) -> usize {
    let mut levels = 0;
    let mut scale = 1.0;
    while scale < n as f64 {
        scale *= rho;
        levels += 1;
    }
    levels
}

/// `xi_j = rho^(j-1) * L / n` for `j >= 1`.
pub fn level_threshold(length: f64, n: usize, rho: f64, j: usize) -> f64 {
    debug_assert!(j >= 1);
    length / n as f64 * rho.powi(j as i32 - 1)
}

impl Buckets {
    pub fn new(n: usize, length: f64, rho: f64) -> Self {
        let levels = level_count(n, rho);
        let mut bounds: Vec<f64> = (1..=levels + 1)
            .map(|j| level_threshold(length, n, rho, j))
            .collect();
        // rho^levels >= n, so the top bound covers the whole path length;
        // pin it against rounding.
        let top = &mut bounds[levels];
        *top = top.max(length);
        Buckets {
            levels,
            bounds,
            buckets: vec![Vec::new(); levels + 1],
            discarded: Vec::new(),
            rho_ln: rho.ln(),
        }
    }

    /// `xi_j` for `1 <= j <= levels`.
    pub fn xi(&self, j: usize) -> f64 {
        self.bounds[j - 1]
    }

    /// Bucket index of weight `w`, or `None` if it lies above every bucket.
    /// Constant time: a logarithmic guess corrected against the bounds.
    pub fn bucket_of(&self, w: f64) -> Option<usize> {
        let top = self.levels + 1;
        let guess = (w / self.bounds[0]).ln() / self.rho_ln;
        let mut j = if guess.is_nan() || guess <= 0.0 {
            0
        } else {
            (guess.ceil() as usize).min(top)
        };
        while j > 0 && self.bounds[j - 1] >= w {
            j -= 1;
        }
        while j < top && self.bounds[j] < w {
            j += 1;
        }
        (j < top).then_some(j)
    }

    /// Whether `w` lies in bucket `j`'s weight range.
    pub fn contains(&self, j: usize, w: f64) -> bool {
        let lower_ok = j == 0 || w > self.bounds[j - 1];
        lower_ok && w <= self.bounds[j]
    }
}

/// Sorts the edges `refs` of `g` into weight buckets relative to the backbone.
pub fn bucket_edges(g: &WeightedGraph, refs: &[EdgeRef], backbone: &Backbone, rho: f64) -> Buckets {
    assert!(backbone.length > 0.0, "bucketing needs a backbone of positive length");
    let mut b = Buckets::new(g.n(), backbone.length, rho);
    for &r in refs {
        match b.bucket_of(g.edge(r).w) {
            Some(j) => b.buckets[j].push(r),
            None => b.discarded.push(r),
        }
    }
    b
}

/// Partition of the backbone path into intervals for one level.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelPlan {
    pub level: usize,
    pub xi: f64,
    /// Interval length `xi / q`.
    pub mu: f64,
    /// `ceil(q L / xi)`.
    pub n_intervals: usize,
    /// Interval index of every vertex.
    pub ind: Vec<usize>,
}

impl LevelPlan {
    /// Interval of a path position. A position exactly on a boundary goes to
    /// the higher interval, except the path end which stays in the last one.
    #[inline]
    pub fn interval_of(&self, pos: f64) -> usize {
        ((pos / self.mu).floor() as usize).min(self.n_intervals - 1)
    }

    /// Distinct occupied intervals, ascending.
    pub fn occupied(&self) -> Vec<usize> {
        let mut v = self.ind.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

pub fn build_level_plan(backbone: &Backbone, j: usize, q: f64, rho: f64) -> LevelPlan {
    assert!(j >= 1, "level plans exist for levels 1 and up");
    let xi = level_threshold(backbone.length, backbone.n(), rho, j);
    plan_with_threshold(backbone, j, xi, q)
}

pub(crate) fn plan_with_threshold(backbone: &Backbone, level: usize, xi: f64, q: f64) -> LevelPlan {
    let mu = xi / q;
    let n_intervals = ((q * backbone.length / xi).ceil() as usize).max(1);
    let mut plan = LevelPlan { level, xi, mu, n_intervals, ind: Vec::new() };
    plan.ind = backbone.pos.iter().map(|&p| plan.interval_of(p)).collect();
    plan
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxEdge {
    /// Interval ids, `a < b`.
    pub a: usize,
    pub b: usize,
    pub w: f64,
    pub source: EdgeRef,
}

/// Simple graph on the occupied intervals of one level.
#[derive(Debug, Clone, PartialEq)]
pub struct AuxiliaryGraph {
    pub level: usize,
    /// Occupied interval ids, ascending.
    pub vertices: Vec<usize>,
    /// One edge per crossed interval pair, sorted by pair.
    pub aux_edges: Vec<AuxEdge>,
}

impl AuxiliaryGraph {
    /// Edges relabelled to positions in `vertices`, for the black boxes.
    pub fn local_edges(&self) -> Vec<Edge> {
        let local = |x: usize| {
            self.vertices
                .binary_search(&x)
                .expect("aux edge endpoint is an occupied interval")
        };
        self.aux_edges
            .iter()
            .map(|e| Edge { u: local(e.a), v: local(e.b), w: e.w })
            .collect()
    }
}

/// Drops bucket edges inside a single interval and keeps, per pair of
/// intervals, the lightest crossing edge (ties to the lowest index) as the
/// representative of that pair.
pub fn build_auxiliary(g: &WeightedGraph, bucket: &[EdgeRef], plan: &LevelPlan) -> AuxiliaryGraph {
    let mut crossing: Vec<AuxEdge> = bucket
        .iter()
        .filter_map(|&r| {
            let e = g.edge(r);
            let (ia, ib) = (plan.ind[e.u], plan.ind[e.v]);
            (ia != ib).then(|| AuxEdge { a: ia.min(ib), b: ia.max(ib), w: e.w, source: r })
        })
        .collect();
    crossing.sort_unstable_by(|x, y| {
        (x.a, x.b)
            .cmp(&(y.a, y.b))
            .then(x.w.total_cmp(&y.w))
            .then(x.source.cmp(&y.source))
    });
    crossing.dedup_by_key(|e| (e.a, e.b));
    AuxiliaryGraph { level: plan.level, vertices: plan.occupied(), aux_edges: crossing }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn backbone_with(pos: Vec<f64>) -> Backbone {
        let length = pos.iter().cloned().fold(0.0, f64::max);
        let mut order: Vec<usize> = (0..pos.len()).collect();
        order.sort_by(|&a, &b| pos[a].total_cmp(&pos[b]));
        Backbone { tree_edges: Vec::new(), order, pos, length, tree_weight: length }
    }

    #[test]
    fn level_count_matches_ceil_log() {
        assert_eq!(level_count(16, 2.0), 4);
        assert_eq!(level_count(17, 2.0), 5);
        assert_eq!(level_count(1, 2.0), 0);
        assert_eq!(level_count(2, 1.5), 2);
        for n in 2..2000 {
            for rho in [1.1, 1.5, 2.0] {
                let l = level_count(n, rho);
                assert!(rho.powi(l as i32) >= n as f64 * (1.0 - 1e-12));
                assert!(rho.powi(l as i32 - 1) < n as f64);
            }
        }
    }

    #[test]
    fn worked_bucket_example() {
        // L = 16, n = 16, rho = 2: L/n = 1, four levels, W_3 = (4, 8].
        let b = Buckets::new(16, 16.0, 2.0);
        assert_eq!(b.levels, 4);
        assert_eq!(b.bounds, vec![1.0, 2.0, 4.0, 8.0, 16.0]);
        assert_eq!(b.bucket_of(0.5), Some(0));
        assert_eq!(b.bucket_of(5.0), Some(3));
        assert_eq!(b.bucket_of(1.0), Some(0));
        assert_eq!(b.bucket_of(4.0), Some(2));
        assert_eq!(b.bucket_of(16.0), Some(4));
        assert_eq!(b.bucket_of(16.000001), None);
        assert_eq!(b.xi(3), 4.0);
    }

    #[test]
    fn bucket_of_agrees_with_linear_scan() {
        for &(n, len, rho) in &[(100usize, 37.5, 1.5), (7, 1e-3, 2.0), (1000, 1e6, 1.01)] {
            let b = Buckets::new(n, len, rho);
            let mut w = len / n as f64 / 10.0;
            while w < len * 2.0 {
                let scan = (0..=b.levels).find(|&j| b.contains(j, w));
                assert_eq!(b.bucket_of(w), scan, "w = {w}");
                for probe in [w, b.bucket_of(w).map_or(w, |j| b.bounds[j])] {
                    assert_eq!(b.bucket_of(probe), (0..=b.levels).find(|&j| b.contains(j, probe)));
                }
                w *= 1.07;
            }
        }
    }

    #[test]
    fn floor_rule_plan() {
        let bb = backbone_with(vec![0.0, 3.0, 5.0, 9.0]);
        let plan = plan_with_threshold(&bb, 1, 4.0, 1.0);
        assert_eq!(plan.mu, 4.0);
        assert_eq!(plan.ind, vec![0, 0, 1, 2]);
        assert_eq!(plan.n_intervals, 3);
    }

    #[test]
    fn boundary_goes_up_except_at_path_end() {
        let bb = backbone_with(vec![0.0, 4.0, 8.0]);
        let plan = plan_with_threshold(&bb, 1, 4.0, 1.0);
        assert_eq!(plan.n_intervals, 2);
        assert_eq!(plan.ind, vec![0, 1, 1]);
    }

    #[test]
    fn single_interval_has_no_aux_edges() {
        let bb = backbone_with(vec![0.0, 1.0, 2.0]);
        let plan = plan_with_threshold(&bb, 1, 10.0, 1.0);
        assert_eq!(plan.ind, vec![0, 0, 0]);
        let g = WeightedGraph::from_edges(3, [(0, 2, 10.0), (0, 1, 10.0)]).unwrap();
        let aux = build_auxiliary(&g, &[EdgeRef(0), EdgeRef(1)], &plan);
        assert!(aux.aux_edges.is_empty());
        assert_eq!(aux.vertices, vec![0]);
    }

    #[test]
    fn aux_keeps_minimum_crossing() {
        // Intervals of length 1: vertices 0,1 in interval 0; 2,3 in interval 2.
        let bb = backbone_with(vec![0.0, 0.5, 2.0, 2.5]);
        let plan = plan_with_threshold(&bb, 1, 1.0, 1.0);
        assert_eq!(plan.ind, vec![0, 0, 2, 2]);
        let g = WeightedGraph::from_edges(4, [(0, 2, 7.0), (1, 3, 5.0), (0, 1, 3.0), (3, 0, 5.0)]).unwrap();
        let aux = build_auxiliary(&g, &[EdgeRef(0), EdgeRef(1), EdgeRef(2), EdgeRef(3)], &plan);
        assert_eq!(
            aux.aux_edges,
            vec![AuxEdge { a: 0, b: 2, w: 5.0, source: EdgeRef(1) }]
        );
        assert_eq!(aux.vertices, vec![0, 2]);
        assert_eq!(aux.local_edges(), vec![Edge { u: 0, v: 1, w: 5.0 }]);
    }
}
