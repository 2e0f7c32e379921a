//! Randomized cluster-growing (2k-1)-spanner.
//!
//! Runs k-1 clustering rounds followed by a final joining round. Every
//! comparison between edges uses the total order (weight, index), so equal
//! weights never make a decision ambiguous. With `unit_weights` the order
//! degenerates to the index and the stretch guarantee holds in hops.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Adjacency, Edge};

const NONE: usize = usize::MAX;

struct State<'a> {
    edges: &'a [Edge],
    adj: Adjacency,
    unit: bool,
    alive: Vec<bool>,
    kept: Vec<bool>,
    /// Cluster center of each vertex, `NONE` once a vertex leaves the clustering.
    cluster: Vec<usize>,
    /// Scratch, indexed by cluster center: lightest alive edge from the current vertex.
    best: Vec<usize>,
    touched: Vec<usize>,
}

impl State<'_> {
    #[inline]
    fn lighter(&self, a: usize, b: usize) -> bool {
        if self.unit {
            a < b
        } else {
            let (wa, wb) = (self.edges[a].w, self.edges[b].w);
            wa < wb || (wa == wb && a < b)
        }
    }

    /// Fills `best` with the lightest alive edge from `v` to every adjacent
    /// cluster, listing the clusters in `touched`.
    fn scan(&mut self, v: usize) {
        for &c in &self.touched {
            self.best[c] = NONE;
        }
        self.touched.clear();
        for i in 0..self.adj.neighbors(v).len() {
            let (y, e) = self.adj.neighbors(v)[i];
            if !self.alive[e] {
                continue;
            }
            let c = self.cluster[y];
            debug_assert!(c != NONE, "alive edge into an unclustered vertex");
            let cur = self.best[c];
            if cur == NONE {
                self.best[c] = e;
                self.touched.push(c);
            } else if self.lighter(e, cur) {
                self.best[c] = e;
            }
        }
    }
}

/// Returns the indices of `edges` forming a (2k-1)-spanner of the multigraph
/// on `n` vertices, in ascending order.
pub fn cluster_spanner(n: usize, edges: &[Edge], k: usize, seed: u64, unit_weights: bool) -> Vec<usize> {
    assert!(k >= 1, "stretch parameter k must be at least 1");
    let m = edges.len();
    let mut st = State {
        edges,
        adj: Adjacency::new(n, edges.iter().enumerate().map(|(i, e)| (e.u, e.v, i))),
        unit: unit_weights,
        alive: vec![true; m],
        kept: vec![false; m],
        cluster: (0..n).collect(),
        best: vec![NONE; n],
        touched: Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = if n > 1 { (n as f64).powf(-1.0 / k as f64) } else { 1.0 };

    let mut sampled = vec![false; n];
    let mut dead = Vec::new();
    let mut drop_cluster = vec![false; n];
    for _round in 1..k {
        // Centers are visited in ascending id so sampling is seed-determined.
        let mut is_center = vec![false; n];
        for &c in &st.cluster {
            if c != NONE {
                is_center[c] = true;
            }
        }
        for c in 0..n {
            sampled[c] = is_center[c] && rng.gen_bool(p);
        }

        let mut next = st.cluster.clone();
        dead.clear();
        #[allow(clippy::needless_range_loop)]
        for v in 0..n {
            let c = st.cluster[v];
            if c == NONE || sampled[c] {
                continue;
            }
            st.scan(v);
            if st.touched.is_empty() {
                next[v] = NONE;
                continue;
            }

            let mut join: Option<(usize, usize)> = None;
            for &cl in &st.touched {
                if sampled[cl] {
                    let e = st.best[cl];
                    if join.is_none_or(|(_, j)| st.lighter(e, j)) {
                        join = Some((cl, e));
                    }
                }
            }

            for &cl in &st.touched {
                drop_cluster[cl] = false;
            }
            match join {
                None => {
                    for &cl in &st.touched {
                        st.kept[st.best[cl]] = true;
                        drop_cluster[cl] = true;
                    }
                    next[v] = NONE;
                }
                Some((target, e_join)) => {
                    st.kept[e_join] = true;
                    drop_cluster[target] = true;
                    next[v] = target;
                    for &cl in &st.touched {
                        let e = st.best[cl];
                        if cl != target && st.lighter(e, e_join) {
                            st.kept[e] = true;
                            drop_cluster[cl] = true;
                        }
                    }
                }
            }
            for &(y, e) in st.adj.neighbors(v) {
                if st.alive[e] && drop_cluster[st.cluster[y]] {
                    dead.push(e);
                }
            }
        }
        for &e in &dead {
            st.alive[e] = false;
        }
        st.cluster = next;
        for (e, edge) in edges.iter().enumerate() {
            if st.alive[e] && st.cluster[edge.u] == st.cluster[edge.v] {
                st.alive[e] = false;
            }
        }
    }

    // Final round: every vertex links to each adjacent cluster once.
    for v in 0..n {
        if st.cluster[v] == NONE {
            continue;
        }
        st.scan(v);
        for &cl in &st.touched {
            st.kept[st.best[cl]] = true;
        }
    }

    (0..m).filter(|&e| st.kept[e]).collect()
}
