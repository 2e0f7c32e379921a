use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::graph::Adjacency;

/// Anything Dijkstra can expand: weighted neighbors of a vertex.
pub trait WeightedNeighbors {
    fn for_each_neighbor(&self, x: usize, f: impl FnMut(usize, f64));
}

/// Static adjacency whose payloads are mapped to weights by a closure.
pub struct Weighted<'a, F> {
    pub adj: &'a Adjacency,
    pub weight: F,
}

impl<F: Fn(usize) -> f64> WeightedNeighbors for Weighted<'_, F> {
    #[inline]
    fn for_each_neighbor(&self, x: usize, mut f: impl FnMut(usize, f64)) {
        for &(y, p) in self.adj.neighbors(x) {
            f(y, (self.weight)(p));
        }
    }
}

impl WeightedNeighbors for [Vec<(usize, f64)>] {
    #[inline]
    fn for_each_neighbor(&self, x: usize, mut f: impl FnMut(usize, f64)) {
        for &(y, w) in &self[x] {
            f(y, w);
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    dist: f64,
    vertex: usize,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    // Reversed so the max-heap pops the nearest vertex.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

/// Reusable Dijkstra state. Only touched entries are reset between runs, so
/// many small searches on a large vertex set stay cheap.
#[derive(Debug, Clone)]
pub struct Dijkstra {
    dist: Vec<f64>,
    settled: Vec<bool>,
    touched: Vec<usize>,
    heap: BinaryHeap<Entry>,
}

impl Dijkstra {
    pub fn new(n: usize) -> Self {
        Dijkstra {
            dist: vec![f64::INFINITY; n],
            settled: vec![false; n],
            touched: Vec::new(),
            heap: BinaryHeap::new(),
        }
    }

    fn reset(&mut self) {
        for &x in &self.touched {
            self.dist[x] = f64::INFINITY;
            self.settled[x] = false;
        }
        self.touched.clear();
        self.heap.clear();
    }

    /// Distance found by the last run; infinite if not reached.
    #[inline]
    pub fn dist(&self, x: usize) -> f64 {
        self.dist[x]
    }

    #[inline]
    pub fn is_settled(&self, x: usize) -> bool {
        self.settled[x]
    }

    /// Settles vertices from `src` in distance order until `visit` returns
    /// false or the next distance exceeds `limit`. `visit` sees each settled
    /// vertex once.
    pub fn run<G: WeightedNeighbors + ?Sized>(
        &mut self,
        graph: &G,
        src: usize,
        limit: f64,
        mut visit: impl FnMut(usize, f64) -> bool,
    ) {
        self.reset();
        self.dist[src] = 0.0;
        self.touched.push(src);
        self.heap.push(Entry { dist: 0.0, vertex: src });
        while let Some(Entry { dist, vertex }) = self.heap.pop() {
            if self.settled[vertex] || dist > self.dist[vertex] {
                continue;
            }
            if dist > limit {
                break;
            }
            self.settled[vertex] = true;
            if !visit(vertex, dist) {
                break;
            }
            let (dists, settled, touched, heap) =
                (&mut self.dist, &self.settled, &mut self.touched, &mut self.heap);
            graph.for_each_neighbor(vertex, |y, w| {
                if settled[y] {
                    return;
                }
                let nd = dist + w;
                if nd < dists[y] {
                    if dists[y] == f64::INFINITY {
                        touched.push(y);
                    }
                    dists[y] = nd;
                    heap.push(Entry { dist: nd, vertex: y });
                }
            });
        }
    }

    /// Shortest distance from `src` to `dst` if it is at most `limit`.
    pub fn bounded_distance<G: WeightedNeighbors + ?Sized>(
        &mut self,
        graph: &G,
        src: usize,
        dst: usize,
        limit: f64,
    ) -> Option<f64> {
        let mut found = None;
        self.run(graph, src, limit, |x, d| {
            if x == dst {
                found = Some(d);
                false
            } else {
                true
            }
        });
        found
    }
}

/// Breadth-first hop distances, reusable like [`Dijkstra`].
#[derive(Debug, Clone)]
pub struct Bfs {
    hops: Vec<usize>,
    touched: Vec<usize>,
    queue: std::collections::VecDeque<usize>,
}

impl Bfs {
    pub fn new(n: usize) -> Self {
        Bfs {
            hops: vec![usize::MAX; n],
            touched: Vec::new(),
            queue: Default::default(),
        }
    }

    /// Hop count from the last source; `usize::MAX` if unreached.
    #[inline]
    pub fn hops(&self, x: usize) -> usize {
        self.hops[x]
    }

    /// Explores from `src` up to `max_hops` hops.
    pub fn run(&mut self, adj: &Adjacency, src: usize, max_hops: usize) {
        for &x in &self.touched {
            self.hops[x] = usize::MAX;
        }
        self.touched.clear();
        self.queue.clear();
        self.hops[src] = 0;
        self.touched.push(src);
        self.queue.push_back(src);
        while let Some(x) = self.queue.pop_front() {
            let h = self.hops[x];
            if h == max_hops {
                continue;
            }
            for &(y, _) in adj.neighbors(x) {
                if self.hops[y] == usize::MAX {
                    self.hops[y] = h + 1;
                    self.touched.push(y);
                    self.queue.push_back(y);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj(n: usize, edges: &[(usize, usize)]) -> Adjacency {
        Adjacency::new(n, edges.iter().enumerate().map(|(i, &(u, v))| (u, v, i)))
    }

    #[test]
    fn dijkstra_picks_lighter_detour() {
        let a = adj(3, &[(0, 1), (1, 2), (0, 2)]);
        let w = [1.0, 1.0, 3.0];
        let g = Weighted { adj: &a, weight: |p: usize| w[p] };
        let mut d = Dijkstra::new(3);
        assert_eq!(d.bounded_distance(&g, 0, 2, f64::INFINITY), Some(2.0));
        assert_eq!(d.bounded_distance(&g, 0, 2, 1.5), None);
        assert_eq!(d.bounded_distance(&g, 2, 0, 2.0), Some(2.0));

        let lists: Vec<Vec<(usize, f64)>> = vec![vec![(1, 1.0)], vec![(0, 1.0), (2, 0.5)], vec![(1, 0.5)]];
        assert_eq!(d.bounded_distance(lists.as_slice(), 0, 2, 10.0), Some(1.5));
    }

    #[test]
    fn dijkstra_unreachable() {
        let a = adj(4, &[(0, 1), (2, 3)]);
        let g = Weighted { adj: &a, weight: |_| 1.0 };
        let mut d = Dijkstra::new(4);
        d.run(&g, 0, f64::INFINITY, |_, _| true);
        assert_eq!(d.dist(1), 1.0);
        assert_eq!(d.dist(3), f64::INFINITY);
        // State resets between runs.
        d.run(&g, 2, f64::INFINITY, |_, _| true);
        assert_eq!(d.dist(1), f64::INFINITY);
        assert_eq!(d.dist(3), 1.0);
    }

    #[test]
    fn bfs_hops_with_cap() {
        let a = adj(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let mut b = Bfs::new(5);
        b.run(&a, 0, 2);
        assert_eq!(b.hops(2), 2);
        assert_eq!(b.hops(3), usize::MAX);
        b.run(&a, 4, usize::MAX);
        assert_eq!(b.hops(0), 4);
    }
}
