//! Minimum spanning tree and the preorder path laid over it.

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, WeightedGraph};
use crate::unionfind::UnionFind;

/// Edge refs in nondecreasing weight, ties by ascending index.
pub fn weight_order(g: &WeightedGraph) -> Vec<EdgeRef> {
    let mut order: Vec<EdgeRef> = g.edge_refs().collect();
    sort_by_weight(g, &mut order);
    order
}

pub fn sort_by_weight(g: &WeightedGraph, edges: &mut [EdgeRef]) {
    // Weights are positive, so their bit patterns sort like the values.
    let mut keyed: Vec<(u64, usize)> = edges.iter().map(|&r| (g.edge(r).w.to_bits(), r.0)).collect();
    keyed.sort_unstable();
    for (slot, (_, i)) in edges.iter_mut().zip(keyed) {
        *slot = EdgeRef(i);
    }
}

/// Kruskal's algorithm. Equal weights are resolved toward the lower edge
/// index; the result is sorted by edge index.
pub fn build_mst(g: &WeightedGraph) -> Result<Vec<EdgeRef>> {
    let mut uf = UnionFind::new(g.n());
    let tree = kruskal(g, weight_order(g), &mut uf);
    finish_tree(g, tree, &mut uf)
}

/// Runs Kruskal over `sorted`, stopping once the tree is complete.
pub(crate) fn kruskal(
    g: &WeightedGraph,
    sorted: impl IntoIterator<Item = EdgeRef>,
    uf: &mut UnionFind,
) -> Vec<EdgeRef> {
    let target = g.n().saturating_sub(1);
    let mut tree = Vec::with_capacity(target);
    for r in sorted {
        if tree.len() == target {
            break;
        }
        let e = g.edge(r);
        if uf.union(e.u, e.v) {
            tree.push(r);
        }
    }
    tree
}

pub(crate) fn finish_tree(
    g: &WeightedGraph,
    mut tree: Vec<EdgeRef>,
    uf: &mut UnionFind,
) -> Result<Vec<EdgeRef>> {
    if tree.len() + 1 < g.n() {
        let root = uf.find(0);
        let stray = (1..g.n()).find(|&x| uf.find(x) != root).unwrap_or(0);
        return Err(Error::Disconnected(0, stray));
    }
    tree.sort_unstable();
    Ok(tree)
}

/// MST plus the Hamiltonian path given by its preorder traversal.
#[derive(Debug, Clone, PartialEq)]
pub struct Backbone {
    pub tree_edges: Vec<EdgeRef>,
    /// Vertices in preorder: root 0, children in ascending id.
    pub order: Vec<usize>,
    /// Position of each vertex (indexed by vertex id) along the path.
    pub pos: Vec<f64>,
    /// Total path length, equal to the position of the last vertex.
    pub length: f64,
    pub tree_weight: f64,
}

impl Backbone {
    pub fn n(&self) -> usize {
        self.pos.len()
    }

    /// Distance between `u` and `v` measured along the path.
    pub fn path_distance(&self, u: usize, v: usize) -> f64 {
        (self.pos[u] - self.pos[v]).abs()
    }
}

/// Builds the preorder path of `tree`, a spanning tree of `g`.
///
/// Consecutive path vertices are separated by their tree distance, so for
/// any pair the path distance dominates the tree distance.
pub fn build_backbone(g: &WeightedGraph, tree: &[EdgeRef]) -> Result<Backbone> {
    let n = g.n();
    if n == 0 {
        return Ok(Backbone {
            tree_edges: Vec::new(),
            order: Vec::new(),
            pos: Vec::new(),
            length: 0.0,
            tree_weight: 0.0,
        });
    }
    if tree.len() != n - 1 {
        return Err(Error::InvalidGraph(format!(
            "spanning tree on {n} vertices needs {} edges, got {}",
            n - 1,
            tree.len()
        )));
    }

    let mut children: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for &r in tree {
        let e = g.edge(r);
        children[e.u].push((e.v, e.w));
        children[e.v].push((e.u, e.w));
    }
    for list in &mut children {
        list.sort_unstable_by_key(|&(x, _)| x);
    }

    // parent[v] = (parent id, weight of the edge to it)
    let mut parent: Vec<Option<(usize, f64)>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    visited[0] = true;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &(y, w) in children[x].iter().rev() {
            if !visited[y] {
                visited[y] = true;
                parent[y] = Some((x, w));
                stack.push(y);
            }
        }
    }
    if order.len() != n {
        let stray = visited.iter().position(|&s| !s).unwrap_or(0);
        return Err(Error::Disconnected(0, stray));
    }

    // The next preorder vertex hangs off an ancestor of the current one, so
    // the tree path between them climbs from `prev` to that parent and takes
    // one edge down. Each edge is climbed at most once overall.
    let mut pos = vec![0.0; n];
    for i in 1..n {
        let (prev, next) = (order[i - 1], order[i]);
        let (p, w_down) = parent[next].expect("non-root vertex has a parent");
        let mut hop = 0.0;
        let mut x = prev;
        while x != p {
            let (up, w) = parent[x].expect("parent of next is an ancestor of prev");
            hop += w;
            x = up;
        }
        pos[next] = pos[prev] + (hop + w_down);
    }

    let tree_weight = g.weight_of(tree);
    let length = pos[order[n - 1]];
    assert!(
        length <= 2.0 * tree_weight * (1.0 + 1e-12),
        "preorder path length {length} exceeds twice the tree weight {tree_weight}"
    );

    let mut tree_edges = tree.to_vec();
    tree_edges.sort_unstable();
    Ok(Backbone { tree_edges, order, pos, length, tree_weight })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn refs(v: &[usize]) -> Vec<EdgeRef> {
        v.iter().copied().map(EdgeRef).collect()
    }

    #[test]
    fn triangle_mst() {
        let g = WeightedGraph::from_edges(3, [(0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)]).unwrap();
        let t = build_mst(&g).unwrap();
        assert_eq!(t, refs(&[0, 1]));
        assert_eq!(g.weight_of(&t), 3.0);
    }

    #[test]
    fn tree_input_is_its_own_mst() {
        let g = WeightedGraph::from_edges(5, [(0, 1, 4.0), (1, 2, 1.0), (1, 3, 9.0), (3, 4, 2.0)])
            .unwrap();
        assert_eq!(build_mst(&g).unwrap(), refs(&[0, 1, 2, 3]));
    }

    #[test]
    fn ties_prefer_lower_index() {
        let g = WeightedGraph::from_edges(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        assert_eq!(build_mst(&g).unwrap(), refs(&[0, 1]));
        let g = WeightedGraph::from_edges(2, [(0, 1, 2.0), (1, 0, 2.0)]).unwrap();
        assert_eq!(build_mst(&g).unwrap(), refs(&[0]));
    }

    #[test]
    fn disconnected_names_vertices() {
        let g = WeightedGraph::from_edges(4, [(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        assert_eq!(build_mst(&g).unwrap_err(), Error::Disconnected(0, 2));
    }

    #[test]
    fn star_backbone() {
        let g = WeightedGraph::from_edges(3, [(0, 1, 1.0), (0, 2, 1.0)]).unwrap();
        let b = build_backbone(&g, &refs(&[0, 1])).unwrap();
        assert_eq!(b.order, vec![0, 1, 2]);
        assert_eq!(b.pos, vec![0.0, 1.0, 3.0]);
        assert_eq!(b.length, 3.0);
        assert!(b.length <= 2.0 * b.tree_weight);
    }

    #[test]
    fn path_backbone() {
        let g = WeightedGraph::from_edges(3, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let b = build_backbone(&g, &refs(&[0, 1])).unwrap();
        assert_eq!(b.order, vec![0, 1, 2]);
        assert_eq!(b.pos, vec![0.0, 1.0, 2.0]);
        assert_eq!(b.length, b.tree_weight);
    }

    #[test]
    fn children_visited_in_ascending_id() {
        // 0 - 3, 0 - 1, 3 - 2
        let g = WeightedGraph::from_edges(4, [(0, 3, 1.0), (0, 1, 2.0), (3, 2, 5.0)]).unwrap();
        let b = build_backbone(&g, &refs(&[0, 1, 2])).unwrap();
        assert_eq!(b.order, vec![0, 1, 3, 2]);
        // 0 ->1 (2), 1 -> 3 via 0 (2 + 1), 3 -> 2 (5)
        assert_eq!(b.pos, vec![0.0, 2.0, 10.0, 5.0]);
    }

    #[test]
    fn single_vertex() {
        let g = WeightedGraph::new(1);
        let b = build_backbone(&g, &[]).unwrap();
        assert_eq!(b.order, vec![0]);
        assert_eq!(b.length, 0.0);
    }

    #[test]
    fn rejects_wrong_tree_size() {
        let g = WeightedGraph::from_edges(3, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        assert!(build_backbone(&g, &refs(&[0])).is_err());
    }
}
