//! Small simple graphs on at most 64 vertices with bitmask adjacency rows.
//!
//! Every other module consumes this representation. Vertices are always the
//! dense range `0..n`; adjacency is symmetric and irreflexive. The 64-vertex
//! cap keeps a neighborhood in a single machine word, so set operations on
//! neighborhoods are single instructions.

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some graph, stored as a bitmask over `0..64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates the members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// A simple undirected graph on `0..n` vertices, `n <= 64`.
///
/// `adj[v]` is the open-neighborhood bitmask of `v`. The structure is
/// immutable after construction from the caller's point of view; all
/// operations return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` is valid (the empty graph).
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!("{n} vertices > {MAX_VERTICES}")));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`. Rejects loops and out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Argument(format!("edge ({u},{v}) out of range for n={}", self.n)));
        }
        if u == v {
            return Err(Error::Argument(format!("self-loop at {u}")));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood N(v) as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood N[v] as a bitmask.
    pub fn closed_neighborhood(&self, v: usize) -> u64 {
        self.adj[v] | 1u64 << v
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1)))
                .iter()
                .map(move |v| (u, v))
                .collect::<Vec<_>>()
        })
    }

    pub fn vertex_mask(&self) -> u64 {
        VertexSet::full(self.n).0
    }

    /// A lowest-index vertex of minimum degree, or `None` on the empty graph.
    pub fn min_degree_vertex(&self) -> Option<usize> {
        (0..self.n).min_by_key(|&v| (self.degree(v), v))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Complement within the non-loop pairs; an involution.
    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union: this graph's vertices first, then `other`'s, no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!("{} + {} vertices > {MAX_VERTICES}", self.n, other.n)));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n, adj })
    }

    /// Join: disjoint union plus all edges between the two blocks.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).0;
        let right = g.vertex_mask() & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Induced subgraph on the complement of `a`, relabeled densely and
    /// order-preserving. The i-th returned vertex is the i-th kept original one.
    pub fn remove_set(&self, a: VertexSet) -> Result<Graph> {
        Ok(self.remove_set_with_map(a)?.0)
    }

    /// Like [`remove_set`](Self::remove_set) but also returns, for each new
    /// vertex, its original label.
    pub fn remove_set_with_map(&self, a: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if a.0 & !self.vertex_mask() != 0 {
            return Err(Error::Argument("vertex set out of range".into()));
        }
        let kept: Vec<usize> = VertexSet(self.vertex_mask() & !a.0).iter().collect();
        let mut g = Graph::empty(kept.len())?;
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                }
            }
        }
        Ok((g, kept))
    }

    /// Induced subgraph on the vertices of `keep` (order-preserving relabeling).
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        self.remove_set(VertexSet(self.vertex_mask() & !keep.0))
    }

    /// Convenience for `remove_set({v})`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::Argument(format!("vertex {v} out of range")));
        }
        self.remove_set(VertexSet::singleton(v))
    }

    /// Adds a vertex whose closed neighborhood is N[w] plus itself: the new
    /// vertex is joined to `w` and to every neighbor of `w`.
    pub fn add_dominated_vertex(&self, w: usize) -> Result<Graph> {
        if w >= self.n {
            return Err(Error::Argument(format!("vertex {w} out of range")));
        }
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::Capacity("adding a vertex exceeds 64".into()));
        }
        let mut g = Graph::empty(self.n + 1)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        let new = self.n;
        for u in VertexSet(self.closed_neighborhood(w)).iter() {
            g.adj[new] |= 1u64 << u;
            g.adj[u] |= 1u64 << new;
        }
        Ok(g)
    }

    /// Degeneracy: the least k such that every subgraph has a vertex of degree
    /// at most k, computed by repeated minimum-degree peeling.
    pub fn degeneracy(&self) -> usize {
        let mut alive = self.vertex_mask();
        let mut best = 0;
        while alive != 0 {
            let (v, d) = VertexSet(alive)
                .iter()
                .map(|v| (v, (self.adj[v] & alive).count_ones() as usize))
                .min_by_key(|&(v, d)| (d, v))
                .unwrap();
            best = best.max(d);
            alive &= !(1u64 << v);
        }
        best
    }

    /// Connected components as vertex bitmasks, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            loop {
                let mut next = comp;
                for u in VertexSet(comp).iter() {
                    next |= self.adj[u];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-coloring check; isolated vertices are fine.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in VertexSet(self.adj[u]).iter() {
                    if color[v] == 2 {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, or `None` if the graph is a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        // BFS from every vertex; a non-tree edge at depths (d1, d2) closes a
        // cycle of length d1 + d2 + 1 through the root.
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in VertexSet(self.adj[u]).iter() {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let cycle = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// True iff some vertex has no neighbors. False on the empty graph.
    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};

    fn k(n: usize) -> Graph {
        construct(&FamilySpec::Complete(n)).unwrap()
    }

    fn c(n: usize) -> Graph {
        construct(&FamilySpec::Cycle(n)).unwrap()
    }

    #[test]
    fn complement_of_complete_is_independent() {
        let g = k(5).complement();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 5);
    }

    #[test]
    fn c5_is_self_complementary() {
        let g = c(5);
        let h = g.complement();
        assert_eq!(crate::canon::canonical_code(&g), crate::canon::canonical_code(&h));
    }

    #[test]
    fn disjoint_union_counts() {
        let g = k(3).disjoint_union(&k(3)).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
        let e = Graph::empty(0).unwrap();
        assert_eq!(k(3).disjoint_union(&e).unwrap(), k(3));
    }

    #[test]
    fn join_examples() {
        let c5i3 = c(5).join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(c5i3.n(), 8);
        assert_eq!(c5i3.edge_count(), 20);
        // I_2 * I_2 = C_4
        let i2 = Graph::empty(2).unwrap();
        let g = i2.join(&i2).unwrap();
        assert_eq!(crate::canon::canonical_code(&g), crate::canon::canonical_code(&c(4)));
        // cone: one dominating vertex
        let cone = Graph::empty(1).unwrap().join(&c(4)).unwrap();
        assert_eq!(cone.degree(0), 4);
    }

    #[test]
    fn remove_set_examples() {
        let g = c(5);
        let p4 = g.remove_vertex(0).unwrap();
        assert_eq!(p4.n(), 4);
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(g.remove_set(VertexSet::EMPTY).unwrap(), g);
        // K_4 is a closed neighborhood: removing N[v] leaves nothing
        let k4 = k(4);
        let rest = k4.remove_set(VertexSet(k4.closed_neighborhood(1))).unwrap();
        assert_eq!(rest.n(), 0);
    }

    #[test]
    fn remove_set_is_order_preserving() {
        let g = Graph::from_edges(5, &[(0, 2), (2, 4), (1, 3)]).unwrap();
        let (h, map) = g.remove_set_with_map(VertexSet::singleton(2)).unwrap();
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert!(h.has_edge(1, 2)); // old (1,3)
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn dominated_vertex_examples() {
        let g = Graph::empty(1).unwrap().add_dominated_vertex(0).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        let g = k(3).add_dominated_vertex(1).unwrap();
        assert_eq!(crate::canon::canonical_code(&g), crate::canon::canonical_code(&k(4)));
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(k(4).degeneracy(), 3);
        let forest = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(forest.degeneracy(), 1);
        let tc8 = construct(&FamilySpec::TriangularCycle(8)).unwrap();
        assert_eq!(tc8.degeneracy(), 4);
        assert!(tc8.degeneracy() <= tc8.max_degree());
    }

    #[test]
    fn proper_subgraphs_of_connected_regular_graphs_lose_a_degree() {
        // any proper induced subgraph of a connected d-regular graph is
        // (d-1)-degenerate
        for (g, d) in [
            (k(4), 3),
            (construct(&FamilySpec::CompleteMultipartite(vec![3, 3])).unwrap(), 3),
            (construct(&FamilySpec::TriangularCycle(7)).unwrap(), 4),
        ] {
            assert!(g.is_connected());
            assert!((0..g.n()).all(|v| g.degree(v) == d));
            for mask in 1..(1u64 << g.n()) - 1 {
                let sub = g.induced(VertexSet(mask)).unwrap();
                assert!(sub.degeneracy() < d, "mask {mask:b}");
            }
        }
    }

    #[test]
    fn components_and_connectivity() {
        let g = k(3).disjoint_union(&k(2)).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].len(), 3);
        assert!(!g.is_connected());
        assert!(c(7).is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn girth_and_bipartite() {
        assert_eq!(c(5).girth(), Some(5));
        assert_eq!(k(4).girth(), Some(3));
        assert_eq!(Graph::from_edges(3, &[(0, 1)]).unwrap().girth(), None);
        assert!(c(6).is_bipartite());
        assert!(!c(5).is_bipartite());
    }
}
