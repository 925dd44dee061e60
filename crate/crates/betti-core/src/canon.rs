//! Canonical forms, automorphism groups, and isomorphism testing.
//!
//! The canonical labeling maximizes the concatenated adjacency code: placing
//! vertices one position at a time, the block contributed at depth d is the
//! adjacency bitmask of the new vertex against the already-placed prefix.
//! Only vertices achieving the maximal block can extend an optimal placement,
//! so the search branches exactly on ties and prunes against the best code
//! found so far. Every optimal placement is visited, which means the visited
//! optimal leaves enumerate the full automorphism group; completeness is
//! validated against known isomorphism-class counts rather than assumed.

use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;

/// Isomorphism-invariant byte string: the graph6 word of the canonically
/// relabeled graph. Equal codes iff isomorphic; total order is byte order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Result of a canonicalization run.
pub struct CanonicalData {
    pub code: CanonicalCode,
    /// Optimal placement: `placement[j]` is the original vertex at canonical
    /// position `j`.
    pub placement: Vec<usize>,
    /// Orbit (under the automorphism group) of the vertex occupying the last
    /// canonical position.
    pub last_orbit: VertexSet,
    /// The full automorphism group as vertex maps, if requested (identity
    /// included). Empty when not collected.
    pub group: Vec<Vec<u8>>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    placed: Vec<usize>,
    used: u64,
    rows: Vec<u64>,
    bits: [u64; 64],
    best_rows: Vec<u64>,
    best_placement: Vec<usize>,
    have_best: bool,
    last_orbit: u64,
    collect_group: bool,
    group: Vec<Vec<u8>>,
}

impl<'a> Search<'a> {
    fn leaf(&mut self, greater: bool) -> bool {
        if !self.have_best || greater {
            self.have_best = true;
            self.best_rows.clone_from(&self.rows);
            self.best_placement.clone_from(&self.placed);
            self.last_orbit = 1u64 << self.placed[self.n - 1];
            if self.collect_group {
                self.group.clear();
                self.group.push((0..self.n as u8).collect());
            }
            true
        } else {
            self.last_orbit |= 1u64 << self.placed[self.n - 1];
            if self.collect_group {
                let mut perm = vec![0u8; self.n];
                for j in 0..self.n {
                    perm[self.best_placement[j]] = self.placed[j] as u8;
                }
                self.group.push(perm);
            }
            false
        }
    }

    // `greater` says the current prefix already strictly beats the best code
    // (vacuously true until a first leaf establishes one). Returns whether the
    // best was replaced somewhere below; when that happens the current prefix
    // equals the new best's prefix, so the flag drops back to false for the
    // remaining siblings.
    fn rec(&mut self, depth: usize, greater_in: bool) -> bool {
        if depth == self.n {
            return self.leaf(greater_in);
        }
        let unused = self.g.vertex_mask() & !self.used;
        let mut block = 0u64;
        for v in VertexSet(unused).iter() {
            if self.bits[v] > block {
                block = self.bits[v];
            }
        }
        // only argmax vertices can extend an optimal placement
        if !greater_in && block < self.best_rows[depth] {
            return false;
        }
        let mut greater = greater_in;
        let mut replaced_any = false;
        for v in VertexSet(unused).iter() {
            if self.bits[v] != block {
                continue;
            }
            let child_greater = greater || block > self.best_rows[depth];
            self.placed.push(v);
            self.used |= 1 << v;
            self.rows.push(block);
            for w in VertexSet(self.g.neighbors(v) & self.g.vertex_mask() & !self.used).iter() {
                self.bits[w] |= 1 << depth;
            }
            if self.rec(depth + 1, child_greater) {
                replaced_any = true;
                greater = false;
            }
            for w in VertexSet(self.g.neighbors(v)).iter() {
                self.bits[w] &= !(1u64 << depth);
            }
            self.rows.pop();
            self.used &= !(1u64 << v);
            self.placed.pop();
        }
        replaced_any
    }
}

/// Canonicalizes `g`. Set `collect_group` to also receive the full
/// automorphism group (can be large for highly symmetric graphs).
pub fn canonicalize(g: &Graph, collect_group: bool) -> CanonicalData {
    let n = g.n();
    if n == 0 {
        return CanonicalData {
            code: CanonicalCode(emit_graph6(g)),
            placement: Vec::new(),
            last_orbit: VertexSet::EMPTY,
            group: Vec::new(),
        };
    }
    let mut s = Search {
        g,
        n,
        placed: Vec::with_capacity(n),
        used: 0,
        rows: Vec::with_capacity(n),
        bits: [0u64; 64],
        best_rows: vec![0; n],
        best_placement: Vec::new(),
        have_best: false,
        last_orbit: 0,
        collect_group,
        group: Vec::new(),
    };
    s.rec(0, true);
    let placement = s.best_placement;
    let mut relabeled = Graph::empty(n).unwrap();
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(placement[i], placement[j]) {
                relabeled.add_edge(i, j).unwrap();
            }
        }
    }
    CanonicalData {
        code: CanonicalCode(emit_graph6(&relabeled)),
        placement,
        last_orbit: VertexSet(s.last_orbit),
        group: s.group,
    }
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonicalize(g, false).code
}

/// The canonically relabeled graph together with the placement used.
pub fn canonical_form(g: &Graph) -> (Graph, Vec<usize>) {
    let data = canonicalize(g, false);
    let code = data.code;
    (crate::graph6::parse_graph6(code.as_str()).unwrap(), data.placement)
}

/// Full automorphism group as vertex→vertex maps, identity included.
pub fn automorphism_group(g: &Graph) -> Vec<Vec<u8>> {
    canonicalize(g, true).group
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

/// Applies a vertex permutation to a vertex bitmask.
pub fn apply_perm(perm: &[u8], set: u64) -> u64 {
    let mut out = 0u64;
    let mut bits = set;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= 1u64 << perm[v];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};

    #[test]
    fn relabelings_of_c4_share_a_code() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn c6_and_k33_differ() {
        let c6 = construct(&FamilySpec::Cycle(6)).unwrap();
        let k33 = construct(&FamilySpec::CompleteMultipartite(vec![3, 3])).unwrap();
        assert_ne!(canonical_code(&c6), canonical_code(&k33));
    }

    #[test]
    fn labeled_graphs_partition_into_known_class_counts() {
        // all labeled graphs on n vertices must land in the known numbers of
        // isomorphism classes; this validates completeness of the code
        let expected = [1usize, 1, 2, 4, 11, 34, 156];
        for n in 0..=6usize {
            let bits = n * n.saturating_sub(1) / 2;
            let mut codes = std::collections::BTreeSet::new();
            for mask in 0u32..1 << bits {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if mask >> k & 1 == 1 {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                codes.insert(canonical_code(&g));
            }
            assert_eq!(codes.len(), expected[n], "n = {n}");
        }
    }

    #[test]
    fn group_sizes_of_known_graphs() {
        let k4 = construct(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(automorphism_group(&k4).len(), 24);
        let c5 = construct(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(automorphism_group(&c5).len(), 10);
        let p3 = construct(&FamilySpec::Path(3)).unwrap();
        assert_eq!(automorphism_group(&p3).len(), 2);
        let ico = construct(&FamilySpec::Icosahedron).unwrap();
        assert_eq!(automorphism_group(&ico).len(), 120);
    }

    #[test]
    fn group_elements_are_automorphisms() {
        let g = construct(&FamilySpec::TriangularPath(6)).unwrap();
        for perm in automorphism_group(&g) {
            for u in 0..g.n() {
                for v in 0..g.n() {
                    assert_eq!(
                        g.has_edge(u, v),
                        g.has_edge(perm[u] as usize, perm[v] as usize)
                    );
                }
            }
        }
    }

    #[test]
    fn canonical_form_is_isomorphic_and_stable() {
        let g = construct(&FamilySpec::TriangularCycle(7)).unwrap();
        let (canon, placement) = canonical_form(&g);
        assert_eq!(placement.len(), 7);
        assert!(are_isomorphic(&g, &canon));
        assert_eq!(canonical_code(&canon), canonical_code(&g));
    }
}
