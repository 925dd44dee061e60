//! Named graph families: complete multipartite and Turán graphs, cycles and
//! paths, triangular paths/cycles, the icosahedron, the join C5 ⋆ I3, wheels,
//! and projective-plane incidence graphs.
//!
//! Labelings are deterministic and documented per family so emitted graph6
//! words are reproducible.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Specification of a named family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    /// Parts occupy consecutive vertex blocks, first part first.
    CompleteMultipartite(Vec<usize>),
    Independent(usize),
    Complete(usize),
    /// Vertices 0..n around the cycle; requires n >= 3.
    Cycle(usize),
    /// Vertices 0..n along the path.
    Path(usize),
    /// Complete `parts`-partite graph on `n` vertices with balanced part
    /// sizes (larger parts first).
    Turan { parts: usize, n: usize },
    /// Vertices 0..n, edges between indices at distance <= 2.
    TriangularPath(usize),
    /// Vertices 0..n, edges between indices at cyclic distance <= 2;
    /// requires n >= 6 (smaller cases degenerate to multigraphs).
    TriangularCycle(usize),
    Icosahedron,
    /// The graph join of a 5-cycle (vertices 0..5) and three independent
    /// vertices (5..8).
    C5StarI3,
    /// Hub vertex 0 joined to the cycle 1..6.
    Wheel5,
    DisjointCopies(Box<FamilySpec>, usize),
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::CompleteMultipartite(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "K_{{{}}}", s.join(","))
            }
            FamilySpec::Independent(k) => write!(f, "I_{k}"),
            FamilySpec::Complete(d) => write!(f, "K_{d}"),
            FamilySpec::Cycle(n) => write!(f, "C_{n}"),
            FamilySpec::Path(n) => write!(f, "P_{n}"),
            FamilySpec::Turan { parts, n } => write!(f, "T({parts},{n})"),
            FamilySpec::TriangularPath(n) => write!(f, "TP_{n}"),
            FamilySpec::TriangularCycle(n) => write!(f, "TC_{n}"),
            FamilySpec::Icosahedron => write!(f, "icosahedron"),
            FamilySpec::C5StarI3 => write!(f, "C5*I3"),
            FamilySpec::Wheel5 => write!(f, "W5"),
            FamilySpec::DisjointCopies(base, m) => write!(f, "{m}x({base})"),
        }
    }
}

// vertex pairs of the icosahedron: 0 and 11 antipodal to each other,
// 1..6 the upper pentagon, 6..11 the lower pentagon
const ICOSAHEDRON_EDGES: [(usize, usize); 30] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 1),
    (1, 6),
    (1, 7),
    (2, 7),
    (2, 8),
    (3, 8),
    (3, 9),
    (4, 9),
    (4, 10),
    (5, 10),
    (5, 6),
    (6, 7),
    (7, 8),
    (8, 9),
    (9, 10),
    (10, 6),
    (6, 11),
    (7, 11),
    (8, 11),
    (9, 11),
    (10, 11),
];

/// Balanced part sizes for the complete `parts`-partite graph on `n` vertices.
pub fn turan_parts(parts: usize, n: usize) -> Result<Vec<usize>> {
    if parts == 0 {
        return Err(Error::Argument("Turán graph needs at least one part".into()));
    }
    let q = n / parts;
    let r = n % parts;
    Ok((0..parts).map(|i| q + usize::from(i < r)).collect())
}

pub fn construct(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::CompleteMultipartite(parts) => {
            let n: usize = parts.iter().sum();
            let mut g = Graph::empty(n)?;
            let mut starts = Vec::with_capacity(parts.len() + 1);
            let mut acc = 0;
            for &p in parts {
                starts.push(acc);
                acc += p;
            }
            starts.push(acc);
            for a in 0..parts.len() {
                for b in a + 1..parts.len() {
                    for u in starts[a]..starts[a + 1] {
                        for v in starts[b]..starts[b + 1] {
                            g.add_edge(u, v)?;
                        }
                    }
                }
            }
            Ok(g)
        }
        FamilySpec::Independent(k) => Graph::empty(*k),
        FamilySpec::Complete(d) => construct(&FamilySpec::CompleteMultipartite(vec![1; *d])),
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(Error::Argument(format!("cycle needs >= 3 vertices, got {n}")));
            }
            let mut g = Graph::empty(*n)?;
            for v in 0..*n {
                g.add_edge(v, (v + 1) % n)?;
            }
            Ok(g)
        }
        FamilySpec::Path(n) => {
            let mut g = Graph::empty(*n)?;
            for v in 1..*n {
                g.add_edge(v - 1, v)?;
            }
            Ok(g)
        }
        FamilySpec::Turan { parts, n } => {
            construct(&FamilySpec::CompleteMultipartite(turan_parts(*parts, *n)?))
        }
        FamilySpec::TriangularPath(n) => {
            let mut g = Graph::empty(*n)?;
            for v in 0..*n {
                for d in 1..=2usize {
                    if v + d < *n {
                        g.add_edge(v, v + d)?;
                    }
                }
            }
            Ok(g)
        }
        FamilySpec::TriangularCycle(n) => {
            if *n < 6 {
                return Err(Error::Argument(format!(
                    "triangular cycle degenerates below 6 vertices, got {n}"
                )));
            }
            let mut g = Graph::empty(*n)?;
            for v in 0..*n {
                for d in 1..=2usize {
                    g.add_edge(v, (v + d) % n)?;
                }
            }
            Ok(g)
        }
        FamilySpec::Icosahedron => {
            let g = Graph::from_edges(12, &ICOSAHEDRON_EDGES)?;
            debug_assert!((0..12).all(|v| g.degree(v) == 5));
            debug_assert!(icosahedron_neighborhoods_are_pentagons(&g));
            Ok(g)
        }
        FamilySpec::C5StarI3 => construct(&FamilySpec::Cycle(5))?.join(&Graph::empty(3)?),
        FamilySpec::Wheel5 => Graph::empty(1)?.join(&construct(&FamilySpec::Cycle(5))?),
        FamilySpec::DisjointCopies(base, m) => {
            let block = construct(base)?;
            let mut g = Graph::empty(0)?;
            for _ in 0..*m {
                g = g.disjoint_union(&block)?;
            }
            Ok(g)
        }
    }
}

fn icosahedron_neighborhoods_are_pentagons(g: &Graph) -> bool {
    let c5 = construct(&FamilySpec::Cycle(5)).unwrap();
    (0..g.n()).all(|v| {
        let nb = g.induced(VertexSet(g.neighbors(v))).unwrap();
        crate::canon::are_isomorphic(&nb, &c5)
    })
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..=p / 2).all(|d| !p.is_multiple_of(d))
}

/// Point–line incidence graph of the projective plane of prime order `p`:
/// bipartite, (p+1)-regular, girth 6, with p^2+p+1 vertices per side.
/// Points come first (indices 0..p^2+p+1), then lines. Both sides are indexed
/// by homogeneous coordinate triples over the p-element field, normalized so
/// the first nonzero coordinate is 1, in lexicographic order.
pub fn projective_plane_incidence(p: u64) -> Result<Graph> {
    if !is_prime(p) {
        return Err(Error::Argument(format!("{p} is not prime")));
    }
    let side = (p * p + p + 1) as usize;
    if 2 * side > crate::graph::MAX_VERTICES {
        return Err(Error::Argument(format!(
            "incidence graph of order {p} needs {} vertices",
            2 * side
        )));
    }
    let mut triples = Vec::with_capacity(side);
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                let t = [a, b, c];
                if t.iter().find(|&&x| x != 0) == Some(&1) {
                    triples.push(t);
                }
            }
        }
    }
    debug_assert_eq!(triples.len(), side);
    let mut g = Graph::empty(2 * side)?;
    for (i, pt) in triples.iter().enumerate() {
        for (j, ln) in triples.iter().enumerate() {
            let dot: u64 = pt.iter().zip(ln).map(|(x, y)| x * y).sum();
            if dot.is_multiple_of(p) {
                g.add_edge(i, side + j)?;
            }
        }
    }
    Ok(g)
}
