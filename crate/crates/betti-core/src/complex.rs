//! Flag (clique) complexes of graphs.
//!
//! Faces are vertex bitmasks grouped by dimension; dimension d holds the
//! (d+1)-element cliques. A global face-count guard protects against
//! accidentally dense inputs; `BETTI_MAX_FACES` overrides it.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::sync::OnceLock;

const DEFAULT_MAX_FACES: usize = 1 << 26;

fn face_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("BETTI_MAX_FACES")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_FACES)
    })
}

/// The clique complex of a graph: every face induces a complete subgraph.
#[derive(Clone, Debug)]
pub struct FlagComplex {
    n: usize,
    /// `faces[d]` lists the d-dimensional face bitmasks, sorted ascending.
    faces: Vec<Vec<u64>>,
}

impl FlagComplex {
    /// Number of vertices of the underlying graph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the complex, or -1 when there are no vertices.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    pub fn faces(&self, dim: usize) -> &[u64] {
        self.faces.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Face counts (f_0, f_1, ...).
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn total_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Downward closure check: every facet of every face is present one
    /// dimension lower. Quadratic; intended for tests.
    pub fn is_downward_closed(&self) -> bool {
        for d in 1..self.faces.len() {
            for &face in &self.faces[d] {
                let mut bits = face;
                while bits != 0 {
                    let v = bits.trailing_zeros();
                    bits &= bits - 1;
                    let facet = face & !(1u64 << v);
                    if self.faces[d - 1].binary_search(&facet).is_err() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Enumerates all cliques of `g` (sizes 1 up to `max_dim + 1` when given),
/// grouped by dimension, by pivot-free ordered extension: each clique is
/// grown only by vertices above its maximum that are adjacent to all of it.
/// The face-count guard comes from `BETTI_MAX_FACES` (default 2^26).
pub fn build_flag_complex(g: &Graph, max_dim: Option<usize>) -> Result<FlagComplex> {
    build_flag_complex_with_limit(g, max_dim, face_limit())
}

/// As [`build_flag_complex`] with an explicit face-count guard.
pub fn build_flag_complex_with_limit(
    g: &Graph,
    max_dim: Option<usize>,
    limit: usize,
) -> Result<FlagComplex> {
    let depth_cap = max_dim.map(|d| d + 1).unwrap_or(usize::MAX);
    let mut faces: Vec<Vec<u64>> = Vec::new();
    let mut total = 0usize;

    fn extend(
        g: &Graph,
        clique: u64,
        size: usize,
        candidates: u64,
        depth_cap: usize,
        faces: &mut Vec<Vec<u64>>,
        total: &mut usize,
        limit: usize,
    ) -> Result<()> {
        if size > 0 {
            if faces.len() < size {
                faces.push(Vec::new());
            }
            faces[size - 1].push(clique);
            *total += 1;
            if *total > limit {
                return Err(Error::Resource(format!(
                    "face count exceeds {limit} (set BETTI_MAX_FACES to raise)"
                )));
            }
        }
        if size == depth_cap {
            return Ok(());
        }
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            extend(
                g,
                clique | 1u64 << v,
                size + 1,
                rest & g.neighbors(v),
                depth_cap,
                faces,
                total,
                limit,
            )?;
        }
        Ok(())
    }

    extend(g, 0, 0, g.vertex_mask(), depth_cap, &mut faces, &mut total, limit)?;
    for level in &mut faces {
        level.sort_unstable();
    }
    Ok(FlagComplex { n: g.n(), faces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};

    #[test]
    fn complete_graph_is_a_simplex() {
        let g = construct(&FamilySpec::Complete(4)).unwrap();
        let cx = build_flag_complex(&g, None).unwrap();
        assert_eq!(cx.f_vector(), vec![4, 6, 4, 1]);
        assert!(cx.is_downward_closed());
    }

    #[test]
    fn five_cycle_has_no_triangles() {
        let g = construct(&FamilySpec::Cycle(5)).unwrap();
        let cx = build_flag_complex(&g, None).unwrap();
        assert_eq!(cx.f_vector(), vec![5, 5]);
    }

    #[test]
    fn octahedron_boundary() {
        let g = construct(&FamilySpec::TriangularCycle(6)).unwrap();
        let cx = build_flag_complex(&g, None).unwrap();
        assert_eq!(cx.f_vector(), vec![6, 12, 8]);
    }

    #[test]
    fn empty_graph_empty_complex() {
        let cx = build_flag_complex(&Graph::empty(0).unwrap(), None).unwrap();
        assert_eq!(cx.dim(), -1);
        assert_eq!(cx.f_vector(), Vec::<usize>::new());
    }

    #[test]
    fn max_dim_truncates() {
        let g = construct(&FamilySpec::Complete(5)).unwrap();
        let cx = build_flag_complex(&g, Some(1)).unwrap();
        assert_eq!(cx.f_vector(), vec![5, 10]);
    }

    #[test]
    fn face_guard_trips() {
        let g = construct(&FamilySpec::Complete(10)).unwrap();
        match build_flag_complex_with_limit(&g, None, 100) {
            Err(crate::error::Error::Resource(_)) => {}
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn faces_are_sorted_and_unique() {
        let g = construct(&FamilySpec::TriangularPath(7)).unwrap();
        let cx = build_flag_complex(&g, None).unwrap();
        for d in 0..=cx.dim() as usize {
            let fs = cx.faces(d);
            assert!(fs.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(cx.is_downward_closed());
    }
}
