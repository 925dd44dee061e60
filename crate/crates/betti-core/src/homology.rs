//! Reduced simplicial homology of flag complexes over a chosen field.
//!
//! The augmented chain complex is used throughout: the empty face lives in
//! dimension -1 and the augmentation map sends every vertex to it. Reduced
//! Betti numbers then fall out of one uniform rank computation, and the empty
//! complex correctly reports b[-1] = 1.

use crate::complex::{build_flag_complex, FlagComplex};
use crate::error::Result;
use crate::field::{FieldSpec, SignMatrix};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Which complex of the graph to measure.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Setting {
    /// The clique complex of the graph itself.
    Clique,
    /// The independence complex: the clique complex of the complement.
    Independence,
}

impl std::fmt::Display for Setting {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Setting::Clique => "clique",
            Setting::Independence => "independence",
        })
    }
}

/// Reduced Betti numbers b[-1], b[0], ..., b[dim] and the field they were
/// computed over.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BettiVector {
    /// Entry i holds the reduced Betti number in dimension i - 1.
    pub reduced: Vec<u64>,
    pub field: FieldSpec,
}

impl BettiVector {
    pub fn total(&self) -> u64 {
        self.reduced.iter().sum()
    }

    /// Reduced Betti number in `dim` (from -1 upward); zero outside range.
    pub fn get(&self, dim: isize) -> u64 {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.reduced.get(i))
            .copied()
            .unwrap_or(0)
    }
}

fn boundary_matrix(cx: &FlagComplex, dim: usize) -> SignMatrix {
    let lower = cx.faces(dim - 1);
    let rows = cx
        .faces(dim)
        .iter()
        .map(|&face| {
            let mut entries = Vec::with_capacity(dim + 1);
            let mut bits = face;
            let mut i = 0i8;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                let facet = face & !(1u64 << v);
                let col = lower.binary_search(&facet).expect("complex downward closed");
                entries.push((col, if i % 2 == 0 { 1 } else { -1 }));
                i += 1;
            }
            entries
        })
        .collect();
    SignMatrix { ncols: lower.len(), rows }
}

/// Reduced Betti numbers of a flag complex over `field`.
///
/// For each dimension d, b[d] = f_d − rank ∂_d − rank ∂_{d+1}, with the
/// augmentation ∂_0 included (rank 1 as soon as any vertex exists).
pub fn betti(cx: &FlagComplex, field: FieldSpec) -> BettiVector {
    let dim = cx.dim();
    let f0 = cx.faces(0).len();
    let rank_aug = usize::from(f0 > 0) as u64;
    // b[-1]: the empty face minus the augmentation image
    let mut reduced = vec![1 - rank_aug];
    if dim >= 0 {
        let mut ranks = vec![0u64; dim as usize + 2];
        ranks[0] = rank_aug;
        for d in 1..=dim as usize {
            ranks[d] = boundary_matrix(cx, d).rank(field) as u64;
        }
        for d in 0..=dim as usize {
            let f = cx.faces(d).len() as u64;
            reduced.push(f - ranks[d] - ranks[d + 1]);
        }
    }
    BettiVector { reduced, field }
}

/// Euler identity: sum of (-1)^d f_d minus 1 equals the alternating sum of
/// reduced Betti numbers, whatever the field. Used as a self-check in tests.
pub fn euler_identity_holds(cx: &FlagComplex, bv: &BettiVector) -> bool {
    let lhs: i64 = cx
        .f_vector()
        .iter()
        .enumerate()
        .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
        .sum::<i64>()
        - 1;
    let rhs: i64 = bv
        .reduced
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            // entry i is dimension i-1
            if (i + 1) % 2 == 0 {
                b as i64
            } else {
                -(b as i64)
            }
        })
        .sum();
    lhs == rhs
}

/// Full Betti vector of the chosen complex of `g`.
pub fn betti_of_graph(g: &Graph, field: FieldSpec, setting: Setting) -> Result<BettiVector> {
    let cx = match setting {
        Setting::Clique => build_flag_complex(g, None)?,
        Setting::Independence => build_flag_complex(&g.complement(), None)?,
    };
    Ok(betti(&cx, field))
}

/// Sum of all reduced Betti numbers of the chosen complex of `g`.
pub fn total_reduced_betti(g: &Graph, field: FieldSpec, setting: Setting) -> Result<u64> {
    Ok(betti_of_graph(g, field, setting)?.total())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};

    fn ind_total(g: &Graph) -> u64 {
        total_reduced_betti(g, FieldSpec::GF2, Setting::Independence).unwrap()
    }

    #[test]
    fn empty_graph_has_total_one() {
        let g = Graph::empty(0).unwrap();
        let bv = betti_of_graph(&g, FieldSpec::GF2, Setting::Clique).unwrap();
        assert_eq!(bv.reduced, vec![1]);
        assert_eq!(bv.total(), 1);
        assert_eq!(bv.get(-1), 1);
    }

    #[test]
    fn independence_complex_of_k5() {
        let k5 = construct(&FamilySpec::Complete(5)).unwrap();
        assert_eq!(ind_total(&k5), 4);
        let bv = betti_of_graph(&k5, FieldSpec::Rationals, Setting::Independence).unwrap();
        assert_eq!(bv.get(0), 4);
    }

    #[test]
    fn k33_independence_total_is_one() {
        let g = construct(&FamilySpec::CompleteMultipartite(vec![3, 3])).unwrap();
        assert_eq!(ind_total(&g), 1);
    }

    #[test]
    fn triangular_path_initial_values() {
        let expect = [1u64, 0, 1, 2, 2];
        for (n, &want) in expect.iter().enumerate() {
            let g = construct(&FamilySpec::TriangularPath(n)).unwrap();
            assert_eq!(ind_total(&g), want, "TP_{n}");
        }
    }

    #[test]
    fn triangular_cycle_values() {
        for (n, want) in [(6usize, 2u64), (7, 1), (8, 5)] {
            let g = construct(&FamilySpec::TriangularCycle(n)).unwrap();
            assert_eq!(ind_total(&g), want, "TC_{n}");
        }
    }

    #[test]
    fn c5_star_i3_and_icosahedron() {
        let g = construct(&FamilySpec::C5StarI3).unwrap();
        assert_eq!(ind_total(&g), 2);
        let ico = construct(&FamilySpec::Icosahedron).unwrap();
        let bv = betti_of_graph(&ico, FieldSpec::GF2, Setting::Independence).unwrap();
        // one 2-sphere and six 1-spheres
        assert_eq!(bv.total(), 7);
        assert_eq!(bv.get(1), 6);
        assert_eq!(bv.get(2), 1);
    }

    #[test]
    fn heawood_clique_total_is_cycle_rank() {
        let g = crate::families::projective_plane_incidence(2).unwrap();
        let bv = betti_of_graph(&g, FieldSpec::GF2, Setting::Clique).unwrap();
        assert_eq!(bv.total(), 8); // e - v + 1 = 21 - 14 + 1
        assert_eq!(bv.get(1), 8);
    }

    #[test]
    fn kuenneth_on_two_triangles() {
        let k3 = construct(&FamilySpec::Complete(3)).unwrap();
        let g = k3.disjoint_union(&k3).unwrap();
        assert_eq!(ind_total(&g), 4);
    }

    #[test]
    fn isolated_vertex_kills_independence_homology() {
        let mut g = construct(&FamilySpec::Cycle(5)).unwrap();
        g = g.disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(ind_total(&g), 0);
    }

    #[test]
    fn euler_identity_on_assorted_graphs() {
        for spec in [
            FamilySpec::Complete(4),
            FamilySpec::Cycle(6),
            FamilySpec::TriangularCycle(8),
            FamilySpec::C5StarI3,
            FamilySpec::Turan { parts: 3, n: 8 },
        ] {
            let g = construct(&spec).unwrap();
            let cx = build_flag_complex(&g, None).unwrap();
            for field in [FieldSpec::GF2, FieldSpec::PrimeField(3), FieldSpec::Rationals] {
                let bv = betti(&cx, field);
                assert!(euler_identity_holds(&cx, &bv), "{spec:?} over {field}");
            }
        }
    }

    #[test]
    fn multipartite_clique_total_is_product_of_parts_minus_one() {
        // over every part vector with sum <= 10
        fn partitions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
            if total == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in (1..=max_part.min(total)).rev() {
                for mut rest in partitions(total - first, first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for sum in 1..=10usize {
            for parts in partitions(sum, sum) {
                let g = construct(&FamilySpec::CompleteMultipartite(parts.clone())).unwrap();
                let total = total_reduced_betti(&g, FieldSpec::GF2, Setting::Clique).unwrap();
                let product: u64 = parts.iter().map(|&p| p as u64 - 1).product();
                assert_eq!(total, product, "parts {parts:?}");
            }
        }
    }

    #[test]
    fn octahedron_clique_complex_is_a_two_sphere() {
        let g = construct(&FamilySpec::TriangularCycle(6)).unwrap();
        let bv = betti_of_graph(&g, FieldSpec::GF2, Setting::Clique).unwrap();
        assert_eq!(bv.get(2), 1);
        assert_eq!(bv.total(), 1);
    }
}
