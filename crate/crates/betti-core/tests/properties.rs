//! Property tests for the structural invariants.

use betti_core::canon::canonical_code;
use betti_core::field::FieldSpec;
use betti_core::graph::{Graph, VertexSet};
use betti_core::graph6::{emit_graph6, parse_graph6};
use betti_core::homology::{total_reduced_betti, Setting};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let bits = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), bits))
        })
        .prop_map(|(n, bits)| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
}

fn arb_permuted(g: &Graph, perm: &[usize]) -> Graph {
    let mut h = Graph::empty(g.n()).unwrap();
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v]).unwrap();
    }
    h
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let word = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&word).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(16)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn join_is_complement_of_union_of_complements(
        a in arb_graph(6),
        b in arb_graph(6),
    ) {
        let joined = a.join(&b).unwrap();
        let dual = a
            .complement()
            .disjoint_union(&b.complement())
            .unwrap()
            .complement();
        prop_assert_eq!(joined, dual);
    }

    #[test]
    fn canonical_code_is_label_invariant(g in arb_graph(7), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let relabeled = arb_permuted(&g, &perm);
        prop_assert_eq!(canonical_code(&g), canonical_code(&relabeled));
    }

    #[test]
    fn removing_nothing_is_identity(g in arb_graph(12)) {
        prop_assert_eq!(g.remove_set(VertexSet::EMPTY).unwrap(), g);
    }

    #[test]
    fn kuenneth_multiplicativity(a in arb_graph(5), b in arb_graph(5)) {
        let union = a.disjoint_union(&b).unwrap();
        let t = |g: &Graph| total_reduced_betti(g, FieldSpec::GF2, Setting::Independence).unwrap();
        prop_assert_eq!(t(&union), t(&a) * t(&b));
    }

    #[test]
    fn mayer_vietoris_at_every_vertex(g in arb_graph(7)) {
        let t = |g: &Graph| total_reduced_betti(g, FieldSpec::GF2, Setting::Independence).unwrap();
        for v in 0..g.n() {
            let (without_v, without_nbhd) = betti_core::split_children(&g, v).unwrap();
            prop_assert!(t(&g) <= t(&without_v) + t(&without_nbhd));
        }
    }

    #[test]
    fn degeneracy_at_most_max_degree(g in arb_graph(12)) {
        prop_assert!(g.degeneracy() <= g.max_degree());
    }

    #[test]
    fn certified_bound_dominates_exact_total(g in arb_graph(8)) {
        let cert = betti_core::certify(&g, &betti_core::CertifyConfig::default()).unwrap();
        let exact = total_reduced_betti(&g, FieldSpec::GF2, Setting::Independence).unwrap();
        prop_assert!(cert.bound >= exact);
        prop_assert_eq!(cert.root.replay(), Some(cert.bound));
    }

    #[test]
    fn euler_alternating_sum(g in arb_graph(8)) {
        let cx = betti_core::build_flag_complex(&g, None).unwrap();
        let bv = betti_core::betti(&cx, FieldSpec::PrimeField(3));
        prop_assert!(betti_core::homology::euler_identity_holds(&cx, &bv));
    }
}
