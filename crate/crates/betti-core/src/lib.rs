//! Exact total reduced Betti numbers of clique and independence complexes of
//! small graphs, together with everything needed to reproduce the desk-scale
//! extremal picture: growth-base root equations, closed-form bounds with
//! recursive certificates, isomorph-free exhaustive search with witnesses,
//! and a claim catalogue (`verify-paper`) tying it all to published values.
//!
//! With the default `parallel` feature the enumeration and scoring layers run
//! on rayon; disabling it gives a sequential build with identical output.

pub mod bounds;
pub mod canon;
pub mod certify;
pub mod claims;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod families;
pub mod field;
pub mod graph;
pub mod graph6;
pub mod homology;
pub mod induced;
pub mod roots;
pub mod search;

pub use bounds::{theorem_bound, BoundFormula, BoundValue, ExactPow};
pub use canon::{automorphism_group, canonical_code, canonical_form, CanonicalCode};
pub use certify::{certify, fold_step, split_children, BoundCertificate, CertifyConfig};
pub use claims::{run_verify_paper, ClaimRecord, Scope, VerifyReport};
pub use complex::{build_flag_complex, FlagComplex};
pub use enumerate::{enumerate_hfree, enumerate_levels};
pub use error::{Error, Result};
pub use families::{construct, projective_plane_incidence, FamilySpec};
pub use field::FieldSpec;
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_file};
pub use homology::{betti, betti_of_graph, total_reduced_betti, BettiVector, Setting};
pub use induced::{contains_induced, contains_induced_touching};
pub use roots::{gamma, solve_root, solve_root_default, theta, RootQuery, RootResult};
pub use search::{
    check_monotonicity, extremal_betti, score_corpus, HPattern, SearchConfig, SearchReport,
};
