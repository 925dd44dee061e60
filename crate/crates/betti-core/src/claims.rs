//! The `verify-paper` claim catalogue: every published desk-scale value the
//! library reproduces, executed as one pass/fail record each.
//!
//! Records carry a provenance tag: `published` values are asserted against
//! the printed source numbers, `derived` values against an independent
//! computation, `trivial` values follow from definitions.

use crate::bounds::{theorem_bound, BoundFormula};
use crate::canon::{are_isomorphic, canonical_code};
use crate::certify::{certify, fold_step, split_children, CertifyConfig};
use crate::complex::build_flag_complex;
use crate::error::Result;
use crate::exec::par_map;
use crate::families::{construct, projective_plane_incidence, turan_parts, FamilySpec};
use crate::field::FieldSpec;
use crate::graph::Graph;
use crate::homology::{betti_of_graph, total_reduced_betti, Setting};
use crate::roots::{gamma, solve_root_default, theta};
use crate::search::{check_monotonicity, extremal_betti, sweep_bound, HPattern, SearchConfig};
use serde::Serialize;

pub const PRINT_TOLERANCE: f64 = 5e-5;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Published,
    Trivial,
    Derived,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Tables,
    Graphs,
    Bounds,
    Search,
}

impl Scope {
    pub fn parse(name: &str) -> Option<Option<Scope>> {
        match name.to_ascii_lowercase().as_str() {
            "all" => Some(None),
            "tables" => Some(Some(Scope::Tables)),
            "graphs" => Some(Some(Scope::Graphs)),
            "bounds" => Some(Some(Scope::Bounds)),
            "search" => Some(Some(Scope::Search)),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "tol")]
pub enum CompareMode {
    ExactInt,
    RealWithin(f64),
    Holds,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub scope: Scope,
    pub anchor: String,
    pub provenance: Provenance,
    pub computed: String,
    pub expected: String,
    pub mode: CompareMode,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub scope: String,
    pub filter: Option<String>,
    pub backend: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub records: Vec<ClaimRecord>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

struct Outcome {
    computed: String,
    expected: String,
    mode: CompareMode,
    pass: bool,
}

fn real(computed: f64, expected: f64, tol: f64) -> Outcome {
    Outcome {
        computed: format!("{computed:.6}"),
        expected: format!("{expected}"),
        mode: CompareMode::RealWithin(tol),
        pass: (computed - expected).abs() <= tol,
    }
}

fn exact(computed: u64, expected: u64) -> Outcome {
    Outcome {
        computed: computed.to_string(),
        expected: expected.to_string(),
        mode: CompareMode::ExactInt,
        pass: computed == expected,
    }
}

fn holds(pass: bool, computed: impl Into<String>, expected: impl Into<String>) -> Outcome {
    Outcome {
        computed: computed.into(),
        expected: expected.into(),
        mode: CompareMode::Holds,
        pass,
    }
}

type ClaimFn = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

struct Claim {
    id: &'static str,
    scope: Scope,
    anchor: &'static str,
    provenance: Provenance,
    run: ClaimFn,
}

fn claim(
    id: &'static str,
    scope: Scope,
    anchor: &'static str,
    provenance: Provenance,
    run: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
) -> Claim {
    Claim { id, scope, anchor, provenance, run: Box::new(run) }
}

fn ind_total(g: &Graph) -> Result<u64> {
    total_reduced_betti(g, FieldSpec::GF2, Setting::Independence)
}

fn named(spec: FamilySpec) -> Graph {
    construct(&spec).expect("family within capacity")
}

fn root_value(exps: &[u32]) -> f64 {
    solve_root_default(exps).expect("solvable").value
}

fn theta2_column(exps: &[u32]) -> f64 {
    let t2 = theta(2);
    exps.iter().map(|&a| t2.powi(-(a as i32))).sum()
}

fn catalogue() -> Vec<Claim> {
    let mut claims: Vec<Claim> = Vec::new();
    let tol = PRINT_TOLERANCE;

    // ------------------------------------------------------------------
    // tables: growth bases and root values
    // ------------------------------------------------------------------
    const THETA_PRINTED: [f64; 5] = [1.0, 1.2599, 1.3161, 1.3195, 1.3077];
    const GAMMA_PRINTED: [f64; 5] = [1.0, 1.2207, 1.2499, 1.2434, 1.2293];
    const THETA_IDS: [&str; 5] = ["tables/theta/1", "tables/theta/2", "tables/theta/3", "tables/theta/4", "tables/theta/5"];
    const GAMMA_IDS: [&str; 5] = ["tables/gamma/1", "tables/gamma/2", "tables/gamma/3", "tables/gamma/4", "tables/gamma/5"];
    for d in 1..=5u32 {
        claims.push(claim(
            THETA_IDS[d as usize - 1],
            Scope::Tables,
            "growth-base approximation table (theta)",
            Provenance::Published,
            move || Ok(real(theta(d), THETA_PRINTED[d as usize - 1], tol)),
        ));
        claims.push(claim(
            GAMMA_IDS[d as usize - 1],
            Scope::Tables,
            "growth-base approximation table (gamma)",
            Provenance::Published,
            move || Ok(real(gamma(d), GAMMA_PRINTED[d as usize - 1], tol)),
        ));
    }
    claims.push(claim(
        "tables/gamma/3-five-digit",
        Scope::Tables,
        "appendix root-value table, row (4,5,6)",
        Provenance::Published,
        move || Ok(real(gamma(3), 1.24985, tol)),
    ));
    // documents that the gamma_4 print value is off by one final digit: the
    // computed root agrees with the printed 1.2434 only to one print-ulp
    claims.push(claim(
        "tables/gamma/4-print-ulp",
        Scope::Tables,
        "growth-base approximation table (gamma), last-digit rounding",
        Provenance::Derived,
        move || Ok(real(gamma(4), 1.2434, 1e-4)),
    ));

    const TABLE3: [(&str, &[u32], f64); 11] = [
        ("tables/roots/3-3", &[3, 3], 1.2599),
        ("tables/roots/6-6-6-6", &[6, 6, 6, 6], 1.2599),
        ("tables/roots/5-7-10-10-11-11-12-12", &[5, 7, 10, 10, 11, 11, 12, 12], 1.2590),
        ("tables/roots/6-6-9-10-11-11-12-13", &[6, 6, 9, 10, 11, 11, 12, 13], 1.2590),
        ("tables/roots/6-6-7-8-9", &[6, 6, 7, 8, 9], 1.2564),
        ("tables/roots/1-7", &[1, 7], 1.2554),
        ("tables/roots/5-6-6-8", &[5, 6, 6, 8], 1.2541),
        ("tables/roots/5-6-7-7", &[5, 6, 7, 7], 1.2519),
        ("tables/roots/4-5-6", &[4, 5, 6], 1.24985),
        ("tables/roots/5-5-5", &[5, 5, 5], 1.2457),
        ("tables/roots/3-4", &[3, 4], 1.2207),
    ];
    for (id, exps, printed) in TABLE3 {
        claims.push(claim(
            id,
            Scope::Tables,
            "appendix root-value table",
            Provenance::Published,
            move || Ok(real(root_value(exps), printed, tol)),
        ));
    }

    const THETA2_COLUMN: [(&str, &[u32], f64); 5] = [
        ("tables/theta2-column/3-3", &[3, 3], 1.0),
        ("tables/theta2-column/6-6-6-6", &[6, 6, 6, 6], 1.0),
        ("tables/theta2-column/4-5-6", &[4, 5, 6], 0.9618),
        ("tables/theta2-column/5-5-5", &[5, 5, 5], 0.9449),
        ("tables/theta2-column/3-4", &[3, 4], 0.8969),
    ];
    for (id, exps, printed) in THETA2_COLUMN {
        claims.push(claim(
            id,
            Scope::Tables,
            "appendix root-value table, theta_2 weight column",
            Provenance::Published,
            move || Ok(real(theta2_column(exps), printed, tol)),
        ));
    }

    claims.push(claim(
        "tables/comparison/x0",
        Scope::Tables,
        "root of 3x + 1 = x^6 used against theta_3",
        Provenance::Published,
        move || Ok(real(root_value(&[5, 5, 5, 6]), 1.3038, tol)),
    ));
    claims.push(claim(
        "tables/comparison/x1",
        Scope::Tables,
        "root of 2x + 1 = x^6 used against gamma_4",
        Provenance::Published,
        move || Ok(real(root_value(&[5, 5, 6]), 1.2298, tol)),
    ));
    claims.push(claim(
        "tables/comparison/3theta3-plus-1",
        Scope::Tables,
        "degree-4 case of the K5-free bound",
        Provenance::Published,
        move || {
            let t3 = theta(3);
            Ok(holds(
                3.0 * t3 + 1.0 <= t3.powi(6),
                format!("{:.6} <= {:.6}", 3.0 * t3 + 1.0, t3.powi(6)),
                "3*theta_3 + 1 <= theta_3^6",
            ))
        },
    ));
    claims.push(claim(
        "tables/comparison/2gamma4-plus-1",
        Scope::Tables,
        "non-cubic case of the triangle-free bound",
        Provenance::Published,
        move || {
            let g4 = gamma(4);
            Ok(holds(
                2.0 * g4 + 1.0 <= g4.powi(6),
                format!("{:.6} <= {:.6}", 2.0 * g4 + 1.0, g4.powi(6)),
                "2*gamma_4 + 1 <= gamma_4^6",
            ))
        },
    ));
    const BELOW_THETA2: [(&str, &[u32]); 4] = [
        ("tables/comparison/r-1-7-below-theta2", &[1, 7]),
        ("tables/comparison/r-6-6-7-8-9-below-theta2", &[6, 6, 7, 8, 9]),
        ("tables/comparison/r-5-7-10s-below-theta2", &[5, 7, 10, 10, 11, 11, 12, 12]),
        ("tables/comparison/r-6-6-9-10s-below-theta2", &[6, 6, 9, 10, 11, 11, 12, 13]),
    ];
    for (id, exps) in BELOW_THETA2 {
        claims.push(claim(
            id,
            Scope::Tables,
            "root comparisons against theta_2 = 2^{1/3}",
            Provenance::Published,
            move || {
                let r = root_value(exps);
                Ok(holds(
                    r < theta(2),
                    format!("{r:.6} < {:.6}", theta(2)),
                    "root below 2^{1/3}",
                ))
            },
        ));
    }
    claims.push(claim(
        "tables/shape/theta-peak-at-4",
        Scope::Tables,
        "theta_d increases to d = 4 then decreases",
        Provenance::Published,
        move || {
            let up = (1..4).all(|d| theta(d) < theta(d + 1));
            let down = (4..10).all(|d| theta(d) > theta(d + 1));
            Ok(holds(up && down, format!("up={up} down={down}"), "peak at d = 4"))
        },
    ));
    claims.push(claim(
        "tables/shape/gamma-peak-at-3",
        Scope::Tables,
        "gamma_d increases to d = 3 then decreases",
        Provenance::Published,
        move || {
            let up = (1..3).all(|d| gamma(d) < gamma(d + 1));
            let down = (3..10).all(|d| gamma(d) > gamma(d + 1));
            Ok(holds(up && down, format!("up={up} down={down}"), "peak at d = 3"))
        },
    ));
    claims.push(claim(
        "tables/shape/entrywise-monotonicity",
        Scope::Tables,
        "larger exponent tuples give smaller roots",
        Provenance::Published,
        move || {
            let pairs: [(&[u32], &[u32]); 3] =
                [(&[3, 3], &[3, 4]), (&[5, 6, 7, 7], &[5, 6, 7, 8]), (&[1, 7], &[2, 7])];
            let ok = pairs
                .iter()
                .all(|(a, b)| root_value(b) <= root_value(a) + 1e-12);
            Ok(holds(ok, format!("{ok}"), "r(b) <= r(a) whenever b >= a entrywise"))
        },
    ));
    claims.push(claim(
        "tables/identity/theta-tuple",
        Scope::Tables,
        "theta_d solves the constant tuple equation",
        Provenance::Trivial,
        move || {
            let worst = (1..=8u32)
                .map(|d| (root_value(&vec![d + 1; d as usize]) - theta(d)).abs())
                .fold(0.0f64, f64::max);
            Ok(holds(worst < 1e-9, format!("max deviation {worst:.2e}"), "< 1e-9"))
        },
    ));

    // ------------------------------------------------------------------
    // graphs: named exact homology totals
    // ------------------------------------------------------------------
    struct NamedValue(&'static str, fn() -> Graph, u64, Provenance);
    const NAMED_VALUES: &[NamedValue] = &[
        NamedValue("graphs/betti/empty", || named(FamilySpec::Independent(0)), 1, Provenance::Published),
        NamedValue("graphs/betti/k5", || named(FamilySpec::Complete(5)), 4, Provenance::Published),
        NamedValue("graphs/betti/k33", || named(FamilySpec::CompleteMultipartite(vec![3, 3])), 1, Provenance::Published),
        NamedValue("graphs/betti/tp0", || named(FamilySpec::TriangularPath(0)), 1, Provenance::Published),
        NamedValue("graphs/betti/tp1", || named(FamilySpec::TriangularPath(1)), 0, Provenance::Published),
        NamedValue("graphs/betti/tp2", || named(FamilySpec::TriangularPath(2)), 1, Provenance::Published),
        NamedValue("graphs/betti/tp3", || named(FamilySpec::TriangularPath(3)), 2, Provenance::Published),
        NamedValue("graphs/betti/tp4", || named(FamilySpec::TriangularPath(4)), 2, Provenance::Published),
        NamedValue("graphs/betti/tc6", || named(FamilySpec::TriangularCycle(6)), 2, Provenance::Published),
        NamedValue("graphs/betti/tc7", || named(FamilySpec::TriangularCycle(7)), 1, Provenance::Published),
        NamedValue("graphs/betti/tc8", || named(FamilySpec::TriangularCycle(8)), 5, Provenance::Published),
        NamedValue("graphs/betti/c5-star-i3", || named(FamilySpec::C5StarI3), 2, Provenance::Published),
        NamedValue("graphs/betti/icosahedron", || named(FamilySpec::Icosahedron), 7, Provenance::Published),
        NamedValue(
            "graphs/betti/two-triangles",
            || named(FamilySpec::DisjointCopies(Box::new(FamilySpec::Complete(3)), 2)),
            4,
            Provenance::Published,
        ),
    ];
    for NamedValue(id, build, expected, prov) in NAMED_VALUES {
        let (build, expected) = (*build, *expected);
        claims.push(claim(
            id,
            Scope::Graphs,
            "independence-complex totals of the named case graphs",
            *prov,
            move || Ok(exact(ind_total(&build())?, expected)),
        ));
    }
    claims.push(claim(
        "graphs/betti/icosahedron-spheres",
        Scope::Graphs,
        "icosahedron independence complex: six 1-spheres and one 2-sphere",
        Provenance::Published,
        move || {
            let bv = betti_of_graph(
                &named(FamilySpec::Icosahedron),
                FieldSpec::GF2,
                Setting::Independence,
            )?;
            Ok(holds(
                bv.get(1) == 6 && bv.get(2) == 1 && bv.total() == 7,
                format!("b1={} b2={} total={}", bv.get(1), bv.get(2), bv.total()),
                "b1=6 b2=1 total=7",
            ))
        },
    ));
    claims.push(claim(
        "graphs/betti/field-independence-named",
        Scope::Graphs,
        "named totals agree over GF(2), GF(3), GF(5) and the rationals",
        Provenance::Derived,
        move || {
            let fields = [
                FieldSpec::GF2,
                FieldSpec::PrimeField(3),
                FieldSpec::PrimeField(5),
                FieldSpec::Rationals,
            ];
            for NamedValue(_, build, expected, _) in NAMED_VALUES {
                let g = build();
                for f in fields {
                    if total_reduced_betti(&g, f, Setting::Independence)? != *expected {
                        return Ok(holds(false, format!("mismatch over {f}"), "all fields agree"));
                    }
                }
            }
            Ok(holds(true, "all named values agree", "all fields agree"))
        },
    ));
    claims.push(claim(
        "graphs/octahedron/f-vector",
        Scope::Graphs,
        "clique complex of the 6-vertex triangular cycle is the cross-polytope boundary",
        Provenance::Derived,
        move || {
            let cx = build_flag_complex(&named(FamilySpec::TriangularCycle(6)), None)?;
            Ok(holds(
                cx.f_vector() == vec![6, 12, 8],
                format!("{:?}", cx.f_vector()),
                "[6, 12, 8]",
            ))
        },
    ));
    claims.push(claim(
        "graphs/tc6-is-octahedron",
        Scope::Graphs,
        "TC_6 equals the complete tripartite graph on doubled parts",
        Provenance::Derived,
        move || {
            let iso = are_isomorphic(
                &named(FamilySpec::TriangularCycle(6)),
                &named(FamilySpec::CompleteMultipartite(vec![2, 2, 2])),
            );
            Ok(holds(iso, format!("{iso}"), "isomorphic"))
        },
    ));
    claims.push(claim(
        "graphs/heawood/total",
        Scope::Graphs,
        "clique-complex total of the order-2 incidence graph equals e - v + 1",
        Provenance::Derived,
        move || {
            let g = projective_plane_incidence(2)?;
            let total = total_reduced_betti(&g, FieldSpec::GF2, Setting::Clique)?;
            Ok(exact(total, (g.edge_count() - g.n() + 1) as u64))
        },
    ));
    claims.push(claim(
        "graphs/heawood/total-is-8",
        Scope::Graphs,
        "21 - 14 + 1 for the order-2 plane",
        Provenance::Derived,
        move || {
            let g = projective_plane_incidence(2)?;
            Ok(exact(total_reduced_betti(&g, FieldSpec::GF2, Setting::Clique)?, 8))
        },
    ));
    claims.push(claim(
        "graphs/heawood/structure",
        Scope::Graphs,
        "incidence graph of the order-2 plane: bipartite, connected, girth 6, no induced 4-cycle",
        Provenance::Published,
        move || {
            let g = projective_plane_incidence(2)?;
            let c4 = named(FamilySpec::Cycle(4));
            let ok = g.n() == 14
                && g.edge_count() == 21
                && g.is_bipartite()
                && g.is_connected()
                && g.girth() == Some(6)
                && !crate::induced::contains_induced(&g, &c4);
            Ok(holds(ok, format!("{ok}"), "all structure checks"))
        },
    ));
    claims.push(claim(
        "graphs/pg3/total-is-27",
        Scope::Graphs,
        "52 - 26 + 1 for the order-3 plane",
        Provenance::Derived,
        move || {
            let g = projective_plane_incidence(3)?;
            Ok(exact(total_reduced_betti(&g, FieldSpec::GF2, Setting::Clique)?, 27))
        },
    ));
    claims.push(claim(
        "graphs/pg3/structure",
        Scope::Graphs,
        "incidence graph of the order-3 plane: 26 vertices, 4-regular, girth 6",
        Provenance::Published,
        move || {
            let g = projective_plane_incidence(3)?;
            let ok = g.n() == 26
                && g.edge_count() == 52
                && (0..26).all(|v| g.degree(v) == 4)
                && g.is_bipartite()
                && g.girth() == Some(6);
            Ok(holds(ok, format!("{ok}"), "all structure checks"))
        },
    ));
    for parts in 1..=4usize {
        const IDS: [&str; 4] = ["graphs/turan/1", "graphs/turan/2", "graphs/turan/3", "graphs/turan/4"];
        claims.push(claim(
            IDS[parts - 1],
            Scope::Graphs,
            "clique-complex total of balanced multipartite graphs is the product of (part - 1)",
            Provenance::Published,
            move || {
                for n in 1..=9 {
                    let sizes = turan_parts(parts, n)?;
                    let g = construct(&FamilySpec::Turan { parts, n })?;
                    let bv = betti_of_graph(&g, FieldSpec::GF2, Setting::Clique)?;
                    let product: u64 = sizes.iter().map(|&s| (s as u64).saturating_sub(1)).product();
                    if bv.total() != product {
                        return Ok(holds(
                            false,
                            format!("T({parts},{n}): total {} != {product}", bv.total()),
                            "product identity",
                        ));
                    }
                    // nonzero homology sits in the top dimension only
                    if product > 0 && bv.get(parts as isize - 1) != product {
                        return Ok(holds(
                            false,
                            format!("T({parts},{n}): not concentrated in top dimension"),
                            "top-dimension concentration",
                        ));
                    }
                }
                Ok(holds(true, "all orders up to 9", "product identity"))
            },
        ));
    }

    // ------------------------------------------------------------------
    // bounds: closed forms, tight witnesses, certifier behavior
    // ------------------------------------------------------------------
    claims.push(claim(
        "bounds/formula/mk5-m2-n13",
        Scope::Bounds,
        "two-clique bound evaluated at n = 13",
        Provenance::Trivial,
        move || {
            let b = theorem_bound(&BoundFormula::MK5Free { m: 2, n: 13 })?;
            Ok(exact(b.exact.and_then(|e| e.as_integer()).unwrap_or(0) as u64, 36))
        },
    ));
    claims.push(claim(
        "bounds/formula/k4free-n6",
        Scope::Bounds,
        "K4-free bound evaluated at n = 6",
        Provenance::Published,
        move || {
            let b = theorem_bound(&BoundFormula::K4Free { n: 6 })?;
            Ok(exact(b.exact.and_then(|e| e.as_integer()).unwrap_or(0) as u64, 4))
        },
    ));
    claims.push(claim(
        "bounds/tightness/k5-k4-joins",
        Scope::Bounds,
        "disjoint cliques attain the multipartite-join bound when the order splits as 5(m-1)+4k",
        Provenance::Published,
        move || {
            let b_k5 = ind_total(&named(FamilySpec::Complete(5)))?;
            let b_k4 = ind_total(&named(FamilySpec::Complete(4)))?;
            if (b_k5, b_k4) != (4, 3) {
                return Ok(holds(false, format!("factors {b_k5},{b_k4}"), "factors 4,3"));
            }
            for m1 in 0..=2u32 {
                for k in 0..=3u32 {
                    let n = 5 * m1 + 4 * k;
                    if n > 13 {
                        continue;
                    }
                    let kuenneth = 4u64.pow(m1) * 3u64.pow(k);
                    let formula = theorem_bound(&BoundFormula::MK5Free { m: m1 + 1, n })?
                        .exact
                        .and_then(|e| e.as_integer())
                        .unwrap_or(0) as u64;
                    let mut g = Graph::empty(0)?;
                    for _ in 0..m1 {
                        g = g.disjoint_union(&named(FamilySpec::Complete(5)))?;
                    }
                    for _ in 0..k {
                        g = g.disjoint_union(&named(FamilySpec::Complete(4)))?;
                    }
                    let direct = ind_total(&g)?;
                    if direct != kuenneth || formula != kuenneth {
                        return Ok(holds(
                            false,
                            format!("m-1={m1} k={k}: direct={direct} formula={formula} product={kuenneth}"),
                            "all equal",
                        ));
                    }
                }
            }
            Ok(holds(true, "all splittings with n <= 13", "direct = product = formula"))
        },
    ));
    claims.push(claim(
        "bounds/tightness/disjoint-triangles",
        Scope::Bounds,
        "t disjoint triangles attain 2^{n/3}",
        Provenance::Published,
        move || {
            for t in 1..=3usize {
                let g = named(FamilySpec::DisjointCopies(Box::new(FamilySpec::Complete(3)), t));
                let bound = theorem_bound(&BoundFormula::K4Free { n: 3 * t as u32 })?
                    .exact
                    .and_then(|e| e.as_integer())
                    .unwrap_or(0) as u64;
                if ind_total(&g)? != bound {
                    return Ok(holds(false, format!("t={t}"), "2^t attained"));
                }
            }
            Ok(holds(true, "t = 1, 2, 3", "2^t attained"))
        },
    ));
    claims.push(claim(
        "bounds/tp/recurrence-branch-sizes",
        Scope::Bounds,
        "folding the last triangular-path vertex removes 4 then 5 vertices",
        Provenance::Published,
        move || {
            for n in 8..=12usize {
                let tp = named(FamilySpec::TriangularPath(n));
                let step = fold_step(&tp, n - 1, &[n - 2, n - 3])?;
                if step.removed_sizes != vec![4, 5] {
                    return Ok(holds(false, format!("n={n}: {:?}", step.removed_sizes), "[4, 5]"));
                }
            }
            Ok(holds(true, "n = 8..12", "[4, 5]"))
        },
    ));
    claims.push(claim(
        "bounds/tp/power-bound",
        Scope::Bounds,
        "triangular paths stay under 2^{n/4} except the triangle",
        Provenance::Published,
        move || {
            for n in 0..=12usize {
                let total = ind_total(&named(FamilySpec::TriangularPath(n)))?;
                if n == 3 {
                    if total != 2 {
                        return Ok(holds(false, format!("TP_3 = {total}"), "TP_3 = 2"));
                    }
                    continue;
                }
                if total as f64 > 2f64.powf(n as f64 / 4.0) + 1e-9 {
                    return Ok(holds(false, format!("TP_{n} = {total}"), "<= 2^{n/4}"));
                }
            }
            Ok(holds(true, "n = 0..12", "<= 2^{n/4}, TP_3 = 2"))
        },
    ));
    claims.push(claim(
        "bounds/tc/split-children",
        Scope::Bounds,
        "splitting the last two triangular-cycle vertices leaves two short paths and one long one",
        Provenance::Published,
        move || {
            for n in 9..=12usize {
                let tc = named(FamilySpec::TriangularCycle(n));
                let tp = |k: usize| named(FamilySpec::TriangularPath(k));
                let (minus_last, minus_nbhd) = split_children(&tc, n - 1)?;
                let (a, b) = split_children(&minus_last, n - 2)?;
                if !(are_isomorphic(&minus_nbhd, &tp(n - 5))
                    && are_isomorphic(&a, &tp(n - 2))
                    && are_isomorphic(&b, &tp(n - 5)))
                {
                    return Ok(holds(false, format!("n={n}"), "children TP_{n-2}, TP_{n-5}, TP_{n-5}"));
                }
            }
            Ok(holds(true, "n = 9..12", "children TP_{n-2}, TP_{n-5}, TP_{n-5}"))
        },
    ));
    claims.push(claim(
        "bounds/tc/power-bound",
        Scope::Bounds,
        "triangular cycles stay under 2^{n/4} (2^{-1/2} + 2^{-1/4}) from nine vertices on",
        Provenance::Published,
        move || {
            for n in 9..=12usize {
                let total = ind_total(&named(FamilySpec::TriangularCycle(n)))? as f64;
                let bound = theorem_bound(&BoundFormula::TcBound { n: n as u32 })?.value;
                if total > bound + 1e-9 {
                    return Ok(holds(false, format!("TC_{n} = {total}"), "within bound"));
                }
            }
            Ok(holds(true, "n = 9..12", "within bound"))
        },
    ));
    claims.push(claim(
        "bounds/certify/tc9",
        Scope::Bounds,
        "default certificate for TC_9 does not exceed the triangular-path route",
        Provenance::Published,
        move || {
            let cert = certify(&named(FamilySpec::TriangularCycle(9)), &CertifyConfig::default())?;
            Ok(holds(cert.bound <= 7, format!("bound {}", cert.bound), "<= 7"))
        },
    ));
    claims.push(claim(
        "bounds/certify/exact-on-product-cases",
        Scope::Bounds,
        "certificates are exact on disjoint triangles and the five-cycle",
        Provenance::Derived,
        move || {
            let two_triangles =
                named(FamilySpec::DisjointCopies(Box::new(FamilySpec::Complete(3)), 2));
            let c5 = named(FamilySpec::Cycle(5));
            let cfg = CertifyConfig { base_size: 4, ..CertifyConfig::default() };
            let b1 = certify(&two_triangles, &cfg)?.bound;
            let b2 = certify(&c5, &cfg)?.bound;
            Ok(holds(
                b1 == 4 && b2 == 1,
                format!("triangles={b1} c5={b2}"),
                "triangles=4 c5=1",
            ))
        },
    ));
    claims.push(claim(
        "bounds/certify/replay",
        Scope::Bounds,
        "certificate trees replay to their stated bound",
        Provenance::Trivial,
        move || {
            for spec in [
                FamilySpec::TriangularCycle(9),
                FamilySpec::TriangularCycle(10),
                FamilySpec::C5StarI3,
                FamilySpec::Icosahedron,
            ] {
                let g = named(spec);
                let cert = certify(&g, &CertifyConfig::default())?;
                if cert.root.replay() != Some(cert.bound) {
                    return Ok(holds(false, "replay mismatch".to_string(), "replay = bound"));
                }
            }
            Ok(holds(true, "replayed", "replay = bound"))
        },
    ));
    claims.push(claim(
        "bounds/certify/soundness-catalogue-n6",
        Scope::Bounds,
        "certified bounds dominate exact totals on every class up to six vertices",
        Provenance::Derived,
        move || {
            let cfg = CertifyConfig { base_size: 4, ..CertifyConfig::default() };
            let levels = crate::enumerate::enumerate_levels(6, None, false)?;
            let graphs: Vec<Graph> = levels
                .iter()
                .flat_map(|l| l.graphs.iter().map(|(g, _)| g.clone()))
                .collect();
            let checks: Vec<Result<bool>> = par_map(&graphs, |g| {
                Ok(certify(g, &cfg)?.bound >= ind_total(g)?)
            });
            for c in checks {
                if !c? {
                    return Ok(holds(false, "unsound certificate".to_string(), "bound >= exact"));
                }
            }
            Ok(holds(true, format!("{} classes", graphs.len()), "bound >= exact"))
        },
    ));

    // ------------------------------------------------------------------
    // search: extremal regressions and whole-catalogue bound conformance
    // ------------------------------------------------------------------
    claims.push(claim(
        "search/regression/unrestricted-5",
        Scope::Search,
        "maximum clique-complex total over graphs on at most five vertices",
        Provenance::Published,
        move || {
            let report = extremal_betti(&HPattern::None, &SearchConfig::new(5))?;
            let witness = canonical_code(&named(FamilySpec::Independent(5))).to_string();
            let ok = report.cumulative_max(5) == Some(4)
                && report.levels[5].witnesses.contains(&witness);
            Ok(holds(ok, format!("max {:?}", report.cumulative_max(5)), "4 with witness I_5"))
        },
    ));
    claims.push(claim(
        "search/regression/no-c4-4",
        Scope::Search,
        "maximum over 4-cycle-free graphs on at most four vertices",
        Provenance::Derived,
        move || {
            let report = extremal_betti(
                &HPattern::Named(FamilySpec::Cycle(4)),
                &SearchConfig::new(4),
            )?;
            Ok(exact(report.cumulative_max(4).unwrap_or(0), 3))
        },
    ));
    claims.push(claim(
        "search/regression/no-k3-5",
        Scope::Search,
        "maximum over triangle-free graphs on at most five vertices",
        Provenance::Derived,
        move || {
            let report = extremal_betti(
                &HPattern::Named(FamilySpec::Complete(3)),
                &SearchConfig::new(5),
            )?;
            Ok(exact(report.cumulative_max(5).unwrap_or(0), 4))
        },
    ));
    const MONO: [(&str, Option<FamilySpec>); 4] = [
        ("search/monotonicity/none", None),
        ("search/monotonicity/c4", Some(FamilySpec::Cycle(4))),
        ("search/monotonicity/k3", Some(FamilySpec::Complete(3))),
        ("search/monotonicity/k4", Some(FamilySpec::Complete(4))),
    ];
    for (id, spec) in MONO {
        claims.push(claim(
            id,
            Scope::Search,
            "the exactly-n maximum is weakly increasing",
            Provenance::Published,
            move || {
                let pattern = match &spec {
                    None => HPattern::None,
                    Some(s) => HPattern::Named(s.clone()),
                };
                let report = extremal_betti(&pattern, &SearchConfig::new(6))?;
                let (ok, violation) = check_monotonicity(&report);
                Ok(holds(ok, format!("violation {violation:?}"), "weakly increasing"))
            },
        ));
    }
    claims.push(claim(
        "search/all-fields-n6",
        Scope::Search,
        "per-order maxima agree over GF(2), GF(3), GF(5) and the rationals",
        Provenance::Published,
        move || {
            for spec in [
                None,
                Some(FamilySpec::Cycle(4)),
                Some(FamilySpec::Complete(3)),
                Some(FamilySpec::Complete(4)),
            ] {
                let pattern = match &spec {
                    None => HPattern::None,
                    Some(s) => HPattern::Named(s.clone()),
                };
                let mut cfg = SearchConfig::new(6);
                cfg.all_fields = true;
                let report = extremal_betti(&pattern, &cfg)?;
                if report.all_fields_agree != Some(true) {
                    return Ok(holds(false, report.pattern, "agreement"));
                }
            }
            Ok(holds(true, "four patterns".to_string(), "agreement"))
        },
    ));
    claims.push(claim(
        "search/enumeration/class-counts",
        Scope::Search,
        "isomorphism-class counts up to seven vertices",
        Provenance::Derived,
        move || {
            let levels = crate::enumerate::enumerate_levels(7, None, false)?;
            let counts: Vec<usize> = levels.iter().map(|l| l.graphs.len()).collect();
            let expected = vec![1, 1, 2, 4, 11, 34, 156, 1044];
            Ok(holds(counts == expected, format!("{counts:?}"), format!("{expected:?}")))
        },
    ));

    claims.push(claim(
        "search/conformance/general-n8",
        Scope::Search,
        "every class on up to eight vertices satisfies the theta_4 bound",
        Provenance::Published,
        move || {
            let outcome = sweep_bound(
                None,
                8,
                false,
                None,
                &|n| theta(4).powi(n as i32),
                &|_| None,
            )?;
            Ok(holds(
                outcome.violations.is_empty(),
                format!("{} classes, {} violations", outcome.classes_checked, outcome.violations.len()),
                "no violations",
            ))
        },
    ));
    claims.push(claim(
        "search/conformance/k5free-n8",
        Scope::Search,
        "every K5-free class on up to eight vertices satisfies the theta_3 bound",
        Provenance::Published,
        move || {
            let k5 = named(FamilySpec::Complete(5));
            let outcome = sweep_bound(
                Some(&k5),
                8,
                false,
                None,
                &|n| theta(3).powi(n as i32),
                &|_| None,
            )?;
            Ok(holds(
                outcome.violations.is_empty(),
                format!("{} classes, {} violations", outcome.classes_checked, outcome.violations.len()),
                "no violations",
            ))
        },
    ));
    claims.push(claim(
        "search/conformance/k4free-n9",
        Scope::Search,
        "every K4-free class on up to nine vertices satisfies 2^{n/3}, with equality exactly at disjoint triangles",
        Provenance::Published,
        move || {
            let k4 = named(FamilySpec::Complete(4));
            let outcome = sweep_bound(
                Some(&k4),
                9,
                false,
                None,
                &|n| 2f64.powf(n as f64 / 3.0),
                &|n| (n % 3 == 0).then(|| 1u64 << (n / 3)),
            )?;
            if !outcome.violations.is_empty() {
                return Ok(holds(false, format!("{} violations", outcome.violations.len()), "no violations"));
            }
            for (n, witnesses) in &outcome.equality_witnesses {
                let expected = vec![canonical_code(&named(FamilySpec::DisjointCopies(
                    Box::new(FamilySpec::Complete(3)),
                    n / 3,
                )))
                .to_string()];
                if witnesses != &expected {
                    return Ok(holds(
                        false,
                        format!("n={n}: equality at {witnesses:?}"),
                        "only disjoint triangles",
                    ));
                }
            }
            Ok(holds(
                true,
                format!("{} classes", outcome.classes_checked),
                "bound holds, equality = triangle unions",
            ))
        },
    ));
    claims.push(claim(
        "search/conformance/k4free-strong-n9",
        Scope::Search,
        "K4-free classes with a low-degree vertex outside lone triangles satisfy the strengthened bound",
        Provenance::Published,
        move || {
            let k4 = named(FamilySpec::Complete(4));
            let keep = |g: &Graph| {
                (0..g.n()).any(|v| {
                    g.degree(v) <= 3 && {
                        let comp = g
                            .components()
                            .into_iter()
                            .find(|c| c.contains(v))
                            .expect("vertex in some component");
                        !(comp.len() == 3 && {
                            let sub = g.induced(comp).expect("valid component");
                            sub.edge_count() == 3
                        })
                    }
                })
            };
            let t2 = theta(2);
            let coeff = t2.powi(-4) + t2.powi(-5) + t2.powi(-6);
            let outcome = sweep_bound(
                Some(&k4),
                9,
                false,
                Some(&keep),
                &|n| coeff * t2.powi(n as i32),
                &|_| None,
            )?;
            Ok(holds(
                outcome.violations.is_empty(),
                format!("{} classes, {} violations", outcome.classes_checked, outcome.violations.len()),
                "no violations",
            ))
        },
    ));
    claims.push(claim(
        "search/conformance/trianglefree-n9",
        Scope::Search,
        "every triangle-free class on up to nine vertices satisfies the gamma_4 bound",
        Provenance::Published,
        move || {
            let k3 = named(FamilySpec::Complete(3));
            let outcome = sweep_bound(
                Some(&k3),
                9,
                false,
                None,
                &|n| gamma(4).powi(n as i32),
                &|_| None,
            )?;
            Ok(holds(
                outcome.violations.is_empty(),
                format!("{} classes, {} violations", outcome.classes_checked, outcome.violations.len()),
                "no violations",
            ))
        },
    ));
    claims.push(claim(
        "search/conformance/trianglefree-2degenerate-n9",
        Scope::Search,
        "triangle-free 2-degenerate classes satisfy the gamma_2 bound",
        Provenance::Published,
        move || {
            let k3 = named(FamilySpec::Complete(3));
            let keep = |g: &Graph| g.degeneracy() <= 2;
            let outcome = sweep_bound(
                Some(&k3),
                9,
                false,
                Some(&keep),
                &|n| gamma(2).powi(n as i32),
                &|_| None,
            )?;
            Ok(holds(
                outcome.violations.is_empty(),
                format!("{} classes, {} violations", outcome.classes_checked, outcome.violations.len()),
                "no violations",
            ))
        },
    ));

    claims
}

/// Runs the catalogue, optionally restricted to one scope and/or an id
/// substring filter. Records come back sorted by id.
pub fn run_verify_paper(scope: Option<Scope>, filter: Option<&str>) -> Result<VerifyReport> {
    let claims: Vec<Claim> = catalogue()
        .into_iter()
        .filter(|c| scope.is_none_or(|s| c.scope == s))
        .filter(|c| filter.is_none_or(|f| c.id.contains(f)))
        .collect();
    let results: Vec<Result<Outcome>> = par_map(&claims, |c| (c.run)());
    let mut records = Vec::with_capacity(claims.len());
    for (c, outcome) in claims.iter().zip(results) {
        let outcome = outcome?;
        records.push(ClaimRecord {
            id: c.id.to_string(),
            scope: c.scope,
            anchor: c.anchor.to_string(),
            provenance: c.provenance,
            computed: outcome.computed,
            expected: outcome.expected,
            mode: outcome.mode,
            pass: outcome.pass,
        });
    }
    records.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = records.iter().filter(|r| r.pass).count();
    let failed = records.len() - passed;
    Ok(VerifyReport {
        schema: 1,
        scope: scope.map_or("all".to_string(), |s| format!("{s:?}").to_lowercase()),
        filter: filter.map(str::to_string),
        backend: crate::exec::backend(),
        passed,
        failed,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_scope_has_one_known_failure() {
        // the printed gamma_4 value is a last-digit rounding slip in the
        // source table; everything else in the tables scope passes
        let report = run_verify_paper(Some(Scope::Tables), None).unwrap();
        let failing: Vec<&str> = report
            .records
            .iter()
            .filter(|r| !r.pass)
            .map(|r| r.id.as_str())
            .collect();
        assert_eq!(failing, vec!["tables/gamma/4"]);
    }

    #[test]
    fn graphs_scope_passes() {
        let report = run_verify_paper(Some(Scope::Graphs), None).unwrap();
        assert!(report.all_pass(), "failures: {:?}", failing_ids(&report));
    }

    #[test]
    fn bounds_scope_passes() {
        let report = run_verify_paper(Some(Scope::Bounds), None).unwrap();
        assert!(report.all_pass(), "failures: {:?}", failing_ids(&report));
    }

    #[test]
    fn empty_filter_match_gives_empty_passing_report() {
        let report = run_verify_paper(None, Some("no-such-claim")).unwrap();
        assert_eq!(report.records.len(), 0);
        assert!(report.all_pass());
    }

    #[test]
    fn records_are_sorted_by_id() {
        let report = run_verify_paper(Some(Scope::Tables), None).unwrap();
        let ids: Vec<&String> = report.records.iter().map(|r| &r.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    fn failing_ids(report: &VerifyReport) -> Vec<&str> {
        report.records.iter().filter(|r| !r.pass).map(|r| r.id.as_str()).collect()
    }
}
