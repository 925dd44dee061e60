//! Command-line front end.
//!
//! Subcommands: `construct`, `betti`, `roots`, `certify`, `search`,
//! `verify-paper`. Inputs are graph6 (one word per line); reports are JSON
//! with a versioned schema. Exit codes: 0 success, 1 failure (including
//! failed verification claims), 2 usage, 3 resource guard.

use betti_core::certify::CertifyConfig;
use betti_core::claims::Scope;
use betti_core::error::Error as CoreError;
use betti_core::families::FamilySpec;
use betti_core::field::FieldSpec;
use betti_core::homology::Setting;
use betti_core::roots::{solve_root, RootQuery, DEFAULT_TOLERANCE};
use betti_core::search::{HPattern, SearchConfig};
use clap::{Args, Parser, Subcommand};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "betti",
    about = "Betti numbers of clique and independence complexes of small graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named graph as one graph6 line
    Construct(ConstructArgs),
    /// Compute Betti vectors for graphs in a graph6 file
    Betti(BettiArgs),
    /// Solve root equations and reproduce the growth-base tables
    Roots(RootsArgs),
    /// Produce certified upper bounds with inspectable certificate trees
    Certify(CertifyArgs),
    /// Exhaustive extremal search over pattern-free graphs
    Search(SearchArgs),
    /// Run the published-value claim catalogue
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Family name: complete, independent, cycle, path, turan,
    /// complete-multipartite, triangular-path, triangular-cycle,
    /// icosahedron, c5-star-i3, wheel5, projective-plane
    family: String,
    /// Numeric parameters of the family (for example `turan 3 7`)
    params: Vec<usize>,
    /// Emit this many disjoint copies
    #[arg(long, default_value_t = 1)]
    copies: usize,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BettiArgs {
    /// graph6 input file, `-` for stdin
    #[arg(long = "in")]
    input: String,
    #[arg(long, default_value = "gf2")]
    field: String,
    #[arg(long, default_value = "clique")]
    setting: String,
    /// Emit one JSON record per graph instead of the human-readable lines
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RootsArgs {
    /// Comma-separated exponent tuple, for example `5,6,7,7`
    #[arg(long)]
    tuple: Option<String>,
    /// Reproduce a table: theta, gamma, or appendix
    #[arg(long)]
    table: Option<String>,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CertifyArgs {
    /// graph6 input file, `-` for stdin
    #[arg(long = "in")]
    input: String,
    /// Graphs of at most this order are evaluated exactly
    #[arg(long, default_value_t = 6)]
    base: usize,
    /// Try every neighbor order at fold vertices of degree at most five
    #[arg(long)]
    try_all_orders: bool,
    /// Certificate node budget
    #[arg(long, default_value_t = 1 << 20)]
    max_nodes: usize,
    /// Emit the full certificate tree as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Forbidden induced pattern: none, C4, K3, K4, I4 (any C/K/I order),
    /// or graph6:<word>
    #[arg(long, default_value = "none")]
    forbid: String,
    /// Largest order to search
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "gf2")]
    field: String,
    #[arg(long, default_value = "clique")]
    setting: String,
    /// Score an external graph6 corpus instead of self-enumerating
    #[arg(long)]
    from_file: Option<PathBuf>,
    /// Re-score maxima over GF(3), GF(5) and the rationals and require agreement
    #[arg(long)]
    all_fields: bool,
    /// Override the desk-scale enumeration guard
    #[arg(long)]
    force: bool,
    /// Write the JSON report here
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// all, tables, graphs, bounds, or search
    #[arg(long, default_value = "all")]
    scope: String,
    /// Only run claims whose id contains this substring
    #[arg(long)]
    filter: Option<String>,
    /// Write the JSON report here
    #[arg(long)]
    json: Option<PathBuf>,
}

fn main() -> ExitCode {
    // die quietly when a downstream pager or `head` closes the pipe
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(args) => run_construct(args),
        Command::Betti(args) => run_betti(args),
        Command::Roots(args) => run_roots(args),
        Command::Certify(args) => run_certify(args),
        Command::Search(args) => run_search(args),
        Command::VerifyPaper(args) => run_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                CoreError::Resource(_) => ExitCode::from(3),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn read_input(path: &str) -> Result<String, CoreError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn parse_family(name: &str, params: &[usize]) -> Result<betti_core::Graph, CoreError> {
    let need = |k: usize| -> Result<(), CoreError> {
        if params.len() == k {
            Ok(())
        } else {
            Err(CoreError::Argument(format!(
                "family {name} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let spec = match name.to_ascii_lowercase().as_str() {
        "complete" | "k" => {
            need(1)?;
            FamilySpec::Complete(params[0])
        }
        "independent" | "i" => {
            need(1)?;
            FamilySpec::Independent(params[0])
        }
        "cycle" | "c" => {
            need(1)?;
            FamilySpec::Cycle(params[0])
        }
        "path" | "p" => {
            need(1)?;
            FamilySpec::Path(params[0])
        }
        "turan" | "t" => {
            need(2)?;
            FamilySpec::Turan { parts: params[0], n: params[1] }
        }
        "complete-multipartite" | "multipartite" => {
            if params.is_empty() {
                return Err(CoreError::Argument("multipartite needs part sizes".into()));
            }
            FamilySpec::CompleteMultipartite(params.to_vec())
        }
        "triangular-path" | "tp" => {
            need(1)?;
            FamilySpec::TriangularPath(params[0])
        }
        "triangular-cycle" | "tc" => {
            need(1)?;
            FamilySpec::TriangularCycle(params[0])
        }
        "icosahedron" => {
            need(0)?;
            FamilySpec::Icosahedron
        }
        "c5-star-i3" => {
            need(0)?;
            FamilySpec::C5StarI3
        }
        "wheel5" | "w5" => {
            need(0)?;
            FamilySpec::Wheel5
        }
        "projective-plane" | "pg" => {
            need(1)?;
            return betti_core::projective_plane_incidence(params[0] as u64);
        }
        other => {
            return Err(CoreError::Argument(format!("unknown family {other:?}")));
        }
    };
    betti_core::construct(&spec)
}

fn run_construct(args: ConstructArgs) -> Result<ExitCode, CoreError> {
    let mut g = parse_family(&args.family, &args.params)?;
    if args.copies != 1 {
        let block = g.clone();
        g = betti_core::Graph::empty(0)?;
        for _ in 0..args.copies {
            g = g.disjoint_union(&block)?;
        }
    }
    let line = betti_core::emit_graph6(&g);
    match args.out {
        Some(path) => std::fs::write(path, format!("{line}\n"))?,
        None => println!("{line}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_setting(name: &str) -> Result<Setting, CoreError> {
    match name.to_ascii_lowercase().as_str() {
        "clique" => Ok(Setting::Clique),
        "independence" => Ok(Setting::Independence),
        other => Err(CoreError::Argument(format!("unknown setting {other:?}"))),
    }
}

fn run_betti(args: BettiArgs) -> Result<ExitCode, CoreError> {
    let field = FieldSpec::parse(&args.field)?;
    let setting = parse_setting(&args.setting)?;
    let graphs = betti_core::parse_graph6_file(&read_input(&args.input)?)?;
    for g in &graphs {
        let bv = betti_core::betti_of_graph(g, field, setting)?;
        let word = betti_core::emit_graph6(g);
        if args.json {
            let record = serde_json::json!({
                "schema": 1,
                "graph6": word,
                "n": g.n(),
                "field": field.to_string(),
                "setting": setting.to_string(),
                "reduced": bv.reduced,
                "start_dim": -1,
                "total": bv.total(),
            });
            println!("{record}");
        } else {
            let dims: Vec<String> = bv
                .reduced
                .iter()
                .enumerate()
                .map(|(i, b)| format!("b[{}]={b}", i as isize - 1))
                .collect();
            println!("{word} n={} total={} {}", g.n(), bv.total(), dims.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_tuple(text: &str) -> Result<Vec<u32>, CoreError> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| CoreError::Argument(format!("bad exponent {t:?}")))
        })
        .collect()
}

fn run_roots(args: RootsArgs) -> Result<ExitCode, CoreError> {
    match (&args.tuple, &args.table) {
        (Some(tuple), None) => {
            let exps = parse_tuple(tuple)?;
            let query = RootQuery::new(exps.clone())?;
            let root = solve_root(&query, args.tol)?;
            if args.json {
                let record = serde_json::json!({
                    "schema": 1,
                    "exponents": exps,
                    "value": root.value,
                    "residual": root.residual,
                    "tolerance": root.tolerance,
                });
                println!("{record}");
            } else {
                let parts: Vec<String> = exps.iter().map(u32::to_string).collect();
                println!("r({}) = {:.12}  (residual {:.2e})", parts.join(","), root.value, root.residual);
            }
            Ok(ExitCode::SUCCESS)
        }
        (None, Some(table)) => run_roots_table(table, args.json),
        _ => Err(CoreError::Argument("pass exactly one of --tuple or --table".into())),
    }
}

fn run_roots_table(table: &str, json: bool) -> Result<ExitCode, CoreError> {
    let rows: Vec<(String, f64)> = match table.to_ascii_lowercase().as_str() {
        "theta" => (1..=5u32).map(|d| (format!("theta_{d}"), betti_core::theta(d))).collect(),
        "gamma" => (1..=5u32).map(|d| (format!("gamma_{d}"), betti_core::gamma(d))).collect(),
        "appendix" => {
            const TUPLES: [&[u32]; 11] = [
                &[3, 3],
                &[6, 6, 6, 6],
                &[5, 7, 10, 10, 11, 11, 12, 12],
                &[6, 6, 9, 10, 11, 11, 12, 13],
                &[6, 6, 7, 8, 9],
                &[1, 7],
                &[5, 6, 6, 8],
                &[5, 6, 7, 7],
                &[4, 5, 6],
                &[5, 5, 5],
                &[3, 4],
            ];
            TUPLES
                .iter()
                .map(|exps| {
                    let parts: Vec<String> = exps.iter().map(u32::to_string).collect();
                    let value = betti_core::solve_root_default(exps).expect("solvable").value;
                    (format!("r({})", parts.join(",")), value)
                })
                .collect()
        }
        other => return Err(CoreError::Argument(format!("unknown table {other:?}"))),
    };
    if json {
        let record = serde_json::json!({
            "schema": 1,
            "table": table,
            "rows": rows.iter().map(|(name, v)| serde_json::json!({
                "name": name,
                "rounded": format!("{v:.4}"),
                "value": v,
            })).collect::<Vec<_>>(),
        });
        println!("{record}");
    } else {
        for (name, v) in rows {
            println!("{name:<32} {v:.4}   ({v:.12})");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_certify(args: CertifyArgs) -> Result<ExitCode, CoreError> {
    let cfg = CertifyConfig {
        base_size: args.base,
        try_all_orders: args.try_all_orders,
        max_nodes: args.max_nodes,
    };
    let graphs = betti_core::parse_graph6_file(&read_input(&args.input)?)?;
    for g in &graphs {
        let cert = betti_core::certify(g, &cfg)?;
        let word = betti_core::emit_graph6(g);
        if args.json {
            let record = serde_json::json!({
                "schema": 1,
                "graph6": word,
                "n": g.n(),
                "base_size": args.base,
                "bound": cert.bound,
                "nodes": cert.root.node_count(),
                "certificate": cert.root,
            });
            println!("{record}");
        } else {
            println!(
                "{word} n={} bound={} nodes={}",
                g.n(),
                cert.bound,
                cert.root.node_count()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_pattern(text: &str) -> Result<HPattern, CoreError> {
    let lower = text.to_ascii_lowercase();
    if lower == "none" {
        return Ok(HPattern::None);
    }
    if let Some(word) = text.strip_prefix("graph6:") {
        return Ok(HPattern::Explicit(betti_core::parse_graph6(word)?));
    }
    let (kind, rest) = lower.split_at(1);
    let order: usize = rest
        .parse()
        .map_err(|_| CoreError::Argument(format!("unknown pattern {text:?}")))?;
    let spec = match kind {
        "c" => FamilySpec::Cycle(order),
        "k" => FamilySpec::Complete(order),
        "i" => FamilySpec::Independent(order),
        _ => return Err(CoreError::Argument(format!("unknown pattern {text:?}"))),
    };
    Ok(HPattern::Named(spec))
}

fn run_search(args: SearchArgs) -> Result<ExitCode, CoreError> {
    let pattern = parse_pattern(&args.forbid)?;
    let cfg = SearchConfig {
        max_n: args.n,
        field: FieldSpec::parse(&args.field)?,
        setting: parse_setting(&args.setting)?,
        all_fields: args.all_fields,
        force: args.force,
        witness_cap: 10,
    };
    let report = match &args.from_file {
        Some(path) => {
            let corpus = betti_core::parse_graph6_file(&std::fs::read_to_string(path)?)?;
            betti_core::score_corpus(&pattern, &cfg, &corpus)?
        }
        None => betti_core::extremal_betti(&pattern, &cfg)?,
    };
    println!(
        "pattern={} setting={} field={}",
        report.pattern, report.setting, report.field
    );
    println!("{:>3} {:>12} {:>12} {:>10} {:>8}  witnesses", "n", "exact_max", "max_upto_n", "classes", "pruned");
    for level in &report.levels {
        println!(
            "{:>3} {:>12} {:>12} {:>10} {:>8}  {}",
            level.n,
            level.exact_max,
            level.cumulative_max,
            level.enumerated,
            level.pruned,
            level.witnesses.join(" ")
        );
    }
    if let Some(agree) = report.all_fields_agree {
        println!("all-fields agreement: {agree}");
    }
    if let Some(path) = args.json {
        std::fs::write(&path, serde_json::to_string_pretty(&report).expect("serializable") + "\n")?;
        println!("report written to {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, CoreError> {
    let scope = Scope::parse(&args.scope)
        .ok_or_else(|| CoreError::Argument(format!("unknown scope {:?}", args.scope)))?;
    let report = betti_core::run_verify_paper(scope, args.filter.as_deref())?;
    println!(
        "{:<52} {:<10} {:>14} {:>14}  status",
        "claim", "provenance", "computed", "expected"
    );
    for r in &report.records {
        let prov = format!("{:?}", r.provenance).to_lowercase();
        println!(
            "{:<52} {:<10} {:>14} {:>14}  {}",
            r.id,
            prov,
            truncate(&r.computed, 14),
            truncate(&r.expected, 14),
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    println!("passed {} / {}", report.passed, report.passed + report.failed);
    if let Some(path) = args.json {
        std::fs::write(&path, serde_json::to_string_pretty(&report).expect("serializable") + "\n")?;
        println!("report written to {}", path.display());
    }
    Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn truncate(s: &str, width: usize) -> String {
    if s.chars().count() <= width {
        s.to_string()
    } else {
        let head: String = s.chars().take(width.saturating_sub(1)).collect();
        format!("{head}~")
    }
}
