//! `ramsey`: command line front end for the hypergraph Ramsey toolkit.
//!
//! Exit codes: 0 ok, 1 failure, 2 budget exhausted, 64 usage. Every run
//! writes one JSON manifest line to stderr; stdout is byte-deterministic
//! for identical invocations.

mod pattern;
mod render;

use std::fmt;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ramsey_core::bounds::{self, TreeFamily};
use ramsey_core::coloring::{min_color_class_with_cap, weak_chromatic_number_with_cap};
use ramsey_core::search::{arrows, ramsey_number, ArrowingVerdict, EdgeOrder, RamseyOutcome, SearchConfig};
use ramsey_core::selfcheck::{run_all, CriterionOutcome};
use ramsey_core::trees::{enumerate_trees, is_loose_path, is_tree, TreeMethod};
use ramsey_core::witness::{
    burr_witness, cubic_residue_witness, extend_red_clique, verify_witness, BlueTarget,
    TwoColoring,
};
use ramsey_core::Hypergraph;

use pattern::load_pattern;

const EXIT_OK: u8 = 0;
const EXIT_FAILURE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 64;
const DEFAULT_BUDGET: u64 = 100_000_000;

/// Error class that maps to the usage exit code instead of the failure one.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.into()))
}

/// Parameter-shaped core errors become usage errors; internal
/// inconsistencies stay plain failures.
fn map_core(e: ramsey_core::CoreError) -> anyhow::Error {
    match e {
        ramsey_core::CoreError::Internal(_) => anyhow::Error::new(e),
        _ => usage(e.to_string()),
    }
}

#[derive(Parser)]
#[command(
    name = "ramsey",
    version,
    about = "r-uniform hypergraph Ramsey numbers: tables, witnesses, exhaustive search"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a grid of best-known intervals for trees vs cliques
    Table(TableArgs),
    /// Print one cell with its full bound audit trail
    Cell(CellArgs),
    /// Tree utilities
    Trees {
        #[command(subcommand)]
        cmd: TreesCmd,
    },
    /// Weak coloring and structural invariants of a hypergraph
    Invariants(InvariantsArgs),
    /// Construct and verify lower-bound colorings
    Witness {
        #[command(subcommand)]
        cmd: WitnessCmd,
    },
    /// Decide whether every 2-coloring of K_p contains the red pattern or a blue clique
    Arrows(ArrowsArgs),
    /// Compute an exact Ramsey number by verified seed plus upward search
    Ramsey(RamseyArgs),
    /// Compare best intervals across all trees of one order (same-value probe)
    Census(CensusArgs),
    /// Run the full acceptance suite
    VerifyAll(VerifyAllArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    /// Tree orders, inclusive, like 5..15
    #[arg(long, default_value = "5..15")]
    rows: String,
    /// Clique orders, inclusive, like 4..10
    #[arg(long, default_value = "4..10")]
    cols: String,
    /// tree (any tree of the given order) or path (the loose path)
    #[arg(long, default_value = "tree")]
    family: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CellArgs {
    #[arg(short, long)]
    m: usize,
    #[arg(short, long)]
    n: usize,
    #[arg(short, long, default_value_t = 3)]
    r: usize,
    #[arg(long, default_value = "tree")]
    family: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum TreesCmd {
    /// List all trees of one order up to isomorphism, one JSON line each
    Enum(TreesEnumArgs),
    /// Run the tree recognizers on a hypergraph
    Check(TreesCheckArgs),
}

#[derive(Args)]
struct TreesEnumArgs {
    #[arg(long)]
    order: usize,
    #[arg(long, default_value_t = 3)]
    uniformity: usize,
}

#[derive(Args)]
struct TreesCheckArgs {
    /// Hypergraph JSON file or shorthand (edge, path:M, c4, clique:N)
    #[arg(long)]
    input: String,
    /// build, acyclic, components, unique-path, or all
    #[arg(long, default_value = "all")]
    method: String,
}

#[derive(Args)]
struct InvariantsArgs {
    /// Hypergraph JSON file or shorthand (edge, path:M, c4, clique:N)
    #[arg(long)]
    input: String,
    /// Largest order accepted by the exponential coloring searches
    #[arg(long, default_value_t = 12)]
    cap: usize,
}

#[derive(Subcommand)]
enum WitnessCmd {
    /// Block construction: blue inside blocks, red across
    Burr(WitnessBurrArgs),
    /// Add a disjoint all-red clique to an existing coloring
    Extend(WitnessExtendArgs),
    /// Cubic residue coloring on 3j+1 vertices, 3j+1 prime
    Cubic(WitnessCubicArgs),
    /// Check a coloring against a red pattern and a blue target
    Verify(WitnessVerifyArgs),
}

#[derive(Args)]
struct WitnessBurrArgs {
    /// Weak chromatic number of the red side
    #[arg(long)]
    chi_w: usize,
    /// Minimum color class size of the red side
    #[arg(long)]
    t: usize,
    /// Largest component order of the blue side
    #[arg(short, long)]
    c: usize,
    #[arg(short, long, default_value_t = 3)]
    r: usize,
}

#[derive(Args)]
struct WitnessExtendArgs {
    /// Coloring JSON file
    #[arg(long)]
    input: String,
    /// Order of the appended all-red clique
    #[arg(short, long)]
    m: usize,
}

#[derive(Args)]
struct WitnessCubicArgs {
    #[arg(short, long)]
    j: usize,
}

#[derive(Args)]
struct WitnessVerifyArgs {
    /// Coloring JSON file
    #[arg(long)]
    coloring: String,
    /// Red pattern: JSON file or shorthand
    #[arg(long)]
    red: String,
    /// Blue clique order
    #[arg(long, conflicts_with = "blue")]
    blue_clique: Option<usize>,
    /// Blue pattern: JSON file or shorthand
    #[arg(long)]
    blue: Option<String>,
}

#[derive(Args)]
struct SearchOpts {
    /// Node budget; RAMSEY_BUDGET overrides the default
    #[arg(long)]
    budget: Option<u64>,
    /// Prune colorings that are not lexicographic orbit leaders
    #[arg(long)]
    symmetry: bool,
    /// colex or degree-guided
    #[arg(long, value_enum, default_value = "colex")]
    edge_order: CliEdgeOrder,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliEdgeOrder {
    Colex,
    DegreeGuided,
}

#[derive(Args)]
struct ArrowsArgs {
    /// Host order
    #[arg(short, long)]
    p: usize,
    /// Red pattern: JSON file or shorthand
    #[arg(long)]
    red: String,
    /// Blue clique order
    #[arg(long)]
    blue_clique: usize,
    #[command(flatten)]
    search: SearchOpts,
}

#[derive(Args)]
struct RamseyArgs {
    /// Red pattern: JSON file or shorthand
    #[arg(long)]
    red: String,
    /// Blue clique order
    #[arg(long)]
    blue_clique: usize,
    #[command(flatten)]
    search: SearchOpts,
}

#[derive(Args)]
struct CensusArgs {
    /// Tree order (at most 9)
    #[arg(short, long)]
    m: usize,
    /// Blue clique order
    #[arg(short, long)]
    n: usize,
    #[arg(short, long, default_value_t = 3)]
    r: usize,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyAllArgs {
    #[arg(long)]
    budget: Option<u64>,
}

/// What a command hands back to `main`: the exit code and the manifest's
/// verdict summary.
struct CmdOut {
    exit: u8,
    verdicts: serde_json::Value,
}

fn ok(verdicts: serde_json::Value) -> Result<CmdOut> {
    Ok(CmdOut {
        exit: EXIT_OK,
        verdicts,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let started = Instant::now();
    let (name, params) = describe(&cli.cmd);
    let (exit, verdicts) = match run(&cli.cmd) {
        Ok(out) => (out.exit, out.verdicts),
        Err(e) => {
            eprintln!("error: {e:#}");
            let exit = if e.downcast_ref::<UsageError>().is_some() {
                EXIT_USAGE
            } else {
                EXIT_FAILURE
            };
            (exit, json!({ "error": format!("{e:#}") }))
        }
    };
    let manifest = json!({
        "command": name,
        "parameters": params,
        "versions": {
            "ramsey-cli": env!("CARGO_PKG_VERSION"),
            "ramsey-core": ramsey_core::VERSION,
        },
        "wall_time_ms": started.elapsed().as_millis() as u64,
        "verdicts": verdicts,
        "exit_code": exit,
    });
    eprintln!("{manifest}");
    ExitCode::from(exit)
}

/// Manifest identity of the invocation: command name plus its parameters.
fn describe(cmd: &Cmd) -> (&'static str, serde_json::Value) {
    match cmd {
        Cmd::Table(a) => (
            "table",
            json!({"rows": a.rows, "cols": a.cols, "family": a.family, "format": format_name(a.format)}),
        ),
        Cmd::Cell(a) => (
            "cell",
            json!({"m": a.m, "n": a.n, "r": a.r, "family": a.family, "format": format_name(a.format)}),
        ),
        Cmd::Trees { cmd } => match cmd {
            TreesCmd::Enum(a) => (
                "trees-enum",
                json!({"order": a.order, "uniformity": a.uniformity}),
            ),
            TreesCmd::Check(a) => ("trees-check", json!({"input": a.input, "method": a.method})),
        },
        Cmd::Invariants(a) => ("invariants", json!({"input": a.input, "cap": a.cap})),
        Cmd::Witness { cmd } => match cmd {
            WitnessCmd::Burr(a) => (
                "witness-burr",
                json!({"chi_w": a.chi_w, "t": a.t, "c": a.c, "r": a.r}),
            ),
            WitnessCmd::Extend(a) => ("witness-extend", json!({"input": a.input, "m": a.m})),
            WitnessCmd::Cubic(a) => ("witness-cubic", json!({"j": a.j})),
            WitnessCmd::Verify(a) => (
                "witness-verify",
                json!({"coloring": a.coloring, "red": a.red, "blue_clique": a.blue_clique, "blue": a.blue}),
            ),
        },
        Cmd::Arrows(a) => (
            "arrows",
            json!({"p": a.p, "red": a.red, "blue_clique": a.blue_clique,
                   "budget": a.search.budget, "symmetry": a.search.symmetry,
                   "edge_order": edge_order_name(a.search.edge_order)}),
        ),
        Cmd::Ramsey(a) => (
            "ramsey",
            json!({"red": a.red, "blue_clique": a.blue_clique,
                   "budget": a.search.budget, "symmetry": a.search.symmetry,
                   "edge_order": edge_order_name(a.search.edge_order)}),
        ),
        Cmd::Census(a) => (
            "census",
            json!({"m": a.m, "n": a.n, "r": a.r, "budget": a.budget, "format": format_name(a.format)}),
        ),
        Cmd::VerifyAll(a) => ("verify-all", json!({"budget": a.budget})),
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Text => "text",
        Format::Csv => "csv",
        Format::Json => "json",
    }
}

fn edge_order_name(e: CliEdgeOrder) -> &'static str {
    match e {
        CliEdgeOrder::Colex => "colex",
        CliEdgeOrder::DegreeGuided => "degree-guided",
    }
}

fn run(cmd: &Cmd) -> Result<CmdOut> {
    match cmd {
        Cmd::Table(a) => cmd_table(a),
        Cmd::Cell(a) => cmd_cell(a),
        Cmd::Trees { cmd } => match cmd {
            TreesCmd::Enum(a) => cmd_trees_enum(a),
            TreesCmd::Check(a) => cmd_trees_check(a),
        },
        Cmd::Invariants(a) => cmd_invariants(a),
        Cmd::Witness { cmd } => match cmd {
            WitnessCmd::Burr(a) => cmd_witness_burr(a),
            WitnessCmd::Extend(a) => cmd_witness_extend(a),
            WitnessCmd::Cubic(a) => cmd_witness_cubic(a),
            WitnessCmd::Verify(a) => cmd_witness_verify(a),
        },
        Cmd::Arrows(a) => cmd_arrows(a),
        Cmd::Ramsey(a) => cmd_ramsey(a),
        Cmd::Census(a) => cmd_census(a),
        Cmd::VerifyAll(a) => cmd_verify_all(a),
    }
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo
            .parse()
            .map_err(|_| usage(format!("bad range {s:?}: expected like 5..15")))?;
        let hi: usize = hi
            .parse()
            .map_err(|_| usage(format!("bad range {s:?}: expected like 5..15")))?;
        return Ok((lo, hi));
    }
    let v: usize = s
        .parse()
        .map_err(|_| usage(format!("bad range {s:?}: expected like 5..15 or a single value")))?;
    Ok((v, v))
}

fn parse_family(s: &str) -> Result<TreeFamily> {
    s.parse()
        .map_err(|_| usage(format!("unknown family {s:?}: expected tree or path")))
}

fn resolve_budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("RAMSEY_BUDGET") {
        Ok(s) => s
            .parse()
            .map_err(|_| usage(format!("RAMSEY_BUDGET must be an integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn search_config(opts: &SearchOpts) -> Result<SearchConfig> {
    Ok(SearchConfig {
        node_budget: resolve_budget(opts.budget)?,
        symmetry: opts.symmetry,
        edge_order: match opts.edge_order {
            CliEdgeOrder::Colex => EdgeOrder::Colex,
            CliEdgeOrder::DegreeGuided => EdgeOrder::DegreeGuided,
        },
    })
}

fn cmd_table(a: &TableArgs) -> Result<CmdOut> {
    let family = parse_family(&a.family)?;
    let rows = parse_range(&a.rows)?;
    let cols = parse_range(&a.cols)?;
    let cells = bounds::table(family, rows, cols).map_err(|e| usage(e.to_string()))?;
    let text = match a.format {
        Format::Text => render::table_text(&cells),
        Format::Csv => render::table_csv(&cells),
        Format::Json => render::table_json(&cells),
    };
    print!("{text}");
    let exact = cells.iter().filter(|c| c.interval.is_exact()).count();
    ok(json!({"cells": cells.len(), "exact": exact}))
}

fn cmd_cell(a: &CellArgs) -> Result<CmdOut> {
    let family = parse_family(&a.family)?;
    let cell = bounds::best_interval(family, a.m, a.n, a.r).map_err(|e| usage(e.to_string()))?;
    match a.format {
        Format::Text => print!("{}", render::cell_detail(&cell)),
        Format::Csv => print!("{}", render::table_csv(std::slice::from_ref(&cell))),
        Format::Json => println!("{}", serde_json::to_string(&cell)?),
    }
    ok(json!({
        "lower": cell.interval.lower,
        "upper": cell.interval.upper,
        "status": cell.status.to_string(),
    }))
}

fn cmd_trees_enum(a: &TreesEnumArgs) -> Result<CmdOut> {
    let trees = enumerate_trees(a.order, a.uniformity).map_err(|e| usage(e.to_string()))?;
    for t in &trees {
        println!("{}", serde_json::to_string(t)?);
    }
    ok(json!({"count": trees.len()}))
}

fn cmd_trees_check(a: &TreesCheckArgs) -> Result<CmdOut> {
    let h = load_pattern(&a.input)?;
    let methods: Vec<(&str, TreeMethod)> = match a.method.as_str() {
        "all" => vec![
            ("build", TreeMethod::Build),
            ("acyclic", TreeMethod::Acyclic),
            ("components", TreeMethod::Components),
            ("unique-path", TreeMethod::UniquePath),
        ],
        "build" => vec![("build", TreeMethod::Build)],
        "acyclic" => vec![("acyclic", TreeMethod::Acyclic)],
        "components" => vec![("components", TreeMethod::Components)],
        "unique-path" => vec![("unique-path", TreeMethod::UniquePath)],
        other => return Err(usage(format!("unknown method {other:?}"))),
    };
    let mut verdicts = Vec::new();
    for (name, method) in &methods {
        let v = is_tree(&h, *method);
        println!("{name}: {}", if v { "tree" } else { "not a tree" });
        verdicts.push(v);
    }
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        anyhow::bail!("recognizers disagree: {verdicts:?}");
    }
    if methods.len() > 1 {
        println!(
            "verdict: {}",
            if verdicts[0] { "tree" } else { "not a tree" }
        );
    }
    ok(json!({"is_tree": verdicts[0], "methods": methods.len()}))
}

#[derive(serde::Serialize)]
struct Invariants {
    order: usize,
    uniformity: usize,
    edge_count: usize,
    connected: bool,
    largest_component_order: usize,
    min_degree: usize,
    weak_chromatic_number: usize,
    min_color_class: usize,
    is_tree: bool,
}

fn cmd_invariants(a: &InvariantsArgs) -> Result<CmdOut> {
    let h = load_pattern(&a.input)?;
    let (chi, _) = weak_chromatic_number_with_cap(&h, a.cap)?;
    let t = min_color_class_with_cap(&h, a.cap)?;
    let inv = Invariants {
        order: h.order(),
        uniformity: h.uniformity(),
        edge_count: h.edge_count(),
        connected: h.is_connected(),
        largest_component_order: h.largest_component_order(),
        min_degree: h.min_degree(),
        weak_chromatic_number: chi,
        min_color_class: t,
        is_tree: is_tree(&h, TreeMethod::Acyclic),
    };
    println!("{}", serde_json::to_string(&inv)?);
    ok(json!({"weak_chromatic_number": chi, "min_color_class": t}))
}

fn print_coloring(w: &TwoColoring) -> Result<CmdOut> {
    println!("{}", w.to_json());
    ok(json!({
        "order": w.order(),
        "red_edges": w.red_edges().len(),
    }))
}

fn cmd_witness_burr(a: &WitnessBurrArgs) -> Result<CmdOut> {
    let w = burr_witness(a.chi_w, a.t, a.c, a.r).map_err(|e| usage(e.to_string()))?;
    print_coloring(&w)
}

fn cmd_witness_extend(a: &WitnessExtendArgs) -> Result<CmdOut> {
    let text = std::fs::read_to_string(&a.input).with_context(|| format!("reading {}", a.input))?;
    let base = TwoColoring::from_json(&text)?;
    let w = extend_red_clique(&base, a.m)?;
    print_coloring(&w)
}

fn cmd_witness_cubic(a: &WitnessCubicArgs) -> Result<CmdOut> {
    let w = cubic_residue_witness(a.j).map_err(|e| usage(e.to_string()))?;
    print_coloring(&w)
}

fn cmd_witness_verify(a: &WitnessVerifyArgs) -> Result<CmdOut> {
    let text =
        std::fs::read_to_string(&a.coloring).with_context(|| format!("reading {}", a.coloring))?;
    let coloring = TwoColoring::from_json(&text)?;
    let red = load_pattern(&a.red)?;
    let blue_pattern = a.blue.as_deref().map(load_pattern).transpose()?;
    let blue = match (&blue_pattern, a.blue_clique) {
        (Some(h), None) => BlueTarget::Pattern(h),
        (None, Some(n)) => BlueTarget::Clique(n),
        _ => return Err(usage("exactly one of --blue-clique and --blue is required")),
    };
    let verdict = verify_witness(&coloring, &red, blue)?;
    println!("{}", serde_json::to_string(&verdict)?);
    let clean = verdict.is_clean();
    Ok(CmdOut {
        exit: if clean { EXIT_OK } else { EXIT_FAILURE },
        verdicts: json!({"clean": clean}),
    })
}

fn cmd_arrows(a: &ArrowsArgs) -> Result<CmdOut> {
    let red = load_pattern(&a.red)?;
    let cfg = search_config(&a.search)?;
    let result = arrows(a.p, &red, a.blue_clique, &cfg).map_err(map_core)?;
    println!("{}", serde_json::to_string(&result)?);
    let (exit, kind) = match &result.verdict {
        ArrowingVerdict::Arrows => (EXIT_OK, "arrows"),
        ArrowingVerdict::Counterexample(_) => (EXIT_OK, "counterexample"),
        ArrowingVerdict::BudgetExhausted => (EXIT_BUDGET, "budget-exhausted"),
    };
    Ok(CmdOut {
        exit,
        verdicts: json!({"kind": kind, "nodes": result.nodes}),
    })
}

fn cmd_ramsey(a: &RamseyArgs) -> Result<CmdOut> {
    let red = load_pattern(&a.red)?;
    let cfg = search_config(&a.search)?;
    let outcome = ramsey_number(&red, a.blue_clique, &cfg).map_err(map_core)?;
    println!("{}", serde_json::to_string(&outcome)?);
    let (exit, verdicts) = match &outcome {
        RamseyOutcome::Exact { value, nodes, .. } => {
            (EXIT_OK, json!({"value": value, "nodes": nodes}))
        }
        RamseyOutcome::Exhausted { known_lower, nodes } => (
            EXIT_BUDGET,
            json!({"known_lower": known_lower, "nodes": nodes}),
        ),
    };
    Ok(CmdOut { exit, verdicts })
}

/// Census row: the registry interval for one tree, searched exactly when the
/// whole scan fits in small host orders.
struct CensusRow {
    index: usize,
    loose_path: bool,
    tree: Hypergraph,
    cell: bounds::BestInterval,
    searched: Option<RamseyOutcome>,
}

fn cmd_census(a: &CensusArgs) -> Result<CmdOut> {
    if a.r != 3 {
        return Err(usage("census supports uniformity 3 only"));
    }
    if a.m > 9 {
        return Err(usage(format!(
            "census is desk-scale: tree order at most 9, got {}",
            a.m
        )));
    }
    let trees = enumerate_trees(a.m, 3).map_err(|e| usage(e.to_string()))?;
    let budget = resolve_budget(a.budget)?;
    let cfg = SearchConfig {
        node_budget: budget,
        ..SearchConfig::default()
    };
    let mut rows = Vec::new();
    let mut budget_hit = false;
    let mut mismatch = None;
    for (i, tree) in trees.iter().enumerate() {
        let family = if is_loose_path(tree) {
            TreeFamily::Path
        } else {
            TreeFamily::Tree
        };
        let cell = bounds::best_interval(family, a.m, a.n, 3).map_err(|e| usage(e.to_string()))?;
        // Exact cells are already proven; search only tries to settle open
        // intervals, and only while the scan stays within small host orders.
        let searched = if !cell.interval.is_exact() && cell.interval.upper <= 8 {
            let outcome = ramsey_number(tree, a.n, &cfg)?;
            match &outcome {
                RamseyOutcome::Exact { value, .. } => {
                    if !(cell.interval.lower..=cell.interval.upper).contains(value) {
                        mismatch = Some(format!(
                            "tree {} search value {} outside registry interval [{}, {}]",
                            i + 1,
                            value,
                            cell.interval.lower,
                            cell.interval.upper
                        ));
                    }
                }
                RamseyOutcome::Exhausted { .. } => budget_hit = true,
            }
            Some(outcome)
        } else {
            None
        };
        rows.push(CensusRow {
            index: i + 1,
            loose_path: family == TreeFamily::Path,
            tree: tree.clone(),
            cell,
            searched,
        });
    }
    // Intervals that cannot intersect would refute the same-value conjecture.
    let mut divergence = Vec::new();
    for x in &rows {
        for y in &rows {
            if x.index < y.index && x.cell.interval.upper < y.cell.interval.lower {
                divergence.push(format!(
                    "tree {} has [{}, {}] entirely below tree {} at [{}, {}]",
                    x.index,
                    x.cell.interval.lower,
                    x.cell.interval.upper,
                    y.index,
                    y.cell.interval.lower,
                    y.cell.interval.upper
                ));
            }
        }
    }
    match a.format {
        Format::Json => {
            let report: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "index": row.index,
                        "loose_path": row.loose_path,
                        "tree": row.tree,
                        "lower": row.cell.interval.lower,
                        "upper": row.cell.interval.upper,
                        "status": row.cell.status.to_string(),
                        "search": row.searched,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string(&json!({
                    "m": a.m, "n": a.n, "r": 3,
                    "trees": report,
                    "divergence": divergence,
                }))?
            );
        }
        Format::Text | Format::Csv => {
            println!(
                "census: {} tree(s) of order {} (uniformity 3) vs K_{}",
                rows.len(),
                a.m,
                a.n
            );
            for row in &rows {
                let label = if row.loose_path {
                    format!("tree {} (loose path)", row.index)
                } else {
                    format!("tree {}", row.index)
                };
                let cell_desc = if row.cell.interval.is_exact() {
                    format!("exact {}", row.cell.interval.lower)
                } else {
                    format!(
                        "interval [{}, {}] ({})",
                        row.cell.interval.lower, row.cell.interval.upper, row.cell.status
                    )
                };
                let search_desc = match &row.searched {
                    Some(RamseyOutcome::Exact { value, nodes, .. }) => {
                        format!("; search settles {value} ({nodes} nodes)")
                    }
                    Some(RamseyOutcome::Exhausted { known_lower, .. }) => {
                        format!("; search budget exhausted at lower bound {known_lower}")
                    }
                    None => String::new(),
                };
                println!("{label}: {cell_desc}{search_desc}");
            }
            if divergence.is_empty() {
                println!("divergence: none");
            } else {
                for d in &divergence {
                    println!("divergence: {d}");
                }
            }
        }
    }
    if let Some(msg) = mismatch {
        anyhow::bail!("search and registry disagree: {msg}");
    }
    let exit = if budget_hit { EXIT_BUDGET } else { EXIT_OK };
    Ok(CmdOut {
        exit,
        verdicts: json!({
            "trees": rows.len(),
            "divergence": divergence.len(),
            "budget_exhausted": budget_hit,
        }),
    })
}

fn cmd_verify_all(a: &VerifyAllArgs) -> Result<CmdOut> {
    let budget = resolve_budget(a.budget)?;
    let reports = run_all(budget);
    let mut failed = 0usize;
    let mut exhausted = 0usize;
    for r in &reports {
        let word = match r.outcome {
            CriterionOutcome::Pass => "PASS",
            CriterionOutcome::Fail => {
                failed += 1;
                "FAIL"
            }
            CriterionOutcome::BudgetExhausted => {
                exhausted += 1;
                "BUDGET EXHAUSTED"
            }
        };
        println!("criterion {} ({}): {word} - {}", r.id, r.name, r.detail);
    }
    println!(
        "{} criteria: {} passed, {failed} failed, {exhausted} budget-exhausted",
        reports.len(),
        reports.len() - failed - exhausted
    );
    let exit = if failed > 0 {
        EXIT_FAILURE
    } else if exhausted > 0 {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    Ok(CmdOut {
        exit,
        verdicts: json!({
            "passed": reports.len() - failed - exhausted,
            "failed": failed,
            "budget_exhausted": exhausted,
        }),
    })
}
