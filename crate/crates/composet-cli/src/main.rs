//! Command line front end: build and export the ranked graphs, run the
//! verification suites, tabulate the word bijection, and replay the
//! embedded examples.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use composet::{
    phi_rows, verify_dual_filtered, verify_dual_graded, verify_graded_pointwise,
    verify_index_inertness, verify_phi, verify_relation, verify_zero_contribution, Composition,
    OperatorRelation, RankedGraph, UpFamily,
};
use composet_cli::examples;
use composet_cli::export::{graph_to_dot, graph_to_json_string, graph_to_tikz, EdgeStyle};
use composet_cli::fixtures::{compare_fixture, Fixture};
use composet_cli::report::{check_json, check_line, run_timed, Timed};
use serde_json::json;

const MAX_RANK_BOUND: u32 = 12;

#[derive(Parser)]
#[command(
    name = "composet",
    version,
    about = "Composition operators, their ranked graphs, and exhaustive identity checks",
    after_help = "Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage or IO error."
)]
struct Cli {
    /// Emit machine-readable JSON instead of text report lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a ranked graph and print it (or write it with --output).
    Build(BuildArgs),
    /// Build a ranked graph and write it to a file.
    Export(ExportArgs),
    /// Check the commutator identities relating the up and down operators.
    Verify(VerifyArgs),
    /// Check the operator relations and the zero-contribution case split.
    Relations(RelationsArgs),
    /// Tabulate the left-to-right word bijection for one composition.
    PhiTable(PhiTableArgs),
    /// Replay every embedded worked example and diff against expected values.
    Examples,
    /// Compare the built rank-4 graphs against the bundled edge-list fixtures.
    CompareFixtures,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphName {
    /// Covers add one box via jdt operators.
    Rc,
    /// Covers add one box via box-adding operators.
    Lc,
    /// Covers remove one box.
    Qc,
    /// Edges remove any set-indexed collection of boxes.
    Qct,
}

impl GraphName {
    fn build(self, max_rank: u32) -> RankedGraph {
        match self {
            GraphName::Rc => composet::build_rc(max_rank),
            GraphName::Lc => composet::build_lc(max_rank),
            GraphName::Qc => composet::build_qc(max_rank),
            GraphName::Qct => composet::build_qct(max_rank),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Dot,
    Tikz,
}

#[derive(Args)]
struct GraphArgs {
    /// Which graph to build.
    #[arg(long, value_enum)]
    graph: GraphName,
    /// Largest rank to include (clamped to at most 12).
    #[arg(long, default_value_t = 6)]
    max_rank: u32,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Draw repeated edges once, without labels (DOT and TikZ only).
    #[arg(long, conflicts_with = "edge_labels")]
    simple_edges: bool,
    /// Draw repeated edges once with a numeric label (DOT and TikZ only).
    #[arg(long)]
    edge_labels: bool,
}

impl GraphArgs {
    fn edge_style(&self) -> EdgeStyle {
        if self.simple_edges {
            EdgeStyle::Simple
        } else if self.edge_labels {
            EdgeStyle::Label
        } else {
            EdgeStyle::Repeat
        }
    }
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Destination file.
    #[arg(long)]
    output: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Pair {
    All,
    RcQc,
    LcQc,
    RcQct,
    LcQct,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which up/down pairing to check.
    #[arg(long, value_enum, default_value = "all")]
    pair: Pair,
    /// Largest composition size in the universe (default 8 for the graded
    /// identities, 7 for the filtered ones).
    #[arg(long)]
    max_size: Option<u32>,
}

#[derive(Args)]
struct RelationsArgs {
    /// Largest allowed part in the weak-composition universe.
    #[arg(long, default_value_t = 6)]
    max_part: u32,
    /// Largest allowed number of parts.
    #[arg(long, default_value_t = 5)]
    max_len: usize,
    /// Largest operator index to quantify over.
    #[arg(long, default_value_t = 8)]
    max_index: u32,
}

#[derive(Args)]
struct PhiTableArgs {
    /// Composition as comma-separated positive parts, e.g. 2,1,3; write
    /// `empty` for the empty composition.
    #[arg(long, value_parser = parse_alpha)]
    alpha: Composition,
}

fn parse_alpha(text: &str) -> Result<Composition, String> {
    if text == "empty" {
        return Ok(Composition::new(Vec::new()));
    }
    let mut parts = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        let part: u32 = piece
            .parse()
            .map_err(|_| format!("bad part {piece:?}: expected a positive integer"))?;
        if part == 0 {
            return Err("parts must be positive; write `empty` for the empty composition".into());
        }
        parts.push(part);
    }
    Ok(Composition::new(parts))
}

fn clamp_rank(requested: u32) -> u32 {
    if requested > MAX_RANK_BOUND {
        eprintln!("max-rank {requested} is above the supported bound; using {MAX_RANK_BOUND}");
        MAX_RANK_BOUND
    } else {
        requested
    }
}

fn run_build(args: &GraphArgs, output: Option<&Path>) -> i32 {
    let graph = args.graph.build(clamp_rank(args.max_rank));
    let text = match args.format {
        OutputFormat::Json => graph_to_json_string(&graph),
        OutputFormat::Dot => graph_to_dot(&graph, args.edge_style()),
        OutputFormat::Tikz => graph_to_tikz(&graph, args.edge_style()),
    };
    match output {
        None => {
            print!("{text}");
            0
        }
        Some(path) => match fs::write(path, &text) {
            Ok(()) => {
                eprintln!("wrote {}", path.display());
                0
            }
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                2
            }
        },
    }
}

fn finish_checks(checks: &[Timed], json: bool) -> i32 {
    if json {
        let body: Vec<_> = checks.iter().map(check_json).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&body).expect("reports serialize")
        );
    } else {
        for timed in checks {
            println!("{}", check_line(timed));
        }
    }
    if checks.iter().all(|t| t.check.passed()) {
        0
    } else {
        1
    }
}

fn run_verify(args: &VerifyArgs, json: bool) -> i32 {
    let graded = args.max_size.unwrap_or(8);
    let filtered = args.max_size.unwrap_or(7);
    let mut checks = Vec::new();
    if matches!(args.pair, Pair::All | Pair::RcQc) {
        checks.push(run_timed(|| verify_dual_graded(UpFamily::Jdt, graded)));
        checks.push(run_timed(|| verify_graded_pointwise(graded)));
    }
    if matches!(args.pair, Pair::All | Pair::LcQc) {
        checks.push(run_timed(|| verify_dual_graded(UpFamily::BoxAdd, graded)));
    }
    if matches!(args.pair, Pair::All | Pair::RcQct) {
        checks.push(run_timed(|| verify_dual_filtered(UpFamily::Jdt, filtered)));
    }
    if matches!(args.pair, Pair::All | Pair::LcQct) {
        checks.push(run_timed(|| {
            verify_dual_filtered(UpFamily::BoxAdd, filtered)
        }));
    }
    finish_checks(&checks, json)
}

fn run_relations(args: &RelationsArgs, json: bool) -> i32 {
    let mut checks = Vec::new();
    for rel in OperatorRelation::ALL {
        checks.push(run_timed(|| {
            verify_relation(rel, args.max_part, args.max_len, args.max_index)
        }));
    }
    checks.push(run_timed(|| {
        verify_zero_contribution(args.max_part, args.max_len, args.max_index)
    }));
    checks.push(run_timed(|| verify_index_inertness(4, 4, 3)));
    finish_checks(&checks, json)
}

fn run_phi_table(alpha: &Composition, json: bool) -> i32 {
    let rows = phi_rows(alpha);
    let report = verify_phi(alpha);
    if json {
        let body = json!({
            "alpha": alpha.parts(),
            "rows": rows.iter().map(|r| json!({
                "word": r.word.to_string(),
                "image": r.image.to_string(),
                "word_value": r.word_value.parts(),
                "image_value": r.image_value.parts(),
            })).collect::<Vec<_>>(),
            "checks": report.clauses.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed(),
                "cases": c.cases,
            })).collect::<Vec<_>>(),
            "passed": report.passed(),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&body).expect("table serializes")
        );
    } else {
        println!("alpha = {alpha}");
        let headers = ["w in Y", "w(alpha)", "phi(w) in Z", "phi(w)(alpha)"];
        let cells: Vec<[String; 4]> = rows
            .iter()
            .map(|r| {
                [
                    r.word.to_string(),
                    r.word_value.to_string(),
                    r.image.to_string(),
                    r.image_value.to_string(),
                ]
            })
            .collect();
        let mut width = [headers[0].len(), headers[1].len(), headers[2].len()];
        for cell in &cells {
            for (k, slot) in width.iter_mut().enumerate() {
                *slot = (*slot).max(cell[k].len());
            }
        }
        println!(
            "{:<w0$}  {:<w1$}  {:<w2$}  {}",
            headers[0],
            headers[1],
            headers[2],
            headers[3],
            w0 = width[0],
            w1 = width[1],
            w2 = width[2],
        );
        for cell in &cells {
            println!(
                "{:<w0$}  {:<w1$}  {:<w2$}  {}",
                cell[0],
                cell[1],
                cell[2],
                cell[3],
                w0 = width[0],
                w1 = width[1],
                w2 = width[2],
            );
        }
        print!("{report}");
    }
    if report.passed() {
        0
    } else {
        1
    }
}

fn run_examples(json: bool) -> i32 {
    let rows = examples::run_all();
    let all_passed = rows.iter().all(|r| r.passed);
    if json {
        let body: Vec<_> = rows
            .iter()
            .map(|r| {
                json!({
                    "label": r.label,
                    "passed": r.passed,
                    "actual": r.actual,
                    "expected": r.expected,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&body).expect("rows serialize")
        );
    } else {
        for r in &rows {
            if r.passed {
                println!("PASS {} = {}", r.label, r.actual);
            } else {
                println!(
                    "FAIL {}: got {}, expected {}",
                    r.label, r.actual, r.expected
                );
            }
        }
        let passed = rows.iter().filter(|r| r.passed).count();
        println!("{passed}/{} examples match", rows.len());
    }
    if all_passed {
        0
    } else {
        1
    }
}

fn run_compare_fixtures(json: bool) -> i32 {
    let mut all_passed = true;
    let mut lines = Vec::new();
    let mut body = Vec::new();
    for fixture in Fixture::ALL {
        let diff = match compare_fixture(&fixture.build(), fixture) {
            Ok(diff) => diff,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        };
        all_passed &= diff.is_empty();
        if json {
            let pairs = |edges: &[(Composition, Composition)]| {
                edges
                    .iter()
                    .map(|(from, to)| json!([from.parts(), to.parts()]))
                    .collect::<Vec<_>>()
            };
            body.push(json!({
                "name": diff.name,
                "passed": diff.is_empty(),
                "fixture_edges": diff.fixture_edges,
                "graph_edges": diff.graph_edges,
                "missing_from_graph": pairs(&diff.missing_from_graph),
                "extra_in_graph": pairs(&diff.extra_in_graph),
            }));
        } else if diff.is_empty() {
            lines.push(format!(
                "PASS {}: {} edges match",
                diff.name, diff.fixture_edges
            ));
        } else {
            let mut line = format!(
                "FAIL {}: {} fixture edges vs {} built edges",
                diff.name, diff.fixture_edges, diff.graph_edges
            );
            for (from, to) in &diff.missing_from_graph {
                line.push_str(&format!("\n  missing {from} -> {to}"));
            }
            for (from, to) in &diff.extra_in_graph {
                line.push_str(&format!("\n  extra {from} -> {to}"));
            }
            lines.push(line);
        }
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&body).expect("diffs serialize")
        );
    } else {
        for line in lines {
            println!("{line}");
        }
    }
    if all_passed {
        0
    } else {
        1
    }
}

fn run() -> i32 {
    let cli = Cli::parse();
    match &cli.command {
        Command::Build(args) => run_build(&args.graph, args.output.as_deref()),
        Command::Export(args) => run_build(&args.graph, Some(&args.output)),
        Command::Verify(args) => run_verify(args, cli.json),
        Command::Relations(args) => run_relations(args, cli.json),
        Command::PhiTable(args) => run_phi_table(&args.alpha, cli.json),
        Command::Examples => run_examples(cli.json),
        Command::CompareFixtures => run_compare_fixtures(cli.json),
    }
}

fn main() {
    std::process::exit(run());
}
