//! `lexdom`: domination parameters, minimal dominating sets, lexicographic
//! products and well-dominated recognition for edge-list graphs.
//!
//! Exit status: 0 on success or a positive verdict, 1 on a negative verdict
//! (or a failing `verify`), 2 on usage, input or resource-cap errors.

mod oracle;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lexdom::domination::{self, DEFAULT_CAP};
use lexdom::lexicographic::enumerate_minimal_dominating_sets_product_with_cap;
use lexdom::recognition::{self, MethodChoice, RecognitionReport, RecognizeOptions, Witness};
use lexdom::{lex_product, parse_graph, write_edge_list_with_comments, Graph, VertexSet};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "lexdom", version, about = "Domination in graphs and lexicographic products")]
struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest vertex count for exhaustive enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP, value_name = "N")]
    cap: usize,
    /// Seed for sampled suites.
    #[arg(long, global = true, default_value_t = 0, value_name = "S")]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, size and the domination, total domination, upper domination and independence numbers.
    Stats { file: PathBuf },
    /// Classify a vertex set: domination, minimality, irreducibility, leaves, private neighbours.
    CheckSet {
        file: PathBuf,
        /// Comma-separated vertex indices.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
    },
    /// List minimal dominating sets (or irreducible ones, or those of G[H]).
    EnumerateMds {
        file: PathBuf,
        /// List irreducible dominating sets instead.
        #[arg(long, conflicts_with = "lex")]
        irreducible: bool,
        /// Enumerate in the product FILE[H].
        #[arg(long, value_name = "H")]
        lex: Option<PathBuf>,
    },
    /// Write the edge list of G[H], vertex (x, y) numbered x * |V(H)| + y.
    Product { g: PathBuf, h: PathBuf },
    /// Decide whether a graph (or a product G[H]) is well-dominated.
    WellDominated {
        #[arg(required_unless_present = "lex", conflicts_with = "lex")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Expected domination number for the bounded-k method.
        #[arg(long, value_name = "K")]
        k: Option<usize>,
        /// Recognize the product G[H] from its factors.
        #[arg(long, num_args = 2, value_names = ["G", "H"])]
        lex: Option<Vec<PathBuf>>,
    },
    /// Run the cross-check suites and print a scoreboard.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Scale::Small)]
        scale: verify::Scale,
        /// Write failing hypergraph instances here.
        #[arg(long, value_name = "DIR")]
        dump_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Enum,
    Gamma2,
    BoundedK,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Enum => MethodChoice::Enumeration,
            MethodArg::Gamma2 => MethodChoice::Gamma2,
            MethodArg::BoundedK => MethodChoice::BoundedK,
        }
    }
}

/// A command's result: text or JSON plus an exit status.
struct Report {
    text: String,
    json: Value,
    status: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, status: 0 }
    }
}

type Failure = String;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("json values serialize") + "\n"
            } else {
                report.text
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(report.status)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Stats { file } => stats(&read_graph(file)?, cli.cap),
        Command::CheckSet { file, set } => check_set(&read_graph(file)?, set),
        Command::EnumerateMds { file, irreducible, lex } => {
            let g = read_graph(file)?;
            match lex {
                Some(h) => enumerate_product(&g, &read_graph(h)?, cli.cap),
                None => enumerate(&g, *irreducible, cli.cap),
            }
        }
        Command::Product { g, h } => product(&read_graph(g)?, &read_graph(h)?),
        Command::WellDominated { file, method, k, lex } => {
            let opts = RecognizeOptions { method: (*method).into(), cap: cli.cap, ..RecognizeOptions::default() };
            let report = match (file, lex) {
                (_, Some(pair)) => recognition::is_well_dominated_lex_with(&read_graph(&pair[0])?, &read_graph(&pair[1])?, &opts),
                (Some(file), None) => {
                    let g = read_graph(file)?;
                    match (method, k) {
                        (MethodArg::BoundedK, Some(k)) => recognition::is_well_dominated_bounded_k(&g, *k),
                        (_, Some(_)) => return Err("--k applies only to --method bounded-k".into()),
                        _ => recognition::recognize_with(&g, &opts),
                    }
                }
                (None, None) => unreachable!("clap requires FILE or --lex"),
            };
            Ok(well_dominated(&report.map_err(|e| e.to_string())?))
        }
        Command::Verify { scale, dump_dir } => Ok(run_verify(*scale, cli.seed, cli.cap, dump_dir.as_deref())),
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn stats(g: &Graph, cap: usize) -> Result<Report, Failure> {
    let err = |e: lexdom::Error| e.to_string();
    let gamma = domination::gamma(g).map_err(err)?;
    let gamma_t = domination::gamma_t(g).ok();
    let upper = domination::upper_gamma_with_cap(g, cap).map_err(err)?;
    let alpha = domination::alpha(g).map_err(err)?;
    let components = g.connected_components().len();
    let gamma_t_text = gamma_t.map_or("undefined".to_string(), |t| t.to_string());
    let text = format!(
        "n {}\nm {}\ncomponents {components}\ngamma {gamma}\ngamma_t {gamma_t_text}\nupper_gamma {upper}\nalpha {alpha}\n",
        g.n(),
        g.edge_count()
    );
    let json = json!({
        "n": g.n(),
        "m": g.edge_count(),
        "components": components,
        "gamma": gamma,
        "gamma_t": gamma_t,
        "upper_gamma": upper,
        "alpha": alpha,
    });
    Ok(Report::ok(text, json))
}

fn check_set(g: &Graph, members: &[usize]) -> Result<Report, Failure> {
    let d = VertexSet::from_members(g.n(), members.iter().copied()).map_err(|e| e.to_string())?;
    let c = domination::classify(g, &d);
    let flags = [
        ("dominating", domination::is_dominating(g, &d)),
        ("total_dominating", domination::is_total_dominating(g, &d)),
        ("minimal_dominating", domination::is_minimal_dominating(g, &d)),
        ("minimal_total_dominating", domination::is_minimal_total_dominating(g, &d)),
        ("irreducible", domination::is_irreducible_dominating(g, &d)),
    ];
    let mut text = format!("set {d}\n");
    for (name, value) in flags {
        text.push_str(&format!("{name} {value}\n"));
    }
    text.push_str(&format!("leaves {}\nredundant {}\n", c.leaves, c.redundant));
    let mut private = serde_json::Map::new();
    for u in d.iter() {
        let p = domination::private_closed_neighbors(g, &d, u).expect("u is a member");
        text.push_str(&format!("private {u} {p}\n"));
        private.insert(u.to_string(), json!(p));
    }
    let mut json = json!({ "set": d, "classification": c, "private": private });
    for (name, value) in flags {
        json[name] = json!(value);
    }
    Ok(Report::ok(text, json))
}

fn enumerate(g: &Graph, irreducible: bool, cap: usize) -> Result<Report, Failure> {
    let sets = if irreducible {
        domination::enumerate_irreducible_dominating_sets_with_cap(g, cap)
    } else {
        domination::enumerate_minimal_dominating_sets_with_cap(g, cap)
    }
    .map_err(|e| e.to_string())?;
    let kind = if irreducible { "irreducible" } else { "minimal" };
    let mut text = format!("{kind} dominating sets: {}\n", sets.len());
    for s in &sets {
        text.push_str(&format!("{s}\n"));
    }
    Ok(Report::ok(text, json!({ "kind": kind, "count": sets.len(), "sets": sets })))
}

fn enumerate_product(g: &Graph, h: &Graph, cap: usize) -> Result<Report, Failure> {
    let sets = enumerate_minimal_dominating_sets_product_with_cap(g, h, cap).map_err(|e| e.to_string())?;
    let mut text = format!("minimal dominating sets of G[H]: {}\n", sets.len());
    for s in &sets {
        text.push_str(&format!("{s}\n"));
    }
    Ok(Report::ok(text, json!({ "kind": "minimal", "count": sets.len(), "sets": sets })))
}

fn product(g: &Graph, h: &Graph) -> Result<Report, Failure> {
    let p = lex_product(g, h).map_err(|e| e.to_string())?;
    let comments = vec![
        format!("lexicographic product G[H], |V(G)| = {}, |V(H)| = {}", g.n(), h.n()),
        format!("vertex (x, y) is numbered x * {} + y", h.n()),
    ];
    let text = write_edge_list_with_comments(p.flat(), &comments);
    let json = json!({
        "g_vertices": g.n(),
        "h_vertices": h.n(),
        "n": p.flat().n(),
        "m": p.flat().edge_count(),
        "edges": p.flat().edges(),
    });
    Ok(Report::ok(text, json))
}

fn witness_lines(w: &Witness) -> Vec<String> {
    match w {
        Witness::CommonSize { size } => vec![format!("witness every minimal dominating set has size {size}")],
        Witness::DifferentSizes { smaller, larger } => vec![
            format!("witness smaller {smaller} size {}", smaller.len()),
            format!("witness larger {larger} size {}", larger.len()),
        ],
        Witness::TrianglePair { t, t_prime, smaller, larger } => vec![
            format!("witness triangles {t} {t_prime}"),
            format!("witness smaller {smaller} size {}", smaller.len()),
            format!("witness larger {larger} size {}", larger.len()),
        ],
        Witness::ProductSizes { smaller, larger } => vec![
            format!("witness smaller {smaller} flat {} size {}", smaller.flat(), smaller.len()),
            format!("witness larger {larger} flat {} size {}", larger.flat(), larger.len()),
        ],
        Witness::GammaMismatch { required, actual } => {
            vec![format!("witness domination number {actual}, method requires {required}")]
        }
    }
}

fn well_dominated(r: &RecognitionReport) -> Report {
    let mut text = format!("verdict {}\nmethod {}\ngamma {}\n", r.verdict, r.method, r.gamma);
    for line in witness_lines(&r.witness) {
        text.push_str(&line);
        text.push('\n');
    }
    for c in &r.conditions {
        text.push_str(&format!("condition {} {}\n", if c.holds { "holds" } else { "fails" }, c.name));
    }
    Report {
        text,
        json: serde_json::to_value(r).expect("reports serialize"),
        status: if r.verdict { 0 } else { 1 },
    }
}

fn run_verify(scale: verify::Scale, seed: u64, cap: usize, dump_dir: Option<&Path>) -> Report {
    let board = verify::run(scale, seed, cap, dump_dir);
    let scale_name = match scale {
        verify::Scale::Small => "small",
        verify::Scale::Full => "full",
    };
    let mut text = format!("verify scale={scale_name} seed={seed}\n");
    for s in &board.suites {
        text.push_str(&format!(
            "{} {}: {} instances, {} mismatches\n",
            if s.passed { "PASS" } else { "FAIL" },
            s.name,
            s.instances,
            s.mismatches
        ));
        for e in &s.examples {
            text.push_str(&format!("    {e}\n"));
        }
    }
    let failed = board.suites.iter().filter(|s| !s.passed).count();
    if failed == 0 {
        text.push_str(&format!("all {} suites passed\n", board.suites.len()));
    } else {
        text.push_str(&format!("{failed} of {} suites failed\n", board.suites.len()));
    }
    Report {
        text,
        json: serde_json::to_value(&board).expect("scoreboard serializes"),
        status: if board.passed() { 0 } else { 1 },
    }
}
