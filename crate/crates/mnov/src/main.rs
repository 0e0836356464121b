use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mnov::context::Context;
use mnov::json as out_json;
use mnov::parse;
use mnov::print;
use mnov::table::{self, TableKind, TableParams};
use mnov::verify::{self, Params, Suite};

use mnov_core::magnov::{FreenessSolver, Normalizer};
use mnov_core::{dectree, spdeidx};

/// Exact computations in multi-Novikov algebras, multi-indices and
/// decorated trees.
#[derive(Parser)]
#[command(name = "mnov", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize an expression: magmatic terms into the normal-term
    /// basis, populated monomials into generator expressions, words and
    /// trees into their canonical forms.
    Normalize(NormalizeArgs),
    /// Run a verification suite; exits nonzero on any failure.
    Verify(VerifyArgs),
    /// Emit degree-indexed dimension counts.
    Table(TableArgs),
    /// Map a decorated tree to its SPDE multi-index.
    MapTree(MapTreeArgs),
}

#[derive(Args)]
struct NormalizeArgs {
    /// Expression kind: magma, genidx, spde or tree.
    #[arg(long)]
    kind: String,
    /// The expression to normalize.
    #[arg(long)]
    expr: String,
    /// Spatial dimension count d (coordinate letters have d+1 entries).
    #[arg(long, default_value_t = 0)]
    dims: usize,
    /// Comma-separated letter names, in declaration order.
    #[arg(long)]
    letters: Option<String>,
    /// Comma-separated generator names, in declaration order.
    #[arg(long)]
    labels: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: identities, freeness-gen, freeness-spde, braces,
    /// morphism, rotation, words or trees.
    #[arg(long)]
    suite: String,
    /// Seed for the deterministic sample stream.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    max_leaves: Option<u32>,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long)]
    dims: Option<usize>,
    /// Cap on coordinate-letter values.
    #[arg(long)]
    letter_cap: Option<u32>,
    /// Cap on partial-symbol multiplicities in generators.
    #[arg(long)]
    partial_cap: Option<u32>,
    /// Number of abstract letters.
    #[arg(long)]
    letters: Option<u32>,
    /// Number of generator labels.
    #[arg(long)]
    labels: Option<u32>,
}

#[derive(Args)]
struct TableArgs {
    /// Table kind: dims-gen, dims-spde or dims-normal.
    #[arg(long)]
    kind: String,
    /// Inclusive degree range, e.g. 1..7.
    #[arg(long)]
    range: String,
    #[arg(long, default_value_t = 1)]
    letters: u32,
    #[arg(long, default_value_t = 1)]
    labels: u32,
    #[arg(long, default_value_t = 0)]
    dims: usize,
    #[arg(long, default_value_t = 1)]
    letter_cap: u32,
    #[arg(long, default_value_t = 1)]
    partial_cap: u32,
    /// Output format: json or csv.
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct MapTreeArgs {
    /// Tree expression.
    #[arg(long)]
    expr: String,
    #[arg(long, default_value_t = 0)]
    dims: usize,
    #[arg(long)]
    json: bool,
}

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Normalize(args) => normalize(args),
        Command::Verify(args) => run_verify(args),
        Command::Table(args) => run_table(args),
        Command::MapTree(args) => map_tree(args),
    }
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn build_context(dims: usize, letters: &Option<String>, labels: &Option<String>) -> Context {
    let mut ctx = Context::new(dims);
    if let Some(ls) = letters {
        ctx.letters = ls.split(',').map(|s| s.trim().to_string()).collect();
    }
    if let Some(ls) = labels {
        ctx.labels = ls.split(',').map(|s| s.trim().to_string()).collect();
    }
    ctx
}

fn normalize(args: NormalizeArgs) -> ExitCode {
    let mut ctx = build_context(args.dims, &args.letters, &args.labels);
    match args.kind.as_str() {
        "magma" => {
            let term = match parse::parse_magma(&args.expr, &mut ctx) {
                Ok(t) => t,
                Err(e) => return usage_error(e),
            };
            let normal = Normalizer::new().normal_form(&term);
            if args.json {
                let value = out_json::output(&ctx, "magma", &normal, |t, c| print::magma(t, c));
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                println!("{}", print::poly(&normal, &ctx, |t, c| print::magma(t, c)));
            }
            ExitCode::SUCCESS
        }
        "genidx" => {
            let mono = match parse::parse_gen_monomial(&args.expr, &mut ctx) {
                Ok(m) => m,
                Err(e) => return usage_error(e),
            };
            let expr = match FreenessSolver::new().express_in_generators(&mono) {
                Ok(p) => p,
                Err(e) => return usage_error(e),
            };
            if args.json {
                let value = out_json::output(&ctx, "genidx", &expr, |t, c| print::magma(t, c));
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                println!("{}", print::poly(&expr, &ctx, |t, c| print::magma(t, c)));
            }
            ExitCode::SUCCESS
        }
        "spde" => {
            let word = match parse::parse_word(&args.expr, &mut ctx) {
                Ok(w) => w,
                Err(e) => return usage_error(e),
            };
            let normal = spdeidx::word_normal_form(&word);
            if args.json {
                let value = out_json::output(&ctx, "spde", &normal, |w, c| {
                    let s = print::normal_word(w, c);
                    if s.is_empty() {
                        "1".to_string()
                    } else {
                        s
                    }
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                println!("{}", print::word_poly(&normal, &ctx));
            }
            ExitCode::SUCCESS
        }
        "tree" => {
            let raw = match parse::parse_tree(&args.expr, &mut ctx) {
                Ok(t) => t,
                Err(e) => return usage_error(e),
            };
            let normal = dectree::normal_form(&raw);
            if args.json {
                let value = out_json::output(&ctx, "tree", &normal, |t, c| print::tree(t, c));
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                println!("{}", print::poly(&normal, &ctx, |t, c| print::tree(t, c)));
            }
            ExitCode::SUCCESS
        }
        other => usage_error(format!(
            "unknown kind `{other}`; expected magma, genidx, spde or tree"
        )),
    }
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let suite: Suite = match args.suite.parse() {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let params = Params {
        seed: args.seed,
        max_degree: args.max_degree,
        max_leaves: args.max_leaves,
        samples: args.samples,
        dims: args.dims,
        letter_cap: args.letter_cap,
        partial_cap: args.partial_cap,
        letters: args.letters,
        labels: args.labels,
    };
    let report = verify::run(suite, &params);
    println!(
        "{}",
        serde_json::to_string_pretty(&report.to_value()).expect("json")
    );
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (from, to) = s
        .split_once("..")
        .ok_or_else(|| format!("range `{s}` must look like 1..7"))?;
    let from: u32 = from
        .trim()
        .parse()
        .map_err(|_| format!("bad range start `{from}`"))?;
    let to: u32 = to
        .trim()
        .parse()
        .map_err(|_| format!("bad range end `{to}`"))?;
    if from == 0 || to < from {
        return Err(format!("range `{s}` must be nonempty and start at 1"));
    }
    Ok((from, to))
}

fn run_table(args: TableArgs) -> ExitCode {
    let kind: TableKind = match args.kind.parse() {
        Ok(k) => k,
        Err(e) => return usage_error(e),
    };
    let (from, to) = match parse_range(&args.range) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let params = TableParams {
        letters: args.letters,
        labels: args.labels,
        dims: args.dims,
        letter_cap: args.letter_cap,
        partial_cap: args.partial_cap,
    };
    let rows = table::counts(kind, from, to, &params);
    match args.format.as_str() {
        "json" => {
            let rows_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|(degree, count)| serde_json::json!({"count": count, "degree": degree}))
                .collect();
            let value = serde_json::json!({"kind": kind.name(), "rows": rows_json});
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            ExitCode::SUCCESS
        }
        "csv" => {
            println!("degree,count");
            for (degree, count) in rows {
                println!("{degree},{count}");
            }
            ExitCode::SUCCESS
        }
        other => usage_error(format!("unknown format `{other}`; expected json or csv")),
    }
}

fn map_tree(args: MapTreeArgs) -> ExitCode {
    let mut ctx = Context::new(args.dims);
    let raw = match parse::parse_tree(&args.expr, &mut ctx) {
        Ok(t) => t,
        Err(e) => return usage_error(e),
    };
    let canonical = dectree::normal_form(&raw);
    let mono = dectree::multiindex_poly(&canonical);
    if args.json {
        let value = out_json::output(&ctx, "map-tree", &mono, |m, c| print::spde_monomial(m, c));
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        println!(
            "{}",
            print::poly(&mono, &ctx, |m, c| print::spde_monomial(m, c))
        );
    }
    ExitCode::SUCCESS
}
