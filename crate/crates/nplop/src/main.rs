//! Command-line front end for exact operad and nested pre-Lie computations:
//! evaluate compositions from serialized inputs and run axiom manifests.
//!
//! Exit codes: 0 on success, 1 when an evaluation fails or a manifest
//! expectation is not met, 2 on usage or parse errors.

mod checkcmd;
mod evalcmd;
mod grammar;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use npl_operads::label::Label;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "nplop", version, about = "exact computations with operads and nested pre-Lie structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one operation of a named structure on serialized terms.
    Eval(EvalArgs),
    /// Run a manifest of axiom checks and compare against expectations.
    Check(CheckArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Structure name: identity, com+, as+, cycles, exp, pi, arrow-pi,
    /// permutations, concat-e, shuffle-l, concat-l, sets, polymap.
    #[arg(long)]
    structure: String,
    /// Operation name, e.g. compose, npl, square, global, mu, mu-fold,
    /// shuffles, sections, prelie, end-compose, partial-eval.
    #[arg(long)]
    op: String,
    /// Composition point (a label), for the operations that need one.
    #[arg(long)]
    at: Option<u32>,
    /// Input document: a file path, inline JSON, or "-" for stdin.
    #[arg(long)]
    input: String,
}

#[derive(Args)]
struct CheckArgs {
    /// Manifest path (TOML).
    #[arg(long)]
    manifest: String,
    /// Worker threads for the axiom sweeps (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Per-check instance cap; reports past it are flagged truncated.
    #[arg(long)]
    max_instances: Option<usize>,
    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
}

/// Reads the input document: stdin for "-", a file when the path exists,
/// inline JSON otherwise.
fn read_input(source: &str) -> Result<serde_json::Value> {
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        buf
    } else if Path::new(source).exists() {
        std::fs::read_to_string(source).with_context(|| format!("reading {source}"))?
    } else {
        source.to_string()
    };
    serde_json::from_str(&text).with_context(|| "input is not valid JSON".to_string())
}

fn run_eval(args: &EvalArgs) -> Result<i32> {
    let input = match read_input(&args.input) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e:#}");
            return Ok(2);
        }
    };
    match evalcmd::evaluate(&args.structure, &args.op, args.at.map(Label), &input) {
        Ok(doc) => {
            println!("{}", serde_json::to_string(&doc).expect("serializable"));
            Ok(0)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            Ok(1)
        }
    }
}

fn run_check(args: &CheckArgs) -> Result<i32> {
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("building the worker pool")?;
    }
    let text = match std::fs::read_to_string(&args.manifest) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: reading {}: {e}", args.manifest);
            return Ok(2);
        }
    };
    let manifest = match checkcmd::load_manifest(&text) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e:#}");
            return Ok(2);
        }
    };
    let outcomes = checkcmd::run_manifest(&manifest, args.max_instances)?;
    let (rendered, all_match) = match args.format.as_str() {
        "text" => checkcmd::render_text(&outcomes),
        "json" => checkcmd::render_json(&outcomes),
        other => return Err(anyhow!("unknown format {other:?}")),
    };
    println!("{rendered}");
    Ok(if all_match { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Eval(args) => run_eval(args),
        Command::Check(args) => run_check(args),
    };
    match code {
        Ok(c) => ExitCode::from(c as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
