use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cliffsplit::algebra::{Mv, Signature};
use cliffsplit::grading::{generate_tables, Grading, SignMode, TableKind};
use cliffsplit::verify::{self, Suite, SuiteConfig};
use cliffsplit::Error;

/// Exact Clifford-algebra splitting: grading tables, identity sweeps and
/// parallel/orthogonal decomposition.
#[derive(Parser)]
#[command(name = "cliffsplit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the k-vectorial grading tables of Cl(1,3).
    Tables {
        /// bivectorial, trivectorial, tetravectorial or all
        #[arg(long, default_value = "all")]
        kind: String,
        /// markdown or json
        #[arg(long, default_value = "markdown")]
        format: String,
    },
    /// Run seeded identity sweeps and print a report.
    Verify {
        /// projectors, products, metric, hodge, calculus, dual, dirac or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximal total degree of random polynomial fields.
        #[arg(long, default_value_t = 3)]
        degree: u32,
        /// p,q
        #[arg(long, default_value = "1,3")]
        signature: String,
        /// json or markdown
        #[arg(long, default_value = "json")]
        format: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
    /// Split a multivector into its parallel and orthogonal parts.
    Split {
        expr: String,
        /// Splitting element: a 1-form, a k-blade or any invertible element.
        #[arg(long)]
        n: String,
        #[arg(long, default_value = "1,3")]
        signature: String,
    },
}

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;

fn usage(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    USAGE
}

fn parse_signature(text: &str) -> Result<Signature, String> {
    let (p, q) = text
        .split_once(',')
        .ok_or_else(|| format!("signature must be p,q, got '{text}'"))?;
    let p: usize = p.trim().parse().map_err(|_| format!("bad p in '{text}'"))?;
    let q: usize = q.trim().parse().map_err(|_| format!("bad q in '{text}'"))?;
    Signature::new(p, q).map_err(|e| e.to_string())
}

fn cmd_tables(kind: &str, format: &str) -> u8 {
    let kinds = match kind {
        "all" => TableKind::ALL.to_vec(),
        k => match TableKind::parse(k) {
            Some(k) => vec![k],
            None => return usage(format!("unknown table kind '{k}'")),
        },
    };
    let table = generate_tables(&kinds);
    match format {
        "markdown" => print!("{}", table.to_markdown()),
        "json" => println!(
            "{}",
            serde_json::to_string_pretty(&table.to_json()).expect("table serializes")
        ),
        f => return usage(format!("unknown format '{f}'")),
    }
    if table.self_consistent() {
        OK
    } else {
        FAILED
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &str,
    trials: usize,
    seed: u64,
    degree: u32,
    signature: &str,
    format: &str,
    out: Option<&str>,
) -> u8 {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let sig = match parse_signature(signature) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    if !matches!(format, "json" | "markdown") {
        return usage(format!("unknown format '{format}'"));
    }
    let cfg = match SuiteConfig::new(suite, sig, trials, seed, degree) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let report = verify::run(&cfg);
    let text = if format == "json" {
        report.to_json()
    } else {
        report.to_markdown()
    };
    match out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: cannot write {path}: {e}");
                return FAILED;
            }
        }
        None => print!("{text}"),
    }
    let s = &report.summary;
    eprintln!(
        "records: {}, pass: {}, fail: {}, paper_mismatch: {}",
        s.records, s.pass, s.fail, s.paper_mismatch
    );
    if report.passed() {
        OK
    } else {
        FAILED
    }
}

fn parse_input(sig: Signature, what: &str, text: &str) -> Result<Mv, u8> {
    Mv::parse(sig, text).map_err(|e| match e {
        Error::Parse { pos, msg } => {
            let caret = format!("{}^", " ".repeat(pos));
            usage(format!("cannot parse {what} at byte {pos}: {msg}\n  {text}\n  {caret}"))
        }
        e => usage(format!("cannot parse {what}: {e}")),
    })
}

fn cmd_split(expr: &str, n: &str, signature: &str) -> u8 {
    let sig = match parse_signature(signature) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let (psi, splitter) = match (parse_input(sig, "input", expr), parse_input(sig, "splitter", n)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(c), _) | (_, Err(c)) => return c,
    };
    let grading = match splitter.homogeneous_grade() {
        Some(1) => Grading::vector(&splitter),
        Some(_) => Grading::k_form(&splitter),
        None => Grading::general(&splitter, SignMode::PlainSandwich),
    };
    match grading.and_then(|g| g.project(&psi)) {
        Ok(s) => {
            println!("parallel: {}", s.parallel);
            println!("orthogonal: {}", s.orthogonal);
            OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            FAILED
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Tables { kind, format } => cmd_tables(kind, format),
        Command::Verify {
            suite,
            trials,
            seed,
            degree,
            signature,
            format,
            out,
        } => cmd_verify(suite, *trials, *seed, *degree, signature, format, out.as_deref()),
        Command::Split { expr, n, signature } => cmd_split(expr, n, signature),
    };
    ExitCode::from(code)
}
