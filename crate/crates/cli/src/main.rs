use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use quatfact_core::commands::{document, execute, exit_code, Command, Options};
use quatfact_core::realpoly::set_denominator_bound;

const DENOM_ENV: &str = "QUATFACT_DENOM_BOUND";

/// Factor quaternionic polynomials Q0(t) + s*Q1(t) into linear factors.
#[derive(Parser, Debug)]
#[command(name = "quatfact", version)]
struct Cli {
    /// One of: check, factor, classes, all, rulings, expand
    #[arg(value_parser = ["check", "factor", "classes", "all", "rulings", "expand"])]
    command: String,

    /// Polynomial, e.g. "(t-i)*(s-j)*(t-k)". Read from --file or standard input when absent.
    expr: Option<String>,

    /// Read the polynomial from a file.
    #[arg(long, value_name = "PATH", conflicts_with = "expr")]
    file: Option<PathBuf>,

    /// Emit a JSON document instead of text.
    #[arg(long)]
    json: bool,

    /// Order linear factors by ascending norm polynomial.
    #[arg(long)]
    canonical_order: bool,

    /// Show the class signature of each factorization.
    #[arg(long)]
    show_signatures: bool,
}

fn read_input(cli: &Cli) -> Result<String, String> {
    if let Some(e) = &cli.expr {
        return Ok(e.clone());
    }
    if let Some(path) = &cli.file {
        return std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()));
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| format!("cannot read standard input: {e}"))?;
    Ok(buf)
}

fn apply_denominator_bound() -> Result<(), String> {
    let Ok(raw) = std::env::var(DENOM_ENV) else {
        return Ok(());
    };
    match raw.trim().parse::<u64>() {
        Ok(b) if b > 0 => {
            set_denominator_bound(b);
            Ok(())
        }
        _ => Err(format!("{DENOM_ENV} must be a positive integer, got '{raw}'")),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(msg) = apply_denominator_bound() {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    let input = match read_input(&cli) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let command: Command = cli.command.parse().expect("validated by clap");
    let options = Options {
        canonical_order: cli.canonical_order,
        show_signatures: cli.show_signatures,
    };
    let outcome = execute(command, input.trim(), options);
    if cli.json {
        let doc = document(command, input.trim(), &outcome);
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else if let Ok(o) = &outcome {
        print!("{}", o.text);
    }
    match outcome {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
