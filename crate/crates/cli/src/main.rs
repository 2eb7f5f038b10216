//! `ribbon`: command-line access to ribbon tableau computations and the
//! exhaustive verification suites. Results go to stdout as JSON, diagnostics
//! to stderr. Exit status is 0 on success, 1 when a check fails and 2 on a
//! usage error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ribbon_core::domino::{qlr_bruteforce, qlr_yamanouchi};
use ribbon_core::functions::{ribbon_function, strip_series};
use ribbon_core::polynomials::{expansion_json, schur_expand};
use ribbon_core::shapes::core_quotient;
use ribbon_core::verify::{run_suite, SUITES};
use ribbon_core::{LatticePath, Partition, SkewShape};

#[derive(Parser)]
#[command(name = "ribbon", version, about = "Ribbon tableaux, LLT polynomials and domino q-LR coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// n-core, n-quotient and diagonal offsets of a partition.
    CoreQuotient {
        /// Comma separated parts, e.g. `3,2,1`; empty for the empty partition.
        #[arg(long, allow_hyphen_values = true)]
        partition: Partition,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Ribbon function of a skew shape in finitely many variables.
    Llt {
        /// `outer/inner`, e.g. `3,3/1`; a bare partition is a straight shape.
        #[arg(long)]
        shape: SkewShape,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        vars: usize,
        /// Also print the expansion in Schur polynomials.
        #[arg(long)]
        schur: bool,
    },
    /// Generating function of horizontal strips attached below a path.
    StripSeries {
        /// Word over {0,1}: 0 a horizontal step, 1 a vertical step.
        #[arg(long)]
        path: LatticePath,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Domino q-Littlewood-Richardson coefficients of `s_ν · G_{μ/ρ}`.
    Qlr {
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value = "")]
        rho: Partition,
        #[arg(long, default_value = "")]
        nu: Partition,
        /// Compare against the Schur expansion computed directly.
        #[arg(long)]
        verify: bool,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        /// Size bound of the sweep (cells, path length or word length).
        #[arg(long)]
        max_cells: usize,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Worker threads; the report content does not depend on it.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

enum Outcome {
    Ok(Value),
    Failed(Value),
    Usage(String),
}

fn run(command: Command) -> Outcome {
    match command {
        Command::CoreQuotient { partition, n } => match core_quotient(&partition, n as usize) {
            Ok(cq) => Outcome::Ok(json!({
                "partition": partition.to_string(),
                "n": cq.n,
                "core": cq.core.to_string(),
                "quotient": cq.quotient.iter().map(Partition::to_string).collect::<Vec<_>>(),
                "offsets": cq.offsets,
            })),
            Err(e) => Outcome::Usage(e.to_string()),
        },
        Command::Llt { shape, n, vars, schur } => {
            let g = ribbon_function(&shape, n as usize, vars);
            let mut out = json!({
                "shape": shape.to_string(),
                "n": n,
                "vars": vars,
                "polynomial": g.to_json(),
            });
            if schur {
                match schur_expand(&g) {
                    Ok(e) => out["schur"] = expansion_json(&e),
                    Err(e) => {
                        out["error"] = json!(e.to_string());
                        return Outcome::Failed(out);
                    }
                }
            }
            Outcome::Ok(out)
        }
        Command::StripSeries { path, n } => Outcome::Ok(json!({
            "path": path.to_string(),
            "n": n,
            "series": strip_series(&path, n as usize),
        })),
        Command::Qlr { mu, rho, nu, verify } => {
            let shape = match SkewShape::new(mu, rho) {
                Ok(s) => s,
                Err(e) => return Outcome::Usage(e.to_string()),
            };
            let table = qlr_yamanouchi(&shape, &nu);
            let mut out = table.to_json();
            if verify {
                let agrees = qlr_bruteforce(&shape, &nu).is_ok_and(|b| b == table);
                out["bruteforce_agrees"] = json!(agrees);
                if !agrees {
                    return Outcome::Failed(out);
                }
            }
            Outcome::Ok(out)
        }
        Command::Verify { suite, max_cells, n, jobs } => {
            let go = || run_suite(&suite, max_cells, n as usize);
            let report = match jobs {
                Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
                    Ok(pool) => pool.install(go),
                    Err(e) => return Outcome::Usage(e.to_string()),
                },
                None => go(),
            };
            match report {
                Some(r) if r.passed() => Outcome::Ok(json!(r)),
                Some(r) => Outcome::Failed(json!(r)),
                None => Outcome::Usage(format!("suite `{suite}` does not run with n = {n}")),
            }
        }
    }
}

fn emit(v: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = serde_json::to_writer_pretty(&mut out, v);
    let _ = writeln!(out);
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Outcome::Ok(v) => {
            emit(&v);
            ExitCode::SUCCESS
        }
        Outcome::Failed(v) => {
            emit(&v);
            eprintln!("check failed");
            ExitCode::from(1)
        }
        Outcome::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
