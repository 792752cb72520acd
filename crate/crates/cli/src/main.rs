//! Command-line front end: construct (`gen`), certify (`verify`), tabulate
//! bounds (`bounds`, `table`), and solve exactly (`solve`).
//!
//! Exit codes are part of the contract so the tool can drive CI checks:
//! 0 = pass, 1 = a checked property failed, 2 = usage or parse error,
//! 3 = domination left unchecked (dimension above the dense cap),
//! 4 = solver timeout.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use cubedom::{
    build, certify_with, min_ids, plan, read_set, write_set, BoundStatus, Dimension, Domination,
    SolveOutcome, VerifyConfig, VertexSet,
};

mod table;
use table::TableFormat;

const EXIT_OK: u8 = 0;
const EXIT_PROPERTY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNCHECKED: u8 = 3;
const EXIT_TIMED_OUT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "cubedom",
    version,
    about = "Independent dominating sets of hypercubes: construct, verify, bound, solve"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn dimension_arg() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..=62)
}

#[derive(Subcommand)]
enum Command {
    /// Construct an independent dominating set of Q_n and write it in the
    /// set file format (to stdout unless --out is given).
    Gen {
        /// Target dimension.
        #[arg(long, value_parser = dimension_arg())]
        n: u32,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the construction plan (to stderr when the set itself goes
        /// to stdout, so stdout stays a valid set file).
        #[arg(long)]
        show_plan: bool,
    },
    /// Certify a set file: independence, domination, and bound comparison.
    Verify {
        /// Expected dimension; must match the file header.
        #[arg(long, value_parser = dimension_arg())]
        n: u32,
        /// Input path; stdin when omitted.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Largest dimension for the dense domination sweep; larger inputs
        /// report dominating=unchecked.
        #[arg(long, default_value_t = 30)]
        max_dense_n: u32,
    },
    /// Print the bound row for one dimension.
    Bounds {
        #[arg(long, value_parser = dimension_arg())]
        n: u32,
    },
    /// Print bound rows for a range of dimensions.
    Table {
        #[arg(long, value_parser = dimension_arg())]
        from: u32,
        #[arg(long, value_parser = dimension_arg())]
        to: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
    },
    /// Exact minimum independent dominating set search (dimensions 1..=7).
    Solve {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=7))]
        n: u32,
        #[arg(long, default_value_t = 600)]
        timeout_secs: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Gen { n, out, show_plan } => cmd_gen(n, out.as_deref(), show_plan),
        Command::Verify {
            n,
            input,
            max_dense_n,
        } => cmd_verify(n, input.as_deref(), max_dense_n),
        Command::Bounds { n } => cmd_table(n, n, TableFormat::Tsv),
        Command::Table { from, to, format } => {
            if from > to {
                eprintln!("error: --from ({from}) must not exceed --to ({to})");
                EXIT_USAGE
            } else {
                cmd_table(from, to, format)
            }
        }
        Command::Solve { n, timeout_secs } => cmd_solve(n, timeout_secs),
    };
    ExitCode::from(code)
}

fn cmd_gen(n: u32, out: Option<&Path>, show_plan: bool) -> u8 {
    let dim = Dimension::new(n).expect("validated by clap");
    let recipe = plan(dim);
    let set = match build(&recipe) {
        Ok(set) => set,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PROPERTY_FAILED;
        }
    };
    let written = match out {
        Some(path) => {
            if show_plan {
                println!("{recipe}");
            }
            File::create(path).and_then(|f| {
                let mut w = BufWriter::new(f);
                write_set(&set, &mut w)?;
                w.flush()
            })
        }
        None => {
            if show_plan {
                eprintln!("{recipe}");
            }
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            write_set(&set, &mut w).and_then(|_| w.flush())
        }
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_PROPERTY_FAILED
        }
    }
}

fn read_input(input: Option<&Path>) -> Result<VertexSet, String> {
    let result = match input {
        Some(path) => match File::open(path) {
            Ok(f) => read_set(BufReader::new(f)),
            Err(e) => return Err(format!("{}: {e}", path.display())),
        },
        None => read_set(io::stdin().lock()),
    };
    result.map_err(|e| e.to_string())
}

fn cmd_verify(n: u32, input: Option<&Path>, max_dense_n: u32) -> u8 {
    let set = match read_input(input) {
        Ok(set) => set,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    if set.dimension().get() != n {
        eprintln!(
            "error: header dimension {} does not match --n {n}",
            set.dimension()
        );
        return EXIT_USAGE;
    }

    let cfg = VerifyConfig {
        dense_cap: max_dense_n,
        ..VerifyConfig::default()
    };
    let report = certify_with(&set, &cfg);
    let dim = set.dimension();

    println!("independent={}", report.independent);
    let dominating = match &report.domination {
        Domination::Confirmed { .. } => "true",
        Domination::Failed { .. } => "false",
        Domination::Unchecked { .. } => "unchecked",
    };
    println!("dominating={dominating}");
    println!("size={}", report.cardinality);
    match report.min_pairwise_distance {
        Some(d) => println!("min_distance={d}"),
        None => println!("min_distance=none"),
    }
    let bound = match report.bound {
        BoundStatus::Meets => "meets",
        BoundStatus::Exceeds => "exceeds",
        BoundStatus::BelowLower => "below-lower",
    };
    println!("bound={bound}");
    if let Some((a, b)) = report.adjacent_pair {
        println!(
            "adjacent_pair={},{}",
            a.to_bit_string(dim),
            b.to_bit_string(dim)
        );
    }
    match &report.domination {
        Domination::Failed { uncovered, witness } => {
            println!("uncovered={uncovered}");
            println!("uncovered_witness={}", witness.to_bit_string(dim));
        }
        Domination::Unchecked { reason } => println!("unchecked_reason={reason}"),
        Domination::Confirmed { .. } => {}
    }
    println!("provably_minimum={}", report.provably_minimum);
    println!("elapsed_ms={}", report.elapsed.as_millis());
    println!("coverage_bytes={}", report.peak_coverage_bytes);

    match &report.domination {
        _ if !report.independent => EXIT_PROPERTY_FAILED,
        Domination::Failed { .. } => EXIT_PROPERTY_FAILED,
        Domination::Unchecked { .. } => EXIT_UNCHECKED,
        Domination::Confirmed { .. } => EXIT_OK,
    }
}

fn cmd_table(from: u32, to: u32, format: TableFormat) -> u8 {
    print!("{}", table::render(from, to, format));
    EXIT_OK
}

fn cmd_solve(n: u32, timeout_secs: u64) -> u8 {
    let dim = Dimension::new(n).expect("validated by clap");
    let result = match min_ids(dim, Duration::from_secs(timeout_secs)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    println!("n={n}");
    let code = match &result.outcome {
        SolveOutcome::Optimal { alpha, witness } => {
            println!("status=optimal");
            println!("alpha={alpha}");
            println!("witness={}", render_members(witness));
            EXIT_OK
        }
        SolveOutcome::TimedOut { best } => {
            println!("status=timed-out");
            match best {
                Some((size, witness)) => {
                    println!("best_size={size}");
                    println!("witness={}", render_members(witness));
                }
                None => println!("best_size=none"),
            }
            EXIT_TIMED_OUT
        }
    };
    println!("nodes_explored={}", result.nodes_explored);
    println!("elapsed_ms={}", result.elapsed.as_millis());
    code
}

fn render_members(set: &VertexSet) -> String {
    let dim = set.dimension();
    set.iter()
        .map(|v| v.to_bit_string(dim))
        .collect::<Vec<_>>()
        .join(",")
}
