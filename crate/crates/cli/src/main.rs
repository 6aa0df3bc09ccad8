use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ctc_core::io::{self, GenClass, GenParams};
use ctc_core::reductions::{self, ReductionKind};
use ctc_core::solvers::{self, AlgoChoice, SolveError, DEFAULT_LIMIT};
use ctc_core::{simulate, Instance};

/// Seeding optimization for Challenge the Champ tournaments.
///
/// Instances are JSON documents; results go to stdout as JSON, diagnostics to
/// stderr. Exit status is 2 for bad input, 1 for a failed verification or an
/// instance no algorithm can handle, 0 otherwise.
#[derive(Parser)]
#[command(name = "ctc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a good seeding, picking the algorithm from the instance class by default.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Largest instance handed to exhaustive search.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Run a seeding and print every match.
    Simulate {
        file: PathBuf,
        /// Comma-separated player ids, initial champ first.
        #[arg(long)]
        seeding: String,
    },
    /// Optimal seeding by exhaustive search.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Level-by-level approximation for popularity values.
    Approx { file: PathBuf },
    /// Build a tournament instance from a 3-D matching or independent-set instance.
    Reduce {
        #[arg(value_parser = parse_kind)]
        kind: ReductionKind,
        source: PathBuf,
        /// Copies per edge in the independent-set reductions (default |V|²).
        #[arg(long)]
        scale: Option<usize>,
    },
    /// Seeding reaching the reduced target from a solution of the source instance.
    Witness {
        #[arg(value_parser = parse_kind)]
        kind: ReductionKind,
        source: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        scale: Option<usize>,
    },
    /// Random instance from a ChaCha8 generator seeded with --seed.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "popularity")]
        value: String,
        #[arg(long, default_value_t = 9)]
        max_value: u64,
        /// Comma-separated popularity levels, e.g. 0,1,2.
        #[arg(long, value_delimiter = ',')]
        levels: Option<Vec<u64>>,
    },
    /// Check that a seeding is valid and reaches the instance target.
    Verify {
        file: PathBuf,
        #[arg(long)]
        seeding: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Auto,
    Greedy,
    Binary,
    Dp,
    Approx,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Tournament,
    Dag,
}

fn parse_kind(s: &str) -> Result<ReductionKind, String> {
    ReductionKind::parse(s).ok_or_else(|| "expected 3dm-popularity, 3dm-pair, is-binary or is-linear".to_string())
}

enum Failure {
    /// Bad arguments or input files.
    Usage(String),
    /// Verification failed or no algorithm applies.
    Rejected(String),
}

impl From<io::IoError> for Failure {
    fn from(e: io::IoError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<reductions::ReductionError> for Failure {
    fn from(e: reductions::ReductionError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::NoAlgorithm { .. } => Failure::Rejected(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance, Failure> {
    io::parse_instance(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn print(v: &serde_json::Value) {
    println!("{}", io::to_line(v));
}

fn evaluate(inst: &Instance, seeding: &str) -> Result<(ctc_core::TournamentTrace, u64), Failure> {
    let seeding = io::parse_seeding_arg(seeding)?;
    let trace = simulate(&inst.graph, &seeding).map_err(|e| Failure::Usage(e.to_string()))?;
    let value = inst.value.evaluate(&trace).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok((trace, value))
}

fn reduce(kind: ReductionKind, source: &Path, scale: Option<usize>) -> Result<ctc_core::Reduced, Failure> {
    let bytes = read(source)?;
    Ok(match kind {
        ReductionKind::ThreeDmPopularity | ReductionKind::ThreeDmPair => {
            if scale.is_some() {
                return Err(Failure::Usage("--scale only applies to the independent-set reductions".into()));
            }
            let tdm = io::parse_3dm(&bytes)?;
            if kind == ReductionKind::ThreeDmPair {
                reductions::reduce_3dm_to_pairbased_dag(&tdm)?
            } else {
                reductions::reduce_3dm_to_ternary_popularity(&tdm)?
            }
        }
        ReductionKind::IsBinary | ReductionKind::IsLinear => {
            let is = io::parse_is(&bytes)?;
            let m = scale.unwrap_or_else(|| is.required_multiplicity());
            reductions::reduce_is_scaled(&is, kind, m)?
        }
    })
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Solve { file, algo, limit } => {
            let inst = load(&file)?;
            let algo = match algo {
                Algo::Auto => AlgoChoice::Auto,
                Algo::Greedy => AlgoChoice::Greedy,
                Algo::Binary => AlgoChoice::Binary,
                Algo::Dp => AlgoChoice::Dp,
                Algo::Approx => AlgoChoice::Approx,
                Algo::Brute => AlgoChoice::Brute,
            };
            let r = solvers::solve(&inst, algo, limit)?;
            print(&io::solve_result_to_json(&r, inst.target));
        }
        Command::Exact { file, limit } => {
            let inst = load(&file)?;
            let r = solvers::solve(&inst, AlgoChoice::Brute, limit)?;
            print(&io::solve_result_to_json(&r, inst.target));
        }
        Command::Approx { file } => {
            let inst = load(&file)?;
            let r = solvers::solve(&inst, AlgoChoice::Approx, 0)?;
            print(&io::solve_result_to_json(&r, inst.target));
        }
        Command::Simulate { file, seeding } => {
            let inst = load(&file)?;
            let (trace, value) = evaluate(&inst, &seeding)?;
            print(&io::trace_to_json(&trace, value));
        }
        Command::Verify { file, seeding } => {
            let inst = load(&file)?;
            let (_, value) = evaluate(&inst, &seeding)?;
            let meets = inst.target.map(|t| value >= t);
            print(&json!({"valid": true, "value": value, "target": inst.target, "meets_target": meets}));
            if meets == Some(false) {
                return Err(Failure::Rejected(format!("value {value} is below the target {}", inst.target.unwrap())));
            }
        }
        Command::Reduce { kind, source, scale } => {
            let r = reduce(kind, &source, scale)?;
            for w in &r.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", String::from_utf8(io::emit_reduced(&r)).expect("JSON is UTF-8"));
        }
        Command::Witness { kind, source, solution, scale } => {
            let r = reduce(kind, &source, scale)?;
            let bytes = read(&solution)?;
            let seeding = match kind {
                ReductionKind::ThreeDmPopularity | ReductionKind::ThreeDmPair => {
                    let tdm = io::parse_3dm(&read(&source)?)?;
                    reductions::witness_3dm(&tdm, &r, &io::parse_solution(&bytes, "triples")?)?
                }
                ReductionKind::IsBinary | ReductionKind::IsLinear => {
                    let is = io::parse_is(&read(&source)?)?;
                    reductions::witness_is(&is, &r, &io::parse_solution(&bytes, "vertices")?)?
                }
            };
            let trace = simulate(&r.instance.graph, &seeding).map_err(|e| Failure::Usage(e.to_string()))?;
            let value = r.instance.value.evaluate(&trace).map_err(|e| Failure::Usage(e.to_string()))?;
            print(&io::seeding_to_json(&seeding, value, r.instance.target));
        }
        Command::Gen { seed, class, n, value, max_value, levels } => {
            let class = match class {
                Class::Tournament => GenClass::Tournament,
                Class::Dag => GenClass::Dag,
            };
            let inst = io::gen_random(seed, class, n, &value, &GenParams { max_value, levels })?;
            print!("{}", String::from_utf8(io::emit_instance(&inst)).expect("JSON is UTF-8"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Rejected(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
