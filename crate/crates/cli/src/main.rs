//! `modfair`: solve, export, verify, generate, sample and benchmark
//! modification-fair cluster editing instances.
//!
//! Exit codes: 0 solved or valid, 2 infeasible, 3 limit reached, 64 usage
//! error, 65 data error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use modfair_core::bench::{run_sweep, write_csv, BenchConfig, BenchInstance};
use modfair_core::ilp::{export_lp, parse_solution, verify_solution};
use modfair_core::io::{
    parse_cta, parse_instance, sample_subgraph, write_cta, write_fair_instance, write_graph, write_modification_set,
    Instance, SampleSpec,
};
use modfair_core::reductions::{
    gen_cta_from_n3dm, gen_fcc_from_cta, gen_p3_padding, gen_single_red, CtaError, CtaInstance, N3dmInstance,
};
use modfair_core::solvers::{solve, Mode, SolveConfig, SolveOutcome, Status};
use modfair_core::{ColoredGraph, Rational};

const EXIT_INFEASIBLE: u8 = 2;
const EXIT_LIMIT: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "modfair", version, about = "Modification-fair cluster editing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMode {
    Fpt,
    Bicolored,
    Xp,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// Blue copy of a graph balanced by red paths on three vertices.
    P3Padding,
    /// Blue copy of a graph plus one red vertex on a degree-six vertex.
    SingleRed,
    /// Fair completion instance from an edge-addition instance.
    Fcc,
    /// Edge-addition instance from a numerical 3D matching instance.
    Cta,
}

#[derive(Subcommand)]
enum Command {
    /// Smallest fair modification set within the budget.
    Solve {
        instance: PathBuf,
        /// Budget; defaults to the instance's `k` line.
        #[arg(long)]
        k: Option<usize>,
        /// Fairness bound as `p/q` or a finite decimal; defaults to the
        /// instance's `delta` line.
        #[arg(long)]
        delta: Option<Rational>,
        #[arg(long, value_enum, default_value = "fpt")]
        mode: SolveMode,
        /// Mono-colored modification limit of the xp mode.
        #[arg(long)]
        mu: Option<usize>,
        /// Writes the modification set here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        time_limit_ms: Option<u64>,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Lifts the size guard of the brute-force mode.
        #[arg(long)]
        allow_large: bool,
    },
    /// Smallest cluster editing set, ignoring fairness.
    SolveClassic {
        instance: PathBuf,
        /// Largest budget tried; defaults to the instance's `k` line, then
        /// to all pairs.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        time_limit_ms: Option<u64>,
    },
    /// Integer program in LP text format.
    ExportLp {
        instance: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        delta: Option<Rational>,
        /// Omits the budget and fairness rows even if the instance has them.
        #[arg(long)]
        unconstrained: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks an external 0/1 solution of the exported program.
    Verify {
        instance: PathBuf,
        #[arg(long)]
        lp_solution: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        delta: Option<Rational>,
    },
    /// Builds a hardness instance.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Source: an instance file, or for `cta` a line
        /// `t a1..an | b1..bn | c1..cn`.
        input: PathBuf,
        /// Source budget; defaults to the input's `k` line.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "0")]
        delta: Rational,
        /// Padding exponent of the `cta` construction.
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Induced subgraph on a seeded breadth-first ball.
    Sample {
        instance: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classic optimum, then minimum fair solutions per normalized bound.
    Bench {
        #[arg(required = true)]
        instances: Vec<PathBuf>,
        /// Comma-separated normalized bounds.
        #[arg(long, value_delimiter = ',', default_value = "0,0.01,0.02,0.03,0.04,0.05")]
        sweep: Vec<Rational>,
        /// Time limit as a multiple of the classic solve time.
        #[arg(long, default_value_t = 100)]
        factor: u32,
        #[arg(long, default_value_t = 1000)]
        min_time_limit_ms: u64,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        k_cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

fn data(msg: impl ToString) -> Failure {
    Failure {
        code: EXIT_DATA,
        msg: msg.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| data(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance, Failure> {
    parse_instance(&read(path)?).map_err(|e| data(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| data(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn outcome_code(out: &SolveOutcome) -> u8 {
    match (out.status, out.solution.is_some()) {
        (Status::OptimumFound | Status::Feasible, _) => 0,
        (Status::Infeasible, _) => EXIT_INFEASIBLE,
        (Status::Timeout | Status::BudgetExceeded, true) => 0,
        (Status::Timeout | Status::BudgetExceeded, false) => EXIT_LIMIT,
    }
}

fn print_outcome(out: &SolveOutcome) {
    println!("status {:?}", out.status);
    if let Some(s) = &out.solution {
        println!("size {}", s.len());
    }
    if let Some(r) = &out.report {
        println!("diff {}", r.diff);
        println!("delta_norm {}", r.delta_norm);
        println!(
            "mono_red {} mono_blue {} bicolored {}",
            r.mono_red, r.mono_blue, r.bicolored
        );
    }
    println!(
        "nodes {} elapsed_ms {:.3}",
        out.stats.nodes,
        out.stats.elapsed.as_secs_f64() * 1e3
    );
}

fn finish(out: &SolveOutcome, path: Option<&Path>) -> Result<u8, Failure> {
    print_outcome(out);
    if let Some(s) = &out.solution {
        match path {
            Some(p) => emit(Some(p), &write_modification_set(s))?,
            None => print!("{}", write_modification_set(s)),
        }
    }
    Ok(outcome_code(out))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Solve {
            instance,
            k,
            delta,
            mode,
            mu,
            out,
            time_limit_ms,
            node_limit,
            allow_large,
        } => {
            let inst = load(&instance)?;
            let k = k
                .or(inst.k)
                .ok_or_else(|| usage("no budget: pass --k or add a `k` line"))?;
            let delta = delta
                .or(inst.delta)
                .ok_or_else(|| usage("no bound: pass --delta or add a `delta` line"))?;
            if delta.is_negative() {
                return Err(usage("--delta must be non-negative"));
            }
            let mode = match (mode, mu) {
                (SolveMode::Xp, Some(mu)) => Mode::XpMono { mu },
                (SolveMode::Xp, None) => return Err(usage("--mode xp needs --mu")),
                (_, Some(_)) => return Err(usage("--mu only applies to --mode xp")),
                (SolveMode::Fpt, None) => Mode::FairFpt,
                (SolveMode::Bicolored, None) => Mode::BicoloredOnly,
                (SolveMode::Brute, None) => Mode::BruteForce,
            };
            let mut cfg = SolveConfig::new(mode, k, delta);
            cfg.time_limit = time_limit_ms.map(Duration::from_millis);
            cfg.node_limit = node_limit;
            cfg.allow_large = allow_large;
            let outcome = solve(&inst.graph, &cfg).map_err(data)?;
            finish(&outcome, out.as_deref())
        }
        Command::SolveClassic {
            instance,
            k,
            out,
            time_limit_ms,
        } => {
            let inst = load(&instance)?;
            let n = inst.graph.n();
            let k = k.or(inst.k).unwrap_or(n * n.saturating_sub(1) / 2);
            let mut cfg = SolveConfig::new(Mode::ClassicUnfair, k, Rational::ZERO);
            cfg.time_limit = time_limit_ms.map(Duration::from_millis);
            let outcome = solve(&inst.graph, &cfg).map_err(data)?;
            finish(&outcome, out.as_deref())
        }
        Command::ExportLp {
            instance,
            k,
            delta,
            unconstrained,
            out,
        } => {
            let inst = load(&instance)?;
            let (k, delta) = if unconstrained {
                (k, delta)
            } else {
                (k.or(inst.k), delta.or(inst.delta))
            };
            let text = export_lp(&inst.graph, k, delta).map_err(data)?;
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Verify {
            instance,
            lp_solution,
            k,
            delta,
        } => {
            let inst = load(&instance)?;
            let sol =
                parse_solution(&read(&lp_solution)?).map_err(|e| data(format!("{}: {e}", lp_solution.display())))?;
            match verify_solution(&inst.graph, &sol, k.or(inst.k), delta.or(inst.delta)) {
                Ok(report) => {
                    println!(
                        "valid size {} diff {} delta_norm {}",
                        report.size(),
                        report.diff,
                        report.delta_norm
                    );
                    Ok(0)
                }
                Err(e) => Err(data(format!("invalid: {e}"))),
            }
        }
        Command::Gen {
            kind,
            input,
            k,
            delta,
            d,
            out,
        } => {
            if delta.is_negative() {
                return Err(usage("--delta must be non-negative"));
            }
            let text = read(&input)?;
            let result = match kind {
                GenKind::Cta => {
                    let n3dm: N3dmInstance = text.parse().map_err(data)?;
                    write_cta(&gen_cta_from_n3dm(&n3dm, d).map_err(data)?)
                }
                GenKind::Fcc => {
                    let cta = read_cta(&text, k)?;
                    write_fair_instance(&gen_fcc_from_cta(&cta, delta).map_err(data)?)
                }
                GenKind::P3Padding | GenKind::SingleRed => {
                    let inst = parse_instance(&text).map_err(data)?;
                    let k = k
                        .or(inst.k)
                        .ok_or_else(|| usage("no source budget: pass --k or add a `k` line"))?;
                    let fair = match kind {
                        GenKind::P3Padding => gen_p3_padding(&inst.graph, k, delta),
                        _ => gen_single_red(&inst.graph, k, delta),
                    }
                    .map_err(data)?;
                    write_fair_instance(&fair)
                }
            };
            emit(out.as_deref(), &result)?;
            Ok(0)
        }
        Command::Sample { instance, n, seed, out } => {
            let inst = load(&instance)?;
            let g = sample_subgraph(&inst.graph, SampleSpec::bfs(n, seed)).map_err(data)?;
            emit(out.as_deref(), &write_graph(&g))?;
            Ok(0)
        }
        Command::Bench {
            instances,
            sweep,
            factor,
            min_time_limit_ms,
            threads,
            k_cap,
            out,
        } => {
            if factor == 0 {
                return Err(usage("--factor must be positive"));
            }
            if sweep.iter().any(Rational::is_negative) {
                return Err(usage("--sweep values must be non-negative"));
            }
            let mut loaded = Vec::new();
            for path in &instances {
                let graph: ColoredGraph = load(path)?.graph;
                loaded.push(BenchInstance {
                    name: path.display().to_string(),
                    graph,
                });
            }
            let mut cfg = BenchConfig::new(sweep, factor);
            cfg.min_time_limit = Duration::from_millis(min_time_limit_ms);
            cfg.threads = threads;
            cfg.k_cap = k_cap;
            let result = run_sweep(&loaded, &cfg);
            for s in &result.skipped {
                eprintln!("skipped {}: {}", s.instance, s.reason);
            }
            emit(out.as_deref(), &write_csv(&result.records))?;
            Ok(0)
        }
    }
}

/// An edge-addition instance from its compact form or from a cluster graph
/// in the instance format.
fn read_cta(text: &str, k: Option<usize>) -> Result<CtaInstance, Failure> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    if first.is_some_and(|l| l.starts_with("p cta")) {
        let mut cta = parse_cta(text).map_err(data)?;
        if let Some(k) = k {
            cta.k = k.into();
        }
        return Ok(cta);
    }
    let inst = parse_instance(text).map_err(data)?;
    let k = k
        .or(inst.k)
        .ok_or_else(|| usage("no budget: pass --k or add a `k` line"))?;
    CtaInstance::from_graph(&inst.graph, k.into()).map_err(|e: CtaError| data(e))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
