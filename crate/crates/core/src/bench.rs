//! Price-of-fairness sweeps: classic optimum first, then minimum fair
//! solutions under a range of normalized bounds, written out as CSV.

use std::fmt::{self, Write as _};
use std::time::Duration;

use rayon::prelude::*;

use crate::fairness::FairnessScale;
use crate::graph::ColoredGraph;
use crate::rational::Rational;
use crate::solvers::fpt::min_fair_solution;
use crate::solvers::{solve_classic, Mode, SearchLimits, SolveConfig, SolveError, Status};

#[derive(Debug, Clone)]
pub struct BenchInstance {
    pub name: String,
    pub graph: ColoredGraph,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub delta_norms: Vec<Rational>,
    /// Each fair solve may take this many times the classic solve time.
    pub time_limit_factor: u32,
    /// Lower bound on the fair time limit, so that sub-millisecond baselines
    /// do not turn into meaningless limits.
    pub min_time_limit: Duration,
    /// Time limit of the classic baseline solve.
    pub baseline_limit: Option<Duration>,
    /// Largest budget tried; `None` means all vertex pairs.
    pub k_cap: Option<usize>,
    /// Worker threads; `None` uses the rayon default.
    pub threads: Option<usize>,
}

impl BenchConfig {
    pub fn new(delta_norms: Vec<Rational>, time_limit_factor: u32) -> Self {
        BenchConfig {
            delta_norms,
            time_limit_factor,
            min_time_limit: Duration::from_secs(1),
            baseline_limit: None,
            k_cap: None,
            threads: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BenchStatus {
    Opt,
    Feasible,
    Infeasible,
    Timeout,
}

impl fmt::Display for BenchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchStatus::Opt => "Opt",
            BenchStatus::Feasible => "Feasible",
            BenchStatus::Infeasible => "Infeasible",
            BenchStatus::Timeout => "Timeout",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub reds: usize,
    pub blues: usize,
    /// The normalized bound of the row; the classic baseline row has 1.
    pub delta_norm_cap: Rational,
    pub k: Option<usize>,
    pub diff: Option<Rational>,
    pub delta_norm: Option<Rational>,
    pub elapsed_ms: f64,
    pub status: BenchStatus,
    /// `k / k_opt`, taken as 1 when both are 0.
    pub k_ratio: Option<Rational>,
    pub t_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skipped {
    pub instance: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct SweepResult {
    pub records: Vec<BenchRecord>,
    pub skipped: Vec<Skipped>,
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn k_ratio(k: usize, k_opt: usize) -> Option<Rational> {
    match (k, k_opt) {
        (0, 0) => Some(Rational::ONE),
        (_, 0) => None,
        _ => Some(Rational::new(k as i64, k_opt as i64)),
    }
}

/// Rows of one instance: the classic baseline, then one per bound in
/// `cfg.delta_norms` order.
pub fn run_instance(inst: &BenchInstance, cfg: &BenchConfig) -> Result<Vec<BenchRecord>, String> {
    let g = &inst.graph;
    let scale = FairnessScale::of(g).map_err(|e| e.to_string())?;
    let k_cap = cfg.k_cap.unwrap_or(g.n() * g.n().saturating_sub(1) / 2);
    let mut classic_cfg = SolveConfig::new(Mode::ClassicUnfair, k_cap, Rational::ZERO);
    classic_cfg.time_limit = cfg.baseline_limit;
    let baseline = solve_classic(g, &classic_cfg).map_err(|e| e.to_string())?;
    let Some(k_opt) = baseline.size().filter(|_| baseline.status == Status::OptimumFound) else {
        return Err(format!("classic baseline unsolved ({:?})", baseline.status));
    };
    let t_opt = baseline.stats.elapsed;
    let report = baseline.report.expect("both color classes are present");

    let row = |cap: Rational, k: Option<usize>, diff, dn, elapsed: Duration, status| BenchRecord {
        instance: inst.name.clone(),
        n: g.n(),
        m: g.edge_count(),
        reds: g.red_count(),
        blues: g.blue_count(),
        delta_norm_cap: cap,
        k,
        diff,
        delta_norm: dn,
        elapsed_ms: millis(elapsed),
        status,
        k_ratio: k.and_then(|k| k_ratio(k, k_opt)),
        t_ratio: (!t_opt.is_zero()).then(|| elapsed.as_secs_f64() / t_opt.as_secs_f64()),
    };

    let mut rows = vec![row(
        Rational::ONE,
        Some(k_opt),
        Some(report.diff),
        Some(report.delta_norm),
        t_opt,
        BenchStatus::Opt,
    )];
    let limit = (t_opt * cfg.time_limit_factor).max(cfg.min_time_limit);
    for &cap in &cfg.delta_norms {
        let delta = scale.delta_from_norm(cap, k_opt as u64);
        let mut limits = SearchLimits::new(None, Some(limit));
        let out = match min_fair_solution(g, delta, k_cap, &mut limits) {
            Ok(out) => out,
            Err(SolveError::Graph(e)) => return Err(e.to_string()),
            Err(e) => return Err(e.to_string()),
        };
        let status = match (out.status, out.solution.is_some()) {
            (Status::OptimumFound, _) => BenchStatus::Opt,
            (Status::Infeasible, _) => BenchStatus::Infeasible,
            (_, true) => BenchStatus::Feasible,
            (_, false) => BenchStatus::Timeout,
        };
        let (diff, dn) = out.report.as_ref().map(|r| (r.diff, r.delta_norm)).unzip();
        rows.push(row(cap, out.size(), diff, dn, out.stats.elapsed, status));
    }
    Ok(rows)
}

/// Runs all instances in parallel; records keep input order.
pub fn run_sweep(instances: &[BenchInstance], cfg: &BenchConfig) -> SweepResult {
    let work = || -> Vec<Result<Vec<BenchRecord>, String>> {
        instances.par_iter().map(|inst| run_instance(inst, cfg)).collect()
    };
    let results = match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool construction")
            .install(work),
        None => work(),
    };
    let mut out = SweepResult::default();
    for (inst, res) in instances.iter().zip(results) {
        match res {
            Ok(rows) => out.records.extend(rows),
            Err(reason) => out.skipped.push(Skipped {
                instance: inst.name.clone(),
                reason,
            }),
        }
    }
    out
}

pub const CSV_HEADER: &str =
    "instance,n,m,reds,blues,delta_norm_cap,k,diff,delta_norm,elapsed_ms,status,k_ratio,t_ratio,\
delta_norm_cap_exact,diff_exact,delta_norm_exact,k_ratio_exact";

/// Columns holding wall-clock measurements.
pub const TIME_COLUMNS: [&str; 2] = ["elapsed_ms", "t_ratio"];

const DIGITS: u32 = 6;

fn decimal(r: Option<Rational>) -> String {
    r.map_or_else(String::new, |r| r.to_decimal_string(DIGITS))
}

fn exact(r: Option<Rational>) -> String {
    r.map_or_else(String::new, |r| r.to_string())
}

/// Rationals appear twice: rounded to six decimals, and as `p/q` in the
/// trailing `_exact` columns. Missing values are empty fields.
pub fn write_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let name = if r.instance.contains([',', '"', '\n']) {
            format!("\"{}\"", r.instance.replace('"', "\"\""))
        } else {
            r.instance.clone()
        };
        let _ = writeln!(
            out,
            "{name},{},{},{},{},{},{},{},{},{:.3},{},{},{},{},{},{},{}",
            r.n,
            r.m,
            r.reds,
            r.blues,
            decimal(Some(r.delta_norm_cap)),
            r.k.map_or_else(String::new, |k| k.to_string()),
            decimal(r.diff),
            decimal(r.delta_norm),
            r.elapsed_ms,
            r.status,
            decimal(r.k_ratio),
            r.t_ratio.map_or_else(String::new, |t| format!("{t:.6}")),
            exact(Some(r.delta_norm_cap)),
            exact(r.diff),
            exact(r.delta_norm),
            exact(r.k_ratio),
        );
    }
    out
}

/// The CSV with the wall-clock columns blanked, for comparing runs.
pub fn mask_time_columns(csv: &str) -> String {
    let mut lines = csv.lines();
    let Some(header) = lines.next() else {
        return String::new();
    };
    let masked: Vec<usize> = header
        .split(',')
        .enumerate()
        .filter(|(_, h)| TIME_COLUMNS.contains(h))
        .map(|(i, _)| i)
        .collect();
    let mut out = format!("{header}\n");
    for line in lines {
        let fields: Vec<&str> = line
            .split(',')
            .enumerate()
            .map(|(i, f)| if masked.contains(&i) { "" } else { f })
            .collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{self, *};

    fn instance(name: &str, colors: Vec<Color>, edges: &[(usize, usize)]) -> BenchInstance {
        BenchInstance {
            name: name.into(),
            graph: ColoredGraph::from_edges(colors, edges.iter().copied()).unwrap(),
        }
    }

    fn config(values: &[Rational]) -> BenchConfig {
        BenchConfig::new(values.to_vec(), 100)
    }

    #[test]
    fn cluster_graph_rows_are_all_zero() {
        let inst = instance("k2", vec![Red, Blue, Blue], &[(0, 1)]);
        let rows = run_instance(&inst, &config(&[Rational::ZERO, Rational::new(1, 100)])).unwrap();
        assert_eq!(rows.len(), 3);
        for r in &rows {
            assert_eq!(
                (r.k, r.diff, r.status),
                (Some(0), Some(Rational::ZERO), BenchStatus::Opt)
            );
            assert_eq!(r.k_ratio, Some(Rational::ONE));
        }
    }

    #[test]
    fn two_paths_keep_the_classic_size() {
        let inst = instance(
            "paths",
            vec![Blue, Blue, Blue, Red, Red, Red],
            &[(0, 1), (1, 2), (3, 4), (4, 5)],
        );
        let rows = run_instance(&inst, &config(&[Rational::ZERO])).unwrap();
        assert_eq!(rows[0].k, Some(2));
        assert_eq!(rows[1].k, Some(2));
        assert_eq!(rows[1].k_ratio, Some(Rational::ONE));
        assert_eq!(rows[1].status, BenchStatus::Opt);
    }

    #[test]
    fn csv_shape_and_formatting() {
        assert_eq!(write_csv(&[]), format!("{CSV_HEADER}\n"));
        let record = BenchRecord {
            instance: "x".into(),
            n: 3,
            m: 2,
            reds: 1,
            blues: 2,
            delta_norm_cap: Rational::ZERO,
            k: Some(1),
            diff: Some(Rational::new(2, 3)),
            delta_norm: Some(Rational::new(1, 3)),
            elapsed_ms: 1.25,
            status: BenchStatus::Opt,
            k_ratio: Some(Rational::ONE),
            t_ratio: None,
        };
        let csv = write_csv(&[record]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(
            lines[1],
            "x,3,2,1,2,0.000000,1,0.666667,0.333333,1.250,Opt,1.000000,,0/1,2/3,1/3,1/1"
        );
        assert_eq!(lines[0].split(',').count(), lines[1].split(',').count());
        let masked = mask_time_columns(&csv);
        assert!(masked.lines().nth(1).unwrap().contains(",0.333333,,Opt,1.000000,,0/1"));
    }

    #[test]
    fn sweep_keeps_input_order_and_reports_skips() {
        let good = instance("a", vec![Red, Blue], &[]);
        let mono = instance("b", vec![Blue, Blue], &[]);
        let other = instance("c", vec![Red, Blue, Red], &[(0, 1)]);
        let mut cfg = config(&[Rational::ZERO]);
        cfg.threads = Some(2);
        let out = run_sweep(&[good, mono, other], &cfg);
        let names: Vec<&str> = out.records.iter().map(|r| r.instance.as_str()).collect();
        assert_eq!(names, vec!["a", "a", "c", "c"]);
        assert_eq!(out.skipped.len(), 1);
        assert_eq!(out.skipped[0].instance, "b");
    }
}
