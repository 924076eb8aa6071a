//! Exact solvers for modification-fair cluster editing.
//!
//! Every solver answers the same question: is there a modification set `S`
//! with `|S| <= k` and `diff(S) <= delta` whose application yields a cluster
//! graph, and if so, which one is smallest. They differ in method:
//!
//! * [`fpt::solve_fair_fpt`] enumerates the inclusion-minimal classic
//!   solutions by `P3` branching, then repairs unfair ones by an extension
//!   search on a kernelized copy of the resulting cluster graph.
//! * [`bicolored::solve_bicolored`] handles the case where only pairs with
//!   differently colored endpoints may be modified, via a maximum-weight
//!   bipartite matching between same-colored clusters.
//! * [`xp::solve_xp_mono`] guesses the mono-colored part and finishes with the
//!   matching.
//! * [`brute::solve_bruteforce`] scans all pair subsets and serves as oracle.

pub mod bicolored;
pub mod brute;
pub mod classic;
pub mod extension;
pub mod fpt;
pub mod matching;
pub mod reduce;
pub mod xp;

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::fairness::{EditCounts, FairnessReport, FairnessScale};
use crate::graph::{ColoredGraph, GraphError, ModificationSet};
use crate::rational::Rational;

pub use bicolored::solve_bicolored;
pub use brute::solve_bruteforce;
pub use classic::{enumerate_minimal_classic, for_each_minimal_classic, solve_classic};
pub use fpt::{min_fair_k, solve_fair_fpt};
pub use matching::max_weight_bipartite_matching;
pub use reduce::{reduce_cluster_instance, ClusterProfile, ReducedInstance};
pub use xp::solve_xp_mono;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    FairFpt,
    BicoloredOnly,
    /// At most `mu` mono-colored modifications.
    XpMono {
        mu: usize,
    },
    BruteForce,
    ClassicUnfair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveConfig {
    pub k: usize,
    pub delta: Rational,
    pub mode: Mode,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Lifts the instance-size guard of the brute-force oracle.
    pub allow_large: bool,
}

impl SolveConfig {
    pub fn new(mode: Mode, k: usize, delta: Rational) -> Self {
        SolveConfig {
            k,
            delta,
            mode,
            node_limit: None,
            time_limit: None,
            allow_large: false,
        }
    }

    pub fn fpt(k: usize, delta: Rational) -> Self {
        Self::new(Mode::FairFpt, k, delta)
    }

    pub fn brute(k: usize, delta: Rational) -> Self {
        Self::new(Mode::BruteForce, k, delta)
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    OptimumFound,
    Feasible,
    Infeasible,
    BudgetExceeded,
    Timeout,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub reductions: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: Status,
    pub solution: Option<ModificationSet>,
    pub report: Option<FairnessReport>,
    pub stats: SolveStats,
}

impl SolveOutcome {
    pub fn is_solved(&self) -> bool {
        matches!(self.status, Status::OptimumFound | Status::Feasible)
    }

    /// Size of the returned solution, if any.
    pub fn size(&self) -> Option<usize> {
        self.solution.as_ref().map(ModificationSet::len)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("brute force over {pairs} vertex pairs exceeds the guard of 36; set allow_large to override")]
    TooLarge { pairs: usize },
    #[error("solver called with mode {0:?}")]
    WrongMode(Mode),
}

/// Dispatches on `cfg.mode`.
pub fn solve(g: &ColoredGraph, cfg: &SolveConfig) -> Result<SolveOutcome, SolveError> {
    match cfg.mode {
        Mode::FairFpt => solve_fair_fpt(g, cfg),
        Mode::BicoloredOnly => solve_bicolored(g, cfg),
        Mode::XpMono { .. } => solve_xp_mono(g, cfg),
        Mode::BruteForce => solve_bruteforce(g, cfg),
        Mode::ClassicUnfair => solve_classic(g, cfg),
    }
}

/// Node and wall-clock accounting shared by the search routines.
#[derive(Debug)]
pub struct SearchLimits {
    start: Instant,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    nodes: u64,
    reductions: u64,
    hit: Option<Status>,
}

impl SearchLimits {
    pub fn new(node_limit: Option<u64>, time_limit: Option<Duration>) -> Self {
        let start = Instant::now();
        SearchLimits {
            start,
            node_limit,
            deadline: time_limit.map(|t| start + t),
            nodes: 0,
            reductions: 0,
            hit: None,
        }
    }

    pub fn unlimited() -> Self {
        Self::new(None, None)
    }

    pub fn from_config(cfg: &SolveConfig) -> Self {
        Self::new(cfg.node_limit, cfg.time_limit)
    }

    /// Counts one search node; `false` once a limit is exhausted.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.hit.is_some() {
            return false;
        }
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                self.hit = Some(Status::BudgetExceeded);
                return false;
            }
        }
        if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(256) && Instant::now() >= deadline {
                self.hit = Some(Status::Timeout);
                return false;
            }
        }
        true
    }

    pub fn note_reduction(&mut self, count: u64) {
        self.reductions += count;
    }

    pub fn exhausted(&self) -> Option<Status> {
        self.hit
    }

    pub fn stats(&self) -> SolveStats {
        SolveStats {
            nodes: self.nodes,
            reductions: self.reductions,
            elapsed: self.start.elapsed(),
        }
    }
}

/// A fair solution under consideration. Candidates compare by size, then
/// by diff, then by the lexicographic pair list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Candidate {
    pub set: ModificationSet,
    pub counts: EditCounts,
    scaled_diff: u128,
}

impl Candidate {
    pub fn new(scale: &FairnessScale, set: ModificationSet, counts: EditCounts) -> Self {
        let scaled_diff = scale.scaled_diff(&counts);
        Candidate {
            set,
            counts,
            scaled_diff,
        }
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    fn key(&self) -> (usize, u128, &ModificationSet) {
        (self.set.len(), self.scaled_diff, &self.set)
    }

    /// Whether a solution with this size and diff could still beat `self`.
    pub fn may_improve(&self, size: usize, scaled_diff: u128) -> bool {
        (size, scaled_diff) <= (self.set.len(), self.scaled_diff)
    }
}

/// Keeps the best candidate seen so far.
#[derive(Debug, Default)]
pub(crate) struct Incumbent {
    best: Option<Candidate>,
}

impl Incumbent {
    pub fn offer(&mut self, candidate: Candidate) {
        let better = match &self.best {
            None => true,
            Some(current) => candidate.key() < current.key(),
        };
        if better {
            self.best = Some(candidate);
        }
    }

    pub fn best(&self) -> Option<&Candidate> {
        self.best.as_ref()
    }

    pub fn best_size(&self) -> Option<usize> {
        self.best.as_ref().map(Candidate::size)
    }

    pub fn into_outcome(self, scale: &FairnessScale, limits: &SearchLimits) -> SolveOutcome {
        let stats = limits.stats();
        let report = self.best.as_ref().map(|c| scale.report(&c.counts));
        let status = match (limits.exhausted(), &self.best) {
            (Some(hit), _) => hit,
            (None, Some(_)) => Status::OptimumFound,
            (None, None) => Status::Infeasible,
        };
        SolveOutcome {
            status,
            solution: self.best.map(|c| c.set),
            report,
            stats,
        }
    }
}

pub(crate) fn check_mode(cfg: &SolveConfig, expected: impl Fn(&Mode) -> bool) -> Result<(), SolveError> {
    if expected(&cfg.mode) {
        Ok(())
    } else {
        Err(SolveError::WrongMode(cfg.mode))
    }
}
