//! `P3` branching for classic (fairness-free) cluster editing.
//!
//! For the induced path `u-v-w` picked by [`ColoredGraph::find_p3`] the
//! search branches on deleting `{u,v}`, deleting `{v,w}`, or inserting
//! `{u,w}`. A pair decided in one branch is marked and never touched again
//! in its later siblings, so the leaves below a node are disjoint and no
//! set is produced twice.

use std::ops::ControlFlow;

use super::{check_mode, Mode, SearchLimits, SolveConfig, SolveError, SolveOutcome, Status};
use crate::fairness::{EditCounts, FairnessScale};
use crate::graph::{ColoredGraph, ModificationSet, Pair};

struct Brancher {
    work: ColoredGraph,
    marked: Vec<bool>,
    current: Vec<Pair>,
    n: usize,
}

impl Brancher {
    fn new(g: &ColoredGraph) -> Self {
        let n = g.n();
        Brancher {
            work: g.clone(),
            marked: vec![false; n * n],
            current: Vec::new(),
            n,
        }
    }

    #[inline]
    fn marked(&self, p: Pair) -> bool {
        self.marked[p.lo() * self.n + p.hi()]
    }

    #[inline]
    fn set_mark(&mut self, p: Pair, value: bool) {
        self.marked[p.lo() * self.n + p.hi()] = value;
    }

    /// Visits every leaf set of size at most `budget` below the current node.
    fn explore<F>(&mut self, budget: usize, limits: &mut SearchLimits, leaf: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&ColoredGraph, &[Pair]) -> ControlFlow<()>,
    {
        if !limits.tick() {
            return ControlFlow::Break(());
        }
        let Some((u, v, w)) = self.work.find_p3() else {
            return leaf(&self.work, &self.current);
        };
        if budget == 0 {
            return ControlFlow::Continue(());
        }
        let mut newly_marked = Vec::with_capacity(3);
        let mut flow = ControlFlow::Continue(());
        for p in [Pair::new(u, v), Pair::new(v, w), Pair::new(u, w)] {
            if self.marked(p) {
                continue;
            }
            self.set_mark(p, true);
            newly_marked.push(p);
            self.work.toggle(p);
            self.current.push(p);
            flow = self.explore(budget - 1, limits, leaf);
            self.current.pop();
            self.work.toggle(p);
            if flow.is_break() {
                break;
            }
        }
        for p in newly_marked {
            self.set_mark(p, false);
        }
        flow
    }
}

/// Whether no proper subset of `set` also turns `g` into a cluster graph.
/// Walks all proper subsets in Gray-code order.
pub(crate) fn is_inclusion_minimal(g: &ColoredGraph, set: &[Pair]) -> bool {
    let s = set.len();
    if s == 0 {
        return true;
    }
    let mut work = g.clone();
    // Gray code from 0 visits every mask once; the all-ones mask is skipped.
    let full = (1u64 << s) - 1;
    let mut mask = 0u64;
    if work.is_cluster_graph() {
        return false;
    }
    for i in 1u64..(1u64 << s) {
        let bit = i.trailing_zeros() as usize;
        work.toggle(set[bit]);
        mask ^= 1 << bit;
        if mask != full && work.is_cluster_graph() {
            return false;
        }
    }
    true
}

/// Calls `visit` for every inclusion-minimal set of at most `k` pairs that
/// turns `g` into a cluster graph, each exactly once, in branching order.
pub fn for_each_minimal_classic<F>(
    g: &ColoredGraph,
    k: usize,
    limits: &mut SearchLimits,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&ModificationSet) -> ControlFlow<()>,
{
    let mut brancher = Brancher::new(g);
    brancher.explore(k, limits, &mut |_, pairs| {
        if is_inclusion_minimal(g, pairs) {
            let set: ModificationSet = pairs.iter().copied().collect();
            visit(&set)
        } else {
            ControlFlow::Continue(())
        }
    })
}

/// All inclusion-minimal cluster modification sets of size at most `k`.
pub fn enumerate_minimal_classic(g: &ColoredGraph, k: usize) -> Vec<ModificationSet> {
    let mut out = Vec::new();
    let _ = for_each_minimal_classic(g, k, &mut SearchLimits::unlimited(), |s| {
        out.push(s.clone());
        ControlFlow::Continue(())
    });
    out
}

/// First branching leaf of size at most `k`, if any.
pub(crate) fn find_classic_solution(g: &ColoredGraph, k: usize, limits: &mut SearchLimits) -> Option<ModificationSet> {
    let mut found = None;
    let _ = Brancher::new(g).explore(k, limits, &mut |_, pairs| {
        found = Some(pairs.iter().copied().collect());
        ControlFlow::Break(())
    });
    found
}

/// Minimum classic cluster editing by iterative deepening on the budget.
///
/// The returned report is present only when both color classes are
/// non-empty.
pub fn solve_classic(g: &ColoredGraph, cfg: &SolveConfig) -> Result<SolveOutcome, SolveError> {
    check_mode(cfg, |m| matches!(m, Mode::ClassicUnfair))?;
    let mut limits = SearchLimits::from_config(cfg);
    let mut solution = None;
    for budget in 0..=cfg.k {
        solution = find_classic_solution(g, budget, &mut limits);
        if solution.is_some() || limits.exhausted().is_some() {
            break;
        }
    }
    let status = match (&solution, limits.exhausted()) {
        (Some(_), _) => Status::OptimumFound,
        (None, Some(hit)) => hit,
        (None, None) => Status::Infeasible,
    };
    let report = match (&solution, FairnessScale::of(g)) {
        (Some(s), Ok(scale)) => Some(scale.report(&EditCounts::of(g, s.iter().copied()))),
        _ => None,
    };
    Ok(SolveOutcome {
        status,
        solution,
        report,
        stats: limits.stats(),
    })
}

/// Minimum classic solution size, searching budgets up to `k_cap`.
pub fn classic_optimum(g: &ColoredGraph, k_cap: usize) -> Option<usize> {
    let cfg = SolveConfig::new(Mode::ClassicUnfair, k_cap, crate::rational::Rational::ZERO);
    solve_classic(g, &cfg).ok().and_then(|o| o.size())
}
