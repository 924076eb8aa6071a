//! Fixed-parameter algorithm in the number `k` of modifications.
//!
//! Every fair solution contains an inclusion-minimal classic solution `S`.
//! So the search enumerates those sets; fair ones are candidates as they
//! stand, and unfair ones are handed to the extension search on the
//! kernelized cluster graph `G Δ S`, with fairness always measured against
//! the color-class sizes of the input graph.

use std::ops::ControlFlow;

use super::classic::for_each_minimal_classic;
use super::extension::{best_fair_extension, ExtensionProblem};
use super::reduce::reduce_cluster_instance;
use super::{check_mode, Candidate, Incumbent, Mode, SearchLimits, SolveConfig, SolveError, SolveOutcome};
use crate::fairness::{EditCounts, FairnessScale};
use crate::graph::ColoredGraph;
use crate::rational::Rational;

pub fn solve_fair_fpt(g: &ColoredGraph, cfg: &SolveConfig) -> Result<SolveOutcome, SolveError> {
    check_mode(cfg, |m| matches!(m, Mode::FairFpt))?;
    let scale = FairnessScale::of(g)?;
    let mut limits = SearchLimits::from_config(cfg);
    let incumbent = search(g, &scale, cfg.k, cfg.delta, &mut limits);
    Ok(incumbent.into_outcome(&scale, &limits))
}

fn search(g: &ColoredGraph, scale: &FairnessScale, k: usize, delta: Rational, limits: &mut SearchLimits) -> Incumbent {
    let mut incumbent = Incumbent::default();
    let mut minimal_sets = Vec::new();
    let _ = for_each_minimal_classic(g, k, limits, |s| {
        minimal_sets.push(s.clone());
        ControlFlow::Continue(())
    });
    // Smaller classic sets first, so the incumbent tightens early.
    minimal_sets.sort_by_key(|s| s.len());

    for s in &minimal_sets {
        if limits.exhausted().is_some() {
            break;
        }
        let cap = incumbent.best_size().map_or(k, |b| b.min(k));
        if s.len() > cap {
            break;
        }
        let counts = EditCounts::of(g, s.iter().copied());
        if scale.within(&counts, delta) {
            incumbent.offer(Candidate::new(scale, s.clone(), counts));
            continue;
        }
        if s.len() == cap {
            continue;
        }
        let g_prime = g.apply(s).expect("enumerated sets stay in range");
        let reduced = reduce_cluster_instance(&g_prime, s, k).expect("branch leaves are cluster graphs");
        limits.note_reduction(reduced.removed.total() as u64);
        let problem = ExtensionProblem {
            reduced: &reduced,
            base: s,
            base_counts: counts,
            scale: *scale,
            delta,
        };
        if let Some(found) = best_fair_extension(problem, cap - s.len(), limits) {
            incumbent.offer(found);
        }
    }
    incumbent
}

/// Smallest `k <= k_cap` admitting a fair solution, by increasing `k`.
pub fn min_fair_k(g: &ColoredGraph, delta: Rational, k_cap: usize) -> Option<usize> {
    let outcome = min_fair_solution(g, delta, k_cap, &mut SearchLimits::unlimited()).ok()?;
    outcome.size()
}

/// Increasing-`k` search sharing one set of limits across the rounds. On
/// exhaustion the outcome carries the limit status and any fair solution
/// seen in the interrupted round.
pub fn min_fair_solution(
    g: &ColoredGraph,
    delta: Rational,
    k_cap: usize,
    limits: &mut SearchLimits,
) -> Result<SolveOutcome, SolveError> {
    let scale = FairnessScale::of(g)?;
    let mut last = Incumbent::default();
    for k in 0..=k_cap {
        last = search(g, &scale, k, delta, limits);
        if last.best().is_some() || limits.exhausted().is_some() {
            break;
        }
    }
    Ok(last.into_outcome(&scale, limits))
}
