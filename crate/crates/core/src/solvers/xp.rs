//! Search over the mono-colored part, finished by the bicolored matching.
//!
//! For every set `M` of at most `mu` mono-colored pairs after which both
//! color classes induce cluster graphs, the bicolored remainder is solved by
//! matching. The diff of `M` plus `b` bicolored pairs is not monotone in
//! `b` (bicolored pairs can offset an imbalance of `M`), so the remainder is
//! not simply the minimum matching: sizes `b` are scanned upward from the
//! minimum and the first fair one that some matching attains is taken.

use super::bicolored::BicoloredRemainder;
use super::brute::Combinations;
use super::{check_mode, Candidate, Incumbent, Mode, SearchLimits, SolveConfig, SolveError, SolveOutcome};
use crate::fairness::{EditCounts, FairnessScale};
use crate::graph::{ColoredGraph, ModificationSet, Pair};

pub fn solve_xp_mono(g: &ColoredGraph, cfg: &SolveConfig) -> Result<SolveOutcome, SolveError> {
    check_mode(cfg, |m| matches!(m, Mode::XpMono { .. }))?;
    let Mode::XpMono { mu } = cfg.mode else { unreachable!() };
    let scale = FairnessScale::of(g)?;
    let mono: Vec<Pair> = g.all_pairs().filter(|p| g.color(p.lo()) == g.color(p.hi())).collect();
    let mut limits = SearchLimits::from_config(cfg);
    let mut incumbent = Incumbent::default();

    'sizes: for size in 0..=mu.min(cfg.k).min(mono.len()) {
        if incumbent.best_size().is_some_and(|best| size > best) {
            break;
        }
        let mut combos = Combinations::new(mono.len(), size);
        while combos.advance().is_some() {
            if !limits.tick() {
                break 'sizes;
            }
            let m: ModificationSet = combos.current().iter().map(|&i| mono[i]).collect();
            let g_m = g.apply(&m).expect("pairs come from the graph");
            let Some(rem) = BicoloredRemainder::of(&g_m) else {
                continue;
            };
            let cap = incumbent.best_size().map_or(cfg.k, |b| b.min(cfg.k));
            let b_min = rem.min_size();
            let base = EditCounts::of(g, m.iter().copied());
            for b in b_min..=cap.saturating_sub(size) {
                if size + b > cap {
                    break;
                }
                let counts = EditCounts {
                    bicolored: b as u64,
                    ..base
                };
                if !scale.within(&counts, cfg.delta) {
                    continue;
                }
                let rest = if b == b_min {
                    Some(rem.optimal_set(&g_m))
                } else {
                    rem.set_of_size(&g_m, b)
                };
                if let Some(rest) = rest {
                    incumbent.offer(Candidate::new(&scale, m.union(&rest), counts));
                    break;
                }
            }
        }
    }
    Ok(incumbent.into_outcome(&scale, &limits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::*;
    use crate::rational::Rational;
    use crate::solvers::{solve_bicolored, solve_bruteforce, Status};

    fn xp(mu: usize, k: usize, delta: Rational) -> SolveConfig {
        SolveConfig::new(Mode::XpMono { mu }, k, delta)
    }

    #[test]
    fn blue_path_with_red_isolate() {
        let g = ColoredGraph::from_edges(vec![Blue, Blue, Blue, Red], [(0, 1), (1, 2)]).unwrap();
        let out = solve_xp_mono(&g, &xp(1, 1, Rational::from_integer(2))).unwrap();
        assert_eq!(out.size(), Some(1));
        assert_eq!(out.report.unwrap().mono_blue, 1);
    }

    #[test]
    fn fair_remainder_need_not_be_the_smallest_matching() {
        // Blue path 0-1-2 and red isolate 3, delta = 0. A blue deletion
        // alone is unfair; a bicolored insertion such as {0, 3} evens it out
        // even though the cheapest bicolored remainder is empty.
        let g = ColoredGraph::from_edges(vec![Blue, Blue, Blue, Red], [(0, 1), (1, 2)]).unwrap();
        let out = solve_xp_mono(&g, &xp(2, 2, Rational::ZERO)).unwrap();
        let brute = solve_bruteforce(&g, &SolveConfig::brute(2, Rational::ZERO)).unwrap();
        assert_eq!(out.size(), brute.size());
        assert_eq!(out.size(), Some(2));
        assert_eq!(out.report.unwrap().diff, Rational::ZERO);
    }

    #[test]
    fn without_mono_edits_matches_bicolored() {
        let g = ColoredGraph::from_edges(vec![Red, Red, Blue, Blue], [(0, 1), (0, 2), (1, 3)]).unwrap();
        let a = solve_xp_mono(&g, &xp(0, 3, Rational::ONE)).unwrap();
        let b = solve_bicolored(&g, &SolveConfig::new(Mode::BicoloredOnly, 3, Rational::ONE)).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!(a.solution, b.solution);
    }

    #[test]
    fn two_paths_with_zero_delta() {
        let g =
            ColoredGraph::from_edges(vec![Blue, Blue, Blue, Red, Red, Red], [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let out = solve_xp_mono(&g, &xp(2, 2, Rational::ZERO)).unwrap();
        assert_eq!(out.status, Status::OptimumFound);
        assert_eq!(out.size(), Some(2));
    }
}
