//! Exhaustive scan over all pair subsets, used as a reference oracle.

use super::{check_mode, Candidate, Incumbent, Mode, SearchLimits, SolveConfig, SolveError, SolveOutcome};
use crate::fairness::{EditCounts, FairnessScale};
use crate::graph::{ColoredGraph, ModificationSet, Pair};

/// Pair subsets beyond this many vertex pairs need `allow_large`.
pub const PAIR_GUARD: usize = 36;

/// Index subsets of `0..len` of one fixed size, in lexicographic order.
#[derive(Debug, Clone)]
pub(crate) struct Combinations {
    idx: Vec<usize>,
    len: usize,
    started: bool,
}

impl Combinations {
    pub fn new(len: usize, size: usize) -> Self {
        Combinations {
            idx: (0..size).collect(),
            len,
            started: false,
        }
    }

    pub fn current(&self) -> &[usize] {
        &self.idx
    }

    /// Advances to the next subset. Returns the first position whose entry
    /// changed (0 on the first call), or `None` when exhausted.
    pub fn advance(&mut self) -> Option<usize> {
        let k = self.idx.len();
        if !self.started {
            self.started = true;
            return (k <= self.len).then_some(0);
        }
        let mut p = k;
        while p > 0 {
            p -= 1;
            if self.idx[p] < self.len - (k - p) {
                self.idx[p] += 1;
                for q in p + 1..k {
                    self.idx[q] = self.idx[q - 1] + 1;
                }
                return Some(p);
            }
        }
        None
    }
}

pub fn solve_bruteforce(g: &ColoredGraph, cfg: &SolveConfig) -> Result<SolveOutcome, SolveError> {
    check_mode(cfg, |m| matches!(m, Mode::BruteForce))?;
    let scale = FairnessScale::of(g)?;
    let pairs: Vec<Pair> = g.all_pairs().collect();
    if pairs.len() > PAIR_GUARD && !cfg.allow_large {
        return Err(SolveError::TooLarge { pairs: pairs.len() });
    }
    let mut limits = SearchLimits::from_config(cfg);
    let mut incumbent = Incumbent::default();
    'sizes: for size in 0..=cfg.k.min(pairs.len()) {
        let mut work = g.clone();
        let mut counts = EditCounts::default();
        let mut combos = Combinations::new(pairs.len(), size);
        let mut applied: Vec<usize> = Vec::new();
        while let Some(from) = combos.advance() {
            if !limits.tick() {
                break 'sizes;
            }
            for &i in &applied[from.min(applied.len())..] {
                work.toggle(pairs[i]);
                counts.remove(g, pairs[i]);
            }
            applied.truncate(from);
            for &i in &combos.current()[from..] {
                work.toggle(pairs[i]);
                counts.add(g, pairs[i]);
                applied.push(i);
            }
            if scale.within(&counts, cfg.delta) && work.is_cluster_graph() {
                let set: ModificationSet = applied.iter().map(|&i| pairs[i]).collect();
                incumbent.offer(Candidate::new(&scale, set, counts));
                break 'sizes;
            }
        }
    }
    Ok(incumbent.into_outcome(&scale, &limits))
}
