//! Minimum fair extension of a branch state.
//!
//! Given the cluster graph `G' = G Δ S` (possibly kernelized) an extension
//! is a set `S'` of pairs disjoint from `S` such that `G' Δ S'` is again a
//! cluster graph. Since the result is a cluster graph, it is determined by
//! a partition of the vertices, and `S'` is exactly the set of pairs on which
//! that partition disagrees with `G'`. The search therefore enumerates
//! vertex partitions in canonical order (blocks numbered by first member),
//! accumulating the modified pairs incrementally and cutting off as soon as
//! the budget is exceeded or a pair of `S` would be toggled again. This
//! visits every admissible extension exactly once.

use super::reduce::ReducedInstance;
use super::{Candidate, SearchLimits};
use crate::fairness::{EditCounts, FairnessScale};
use crate::graph::{ColoredGraph, ModificationSet, Pair};
use crate::rational::Rational;

/// Inputs of one extension search.
#[derive(Debug, Clone, Copy)]
pub struct ExtensionProblem<'a> {
    pub reduced: &'a ReducedInstance,
    /// The branch set `S`, in the vertex ids of the unreduced graph.
    pub base: &'a ModificationSet,
    /// Edit counts of `S` measured on the unreduced graph.
    pub base_counts: EditCounts,
    /// Color-class sizes of the original input graph.
    pub scale: FairnessScale,
    pub delta: Rational,
}

struct PartitionSearch<'a> {
    problem: ExtensionProblem<'a>,
    g: &'a ColoredGraph,
    w: usize,
    forbidden: Vec<bool>,
    block_of: Vec<usize>,
    blocks: usize,
    mods: Vec<Pair>,
    counts: EditCounts,
    cap: usize,
    best: Option<Candidate>,
    scratch: Vec<Vec<Pair>>,
}

impl<'a> PartitionSearch<'a> {
    fn new(problem: ExtensionProblem<'a>, cap: usize) -> Self {
        let g = &problem.reduced.graph;
        let w = g.n();
        let original = &problem.reduced.original;
        let mut forbidden = vec![false; w * w];
        let mut index = vec![usize::MAX; original.iter().max().map_or(0, |&m| m + 1)];
        for (i, &orig) in original.iter().enumerate() {
            index[orig] = i;
        }
        for p in problem.base {
            let (a, b) = (index.get(p.lo()), index.get(p.hi()));
            if let (Some(&a), Some(&b)) = (a, b) {
                if a != usize::MAX && b != usize::MAX {
                    forbidden[a * w + b] = true;
                    forbidden[b * w + a] = true;
                }
            }
        }
        PartitionSearch {
            problem,
            g,
            w,
            forbidden,
            block_of: vec![usize::MAX; w],
            blocks: 0,
            mods: Vec::new(),
            counts: problem.base_counts,
            cap,
            best: None,
            scratch: vec![Vec::new(); w + 1],
        }
    }

    /// Pairs that placing `v` into `block` would modify, or `None` if that
    /// touches a pair of `S` or exceeds the budget.
    fn placement_cost(&self, v: usize, block: usize, out: &mut Vec<Pair>) -> bool {
        out.clear();
        let room = self.cap - self.mods.len();
        for u in 0..v {
            let same = self.block_of[u] == block;
            if same != self.g.has_edge(u, v) {
                if self.forbidden[u * self.w + v] || out.len() == room {
                    return false;
                }
                out.push(Pair::new(u, v));
            }
        }
        true
    }

    fn dfs(&mut self, v: usize, limits: &mut SearchLimits) -> bool {
        if !limits.tick() {
            return false;
        }
        if v == self.w {
            self.leaf();
            return true;
        }
        let mut placed = std::mem::take(&mut self.scratch[v]);
        let options = self.blocks + 1;
        for block in 0..options {
            if !self.placement_cost(v, block, &mut placed) {
                continue;
            }
            let opened = block == self.blocks;
            if opened {
                self.blocks += 1;
            }
            self.block_of[v] = block;
            for &p in &placed {
                self.counts.add(self.g, p);
                self.mods.push(p);
            }
            let keep_going = self.dfs(v + 1, limits);
            for &p in &placed {
                self.counts.remove(self.g, p);
                self.mods.pop();
            }
            self.block_of[v] = usize::MAX;
            if opened {
                self.blocks -= 1;
            }
            if !keep_going {
                self.scratch[v] = placed;
                return false;
            }
        }
        self.scratch[v] = placed;
        true
    }

    fn leaf(&mut self) {
        let p = &self.problem;
        if !p.scale.within(&self.counts, p.delta) {
            return;
        }
        let size = p.base.len() + self.mods.len();
        let diff = p.scale.scaled_diff(&self.counts);
        if let Some(best) = &self.best {
            if !best.may_improve(size, diff) {
                return;
            }
        }
        let original = &p.reduced.original;
        let mut total = p.base.clone();
        for m in &self.mods {
            total.insert(Pair::new(original[m.lo()], original[m.hi()]));
        }
        let candidate = Candidate::new(&p.scale, total, self.counts);
        let better = match &self.best {
            None => true,
            Some(best) => {
                (candidate.size(), diff, &candidate.set) < (best.size(), p.scale.scaled_diff(&best.counts), &best.set)
            }
        };
        if better {
            self.cap = self.mods.len();
            self.best = Some(candidate);
        }
    }
}

/// Best fair `S ∪ S'` with `|S'| <= budget`, ordered by size, then diff,
/// then pair list. Returns `None` when no fair extension exists or the
/// limits ran out before any was found.
pub(crate) fn best_fair_extension(
    problem: ExtensionProblem<'_>,
    budget: usize,
    limits: &mut SearchLimits,
) -> Option<Candidate> {
    let mut search = PartitionSearch::new(problem, budget);
    search.dfs(0, limits);
    search.best
}

/// Size of the smallest fair extension within `budget`, if any.
pub fn min_fair_extension_size(problem: ExtensionProblem<'_>, budget: usize) -> Option<usize> {
    best_fair_extension(problem, budget, &mut SearchLimits::unlimited()).map(|c| c.size() - problem.base.len())
}
