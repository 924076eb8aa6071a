//! Fair completion instances from edge-addition instances, and an exact
//! completion solver for small graphs.

use num_traits::ToPrimitive;

use super::cta::{CtaError, CtaInstance};
use super::{FairInstance, ReductionError, Variant};
use crate::fairness::{EditCounts, FairnessReport, FairnessScale};
use crate::graph::{Color, ColoredGraph, ModificationSet, Pair};
use crate::rational::Rational;

/// Largest generated graph, counting both copies.
pub const MAX_GENERATED_VERTICES: usize = 4096;

/// Blue copy of the edge-addition graph on `0..V` and a connected red graph
/// on `V..2V` with `C(V, 2) - k - f` edges, `f = floor(V delta / 2)`.
/// Budget `2k + f`.
///
/// The red graph is the path `V, V+1, .., 2V-1` followed by the
/// lexicographically smallest missing pairs.
pub fn gen_fcc_from_cta(cta: &CtaInstance, delta: Rational) -> Result<FairInstance, ReductionError> {
    if delta.is_negative() {
        return Err(ReductionError::NegativeDelta);
    }
    let missing = cta.missing_edges();
    if cta.k > missing {
        return Err(ReductionError::BudgetTooLarge {
            k: cta.k.to_string(),
            missing: missing.to_string(),
        });
    }
    let total = cta.vertex_count();
    let too_large = || ReductionError::TooLarge {
        vertices: (&total * 2u32).to_string(),
    };
    let v = total
        .to_usize()
        .filter(|&v| 2 * v <= MAX_GENERATED_VERTICES)
        .ok_or_else(too_large)?;
    let blue = cta.to_graph(v).map_err(|_| too_large())?;

    let k = cta.k.to_i128().expect("k is below C(V, 2)");
    let f = (v as i128 * delta.numer() as i128).div_euclid(2 * delta.denom() as i128);
    let all = (v * v.saturating_sub(1) / 2) as i128;
    let red_edges = all - k - f;
    if red_edges < v as i128 {
        return Err(ReductionError::RedGraphTooSparse {
            edges: red_edges,
            vertices: v,
        });
    }

    let mut colors = vec![Color::Blue; v];
    colors.extend(std::iter::repeat_n(Color::Red, v));
    let mut edges: Vec<(usize, usize)> = blue.edges().map(|p| (p.lo(), p.hi())).collect();
    let mut red = vec![vec![false; v]; v];
    let mut placed = 0i128;
    for i in 1..v {
        red[i - 1][i] = true;
        placed += 1;
    }
    'fill: for (i, row) in red.iter_mut().enumerate() {
        for cell in &mut row[i + 1..] {
            if placed == red_edges {
                break 'fill;
            }
            if !*cell {
                *cell = true;
                placed += 1;
            }
        }
    }
    for (i, row) in red.iter().enumerate() {
        edges.extend((i + 1..v).filter(|&j| row[j]).map(|j| (v + i, v + j)));
    }
    let graph = ColoredGraph::from_edges(colors, edges).expect("construction is simple");
    let budget = usize::try_from(2 * k + f).expect("bounded by the vertex cap");
    Ok(FairInstance {
        graph,
        k: budget,
        delta,
        variant: Variant::CompletionMonoOnly,
    })
}

/// Largest number of connected components [`completion_by_partition`]
/// accepts.
pub const COMPONENT_CAP: usize = 12;

/// Smallest fair completion of `g` with at most `k` inserted edges, or
/// `None`. With `mono_only`, solutions inserting a bicolored pair are
/// skipped. Ties go to the first partition of the components in
/// restricted growth order.
///
/// Only insertions are allowed, so every final cluster is a union of whole
/// connected components; the search runs over partitions of components.
pub fn completion_by_partition(
    g: &ColoredGraph,
    k: usize,
    delta: Rational,
    mono_only: bool,
) -> Result<Option<(ModificationSet, FairnessReport)>, CtaError> {
    let scale = FairnessScale::of(g)?;
    let comps = g.components();
    if comps.len() > COMPONENT_CAP {
        return Err(CtaError::TooManyCliques {
            cliques: comps.len(),
            cap: COMPONENT_CAP,
        });
    }
    // Per component: red and blue vertex counts and edges by kind.
    let stats: Vec<[u64; 5]> = comps
        .iter()
        .map(|c| {
            let reds = c.iter().filter(|&&v| g.color(v) == Color::Red).count() as u64;
            let mut s = [reds, c.len() as u64 - reds, 0, 0, 0];
            for &u in c {
                for w in g.neighbors(u).filter(|&w| w > u) {
                    let slot = match (g.color(u), g.color(w)) {
                        (Color::Red, Color::Red) => 2,
                        (Color::Blue, Color::Blue) => 3,
                        _ => 4,
                    };
                    s[slot] += 1;
                }
            }
            s
        })
        .collect();

    struct Search<'a> {
        stats: &'a [[u64; 5]],
        scale: FairnessScale,
        k: u64,
        delta: Rational,
        mono_only: bool,
        assign: Vec<usize>,
        blocks: Vec<[u64; 5]>,
        best: Option<(u64, Vec<usize>, EditCounts)>,
    }

    fn inserted(b: &[u64; 5]) -> EditCounts {
        let pairs = |x: u64| x * x.saturating_sub(1) / 2;
        EditCounts {
            mono_red: pairs(b[0]) - b[2],
            mono_blue: pairs(b[1]) - b[3],
            bicolored: b[0] * b[1] - b[4],
        }
    }

    impl Search<'_> {
        fn go(&mut self, i: usize, size: u64) {
            let cap = self.best.as_ref().map_or(self.k, |b| b.0.saturating_sub(1).min(self.k));
            if size > cap || (self.best.is_some() && self.best.as_ref().unwrap().0 == 0) {
                return;
            }
            if i == self.stats.len() {
                let counts = self
                    .blocks
                    .iter()
                    .map(inserted)
                    .fold(EditCounts::default(), EditCounts::plus);
                if (self.mono_only && counts.bicolored > 0) || !self.scale.within(&counts, self.delta) {
                    return;
                }
                self.best = Some((size, self.assign.clone(), counts));
                return;
            }
            let s = self.stats[i];
            for b in 0..=self.blocks.len() {
                let fresh = b == self.blocks.len();
                if fresh {
                    self.blocks.push([0; 5]);
                }
                let before = inserted(&self.blocks[b]).size();
                for (x, y) in self.blocks[b].iter_mut().zip(s) {
                    *x += y;
                }
                let after = inserted(&self.blocks[b]).size();
                self.assign.push(b);
                self.go(i + 1, size - before + after);
                self.assign.pop();
                if fresh {
                    self.blocks.pop();
                } else {
                    for (x, y) in self.blocks[b].iter_mut().zip(s) {
                        *x -= y;
                    }
                }
            }
        }
    }

    let mut search = Search {
        stats: &stats,
        scale,
        k: k as u64,
        delta,
        mono_only,
        assign: Vec::new(),
        blocks: Vec::new(),
        best: None,
    };
    search.go(0, 0);
    let Some((_, assign, counts)) = search.best else {
        return Ok(None);
    };

    let mut members: Vec<Vec<usize>> = Vec::new();
    for (comp, &b) in comps.iter().zip(&assign) {
        if b == members.len() {
            members.push(Vec::new());
        }
        members[b].extend(comp);
    }
    let mut set = ModificationSet::new();
    for block in &mut members {
        block.sort_unstable();
        for (i, &u) in block.iter().enumerate() {
            for &w in &block[i + 1..] {
                if !g.has_edge(u, w) {
                    set.insert(Pair::new(u, w));
                }
            }
        }
    }
    Ok(Some((set, scale.report(&counts))))
}

/// Whether the generated completion instance is solvable: some fair
/// completion inserting only mono-colored pairs, at most `k` of them.
pub fn completion_instance_solvable(inst: &FairInstance) -> Result<bool, CtaError> {
    if inst.variant != Variant::CompletionMonoOnly {
        return Err(CtaError::Params(format!(
            "expected a completion instance, got {}",
            inst.variant
        )));
    }
    Ok(completion_by_partition(&inst.graph, inst.k, inst.delta, true)?.is_some())
}

impl From<ReductionError> for CtaError {
    fn from(e: ReductionError) -> Self {
        CtaError::Params(e.to_string())
    }
}
