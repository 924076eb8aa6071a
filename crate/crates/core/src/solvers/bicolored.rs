//! Cluster editing when only bicolored pairs may be modified.
//!
//! Mono-colored pairs are frozen, so `G[R]` and `G[B]` must already be
//! cluster graphs, and every final cluster holds at most one red cluster
//! `R_i` and at most one blue cluster `B_j`. The solutions are therefore the
//! matchings between red and blue clusters: a matched pair is completed to
//! a clique, and every other bicolored edge is deleted. Matching `R_i` with
//! `B_j` saves `w_ij = 2|E_ij| - |R_i||B_j|` modifications against deleting
//! all bicolored edges.

use super::matching::{matching_with_weight, max_weight_bipartite_matching};
use super::{check_mode, Candidate, Incumbent, Mode, SearchLimits, SolveConfig, SolveError, SolveOutcome};
use crate::fairness::{EditCounts, FairnessScale};
use crate::graph::{Color, ColoredGraph, ModificationSet, Pair};

/// Red and blue clusters of a graph whose mono-colored parts are cluster
/// graphs, with the matching weights between them.
#[derive(Debug, Clone)]
pub struct BicoloredRemainder {
    pub red_clusters: Vec<Vec<usize>>,
    pub blue_clusters: Vec<Vec<usize>>,
    /// `weights[i][j] = 2|E_ij| - |R_i||B_j|`.
    pub weights: Vec<Vec<i64>>,
    /// Number of bicolored edges.
    pub bicolored_edges: usize,
}

impl BicoloredRemainder {
    /// `None` if `G[R]` or `G[B]` is not a cluster graph.
    pub fn of(g: &ColoredGraph) -> Option<Self> {
        if !g.is_cluster_on(Color::Red) || !g.is_cluster_on(Color::Blue) {
            return None;
        }
        let red_clusters = clusters_of(g, Color::Red);
        let blue_clusters = clusters_of(g, Color::Blue);
        let mut bicolored_edges = 0;
        let weights = red_clusters
            .iter()
            .map(|ri| {
                blue_clusters
                    .iter()
                    .map(|bj| {
                        let e = ri
                            .iter()
                            .map(|&r| bj.iter().filter(|&&b| g.has_edge(r, b)).count())
                            .sum::<usize>();
                        bicolored_edges += e;
                        2 * e as i64 - (ri.len() * bj.len()) as i64
                    })
                    .collect()
            })
            .collect();
        Some(BicoloredRemainder {
            red_clusters,
            blue_clusters,
            weights,
            bicolored_edges,
        })
    }

    /// Size of the solution belonging to a matching of total weight `w`.
    pub fn size_for_weight(&self, w: i64) -> usize {
        (self.bicolored_edges as i64 - w) as usize
    }

    /// Smallest solution size over all matchings.
    pub fn min_size(&self) -> usize {
        let m = max_weight_bipartite_matching(&self.weights);
        self.size_for_weight(super::matching::matching_weight(&self.weights, &m))
    }

    /// The modification set induced by `matching`.
    pub fn modification_set(&self, g: &ColoredGraph, matching: &[(usize, usize)]) -> ModificationSet {
        let mut matched = vec![None; self.red_clusters.len()];
        for &(i, j) in matching {
            matched[i] = Some(j);
        }
        let mut s = ModificationSet::new();
        for (i, ri) in self.red_clusters.iter().enumerate() {
            for (j, bj) in self.blue_clusters.iter().enumerate() {
                let merge = matched[i] == Some(j);
                for &r in ri {
                    for &b in bj {
                        if g.has_edge(r, b) != merge {
                            s.insert(Pair::new(r.min(b), r.max(b)));
                        }
                    }
                }
            }
        }
        s
    }

    /// Solution of the lexicographically first maximum-weight matching.
    pub fn optimal_set(&self, g: &ColoredGraph) -> ModificationSet {
        self.modification_set(g, &max_weight_bipartite_matching(&self.weights))
    }

    /// Some solution with exactly `size` modifications, if one exists.
    pub fn set_of_size(&self, g: &ColoredGraph, size: usize) -> Option<ModificationSet> {
        let target = self.bicolored_edges as i64 - size as i64;
        matching_with_weight(&self.weights, target).map(|m| self.modification_set(g, &m))
    }
}

/// Connected components of `G[color]`, by ascending smallest member.
fn clusters_of(g: &ColoredGraph, color: Color) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for v in g.vertices_of(color) {
        if seen[v] {
            continue;
        }
        let mut cluster: Vec<usize> = std::iter::once(v)
            .chain(g.neighbors(v).filter(|&u| g.color(u) == color))
            .collect();
        cluster.sort_unstable();
        cluster.iter().for_each(|&u| seen[u] = true);
        out.push(cluster);
    }
    out
}

pub fn solve_bicolored(g: &ColoredGraph, cfg: &SolveConfig) -> Result<SolveOutcome, SolveError> {
    check_mode(cfg, |m| matches!(m, Mode::BicoloredOnly))?;
    let scale = FairnessScale::of(g)?;
    let limits = SearchLimits::from_config(cfg);
    let mut incumbent = Incumbent::default();
    if let Some(rem) = BicoloredRemainder::of(g) {
        let s = rem.optimal_set(g);
        let counts = EditCounts {
            bicolored: s.len() as u64,
            ..EditCounts::default()
        };
        if s.len() <= cfg.k && scale.within(&counts, cfg.delta) {
            incumbent.offer(Candidate::new(&scale, s, counts));
        }
    }
    Ok(incumbent.into_outcome(&scale, &limits))
}
