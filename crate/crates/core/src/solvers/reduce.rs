//! Kernelization of a branch state before the fair extension search.
//!
//! A branch state is a cluster graph `G' = G Δ S` together with the set `S`
//! that produced it. A vertex is touched if it is an endpoint of a pair in
//! `S`, and a clique is touched if it contains a touched vertex. Only
//! untouched cliques are ever removed:
//!
//! 1. an untouched clique with more than `k + 1` vertices,
//! 2. untouched isolated vertices beyond the first `2k` of each color,
//! 3. untouched cliques beyond the first `k` with the same size `s`
//!    (`2 <= s <= k + 1`) and the same number `t` of blue vertices.

use std::collections::BTreeMap;

use crate::graph::{Color, ColoredGraph, GraphError, ModificationSet};

/// Shape of the reduced cluster graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClusterProfile {
    /// Untouched cliques kept, keyed by `(size, blue count)`, with their
    /// multiplicity. Only sizes `2..=k+1` appear.
    pub untouched: BTreeMap<(usize, usize), usize>,
    /// Kept untouched isolated vertices as `(red, blue)`.
    pub isolated: (usize, usize),
    /// Touched cliques in original vertex ids.
    pub touched: Vec<Vec<usize>>,
}

/// Vertices removed by each rule.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RuleTally {
    pub large_cliques: usize,
    pub isolated: usize,
    pub duplicate_cliques: usize,
}

impl RuleTally {
    pub fn total(&self) -> usize {
        self.large_cliques + self.isolated + self.duplicate_cliques
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    /// Induced subgraph on the kept vertices, relabeled in ascending order
    /// of original id.
    pub graph: ColoredGraph,
    /// `original[i]` is the id in `G'` of reduced vertex `i`.
    pub original: Vec<usize>,
    pub profile: ClusterProfile,
    pub removed: RuleTally,
}

impl ReducedInstance {
    /// The branch state without any reduction applied.
    pub fn identity(g_prime: &ColoredGraph) -> Self {
        ReducedInstance {
            graph: g_prime.clone(),
            original: (0..g_prime.n()).collect(),
            profile: ClusterProfile::default(),
            removed: RuleTally::default(),
        }
    }
}

/// Applies the three rules exhaustively to the cluster graph `g_prime`
/// produced by `s`. Ties within a rule keep the cliques with the smallest
/// vertex ids.
pub fn reduce_cluster_instance(
    g_prime: &ColoredGraph,
    s: &ModificationSet,
    k: usize,
) -> Result<ReducedInstance, GraphError> {
    let cliques = g_prime.cluster_decomposition()?;
    if let Some(max) = s.max_vertex() {
        if max >= g_prime.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: max,
                n: g_prime.n(),
            });
        }
    }
    let mut touched_vertex = vec![false; g_prime.n()];
    for p in s {
        touched_vertex[p.lo()] = true;
        touched_vertex[p.hi()] = true;
    }

    let mut keep = vec![false; g_prime.n()];
    let mut profile = ClusterProfile::default();
    let mut removed = RuleTally::default();
    let mut isolated_seen = (0usize, 0usize);
    let mut class_seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();

    for clique in &cliques {
        let size = clique.len();
        if clique.iter().any(|&v| touched_vertex[v]) {
            profile.touched.push(clique.clone());
            clique.iter().for_each(|&v| keep[v] = true);
            continue;
        }
        if size > k + 1 {
            removed.large_cliques += size;
            continue;
        }
        if size == 1 {
            let v = clique[0];
            let seen = match g_prime.color(v) {
                Color::Red => &mut isolated_seen.0,
                Color::Blue => &mut isolated_seen.1,
            };
            if *seen < 2 * k {
                *seen += 1;
                keep[v] = true;
            } else {
                removed.isolated += 1;
            }
            continue;
        }
        let blues = clique.iter().filter(|&&v| g_prime.color(v) == Color::Blue).count();
        let seen = class_seen.entry((size, blues)).or_insert(0);
        if *seen < k {
            *seen += 1;
            clique.iter().for_each(|&v| keep[v] = true);
        } else {
            removed.duplicate_cliques += size;
        }
    }
    profile.untouched = class_seen.into_iter().filter(|&(_, m)| m > 0).collect();
    profile.isolated = isolated_seen;

    let original: Vec<usize> = (0..g_prime.n()).filter(|&v| keep[v]).collect();
    Ok(ReducedInstance {
        graph: g_prime.induced_subgraph(&original),
        original,
        profile,
        removed,
    })
}
