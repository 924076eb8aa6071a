//! Two-colored simple graphs, vertex pairs, and modification sets.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn tag(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("color class {0:?} is empty, so the fairness measure is undefined")]
    EmptyColorClass(Color),
    #[error("graph is not a cluster graph: induced path {0}-{1}-{2}")]
    NotClusterGraph(usize, usize, usize),
}

/// An unordered vertex pair `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    u: usize,
    v: usize,
}

impl Pair {
    /// Panics on `u == v`; use [`Pair::try_new`] for untrusted input.
    pub fn new(u: usize, v: usize) -> Self {
        Self::try_new(u, v).expect("a pair needs two distinct vertices")
    }

    pub fn try_new(u: usize, v: usize) -> Result<Self, GraphError> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Pair { u, v }),
            std::cmp::Ordering::Greater => Ok(Pair { u: v, v: u }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(u)),
        }
    }

    pub fn lo(&self) -> usize {
        self.u
    }

    pub fn hi(&self) -> usize {
        self.v
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

impl From<(usize, usize)> for Pair {
    fn from((u, v): (usize, usize)) -> Self {
        Pair::new(u, v)
    }
}

/// Set of vertex pairs whose adjacency gets toggled.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModificationSet {
    pairs: BTreeSet<Pair>,
}

impl ModificationSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Returns `false` if the pair was already present.
    pub fn insert(&mut self, pair: Pair) -> bool {
        self.pairs.insert(pair)
    }

    pub fn remove(&mut self, pair: &Pair) -> bool {
        self.pairs.remove(pair)
    }

    pub fn contains(&self, pair: &Pair) -> bool {
        self.pairs.contains(pair)
    }

    /// Pairs in ascending lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Pair> + '_ {
        self.pairs.iter()
    }

    pub fn to_vec(&self) -> Vec<Pair> {
        self.pairs.iter().copied().collect()
    }

    pub fn union(&self, other: &ModificationSet) -> ModificationSet {
        self.pairs.union(&other.pairs).copied().collect()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.pairs.iter().map(Pair::hi).max()
    }
}

impl fmt::Debug for ModificationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs.iter()).finish()
    }
}

impl FromIterator<Pair> for ModificationSet {
    fn from_iter<I: IntoIterator<Item = Pair>>(iter: I) -> Self {
        ModificationSet {
            pairs: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a ModificationSet {
    type Item = &'a Pair;
    type IntoIter = std::collections::btree_set::Iter<'a, Pair>;
    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}

/// Simple undirected graph on vertices `0..n`, each colored red or blue.
///
/// Adjacency is a dense symmetric bit matrix, one row of `u64` words per
/// vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    colors: Vec<Color>,
    words: usize,
    rows: Vec<u64>,
}

impl ColoredGraph {
    /// Edgeless graph with the given vertex colors.
    pub fn empty(colors: Vec<Color>) -> Self {
        let words = colors.len().div_ceil(64).max(1);
        let rows = vec![0; words * colors.len()];
        ColoredGraph { colors, words, rows }
    }

    pub fn from_edges<I>(colors: Vec<Color>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(colors);
        for (u, v) in edges {
            let pair = g.check_pair(u, v)?;
            if g.has_edge(pair.u, pair.v) {
                return Err(GraphError::DuplicateEdge(pair.u, pair.v));
            }
            g.toggle(pair);
        }
        Ok(g)
    }

    /// Same as [`ColoredGraph::from_edges`] but tolerates repeated edges.
    pub fn from_edge_set<I>(colors: Vec<Color>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(colors);
        for (u, v) in edges {
            let pair = g.check_pair(u, v)?;
            if !g.has_edge(pair.u, pair.v) {
                g.toggle(pair);
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn red_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == Color::Red).count()
    }

    pub fn blue_count(&self) -> usize {
        self.n() - self.red_count()
    }

    pub fn vertices_of(&self, color: Color) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| self.colors[v] == color)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Flips the adjacency of `pair`. Callers must keep the pair in range.
    #[inline]
    pub(crate) fn toggle(&mut self, pair: Pair) {
        let (u, v) = (pair.u, pair.v);
        self.rows[u * self.words + v / 64] ^= 1 << (v % 64);
        self.rows[v * self.words + u / 64] ^= 1 << (u % 64);
    }

    pub fn check_pair(&self, u: usize, v: usize) -> Result<Pair, GraphError> {
        for x in [u, v] {
            if x >= self.n() {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n() });
            }
        }
        Pair::try_new(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }

    /// Edges as pairs in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Pair> + '_ {
        (0..self.n()).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| Pair { u, v }))
    }

    /// Every unordered vertex pair in ascending lexicographic order.
    pub fn all_pairs(&self) -> impl Iterator<Item = Pair> {
        let n = self.n();
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| Pair { u, v }))
    }

    /// Lexicographically smallest induced `P3` as `(u, v, w)` with center
    /// `v`: minimal `v` first, then minimal `u < w`.
    pub fn find_p3(&self) -> Option<(usize, usize, usize)> {
        for v in 0..self.n() {
            let nbrs: Vec<usize> = self.neighbors(v).collect();
            for (i, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[i + 1..] {
                    if !self.has_edge(u, w) {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    /// Whether every connected component is a clique. Checks that adjacent
    /// vertices have identical closed neighborhoods.
    pub fn is_cluster_graph(&self) -> bool {
        let w = self.words;
        for u in 0..self.n() {
            let ru = self.row(u);
            for v in self.neighbors(u).filter(|&v| v > u) {
                let rv = self.row(v);
                for i in 0..w {
                    let mut a = ru[i];
                    let mut b = rv[i];
                    if u / 64 == i {
                        a |= 1 << (u % 64);
                        b |= 1 << (u % 64);
                    }
                    if v / 64 == i {
                        a |= 1 << (v % 64);
                        b |= 1 << (v % 64);
                    }
                    if a != b {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether the subgraph induced by one color class is a cluster graph.
    pub fn is_cluster_on(&self, color: Color) -> bool {
        let members: Vec<usize> = self.vertices_of(color).collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !self.has_edge(u, v) {
                    continue;
                }
                for &x in &members {
                    if x != u && x != v && self.has_edge(u, x) != self.has_edge(v, x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Vertex sets of the cliques of a cluster graph, ordered by smallest
    /// member, each sorted ascending.
    pub fn cluster_decomposition(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        if let Some((u, v, w)) = self.find_p3() {
            return Err(GraphError::NotClusterGraph(u, v, w));
        }
        Ok(self.components())
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let x = comp[head];
                head += 1;
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Symmetric difference of the edge set with `s`.
    pub fn apply(&self, s: &ModificationSet) -> Result<ColoredGraph, GraphError> {
        if let Some(max) = s.max_vertex() {
            if max >= self.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: max,
                    n: self.n(),
                });
            }
        }
        let mut g = self.clone();
        for &p in s {
            g.toggle(p);
        }
        Ok(g)
    }

    /// Subgraph induced by `vertices`, relabeled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> ColoredGraph {
        let colors = vertices.iter().map(|&v| self.colors[v]).collect();
        let mut g = ColoredGraph::empty(colors);
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.toggle(Pair { u: i, v: j });
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &ColoredGraph) -> ColoredGraph {
        let offset = self.n();
        let mut colors = self.colors.clone();
        colors.extend_from_slice(&other.colors);
        let mut g = ColoredGraph::empty(colors);
        for p in self.edges() {
            g.toggle(p);
        }
        for p in other.edges() {
            g.toggle(Pair {
                u: p.u + offset,
                v: p.v + offset,
            });
        }
        g
    }

    /// Copy of the graph with every vertex recolored.
    pub fn recolored(&self, color: Color) -> ColoredGraph {
        ColoredGraph {
            colors: vec![color; self.n()],
            ..self.clone()
        }
    }

    /// The pairs on which two graphs over the same vertex set disagree.
    pub fn difference(&self, other: &ColoredGraph) -> ModificationSet {
        assert_eq!(self.n(), other.n(), "graphs must share the vertex set");
        self.all_pairs()
            .filter(|p| self.has_edge(p.u, p.v) != other.has_edge(p.u, p.v))
            .collect()
    }
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let colors: String = self.colors.iter().map(|c| c.tag()).collect();
        f.debug_struct("ColoredGraph")
            .field("colors", &colors)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Graph on `n` vertices of a single color.
pub fn uncolored(n: usize, edges: &[(usize, usize)]) -> Result<ColoredGraph, GraphError> {
    ColoredGraph::from_edges(vec![Color::Blue; n], edges.iter().copied())
}
