#![allow(dead_code)]

use modfair_core::{Color, ColoredGraph, ModificationSet, Pair, Rational};
use rand::Rng;

/// Erdős–Rényi graph with independently colored vertices; both classes are
/// forced to be non-empty by recoloring vertex 0 or 1 if needed.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> ColoredGraph {
    assert!(n >= 2);
    let mut colors: Vec<Color> = (0..n)
        .map(|_| if rng.gen_bool(0.5) { Color::Red } else { Color::Blue })
        .collect();
    if colors.iter().all(|&c| c == Color::Red) {
        colors[1] = Color::Blue;
    } else if colors.iter().all(|&c| c == Color::Blue) {
        colors[0] = Color::Red;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    ColoredGraph::from_edges(colors, edges).unwrap()
}

/// Disjoint cliques of the given shapes, each `(order, blue count)`.
pub fn cliques(shapes: &[(usize, usize)]) -> ColoredGraph {
    let mut colors = Vec::new();
    let mut edges = Vec::new();
    for &(order, blues) in shapes {
        let base = colors.len();
        colors.extend((0..order).map(|i| if i < blues { Color::Blue } else { Color::Red }));
        for i in 0..order {
            for j in i + 1..order {
                edges.push((base + i, base + j));
            }
        }
    }
    ColoredGraph::from_edges(colors, edges).unwrap()
}

/// `diff(S)` by summing `ed_S(v)` over each color class.
pub fn diff_by_summation(g: &ColoredGraph, s: &ModificationSet) -> Rational {
    let mut ed = vec![0i64; g.n()];
    for p in s {
        ed[p.lo()] += 1;
        ed[p.hi()] += 1;
    }
    let mean = |c: Color| {
        let members: Vec<usize> = (0..g.n()).filter(|&v| g.color(v) == c).collect();
        Rational::new(members.iter().map(|&v| ed[v]).sum(), members.len() as i64)
    };
    (mean(Color::Red) - mean(Color::Blue)).abs()
}

/// Whether some three vertices induce exactly two edges.
pub fn has_induced_p3(g: &ColoredGraph) -> bool {
    let n = g.n();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            (b + 1..n).any(|c| {
                let e = [g.has_edge(a, b), g.has_edge(b, c), g.has_edge(a, c)];
                e.iter().filter(|&&x| x).count() == 2
            })
        })
    })
}

/// `sizes[j]` is whether some set of exactly `j <= k_max` pairs turns `g`
/// into a cluster graph; colors are ignored.
pub fn editing_sizes(g: &ColoredGraph, k_max: usize) -> Vec<bool> {
    let pairs: Vec<Pair> = g.all_pairs().collect();
    let mut sizes = vec![false; k_max + 1];
    let mut chosen = Vec::new();
    fn go(g: &ColoredGraph, pairs: &[Pair], from: usize, k_max: usize, chosen: &mut Vec<Pair>, sizes: &mut [bool]) {
        let s: ModificationSet = chosen.iter().copied().collect();
        if !has_induced_p3(&g.apply(&s).unwrap()) {
            sizes[chosen.len()] = true;
        }
        if chosen.len() == k_max {
            return;
        }
        for i in from..pairs.len() {
            chosen.push(pairs[i]);
            go(g, pairs, i + 1, k_max, chosen, sizes);
            chosen.pop();
        }
    }
    go(g, &pairs, 0, k_max, &mut chosen, &mut sizes);
    sizes
}

/// Minimum classic editing size, by exhaustive search over growing sizes.
pub fn classic_opt(g: &ColoredGraph) -> usize {
    let all = g.n() * g.n().saturating_sub(1) / 2;
    (0..=all).find(|&k| editing_sizes(g, k)[k] || k == all).unwrap()
}

/// All graphs on `n` vertices, edges taken from the bits of a mask over the
/// pairs in lexicographic order.
pub fn all_graphs(n: usize, colors: &[Color]) -> Vec<ColoredGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]);
            ColoredGraph::from_edges(colors.to_vec(), edges).unwrap()
        })
        .collect()
}

pub fn is_connected(g: &ColoredGraph) -> bool {
    g.components().len() <= 1
}

/// One representative per isomorphism class of uncolored graphs on `n`
/// vertices: those whose adjacency bit string is lexicographically least
/// over all vertex permutations.
pub fn iso_classes(n: usize) -> Vec<ColoredGraph> {
    let perms = permutations(n);
    let code = |g: &ColoredGraph, p: &[usize]| -> Vec<bool> {
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| g.has_edge(p[u], p[v]))
            .collect()
    };
    all_graphs(n, &vec![Color::Blue; n])
        .into_iter()
        .filter(|g| {
            let own = code(g, &perms[0]);
            perms.iter().all(|p| code(g, p) <= own)
        })
        .collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Graph whose colored clusters are given by red and blue cluster sizes,
/// with each bicolored pair present independently with probability `p`.
pub fn mono_cluster_graph<R: Rng>(rng: &mut R, reds: &[usize], blues: &[usize], p: f64) -> ColoredGraph {
    let mut colors = vec![Color::Red; reds.iter().sum()];
    colors.extend(vec![Color::Blue; blues.iter().sum()]);
    let mut edges = Vec::new();
    let mut base = 0;
    for &size in reds.iter().chain(blues) {
        for i in 0..size {
            for j in i + 1..size {
                edges.push((base + i, base + j));
            }
        }
        base += size;
    }
    let r: usize = reds.iter().sum();
    for u in 0..r {
        for v in r..colors.len() {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    ColoredGraph::from_edges(colors, edges).unwrap()
}

/// Smallest set of bicolored pairs turning `g` into a cluster graph, found
/// by trying every partial pairing of red clusters with blue clusters.
/// `g[R]` and `g[B]` must be cluster graphs.
pub fn bicolored_opt(g: &ColoredGraph) -> usize {
    let side = |c: Color| -> Vec<Vec<usize>> {
        let vs: Vec<usize> = g.vertices_of(c).collect();
        g.induced_subgraph(&vs)
            .components()
            .into_iter()
            .map(|comp| comp.into_iter().map(|i| vs[i]).collect())
            .collect()
    };
    let (red, blue) = (side(Color::Red), side(Color::Blue));
    let mut best = usize::MAX;
    let mut target = vec![usize::MAX; blue.len()];
    fn go(
        i: usize,
        g: &ColoredGraph,
        red: &[Vec<usize>],
        blue: &[Vec<usize>],
        partner: &mut Vec<usize>,
        best: &mut usize,
    ) {
        if i == red.len() {
            let mut cost = 0;
            for (ri, rc) in red.iter().enumerate() {
                for (bi, bc) in blue.iter().enumerate() {
                    let merged = partner[bi] == ri;
                    for &u in rc {
                        for &v in bc {
                            if g.has_edge(u, v) != merged {
                                cost += 1;
                            }
                        }
                    }
                }
            }
            *best = (*best).min(cost);
            return;
        }
        go(i + 1, g, red, blue, partner, best);
        for b in 0..blue.len() {
            if partner[b] == usize::MAX {
                partner[b] = i;
                go(i + 1, g, red, blue, partner, best);
                partner[b] = usize::MAX;
            }
        }
    }
    go(0, g, &red, &blue, &mut target, &mut best);
    best
}
