//! Fair editing instances from classic cluster editing instances.

use super::{FairInstance, ReductionError, Variant};
use crate::graph::{Color, ColoredGraph};
use crate::rational::Rational;

/// Blue copy of `g`, `k` disjoint red paths on three vertices, and isolated
/// padding so both classes have `max(|V|, 3k)` vertices. Budget `2k`.
///
/// Vertex layout: the copy of `g`, then the red paths, then red padding,
/// then blue padding.
pub fn gen_p3_padding(g: &ColoredGraph, k: usize, delta: Rational) -> Result<FairInstance, ReductionError> {
    if delta.is_negative() {
        return Err(ReductionError::NegativeDelta);
    }
    let n = g.n();
    let side = n.max(3 * k);
    let mut colors = vec![Color::Blue; n];
    colors.extend(std::iter::repeat_n(Color::Red, 3 * k));
    colors.extend(std::iter::repeat_n(Color::Red, side - 3 * k));
    colors.extend(std::iter::repeat_n(Color::Blue, side - n));
    let mut edges: Vec<(usize, usize)> = g.edges().map(|p| (p.lo(), p.hi())).collect();
    for i in 0..k {
        let base = n + 3 * i;
        edges.push((base, base + 1));
        edges.push((base + 1, base + 2));
    }
    let graph = ColoredGraph::from_edges(colors, edges).expect("construction is simple");
    Ok(FairInstance {
        graph,
        k: 2 * k,
        delta,
        variant: Variant::Editing,
    })
}

/// Blue copy of `g`, one red vertex `r` joined to the smallest vertex `x` of
/// degree six, and isolated blue padding up to `2k + 1` blue vertices.
/// Budget `k + 1`. Requires `|V| < 2k`.
///
/// Vertex layout: the copy of `g`, then `r`, then the padding.
pub fn gen_single_red(g: &ColoredGraph, k: usize, delta: Rational) -> Result<FairInstance, ReductionError> {
    if delta.is_negative() {
        return Err(ReductionError::NegativeDelta);
    }
    let n = g.n();
    let x = (0..n)
        .find(|&v| g.degree(v) == 6)
        .ok_or(ReductionError::NoDegreeSixVertex)?;
    if n >= 2 * k {
        return Err(ReductionError::SourceTooLarge { n, twice_k: 2 * k });
    }
    let padding = 2 * k - n + 1;
    let mut colors = vec![Color::Blue; n];
    colors.push(Color::Red);
    colors.extend(std::iter::repeat_n(Color::Blue, padding));
    let mut edges: Vec<(usize, usize)> = g.edges().map(|p| (p.lo(), p.hi())).collect();
    edges.push((x, n));
    let graph = ColoredGraph::from_edges(colors, edges).expect("construction is simple");
    Ok(FairInstance {
        graph,
        k: k + 1,
        delta,
        variant: Variant::Editing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::uncolored;

    /// Wheel on seven vertices: hub 0 joined to the 6-cycle 1..=6.
    fn wheel() -> ColoredGraph {
        let mut edges: Vec<(usize, usize)> = (1..=6).map(|v| (0, v)).collect();
        edges.extend((1..=6).map(|v| (v, v % 6 + 1)).map(|(a, b)| (a.min(b), a.max(b))));
        uncolored(7, &edges).unwrap()
    }

    #[test]
    fn path_source_gives_two_paths() {
        let p3 = uncolored(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = gen_p3_padding(&p3, 1, Rational::ZERO).unwrap();
        let g = &inst.graph;
        assert_eq!((g.n(), g.red_count(), g.blue_count()), (6, 3, 3));
        assert_eq!(inst.k, 2);
        assert!(g.has_edge(3, 4) && g.has_edge(4, 5) && !g.has_edge(3, 5));
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn zero_budget_pads_with_red_isolates() {
        let tri = uncolored(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = gen_p3_padding(&tri, 0, Rational::ZERO).unwrap();
        let g = &inst.graph;
        assert_eq!((g.n(), g.red_count(), g.blue_count(), inst.k), (6, 3, 3, 0));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn single_vertex_source_is_padded_with_blue() {
        let k1 = uncolored(1, &[]).unwrap();
        let inst = gen_p3_padding(&k1, 2, Rational::ZERO).unwrap();
        let g = &inst.graph;
        assert_eq!((g.red_count(), g.blue_count(), inst.k), (6, 6, 4));
        assert_eq!(g.vertices_of(Color::Blue).filter(|&v| g.degree(v) == 0).count(), 6);
    }

    #[test]
    fn single_red_on_a_wheel() {
        let inst = gen_single_red(&wheel(), 4, Rational::ZERO).unwrap();
        let g = &inst.graph;
        assert_eq!(g.blue_count(), 9);
        assert_eq!(g.red_count(), 1);
        assert_eq!(g.n(), 10);
        assert_eq!(inst.k, 5);
        assert!(g.has_edge(0, 7));
        assert_eq!(g.degree(7), 1);
    }

    #[test]
    fn single_red_preconditions() {
        assert_eq!(
            gen_single_red(&wheel(), 3, Rational::ZERO),
            Err(ReductionError::SourceTooLarge { n: 7, twice_k: 6 })
        );
        let k3 = uncolored(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            gen_single_red(&k3, 5, Rational::ZERO),
            Err(ReductionError::NoDegreeSixVertex)
        );
    }
}
