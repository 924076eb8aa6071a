//! Instance and modification-set text formats, and seeded subgraph sampling.
//!
//! Instance files are line oriented, `#` starts a comment:
//!
//! ```text
//! p fce <n> <m>
//! v <id> R|B        n lines, ids 0..n-1 in order
//! e <u> <v>         m lines, u < v, no duplicates
//! k <k>             optional
//! delta <p>/<q>     optional, decimals accepted
//! variant <name>    optional
//! ```
//!
//! The optional lines may appear anywhere after the header.
//!
//! Edge-addition instances, whose cliques can be far too large to list
//! edge by edge, have a compact form of clique orders:
//!
//! ```text
//! p cta <cliques>
//! c <order>         one line per clique
//! k <k>
//! ```

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Color, ColoredGraph, ModificationSet, Pair};
use crate::rational::Rational;
use crate::reductions::{CtaInstance, FairInstance, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("no header line `p fce <n> <m>`")]
    MissingHeader,
    #[error("line {line}: malformed header: {msg}")]
    BadHeader { line: usize, msg: String },
    #[error("line {line}: malformed vertex line: {msg}")]
    BadVertex { line: usize, msg: String },
    #[error("line {line}: expected vertex {expected}, found {found}")]
    VertexGap { line: usize, expected: usize, found: usize },
    #[error("line {line}: unknown color `{tag}`")]
    UnknownColor { line: usize, tag: String },
    #[error("line {line}: malformed edge line: {msg}")]
    BadEdge { line: usize, msg: String },
    #[error("line {line}: edge {{{u}, {v}}} must be written with u < v")]
    UnorderedEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edge endpoint {vertex} out of range for {n} vertices")]
    EdgeOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex line after the first edge line")]
    VertexAfterEdge { line: usize },
    #[error("line {line}: more than the declared {declared} {what}")]
    TooMany {
        line: usize,
        declared: usize,
        what: &'static str,
    },
    #[error("header declares {declared} {what}, found {found}")]
    TooFew {
        declared: usize,
        found: usize,
        what: &'static str,
    },
    #[error("line {line}: malformed `{key}` line: {msg}")]
    BadSidecar {
        line: usize,
        key: &'static str,
        msg: String,
    },
    #[error("line {line}: repeated `{key}` line")]
    RepeatedSidecar { line: usize, key: &'static str },
    #[error("line {line}: unknown line type `{tag}`")]
    UnknownLine { line: usize, tag: String },
    #[error("line {line}: malformed modification line: {msg}")]
    BadModification { line: usize, msg: String },
    #[error("line {line}: repeated pair {{{u}, {v}}}")]
    RepeatedPair { line: usize, u: usize, v: usize },
    #[error("line {line}: malformed clique line: {msg}")]
    BadClique { line: usize, msg: String },
    #[error("missing `k` line")]
    MissingBudget,
}

/// A parsed instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: ColoredGraph,
    pub k: Option<usize>,
    pub delta: Option<Rational>,
    pub variant: Option<Variant>,
}

fn content(raw: &str) -> &str {
    raw.split('#').next().unwrap_or("").trim()
}

fn number(tok: Option<&str>) -> Result<usize, String> {
    let tok = tok.ok_or("missing number")?;
    tok.parse()
        .map_err(|_| format!("`{tok}` is not a non-negative integer"))
}

fn no_trailing<'a>(mut toks: impl Iterator<Item = &'a str>) -> Result<(), String> {
    match toks.next() {
        Some(extra) => Err(format!("unexpected trailing `{extra}`")),
        None => Ok(()),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, content(raw)))
        .filter(|(_, c)| !c.is_empty());
    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let bad_header = |msg: String| ParseError::BadHeader { line, msg };
    let mut toks = header.split_whitespace();
    if toks.next() != Some("p") || toks.next() != Some("fce") {
        return Err(bad_header("expected `p fce <n> <m>`".into()));
    }
    let n = number(toks.next()).map_err(bad_header)?;
    let m = number(toks.next()).map_err(bad_header)?;
    no_trailing(toks).map_err(bad_header)?;

    let mut colors = Vec::with_capacity(n);
    let mut graph: Option<ColoredGraph> = None;
    let mut edges = 0;
    let mut inst_k = None;
    let mut delta = None;
    let mut variant = None;

    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        let tag = toks.next().expect("line is non-empty");
        match tag {
            "v" => {
                let bad = |msg: String| ParseError::BadVertex { line, msg };
                if graph.is_some() {
                    return Err(ParseError::VertexAfterEdge { line });
                }
                let id = number(toks.next()).map_err(bad)?;
                let color = match toks.next() {
                    Some("R") => Color::Red,
                    Some("B") => Color::Blue,
                    Some(other) => {
                        return Err(ParseError::UnknownColor {
                            line,
                            tag: other.into(),
                        })
                    }
                    None => return Err(bad("missing color".into())),
                };
                no_trailing(toks).map_err(bad)?;
                if colors.len() == n {
                    return Err(ParseError::TooMany {
                        line,
                        declared: n,
                        what: "vertices",
                    });
                }
                if id != colors.len() {
                    return Err(ParseError::VertexGap {
                        line,
                        expected: colors.len(),
                        found: id,
                    });
                }
                colors.push(color);
            }
            "e" => {
                let bad = |msg: String| ParseError::BadEdge { line, msg };
                let u = number(toks.next()).map_err(bad)?;
                let v = number(toks.next()).map_err(bad)?;
                no_trailing(toks).map_err(bad)?;
                if graph.is_none() {
                    if colors.len() < n {
                        return Err(ParseError::TooFew {
                            declared: n,
                            found: colors.len(),
                            what: "vertices",
                        });
                    }
                    graph = Some(ColoredGraph::empty(std::mem::take(&mut colors)));
                }
                let g = graph.as_mut().expect("just created");
                if u >= v {
                    return Err(ParseError::UnorderedEdge { line, u, v });
                }
                if v >= n {
                    return Err(ParseError::EdgeOutOfRange { line, vertex: v, n });
                }
                if g.has_edge(u, v) {
                    return Err(ParseError::DuplicateEdge { line, u, v });
                }
                if edges == m {
                    return Err(ParseError::TooMany {
                        line,
                        declared: m,
                        what: "edges",
                    });
                }
                g.toggle(Pair::new(u, v));
                edges += 1;
            }
            "k" => {
                let bad = |msg: String| ParseError::BadSidecar { line, key: "k", msg };
                let value = number(toks.next()).map_err(bad)?;
                no_trailing(toks).map_err(bad)?;
                if inst_k.replace(value).is_some() {
                    return Err(ParseError::RepeatedSidecar { line, key: "k" });
                }
            }
            "delta" => {
                let bad = |msg: String| ParseError::BadSidecar {
                    line,
                    key: "delta",
                    msg,
                };
                let value: Rational = toks
                    .next()
                    .ok_or("missing value".to_string())
                    .and_then(|t| t.parse().map_err(|e| format!("{e}")))
                    .map_err(bad)?;
                no_trailing(toks).map_err(bad)?;
                if value.is_negative() {
                    return Err(bad("delta must be non-negative".into()));
                }
                if delta.replace(value).is_some() {
                    return Err(ParseError::RepeatedSidecar { line, key: "delta" });
                }
            }
            "variant" => {
                let bad = |msg: String| ParseError::BadSidecar {
                    line,
                    key: "variant",
                    msg,
                };
                let value: Variant = toks
                    .next()
                    .ok_or("missing name".to_string())
                    .and_then(|t| t.parse().map_err(|e| format!("{e}")))
                    .map_err(bad)?;
                no_trailing(toks).map_err(bad)?;
                if variant.replace(value).is_some() {
                    return Err(ParseError::RepeatedSidecar { line, key: "variant" });
                }
            }
            other => {
                return Err(ParseError::UnknownLine {
                    line,
                    tag: other.into(),
                })
            }
        }
    }

    let graph = match graph {
        Some(g) => g,
        None if colors.len() == n => ColoredGraph::empty(colors),
        None => {
            return Err(ParseError::TooFew {
                declared: n,
                found: colors.len(),
                what: "vertices",
            })
        }
    };
    if edges < m {
        return Err(ParseError::TooFew {
            declared: m,
            found: edges,
            what: "edges",
        });
    }
    Ok(Instance {
        graph,
        k: inst_k,
        delta,
        variant,
    })
}

pub fn write_graph(g: &ColoredGraph) -> String {
    write_instance(g, None, None, None)
}

pub fn write_instance(g: &ColoredGraph, k: Option<usize>, delta: Option<Rational>, variant: Option<Variant>) -> String {
    let mut out = format!("p fce {} {}\n", g.n(), g.edge_count());
    for v in 0..g.n() {
        let _ = writeln!(out, "v {v} {}", g.color(v).tag());
    }
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.lo(), e.hi());
    }
    if let Some(k) = k {
        let _ = writeln!(out, "k {k}");
    }
    if let Some(d) = delta {
        let _ = writeln!(out, "delta {d}");
    }
    if let Some(v) = variant {
        let _ = writeln!(out, "variant {v}");
    }
    out
}

pub fn write_fair_instance(inst: &FairInstance) -> String {
    write_instance(&inst.graph, Some(inst.k), Some(inst.delta), Some(inst.variant))
}

/// Lines `m <u> <v>` with `u < v`. With `n`, endpoints must be below it.
pub fn parse_modification_set(text: &str, n: Option<usize>) -> Result<ModificationSet, ParseError> {
    let mut set = ModificationSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let text = content(raw);
        if text.is_empty() {
            continue;
        }
        let bad = |msg: String| ParseError::BadModification { line, msg };
        let mut toks = text.split_whitespace();
        let tag = toks.next().expect("line is non-empty");
        if tag != "m" {
            return Err(ParseError::UnknownLine { line, tag: tag.into() });
        }
        let u = number(toks.next()).map_err(bad)?;
        let v = number(toks.next()).map_err(bad)?;
        no_trailing(toks).map_err(bad)?;
        if u >= v {
            return Err(bad(format!("pair {{{u}, {v}}} must be written with u < v")));
        }
        if let Some(n) = n.filter(|&n| v >= n) {
            return Err(bad(format!("vertex {v} out of range for {n} vertices")));
        }
        if !set.insert(Pair::new(u, v)) {
            return Err(ParseError::RepeatedPair { line, u, v });
        }
    }
    Ok(set)
}

pub fn write_modification_set(s: &ModificationSet) -> String {
    s.iter().fold(String::new(), |mut out, p| {
        let _ = writeln!(out, "m {} {}", p.lo(), p.hi());
        out
    })
}

pub fn write_cta(cta: &CtaInstance) -> String {
    let mut out = format!("p cta {}\n", cta.orders.len());
    for o in &cta.orders {
        let _ = writeln!(out, "c {o}");
    }
    let _ = writeln!(out, "k {}", cta.k);
    out
}

pub fn parse_cta(text: &str) -> Result<CtaInstance, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, content(raw)))
        .filter(|(_, c)| !c.is_empty());
    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let bad_header = |msg: String| ParseError::BadHeader { line, msg };
    let mut toks = header.split_whitespace();
    if toks.next() != Some("p") || toks.next() != Some("cta") {
        return Err(bad_header("expected `p cta <cliques>`".into()));
    }
    let count = number(toks.next()).map_err(bad_header)?;
    no_trailing(toks).map_err(bad_header)?;
    let big = |tok: Option<&str>| -> Result<BigUint, String> {
        let tok = tok.ok_or("missing number")?;
        tok.parse()
            .map_err(|_| format!("`{tok}` is not a non-negative integer"))
    };
    let mut orders = Vec::with_capacity(count);
    let mut k = None;
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        match toks.next().expect("line is non-empty") {
            "c" => {
                let bad = |msg: String| ParseError::BadClique { line, msg };
                let order = big(toks.next()).map_err(bad)?;
                no_trailing(toks).map_err(bad)?;
                if order == BigUint::ZERO {
                    return Err(bad("clique order must be positive".into()));
                }
                if orders.len() == count {
                    return Err(ParseError::TooMany {
                        line,
                        declared: count,
                        what: "cliques",
                    });
                }
                orders.push(order);
            }
            "k" => {
                let bad = |msg: String| ParseError::BadSidecar { line, key: "k", msg };
                let value = big(toks.next()).map_err(bad)?;
                no_trailing(toks).map_err(bad)?;
                if k.replace(value).is_some() {
                    return Err(ParseError::RepeatedSidecar { line, key: "k" });
                }
            }
            other => {
                return Err(ParseError::UnknownLine {
                    line,
                    tag: other.into(),
                })
            }
        }
    }
    if orders.len() < count {
        return Err(ParseError::TooFew {
            declared: count,
            found: orders.len(),
            what: "cliques",
        });
    }
    Ok(CtaInstance {
        orders,
        k: k.ok_or(ParseError::MissingBudget)?,
        params: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMethod {
    /// Breadth-first ball around a seeded start vertex.
    BfsBall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleSpec {
    pub n: usize,
    pub seed: u64,
    pub method: SampleMethod,
}

impl SampleSpec {
    pub fn bfs(n: usize, seed: u64) -> Self {
        SampleSpec {
            n,
            seed,
            method: SampleMethod::BfsBall,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot sample {requested} vertices from a graph on {available}")]
pub struct SampleError {
    pub requested: usize,
    pub available: usize,
}

/// Induced subgraph on a seeded BFS ball of `spec.n` vertices, relabeled
/// in increasing original id.
pub fn sample_subgraph(g: &ColoredGraph, spec: SampleSpec) -> Result<ColoredGraph, SampleError> {
    let vertices = sample_vertices(g, spec)?;
    Ok(g.induced_subgraph(&vertices))
}

/// The vertex set [`sample_subgraph`] induces on, ascending.
pub fn sample_vertices(g: &ColoredGraph, spec: SampleSpec) -> Result<Vec<usize>, SampleError> {
    if spec.n == 0 || spec.n > g.n() {
        return Err(SampleError {
            requested: spec.n,
            available: g.n(),
        });
    }
    let SampleMethod::BfsBall = spec.method;
    let start = ChaCha8Rng::seed_from_u64(spec.seed).gen_range(0..g.n());
    Ok(bfs_ball(g, start, spec.n))
}

/// First `n` vertices reached by BFS from `start`, neighbors visited in id
/// order. An exhausted component is continued from the smallest unvisited
/// vertex. Returned ascending.
pub fn bfs_ball(g: &ColoredGraph, start: usize, n: usize) -> Vec<usize> {
    let n = n.min(g.n());
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    let mut next_fresh = 0;
    let mut root = Some(start);
    while order.len() < n {
        let r = match root.take() {
            Some(r) => r,
            None => {
                while seen[next_fresh] {
                    next_fresh += 1;
                }
                next_fresh
            }
        };
        seen[r] = true;
        order.push(r);
        queue.push_back(r);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if order.len() == n {
                    break;
                }
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
    }
    order.sort_unstable();
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::uncolored;

    #[test]
    fn parses_a_small_instance() {
        let inst = parse_instance("p fce 2 1\nv 0 R\nv 1 B\ne 0 1\n").unwrap();
        let g = &inst.graph;
        assert_eq!(
            (g.n(), g.edge_count(), g.color(0), g.color(1)),
            (2, 1, Color::Red, Color::Blue)
        );
        assert_eq!((inst.k, inst.delta, inst.variant), (None, None, None));
    }

    #[test]
    fn sidecar_lines_and_comments() {
        let text = "# two vertices\np fce 2 0\nv 0 R # red\nv 1 B\nk 3\ndelta 0.25\nvariant deletion\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.k, Some(3));
        assert_eq!(inst.delta, Some(Rational::new(1, 4)));
        assert_eq!(inst.variant, Some(Variant::Deletion));
        let back = write_instance(&inst.graph, inst.k, inst.delta, inst.variant);
        assert_eq!(parse_instance(&back), Ok(inst));
    }

    #[test]
    fn errors_are_distinct_and_located() {
        let cases: Vec<(&str, ParseError)> = vec![
            ("", ParseError::MissingHeader),
            (
                "p fce 2 1\nv 0 R\nv 1 B\ne 0 1\ne 0 1\n",
                ParseError::DuplicateEdge { line: 5, u: 0, v: 1 },
            ),
            (
                "p fce 1 0\nv 0 G\n",
                ParseError::UnknownColor {
                    line: 2,
                    tag: "G".into(),
                },
            ),
            (
                "p fce 2 0\nv 0 R\nv 2 B\n",
                ParseError::VertexGap {
                    line: 3,
                    expected: 1,
                    found: 2,
                },
            ),
            (
                "p fce 2 1\nv 0 R\nv 1 B\ne 1 0\n",
                ParseError::UnorderedEdge { line: 4, u: 1, v: 0 },
            ),
            (
                "p fce 2 1\nv 0 R\nv 1 B\ne 0 2\n",
                ParseError::EdgeOutOfRange {
                    line: 4,
                    vertex: 2,
                    n: 2,
                },
            ),
            (
                "p fce 2 2\nv 0 R\nv 1 B\ne 0 1\n",
                ParseError::TooFew {
                    declared: 2,
                    found: 1,
                    what: "edges",
                },
            ),
            (
                "p fce 2 0\nv 0 R\nv 1 B\nv 2 B\n",
                ParseError::TooMany {
                    line: 4,
                    declared: 2,
                    what: "vertices",
                },
            ),
            (
                "p fce 2 0\nv 0 R\nv 1 B\nk 1\nk 2\n",
                ParseError::RepeatedSidecar { line: 5, key: "k" },
            ),
            (
                "p fce 2 0\nv 0 R\nv 1 B\nx 1\n",
                ParseError::UnknownLine {
                    line: 4,
                    tag: "x".into(),
                },
            ),
            (
                "p fce 3 1\nv 0 R\nv 1 B\ne 0 1\n",
                ParseError::TooFew {
                    declared: 3,
                    found: 2,
                    what: "vertices",
                },
            ),
        ];
        for (text, want) in cases {
            assert_eq!(parse_instance(text), Err(want), "{text:?}");
        }
        assert!(matches!(
            parse_instance("p fce two 0\n"),
            Err(ParseError::BadHeader { line: 1, .. })
        ));
        assert!(matches!(
            parse_instance("p fce 1 0\nv 0 R\ndelta -1/2\n"),
            Err(ParseError::BadSidecar {
                line: 3,
                key: "delta",
                ..
            })
        ));
        assert!(matches!(
            parse_instance("p fce 1 0\nv 0 R\nvariant fuzzy\n"),
            Err(ParseError::BadSidecar {
                line: 3,
                key: "variant",
                ..
            })
        ));
    }

    #[test]
    fn modification_sets_round_trip() {
        let s: ModificationSet = [Pair::new(0, 2), Pair::new(1, 3)].into_iter().collect();
        let text = write_modification_set(&s);
        assert_eq!(text, "m 0 2\nm 1 3\n");
        assert_eq!(parse_modification_set(&text, Some(4)), Ok(s));
        assert!(matches!(
            parse_modification_set("m 0 4\n", Some(4)),
            Err(ParseError::BadModification { line: 1, .. })
        ));
        assert_eq!(
            parse_modification_set("m 0 1\nm 0 1\n", None),
            Err(ParseError::RepeatedPair { line: 2, u: 0, v: 1 })
        );
    }

    #[test]
    fn cta_text_round_trips() {
        let cta = CtaInstance {
            orders: vec![3u32.into(), 1u32.into()],
            k: 3u32.into(),
            params: None,
        };
        let text = write_cta(&cta);
        assert_eq!(text, "p cta 2\nc 3\nc 1\nk 3\n");
        assert_eq!(parse_cta(&text), Ok(cta));
        assert_eq!(parse_cta("p cta 1\nc 2\n"), Err(ParseError::MissingBudget));
        assert!(matches!(
            parse_cta("p cta 1\nc 0\nk 1\n"),
            Err(ParseError::BadClique { line: 2, .. })
        ));
    }

    #[test]
    fn bfs_ball_examples() {
        let path = uncolored(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(bfs_ball(&path, 0, 3), vec![0, 1, 2]);
        assert_eq!(bfs_ball(&path, 2, 3), vec![1, 2, 3]);
        let two = uncolored(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(bfs_ball(&two, 1, 3), vec![0, 1, 2]);
        assert_eq!(bfs_ball(&two, 4, 3), vec![3, 4, 5]);
        // Exhausting a triangle continues from the smallest unvisited id.
        assert_eq!(bfs_ball(&two, 4, 4), vec![0, 3, 4, 5]);
    }

    #[test]
    fn full_sample_is_the_graph() {
        let g =
            ColoredGraph::from_edges(vec![Color::Red, Color::Blue, Color::Blue, Color::Red], [(0, 1), (2, 3)]).unwrap();
        for seed in 0..5 {
            assert_eq!(sample_subgraph(&g, SampleSpec::bfs(4, seed)).unwrap(), g);
        }
        assert_eq!(
            sample_subgraph(&g, SampleSpec::bfs(5, 0)),
            Err(SampleError {
                requested: 5,
                available: 4
            })
        );
        let a = sample_vertices(&g, SampleSpec::bfs(2, 7)).unwrap();
        assert_eq!(a, sample_vertices(&g, SampleSpec::bfs(2, 7)).unwrap());
    }
}
