//! Numerical 3D matching and cluster transformation by edge addition.
//!
//! An edge-addition instance is a cluster graph plus a count `k`, asking
//! whether exactly `k` added edges give another cluster graph. Added edges
//! can only complete unions of whole cliques, so the instance is determined
//! by its clique orders and the solutions are partitions of the cliques.
//! Orders are kept as big integers because the construction from numerical
//! 3D matching pads cliques to sizes like `n^{7d}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{Color, ColoredGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CtaError {
    /// The matching instance fails a necessary condition and can be
    /// rejected outright.
    #[error("trivial no-instance: {0}")]
    TrivialNo(String),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("{cliques} cliques exceed the cap of {cap}")]
    TooManyCliques { cliques: usize, cap: usize },
    #[error("{n} triples exceed the cap of {cap}")]
    TooManyTriples { n: usize, cap: usize },
    #[error("orders too large for exhaustive search")]
    Overflow,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Default clique cap of [`solve_cta_bruteforce`].
pub const DEFAULT_CLIQUE_CAP: usize = 10;
/// Largest matching instance [`solve_n3dm_bruteforce`] accepts.
pub const N3DM_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct N3dmInstance {
    pub t: u64,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

impl N3dmInstance {
    pub fn new(t: u64, a: Vec<u64>, b: Vec<u64>, c: Vec<u64>) -> Result<Self, CtaError> {
        if a.is_empty() || a.len() != b.len() || a.len() != c.len() {
            return Err(CtaError::Params(format!(
                "lists must be non-empty and of equal length, got {}, {}, {}",
                a.len(),
                b.len(),
                c.len()
            )));
        }
        if t == 0 || a.iter().chain(&b).chain(&c).any(|&x| x == 0) {
            return Err(CtaError::Params("all numbers must be positive".into()));
        }
        Ok(N3dmInstance { t, a, b, c })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    fn values(&self) -> impl Iterator<Item = u64> + '_ {
        self.a.iter().chain(&self.b).chain(&self.c).copied()
    }

    /// `Err` with the reason if `t` is not above every element or the
    /// elements do not sum to `n t`.
    pub fn precheck(&self) -> Result<(), CtaError> {
        if let Some(x) = self.values().find(|&x| x >= self.t) {
            return Err(CtaError::TrivialNo(format!("element {x} is not below t = {}", self.t)));
        }
        let sum: u128 = self.values().map(u128::from).sum();
        let want = self.n() as u128 * self.t as u128;
        if sum != want {
            return Err(CtaError::TrivialNo(format!("elements sum to {sum}, not n t = {want}")));
        }
        Ok(())
    }
}

impl fmt::Display for N3dmInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        write!(
            f,
            "{} {} | {} | {}",
            self.t,
            join(&self.a),
            join(&self.b),
            join(&self.c)
        )
    }
}

impl FromStr for N3dmInstance {
    type Err = CtaError;

    /// One line `t a1..an | b1..bn | c1..cn`; `#` comments and blank lines
    /// are skipped.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut found = None;
        for (no, raw) in text.lines().enumerate() {
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let line = no + 1;
            if found.is_some() {
                return Err(CtaError::Parse {
                    line,
                    msg: "more than one instance line".into(),
                });
            }
            let err = |msg: String| CtaError::Parse { line, msg };
            let parts: Vec<&str> = content.split('|').collect();
            let [first, second, third] = parts[..] else {
                return Err(err(format!("expected three `|`-separated lists, got {}", parts.len())));
            };
            let nums = |s: &str| -> Result<Vec<u64>, CtaError> {
                s.split_whitespace()
                    .map(|tok| tok.parse().map_err(|_| err(format!("bad number `{tok}`"))))
                    .collect()
            };
            let mut head = nums(first)?;
            if head.is_empty() {
                return Err(err("missing target".into()));
            }
            let t = head.remove(0);
            found = Some(N3dmInstance::new(t, head, nums(second)?, nums(third)?).map_err(|e| err(e.to_string()))?);
        }
        found.ok_or(CtaError::Parse {
            line: 0,
            msg: "no instance line".into(),
        })
    }
}

/// Permutations `(beta, gamma)` of a matching.
pub type Matching = (Vec<usize>, Vec<usize>);

/// Permutations `beta`, `gamma` with `a_i + b_beta(i) + c_gamma(i) = t`
/// for every `i`, or `None`.
pub fn solve_n3dm_bruteforce(inst: &N3dmInstance) -> Result<Option<Matching>, CtaError> {
    let n = inst.n();
    if n > N3DM_CAP {
        return Err(CtaError::TooManyTriples { n, cap: N3DM_CAP });
    }
    fn go(
        i: usize,
        inst: &N3dmInstance,
        used_b: &mut [bool],
        used_c: &mut [bool],
        beta: &mut Vec<usize>,
        gamma: &mut Vec<usize>,
    ) -> bool {
        if i == inst.n() {
            return true;
        }
        for j in 0..inst.n() {
            if used_b[j] || inst.a[i] + inst.b[j] >= inst.t {
                continue;
            }
            let need = inst.t - inst.a[i] - inst.b[j];
            for l in 0..inst.n() {
                if used_c[l] || inst.c[l] != need {
                    continue;
                }
                used_b[j] = true;
                used_c[l] = true;
                beta.push(j);
                gamma.push(l);
                if go(i + 1, inst, used_b, used_c, beta, gamma) {
                    return true;
                }
                beta.pop();
                gamma.pop();
                used_b[j] = false;
                used_c[l] = false;
            }
        }
        false
    }
    let (mut beta, mut gamma) = (Vec::new(), Vec::new());
    let found = go(0, inst, &mut vec![false; n], &mut vec![false; n], &mut beta, &mut gamma);
    Ok(found.then_some((beta, gamma)))
}

/// Padding used by [`gen_cta_from_n3dm`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CtaParams {
    pub n: usize,
    pub d: u32,
    /// `n^{2d}`, added to every small clique.
    pub a: BigUint,
    /// `n^{3d}`, added to every medium clique.
    pub b_pad: BigUint,
    /// `n^{7d}`, added to every large clique.
    pub c: BigUint,
    /// `t + A + B + C`, the order every final clique must reach.
    pub t_prime: BigUint,
}

/// A cluster graph given by its clique orders, and the exact number `k` of
/// edges to add.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CtaInstance {
    pub orders: Vec<BigUint>,
    pub k: BigUint,
    pub params: Option<CtaParams>,
}

fn choose2(x: &BigUint) -> BigUint {
    if x.is_zero() {
        return BigUint::zero();
    }
    x * (x - 1u32) / 2u32
}

impl CtaInstance {
    /// Reads the clique orders off a cluster graph.
    pub fn from_graph(g: &ColoredGraph, k: BigUint) -> Result<Self, CtaError> {
        let orders = g
            .cluster_decomposition()?
            .iter()
            .map(|c| BigUint::from(c.len()))
            .collect();
        Ok(CtaInstance {
            orders,
            k,
            params: None,
        })
    }

    pub fn vertex_count(&self) -> BigUint {
        self.orders.iter().sum()
    }

    pub fn edge_count(&self) -> BigUint {
        self.orders.iter().map(choose2).sum()
    }

    /// Pairs not yet joined by an edge.
    pub fn missing_edges(&self) -> BigUint {
        choose2(&self.vertex_count()) - self.edge_count()
    }

    /// The cliques laid out consecutively in order, all vertices blue.
    /// Fails if the graph would have more than `max_vertices` vertices.
    pub fn to_graph(&self, max_vertices: usize) -> Result<ColoredGraph, CtaError> {
        let total = self.vertex_count();
        let n = total
            .to_usize()
            .filter(|&n| n <= max_vertices)
            .ok_or(CtaError::Overflow)?;
        let mut edges = Vec::new();
        let mut base = 0;
        for order in &self.orders {
            let o = order.to_usize().expect("bounded by the total");
            for i in 0..o {
                for j in i + 1..o {
                    edges.push((base + i, base + j));
                }
            }
            base += o;
        }
        Ok(ColoredGraph::from_edges(vec![Color::Blue; n], edges)?)
    }
}

/// `n^{10d+1}` and `2 n^{10d+1}`, the range the budget of a generated
/// instance falls into.
pub fn budget_bracket(n: usize, d: u32) -> (BigUint, BigUint) {
    let low = BigUint::from(n).pow(10 * d + 1);
    let high = &low * 2u32;
    (low, high)
}

/// Builds the edge-addition instance: cliques of orders `a_i + n^{2d}`
/// (small), `b_i + n^{3d}` (medium) and `c_i + n^{7d}` (large), listed in
/// that order, with `k = n C(t', 2) - |E|`.
pub fn gen_cta_from_n3dm(inst: &N3dmInstance, d: u32) -> Result<CtaInstance, CtaError> {
    let n = inst.n();
    if n < 3 {
        return Err(CtaError::Params(format!("need at least 3 triples, got {n}")));
    }
    if d < 1 {
        return Err(CtaError::Params("d must be at least 1".into()));
    }
    let bound = BigUint::from(n).pow(d);
    if let Some(x) = inst.values().find(|&x| BigUint::from(x) > bound) {
        return Err(CtaError::Params(format!("element {x} exceeds n^d = {bound}")));
    }
    inst.precheck()?;
    let nn = BigUint::from(n);
    let a = nn.pow(2 * d);
    let b_pad = nn.pow(3 * d);
    let c = nn.pow(7 * d);
    let t_prime = BigUint::from(inst.t) + &a + &b_pad + &c;
    let mut orders: Vec<BigUint> = inst.a.iter().map(|&x| BigUint::from(x) + &a).collect();
    orders.extend(inst.b.iter().map(|&x| BigUint::from(x) + &b_pad));
    orders.extend(inst.c.iter().map(|&x| BigUint::from(x) + &c));
    let edges: BigUint = orders.iter().map(choose2).sum();
    let k = &nn * choose2(&t_prime) - edges;
    Ok(CtaInstance {
        orders,
        k,
        params: Some(CtaParams {
            n,
            d,
            a,
            b_pad,
            c,
            t_prime,
        }),
    })
}

/// Calls `visit` with every partition of the cliques whose merging adds
/// exactly `k` edges, as lists of clique indices, blocks ordered by first
/// member. Partitions come in lexicographic order of their restricted
/// growth strings. `visit` returns `false` to stop.
pub fn for_each_cta_witness(
    cta: &CtaInstance,
    clique_cap: usize,
    mut visit: impl FnMut(&[Vec<usize>]) -> bool,
) -> Result<(), CtaError> {
    let m = cta.orders.len();
    if m > clique_cap {
        return Err(CtaError::TooManyCliques {
            cliques: m,
            cap: clique_cap,
        });
    }
    let orders: Vec<u128> = cta
        .orders
        .iter()
        .map(|o| o.to_u128().ok_or(CtaError::Overflow))
        .collect::<Result<_, _>>()?;
    let total: u128 = orders
        .iter()
        .try_fold(0u128, |acc, &o| acc.checked_add(o))
        .ok_or(CtaError::Overflow)?;
    total.checked_mul(total).ok_or(CtaError::Overflow)?;
    let Some(k) = cta.k.to_u128() else {
        // More than any partition can add.
        return Ok(());
    };

    struct State<'a, F> {
        orders: &'a [u128],
        k: u128,
        blocks: Vec<Vec<usize>>,
        sizes: Vec<u128>,
        visit: F,
    }
    impl<F: FnMut(&[Vec<usize>]) -> bool> State<'_, F> {
        fn go(&mut self, i: usize, added: u128) -> bool {
            if i == self.orders.len() {
                return added != self.k || (self.visit)(&self.blocks);
            }
            let o = self.orders[i];
            for b in 0..=self.blocks.len() {
                let extra = if b < self.blocks.len() { o * self.sizes[b] } else { 0 };
                if added + extra > self.k {
                    continue;
                }
                if b == self.blocks.len() {
                    self.blocks.push(vec![i]);
                    self.sizes.push(o);
                } else {
                    self.blocks[b].push(i);
                    self.sizes[b] += o;
                }
                let keep_going = self.go(i + 1, added + extra);
                if b + 1 == self.blocks.len() && self.blocks[b].len() == 1 {
                    self.blocks.pop();
                    self.sizes.pop();
                } else {
                    self.blocks[b].pop();
                    self.sizes[b] -= o;
                }
                if !keep_going {
                    return false;
                }
            }
            true
        }
    }
    let mut state = State {
        orders: &orders,
        k,
        blocks: Vec::new(),
        sizes: Vec::new(),
        visit: &mut visit,
    };
    state.go(0, 0);
    Ok(())
}

/// First witness partition in the order of [`for_each_cta_witness`].
pub fn solve_cta_bruteforce(cta: &CtaInstance, clique_cap: usize) -> Result<Option<Vec<Vec<usize>>>, CtaError> {
    let mut found = None;
    for_each_cta_witness(cta, clique_cap, |p| {
        found = Some(p.to_vec());
        false
    })?;
    Ok(found)
}

/// How a witness partition of a generated instance is composed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessShape {
    pub blocks: usize,
    /// Every block has total order `t'`.
    pub all_blocks_reach_target: bool,
    /// Every block holds exactly one small, one medium and one large
    /// clique.
    pub one_of_each_kind: bool,
}

impl WitnessShape {
    /// The shape a solution of a generated instance must have.
    pub fn is_canonical(&self, n: usize) -> bool {
        self.blocks == n && self.all_blocks_reach_target && self.one_of_each_kind
    }
}

/// Shape of `partition` for an instance built by [`gen_cta_from_n3dm`],
/// whose cliques `0..n` are small, `n..2n` medium and `2n..3n` large.
pub fn witness_shape(cta: &CtaInstance, partition: &[Vec<usize>]) -> Option<WitnessShape> {
    let params = cta.params.as_ref()?;
    let n = params.n;
    let all_blocks_reach_target = partition
        .iter()
        .all(|block| block.iter().map(|&i| &cta.orders[i]).sum::<BigUint>() == params.t_prime);
    let one_of_each_kind = partition.iter().all(|block| {
        let mut kinds = [0usize; 3];
        block.iter().for_each(|&i| kinds[i / n] += 1);
        kinds == [1, 1, 1]
    });
    Some(WitnessShape {
        blocks: partition.len(),
        all_blocks_reach_target,
        one_of_each_kind,
    })
}

impl CtaInstance {
    /// Whether `k` lies in [`budget_bracket`] for the instance parameters.
    pub fn budget_in_bracket(&self) -> Option<bool> {
        let p = self.params.as_ref()?;
        let (low, high) = budget_bracket(p.n, p.d);
        Some(low <= self.k && self.k <= high)
    }
}
