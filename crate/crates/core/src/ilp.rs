//! Integer program for fair cluster editing, as LP text.
//!
//! One binary `x_i_j` per pair says whether the final graph has the edge.
//! The modification indicator is affine in it: `z = x` on non-edges and
//! `z = 1 - x` on edges, so no extra variables are needed. Rows:
//!
//! * for every triple `i < j < l`, the three rows `x_ij + x_jl - x_il <= 1`
//!   taken cyclically, which forbid an induced path;
//! * optionally `sum z <= k`;
//! * optionally the two rows `+-(|B| sum_R ed - |R| sum_B ed) <= delta |R||B|`,
//!   multiplied by the denominator of `delta` so every coefficient is an
//!   integer.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::fairness::{fairness_report, FairnessReport, FairnessScale};
use crate::graph::{Color, ColoredGraph, GraphError, ModificationSet, Pair};
use crate::rational::Rational;

/// Default variable cap of [`mini_ilp_solve`], enough for seven vertices.
pub const DEFAULT_VAR_CAP: usize = 21;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IlpError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("model has {vars} variables, above the cap of {cap}")]
    TooManyVariables { vars: usize, cap: usize },
    #[error("model is infeasible")]
    Infeasible,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A row `sum coef * x <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub name: String,
    pub terms: Vec<(i64, usize)>,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpModel {
    /// Variable `i` is `x_{vars[i]}`; pairs in ascending order.
    pub vars: Vec<Pair>,
    /// Objective coefficient of each variable.
    pub objective: Vec<i64>,
    pub objective_constant: i64,
    pub rows: Vec<Row>,
}

fn var_name(p: Pair) -> String {
    format!("x_{}_{}", p.lo(), p.hi())
}

/// Builds the model for `g` with an optional budget and fairness bound.
pub fn build_model(g: &ColoredGraph, k: Option<usize>, delta: Option<Rational>) -> Result<IlpModel, IlpError> {
    let n = g.n();
    let vars: Vec<Pair> = g.all_pairs().collect();
    let index: BTreeMap<Pair, usize> = vars.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let x = |u: usize, v: usize| index[&Pair::new(u, v)];

    // z_p = x_p on non-edges, 1 - x_p on edges.
    let sign: Vec<i64> = vars
        .iter()
        .map(|p| if g.has_edge(p.lo(), p.hi()) { -1 } else { 1 })
        .collect();
    let offset: Vec<i64> = sign.iter().map(|&s| if s < 0 { 1 } else { 0 }).collect();
    let objective = sign.clone();
    let objective_constant: i64 = offset.iter().sum();

    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let (ij, jl, il) = (x(i, j), x(j, l), x(i, l));
                for (tag, plus_a, plus_b, minus) in [("a", ij, jl, il), ("b", ij, il, jl), ("c", il, jl, ij)] {
                    rows.push(Row {
                        name: format!("t_{i}_{j}_{l}_{tag}"),
                        terms: vec![(1, plus_a), (1, plus_b), (-1, minus)],
                        rhs: 1,
                    });
                }
            }
        }
    }

    // sum c_p z_p <= bound, rewritten over x.
    let affine_row = |name: &str, coef: &[i64], bound: i64| {
        let mut terms = Vec::new();
        let mut constant = 0;
        for (i, &c) in coef.iter().enumerate() {
            if c != 0 {
                terms.push((c * sign[i], i));
                constant += c * offset[i];
            }
        }
        Row {
            name: name.to_string(),
            terms,
            rhs: bound - constant,
        }
    };

    if let Some(k) = k {
        rows.push(affine_row("budget", &vec![1; vars.len()], k as i64));
    }
    if let Some(delta) = delta {
        let scale = FairnessScale::of(g)?;
        let (reds, blues) = (scale.reds() as i64, scale.blues() as i64);
        let q = delta.denom();
        // Contribution of one pair to |B| sum_R ed - |R| sum_B ed.
        let coef: Vec<i64> = vars
            .iter()
            .map(|p| {
                let r = [p.lo(), p.hi()].iter().filter(|&&v| g.color(v) == Color::Red).count() as i64;
                q * (blues * r - reds * (2 - r))
            })
            .collect();
        let bound = delta.numer() * reds * blues;
        let negated: Vec<i64> = coef.iter().map(|c| -c).collect();
        rows.push(affine_row("fair_pos", &coef, bound));
        rows.push(affine_row("fair_neg", &negated, bound));
    }
    Ok(IlpModel {
        vars,
        objective,
        objective_constant,
        rows,
    })
}

fn write_terms(out: &mut String, terms: impl IntoIterator<Item = (i64, String)>) -> bool {
    let mut any = false;
    for (c, name) in terms {
        if c == 0 {
            continue;
        }
        if any {
            out.push(' ');
        }
        match (c < 0, any) {
            (true, _) => out.push_str("- "),
            (false, true) => out.push_str("+ "),
            (false, false) => {}
        }
        match c.abs() {
            1 => out.push_str(&name),
            a => write!(out, "{a} {name}").unwrap(),
        }
        any = true;
    }
    any
}

impl IlpModel {
    /// LP text: `Minimize`, `Subject To`, `Binary`, `End` sections.
    pub fn to_lp(&self) -> String {
        let mut out = String::from("Minimize\n obj:");
        let mut body = String::new();
        let any = write_terms(
            &mut body,
            self.objective.iter().zip(&self.vars).map(|(&c, &p)| (c, var_name(p))),
        );
        if !body.is_empty() {
            out.push(' ');
            out.push_str(&body);
        }
        match (any, self.objective_constant) {
            (false, c) => write!(out, " {c}").unwrap(),
            (true, 0) => {}
            (true, c) if c < 0 => write!(out, " - {}", -c).unwrap(),
            (true, c) => write!(out, " + {c}").unwrap(),
        }
        out.push_str("\nSubject To\n");
        for row in &self.rows {
            let mut body = String::new();
            write_terms(&mut body, row.terms.iter().map(|&(c, i)| (c, var_name(self.vars[i]))));
            if body.is_empty() {
                body.push('0');
            }
            writeln!(out, " {}: {} <= {}", row.name, body, row.rhs).unwrap();
        }
        out.push_str("Binary\n");
        for &p in &self.vars {
            writeln!(out, " {}", var_name(p)).unwrap();
        }
        out.push_str("End\n");
        out
    }

    /// Reads back text written by [`IlpModel::to_lp`].
    pub fn parse_lp(text: &str) -> Result<IlpModel, IlpError> {
        parse_lp(text)
    }

    fn objective_value(&self, x: &[bool]) -> i64 {
        self.objective_constant
            + self
                .objective
                .iter()
                .zip(x)
                .filter(|(_, &b)| b)
                .map(|(c, _)| c)
                .sum::<i64>()
    }
}

/// The LP text of [`build_model`].
pub fn export_lp(g: &ColoredGraph, k: Option<usize>, delta: Option<Rational>) -> Result<String, IlpError> {
    Ok(build_model(g, k, delta)?.to_lp())
}

#[derive(PartialEq)]
enum Section {
    None,
    Objective,
    Rows,
    Binary,
    End,
}

/// Parses a linear expression of `+`/`-` separated terms `[coef] name` or
/// bare integer constants.
fn parse_expr(s: &str, line: usize) -> Result<(Vec<(i64, String)>, i64), IlpError> {
    let err = |msg: String| IlpError::Parse { line, msg };
    let mut terms = Vec::new();
    let mut constant = 0i64;
    let mut sign = 1i64;
    let mut coef: Option<i64> = None;
    for tok in s.split_whitespace() {
        if tok == "+" || tok == "-" {
            if let Some(c) = coef.take() {
                constant += sign * c;
                sign = 1;
            }
            if tok == "-" {
                sign = -sign;
            }
        } else if tok.starts_with(|c: char| c.is_ascii_digit()) {
            if coef.is_some() {
                return Err(err(format!("two numbers in a row at `{tok}`")));
            }
            coef = Some(tok.parse().map_err(|_| err(format!("bad number `{tok}`")))?);
        } else if tok.starts_with("x_") {
            terms.push((sign * coef.take().unwrap_or(1), tok.to_string()));
            sign = 1;
        } else {
            return Err(err(format!("unexpected token `{tok}`")));
        }
    }
    if let Some(c) = coef {
        constant += sign * c;
    }
    Ok((terms, constant))
}

fn parse_var(name: &str, line: usize) -> Result<Pair, IlpError> {
    let err = || IlpError::Parse {
        line,
        msg: format!("bad variable name `{name}`"),
    };
    let rest = name.strip_prefix("x_").ok_or_else(err)?;
    let (a, b) = rest.split_once('_').ok_or_else(err)?;
    let (a, b): (usize, usize) = (a.parse().map_err(|_| err())?, b.parse().map_err(|_| err())?);
    Pair::try_new(a, b).ok().filter(|p| p.lo() == a).ok_or_else(err)
}

fn parse_lp(text: &str) -> Result<IlpModel, IlpError> {
    let mut section = Section::None;
    let mut objective_raw = Vec::new();
    let mut objective_constant = 0;
    let mut rows_raw = Vec::new();
    let mut binaries = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let content = raw.split('\\').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: &str| IlpError::Parse {
            line,
            msg: msg.to_string(),
        };
        match content {
            "Minimize" => section = Section::Objective,
            "Subject To" => section = Section::Rows,
            "Binary" => section = Section::Binary,
            "End" => section = Section::End,
            _ => match section {
                Section::Objective => {
                    let body = content.split_once(':').map_or(content, |(_, b)| b);
                    let (terms, c) = parse_expr(body, line)?;
                    objective_raw.extend(terms.into_iter().map(|t| (t, line)));
                    objective_constant += c;
                }
                Section::Rows => {
                    let (name, body) = content.split_once(':').ok_or_else(|| err("row without a name"))?;
                    let (lhs, rhs) = body.split_once("<=").ok_or_else(|| err("row without `<=`"))?;
                    let rhs: i64 = rhs.trim().parse().map_err(|_| err("bad right-hand side"))?;
                    let (terms, c) = parse_expr(lhs, line)?;
                    rows_raw.push((name.trim().to_string(), terms, rhs - c, line));
                }
                Section::Binary => {
                    for name in content.split_whitespace() {
                        binaries.push((parse_var(name, line)?, line));
                    }
                }
                Section::None | Section::End => return Err(err("text outside of a section")),
            },
        }
    }
    let vars: Vec<Pair> = binaries.iter().map(|&(p, _)| p).collect();
    let mut index = BTreeMap::new();
    for (i, &(p, line)) in binaries.iter().enumerate() {
        if index.insert(p, i).is_some() {
            return Err(IlpError::Parse {
                line,
                msg: format!("variable {} declared twice", var_name(p)),
            });
        }
    }
    let lookup = |name: &str, line: usize| -> Result<usize, IlpError> {
        let p = parse_var(name, line)?;
        index.get(&p).copied().ok_or(IlpError::Parse {
            line,
            msg: format!("undeclared variable `{name}`"),
        })
    };
    let mut objective = vec![0; vars.len()];
    for ((c, name), line) in objective_raw {
        objective[lookup(&name, line)?] += c;
    }
    let mut rows = Vec::new();
    for (name, terms, rhs, line) in rows_raw {
        let terms = terms
            .iter()
            .map(|(c, v)| Ok((*c, lookup(v, line)?)))
            .collect::<Result<_, IlpError>>()?;
        rows.push(Row { name, terms, rhs });
    }
    Ok(IlpModel {
        vars,
        objective,
        objective_constant,
        rows,
    })
}

/// A 0/1 value for every pair variable.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IlpSolution {
    pub assignment: BTreeMap<Pair, bool>,
    pub objective: Option<i64>,
}

impl IlpSolution {
    /// Lines `x_i_j 0|1`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (&p, &b) in &self.assignment {
            writeln!(out, "{} {}", var_name(p), u8::from(b)).unwrap();
        }
        out
    }
}

/// Exhaustive search, variables in order with 0 tried before 1. Rows are
/// checked as soon as they can no longer be satisfied, and branches that
/// cannot beat the incumbent objective are cut. Returns the first optimum
/// in that order.
pub fn mini_ilp_solve(model: &IlpModel, var_cap: usize) -> Result<IlpSolution, IlpError> {
    let nv = model.vars.len();
    if nv > var_cap {
        return Err(IlpError::TooManyVariables { vars: nv, cap: var_cap });
    }
    let mut touching: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nv];
    // Activity of each row so far, and the least the unassigned part can add.
    let activity = vec![0i64; model.rows.len()];
    let mut slack_min = vec![0i64; model.rows.len()];
    for (r, row) in model.rows.iter().enumerate() {
        for &(c, v) in &row.terms {
            touching[v].push((r, c));
            slack_min[r] += c.min(0);
        }
    }
    if model.rows.iter().enumerate().any(|(r, row)| slack_min[r] > row.rhs) {
        return Err(IlpError::Infeasible);
    }
    // Least objective change achievable from variables i.. on.
    let mut obj_floor = vec![0i64; nv + 1];
    for i in (0..nv).rev() {
        obj_floor[i] = obj_floor[i + 1] + model.objective[i].min(0);
    }

    struct Search<'m> {
        model: &'m IlpModel,
        touching: Vec<Vec<(usize, i64)>>,
        activity: Vec<i64>,
        slack_min: Vec<i64>,
        obj_floor: Vec<i64>,
        x: Vec<bool>,
        best: Option<(i64, Vec<bool>)>,
    }

    impl Search<'_> {
        fn dfs(&mut self, i: usize, obj: i64) {
            if let Some((best, _)) = &self.best {
                if obj + self.obj_floor[i] >= *best {
                    return;
                }
            }
            if i == self.x.len() {
                self.best = Some((obj, self.x.clone()));
                return;
            }
            for value in [false, true] {
                let mut ok = true;
                for &(r, c) in &self.touching[i] {
                    self.slack_min[r] -= c.min(0);
                    if value {
                        self.activity[r] += c;
                    }
                    if self.activity[r] + self.slack_min[r] > self.model.rows[r].rhs {
                        ok = false;
                    }
                }
                if ok {
                    self.x[i] = value;
                    let gain = if value { self.model.objective[i] } else { 0 };
                    self.dfs(i + 1, obj + gain);
                    self.x[i] = false;
                }
                for &(r, c) in &self.touching[i] {
                    self.slack_min[r] += c.min(0);
                    if value {
                        self.activity[r] -= c;
                    }
                }
            }
        }
    }

    let mut search = Search {
        model,
        touching,
        activity,
        slack_min,
        obj_floor,
        x: vec![false; nv],
        best: None,
    };
    search.dfs(0, model.objective_constant);
    let (objective, x) = search.best.ok_or(IlpError::Infeasible)?;
    debug_assert_eq!(objective, model.objective_value(&x));
    Ok(IlpSolution {
        assignment: model.vars.iter().copied().zip(x).collect(),
        objective: Some(objective),
    })
}

/// Parses lines `x_i_j 0|1` in any order; `#` starts a comment.
pub fn parse_solution(text: &str) -> Result<IlpSolution, IlpError> {
    let mut assignment = BTreeMap::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: String| IlpError::Parse { line, msg };
        let mut parts = content.split_whitespace();
        let (Some(name), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(format!("expected `x_i_j 0|1`, got `{content}`")));
        };
        let p = parse_var(name, line)?;
        let value = match value {
            "0" => false,
            "1" => true,
            other => return Err(err(format!("value `{other}` is not 0 or 1"))),
        };
        if assignment.insert(p, value).is_some() {
            return Err(err(format!("{name} assigned twice")));
        }
    }
    Ok(IlpSolution {
        assignment,
        objective: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no value for x_{}_{}", .0.lo(), .0.hi())]
    Missing(Pair),
    #[error("pair {}-{} lies outside the {n}-vertex graph", .pair.lo(), .pair.hi())]
    UnknownPair { pair: Pair, n: usize },
    #[error("assignment is not a cluster graph: induced path {0}-{1}-{2}")]
    NotCluster(usize, usize, usize),
    #[error("{size} modifications exceed the budget {k}")]
    OverBudget { size: usize, k: usize },
    #[error("diff {diff} exceeds delta {delta}")]
    Unfair { diff: Rational, delta: Rational },
}

/// Checks an external solution and returns the fairness report of the
/// modification set it encodes.
pub fn verify_solution(
    g: &ColoredGraph,
    sol: &IlpSolution,
    k: Option<usize>,
    delta: Option<Rational>,
) -> Result<FairnessReport, VerifyError> {
    if let Some((&pair, _)) = sol.assignment.iter().find(|(p, _)| p.hi() >= g.n()) {
        return Err(VerifyError::UnknownPair { pair, n: g.n() });
    }
    let mut s = ModificationSet::new();
    for p in g.all_pairs() {
        let &x = sol.assignment.get(&p).ok_or(VerifyError::Missing(p))?;
        if x != g.has_edge(p.lo(), p.hi()) {
            s.insert(p);
        }
    }
    if let Some((u, v, w)) = g.apply(&s)?.find_p3() {
        return Err(VerifyError::NotCluster(u, v, w));
    }
    if let Some(k) = k {
        if s.len() > k {
            return Err(VerifyError::OverBudget { size: s.len(), k });
        }
    }
    let report = fairness_report(g, &s)?;
    if let Some(delta) = delta {
        if report.diff > delta {
            return Err(VerifyError::Unfair {
                diff: report.diff,
                delta,
            });
        }
    }
    Ok(report)
}
