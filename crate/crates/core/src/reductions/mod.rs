//! Generators for hardness instances and small-scale checkers for them.
//!
//! * [`editing`]: fair editing instances built from classic cluster editing,
//!   either by balancing a blue copy with red paths or by attaching a single
//!   red vertex.
//! * [`completion`]: fair completion instances built from edge-addition
//!   instances.
//! * [`cta`]: edge-addition instances built from numerical 3D matching,
//!   with clique orders held symbolically.

pub mod completion;
pub mod cta;
pub mod editing;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::ColoredGraph;
use crate::rational::Rational;

pub use completion::{completion_by_partition, completion_instance_solvable, gen_fcc_from_cta};
pub use cta::{
    budget_bracket, for_each_cta_witness, gen_cta_from_n3dm, solve_cta_bruteforce, solve_n3dm_bruteforce,
    witness_shape, CtaError, CtaInstance, CtaParams, Matching, N3dmInstance, WitnessShape, DEFAULT_CLIQUE_CAP,
    N3DM_CAP,
};
pub use editing::{gen_p3_padding, gen_single_red};

/// Which modifications a generated instance allows, and how the budget is
/// read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Insertions and deletions, at most `k`.
    Editing,
    /// Deletions only, at most `k`.
    Deletion,
    /// Mono-colored insertions only, at most `k`.
    CompletionMonoOnly,
    /// Insertions only, exactly `k`.
    AdditionExact,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Editing => "editing",
            Variant::Deletion => "deletion",
            Variant::CompletionMonoOnly => "completion-mono-only",
            Variant::AdditionExact => "addition-exact",
        }
    }

    /// Whether the budget is an exact count rather than an upper bound.
    pub fn exact_budget(self) -> bool {
        matches!(self, Variant::AdditionExact)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown variant `{0}`")]
pub struct UnknownVariant(pub String);

impl FromStr for Variant {
    type Err = UnknownVariant;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Variant::Editing,
            Variant::Deletion,
            Variant::CompletionMonoOnly,
            Variant::AdditionExact,
        ]
        .into_iter()
        .find(|v| v.name() == s)
        .ok_or_else(|| UnknownVariant(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairInstance {
    pub graph: ColoredGraph,
    pub k: usize,
    pub delta: Rational,
    pub variant: Variant,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("no vertex of degree six")]
    NoDegreeSixVertex,
    #[error("source has {n} vertices, but the construction needs fewer than 2k = {twice_k}")]
    SourceTooLarge { n: usize, twice_k: usize },
    #[error("budget {k} exceeds the {missing} missing edges")]
    BudgetTooLarge { k: String, missing: String },
    #[error("red graph would need {edges} edges, fewer than its {vertices} vertices")]
    RedGraphTooSparse { edges: i128, vertices: usize },
    #[error("instance with {vertices} vertices is too large to build")]
    TooLarge { vertices: String },
    #[error("delta must be non-negative")]
    NegativeDelta,
}
