//! Exact algorithms for cluster editing under a modification-fairness
//! constraint on red/blue-colored graphs.

pub mod bench;
pub mod fairness;
pub mod graph;
pub mod ilp;
pub mod io;
pub mod rational;
pub mod reductions;
pub mod solvers;

pub use fairness::{fairness_report, EditCounts, FairnessReport, FairnessScale};
pub use graph::{Color, ColoredGraph, GraphError, ModificationSet, Pair};
pub use rational::Rational;
