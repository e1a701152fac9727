//! Nested blow-up graphs and exact induced 4-cycle counts.
//!
//! * [`graph`] builds base graphs, compositions `G[H]` and the nested
//!   blow-up hierarchy `G_N = G[G_{N-1}]` over packed bit-rows.
//! * [`count`] counts induced 4-cycles by two independent algorithms.
//! * [`formulas`] evaluates the non-edge, recurrence, partial-sum and closed
//!   forms of the count for the C4 and Θ(2,2,2) families in exact integers.
//! * [`verify`] cross-checks all of the above level by level and produces a
//!   machine-readable report.

pub mod count;
pub mod edge_list;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod tables;
pub mod verify;

pub use count::{
    count_both_and_check, count_induced_c4_diagonal, count_induced_c4_enum, AgreedCount,
    CountResult, Method,
};
pub use edge_list::{read_edge_list, write_edge_list};
pub use error::{CountError, FormulaError, GraphError, VerifyError};
pub use formulas::{ExactInt, ExactRational, Family, FormulaVariant, TermBreakdown};
pub use graph::{
    blob_of, compose, cycle_graph, nested_blowup, theta_222, BaseGraph, BlowupSpec, Graph, NonEdge,
};
pub use verify::{run_verify, RunConfig, VerificationReport};
