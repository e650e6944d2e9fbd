//! Parameter diminishers, strict kernels and a strict Turing kernel for
//! triangle-finding problems (Negative Weight Triangle, Triangle Collection)
//! and small-pattern subgraph isomorphism.
//!
//! Every transformation keeps a provenance map to the input graph, and the
//! [`oracle`] module provides brute-force deciders to check that answers are
//! preserved.

pub mod diminishers;
pub mod edge_coloring;
pub mod error;
pub mod generate;
pub mod gkf;
pub mod graph;
pub mod instance;
pub mod kernelize;
pub mod oracle;
pub mod solvers;
pub mod suite;
pub mod turing_kernel;

pub use diminishers::{
    diminish, verify_diminisher, DiminishOutcome, DiminishStats, DiminisherConfig, EdgeBudget,
};
pub use edge_coloring::{greedy_edge_color, EdgeColoring};
pub use error::{Error, Result};
pub use graph::{disjoint_union, DegeneracyOrdering, Graph, ProvenanceMap};
pub use instance::{Instance, ParamKind, Pattern, ProblemKind};
pub use kernelize::{interleave_solve, strict_kernel, trivial_instance, Epsilon};
pub use solvers::{solve, solve_hsi, solve_nwt, solve_per_component, solve_tc, TcAnswer};
pub use turing_kernel::{ball, turing_solve};
