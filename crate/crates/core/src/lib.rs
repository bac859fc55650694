//! Lagrangians of r-uniform hypergraphs.
//!
//! The Lagrangian of an r-graph `G` on `[n]` is the maximum of
//! `λ(G, x) = Σ_{e ∈ E} Π_{i ∈ e} x_i` over the standard simplex. This crate
//! provides the combinatorial machinery around it (colex order, descendants,
//! left-compression, links, cliques), a multistart solver that reports
//! first-order residuals, and a harness that sweeps families of
//! left-compressed graphs against closed-form bounds.

pub mod clique;
pub mod compression;
pub mod error;
pub mod harness;
pub mod hypergraph;
pub mod lagrangian;
pub mod link;
pub mod rset;
pub mod solver;
pub mod weighting;

pub use clique::{contains_near_clique, is_clique, max_clique, max_clique_order, maximal_cliques};
pub use compression::{is_left_compressed, left_compress};
pub use error::{Error, Result};
pub use hypergraph::RUniformHypergraph;
pub use lagrangian::{
    complete_lagrangian, complete_lagrangian_exact, evaluate, growth_step, kkt_residual,
    motzkin_straus, motzkin_straus_value, CliqueBound,
};
pub use link::{link, link_value, LinkView};
pub use rset::{colex_compare, RSet};
pub use solver::{minimize_support, solve, SolveReport, SolverConfig, SupportReduction};
pub use weighting::Weighting;
