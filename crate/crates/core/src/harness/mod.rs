//! Enumeration of left-compressed graphs and verification sweeps.

pub mod claims;
pub mod enumerate;
pub mod report;

pub use claims::{
    run_claim, sharpness_weighting, vertex_pair_link_inequality, verify_clique_equality,
    verify_clique_free_strict, verify_clique_two_short_bounded, verify_colex_optimality,
    verify_colex_range, verify_four_graph_clique_equality, verify_max_clique_two_short_strict,
    verify_near_clique_strict, verify_near_colex_strict, verify_sharpness,
    verify_small_pair_link_strict, ClaimId, ClaimRequest, HarnessConfig, PairLinkInequality,
};
pub use enumerate::{
    enumerate_left_compressed, enumerate_left_compressed_any_order, for_each_left_compressed,
    EnumerationBudget,
};
pub use report::{sig15, InstanceRecord, MarginSummary, Relation, Verdict, VerdictCounts, VerificationReport, Witness};
