//! Independent ground truth for the embedder.
//!
//! Nothing here trusts the topology module's adjacency: [`validate_cycle`]
//! and [`exists_cycle_bruteforce`] recompute neighbors from the coordinate
//! rule on their own. The campaigns drive the embedder over exhaustive or
//! seeded instance spaces and collect a [`CampaignReport`].

mod brute;
mod campaigns;
mod exec;
mod probes;
mod report;
mod suites;
mod validate;

pub use brute::{
    exists_cycle_bruteforce, exists_cycle_bruteforce_with, Branching, Decision, DEFAULT_BUDGET,
};
pub use campaigns::{
    all_fault_sets_bh2, campaign_adversarial, campaign_exhaustive_bh2, campaign_random,
    campaign_random_bh3, exhaustive_bh2_total, FALLBACK_LABEL,
};
pub use exec::Execution;
pub use probes::{
    counterexample_four_cycle, optimality_probe, verify_counterexample, verify_optimality,
    CounterexampleCheck, OptimalityCheck,
};
pub use report::{CampaignReport, Failure};
pub use suites::{
    mutation_suite, mutations, suite_eight_cycle, suite_family, suite_ham_bh2, suite_splits,
    suite_two_path_bh2, Mutation,
};
pub use validate::{oracle_neighbors, validate_cycle, validate_path, Violation};
