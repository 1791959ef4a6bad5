//! Sharp, sample-size-dependent bounds on the nonparametric skewness
//! `(median - mean) / sd` of a finite sample.
//!
//! The classical Hotelling–Solomons inequality caps `|median - mean| / sd` at 1.
//! For a sample of size `n = 2k + 1` the exact ceiling is `sqrt(k / (k + 1))`,
//! and for `n = 2k` it is `sqrt((k - 1) / (k + 1))`. Both are attained by
//! two-level ("two-block") samples.
//!
//! Modules:
//! - [`stats`]: sample type, mean / population sd / median, standardization
//!   and the deviation chain `|med - mean| <= mad(med) <= mad(mean) <= sd`.
//! - [`bounds`]: closed-form bounds (classical, sharp, order-statistic
//!   ranges, Majindar's probabilistic bound and its comparison lemma).
//! - [`extremal`]: two-block configurations and the extremal samples.
//! - [`verify`]: brute-force sweep oracle, randomized optimizer, and the
//!   diagnostics used to check the bounds numerically.
//! - [`corpus`]: seeded random samples and distributions for verification.

pub mod bounds;
pub mod corpus;
mod error;
pub mod extremal;
pub mod stats;
pub mod verify;

pub use bounds::{
    classical_bound, lemma_pq_terms, majindar_bound, order_stat_range, sharp_bound, LemmaTerms,
    OrderStatRange, ProbabilitySplit,
};
pub use error::{Error, Result};
pub use extremal::{extremal_z, rescale, two_block_z, Sign, TwoBlockConfig};
pub use stats::{ChainTerms, Divisor, Sample, StandardizedSample, SummaryStats, EPS_STD};
pub use verify::{
    case_classify, check_sample, imbalance_decomposition, majindar_check, random_search_max,
    two_block_sweep, BoundReport, CaseLabel, DiscreteDistribution, ImbalanceDecomposition,
    MajindarCheck, SearchResult, SweepResult, REPORT_TOLERANCE,
};
