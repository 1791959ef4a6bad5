//! Numerical verification of the bounds.

mod diagnostics;
mod majindar;
mod search;
mod sweep;

use serde::Serialize;

pub use diagnostics::{case_classify, imbalance_decomposition, CaseLabel, ImbalanceDecomposition};
pub use majindar::{majindar_check, DiscreteDistribution, MajindarCheck};
pub use search::{random_search_max, SearchResult};
pub use sweep::{two_block_sweep, SweepResult};

use crate::bounds::{classical_bound, sharp_bound};
use crate::error::{Error, Result};
use crate::stats::{Sample, EPS_STD};

/// Slack at or below which a sample counts as extremal.
pub const REPORT_TOLERANCE: f64 = 1e-9;

/// Skewness ratio of a sample against the classical and sharp bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub ratio: f64,
    pub classical: f64,
    pub sharp: f64,
    /// `sharp - |ratio|`
    pub slack: f64,
    pub is_extremal: bool,
    /// Only for even `n`.
    pub case_label: Option<CaseLabel>,
}

impl BoundReport {
    /// Both bounds hold up to `EPS_STD`.
    pub fn bounds_hold(&self) -> bool {
        self.ratio.abs() <= self.classical + EPS_STD && self.ratio.abs() <= self.sharp + EPS_STD
    }
}

pub fn check_sample(sample: &Sample) -> Result<BoundReport> {
    let n = sample.len();
    if n < 3 {
        return Err(Error::InvalidN { n, min: 3 });
    }
    let ratio = sample.skewness()?;
    let sharp = sharp_bound(n)?;
    let slack = sharp - ratio.abs();
    let case_label = if n.is_multiple_of(2) {
        Some(case_classify(&sample.standardize()?)?)
    } else {
        None
    };
    Ok(BoundReport {
        n,
        ratio,
        classical: classical_bound(),
        sharp,
        slack,
        is_extremal: slack <= REPORT_TOLERANCE,
        case_label,
    })
}
