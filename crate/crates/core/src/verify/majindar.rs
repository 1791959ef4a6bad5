use serde::Serialize;

use crate::bounds::{majindar_bound, ProbabilitySplit};
use crate::error::{Error, Result};
use crate::verify::REPORT_TOLERANCE;

/// Tolerance for probability sums and cumulative-mass comparisons.
const PROB_TOL: f64 = 1e-12;

/// Finite-support distribution with distinct, sorted support points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscreteDistribution {
    atoms: Vec<(f64, f64)>,
}

impl DiscreteDistribution {
    /// Takes `(value, probability)` pairs in any order.
    pub fn new(mut atoms: Vec<(f64, f64)>) -> Result<Self> {
        if atoms.len() < 2 {
            return Err(Error::InvalidDistribution("need at least two atoms".into()));
        }
        for &(x, p) in &atoms {
            if !x.is_finite() {
                return Err(Error::InvalidDistribution(format!("non-finite value {x}")));
            }
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::InvalidDistribution(format!(
                    "probability {p} outside (0, 1]"
                )));
            }
        }
        atoms.sort_by(|a, b| a.0.total_cmp(&b.0));
        if atoms.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidDistribution(
                "support values must be distinct".into(),
            ));
        }
        let total: f64 = atoms.iter().map(|a| a.1).sum();
        if (total - 1.0).abs() > PROB_TOL {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {total}"
            )));
        }
        Ok(Self { atoms })
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn mean(&self) -> f64 {
        self.atoms.iter().map(|(x, p)| x * p).sum()
    }

    pub fn variance(&self) -> f64 {
        let mean = self.mean();
        self.atoms.iter().map(|(x, p)| p * (x - mean).powi(2)).sum()
    }

    /// Midpoint of the median interval `{m : P(X <= m) >= 1/2, P(X >= m) >= 1/2}`.
    pub fn median(&self) -> f64 {
        let mut below = 0.0;
        let mut lower = None;
        let mut upper = self.atoms[0].0;
        for &(x, p) in &self.atoms {
            // `below` is P(X < x) here, so P(X >= x) = 1 - below.
            if 1.0 - below >= 0.5 - PROB_TOL {
                upper = x;
            }
            below += p;
            if lower.is_none() && below >= 0.5 - PROB_TOL {
                lower = Some(x);
            }
        }
        let lower = lower.unwrap_or(self.atoms[self.atoms.len() - 1].0);
        (lower + upper) / 2.0
    }
}

/// Outcome of comparing a distribution's skewness ratio with Majindar's bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MajindarCheck {
    pub mean: f64,
    pub variance: f64,
    pub median: f64,
    /// `P(X > E[X])`
    pub p: f64,
    /// `P(X < E[X])`
    pub q: f64,
    /// `|E[X] - M| / sd`
    pub ratio: f64,
    pub bound: f64,
    pub ok: bool,
    /// `|ratio - bound|` within tolerance.
    pub boundary: bool,
}

pub fn majindar_check(dist: &DiscreteDistribution) -> Result<MajindarCheck> {
    let mean = dist.mean();
    let variance = dist.variance();
    let span = dist.atoms[dist.atoms.len() - 1].0 - dist.atoms[0].0;
    if variance.is_nan() || variance <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    // An atom sitting on the mean (up to roundoff) belongs to neither side.
    let at_mean = PROB_TOL * span.max(mean.abs()).max(1.0);
    let p: f64 = dist
        .atoms
        .iter()
        .filter(|a| a.0 > mean + at_mean)
        .map(|a| a.1)
        .sum();
    let q: f64 = dist
        .atoms
        .iter()
        .filter(|a| a.0 < mean - at_mean)
        .map(|a| a.1)
        .sum();
    if p <= 0.0 || q <= 0.0 {
        return Err(Error::MeanAtomExhaustive { p, q });
    }
    // p + q can exceed 1 by roundoff only.
    let split = ProbabilitySplit::new(p, q.min(1.0 - p))?;
    let median = dist.median();
    let ratio = (mean - median).abs() / variance.sqrt();
    let bound = majindar_bound(split);
    Ok(MajindarCheck {
        mean,
        variance,
        median,
        p,
        q,
        ratio,
        bound,
        ok: ratio <= bound + REPORT_TOLERANCE,
        boundary: (ratio - bound).abs() <= REPORT_TOLERANCE,
    })
}
