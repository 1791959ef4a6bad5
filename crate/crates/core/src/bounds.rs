//! Closed-form bounds on standardized order statistics and on the skewness ratio.

use serde::Serialize;

use crate::error::{Error, Result};

/// The Hotelling–Solomons bound: `|median - mean| / sd <= 1` for any sample.
pub fn classical_bound() -> f64 {
    1.0
}

/// Exact ceiling of `|median - mean| / sd` for samples of size `n`.
///
/// `n = 2k + 1` gives `sqrt(k / (k + 1))`, `n = 2k` gives `sqrt((k - 1) / (k + 1))`.
/// Defined for `n = 2` as well, where it is 0 (median and mean coincide).
pub fn sharp_bound(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidN { n, min: 2 });
    }
    let k = (n / 2) as f64;
    let ratio = if n % 2 == 1 {
        k / (k + 1.0)
    } else {
        (k - 1.0) / (k + 1.0)
    };
    Ok(ratio.sqrt())
}

/// Feasible interval for the `i`-th standardized order statistic `(x_(i) - mean) / sd`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrderStatRange {
    pub lo: f64,
    pub hi: f64,
}

impl OrderStatRange {
    pub fn contains(&self, z: f64, tol: f64) -> bool {
        self.lo - tol <= z && z <= self.hi + tol
    }
}

/// Range of the `i`-th (1-indexed) standardized order statistic in a sample of size `n`.
///
/// The minimum and maximum have one-signed ranges; interior indices use the
/// generic formula.
pub fn order_stat_range(n: usize, i: usize) -> Result<OrderStatRange> {
    if n < 2 {
        return Err(Error::InvalidN { n, min: 2 });
    }
    if i == 0 || i > n {
        return Err(Error::InvalidIndex { n, i });
    }
    let nf = n as f64;
    let fi = i as f64;
    let range = if i == 1 {
        OrderStatRange {
            lo: -(nf - 1.0).sqrt(),
            hi: -(1.0 / (nf - 1.0)).sqrt(),
        }
    } else if i == n {
        OrderStatRange {
            lo: (1.0 / (nf - 1.0)).sqrt(),
            hi: (nf - 1.0).sqrt(),
        }
    } else {
        OrderStatRange {
            lo: -((nf - fi) / fi).sqrt(),
            hi: ((fi - 1.0) / (nf + 1.0 - fi)).sqrt(),
        }
    };
    Ok(range)
}

/// Masses above (`p`) and below (`q`) the mean of a distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbabilitySplit {
    p: f64,
    q: f64,
}

impl ProbabilitySplit {
    /// Requires `p > 0`, `q > 0`, `p + q <= 1`.
    pub fn new(p: f64, q: f64) -> Result<Self> {
        let valid = p.is_finite() && q.is_finite() && p > 0.0 && q > 0.0 && p + q <= 1.0;
        if !valid {
            return Err(Error::InvalidSplit { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }
}

/// Majindar's bound `2 sqrt(pq / (p + q))` on `|E[X] - M| / sd`.
pub fn majindar_bound(split: ProbabilitySplit) -> f64 {
    2.0 * lemma_pq_terms(split).lhs.sqrt()
}

/// Harmonic term `pq / (p + q)` next to the three quantities it is dominated by.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LemmaTerms {
    /// `pq / (p + q) = 1 / (1/p + 1/q)`
    pub lhs: f64,
    /// `p (1 - p)`
    pub a1: f64,
    /// `q (1 - q)`
    pub a2: f64,
    /// `(p + q) / 4`
    pub a3: f64,
}

impl LemmaTerms {
    pub fn min_rhs(&self) -> f64 {
        self.a1.min(self.a2).min(self.a3)
    }

    pub fn holds(&self, tol: f64) -> bool {
        self.lhs <= self.min_rhs() + tol
    }
}

pub fn lemma_pq_terms(split: ProbabilitySplit) -> LemmaTerms {
    let ProbabilitySplit { p, q } = split;
    LemmaTerms {
        lhs: 1.0 / (1.0 / p + 1.0 / q),
        a1: p * (1.0 - p),
        a2: q * (1.0 - q),
        a3: (p + q) / 4.0,
    }
}
