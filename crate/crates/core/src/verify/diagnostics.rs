//! Quantities from the proof of the sharp bound, exposed as checkable diagnostics.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::stats::{StandardizedSample, EPS_STD};

/// Sign structure of a standardized sample.
///
/// `z_1..z_ell < 0`, `z_{m+1}..z_n > 0`, and `a` is the negative mass,
/// which balances the positive mass because `sum z = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ImbalanceDecomposition {
    pub n: usize,
    /// Number of strictly negative entries.
    pub ell: usize,
    /// `n` minus the number of strictly positive entries.
    pub m: usize,
    /// `-sum_{i <= ell} z_i`
    pub a: f64,
    /// `sum_{i > m} z_i`
    pub positive_mass: f64,
}

impl ImbalanceDecomposition {
    /// `n^2 / (n/ell + n/(n - m))`, the Cauchy–Schwarz ceiling on `a^2`.
    pub fn cauchy_schwarz_bound(&self) -> f64 {
        let n = self.n as f64;
        n * n / (n / self.ell as f64 + n / (self.n - self.m) as f64)
    }

    pub fn satisfies_cauchy_schwarz(&self, tol: f64) -> bool {
        self.a * self.a <= self.cauchy_schwarz_bound() + tol
    }

    pub fn masses_balance(&self) -> bool {
        (self.a - self.positive_mass).abs() <= self.n as f64 * EPS_STD
    }
}

/// Entries with `|z| <= EPS_STD` count as zero.
pub fn imbalance_decomposition(z: &StandardizedSample) -> Result<ImbalanceDecomposition> {
    let values = z.values();
    let n = values.len();
    let ell = values.iter().take_while(|&&v| v < -EPS_STD).count();
    let positives = values.iter().rev().take_while(|&&v| v > EPS_STD).count();
    if ell == 0 || positives == 0 {
        return Err(Error::NoSignChange);
    }
    let m = n - positives;
    Ok(ImbalanceDecomposition {
        n,
        ell,
        m,
        a: -values[..ell].iter().sum::<f64>(),
        positive_mass: values[m..].iter().sum(),
    })
}

/// Position of the two middle z-scores of an even-sized sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseLabel {
    /// `z_k + z_{k+1} = 0`
    Zero,
    /// `z_{k+1} > -z_k >= 0`
    I,
    /// `-z_k > z_{k+1} >= 0`
    II,
    /// `0 < z_k <= z_{k+1}`
    III,
    /// `z_k <= z_{k+1} < 0`
    IV,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Zero => "Zero",
            CaseLabel::I => "I",
            CaseLabel::II => "II",
            CaseLabel::III => "III",
            CaseLabel::IV => "IV",
        }
    }
}

/// Classifies the middle pair `(z_k, z_{k+1})` of an even sample `n = 2k`.
pub fn case_classify(z: &StandardizedSample) -> Result<CaseLabel> {
    let n = z.len();
    if n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    let k = n / 2;
    let (lo, hi) = (z.values()[k - 1], z.values()[k]);
    let label = if (lo + hi).abs() <= EPS_STD {
        CaseLabel::Zero
    } else if lo > 0.0 {
        CaseLabel::III
    } else if hi < 0.0 {
        CaseLabel::IV
    } else if hi > -lo {
        // lo <= 0 <= hi from here on
        CaseLabel::I
    } else {
        CaseLabel::II
    };
    Ok(label)
}
