//! Two-level standardized samples and the configurations attaining the sharp bound.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::stats::{Sample, StandardizedSample};

/// Direction of the skewness: `Positive` means the median lies above the mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Positive => 1.0,
            Sign::Negative => -1.0,
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        match value {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(Error::InvalidParams(format!(
                "sign must be +1 or -1, got {other}"
            ))),
        }
    }
}

/// `j` copies of `low` followed by `n - j` copies of `high`, centered and
/// scaled so that `sum z = 0` and `sum z^2 = n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwoBlockConfig {
    pub n: usize,
    pub j: usize,
    pub low: f64,
    pub high: f64,
}

impl TwoBlockConfig {
    /// Low block first, so the result is sorted.
    pub fn expand(&self) -> Result<StandardizedSample> {
        let mut z = vec![self.low; self.j];
        z.resize(self.n, self.high);
        StandardizedSample::new(z)
    }
}

/// Two-block configuration with a low block of size `j`:
/// `low = -sqrt((n - j) / j)`, `high = sqrt(j / (n - j))`.
pub fn two_block_z(n: usize, j: usize) -> Result<TwoBlockConfig> {
    if n < 3 {
        return Err(Error::InvalidN { n, min: 3 });
    }
    if j == 0 || j >= n {
        return Err(Error::InvalidJ { n, j });
    }
    let (nf, jf) = (n as f64, j as f64);
    Ok(TwoBlockConfig {
        n,
        j,
        low: -((nf - jf) / jf).sqrt(),
        high: (jf / (nf - jf)).sqrt(),
    })
}

/// Low-block size of the extremal configuration for `(n, sign)`.
///
/// Odd `n = 2k + 1`: `k` for positive, `k + 1` for negative.
/// Even `n = 2k`: `k - 1` for positive, `k + 1` for negative.
pub fn extremal_block_size(n: usize, sign: Sign) -> Result<usize> {
    if n < 3 {
        return Err(Error::InvalidN { n, min: 3 });
    }
    let k = n / 2;
    Ok(match (n % 2 == 1, sign) {
        (true, Sign::Positive) => k,
        (true, Sign::Negative) => k + 1,
        (false, Sign::Positive) => k - 1,
        (false, Sign::Negative) => k + 1,
    })
}

/// Standardized sample whose median equals `sign * sharp_bound(n)`.
pub fn extremal_z(n: usize, sign: Sign) -> Result<StandardizedSample> {
    let j = extremal_block_size(n, sign)?;
    two_block_z(n, j)?.expand()
}

/// `location + scale * z_i` as a sample. The skewness of the result equals
/// the median of `z`.
pub fn rescale(z: &StandardizedSample, location: f64, scale: f64) -> Result<Sample> {
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::InvalidScale(scale));
    }
    Sample::new(z.values().iter().map(|v| location + scale * v).collect())
}
