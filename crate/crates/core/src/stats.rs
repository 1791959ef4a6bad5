//! Descriptive statistics on a sorted sample.
//!
//! The standard deviation uses the population divisor `n` throughout; every
//! bound in this crate is stated for that divisor.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance on standardized quantities.
pub const EPS_STD: f64 = 1e-9;

/// Divisor used for the standard deviation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Divisor {
    /// `n`, the divisor all bounds are proved for.
    #[default]
    Population,
    /// `n - 1`. Only offered for descriptive output.
    Unbiased,
}

/// A finite sample of at least two values, stored in nondecreasing order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    /// Builds a sample, sorting the input. Rejects fewer than 2 values and
    /// non-finite entries.
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooFewValues(values.len()));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(pos));
        }
        values.sort_by(f64::total_cmp);
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// True iff the smallest value is strictly below the largest.
    pub fn is_nondegenerate(&self) -> bool {
        self.values[0] < self.values[self.len() - 1]
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.len() as f64
    }

    /// Population standard deviation (divisor `n`).
    pub fn stddev(&self) -> f64 {
        self.stddev_with(Divisor::Population)
    }

    pub fn stddev_with(&self, divisor: Divisor) -> f64 {
        // Constant data must give exactly 0, not roundoff noise.
        if !self.is_nondegenerate() {
            return 0.0;
        }
        let mean = self.mean();
        let ss: f64 = self.values.iter().map(|x| (x - mean).powi(2)).sum();
        let denom = match divisor {
            Divisor::Population => self.len() as f64,
            Divisor::Unbiased => (self.len() - 1) as f64,
        };
        (ss / denom).sqrt()
    }

    /// Middle element for odd `n`, average of the two middle elements for even `n`.
    pub fn median(&self) -> f64 {
        median_sorted(&self.values)
    }

    pub fn summary(&self) -> SummaryStats {
        SummaryStats {
            n: self.len(),
            mean: self.mean(),
            sd: self.stddev(),
            median: self.median(),
        }
    }

    /// `z_i = (x_i - mean) / sd`.
    pub fn standardize(&self) -> Result<StandardizedSample> {
        if !self.is_nondegenerate() {
            return Err(Error::DegenerateSample);
        }
        let mean = self.mean();
        let sd = self.stddev();
        let z = self.values.iter().map(|x| (x - mean) / sd).collect();
        StandardizedSample::new(z)
    }

    /// `(median - mean) / sd`, the nonparametric skewness measure.
    pub fn skewness(&self) -> Result<f64> {
        self.skewness_with(Divisor::Population)
    }

    pub fn skewness_with(&self, divisor: Divisor) -> Result<f64> {
        if !self.is_nondegenerate() {
            return Err(Error::DegenerateSample);
        }
        Ok((self.median() - self.mean()) / self.stddev_with(divisor))
    }

    /// `sum_i |x_i - mu|`; minimized over `mu` by the median.
    pub fn sum_abs_dev(&self, mu: f64) -> f64 {
        self.values.iter().map(|x| (x - mu).abs()).sum()
    }

    /// The four terms of `|med - mean| <= mean|x - med| <= mean|x - mean| <= sd`.
    pub fn chain_terms(&self) -> ChainTerms {
        let n = self.len() as f64;
        let mean = self.mean();
        let median = self.median();
        ChainTerms {
            median_gap: (median - mean).abs(),
            mad_median: self.sum_abs_dev(median) / n,
            mad_mean: self.sum_abs_dev(mean) / n,
            sd: self.stddev(),
        }
    }

    /// Affine image `location + scale * x`, re-sorted.
    pub fn affine(&self, location: f64, scale: f64) -> Result<Sample> {
        Sample::new(self.values.iter().map(|x| location + scale * x).collect())
    }
}

pub(crate) fn median_sorted(values: &[f64]) -> f64 {
    let n = values.len();
    let k = n / 2;
    if n % 2 == 1 {
        values[k]
    } else {
        (values[k - 1] + values[k]) / 2.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SummaryStats {
    pub n: usize,
    pub mean: f64,
    pub sd: f64,
    pub median: f64,
}

/// Terms `t1 <= t2 <= t3 <= t4` of the deviation chain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChainTerms {
    /// `|median - mean|`
    pub median_gap: f64,
    /// Mean absolute deviation about the median.
    pub mad_median: f64,
    /// Mean absolute deviation about the mean.
    pub mad_mean: f64,
    /// Population standard deviation.
    pub sd: f64,
}

impl ChainTerms {
    pub fn as_array(&self) -> [f64; 4] {
        [self.median_gap, self.mad_median, self.mad_mean, self.sd]
    }

    /// Each term is at most the next one plus `tol`.
    pub fn is_monotone(&self, tol: f64) -> bool {
        self.as_array().windows(2).all(|w| w[0] <= w[1] + tol)
    }

    /// Terms divided by the standard deviation, so the last one is 1.
    /// Constant data is returned unchanged (all zero).
    pub fn standardized(&self) -> ChainTerms {
        if self.sd == 0.0 {
            return *self;
        }
        ChainTerms {
            median_gap: self.median_gap / self.sd,
            mad_median: self.mad_median / self.sd,
            mad_mean: self.mad_mean / self.sd,
            sd: 1.0,
        }
    }
}

/// Standardized sample: sorted, `sum z = 0`, `sum z^2 = n`, `z_1 < z_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StandardizedSample {
    z: Vec<f64>,
}

impl StandardizedSample {
    /// Validates the standardization constraints to within `n * EPS_STD`.
    pub fn new(z: Vec<f64>) -> Result<Self> {
        let n = z.len();
        if n < 2 {
            return Err(Error::TooFewValues(n));
        }
        if let Some(pos) = z.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(pos));
        }
        if z.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidStandardized("values are not sorted".into()));
        }
        if z[0] >= z[n - 1] {
            return Err(Error::InvalidStandardized("all values are equal".into()));
        }
        let tol = n as f64 * EPS_STD;
        let sum: f64 = z.iter().sum();
        if sum.abs() > tol {
            return Err(Error::InvalidStandardized(format!(
                "sum is {sum}, expected 0"
            )));
        }
        let sum_sq: f64 = z.iter().map(|v| v * v).sum();
        if (sum_sq - n as f64).abs() > tol {
            return Err(Error::InvalidStandardized(format!(
                "sum of squares is {sum_sq}, expected {n}"
            )));
        }
        Ok(Self { z })
    }

    pub fn values(&self) -> &[f64] {
        &self.z
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    /// Median of the z-scores, which equals the skewness of any sample it standardizes.
    pub fn median(&self) -> f64 {
        median_sorted(&self.z)
    }

    pub fn into_values(self) -> Vec<f64> {
        self.z
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn s(v: &[f64]) -> Sample {
        Sample::new(v.to_vec()).unwrap()
    }

    #[test]
    fn mean_examples() {
        assert_eq!(s(&[1.0, 2.0, 3.0]).mean(), 2.0);
        assert_eq!(s(&[0.0, 0.0, 0.0, 4.0]).mean(), 1.0);
        assert_eq!(s(&[2.5, 2.5, 2.5, 2.5]).mean(), 2.5);
    }

    #[test]
    fn stddev_examples() {
        assert_eq!(s(&[7.0, 7.0, 7.0]).stddev(), 0.0);
        assert_abs_diff_eq!(s(&[-1.0, 1.0]).stddev(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s(&[0.0, 0.0, 3.0, 3.0]).stddev(), 1.5, epsilon = 1e-15);
    }

    #[test]
    fn unbiased_divisor() {
        assert_abs_diff_eq!(
            s(&[-1.0, 1.0]).stddev_with(Divisor::Unbiased),
            2f64.sqrt(),
            epsilon = 1e-15
        );
    }

    #[test]
    fn median_examples() {
        assert_eq!(s(&[1.0, 5.0, 9.0]).median(), 5.0);
        assert_eq!(s(&[1.0, 2.0, 4.0, 10.0]).median(), 3.0);
        assert_eq!(Sample::new(vec![7.0]), Err(Error::TooFewValues(1)));
    }

    #[test]
    fn construction_sorts_and_rejects_nan() {
        assert_eq!(s(&[3.0, 1.0, 2.0]).values(), &[1.0, 2.0, 3.0]);
        assert_eq!(Sample::new(vec![1.0, f64::NAN]), Err(Error::NonFinite(1)));
        assert_eq!(Sample::new(vec![]), Err(Error::TooFewValues(0)));
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(s(&[0.0, 1.0]).standardize().unwrap().values(), &[-1.0, 1.0]);
        assert_eq!(
            s(&[0.0, 0.0, 3.0, 3.0]).standardize().unwrap().values(),
            &[-1.0, -1.0, 1.0, 1.0]
        );
        assert_eq!(
            s(&[4.0, 4.0, 4.0]).standardize(),
            Err(Error::DegenerateSample)
        );
    }

    #[test]
    fn skewness_examples() {
        assert_eq!(s(&[-1.0, 0.0, 1.0]).skewness().unwrap(), 0.0);
        assert_eq!(s(&[0.0, 0.0, 3.0, 3.0]).skewness().unwrap(), 0.0);
        // mean 0.2, median 0, sd sqrt((4*0.04 + 0.64)/5) = 0.4
        assert_abs_diff_eq!(
            s(&[0.0, 0.0, 0.0, 0.0, 1.0]).skewness().unwrap(),
            -0.5,
            epsilon = 1e-15
        );
        assert_eq!(s(&[1.0, 1.0]).skewness(), Err(Error::DegenerateSample));
    }

    #[test]
    fn two_point_sample_has_zero_skewness() {
        assert_eq!(s(&[-3.0, 8.0]).skewness().unwrap(), 0.0);
    }

    #[test]
    fn sum_abs_dev_examples() {
        assert_eq!(s(&[1.0, 5.0, 9.0]).sum_abs_dev(5.0), 8.0);
        assert_eq!(s(&[2.0, 2.0]).sum_abs_dev(2.0), 0.0);
        // 2 + 1 + 1 + 7
        assert_eq!(s(&[1.0, 2.0, 4.0, 10.0]).sum_abs_dev(3.0), 11.0);
    }

    #[test]
    fn chain_terms_examples() {
        let t = s(&[-1.0, 0.0, 1.0]).chain_terms();
        assert_abs_diff_eq!(t.median_gap, 0.0);
        assert_abs_diff_eq!(t.mad_median, 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(t.mad_mean, 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(t.sd, (2.0f64 / 3.0).sqrt(), epsilon = 1e-15);

        assert_eq!(s(&[5.0, 5.0, 5.0]).chain_terms().as_array(), [0.0; 4]);
        assert_eq!(
            s(&[0.0, 0.0, 3.0, 3.0]).chain_terms().as_array(),
            [0.0, 1.5, 1.5, 1.5]
        );
    }

    #[test]
    fn standardized_rejects_bad_input() {
        assert!(StandardizedSample::new(vec![1.0, -1.0]).is_err());
        assert!(StandardizedSample::new(vec![-1.0, 0.0, 1.0]).is_err());
        assert!(StandardizedSample::new(vec![0.0, 2.0]).is_err());
        assert!(StandardizedSample::new(vec![-1.0, 1.0]).is_ok());
    }
}
