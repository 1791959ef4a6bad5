use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a sample needs at least 2 values, got {0}")]
    TooFewValues(usize),
    #[error("sample value at position {0} is not finite")]
    NonFinite(usize),
    #[error("degenerate sample: all values are equal (standard deviation is 0)")]
    DegenerateSample,
    #[error("invalid sample size n = {n}: must be at least {min}")]
    InvalidN { n: usize, min: usize },
    #[error("order-statistic index {i} is outside [1, {n}]")]
    InvalidIndex { n: usize, i: usize },
    #[error("low-block size j = {j} is outside [1, {}]", n - 1)]
    InvalidJ { n: usize, j: usize },
    #[error("scale must be a positive finite number, got {0}")]
    InvalidScale(f64),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("case classification requires an even sample size, got n = {0}")]
    OddN(usize),
    #[error("standardized values do not change sign")]
    NoSignChange,
    #[error("invalid probability split p = {p}, q = {q}: need p > 0, q > 0, p + q <= 1")]
    InvalidSplit { p: f64, q: f64 },
    #[error("invalid standardized sample: {0}")]
    InvalidStandardized(String),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("distribution has zero variance")]
    ZeroVariance,
    #[error("all probability mass lies on one side of the mean (p = {p}, q = {q})")]
    MeanAtomExhaustive { p: f64, q: f64 },
}
