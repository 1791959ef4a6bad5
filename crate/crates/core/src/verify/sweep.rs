use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{rescale, two_block_z};

/// Exhaustive evaluation of the two-block family for one `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub n: usize,
    /// Maximizing `j`; the first in increasing order on exact ties.
    pub j_star: usize,
    pub max_ratio: f64,
    /// `(j, |skewness|)` for every `j` in `1..n`.
    pub per_j: Vec<(usize, f64)>,
}

/// Evaluates `|skewness|` of every two-block configuration of size `n`,
/// recomputing mean, sd and median from the expanded sample.
pub fn two_block_sweep(n: usize) -> Result<SweepResult> {
    if n < 3 {
        return Err(Error::InvalidN { n, min: 3 });
    }
    let per_j = (1..n)
        .map(|j| {
            let z = two_block_z(n, j)?.expand()?;
            let ratio = rescale(&z, 0.0, 1.0)?.skewness()?.abs();
            Ok((j, ratio))
        })
        .collect::<Result<Vec<_>>>()?;
    let (j_star, max_ratio) = per_j
        .iter()
        .copied()
        .fold((0, f64::NEG_INFINITY), |best, cur| {
            if cur.1 > best.1 {
                cur
            } else {
                best
            }
        });
    Ok(SweepResult {
        n,
        j_star,
        max_ratio,
        per_j,
    })
}
