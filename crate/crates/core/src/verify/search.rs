//! Randomized perturb-and-project hill climbing over standardized samples.
//!
//! Each restart runs on its own RNG substream derived from `(seed, restart)`,
//! so restarts can run in parallel and still reproduce the sequential result.

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::substream;
use crate::error::{Error, Result};
use crate::stats::{median_sorted, StandardizedSample};

const INITIAL_STEP: f64 = 0.5;
const MAX_STEP: f64 = 2.0;
const MIN_STEP: f64 = 1e-9;
const GROW: f64 = 1.5;
const SHRINK: f64 = 0.95;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub best_ratio: f64,
    pub best_z: StandardizedSample,
    /// Lowest restart index reaching `best_ratio`.
    pub best_restart: usize,
}

/// Maximizes `|median(z)|` over standardized samples of size `n`.
///
/// Every restart starts from a projected Gaussian vector and repeats
/// perturb, center, normalize, sort, accepting strict improvements only.
/// With `iters = 0` the result is the best initial candidate.
pub fn random_search_max(
    n: usize,
    restarts: usize,
    iters: usize,
    seed: u64,
) -> Result<SearchResult> {
    if n < 3 {
        return Err(Error::InvalidN { n, min: 3 });
    }
    if restarts == 0 {
        return Err(Error::InvalidParams("restarts must be positive".into()));
    }
    let (best_restart, best_ratio, best_z) = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let (ratio, z) = climb(n, iters, seed, r as u64);
            (r, ratio, z)
        })
        .reduce_with(|a, b| {
            // order-independent: higher ratio wins, ties go to the lower restart
            if b.1 > a.1 || (b.1 == a.1 && b.0 < a.0) {
                b
            } else {
                a
            }
        })
        .expect("at least one restart");
    Ok(SearchResult {
        n,
        best_ratio,
        best_z: StandardizedSample::new(best_z)?,
        best_restart,
    })
}

fn climb(n: usize, iters: usize, seed: u64, restart: u64) -> (f64, Vec<f64>) {
    let mut rng = substream(seed, restart);
    let mut current = loop {
        let draw: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        if let Some(z) = project(draw) {
            break z;
        }
    };
    let mut value = objective(&current);
    let mut step = INITIAL_STEP;
    let mut candidate = vec![0.0; n];
    for _ in 0..iters {
        candidate.copy_from_slice(&current);
        if rng.random_bool(0.5) {
            for c in candidate.iter_mut() {
                *c += step * rng.sample::<f64, _>(StandardNormal);
            }
        } else {
            let i = rng.random_range(0..n);
            candidate[i] += step * rng.sample::<f64, _>(StandardNormal);
        }
        let accepted = match project(candidate.clone()) {
            Some(z) => {
                let v = objective(&z);
                if v > value {
                    current = z;
                    value = v;
                    true
                } else {
                    false
                }
            }
            None => false,
        };
        step = if accepted {
            (step * GROW).min(MAX_STEP)
        } else {
            (step * SHRINK).max(MIN_STEP)
        };
    }
    (value, current)
}

/// Center, scale to `sum z^2 = n`, sort. `None` if the vector is (numerically) constant.
fn project(mut z: Vec<f64>) -> Option<Vec<f64>> {
    let n = z.len() as f64;
    let mean = z.iter().sum::<f64>() / n;
    z.iter_mut().for_each(|v| *v -= mean);
    let ss: f64 = z.iter().map(|v| v * v).sum();
    if !ss.is_finite() || ss <= 1e-24 {
        return None;
    }
    let scale = (n / ss).sqrt();
    z.iter_mut().for_each(|v| *v *= scale);
    z.sort_by(f64::total_cmp);
    (z[0] < z[z.len() - 1]).then_some(z)
}

fn objective(z: &[f64]) -> f64 {
    median_sorted(z).abs()
}
