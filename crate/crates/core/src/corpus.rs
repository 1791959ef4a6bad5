//! Seeded random inputs for the verification suites.
//!
//! Every generator takes an explicit RNG; [`substream`] derives independent,
//! reproducible streams from a base seed and a stream index.

use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Cauchy, Exp1, StandardNormal};

use crate::stats::Sample;
use crate::verify::DiscreteDistribution;

/// Independent stream `stream` of the generator seeded with `seed`.
pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Law used to draw one sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    Uniform,
    Normal,
    /// Standard Cauchy.
    HeavyTailed,
    /// Bernoulli with a random success probability; produces two-block samples.
    TwoPoint,
    /// Uniform on a handful of integers; produces heavy ties.
    SmallIntegers,
}

impl Law {
    pub const ALL: [Law; 5] = [
        Law::Uniform,
        Law::Normal,
        Law::HeavyTailed,
        Law::TwoPoint,
        Law::SmallIntegers,
    ];

    fn draw<R: Rng + ?Sized>(self, rng: &mut R, n: usize) -> Vec<f64> {
        match self {
            Law::Uniform => (0..n).map(|_| rng.random::<f64>()).collect(),
            Law::Normal => (0..n).map(|_| StandardNormal.sample(rng)).collect(),
            Law::HeavyTailed => {
                let cauchy = Cauchy::new(0.0, 1.0).expect("valid Cauchy parameters");
                (0..n).map(|_| cauchy.sample(rng)).collect()
            }
            Law::TwoPoint => {
                let p: f64 = rng.random();
                (0..n)
                    .map(|_| if rng.random::<f64>() < p { 1.0 } else { 0.0 })
                    .collect()
            }
            Law::SmallIntegers => {
                let levels = rng.random_range(2..=4);
                (0..n).map(|_| rng.random_range(0..levels) as f64).collect()
            }
        }
    }
}

/// Nondegenerate sample of size `n >= 2` from a randomly chosen law.
/// Degenerate draws are rejected and redrawn.
pub fn random_sample<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Sample {
    let law = Law::ALL[rng.random_range(0..Law::ALL.len())];
    random_sample_from(rng, n, law)
}

pub fn random_sample_from<R: Rng + ?Sized>(rng: &mut R, n: usize, law: Law) -> Sample {
    assert!(n >= 2, "samples need at least two values");
    loop {
        let values = law.draw(rng, n);
        if let Ok(sample) = Sample::new(values) {
            if sample.is_nondegenerate() {
                return sample;
            }
        }
    }
}

/// Distribution on `atoms` distinct support points (at least 2).
///
/// Support points are either uniform reals or consecutive integers; masses
/// are either random (normalized exponentials) or equal, the latter hitting
/// median-interval boundaries exactly.
pub fn random_distribution<R: Rng + ?Sized>(rng: &mut R, atoms: usize) -> DiscreteDistribution {
    assert!(atoms >= 2, "need at least two atoms");
    loop {
        let values: Vec<f64> = if rng.random_bool(0.5) {
            (0..atoms).map(|_| rng.random_range(-10.0..10.0)).collect()
        } else {
            let offset = rng.random_range(-5..5);
            (0..atoms).map(|i| (offset + i as i64) as f64).collect()
        };
        let weights: Vec<f64> = if rng.random_bool(0.2) {
            vec![1.0; atoms]
        } else {
            (0..atoms).map(|_| Exp1.sample(rng)).collect()
        };
        let total: f64 = weights.iter().sum();
        let pairs = values
            .into_iter()
            .zip(weights.into_iter().map(|w| w / total))
            .collect();
        if let Ok(d) = DiscreteDistribution::new(pairs) {
            return d;
        }
    }
}
