//! Seeded random instance sampling for experiments and tests.
//!
//! The generator is ChaCha8, a portable, explicitly seeded stream cipher
//! RNG, so identical seeds reproduce identical instances on every platform.
//! Experiment trials use separate ChaCha streams of one base seed and stay
//! reproducible under any parallel schedule.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{Point2D, PointSet, UnitDiskGraph};

/// Attempts before instance resampling gives up.
pub const DEFAULT_RETRY_CAP: usize = 1000;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent per-trial RNG: same base seed, distinct ChaCha stream.
/// Stream 0 is left to [`seeded_rng`] callers.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial.wrapping_add(1));
    rng
}

/// `n` points uniform in the `width x height` box.
pub fn uniform_point_set(
    rng: &mut impl Rng,
    n: usize,
    width: f64,
    height: f64,
    radius: f64,
) -> PointSet {
    let points = (0..n)
        .map(|_| Point2D::new(rng.gen_range(0.0..width), rng.gen_range(0.0..height)))
        .collect();
    PointSet::new(points, radius)
}

/// Samples instances until one has no isolated vertex, up to `retry_cap`
/// attempts, and returns its graph.
pub fn sample_without_isolated(
    rng: &mut impl Rng,
    n: usize,
    width: f64,
    height: f64,
    radius: f64,
    retry_cap: usize,
) -> Result<UnitDiskGraph> {
    for _ in 0..retry_cap {
        let ps = uniform_point_set(rng, n, width, height, radius);
        let g = UnitDiskGraph::build(ps)?;
        if g.isolated_vertices().is_clean() {
            return Ok(g);
        }
    }
    Err(Error::RetryExhausted {
        attempts: retry_cap,
    })
}
