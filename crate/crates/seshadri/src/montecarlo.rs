//! Monte Carlo estimation of the average period count over the compact
//! family `Z = X + i (1/y^2) Id`, and a randomized search of that family for
//! Siegel points whose minimal period length beats a target.
//!
//! The average of `n_R` over symmetric `X` with entries in `[0, d_g]`
//! converges, as `y` grows, to the ball volume `(R^2 pi)^g / g!` divided by
//! the Pfaffian `prod d_i`. Whenever that limit is below 2, evenness of
//! `n_R` forces points with `n_R = 0`, i.e. minimal period length above
//! `R^2`; the search makes such points explicit.

use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::error::{Error, Result};
use crate::lattice;
use crate::types::{PolarizationType, SiegelPoint, SiegelPointSchema};

/// Default `y` values for [`existence_search`].
pub const DEFAULT_Y_GRID: [f64; 4] = [2.0, 5.0, 10.0, 20.0];

/// Seeded estimate of the average period count at a fixed `y`.
///
/// Serializes with the keys `type`, `y`, `R2`, `samples`, `seed`, `mean`,
/// `std_error`, `prediction`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AverageEstimate {
    #[serde(rename = "type")]
    pub degrees: Vec<u64>,
    pub y: f64,
    #[serde(rename = "R2")]
    pub r_squared: f64,
    pub samples: u64,
    pub seed: u64,
    pub mean: f64,
    pub std_error: f64,
    /// The `y -> infinity` limit of the mean.
    #[serde(rename = "prediction")]
    pub limit_prediction: f64,
}

/// Outcome of [`existence_search`].
///
/// Serializes with the keys `type`, `target`, `trials`, `best_m`,
/// `achieved`, `witness`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    #[serde(rename = "type")]
    pub degrees: Vec<u64>,
    /// Squared-length target the minimal period should exceed.
    pub target: f64,
    pub trials: u64,
    /// Largest minimal period length found; equals the exact value at the
    /// witness.
    pub best_m: f64,
    /// `best_m > target`.
    pub achieved: bool,
    pub witness: SiegelPointSchema,
    /// The target is at or above [`existence_threshold_r2`], so nothing
    /// guarantees the search can succeed. Diagnostic only, not serialized.
    #[serde(skip)]
    pub target_above_threshold: bool,
}

/// Limiting average period count: the volume `(R^2 pi)^g / g!` of the
/// radius-`R` ball in dimension `2g`, divided by `prod d_i`.
pub fn limit_prediction(d: &PolarizationType, r_squared: f64) -> f64 {
    debug_assert!(r_squared >= 0.0, "squared radius must be non-negative");
    let mut volume = 1.0;
    for i in 1..=d.dimension() {
        volume *= r_squared * std::f64::consts::PI / i as f64;
    }
    volume / d.pfaffian().to_f64().unwrap_or(f64::INFINITY)
}

/// Largest `R^2` with `limit_prediction < 2`. Below this threshold the
/// limiting average leaves room for zero counts, so points of the family
/// with minimal period length above `R^2` must exist; it equals the lower
/// bound on the maximal minimal period length over the moduli space.
pub fn existence_threshold_r2(d: &PolarizationType) -> f64 {
    bounds::max_minimal_period_lower(d)
}

fn sample_x(rng: &mut ChaCha8Rng, g: usize, bound: f64) -> DMatrix<f64> {
    let mut x = DMatrix::zeros(g, g);
    for i in 0..g {
        for j in i..g {
            let v = rng.random_range(0.0..=bound);
            x[(i, j)] = v;
            x[(j, i)] = v;
        }
    }
    x
}

fn family_point(x: DMatrix<f64>, y: f64) -> Result<SiegelPoint> {
    let g = x.nrows();
    SiegelPoint::new(x, DMatrix::identity(g, g).scale(1.0 / (y * y)))
}

/// Sample mean and standard error of the period count `n_R` over `samples`
/// uniform draws of the symmetric matrix `X` (entries in `[0, d_g]`, upper
/// triangle mirrored) at the fixed imaginary part `(1/y^2) Id`.
///
/// Each sample has its own deterministic random stream, so results are
/// identical for a fixed seed regardless of thread count.
pub fn estimate_average(
    d: &PolarizationType,
    y: f64,
    r_squared: f64,
    samples: u64,
    seed: u64,
) -> Result<AverageEstimate> {
    if !y.is_finite() || y <= 0.0 {
        return Err(Error::InvalidY { y });
    }
    if !r_squared.is_finite() || r_squared < 0.0 {
        return Err(Error::InvalidRadius { r_squared });
    }
    if samples == 0 {
        return Err(Error::InvalidSampleCount);
    }
    let g = d.dimension();
    let bound = d.max_degree() as f64;

    let (sum, sum_sq) = (0..samples)
        .into_par_iter()
        .map(|index| -> Result<(u128, u128)> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(index);
            let z = family_point(sample_x(&mut rng, g, bound), y)?;
            let q = lattice::gram_form(&z, d)?;
            let n = lattice::count_periods(&q, r_squared)?;
            debug_assert_eq!(n % 2, 0, "period counts come in +/- pairs");
            Ok((u128::from(n), u128::from(n) * u128::from(n)))
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;

    let n_f = samples as f64;
    let mean = sum as f64 / n_f;
    let variance = if samples > 1 {
        let sum_f = sum as f64;
        ((sum_sq as f64 - sum_f * sum_f / n_f) / (n_f - 1.0)).max(0.0)
    } else {
        0.0
    };
    Ok(AverageEstimate {
        degrees: d.degrees().to_vec(),
        y,
        r_squared,
        samples,
        seed,
        mean,
        std_error: (variance / n_f).sqrt(),
        limit_prediction: limit_prediction(d, r_squared),
    })
}

/// Random search over the family for a Siegel point whose minimal period
/// length exceeds `target_r_squared`. Each trial draws `y` from `y_grid`
/// and a symmetric `X`, then computes the minimal period length exactly;
/// the best trial is returned. Targets at or above the existence threshold
/// are allowed but flagged, since success is then not guaranteed.
pub fn existence_search(
    d: &PolarizationType,
    target_r_squared: f64,
    trials: u64,
    y_grid: &[f64],
    seed: u64,
) -> Result<SearchResult> {
    if trials == 0 {
        return Err(Error::InvalidTrialCount);
    }
    if y_grid.is_empty() {
        return Err(Error::EmptyYGrid);
    }
    for &y in y_grid {
        if !y.is_finite() || y <= 0.0 {
            return Err(Error::InvalidY { y });
        }
    }
    if !target_r_squared.is_finite() {
        return Err(Error::InvalidRadius {
            r_squared: target_r_squared,
        });
    }
    let g = d.dimension();
    let bound = d.max_degree() as f64;
    let draw = |index: u64| -> Result<(SiegelPoint, f64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let y = y_grid[rng.random_range(0..y_grid.len())];
        let z = family_point(sample_x(&mut rng, g, bound), y)?;
        let value = lattice::minimal_period_length(&z, d)?.value;
        Ok((z, value))
    };

    let (best_m, best_index) = (0..trials)
        .into_par_iter()
        .map(|index| draw(index).map(|(_, value)| (value, index)))
        .try_reduce(
            || (f64::NEG_INFINITY, u64::MAX),
            |a, b| {
                Ok(if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                })
            },
        )?;

    let (witness, recomputed) = draw(best_index)?;
    debug_assert_eq!(recomputed, best_m, "replaying a trial must reproduce it");
    Ok(SearchResult {
        degrees: d.degrees().to_vec(),
        target: target_r_squared,
        trials,
        best_m,
        achieved: best_m > target_r_squared,
        witness: SiegelPointSchema::from_parts(d, &witness),
        target_above_threshold: target_r_squared >= existence_threshold_r2(d),
    })
}
