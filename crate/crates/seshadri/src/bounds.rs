//! Closed-form bounds on Seshadri constants and minimal period lengths of
//! polarized abelian varieties.
//!
//! Throughout, `(A, L)` is a polarized abelian variety of dimension `g` with
//! polarization type `(d_1, ..., d_g)`, so `L^g = g! d_1 ... d_g`, and
//! `m(A, L)` denotes the minimal squared period length computed by the
//! lattice module. The bounds here need only the type (and, for the Prym
//! family, a curve's genus and gonality), never a period matrix.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{BoundKind, BoundReport, PolarizationType};

fn nth_root(value: &BigUint, g: usize) -> f64 {
    big_to_f64(value).powf(1.0 / g as f64)
}

fn big_to_f64(value: &BigUint) -> f64 {
    value.to_f64().unwrap_or(f64::INFINITY)
}

/// Unconditional bounds `1 <= eps(A, L) <= (L^g)^{1/g}`: ample line bundles
/// on abelian varieties have no worse Seshadri constant than 1, and the
/// degree bound caps it from above.
pub fn elementary_bounds(d: &PolarizationType) -> BoundReport {
    let g = d.dimension();
    let mut report = BoundReport::new(format!("type {:?}", d.degrees()));
    report.push(
        "ampleness lower bound",
        "seshadri",
        1.0,
        BoundKind::Lower,
        None,
    );
    report.push(
        "degree upper bound",
        "seshadri",
        nth_root(d.l_power_g(), g),
        BoundKind::Upper,
        None,
    );
    report
}

/// Seshadri constant from the minimal period length:
/// `eps(A, L) >= (pi / 4) m(A, L)`. Expects `m >= 0`.
pub fn seshadri_lower_from_period(m: f64) -> f64 {
    debug_assert!(m >= 0.0, "period lengths are non-negative");
    std::f64::consts::FRAC_PI_4 * m
}

/// Lower bound for the maximum of `m(A, L)` over the moduli space of the
/// given type: `max_Z m(A_Z, L_Z) >= (1/pi) (2 L^g)^{1/g}`.
pub fn max_minimal_period_lower(d: &PolarizationType) -> f64 {
    let g = d.dimension();
    let doubled = d.l_power_g() * 2u32;
    nth_root(&doubled, g) / std::f64::consts::PI
}

/// Lower bound on the Seshadri constant of a very general `(A, L)` of the
/// given type: `eps >= (1/4) (2 g! d_1 ... d_g)^{1/g}`.
pub fn very_general_seshadri_lower(d: &PolarizationType) -> f64 {
    let g = d.dimension();
    let doubled = d.l_power_g() * 2u32;
    nth_root(&doubled, g) / 4.0
}

/// Outcome of the very-ampleness test for very general `(A, L)`: `L` is very
/// ample once `d_1 ... d_g >= (8g)^g / (2 g!)`. The comparison is exact
/// integer arithmetic (`2 g! d_1 ... d_g >= (8g)^g`); the float fields are
/// for display only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VeryAmpleVerdict {
    pub satisfied: bool,
    /// `(8g)^g` exactly, as a decimal string.
    pub threshold_numerator: String,
    /// `2 g!` exactly, as a decimal string.
    pub threshold_denominator: String,
    /// `(8g)^g / (2 g!)` as a float.
    pub threshold: f64,
    /// Stirling-style comparison value `(8e)^g / 2`, handy for seeing the
    /// growth rate of the threshold.
    pub growth_reference: f64,
}

pub fn very_ample_criterion(d: &PolarizationType) -> VeryAmpleVerdict {
    let g = d.dimension() as u64;
    let numerator = BigUint::from(8 * g).pow(g as u32);
    let factorial = (1..=g).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k));
    let denominator = factorial * 2u32;
    let satisfied = d.pfaffian() * &denominator >= numerator;
    let threshold = big_to_f64(&numerator) / big_to_f64(&denominator);
    let growth_reference = (8.0 * std::f64::consts::E).powi(g as i32) / 2.0;
    VeryAmpleVerdict {
        satisfied,
        threshold_numerator: numerator.to_string(),
        threshold_denominator: denominator.to_string(),
        threshold,
        growth_reference,
    }
}

/// A Prym datum: an etale double cover of a smooth curve of the given genus
/// induces a principally polarized Prym variety `(P, Xi)` of dimension
/// `genus - 1`. The gonality is the minimal degree of a map from the covering
/// curve to the projective line, when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrymInput {
    genus: u64,
    gonality: Option<u64>,
}

impl PrymInput {
    pub fn new(genus: i64, gonality: Option<i64>) -> Result<Self> {
        if genus < 3 {
            return Err(Error::GenusTooSmall { genus });
        }
        if let Some(d) = gonality {
            if d < 2 {
                return Err(Error::InvalidGonality { gonality: d });
            }
        }
        Ok(Self {
            genus: genus as u64,
            gonality: gonality.map(|d| d as u64),
        })
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn gonality(&self) -> Option<u64> {
        self.gonality
    }

    /// Dimension of the Prym variety, `genus - 1`.
    pub fn dim_p(&self) -> u64 {
        self.genus - 1
    }
}

fn prym_input_label(p: &PrymInput) -> String {
    match p.gonality() {
        Some(d) => format!(
            "Prym variety of an etale double cover, genus {} (dim P = {}), gonality {}",
            p.genus(),
            p.dim_p(),
            d
        ),
        None => format!(
            "Prym variety of an etale double cover, genus {} (dim P = {})",
            p.genus(),
            p.dim_p()
        ),
    }
}

/// Upper bound for the etale-double-cover case, in terms of the base genus
/// `g`: `eps(P, Xi) <= sqrt(2 (g - 2))`, i.e. `sqrt(2 (dim P - 1))`.
pub fn prym_curve_upper(genus: u64) -> f64 {
    (2.0 * (genus as f64 - 2.0)).sqrt()
}

/// Upper bound from a degree-`d` covering map of the base curve:
/// `eps(P, Xi) <= 2 (d - 1)(g - 1) / (d + g - 1)`, valid when the covering
/// curve is not hyperelliptic.
pub fn prym_gonality_upper(genus: u64, gonality: u64) -> f64 {
    let g = genus as f64;
    let d = gonality as f64;
    2.0 * (d - 1.0) * (g - 1.0) / (d + g - 1.0)
}

/// Seshadri-constant upper bounds for a Prym variety.
pub fn prym_seshadri_upper(p: &PrymInput) -> BoundReport {
    let mut report = BoundReport::new(prym_input_label(p));
    report.push(
        "curve-in-P upper bound",
        "seshadri",
        prym_curve_upper(p.genus()),
        BoundKind::Upper,
        None,
    );
    if let Some(d) = p.gonality() {
        report.push(
            "gonality upper bound",
            "seshadri",
            prym_gonality_upper(p.genus(), d),
            BoundKind::Upper,
            Some("covering curve not hyperelliptic"),
        );
    }
    report
}

/// Minimal-period-length upper bounds for a Prym variety, obtained from the
/// Seshadri bounds through `m <= (4/pi) eps`.
pub fn prym_period_upper(p: &PrymInput) -> BoundReport {
    let factor = 4.0 / std::f64::consts::PI;
    let mut report = BoundReport::new(prym_input_label(p));
    report.push(
        "curve-in-P upper bound",
        "minimal_period",
        factor * prym_curve_upper(p.genus()),
        BoundKind::Upper,
        None,
    );
    if let Some(d) = p.gonality() {
        report.push(
            "gonality upper bound",
            "minimal_period",
            factor * prym_gonality_upper(p.genus(), d),
            BoundKind::Upper,
            Some("covering curve not hyperelliptic"),
        );
        report.push(
            "gonality-only cap",
            "minimal_period",
            8.0 * (d as f64 - 1.0) / std::f64::consts::PI,
            BoundKind::Upper,
            Some("covering curve not hyperelliptic"),
        );
    }
    report
}
