//! Period lattices and Seshadri constants of polarized abelian varieties.
//!
//! The crate computes, for a polarization type `(d_1, ..., d_g)` and a point
//! `Z = X + iY` of the Siegel upper half space:
//!
//! - the Gram form of the period lattice and its exact minimal value
//!   (the minimal period length) via reduction plus enumeration
//!   ([`lattice`]),
//! - counts of short periods within a given radius ([`lattice`]),
//! - closed-form lower and upper bounds for Seshadri constants and minimal
//!   period lengths, a very-ampleness criterion, and bounds on Prym
//!   varieties ([`bounds`]),
//! - Pell-equation bounds on abelian surfaces with rank-one Neron-Severi
//!   group ([`surfaces`]),
//! - a seeded Monte Carlo estimate of the average period count over a
//!   compact family, plus a randomized search for points with large minimal
//!   period length ([`montecarlo`]).

pub mod bounds;
pub mod error;
pub mod lattice;
pub mod montecarlo;
pub mod surfaces;
pub mod types;

pub use error::{Error, Result};
pub use lattice::{
    count_periods, count_periods_capped, gram_form, minimal_period_length, shortest_vector,
    ShortestVectorResult,
};
pub use types::{
    BoundEntry, BoundKind, BoundReport, GramForm, PolarizationType, SiegelPoint, SiegelPointSchema,
};
