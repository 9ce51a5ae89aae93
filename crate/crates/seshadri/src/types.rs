//! Domain types: polarization types, points of the Siegel upper half space,
//! Gram forms of period lattices, and bound reports.
//!
//! A polarized abelian variety of dimension `g` is described here by two
//! pieces of data: the polarization type `(d_1, ..., d_g)` with `d_i | d_{i+1}`,
//! and a point `Z = X + iY` of the Siegel upper half space (X, Y real
//! symmetric, Y positive definite). All validation lives on the constructors,
//! so a value of one of these types is always usable.

use nalgebra::DMatrix;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Matrices are accepted as symmetric when `max |M - M^T|` is at most this,
/// and are then replaced by `(M + M^T) / 2`, which is exactly symmetric.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// Imaginary parts whose eigenvalue ratio exceeds this are rejected as
/// numerically singular before any inversion is attempted.
pub const CONDITION_LIMIT: f64 = 1e12;

/// A polarization type `(d_1, ..., d_g)`: positive integers with each degree
/// dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationType {
    degrees: Vec<u64>,
    pfaffian: BigUint,
    l_power_g: BigUint,
}

impl PolarizationType {
    /// Validates a degree list and precomputes the exact products
    /// `pfaffian = prod d_i` and `L^g = g! * prod d_i`.
    pub fn new(degrees: &[i64]) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyType);
        }
        for (i, &d) in degrees.iter().enumerate() {
            if d < 1 {
                return Err(Error::NonPositiveDegree {
                    index: i + 1,
                    value: d,
                });
            }
        }
        let degrees: Vec<u64> = degrees.iter().map(|&d| d as u64).collect();
        for (i, pair) in degrees.windows(2).enumerate() {
            if pair[1] % pair[0] != 0 {
                return Err(Error::DivisibilityViolation {
                    index: i + 1,
                    degree: pair[0],
                    next_degree: pair[1],
                });
            }
        }
        let pfaffian = degrees
            .iter()
            .fold(BigUint::from(1u32), |acc, &d| acc * BigUint::from(d));
        let factorial =
            (1..=degrees.len() as u64).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k));
        let l_power_g = factorial * &pfaffian;
        Ok(Self {
            degrees,
            pfaffian,
            l_power_g,
        })
    }

    /// The abelian variety's dimension `g`.
    pub fn dimension(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Largest degree `d_g`; every other degree divides it.
    pub fn max_degree(&self) -> u64 {
        *self.degrees.last().expect("type is never empty")
    }

    /// Exact product `d_1 * ... * d_g`.
    pub fn pfaffian(&self) -> &BigUint {
        &self.pfaffian
    }

    /// Exact self-intersection number `L^g = g! * d_1 * ... * d_g`.
    pub fn l_power_g(&self) -> &BigUint {
        &self.l_power_g
    }

    /// The diagonal matrix `D = diag(d_1, ..., d_g)` as floats.
    pub fn diagonal_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            self.degrees.len(),
            self.degrees.iter().map(|&d| d as f64),
        ))
    }
}

/// Checks that `m` is square with the expected size, within tolerance of
/// symmetric, and fully finite; returns the exactly symmetrized copy.
fn validate_symmetric(
    m: &DMatrix<f64>,
    name: &str,
    expected: Option<usize>,
) -> Result<DMatrix<f64>> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch {
            context: format!("matrix {name}"),
            expected: m.nrows(),
            actual: m.ncols(),
        });
    }
    if let Some(g) = expected {
        if m.nrows() != g {
            return Err(Error::DimensionMismatch {
                context: format!("matrix {name}"),
                expected: g,
                actual: m.nrows(),
            });
        }
    }
    if m.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFiniteEntry {
            name: name.to_string(),
        });
    }
    let mut asymmetry: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in (i + 1)..m.ncols() {
            asymmetry = asymmetry.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    if asymmetry > SYMMETRY_TOLERANCE {
        return Err(Error::NotSymmetric {
            name: name.to_string(),
            asymmetry,
        });
    }
    Ok((m + m.transpose()) * 0.5)
}

/// A point `Z = X + iY` of the Siegel upper half space: both parts real
/// symmetric and `Y` positive definite (witnessed by a Cholesky factorization
/// at construction time).
#[derive(Debug, Clone, PartialEq)]
pub struct SiegelPoint {
    x: DMatrix<f64>,
    y: DMatrix<f64>,
}

impl SiegelPoint {
    pub fn new(x: DMatrix<f64>, y: DMatrix<f64>) -> Result<Self> {
        let x = validate_symmetric(&x, "X", None)?;
        let y = validate_symmetric(&y, "Y", Some(x.nrows()))?;
        if nalgebra::Cholesky::new(y.clone()).is_none() {
            return Err(Error::NotPositiveDefinite {
                name: "Y".to_string(),
            });
        }
        Ok(Self { x, y })
    }

    /// Point with `X = 0`.
    pub fn purely_imaginary(y: DMatrix<f64>) -> Result<Self> {
        let g = y.nrows();
        Self::new(DMatrix::zeros(g, g), y)
    }

    pub fn dimension(&self) -> usize {
        self.x.nrows()
    }

    pub fn x(&self) -> &DMatrix<f64> {
        &self.x
    }

    pub fn y(&self) -> &DMatrix<f64> {
        &self.y
    }
}

/// The Gram matrix of the period lattice of `(A_Z, L_Z)` in the integer
/// coordinates `(m_1, ..., m_g, n_1, ..., n_g)`: a symmetric positive definite
/// `2g x 2g` real matrix. `q.matrix()[(i, j)]` is the inner product of the
/// i-th and j-th lattice generators.
#[derive(Debug, Clone, PartialEq)]
pub struct GramForm {
    matrix: DMatrix<f64>,
}

impl GramForm {
    /// Accepts any symmetric positive definite matrix of even size.
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        let matrix = validate_symmetric(&matrix, "Q", None)?;
        if matrix.nrows() % 2 != 0 || matrix.nrows() == 0 {
            return Err(Error::DimensionMismatch {
                context: "Gram form (size must be even and positive)".to_string(),
                expected: matrix.nrows() + matrix.nrows() % 2,
                actual: matrix.nrows(),
            });
        }
        if nalgebra::Cholesky::new(matrix.clone()).is_none() {
            return Err(Error::NotPositiveDefinite {
                name: "Q".to_string(),
            });
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Size of the matrix, `2g`.
    pub fn size(&self) -> usize {
        self.matrix.nrows()
    }

    /// Evaluates the quadratic form at an integer vector.
    pub fn evaluate(&self, v: &[i64]) -> f64 {
        assert_eq!(v.len(), self.size(), "vector length must match form size");
        let mut total = 0.0;
        for (i, &vi) in v.iter().enumerate() {
            let mut row = 0.0;
            for (j, &vj) in v.iter().enumerate() {
                row += self.matrix[(i, j)] * vj as f64;
            }
            total += vi as f64 * row;
        }
        total
    }
}

/// Whether a reported value bounds its quantity from below, from above, or is
/// exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

/// One named bound with the hypothesis it depends on (`None` when it is
/// unconditional).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    /// Which quantity is being bounded, e.g. `"seshadri"` or
    /// `"minimal_period"`. Ordering checks compare only entries that bound
    /// the same quantity.
    pub quantity: String,
    pub value: f64,
    pub kind: BoundKind,
    pub hypothesis: Option<String>,
}

/// A collection of bounds for one input, suitable for direct serialization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub input: String,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn new(input: impl Into<String>) -> Self {
        Self {
            input: input.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        quantity: impl Into<String>,
        value: f64,
        kind: BoundKind,
        hypothesis: Option<&str>,
    ) {
        self.entries.push(BoundEntry {
            name: name.into(),
            quantity: quantity.into(),
            value,
            kind,
            hypothesis: hypothesis.map(str::to_string),
        });
    }

    /// True when, for every quantity, each lower bound is at most each upper
    /// bound (exact values count as both).
    pub fn ordering_consistent(&self) -> bool {
        for a in &self.entries {
            for b in &self.entries {
                if a.quantity != b.quantity {
                    continue;
                }
                let a_low = matches!(a.kind, BoundKind::Lower | BoundKind::Exact);
                let b_up = matches!(b.kind, BoundKind::Upper | BoundKind::Exact);
                if a_low && b_up && a.value > b.value * (1.0 + 1e-12) + 1e-300 {
                    return false;
                }
            }
        }
        true
    }
}

/// JSON wire format for a polarized Siegel point:
/// `{"g": 1, "type": [1], "X": [[0.0]], "Y": [[1.0]]}` with `X` optional
/// (defaulting to the zero matrix).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SiegelPointSchema {
    pub g: usize,
    #[serde(rename = "type")]
    pub degrees: Vec<i64>,
    #[serde(rename = "X", default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<Vec<f64>>>,
    #[serde(rename = "Y")]
    pub y: Vec<Vec<f64>>,
}

fn rows_to_matrix(rows: &[Vec<f64>], g: usize, name: &str) -> Result<DMatrix<f64>> {
    if rows.len() != g || rows.iter().any(|r| r.len() != g) {
        return Err(Error::DimensionMismatch {
            context: format!("matrix {name} rows"),
            expected: g,
            actual: rows
                .iter()
                .map(|r| r.len())
                .chain([rows.len()])
                .max()
                .unwrap_or(0),
        });
    }
    Ok(DMatrix::from_fn(g, g, |i, j| rows[i][j]))
}

fn matrix_to_rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect()
}

impl SiegelPointSchema {
    pub fn from_parts(d: &PolarizationType, z: &SiegelPoint) -> Self {
        Self {
            g: d.dimension(),
            degrees: d.degrees().iter().map(|&v| v as i64).collect(),
            x: Some(matrix_to_rows(z.x())),
            y: matrix_to_rows(z.y()),
        }
    }

    /// Validates the schema into the two domain values it describes.
    pub fn into_parts(self) -> Result<(PolarizationType, SiegelPoint)> {
        let d = PolarizationType::new(&self.degrees)?;
        if d.dimension() != self.g {
            return Err(Error::DimensionMismatch {
                context: "field \"type\" against field \"g\"".to_string(),
                expected: self.g,
                actual: d.dimension(),
            });
        }
        let y = rows_to_matrix(&self.y, self.g, "Y")?;
        let x = match &self.x {
            Some(rows) => rows_to_matrix(rows, self.g, "X")?,
            None => DMatrix::zeros(self.g, self.g),
        };
        let z = SiegelPoint::new(x, y)?;
        Ok((d, z))
    }
}
