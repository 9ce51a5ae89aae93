//! Period-lattice computations: the Gram form of a polarized abelian variety
//! and exact shortest-vector / lattice-point-counting routines on it.
//!
//! For `Z = X + iY` in the Siegel upper half space and `D = diag(d_1..d_g)`,
//! the periods of `(A_Z, L_Z)` are `Z n + D m` with `(m, n)` ranging over
//! `Z^{2g}`, and the squared length of a period under the polarization metric
//! is the positive definite quadratic form
//!
//! ```text
//! q(m, n) = (Dm + Xn)^T Y^{-1} (Dm + Xn) + n^T D^{-1} Y D^{-1} n
//!         = l^T (B^T M B) l
//! ```
//!
//! with `l = (m, n)`, `B = [[D, X], [0, D]]` and
//! `M = blockdiag(Y^{-1}, D^{-1} Y D^{-1})`. The assembly below uses this
//! block form directly; no matrix square root is ever taken. Its determinant
//! is `(d_1 ... d_g)^2` exactly.
//!
//! The shortest vector and counting routines first LLL-reduce the Gram matrix
//! (working on the Gram matrix alone, tracking the unimodular change of
//! basis), then run an exhaustive ellipsoid enumeration on the Cholesky
//! factorization of the reduced form. Pruning radii are inflated by a factor
//! `1 + 1e-6` and every candidate is re-verified against the original form,
//! so boundary vectors are never lost to rounding.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::types::{GramForm, PolarizationType, SiegelPoint, CONDITION_LIMIT};

/// Relative inflation applied to enumeration radii before pruning.
const RADIUS_MARGIN: f64 = 1e-6;

/// Default cap on the estimated number of candidate vectors visited by
/// [`count_periods`].
pub const DEFAULT_COUNT_CAP: u64 = 100_000_000;

/// Lovasz parameter for the LLL reduction.
const LLL_DELTA: f64 = 0.99;

/// Result of a shortest-vector computation.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortestVectorResult {
    /// Minimal value of the form over nonzero integer vectors.
    pub value: f64,
    /// A nonzero integer vector attaining `value`, sign-normalized so its
    /// first nonzero coordinate is positive; ties are broken by lexicographic
    /// order.
    pub witness: Vec<i64>,
    /// The enumeration was exhaustive for all vectors of squared length up to
    /// this radius, so no nonzero vector shorter than `value` exists.
    pub certified_radius: f64,
}

/// Builds the Gram form of the period lattice of `(A_Z, L_Z)` in the integer
/// coordinates `(m_1..m_g, n_1..n_g)`.
pub fn gram_form(z: &SiegelPoint, d: &PolarizationType) -> Result<GramForm> {
    let g = d.dimension();
    if z.dimension() != g {
        return Err(Error::DimensionMismatch {
            context: "Siegel point against polarization type".to_string(),
            expected: g,
            actual: z.dimension(),
        });
    }

    let y = z.y();
    let eigen = y.clone().symmetric_eigen();
    let max_ev = eigen.eigenvalues.iter().fold(f64::MIN, |a, &b| a.max(b));
    let min_ev = eigen.eigenvalues.iter().fold(f64::MAX, |a, &b| a.min(b));
    if min_ev.is_nan() || min_ev <= 0.0 || max_ev / min_ev > CONDITION_LIMIT {
        return Err(Error::SingularY {
            condition: if min_ev > 0.0 {
                max_ev / min_ev
            } else {
                f64::INFINITY
            },
        });
    }

    let y_inv = nalgebra::Cholesky::new(y.clone())
        .ok_or_else(|| Error::NotPositiveDefinite {
            name: "Y".to_string(),
        })?
        .inverse();

    let degrees = d.degrees();
    // M = blockdiag(Y^{-1}, D^{-1} Y D^{-1})
    let mut m = DMatrix::zeros(2 * g, 2 * g);
    for i in 0..g {
        for j in 0..g {
            m[(i, j)] = y_inv[(i, j)];
            m[(g + i, g + j)] = y[(i, j)] / (degrees[i] as f64 * degrees[j] as f64);
        }
    }
    // B = [[D, X], [0, D]]
    let mut b = DMatrix::zeros(2 * g, 2 * g);
    for i in 0..g {
        b[(i, i)] = degrees[i] as f64;
        b[(g + i, g + i)] = degrees[i] as f64;
        for j in 0..g {
            b[(i, g + j)] = z.x()[(i, j)];
        }
    }
    let q = b.transpose() * m * b;
    GramForm::new((&q + q.transpose()) * 0.5)
}

/// Minimal squared period length `m(A_Z, L_Z)` together with a witness.
pub fn minimal_period_length(
    z: &SiegelPoint,
    d: &PolarizationType,
) -> Result<ShortestVectorResult> {
    shortest_vector(&gram_form(z, d)?)
}

/// Cholesky-style Gram-Schmidt data computed from a Gram matrix alone:
/// `mu[(i, j)]` for `j < i` and the squared norms `r[i]` of the orthogonalized
/// vectors.
fn gso_from_gram(g: &DMatrix<f64>) -> Result<(DMatrix<f64>, Vec<f64>)> {
    let n = g.nrows();
    let mut mu = DMatrix::zeros(n, n);
    let mut inner = DMatrix::zeros(n, n);
    let mut r = vec![0.0; n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = g[(i, j)];
            for k in 0..j {
                s -= mu[(j, k)] * inner[(i, k)];
            }
            inner[(i, j)] = s;
            if j < i {
                mu[(i, j)] = s / r[j];
            } else {
                if !s.is_finite() || s <= 0.0 {
                    return Err(Error::NotPositiveDefinite {
                        name: "Q".to_string(),
                    });
                }
                r[i] = s;
            }
        }
    }
    Ok((mu, r))
}

/// LLL reduction operating on a Gram matrix. Returns `(G', U)` with
/// `G' = U G U^T` and `U` integer with determinant `+-1`; row `i` of `U`
/// expresses the i-th reduced basis vector in the original integer basis.
fn lll_reduce(gram: &DMatrix<f64>) -> Result<(DMatrix<f64>, DMatrix<i64>)> {
    let n = gram.nrows();
    let mut g = gram.clone();
    let mut u = DMatrix::<i64>::identity(n, n);

    // b_k <- b_k - q b_j, applied to the Gram matrix and the transform.
    let row_op = |g: &mut DMatrix<f64>, u: &mut DMatrix<i64>, k: usize, j: usize, q: i64| {
        let qf = q as f64;
        for c in 0..n {
            let v = g[(j, c)];
            g[(k, c)] -= qf * v;
        }
        for rrow in 0..n {
            let v = g[(rrow, j)];
            g[(rrow, k)] -= qf * v;
        }
        for c in 0..n {
            let v = u[(j, c)];
            u[(k, c)] -= q * v;
        }
    };

    let swap = |g: &mut DMatrix<f64>, u: &mut DMatrix<i64>, k: usize| {
        g.swap_rows(k, k - 1);
        g.swap_columns(k, k - 1);
        u.swap_rows(k, k - 1);
    };

    let (mut mu, mut r) = gso_from_gram(&g)?;
    let mut k = 1;
    let mut iterations = 0usize;
    let cap = 20_000 + 2_000 * n * n;
    while k < n {
        iterations += 1;
        if iterations > cap {
            // Reduction has stalled numerically. U is still unimodular, so
            // enumeration on the current form remains exact, just slower.
            break;
        }
        for j in (0..k).rev() {
            let q = mu[(k, j)].round();
            if q != 0.0 && q.abs() < 9e15 {
                row_op(&mut g, &mut u, k, j, q as i64);
                let recomputed = gso_from_gram(&g)?;
                mu = recomputed.0;
                r = recomputed.1;
            }
        }
        if r[k] >= (LLL_DELTA - mu[(k, k - 1)] * mu[(k, k - 1)]) * r[k - 1] {
            k += 1;
        } else {
            swap(&mut g, &mut u, k);
            let recomputed = gso_from_gram(&g)?;
            mu = recomputed.0;
            r = recomputed.1;
            k = if k > 1 { k - 1 } else { 1 };
        }
    }
    Ok((g, u))
}

/// Upper-triangular `R` with `R^T R = G`, from the Cholesky factorization.
fn upper_cholesky(g: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let chol = nalgebra::Cholesky::new(g.clone()).ok_or_else(|| Error::NotPositiveDefinite {
        name: "Q".to_string(),
    })?;
    Ok(chol.l().transpose())
}

/// Maps reduced-basis coefficients back to the original integer coordinates:
/// the lattice vector is `sum_i coeffs[i] * (row i of U)`.
fn to_original(u: &DMatrix<i64>, coeffs: &[i64]) -> Vec<i64> {
    let n = coeffs.len();
    let mut out = vec![0i64; n];
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            for j in 0..n {
                out[j] += c * u[(i, j)];
            }
        }
    }
    out
}

fn sign_normalize(v: &mut [i64]) {
    if let Some(first) = v.iter().find(|&&c| c != 0) {
        if *first < 0 {
            for c in v.iter_mut() {
                *c = -*c;
            }
        }
    }
}

/// Depth-first shortest-vector search over the Cholesky factor `r`, visiting
/// coordinates from the last level down and each coordinate in zig-zag order
/// around the real minimizer. The pruning radius shrinks as better vectors
/// are found; every vector with squared length within `1 + 1e-9` of the
/// running minimum is collected so ties can be resolved afterwards.
struct MinSearch<'a> {
    r: &'a DMatrix<f64>,
    n: usize,
    bound: f64,
    best: f64,
    candidates: Vec<(f64, Vec<i64>)>,
    coeffs: Vec<i64>,
}

impl<'a> MinSearch<'a> {
    fn run(r: &'a DMatrix<f64>, initial_bound: f64) -> Self {
        let n = r.nrows();
        let mut search = MinSearch {
            r,
            n,
            bound: initial_bound,
            best: f64::INFINITY,
            candidates: Vec::new(),
            coeffs: vec![0; n],
        };
        search.descend(n, 0.0);
        search
    }

    fn record(&mut self, value: f64) {
        if value < self.best {
            self.best = value;
            let keep = self.best * (1.0 + 1e-9);
            self.candidates.retain(|(v, _)| *v <= keep);
            self.bound = self.bound.min(self.best * (1.0 + RADIUS_MARGIN));
        }
        if value <= self.best * (1.0 + 1e-9) {
            self.candidates.push((value, self.coeffs.clone()));
        }
    }

    /// `level` counts how many coordinates are still unset; coordinate
    /// `level - 1` is chosen here. `partial` is the squared length
    /// contributed by coordinates `level..n`.
    fn descend(&mut self, level: usize, partial: f64) {
        let i = level - 1;
        let rii = self.r[(i, i)];
        let mut rho = 0.0;
        for j in level..self.n {
            rho += self.r[(i, j)] * self.coeffs[j] as f64;
        }
        let center = -rho / rii;
        let start = center.round();
        let mut offset = 0i64;
        let mut low_open = true;
        let mut high_open = true;
        loop {
            let v = start + offset as f64;
            let going_high = offset >= 0;
            let t = rii * v + rho;
            let contribution = t * t;
            let inside = partial + contribution <= self.bound && v.abs() < 9e15;
            if inside {
                let vi = v as i64;
                self.coeffs[i] = vi;
                if i == 0 {
                    if self.coeffs.iter().any(|&c| c != 0) {
                        self.record(partial + contribution);
                    }
                } else {
                    self.descend(level - 1, partial + contribution);
                }
                self.coeffs[i] = 0;
            } else if going_high {
                high_open = false;
            } else {
                low_open = false;
            }
            if !low_open && !high_open {
                return;
            }
            // Zig-zag: 0, +1, -1, +2, -2, ... skipping a closed side.
            offset = if going_high {
                if low_open {
                    -offset - 1
                } else {
                    offset + 1
                }
            } else if high_open {
                -offset
            } else {
                offset - 1
            };
        }
    }
}

/// Shortest nonzero vector of the form, by LLL reduction followed by
/// exhaustive enumeration.
pub fn shortest_vector(q: &GramForm) -> Result<ShortestVectorResult> {
    let (reduced, u) = lll_reduce(q.matrix())?;
    let r = upper_cholesky(&reduced)?;
    let n = reduced.nrows();
    let min_diag = (0..n).map(|i| reduced[(i, i)]).fold(f64::MAX, f64::min);
    let certified_radius = min_diag * (1.0 + RADIUS_MARGIN);

    let search = MinSearch::run(&r, certified_radius);
    debug_assert!(
        !search.candidates.is_empty(),
        "a basis vector is always inside the radius"
    );

    // Re-evaluate candidates on the original form, then pick the minimum;
    // among exact float ties take the lexicographically smallest witness
    // after sign normalization.
    let mut best: Option<(f64, Vec<i64>)> = None;
    for (_, coeffs) in &search.candidates {
        let mut vec = to_original(&u, coeffs);
        sign_normalize(&mut vec);
        let value = q.evaluate(&vec);
        best = Some(match best.take() {
            None => (value, vec),
            Some((bv, bw)) => {
                if value < bv || (value == bv && vec < bw) {
                    (value, vec)
                } else {
                    (bv, bw)
                }
            }
        });
    }
    let (value, witness) = best.expect("candidate list is nonempty");
    Ok(ShortestVectorResult {
        value,
        witness,
        certified_radius,
    })
}

/// Counts leaves of the ellipsoid tree with the topmost nonzero coordinate
/// positive; the caller doubles the result. `accept` re-verifies each
/// candidate against the original form.
fn count_half(
    r: &DMatrix<f64>,
    level: usize,
    all_zero: bool,
    partial: f64,
    bound: f64,
    coeffs: &mut [i64],
    accept: &impl Fn(&[i64]) -> bool,
) -> u64 {
    let n = r.nrows();
    let i = level - 1;
    let rii = r[(i, i)];
    let mut rho = 0.0;
    for j in level..n {
        rho += r[(i, j)] * coeffs[j] as f64;
    }
    let budget = bound - partial;
    if budget < 0.0 {
        return 0;
    }
    let w = budget.sqrt();
    let lo_f = (-w - rho) / rii;
    let hi_f = (w - rho) / rii;
    let mut lo = (lo_f - 1e-9).ceil();
    let hi = (hi_f + 1e-9).floor();
    if all_zero && lo < 0.0 {
        lo = 0.0;
    }
    if lo > hi {
        return 0;
    }
    let (lo, hi) = (lo as i64, hi as i64);
    let mut total = 0;
    for v in lo..=hi {
        let t = rii * v as f64 + rho;
        let next_partial = partial + t * t;
        if next_partial > bound {
            continue;
        }
        coeffs[i] = v;
        let zero_so_far = all_zero && v == 0;
        if i == 0 {
            if !zero_so_far && accept(coeffs) {
                total += 1;
            }
        } else {
            total += count_half(
                r,
                level - 1,
                zero_so_far,
                next_partial,
                bound,
                coeffs,
                accept,
            );
        }
    }
    coeffs[i] = 0;
    total
}

/// Number of nonzero lattice vectors with `q(l) <= r_squared`, with the
/// default work cap of [`DEFAULT_COUNT_CAP`] candidate vectors.
pub fn count_periods(q: &GramForm, r_squared: f64) -> Result<u64> {
    count_periods_capped(q, r_squared, DEFAULT_COUNT_CAP)
}

/// Same as [`count_periods`] with an explicit cap on the estimated number of
/// candidates; exceeding the cap fails with [`Error::RadiusTooLarge`] rather
/// than running away.
pub fn count_periods_capped(q: &GramForm, r_squared: f64, cap: u64) -> Result<u64> {
    if r_squared.is_nan() || r_squared < 0.0 {
        // The ball has no lattice points at all for a negative radius, and
        // an empty count is the harmless reading of NaN.
        return Ok(0);
    }
    let (reduced, u) = lll_reduce(q.matrix())?;
    let r = upper_cholesky(&reduced)?;
    let n = reduced.nrows();
    let bound = r_squared * (1.0 + RADIUS_MARGIN);

    let mut estimate = 1.0f64;
    for i in 0..n {
        estimate *= 2.0 * bound.sqrt() / r[(i, i)] + 1.0;
        if estimate > cap as f64 {
            return Err(Error::RadiusTooLarge { estimate, cap });
        }
    }

    let accept = |coeffs: &[i64]| -> bool {
        let vec = to_original(&u, coeffs);
        q.evaluate(&vec) <= r_squared
    };
    let mut coeffs = vec![0i64; n];
    let half = count_half(&r, n, true, 0.0, bound, &mut coeffs, &accept);
    Ok(half * 2)
}
