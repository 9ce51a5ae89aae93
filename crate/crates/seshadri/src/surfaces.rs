//! Seshadri-constant bounds on abelian surfaces of type `(1, d)` with
//! rank-one Neron-Severi group, driven by the Pell equation
//! `l^2 - 2d k^2 = 1`.
//!
//! For such a surface, `eps(L) <= 2d k_0 / l_0 = 2d / sqrt(1/k_0^2 + 2d)`
//! where `(l_0, k_0)` is the primitive (minimal) Pell solution; when `2d` is
//! a perfect square there is no Pell solution and the trivial bound
//! `sqrt(2d)` is already exact. From below, `eps(L) >= (sqrt(7)/2) sqrt(d)`
//! unless a smaller elliptic-curve degree `eps_0` intervenes. When `2d + 1`
//! is a perfect square the Pell bound is attained, so the value is known
//! exactly; the classical value `4/3` for `d = 1` is also exact.

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Primitive solution of `x^2 - n y^2 = 1` together with the
/// continued-fraction data that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub n: u64,
    /// `x` of the minimal solution.
    pub ell0: BigUint,
    /// `y` of the minimal solution.
    pub k0: BigUint,
    /// Length of the continued-fraction period of `sqrt(n)`.
    pub period: usize,
    /// Quotients `[a_0; a_1, ..., a_p]`: the integer part followed by one
    /// full period.
    pub quotients: Vec<u64>,
}

/// Minimal solution of `x^2 - n y^2 = 1` via the continued-fraction
/// expansion of `sqrt(n)`. The convergent just before the end of the first
/// period solves the equation when the period length is even; otherwise the
/// expansion is continued through a second period. The returned solution is
/// re-verified exactly before it is handed out.
pub fn pell_primitive(n: i64) -> Result<PellSolution> {
    if n <= 0 {
        return Err(Error::NonPositive { n });
    }
    let n_u = n as u64;
    let a0 = n_u.sqrt();
    if a0 * a0 == n_u {
        return Err(Error::PerfectSquare { n });
    }

    // Standard integer recurrence for the continued fraction of sqrt(n):
    // quotients a_k with remainders (p_k, q_k). All intermediate values fit
    // in u128 for any i64 input.
    let n_w = n_u as u128;
    let a0_w = a0 as u128;
    let mut p: u128 = 0;
    let mut q: u128 = 1;
    let mut a = a0_w;

    // Convergents h_k / y_k, running exactly.
    let mut h_prev = BigUint::from(1u32);
    let mut h = BigUint::from(a0);
    let mut y_prev = BigUint::from(0u32);
    let mut y = BigUint::from(1u32);

    let mut quotients = vec![a0];
    let mut period = 0usize;
    // The period of sqrt(n) ends at the first quotient equal to 2 a_0 (with
    // remainder denominator 1). An odd period needs a second pass before a
    // convergent solves x^2 - n y^2 = +1.
    let mut steps = 0usize;
    let (ell0, k0) = loop {
        steps += 1;
        assert!(steps < 10_000_000, "continued fraction failed to close");
        p = a * q - p;
        q = (n_w - p * p) / q;
        a = (a0_w + p) / q;

        let a_big = BigUint::from(a as u64);
        let h_next = &a_big * &h + &h_prev;
        let y_next = &a_big * &y + &y_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        y_prev = std::mem::replace(&mut y, y_next);

        if period == 0 {
            quotients.push(a as u64);
        }

        if q == 1 && a == 2 * a0_w {
            // End of a period: `h_prev / y_prev` is the convergent just
            // before this quotient.
            let closed = steps;
            if period == 0 {
                period = closed;
            }
            if closed.is_multiple_of(2) {
                break (h_prev.clone(), y_prev.clone());
            }
        }
    };

    let lhs = &ell0 * &ell0;
    let rhs = BigUint::from(n_u) * &k0 * &k0 + 1u32;
    assert_eq!(lhs, rhs, "Pell identity must hold exactly");
    Ok(PellSolution {
        n: n_u,
        ell0,
        k0,
        period,
        quotients,
    })
}

fn is_square(v: u64) -> bool {
    let r = v.sqrt();
    r * r == v
}

/// Pell upper bound `2d / sqrt(1/k_0^2 + 2d)` for the Seshadri constant on a
/// rank-one surface of type `(1, d)`. `None` when `2d` is a perfect square,
/// where no Pell solution exists and `sqrt(2d)` itself is the exact value.
pub fn surface_upper(d: i64) -> Result<Option<f64>> {
    if d <= 0 {
        return Err(Error::NonPositive { n: d });
    }
    let two_d = 2 * d as u64;
    if is_square(two_d) {
        return Ok(None);
    }
    let pell = pell_primitive(two_d as i64)?;
    // For large solutions 1/k_0^2 underflows; the bound is then sqrt(2d) to
    // double precision. It is clamped so rounding can never push it above.
    let k0 = pell.k0.to_f64().unwrap_or(f64::INFINITY);
    let inv_sq = if k0.is_finite() {
        let sq = k0 * k0;
        if sq.is_finite() {
            1.0 / sq
        } else {
            0.0
        }
    } else {
        0.0
    };
    let sqrt_2d = (two_d as f64).sqrt();
    let upper = (two_d as f64) / (inv_sq + two_d as f64).sqrt();
    Ok(Some(upper.min(sqrt_2d)))
}

/// Lower bound `min(eps_0, (sqrt(7)/2) sqrt(d))` for the Seshadri constant.
/// `eps_0` is the minimal degree of an elliptic curve on the surface, when
/// one exists and its degree is known; pass `None` otherwise. Degrees of
/// curves are at least 1, so `eps_0 >= 1` is expected.
pub fn surface_lower(d: i64, eps0: Option<f64>) -> Result<f64> {
    if d <= 0 {
        return Err(Error::NonPositive { n: d });
    }
    debug_assert!(eps0.is_none_or(|e| e >= 1.0), "curve degrees are >= 1");
    let generic = 7.0f64.sqrt() / 2.0 * (d as f64).sqrt();
    Ok(match eps0 {
        Some(e) => e.min(generic),
        None => generic,
    })
}

/// True when the Pell upper bound is attained: exactly when `2d + 1` is a
/// perfect square (equivalently `k_0 = 1`), which forces `d` even.
pub fn sharpness_case(d: u64) -> bool {
    is_square(2 * d + 1)
}

/// One row of the bound table for surfaces of type `(1, d)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceBounds {
    pub d: u64,
    pub eps_lower: f64,
    /// Pell upper bound; absent when `2d` is a perfect square.
    pub eps_upper: Option<f64>,
    /// The a-priori maximum `sqrt(2d)`.
    pub sqrt_2d: f64,
    /// The Pell bound is attained (`2d + 1` is a perfect square).
    pub sharp: bool,
    /// `2d` is a perfect square, so `eps = sqrt(2d)` exactly.
    pub maximal: bool,
    /// The exact value of `eps` is known for rank-one surfaces: sharp rows,
    /// maximal rows, and the classical `d = 1` case with value `4/3`.
    pub exact_known: bool,
}

/// Bound table for `d = 1, ..., d_max`.
pub fn surface_table(d_max: i64) -> Result<Vec<SurfaceBounds>> {
    if d_max <= 0 {
        return Err(Error::NonPositive { n: d_max });
    }
    use rayon::prelude::*;
    (1..=d_max)
        .into_par_iter()
        .map(|d| {
            let eps_upper = surface_upper(d)?;
            let eps_lower = surface_lower(d, None)?;
            let d_u = d as u64;
            let sharp = sharpness_case(d_u);
            let maximal = is_square(2 * d_u);
            Ok(SurfaceBounds {
                d: d_u,
                eps_lower,
                eps_upper,
                sqrt_2d: (2.0 * d as f64).sqrt(),
                sharp,
                maximal,
                exact_known: sharp || maximal || d == 1,
            })
        })
        .collect()
}

/// Truncates (never rounds) to four decimal places for table display. The
/// tiny epsilon absorbs the representation error of values that are exact
/// decimals, like 24/5 = 4.8000; it is far below the spacing of any value
/// that is not already on the 1e-4 grid.
pub fn truncate4(x: f64) -> f64 {
    (x * 1e4 + 1e-7).floor() / 1e4
}

fn format_truncated(x: f64) -> String {
    format!("{:.4}", truncate4(x))
}

/// Renders the table in fixed-width text. Values are truncated to four
/// decimals; a `sqrt(2d)` that is an exact integer prints as the integer.
/// With `bold_exact`, the `d` cell and the cell holding the exactly known
/// value are prefixed with `*`.
pub fn render_table_text(rows: &[SurfaceBounds], bold_exact: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:>6}  {:>10}  {:>10}  {:>10}\n",
        "d", "eps_lower", "eps_upper", "sqrt(2d)"
    ));
    for row in rows {
        let mark = |text: String, marked: bool| {
            if bold_exact && marked {
                format!("*{text}")
            } else {
                text
            }
        };
        let d_cell = mark(row.d.to_string(), row.exact_known);
        let lower_cell = format_truncated(row.eps_lower);
        let upper_exact = row.exact_known && !row.maximal;
        let upper_cell = match row.eps_upper {
            Some(u) => mark(format_truncated(u), upper_exact),
            None => "\u{2014}".to_string(),
        };
        let sqrt_cell = if row.maximal {
            mark((2 * row.d).sqrt().to_string(), true)
        } else {
            format_truncated(row.sqrt_2d)
        };
        out.push_str(&format!(
            "{d_cell:>6}  {lower_cell:>10}  {upper_cell:>10}  {sqrt_cell:>10}\n"
        ));
    }
    out
}
