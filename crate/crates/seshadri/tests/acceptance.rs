//! End-to-end checks, one test per release gate. Each test prints a single
//! PASS line on success; failures panic with context.

use std::process::Command;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seshadri::bounds;
use seshadri::lattice;
use seshadri::montecarlo;
use seshadri::surfaces;
use seshadri::types::SiegelPoint;
use seshadri::{GramForm, PolarizationType};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_seshadri"))
}

fn assert_runtime(name: &str, elapsed: Duration, budget: Duration) {
    assert!(
        elapsed <= budget,
        "{name} took {elapsed:?}, budget {budget:?}"
    );
}

/// The published reference table for d = 1..20: lower bound, Pell upper
/// bound (None for the dash cells), and sqrt(2d), all truncated to four
/// decimals, with sqrt(2d) printed as an integer when exact.
const REFERENCE_TABLE: [(u64, &str, Option<&str>, &str); 20] = [
    (1, "1.3228", Some("1.3333"), "1.4142"),
    (2, "1.8708", None, "2"),
    (3, "2.2912", Some("2.4000"), "2.4494"),
    (4, "2.6457", Some("2.6666"), "2.8284"),
    (5, "2.9580", Some("3.1578"), "3.1622"),
    (6, "3.2403", Some("3.4285"), "3.4641"),
    (7, "3.5000", Some("3.7333"), "3.7416"),
    (8, "3.7416", None, "4"),
    (9, "3.9686", Some("4.2352"), "4.2426"),
    (10, "4.1833", Some("4.4444"), "4.4721"),
    (11, "4.3874", Some("4.6903"), "4.6904"),
    (12, "4.5825", Some("4.8000"), "4.8989"),
    (13, "4.7696", Some("5.0980"), "5.0990"),
    (14, "4.9497", Some("5.2913"), "5.2915"),
    (15, "5.1234", Some("5.4545"), "5.4772"),
    (16, "5.2915", Some("5.6470"), "5.6568"),
    (17, "5.4543", Some("5.8285"), "5.8309"),
    (18, "5.6124", None, "6"),
    (19, "5.7662", Some("6.1621"), "6.1644"),
    (20, "5.9160", Some("6.3157"), "6.3245"),
];

/// Rows whose Seshadri constant is exactly known; the value cell expected
/// to carry the marker is the upper bound unless the row is a dash row, in
/// which case it is the sqrt(2d) cell.
const EXACT_ROWS: [u64; 6] = [1, 2, 4, 8, 12, 18];

#[test]
fn criterion_1_surface_table_text_matches_reference() {
    let started = Instant::now();
    let output = binary()
        .args(["surface-table", "--dmax", "20", "--bold-exact"])
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();

    let mut rows = Vec::new();
    let mut in_results = false;
    for line in stdout.lines() {
        if line == "results:" {
            in_results = true;
            continue;
        }
        if in_results && !line.trim_start().starts_with('d') {
            rows.push(
                line.split_whitespace()
                    .map(str::to_string)
                    .collect::<Vec<_>>(),
            );
        }
    }
    assert_eq!(rows.len(), 20, "twenty data rows");

    for (row, (d, lower, upper, sqrt)) in rows.iter().zip(REFERENCE_TABLE) {
        let exact = EXACT_ROWS.contains(&d);
        let expected_d = if exact {
            format!("*{d}")
        } else {
            d.to_string()
        };
        let expected_upper = match upper {
            Some(u) if exact => format!("*{u}"),
            Some(u) => u.to_string(),
            None => "\u{2014}".to_string(),
        };
        let expected_sqrt = if exact && upper.is_none() {
            format!("*{sqrt}")
        } else {
            sqrt.to_string()
        };
        let expected = vec![expected_d, lower.to_string(), expected_upper, expected_sqrt];
        assert_eq!(row, &expected, "row d = {d}");
    }

    // Without the flag the same numbers appear unmarked.
    let plain = binary()
        .args(["surface-table", "--dmax", "20"])
        .output()
        .expect("binary runs");
    let plain_stdout = String::from_utf8(plain.stdout).unwrap();
    assert!(!plain_stdout.contains('*'));
    for (d, lower, upper, sqrt) in REFERENCE_TABLE {
        let needle = format!(
            "{:>6}  {:>10}  {:>10}  {:>10}",
            d,
            lower,
            upper.unwrap_or("\u{2014}"),
            sqrt
        );
        assert!(
            plain_stdout.contains(&needle),
            "row d = {d} renders as {needle:?}"
        );
    }

    assert_runtime("criterion 1", started.elapsed(), Duration::from_secs(1));
    println!("criterion 1 (surface table matches the reference, dashes and exact markers included): PASS");
}

/// Chebyshev polynomial `T_j` evaluated at an integer, with early exit once
/// the value passes `limit`; `T_j(cosh t) = cosh(j t)`, so if a Pell
/// solution is the j-th power of a smaller one, its x-coordinate is `T_j`
/// of the smaller x-coordinate.
fn chebyshev_reaches(x: &BigUint, j: u32, limit: &BigUint) -> std::cmp::Ordering {
    let mut prev = BigUint::one();
    let mut curr = x.clone();
    for _ in 1..j {
        // T_{k+1} = 2 x T_k - T_{k-1}; stays positive and increasing for
        // x >= 1.
        let next = 2u32 * x * &curr - &prev;
        prev = std::mem::replace(&mut curr, next);
        if &curr > limit {
            return std::cmp::Ordering::Greater;
        }
    }
    curr.cmp(limit)
}

/// Proves minimality of a verified Pell solution (ell, k) for x^2 - n y^2
/// = 1: solutions with positive coordinates form a cyclic group, so a
/// non-minimal ell would be T_j of a smaller solution's x-coordinate for
/// some j >= 2. Searches every such (j, x) by monotone bisection and checks
/// whether any candidate x actually solves the equation.
fn certify_minimal(n: u64, ell: &BigUint, k: &BigUint) -> bool {
    assert_eq!(
        ell * ell,
        BigUint::from(n) * k * k + 1u32,
        "must be a solution"
    );
    let two = BigUint::from(2u32);
    for j in 2u32.. {
        if chebyshev_reaches(&two, j, ell) == std::cmp::Ordering::Greater {
            // Even the smallest admissible base exceeds ell at this power,
            // and higher powers only grow.
            return true;
        }
        let mut lo = two.clone();
        let mut hi = ell.clone();
        // Invariant: T_j(lo) <= ell < T_j(hi) may fail at the edges; handle
        // exact hits inside the loop.
        let mut hit: Option<BigUint> = None;
        while lo <= hi {
            let mid = (&lo + &hi) >> 1;
            match chebyshev_reaches(&mid, j, ell) {
                std::cmp::Ordering::Equal => {
                    hit = Some(mid);
                    break;
                }
                std::cmp::Ordering::Less => lo = mid + 1u32,
                // mid >= lo >= 2, so the subtraction cannot underflow.
                std::cmp::Ordering::Greater => hi = mid - 1u32,
            }
        }
        if let Some(base) = hit {
            let base_sq_minus_one = &base * &base - 1u32;
            let (quotient, remainder) =
                num_integer::Integer::div_rem(&base_sq_minus_one, &BigUint::from(n));
            if remainder.is_zero() {
                let root = quotient.sqrt();
                if &root * &root == quotient {
                    // A strictly smaller solution exists: (base, root).
                    return false;
                }
            }
        }
    }
    unreachable!("the loop returns once T_j(2) exceeds ell");
}

fn is_square_u64(v: u64) -> bool {
    let r = (v as f64).sqrt() as u64;
    for c in r.saturating_sub(1)..=r + 1 {
        if c * c == v {
            return true;
        }
    }
    false
}

#[test]
fn criterion_2_pell_solutions_are_fundamental_up_to_1000() {
    let started = Instant::now();
    const BRUTE_CAP: u64 = 200_000;
    let mut brute_checked = 0u32;
    for n in 2..=1000u64 {
        if is_square_u64(n) {
            continue;
        }
        let sol = surfaces::pell_primitive(n as i64).unwrap();
        assert_eq!(
            &sol.ell0 * &sol.ell0,
            BigUint::from(n) * &sol.k0 * &sol.k0 + 1u32,
            "identity for n = {n}"
        );

        // Literal oracle where feasible: smallest k with 1 + n k^2 square.
        if sol.k0.to_u64().is_some_and(|k| k <= BRUTE_CAP) {
            let mut found = None;
            for k in 1..=sol.k0.to_u64().unwrap() {
                let k_big = BigUint::from(k);
                let candidate = BigUint::from(n) * &k_big * &k_big + 1u32;
                let root = candidate.sqrt();
                if &root * &root == candidate {
                    found = Some((root, k_big));
                    break;
                }
            }
            let (ell, k) = found.expect("the claimed solution itself is in range");
            assert_eq!((ell, k), (sol.ell0.clone(), sol.k0.clone()), "n = {n}");
            brute_checked += 1;
        }

        // Group-structure certificate covers every n, including those whose
        // fundamental k is far beyond any feasible scan (n = 661 has 36
        // digits).
        assert!(
            certify_minimal(n, &sol.ell0, &sol.k0),
            "minimality for n = {n}"
        );
    }
    assert!(brute_checked > 600, "the literal scan should cover most n");
    assert_runtime("criterion 2", started.elapsed(), Duration::from_secs(30));
    println!("criterion 2 (Pell solutions match the incremental oracle and carry a minimality certificate, n <= 1000): PASS");
}

#[test]
fn criterion_3_surface_bounds_stay_below_maximum_up_to_10000() {
    let started = Instant::now();
    for d in 1..=10_000i64 {
        let two_d = 2 * d as u64;
        let upper = surfaces::surface_upper(d).unwrap();
        if is_square_u64(two_d) {
            assert!(upper.is_none(), "d = {d}");
            continue;
        }
        let upper = upper.unwrap_or_else(|| panic!("d = {d} should have a Pell bound"));

        // Strict sub-maximality in exact integers: the bound equals
        // 2d k0 / ell0, and (2d k0)^2 < 2d ell0^2 reduces to the Pell
        // identity. Floats cannot resolve this strictly once the margin
        // drops below machine precision, so the strict claim is checked
        // exactly and the float value is only required not to exceed the
        // maximum.
        let sol = surfaces::pell_primitive(two_d as i64).unwrap();
        let lhs = BigUint::from(two_d) * &sol.k0 * &sol.k0;
        assert!(lhs < &sol.ell0 * &sol.ell0, "exact strictness for d = {d}");

        let sqrt_2d = (two_d as f64).sqrt();
        assert!(upper <= sqrt_2d, "float bound for d = {d}");
        let lower = surfaces::surface_lower(d, None).unwrap();
        assert!(
            lower <= upper * (1.0 + 1e-12),
            "lower {lower} vs upper {upper} at d = {d}"
        );
    }
    assert_runtime("criterion 3", started.elapsed(), Duration::from_secs(60));
    println!("criterion 3 (surface bounds strictly below sqrt(2d) in exact arithmetic, lower <= upper, d <= 10000): PASS");
}

fn random_orthogonal(g: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let raw = DMatrix::from_fn(g, g, |_, _| rng.random_range(-1.0..1.0));
    let qr = raw.qr();
    qr.q()
}

fn random_siegel(
    degrees: &[i64],
    x_bound: f64,
    rng: &mut ChaCha8Rng,
) -> (PolarizationType, SiegelPoint) {
    let d = PolarizationType::new(degrees).unwrap();
    let g = d.dimension();
    let q = random_orthogonal(g, rng);
    let eigen = DMatrix::from_diagonal(&nalgebra::DVector::from_fn(g, |_, _| {
        rng.random_range(0.2..5.0)
    }));
    let y = &q * eigen * q.transpose();
    let y = (&y + y.transpose()) * 0.5;
    let mut x = DMatrix::zeros(g, g);
    for i in 0..g {
        for j in i..g {
            let v = rng.random_range(0.0..x_bound);
            x[(i, j)] = v;
            x[(j, i)] = v;
        }
    }
    let z = SiegelPoint::new(x, y).unwrap();
    (d, z)
}

fn eval_form(q: &DMatrix<f64>, coords: &[i64]) -> f64 {
    let n = coords.len();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            total += q[(i, j)] * coords[i] as f64 * coords[j] as f64;
        }
    }
    total
}

/// Minimum of the form over nonzero integer vectors with entries in
/// [-radius, radius], by direct scan. Subtrees are skipped only when
/// lambda_min * |l|^2 already exceeds the best value found, which can never
/// exclude the minimizer, so the result equals the full scan's.
fn box_minimum(q: &DMatrix<f64>, radius: i64, lambda_min: f64) -> f64 {
    fn scan(
        q: &DMatrix<f64>,
        radius: i64,
        lambda: f64,
        coords: &mut Vec<i64>,
        norm_sq: f64,
        best: &mut f64,
    ) {
        if coords.len() == q.nrows() {
            if coords.iter().any(|&c| c != 0) {
                let value = eval_form(q, coords);
                if value < *best {
                    *best = value;
                }
            }
            return;
        }
        for magnitude in 0..=radius {
            let contribution = (magnitude * magnitude) as f64;
            if lambda * (norm_sq + contribution) > *best {
                break;
            }
            for sign in [1i64, -1] {
                if magnitude == 0 && sign < 0 {
                    continue;
                }
                coords.push(sign * magnitude);
                scan(q, radius, lambda, coords, norm_sq + contribution, best);
                coords.pop();
            }
        }
    }

    let mut best = f64::INFINITY;
    scan(q, radius, lambda_min, &mut Vec::new(), 0.0, &mut best);
    best
}

/// Literal full scan with no pruning, used to validate the pruned scan.
fn box_minimum_literal(q: &DMatrix<f64>, radius: i64) -> f64 {
    box_minimum(q, radius, 0.0)
}

fn safe_lambda_min(q: &DMatrix<f64>) -> f64 {
    let eigen = q.clone().symmetric_eigen();
    eigen.eigenvalues.iter().fold(f64::MAX, |a, &b| a.min(b)) * 0.999
}

#[test]
fn criterion_4_shortest_vector_matches_box_scan() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    let per_genus: [(usize, &[&[i64]]); 3] = [
        (1, &[&[1], &[2]]),
        (2, &[&[1, 1], &[1, 2]]),
        (3, &[&[1, 1, 2]]),
    ];
    for (g, type_pool) in per_genus {
        for instance in 0..100 {
            let degrees = type_pool[instance % type_pool.len()];
            let x_bound = *degrees.last().unwrap() as f64;
            let (d, z) = random_siegel(degrees, x_bound, &mut rng);
            let q = lattice::gram_form(&z, &d).unwrap();
            let result = lattice::shortest_vector(&q).unwrap();

            assert!(
                result.witness.iter().all(|&c| c.abs() <= 25),
                "witness inside the scan box (g = {g}, instance {instance})"
            );
            let expected = box_minimum(q.matrix(), 25, safe_lambda_min(q.matrix()));
            assert!(
                (result.value - expected).abs() <= 1e-9 * expected.abs(),
                "g = {g}, instance {instance}: enumerated {} vs scanned {expected}",
                result.value
            );
            // Spot-check the pruned scan against the fully literal one on
            // the cheap dimensions.
            if g <= 2 && instance < 5 {
                assert_eq!(expected, box_minimum_literal(q.matrix(), 25));
            }
        }
    }
    assert_runtime("criterion 4", started.elapsed(), Duration::from_secs(60));
    println!("criterion 4 (shortest vector equals the exhaustive box scan, 100 instances per genus 1..3): PASS");
}

fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<i64> {
    let mut u = DMatrix::<i64>::identity(n, n);
    // Unit shears keep the entries small enough that the transformed Gram
    // matrix stays comfortably positive definite in floats.
    for _ in 0..10 {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n);
        while j == i {
            j = rng.random_range(0..n);
        }
        match rng.random_range(0..3u8) {
            0 => {
                let c = if rng.random_range(0..2) == 0 { 1 } else { -1 };
                for col in 0..n {
                    u[(i, col)] += c * u[(j, col)];
                }
            }
            1 => u.swap_rows(i, j),
            _ => {
                for col in 0..n {
                    u[(i, col)] = -u[(i, col)];
                }
            }
        }
    }
    u
}

fn integer_determinant(m: &DMatrix<i64>) -> i64 {
    // Bareiss elimination, exact for the small matrices used here.
    let n = m.nrows();
    let mut a: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| m[(i, j)] as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

#[test]
fn criterion_5_gram_determinant_and_unimodular_invariance() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(501);
    let pool: [&[i64]; 5] = [&[1], &[3], &[1, 2], &[2, 2], &[1, 1, 2]];
    for instance in 0..20 {
        let degrees = pool[instance % pool.len()];
        let (d, z) = random_siegel(degrees, d_max(degrees), &mut rng);
        let q = lattice::gram_form(&z, &d).unwrap();

        let det = q.matrix().determinant();
        let pfaffian_squared = (d.pfaffian() * d.pfaffian()).to_f64().unwrap();
        assert!(
            (det - pfaffian_squared).abs() <= 1e-9 * pfaffian_squared,
            "determinant {det} vs squared Pfaffian {pfaffian_squared} (instance {instance})"
        );

        let baseline = lattice::shortest_vector(&q).unwrap().value;
        let n = q.matrix().nrows();
        for _ in 0..50 {
            let u = random_unimodular(n, &mut rng);
            assert_eq!(integer_determinant(&u).abs(), 1);
            let u_f = u.map(|v| v as f64);
            let transformed = GramForm::new(&u_f * q.matrix() * u_f.transpose()).unwrap();
            let value = lattice::shortest_vector(&transformed).unwrap().value;
            assert!(
                (value - baseline).abs() <= 1e-9 * baseline,
                "instance {instance}: {value} vs {baseline}"
            );
        }
    }
    assert_runtime("criterion 5", started.elapsed(), Duration::from_secs(30));
    println!("criterion 5 (Gram determinant equals the squared Pfaffian; shortest value invariant under 50 unimodular changes per instance): PASS");
}

fn d_max(degrees: &[i64]) -> f64 {
    *degrees.last().unwrap() as f64
}

#[test]
fn criterion_6_average_count_converges_to_prediction() {
    let started = Instant::now();
    let cases: [&[i64]; 3] = [&[1], &[2], &[1, 1]];
    for degrees in cases {
        let d = PolarizationType::new(degrees).unwrap();
        let r_squared = montecarlo::existence_threshold_r2(&d) / 2.0;
        let attempt = |seed: u64| {
            let est = montecarlo::estimate_average(&d, 20.0, r_squared, 10_000, seed).unwrap();
            let gap = (est.mean - est.limit_prediction).abs();
            (gap <= 4.0 * est.std_error, gap, est.std_error)
        };
        let (ok, gap, se) = attempt(2026);
        if !ok {
            // One reseeded retry is part of the gate for this statistical
            // check.
            let (ok_retry, gap_retry, se_retry) = attempt(2027);
            assert!(
                ok_retry,
                "type {degrees:?}: gap {gap} (se {se}) then {gap_retry} (se {se_retry})"
            );
        }
    }
    assert_runtime("criterion 6", started.elapsed(), Duration::from_secs(300));
    println!("criterion 6 (average period count within 4 standard errors of the limit prediction at y = 20): PASS");
}

#[test]
fn criterion_7_search_reaches_ninety_percent_of_threshold() {
    let started = Instant::now();
    for degrees in [&[1][..], &[1, 1][..]] {
        let d = PolarizationType::new(degrees).unwrap();
        let target = 0.9 * montecarlo::existence_threshold_r2(&d);
        let result =
            montecarlo::existence_search(&d, target, 10_000, &montecarlo::DEFAULT_Y_GRID, 7)
                .unwrap();
        assert!(
            result.achieved && result.best_m > target,
            "type {degrees:?}: best {} vs target {target}",
            result.best_m
        );
        assert!(!result.target_above_threshold);
    }
    assert_runtime("criterion 7", started.elapsed(), Duration::from_secs(300));
    println!("criterion 7 (random search exceeds 0.9x the existence threshold within 10000 trials): PASS");
}

fn random_type(rng: &mut ChaCha8Rng, g_max: usize) -> Vec<i64> {
    let g = rng.random_range(1..=g_max);
    let mut degrees = Vec::with_capacity(g);
    let mut current = rng.random_range(1..=3i64);
    for _ in 0..g {
        degrees.push(current);
        current *= [1, 1, 1, 2, 3][rng.random_range(0..5)];
    }
    degrees
}

#[test]
fn criterion_8_bound_identities_and_exact_threshold() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(801);

    for _ in 0..200 {
        let degrees = random_type(&mut rng, 6);
        let d = PolarizationType::new(&degrees).unwrap();
        let composed = bounds::seshadri_lower_from_period(bounds::max_minimal_period_lower(&d));
        let direct = bounds::very_general_seshadri_lower(&d);
        assert!(
            (composed - direct).abs() <= 1e-12 * direct,
            "type {degrees:?}: {composed} vs {direct}"
        );
    }

    // The very-ampleness verdict must agree with an exact rational
    // evaluation of pfaffian >= (8g)^g / (2 g!), right at the boundary.
    for g in 1..=12usize {
        let numerator = BigUint::from(8 * g as u64).pow(g as u32);
        let denominator = (1..=g as u64).fold(BigUint::from(2u32), |acc, k| acc * BigUint::from(k));
        let boundary = num_integer::Integer::div_ceil(&numerator, &denominator);
        let boundary = boundary
            .to_u64()
            .expect("threshold fits in u64 for g <= 12");
        for offset in -2i64..=2 {
            let last = boundary as i64 + offset;
            if last < 1 {
                continue;
            }
            let mut degrees = vec![1i64; g - 1];
            degrees.push(last);
            let d = PolarizationType::new(&degrees).unwrap();
            let verdict = bounds::very_ample_criterion(&d);

            let pfaffian = BigRational::from(BigInt::from(last));
            let threshold = BigRational::new(
                BigInt::from(numerator.clone()),
                BigInt::from(denominator.clone()),
            );
            assert!(threshold.is_positive());
            assert_eq!(
                verdict.satisfied,
                pfaffian >= threshold,
                "g = {g}, product {last}"
            );
        }
    }

    assert_runtime("criterion 8", started.elapsed(), Duration::from_secs(60));
    println!("criterion 8 (period-to-Seshadri factor identity over 200 types; very-ampleness verdict matches exact rational arithmetic for g <= 12): PASS");
}

#[test]
fn criterion_9_period_counts_are_even() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(901);
    let pool: [&[i64]; 5] = [&[1], &[2], &[1, 1], &[1, 2], &[1, 1, 2]];
    for case in 0..1000 {
        let degrees = pool[case % pool.len()];
        let (d, z) = random_siegel(degrees, d_max(degrees), &mut rng);
        let q = lattice::gram_form(&z, &d).unwrap();
        let minimum = lattice::shortest_vector(&q).unwrap().value;
        let r_squared = rng.random_range(0.0..2.0) * minimum;
        let count = lattice::count_periods(&q, r_squared).unwrap();
        assert_eq!(count % 2, 0, "case {case}, R^2 = {r_squared}");
    }
    assert_runtime("criterion 9", started.elapsed(), Duration::from_secs(10));
    println!("criterion 9 (1000 random period counts are all even): PASS");
}
