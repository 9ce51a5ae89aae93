//! C ABI for the seshadri library.
//!
//! Conventions shared by every function here:
//!
//! * fallible calls return a [`SeshadriStatus`] and write results through out
//!   pointers, which are touched only on `SESHADRI_STATUS_OK`;
//! * strings handed to the caller are NUL-terminated UTF-8 owned by this
//!   library; release them with [`seshadri_string_free`];
//! * after a non-OK status, [`seshadri_last_error_message`] returns a
//!   human-readable explanation for the current thread;
//! * panics never unwind across the boundary; they are reported as
//!   `SESHADRI_STATUS_INTERNAL_PANIC`.
//!
//! Structured inputs and outputs travel as JSON documents in the same shapes
//! the `seshadri` command-line tool reads and writes, so a binding written
//! against one is a binding written against both.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::Deserialize;
use serde_json::json;
use seshadri::{bounds, lattice, montecarlo, surfaces};
use seshadri::{PolarizationType, SiegelPointSchema};

/// Result of a call across the C boundary.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeshadriStatus {
    /// The call succeeded and all out pointers are filled in.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// The input failed validation; see `seshadri_last_error_message`.
    InvalidInput = 2,
    /// The computation failed for numerical reasons (indefinite form,
    /// ill-conditioned matrix, enumeration region too large).
    NumericalError = 3,
    /// A bug inside the library; the panic was caught at the boundary.
    InternalPanic = 4,
}

/// An opaque, validated polarization type. Create with `seshadri_type_new`,
/// release with `seshadri_type_free`.
pub struct SeshadriType(PolarizationType);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("error text unavailable").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(err: &seshadri::Error) -> SeshadriStatus {
    set_last_error(&err.to_string());
    if err.is_numerical() {
        SeshadriStatus::NumericalError
    } else {
        SeshadriStatus::InvalidInput
    }
}

fn guarded<F: FnOnce() -> SeshadriStatus>(f: F) -> SeshadriStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("internal panic; this is a bug in the seshadri library");
            SeshadriStatus::InternalPanic
        }
    }
}

macro_rules! nonnull {
    ($ptr:expr) => {
        if $ptr.is_null() {
            set_last_error(concat!(stringify!($ptr), " must not be null"));
            return SeshadriStatus::NullArgument;
        }
    };
}

unsafe fn read_utf8<'a>(ptr: *const c_char) -> Result<&'a str, SeshadriStatus> {
    match CStr::from_ptr(ptr).to_str() {
        Ok(text) => Ok(text),
        Err(_) => {
            set_last_error("input string is not valid UTF-8");
            Err(SeshadriStatus::InvalidInput)
        }
    }
}

unsafe fn write_string(text: String, out: *mut *mut c_char) -> SeshadriStatus {
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            SeshadriStatus::Ok
        }
        Err(_) => {
            set_last_error("output contained an interior NUL byte");
            SeshadriStatus::InternalPanic
        }
    }
}

unsafe fn write_json<T: serde::Serialize>(value: &T, out: *mut *mut c_char) -> SeshadriStatus {
    match serde_json::to_string(value) {
        Ok(text) => write_string(text, out),
        Err(e) => {
            set_last_error(&format!("serialization failed: {e}"));
            SeshadriStatus::InternalPanic
        }
    }
}

/// Library version as a static NUL-terminated string. Do not free.
#[no_mangle]
pub extern "C" fn seshadri_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Returns a copy of the last error message raised on this thread, or null
/// if the most recent call succeeded. The caller owns the copy and must
/// release it with `seshadri_string_free`.
#[no_mangle]
pub extern "C" fn seshadri_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null_mut(), |msg| msg.clone().into_raw())
    })
}

/// Releases a string previously returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn seshadri_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Validates a polarization type from its `len` integer degrees and writes a
/// handle to `out`. Degrees must be positive with each dividing the next.
///
/// # Safety
/// `degrees` must point to `len` readable `int64_t` values and `out` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_type_new(
    degrees: *const i64,
    len: usize,
    out: *mut *mut SeshadriType,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(degrees);
        nonnull!(out);
        let slice = std::slice::from_raw_parts(degrees, len);
        match PolarizationType::new(slice) {
            Ok(d) => {
                *out = Box::into_raw(Box::new(SeshadriType(d)));
                SeshadriStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a type handle. Null is ignored.
///
/// # Safety
/// `t` must be a handle from `seshadri_type_new` and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn seshadri_type_free(t: *mut SeshadriType) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of degrees in the type (the abelian variety dimension), or 0 if
/// `t` is null.
///
/// # Safety
/// `t` must be null or a live handle from `seshadri_type_new`.
#[no_mangle]
pub unsafe extern "C" fn seshadri_type_dimension(t: *const SeshadriType) -> usize {
    if t.is_null() {
        0
    } else {
        (*t).0.dimension()
    }
}

/// Writes the pfaffian (the product of the degrees) as a decimal string.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_type_pfaffian(
    t: *const SeshadriType,
    out: *mut *mut c_char,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(t);
        nonnull!(out);
        write_string((*t).0.pfaffian().to_string(), out)
    })
}

/// Writes whether the type satisfies the exact very-ampleness criterion.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_type_very_ample(
    t: *const SeshadriType,
    out: *mut bool,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(t);
        nonnull!(out);
        *out = bounds::very_ample_criterion(&(*t).0).satisfied;
        SeshadriStatus::Ok
    })
}

/// Writes the Seshadri lower bound that holds for a very general variety of
/// this type.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_type_very_general_lower(
    t: *const SeshadriType,
    out: *mut f64,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(t);
        nonnull!(out);
        *out = bounds::very_general_seshadri_lower(&(*t).0);
        SeshadriStatus::Ok
    })
}

/// Writes the lower bound on the largest minimal period length attained over
/// all varieties of this type. This is also the squared-radius existence
/// threshold used by the random search.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_type_max_period_lower(
    t: *const SeshadriType,
    out: *mut f64,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(t);
        nonnull!(out);
        *out = bounds::max_minimal_period_lower(&(*t).0);
        SeshadriStatus::Ok
    })
}

/// Writes `{"report": ..., "very_ample": ...}` with the elementary Seshadri
/// bounds and the very-ampleness verdict for the type.
///
/// # Safety
/// `t` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_bounds_json(
    t: *const SeshadriType,
    out_json: *mut *mut c_char,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(t);
        nonnull!(out_json);
        let d = &(*t).0;
        let value = json!({
            "report": bounds::elementary_bounds(d),
            "very_ample": bounds::very_ample_criterion(d),
        });
        write_json(&value, out_json)
    })
}

/// Computes the minimal period length of the lattice described by
/// `input_json`, a document of the form
/// `{"g": 2, "type": [1, 2], "X": [[...]], "Y": [[...]]}` where `X` may be
/// omitted for a purely imaginary period matrix. Writes
/// `{"m": ..., "witness": [...], "certified_radius": ...,
/// "seshadri_lower": ...}`.
///
/// # Safety
/// `input_json` must be a NUL-terminated string and `out_json` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_period_length_json(
    input_json: *const c_char,
    out_json: *mut *mut c_char,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(input_json);
        nonnull!(out_json);
        let text = match read_utf8(input_json) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let schema: SiegelPointSchema = match serde_json::from_str(text) {
            Ok(s) => s,
            Err(e) => {
                set_last_error(&format!("invalid input document: {e}"));
                return SeshadriStatus::InvalidInput;
            }
        };
        let (d, z) = match schema.into_parts() {
            Ok(parts) => parts,
            Err(e) => return fail(&e),
        };
        let result = match lattice::minimal_period_length(&z, &d) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        let value = json!({
            "m": result.value,
            "witness": result.witness,
            "certified_radius": result.certified_radius,
            "seshadri_lower": bounds::seshadri_lower_from_period(result.value),
        });
        write_json(&value, out_json)
    })
}

/// Counts lattice vectors of squared length at most `r_squared` for the
/// lattice described by `input_json` (same document shape as
/// `seshadri_period_length_json`). The count excludes zero and is always
/// even.
///
/// # Safety
/// `input_json` must be a NUL-terminated string and `out_count` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_count_periods(
    input_json: *const c_char,
    r_squared: f64,
    out_count: *mut u64,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(input_json);
        nonnull!(out_count);
        let text = match read_utf8(input_json) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let schema: SiegelPointSchema = match serde_json::from_str(text) {
            Ok(s) => s,
            Err(e) => {
                set_last_error(&format!("invalid input document: {e}"));
                return SeshadriStatus::InvalidInput;
            }
        };
        let (d, z) = match schema.into_parts() {
            Ok(parts) => parts,
            Err(e) => return fail(&e),
        };
        let q = match lattice::gram_form(&z, &d) {
            Ok(q) => q,
            Err(e) => return fail(&e),
        };
        match lattice::count_periods(&q, r_squared) {
            Ok(count) => {
                *out_count = count;
                SeshadriStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Writes `{"rows": [...]}` with the abelian-surface bound table for
/// polarizations `(1, d)`, `d` from 1 to `dmax`.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_surface_table_json(
    dmax: i64,
    out_json: *mut *mut c_char,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(out_json);
        match surfaces::surface_table(dmax) {
            Ok(rows) => write_json(&json!({ "rows": rows }), out_json),
            Err(e) => fail(&e),
        }
    })
}

/// Writes the fundamental solution of `l^2 - n k^2 = 1` as
/// `{"n": ..., "ell0": "...", "k0": "...", "period": ...,
/// "quotients": [...]}`. The solution components are decimal strings because
/// they overflow any fixed-width integer for many `n`.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_pell_json(n: i64, out_json: *mut *mut c_char) -> SeshadriStatus {
    guarded(|| {
        nonnull!(out_json);
        match surfaces::pell_primitive(n) {
            Ok(sol) => write_json(
                &json!({
                    "n": sol.n,
                    "ell0": sol.ell0.to_string(),
                    "k0": sol.k0.to_string(),
                    "period": sol.period,
                    "quotients": sol.quotients,
                }),
                out_json,
            ),
            Err(e) => fail(&e),
        }
    })
}

/// Writes upper bounds for Prym varieties of curve coverings with the given
/// base genus. Pass `gonality <= 0` to omit the gonality refinement. The
/// output is `{"dim_p": ..., "seshadri": ..., "minimal_period": ...}`.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_prym_json(
    genus: i64,
    gonality: i64,
    out_json: *mut *mut c_char,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(out_json);
        let gonality = (gonality > 0).then_some(gonality);
        match bounds::PrymInput::new(genus, gonality) {
            Ok(input) => write_json(
                &json!({
                    "dim_p": input.dim_p(),
                    "seshadri": bounds::prym_seshadri_upper(&input),
                    "minimal_period": bounds::prym_period_upper(&input),
                }),
                out_json,
            ),
            Err(e) => fail(&e),
        }
    })
}

#[derive(Deserialize)]
struct AverageParams {
    #[serde(rename = "type")]
    degrees: Vec<i64>,
    y: f64,
    #[serde(rename = "R2", alias = "r2")]
    r_squared: f64,
    samples: u64,
    #[serde(default)]
    seed: u64,
}

/// Runs the Monte Carlo average of the period count over the vertical family
/// at height `y`. `params_json` looks like
/// `{"type": [1], "y": 10.0, "R2": 0.5, "samples": 10000, "seed": 7}`
/// (`seed` defaults to 0). The output document matches the command-line
/// `average` results.
///
/// # Safety
/// `params_json` must be a NUL-terminated string and `out_json` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_average_json(
    params_json: *const c_char,
    out_json: *mut *mut c_char,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(params_json);
        nonnull!(out_json);
        let text = match read_utf8(params_json) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let params: AverageParams = match serde_json::from_str(text) {
            Ok(p) => p,
            Err(e) => {
                set_last_error(&format!("invalid parameter document: {e}"));
                return SeshadriStatus::InvalidInput;
            }
        };
        let d = match PolarizationType::new(&params.degrees) {
            Ok(d) => d,
            Err(e) => return fail(&e),
        };
        match montecarlo::estimate_average(
            &d,
            params.y,
            params.r_squared,
            params.samples,
            params.seed,
        ) {
            Ok(estimate) => write_json(&estimate, out_json),
            Err(e) => fail(&e),
        }
    })
}

#[derive(Deserialize)]
struct SearchParams {
    #[serde(rename = "type")]
    degrees: Vec<i64>,
    target: f64,
    trials: u64,
    y_grid: Option<Vec<f64>>,
    #[serde(default)]
    seed: u64,
}

/// Runs the random search for a period lattice whose minimal period length
/// exceeds `target`. `params_json` looks like
/// `{"type": [1, 2], "target": 0.8, "trials": 5000, "seed": 1}` with an
/// optional `"y_grid": [2.0, 5.0]`. The output document matches the
/// command-line `search` results.
///
/// # Safety
/// `params_json` must be a NUL-terminated string and `out_json` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn seshadri_search_json(
    params_json: *const c_char,
    out_json: *mut *mut c_char,
) -> SeshadriStatus {
    guarded(|| {
        nonnull!(params_json);
        nonnull!(out_json);
        let text = match read_utf8(params_json) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let params: SearchParams = match serde_json::from_str(text) {
            Ok(p) => p,
            Err(e) => {
                set_last_error(&format!("invalid parameter document: {e}"));
                return SeshadriStatus::InvalidInput;
            }
        };
        let d = match PolarizationType::new(&params.degrees) {
            Ok(d) => d,
            Err(e) => return fail(&e),
        };
        let grid = params
            .y_grid
            .unwrap_or_else(|| montecarlo::DEFAULT_Y_GRID.to_vec());
        match montecarlo::existence_search(&d, params.target, params.trials, &grid, params.seed) {
            Ok(result) => write_json(&result, out_json),
            Err(e) => fail(&e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn take_string(ptr: *mut c_char) -> String {
        assert!(!ptr.is_null());
        let text = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_owned();
        unsafe { seshadri_string_free(ptr) };
        text
    }

    fn last_error() -> String {
        take_string(seshadri_last_error_message())
    }

    fn make_type(degrees: &[i64]) -> *mut SeshadriType {
        let mut handle = ptr::null_mut();
        let status = unsafe { seshadri_type_new(degrees.as_ptr(), degrees.len(), &mut handle) };
        assert_eq!(status, SeshadriStatus::Ok);
        handle
    }

    fn json_call(
        f: unsafe extern "C" fn(*const c_char, *mut *mut c_char) -> SeshadriStatus,
        input: &str,
    ) -> (SeshadriStatus, Option<serde_json::Value>) {
        let input = CString::new(input).unwrap();
        let mut out = ptr::null_mut();
        let status = unsafe { f(input.as_ptr(), &mut out) };
        if status == SeshadriStatus::Ok {
            let text = take_string(out);
            (status, Some(serde_json::from_str(&text).unwrap()))
        } else {
            (status, None)
        }
    }

    #[test]
    fn version_is_a_static_string() {
        let version = unsafe { CStr::from_ptr(seshadri_version()) }
            .to_str()
            .unwrap();
        assert_eq!(version, env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn type_lifecycle_and_scalar_queries() {
        let t = make_type(&[1, 2, 4]);
        assert_eq!(unsafe { seshadri_type_dimension(t) }, 3);

        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { seshadri_type_pfaffian(t, &mut out) },
            SeshadriStatus::Ok
        );
        assert_eq!(take_string(out), "8");

        let mut ample = true;
        assert_eq!(
            unsafe { seshadri_type_very_ample(t, &mut ample) },
            SeshadriStatus::Ok
        );
        assert!(!ample, "48 < 13824 so (1,2,4) cannot pass");

        let mut lower = 0.0;
        assert_eq!(
            unsafe { seshadri_type_very_general_lower(t, &mut lower) },
            SeshadriStatus::Ok
        );
        assert!((lower - 0.25 * 96f64.powf(1.0 / 3.0)).abs() < 1e-12);

        let mut threshold = 0.0;
        assert_eq!(
            unsafe { seshadri_type_max_period_lower(t, &mut threshold) },
            SeshadriStatus::Ok
        );
        assert!((threshold - 96f64.powf(1.0 / 3.0) / std::f64::consts::PI).abs() < 1e-12);

        unsafe { seshadri_type_free(t) };
    }

    #[test]
    fn invalid_type_reports_a_message() {
        let degrees = [2i64, 3];
        let mut handle = ptr::null_mut();
        let status = unsafe { seshadri_type_new(degrees.as_ptr(), degrees.len(), &mut handle) };
        assert_eq!(status, SeshadriStatus::InvalidInput);
        assert!(handle.is_null());
        assert!(!last_error().is_empty());
    }

    #[test]
    fn null_arguments_are_rejected_not_dereferenced() {
        let mut handle = ptr::null_mut();
        assert_eq!(
            unsafe { seshadri_type_new(ptr::null(), 3, &mut handle) },
            SeshadriStatus::NullArgument
        );
        assert_eq!(
            unsafe { seshadri_period_length_json(ptr::null(), &mut ptr::null_mut()) },
            SeshadriStatus::NullArgument
        );
        assert_eq!(unsafe { seshadri_type_dimension(ptr::null()) }, 0);
        unsafe {
            seshadri_type_free(ptr::null_mut());
            seshadri_string_free(ptr::null_mut());
        }
    }

    #[test]
    fn bounds_json_has_report_and_verdict() {
        let t = make_type(&[1]);
        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { seshadri_bounds_json(t, &mut out) },
            SeshadriStatus::Ok
        );
        let value: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(value["very_ample"]["satisfied"], false);
        assert_eq!(value["report"]["entries"][0]["value"], 1.0);
        unsafe { seshadri_type_free(t) };
    }

    #[test]
    fn period_length_of_the_hexagonal_lattice() {
        let (status, value) = json_call(
            seshadri_period_length_json,
            r#"{"g": 1, "type": [1], "X": [[0.5]], "Y": [[0.8660254037844386]]}"#,
        );
        assert_eq!(status, SeshadriStatus::Ok);
        let value = value.unwrap();
        let m = value["m"].as_f64().unwrap();
        assert!((m - 2.0 / 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(value["witness"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn period_length_error_paths() {
        let (status, _) = json_call(seshadri_period_length_json, "not json");
        assert_eq!(status, SeshadriStatus::InvalidInput);

        let (status, _) = json_call(
            seshadri_period_length_json,
            r#"{"g": 1, "type": [1], "Y": [[-1.0]]}"#,
        );
        assert_eq!(status, SeshadriStatus::NumericalError);
        assert!(!last_error().is_empty());
    }

    #[test]
    fn count_periods_matches_the_library() {
        let input = CString::new(r#"{"g": 1, "type": [1], "Y": [[1.0]]}"#).unwrap();
        let mut count = 0u64;
        let status = unsafe { seshadri_count_periods(input.as_ptr(), 1.0, &mut count) };
        assert_eq!(status, SeshadriStatus::Ok);
        assert_eq!(count, 4, "the unit square lattice has 4 vectors of norm 1");
    }

    #[test]
    fn surface_table_and_pell_round_trip() {
        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { seshadri_surface_table_json(2, &mut out) },
            SeshadriStatus::Ok
        );
        let value: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(value["rows"].as_array().unwrap().len(), 2);
        assert_eq!(value["rows"][1]["maximal"], true);

        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { seshadri_pell_json(2, &mut out) },
            SeshadriStatus::Ok
        );
        let value: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(value["ell0"], "3");
        assert_eq!(value["k0"], "2");

        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { seshadri_pell_json(4, &mut out) },
            SeshadriStatus::InvalidInput
        );
    }

    #[test]
    fn prym_json_applies_the_gonality_convention() {
        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { seshadri_prym_json(3, 0, &mut out) },
            SeshadriStatus::Ok
        );
        let value: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        let entries = value["seshadri"]["entries"].as_array().unwrap();
        assert_eq!(entries.len(), 1, "gonality <= 0 omits the refinement");
        assert!((entries[0]["value"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-15);

        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { seshadri_prym_json(5, 2, &mut out) },
            SeshadriStatus::Ok
        );
        let value: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(value["seshadri"]["entries"].as_array().unwrap().len(), 2);
        assert_eq!(value["dim_p"], 4);
    }

    #[test]
    fn average_json_is_deterministic() {
        let params = r#"{"type": [1], "y": 5.0, "R2": 0.4, "samples": 400, "seed": 9}"#;
        let (status, first) = json_call(seshadri_average_json, params);
        assert_eq!(status, SeshadriStatus::Ok);
        let (_, second) = json_call(seshadri_average_json, params);
        assert_eq!(first, second);
        let first = first.unwrap();
        assert_eq!(first["samples"], 400);
        assert!(first["mean"].as_f64().unwrap() >= 0.0);

        let (status, _) = json_call(
            seshadri_average_json,
            r#"{"type": [1], "y": -1.0, "R2": 0.4, "samples": 10}"#,
        );
        assert_eq!(status, SeshadriStatus::InvalidInput);
    }

    #[test]
    fn search_json_finds_a_witness() {
        let (status, value) = json_call(
            seshadri_search_json,
            r#"{"type": [1], "target": 0.5, "trials": 200, "seed": 4}"#,
        );
        assert_eq!(status, SeshadriStatus::Ok);
        let value = value.unwrap();
        assert_eq!(value["achieved"], true);
        assert!(value["witness"]["Y"].is_array());
    }

    #[test]
    fn generated_header_covers_the_api() {
        let header =
            std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/seshadri.h"))
                .expect("build script wrote the header");
        for needle in [
            "#ifndef SESHADRI_H",
            "SESHADRI_STATUS_NUMERICAL_ERROR",
            "typedef struct SeshadriType SeshadriType;",
            "seshadri_period_length_json",
            "seshadri_string_free",
            "seshadri_last_error_message",
        ] {
            assert!(header.contains(needle), "header lacks {needle:?}");
        }
    }
}
