//! C ABI for the fusionq library: compute fusion elements and run the
//! verification suites from any language with a C FFI.
//!
//! Conventions:
//! - results come back as opaque handles freed with [`fusionq_result_free`];
//! - every returned string is owned by the caller and freed with
//!   [`fusionq_string_free`];
//! - functions return a status code (0 success, 1 verification failure,
//!   2 usage error, 3 violated mathematical invariant); on nonzero status
//!   [`fusionq_last_error`] describes the failure.

use std::cell::RefCell;
use std::ffi::{CStr, CString};

use libc::c_char;

use fusionq::arith::QPool;
use fusionq::error::Error;
use fusionq::fusion::{evaluate_f, evaluate_f_numeric, evaluate_g, evaluate_g_numeric, FusionSpec};
use fusionq::jsonio::{fusion_result_to_json, to_canonical_json, FusionResultJson};
use fusionq::tableaux::{Partition, StandardTableau, Variant};
use fusionq::verify::{all_pass, run_suites, Mode, Suite, VerifyOptions};

pub const FUSIONQ_OK: i32 = 0;
pub const FUSIONQ_VERIFY_FAILED: i32 = 1;
pub const FUSIONQ_USAGE_ERROR: i32 = 2;
pub const FUSIONQ_MATH_ERROR: i32 = 3;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_for(e: &Error) -> i32 {
    match e {
        Error::InvalidPartition(_)
        | Error::InvalidTableau(_)
        | Error::InvalidPermutation(_)
        | Error::InvalidDirection(_)
        | Error::TableauIndexOutOfRange { .. }
        | Error::Parse(_)
        | Error::Io(_) => FUSIONQ_USAGE_ERROR,
        _ => FUSIONQ_MATH_ERROR,
    }
}

/// Opaque computed fusion element.
pub struct FusionqResult {
    json: FusionResultJson,
}

unsafe fn required_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, i32> {
    if ptr.is_null() {
        set_last_error(&format!("{what} must not be NULL"));
        return Err(FUSIONQ_USAGE_ERROR);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_last_error(&format!("{what} is not valid UTF-8"));
        FUSIONQ_USAGE_ERROR
    })
}

fn compute_impl(
    shape: &str,
    tableau: &str,
    variant: &str,
    kind: &str,
    mode: &str,
    seed: u64,
) -> fusionq::Result<FusionResultJson> {
    let shape = Partition::parse(shape)?;
    let tableau = StandardTableau::select(&shape, tableau)?;
    let variant: Variant = variant.parse()?;
    let mode: Mode = mode.parse()?;
    if kind != "F" && kind != "G" {
        return Err(Error::Parse(format!("kind must be F or G, got {kind:?}")));
    }
    if kind == "G" && variant != Variant::Hook {
        return Err(Error::Parse(
            "G elements are defined on the hook subspace".into(),
        ));
    }
    let pool = QPool::seeded(seed);
    let spec = FusionSpec::with_default_direction(tableau, variant);
    Ok(match (kind, mode) {
        ("F", Mode::Symbolic) => fusion_result_to_json(&evaluate_f(&spec)?),
        ("F", Mode::Numeric) => fusion_result_to_json(&evaluate_f_numeric(&spec, &pool)?),
        ("G", Mode::Symbolic) => fusion_result_to_json(&evaluate_g(spec.tableau())?),
        ("G", Mode::Numeric) => fusion_result_to_json(&evaluate_g_numeric(spec.tableau(), &pool)?),
        _ => unreachable!(),
    })
}

/// Compute F_Λ or G_Λ. On success writes a handle to `out` and returns 0.
///
/// # Safety
/// `shape`, `tableau`, `variant`, `kind` and `mode` must be valid
/// NUL-terminated strings (see the CLI flags for the accepted values) and
/// `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn fusionq_compute(
    shape: *const c_char,
    tableau: *const c_char,
    variant: *const c_char,
    kind: *const c_char,
    mode: *const c_char,
    seed: u64,
    out: *mut *mut FusionqResult,
) -> i32 {
    if out.is_null() {
        set_last_error("out must not be NULL");
        return FUSIONQ_USAGE_ERROR;
    }
    *out = std::ptr::null_mut();
    let args = (|| {
        Ok((
            required_str(shape, "shape")?,
            required_str(tableau, "tableau")?,
            required_str(variant, "variant")?,
            required_str(kind, "kind")?,
            required_str(mode, "mode")?,
        ))
    })();
    let (shape, tableau, variant, kind, mode) = match args {
        Ok(v) => v,
        Err(code) => return code,
    };
    match compute_impl(shape, tableau, variant, kind, mode, seed) {
        Ok(json) => {
            *out = Box::into_raw(Box::new(FusionqResult { json }));
            FUSIONQ_OK
        }
        Err(e) => {
            set_last_error(&e.to_string());
            status_for(&e)
        }
    }
}

/// Canonical JSON of a computed result; free with [`fusionq_string_free`].
///
/// # Safety
/// `result` must be a live handle returned by [`fusionq_compute`].
#[no_mangle]
pub unsafe extern "C" fn fusionq_result_json(result: *const FusionqResult) -> *mut c_char {
    if result.is_null() {
        set_last_error("result must not be NULL");
        return std::ptr::null_mut();
    }
    match to_canonical_json(&(*result).json) {
        Ok(s) => CString::new(s)
            .map(CString::into_raw)
            .unwrap_or(std::ptr::null_mut()),
        Err(e) => {
            set_last_error(&e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Number of T_σ basis terms in the element.
///
/// # Safety
/// `result` must be a live handle returned by [`fusionq_compute`].
#[no_mangle]
pub unsafe extern "C" fn fusionq_result_term_count(result: *const FusionqResult) -> usize {
    if result.is_null() {
        return 0;
    }
    (*result).json.element.terms.len()
}

/// # Safety
/// `result` must be a handle returned by [`fusionq_compute`], not yet freed;
/// NULL is accepted and ignored.
#[no_mangle]
pub unsafe extern "C" fn fusionq_result_free(result: *mut FusionqResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Run verification suites ("all" or comma-separated names). Returns 0 when
/// every check passes, 1 on a failed check. When `report_out` is non-NULL it
/// receives the JSON report array (caller frees).
///
/// # Safety
/// `suite` and `mode` must be valid NUL-terminated strings; `report_out`
/// must be NULL or point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn fusionq_verify(
    suite: *const c_char,
    max_n: usize,
    mode: *const c_char,
    seed: u64,
    report_out: *mut *mut c_char,
) -> i32 {
    if !report_out.is_null() {
        *report_out = std::ptr::null_mut();
    }
    let suite = match required_str(suite, "suite") {
        Ok(v) => v,
        Err(code) => return code,
    };
    let mode = match required_str(mode, "mode") {
        Ok(v) => v,
        Err(code) => return code,
    };
    let run = || -> fusionq::Result<(bool, String)> {
        let suites: Vec<Suite> = if suite == "all" {
            Suite::ALL.to_vec()
        } else {
            suite
                .split(',')
                .map(|s| s.trim().parse())
                .collect::<fusionq::Result<_>>()?
        };
        let opts = VerifyOptions {
            max_n,
            mode: mode.parse()?,
            seed,
        };
        let reports = run_suites(&suites, &opts)?;
        Ok((all_pass(&reports), to_canonical_json(&reports)?))
    };
    match run() {
        Ok((pass, report)) => {
            if !report_out.is_null() {
                *report_out = CString::new(report)
                    .map(CString::into_raw)
                    .unwrap_or(std::ptr::null_mut());
            }
            if pass {
                FUSIONQ_OK
            } else {
                set_last_error("one or more checks failed; see the report");
                FUSIONQ_VERIFY_FAILED
            }
        }
        Err(e) => {
            set_last_error(&e.to_string());
            status_for(&e)
        }
    }
}

/// The standard tableaux of a shape as a JSON array of row arrays; free
/// with [`fusionq_string_free`]. NULL on a bad shape.
///
/// # Safety
/// `shape` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn fusionq_list_tableaux(shape: *const c_char) -> *mut c_char {
    let shape = match required_str(shape, "shape") {
        Ok(v) => v,
        Err(_) => return std::ptr::null_mut(),
    };
    let run = || -> fusionq::Result<String> {
        let shape = Partition::parse(shape)?;
        let rows: Vec<_> = StandardTableau::standard_tableaux(&shape)
            .iter()
            .map(|t| t.rows().to_vec())
            .collect();
        to_canonical_json(&rows)
    };
    match run() {
        Ok(s) => CString::new(s)
            .map(CString::into_raw)
            .unwrap_or(std::ptr::null_mut()),
        Err(e) => {
            set_last_error(&e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// The message for the most recent failure on this thread, or NULL; free
/// with [`fusionq_string_free`].
#[no_mangle]
pub extern "C" fn fusionq_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|c| c.clone().into_raw())
            .unwrap_or(std::ptr::null_mut())
    })
}

/// # Safety
/// `s` must be a string returned by this library, not yet freed; NULL is
/// accepted and ignored.
#[no_mangle]
pub unsafe extern "C" fn fusionq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn compute_and_json_round_trip() {
        let mut handle: *mut FusionqResult = std::ptr::null_mut();
        let code = unsafe {
            fusionq_compute(
                c("2,1").as_ptr(),
                c("hook").as_ptr(),
                c("hook").as_ptr(),
                c("F").as_ptr(),
                c("symbolic").as_ptr(),
                0,
                &mut handle,
            )
        };
        assert_eq!(code, FUSIONQ_OK);
        assert!(!handle.is_null());
        assert_eq!(unsafe { fusionq_result_term_count(handle) }, 6);
        let json = unsafe { fusionq_result_json(handle) };
        assert!(!json.is_null());
        let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
        assert!(text.contains("\"shape\":[2,1]"));
        unsafe {
            fusionq_string_free(json);
            fusionq_result_free(handle);
        }
    }

    #[test]
    fn errors_set_status_and_message() {
        let mut handle: *mut FusionqResult = std::ptr::null_mut();
        let code = unsafe {
            fusionq_compute(
                c("0").as_ptr(),
                c("hook").as_ptr(),
                c("hook").as_ptr(),
                c("F").as_ptr(),
                c("symbolic").as_ptr(),
                0,
                &mut handle,
            )
        };
        assert_eq!(code, FUSIONQ_USAGE_ERROR);
        assert!(handle.is_null());
        let msg = fusionq_last_error();
        assert!(!msg.is_null());
        let text = unsafe { CStr::from_ptr(msg) }.to_str().unwrap();
        assert!(text.contains("partition"));
        unsafe { fusionq_string_free(msg) };
    }

    #[test]
    fn verify_small_passes() {
        let mut report: *mut c_char = std::ptr::null_mut();
        let code = unsafe {
            fusionq_verify(
                c("t0coeff,triple-regularity").as_ptr(),
                2,
                c("symbolic").as_ptr(),
                0,
                &mut report,
            )
        };
        assert_eq!(code, FUSIONQ_OK);
        assert!(!report.is_null());
        let text = unsafe { CStr::from_ptr(report) }.to_str().unwrap();
        assert!(text.contains("t0-coefficient"));
        unsafe { fusionq_string_free(report) };
    }

    #[test]
    fn list_tableaux_json() {
        let s = unsafe { fusionq_list_tableaux(c("2,2").as_ptr()) };
        assert!(!s.is_null());
        let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap();
        assert_eq!(text.trim(), "[[[1,2],[3,4]],[[1,3],[2,4]]]");
        unsafe { fusionq_string_free(s) };
    }
}
