//! C ABI over `exposg`.
//!
//! Every function returns an [`ExposgStatus`] and writes results through out
//! pointers. Handles are opaque and owned by the caller once returned; release
//! them with the matching `_free` function. Strings returned to the caller are
//! NUL-terminated UTF-8 and must be released with [`exposg_string_free`].
//! After a non-OK status, [`exposg_last_error_message`] describes the failure
//! on the calling thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use exposg::construct::{represent, trivial_representation};
use exposg::interchange::{analysis_to_value, matrix_from_json, matrix_to_json, semigroup_to_value, tfae_to_value};
use exposg::{bounds, exponent_semigroup, tfae_report, Error, RationalMatrix, SemigroupKind, StateBudget, SubsemigroupDesc};

/// Opaque square rational matrix.
pub struct ExposgMatrix(RationalMatrix);

/// Opaque subsemigroup of ℕ.
pub struct ExposgSemigroup(SubsemigroupDesc);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExposgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    BudgetExceeded = 5,
    Internal = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn status_of(err: &Error) -> ExposgStatus {
    match err {
        Error::Parse(_) | Error::ZeroDenominator(_) | Error::Json(_) => ExposgStatus::Parse,
        Error::StateBudgetExceeded { .. } => ExposgStatus::BudgetExceeded,
        Error::CertificateMismatch(_) | Error::Io(_) => ExposgStatus::Internal,
        _ => ExposgStatus::InvalidArgument,
    }
}

/// Runs `f`, mapping errors and panics to a status and recording the message.
fn guard(f: impl FnOnce() -> Result<(), (ExposgStatus, String)>) -> ExposgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            ExposgStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ExposgStatus::Internal
        }
    }
}

fn lift<T>(r: exposg::Result<T>) -> Result<T, (ExposgStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (ExposgStatus, String) {
    (ExposgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (ExposgStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|e| (ExposgStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (ExposgStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (ExposgStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior NUL").into_raw()
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn exposg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn exposg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"dim": d, "entries": [["p/q", ...], ...]}`.
#[no_mangle]
pub unsafe extern "C" fn exposg_matrix_from_json(json: *const c_char, out: *mut *mut ExposgMatrix) -> ExposgStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let m = lift(matrix_from_json(text))?;
        write_out(out, Box::into_raw(Box::new(ExposgMatrix(m))))
    })
}

/// Releases a matrix handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn exposg_matrix_free(m: *mut ExposgMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

#[no_mangle]
pub unsafe extern "C" fn exposg_matrix_dim(m: *const ExposgMatrix, out: *mut usize) -> ExposgStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        write_out(out, m.0.dim())
    })
}

#[no_mangle]
pub unsafe extern "C" fn exposg_matrix_to_json(m: *const ExposgMatrix, out: *mut *mut c_char) -> ExposgStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        write_out(out, into_c_string(matrix_to_json(&m.0)))
    })
}

/// Semigroup generated by `len` positive integers; `len == 0` gives `{0}`.
#[no_mangle]
pub unsafe extern "C" fn exposg_semigroup_from_generators(
    generators: *const u64,
    len: usize,
    out: *mut *mut ExposgSemigroup,
) -> ExposgStatus {
    guard(|| {
        let s = if len == 0 {
            SubsemigroupDesc::trivial()
        } else {
            if generators.is_null() {
                return Err(null("generators"));
            }
            lift(SubsemigroupDesc::from_generators(std::slice::from_raw_parts(generators, len)))?
        };
        write_out(out, Box::into_raw(Box::new(ExposgSemigroup(s))))
    })
}

/// Releases a semigroup handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn exposg_semigroup_free(s: *mut ExposgSemigroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn exposg_semigroup_contains(s: *const ExposgSemigroup, n: u64, out: *mut bool) -> ExposgStatus {
    guard(|| {
        let s = deref(s, "semigroup")?;
        write_out(out, s.0.contains(n))
    })
}

/// Frobenius number, `-1` for ℕ. Fails with `INVALID_ARGUMENT` unless the
/// semigroup is numerical.
#[no_mangle]
pub unsafe extern "C" fn exposg_semigroup_frobenius(s: *const ExposgSemigroup, out: *mut i64) -> ExposgStatus {
    guard(|| {
        let s = deref(s, "semigroup")?;
        let g = s.0.frobenius().ok_or((ExposgStatus::InvalidArgument, format!("{} is not numerical", s.0)))?;
        write_out(out, g)
    })
}

#[no_mangle]
pub unsafe extern "C" fn exposg_semigroup_to_json(s: *const ExposgSemigroup, out: *mut *mut c_char) -> ExposgStatus {
    guard(|| {
        let s = deref(s, "semigroup")?;
        write_out(out, into_c_string(semigroup_to_value(&s.0).to_string()))
    })
}

/// Exact `S(A)`. `max_states == 0` selects the default budget.
#[no_mangle]
pub unsafe extern "C" fn exposg_exponent_semigroup(
    m: *const ExposgMatrix,
    max_states: usize,
    out: *mut *mut ExposgSemigroup,
) -> ExposgStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        let analysis = lift(exponent_semigroup(&m.0, budget(max_states)))?;
        write_out(out, Box::into_raw(Box::new(ExposgSemigroup(analysis.classification))))
    })
}

/// Power-integrality report and exponent-semigroup analysis as JSON.
/// `trace_bound == 0` selects `2·dim`; `max_states == 0` the default budget.
#[no_mangle]
pub unsafe extern "C" fn exposg_analyze_json(
    m: *const ExposgMatrix,
    trace_bound: u64,
    max_states: usize,
    out: *mut *mut c_char,
) -> ExposgStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        let bound = if trace_bound == 0 { 2 * m.0.dim() as u64 } else { trace_bound };
        let report = tfae_report(&m.0, bound);
        let analysis = lift(exponent_semigroup(&m.0, budget(max_states)))?;
        let value = serde_json::json!({
            "power_integrality": tfae_to_value(&report),
            "exponent": analysis_to_value(&analysis),
        });
        write_out(out, into_c_string(value.to_string()))
    })
}

/// A matrix whose exponent semigroup is `s`, verified before returning.
/// `{0}` yields `[1/2]`.
#[no_mangle]
pub unsafe extern "C" fn exposg_construct(
    s: *const ExposgSemigroup,
    base: i64,
    out: *mut *mut ExposgMatrix,
) -> ExposgStatus {
    guard(|| {
        let s = deref(s, "semigroup")?;
        let result = if s.0.kind() == SemigroupKind::Trivial {
            lift(trivial_representation())?
        } else {
            lift(represent(&s.0, base))?
        };
        if !result.verified {
            return Err((ExposgStatus::Internal, "construction failed verification".into()));
        }
        write_out(out, Box::into_raw(Box::new(ExposgMatrix(result.matrix))))
    })
}

/// Lower and upper bounds on the matricial dimension.
#[no_mangle]
pub unsafe extern "C" fn exposg_bounds(s: *const ExposgSemigroup, lower: *mut u64, upper: *mut u64) -> ExposgStatus {
    guard(|| {
        let s = deref(s, "semigroup")?;
        if lower.is_null() || upper.is_null() {
            return Err(null("output pointer"));
        }
        let b = bounds(&s.0);
        write_out(lower, b.lower)?;
        write_out(upper, b.upper)
    })
}

fn budget(max_states: usize) -> StateBudget {
    if max_states == 0 {
        StateBudget::default()
    } else {
        StateBudget::states(max_states)
    }
}

