//! C interface to `gentor`.
//!
//! Groups are opaque handles opened by catalog name. Every function returns
//! a [`GentorStatus`]; on failure the message is available from
//! [`gentor_last_error_message`] on the same thread. Strings returned through
//! out-parameters are owned by the caller and released with
//! [`gentor_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gentor::catalog::{open_group, AnyGroup};
use gentor::engine::{certificate_json, gen_exponent_bounds, is_generalized_torsion, witness_construct};
use gentor::group::lattice_index;
use gentor::json::{bigint_json, bigvec_json};
use gentor::{eval_word, parse_word, ComputableGroup, GentorError, Labeled};
use serde_json::{json, Value};

/// Result codes; the nonzero values of invalid input and theorem violations
/// agree with the exit codes of the command-line tool.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GentorStatus {
    Ok = 0,
    InvalidInput = 2,
    TheoremViolation = 3,
    NullPointer = 4,
    Unsupported = 5,
    Overflow = 6,
    Panic = 7,
}

/// Opaque group handle.
pub struct GentorGroup {
    group: AnyGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: GentorStatus, msg: &str) -> GentorStatus {
    set_error(msg);
    status
}

fn from_error(e: GentorError) -> GentorStatus {
    let status = match e {
        GentorError::TheoremViolation(_) => GentorStatus::TheoremViolation,
        GentorError::Unsupported(_) => GentorStatus::Unsupported,
        _ => GentorStatus::InvalidInput,
    };
    fail(status, &e.to_string())
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), GentorStatus>) -> GentorStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            GentorStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => fail(GentorStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, GentorStatus> {
    if s.is_null() {
        return Err(fail(GentorStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(GentorStatus::InvalidInput, "argument is not UTF-8"))
}

unsafe fn group_arg<'a>(g: *const GentorGroup) -> Result<&'a AnyGroup, GentorStatus> {
    g.as_ref()
        .map(|g| &g.group)
        .ok_or_else(|| fail(GentorStatus::NullPointer, "null group handle"))
}

fn check_out<T>(out: *mut T) -> Result<(), GentorStatus> {
    if out.is_null() {
        Err(fail(GentorStatus::NullPointer, "null output pointer"))
    } else {
        Ok(())
    }
}

fn element(g: &AnyGroup, text: &str) -> Result<Labeled<<AnyGroup as ComputableGroup>::Elem>, GentorStatus> {
    let w = parse_word(text).map_err(from_error)?;
    let e = eval_word(g, &w).map_err(from_error)?;
    Ok(Labeled::new(e, w))
}

fn string_out(v: &Value, out: *mut *mut c_char) -> Result<(), GentorStatus> {
    let s = CString::new(v.to_string()).map_err(|_| fail(GentorStatus::Panic, "nul byte in JSON"))?;
    // SAFETY: `out` was checked for null by the caller.
    unsafe { *out = s.into_raw() };
    Ok(())
}

/// Opens a catalog group (`promislow`, `K:2,1,1`, `dinf*Z`, ...).
///
/// # Safety
/// `name` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gentor_group_open(name: *const c_char, out: *mut *mut GentorGroup) -> GentorStatus {
    guard(|| {
        check_out(out)?;
        let name = str_arg(name)?;
        let group = open_group(name).map_err(from_error)?;
        *out = Box::into_raw(Box::new(GentorGroup { group }));
        Ok(())
    })
}

/// Releases a handle from [`gentor_group_open`]; null is ignored.
///
/// # Safety
/// `group` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn gentor_group_free(group: *mut GentorGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Whether the element given by `word` is generalized torsion.
///
/// # Safety
/// Pointers must be valid; `word` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn gentor_decide(
    group: *const GentorGroup,
    word: *const c_char,
    out: *mut bool,
) -> GentorStatus {
    guard(|| {
        check_out(out)?;
        let g = group_arg(group)?;
        let e = element(g, str_arg(word)?)?;
        *out = is_generalized_torsion(g, &e.elem).map_err(from_error)?;
        Ok(())
    })
}

/// Bounds `lower <= exp(G) <= upper` on the generalized exponent.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gentor_exponent_bounds(
    group: *const GentorGroup,
    lower: *mut u64,
    upper: *mut u64,
    exact: *mut bool,
) -> GentorStatus {
    guard(|| {
        check_out(lower)?;
        check_out(upper)?;
        check_out(exact)?;
        let g = group_arg(group)?;
        let b = gen_exponent_bounds(g).map_err(from_error)?;
        let too_big = || fail(GentorStatus::Overflow, "bound does not fit in 64 bits");
        *lower = u64::try_from(&b.lower).map_err(|_| too_big())?;
        *upper = u64::try_from(&b.upper).map_err(|_| too_big())?;
        *exact = b.exact;
        Ok(())
    })
}

/// Group invariants as a JSON object; unavailable entries are `null`.
///
/// # Safety
/// Pointers must be valid. Free the result with [`gentor_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gentor_info_json(group: *const GentorGroup, out: *mut *mut c_char) -> GentorStatus {
    guard(|| {
        check_out(out)?;
        let g = group_arg(group)?;
        let ab = g.abelianization().ok().map(|a| {
            json!({ "invariant_factors": bigvec_json(&a.invariant_factors), "free_rank": a.free_rank })
        });
        let bounds = gen_exponent_bounds(g).ok().map(|b| {
            json!({ "lower": bigint_json(&b.lower), "upper": bigint_json(&b.upper), "exact": b.exact })
        });
        let info = json!({
            "group": g.name(),
            "abelianization": ab,
            "index": lattice_index(g).ok(),
            "torsion_free": g.torsion_free(),
            "center_rank": g.center_rank(),
            "hirsch_length": g.hirsch_length(),
            "exponent": bounds,
        });
        string_out(&info, out)
    })
}

/// Verified certificate for `word` as JSON.
///
/// # Safety
/// Pointers must be valid; `word` NUL-terminated. Free the result with
/// [`gentor_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gentor_witness_json(
    group: *const GentorGroup,
    word: *const c_char,
    out: *mut *mut c_char,
) -> GentorStatus {
    guard(|| {
        check_out(out)?;
        let g = group_arg(group)?;
        let e = element(g, str_arg(word)?)?;
        let cert = witness_construct(g, &e).map_err(from_error)?;
        string_out(&certificate_json(g, &cert), out)
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn gentor_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn gentor_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn null_handles_are_reported() {
        let mut b = false;
        let s = unsafe { gentor_decide(ptr::null(), c"x".as_ptr(), &mut b) };
        assert_eq!(s, GentorStatus::NullPointer);
        let msg = unsafe { CStr::from_ptr(gentor_last_error_message()) };
        assert_eq!(msg.to_str().unwrap(), "null group handle");
        unsafe { gentor_group_free(ptr::null_mut()) };
        unsafe { gentor_string_free(ptr::null_mut()) };
    }
}
