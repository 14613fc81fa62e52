use std::ffi::{c_char, CStr, CString};
use std::ptr;

use gentor_ffi::*;

fn open(name: &str) -> *mut GentorGroup {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { gentor_group_open(name.as_ptr(), &mut g) }, GentorStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(gentor_last_error_message()) }.to_str().unwrap().to_owned()
}

fn take(s: *mut c_char) -> serde_json::Value {
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { gentor_string_free(s) };
    v
}

fn decide(g: *const GentorGroup, word: &str) -> Result<bool, GentorStatus> {
    let w = CString::new(word).unwrap();
    let mut out = false;
    match unsafe { gentor_decide(g, w.as_ptr(), &mut out) } {
        GentorStatus::Ok => Ok(out),
        s => Err(s),
    }
}

#[test]
fn decide_in_klein_bottle() {
    let g = open("klein");
    assert_eq!(decide(g, "x"), Ok(true));
    assert_eq!(decide(g, "y"), Ok(false));
    assert_eq!(decide(g, "[x,y]^y"), Ok(true));
    assert_eq!(decide(g, "q"), Err(GentorStatus::InvalidInput));
    assert!(last_error().contains("unknown identifier"));
    assert_eq!(decide(g, "x"), Ok(true));
    assert_eq!(last_error(), "");
    unsafe { gentor_group_free(g) };
}

#[test]
fn exponent_bounds() {
    let g = open("promislow");
    let (mut lo, mut hi, mut exact) = (0u64, 0u64, false);
    assert_eq!(unsafe { gentor_exponent_bounds(g, &mut lo, &mut hi, &mut exact) }, GentorStatus::Ok);
    assert_eq!((lo, hi, exact), (4, 4, true));
    unsafe { gentor_group_free(g) };

    let g = open("K:2,1,1*K:3,1,1");
    assert_eq!(unsafe { gentor_exponent_bounds(g, &mut lo, &mut hi, &mut exact) }, GentorStatus::Ok);
    assert_eq!((lo, hi, exact), (36, 36, true));
    unsafe { gentor_group_free(g) };

    let g = open("klein");
    assert_eq!(
        unsafe { gentor_exponent_bounds(g, &mut lo, &mut hi, &mut exact) },
        GentorStatus::InvalidInput
    );
    assert_eq!(
        unsafe { gentor_exponent_bounds(g, ptr::null_mut(), &mut hi, &mut exact) },
        GentorStatus::NullPointer
    );
    unsafe { gentor_group_free(g) };
}

#[test]
fn info_and_witness_json() {
    let g = open("promislow");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gentor_info_json(g, &mut s) }, GentorStatus::Ok);
    let info = take(s);
    assert_eq!(info["abelianization"]["invariant_factors"], serde_json::json!([4, 4]));
    assert_eq!(info["index"], 4);
    assert_eq!(info["torsion_free"], true);
    assert_eq!(info["center_rank"], 0);

    let w = CString::new("x").unwrap();
    assert_eq!(unsafe { gentor_witness_json(g, w.as_ptr(), &mut s) }, GentorStatus::Ok);
    let cert = take(s);
    assert_eq!(cert["length"], 4);
    assert_eq!(cert["verified"], true);
    unsafe { gentor_group_free(g) };

    let gamma = open("gamma");
    assert_eq!(unsafe { gentor_info_json(gamma, &mut s) }, GentorStatus::Ok);
    assert!(take(s)["abelianization"].is_null());
    let x1 = CString::new("x1").unwrap();
    assert_eq!(unsafe { gentor_witness_json(gamma, x1.as_ptr(), &mut s) }, GentorStatus::Unsupported);
    unsafe { gentor_group_free(gamma) };
}

#[test]
fn open_errors() {
    let mut g = ptr::null_mut();
    let bad = CString::new("K:4,1,1").unwrap();
    assert_eq!(unsafe { gentor_group_open(bad.as_ptr(), &mut g) }, GentorStatus::InvalidInput);
    assert!(g.is_null());
    assert_eq!(unsafe { gentor_group_open(ptr::null(), &mut g) }, GentorStatus::NullPointer);
}
