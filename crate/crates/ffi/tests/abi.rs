use std::ffi::{CStr, CString};
use std::ptr;

use exposg_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(exposg_last_error_message()) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { exposg_string_free(p) };
    s
}

fn semigroup(gens: &[u64]) -> *mut ExposgSemigroup {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { exposg_semigroup_from_generators(gens.as_ptr(), gens.len(), &mut s) }, ExposgStatus::Ok);
    s
}

fn matrix(json: &str) -> Result<*mut ExposgMatrix, ExposgStatus> {
    let text = CString::new(json).unwrap();
    let mut m = ptr::null_mut();
    match unsafe { exposg_matrix_from_json(text.as_ptr(), &mut m) } {
        ExposgStatus::Ok => Ok(m),
        other => Err(other),
    }
}

#[test]
fn matrix_round_trip() {
    let m = matrix(r#"{"dim": 2, "entries": [["-1/4", "19/16"], ["-3", "-7/4"]]}"#).unwrap();
    let mut dim = 0usize;
    assert_eq!(unsafe { exposg_matrix_dim(m, &mut dim) }, ExposgStatus::Ok);
    assert_eq!(dim, 2);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { exposg_matrix_to_json(m, &mut out) }, ExposgStatus::Ok);
    let json = take_string(out);
    let again = matrix(&json).unwrap();
    unsafe {
        exposg_matrix_free(again);
        exposg_matrix_free(m);
    }
}

#[test]
fn error_codes() {
    assert_eq!(matrix(r#"{"dim": 1, "entries": [["1/0"]]}"#).unwrap_err(), ExposgStatus::Parse);
    assert!(last_error().contains("row 0, col 0"), "{}", last_error());
    assert_eq!(matrix("not json").unwrap_err(), ExposgStatus::Parse);

    let mut m = ptr::null_mut();
    assert_eq!(unsafe { exposg_matrix_from_json(ptr::null(), &mut m) }, ExposgStatus::NullPointer);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { exposg_matrix_from_json(bad.as_ptr().cast(), &mut m) }, ExposgStatus::InvalidUtf8);

    let mut s = ptr::null_mut();
    let zero = [0u64];
    assert_eq!(unsafe { exposg_semigroup_from_generators(zero.as_ptr(), 1, &mut s) }, ExposgStatus::InvalidArgument);

    let c = semigroup(&[4, 6]);
    let mut g = 0i64;
    assert_eq!(unsafe { exposg_semigroup_frobenius(c, &mut g) }, ExposgStatus::InvalidArgument);
    unsafe { exposg_semigroup_free(c) };

    // success clears the message
    let n = semigroup(&[1]);
    assert_eq!(unsafe { exposg_semigroup_frobenius(n, ptr::null_mut()) }, ExposgStatus::NullPointer);
    assert_eq!(unsafe { exposg_semigroup_frobenius(n, &mut g) }, ExposgStatus::Ok);
    assert_eq!(g, -1);
    assert!(last_error().is_empty());
    unsafe { exposg_semigroup_free(n) };
}

#[test]
fn budget_exhaustion_status() {
    let m = matrix(r#"{"dim": 2, "entries": [["2", "1/2"], ["0", "1"]]}"#).unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { exposg_exponent_semigroup(m, 1, &mut s) }, ExposgStatus::BudgetExceeded);
    assert!(s.is_null());
    unsafe { exposg_matrix_free(m) };
}

#[test]
fn construct_and_recover() {
    for gens in [&[3u64, 4][..], &[15, 21, 33], &[1], &[]] {
        let s = semigroup(gens);
        let mut a = ptr::null_mut();
        assert_eq!(unsafe { exposg_construct(s, 2, &mut a) }, ExposgStatus::Ok, "{gens:?}: {}", last_error());
        let mut back = ptr::null_mut();
        assert_eq!(unsafe { exposg_exponent_semigroup(a, 0, &mut back) }, ExposgStatus::Ok);
        let mut lhs = ptr::null_mut();
        let mut rhs = ptr::null_mut();
        unsafe {
            exposg_semigroup_to_json(s, &mut lhs);
            exposg_semigroup_to_json(back, &mut rhs);
        }
        assert_eq!(take_string(lhs), take_string(rhs));
        unsafe {
            exposg_semigroup_free(back);
            exposg_matrix_free(a);
            exposg_semigroup_free(s);
        }
    }
}

#[test]
fn membership_bounds_and_analysis() {
    let s = semigroup(&[6, 9, 20]);
    let mut member = false;
    unsafe { exposg_semigroup_contains(s, 43, &mut member) };
    assert!(!member);
    unsafe { exposg_semigroup_contains(s, 44, &mut member) };
    assert!(member);
    let (mut lo, mut hi) = (0u64, 0u64);
    assert_eq!(unsafe { exposg_bounds(s, &mut lo, &mut hi) }, ExposgStatus::Ok);
    assert_eq!((lo, hi), (6, 6));
    unsafe { exposg_semigroup_free(s) };

    let m = matrix(r#"{"dim": 1, "entries": [["1/2"]]}"#).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { exposg_analyze_json(m, 0, 0, &mut out) }, ExposgStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["power_integrality"]["verdict"], false);
    assert_eq!(v["exponent"]["classification"]["kind"], "trivial");
    unsafe { exposg_matrix_free(m) };
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/exposg.h")).unwrap();
    let source = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .split("extern \"C\" fn ")
        .skip(1)
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert_eq!(exports.len(), 15);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}
