use std::ffi::{CStr, CString};
use std::ptr;

use qcap_ffi::*;

unsafe fn new(offset: i64, c: &[i64], trunc: i64) -> *mut QcapSeries {
    let mut out = ptr::null_mut();
    assert_eq!(qcap_series_new(offset, c.as_ptr(), c.len(), trunc, &mut out), QcapStatus::Ok);
    out
}

unsafe fn text(s: *const QcapSeries) -> String {
    let p = qcap_series_to_string(s);
    let t = CStr::from_ptr(p).to_str().unwrap().to_owned();
    qcap_string_free(p);
    t
}

unsafe fn last_error() -> String {
    CStr::from_ptr(qcap_last_error()).to_string_lossy().into_owned()
}

#[test]
fn arithmetic_roundtrip() {
    unsafe {
        let a = new(0, &[1, 1], -1);
        let b = new(0, &[1, -1], -1);
        let mut p = ptr::null_mut();
        assert_eq!(qcap_series_mul(a, b, &mut p), QcapStatus::Ok);
        assert_eq!(text(p), "1 - q^2");
        let mut back = ptr::null_mut();
        assert_eq!(qcap_series_div_exact(p, b, &mut back), QcapStatus::Ok);
        let mut eq = false;
        assert_eq!(qcap_series_equal(back, a, &mut eq), QcapStatus::Ok);
        assert!(eq);
        let mut s = ptr::null_mut();
        assert_eq!(qcap_series_add(a, b, &mut s), QcapStatus::Ok);
        assert_eq!(text(s), "2");
        let mut d = ptr::null_mut();
        assert_eq!(qcap_series_sub(a, a, &mut d), QcapStatus::Ok);
        assert_eq!(text(d), "0");
        let mut deg = 0;
        assert_eq!(qcap_series_degree(d, &mut deg), QcapStatus::InvalidArgument);
        assert_eq!(qcap_series_degree(p, &mut deg), QcapStatus::Ok);
        assert_eq!(deg, 2);
        for h in [a, b, p, back, s, d] {
            qcap_series_free(h);
        }
    }
}

#[test]
fn inexact_division_reports_error() {
    unsafe {
        let a = new(0, &[1, 0, 1], -1);
        let b = new(0, &[1, 1], -1);
        let mut out = ptr::null_mut();
        assert_eq!(qcap_series_div_exact(a, b, &mut out), QcapStatus::NotDivisible);
        assert!(out.is_null());
        assert!(last_error().contains("not exact"));
        qcap_series_free(a);
        qcap_series_free(b);
    }
}

#[test]
fn q_binomial_and_coefficients() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(qcap_q_binomial(4, 2, 1, &mut g), QcapStatus::Ok);
        assert_eq!(text(g), "1 + q + 2q^2 + q^3 + q^4");
        let mut c = 0;
        assert_eq!(qcap_series_coeff(g, 2, &mut c), QcapStatus::Ok);
        assert_eq!(c, 2);
        let mut copy = ptr::null_mut();
        assert_eq!(qcap_series_clone(g, &mut copy), QcapStatus::Ok);
        qcap_series_free(g);
        assert_eq!(text(copy), "1 + q + 2q^2 + q^3 + q^4");
        qcap_series_free(copy);
        assert_eq!(qcap_q_binomial(4, 2, 0, &mut g), QcapStatus::InvalidArgument);
    }
}

#[test]
fn truncation_is_applied() {
    unsafe {
        let s = new(0, &[1, 2, 3, 4], 1);
        assert_eq!(text(s), "1 + 2q");
        qcap_series_free(s);
    }
}

#[test]
fn verify_cases_by_id() {
    unsafe {
        let id = CString::new("new_fin_cap_1").unwrap();
        let name = CString::new("L").unwrap();
        let names = [name.as_ptr()];
        let mut passed = false;
        assert_eq!(qcap_verify_case(id.as_ptr(), names.as_ptr(), [5i64].as_ptr(), 1, &mut passed), QcapStatus::Ok);
        assert!(passed);

        let bad = CString::new("nonsense").unwrap();
        assert_eq!(qcap_verify_case(bad.as_ptr(), ptr::null(), ptr::null(), 0, &mut passed), QcapStatus::UnknownCase);
        assert_eq!(
            qcap_verify_case(id.as_ptr(), ptr::null(), ptr::null(), 0, &mut passed),
            QcapStatus::InvalidArgument
        );
        assert!(last_error().contains('L'));
    }
}

#[test]
fn partition_counts_agree() {
    unsafe {
        let (mut c, mut d) = (0, 0);
        for n in 0..=20 {
            assert_eq!(qcap_partition_counts(1, n, &mut c, &mut d), QcapStatus::Ok);
            assert_eq!(c, d);
        }
        assert_eq!(qcap_partition_counts(1, 6, &mut c, &mut d), QcapStatus::Ok);
        assert_eq!(c, 2);
        assert_eq!(qcap_partition_counts(3, 6, &mut c, &mut d), QcapStatus::InvalidArgument);
    }
}

#[test]
fn null_pointers_are_rejected() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(qcap_series_new(0, ptr::null(), 3, -1, &mut out), QcapStatus::NullPointer);
        assert_eq!(qcap_series_add(ptr::null(), ptr::null(), &mut out), QcapStatus::NullPointer);
        assert!(qcap_series_to_string(ptr::null()).is_null());
        qcap_series_free(ptr::null_mut());
        qcap_string_free(ptr::null_mut());
        assert_eq!(qcap_series_new(0, ptr::null(), 0, -1, &mut out), QcapStatus::Ok);
        assert_eq!(text(out), "0");
        qcap_series_free(out);
    }
}

#[test]
fn header_declares_every_export() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/qcap.h")).unwrap();
    for f in [
        "qcap_last_error",
        "qcap_series_new",
        "qcap_series_free",
        "qcap_series_mul",
        "qcap_series_div_exact",
        "qcap_q_binomial",
        "qcap_verify_case",
        "qcap_partition_counts",
        "QCAP_STATUS_OK",
        "typedef struct QcapSeries QcapSeries",
    ] {
        assert!(h.contains(f), "{f} missing from header");
    }
}
