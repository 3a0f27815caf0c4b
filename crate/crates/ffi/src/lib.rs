//! C ABI over the `qcap` engine.
//!
//! Series cross the boundary as opaque [`QcapSeries`] handles owned by the
//! caller and released with [`qcap_series_free`]. Every fallible function
//! returns a [`QcapStatus`]; on failure a message is available from
//! [`qcap_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qcap::identities::{find_case, Params, Verdict};
use qcap::partitions::{count_c, count_d};
use qcap::qcombinat::q_binomial;
use qcap::{QError, QSeries};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcapStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotDivisible = 3,
    UnknownCase = 4,
    Overflow = 5,
    Panic = 6,
}

/// Opaque handle to a series.
pub struct QcapSeries(QSeries);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: QcapStatus, msg: impl Into<String>) -> QcapStatus {
    set_error(msg);
    status
}

fn from_error(e: QError) -> QcapStatus {
    let status = match e {
        QError::NonDivisible(_) | QError::DivisionByZero => QcapStatus::NotDivisible,
        QError::UnknownCase(_) => QcapStatus::UnknownCase,
        _ => QcapStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn guard<F: FnOnce() -> QcapStatus>(f: F) -> QcapStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(QcapStatus::Panic, "internal panic"))
}

unsafe fn series<'a>(p: *const QcapSeries) -> Option<&'a QSeries> {
    p.as_ref().map(|s| &s.0)
}

unsafe fn emit(out: *mut *mut QcapSeries, s: QSeries) -> QcapStatus {
    *out = Box::into_raw(Box::new(QcapSeries(s)));
    QcapStatus::Ok
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qcap_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Build `Σ coeffs[i] q^(offset+i)`. A negative `trunc` means exact;
/// otherwise terms above `q^trunc` are dropped and the result is truncated.
///
/// # Safety
/// `coeffs` must point to `len` readable values (or be NULL when `len` is 0),
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_series_new(
    offset: i64,
    coeffs: *const i64,
    len: usize,
    trunc: i64,
    out: *mut *mut QcapSeries,
) -> QcapStatus {
    guard(|| {
        if out.is_null() || (coeffs.is_null() && len > 0) {
            return fail(QcapStatus::NullPointer, "null argument");
        }
        let c = if len == 0 { &[][..] } else { std::slice::from_raw_parts(coeffs, len) };
        let s = QSeries::from_i64s(offset, c);
        emit(out, if trunc < 0 { s } else { s.truncate(trunc) })
    })
}

/// # Safety
/// `s` must be NULL or a handle from this library that was not freed.
#[no_mangle]
pub unsafe extern "C" fn qcap_series_free(s: *mut QcapSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_series_clone(s: *const QcapSeries, out: *mut *mut QcapSeries) -> QcapStatus {
    guard(|| match series(s) {
        Some(a) if !out.is_null() => emit(out, a.clone()),
        _ => fail(QcapStatus::NullPointer, "null argument"),
    })
}

unsafe fn binary<F: FnOnce(&QSeries, &QSeries) -> qcap::Result<QSeries>>(
    a: *const QcapSeries,
    b: *const QcapSeries,
    out: *mut *mut QcapSeries,
    op: F,
) -> QcapStatus {
    guard(|| match (series(a), series(b)) {
        (Some(a), Some(b)) if !out.is_null() => match op(a, b) {
            Ok(s) => emit(out, s),
            Err(e) => from_error(e),
        },
        _ => fail(QcapStatus::NullPointer, "null argument"),
    })
}

/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_series_add(
    a: *const QcapSeries,
    b: *const QcapSeries,
    out: *mut *mut QcapSeries,
) -> QcapStatus {
    binary(a, b, out, |a, b| Ok(a + b))
}

/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_series_sub(
    a: *const QcapSeries,
    b: *const QcapSeries,
    out: *mut *mut QcapSeries,
) -> QcapStatus {
    binary(a, b, out, |a, b| Ok(a - b))
}

/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_series_mul(
    a: *const QcapSeries,
    b: *const QcapSeries,
    out: *mut *mut QcapSeries,
) -> QcapStatus {
    binary(a, b, out, |a, b| Ok(a * b))
}

/// Exact quotient `a / b`; fails with `NotDivisible` when `b` does not divide `a`.
///
/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_series_div_exact(
    a: *const QcapSeries,
    b: *const QcapSeries,
    out: *mut *mut QcapSeries,
) -> QcapStatus {
    binary(a, b, out, QSeries::div_exact)
}

/// Coefficient of `q^e`; `Overflow` if it does not fit in 64 bits.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_series_coeff(s: *const QcapSeries, e: i64, out: *mut i64) -> QcapStatus {
    guard(|| match series(s) {
        Some(a) if !out.is_null() => match a.coeff_i64(e) {
            Some(c) => {
                *out = c;
                QcapStatus::Ok
            }
            None => fail(QcapStatus::Overflow, format!("coefficient of q^{e} exceeds 64 bits")),
        },
        _ => fail(QcapStatus::NullPointer, "null argument"),
    })
}

/// Writes the highest exponent with a non-zero coefficient; `InvalidArgument`
/// for the zero series.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_series_degree(s: *const QcapSeries, out: *mut i64) -> QcapStatus {
    guard(|| match series(s) {
        Some(a) if !out.is_null() => match a.degree() {
            Some(d) => {
                *out = d;
                QcapStatus::Ok
            }
            None => fail(QcapStatus::InvalidArgument, "the zero series has no degree"),
        },
        _ => fail(QcapStatus::NullPointer, "null argument"),
    })
}

/// Structural equality, including the truncation order.
///
/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_series_equal(a: *const QcapSeries, b: *const QcapSeries, out: *mut bool) -> QcapStatus {
    guard(|| match (series(a), series(b)) {
        (Some(a), Some(b)) if !out.is_null() => {
            *out = a == b;
            QcapStatus::Ok
        }
        _ => fail(QcapStatus::NullPointer, "null argument"),
    })
}

/// Human-readable form such as `1 + q^2 - q^4`. Free with [`qcap_string_free`].
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qcap_series_to_string(s: *const QcapSeries) -> *mut c_char {
    match series(s) {
        Some(a) => CString::new(a.to_string()).map_or(ptr::null_mut(), CString::into_raw),
        None => {
            set_error("null argument");
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library that was not freed.
#[no_mangle]
pub unsafe extern "C" fn qcap_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Gaussian binomial `[top, bottom]` in `q^base`; zero outside `0 <= bottom <= top`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_q_binomial(top: i64, bottom: i64, base: u32, out: *mut *mut QcapSeries) -> QcapStatus {
    guard(|| {
        if out.is_null() {
            return fail(QcapStatus::NullPointer, "null argument");
        }
        if base == 0 {
            return fail(QcapStatus::InvalidArgument, "base must be positive");
        }
        emit(out, q_binomial(top, bottom, base))
    })
}

/// Evaluate a registered case at one parameter point. `names` and `values`
/// hold `n` pairs; parameters not given take their defaults. `passed` is set
/// to whether both sides agree.
///
/// # Safety
/// `id` must be a nul-terminated string, `names` and `values` must point to
/// `n` entries (or be NULL when `n` is 0), and `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_verify_case(
    id: *const c_char,
    names: *const *const c_char,
    values: *const i64,
    n: usize,
    passed: *mut bool,
) -> QcapStatus {
    guard(|| {
        if id.is_null() || passed.is_null() || (n > 0 && (names.is_null() || values.is_null())) {
            return fail(QcapStatus::NullPointer, "null argument");
        }
        let Ok(id) = CStr::from_ptr(id).to_str() else {
            return fail(QcapStatus::InvalidArgument, "case id is not UTF-8");
        };
        let case = match find_case(id) {
            Ok(c) => c,
            Err(e) => return from_error(e),
        };
        let mut params = Params::new();
        for i in 0..n {
            let name = *names.add(i);
            if name.is_null() {
                return fail(QcapStatus::NullPointer, "null parameter name");
            }
            let Ok(name) = CStr::from_ptr(name).to_str() else {
                return fail(QcapStatus::InvalidArgument, "parameter name is not UTF-8");
            };
            params.set(name, *values.add(i));
        }
        let report = qcap::identities::evaluate(case, &params, false);
        match report.verdict {
            Verdict::Error => fail(QcapStatus::InvalidArgument, report.error.unwrap_or_default()),
            v => {
                *passed = v == Verdict::Pass;
                QcapStatus::Ok
            }
        }
    })
}

/// Counts of the two partition classes of size `n` for `m` in {1, 2}.
///
/// # Safety
/// `c` and `d` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcap_partition_counts(m: u32, n: u32, c: *mut u64, d: *mut u64) -> QcapStatus {
    guard(|| {
        if c.is_null() || d.is_null() {
            return fail(QcapStatus::NullPointer, "null argument");
        }
        match (count_c(m, n), count_d(m, n)) {
            (Ok(x), Ok(y)) => {
                *c = x;
                *d = y;
                QcapStatus::Ok
            }
            (Err(e), _) | (_, Err(e)) => from_error(e),
        }
    })
}
