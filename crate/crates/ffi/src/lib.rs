//! C ABI over `sylowchar`.
//!
//! Every function returns a [`SylowcharStatus`]; on failure the message is
//! available from [`sylowchar_last_error`] on the same thread. Handles are
//! opaque and must be released with their matching `_free` function. Strings
//! returned through `char **` are owned by the caller and released with
//! [`sylowchar_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sylowchar::lr::lr_coefficient;
use sylowchar::multiplicity::{MultiplicityReport, SylowMultiplicity};
use sylowchar::partition::Partition;
use sylowchar::sylow::distribution_within;
use sylowchar::{Error, Limits};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SylowcharStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    BoundExceeded = 5,
    Internal = 6,
    Panic = 7,
}

/// An integer partition.
pub struct SylowcharPartition(Partition);

/// `f(λ)` for every `λ ⊢ n`, in reverse lexicographic order.
pub struct SylowcharReport(MultiplicityReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(SylowcharStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::MalformedPartition { .. } | Error::NotDecreasing(_) => SylowcharStatus::Parse,
            Error::BoundExceeded { .. } => SylowcharStatus::BoundExceeded,
            Error::Inexact { .. } => SylowcharStatus::Internal,
            _ => SylowcharStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|cell| *cell.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SylowcharStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            SylowcharStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside sylowchar");
            SylowcharStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(SylowcharStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(SylowcharStatus::Internal, "string contains NUL".into()))
}

fn limits() -> Result<Limits, Failure> {
    Ok(Limits::from_env()?)
}

/// Message for the most recent failure on this thread; empty after a success.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn sylowchar_last_error() -> *const c_char {
    LAST_ERROR.with(|cell| cell.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"5,4"`, `"(3,2,1)"` or `"2^4,1"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_partition_parse(
    text: *const c_char,
    out: *mut *mut SylowcharPartition,
) -> SylowcharStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(SylowcharStatus::InvalidUtf8, e.to_string()))?;
        let lambda: Partition = text.parse()?;
        *out = Box::into_raw(Box::new(SylowcharPartition(lambda)));
        Ok(())
    })
}

/// Builds a partition from `len` weakly decreasing positive parts.
///
/// # Safety
/// `parts` must point to `len` readable values (or be null when `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn sylowchar_partition_from_parts(
    parts: *const u32,
    len: usize,
    out: *mut *mut SylowcharPartition,
) -> SylowcharStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let parts = if len == 0 {
            Vec::new()
        } else if parts.is_null() {
            return Err(null("parts"));
        } else {
            std::slice::from_raw_parts(parts, len).to_vec()
        };
        *out = Box::into_raw(Box::new(SylowcharPartition(Partition::new(parts)?)));
        Ok(())
    })
}

/// # Safety
/// `p` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_partition_free(p: *mut SylowcharPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of parts; 0 for null.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_partition_len(p: *const SylowcharPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Sum of the parts; 0 for null.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_partition_size(p: *const SylowcharPartition) -> u64 {
    p.as_ref().map_or(0, |p| p.0.size())
}

/// Copies up to `cap` parts into `buf`; `written` receives the number copied.
/// Fails with `INVALID_ARGUMENT` when `cap` is smaller than the length.
///
/// # Safety
/// `buf` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_partition_parts(
    p: *const SylowcharPartition,
    buf: *mut u32,
    cap: usize,
    written: *mut usize,
) -> SylowcharStatus {
    guard(|| {
        let p = borrow(p, "partition")?;
        let written = out_ptr(written, "written")?;
        *written = 0;
        let parts = p.0.parts();
        if cap < parts.len() {
            return Err(Failure(
                SylowcharStatus::InvalidArgument,
                format!("buffer holds {cap} parts, need {}", parts.len()),
            ));
        }
        if !parts.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            ptr::copy_nonoverlapping(parts.as_ptr(), buf, parts.len());
        }
        *written = parts.len();
        Ok(())
    })
}

/// `f(λ)` as a decimal string.
///
/// # Safety
/// `lambda` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_multiplicity(
    p: u64,
    n: u64,
    lambda: *const SylowcharPartition,
    out: *mut *mut c_char,
) -> SylowcharStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let lambda = borrow(lambda, "lambda")?;
        let m = SylowMultiplicity::with_limits(p, n, &limits()?)?.multiplicity(&lambda.0)?;
        *out = to_c_string(m.to_string())?;
        Ok(())
    })
}

/// Computes `f` over all partitions of `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_report_new(
    p: u64,
    n: u64,
    out: *mut *mut SylowcharReport,
) -> SylowcharStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let report = MultiplicityReport::compute(p, n, &limits()?)?;
        *out = Box::into_raw(Box::new(SylowcharReport(report)));
        Ok(())
    })
}

/// # Safety
/// `r` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_report_free(r: *mut SylowcharReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Number of entries; 0 for null.
///
/// # Safety
/// `r` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_report_len(r: *const SylowcharReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.entries.len())
}

/// Number of partitions with `f(λ) = 0`; 0 for null.
///
/// # Safety
/// `r` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_report_zero_count(r: *const SylowcharReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.zero_set.len())
}

/// Whether the degree identity and conjugation symmetry both held.
///
/// # Safety
/// `r` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_report_checks_passed(r: *const SylowcharReport) -> bool {
    r.as_ref()
        .is_some_and(|r| r.0.degree_identity && r.0.conjugation_symmetry)
}

/// Entry `index`: a new partition handle and `f` as a decimal string.
///
/// # Safety
/// `r` must be a live handle; both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_report_entry(
    r: *const SylowcharReport,
    index: usize,
    partition_out: *mut *mut SylowcharPartition,
    multiplicity_out: *mut *mut c_char,
) -> SylowcharStatus {
    guard(|| {
        let partition_out = out_ptr(partition_out, "partition_out")?;
        let multiplicity_out = out_ptr(multiplicity_out, "multiplicity_out")?;
        *partition_out = ptr::null_mut();
        *multiplicity_out = ptr::null_mut();
        let r = borrow(r, "report")?;
        let (lambda, m) = r.0.entries.get(index).ok_or_else(|| {
            Failure(
                SylowcharStatus::InvalidArgument,
                format!("index {index} out of range for {} entries", r.0.entries.len()),
            )
        })?;
        *multiplicity_out = to_c_string(m.to_string())?;
        *partition_out = Box::into_raw(Box::new(SylowcharPartition(lambda.clone())));
        Ok(())
    })
}

/// The report as JSON.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_report_to_json(
    r: *const SylowcharReport,
    out: *mut *mut c_char,
) -> SylowcharStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let r = borrow(r, "report")?;
        *out = to_c_string(r.0.to_json().to_string())?;
        Ok(())
    })
}

/// Littlewood–Richardson coefficient `c^λ_{μν}`.
///
/// # Safety
/// All handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_lr_coefficient(
    lambda: *const SylowcharPartition,
    mu: *const SylowcharPartition,
    nu: *const SylowcharPartition,
    out: *mut u64,
) -> SylowcharStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = 0;
        let (lambda, mu, nu) = (borrow(lambda, "lambda")?, borrow(mu, "mu")?, borrow(nu, "nu")?);
        *out = lr_coefficient(&lambda.0, &mu.0, &nu.0)?;
        Ok(())
    })
}

/// `Ω_q(λ)` as a new partition handle.
///
/// # Safety
/// `lambda` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_omega(
    lambda: *const SylowcharPartition,
    q: u32,
    out: *mut *mut SylowcharPartition,
) -> SylowcharStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let lambda = borrow(lambda, "lambda")?;
        let result = sylowchar::omega(&lambda.0, q)?;
        *out = Box::into_raw(Box::new(SylowcharPartition(result)));
        Ok(())
    })
}

/// Cycle-type distribution of a Sylow p-subgroup of `S_n` as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sylowchar_sylow_classes_json(
    p: u64,
    n: u64,
    out: *mut *mut c_char,
) -> SylowcharStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let dist = distribution_within(p, n, limits()?.max_n.into())?;
        let json = serde_json::to_string(&dist.to_json())
            .map_err(|e| Failure(SylowcharStatus::Internal, e.to_string()))?;
        *out = to_c_string(json)?;
        Ok(())
    })
}
