//! C ABI over the `binv` core crate.
//!
//! Polynomials cross the boundary as opaque `BinvPoly` handles owned by the
//! caller and released with `binv_free`. Every fallible call returns a
//! `BinvStatus`; on failure the message is available from
//! `binv_last_error` on the same thread until the next failing call.
//! Strings returned through out-parameters are released with
//! `binv_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use binv::polyring::{content_hash, deserialize, serialize, Polynomial};
use binv::thetaf2::k_form;
use binv::invariants::h_form;
use binv::{Budget, Error};

/// Opaque polynomial handle.
pub struct BinvPoly {
    inner: Polynomial,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinvStatus {
    Ok = 0,
    NullArgument = -1,
    InvalidUtf8 = -2,
    Parse = -3,
    UnsupportedVersion = -4,
    Budget = -5,
    Precondition = -6,
    Arithmetic = -7,
    Io = -8,
    Panic = -99,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> BinvStatus {
    match e {
        Error::Parse(_) => BinvStatus::Parse,
        Error::UnsupportedVersion(_) => BinvStatus::UnsupportedVersion,
        Error::ResourceBudgetExceeded { .. } => BinvStatus::Budget,
        Error::Io(_) => BinvStatus::Io,
        Error::PreconditionViolated(_) | Error::LengthMismatch(..) | Error::ContextMismatch(..) => {
            BinvStatus::Precondition
        }
        _ => BinvStatus::Arithmetic,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (BinvStatus, String)>) -> BinvStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BinvStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            BinvStatus::Panic
        }
    }
}

fn lift(e: Error) -> (BinvStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(name: &str) -> (BinvStatus, String) {
    (BinvStatus::NullArgument, format!("{name} is null"))
}

unsafe fn write_poly(out: *mut *mut BinvPoly, p: Polynomial) {
    *out = Box::into_raw(Box::new(BinvPoly { inner: p }));
}

unsafe fn write_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("no interior nul").into_raw();
}

fn build_form(
    genus: u32,
    budget_bytes: u64,
    out: *mut *mut BinvPoly,
    f: fn(usize, &Budget) -> binv::Result<binv::invariants::InvariantForm>,
) -> BinvStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let budget = if budget_bytes == 0 {
            Budget::unlimited()
        } else {
            Budget::from_bytes(budget_bytes)
        };
        let form = f(genus as usize, &budget).map_err(lift)?;
        unsafe { write_poly(out, form.poly) };
        Ok(())
    })
}

/// Computes the branch-point form H for `genus`. A `budget_bytes` of 0
/// means unlimited.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn binv_h(genus: u32, budget_bytes: u64, out: *mut *mut BinvPoly) -> BinvStatus {
    build_form(genus, budget_bytes, out, h_form)
}

/// Computes the theta-side form K for `genus`. A `budget_bytes` of 0
/// means unlimited.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn binv_k(genus: u32, budget_bytes: u64, out: *mut *mut BinvPoly) -> BinvStatus {
    build_form(genus, budget_bytes, out, k_form)
}

/// Parses a `BINV 1` document.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binv_deserialize(text: *const c_char, out: *mut *mut BinvPoly) -> BinvStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (BinvStatus::InvalidUtf8, e.to_string()))?;
        let p = deserialize(s).map_err(lift)?;
        write_poly(out, p);
        Ok(())
    })
}

/// Canonical `BINV 1` text of `p`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binv_serialize(p: *const BinvPoly, out: *mut *mut c_char) -> BinvStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("p"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, serialize(&p.inner));
        Ok(())
    })
}

/// Lowercase hex SHA-256 of the canonical serialization.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn binv_hash(p: *const BinvPoly, out: *mut *mut c_char) -> BinvStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("p"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, content_hash(&p.inner));
        Ok(())
    })
}

/// Number of nonzero terms, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn binv_num_terms(p: *const BinvPoly) -> usize {
    p.as_ref().map_or(0, |p| p.inner.len())
}

/// 1 if equal, 0 if not, -1 if either handle is null.
///
/// # Safety
/// Both arguments must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn binv_equal(a: *const BinvPoly, b: *const BinvPoly) -> i32 {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => i32::from(a.inner == b.inner),
        _ => -1,
    }
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn binv_free(p: *mut BinvPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn binv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn binv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
