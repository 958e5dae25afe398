//! C ABI over `chromq`.
//!
//! Every entry point returns a [`ChromqStatus`]; results come back through
//! out-pointers. On failure a message is available from
//! [`chromq_last_error`] until the next call on the same thread. Strings
//! handed out by the library must be released with [`chromq_string_free`],
//! and posets with [`chromq_poset_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chromq::chromatic::coeff_in_basis;
use chromq::heaps::enumerate_classes;
use chromq::symfunc::Basis;
use chromq::{Error, UnitIntervalOrder};

/// Largest total degree accepted by [`chromq_expand_json`] and [`chromq_classes_count`].
pub const CHROMQ_MAX_DEGREE: usize = 10;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChromqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Disagreement = 4,
    TooLarge = 5,
    Panic = 6,
}

/// Opaque handle to a natural unit interval order.
pub struct ChromqPoset {
    inner: UnitIntervalOrder,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: ChromqStatus, msg: &str) -> ChromqStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> ChromqStatus {
    let status = match e {
        Error::Disagreement(_) => ChromqStatus::Disagreement,
        Error::TooLarge(_) => ChromqStatus::TooLarge,
        _ => ChromqStatus::InvalidInput,
    };
    fail(status, &e.to_string())
}

fn guard(f: impl FnOnce() -> ChromqStatus) -> ChromqStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(ChromqStatus::Panic, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, ChromqStatus> {
    if s.is_null() {
        return Err(fail(ChromqStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(ChromqStatus::InvalidUtf8, "argument is not UTF-8"))
}

/// `mu` may be null, meaning all ones.
unsafe fn read_type(p: &UnitIntervalOrder, mu: *const c_char) -> Result<Vec<usize>, ChromqStatus> {
    let mu =
        if mu.is_null() { vec![1; p.n()] } else { chromq::poset::parse_list(read_str(mu)?).map_err(from_error)? };
    chromq::poset::check_type(p, &mu).map_err(from_error)?;
    let d: usize = mu.iter().sum();
    if d > CHROMQ_MAX_DEGREE {
        return Err(fail(ChromqStatus::TooLarge, &format!("total degree {d} exceeds {CHROMQ_MAX_DEGREE}")));
    }
    Ok(mu)
}

/// Parse a comma-separated sequence such as `"2,3,3"` into a new poset.
///
/// # Safety
/// `m` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromq_poset_new(m: *const c_char, out: *mut *mut ChromqPoset) -> ChromqStatus {
    guard(|| {
        if out.is_null() {
            return fail(ChromqStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let text = match read_str(m) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match text.parse::<UnitIntervalOrder>() {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(ChromqPoset { inner }));
                ChromqStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `p` must be null or a pointer obtained from [`chromq_poset_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chromq_poset_free(p: *mut ChromqPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of vertices.
///
/// # Safety
/// `p` must be a live poset handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromq_poset_size(p: *const ChromqPoset, out: *mut usize) -> ChromqStatus {
    guard(|| match (p.as_ref(), out.is_null()) {
        (Some(p), false) => {
            *out = p.inner.n();
            ChromqStatus::Ok
        }
        _ => fail(ChromqStatus::NullPointer, "null argument"),
    })
}

/// Height: the longest chain, equal to the largest independent set of `inc(P)`.
///
/// # Safety
/// `p` must be a live poset handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromq_poset_height(p: *const ChromqPoset, out: *mut usize) -> ChromqStatus {
    guard(|| match (p.as_ref(), out.is_null()) {
        (Some(p), false) => {
            *out = p.inner.height();
            ChromqStatus::Ok
        }
        _ => fail(ChromqStatus::NullPointer, "null argument"),
    })
}

/// Expansion report as JSON, in the same schema as `chromq expand --format json`.
///
/// `mu` may be null (all ones); `basis` is one of `m e h p s f`. The string
/// written to `out` must be released with [`chromq_string_free`].
///
/// # Safety
/// `p` must be a live poset handle, `basis` a valid string, `mu` null or a
/// valid string, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromq_expand_json(
    p: *const ChromqPoset,
    mu: *const c_char,
    basis: *const c_char,
    out: *mut *mut c_char,
) -> ChromqStatus {
    guard(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return fail(ChromqStatus::NullPointer, "null argument");
        };
        *out = ptr::null_mut();
        let run = || -> Result<String, ChromqStatus> {
            let mu = read_type(&p.inner, mu)?;
            let basis: Basis = read_str(basis)?.parse().map_err(from_error)?;
            let report = coeff_in_basis(&p.inner, &mu, basis).map_err(from_error)?;
            Ok(serde_json::to_string(&report).expect("serialisable"))
        };
        match run() {
            Ok(json) => {
                *out = CString::new(json).expect("JSON has no nul bytes").into_raw();
                ChromqStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Numbers of heaps and flip classes of type `mu` (null for all ones).
///
/// # Safety
/// `p` must be a live poset handle, `mu` null or a valid string, and both
/// out-pointers valid.
#[no_mangle]
pub unsafe extern "C" fn chromq_classes_count(
    p: *const ChromqPoset,
    mu: *const c_char,
    heaps: *mut usize,
    classes: *mut usize,
) -> ChromqStatus {
    guard(|| {
        let (Some(p), false, false) = (p.as_ref(), heaps.is_null(), classes.is_null()) else {
            return fail(ChromqStatus::NullPointer, "null argument");
        };
        let mu = match read_type(&p.inner, mu) {
            Ok(mu) => mu,
            Err(s) => return s,
        };
        match enumerate_classes(&p.inner, &mu) {
            Ok(cs) => {
                *heaps = cs.iter().map(|c| c.members.len()).sum();
                *classes = cs.len();
                ChromqStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chromq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn chromq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
