//! C interface to `sextic-groups`: opaque presentation handles and invariant
//! queries. Every fallible function returns a [`SexticStatus`]; the message of
//! the last failure on the calling thread is available from
//! [`sextic_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use sextic_groups::invariants::{abelianization, battery_group, hom_count, todd_coxeter};
use sextic_groups::presentation::Presentation;
use sextic_groups::registry::{get_case, get_group, group_presentation, pi1_presentation};
use sextic_groups::Error;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SexticStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    UnknownId = 4,
    CosetOverflow = 5,
    DomainError = 6,
    InternalError = 7,
}

/// Opaque handle to a finitely presented group.
pub struct SexticPresentation {
    inner: Presentation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: SexticStatus, msg: &str) -> SexticStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> SexticStatus {
    let s = match e {
        Error::Parse(_) | Error::InvalidGenerator(_) | Error::UnknownGenerator { .. } => {
            SexticStatus::ParseError
        }
        Error::UnknownId { .. } => SexticStatus::UnknownId,
        Error::CosetOverflow { .. } => SexticStatus::CosetOverflow,
        Error::Domain(_) | Error::Precondition(_) | Error::SectionIsComponent => {
            SexticStatus::DomainError
        }
        Error::InvalidTable(_) | Error::Io(_) => SexticStatus::InternalError,
    };
    fail(s, &e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, SexticStatus> {
    if s.is_null() {
        return Err(fail(SexticStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(SexticStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

fn guarded(f: impl FnOnce() -> SexticStatus) -> SexticStatus {
    std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(SexticStatus::InternalError, "internal panic"))
}

unsafe fn emit(out: *mut *mut SexticPresentation, p: Presentation) -> SexticStatus {
    *out = Box::into_raw(Box::new(SexticPresentation { inner: p }));
    SexticStatus::Ok
}

/// Parses a presentation in the line-oriented file format.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sextic_presentation_parse(
    text: *const c_char,
    out: *mut *mut SexticPresentation,
) -> SexticStatus {
    guarded(|| {
        if out.is_null() {
            return fail(SexticStatus::NullArgument, "null output pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Presentation::parse(text) {
            Ok(p) => emit(out, p),
            Err(e) => status_of(&e),
        }
    })
}

/// Loads `case:ID` (the printed fundamental group) or `group:ID`.
///
/// # Safety
/// `target` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sextic_presentation_load(
    target: *const c_char,
    out: *mut *mut SexticPresentation,
) -> SexticStatus {
    guarded(|| {
        if out.is_null() {
            return fail(SexticStatus::NullArgument, "null output pointer");
        }
        let target = match read_str(target) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let loaded = if let Some(id) = target.strip_prefix("case:") {
            get_case(id).and_then(pi1_presentation)
        } else if let Some(id) = target.strip_prefix("group:") {
            get_group(id).and_then(group_presentation)
        } else {
            return fail(SexticStatus::ParseError, "expected `case:ID` or `group:ID`");
        };
        match loaded {
            Ok(p) => emit(out, p),
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sextic_presentation_free(p: *mut SexticPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of generators, 0 for null.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sextic_presentation_generator_count(
    p: *const SexticPresentation,
) -> usize {
    p.as_ref().map_or(0, |p| p.inner.generators().len())
}

/// Writes the abelianization, e.g. `Z + Z2`, as a new string to be released
/// with [`sextic_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sextic_abelianization(
    p: *const SexticPresentation,
    out: *mut *mut c_char,
) -> SexticStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return fail(SexticStatus::NullArgument, "null argument");
        };
        let s = abelianization(&p.inner).to_string();
        *out = CString::new(s).expect("no interior nul").into_raw();
        SexticStatus::Ok
    })
}

/// Group order by coset enumeration over the trivial subgroup.
/// Returns `CosetOverflow` when more than `limit` cosets are needed.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sextic_coset_order(
    p: *const SexticPresentation,
    limit: usize,
    out: *mut u64,
) -> SexticStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return fail(SexticStatus::NullArgument, "null argument");
        };
        match todd_coxeter(&p.inner, &[], limit) {
            Ok(n) => {
                *out = n as u64;
                SexticStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Number of homomorphisms into a battery group (`Z6`, `S3`, `D8`, `D10`,
/// `D12`, `A4`, `S4`).
///
/// # Safety
/// `p` must be a live handle, `group` a nul-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sextic_hom_count(
    p: *const SexticPresentation,
    group: *const c_char,
    out: *mut u64,
) -> SexticStatus {
    guarded(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return fail(SexticStatus::NullArgument, "null argument");
        };
        let name = match read_str(group) {
            Ok(n) => n,
            Err(s) => return s,
        };
        match battery_group(name) {
            Ok(g) => {
                *out = hom_count(&p.inner, &g);
                SexticStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sextic_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sextic_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
