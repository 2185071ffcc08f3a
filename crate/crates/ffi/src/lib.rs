//! C ABI over `linesurf`.
//!
//! Every entry point returns an [`LsStatus`]; results come back through out
//! pointers. On failure a message is available from
//! [`ls_last_error_message`] until the next call on the same thread.
//! Integers cross the boundary as `int64_t`; results that do not fit are
//! reported as `LS_STATUS_OUT_OF_RANGE`. Panics never unwind into C.
//!
//! Handles returned by `ls_classify` / `ls_audit` are owned by the caller
//! and released with the matching `*_free`. Strings returned by `*_json`
//! functions are released with [`ls_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use linesurf::audit::{audit_case, AuditCase, AuditTranscript};
use linesurf::classifier::{classify, ComponentStatus, FamilyReport};
use linesurf::cubic::cubic_verdict;
use linesurf::maxgenus::{max_genus, MaxGenusAnswer};
use linesurf::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    OutOfRange = 3,
    UnknownCase = 4,
    NotAvailable = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsComponentStatus {
    Undetermined = 0,
    UniqueMaximalFamily = 1,
    IrreducibleComponent = 2,
    ConjecturedNonReduced = 3,
    GenericallySmoothComponent = 4,
    NonReducedComponent = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsGenusKind {
    Exact = 0,
    Conjectural = 1,
    OutOfRange = 2,
}

/// Opaque classification result.
pub struct LsReport(FamilyReport);

/// Opaque audit transcript.
pub struct LsTranscript(AuditTranscript);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(LsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::UnknownFixture(_) => LsStatus::UnknownCase,
            _ => LsStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LsStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LsStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LsStatus::Internal
        }
    }
}

fn narrow(v: i128, what: &str) -> Result<i64, Failure> {
    i64::try_from(v).map_err(|_| {
        Failure(
            LsStatus::OutOfRange,
            format!("{what} = {v} does not fit in int64"),
        )
    })
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure(LsStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn into_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(LsStatus::Internal, "string contains NUL".into()))
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure(LsStatus::Internal, e.to_string()))
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next `ls_*` call on the same thread.
#[no_mangle]
pub extern "C" fn ls_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ls_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Classify `a·f1 + b·f2` on a degree-`s` surface.
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ls_classify(s: i64, a: i64, b: i64, out: *mut *mut LsReport) -> LsStatus {
    guard(|| {
        non_null(out, "out")?;
        let report = classify(s.into(), a.into(), b.into())?;
        // SAFETY: checked non-null; caller guarantees validity
        unsafe { *out = Box::into_raw(Box::new(LsReport(report))) };
        Ok(())
    })
}

/// `report` must be NULL or a handle from [`ls_classify`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_report_free(report: *mut LsReport) {
    if !report.is_null() {
        // SAFETY: handle came from Box::into_raw in ls_classify
        drop(unsafe { Box::from_raw(report) });
    }
}

unsafe fn report_field(
    report: *const LsReport,
    out: *mut i64,
    what: &str,
    field: impl FnOnce(&FamilyReport) -> i128,
) -> LsStatus {
    guard(|| {
        non_null(report, "report")?;
        non_null(out, "out")?;
        // SAFETY: both pointers checked non-null; caller guarantees validity
        let r = unsafe { &(*report).0 };
        let v = narrow(field(r), what)?;
        unsafe { *out = v };
        Ok(())
    })
}

/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ls_report_degree(report: *const LsReport, out: *mut i64) -> LsStatus {
    unsafe { report_field(report, out, "d", |r| r.d) }
}

#[no_mangle]
pub unsafe extern "C" fn ls_report_genus(report: *const LsReport, out: *mut i64) -> LsStatus {
    unsafe { report_field(report, out, "g", |r| r.g) }
}

#[no_mangle]
pub unsafe extern "C" fn ls_report_dim_w(report: *const LsReport, out: *mut i64) -> LsStatus {
    unsafe { report_field(report, out, "dim_w", |r| r.dim_w) }
}

#[no_mangle]
pub unsafe extern "C" fn ls_report_t(report: *const LsReport, out: *mut i64) -> LsStatus {
    unsafe { report_field(report, out, "t", |r| r.t) }
}

/// `h¹(I_C(s))`; `LS_STATUS_NOT_AVAILABLE` when it is not known.
#[no_mangle]
pub unsafe extern "C" fn ls_report_h1_ideal_s(report: *const LsReport, out: *mut i64) -> LsStatus {
    guard(|| {
        non_null(report, "report")?;
        non_null(out, "out")?;
        // SAFETY: both pointers checked non-null
        let r = unsafe { &(*report).0 };
        let v = r.h1_ideal_s.value().ok_or_else(|| {
            Failure(
                LsStatus::NotAvailable,
                format!("h1(I_C(s)) is {}", r.h1_ideal_s),
            )
        })?;
        let v = narrow(v, "h1")?;
        unsafe { *out = v };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ls_report_status(
    report: *const LsReport,
    out: *mut LsComponentStatus,
) -> LsStatus {
    guard(|| {
        non_null(report, "report")?;
        non_null(out, "out")?;
        // SAFETY: both pointers checked non-null
        let status = match unsafe { &(*report).0 }.status {
            ComponentStatus::Undetermined => LsComponentStatus::Undetermined,
            ComponentStatus::UniqueMaximalFamily => LsComponentStatus::UniqueMaximalFamily,
            ComponentStatus::IrreducibleComponent => LsComponentStatus::IrreducibleComponent,
            ComponentStatus::ConjecturedNonReduced => LsComponentStatus::ConjecturedNonReduced,
            ComponentStatus::GenericallySmoothComponent => {
                LsComponentStatus::GenericallySmoothComponent
            }
            ComponentStatus::NonReducedComponent => LsComponentStatus::NonReducedComponent,
        };
        unsafe { *out = status };
        Ok(())
    })
}

/// The report as compact JSON; free with [`ls_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ls_report_to_json(
    report: *const LsReport,
    out: *mut *mut c_char,
) -> LsStatus {
    guard(|| {
        non_null(report, "report")?;
        non_null(out, "out")?;
        // SAFETY: both pointers checked non-null
        let json = to_json(unsafe { &(*report).0 })?;
        unsafe { *out = into_c_string(json)? };
        Ok(())
    })
}

/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Maximum genus `G(d, s)`. `out_value` is left untouched when the kind is
/// `LS_GENUS_KIND_OUT_OF_RANGE`.
/// Both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_max_genus(
    d: i64,
    s: i64,
    out_value: *mut i64,
    out_kind: *mut LsGenusKind,
) -> LsStatus {
    guard(|| {
        non_null(out_value, "out_value")?;
        non_null(out_kind, "out_kind")?;
        let answer = max_genus(d.into(), s.into())?;
        let kind = match answer {
            MaxGenusAnswer::Exact { .. } => LsGenusKind::Exact,
            MaxGenusAnswer::Conjectural { .. } => LsGenusKind::Conjectural,
            MaxGenusAnswer::OutOfRange { .. } => LsGenusKind::OutOfRange,
        };
        if let Some(v) = answer.value() {
            let v = narrow(v, "G(d,s)")?;
            unsafe { *out_value = v };
        }
        unsafe { *out_kind = kind };
        Ok(())
    })
}

/// Verdict for `(d, g)` on a smooth cubic, as compact JSON.
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_cubic_verdict_json(
    d: i64,
    g: i64,
    search_tuples: bool,
    out: *mut *mut c_char,
) -> LsStatus {
    guard(|| {
        non_null(out, "out")?;
        let json = to_json(&cubic_verdict(d.into(), g.into(), search_tuples))?;
        unsafe { *out = into_c_string(json)? };
        Ok(())
    })
}

/// Replay an audit case by id (`"Q12_8"`, `"Q7_5"`, `"Q8_6_s5"`,
/// `"Q10_8_s6"`, `"CUBIC_57_315"`).
/// `case_id` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ls_audit(case_id: *const c_char, out: *mut *mut LsTranscript) -> LsStatus {
    guard(|| {
        non_null(case_id, "case_id")?;
        non_null(out, "out")?;
        // SAFETY: checked non-null; caller guarantees NUL termination
        let id = unsafe { CStr::from_ptr(case_id) }
            .to_str()
            .map_err(|_| Failure(LsStatus::InvalidInput, "case id is not UTF-8".into()))?;
        let case: AuditCase = id.parse()?;
        let transcript = audit_case(case)?;
        unsafe { *out = Box::into_raw(Box::new(LsTranscript(transcript))) };
        Ok(())
    })
}

/// `transcript` must be NULL or a handle from [`ls_audit`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_transcript_free(transcript: *mut LsTranscript) {
    if !transcript.is_null() {
        // SAFETY: handle came from Box::into_raw in ls_audit
        drop(unsafe { Box::from_raw(transcript) });
    }
}

/// Whether every unflagged row matches and every closing inequality holds.
/// `transcript` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ls_transcript_is_clean(
    transcript: *const LsTranscript,
    out: *mut bool,
) -> LsStatus {
    guard(|| {
        non_null(transcript, "transcript")?;
        non_null(out, "out")?;
        // SAFETY: both pointers checked non-null
        let clean = unsafe { &(*transcript).0 }.is_clean();
        unsafe { *out = clean };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ls_transcript_row_count(
    transcript: *const LsTranscript,
    out: *mut usize,
) -> LsStatus {
    guard(|| {
        non_null(transcript, "transcript")?;
        non_null(out, "out")?;
        // SAFETY: both pointers checked non-null
        let n = unsafe { &(*transcript).0 }.rows.len();
        unsafe { *out = n };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ls_transcript_to_json(
    transcript: *const LsTranscript,
    out: *mut *mut c_char,
) -> LsStatus {
    guard(|| {
        non_null(transcript, "transcript")?;
        non_null(out, "out")?;
        // SAFETY: both pointers checked non-null
        let json = to_json(unsafe { &(*transcript).0 })?;
        unsafe { *out = into_c_string(json)? };
        Ok(())
    })
}
