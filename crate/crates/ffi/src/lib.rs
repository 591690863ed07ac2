//! C ABI for the classifier: opaque handles, integer status and error
//! codes, and caller-freed strings. The matching header lives at
//! `include/tournalink.h` and is maintained by hand; `tests/abi.rs` keeps
//! the two in sync.
//!
//! Conventions: functions return `TL_OK` (0) on success and a negative
//! `TL_ERR_*` code otherwise; classification statuses are non-negative
//! `TL_STATUS_*` values written through out-pointers; every `char*` returned
//! or written by this library is NUL-terminated, allocated by Rust, and must
//! be released with `tl_string_free`. A classifier handle is not thread-safe;
//! use one handle per thread or add external locking.

use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use tournalink::cg::{certify_tournament8, CertificationOutcome};
use tournalink::digraph::{Digraph, Tournament};
use tournalink::output::OutputRecord;
use tournalink::rules::{Classifier, ClassifyError, Status};
use tournalink::scoreseq::{landau_check, ScoreSequence};

pub const TL_OK: c_int = 0;
pub const TL_ERR_NULL: c_int = -1;
pub const TL_ERR_UTF8: c_int = -2;
pub const TL_ERR_PARSE: c_int = -3;
pub const TL_ERR_INVALID: c_int = -4;
pub const TL_ERR_LENGTH_CAP: c_int = -5;
pub const TL_ERR_CONFLICT: c_int = -6;
pub const TL_ERR_BAD_INPUT: c_int = -7;

pub const TL_STATUS_LINKLESS: c_int = 0;
pub const TL_STATUS_IL_REPRESENTATIVE: c_int = 1;
pub const TL_STATUS_UNKNOWN: c_int = 2;

/// Opaque classifier handle.
pub struct TlClassifier {
    inner: Classifier,
}

fn status_code(status: Status) -> c_int {
    match status {
        Status::Linkless => TL_STATUS_LINKLESS,
        Status::HasIlRep => TL_STATUS_IL_REPRESENTATIVE,
        Status::Unknown => TL_STATUS_UNKNOWN,
    }
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, c_int> {
    if ptr.is_null() {
        return Err(TL_ERR_NULL);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| TL_ERR_UTF8)
}

fn parse_sequence(text: &str, normalize: bool) -> Result<ScoreSequence, c_int> {
    use tournalink::scoreseq::ParseSequenceError;
    ScoreSequence::parse(text, normalize).map_err(|e| match e {
        ParseSequenceError::Invalid(_) => TL_ERR_INVALID,
        ParseSequenceError::Unsorted => TL_ERR_INVALID,
        _ => TL_ERR_PARSE,
    })
}

/// Create a classifier with the given length cap (pass 0 for the default).
#[no_mangle]
pub extern "C" fn tl_classifier_new(max_n: u32) -> *mut TlClassifier {
    let max_n = if max_n == 0 {
        tournalink::scoreseq::DEFAULT_MAX_N
    } else {
        max_n as usize
    };
    Box::into_raw(Box::new(TlClassifier {
        inner: Classifier::new(max_n),
    }))
}

/// # Safety
/// `handle` must be null or a pointer from `tl_classifier_new` that has not
/// been freed.
#[no_mangle]
pub unsafe extern "C" fn tl_classifier_free(handle: *mut TlClassifier) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Classify a sequence given as text ("1,2,2,3" or "(1, 2, 2, 3)"); writes
/// one of the TL_STATUS_* values through `status_out`.
///
/// # Safety
/// `handle` must be a live classifier, `sequence` a NUL-terminated string,
/// and `status_out` either null or writable.
#[no_mangle]
pub unsafe extern "C" fn tl_classify(
    handle: *mut TlClassifier,
    sequence: *const c_char,
    normalize: c_int,
    status_out: *mut c_int,
) -> c_int {
    if handle.is_null() {
        return TL_ERR_NULL;
    }
    let text = match read_str(sequence) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let seq = match parse_sequence(text, normalize != 0) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let classifier = &mut (*handle).inner;
    match classifier.classify(&seq) {
        Ok(verdict) => {
            if !status_out.is_null() {
                *status_out = status_code(verdict.status);
            }
            TL_OK
        }
        Err(ClassifyError::LengthCap { .. }) => TL_ERR_LENGTH_CAP,
        Err(_) => TL_ERR_CONFLICT,
    }
}

/// Classify and return the full record (sequence, status, trace) as a JSON
/// string, or null on error. Free with `tl_string_free`.
///
/// # Safety
/// As for `tl_classify`.
#[no_mangle]
pub unsafe extern "C" fn tl_classify_json(
    handle: *mut TlClassifier,
    sequence: *const c_char,
    normalize: c_int,
) -> *mut c_char {
    if handle.is_null() {
        return ptr::null_mut();
    }
    let Ok(text) = read_str(sequence) else {
        return ptr::null_mut();
    };
    let Ok(seq) = parse_sequence(text, normalize != 0) else {
        return ptr::null_mut();
    };
    let classifier = &mut (*handle).inner;
    match classifier.classify(&seq) {
        Ok(verdict) => {
            let record = OutputRecord::new(&seq, &verdict);
            to_c_string(serde_json::to_string(&record).expect("record serializes"))
        }
        Err(_) => ptr::null_mut(),
    }
}

/// Check raw values against the score-sequence conditions. Returns TL_OK
/// when valid; returns 1 and (optionally) a violation message otherwise.
///
/// # Safety
/// `values` must point to `len` readable u32 values; `message_out` must be
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn tl_landau_check(
    values: *const u32,
    len: usize,
    message_out: *mut *mut c_char,
) -> c_int {
    if values.is_null() && len > 0 {
        return TL_ERR_NULL;
    }
    let slice = if len == 0 {
        &[][..]
    } else {
        std::slice::from_raw_parts(values, len)
    };
    match landau_check(slice) {
        Ok(()) => TL_OK,
        Err(violation) => {
            if !message_out.is_null() {
                *message_out = to_c_string(violation.to_string());
            }
            1
        }
    }
}

/// Classification counts for length n, written as
/// `counts_out = {linkless, il, unknown}`.
///
/// # Safety
/// `handle` must be a live classifier and `counts_out` must point to three
/// writable u64 slots.
#[no_mangle]
pub unsafe extern "C" fn tl_table_counts(
    handle: *mut TlClassifier,
    n: u32,
    counts_out: *mut u64,
) -> c_int {
    if handle.is_null() || counts_out.is_null() {
        return TL_ERR_NULL;
    }
    let classifier = &mut (*handle).inner;
    match classifier.classify_all(n as usize) {
        Ok(table) => {
            let counts = table.counts();
            *counts_out = counts.linkless as u64;
            *counts_out.add(1) = counts.il as u64;
            *counts_out.add(2) = counts.unknown as u64;
            TL_OK
        }
        Err(ClassifyError::Enumerate(_)) | Err(ClassifyError::LengthCap { .. }) => {
            TL_ERR_LENGTH_CAP
        }
        Err(_) => TL_ERR_CONFLICT,
    }
}

/// Realize a sequence as a tournament and return its edge list ("u v" per
/// line) as a string, or null on error. Free with `tl_string_free`.
///
/// # Safety
/// `sequence` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn tl_realize_edge_list(
    sequence: *const c_char,
    normalize: c_int,
) -> *mut c_char {
    let Ok(text) = read_str(sequence) else {
        return ptr::null_mut();
    };
    let Ok(seq) = parse_sequence(text, normalize != 0) else {
        return ptr::null_mut();
    };
    let t = Tournament::realize(&seq);
    to_c_string(t.digraph().to_edge_list())
}

/// Certify an 8-vertex tournament given as edge-list text. Returns TL_OK
/// with a report through `report_out` when certified, 1 when inconclusive,
/// or a negative error for bad input. Free the report with
/// `tl_string_free`.
///
/// # Safety
/// `edge_list` must be a NUL-terminated string; `report_out` must be null
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn tl_certify_edge_list(
    edge_list: *const c_char,
    report_out: *mut *mut c_char,
) -> c_int {
    let text = match read_str(edge_list) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let Ok(graph) = Digraph::parse_edge_list(text) else {
        return TL_ERR_PARSE;
    };
    let Ok(tournament) = Tournament::from_digraph(graph) else {
        return TL_ERR_BAD_INPUT;
    };
    if tournament.n() != 8 {
        return TL_ERR_BAD_INPUT;
    }
    match certify_tournament8(&tournament) {
        Some(report) => {
            if !report_out.is_null() {
                let mut text = String::new();
                for (i, step) in report.steps.iter().enumerate() {
                    text.push_str(&format!(
                        "step {}: contract arc {} -> {} (merged vertex {})\n",
                        i + 1,
                        step.arc.0,
                        step.arc.1,
                        step.merged
                    ));
                }
                match &report.outcome {
                    CertificationOutcome::SevenVertex(cert) => {
                        text.push_str(&format!(
                            "certified: 7-vertex placement with labels {}\n",
                            cert.labeling
                        ));
                    }
                    CertificationOutcome::SixVertex(evidence) => {
                        text.push_str(&format!("certified: 6-vertex reduction, {evidence}\n"));
                    }
                }
                *report_out = to_c_string(text);
            }
            TL_OK
        }
        None => 1,
    }
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer previously returned through this ABI and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn tl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
