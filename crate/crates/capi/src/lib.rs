//! C ABI over the exact domination solvers: opaque graph handles, status
//! codes, and JSON passing for structured results. The header is generated
//! into `include/trdom.h` at build time.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use trdom::error::Error;
use trdom::families;
use trdom::format;
use trdom::graph::Graph;
use trdom::solver::{self, Parameter};
use trdom::theorems;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrdomStatus {
    Ok = 0,
    NullArgument = 1,
    ParseError = 2,
    Infeasible = 3,
    SizeLimit = 4,
    InvalidArgument = 5,
    InternalPanic = 6,
}

/// Parameter selector mirroring the solver's six base parameters.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrdomParameter {
    Domination = 0,
    TotalDomination = 1,
    Roman2 = 2,
    TotalRoman = 3,
    TotalRoman2 = 4,
    DoubleDomination = 5,
}

impl TrdomParameter {
    fn to_kind(self) -> Parameter {
        match self {
            TrdomParameter::Domination => Parameter::Domination,
            TrdomParameter::TotalDomination => Parameter::TotalDomination,
            TrdomParameter::Roman2 => Parameter::Roman2,
            TrdomParameter::TotalRoman => Parameter::TotalRoman,
            TrdomParameter::TotalRoman2 => Parameter::TotalRoman2,
            TrdomParameter::DoubleDomination => Parameter::DoubleDomination,
        }
    }
}

/// Opaque graph handle.
pub struct TrdomGraph {
    inner: Graph,
}

/// Result of one exact solve.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct TrdomSolveResult {
    /// Exact optimal weight; meaningful only when `feasible` is true.
    pub value: u64,
    /// 1 when a feasible labeling exists.
    pub feasible: u8,
    /// Search nodes visited (deterministic).
    pub nodes: u64,
}

fn status_of(e: &Error) -> TrdomStatus {
    match e {
        Error::Infeasible => TrdomStatus::Infeasible,
        Error::SizeLimit { .. } => TrdomStatus::SizeLimit,
        Error::Parse(_) => TrdomStatus::ParseError,
        _ => TrdomStatus::InvalidArgument,
    }
}

fn guarded<F: FnOnce() -> TrdomStatus>(f: F) -> TrdomStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => TrdomStatus::InternalPanic,
    }
}

unsafe fn cstr_arg<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

/// Parses a graph from text in either supported format (edge list or
/// graph6, auto-detected) and stores a fresh handle in `out`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trdom_graph_parse(
    text: *const c_char,
    out: *mut *mut TrdomGraph,
) -> TrdomStatus {
    guarded(|| {
        let Some(text) = cstr_arg(text) else { return TrdomStatus::NullArgument };
        if out.is_null() {
            return TrdomStatus::NullArgument;
        }
        match format::parse_auto(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(TrdomGraph { inner: g }));
                TrdomStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Builds a named family member, e.g. "path:6", "hs:3", "frn:5,8".
///
/// # Safety
/// `spec` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trdom_graph_family(
    spec: *const c_char,
    out: *mut *mut TrdomGraph,
) -> TrdomStatus {
    guarded(|| {
        let Some(spec) = cstr_arg(spec) else { return TrdomStatus::NullArgument };
        if out.is_null() {
            return TrdomStatus::NullArgument;
        }
        match family_from_token(spec) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(TrdomGraph { inner: g }));
                TrdomStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

fn family_from_token(spec: &str) -> Result<Graph, Error> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let nums: Vec<usize> = args
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::Parse(format!("bad family parameters `{args}`")))?;
    use families::FamilySpec as F;
    let spec = match (name, nums.as_slice()) {
        ("path", [n]) => F::Path(*n),
        ("cycle", [n]) => F::Cycle(*n),
        ("complete", [n]) => F::Complete(*n),
        ("empty", [n]) => F::Empty(*n),
        ("star", [n]) => F::Star(*n),
        ("double-star", [x, y]) => F::DoubleStar(*x, *y),
        ("hs", [s]) => F::HubOfPath3(*s),
        ("rr", [r]) => F::HubOfPath4(*r),
        ("frn", [r, n]) => F::Realization { weight: *r, order: *n },
        _ => return Err(Error::Parse(format!("unknown family `{name}`"))),
    };
    families::build(&spec)
}

/// Frees a graph handle. Passing NULL is a no-op.
///
/// # Safety
/// `g` must be a pointer previously returned by this library, or NULL.
#[no_mangle]
pub unsafe extern "C" fn trdom_graph_free(g: *mut TrdomGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for NULL.
///
/// # Safety
/// `g` must be a valid handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn trdom_graph_order(g: *const TrdomGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    (*g).inner.order() as u64
}

/// Number of edges; 0 for NULL.
///
/// # Safety
/// `g` must be a valid handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn trdom_graph_size(g: *const TrdomGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    (*g).inner.size() as u64
}

/// Exact solve under the given vertex cap (0 picks the default).
///
/// # Safety
/// `g` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trdom_compute(
    g: *const TrdomGraph,
    parameter: TrdomParameter,
    limit: u64,
    out: *mut TrdomSolveResult,
) -> TrdomStatus {
    guarded(|| {
        if g.is_null() || out.is_null() {
            return TrdomStatus::NullArgument;
        }
        let limit = if limit == 0 {
            solver::BRANCH_AND_BOUND_LIMIT
        } else {
            limit as usize
        };
        match solver::exact_with_limit(&(*g).inner, parameter.to_kind(), limit) {
            Ok(r) => {
                *out = TrdomSolveResult {
                    value: r.value.unwrap_or(0) as u64,
                    feasible: u8::from(r.feasible),
                    nodes: r.nodes,
                };
                TrdomStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Writes the witness labels of an exact solve into `buf` (one byte per
/// vertex). `buf_len` must be at least the graph order.
///
/// # Safety
/// `g` must be a valid handle; `buf` must point to `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn trdom_compute_witness(
    g: *const TrdomGraph,
    parameter: TrdomParameter,
    limit: u64,
    buf: *mut u8,
    buf_len: u64,
) -> TrdomStatus {
    guarded(|| {
        if g.is_null() || buf.is_null() {
            return TrdomStatus::NullArgument;
        }
        let graph = &(*g).inner;
        if (buf_len as usize) < graph.order() {
            return TrdomStatus::InvalidArgument;
        }
        let limit = if limit == 0 {
            solver::BRANCH_AND_BOUND_LIMIT
        } else {
            limit as usize
        };
        match solver::exact_with_limit(graph, parameter.to_kind(), limit) {
            Ok(r) => match r.witness {
                Some(f) => {
                    ptr::copy_nonoverlapping(f.values().as_ptr(), buf, graph.order());
                    TrdomStatus::Ok
                }
                None => TrdomStatus::Infeasible,
            },
            Err(e) => status_of(&e),
        }
    })
}

/// Runs the full theorem suite and returns the verdicts as a JSON document
/// allocated by the library; free it with `trdom_string_free`.
///
/// # Safety
/// `g` must be a valid handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trdom_verify_all(
    g: *const TrdomGraph,
    out_json: *mut *mut c_char,
) -> TrdomStatus {
    guarded(|| {
        if g.is_null() || out_json.is_null() {
            return TrdomStatus::NullArgument;
        }
        match theorems::run_all(&(*g).inner) {
            Ok(verdicts) => {
                let summary = theorems::summarize(&verdicts);
                let doc = serde_json_string(&verdicts, summary);
                let c = CString::new(doc).expect("JSON has no interior NUL");
                *out_json = c.into_raw();
                TrdomStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

fn serde_json_string(
    verdicts: &[theorems::Verdict],
    summary: theorems::SuiteSummary,
) -> String {
    // Keep the dependency surface of the C crate minimal by reusing the
    // core crate's serde wiring through a tiny shim.
    trdom::report::verdicts_json(verdicts, summary)
}

/// Graph6 encoding of the graph; free with `trdom_string_free`.
///
/// # Safety
/// `g` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trdom_graph_to_graph6(
    g: *const TrdomGraph,
    out: *mut *mut c_char,
) -> TrdomStatus {
    guarded(|| {
        if g.is_null() || out.is_null() {
            return TrdomStatus::NullArgument;
        }
        let s = format::emit_graph6(&(*g).inner);
        *out = CString::new(s).expect("graph6 is ASCII").into_raw();
        TrdomStatus::Ok
    })
}

/// Frees a string allocated by this library. Passing NULL is a no-op.
///
/// # Safety
/// `s` must be a string previously returned by this library, or NULL.
#[no_mangle]
pub unsafe extern "C" fn trdom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
