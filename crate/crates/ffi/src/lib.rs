//! C ABI for the evenhole library.
//!
//! Graphs live behind the opaque `EhGraph` handle. Every fallible call
//! returns an `EhStatus`; on failure the message is available from
//! `eh_last_error` until the next call on the same thread. Strings handed
//! out by the library must be released with `eh_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use evenhole::color::{color_with_report, ColorOutcome};
use evenhole::cwd::{eval, expr_for_class_graph, CwdOutcome};
use evenhole::io::{parse_dimacs, parse_edge_json};
use evenhole::recognize::recognize;
use evenhole::{Error, Graph};
use serde_json::json;

/// Opaque graph handle.
pub struct EhGraph {
    graph: Graph,
}

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidGraph = 2,
    Parse = 3,
    SizeLimit = 4,
    /// The graph is outside the class; JSON outputs are still written.
    NotInClass = 5,
    Internal = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_for(e: &Error) -> EhStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => EhStatus::Parse,
        Error::SizeLimit { .. } => EhStatus::SizeLimit,
        Error::NullGraph | Error::InvalidEdge { .. } | Error::VertexOutOfRange { .. } => EhStatus::InvalidGraph,
        _ => EhStatus::Internal,
    }
}

/// Runs `f`, recording errors and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<EhStatus, (EhStatus, String)>) -> EhStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            EhStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (EhStatus, String) {
    (status_for(&e), e.to_string())
}

fn null() -> (EhStatus, String) {
    (EhStatus::NullPointer, "null pointer argument".into())
}

unsafe fn graph_ref<'a>(g: *const EhGraph) -> Result<&'a Graph, (EhStatus, String)> {
    unsafe { g.as_ref() }.map(|h| &h.graph).ok_or_else(null)
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, (EhStatus, String)> {
    if text.is_null() {
        return Err(null());
    }
    unsafe { CStr::from_ptr(text) }
        .to_str()
        .map_err(|e| (EhStatus::Parse, format!("input is not UTF-8: {e}")))
}

unsafe fn put_graph(out: *mut *mut EhGraph, graph: Graph) {
    unsafe { *out = Box::into_raw(Box::new(EhGraph { graph })) };
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (EhStatus, String)> {
    let c = CString::new(s).map_err(|e| (EhStatus::Internal, e.to_string()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries, 0-based).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eh_graph_new(n: usize, edges: *const usize, edge_count: usize, out: *mut *mut EhGraph) -> EhStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return Err(null());
        }
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else {
            unsafe { std::slice::from_raw_parts(edges, 2 * edge_count) }
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let g = Graph::new(n, &pairs).map_err(lib_err)?;
        unsafe { put_graph(out, g) };
        Ok(EhStatus::Ok)
    })
}

/// Parses DIMACS `.col` text.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eh_graph_from_dimacs(text: *const c_char, out: *mut *mut EhGraph) -> EhStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let g = parse_dimacs(unsafe { read_str(text) }?).map_err(lib_err)?;
        unsafe { put_graph(out, g) };
        Ok(EhStatus::Ok)
    })
}

/// Parses the edge-list JSON format `{"n": .., "edges": [[u, v], ..]}`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eh_graph_from_edge_json(text: *const c_char, out: *mut *mut EhGraph) -> EhStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let g = parse_edge_json(unsafe { read_str(text) }?).map_err(lib_err)?;
        unsafe { put_graph(out, g) };
        Ok(EhStatus::Ok)
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from one of the constructors and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn eh_graph_free(g: *mut EhGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn eh_graph_vertex_count(g: *const EhGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |h| h.graph.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn eh_graph_edge_count(g: *const EhGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |h| h.graph.edge_count())
}

/// Writes whether the graph is in the class to `in_class`.
///
/// # Safety
/// `g` must be a live handle and `in_class` writable.
#[no_mangle]
pub unsafe extern "C" fn eh_recognize(g: *const EhGraph, in_class: *mut bool) -> EhStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        if in_class.is_null() {
            return Err(null());
        }
        unsafe { *in_class = recognize(g).verdict.in_class() };
        Ok(EhStatus::Ok)
    })
}

/// Full recognition report as JSON, including the partition or the
/// rejection witness.
///
/// # Safety
/// `g` must be a live handle and `out` writable. Free the result with
/// `eh_string_free`.
#[no_mangle]
pub unsafe extern "C" fn eh_recognize_json(g: *const EhGraph, out: *mut *mut c_char) -> EhStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        if out.is_null() {
            return Err(null());
        }
        let report = recognize(g);
        let text = serde_json::to_string(&report).map_err(|e| lib_err(e.into()))?;
        unsafe { put_string(out, text) }?;
        Ok(EhStatus::Ok)
    })
}

/// Optimal coloring. `colors` receives one color per vertex and must hold
/// `eh_graph_vertex_count(g)` entries; `num_colors` receives the count.
/// Returns `NotInClass` without touching the outputs when refused.
///
/// # Safety
/// `g` must be a live handle; `colors` and `num_colors` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eh_color(g: *const EhGraph, colors: *mut usize, num_colors: *mut usize) -> EhStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        if colors.is_null() || num_colors.is_null() {
            return Err(null());
        }
        let report = recognize(g);
        match color_with_report(g, &report).map_err(lib_err)? {
            ColorOutcome::Colored(c) => {
                unsafe {
                    std::slice::from_raw_parts_mut(colors, g.n()).copy_from_slice(&c.assignment);
                    *num_colors = c.num_colors;
                }
                Ok(EhStatus::Ok)
            }
            ColorOutcome::NotInClass(rej) => Err((EhStatus::NotInClass, rej.reason)),
        }
    })
}

/// Coloring or refusal as JSON.
///
/// # Safety
/// `g` must be a live handle and `out` writable. Free the result with
/// `eh_string_free`.
#[no_mangle]
pub unsafe extern "C" fn eh_color_json(g: *const EhGraph, out: *mut *mut c_char) -> EhStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        if out.is_null() {
            return Err(null());
        }
        let report = recognize(g);
        let (value, status) = match color_with_report(g, &report).map_err(lib_err)? {
            ColorOutcome::Colored(c) => (json!({ "num_colors": c.num_colors, "coloring": c.assignment }), EhStatus::Ok),
            ColorOutcome::NotInClass(rej) => (json!({ "refused": rej }), EhStatus::NotInClass),
        };
        unsafe { put_string(out, value.to_string()) }?;
        Ok(status)
    })
}

/// Clique-width expression or refusal as JSON.
///
/// # Safety
/// `g` must be a live handle and `out` writable. Free the result with
/// `eh_string_free`.
#[no_mangle]
pub unsafe extern "C" fn eh_cwd_json(g: *const EhGraph, out: *mut *mut c_char) -> EhStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        if out.is_null() {
            return Err(null());
        }
        let (value, status) = match expr_for_class_graph(g).map_err(lib_err)? {
            CwdOutcome::Expression(e) => {
                let lg = eval(&e).map_err(lib_err)?;
                let v = json!({
                    "width": e.width(),
                    "expression": e.to_string(),
                    "round_trip": lg.ids_are_positional() && lg.graph == *g,
                });
                (v, EhStatus::Ok)
            }
            CwdOutcome::Refused(r) => (json!({ "refused": r }), EhStatus::NotInClass),
        };
        unsafe { put_string(out, value.to_string()) }?;
        Ok(status)
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn eh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn eh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn eh_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
