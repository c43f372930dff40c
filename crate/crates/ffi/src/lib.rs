//! C ABI for pack2dom.
//!
//! Graphs cross the boundary as opaque `P2dGraph` handles owned by the
//! caller and released with `p2d_graph_free`. Every fallible function
//! returns a `P2dStatus`; on failure `p2d_last_error` describes the most
//! recent error on the calling thread. Strings returned through `char **`
//! out-parameters must be released with `p2d_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pack2dom::family::RejectReason;
use pack2dom::{Graph, GraphError, Recognition};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum P2dStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    BoundExceeded = 4,
    InvalidParams = 5,
    Io = 6,
    Panic = 7,
}

/// Why a graph is not a member of the T(s, t) family.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum P2dReject {
    None = 0,
    NotATree = 1,
    NoCenter = 2,
    BadLeg = 3,
    TooFewTwoLegs = 4,
    NoLeafLeg = 5,
}

/// Outcome of `p2d_recognize`. When `member` is false, `s`, `t` and `r` are 0.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P2dRecognition {
    pub member: bool,
    pub s: usize,
    pub t: usize,
    pub r: usize,
    pub reason: P2dReject,
}

/// Opaque graph handle.
pub struct P2dGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &GraphError) -> P2dStatus {
    if err.is_bound() {
        P2dStatus::BoundExceeded
    } else if err.is_parse() {
        P2dStatus::Parse
    } else {
        match err {
            GraphError::Io { .. } => P2dStatus::Io,
            _ => P2dStatus::InvalidParams,
        }
    }
}

/// Runs `body`, translating errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), (P2dStatus, String)>) -> P2dStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => P2dStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            P2dStatus::Panic
        }
    }
}

fn lift(err: GraphError) -> (P2dStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> (P2dStatus, String) {
    (P2dStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const P2dGraph) -> Result<&'a Graph, (P2dStatus, String)> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

unsafe fn put_graph(out: *mut *mut P2dGraph, graph: Graph) -> Result<(), (P2dStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(P2dGraph { graph }));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (P2dStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| (P2dStatus::Panic, "string contains NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_usize(out: *mut usize, v: usize) -> Result<(), (P2dStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = v;
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn p2d_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p2d_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut P2dGraph,
) -> P2dStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (P2dStatus::InvalidUtf8, "input is not UTF-8".to_string()))?;
        let g = pack2dom::parse_graph6(s).map_err(lift)?;
        put_graph(out, g)
    })
}

/// Builds a graph on `n` vertices from `m` pairs stored flat in `edges`
/// (`edges[2i]`, `edges[2i + 1]`). Duplicate edges collapse.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (it may be NULL when `m` is 0);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p2d_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut P2dGraph,
) -> P2dStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let (g, _) = Graph::from_edge_list(n, &pairs).map_err(lift)?;
        put_graph(out, g)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn p2d_graph_free(g: *mut P2dGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn p2d_graph_order(g: *const P2dGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.order())
}

/// Number of edges; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn p2d_graph_size(g: *const P2dGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.size())
}

/// Domination number.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p2d_gamma(g: *const P2dGraph, out: *mut usize) -> P2dStatus {
    guard(|| {
        let d = pack2dom::gamma_exact(graph_ref(g)?).map_err(lift)?;
        put_usize(out, d.len())
    })
}

/// Vertex cover number.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p2d_beta(g: *const P2dGraph, out: *mut usize) -> P2dStatus {
    guard(|| {
        let c = pack2dom::beta_exact(graph_ref(g)?).map_err(lift)?;
        put_usize(out, c.len())
    })
}

/// Independence number.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p2d_alpha(g: *const P2dGraph, out: *mut usize) -> P2dStatus {
    guard(|| {
        let i = pack2dom::alpha_exact(graph_ref(g)?).map_err(lift)?;
        put_usize(out, i.len())
    })
}

/// Maximum edge 2-packing size.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p2d_nu2(g: *const P2dGraph, out: *mut usize) -> P2dStatus {
    guard(|| put_usize(out, pack2dom::packing::nu2(graph_ref(g)?)))
}

/// Builds T(s, t) with the vertex layout documented for `generate_family`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p2d_generate_family(
    s: usize,
    t: usize,
    out: *mut *mut P2dGraph,
) -> P2dStatus {
    guard(|| {
        let (g, _) = pack2dom::generate_family(s, t).map_err(lift)?;
        put_graph(out, g)
    })
}

/// Decides membership in the T(s, t) family.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p2d_recognize(g: *const P2dGraph, out: *mut P2dRecognition) -> P2dStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = match pack2dom::recognize(g) {
            Recognition::Member(p, _) => P2dRecognition {
                member: true,
                s: p.s,
                t: p.t,
                r: p.r,
                reason: P2dReject::None,
            },
            Recognition::Rejected(reason) => P2dRecognition {
                member: false,
                s: 0,
                t: 0,
                r: 0,
                reason: match reason {
                    RejectReason::NotATree => P2dReject::NotATree,
                    RejectReason::NoCenter => P2dReject::NoCenter,
                    RejectReason::BadLeg => P2dReject::BadLeg,
                    RejectReason::TooFew2Legs => P2dReject::TooFewTwoLegs,
                    RejectReason::NoLeafLeg => P2dReject::NoLeafLeg,
                },
            },
        };
        Ok(())
    })
}

/// graph6 encoding of the graph as labeled.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p2d_graph_to_graph6(
    g: *const P2dGraph,
    out: *mut *mut c_char,
) -> P2dStatus {
    guard(|| {
        let s = pack2dom::to_graph6(graph_ref(g)?).map_err(lift)?;
        put_string(out, s)
    })
}

/// Canonical graph6 string; equal for exactly the isomorphic graphs.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p2d_canonical_form(
    g: *const P2dGraph,
    out: *mut *mut c_char,
) -> P2dStatus {
    guard(|| {
        let cf = pack2dom::canonical_form(graph_ref(g)?).map_err(lift)?;
        put_string(out, cf.into_string())
    })
}

/// Surveys every connected graph on `n` vertices and returns the summary
/// as JSON. `workers` of 0 selects the default thread count.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p2d_survey_builtin(
    n: usize,
    workers: usize,
    out: *mut *mut c_char,
) -> P2dStatus {
    guard(|| {
        let stream = pack2dom::enumerate_connected(n).map_err(lift)?;
        let options = pack2dom::SurveyOptions {
            workers: (workers > 0).then_some(workers),
            ..Default::default()
        };
        let outcome = pack2dom::run_survey(stream, &options).map_err(lift)?;
        let json =
            serde_json::to_string(&outcome.summary).map_err(|e| (P2dStatus::Io, e.to_string()))?;
        put_string(out, json)
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn p2d_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
