//! C ABI over the indminor library.
//!
//! Graphs live behind the opaque [`IndminorGraph`] handle. Every fallible
//! call returns an [`IndminorStatus`]; on failure the message is available
//! from [`indminor_last_error_message`] on the same thread. Strings handed
//! out must be released with [`indminor_string_free`], graphs with
//! [`indminor_graph_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use indminor::cwx;
use indminor::dichotomy;
use indminor::graph::io::{from_graph6, to_graph6};
use indminor::iso;
use indminor::oracles;
use indminor::reductions;
use indminor::structure;
use indminor::{ColoredGraph, Error, Graph};

/// Opaque graph handle.
pub struct IndminorGraph {
    graph: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndminorStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    BudgetExhausted = 5,
    TooLarge = 6,
    /// The input is outside the class the routine assumes.
    NotInClass = 7,
    Expression = 8,
    /// A Rust panic was caught at the boundary.
    Internal = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndminorIsoAlgorithm {
    /// Cograph certificates when both graphs are P4-free, else the general engine.
    Auto = 0,
    Gem = 1,
    Cop32k1 = 2,
    General = 3,
    Oracle = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndminorTarget {
    RestrictedSplit = 0,
    Cobipartite = 1,
    K3uK1Free = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndminorCwKind {
    Cograph = 0,
    GemFree = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let clean = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

fn status_of(e: &Error) -> IndminorStatus {
    match e {
        Error::Parse(_) => IndminorStatus::Parse,
        Error::VertexOutOfRange { .. } | Error::SelfLoop(_) | Error::NotAnEdge(..) | Error::Precondition(_) => {
            IndminorStatus::InvalidArgument
        }
        Error::BudgetExhausted(_) => IndminorStatus::BudgetExhausted,
        Error::TooLarge { .. } => IndminorStatus::TooLarge,
        Error::NotP4Free | Error::ClassAssumptionViolated(_) | Error::StructureNotFound => IndminorStatus::NotInClass,
        Error::Expression(_) => IndminorStatus::Expression,
    }
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), (IndminorStatus, String)>) -> IndminorStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IndminorStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IndminorStatus::Internal
        }
    }
}

type Fail = (IndminorStatus, String);

fn lib(e: Error) -> Fail {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> Fail {
    (IndminorStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const IndminorGraph, what: &str) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null(what))
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (IndminorStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

fn boxed(graph: Graph) -> *mut IndminorGraph {
    Box::into_raw(Box::new(IndminorGraph { graph }))
}

/// Message of the last failed call on this thread; valid until the next
/// call on this thread. Never null.
#[no_mangle]
pub extern "C" fn indminor_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a graph6 string into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn indminor_graph_from_graph6(text: *const c_char, out: *mut *mut IndminorGraph) -> IndminorStatus {
    guard(|| {
        let s = str_arg(text, "text")?;
        let g = from_graph6(s.trim()).map_err(lib)?;
        put(out, boxed(g), "out")
    })
}

/// Builds a graph on `n` vertices from `m` edges given as `2m` endpoints.
///
/// # Safety
/// `endpoints` must point to `2 * m` values (or be null when `m` is 0).
#[no_mangle]
pub unsafe extern "C" fn indminor_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    m: usize,
    out: *mut *mut IndminorGraph,
) -> IndminorStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if endpoints.is_null() {
            return Err(null("endpoints"));
        } else {
            std::slice::from_raw_parts(endpoints, 2 * m)
        };
        let g = Graph::from_edges(n, flat.chunks_exact(2).map(|e| (e[0], e[1]))).map_err(lib)?;
        put(out, boxed(g), "out")
    })
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn indminor_graph_free(g: *mut IndminorGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn indminor_graph_vertex_count(g: *const IndminorGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.n())
}

/// Number of edges; 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn indminor_graph_edge_count(g: *const IndminorGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.m())
}

/// graph6 encoding; release with [`indminor_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn indminor_graph_to_graph6(g: *const IndminorGraph, out: *mut *mut c_char) -> IndminorStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        put(out, owned_string(to_graph6(g)), "out")
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn indminor_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Classifies the class excluding `pattern`. `json_out` receives the
/// verdict as JSON (`gi`, `cw`, `rules`); `gi_polynomial` and
/// `cw_bounded` receive the two answers.
///
/// # Safety
/// `pattern` must be a live handle; the outputs must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn indminor_classify(
    pattern: *const IndminorGraph,
    gi_polynomial: *mut bool,
    cw_bounded: *mut bool,
    json_out: *mut *mut c_char,
) -> IndminorStatus {
    guard(|| {
        let h = graph_ref(pattern, "pattern")?;
        let v = dichotomy::classify(h).map_err(lib)?;
        if !gi_polynomial.is_null() {
            gi_polynomial.write(v.gi == dichotomy::GiStatus::PolynomialTime);
        }
        if !cw_bounded.is_null() {
            cw_bounded.write(v.cw == dichotomy::CwStatus::Bounded);
        }
        if !json_out.is_null() {
            json_out.write(owned_string(serde_json::to_string(&v).expect("verdict serializes")));
        }
        Ok(())
    })
}

/// Decides isomorphism. `fallback` (may be null) is set when a
/// class-specific algorithm had to defer to the general engine.
///
/// # Safety
/// `g1`, `g2` must be live handles; `isomorphic` must be writable.
#[no_mangle]
pub unsafe extern "C" fn indminor_iso(
    g1: *const IndminorGraph,
    g2: *const IndminorGraph,
    algorithm: IndminorIsoAlgorithm,
    isomorphic: *mut bool,
    fallback: *mut bool,
) -> IndminorStatus {
    guard(|| {
        let a: ColoredGraph = graph_ref(g1, "g1")?.into();
        let b: ColoredGraph = graph_ref(g2, "g2")?.into();
        let (answer, fell_back) = match algorithm {
            IndminorIsoAlgorithm::Gem => {
                let o = iso::gem_free_iso(&a, &b).map_err(lib)?;
                (o.isomorphic, o.fallback)
            }
            IndminorIsoAlgorithm::Cop32k1 => {
                let o = iso::cop32k1_free_iso(&a, &b).map_err(lib)?;
                (o.isomorphic, o.fallback)
            }
            IndminorIsoAlgorithm::General => (iso::general_iso(&a, &b).map_err(lib)?, false),
            IndminorIsoAlgorithm::Oracle => (oracles::iso_bruteforce(&a, &b).map_err(lib)?.is_some(), false),
            IndminorIsoAlgorithm::Auto => {
                if oracles::is_p4_free(&a.graph) && oracles::is_p4_free(&b.graph) {
                    (iso::cograph_certificate(&a).map_err(lib)? == iso::cograph_certificate(&b).map_err(lib)?, false)
                } else {
                    (iso::general_iso(&a, &b).map_err(lib)?, false)
                }
            }
        };
        put(isomorphic, answer, "isomorphic")?;
        if !fallback.is_null() {
            fallback.write(fell_back);
        }
        Ok(())
    })
}

/// Applies an isomorphism-preserving reduction; the result is a new handle
/// whose first vertices are the input vertices in order.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn indminor_reduce(
    g: *const IndminorGraph,
    target: IndminorTarget,
    out: *mut *mut IndminorGraph,
) -> IndminorStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        let r = match target {
            IndminorTarget::RestrictedSplit => reductions::reduce_to_restricted_split(g),
            IndminorTarget::Cobipartite => reductions::reduce_to_cobipartite(g),
            IndminorTarget::K3uK1Free => reductions::reduce_to_k3uk1_free(g),
        }
        .map_err(lib)?;
        put(out, boxed(r.graph), "out")
    })
}

/// Whether `g` has no `K3 ∪ K1` induced minor.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn indminor_is_k3uk1_free(g: *const IndminorGraph, out: *mut bool) -> IndminorStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        put(out, structure::k3uk1_induced_minor_free(g), "out")
    })
}

/// Whether `g` has no induced `P4`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn indminor_is_p4_free(g: *const IndminorGraph, out: *mut bool) -> IndminorStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        put(out, oracles::is_p4_free(g), "out")
    })
}

/// Builds a clique-width expression in text form; release with
/// [`indminor_string_free`]. `width` may be null.
///
/// # Safety
/// `g` must be a live handle; `expression` must be writable.
#[no_mangle]
pub unsafe extern "C" fn indminor_cw_build(
    g: *const IndminorGraph,
    kind: IndminorCwKind,
    expression: *mut *mut c_char,
    width: *mut usize,
) -> IndminorStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        let e = match kind {
            IndminorCwKind::Cograph => cwx::cograph_expression(g),
            IndminorCwKind::GemFree => cwx::gem_free_expression(g),
        }
        .map_err(lib)?;
        if expression.is_null() {
            return Err(null("expression"));
        }
        if !width.is_null() {
            width.write(e.width());
        }
        expression.write(owned_string(e.to_string()));
        Ok(())
    })
}

/// Checks that the expression text builds exactly `g`. `width` may be null.
///
/// # Safety
/// `expression` must be a NUL-terminated string, `g` a live handle and
/// `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn indminor_cw_verify(
    expression: *const c_char,
    g: *const IndminorGraph,
    valid: *mut bool,
    width: *mut usize,
) -> IndminorStatus {
    guard(|| {
        let text = str_arg(expression, "expression")?;
        let g = graph_ref(g, "graph")?;
        let e: cwx::CwExpression = text.parse().map_err(lib)?;
        put(valid, cwx::verify(&e, g), "valid")?;
        if !width.is_null() {
            width.write(e.width());
        }
        Ok(())
    })
}

/// Width bound guaranteed by the gem-free expression builder.
#[no_mangle]
pub extern "C" fn indminor_gem_free_width_bound() -> usize {
    cwx::W_GEM
}
