use std::ffi::{c_char, CStr, CString};
use std::ptr;

use indminor_ffi::*;

fn graph(g6: &str) -> *mut IndminorGraph {
    let text = CString::new(g6).unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { indminor_graph_from_graph6(text.as_ptr(), &mut out) };
    assert_eq!(st, IndminorStatus::Ok);
    out
}

fn take(s: *mut c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { indminor_string_free(s) };
    owned
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(indminor_last_error_message()) }.to_str().unwrap().to_owned()
}

#[test]
fn graph6_round_trip() {
    let g = graph("D?{");
    unsafe {
        assert_eq!(indminor_graph_vertex_count(g), 5);
        let mut s = ptr::null_mut();
        assert_eq!(indminor_graph_to_graph6(g, &mut s), IndminorStatus::Ok);
        assert_eq!(take(s), "D?{");
        indminor_graph_free(g);
    }
}

#[test]
fn edges_constructor() {
    let ends = [0usize, 1, 1, 2, 2, 3, 3, 0];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(indminor_graph_from_edges(4, ends.as_ptr(), 4, &mut g), IndminorStatus::Ok);
        assert_eq!((indminor_graph_vertex_count(g), indminor_graph_edge_count(g)), (4, 4));
        indminor_graph_free(g);
        let bad = [0usize, 7];
        let mut h = ptr::null_mut();
        assert_eq!(indminor_graph_from_edges(4, bad.as_ptr(), 1, &mut h), IndminorStatus::InvalidArgument);
        assert!(h.is_null());
    }
}

#[test]
fn errors_and_nulls() {
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(indminor_graph_from_graph6(ptr::null(), &mut out), IndminorStatus::NullPointer);
        assert!(last_error().contains("null"));
        let junk = CString::new("\x7f\x7f").unwrap();
        assert_eq!(indminor_graph_from_graph6(junk.as_ptr(), &mut out), IndminorStatus::Parse);
        assert!(!last_error().is_empty());
        assert_eq!(indminor_graph_vertex_count(ptr::null()), 0);
        indminor_graph_free(ptr::null_mut());
        indminor_string_free(ptr::null_mut());
        let mut b = false;
        assert_eq!(indminor_is_p4_free(ptr::null(), &mut b), IndminorStatus::NullPointer);
    }
}

#[test]
fn classify_verdicts() {
    // Gem: P4 plus a dominating vertex.
    let gem = unsafe {
        let ends = [0usize, 1, 1, 2, 2, 3, 0, 4, 1, 4, 2, 4, 3, 4];
        let mut g = ptr::null_mut();
        assert_eq!(indminor_graph_from_edges(5, ends.as_ptr(), 7, &mut g), IndminorStatus::Ok);
        g
    };
    let (mut gi, mut cw, mut json) = (false, false, ptr::null_mut());
    unsafe {
        assert_eq!(indminor_classify(gem, &mut gi, &mut cw, &mut json), IndminorStatus::Ok);
        assert!(gi && cw);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["gi"], "PolynomialTime");
        indminor_graph_free(gem);
        // C5 excludes a class that is GI-complete with unbounded clique-width.
        let c5 = graph("Dhc");
        assert_eq!(indminor_classify(c5, &mut gi, &mut cw, ptr::null_mut()), IndminorStatus::Ok);
        assert!(!gi && !cw);
        indminor_graph_free(c5);
    }
}

#[test]
fn iso_algorithms() {
    let c4 = graph("Cr");
    let c4b = graph("Cr");
    let p4 = graph("Ch");
    let mut iso = false;
    let mut fb = true;
    unsafe {
        for algo in [
            IndminorIsoAlgorithm::Auto,
            IndminorIsoAlgorithm::Gem,
            IndminorIsoAlgorithm::General,
            IndminorIsoAlgorithm::Oracle,
        ] {
            assert_eq!(indminor_iso(c4, c4b, algo, &mut iso, &mut fb), IndminorStatus::Ok);
            assert!(iso);
            assert_eq!(indminor_iso(c4, p4, algo, &mut iso, ptr::null_mut()), IndminorStatus::Ok);
            assert!(!iso);
        }
        for g in [c4, c4b, p4] {
            indminor_graph_free(g);
        }
    }
}

#[test]
fn reductions_and_membership() {
    let k4 = graph("C~");
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(indminor_reduce(k4, IndminorTarget::K3uK1Free, &mut r), IndminorStatus::Ok);
        let mut free = false;
        assert_eq!(indminor_is_k3uk1_free(r, &mut free), IndminorStatus::Ok);
        assert!(free);
        assert!(indminor_graph_vertex_count(r) > 4);
        indminor_graph_free(r);
        assert_eq!(indminor_reduce(k4, IndminorTarget::Cobipartite, &mut r), IndminorStatus::Ok);
        assert_eq!(indminor_graph_vertex_count(r), 4 + 6);
        indminor_graph_free(r);
        indminor_graph_free(k4);
    }
}

#[test]
fn clique_width() {
    let c5 = graph("Dhc");
    unsafe {
        let (mut e, mut w) = (ptr::null_mut(), 0usize);
        assert_eq!(indminor_cw_build(c5, IndminorCwKind::Cograph, &mut e, &mut w), IndminorStatus::NotInClass);
        assert_eq!(indminor_cw_build(c5, IndminorCwKind::GemFree, &mut e, &mut w), IndminorStatus::Ok);
        assert!(w <= indminor_gem_free_width_bound());
        let text = take(e);
        let expr = CString::new(text).unwrap();
        let (mut ok, mut w2) = (false, 0usize);
        assert_eq!(indminor_cw_verify(expr.as_ptr(), c5, &mut ok, &mut w2), IndminorStatus::Ok);
        assert!(ok);
        assert_eq!(w, w2);
        let bad = CString::new("join(").unwrap();
        assert_eq!(indminor_cw_verify(bad.as_ptr(), c5, &mut ok, ptr::null_mut()), IndminorStatus::Parse);
        indminor_graph_free(c5);
    }
}
