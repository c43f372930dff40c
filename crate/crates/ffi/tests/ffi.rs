use std::ffi::{CStr, CString};
use std::ptr;

use pack2dom_ffi::*;

fn from_g6(s: &str) -> *mut P2dGraph {
    let c = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { p2d_graph_from_graph6(c.as_ptr(), &mut g) },
        P2dStatus::Ok
    );
    assert!(!g.is_null());
    g
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { p2d_string_free(p) };
    s
}

fn invariants(g: *const P2dGraph) -> [usize; 4] {
    let mut v = [0usize; 4];
    unsafe {
        assert_eq!(p2d_gamma(g, &mut v[0]), P2dStatus::Ok);
        assert_eq!(p2d_beta(g, &mut v[1]), P2dStatus::Ok);
        assert_eq!(p2d_alpha(g, &mut v[2]), P2dStatus::Ok);
        assert_eq!(p2d_nu2(g, &mut v[3]), P2dStatus::Ok);
    }
    v
}

#[test]
fn k4_from_graph6() {
    let g = from_g6("C~");
    unsafe {
        assert_eq!((p2d_graph_order(g), p2d_graph_size(g)), (4, 6));
    }
    assert_eq!(invariants(g), [1, 3, 1, 4]);
    unsafe { p2d_graph_free(g) };
}

#[test]
fn edges_and_round_trip() {
    // 5-cycle
    let edges: [usize; 10] = [0, 1, 1, 2, 2, 3, 3, 4, 4, 0];
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { p2d_graph_from_edges(5, edges.as_ptr(), 5, &mut g) },
        P2dStatus::Ok
    );
    assert_eq!(invariants(g), [2, 3, 2, 5]);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { p2d_graph_to_graph6(g, &mut s) }, P2dStatus::Ok);
    let g6 = take_string(s);
    let h = from_g6(&g6);
    let mut a = ptr::null_mut();
    let mut b = ptr::null_mut();
    unsafe {
        assert_eq!(p2d_canonical_form(g, &mut a), P2dStatus::Ok);
        assert_eq!(p2d_canonical_form(h, &mut b), P2dStatus::Ok);
    }
    assert_eq!(take_string(a), take_string(b));
    unsafe {
        p2d_graph_free(g);
        p2d_graph_free(h);
    }
}

#[test]
fn family_and_recognition() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { p2d_generate_family(2, 3, &mut g) }, P2dStatus::Ok);
    let mut rec = P2dRecognition {
        member: false,
        s: 0,
        t: 0,
        r: 0,
        reason: P2dReject::None,
    };
    assert_eq!(unsafe { p2d_recognize(g, &mut rec) }, P2dStatus::Ok);
    assert_eq!(
        rec,
        P2dRecognition {
            member: true,
            s: 2,
            t: 3,
            r: 6,
            reason: P2dReject::None
        }
    );
    let inv = invariants(g);
    assert_eq!((inv[0], inv[3]), (5, 6));
    unsafe { p2d_graph_free(g) };

    let edges: [usize; 12] = [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 0];
    let mut c6 = ptr::null_mut();
    unsafe {
        assert_eq!(
            p2d_graph_from_edges(6, edges.as_ptr(), 6, &mut c6),
            P2dStatus::Ok
        );
        assert_eq!(p2d_recognize(c6, &mut rec), P2dStatus::Ok);
        p2d_graph_free(c6);
    }
    assert!(!rec.member);
    assert_eq!(rec.reason, P2dReject::NotATree);
}

#[test]
fn errors_set_status_and_message() {
    let mut g = ptr::null_mut();
    let bad = CString::new("not graph6").unwrap();
    unsafe {
        assert_eq!(
            p2d_graph_from_graph6(bad.as_ptr(), &mut g),
            P2dStatus::Parse
        );
        assert!(g.is_null());
        let msg = CStr::from_ptr(p2d_last_error()).to_str().unwrap();
        assert!(!msg.is_empty());

        assert_eq!(p2d_generate_family(0, 1, &mut g), P2dStatus::InvalidParams);
        assert_eq!(
            p2d_graph_from_graph6(ptr::null(), &mut g),
            P2dStatus::NullPointer
        );
        let mut out = 0;
        assert_eq!(p2d_gamma(ptr::null(), &mut out), P2dStatus::NullPointer);
        let loop_edge: [usize; 2] = [1, 1];
        assert_eq!(
            p2d_graph_from_edges(3, loop_edge.as_ptr(), 1, &mut g),
            P2dStatus::Parse
        );
        let far: [usize; 2] = [0, 9];
        assert_eq!(
            p2d_graph_from_edges(3, far.as_ptr(), 1, &mut g),
            P2dStatus::Parse
        );
        assert_eq!(
            p2d_survey_builtin(99, 0, ptr::null_mut()),
            P2dStatus::BoundExceeded
        );

        // success clears the message
        let ok = from_g6("A_");
        assert!(p2d_last_error().is_null());
        p2d_graph_free(ok);
        p2d_graph_free(ptr::null_mut());
        p2d_string_free(ptr::null_mut());
        assert_eq!(p2d_graph_order(ptr::null()), 0);
    }
}

#[test]
fn survey_summary_json() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { p2d_survey_builtin(5, 2, &mut s) }, P2dStatus::Ok);
    let json: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(json["graphs"], 21);
    assert_eq!(json["counterexamples"].as_array().unwrap().len(), 0);
}
