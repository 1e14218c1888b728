//! Exercises the C ABI from Rust through the exported symbols.

use std::ffi::{CStr, CString};
use std::ptr;

use hyperforge_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(hf_last_error()) }.to_string_lossy().into_owned()
}

const SQUARE: &str = r#"{"elements":[{"id":0,"type":0},{"id":1,"type":0},{"id":2,"type":0},{"id":3,"type":0},{"id":4,"type":1},{"id":5,"type":1},{"id":6,"type":1},{"id":7,"type":1}],"incidences":[[0,4],[0,7],[1,4],[1,5],[2,5],[2,6],[3,6],[3,7]],"rank":2}"#;

#[test]
fn geometry_round_trip_and_report() {
    let json = CString::new(SQUARE).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { hf_geometry_from_json(json.as_ptr(), &mut g) }, HfStatus::Ok);
    let mut rank = 0;
    assert_eq!(unsafe { hf_geometry_rank(g, &mut rank) }, HfStatus::Ok);
    assert_eq!(rank, 2);
    let mut count = 0;
    assert_eq!(unsafe { hf_geometry_type_count(g, 1, &mut count) }, HfStatus::Ok);
    assert_eq!(count, 4);
    assert_eq!(unsafe { hf_geometry_type_count(g, 2, &mut count) }, HfStatus::InvalidArgument);
    let mut report = HfFlagReport::default();
    assert_eq!(unsafe { hf_geometry_flag_report(g, 0, &mut report) }, HfStatus::Ok);
    assert!(report.is_geometry && report.thin && report.residually_connected && report.firm);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { hf_geometry_to_json(g, &mut text) }, HfStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(text) }.to_str().unwrap(), SQUARE);
    unsafe {
        hf_string_free(text);
        hf_geometry_free(g);
    }
}

#[test]
fn errors_are_reported() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { hf_geometry_from_json(ptr::null(), &mut g) }, HfStatus::NullPointer);
    assert!(g.is_null());
    let bad = CString::new(r#"{"elements":[{"id":0,"type":0}],"incidences":[[0,0]],"rank":1}"#).unwrap();
    assert_eq!(unsafe { hf_geometry_from_json(bad.as_ptr(), &mut g) }, HfStatus::InvalidGeometry);
    assert!(!last_error().is_empty());
    let junk = CString::new("not json").unwrap();
    assert_eq!(unsafe { hf_geometry_from_json(junk.as_ptr(), &mut g) }, HfStatus::Io);
    let pres = CString::new(r#"{"ngens":2,"relators":[]}"#).unwrap();
    let mut grp = ptr::null_mut();
    assert_eq!(unsafe { hf_group_from_presentation(pres.as_ptr(), 50, &mut grp) }, HfStatus::Overflow);
    assert!(grp.is_null());
    let mut passed = false;
    assert_eq!(unsafe { hf_verify_family(3, 1, 3, 7, &mut passed, ptr::null_mut()) }, HfStatus::InvalidArgument);
    assert_eq!(unsafe { hf_verify_family(3, 5, 3, 0, &mut passed, ptr::null_mut()) }, HfStatus::InvalidPresentation);
}

#[test]
fn toroid_halving_through_handles() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { hf_group_cubic_toroid(3, 1, 4, 0, &mut g) }, HfStatus::Ok);
    let mut order = 0;
    assert_eq!(unsafe { hf_group_order(g, &mut order) }, HfStatus::Ok);
    assert_eq!(order, 3072);
    let mut geo = ptr::null_mut();
    assert_eq!(unsafe { hf_group_coset_geometry(g, &mut geo) }, HfStatus::Ok);
    let (mut b1, mut b2) = (false, false);
    assert_eq!(unsafe { hf_geometry_leaf_conditions(geo, 0, 1, &mut b1, &mut b2) }, HfStatus::Ok);
    assert!(b1 && b2);
    let mut halved = ptr::null_mut();
    assert_eq!(unsafe { hf_geometry_halve(geo, 0, 1, false, &mut halved) }, HfStatus::Ok);
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { hf_group_halve(g, 0, 1, &mut h) }, HfStatus::Ok);
    assert_eq!(unsafe { hf_group_order(h, &mut order) }, HfStatus::Ok);
    assert_eq!(order, 1536);
    let mut hgeo = ptr::null_mut();
    assert_eq!(unsafe { hf_group_coset_geometry(h, &mut hgeo) }, HfStatus::Ok);
    let mut iso = false;
    assert_eq!(unsafe { hf_geometry_isomorphic(halved, hgeo, &mut iso) }, HfStatus::Ok);
    assert!(iso);
    let mut bad = ptr::null_mut();
    assert_eq!(unsafe { hf_geometry_halve(geo, 0, 2, false, &mut bad) }, HfStatus::PreconditionFailed);
    assert!(last_error().contains("B1"));
    assert_eq!(unsafe { hf_geometry_halve(geo, 0, 9, false, &mut bad) }, HfStatus::NotALeaf);
    assert!(bad.is_null());
    unsafe {
        hf_geometry_free(hgeo);
        hf_geometry_free(halved);
        hf_geometry_free(geo);
        hf_group_free(h);
        hf_group_free(g);
    }
}

#[test]
fn verify_family_report() {
    let mut passed = false;
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { hf_verify_family(3, 2, 2, 2, &mut passed, &mut report) }, HfStatus::Ok);
    assert!(passed);
    let text = unsafe { CStr::from_ptr(report) }.to_str().unwrap().to_owned();
    unsafe { hf_string_free(report) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["levels"].as_array().unwrap().len(), 3);
    assert_eq!(v["levels"][2]["group_order"], 192);
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hyperforge.h")).unwrap();
    for name in [
        "typedef struct HfGeometry HfGeometry;",
        "typedef struct HfGroup HfGroup;",
        "HF_STATUS_OK = 0",
        "hf_geometry_from_json",
        "hf_group_cubic_toroid",
        "hf_verify_family",
        "hf_last_error",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
