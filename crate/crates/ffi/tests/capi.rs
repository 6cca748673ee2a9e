//! Exercises the C ABI exactly as a foreign caller would: through raw
//! pointers, status codes and the string/handle ownership contract.

use std::ffi::{CStr, CString};
use std::ptr;

use symtile_ffi::*;

fn parse(text: &str) -> *mut SymtilePointSet {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { symtile_point_set_parse(c.as_ptr(), &mut out) };
    assert_eq!(status, SymtileStatus::Ok);
    assert!(!out.is_null());
    out
}

fn take_string(ptr: *mut std::ffi::c_char) -> String {
    assert!(!ptr.is_null());
    let text = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_owned();
    unsafe { symtile_string_free(ptr) };
    text
}

#[test]
fn parse_format_roundtrip() {
    let set = parse("n 4\n3 3\n0 0\n0 3\n3 0\n");
    assert_eq!(unsafe { symtile_point_set_modulus(set) }, 4);
    assert_eq!(unsafe { symtile_point_set_len(set) }, 4);

    let mut text_out = ptr::null_mut();
    assert_eq!(
        unsafe { symtile_point_set_format(set, &mut text_out) },
        SymtileStatus::Ok
    );
    assert_eq!(take_string(text_out), "n 4\n0 0\n0 3\n3 0\n3 3\n");
    unsafe { symtile_point_set_free(set) };
}

#[test]
fn parse_errors_set_the_message() {
    let c = CString::new("n 4\n0 0\n0 0\n").unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { symtile_point_set_parse(c.as_ptr(), &mut out) };
    assert_eq!(status, SymtileStatus::ParseError);
    let message = unsafe { CStr::from_ptr(symtile_last_error()) }
        .to_str()
        .unwrap();
    assert!(message.contains("line 3"), "{message}");
}

#[test]
fn coords_and_constructor_agree() {
    let coords: [u32; 8] = [0, 0, 3, 0, 0, 3, 3, 3];
    let mut set = ptr::null_mut();
    let status = unsafe { symtile_point_set_new(4, coords.as_ptr(), 4, &mut set) };
    assert_eq!(status, SymtileStatus::Ok);

    let mut buffer = [0u32; 8];
    let written = unsafe { symtile_point_set_coords(set, buffer.as_mut_ptr(), 4) };
    assert_eq!(written, 4);
    assert_eq!(buffer, [0, 0, 0, 3, 3, 0, 3, 3]); // canonical order
    unsafe { symtile_point_set_free(set) };
}

#[test]
fn zero_set_of_the_axis() {
    let axis = parse("n 4\n0 0\n1 0\n2 0\n3 0\n");
    let mut z = ptr::null_mut();
    let status = unsafe { symtile_zero_set(axis, SymtileForm::Symplectic, &mut z) };
    assert_eq!(status, SymtileStatus::Ok);
    assert_eq!(unsafe { symtile_point_set_len(z) }, 12);

    let mut grid = ptr::null_mut();
    assert_eq!(
        unsafe { symtile_point_set_render(z, &mut grid) },
        SymtileStatus::Ok
    );
    assert_eq!(take_string(grid), "████\n████\n████\n····\nn=4 point set\n");

    unsafe { symtile_point_set_free(z) };
    unsafe { symtile_point_set_free(axis) };
}

#[test]
fn empty_sets_are_reported() {
    let empty = parse("n 4\n");
    let mut z = ptr::null_mut();
    let status = unsafe { symtile_zero_set(empty, SymtileForm::Symplectic, &mut z) };
    assert_eq!(status, SymtileStatus::EmptySet);
    unsafe { symtile_point_set_free(empty) };
}

#[test]
fn tiling_and_spectral_checks() {
    let a = parse("n 4\n0 0\n3 0\n0 3\n3 3\n");
    let b = parse("n 4\n0 0\n1 2\n2 0\n3 2\n");

    let mut holds = false;
    let mut json = ptr::null_mut();
    let status = unsafe { symtile_check_tiling(a, b, &mut holds, &mut json) };
    assert_eq!(status, SymtileStatus::Ok);
    assert!(holds);
    let verdict = take_string(json);
    assert!(verdict.contains("\"holds\": true"), "{verdict}");

    let status =
        unsafe { symtile_check_spectral(a, b, SymtileForm::Symplectic, &mut holds, ptr::null_mut()) };
    assert_eq!(status, SymtileStatus::Ok);
    assert!(holds);

    // mismatched moduli surface as a status, not a panic
    let other = parse("n 5\n0 0\n");
    let status = unsafe { symtile_check_tiling(a, other, &mut holds, ptr::null_mut()) };
    assert_eq!(status, SymtileStatus::ModulusMismatch);

    unsafe { symtile_point_set_free(other) };
    unsafe { symtile_point_set_free(b) };
    unsafe { symtile_point_set_free(a) };
}

#[test]
fn orthogonal_requires_a_subgroup() {
    let not_subgroup = parse("n 4\n0 0\n3 0\n0 3\n3 3\n");
    let mut out = ptr::null_mut();
    let status = unsafe { symtile_orthogonal(not_subgroup, &mut out) };
    assert_eq!(status, SymtileStatus::NotASubgroup);
    unsafe { symtile_point_set_free(not_subgroup) };

    let h = parse("n 4\n0 0\n2 0\n0 2\n2 2\n");
    let status = unsafe { symtile_orthogonal(h, &mut out) };
    assert_eq!(status, SymtileStatus::Ok);
    assert_eq!(unsafe { symtile_point_set_len(out) }, 4); // Lagrangian: H = H^perp
    unsafe { symtile_point_set_free(out) };
    unsafe { symtile_point_set_free(h) };
}

#[test]
fn verify_suite_through_the_abi() {
    let suite = CString::new("diff").unwrap();
    let mut pass = false;
    let mut json = ptr::null_mut();
    let status =
        unsafe { symtile_verify(suite.as_ptr(), 2, ptr::null(), &mut pass, &mut json) };
    assert_eq!(status, SymtileStatus::Ok);
    assert!(pass);
    let report = take_string(json);
    assert!(report.contains("\"suite\": \"lemma-diff-disjoint\""), "{report}");
    assert!(report.contains("\"instances_checked\": 256"), "{report}");

    // oversized exhaustive run maps to BoundExceeded
    let status = unsafe { symtile_verify(suite.as_ptr(), 3, ptr::null(), &mut pass, ptr::null_mut()) };
    assert_eq!(status, SymtileStatus::BoundExceeded);

    // sampled options make it feasible
    let opts = SymtileVerifyOptions {
        sampled: true,
        samples: 20,
        seed: 42,
        workers: 1,
    };
    let status = unsafe { symtile_verify(suite.as_ptr(), 3, &opts, &mut pass, ptr::null_mut()) };
    assert_eq!(status, SymtileStatus::Ok);
    assert!(pass);

    let unknown = CString::new("nonsense").unwrap();
    let status =
        unsafe { symtile_verify(unknown.as_ptr(), 2, ptr::null(), &mut pass, ptr::null_mut()) };
    assert_eq!(status, SymtileStatus::InvalidArgument);
}

#[test]
fn difference_set_through_the_abi() {
    let a = parse("n 4\n0 0\n3 0\n0 3\n3 3\n");
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { symtile_difference_set(a, &mut d) }, SymtileStatus::Ok);
    assert_eq!(unsafe { symtile_point_set_len(d) }, 8);
    unsafe { symtile_point_set_free(d) };
    unsafe { symtile_point_set_free(a) };
}
