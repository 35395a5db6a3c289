use std::ffi::{CStr, CString};
use std::ptr;

use sextic_groups_ffi::*;

fn load(target: &str) -> *mut SexticPresentation {
    let t = CString::new(target).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { sextic_presentation_load(t.as_ptr(), &mut p) },
        SexticStatus::Ok
    );
    p
}

#[test]
fn parse_and_query() {
    let text = CString::new("gens: u v\nu u\nv v v\n").unwrap();
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(
            sextic_presentation_parse(text.as_ptr(), &mut p),
            SexticStatus::Ok
        );
        assert_eq!(sextic_presentation_generator_count(p), 2);
        let mut s = ptr::null_mut();
        assert_eq!(sextic_abelianization(p, &mut s), SexticStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "Z6");
        sextic_string_free(s);
        let mut n = 0u64;
        let g = CString::new("S3").unwrap();
        assert_eq!(sextic_hom_count(p, g.as_ptr(), &mut n), SexticStatus::Ok);
        assert_eq!(n, 12);
        assert_eq!(
            sextic_coset_order(p, 100, &mut n),
            SexticStatus::CosetOverflow
        );
        sextic_presentation_free(p);
    }
}

#[test]
fn registry_targets() {
    let p = load("group:minimal");
    let mut n = 0u64;
    unsafe {
        let d = CString::new("A4").unwrap();
        assert_eq!(sextic_hom_count(p, d.as_ptr(), &mut n), SexticStatus::Ok);
        assert_eq!(n, 24);
        sextic_presentation_free(p);
    }
    let p = load("case:a17+a2");
    unsafe {
        assert_eq!(sextic_presentation_generator_count(p), 6);
        sextic_presentation_free(p);
    }
}

#[test]
fn errors_carry_messages() {
    let mut p = ptr::null_mut();
    unsafe {
        let bad = CString::new("u v\n").unwrap();
        assert_eq!(
            sextic_presentation_parse(bad.as_ptr(), &mut p),
            SexticStatus::ParseError
        );
        assert!(p.is_null());
        let msg = CStr::from_ptr(sextic_last_error()).to_str().unwrap();
        assert!(msg.contains("gens:"), "{msg}");

        let unknown = CString::new("case:nope").unwrap();
        assert_eq!(
            sextic_presentation_load(unknown.as_ptr(), &mut p),
            SexticStatus::UnknownId
        );
        assert_eq!(
            sextic_presentation_parse(ptr::null(), &mut p),
            SexticStatus::NullArgument
        );
        let mut n = 0u64;
        assert_eq!(
            sextic_coset_order(ptr::null(), 10, &mut n),
            SexticStatus::NullArgument
        );

        let g = load("group:rb3");
        let name = CString::new("Q8").unwrap();
        assert_eq!(
            sextic_hom_count(g, name.as_ptr(), &mut n),
            SexticStatus::UnknownId
        );
        sextic_presentation_free(g);
        sextic_presentation_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_function() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/sextic_groups.h"
    ))
    .unwrap();
    for f in [
        "sextic_presentation_parse",
        "sextic_presentation_load",
        "sextic_presentation_free",
        "sextic_presentation_generator_count",
        "sextic_abelianization",
        "sextic_coset_order",
        "sextic_hom_count",
        "sextic_string_free",
        "sextic_last_error",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f}");
    }
}
