//! Exercises the C ABI from Rust: handle lifecycles, status codes, and a
//! few known values end to end.

use partition_patterns_ffi::*;
use std::ffi::{c_char, CStr, CString};

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    unsafe { ppc_string_free(ptr) };
    s
}

fn parse_partition(text: &str) -> *mut PpcPartition {
    let c = CString::new(text).unwrap();
    let mut handle: *mut PpcPartition = std::ptr::null_mut();
    let status = unsafe { ppc_partition_parse(c.as_ptr(), &mut handle) };
    assert_eq!(status, PpcStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn parse_pattern(text: &str) -> *mut PpcPattern {
    let c = CString::new(text).unwrap();
    let mut handle: *mut PpcPattern = std::ptr::null_mut();
    let status = unsafe { ppc_pattern_parse(c.as_ptr(), &mut handle) };
    assert_eq!(status, PpcStatus::Ok);
    handle
}

#[test]
fn partition_lifecycle_and_accessors() {
    let p = parse_partition("137/26/45");
    unsafe {
        assert_eq!(ppc_partition_n(p), 7);
        assert_eq!(ppc_partition_block_count(p), 3);
        assert_eq!(ppc_partition_sign(p), 1);
        assert!(!ppc_partition_is_layered(p));
        assert!(!ppc_partition_is_matching(p));
        assert_eq!(take_string(ppc_partition_format(p)), "137/26/45");
        assert_eq!(
            take_string(ppc_partition_to_json(p)),
            r#"{"n":7,"blocks":[[1,3,7],[2,6],[4,5]]}"#
        );
        ppc_partition_free(p);
    }
}

#[test]
fn complement_worked_example() {
    let p = parse_partition("126/3/45");
    unsafe {
        let c = ppc_partition_complement(p);
        assert_eq!(take_string(ppc_partition_format(c)), "156/23/4");
        ppc_partition_free(c);
        ppc_partition_free(p);
    }
}

#[test]
fn pattern_roundtrip_and_classical() {
    let q = parse_pattern("1m/2m4|3m");
    unsafe {
        assert_eq!(take_string(ppc_pattern_format(q)), "1m/2m,4|3m");
        let c = ppc_pattern_classical(q);
        assert_eq!(take_string(ppc_pattern_format(c)), "1/2,4/3");
        ppc_pattern_free(c);
        ppc_pattern_free(q);
    }
}

#[test]
fn matching_and_stats() {
    let sigma = parse_partition("137/26/45");
    let pat = parse_pattern("1,4/2/3");
    unsafe {
        let mut count = 0u64;
        assert_eq!(ppc_count_copies(sigma, pat, &mut count), PpcStatus::Ok);
        assert_eq!(count, 8);
        let mut found = false;
        assert_eq!(ppc_contains(sigma, pat, &mut found), PpcStatus::Ok);
        assert!(found);

        for (name, expected) in [
            ("inv", 4u64),
            ("maj", 4),
            ("rb", 5),
            ("cr", 2),
            ("ne", 2),
            ("al", 2),
        ] {
            let cname = CString::new(name).unwrap();
            let mut v = 0u64;
            assert_eq!(ppc_stat(sigma, cname.as_ptr(), &mut v), PpcStatus::Ok);
            assert_eq!(v, expected, "{name}");
        }
        let bad = CString::new("cr_1").unwrap();
        let mut v = 0u64;
        assert_eq!(
            ppc_stat(sigma, bad.as_ptr(), &mut v),
            PpcStatus::InvalidArgument
        );
        ppc_pattern_free(pat);
        ppc_partition_free(sigma);
    }
}

#[test]
fn counting_and_sequences() {
    unsafe {
        let patterns = CString::new("13/2;123").unwrap();
        let mut out: *mut c_char = std::ptr::null_mut();
        assert_eq!(
            ppc_count_avoiders(6, patterns.as_ptr(), &mut out),
            PpcStatus::Ok
        );
        assert_eq!(take_string(out), "13");

        let single = CString::new("13/2").unwrap();
        let mut even: *mut c_char = std::ptr::null_mut();
        let mut odd: *mut c_char = std::ptr::null_mut();
        assert_eq!(
            ppc_parity_counts(4, single.as_ptr(), &mut even, &mut odd),
            PpcStatus::Ok
        );
        assert_eq!(take_string(even), "4");
        assert_eq!(take_string(odd), "4");

        let mut out: *mut c_char = std::ptr::null_mut();
        assert_eq!(ppc_gen_sequence(b'a' as c_char, 5, &mut out), PpcStatus::Ok);
        assert_eq!(take_string(out), "19");
        assert_eq!(
            ppc_gen_sequence(b'z' as c_char, 5, &mut out),
            PpcStatus::InvalidArgument
        );
    }
}

#[test]
fn error_statuses() {
    unsafe {
        let mut handle: *mut PpcPartition = std::ptr::null_mut();
        assert_eq!(
            ppc_partition_parse(std::ptr::null(), &mut handle),
            PpcStatus::NullPointer
        );
        let bad = CString::new("12/21").unwrap();
        assert_eq!(
            ppc_partition_parse(bad.as_ptr(), &mut handle),
            PpcStatus::ParseError
        );
        let invalid = CString::new(vec![0xffu8]).unwrap();
        assert_eq!(
            ppc_partition_parse(invalid.as_ptr(), &mut handle),
            PpcStatus::InvalidUtf8
        );
        let mut pat: *mut PpcPattern = std::ptr::null_mut();
        let dangling = CString::new("1-/2").unwrap();
        assert_eq!(
            ppc_pattern_parse(dangling.as_ptr(), &mut pat),
            PpcStatus::ParseError
        );
        // Null handles are tolerated everywhere.
        assert_eq!(ppc_partition_n(std::ptr::null()), -1);
        assert!(ppc_partition_format(std::ptr::null()).is_null());
        ppc_partition_free(std::ptr::null_mut());
        ppc_pattern_free(std::ptr::null_mut());
        ppc_string_free(std::ptr::null_mut());
    }
}
