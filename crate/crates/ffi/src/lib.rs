//! C ABI over the partition-patterns library.
//!
//! Handles are opaque; every constructor has a matching `_free`, and every
//! returned string must be released with [`ppc_string_free`]. Functions
//! report a [`PpcStatus`] and write results through out-pointers. Counts
//! that may exceed 64 bits are returned as decimal strings.

use partition_patterns::enumeration::{count_avoiders, gen_sequence, parity_counts, GenKind};
use partition_patterns::matcher;
use partition_patterns::partition::SetPartition;
use partition_patterns::pattern::GenPattern;
use partition_patterns::statistics::{compute_stat, Statistic};
use std::ffi::{c_char, CStr, CString};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PpcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
}

/// Opaque set partition handle.
pub struct PpcPartition {
    inner: SetPartition,
}

/// Opaque generalized-pattern handle.
pub struct PpcPattern {
    inner: GenPattern,
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, PpcStatus> {
    if ptr.is_null() {
        return Err(PpcStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| PpcStatus::InvalidUtf8)
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Parses a partition such as `"137/26/45"`; on success writes a handle the
/// caller must release with [`ppc_partition_free`].
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ppc_partition_parse(
    text: *const c_char,
    out: *mut *mut PpcPartition,
) -> PpcStatus {
    if out.is_null() {
        return PpcStatus::NullPointer;
    }
    let text = match unsafe { read_str(text) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    match text.parse::<SetPartition>() {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(PpcPartition { inner })) };
            PpcStatus::Ok
        }
        Err(_) => PpcStatus::ParseError,
    }
}

/// # Safety
/// `p` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_partition_free(p: *mut PpcPartition) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Canonical text of the partition; release with [`ppc_string_free`].
/// Returns null on a null handle.
///
/// # Safety
/// `p` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_partition_format(p: *const PpcPartition) -> *mut c_char {
    match unsafe { p.as_ref() } {
        Some(p) => give_string(p.inner.to_string()),
        None => std::ptr::null_mut(),
    }
}

/// JSON form `{"n": …, "blocks": [[…]]}`; release with [`ppc_string_free`].
///
/// # Safety
/// `p` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_partition_to_json(p: *const PpcPartition) -> *mut c_char {
    match unsafe { p.as_ref() } {
        Some(p) => give_string(serde_json_string(&p.inner)),
        None => std::ptr::null_mut(),
    }
}

fn serde_json_string(p: &SetPartition) -> String {
    // The JSON shape is tiny and fixed; assemble it directly.
    let blocks: Vec<String> = p
        .blocks()
        .iter()
        .map(|b| {
            let items: Vec<String> = b.iter().map(usize::to_string).collect();
            format!("[{}]", items.join(","))
        })
        .collect();
    format!("{{\"n\":{},\"blocks\":[{}]}}", p.n(), blocks.join(","))
}

/// Ground-set size, or -1 on a null handle.
///
/// # Safety
/// `p` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_partition_n(p: *const PpcPartition) -> i64 {
    unsafe { p.as_ref() }.map_or(-1, |p| p.inner.n() as i64)
}

/// Number of blocks, or -1 on a null handle.
///
/// # Safety
/// `p` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_partition_block_count(p: *const PpcPartition) -> i64 {
    unsafe { p.as_ref() }.map_or(-1, |p| p.inner.block_count() as i64)
}

/// +1 for even partitions, -1 for odd, 0 on a null handle.
///
/// # Safety
/// `p` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_partition_sign(p: *const PpcPartition) -> i32 {
    unsafe { p.as_ref() }.map_or(0, |p| p.inner.sign().value())
}

/// # Safety
/// `p` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_partition_is_layered(p: *const PpcPartition) -> bool {
    unsafe { p.as_ref() }.is_some_and(|p| p.inner.is_layered())
}

/// # Safety
/// `p` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_partition_is_matching(p: *const PpcPartition) -> bool {
    unsafe { p.as_ref() }.is_some_and(|p| p.inner.is_matching())
}

/// The complement partition as a fresh handle, or null on a null handle.
///
/// # Safety
/// `p` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_partition_complement(p: *const PpcPartition) -> *mut PpcPartition {
    match unsafe { p.as_ref() } {
        Some(p) => Box::into_raw(Box::new(PpcPartition {
            inner: p.inner.complement(),
        })),
        None => std::ptr::null_mut(),
    }
}

/// Parses a generalized pattern such as `"1m3/2m"` or `"1,2|3"`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ppc_pattern_parse(
    text: *const c_char,
    out: *mut *mut PpcPattern,
) -> PpcStatus {
    if out.is_null() {
        return PpcStatus::NullPointer;
    }
    let text = match unsafe { read_str(text) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    match text.parse::<GenPattern>() {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(PpcPattern { inner })) };
            PpcStatus::Ok
        }
        Err(_) => PpcStatus::ParseError,
    }
}

/// # Safety
/// `p` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_pattern_free(p: *mut PpcPattern) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Canonical spelling of the pattern; release with [`ppc_string_free`].
///
/// # Safety
/// `p` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_pattern_format(p: *const PpcPattern) -> *mut c_char {
    match unsafe { p.as_ref() } {
        Some(p) => give_string(p.inner.to_string()),
        None => std::ptr::null_mut(),
    }
}

/// The pattern with every adjacency restriction and mark dropped.
///
/// # Safety
/// `p` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_pattern_classical(p: *const PpcPattern) -> *mut PpcPattern {
    match unsafe { p.as_ref() } {
        Some(p) => Box::into_raw(Box::new(PpcPattern {
            inner: p.inner.underlying_classical(),
        })),
        None => std::ptr::null_mut(),
    }
}

/// Number of copies of the pattern in the partition.
///
/// # Safety
/// `sigma` and `pattern` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ppc_count_copies(
    sigma: *const PpcPartition,
    pattern: *const PpcPattern,
    out: *mut u64,
) -> PpcStatus {
    let (Some(sigma), Some(pattern)) = (unsafe { sigma.as_ref() }, unsafe { pattern.as_ref() })
    else {
        return PpcStatus::NullPointer;
    };
    if out.is_null() {
        return PpcStatus::NullPointer;
    }
    unsafe { *out = matcher::count_copies(&sigma.inner, &pattern.inner) };
    PpcStatus::Ok
}

/// Whether the partition contains the pattern.
///
/// # Safety
/// `sigma` and `pattern` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ppc_contains(
    sigma: *const PpcPartition,
    pattern: *const PpcPattern,
    out: *mut bool,
) -> PpcStatus {
    let (Some(sigma), Some(pattern)) = (unsafe { sigma.as_ref() }, unsafe { pattern.as_ref() })
    else {
        return PpcStatus::NullPointer;
    };
    if out.is_null() {
        return PpcStatus::NullPointer;
    }
    unsafe { *out = matcher::contains(&sigma.inner, &pattern.inner) };
    PpcStatus::Ok
}

/// A named statistic of the partition; `name` is e.g. `"inv"`, `"maj"`,
/// `"cr"`, `"cr_3"`.
///
/// # Safety
/// `sigma` must be a live handle, `name` a valid NUL-terminated string, and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ppc_stat(
    sigma: *const PpcPartition,
    name: *const c_char,
    out: *mut u64,
) -> PpcStatus {
    let Some(sigma) = (unsafe { sigma.as_ref() }) else {
        return PpcStatus::NullPointer;
    };
    if out.is_null() {
        return PpcStatus::NullPointer;
    }
    let name = match unsafe { read_str(name) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    let Ok(stat) = name.parse::<Statistic>() else {
        return PpcStatus::InvalidArgument;
    };
    match compute_stat(&sigma.inner, stat) {
        Ok(v) => {
            unsafe { *out = v };
            PpcStatus::Ok
        }
        Err(_) => PpcStatus::InvalidArgument,
    }
}

fn parse_pattern_list(text: &str) -> Result<Vec<GenPattern>, PpcStatus> {
    let mut out = Vec::new();
    for piece in text.split(';') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        out.push(piece.parse().map_err(|_| PpcStatus::ParseError)?);
    }
    Ok(out)
}

/// Number of partitions of `[n]` avoiding every pattern in the
/// `';'`-separated list, as a decimal string (release with
/// [`ppc_string_free`]).
///
/// # Safety
/// `patterns` must be a valid NUL-terminated string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn ppc_count_avoiders(
    n: u32,
    patterns: *const c_char,
    out: *mut *mut c_char,
) -> PpcStatus {
    if out.is_null() {
        return PpcStatus::NullPointer;
    }
    let text = match unsafe { read_str(patterns) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    let list = match parse_pattern_list(text) {
        Ok(l) => l,
        Err(s) => return s,
    };
    let count = count_avoiders(n as usize, &list);
    unsafe { *out = give_string(count.to_string()) };
    PpcStatus::Ok
}

/// Even and odd avoider counts, as decimal strings.
///
/// # Safety
/// `patterns` must be a valid NUL-terminated string; `out_even` and
/// `out_odd` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ppc_parity_counts(
    n: u32,
    patterns: *const c_char,
    out_even: *mut *mut c_char,
    out_odd: *mut *mut c_char,
) -> PpcStatus {
    if out_even.is_null() || out_odd.is_null() {
        return PpcStatus::NullPointer;
    }
    let text = match unsafe { read_str(patterns) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    let list = match parse_pattern_list(text) {
        Ok(l) => l,
        Err(s) => return s,
    };
    let pc = parity_counts(n as usize, &list);
    unsafe {
        *out_even = give_string(pc.even.to_string());
        *out_odd = give_string(pc.odd.to_string());
    }
    PpcStatus::Ok
}

/// The counting sequences for the barred pattern classes: `kind` is `'a'`
/// (avoiders of `1,2|3`) or `'b'` (avoiders of `{123, 1,2|3}`); decimal
/// string out.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ppc_gen_sequence(
    kind: c_char,
    n: u32,
    out: *mut *mut c_char,
) -> PpcStatus {
    if out.is_null() {
        return PpcStatus::NullPointer;
    }
    let kind = match kind as u8 {
        b'a' => GenKind::A,
        b'b' => GenKind::B,
        _ => return PpcStatus::InvalidArgument,
    };
    let v = gen_sequence(kind, n as usize);
    unsafe { *out = give_string(v.to_string()) };
    PpcStatus::Ok
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be a string returned by this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn ppc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
