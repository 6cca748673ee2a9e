//! C ABI for the symtile library.
//!
//! Conventions:
//! - Sets travel as opaque `SymtilePointSet` handles; free them with
//!   [`symtile_point_set_free`]. Strings returned through `char**` out
//!   parameters are NUL-terminated, owned by the caller, and freed with
//!   [`symtile_string_free`].
//! - Every fallible call returns a [`SymtileStatus`]; on anything but `Ok`
//!   the out parameters are untouched and [`symtile_last_error`] holds a
//!   message for the calling thread (valid until that thread's next failure).
//! - Internal panics are caught and surface as `InternalError`; they never
//!   unwind across the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use symtile::group::{PointSet, Subgroup};
use symtile::render::render_points;
use symtile::report::SearchConfig;
use symtile::search::{
    search_counterexamples_cyclic, verify_counting_lemma, verify_lemma_diff, verify_lemma_self,
    verify_theorem_main, TheoremCase,
};
use symtile::setfile::{format_set, parse_set};
use symtile::setops::{difference_set, is_spectral_pair, is_tiling_pair};
use symtile::transform::{zero_set, Form};

/// Result of every fallible call in this API.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymtileStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    ModulusMismatch = 5,
    EmptySet = 6,
    NotASubgroup = 7,
    BoundExceeded = 8,
    InternalError = 9,
}

/// Which pairing feeds the transform.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymtileForm {
    Euclidean = 0,
    Symplectic = 1,
}

impl From<SymtileForm> for Form {
    fn from(form: SymtileForm) -> Form {
        match form {
            SymtileForm::Euclidean => Form::Euclidean,
            SymtileForm::Symplectic => Form::Symplectic,
        }
    }
}

/// Options for [`symtile_verify`]. `sampled = false` runs exhaustively and
/// ignores `samples` and `seed`; `workers = 0` uses all cores.
#[repr(C)]
#[derive(Clone, Copy)]
pub struct SymtileVerifyOptions {
    pub sampled: bool,
    pub samples: u64,
    pub seed: u64,
    pub workers: u32,
}

/// Opaque handle to a subset of Z_n x Z_n.
pub struct SymtilePointSet {
    inner: PointSet,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &symtile::Error) -> SymtileStatus {
    use symtile::Error::*;
    match err {
        ModulusMismatch { .. } => SymtileStatus::ModulusMismatch,
        ModulusTooLarge { .. } | SearchSpaceTooLarge { .. } => SymtileStatus::BoundExceeded,
        EmptySet { .. } => SymtileStatus::EmptySet,
        NotASubgroup { .. } => SymtileStatus::NotASubgroup,
        Parse { .. } => SymtileStatus::ParseError,
        NotSymplectic { .. } | WrongForm { .. } | InvalidArgument(_) => {
            SymtileStatus::InvalidArgument
        }
    }
}

fn fail(err: &symtile::Error) -> SymtileStatus {
    set_error(&err.to_string());
    status_of(err)
}

/// Runs `f` with panics converted to `InternalError`.
fn guarded(f: impl FnOnce() -> SymtileStatus) -> SymtileStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic in symtile".into());
            set_error(&message);
            SymtileStatus::InternalError
        }
    }
}

/// # Safety
/// `ptr` must be null or a valid pointer to UTF-8 C string data.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, SymtileStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(SymtileStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        SymtileStatus::InvalidUtf8
    })
}

unsafe fn read_set<'a>(ptr: *const SymtilePointSet) -> Result<&'a PointSet, SymtileStatus> {
    if ptr.is_null() {
        set_error("null point-set handle");
        return Err(SymtileStatus::NullPointer);
    }
    Ok(&(*ptr).inner)
}

fn write_set(out: *mut *mut SymtilePointSet, set: PointSet) -> SymtileStatus {
    if out.is_null() {
        set_error("null out parameter");
        return SymtileStatus::NullPointer;
    }
    let handle = Box::new(SymtilePointSet { inner: set });
    unsafe { *out = Box::into_raw(handle) };
    SymtileStatus::Ok
}

fn write_string(out: *mut *mut c_char, text: String) -> SymtileStatus {
    if out.is_null() {
        set_error("null out parameter");
        return SymtileStatus::NullPointer;
    }
    match CString::new(text) {
        Ok(cstring) => {
            unsafe { *out = cstring.into_raw() };
            SymtileStatus::Ok
        }
        Err(_) => {
            set_error("output contained an interior NUL byte");
            SymtileStatus::InternalError
        }
    }
}

/// Message describing this thread's most recent failure. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn symtile_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses set-file text (`# comments`, `n <modulus>`, one `x1 x2` pair per
/// line) into a new handle.
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn symtile_point_set_parse(
    text: *const c_char,
    out: *mut *mut SymtilePointSet,
) -> SymtileStatus {
    guarded(|| {
        let text = match read_str(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_set(text) {
            Ok(set) => write_set(out, set),
            Err(e) => fail(&e),
        }
    })
}

/// Builds a set from `pair_count` coordinate pairs laid out as
/// `x1, y1, x2, y2, ...`; coordinates are reduced mod `n`, duplicates merge.
///
/// # Safety
/// `coords` must point to `2 * pair_count` readable `u32`s; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn symtile_point_set_new(
    n: u32,
    coords: *const u32,
    pair_count: usize,
    out: *mut *mut SymtilePointSet,
) -> SymtileStatus {
    guarded(|| {
        if n < 2 {
            set_error("modulus must be at least 2");
            return SymtileStatus::InvalidArgument;
        }
        if coords.is_null() && pair_count > 0 {
            set_error("null coordinate buffer");
            return SymtileStatus::NullPointer;
        }
        let pairs = (0..pair_count).map(|i| {
            let x1 = unsafe { *coords.add(2 * i) };
            let x2 = unsafe { *coords.add(2 * i + 1) };
            (i64::from(x1), i64::from(x2))
        });
        write_set(out, PointSet::from_pairs(n, pairs))
    })
}

/// Frees a handle returned by this API. Null is ignored.
///
/// # Safety
/// `set` must be null or a pointer previously returned by this API and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn symtile_point_set_free(set: *mut SymtilePointSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Frees a string returned through a `char**` out parameter. Null is ignored.
///
/// # Safety
/// `text` must be null or a string previously returned by this API.
#[no_mangle]
pub unsafe extern "C" fn symtile_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Ambient modulus of the set; 0 if the handle is null.
///
/// # Safety
/// `set` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn symtile_point_set_modulus(set: *const SymtilePointSet) -> u32 {
    read_set(set).map_or(0, PointSet::modulus)
}

/// Number of points in the set; 0 if the handle is null.
///
/// # Safety
/// `set` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn symtile_point_set_len(set: *const SymtilePointSet) -> usize {
    read_set(set).map_or(0, PointSet::len)
}

/// Copies up to `max_pairs` coordinate pairs into `coords` (layout
/// `x1, y1, x2, y2, ...`, canonical order) and returns the number written.
///
/// # Safety
/// `coords` must have room for `2 * max_pairs` `u32`s.
#[no_mangle]
pub unsafe extern "C" fn symtile_point_set_coords(
    set: *const SymtilePointSet,
    coords: *mut u32,
    max_pairs: usize,
) -> usize {
    let Ok(set) = read_set(set) else { return 0 };
    if coords.is_null() {
        return 0;
    }
    let mut written = 0;
    for e in set.iter().take(max_pairs) {
        unsafe {
            *coords.add(2 * written) = e.x1();
            *coords.add(2 * written + 1) = e.x2();
        }
        written += 1;
    }
    written
}

/// Canonical set-file text for the set.
///
/// # Safety
/// `set` must be a valid handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn symtile_point_set_format(
    set: *const SymtilePointSet,
    out: *mut *mut c_char,
) -> SymtileStatus {
    guarded(|| match read_set(set) {
        Ok(set) => write_string(out, format_set(set)),
        Err(status) => status,
    })
}

/// Character-grid rendering with the origin at the bottom left.
///
/// # Safety
/// `set` must be a valid handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn symtile_point_set_render(
    set: *const SymtilePointSet,
    out: *mut *mut c_char,
) -> SymtileStatus {
    guarded(|| {
        let set = match read_set(set) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match render_points(set, "point set") {
            Ok(grid) => write_string(out, grid),
            Err(e) => fail(&e),
        }
    })
}

/// The difference set of `a`.
///
/// # Safety
/// `a` must be a valid handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn symtile_difference_set(
    a: *const SymtilePointSet,
    out: *mut *mut SymtilePointSet,
) -> SymtileStatus {
    guarded(|| match read_set(a) {
        Ok(a) => write_set(out, difference_set(a)),
        Err(status) => status,
    })
}

/// Zero set of the transform of `1_a`; `a` must be nonempty.
///
/// # Safety
/// `a` must be a valid handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn symtile_zero_set(
    a: *const SymtilePointSet,
    form: SymtileForm,
    out: *mut *mut SymtilePointSet,
) -> SymtileStatus {
    guarded(|| {
        let a = match read_set(a) {
            Ok(a) => a,
            Err(status) => return status,
        };
        match zero_set(a, form.into()) {
            Ok(z) => write_set(out, z.points().clone()),
            Err(e) => fail(&e),
        }
    })
}

/// Symplectic orthogonal of the subgroup carried by `h`; fails with
/// `NotASubgroup` when `h` is not closed.
///
/// # Safety
/// `h` must be a valid handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn symtile_orthogonal(
    h: *const SymtilePointSet,
    out: *mut *mut SymtilePointSet,
) -> SymtileStatus {
    guarded(|| {
        let h = match read_set(h) {
            Ok(h) => h,
            Err(status) => return status,
        };
        match Subgroup::from_carrier(h.clone()) {
            Ok(subgroup) => write_set(out, subgroup.symplectic_orthogonal().carrier().clone()),
            Err(e) => fail(&e),
        }
    })
}

unsafe fn check_pair(
    verdict: Result<symtile::PairVerdict, symtile::Error>,
    out_holds: *mut bool,
    out_json: *mut *mut c_char,
) -> SymtileStatus {
    if out_holds.is_null() {
        set_error("null out parameter");
        return SymtileStatus::NullPointer;
    }
    match verdict {
        Ok(verdict) => {
            *out_holds = verdict.holds;
            if out_json.is_null() {
                SymtileStatus::Ok
            } else {
                write_string(out_json, verdict.to_json())
            }
        }
        Err(e) => fail(&e),
    }
}

/// Tiling predicate with its cross-checked characterizations. `out_json` may
/// be null when only the verdict is wanted.
///
/// # Safety
/// `a` and `b` must be valid handles; `out_holds` must be valid.
#[no_mangle]
pub unsafe extern "C" fn symtile_check_tiling(
    a: *const SymtilePointSet,
    b: *const SymtilePointSet,
    out_holds: *mut bool,
    out_json: *mut *mut c_char,
) -> SymtileStatus {
    guarded(|| {
        let (a, b) = match (read_set(a), read_set(b)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        check_pair(is_tiling_pair(a, b), out_holds, out_json)
    })
}

/// Spectral predicate; same contract as [`symtile_check_tiling`].
///
/// # Safety
/// `a` and `s` must be valid handles; `out_holds` must be valid.
#[no_mangle]
pub unsafe extern "C" fn symtile_check_spectral(
    a: *const SymtilePointSet,
    s: *const SymtilePointSet,
    form: SymtileForm,
    out_holds: *mut bool,
    out_json: *mut *mut c_char,
) -> SymtileStatus {
    guarded(|| {
        let (a, s) = match (read_set(a), read_set(s)) {
            (Ok(a), Ok(s)) => (a, s),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        check_pair(is_spectral_pair(a, s, form.into()), out_holds, out_json)
    })
}

/// Runs a verification suite. `suite` is one of `counting`, `self`, `diff`,
/// `main-i`, `main-ii`, `main-iii`, `cyclic-counterexample`; `parameter` is
/// the modulus n or the prime p that suite expects. `opts` may be null for
/// exhaustive defaults. `out_json` (optional) receives the full report.
///
/// # Safety
/// Pointer arguments must be null or valid as documented.
#[no_mangle]
pub unsafe extern "C" fn symtile_verify(
    suite: *const c_char,
    parameter: u32,
    opts: *const SymtileVerifyOptions,
    out_pass: *mut bool,
    out_json: *mut *mut c_char,
) -> SymtileStatus {
    guarded(|| {
        let suite = match read_str(suite) {
            Ok(s) => s,
            Err(status) => return status,
        };
        if out_pass.is_null() {
            set_error("null out parameter");
            return SymtileStatus::NullPointer;
        }
        let config = if opts.is_null() {
            SearchConfig::exhaustive()
        } else {
            let opts = &*opts;
            let mut config = if opts.sampled {
                SearchConfig::sampled(opts.samples, opts.seed)
            } else {
                SearchConfig::exhaustive()
            };
            config.workers = opts.workers as usize;
            config
        };
        let report = match suite {
            "counting" => verify_counting_lemma(parameter, config),
            "self" => verify_lemma_self(parameter, config),
            "diff" => verify_lemma_diff(parameter, config),
            "main-i" => verify_theorem_main(TheoremCase::Lagrangian, parameter, config),
            "main-ii" => verify_theorem_main(TheoremCase::PrimeGroup, parameter, config),
            "main-iii" => verify_theorem_main(TheoremCase::PrimeSquared, parameter, config),
            "cyclic-counterexample" => search_counterexamples_cyclic(parameter, config),
            other => {
                set_error(&format!("unknown suite {other:?}"));
                return SymtileStatus::InvalidArgument;
            }
        };
        match report {
            Ok(report) => {
                *out_pass = report.pass();
                if out_json.is_null() {
                    SymtileStatus::Ok
                } else {
                    write_string(out_json, report.to_json())
                }
            }
            Err(e) => fail(&e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn null_arguments_are_rejected() {
        let status = unsafe { symtile_point_set_parse(ptr::null(), ptr::null_mut()) };
        assert_eq!(status, SymtileStatus::NullPointer);
    }
}
