//! C ABI for hyperforge.
//!
//! Objects cross the boundary as opaque handles ([`HfGeometry`],
//! [`HfGroup`]) created by `*_new`/constructor functions and released with
//! the matching `*_free`. Every fallible function returns an [`HfStatus`];
//! results are written through out-pointers, which are left untouched on
//! failure. A human-readable description of the last failure on the calling
//! thread is available from [`hf_last_error`]. Strings returned by the
//! library are NUL-terminated, owned by the caller and released with
//! [`hf_string_free`]. Panics never unwind into the caller; they surface as
//! [`HfStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hyperforge::constructions::{check_b1, check_b2, halving_geometry};
use hyperforge::group::{coset_geometry, halving_group, regular_group};
use hyperforge::toroid::{build_cubic_toroid, verify_family, ToroidParams};
use hyperforge::{Error, IncidenceGeometry, Limits, PermGroup, Presentation};

/// Result codes of every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HfStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8, or a number was out of range.
    InvalidArgument = 2,
    /// The geometry violates a structural invariant.
    InvalidGeometry = 3,
    /// The presentation is malformed.
    InvalidPresentation = 4,
    /// Coset enumeration exceeded its ceiling.
    Overflow = 5,
    /// A combinatorial search exceeded its ceiling.
    SizeLimitExceeded = 6,
    /// The pair of types is not a leaf.
    NotALeaf = 7,
    /// A bipartite-only construction was applied to a non-bipartite graph.
    NotBipartite = 8,
    /// A precondition of a construction does not hold.
    PreconditionFailed = 9,
    /// The parameter combination is not supported.
    UnsupportedCase = 10,
    /// A computed object violates a property it is known to have.
    PropertyViolation = 11,
    /// An input/output or JSON error.
    Io = 12,
    /// The library panicked; this is a defect.
    Panic = 13,
}

/// Opaque incidence geometry.
pub struct HfGeometry(IncidenceGeometry);

/// Opaque permutation group in its regular representation.
pub struct HfGroup(PermGroup);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> HfStatus {
    match e {
        Error::InvalidGeometry(_) => HfStatus::InvalidGeometry,
        Error::InvalidPresentation(_) => HfStatus::InvalidPresentation,
        Error::Overflow { .. } => HfStatus::Overflow,
        Error::SizeLimitExceeded { .. } => HfStatus::SizeLimitExceeded,
        Error::NotALeaf(..) => HfStatus::NotALeaf,
        Error::NotBipartite => HfStatus::NotBipartite,
        Error::PreconditionFailed(_) => HfStatus::PreconditionFailed,
        Error::UnsupportedCase(_) => HfStatus::UnsupportedCase,
        Error::PropertyViolation(_) => HfStatus::PropertyViolation,
        Error::Io(_) | Error::Json(_) => HfStatus::Io,
    }
}

/// Internal failure: a status plus its message.
struct Failure(HfStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            HfStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            HfStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(HfStatus::NullPointer, "null pointer argument".into())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|e| Failure(HfStatus::InvalidArgument, format!("invalid UTF-8: {e}")))
}

unsafe fn obj<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

fn limits(max_cosets: usize) -> Limits {
    let mut l = Limits::default();
    if max_cosets > 0 {
        l.max_cosets = max_cosets;
    }
    l
}

/// Message describing the last failure on this thread (empty after a
/// success). The pointer stays valid until the next library call on this
/// thread.
#[no_mangle]
pub extern "C" fn hf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library. Null is accepted.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a geometry from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_geometry_from_json(json: *const c_char, out: *mut *mut HfGeometry) -> HfStatus {
    guard(|| {
        let g = IncidenceGeometry::from_json(str_arg(json)?)?;
        put(out, Box::into_raw(Box::new(HfGeometry(g))))
    })
}

/// Writes the canonical JSON form of a geometry; free it with
/// [`hf_string_free`].
///
/// # Safety
/// `g` must be a live geometry handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_geometry_to_json(g: *const HfGeometry, out: *mut *mut c_char) -> HfStatus {
    guard(|| {
        let g = obj(g)?;
        put(out, owned_string(g.0.to_json()))
    })
}

/// Releases a geometry. Null is accepted.
///
/// # Safety
/// `g` must be null or a live geometry handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hf_geometry_free(g: *mut HfGeometry) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Rank (number of types) of a geometry.
///
/// # Safety
/// `g` must be a live geometry handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_geometry_rank(g: *const HfGeometry, out: *mut usize) -> HfStatus {
    guard(|| put(out, obj(g)?.0.rank()))
}

/// Number of elements of type `t`.
///
/// # Safety
/// `g` must be a live geometry handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_geometry_type_count(g: *const HfGeometry, t: usize, out: *mut usize) -> HfStatus {
    guard(|| {
        let g = obj(g)?;
        let counts = g.0.type_counts();
        let c = *counts.get(t).ok_or_else(|| Failure(HfStatus::InvalidArgument, format!("no type {t}")))?;
        put(out, c)
    })
}

/// Flag-based properties of a geometry, scanned over at most `max_flags`
/// flags (0 for the default ceiling).
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HfFlagReport {
    /// Every maximal flag is a chamber.
    pub is_geometry: bool,
    /// Every residue of corank at least two is connected.
    pub residually_connected: bool,
    /// Every corank-one residue has exactly two elements.
    pub thin: bool,
    /// Every corank-one residue has at least two elements.
    pub firm: bool,
}

/// Computes the flag report of a geometry.
///
/// # Safety
/// `g` must be a live geometry handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_geometry_flag_report(
    g: *const HfGeometry,
    max_flags: usize,
    out: *mut HfFlagReport,
) -> HfStatus {
    guard(|| {
        let g = obj(g)?;
        let limit = if max_flags == 0 { Limits::default().max_flags } else { max_flags };
        let r = g.0.flag_report(limit)?;
        put(
            out,
            HfFlagReport {
                is_geometry: r.is_geometry,
                residually_connected: r.residually_connected,
                thin: r.thin,
                firm: r.firm,
            },
        )
    })
}

/// Evaluates the leaf conditions B1 and B2 at the leaf `(i, j)`.
///
/// # Safety
/// `g` must be a live geometry handle; `b1` and `b2` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_geometry_leaf_conditions(
    g: *const HfGeometry,
    i: usize,
    j: usize,
    b1: *mut bool,
    b2: *mut bool,
) -> HfStatus {
    guard(|| {
        let g = obj(g)?;
        if b1.is_null() || b2.is_null() {
            return Err(null());
        }
        let v1 = check_b1(&g.0, (i, j))?;
        let v2 = check_b2(&g.0, (i, j))?;
        put(b1, v1)?;
        put(b2, v2)
    })
}

/// Applies the halving construction at the leaf `(i, j)`; `force` skips the
/// precondition checks.
///
/// # Safety
/// `g` must be a live geometry handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_geometry_halve(
    g: *const HfGeometry,
    i: usize,
    j: usize,
    force: bool,
    out: *mut *mut HfGeometry,
) -> HfStatus {
    guard(|| {
        let h = halving_geometry(&obj(g)?.0, (i, j), force)?;
        put(out, Box::into_raw(Box::new(HfGeometry(h))))
    })
}

/// Whether two geometries are isomorphic by a type-preserving map.
///
/// # Safety
/// `a` and `b` must be live geometry handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_geometry_isomorphic(
    a: *const HfGeometry,
    b: *const HfGeometry,
    out: *mut bool,
) -> HfStatus {
    guard(|| {
        let v = hyperforge::incidence::isomorphic(&obj(a)?.0, &obj(b)?.0)?;
        put(out, v)
    })
}

/// Enumerates a presented group (JSON `{"ngens":…,"relators":…}`) in its
/// regular representation, with at most `max_cosets` cosets (0 for the
/// default ceiling).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_group_from_presentation(
    json: *const c_char,
    max_cosets: usize,
    out: *mut *mut HfGroup,
) -> HfStatus {
    guard(|| {
        let p = Presentation::from_json(str_arg(json)?)?;
        let g = regular_group(&p, &limits(max_cosets))?;
        put(out, Box::into_raw(Box::new(HfGroup(g))))
    })
}

/// Builds the automorphism group of the cubic toroid with parameters
/// `(n, k, s)`, verifying that it is a regular polytope.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_group_cubic_toroid(
    n: usize,
    k: usize,
    s: usize,
    max_cosets: usize,
    out: *mut *mut HfGroup,
) -> HfStatus {
    guard(|| {
        let p = ToroidParams::new(n, k, s)?;
        let t = build_cubic_toroid(&p, &limits(max_cosets))?;
        put(out, Box::into_raw(Box::new(HfGroup(t.group))))
    })
}

/// Releases a group. Null is accepted.
///
/// # Safety
/// `g` must be null or a live group handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hf_group_free(g: *mut HfGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Order of a group.
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_group_order(g: *const HfGroup, out: *mut u64) -> HfStatus {
    guard(|| {
        let o = obj(g)?.0.order();
        let o = u64::try_from(o).map_err(|_| Failure(HfStatus::InvalidArgument, "order exceeds 64 bits".into()))?;
        put(out, o)
    })
}

/// The halving subgroup at `(i, j)`: generator `i` replaced by
/// `g_i g_j g_i`.
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_group_halve(g: *const HfGroup, i: usize, j: usize, out: *mut *mut HfGroup) -> HfStatus {
    guard(|| {
        let h = halving_group(&obj(g)?.0, (i, j))?;
        put(out, Box::into_raw(Box::new(HfGroup(h))))
    })
}

/// The coset geometry of the maximal parabolic subgroups of a group.
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_group_coset_geometry(g: *const HfGroup, out: *mut *mut HfGeometry) -> HfStatus {
    guard(|| {
        let c = coset_geometry(&obj(g)?.0)?;
        put(out, Box::into_raw(Box::new(HfGeometry(c.geometry))))
    })
}

/// Runs the family verification for `(n, k, s)` up to `depth`; writes the
/// verdict and the JSON report (free with [`hf_string_free`]). `report` may
/// be null when the report is not wanted.
///
/// # Safety
/// `passed` must be writable; `report` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn hf_verify_family(
    n: usize,
    k: usize,
    s: usize,
    depth: usize,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> HfStatus {
    guard(|| {
        if passed.is_null() {
            return Err(null());
        }
        if depth > 2 {
            return Err(Failure(HfStatus::InvalidArgument, format!("depth {depth} is above 2")));
        }
        let r = verify_family(&ToroidParams::new(n, k, s)?, depth, &Limits::default())?;
        put(passed, r.passed)?;
        if !report.is_null() {
            put(report, owned_string(r.to_json()))?;
        }
        Ok(())
    })
}
