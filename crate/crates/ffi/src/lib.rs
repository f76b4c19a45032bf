//! C ABI over `hopfgal`. Objects are opaque handles released by their
//! `*_free` function; strings returned to the caller are released with
//! [`hg_string_free`]. Every call returns an [`HgStatus`]; on failure the
//! message is available from [`hg_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use hopfgal::actions::{ExtensionReport, ModuleAlgebra};
use hopfgal::hopf::HopfAlgebra;
use hopfgal::io::{self, Extension};
use hopfgal::Error;

/// Result codes. The first four match the exit codes of the command-line
/// tool.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HgStatus {
    Ok = 0,
    /// A precondition or verification failed.
    Mismatch = 1,
    /// Malformed or inconsistent input.
    InvalidInput = 2,
    /// A resource bound was exceeded.
    Resource = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

/// A verified finite-dimensional Hopf algebra.
pub struct HgHopf {
    inner: HopfAlgebra,
}

/// An algebra with an action or coaction of a Hopf algebra.
pub struct HgExtension {
    inner: Extension,
}

/// Verdicts of the extension classifier over a field.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HgExtensionSummary {
    pub dim_s: usize,
    pub dim_h: usize,
    pub invariants_dim: usize,
    pub homology_dim: usize,
    pub faithful: bool,
    pub tame: bool,
    pub hopf_galois: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HgStatus {
    match hopfgal::cli::exit_code(e) {
        1 => HgStatus::Mismatch,
        3 => HgStatus::Resource,
        _ => HgStatus::InvalidInput,
    }
}

fn fail(status: HgStatus, msg: &str) -> HgStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), HgStatus>) -> HgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HgStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(HgStatus::Panic, "internal panic"),
    }
}

fn lift<T>(r: hopfgal::Result<T>) -> Result<T, HgStatus> {
    r.map_err(|e| fail(status_of(&e), &e.to_string()))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, HgStatus> {
    if s.is_null() {
        return Err(fail(HgStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(HgStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, HgStatus> {
    p.as_mut()
        .ok_or_else(|| fail(HgStatus::NullPointer, "null output pointer"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, HgStatus> {
    p.as_ref()
        .ok_or_else(|| fail(HgStatus::NullPointer, "null handle"))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("no interior nul")
        .into_raw()
}

/// The message of the last failed call on this thread, or null. Owned by
/// the library and valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn hg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads and verifies a Hopf algebra file.
///
/// # Safety
/// `path` must be a nul-terminated string and `out_hopf` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_hopf_load(path: *const c_char, out_hopf: *mut *mut HgHopf) -> HgStatus {
    guard(|| {
        let slot = out(out_hopf)?;
        let path = text(path)?;
        let h = lift(io::load_hopf_unverified(Path::new(path)).and_then(HopfAlgebra::verified))?;
        *slot = Box::into_raw(Box::new(HgHopf { inner: h }));
        Ok(())
    })
}

/// Parses and verifies a Hopf algebra from JSON text.
///
/// # Safety
/// `json` must be a nul-terminated string and `out_hopf` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_hopf_parse(
    json: *const c_char,
    out_hopf: *mut *mut HgHopf,
) -> HgStatus {
    guard(|| {
        let slot = out(out_hopf)?;
        let h = lift(io::hopf_from_str(text(json)?))?;
        *slot = Box::into_raw(Box::new(HgHopf { inner: h }));
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hg_hopf_free(h: *mut HgHopf) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `dim` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_hopf_dim(h: *const HgHopf, dim: *mut usize) -> HgStatus {
    guard(|| {
        *out(dim)? = handle(h)?.inner.dim();
        Ok(())
    })
}

/// The dual Hopf algebra as a new handle.
///
/// # Safety
/// `h` must be a live handle and `out_dual` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_hopf_dual(h: *const HgHopf, out_dual: *mut *mut HgHopf) -> HgStatus {
    guard(|| {
        let slot = out(out_dual)?;
        let d = lift(handle(h)?.inner.dual())?;
        *slot = Box::into_raw(Box::new(HgHopf { inner: d }));
        Ok(())
    })
}

/// A generator of the left integrals, formatted in the basis labels.
///
/// # Safety
/// `h` must be a live handle and `integral` a valid pointer; the string
/// is released with `hg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn hg_hopf_left_integral(
    h: *const HgHopf,
    integral: *mut *mut c_char,
) -> HgStatus {
    guard(|| {
        let slot = out(integral)?;
        let h = &handle(h)?.inner;
        let space = lift(h.left_integrals())?;
        *slot = owned_string(h.format_vector(space.generator()));
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle and `semisimple` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_hopf_is_semisimple(
    h: *const HgHopf,
    semisimple: *mut bool,
) -> HgStatus {
    guard(|| {
        let slot = out(semisimple)?;
        *slot = lift(handle(h)?.inner.is_semisimple())?;
        Ok(())
    })
}

/// Loads an extension file.
///
/// # Safety
/// `path` must be a nul-terminated string and `out_ext` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_extension_load(
    path: *const c_char,
    out_ext: *mut *mut HgExtension,
) -> HgStatus {
    guard(|| {
        let slot = out(out_ext)?;
        let e = lift(io::load_extension(Path::new(text(path)?)))?;
        *slot = Box::into_raw(Box::new(HgExtension { inner: e }));
        Ok(())
    })
}

/// Parses an extension from JSON text.
///
/// # Safety
/// `json` must be a nul-terminated string and `out_ext` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_extension_parse(
    json: *const c_char,
    out_ext: *mut *mut HgExtension,
) -> HgStatus {
    guard(|| {
        let slot = out(out_ext)?;
        let e = lift(io::extension_from_str(text(json)?))?;
        *slot = Box::into_raw(Box::new(HgExtension { inner: e }));
        Ok(())
    })
}

/// # Safety
/// `e` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hg_extension_free(e: *mut HgExtension) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

unsafe fn classify(e: *const HgExtension) -> Result<ExtensionReport, HgStatus> {
    let ma: &ModuleAlgebra = lift(handle(e)?.inner.module_algebra())?;
    lift(ma.classify())
}

/// Classifies an extension given by an action.
///
/// # Safety
/// `e` must be a live handle and `summary` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_extension_classify(
    e: *const HgExtension,
    summary: *mut HgExtensionSummary,
) -> HgStatus {
    guard(|| {
        let slot = out(summary)?;
        let r = classify(e)?;
        *slot = HgExtensionSummary {
            dim_s: r.dim_s,
            dim_h: r.dim_h,
            invariants_dim: r.invariants_dim,
            homology_dim: r.homology_dim,
            faithful: r.faithful,
            tame: r.tame,
            hopf_galois: r.hopf_galois,
        };
        Ok(())
    })
}

/// The classification as a string such as `tame and Hopf-Galois`.
///
/// # Safety
/// `e` must be a live handle and `label` a valid pointer; the string is
/// released with `hg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn hg_extension_classification(
    e: *const HgExtension,
    label: *mut *mut c_char,
) -> HgStatus {
    guard(|| {
        let slot = out(label)?;
        *slot = owned_string(classify(e)?.classification.as_str().to_owned());
        Ok(())
    })
}

/// Runs the command-line tool on `argv` (without the program name) and
/// returns the rendered report and its exit code. The call itself
/// succeeds whenever the arguments are readable.
///
/// # Safety
/// `argv` must point to `argc` nul-terminated strings; `report` and
/// `exit_code` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hg_cli_run(
    argc: c_int,
    argv: *const *const c_char,
    report: *mut *mut c_char,
    exit_code: *mut c_int,
) -> HgStatus {
    guard(|| {
        let (slot, code) = (out(report)?, out(exit_code)?);
        let n = usize::try_from(argc).map_err(|_| fail(HgStatus::InvalidInput, "negative argc"))?;
        if n > 0 && argv.is_null() {
            return Err(fail(HgStatus::NullPointer, "null argv"));
        }
        let mut args = vec!["hopfgal".to_owned()];
        for i in 0..n {
            args.push(text(*argv.add(i))?.to_owned());
        }
        let (rendered, c) = hopfgal::cli::run(args);
        *slot = owned_string(rendered);
        *code = c;
        Ok(())
    })
}
