//! C ABI for the `symquot` engine.
//!
//! Conventions:
//!
//! - Every fallible function returns an [`SqStatus`] and writes its result
//!   through an out-pointer. On failure the out-pointer is left untouched and
//!   a message is available from [`sq_last_error_message`] on the same thread.
//! - Classes and polynomials are opaque handles ([`SqClass`],
//!   [`SqPoincare`]) owned by the caller and released with the matching
//!   `*_free` function. Passing `NULL` to a `*_free` function is a no-op.
//! - Strings returned by the library are NUL-terminated UTF-8 and must be
//!   released with [`sq_string_free`].
//! - Panics never cross the boundary; they are reported as
//!   [`SqStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use symquot::brauer::verify_brauer_ranks;
use symquot::class::TermRecord;
use symquot::quot::{betti_quot, poincare_quot, PoincarePolynomial};
use symquot::sym::{betti_sym_closed, sym_betti_sequence};
use symquot::{diagonal_class, CohomClass, Error, GenusContext};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqStatus {
    Ok = 0,
    /// A required pointer argument was `NULL`.
    NullPointer = 1,
    /// An argument is outside its documented range or two operands disagree
    /// on genus or factor count.
    InvalidArgument = 2,
    /// The computation was refused because it would be too large.
    ResourceLimit = 3,
    /// A result does not fit the C type it must be returned in.
    Overflow = 4,
    /// A change-of-basis computation had no integral solution.
    ChangeOfBasis = 5,
    /// A string argument was not valid UTF-8 or not valid JSON.
    Parse = 6,
    /// An internal consistency check failed.
    Internal = 7,
    /// A panic was caught at the boundary.
    Panic = 8,
}

/// Opaque handle to an integral cohomology class on `X^n`.
pub struct SqClass(CohomClass);

/// Opaque handle to a Poincaré polynomial `b_0 + b_1 t + … + b_{2N} t^{2N}`.
pub struct SqPoincare(PoincarePolynomial);

/// Ranks of the Brauer-group comparison for `Pic`, `Sym^d` and `Quot`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SqBrauerRanks {
    pub rank_pic: u64,
    pub rank_sym: u64,
    pub rank_quot: u64,
    /// Non-zero when the three ranks agree.
    pub pass: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(message).unwrap_or_default());
}

fn status_of(err: &Error) -> SqStatus {
    match err {
        Error::DimensionMismatch { .. }
        | Error::GenusMismatch { .. }
        | Error::IndexOutOfRange { .. }
        | Error::Precondition(_) => SqStatus::InvalidArgument,
        Error::ResourceLimit(_) => SqStatus::ResourceLimit,
        Error::Overflow(_) => SqStatus::Overflow,
        Error::ChangeOfBasis(_) => SqStatus::ChangeOfBasis,
        Error::Internal(_) => SqStatus::Internal,
    }
}

struct Failure(SqStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(status_of(&err), err.to_string())
    }
}

/// Run `body`, translate errors and panics into a status, and store the
/// message for [`sq_last_error_message`].
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SqStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            SqStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(format!("panic: {message}"));
            SqStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(SqStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn usize_arg(value: u32) -> usize {
    value as usize
}

unsafe fn emit_class(out: *mut *mut SqClass, class: CohomClass) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(SqClass(class))), "out")
}

unsafe fn emit_poincare(out: *mut *mut SqPoincare, p: PoincarePolynomial) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(SqPoincare(p))), "out")
}

/// Message describing the most recent failure on the calling thread, or an
/// empty string after a success. The pointer stays valid until the next call
/// into the library on this thread; do not free it.
#[no_mangle]
pub extern "C" fn sq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Release a string returned by the library.
///
/// # Safety
/// `s` must be `NULL` or a pointer obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn sq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Class `[Δ_{jk}]` of the diagonal `x_j = x_k` on `X^n`, slots 1-based.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn sq_class_diagonal(genus: u32, n: u32, j: u32, k: u32, out: *mut *mut SqClass) -> SqStatus {
    guard(|| {
        let class = diagonal_class(GenusContext::new(genus), usize_arg(n), usize_arg(j), usize_arg(k))?;
        emit_class(out, class)
    })
}

/// Class `η` pulled back from the given slot (1-based) of `X^n`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn sq_class_eta(genus: u32, n: u32, slot: u32, out: *mut *mut SqClass) -> SqStatus {
    guard(|| {
        emit_class(
            out,
            CohomClass::eta(GenusContext::new(genus), usize_arg(n), usize_arg(slot))?,
        )
    })
}

/// Odd class `α_i` (1 ≤ i ≤ 2g) pulled back from the given slot of `X^n`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn sq_class_lambda(genus: u32, n: u32, i: u16, slot: u32, out: *mut *mut SqClass) -> SqStatus {
    guard(|| {
        emit_class(
            out,
            CohomClass::lambda(GenusContext::new(genus), usize_arg(n), i, usize_arg(slot))?,
        )
    })
}

/// Parse a class from its JSON term list, e.g.
/// `[{"letters":["a1","a3"],"coeff":-1}]`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sq_class_from_json(
    genus: u32,
    n: u32,
    json: *const c_char,
    out: *mut *mut SqClass,
) -> SqStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Failure(SqStatus::Parse, format!("json is not UTF-8: {e}")))?;
        let records: Vec<TermRecord> =
            serde_json::from_str(text).map_err(|e| Failure(SqStatus::Parse, format!("invalid term list: {e}")))?;
        let class = CohomClass::from_records(GenusContext::new(genus), usize_arg(n), &records)?;
        emit_class(out, class)
    })
}

/// Serialize a class as its JSON term list. Free the result with
/// [`sq_string_free`].
///
/// # Safety
/// `class` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn sq_class_to_json(class: *const SqClass, out: *mut *mut c_char) -> SqStatus {
    guard(|| {
        let class = deref(class, "class")?;
        let text = serde_json::to_string(&class.0.to_terms())
            .map_err(|e| Failure(SqStatus::Internal, format!("serializing class: {e}")))?;
        let text = CString::new(text).map_err(|e| Failure(SqStatus::Internal, e.to_string()))?;
        write(out, text.into_raw(), "out")
    })
}

/// Cup product `a ∪ b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn sq_class_cup(a: *const SqClass, b: *const SqClass, out: *mut *mut SqClass) -> SqStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        emit_class(out, a.0.cup(&b.0)?)
    })
}

/// Sum `a + b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn sq_class_add(a: *const SqClass, b: *const SqClass, out: *mut *mut SqClass) -> SqStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        emit_class(out, a.0.add(&b.0)?)
    })
}

/// Pullback of a class on `X^n` to `X^{n-1}` along the map that copies
/// coordinate `k` (1 ≤ k ≤ n−1) into the last slot.
///
/// # Safety
/// `class` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn sq_class_insertion_pullback(
    class: *const SqClass,
    k: u32,
    out: *mut *mut SqClass,
) -> SqStatus {
    guard(|| emit_class(out, deref(class, "class")?.0.insertion_pullback(usize_arg(k))?))
}

/// Restriction to `X^{n-1}` obtained by fixing a point in the given slot.
///
/// # Safety
/// `class` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn sq_class_point_restrict(class: *const SqClass, slot: u32, out: *mut *mut SqClass) -> SqStatus {
    guard(|| emit_class(out, deref(class, "class")?.0.point_restrict(usize_arg(slot))?))
}

/// Degree of the top-dimensional part. Fails with `SQ_STATUS_OVERFLOW` if it
/// does not fit in 64 bits.
///
/// # Safety
/// `class` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sq_class_integrate(class: *const SqClass, out: *mut i64) -> SqStatus {
    guard(|| {
        let value = deref(class, "class")?.0.integrate();
        let value = i64::try_from(&value)
            .map_err(|_| Failure(SqStatus::Overflow, format!("integral {value} exceeds 64 bits")))?;
        write(out, value, "out")
    })
}

/// Number of factors `n` of the ambient `X^n`, or 0 for `NULL`.
///
/// # Safety
/// `class` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sq_class_factors(class: *const SqClass) -> u32 {
    class.as_ref().map_or(0, |c| c.0.factors() as u32)
}

/// Number of non-zero terms, or 0 for `NULL`.
///
/// # Safety
/// `class` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sq_class_term_count(class: *const SqClass) -> usize {
    class.as_ref().map_or(0, |c| c.0.len())
}

/// Release a class handle.
///
/// # Safety
/// `class` must be `NULL` or a handle that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn sq_class_free(class: *mut SqClass) {
    if !class.is_null() {
        drop(Box::from_raw(class));
    }
}

/// `b_k(Sym^d X)` for a curve of genus `genus`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sq_betti_sym(genus: u32, d: u32, k: u32, out: *mut u64) -> SqStatus {
    guard(|| write(out, betti_sym_closed(genus, usize_arg(d), k)?, "out"))
}

/// `b_i` of the Quot scheme of rank-`r`, degree-`d` torsion quotients.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sq_betti_quot(genus: u32, r: u32, d: u32, i: u32, out: *mut u64) -> SqStatus {
    guard(|| write(out, betti_quot(genus, usize_arg(r), usize_arg(d), usize_arg(i))?, "out"))
}

/// Poincaré polynomial of `Sym^d X`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn sq_poincare_sym(genus: u32, d: u32, out: *mut *mut SqPoincare) -> SqStatus {
    guard(|| {
        let d = usize_arg(d);
        emit_poincare(out, PoincarePolynomial::new(d, sym_betti_sequence(genus, d)?)?)
    })
}

/// Poincaré polynomial of the Quot scheme.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn sq_poincare_quot(genus: u32, r: u32, d: u32, out: *mut *mut SqPoincare) -> SqStatus {
    guard(|| emit_poincare(out, poincare_quot(genus, usize_arg(r), usize_arg(d))?))
}

/// Complex dimension `N`; the polynomial has `2N + 1` coefficients.
/// Returns 0 for `NULL`.
///
/// # Safety
/// `p` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sq_poincare_dim(p: *const SqPoincare) -> u32 {
    p.as_ref().map_or(0, |p| p.0.dim as u32)
}

/// Coefficient `b_i`.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sq_poincare_coefficient(p: *const SqPoincare, i: u32, out: *mut u64) -> SqStatus {
    guard(|| {
        let p = deref(p, "p")?;
        let value = p.0.betti.get(usize_arg(i)).copied().ok_or_else(|| {
            Failure(
                SqStatus::InvalidArgument,
                format!("coefficient index {i} outside 0..={}", p.0.betti.len() - 1),
            )
        })?;
        write(out, value, "out")
    })
}

/// Release a polynomial handle.
///
/// # Safety
/// `p` must be `NULL` or a handle that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn sq_poincare_free(p: *mut SqPoincare) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Compare the Brauer-group ranks of `Pic^d X`, `Sym^d X` and the Quot
/// scheme for Picard number `rho` of the Jacobian. Needs `r, d ≥ 2`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn sq_brauer_ranks(genus: u32, r: u32, d: u32, rho: u64, out: *mut SqBrauerRanks) -> SqStatus {
    guard(|| {
        let report = verify_brauer_ranks(genus, usize_arg(r), usize_arg(d), rho)?;
        let ranks = SqBrauerRanks {
            rank_pic: report.rank_pic,
            rank_sym: report.rank_sym,
            rank_quot: report.rank_quot,
            pass: report.pass,
        };
        write(out, ranks, "out")
    })
}
