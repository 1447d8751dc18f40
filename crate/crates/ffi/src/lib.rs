//! C ABI for `permalg`.
//!
//! Values cross the boundary as opaque handles. Every fallible function
//! returns a [`PermalgStatus`] and writes its result through an out
//! pointer; on failure the message is available from
//! [`permalg_last_error`]. Strings returned by the library are owned by
//! the caller and released with [`permalg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use permalg::envelope::{Envelope, MetabelianLieAlgebra, Strategy};
use permalg::jordan::jordan_express;
use permalg::lie::{is_lie, lie_express};
use permalg::parse::{parse_expr, parse_expr_with};
use permalg::perm::dimension;
use permalg::{Alphabet, Error, PermPolynomial};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermalgStatus {
    Ok = 0,
    /// The input is valid but the answer is negative (e.g. not a Lie element).
    Negative = 1,
    InvalidInput = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermalgStrategy {
    Leftmost = 0,
    Rightmost = 1,
}

/// A perm polynomial with the alphabet used to name its generators.
pub struct PermalgPoly {
    poly: PermPolynomial,
    names: Alphabet,
}

/// The enveloping perm algebra of a metabelian Lie algebra.
pub struct PermalgEnvelope {
    env: Envelope,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Fail(PermalgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(PermalgStatus::InvalidInput, e.to_string())
    }
}

type Outcome<T> = Result<T, Fail>;

fn guard<F: FnOnce() -> Outcome<()>>(f: F) -> PermalgStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PermalgStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PermalgStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Fail(PermalgStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(PermalgStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Outcome<&'a T> {
    p.as_ref().ok_or_else(|| Fail(PermalgStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Outcome<()> {
    if out.is_null() {
        return Err(Fail(PermalgStatus::NullPointer, "null out pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    let c = CString::new(s).map_err(|_| Fail(PermalgStatus::InvalidInput, "output contains NUL".into()))?;
    put(out, c.into_raw())
}

/// The most recent error message on this thread, or NULL. The pointer is
/// valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn permalg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn permalg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn permalg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an expression into its canonical perm polynomial. With `names`
/// NULL, generator names are read off the text; otherwise `names` is a
/// comma-separated list fixing the generators and their order.
///
/// # Safety
/// `expr` and `names` must be NULL or valid NUL-terminated strings; `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_poly_parse(
    expr: *const c_char,
    names: *const c_char,
    out: *mut *mut PermalgPoly,
) -> PermalgStatus {
    guard(|| {
        let expr = text(expr)?;
        let (e, names) = if names.is_null() {
            let p = parse_expr(expr)?;
            (p.expr, p.alphabet)
        } else {
            let alphabet = Alphabet::from_names(text(names)?.split(',').map(str::trim))?;
            (parse_expr_with(expr, &alphabet)?, alphabet)
        };
        let poly = e.expand()?;
        put(out, Box::into_raw(Box::new(PermalgPoly { poly, names })))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn permalg_poly_free(p: *mut PermalgPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_poly_render(p: *const PermalgPoly, out: *mut *mut c_char) -> PermalgStatus {
    guard(|| {
        let p = handle(p)?;
        put_string(out, p.poly.render(&p.names))
    })
}

/// Number of terms of the canonical form.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_poly_term_count(p: *const PermalgPoly, out: *mut usize) -> PermalgStatus {
    guard(|| put(out, handle(p)?.poly.len()))
}

unsafe fn binary(
    a: *const PermalgPoly,
    b: *const PermalgPoly,
    out: *mut *mut PermalgPoly,
    op: fn(&PermPolynomial, &PermPolynomial) -> PermPolynomial,
) -> PermalgStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        if a.names != b.names {
            return Err(Fail(PermalgStatus::InvalidInput, "operands use different alphabets".into()));
        }
        let poly = op(&a.poly, &b.poly);
        put(out, Box::into_raw(Box::new(PermalgPoly { poly, names: a.names.clone() })))
    })
}

/// `a · b` in the free perm algebra. Both operands must share an alphabet.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_poly_mul(
    a: *const PermalgPoly,
    b: *const PermalgPoly,
    out: *mut *mut PermalgPoly,
) -> PermalgStatus {
    binary(a, b, out, |x, y| x.multiply(y))
}

/// `a + b`. Both operands must share an alphabet.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_poly_add(
    a: *const PermalgPoly,
    b: *const PermalgPoly,
    out: *mut *mut PermalgPoly,
) -> PermalgStatus {
    binary(a, b, out, |x, y| x + y)
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_poly_equal(a: *const PermalgPoly, b: *const PermalgPoly, out: *mut bool) -> PermalgStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        put(out, a.names == b.names && a.poly == b.poly)
    })
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_is_lie(p: *const PermalgPoly, out: *mut bool) -> PermalgStatus {
    guard(|| put(out, is_lie(&handle(p)?.poly)))
}

/// Left-normed commutator form of a Lie element; `PERMALG_STATUS_NEGATIVE`
/// if the element is not Lie.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_lie_express(p: *const PermalgPoly, out: *mut *mut c_char) -> PermalgStatus {
    guard(|| {
        let p = handle(p)?;
        match lie_express(&p.poly) {
            Ok(c) => put_string(out, c.render(&p.names)),
            Err(Error::NotLie(d)) => Err(Fail(PermalgStatus::Negative, format!("not a Lie element; defect {}", d.render(&p.names)))),
            Err(e) => Err(e.into()),
        }
    })
}

/// Anticommutator form; `PERMALG_STATUS_NEGATIVE` outside SJ(X).
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_jordan_express(p: *const PermalgPoly, out: *mut *mut c_char) -> PermalgStatus {
    guard(|| {
        let p = handle(p)?;
        match jordan_express(&p.poly) {
            Ok(j) => put_string(out, j.render(&p.names)),
            Err(Error::NotJordan(c)) => Err(Fail(
                PermalgStatus::Negative,
                format!("not a Jordan element; component {}", c.render(&p.names)),
            )),
            Err(e) => Err(e.into()),
        }
    })
}

/// Dimension of the degree-`n` component of the free perm algebra on `k`
/// generators.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_dimension(k: usize, n: usize, out: *mut u64) -> PermalgStatus {
    guard(|| {
        if k == 0 || n == 0 {
            return Err(Fail(PermalgStatus::InvalidInput, "k and n must be positive".into()));
        }
        let d = u64::try_from(dimension(k, n)).map_err(|_| Fail(PermalgStatus::InvalidInput, "dimension overflows".into()))?;
        put(out, d)
    })
}

/// Builds the envelope of the metabelian Lie algebra described by `json`.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_envelope_from_json(json: *const c_char, out: *mut *mut PermalgEnvelope) -> PermalgStatus {
    guard(|| {
        let env = Envelope::new(MetabelianLieAlgebra::from_json(text(json)?)?)?;
        put(out, Box::into_raw(Box::new(PermalgEnvelope { env })))
    })
}

/// # Safety
/// `e` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn permalg_envelope_free(e: *mut PermalgEnvelope) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Normal form of a dotted expression such as `d(e2)*e1`.
///
/// # Safety
/// `e` must be a live handle, `expr` a valid string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_envelope_normal_form(
    e: *const PermalgEnvelope,
    expr: *const c_char,
    strategy: PermalgStrategy,
    out: *mut *mut c_char,
) -> PermalgStatus {
    guard(|| {
        let env = &handle(e)?.env;
        let p = env.parse(text(expr)?)?;
        let s = match strategy {
            PermalgStrategy::Leftmost => Strategy::Leftmost,
            PermalgStrategy::Rightmost => Strategy::Rightmost,
        };
        put_string(out, env.render(&env.normal_form(&p, s), false))
    })
}

/// True when all compositions are trivial and the embedding check passes.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_envelope_check(e: *const PermalgEnvelope, out: *mut bool) -> PermalgStatus {
    guard(|| {
        let env = &handle(e)?.env;
        put(out, env.check_compositions().all_trivial && env.embed_check().passes)
    })
}

/// Number of normal-form basis monomials of degree `d`.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permalg_envelope_basis_count(e: *const PermalgEnvelope, d: usize, out: *mut u64) -> PermalgStatus {
    guard(|| {
        let c = permalg::envelope::basis_count(&handle(e)?.env, d)?;
        put(out, u64::try_from(c).map_err(|_| Fail(PermalgStatus::InvalidInput, "count overflows".into()))?)
    })
}
