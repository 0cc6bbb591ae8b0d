//! C interface to `toric-robust`.
//!
//! Objects cross the boundary as opaque handles (`TrMatrix`, `TrGraver`,
//! `TrComplex`) that the caller releases with the matching `*_free`
//! function. Fallible calls return a [`TrStatus`] and write results through
//! out-pointers; after a failure, [`tr_last_error_message`] describes it.
//! Indices into matrices and Graver bases are 0-based; index sets and faces
//! use the library's 1-based column labels.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use toric_robust::bouquet::{cyclic_configuration, is_general_position, is_simple};
use toric_robust::cli::{parse_matrix, write_matrix};
use toric_robust::graver::{graver_basis, GraverBasis};
use toric_robust::lattice::is_pointed;
use toric_robust::lawrence::{lawrence_lift_omega, OmegaSet};
use toric_robust::robustness::{
    graver_is_strongly_robust, strongly_robust_complex, SimplicialComplex,
};
use toric_robust::{Error, IntMatrix};

/// Result of a fallible call. Library error codes are passed through
/// unchanged; codes below 10 belong to the C layer itself.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrStatus {
    Ok = 0,
    NullArgument = 1,
    IndexOutOfRange = 2,
    InvalidUtf8 = 3,
    ThreadPool = 4,
    Panic = 5,
    LengthMismatch = 10,
    ShapeMismatch = 11,
    ZeroVector = 12,
    ZeroMatrix = 13,
    NotPointed = 20,
    NotInGraver = 21,
    FreeBouquetPresent = 22,
    NotSimple = 23,
    FreeVectorPresent = 24,
    TooFewColumns = 30,
    NonIncreasing = 31,
    FullSupportViolated = 40,
    GcdNotOne = 41,
    FirstComponentNotPositive = 42,
    BezoutMismatch = 43,
    InvalidIndexSet = 44,
    MalformedHeader = 50,
    EntryCountMismatch = 51,
    NonIntegerToken = 52,
    Overflow = 60,
    Io = 70,
}

impl TrStatus {
    fn of(e: &Error) -> TrStatus {
        use TrStatus::*;
        match e.code() {
            10 => LengthMismatch,
            11 => ShapeMismatch,
            12 => ZeroVector,
            13 => ZeroMatrix,
            20 => NotPointed,
            21 => NotInGraver,
            22 => FreeBouquetPresent,
            23 => NotSimple,
            24 => FreeVectorPresent,
            30 => TooFewColumns,
            31 => NonIncreasing,
            40 => FullSupportViolated,
            41 => GcdNotOne,
            42 => FirstComponentNotPositive,
            43 => BezoutMismatch,
            44 => InvalidIndexSet,
            50 => MalformedHeader,
            51 => EntryCountMismatch,
            52 => NonIntegerToken,
            60 => Overflow,
            _ => Io,
        }
    }
}

/// An integer matrix.
pub struct TrMatrix(IntMatrix);

/// A Graver basis, one representative per `±` pair.
pub struct TrGraver(GraverBasis);

/// A simplicial complex given by its maximal faces.
pub struct TrComplex(SimplicialComplex);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<Vec<u8>>) {
    let mut bytes = message.into();
    bytes.retain(|&b| b != 0);
    let text = CString::new(bytes).expect("interior nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

struct Failure(TrStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(TrStatus::of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(TrStatus::NullArgument, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> TrStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            TrStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TrStatus::Panic
        }
    }
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = value;
    Ok(())
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn in_pool<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> Result<R, Failure> {
    if threads == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Failure(TrStatus::ThreadPool, e.to_string()))?;
    Ok(pool.install(f))
}

fn small(x: &BigInt) -> Result<i64, Failure> {
    x.to_i64()
        .ok_or_else(|| Failure(TrStatus::Overflow, format!("{x} does not fit in 64 bits")))
}

/// Message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn tr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Builds a `rows × cols` matrix from row-major `entries`.
///
/// # Safety
/// `entries` must point to `rows * cols` readable values and `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_new(
    rows: usize,
    cols: usize,
    entries: *const i64,
    out: *mut *mut TrMatrix,
) -> TrStatus {
    guard(|| {
        let len = rows.checked_mul(cols).ok_or(Error::Overflow)?;
        let data = slice(entries, len, "entries")?
            .iter()
            .map(|&x| x.into())
            .collect();
        emit(out, TrMatrix(IntMatrix::from_row_major(rows, cols, data)?))
    })
}

/// Parses a matrix in the `rows cols` + entries text layout. Entries may
/// exceed 64 bits.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_parse(text: *const c_char, out: *mut *mut TrMatrix) -> TrStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(TrStatus::InvalidUtf8, e.to_string()))?;
        emit(out, TrMatrix(parse_matrix(text)?))
    })
}

/// # Safety
/// `m` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_free(m: *mut TrMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_rows(m: *const TrMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// # Safety
/// `m` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_cols(m: *const TrMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// # Safety
/// `m` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_rank(m: *const TrMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rank())
}

/// Entry `(row, col)`; fails with `TR_STATUS_OVERFLOW` when it does not fit
/// in 64 bits.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_get(
    m: *const TrMatrix,
    row: usize,
    col: usize,
    out: *mut i64,
) -> TrStatus {
    guard(|| {
        let m = &handle(m, "matrix")?.0;
        if row >= m.rows() || col >= m.cols() {
            return Err(Failure(
                TrStatus::IndexOutOfRange,
                format!("({row}, {col}) outside {}×{}", m.rows(), m.cols()),
            ));
        }
        write_out(out, small(m.get(row, col))?)
    })
}

/// The canonical text form. Release with [`tr_string_free`].
///
/// # Safety
/// `m` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tr_matrix_to_string(m: *const TrMatrix) -> *mut c_char {
    match m.as_ref() {
        Some(m) => CString::new(write_matrix(&m.0))
            .expect("no nul in matrix text")
            .into_raw(),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn predicate(
    m: *const TrMatrix,
    out: *mut bool,
    f: impl FnOnce(&IntMatrix) -> Result<bool, Error>,
) -> TrStatus {
    guard(|| {
        let m = &handle(m, "matrix")?.0;
        write_out(out, f(m)?)
    })
}

/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tr_is_pointed(m: *const TrMatrix, out: *mut bool) -> TrStatus {
    predicate(m, out, |m| Ok(is_pointed(m)))
}

/// Every bouquet is a singleton.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tr_is_simple(m: *const TrMatrix, out: *mut bool) -> TrStatus {
    predicate(m, out, |m| Ok(is_simple(m)))
}

/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tr_is_general_position(m: *const TrMatrix, out: *mut bool) -> TrStatus {
    predicate(m, out, is_general_position)
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tr_is_strongly_robust(g: *const TrGraver, out: *mut bool) -> TrStatus {
    guard(|| {
        write_out(
            out,
            graver_is_strongly_robust(&handle(g, "graver basis")?.0),
        )
    })
}

/// Graver basis of a pointed matrix. `threads == 0` uses the global pool;
/// the result does not depend on the thread count.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tr_graver_basis(
    m: *const TrMatrix,
    threads: usize,
    out: *mut *mut TrGraver,
) -> TrStatus {
    guard(|| {
        let m = &handle(m, "matrix")?.0;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let gr = in_pool(threads, || graver_basis(m))??;
        emit(out, TrGraver(gr))
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tr_graver_free(g: *mut TrGraver) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of `±` pairs.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tr_graver_len(g: *const TrGraver) -> usize {
    g.as_ref().map_or(0, |g| g.0.len())
}

/// Length of each element (the number of columns of the source matrix).
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tr_graver_width(g: *const TrGraver) -> usize {
    g.as_ref().map_or(0, |g| g.0.source().cols())
}

/// Coordinate `j` of element `i`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tr_graver_entry(
    g: *const TrGraver,
    i: usize,
    j: usize,
    out: *mut i64,
) -> TrStatus {
    guard(|| {
        let g = &handle(g, "graver basis")?.0;
        let element = g.elements().get(i).filter(|e| j < e.len()).ok_or_else(|| {
            Failure(
                TrStatus::IndexOutOfRange,
                format!("element ({i}, {j}) out of range"),
            )
        })?;
        write_out(out, small(&element[j])?)
    })
}

/// The elements as the rows of a new matrix.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tr_graver_to_matrix(
    g: *const TrGraver,
    out: *mut *mut TrMatrix,
) -> TrStatus {
    guard(|| emit(out, TrMatrix(handle(g, "graver basis")?.0.to_matrix())))
}

/// The strongly robust complex of a simple, pointed matrix without free
/// vectors.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tr_strongly_robust_complex(
    m: *const TrMatrix,
    threads: usize,
    out: *mut *mut TrComplex,
) -> TrStatus {
    guard(|| {
        let m = &handle(m, "matrix")?.0;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let c = in_pool(threads, || strongly_robust_complex(m))??;
        emit(out, TrComplex(c))
    })
}

/// # Safety
/// `c` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tr_complex_free(c: *mut TrComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Dimension, with `-1` for `{∅}` and `-2` for the void complex.
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tr_complex_dimension(c: *const TrComplex) -> isize {
    c.as_ref().and_then(|c| c.0.dimension()).unwrap_or(-2)
}

/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tr_complex_num_maximal(c: *const TrComplex) -> usize {
    c.as_ref().map_or(0, |c| c.0.maximal_faces().len())
}

/// Copies maximal face `k` (sorted, 1-based labels) into `buf`, which holds
/// `cap` values, and stores its size in `len`. When `cap` is too small only
/// `len` is written and `TR_STATUS_LENGTH_MISMATCH` is returned.
///
/// # Safety
/// `c` must be a live handle, `buf` must hold `cap` values, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn tr_complex_maximal_face(
    c: *const TrComplex,
    k: usize,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> TrStatus {
    guard(|| {
        let c = &handle(c, "complex")?.0;
        let face = c
            .maximal_faces()
            .get(k)
            .ok_or_else(|| Failure(TrStatus::IndexOutOfRange, format!("no maximal face {k}")))?;
        write_out(len, face.len())?;
        if cap < face.len() {
            return Err(Failure(
                TrStatus::LengthMismatch,
                format!("face has {} vertices, buffer {cap}", face.len()),
            ));
        }
        if !face.is_empty() {
            if buf.is_null() {
                return Err(null("buffer"));
            }
            ptr::copy_nonoverlapping(face.as_ptr(), buf, face.len());
        }
        Ok(())
    })
}

/// The `d × n` matrix with columns `(1, t, …, t^(d-1))` for increasing `ts`.
///
/// # Safety
/// `ts` must point to `n` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_cyclic_configuration(
    d: usize,
    ts: *const i64,
    n: usize,
    out: *mut *mut TrMatrix,
) -> TrStatus {
    guard(|| {
        let ts = slice(ts, n, "parameters")?;
        emit(out, TrMatrix(cyclic_configuration(d, ts)?))
    })
}

/// The partial Lawrence lifting for the 1-based index set `omega`.
///
/// # Safety
/// `t` must be a live handle, `omega` must point to `len` readable values,
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_lawrence_lift_omega(
    t: *const TrMatrix,
    omega: *const usize,
    len: usize,
    out: *mut *mut TrMatrix,
) -> TrStatus {
    guard(|| {
        let t = &handle(t, "matrix")?.0;
        let omega = OmegaSet::new(t.cols(), slice(omega, len, "index set")?.iter().copied())?;
        emit(out, TrMatrix(lawrence_lift_omega(t, &omega)?))
    })
}
