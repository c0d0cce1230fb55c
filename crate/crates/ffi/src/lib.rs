//! C ABI for `hilbert-cells`.
//!
//! Every fallible function returns an [`HcStatus`]; on failure the message is
//! available from [`hc_last_error`] on the same thread. Handles are opaque and
//! must be released with their `_free` function. Strings returned through
//! `char **` out-parameters are owned by the caller and released with
//! [`hc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hilbert_cells::cup::{check_upper_triangular, may_be_nonzero, pairing_mask, PairingMask};
use hilbert_cells::es_weights::{phi, Weight3};
use hilbert_cells::generic_ideals::generic_staircase;
use hilbert_cells::triples::{basis, betti, Triple};
use hilbert_cells::{Error, Weight2};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NonGeneric = 3,
    OutOfRange = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

impl From<&Error> for HcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NonGenericWeight(..) => HcStatus::NonGeneric,
            Error::BoundExceeded { .. }
            | Error::DegreeOutOfRange { .. }
            | Error::DegreeTooSmall { .. }
            | Error::DegreeOverflow { .. } => HcStatus::OutOfRange,
            _ => HcStatus::InvalidArgument,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: HcStatus, msg: impl Into<String>) -> HcStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> Result<(), HcStatus>) -> HcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HcStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(HcStatus::Panic, "internal panic"),
    }
}

fn lift<T>(r: hilbert_cells::Result<T>) -> Result<T, HcStatus> {
    r.map_err(|e| fail(HcStatus::from(&e), e.to_string()))
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), HcStatus> {
    if p.is_null() {
        Err(fail(HcStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, HcStatus> {
    non_null(p, name)?;
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(HcStatus::InvalidArgument, format!("{name} is not UTF-8")))
}

unsafe fn read_triple(p: *const c_char, name: &str) -> Result<Triple, HcStatus> {
    lift(read_str(p, name)?.parse())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), HcStatus> {
    non_null(out, "out")?;
    let c = CString::new(s).map_err(|_| fail(HcStatus::InvalidArgument, "string contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_slice(src: &[usize], out: *mut usize, cap: usize, written: *mut usize) -> Result<(), HcStatus> {
    non_null(written, "written")?;
    *written = src.len();
    if src.len() > cap {
        return Err(fail(
            HcStatus::BufferTooSmall,
            format!("need {} entries, buffer holds {cap}", src.len()),
        ));
    }
    if !src.is_empty() {
        non_null(out, "out")?;
        ptr::copy_nonoverlapping(src.as_ptr(), out, src.len());
    }
    Ok(())
}

/// Message describing the last failure on this thread, or NULL. The pointer
/// stays valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn hc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes `b_0..b_2n` to `out`. `*written` receives the required length even
/// when the buffer is too small.
///
/// # Safety
/// `out` must point to `cap` writable `size_t`; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_betti(n: usize, out: *mut usize, cap: usize, written: *mut usize) -> HcStatus {
    guard(|| write_slice(&lift(betti(n))?, out, cap, written))
}

/// Cell labels of degree `k` for `n` points.
pub struct HcBasis {
    cells: Vec<Triple>,
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_basis_new(n: usize, k: i64, out: *mut *mut HcBasis) -> HcStatus {
    guard(|| {
        non_null(out, "out")?;
        let cells = lift(basis(n, k))?;
        *out = Box::into_raw(Box::new(HcBasis { cells }));
        Ok(())
    })
}

/// # Safety
/// `basis` must be a live handle from [`hc_basis_new`] or NULL.
#[no_mangle]
pub unsafe extern "C" fn hc_basis_len(basis: *const HcBasis) -> usize {
    basis.as_ref().map_or(0, |b| b.cells.len())
}

/// Text label `"D2|D1|D0"` of cell `i`.
///
/// # Safety
/// `basis` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_basis_label(basis: *const HcBasis, i: usize, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        non_null(basis, "basis")?;
        let cells = &(*basis).cells;
        let cell = cells
            .get(i)
            .ok_or_else(|| fail(HcStatus::OutOfRange, format!("index {i} >= {}", cells.len())))?;
        write_string(out, cell.to_string())
    })
}

/// # Safety
/// `basis` must be NULL or a handle from [`hc_basis_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_basis_free(basis: *mut HcBasis) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

/// Pairing mask over a `<_λ`-compatible numbering of the degree-`k` cells.
pub struct HcMask {
    mask: PairingMask,
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_mask_new(n: usize, k: i64, lambda1: i64, lambda2: i64, out: *mut *mut HcMask) -> HcStatus {
    guard(|| {
        non_null(out, "out")?;
        let mask = lift(pairing_mask(n, k, Weight2::new(lambda1, lambda2)))?;
        *out = Box::into_raw(Box::new(HcMask { mask }));
        Ok(())
    })
}

/// # Safety
/// `mask` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hc_mask_dim(mask: *const HcMask) -> usize {
    mask.as_ref().map_or(0, |m| m.mask.dim())
}

/// Entry `(i, j)`: false means the product of row `i` and the dual of column
/// `j` vanishes.
///
/// # Safety
/// `mask` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_mask_get(mask: *const HcMask, i: usize, j: usize, out: *mut bool) -> HcStatus {
    guard(|| {
        non_null(mask, "mask")?;
        non_null(out, "out")?;
        let m = &(*mask).mask;
        let d = m.dim();
        if i >= d || j >= d {
            return Err(fail(HcStatus::OutOfRange, format!("({i}, {j}) outside a {d}x{d} mask")));
        }
        *out = m.allowed[i][j];
        Ok(())
    })
}

/// # Safety
/// `mask` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_mask_row_label(mask: *const HcMask, i: usize, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        non_null(mask, "mask")?;
        let rows = &(*mask).mask.rows;
        let row = rows
            .get(i)
            .ok_or_else(|| fail(HcStatus::OutOfRange, format!("row {i} >= {}", rows.len())))?;
        write_string(out, row.to_string())
    })
}

/// Sets `*passed` to whether the mask is upper triangular with a true
/// diagonal.
///
/// # Safety
/// `mask` must be a live handle; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_mask_check(mask: *const HcMask, passed: *mut bool) -> HcStatus {
    guard(|| {
        non_null(mask, "mask")?;
        non_null(passed, "passed")?;
        *passed = check_upper_triangular(&(*mask).mask).passed();
        Ok(())
    })
}

/// Sizes of the diagonal blocks, in row order.
///
/// # Safety
/// As for [`hc_betti`]; `mask` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hc_mask_blocks(mask: *const HcMask, out: *mut usize, cap: usize, written: *mut usize) -> HcStatus {
    guard(|| {
        non_null(mask, "mask")?;
        write_slice(&(*mask).mask.diagonal_blocks(), out, cap, written)
    })
}

/// # Safety
/// `mask` must be NULL or a handle from [`hc_mask_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_mask_free(mask: *mut HcMask) {
    if !mask.is_null() {
        drop(Box::from_raw(mask));
    }
}

/// `*out = false` when the product of the two cell classes must vanish.
///
/// # Safety
/// `t1`, `t2` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_cup_may_be_nonzero(t1: *const c_char, t2: *const c_char, out: *mut bool) -> HcStatus {
    guard(|| {
        non_null(out, "out")?;
        let (a, b) = (read_triple(t1, "t1")?, read_triple(t2, "t2")?);
        *out = lift(may_be_nonzero(&a, &b))?;
        Ok(())
    })
}

/// Line-bundle weight at a cell for the torus weight `(w0, w1, w2)`.
///
/// # Safety
/// `triple` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_phi(w0: i64, w1: i64, w2: i64, d: i64, triple: *const c_char, out: *mut i64) -> HcStatus {
    guard(|| {
        non_null(out, "out")?;
        let w = lift(Weight3::new(w0, w1, w2))?;
        let t = read_triple(triple, "triple")?;
        *out = lift(phi(&w, d, &t))?;
        Ok(())
    })
}

/// Generic staircase of size `n` for `u1, u2 < 0`, as a partition string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_generic_staircase(u1: i64, u2: i64, n: usize, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        let gamma = lift(generic_staircase(Weight2::new(u1, u2), n))?;
        write_string(out, gamma.to_string())
    })
}
