//! C ABI over `maxtrans`.
//!
//! Relations cross the boundary as opaque `MtRelation` handles created by this
//! library and released with `mt_relation_free`. Vertices are 0-based. Every
//! fallible call returns an `MtStatus`; on failure a description is available
//! from `mt_last_error` on the same thread. Strings returned through `char **`
//! out-parameters are owned by the caller and released with `mt_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use maxtrans::cnf::encode_mts_to_cnf;
use maxtrans::format::{parse_relation, to_edge_list, to_matrix};
use maxtrans::maximal::{maximal_transitive_v1, maximal_transitive_v2};
use maxtrans::maximum::{brute_force_max_dicut, brute_force_mts, quarter_approx, Side};
use maxtrans::{Error, Relation};

/// Opaque relation handle.
pub struct MtRelation(Relation);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    BudgetExceeded = 4,
    Utf8 = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MtAlgorithm {
    V1 = 1,
    V2 = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: MtStatus, message: &str) -> MtStatus {
    set_error(message);
    status
}

fn status_of(e: &Error) -> MtStatus {
    match e {
        Error::Parse { .. } => MtStatus::Parse,
        Error::BudgetExceeded { .. } => MtStatus::BudgetExceeded,
        _ => MtStatus::InvalidArgument,
    }
}

/// Runs `f`, mapping errors and panics to a status and the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), (MtStatus, String)>) -> MtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MtStatus::Ok,
        Ok(Err((status, message))) => fail(status, &message),
        Err(_) => fail(MtStatus::Internal, "internal panic"),
    }
}

fn lib_err(e: Error) -> (MtStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (MtStatus, String) {
    (MtStatus::NullPointer, format!("{what} is null"))
}

unsafe fn relation<'a>(r: *const MtRelation) -> Result<&'a Relation, (MtStatus, String)> {
    r.as_ref().map(|h| &h.0).ok_or_else(|| null("relation"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), (MtStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn boxed(r: Relation) -> *mut MtRelation {
    Box::into_raw(Box::new(MtRelation(r)))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (MtStatus, String)> {
    let c = CString::new(s).map_err(|_| (MtStatus::Internal, "interior NUL".to_string()))?;
    put(out, c.into_raw())
}

fn check_vertex(r: &Relation, i: usize, j: usize) -> Result<(), (MtStatus, String)> {
    if i < r.n() && j < r.n() {
        Ok(())
    } else {
        Err((
            MtStatus::InvalidArgument,
            format!("vertex out of range for n = {}", r.n()),
        ))
    }
}

/// Message for the most recent failure on this thread; empty if none. The
/// pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn mt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Empty relation on `n >= 1` vertices.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mt_relation_new(n: usize, out: *mut *mut MtRelation) -> MtStatus {
    guard(|| {
        if n == 0 {
            return Err((
                MtStatus::InvalidArgument,
                "vertex count must be at least 1".into(),
            ));
        }
        put(out, boxed(Relation::empty(n)))
    })
}

/// # Safety
/// `r` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mt_relation_free(r: *mut MtRelation) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live handle; `out` null or valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mt_relation_clone(
    r: *const MtRelation,
    out: *mut *mut MtRelation,
) -> MtStatus {
    guard(|| put(out, boxed(relation(r)?.clone())))
}

/// Adds arc `(i, j)`.
///
/// # Safety
/// `r` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn mt_relation_insert(r: *mut MtRelation, i: usize, j: usize) -> MtStatus {
    guard(|| {
        let h = r.as_mut().ok_or_else(|| null("relation"))?;
        check_vertex(&h.0, i, j)?;
        h.0.insert(i, j);
        Ok(())
    })
}

/// # Safety
/// `r` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn mt_relation_contains(
    r: *const MtRelation,
    i: usize,
    j: usize,
    out: *mut bool,
) -> MtStatus {
    guard(|| {
        let rel = relation(r)?;
        check_vertex(rel, i, j)?;
        put(out, rel.contains(i, j))
    })
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mt_relation_n(r: *const MtRelation) -> usize {
    r.as_ref().map_or(0, |h| h.0.n())
}

/// Arc count, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mt_relation_arc_count(r: *const MtRelation) -> usize {
    r.as_ref().map_or(0, |h| h.0.arc_count())
}

/// Parses an edge list or 0/1 matrix, detected from the first non-comment line.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mt_relation_parse(
    text: *const c_char,
    out: *mut *mut MtRelation,
) -> MtStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (MtStatus::Utf8, e.to_string()))?;
        let (rel, _) = parse_relation(s).map_err(lib_err)?;
        put(out, boxed(rel))
    })
}

/// Edge-list text (1-based vertices). Free with `mt_string_free`.
///
/// # Safety
/// `r` must be a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mt_relation_to_edge_list(
    r: *const MtRelation,
    out: *mut *mut c_char,
) -> MtStatus {
    guard(|| put_string(out, to_edge_list(relation(r)?)))
}

/// Matrix text, one row of 0/1 characters per line. Free with `mt_string_free`.
///
/// # Safety
/// `r` must be a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mt_relation_to_matrix(
    r: *const MtRelation,
    out: *mut *mut c_char,
) -> MtStatus {
    guard(|| put_string(out, to_matrix(relation(r)?)))
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `r` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn mt_is_transitive(r: *const MtRelation, out: *mut bool) -> MtStatus {
    guard(|| put(out, relation(r)?.is_transitive()))
}

/// # Safety
/// `r` must be a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mt_closure(r: *const MtRelation, out: *mut *mut MtRelation) -> MtStatus {
    guard(|| put(out, boxed(relation(r)?.transitive_closure())))
}

/// Maximal transitive sub-relation in O(n^2 + nm). `algorithm` is one of the
/// `MtAlgorithm` values.
///
/// # Safety
/// `r` must be a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mt_maximal(
    r: *const MtRelation,
    algorithm: u32,
    out: *mut *mut MtRelation,
) -> MtStatus {
    guard(|| {
        let rel = relation(r)?;
        let (t, _) = match algorithm {
            a if a == MtAlgorithm::V1 as u32 => maximal_transitive_v1(rel),
            a if a == MtAlgorithm::V2 as u32 => maximal_transitive_v2(rel),
            a => return Err((MtStatus::InvalidArgument, format!("unknown algorithm {a}"))),
        };
        put(out, boxed(t))
    })
}

/// Transitive sub-relation with at least a quarter of the non-loop arcs.
///
/// # Safety
/// `r` must be a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mt_quarter_approx(
    r: *const MtRelation,
    out: *mut *mut MtRelation,
) -> MtStatus {
    guard(|| put(out, boxed(quarter_approx(relation(r)?))))
}

/// Exact maximum transitive sub-relation; fails with `BudgetExceeded` when the
/// arc count is above `arc_budget`.
///
/// # Safety
/// `r` must be a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mt_maximum_exact(
    r: *const MtRelation,
    arc_budget: usize,
    out: *mut *mut MtRelation,
) -> MtStatus {
    guard(|| {
        put(
            out,
            boxed(brute_force_mts(relation(r)?, arc_budget).map_err(lib_err)?),
        )
    })
}

/// Exact maximum directed cut. `forward` receives e(U, V) and `backward`
/// e(V, U). When `sides` is non-null it must hold n bytes and receives 0 for
/// vertices in U and 1 for vertices in V.
///
/// # Safety
/// `r` must be a live handle; `forward` and `backward` valid for writes;
/// `sides` null or valid for n writes.
#[no_mangle]
pub unsafe extern "C" fn mt_max_dicut(
    r: *const MtRelation,
    vertex_budget: usize,
    forward: *mut usize,
    backward: *mut usize,
    sides: *mut u8,
) -> MtStatus {
    guard(|| {
        let cut = brute_force_max_dicut(relation(r)?, vertex_budget).map_err(lib_err)?;
        put(forward, cut.forward)?;
        put(backward, cut.backward)?;
        if !sides.is_null() {
            for (v, side) in cut.partition.sides().iter().enumerate() {
                sides.add(v).write(u8::from(*side == Side::V));
            }
        }
        Ok(())
    })
}

/// DIMACS CNF whose max-ones models are the maximum transitive sub-relations.
/// Free with `mt_string_free`.
///
/// # Safety
/// `r` must be a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mt_encode_cnf(r: *const MtRelation, out: *mut *mut c_char) -> MtStatus {
    guard(|| put_string(out, encode_mts_to_cnf(relation(r)?).to_dimacs()))
}
