//! C ABI over `rsk-core`.
//!
//! Every fallible function returns an [`RskStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`rsk_last_error_message`] on the same thread. Handles are opaque and
//! must be released with the matching `*_free` function; strings returned
//! by the library are released with [`rsk_string_free`].
//!
//! Sets are passed as `uint64_t` bit masks: bit `i` is element `i`.
//! Enum arguments must be one of the declared constants.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rsk_core::{
    approx, characterization, covering, io, properties, BinaryRelation, Capacity, CharacterizationId, Covering, Error,
    OperatorPairing, PropertyId, RelationClass, SubsetOfV, TableReport,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RskStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    OutOfRange = 3,
    Precondition = 4,
    Capacity = 5,
    NoWitness = 6,
    Panic = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RskPairing {
    DualSuccessor = 0,
    NonDual = 1,
    MirrorNonDual = 2,
    Pawlak = 3,
}

/// Relation classes in table column order.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RskClass {
    Any = 0,
    Reflexive = 1,
    Symmetric = 2,
    Transitive = 3,
    ReflexiveSymmetric = 4,
    Preorder = 5,
    SymmetricTransitive = 6,
    Equivalence = 7,
    Serial = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RskCharacterization {
    ReflexiveLower = 0,
    ReflexiveUpper = 1,
    Symmetric = 2,
    TransitiveUpper = 3,
    Equivalence = 4,
    EquivalenceAlt = 5,
    TransitiveNonDual = 6,
    Preorder = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RskClassFlags {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub serial: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RskConsistency {
    pub property_holds: bool,
    pub class_holds: bool,
    pub consistent: bool,
}

/// Opaque binary relation.
pub struct RskRelation(BinaryRelation);

/// Opaque property table.
pub struct RskTable(TableReport);

/// Opaque covering.
pub struct RskCovering(Covering);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> RskStatus {
    match e {
        Error::Input(_) | Error::Arity { .. } | Error::UniverseMismatch => RskStatus::InvalidInput,
        Error::OutOfRange { .. } | Error::PairOutOfRange(..) => RskStatus::OutOfRange,
        Error::Precondition(_) => RskStatus::Precondition,
        Error::Capacity { .. } => RskStatus::Capacity,
        Error::NoWitness => RskStatus::NoWitness,
    }
}

struct Fail(RskStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(RskStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> RskStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RskStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            RskStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail(RskStatus::InvalidInput, format!("{what}: {e}")))
}

fn into_c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s).map(CString::into_raw).map_err(|e| Fail(RskStatus::Internal, e.to_string()))
}

fn pairing(p: RskPairing) -> OperatorPairing {
    match p {
        RskPairing::DualSuccessor => OperatorPairing::DualSuccessor,
        RskPairing::NonDual => OperatorPairing::NonDual,
        RskPairing::MirrorNonDual => OperatorPairing::MirrorNonDual,
        RskPairing::Pawlak => OperatorPairing::Pawlak,
    }
}

fn class(c: RskClass) -> RelationClass {
    RelationClass::ALL[c as usize]
}

fn characterization_id(c: RskCharacterization) -> CharacterizationId {
    CharacterizationId::ALL[c as usize]
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn rsk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn rsk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a relation on `n` elements from `len` pairs stored as
/// `pairs[2k], pairs[2k+1]`. `pairs` may be null when `len` is 0.
#[no_mangle]
pub unsafe extern "C" fn rsk_relation_new(
    n: usize,
    pairs: *const u32,
    len: usize,
    out_relation: *mut *mut RskRelation,
) -> RskStatus {
    guard(|| {
        let slot = out(out_relation, "out_relation")?;
        let flat: &[u32] = if len == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null("pairs"));
        } else {
            std::slice::from_raw_parts(pairs, 2 * len)
        };
        let list: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let r = BinaryRelation::from_pairs(n, &list)?;
        *slot = Box::into_raw(Box::new(RskRelation(r)));
        Ok(())
    })
}

/// Parses a relation from the JSON relation file format.
#[no_mangle]
pub unsafe extern "C" fn rsk_relation_from_json(json: *const c_char, out_relation: *mut *mut RskRelation) -> RskStatus {
    guard(|| {
        let slot = out(out_relation, "out_relation")?;
        let r = io::parse_relation(text(json, "json")?)?;
        *slot = Box::into_raw(Box::new(RskRelation(r)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rsk_relation_free(relation: *mut RskRelation) {
    if !relation.is_null() {
        drop(Box::from_raw(relation));
    }
}

/// Universe size of `relation`, or 0 when it is null.
#[no_mangle]
pub unsafe extern "C" fn rsk_relation_size(relation: *const RskRelation) -> usize {
    relation.as_ref().map_or(0, |r| r.0.size())
}

#[no_mangle]
pub unsafe extern "C" fn rsk_relation_contains(
    relation: *const RskRelation,
    x: usize,
    y: usize,
    out_contains: *mut bool,
) -> RskStatus {
    guard(|| {
        let r = &deref(relation, "relation")?.0;
        let slot = out(out_contains, "out_contains")?;
        let n = r.size();
        if x >= n || y >= n {
            return Err(Error::PairOutOfRange(x, y, n).into());
        }
        *slot = r.contains(x, y);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rsk_relation_classify(
    relation: *const RskRelation,
    out_flags: *mut RskClassFlags,
) -> RskStatus {
    guard(|| {
        let f = deref(relation, "relation")?.0.classify();
        *out(out_flags, "out_flags")? = RskClassFlags {
            reflexive: f.reflexive,
            symmetric: f.symmetric,
            transitive: f.transitive,
            serial: f.serial,
        };
        Ok(())
    })
}

unsafe fn apply(p: RskPairing, relation: *const RskRelation, set: u64, out_set: *mut u64, upper: bool) -> RskStatus {
    guard(|| {
        let r = &deref(relation, "relation")?.0;
        let slot = out(out_set, "out_set")?;
        let x = SubsetOfV::from_bits(r.size(), set)?;
        let y = if upper { approx::upper(pairing(p), r, x)? } else { approx::lower(pairing(p), r, x)? };
        *slot = y.bits();
        Ok(())
    })
}

/// Lower approximation of the set `set` (a bit mask over the universe).
#[no_mangle]
pub unsafe extern "C" fn rsk_lower(
    pairing: RskPairing,
    relation: *const RskRelation,
    set: u64,
    out_set: *mut u64,
) -> RskStatus {
    apply(pairing, relation, set, out_set, false)
}

/// Upper approximation of the set `set` (a bit mask over the universe).
#[no_mangle]
pub unsafe extern "C" fn rsk_upper(
    pairing: RskPairing,
    relation: *const RskRelation,
    set: u64,
    out_set: *mut u64,
) -> RskStatus {
    apply(pairing, relation, set, out_set, true)
}

/// Checks one table row (1 through 23) on `relation` for all subsets.
#[no_mangle]
pub unsafe extern "C" fn rsk_check_property(
    row: u8,
    pairing: RskPairing,
    relation: *const RskRelation,
    out_holds: *mut bool,
) -> RskStatus {
    guard(|| {
        let r = &deref(relation, "relation")?.0;
        let slot = out(out_holds, "out_holds")?;
        let c = properties::check_relation(PropertyId::new(row)?, self::pairing(pairing), r)?;
        *slot = c.holds;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rsk_characterization_check(
    id: RskCharacterization,
    relation: *const RskRelation,
    out_record: *mut RskConsistency,
) -> RskStatus {
    guard(|| {
        let r = &deref(relation, "relation")?.0;
        let rec = characterization::check_biconditional(characterization_id(id), r);
        *out(out_record, "out_record")? = RskConsistency {
            property_holds: rec.property_holds,
            class_holds: rec.class_holds,
            consistent: rec.consistent,
        };
        Ok(())
    })
}

/// Writes a set on which the characterized property fails. Returns
/// `RSK_STATUS_NO_WITNESS` when the relation is in the class.
#[no_mangle]
pub unsafe extern "C" fn rsk_characterization_witness(
    id: RskCharacterization,
    relation: *const RskRelation,
    out_set: *mut u64,
) -> RskStatus {
    guard(|| {
        let r = &deref(relation, "relation")?.0;
        let slot = out(out_set, "out_set")?;
        *slot = characterization::proof_witness(characterization_id(id), r)?.bits();
        Ok(())
    })
}

/// Generates the 23 × 9 table on relations of 1 through `max_n` elements.
/// `workers` is the thread count; 0 uses the global pool. The bound is
/// checked against the default capacity, overridable with `RSK_MAX_N`.
#[no_mangle]
pub unsafe extern "C" fn rsk_table_generate(
    pairing: RskPairing,
    max_n: usize,
    workers: usize,
    out_table: *mut *mut RskTable,
) -> RskStatus {
    guard(|| {
        let slot = out(out_table, "out_table")?;
        let cap = Capacity::from_env()?;
        let workers = (workers > 0).then_some(workers);
        let t = properties::generate_table_with_workers(self::pairing(pairing), max_n, &cap, workers)?;
        *slot = Box::into_raw(Box::new(RskTable(t)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rsk_table_free(table: *mut RskTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Whether cell (`row`, `class`) is verified up to the table bound.
#[no_mangle]
pub unsafe extern "C" fn rsk_table_cell(
    table: *const RskTable,
    row: u8,
    class: RskClass,
    out_verified: *mut bool,
) -> RskStatus {
    guard(|| {
        let t = &deref(table, "table")?.0;
        let slot = out(out_verified, "out_verified")?;
        *slot = t.cell(PropertyId::new(row)?, self::class(class)).is_verified();
        Ok(())
    })
}

/// Serializes the table as JSON. Free the result with `rsk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn rsk_table_to_json(table: *const RskTable, out_json: *mut *mut c_char) -> RskStatus {
    guard(|| {
        let t = &deref(table, "table")?.0;
        let slot = out(out_json, "out_json")?;
        *slot = into_c_string(t.to_json())?;
        Ok(())
    })
}

/// Renders the table as markdown. Free the result with `rsk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn rsk_table_to_markdown(table: *const RskTable, out_markdown: *mut *mut c_char) -> RskStatus {
    guard(|| {
        let t = &deref(table, "table")?.0;
        let slot = out(out_markdown, "out_markdown")?;
        *slot = into_c_string(t.to_markdown())?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rsk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a covering from the JSON covering file format.
#[no_mangle]
pub unsafe extern "C" fn rsk_covering_from_json(json: *const c_char, out_covering: *mut *mut RskCovering) -> RskStatus {
    guard(|| {
        let slot = out(out_covering, "out_covering")?;
        let c = io::parse_covering(text(json, "json")?)?;
        *slot = Box::into_raw(Box::new(RskCovering(c)));
        Ok(())
    })
}

/// Builds a covering on `n` elements from `len` blocks given as bit masks.
#[no_mangle]
pub unsafe extern "C" fn rsk_covering_new(
    n: usize,
    blocks: *const u64,
    len: usize,
    out_covering: *mut *mut RskCovering,
) -> RskStatus {
    guard(|| {
        let slot = out(out_covering, "out_covering")?;
        let masks: &[u64] = if len == 0 {
            &[]
        } else if blocks.is_null() {
            return Err(null("blocks"));
        } else {
            std::slice::from_raw_parts(blocks, len)
        };
        let sets = masks.iter().map(|&b| SubsetOfV::from_bits(n, b)).collect::<Result<Vec<_>, _>>()?;
        let c = Covering::new(rsk_core::Universe::new(n)?, sets)?;
        *slot = Box::into_raw(Box::new(RskCovering(c)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rsk_covering_free(covering: *mut RskCovering) {
    if !covering.is_null() {
        drop(Box::from_raw(covering));
    }
}

/// Whether the covering operators coincide with the non-dual operators of
/// the induced relation.
#[no_mangle]
pub unsafe extern "C" fn rsk_covering_verify(covering: *const RskCovering, out_holds: *mut bool) -> RskStatus {
    guard(|| {
        let c = &deref(covering, "covering")?.0;
        let slot = out(out_holds, "out_holds")?;
        *slot = covering::verify_reduction(c)?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rsk_covering_lower(covering: *const RskCovering, set: u64, out_set: *mut u64) -> RskStatus {
    guard(|| {
        let c = &deref(covering, "covering")?.0;
        let slot = out(out_set, "out_set")?;
        *slot = c.ct_lower(SubsetOfV::from_bits(c.size(), set)?).bits();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rsk_covering_upper(covering: *const RskCovering, set: u64, out_set: *mut u64) -> RskStatus {
    guard(|| {
        let c = &deref(covering, "covering")?.0;
        let slot = out(out_set, "out_set")?;
        *slot = c.ct_upper(SubsetOfV::from_bits(c.size(), set)?).bits();
        Ok(())
    })
}

/// Writes the relation induced by the covering into `out_relation`.
#[no_mangle]
pub unsafe extern "C" fn rsk_covering_induced_relation(
    covering: *const RskCovering,
    out_relation: *mut *mut RskRelation,
) -> RskStatus {
    guard(|| {
        let c = &deref(covering, "covering")?.0;
        let slot = out(out_relation, "out_relation")?;
        *slot = Box::into_raw(Box::new(RskRelation(c.induced_relation())));
        Ok(())
    })
}
