//! C ABI for edbound.
//!
//! Groups are passed around as opaque `EdGroup` handles. Every fallible call
//! returns an `EdStatus`; the message of the most recent failure on the
//! calling thread is available from `ed_last_error_message`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use edbound::ed::{ed_local_psl2 as local_psl2, FieldContext};
use edbound::families::GroupDescriptor;
use edbound::group_spec::{parse_group_spec, ParseOptions};
use edbound::nt::{dirichlet_search, is_prime, prime_power, Characteristic, Prime};
use edbound::report::bound_report;
use edbound::{Error, SylowTag};

/// Opaque group handle. Create with `ed_group_parse`, release with `ed_group_free`.
pub struct EdGroup {
    inner: GroupDescriptor,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    Semantic = 4,
    TooLarge = 5,
    NotPrime = 6,
    Unsupported = 7,
    Compute = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdSylowTag {
    Cyclic = 0,
    Dihedral = 1,
    ElementaryAbelian = 2,
    Explicit = 3,
}

/// Sylow class as returned by `ed_group_sylow`. `rank` is 0 unless the tag
/// is `ElementaryAbelian`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdSylow {
    pub tag: EdSylowTag,
    pub order: u64,
    pub rank: u32,
}

/// Essential-dimension bound. `upper` is meaningful only when `has_upper`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdBoundC {
    pub lower: u64,
    pub upper: u64,
    pub has_upper: bool,
    pub conditional: bool,
    pub exact: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> EdStatus {
    match e {
        Error::Syntax { .. } => EdStatus::Syntax,
        Error::Semantic(_) | Error::UnknownField(_) | Error::InvalidParameter(_) => {
            EdStatus::Semantic
        }
        Error::TooLarge { .. } | Error::FieldTooLarge { .. } => EdStatus::TooLarge,
        Error::NotPrime(_) | Error::NotPrimePower(_) => EdStatus::NotPrime,
        Error::UnsupportedFamily { .. }
        | Error::VacuousCase { .. }
        | Error::NotCharacteristicZero(_) => EdStatus::Unsupported,
        _ => EdStatus::Compute,
    }
}

/// Runs `f`, recording errors and turning panics into `EdStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), EdStatus>) -> EdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EdStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_last_error("panic inside edbound".to_string());
            EdStatus::Panic
        }
    }
}

fn fail(e: Error) -> EdStatus {
    let s = status_of(&e);
    set_last_error(e.to_string());
    s
}

fn null(what: &str) -> EdStatus {
    set_last_error(format!("{what} is null"));
    EdStatus::NullPointer
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, EdStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_last_error(format!("{what} is not valid UTF-8"));
        EdStatus::InvalidUtf8
    })
}

unsafe fn group<'a>(g: *const EdGroup) -> Result<&'a GroupDescriptor, EdStatus> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| null("group handle"))
}

fn prime(n: u64) -> Result<Prime, EdStatus> {
    Prime::new(n).map_err(fail)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), EdStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ed_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a group spec such as `psl2:961` or `perm:4;(0 1),(0 1 2 3)`.
/// A `cap` of 0 selects the default enumeration cap.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ed_group_parse(
    spec: *const c_char,
    cap: u64,
    out: *mut *mut EdGroup,
) -> EdStatus {
    guard(|| {
        let text = read_str(spec, "spec")?;
        let mut opts = ParseOptions::default();
        if cap != 0 {
            opts.cap = cap;
        }
        let g = parse_group_spec(text, &opts).map_err(fail)?;
        write(out, Box::into_raw(Box::new(EdGroup { inner: g })))
    })
}

/// # Safety
/// `g` must come from `ed_group_parse` and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn ed_group_free(g: *mut EdGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ed_group_order(g: *const EdGroup, out: *mut u64) -> EdStatus {
    guard(|| write(out, group(g)?.order()))
}

/// Tameness at `l`, where `l` is 0 or a prime.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ed_group_is_tame(g: *const EdGroup, l: u64, out: *mut bool) -> EdStatus {
    guard(|| {
        let g = group(g)?;
        let c = Characteristic::new(l).map_err(fail)?;
        write(out, c.get() == 0 || g.order() % c.get() != 0)
    })
}

/// Weak tameness at `l`, where `l` is 0 or a prime.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ed_group_is_weakly_tame(
    g: *const EdGroup,
    l: u64,
    out: *mut bool,
) -> EdStatus {
    guard(|| {
        let g = group(g)?;
        let c = Characteristic::new(l).map_err(fail)?;
        write(out, g.structural_weakly_tame(c).map_err(fail)?)
    })
}

/// Largest s such that the group has an element of order l^s.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ed_group_max_element_order(
    g: *const EdGroup,
    l: u64,
    out: *mut u32,
) -> EdStatus {
    guard(|| {
        let g = group(g)?;
        write(out, g.max_element_order(prime(l)?).map_err(fail)?)
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ed_group_sylow(g: *const EdGroup, l: u64, out: *mut EdSylow) -> EdStatus {
    guard(|| {
        let g = group(g)?;
        let class = g.sylow(prime(l)?).map_err(fail)?;
        let tag = match class.tag() {
            SylowTag::Cyclic => EdSylowTag::Cyclic,
            SylowTag::Dihedral => EdSylowTag::Dihedral,
            SylowTag::ElementaryAbelian => EdSylowTag::ElementaryAbelian,
            SylowTag::Explicit => EdSylowTag::Explicit,
        };
        let sylow = EdSylow {
            tag,
            order: class.order(),
            rank: class.rank().unwrap_or(0),
        };
        write(out, sylow)
    })
}

/// JSON bound report over `field` (`C`, `Q`, `R`, `Qsqrt:p`, `Fpbar:p`,
/// `Fp-at-p:p`). Release the string with `ed_string_free`.
///
/// # Safety
/// `g` must be a live handle, `field` a NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ed_group_report_json(
    g: *const EdGroup,
    field: *const c_char,
    out: *mut *mut c_char,
) -> EdStatus {
    guard(|| {
        let g = group(g)?;
        let ctx: FieldContext = read_str(field, "field")?.parse().map_err(fail)?;
        let json = bound_report(g, ctx).map_err(fail)?.to_json();
        let c = CString::new(json).map_err(|_| fail(Error::Internal("NUL in report".into())))?;
        write(out, c.into_raw())
    })
}

/// # Safety
/// `s` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn ed_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn ed_is_prime(n: u64) -> bool {
    is_prime(n)
}

/// Smallest m in 1..=m_max with q = m p^n + 1 prime. `found` is false when
/// the search is exhausted.
///
/// # Safety
/// `m`, `q` and `found` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ed_dirichlet(
    p: u64,
    n: u32,
    m_max: u64,
    m: *mut u64,
    q: *mut u64,
    found: *mut bool,
) -> EdStatus {
    guard(|| {
        let hit = dirichlet_search(prime(p)?, n, m_max).map_err(fail)?;
        let (mm, qq) = hit.unwrap_or((0, 0));
        write(m, mm)?;
        write(q, qq)?;
        write(found, hit.is_some())
    })
}

/// Local essential dimension of PSL2(q) over the complex numbers.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ed_local_psl2(q: u64, out: *mut EdBoundC) -> EdStatus {
    guard(|| {
        let (p, r) = prime_power(q).map_err(fail)?;
        let b = local_psl2(p, r);
        let c = EdBoundC {
            lower: b.lower,
            upper: b.upper.unwrap_or(0),
            has_upper: b.upper.is_some(),
            conditional: b.conditional,
            exact: b.exact,
        };
        write(out, c)
    })
}
