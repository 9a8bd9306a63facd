//! C interface: opaque relation-set handles, status codes, and JSON strings
//! owned by the library until passed to `placto_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use placto::json::{shifted_tableau_json, tableau_json};
use placto::rewrite::RelationSet;
use placto::tableau::{mixed_insert_word, p_tableau};
use placto::verify::{
    verify_axioms, verify_case_analysis, verify_section5, verify_tables, write_jsonl, AxiomSystem,
};
use placto::word::Word;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlactoStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Panic = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlactoInsertMode {
    Plactic = 0,
    Mixed = 1,
}

/// A congruence on words, given by a list of relations.
pub struct PlactoRelations {
    inner: RelationSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Fail(PlactoStatus, String);

impl From<placto::Error> for Fail {
    fn from(e: placto::Error) -> Self {
        Fail(PlactoStatus::InvalidInput, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PlactoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PlactoStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PlactoStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(PlactoStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(PlactoStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn relations<'a>(p: *const PlactoRelations) -> Result<&'a RelationSet, Fail> {
    p.as_ref()
        .map(|r| &r.inner)
        .ok_or_else(|| Fail(PlactoStatus::NullArgument, "relations is null".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(
            PlactoStatus::NullArgument,
            "output pointer is null".into(),
        ));
    }
    out.write(value);
    Ok(())
}

fn owned(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(PlactoStatus::InvalidInput, "interior nul".into()))
}

/// The message of the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn placto_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn placto_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn placto_relations_knuth() -> *mut PlactoRelations {
    Box::into_raw(Box::new(PlactoRelations {
        inner: RelationSet::knuth(),
    }))
}

#[no_mangle]
pub extern "C" fn placto_relations_shifted_knuth() -> *mut PlactoRelations {
    Box::into_raw(Box::new(PlactoRelations {
        inner: RelationSet::shifted_knuth(),
    }))
}

/// Builds a relation set from a JSON list of
/// `{"left": "acb", "right": "cab", "constraints": "a<=b<c"}` objects.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn placto_relations_from_json(
    json: *const c_char,
    out: *mut *mut PlactoRelations,
) -> PlactoStatus {
    guard(|| {
        let rels = RelationSet::from_json(text(json, "json")?)?;
        put(
            out,
            Box::into_raw(Box::new(PlactoRelations { inner: rels })),
        )
    })
}

/// # Safety
/// `rels` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn placto_relations_free(rels: *mut PlactoRelations) {
    if !rels.is_null() {
        drop(Box::from_raw(rels));
    }
}

/// Writes the least member of the class of `word` over `{1..n}`.
///
/// # Safety
/// Pointers must be valid; `word` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn placto_canonical_word(
    rels: *const PlactoRelations,
    n: u8,
    word: *const c_char,
    out: *mut *mut c_char,
) -> PlactoStatus {
    guard(|| {
        let rels = relations(rels)?;
        let w = Word::parse(text(word, "word")?, n)?;
        put(out, owned(rels.equiv_class(&w).canonical().to_string())?)
    })
}

/// # Safety
/// Pointers must be valid; words nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn placto_equivalent(
    rels: *const PlactoRelations,
    n: u8,
    w1: *const c_char,
    w2: *const c_char,
    out: *mut bool,
) -> PlactoStatus {
    guard(|| {
        let rels = relations(rels)?;
        let (a, b) = (
            Word::parse(text(w1, "w1")?, n)?,
            Word::parse(text(w2, "w2")?, n)?,
        );
        put(out, rels.equivalent(&a, &b))
    })
}

/// Writes the insertion tableau of `word` as JSON.
///
/// # Safety
/// Pointers must be valid; `word` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn placto_insert_json(
    mode: PlactoInsertMode,
    n: u8,
    word: *const c_char,
    out: *mut *mut c_char,
) -> PlactoStatus {
    guard(|| {
        let w = Word::parse(text(word, "word")?, n)?;
        let json = match mode {
            PlactoInsertMode::Plactic => tableau_json(&p_tableau(&w)),
            PlactoInsertMode::Mixed => shifted_tableau_json(&mixed_insert_word(&w)),
        };
        put(out, owned(json.to_string())?)
    })
}

/// Runs `tables`, `plac-cases`, `splac-cases`, `plac-axioms`,
/// `splac-axioms` or `section5` and writes the JSON lines report. `pass`
/// receives the verdict.
///
/// # Safety
/// Pointers must be valid; `check` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn placto_verify(
    check: *const c_char,
    n: u8,
    degree: usize,
    out: *mut *mut c_char,
    pass: *mut bool,
) -> PlactoStatus {
    guard(|| {
        let mut buf = Vec::new();
        let io = |e: std::io::Error| Fail(PlactoStatus::InvalidInput, e.to_string());
        let ok = match text(check, "check")? {
            "tables" => write_jsonl(&mut buf, "tables", &verify_tables(None)?, &[]).map_err(io)?,
            "plac-cases" => write_jsonl(
                &mut buf,
                "cases",
                &verify_case_analysis(&RelationSet::knuth())?,
                &[],
            )
            .map_err(io)?,
            "splac-cases" => write_jsonl(
                &mut buf,
                "cases",
                &verify_case_analysis(&RelationSet::shifted_knuth())?,
                &[],
            )
            .map_err(io)?,
            name @ ("plac-axioms" | "splac-axioms") => {
                let system = if name == "plac-axioms" {
                    AxiomSystem::Plac
                } else {
                    AxiomSystem::SPlac
                };
                let (reports, info) =
                    verify_axioms(system, &system.default_relations(), n, degree)?;
                let info: Vec<_> = info.iter().map(|r| r.to_json()).collect();
                write_jsonl(&mut buf, "axioms", &reports, &info).map_err(io)?
            }
            "section5" => {
                write_jsonl(&mut buf, "section5", &verify_section5(n, degree)?, &[]).map_err(io)?
            }
            other => {
                return Err(Fail(
                    PlactoStatus::InvalidInput,
                    format!("unknown check {other:?}"),
                ))
            }
        };
        let s =
            String::from_utf8(buf).map_err(|_| Fail(PlactoStatus::InvalidUtf8, "report".into()))?;
        if pass.is_null() {
            return Err(Fail(PlactoStatus::NullArgument, "pass is null".into()));
        }
        put(out, owned(s)?)?;
        put(pass, ok)
    })
}
