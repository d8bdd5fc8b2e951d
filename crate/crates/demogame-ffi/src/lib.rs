//! C ABI for the demogame library.
//!
//! Scenarios travel as opaque `DgScenario` handles; every fallible call
//! returns a [`DgStatus`] and reports details through
//! [`dg_last_error_message`]. Strings returned through out-pointers are
//! NUL-terminated, allocated by this library, and must be released with
//! [`dg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use demogame::{
    backward_induction, build_sequential_normal_form, build_simultaneous_normal_form,
    profile_payoffs, pure_nash, JointProfile, LeslieError, LeslieMatrix, NegativePolicy, Scenario,
    ScenarioError, TieBreak,
};
use demogame::report::{
    describe_nash, describe_spe, render_bimatrix, render_trajectory, render_tree, Format,
    RenderOptions,
};

/// Result codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DgStatus {
    /// Success.
    Ok = 0,
    /// A pointer was NULL, a string was not valid UTF-8, or an output
    /// buffer was missing.
    InvalidArgument = 1,
    /// The scenario document could not be parsed.
    ParseError = 2,
    /// The scenario document parsed but violated a domain invariant.
    ValidationError = 3,
    /// A projection or game computation failed.
    DomainError = 4,
    /// A named country, action, or profile does not exist.
    NotFound = 5,
    /// The eigen iteration hit its iteration cap.
    NoConvergence = 6,
}

/// Opaque scenario handle.
pub struct DgScenario(Scenario);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("NUL bytes stripped");
    });
}

fn fail(status: DgStatus, message: &str) -> DgStatus {
    set_error(message);
    status
}

fn scenario_error_status(err: &ScenarioError) -> DgStatus {
    match err {
        ScenarioError::Syntax { .. } => DgStatus::ParseError,
        _ => DgStatus::ValidationError,
    }
}

fn leslie_error_status(err: &LeslieError) -> DgStatus {
    match err {
        LeslieError::NoConvergence { .. } => DgStatus::NoConvergence,
        _ => DgStatus::DomainError,
    }
}

/// Message for the most recent failure on this thread. The pointer is
/// valid until the next failing call on the same thread. Never NULL.
#[no_mangle]
pub extern "C" fn dg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, DgStatus> {
    if ptr.is_null() {
        return Err(fail(DgStatus::InvalidArgument, &format!("{what} is NULL")));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(DgStatus::InvalidArgument, &format!("{what} is not valid UTF-8")))
}

fn write_string(text: String, out: *mut *mut c_char) -> DgStatus {
    if out.is_null() {
        return fail(DgStatus::InvalidArgument, "output pointer is NULL");
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            DgStatus::Ok
        }
        Err(_) => fail(
            DgStatus::InvalidArgument,
            "output text contains an interior NUL byte",
        ),
    }
}

unsafe fn scenario_ref<'a>(handle: *const DgScenario) -> Result<&'a Scenario, DgStatus> {
    if handle.is_null() {
        return Err(fail(DgStatus::InvalidArgument, "scenario handle is NULL"));
    }
    Ok(&(*handle).0)
}

fn country_index(scenario: &Scenario, name: &str) -> Result<usize, DgStatus> {
    scenario
        .country_index(name)
        .ok_or_else(|| fail(DgStatus::NotFound, &format!("no country named \"{name}\"")))
}

fn parse_profile(scenario: &Scenario, text: &str) -> Result<Vec<usize>, DgStatus> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != scenario.countries().len() {
        return Err(fail(
            DgStatus::InvalidArgument,
            &format!(
                "profile \"{text}\" must list one action per country ({} expected)",
                scenario.countries().len()
            ),
        ));
    }
    let mut profile = Vec::with_capacity(parts.len());
    for (label, country) in parts.iter().zip(scenario.countries()) {
        match country.action_index(label) {
            Some(index) => profile.push(index),
            None => {
                return Err(fail(
                    DgStatus::NotFound,
                    &format!("country \"{}\" has no action \"{label}\"", country.name()),
                ))
            }
        }
    }
    Ok(profile)
}

/// Creates the built-in two-country example scenario.
///
/// # Safety
/// `out` must point to writable storage for one pointer. The result
/// must be released with [`dg_scenario_free`].
#[no_mangle]
pub unsafe extern "C" fn dg_scenario_builtin_paper(out: *mut *mut DgScenario) -> DgStatus {
    if out.is_null() {
        return fail(DgStatus::InvalidArgument, "output pointer is NULL");
    }
    *out = Box::into_raw(Box::new(DgScenario(Scenario::builtin_paper())));
    DgStatus::Ok
}

/// Parses a scenario document (UTF-8 JSON).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must point to writable
/// storage for one pointer. The result must be released with
/// [`dg_scenario_free`].
#[no_mangle]
pub unsafe extern "C" fn dg_scenario_from_json(
    json: *const c_char,
    out: *mut *mut DgScenario,
) -> DgStatus {
    let text = match read_str(json, "json") {
        Ok(t) => t,
        Err(status) => return status,
    };
    if out.is_null() {
        return fail(DgStatus::InvalidArgument, "output pointer is NULL");
    }
    match Scenario::parse(text.as_bytes()) {
        Ok(s) => {
            *out = Box::into_raw(Box::new(DgScenario(s)));
            DgStatus::Ok
        }
        Err(e) => fail(scenario_error_status(&e), &e.to_string()),
    }
}

/// Writes the canonical JSON form of a scenario.
///
/// # Safety
/// `scenario` must be a live handle from this library; `out` must point
/// to writable storage for one pointer. Free the string with
/// [`dg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dg_scenario_to_json(
    scenario: *const DgScenario,
    out: *mut *mut c_char,
) -> DgStatus {
    match scenario_ref(scenario) {
        Ok(s) => write_string(s.to_canonical_json(), out),
        Err(status) => status,
    }
}

/// Releases a scenario handle. NULL is ignored.
///
/// # Safety
/// `scenario` must be NULL or a pointer previously returned by a
/// scenario constructor of this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dg_scenario_free(scenario: *mut DgScenario) {
    if !scenario.is_null() {
        drop(Box::from_raw(scenario));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `text` must be NULL or a pointer previously written by this library
/// through a string out-parameter, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dg_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Both countries' payoffs under a joint profile such as `"S,I"`
/// (comma-separated action labels in country declaration order).
///
/// # Safety
/// `scenario` must be a live handle; `profile` a NUL-terminated string;
/// `payoff_a` and `payoff_b` must point to writable doubles.
#[no_mangle]
pub unsafe extern "C" fn dg_profile_payoffs(
    scenario: *const DgScenario,
    profile: *const c_char,
    payoff_a: *mut f64,
    payoff_b: *mut f64,
) -> DgStatus {
    let s = match scenario_ref(scenario) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let text = match read_str(profile, "profile") {
        Ok(t) => t,
        Err(status) => return status,
    };
    if payoff_a.is_null() || payoff_b.is_null() {
        return fail(DgStatus::InvalidArgument, "payoff output pointer is NULL");
    }
    let indices = match parse_profile(s, text) {
        Ok(p) => p,
        Err(status) => return status,
    };
    if indices.len() != 2 {
        return fail(
            DgStatus::DomainError,
            "profile payoffs need a two-country scenario",
        );
    }
    match profile_payoffs(s, JointProfile::new(indices[0], indices[1])) {
        Ok((u_a, u_b)) => {
            *payoff_a = u_a;
            *payoff_b = u_b;
            DgStatus::Ok
        }
        Err(e) => fail(DgStatus::DomainError, &e.to_string()),
    }
}

/// Projects one country under a fixed profile and writes the trajectory
/// as CSV (`t,class_1,…,class_k,total`). `clamp` non-zero floors
/// negative counts at zero.
///
/// # Safety
/// `scenario` must be a live handle; `country` and `profile`
/// NUL-terminated strings; `out` writable storage for one pointer. Free
/// the string with [`dg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dg_project_csv(
    scenario: *const DgScenario,
    country: *const c_char,
    profile: *const c_char,
    steps: u32,
    clamp: c_int,
    out: *mut *mut c_char,
) -> DgStatus {
    let s = match scenario_ref(scenario) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let country = match read_str(country, "country") {
        Ok(t) => t,
        Err(status) => return status,
    };
    let profile_text = match read_str(profile, "profile") {
        Ok(t) => t,
        Err(status) => return status,
    };
    let index = match country_index(s, country) {
        Ok(i) => i,
        Err(status) => return status,
    };
    let profile = match parse_profile(s, profile_text) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let Some(entry) = s.effect_for(&profile) else {
        return fail(
            DgStatus::NotFound,
            &format!("no effect entry for profile {}", s.profile_label(&profile)),
        );
    };
    let dynamics = entry.dynamics(index);
    let policy = if clamp != 0 {
        NegativePolicy::ClampToZero
    } else {
        NegativePolicy::Error
    };
    let trajectory = match dynamics.matrix().project_trajectory_with(
        s.country(index).initial(),
        Some(dynamics.immigration()),
        steps,
        policy,
    ) {
        Ok(t) => t,
        Err(e) => return fail(leslie_error_status(&e), &e.to_string()),
    };
    match render_trajectory(&trajectory, &RenderOptions::csv()) {
        Ok(text) => write_string(text, out),
        Err(e) => fail(DgStatus::DomainError, &e.to_string()),
    }
}

/// Writes the sequential-game payoff table for the given leader as CSV
/// (`markdown` non-zero selects a Markdown pipe table instead).
///
/// # Safety
/// Same pointer contracts as [`dg_project_csv`].
#[no_mangle]
pub unsafe extern "C" fn dg_sequential_table(
    scenario: *const DgScenario,
    leader: *const c_char,
    markdown: c_int,
    out: *mut *mut c_char,
) -> DgStatus {
    let s = match scenario_ref(scenario) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let leader = match read_str(leader, "leader") {
        Ok(t) => t,
        Err(status) => return status,
    };
    let leader = match country_index(s, leader) {
        Ok(i) => i,
        Err(status) => return status,
    };
    let game = match build_sequential_normal_form(s, leader) {
        Ok(g) => g,
        Err(e) => return fail(DgStatus::DomainError, &e.to_string()),
    };
    let opts = RenderOptions {
        format: if markdown != 0 {
            Format::MarkdownTable
        } else {
            Format::Csv
        },
        integer_snap: true,
    };
    match render_bimatrix(&game, &opts) {
        Ok(text) => write_string(text, out),
        Err(e) => fail(DgStatus::DomainError, &e.to_string()),
    }
}

/// Writes the pure Nash equilibria of the sequential game for `leader`,
/// or of the simultaneous game when `leader` is NULL, one cell per
/// line.
///
/// # Safety
/// `scenario` must be a live handle; `leader` NULL or NUL-terminated;
/// `out` writable storage for one pointer. Free with
/// [`dg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dg_pure_nash(
    scenario: *const DgScenario,
    leader: *const c_char,
    out: *mut *mut c_char,
) -> DgStatus {
    let s = match scenario_ref(scenario) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let game = if leader.is_null() {
        build_simultaneous_normal_form(s)
    } else {
        let name = match read_str(leader, "leader") {
            Ok(t) => t,
            Err(status) => return status,
        };
        match country_index(s, name) {
            Ok(i) => build_sequential_normal_form(s, i),
            Err(status) => return status,
        }
    };
    let game = match game {
        Ok(g) => g,
        Err(e) => return fail(DgStatus::DomainError, &e.to_string()),
    };
    write_string(describe_nash(&game, &pure_nash(&game)), out)
}

/// Writes the backward-induction outcome when `first` moves first, in
/// the same plain-text format as the CLI.
///
/// # Safety
/// Same pointer contracts as [`dg_sequential_table`].
#[no_mangle]
pub unsafe extern "C" fn dg_backward_induction(
    scenario: *const DgScenario,
    first: *const c_char,
    out: *mut *mut c_char,
) -> DgStatus {
    let s = match scenario_ref(scenario) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let first = match read_str(first, "first") {
        Ok(t) => t,
        Err(status) => return status,
    };
    let leader = match country_index(s, first) {
        Ok(i) => i,
        Err(status) => return status,
    };
    match backward_induction(s, leader, TieBreak::LowestIndex) {
        Ok(spe) => write_string(describe_spe(s, &spe), out),
        Err(e) => fail(DgStatus::DomainError, &e.to_string()),
    }
}

/// Writes the sequential game tree as DOT source.
///
/// # Safety
/// Same pointer contracts as [`dg_sequential_table`].
#[no_mangle]
pub unsafe extern "C" fn dg_game_tree_dot(
    scenario: *const DgScenario,
    leader: *const c_char,
    out: *mut *mut c_char,
) -> DgStatus {
    let s = match scenario_ref(scenario) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let leader = match read_str(leader, "leader") {
        Ok(t) => t,
        Err(status) => return status,
    };
    let leader = match country_index(s, leader) {
        Ok(i) => i,
        Err(status) => return status,
    };
    match render_tree(s, leader) {
        Ok(text) => write_string(text, out),
        Err(e) => fail(DgStatus::DomainError, &e.to_string()),
    }
}

/// Dominant eigenvalue and stable age distribution of a Leslie matrix
/// given as raw arrays: `fertilities` has `classes` entries and
/// `survivals` has `classes - 1`. On success writes `lambda`, the
/// distribution into `stable` (length `classes`), the iteration count,
/// and the final residual; `iterations` and `residual` may be NULL.
///
/// # Safety
/// `fertilities` must point to `classes` readable doubles, `survivals`
/// to `classes - 1` (ignored when `classes` is 1), `lambda` and
/// `stable` to writable storage of one and `classes` doubles.
#[no_mangle]
pub unsafe extern "C" fn dg_dominant_eigen(
    fertilities: *const f64,
    classes: usize,
    survivals: *const f64,
    tol: f64,
    max_iter: usize,
    lambda: *mut f64,
    stable: *mut f64,
    iterations: *mut usize,
    residual: *mut f64,
) -> DgStatus {
    if classes == 0 {
        return fail(DgStatus::ValidationError, "at least one age class is required");
    }
    if fertilities.is_null() || (classes > 1 && survivals.is_null()) {
        return fail(DgStatus::InvalidArgument, "matrix parameter pointer is NULL");
    }
    if lambda.is_null() || stable.is_null() {
        return fail(DgStatus::InvalidArgument, "eigen output pointer is NULL");
    }
    let fertilities = std::slice::from_raw_parts(fertilities, classes).to_vec();
    let survivals = if classes > 1 {
        std::slice::from_raw_parts(survivals, classes - 1).to_vec()
    } else {
        Vec::new()
    };
    let matrix = match LeslieMatrix::new(fertilities, survivals) {
        Ok(m) => m,
        Err(e) => return fail(DgStatus::ValidationError, &e.to_string()),
    };
    match matrix.dominant_eigen(tol, max_iter) {
        Ok(result) => {
            *lambda = result.lambda;
            ptr::copy_nonoverlapping(result.stable_distribution.as_ptr(), stable, classes);
            if !iterations.is_null() {
                *iterations = result.iterations;
            }
            if !residual.is_null() {
                *residual = result.residual;
            }
            DgStatus::Ok
        }
        Err(e) => fail(leslie_error_status(&e), &e.to_string()),
    }
}
