//! C ABI over `actinfo`.
//!
//! Distributions live behind an opaque [`AiDistribution`] handle created by
//! one of the `ai_distribution_*` constructors and released with
//! [`ai_distribution_free`]. Events are passed as arrays of outcome indices.
//! Every fallible call returns an [`AiStatus`]; on failure the message is
//! available from [`ai_last_error_message`] on the same thread. Logarithm
//! bases are plain doubles greater than 1 (2, e, 10, ...).

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use actinfo::{measures, regimes, Error, Event, ExtReal, FiniteDistribution, LogBase, Regime};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AiStatus {
    Ok = 0,
    NullPointer = 1,
    /// Masses are negative, non-finite or do not sum to 1.
    InvalidDistribution = 2,
    /// An index is out of bounds or repeated.
    InvalidEvent = 3,
    /// Two distributions are over different outcome spaces.
    SpaceMismatch = 4,
    /// A probability, base or regime parameter is out of its range.
    OutOfRange = 5,
    /// The caller's buffer cannot hold the result.
    BufferTooSmall = 6,
    InvalidArgument = 7,
    /// A panic was caught at the boundary.
    Panic = 8,
}

/// Opaque distribution handle.
pub struct AiDistribution(FiniteDistribution);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AiExtKind {
    Finite = 0,
    PosInf = 1,
    NegInf = 2,
    Undefined = 3,
}

/// Extended real; `value` is meaningful only when `kind` is `AI_EXT_KIND_FINITE`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiExtReal {
    pub kind: AiExtKind,
    pub value: f64,
}

impl From<ExtReal> for AiExtReal {
    fn from(x: ExtReal) -> Self {
        let (kind, value) = match x {
            ExtReal::Finite(v) => (AiExtKind::Finite, v),
            ExtReal::PosInf => (AiExtKind::PosInf, f64::INFINITY),
            ExtReal::NegInf => (AiExtKind::NegInf, f64::NEG_INFINITY),
            ExtReal::Undefined => (AiExtKind::Undefined, f64::NAN),
        };
        AiExtReal { kind, value }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AiRegime {
    HarmfulToTarget = 0,
    MildKnowledge = 1,
    StrongKnowledge = 2,
    BoundaryEqual = 3,
    BoundaryMirror = 4,
}

impl From<Regime> for AiRegime {
    fn from(r: Regime) -> Self {
        match r {
            Regime::HarmfulToTarget => AiRegime::HarmfulToTarget,
            Regime::MildKnowledge => AiRegime::MildKnowledge,
            Regime::StrongKnowledge => AiRegime::StrongKnowledge,
            Regime::BoundaryEqual => AiRegime::BoundaryEqual,
            Regime::BoundaryMirror => AiRegime::BoundaryMirror,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiRegimeReport {
    pub p: f64,
    pub q: f64,
    pub regime: AiRegime,
    pub active_info: AiExtReal,
    pub cai_coarsened: AiExtReal,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

fn status_of(err: &Error) -> AiStatus {
    match err {
        Error::LengthMismatch { .. }
        | Error::NonFiniteMass { .. }
        | Error::NegativeMass { .. }
        | Error::NotNormalized { .. }
        | Error::DuplicateLabel(_)
        | Error::EmptySpace
        | Error::ProductTooLarge { .. }
        | Error::EmptyProduct
        | Error::NotFullySupported { .. } => AiStatus::InvalidDistribution,
        Error::IndexOutOfBounds { .. } | Error::DuplicateIndex(_) => AiStatus::InvalidEvent,
        Error::SpaceMismatch => AiStatus::SpaceMismatch,
        Error::ProbabilityOutOfRange(_)
        | Error::InvalidBase(_)
        | Error::POutOfRange(_)
        | Error::QOutOfRange(_)
        | Error::TargetTooLarge { .. } => AiStatus::OutOfRange,
        _ => AiStatus::InvalidArgument,
    }
}

struct Failure(AiStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(AiStatus::NullPointer, format!("`{what}` is null"))
}

/// Runs `f`, records any failure for `ai_last_error_message` and converts
/// panics into `AiStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> AiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(String::new());
            AiStatus::Ok
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
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {message}"));
            AiStatus::Panic
        }
    }
}

unsafe fn dist<'a>(handle: *const AiDistribution, what: &str) -> Result<&'a FiniteDistribution, Failure> {
    handle.as_ref().map(|d| &d.0).ok_or_else(|| null(what))
}

unsafe fn slice<'a, T>(data: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn event(indices: *const usize, len: usize) -> Result<Event, Failure> {
    Ok(Event::new(slice(indices, len, "indices")?.iter().copied())?)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

fn base(b: f64) -> Result<LogBase, Failure> {
    Ok(LogBase::new(b)?)
}

unsafe fn new_handle(
    out: *mut *mut AiDistribution,
    build: impl FnOnce() -> Result<FiniteDistribution, Failure>,
) -> AiStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let d = build()?;
        out.write(Box::into_raw(Box::new(AiDistribution(d))));
        Ok(())
    })
}

/// Creates a distribution over outcomes `0..len` from `len` masses.
///
/// # Safety
/// `probs` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_distribution_new(probs: *const f64, len: usize, out: *mut *mut AiDistribution) -> AiStatus {
    new_handle(out, || Ok(FiniteDistribution::from_probs(slice(probs, len, "probs")?.to_vec())?))
}

/// Creates the uniform distribution on `n` outcomes.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_distribution_uniform(n: usize, out: *mut *mut AiDistribution) -> AiStatus {
    new_handle(out, || Ok(FiniteDistribution::uniform(n)?))
}

/// Creates Ber(p) on outcomes {0, 1}.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_distribution_bernoulli(p: f64, out: *mut *mut AiDistribution) -> AiStatus {
    new_handle(out, || Ok(FiniteDistribution::bernoulli(p)?))
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `handle` must come from an `ai_distribution_*` constructor and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ai_distribution_free(handle: *mut AiDistribution) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of outcomes, or 0 for a null handle.
///
/// # Safety
/// `handle` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn ai_distribution_len(handle: *const AiDistribution) -> usize {
    handle.as_ref().map_or(0, |d| d.0.len())
}

/// Copies the masses into `buf`. Fails with `AI_STATUS_BUFFER_TOO_SMALL`
/// when `cap` is less than the number of outcomes.
///
/// # Safety
/// `buf` must point to `cap` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn ai_distribution_probs(handle: *const AiDistribution, buf: *mut f64, cap: usize) -> AiStatus {
    guard(|| {
        let d = dist(handle, "handle")?;
        if cap < d.len() {
            return Err(Failure(AiStatus::BufferTooSmall, format!("need {} slots, got {cap}", d.len())));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(d.probs().as_ptr(), buf, d.len());
        Ok(())
    })
}

/// `P(T)` for the event given by `indices`.
///
/// # Safety
/// `indices` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_event_probability(
    handle: *const AiDistribution,
    indices: *const usize,
    len: usize,
    out: *mut f64,
) -> AiStatus {
    guard(|| write_out(out, dist(handle, "handle")?.event_probability(&event(indices, len)?)?))
}

/// Self-information `−log P(T)`.
///
/// # Safety
/// As [`ai_event_probability`].
#[no_mangle]
pub unsafe extern "C" fn ai_self_information(
    handle: *const AiDistribution,
    indices: *const usize,
    len: usize,
    log_base: f64,
    out: *mut AiExtReal,
) -> AiStatus {
    guard(|| {
        let v = measures::self_information(dist(handle, "handle")?, &event(indices, len)?, base(log_base)?)?;
        write_out(out, v.into())
    })
}

/// Active information `log[P2(T) / P1(T)]`.
///
/// # Safety
/// Handles must be valid; `indices` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_active_information(
    p1: *const AiDistribution,
    p2: *const AiDistribution,
    indices: *const usize,
    len: usize,
    log_base: f64,
    out: *mut AiExtReal,
) -> AiStatus {
    guard(|| {
        let v = measures::active_information(dist(p1, "p1")?, dist(p2, "p2")?, &event(indices, len)?, base(log_base)?)?;
        write_out(out, v.into())
    })
}

/// Shannon entropy.
///
/// # Safety
/// `handle` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_entropy(handle: *const AiDistribution, log_base: f64, out: *mut f64) -> AiStatus {
    guard(|| write_out(out, measures::entropy(dist(handle, "handle")?, base(log_base)?)))
}

/// Total information `Σ −log p(x)`; `+inf` when some outcome has zero mass.
///
/// # Safety
/// `handle` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_total_information(
    handle: *const AiDistribution,
    log_base: f64,
    out: *mut AiExtReal,
) -> AiStatus {
    guard(|| write_out(out, measures::total_information(dist(handle, "handle")?, base(log_base)?).into()))
}

/// Conserved active information `Σ log[p1(x) / p2(x)]`.
///
/// # Safety
/// Handles must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_conserved_active_information(
    p1: *const AiDistribution,
    p2: *const AiDistribution,
    log_base: f64,
    out: *mut AiExtReal,
) -> AiStatus {
    guard(|| {
        let v = measures::conserved_active_information(dist(p1, "p1")?, dist(p2, "p2")?, base(log_base)?)?;
        write_out(out, v.into())
    })
}

/// Conserved active information of the two laws coarsened onto `{T, Tᶜ}`.
///
/// # Safety
/// As [`ai_active_information`].
#[no_mangle]
pub unsafe extern "C" fn ai_coarsened_cai(
    p1: *const AiDistribution,
    p2: *const AiDistribution,
    indices: *const usize,
    len: usize,
    log_base: f64,
    out: *mut AiExtReal,
) -> AiStatus {
    guard(|| {
        let v = measures::coarsened_cai(dist(p1, "p1")?, dist(p2, "p2")?, &event(indices, len)?, base(log_base)?)?;
        write_out(out, v.into())
    })
}

/// `KL(Pa ‖ Pb)`.
///
/// # Safety
/// Handles must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_kl_divergence(
    pa: *const AiDistribution,
    pb: *const AiDistribution,
    log_base: f64,
    out: *mut AiExtReal,
) -> AiStatus {
    guard(|| write_out(out, measures::kl_divergence(dist(pa, "pa")?, dist(pb, "pb")?, base(log_base)?)?.into()))
}

/// Total variation distance.
///
/// # Safety
/// Handles must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_total_variation(
    p1: *const AiDistribution,
    p2: *const AiDistribution,
    out: *mut f64,
) -> AiStatus {
    guard(|| write_out(out, measures::total_variation(dist(p1, "p1")?, dist(p2, "p2")?)?))
}

/// Pinsker's bound `√(KL(P2 ‖ P1) / 2)`, KL in nats.
///
/// # Safety
/// Handles must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_pinsker_bound(
    p1: *const AiDistribution,
    p2: *const AiDistribution,
    out: *mut AiExtReal,
) -> AiStatus {
    guard(|| write_out(out, measures::pinsker_bound(dist(p1, "p1")?, dist(p2, "p2")?)?.into()))
}

/// Regime of `(p, q)` with `0 < p < 1/2`, `0 ≤ q ≤ 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_classify_regime(p: f64, q: f64, out: *mut AiRegime) -> AiStatus {
    guard(|| write_out(out, regimes::classify_regime(p, q)?.into()))
}

/// Regime together with `I⁺ = log(q/p)` and the binary conserved active information.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_regime_report(p: f64, q: f64, log_base: f64, out: *mut AiRegimeReport) -> AiStatus {
    guard(|| {
        let r = regimes::regime_report(p, q, base(log_base)?)?;
        write_out(
            out,
            AiRegimeReport {
                p: r.p,
                q: r.q,
                regime: r.regime.into(),
                active_info: r.active_info.into(),
                cai_coarsened: r.cai_coarsened.into(),
            },
        )
    })
}

/// Static, NUL-terminated interpretation of a regime.
#[no_mangle]
pub extern "C" fn ai_regime_interpretation(regime: AiRegime) -> *const c_char {
    let text: &'static str = match regime {
        AiRegime::HarmfulToTarget => "Target harder, system more ordered\0",
        AiRegime::MildKnowledge => "Target easier, system more disordered\0",
        AiRegime::StrongKnowledge => "Target much easier AND system more ordered (jackpot)\0",
        AiRegime::BoundaryEqual => "Target unchanged, system equally ordered\0",
        AiRegime::BoundaryMirror => "Target easier, system equally ordered\0",
    };
    text.as_ptr().cast()
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ai_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version, NUL-terminated and static.
#[no_mangle]
pub extern "C" fn ai_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
