//! C ABI over the `wlp` crate.
//!
//! Every fallible call returns a [`WlpStatus`] and writes its result through
//! an out-pointer. Verdicts and prime lists are opaque handles owned by the
//! caller and released with their `_free` function. Panics never cross the
//! boundary; they surface as `WLP_STATUS_PANIC`.

#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use wlp::{Error, PrimeModulus, Witness};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WlpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotPrime = 3,
    Degenerate = 4,
    Precondition = 5,
    Overflow = 6,
    WrongWitness = 7,
    Panic = 8,
}

impl From<&Error> for WlpStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NotPrime(_) | Error::ModulusOutOfRange(_) => WlpStatus::NotPrime,
            Error::Degenerate { .. } => WlpStatus::Degenerate,
            Error::HanPrecondition(..) => WlpStatus::Precondition,
            Error::Overflow(_) => WlpStatus::Overflow,
            Error::ZeroExponent
            | Error::DegreeOutOfRange { .. }
            | Error::ShapeMismatch { .. }
            | Error::EntryOutOfRange { .. } => WlpStatus::InvalidArgument,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WlpMethod {
    Criterion = 0,
    Bruteforce = 1,
    Han = 2,
    Char2 = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WlpWitnessKind {
    None = 0,
    Criterion = 1,
    FailingDegree = 2,
    ClosedForm = 3,
}

/// Opaque verdict handle.
pub struct WlpVerdict(wlp::WlpVerdict);

/// Opaque list of primes.
pub struct WlpPrimeList(Vec<u64>);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WlpGapCertificate {
    pub d1: u64,
    pub d2: u64,
    pub d3: u64,
    pub p: u64,
    pub alpha: u64,
    pub beta: u64,
    pub delta: u64,
}

/// `has_witness == false` means no `s <= 0` qualified and `delta_star == 0`;
/// the `s`, `u*` and `m_numerator` fields are then zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WlpHanCertificate {
    pub v1: u64,
    pub v2: u64,
    pub v3: u64,
    pub p: u64,
    pub has_witness: bool,
    pub s: i64,
    pub u1: u64,
    pub u2: u64,
    pub u3: u64,
    pub m_numerator: u64,
    pub delta_star: u64,
}

fn guard(f: impl FnOnce() -> WlpStatus + UnwindSafe) -> WlpStatus {
    catch_unwind(f).unwrap_or(WlpStatus::Panic)
}

fn modulus(p: u64) -> Result<PrimeModulus, WlpStatus> {
    PrimeModulus::new(p).map_err(|e| WlpStatus::from(&e))
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

fn lift<T>(r: wlp::Result<T>) -> Result<T, WlpStatus> {
    r.map_err(|e| WlpStatus::from(&e))
}

/// Library version, NUL-terminated, static.
#[no_mangle]
pub extern "C" fn wlp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn wlp_status_message(status: WlpStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        WlpStatus::Ok => c"ok",
        WlpStatus::NullPointer => c"null pointer argument",
        WlpStatus::InvalidArgument => c"invalid argument",
        WlpStatus::NotPrime => c"modulus is not a prime below 2^31",
        WlpStatus::Degenerate => c"the three forms do not minimally generate the ideal",
        WlpStatus::Precondition => c"triple must satisfy v1 <= v2 <= v3 < v1 + v2",
        WlpStatus::Overflow => c"integer overflow",
        WlpStatus::WrongWitness => c"verdict carries a different witness kind",
        WlpStatus::Panic => c"internal panic",
    };
    msg.as_ptr()
}

#[no_mangle]
pub extern "C" fn wlp_is_prime(n: u64) -> bool {
    wlp::is_prime(n)
}

/// Decides WLP of `K[X,Y,Z]/(X^d,Y^d,Z^d)` in characteristic `p`. With
/// `WLP_METHOD_CHAR2`, `p` must be 2; `WLP_METHOD_BRUTEFORCE` accepts
/// `d <= 60`. On error `*out` is set to NULL.
#[no_mangle]
pub unsafe extern "C" fn wlp_decide(d: u64, p: u64, method: WlpMethod, out: *mut *mut WlpVerdict) -> WlpStatus {
    if out.is_null() {
        return WlpStatus::NullPointer;
    }
    let status = guard(move || {
        let p = try_status!(modulus(p));
        let verdict = match method {
            WlpMethod::Criterion => try_status!(lift(wlp::decide_wlp_criterion(d, p))),
            WlpMethod::Bruteforce if d > wlp::cli::BRUTEFORCE_MAX_D => return WlpStatus::InvalidArgument,
            WlpMethod::Bruteforce => try_status!(lift(wlp::wlp_bruteforce(d, p))),
            WlpMethod::Han => try_status!(lift(wlp::wlp_via_han(d, p))).0,
            WlpMethod::Char2 => {
                if p.get() != 2 {
                    return WlpStatus::InvalidArgument;
                }
                try_status!(lift(wlp::wlp_char2(d)))
            }
        };
        unsafe { *out = Box::into_raw(Box::new(WlpVerdict(verdict))) };
        WlpStatus::Ok
    });
    if status != WlpStatus::Ok {
        *out = ptr::null_mut();
    }
    status
}

#[no_mangle]
pub unsafe extern "C" fn wlp_verdict_free(verdict: *mut WlpVerdict) {
    if !verdict.is_null() {
        drop(Box::from_raw(verdict));
    }
}

/// `false` for a null handle.
#[no_mangle]
pub unsafe extern "C" fn wlp_verdict_holds(verdict: *const WlpVerdict) -> bool {
    verdict.as_ref().is_some_and(|v| v.0.holds)
}

#[no_mangle]
pub unsafe extern "C" fn wlp_verdict_witness_kind(verdict: *const WlpVerdict) -> WlpWitnessKind {
    match verdict.as_ref().map(|v| &v.0.witness) {
        Some(Witness::Criterion(_)) => WlpWitnessKind::Criterion,
        Some(Witness::FailingDegree { .. }) => WlpWitnessKind::FailingDegree,
        Some(Witness::ClosedForm { .. }) => WlpWitnessKind::ClosedForm,
        Some(Witness::None) | None => WlpWitnessKind::None,
    }
}

/// The `(n, k)` pair of a criterion witness.
#[no_mangle]
pub unsafe extern "C" fn wlp_verdict_criterion(
    verdict: *const WlpVerdict,
    out_n: *mut u32,
    out_k: *mut u64,
) -> WlpStatus {
    let (Some(v), false, false) = (verdict.as_ref(), out_n.is_null(), out_k.is_null()) else {
        return WlpStatus::NullPointer;
    };
    match v.0.witness {
        Witness::Criterion(w) => {
            *out_n = w.n;
            *out_k = w.k;
            WlpStatus::Ok
        }
        _ => WlpStatus::WrongWitness,
    }
}

#[no_mangle]
pub unsafe extern "C" fn wlp_verdict_failing_degree(
    verdict: *const WlpVerdict,
    out_degree: *mut u64,
    out_rank: *mut u64,
    out_max_rank: *mut u64,
) -> WlpStatus {
    let Some(v) = verdict.as_ref() else {
        return WlpStatus::NullPointer;
    };
    if out_degree.is_null() || out_rank.is_null() || out_max_rank.is_null() {
        return WlpStatus::NullPointer;
    }
    match v.0.witness {
        Witness::FailingDegree { degree, rank, max_rank } => {
            *out_degree = degree;
            *out_rank = rank;
            *out_max_rank = max_rank;
            WlpStatus::Ok
        }
        _ => WlpStatus::WrongWitness,
    }
}

#[no_mangle]
pub unsafe extern "C" fn wlp_verdict_closed_form(verdict: *const WlpVerdict, out_t: *mut u32) -> WlpStatus {
    let (Some(v), false) = (verdict.as_ref(), out_t.is_null()) else {
        return WlpStatus::NullPointer;
    };
    match v.0.witness {
        Witness::ClosedForm { t } => {
            *out_t = t;
            WlpStatus::Ok
        }
        _ => WlpStatus::WrongWitness,
    }
}

/// Exceptional primes of `d`, ascending.
#[no_mangle]
pub unsafe extern "C" fn wlp_exceptional_primes(d: u64, out: *mut *mut WlpPrimeList) -> WlpStatus {
    if out.is_null() {
        return WlpStatus::NullPointer;
    }
    *out = ptr::null_mut();
    guard(move || {
        let primes = try_status!(lift(wlp::exceptional_primes(d)));
        unsafe { *out = Box::into_raw(Box::new(WlpPrimeList(primes))) };
        WlpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn wlp_prime_list_len(list: *const WlpPrimeList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// Element `index`, or 0 when out of range.
#[no_mangle]
pub unsafe extern "C" fn wlp_prime_list_get(list: *const WlpPrimeList, index: usize) -> u64 {
    list.as_ref().and_then(|l| l.0.get(index)).copied().unwrap_or(0)
}

#[no_mangle]
pub unsafe extern "C" fn wlp_prime_list_free(list: *mut WlpPrimeList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

#[no_mangle]
pub unsafe extern "C" fn wlp_gap_oracle(d1: u64, d2: u64, d3: u64, p: u64, out: *mut WlpGapCertificate) -> WlpStatus {
    if out.is_null() {
        return WlpStatus::NullPointer;
    }
    guard(move || {
        let p = try_status!(modulus(p));
        let c = try_status!(lift(wlp::gap_oracle(d1, d2, d3, p)));
        let [d1, d2, d3] = c.degrees;
        unsafe {
            *out = WlpGapCertificate { d1, d2, d3, p: c.p.get(), alpha: c.alpha, beta: c.beta, delta: c.delta };
        }
        WlpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn wlp_delta_star_han(
    v1: u64,
    v2: u64,
    v3: u64,
    p: u64,
    out: *mut WlpHanCertificate,
) -> WlpStatus {
    if out.is_null() {
        return WlpStatus::NullPointer;
    }
    guard(move || {
        let p = try_status!(modulus(p));
        let c = try_status!(lift(wlp::delta_star_han(v1, v2, v3, p)));
        let w = c.witness;
        let u = w.map_or([0; 3], |w| w.u);
        unsafe {
            *out = WlpHanCertificate {
                v1,
                v2,
                v3,
                p: p.get(),
                has_witness: w.is_some(),
                s: w.map_or(0, |w| w.s),
                u1: u[0],
                u2: u[1],
                u3: u[2],
                m_numerator: w.map_or(0, |w| w.m_numerator),
                delta_star: c.delta_star,
            };
        }
        WlpStatus::Ok
    })
}
