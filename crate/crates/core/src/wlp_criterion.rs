//! Integer criterion for WLP of `K[X,Y,Z]/(X^d, Y^d, Z^d)` in characteristic
//! `p`, plus the characteristic-2 closed form and the odd-divisor obstruction.
//!
//! WLP fails iff some prime power `q = p^n`, `n >= 1`, and `k >= 0` satisfy
//!
//! * `d` even: `3d/(6k+2) > q > 3d/(6k+4)`
//! * `d` odd: `(3d-1)/(6k+2) > q > (3d+1)/(6k+4)`
//!
//! Denominators are cleared before comparing, so every test is an exact
//! integer comparison.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp_linalg::{primes_up_to, PrimeModulus};
use crate::graded_algebra::{Witness, WlpVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriterionPart {
    EvenD,
    OddD,
}

impl CriterionPart {
    pub fn of(d: u64) -> Self {
        if d.is_multiple_of(2) {
            CriterionPart::EvenD
        } else {
            CriterionPart::OddD
        }
    }

    /// Exclusive bounds `(lo, hi)` on `6kq` for this part.
    fn window(self, three_d: i128, q: i128) -> (i128, i128) {
        match self {
            CriterionPart::EvenD => (three_d - 4 * q, three_d - 2 * q),
            CriterionPart::OddD => (three_d + 1 - 4 * q, three_d - 1 - 2 * q),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionWitness {
    pub part: CriterionPart,
    pub n: u32,
    pub k: u64,
}

impl CriterionWitness {
    /// Re-checks the inequalities for `(d, p)` from scratch.
    pub fn verify(&self, d: u64, p: PrimeModulus) -> bool {
        if self.part != CriterionPart::of(d) || self.n == 0 {
            return false;
        }
        let Some(q) = p.get().checked_pow(self.n) else {
            return false;
        };
        let (d, q, k) = (i128::from(d), i128::from(q), i128::from(self.k));
        let six_kq = 6 * k * q;
        match self.part {
            CriterionPart::EvenD => 3 * d - 4 * q < six_kq && six_kq < 3 * d - 2 * q,
            CriterionPart::OddD => 3 * d + 1 - 4 * q < six_kq && six_kq < 3 * d - 1 - 2 * q,
        }
    }
}

/// Smallest `k >= 0` with `lo < 6kq < hi`. The window is shorter than `6q`,
/// so there is at most one.
pub(crate) fn k_in_window(q: u64, lo: i128, hi: i128) -> Option<u64> {
    let step = 6 * i128::from(q);
    let k = if lo < 0 { 0 } else { lo / step + 1 };
    (k * step < hi).then_some(k as u64)
}

fn three_d(d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::ZeroExponent);
    }
    d.checked_mul(3).ok_or(Error::Overflow("computing 3d"))
}

/// Decides WLP by the integer criterion. On failure the witness has the
/// smallest `n`.
pub fn decide_wlp_criterion(d: u64, p: PrimeModulus) -> Result<WlpVerdict> {
    let three_d = three_d(d)?;
    let part = CriterionPart::of(d);
    // p > 3d/2: no prime power can sit below 3d/(6k+2).
    if u128::from(p.get()) * 2 > u128::from(three_d) {
        return Ok(WlpVerdict::holds(Witness::None));
    }
    let mut q = p.get();
    let mut n = 1u32;
    while u128::from(q) * 2 < u128::from(three_d) {
        let (lo, hi) = part.window(i128::from(three_d), i128::from(q));
        if let Some(k) = k_in_window(q, lo, hi) {
            return Ok(WlpVerdict::fails(Witness::Criterion(CriterionWitness { part, n, k })));
        }
        let Some(next) = q.checked_mul(p.get()) else { break };
        q = next;
        n += 1;
    }
    Ok(WlpVerdict::holds(Witness::None))
}

/// Primes `p <= 3d/2` for which WLP fails, ascending, with their witnesses.
pub fn exceptional_primes_with_witnesses(d: u64) -> Result<Vec<(u64, CriterionWitness)>> {
    let three_d = three_d(d)?;
    let mut out = Vec::new();
    for p in primes_up_to(three_d / 2) {
        let verdict = decide_wlp_criterion(d, PrimeModulus::new(p)?)?;
        if let Witness::Criterion(w) = verdict.witness {
            out.push((p, w));
        }
    }
    Ok(out)
}

pub fn exceptional_primes(d: u64) -> Result<Vec<u64>> {
    Ok(exceptional_primes_with_witnesses(d)?.into_iter().map(|(p, _)| p).collect())
}

/// WLP in characteristic 2: holds iff `3d - 1` or `3d + 1` is a power of two,
/// equivalently `d = floor((2^t + 1) / 3)`. The witness carries the smallest
/// such `t`.
pub fn wlp_char2(d: u64) -> Result<WlpVerdict> {
    let three_d = three_d(d)?;
    let minus = three_d - 1;
    let plus = three_d.checked_add(1).ok_or(Error::Overflow("computing 3d + 1"))?;
    // 3d - 1 = 2^t with t odd, 3d + 1 = 2^t with t even.
    let t = [minus, plus].into_iter().filter(|x| x.is_power_of_two()).map(|x| x.trailing_zeros()).min();
    Ok(match t {
        Some(t) => WlpVerdict::holds(Witness::ClosedForm { t }),
        None => WlpVerdict::fails(Witness::None),
    })
}

/// `floor((2^t + 1) / 3)` for `t = 1..=t_max`, deduplicated, ascending.
pub fn char2_wlp_degrees(t_max: u32) -> Result<Vec<u64>> {
    if !(1..=62).contains(&t_max) {
        return Err(Error::DegreeOutOfRange { degree: u64::from(t_max), max: 62 });
    }
    let mut out: Vec<u64> = (1..=t_max).map(|t| ((1u64 << t) + 1) / 3).collect();
    out.dedup();
    Ok(out)
}

/// `d` odd and `p | d`; such `(d, p)` always fail WLP.
pub fn divisor_obstruction(d: u64, p: PrimeModulus) -> Result<bool> {
    if d == 0 {
        return Err(Error::ZeroExponent);
    }
    Ok(d % 2 == 1 && d.is_multiple_of(p.get()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn witness(d: u64, p: u64) -> Option<CriterionWitness> {
        match decide_wlp_criterion(d, fp(p)).unwrap().witness {
            Witness::Criterion(w) => Some(w),
            _ => None,
        }
    }

    #[test]
    fn criterion_examples() {
        assert_eq!(witness(4, 5), Some(CriterionWitness { part: CriterionPart::EvenD, n: 1, k: 0 }));
        assert!(decide_wlp_criterion(6, fp(3)).unwrap().holds);
        assert_eq!(witness(31, 11), Some(CriterionWitness { part: CriterionPart::OddD, n: 1, k: 1 }));
        assert!(decide_wlp_criterion(5, fp(7)).unwrap().holds);
        assert_eq!(witness(20, 7), Some(CriterionWitness { part: CriterionPart::EvenD, n: 1, k: 1 }));
    }

    #[test]
    fn criterion_rejects_zero() {
        assert_eq!(decide_wlp_criterion(0, fp(2)), Err(Error::ZeroExponent));
        assert_eq!(exceptional_primes(0), Err(Error::ZeroExponent));
    }

    #[test]
    fn criterion_handles_huge_d() {
        let d = u64::MAX / 3;
        assert!(decide_wlp_criterion(d, fp(2)).is_ok());
        assert_eq!(decide_wlp_criterion(u64::MAX / 2, fp(2)), Err(Error::Overflow("computing 3d")));
    }

    #[test]
    fn exceptional_examples() {
        assert_eq!(exceptional_primes(8).unwrap(), vec![2, 3, 7, 11]);
        assert_eq!(exceptional_primes(12).unwrap(), vec![2, 11, 13, 17]);
        assert_eq!(exceptional_primes(1).unwrap(), Vec::<u64>::new());
        assert_eq!(exceptional_primes(14).unwrap(), vec![2, 5, 11, 13, 17, 19]);
    }

    #[test]
    fn char2_examples() {
        assert_eq!(wlp_char2(3).unwrap(), WlpVerdict::holds(Witness::ClosedForm { t: 3 }));
        assert_eq!(wlp_char2(11).unwrap(), WlpVerdict::holds(Witness::ClosedForm { t: 5 }));
        assert_eq!(wlp_char2(1).unwrap(), WlpVerdict::holds(Witness::ClosedForm { t: 1 }));
        assert_eq!(wlp_char2(5).unwrap(), WlpVerdict::holds(Witness::ClosedForm { t: 4 }));
        assert!(!wlp_char2(2).unwrap().holds);
    }

    #[test]
    fn char2_degree_list() {
        assert_eq!(char2_wlp_degrees(5).unwrap(), vec![1, 3, 5, 11]);
        assert_eq!(char2_wlp_degrees(1).unwrap(), vec![1]);
        assert_eq!(char2_wlp_degrees(7).unwrap(), vec![1, 3, 5, 11, 21, 43]);
        assert!(char2_wlp_degrees(0).is_err());
        assert!(char2_wlp_degrees(63).is_err());
        assert_eq!(*char2_wlp_degrees(62).unwrap().last().unwrap(), ((1u64 << 62) + 1) / 3);
    }

    #[test]
    fn divisor_examples() {
        assert!(divisor_obstruction(9, fp(3)).unwrap());
        assert!(divisor_obstruction(15, fp(5)).unwrap());
        assert!(!decide_wlp_criterion(15, fp(5)).unwrap().holds);
        assert!(!divisor_obstruction(6, fp(3)).unwrap());
        assert!(decide_wlp_criterion(6, fp(3)).unwrap().holds);
    }

    #[test]
    fn window_search() {
        assert_eq!(k_in_window(5, -8, 2), Some(0));
        assert_eq!(k_in_window(7, 32, 46), Some(1));
        assert_eq!(k_in_window(3, 0, 18), None);
    }
}
