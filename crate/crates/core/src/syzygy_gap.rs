//! Syzygy gap of `(x^d1, y^d2, (x+y)^d3)` in `F_p[x, y]`.
//!
//! Two independent routes:
//!
//! * [`gap_oracle`] reads the syzygy degrees off the Hilbert series of
//!   `S/I`, computed by exact rank in every degree. For a minimally
//!   3-generated Artinian ideal in two variables the resolution is
//!   `0 -> S(-alpha) + S(-beta) -> S(-d1) + S(-d2) + S(-d3) -> S`, so
//!   `(1 - t)^2 H(t) = 1 - t^d1 - t^d2 - t^d3 + t^alpha + t^beta`.
//! * [`delta_star_han`] evaluates Han's closed form: find the smallest
//!   `s <= 0` such that `p^s v` lies at taxicab distance `m < 1` from an
//!   integer triple with odd coordinate sum, then `delta* = p^-s (1 - m)`.
//!
//! Han's search runs in integers. With `q = p^-s`, `m < 1` is
//! `sum |v_i - q u_i| < q` and `delta* = q - sum |v_i - q u_i|`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp_linalg::{FpMatrix, PrimeModulus};
use crate::wlp_criterion::k_in_window;

pub type Rational = Ratio<i128>;

/// L1 distance `sum |v_i - w_i|`.
pub fn taxicab(v: &[Rational; 3], w: &[Rational; 3]) -> Rational {
    v.iter().zip(w).map(|(a, b)| if a >= b { a - b } else { b - a }).sum()
}

/// Membership in the lattice of integer triples with odd coordinate sum.
pub fn is_in_l_odd(u: [i64; 3]) -> bool {
    u.iter().map(|&x| i128::from(x)).sum::<i128>().rem_euclid(2) == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapCertificate {
    pub degrees: [u64; 3],
    pub p: PrimeModulus,
    /// Generator degrees of the syzygy module, `alpha <= beta`.
    pub alpha: u64,
    pub beta: u64,
    pub delta: u64,
}

fn binomial_row_mod(n: usize, p: PrimeModulus) -> Vec<u64> {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(1);
        for w in row.windows(2) {
            next.push(p.add(w[0], w[1]));
        }
        next.push(1);
        row = next;
    }
    row.into_iter().map(|c| p.reduce(c)).collect()
}

/// A binary form of degree `degree`: coefficient of `x^(degree - a) y^a` at
/// index `a`.
struct BinaryForm {
    degree: usize,
    coeffs: Vec<u64>,
}

struct GapIdeal {
    p: PrimeModulus,
    generators: [BinaryForm; 3],
}

impl GapIdeal {
    fn new(degrees: [usize; 3], p: PrimeModulus) -> Self {
        let [d1, d2, d3] = degrees;
        let mut x_power = vec![0; d1 + 1];
        x_power[0] = 1;
        let mut y_power = vec![0; d2 + 1];
        y_power[d2] = 1;
        GapIdeal {
            p,
            generators: [
                BinaryForm { degree: d1, coeffs: x_power },
                BinaryForm { degree: d2, coeffs: y_power },
                BinaryForm { degree: d3, coeffs: binomial_row_mod(d3, p) },
            ],
        }
    }

    /// Columns spanning the degree-`m` part of the ideal generated by the
    /// selected generators, written in the monomial basis of `S_m`.
    fn span_matrix(&self, m: usize, selected: &[usize]) -> FpMatrix {
        let mut columns: Vec<Vec<u64>> = Vec::new();
        for &g in selected {
            let form = &self.generators[g];
            if form.degree > m {
                continue;
            }
            for shift in 0..=m - form.degree {
                let mut col = vec![0; m + 1];
                col[shift..shift + form.coeffs.len()].copy_from_slice(&form.coeffs);
                columns.push(col);
            }
        }
        FpMatrix::from_fn(m + 1, columns.len(), self.p, |r, c| columns[c][r])
    }

    fn ideal_dim(&self, m: usize) -> usize {
        self.span_matrix(m, &[0, 1, 2]).rank()
    }

    /// No generator lies in the ideal of the other two.
    fn is_minimally_generated(&self) -> bool {
        (0..3).all(|g| {
            let others: Vec<usize> = (0..3).filter(|&o| o != g).collect();
            let m = self.generators[g].degree;
            let without = self.span_matrix(m, &others).rank();
            let with = self.span_matrix(m, &[0, 1, 2]).rank();
            with > without
        })
    }
}

fn to_usize(d: u64) -> Result<usize> {
    usize::try_from(d).map_err(|_| Error::Overflow("converting a degree"))
}

/// Syzygy degrees of `(x^d1, y^d2, (x+y)^d3)` from the Hilbert series of
/// `S/I`. Fails with [`Error::Degenerate`] when the three forms do not
/// minimally generate `I`.
pub fn gap_oracle(d1: u64, d2: u64, d3: u64, p: PrimeModulus) -> Result<GapCertificate> {
    if d1 == 0 || d2 == 0 || d3 == 0 {
        return Err(Error::ZeroExponent);
    }
    let degenerate = Error::Degenerate { d1, d2, d3, p: p.get() };
    let degrees = [to_usize(d1)?, to_usize(d2)?, to_usize(d3)?];
    let ideal = GapIdeal::new(degrees, p);
    if !ideal.is_minimally_generated() {
        return Err(degenerate);
    }

    // x^d1 and y^d2 alone fill every degree >= d1 + d2 - 1.
    let limit = degrees[0] + degrees[1] - 1;
    let mut hilbert: Vec<i128> = Vec::new();
    for m in 0..=limit {
        let h = (m + 1 - ideal.ideal_dim(m)) as i128;
        if h == 0 {
            break;
        }
        hilbert.push(h);
    }
    let top = hilbert.len();
    for m in top..top + 2 {
        assert_eq!(ideal.ideal_dim(m), m + 1, "S/I must stay zero past degree {top}");
    }

    // (1 - t)^2 H(t) - 1 + t^d1 + t^d2 + t^d3
    let len = top.max(degrees.iter().copied().max().unwrap_or(0) + 1) + 2;
    let mut series = vec![0i128; len];
    for (m, &h) in hilbert.iter().enumerate() {
        series[m] += h;
        series[m + 1] -= 2 * h;
        series[m + 2] += h;
    }
    series[0] -= 1;
    for &d in &degrees {
        series[d] += 1;
    }

    let mut exponents = Vec::new();
    for (e, &c) in series.iter().enumerate() {
        match c {
            0 => {}
            1 => exponents.push(e as u64),
            2 => exponents.extend([e as u64, e as u64]),
            _ => return Err(degenerate),
        }
    }
    let [alpha, beta] = exponents[..] else {
        return Err(degenerate);
    };
    if alpha + beta != d1 + d2 + d3 || alpha <= d1.max(d2).max(d3) {
        return Err(degenerate);
    }
    Ok(GapCertificate { degrees: [d1, d2, d3], p, alpha, beta, delta: beta - alpha })
}

/// The minimizing `(s, u, m)` in Han's formula, with `m = m_numerator / p^-s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HanWitness {
    pub s: i64,
    pub u: [u64; 3],
    pub m_numerator: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HanCertificate {
    pub v: [u64; 3],
    pub p: PrimeModulus,
    /// `None` when no `s <= 0` brings `p^s v` within distance 1 of `L_odd`.
    pub witness: Option<HanWitness>,
    pub delta_star: u64,
}

impl HanCertificate {
    /// The scale `p^-s`.
    pub fn scale(&self) -> Option<u64> {
        self.witness.map(|w| self.p.get().pow((-w.s) as u32))
    }

    /// The distance `m` as an exact rational.
    pub fn m(&self) -> Option<Rational> {
        let w = self.witness?;
        Some(Rational::new(i128::from(w.m_numerator), i128::from(self.scale()?)))
    }
}

/// Han's `delta*(v)` for integer `v` with `v1 <= v2 <= v3 < v1 + v2`.
///
/// Scans `s = -n_max, ..., 0` and stops at the first `s` where some `u` in
/// `L_odd` is within distance 1 of `p^s v`; among those `u` the one with the
/// smallest distance wins, ties broken lexicographically.
///
/// No positive `s` can succeed: `p^s v` is then an integer triple, and it
/// only lies at distance `< 1` from `L_odd` if it is in `L_odd`, which needs
/// an odd coordinate sum; that is impossible for `p = 2` and for odd `p`
/// means `v` itself (found at `s = 0`) already qualifies.
pub fn delta_star_han(v1: u64, v2: u64, v3: u64, p: PrimeModulus) -> Result<HanCertificate> {
    let v = [v1, v2, v3];
    let sum_12 = v1.checked_add(v2).ok_or(Error::Overflow("summing the triple"))?;
    if v1 == 0 || !(v1 <= v2 && v2 <= v3 && v3 < sum_12) {
        return Err(Error::HanPrecondition(v1, v2, v3));
    }
    let total = sum_12.checked_add(v3).ok_or(Error::Overflow("summing the triple"))?;
    let n_max = han_search_depth(total, p)?;

    for n in (0..=n_max).rev() {
        let q = p.get().pow(n);
        if let Some((m_numerator, u)) = closest_odd_point(v, q) {
            return Ok(HanCertificate {
                v,
                p,
                witness: Some(HanWitness { s: -i64::from(n), u, m_numerator }),
                delta_star: q - m_numerator,
            });
        }
    }
    Ok(HanCertificate { v, p, witness: None, delta_star: 0 })
}

/// `ceil(log_p(total)) + 1`, with `p^n_max` required to fit in a `u64`.
///
/// Beyond it `p^s (v1 + v2 + v3) < 2`: an all-odd `u` is then at distance
/// `> 1`, and a `u` with a single odd entry is at distance `> 1` by the
/// strict triangle inequality.
fn han_search_depth(total: u64, p: PrimeModulus) -> Result<u32> {
    let mut e = 0u32;
    let mut q = 1u64;
    while q < total {
        q = q.checked_mul(p.get()).ok_or(Error::Overflow("computing the Han search depth"))?;
        e += 1;
    }
    q.checked_mul(p.get()).ok_or(Error::Overflow("computing the Han search depth"))?;
    Ok(e + 1)
}

/// Best `(sum |v_i - q u_i|, u)` over `u` with odd sum and distance `< q`.
fn closest_odd_point(v: [u64; 3], q: u64) -> Option<(u64, [u64; 3])> {
    let candidates = |x: u64| {
        let base = x / q;
        [base.checked_sub(1), Some(base), base.checked_add(1)]
    };
    let dist = |x: u64, u: u64| (i128::from(x) - i128::from(q) * i128::from(u)).unsigned_abs();

    let mut best: Option<(u64, [u64; 3])> = None;
    for a in candidates(v[0]).into_iter().flatten() {
        for b in candidates(v[1]).into_iter().flatten() {
            for c in candidates(v[2]).into_iter().flatten() {
                if (a + b + c) % 2 == 0 {
                    continue;
                }
                let total = dist(v[0], a) + dist(v[1], b) + dist(v[2], c);
                if total >= u128::from(q) {
                    continue;
                }
                let cand = (total as u64, [a, b, c]);
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

/// `(n, k)` with `3d/(6k+2) > p^n > 3d/(6k+4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalPair {
    pub n: u32,
    pub k: u64,
}

/// Largest `n >= 0` (with its `k`) such that `3d/(6k+2) > p^n > 3d/(6k+4)`,
/// i.e. `3d - 4q < 6kq < 3d - 2q` for `q = p^n`.
pub fn diagonal_condition_scan(d: u64, p: PrimeModulus) -> Result<Option<DiagonalPair>> {
    if d == 0 {
        return Err(Error::ZeroExponent);
    }
    let three_d = d.checked_mul(3).ok_or(Error::Overflow("computing 3d"))?;
    let mut found = None;
    let mut q = 1u64;
    let mut n = 0u32;
    // Both bounds are below 3d/2 for every k >= 0.
    while u128::from(q) * 2 < u128::from(three_d) {
        let (t, q_wide) = (i128::from(three_d), i128::from(q));
        if let Some(k) = k_in_window(q, t - 4 * q_wide, t - 2 * q_wide) {
            found = Some(DiagonalPair { n, k });
        }
        let Some(next) = q.checked_mul(p.get()) else { break };
        q = next;
        n += 1;
    }
    Ok(found)
}
