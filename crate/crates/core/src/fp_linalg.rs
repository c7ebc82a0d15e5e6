//! Prime-field arithmetic and exact rank of dense matrices over `F_p`.
//!
//! Ranks computed here are ranks over every extension of `F_p` as well (rank
//! is the size of the largest nonvanishing minor), so deciding maximal rank
//! over the prime field decides it over the algebraic closure.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deterministic trial division. `0` and `1` are not prime.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut f = 3u64;
    while f <= n / f {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// All primes `<= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

/// A prime `p` with `2 <= p < 2^31`, so that a product of two residues fits
/// in a `u64` before reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub const MAX_EXCLUSIVE: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self> {
        if !(2..Self::MAX_EXCLUSIVE).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn reduce(self, a: u64) -> u64 {
        a % self.0
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a * b) % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue, by Fermat.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.0), "zero has no inverse");
        self.pow(a, self.0 - 2)
    }
}

impl TryFrom<u64> for PrimeModulus {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        PrimeModulus::new(p)
    }
}

impl From<PrimeModulus> for u64 {
    fn from(p: PrimeModulus) -> u64 {
        p.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Dense row-major matrix of residues mod `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
    modulus: PrimeModulus,
}

impl FpMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u64>, modulus: PrimeModulus) -> Result<Self> {
        if rows.checked_mul(cols) != Some(entries.len()) {
            return Err(Error::ShapeMismatch { rows, cols, len: entries.len() });
        }
        if let Some(&entry) = entries.iter().find(|&&e| e >= modulus.get()) {
            return Err(Error::EntryOutOfRange { entry, p: modulus.get() });
        }
        Ok(FpMatrix { rows, cols, entries, modulus })
    }

    /// Builds a matrix from arbitrary integers, reducing each mod `p`.
    pub fn from_fn(rows: usize, cols: usize, modulus: PrimeModulus, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(modulus.reduce(f(r, c)));
            }
        }
        FpMatrix { rows, cols, entries, modulus }
    }

    pub fn zeros(rows: usize, cols: usize, modulus: PrimeModulus) -> Self {
        FpMatrix { rows, cols, entries: vec![0; rows * cols], modulus }
    }

    pub fn identity(n: usize, modulus: PrimeModulus) -> Self {
        Self::from_fn(n, n, modulus, |r, c| u64::from(r == c))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        self.entries[r * self.cols + c]
    }

    /// Stores `value mod p` at `(r, c)`.
    pub fn set(&mut self, r: usize, c: usize, value: u64) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        self.entries[r * self.cols + c] = self.modulus.reduce(value);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> FpMatrix {
        FpMatrix::from_fn(self.cols, self.rows, self.modulus, |r, c| self.get(c, r))
    }

    pub fn max_rank(&self) -> usize {
        self.rows.min(self.cols)
    }

    /// Rank by Gaussian elimination in column order, taking the first
    /// remaining row with a nonzero entry as pivot.
    ///
    /// Each row carries the end of its nonzero extent, so row operations only
    /// touch the columns that can be nonzero. The matrices built by the
    /// graded-algebra code are banded in lexicographic order and elimination
    /// stays close to linear in the number of columns there.
    pub fn rank(&self) -> usize {
        let p = self.modulus;
        let cols = self.cols;
        let mut work = self.entries.clone();
        // End (exclusive) of the possibly-nonzero part of each row.
        let mut ends: Vec<usize> = (0..self.rows)
            .map(|r| {
                let row = &work[r * cols..(r + 1) * cols];
                row.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
            })
            .collect();
        // Unpivoted rows, in original order. Invariant: at the top of the
        // loop for column `c`, every active row is zero in columns `< c`.
        let mut active: Vec<usize> = (0..self.rows).filter(|&r| ends[r] > 0).collect();
        let mut rank = 0;

        for c in 0..cols {
            if active.is_empty() {
                break;
            }
            let Some(pos) = active.iter().position(|&r| c < ends[r] && work[r * cols + c] != 0) else {
                continue;
            };
            let pivot = active.remove(pos);
            rank += 1;
            let pivot_end = ends[pivot];
            let inv = p.inv(work[pivot * cols + c]);

            let mut emptied = Vec::new();
            for &r in &active {
                let lead = if c < ends[r] { work[r * cols + c] } else { 0 };
                if lead == 0 {
                    continue;
                }
                let factor = p.mul(lead, inv);
                let (pivot_row, target_row) = if pivot < r {
                    let (head, tail) = work.split_at_mut(r * cols);
                    (&head[pivot * cols..(pivot + 1) * cols], &mut tail[..cols])
                } else {
                    let (head, tail) = work.split_at_mut(pivot * cols);
                    (&tail[..cols], &mut head[r * cols..(r + 1) * cols])
                };
                for j in c..pivot_end {
                    let x = pivot_row[j];
                    if x != 0 {
                        target_row[j] = p.sub(target_row[j], p.mul(factor, x));
                    }
                }
                ends[r] = ends[r].max(pivot_end);
                if target_row[c + 1..ends[r]].iter().all(|&e| e == 0) {
                    emptied.push(r);
                }
            }
            if !emptied.is_empty() {
                active.retain(|r| !emptied.contains(r));
            }
        }
        rank
    }
}
