//! Graded pieces of `A = K[X,Y,Z]/(X^d, Y^d, Z^d)` over `F_p` and the
//! brute-force WLP decision from the definition.
//!
//! The linear form is always `X + Y + Z`. Rescaling the variables moves any
//! form with three nonzero coefficients to it, and forms with a vanishing
//! coefficient are not general.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp_linalg::{FpMatrix, PrimeModulus};
use crate::wlp_criterion::CriterionWitness;

/// Exponent triple `(i, j, l)` standing for `X^i Y^j Z^l`.
pub type Exponents = (u32, u32, u32);

fn exponent(d: u64) -> Result<u32> {
    if d == 0 {
        return Err(Error::ZeroExponent);
    }
    u32::try_from(d).map_err(|_| Error::Overflow("converting the exponent d"))
}

/// Top nonzero degree `3d - 3` of `A`.
pub fn socle_degree(d: u64) -> u64 {
    3 * d - 3
}

/// Monomials of `A_m`, in ascending lexicographic order on `(i, j, l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    d: u32,
    degree: u32,
    monomials: Vec<Exponents>,
}

impl MonomialBasis {
    pub fn new(d: u64, degree: u64) -> Result<Self> {
        let d = exponent(d)?;
        let degree = u32::try_from(degree).map_err(|_| Error::Overflow("converting the degree"))?;
        let mut monomials = Vec::new();
        for i in 0..d.min(degree + 1) {
            for j in 0..d.min(degree - i + 1) {
                let l = degree - i - j;
                if l < d {
                    monomials.push((i, j, l));
                }
            }
        }
        Ok(MonomialBasis { d, degree, monomials })
    }

    pub fn d(&self) -> u64 {
        u64::from(self.d)
    }

    pub fn degree(&self) -> u64 {
        u64::from(self.degree)
    }

    pub fn monomials(&self) -> &[Exponents] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Position lookup table indexed by `i * d + j`.
    fn index_table(&self) -> Vec<Option<usize>> {
        let d = self.d as usize;
        let mut table = vec![None; d * d];
        for (pos, &(i, j, _)) in self.monomials.iter().enumerate() {
            table[i as usize * d + j as usize] = Some(pos);
        }
        table
    }
}

/// `h(0), ..., h(3d - 3)` for `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunction {
    d: u64,
    dims: Vec<u64>,
}

impl HilbertFunction {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn socle_degree(&self) -> u64 {
        socle_degree(self.d)
    }

    /// `h(m)`, zero outside `[0, 3d - 3]`.
    pub fn at(&self, m: u64) -> u64 {
        usize::try_from(m).ok().and_then(|m| self.dims.get(m)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }
}

fn choose2(n: i128) -> i128 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// `h(m)` by inclusion-exclusion over the exponents that reach `d`.
pub fn hilbert_value(d: u64, m: u64) -> u64 {
    let (d, m) = (i128::from(d), i128::from(m));
    let value: i128 = [(1, 0), (-3, 1), (3, 2), (-1, 3)].iter().map(|&(sign, j)| sign * choose2(m - j * d + 2)).sum();
    value as u64
}

pub fn hilbert_function(d: u64) -> Result<HilbertFunction> {
    exponent(d)?;
    let dims = (0..=socle_degree(d)).map(|m| hilbert_value(d, m)).collect();
    Ok(HilbertFunction { d, dims })
}

/// Matrix of multiplication by `X + Y + Z` from `A_m` to `A_{m+1}`: columns
/// follow `MonomialBasis(d, m)`, rows `MonomialBasis(d, m + 1)`.
pub fn multiplication_matrix(d: u64, p: PrimeModulus, m: u64) -> Result<FpMatrix> {
    exponent(d)?;
    if d < 2 || m > 3 * d - 4 {
        // For d = 1 the algebra is K and there is no map at all.
        return Err(Error::DegreeOutOfRange { degree: m, max: (3 * d).saturating_sub(4) });
    }
    let source = MonomialBasis::new(d, m)?;
    let target = MonomialBasis::new(d, m + 1)?;
    let lookup = target.index_table();
    let du = source.d as usize;
    let mut matrix = FpMatrix::zeros(target.len(), source.len(), p);
    for (col, &(i, j, l)) in source.monomials().iter().enumerate() {
        let products = [(i + 1, j, l), (i, j + 1, l), (i, j, l + 1)];
        for (a, b, c) in products {
            if a < source.d && b < source.d && c < source.d {
                let row = lookup[a as usize * du + b as usize].expect("product monomial is in the target basis");
                matrix.set(row, col, 1);
            }
        }
    }
    Ok(matrix)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `(n, k)` satisfying the integer criterion.
    Criterion(CriterionWitness),
    /// First degree where `A_m -> A_{m+1}` drops rank.
    FailingDegree {
        degree: u64,
        rank: u64,
        max_rank: u64,
    },
    /// `d = floor((2^t + 1) / 3)`, smallest such `t`.
    ClosedForm {
        t: u32,
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlpVerdict {
    pub holds: bool,
    pub witness: Witness,
}

impl WlpVerdict {
    pub fn holds(witness: Witness) -> Self {
        WlpVerdict { holds: true, witness }
    }

    pub fn fails(witness: Witness) -> Self {
        WlpVerdict { holds: false, witness }
    }
}

/// Decides WLP from the definition: every map `A_m -> A_{m+1}`,
/// `0 <= m <= 3d - 4`, must have rank `min(h(m), h(m+1))`. Reports the
/// smallest failing degree.
pub fn wlp_bruteforce(d: u64, p: PrimeModulus) -> Result<WlpVerdict> {
    let hilbert = hilbert_function(d)?;
    if d == 1 {
        return Ok(WlpVerdict::holds(Witness::None));
    }
    for m in 0..=3 * d - 4 {
        let matrix = multiplication_matrix(d, p, m)?;
        let max_rank = hilbert.at(m).min(hilbert.at(m + 1));
        let rank = matrix.rank() as u64;
        if rank < max_rank {
            return Ok(WlpVerdict::fails(Witness::FailingDegree { degree: m, rank, max_rank }));
        }
    }
    Ok(WlpVerdict::holds(Witness::None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn hilbert_small_cases() {
        assert_eq!(hilbert_function(1).unwrap().dims(), &[1]);
        assert_eq!(hilbert_function(2).unwrap().dims(), &[1, 3, 3, 1]);
        assert_eq!(hilbert_function(3).unwrap().dims(), &[1, 3, 6, 7, 6, 3, 1]);
        assert_eq!(hilbert_function(0), Err(Error::ZeroExponent));
    }

    #[test]
    fn hilbert_outside_range_is_zero() {
        let h = hilbert_function(3).unwrap();
        assert_eq!(h.at(7), 0);
        assert_eq!(h.at(u64::MAX), 0);
    }

    #[test]
    fn basis_is_lex_ordered() {
        let basis = MonomialBasis::new(2, 1).unwrap();
        assert_eq!(basis.monomials(), &[(0, 0, 1), (0, 1, 0), (1, 0, 0)]);
        let basis = MonomialBasis::new(3, 4).unwrap();
        assert!(basis.monomials().windows(2).all(|w| w[0] < w[1]));
        assert_eq!(basis.len(), 6);
        assert!(MonomialBasis::new(3, 5).unwrap().len() == 3);
        assert!(MonomialBasis::new(3, 7).unwrap().is_empty());
    }

    #[test]
    fn multiplication_d2() {
        for p in [2, 3, 5] {
            let m0 = multiplication_matrix(2, fp(p), 0).unwrap();
            assert_eq!((m0.rows(), m0.cols()), (3, 1));
            assert_eq!(m0.entries(), &[1, 1, 1]);
            assert_eq!(m0.rank(), 1);
        }
        let m1 = multiplication_matrix(2, fp(2), 1).unwrap();
        assert_eq!((m1.rows(), m1.cols()), (3, 3));
        for r in 0..3 {
            assert_eq!(m1.row(r).iter().sum::<u64>() % 2, 0);
        }
        assert_eq!(m1.rank(), 2);
        assert_eq!(multiplication_matrix(2, fp(5), 1).unwrap().rank(), 3);
    }

    #[test]
    fn multiplication_degree_range() {
        assert!(multiplication_matrix(2, fp(3), 2).is_ok());
        assert_eq!(multiplication_matrix(2, fp(3), 3), Err(Error::DegreeOutOfRange { degree: 3, max: 2 }));
        assert!(multiplication_matrix(1, fp(3), 0).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(
            wlp_bruteforce(2, fp(2)).unwrap(),
            WlpVerdict::fails(Witness::FailingDegree { degree: 1, rank: 2, max_rank: 3 })
        );
        assert!(!wlp_bruteforce(3, fp(3)).unwrap().holds);
        assert!(wlp_bruteforce(3, fp(5)).unwrap().holds);
        assert!(wlp_bruteforce(1, fp(2)).unwrap().holds);
    }
}
