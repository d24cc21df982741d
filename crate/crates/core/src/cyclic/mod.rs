//! Cyclic codes as ideals of F₂[T]/(Tⁿ − 1): the named families, exhaustive
//! enumeration, nullspace duals and the trace representation of duals.

mod linear;
mod trace;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use linear::{nullspace, rank, row_reduce, span, span_weight_distribution, Codeword};
pub use trace::{
    delsarte_check, dual_trace_distribution, dual_trace_distribution_with, trace_code_words,
    trace_word, DelsarteReport,
};

use crate::enumerator::WeightEnumerator;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::gf2m::{make_field, BitPolynomial};

/// Default ceiling on the number of codewords an enumeration may visit.
pub const DEFAULT_WORK_LIMIT: u64 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Parity,
    Repetition,
    Hamming,
    Bch2,
    Melas,
    Custom,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Parity => "parity",
            Family::Repetition => "repetition",
            Family::Hamming => "hamming",
            Family::Bch2 => "bch2",
            Family::Melas => "melas",
            Family::Custom => "custom",
        }
    }

    /// Whether the family is indexed by the field degree `m` (length `2^m - 1`)
    /// rather than by the length itself.
    pub fn is_field_family(self) -> bool {
        matches!(self, Family::Hamming | Family::Bch2 | Family::Melas)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "parity" => Family::Parity,
            "repetition" => Family::Repetition,
            "hamming" => Family::Hamming,
            "bch2" | "bch" => Family::Bch2,
            "melas" => Family::Melas,
            "custom" => Family::Custom,
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        })
    }
}

/// A binary cyclic code: the ideal generated by `g | Tⁿ − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    generator: BitPolynomial,
    k: usize,
    family: Family,
    m: Option<u32>,
}

impl CyclicCode {
    /// Validates `g | Tⁿ − 1` by exact division.
    pub fn new(n: usize, generator: BitPolynomial) -> Result<Self> {
        Self::with_family(n, generator, Family::Custom, None)
    }

    fn with_family(n: usize, generator: BitPolynomial, family: Family, m: Option<u32>) -> Result<Self> {
        let degree = generator.degree().ok_or(Error::GeneratorNotDivisor { n })?;
        if n == 0 || degree > n {
            return Err(Error::GeneratorTooLarge { degree, n });
        }
        let (_, rem) = BitPolynomial::cyclotomic_modulus(n).div_rem(&generator);
        if !rem.is_zero() {
            return Err(Error::GeneratorNotDivisor { n });
        }
        Ok(Self {
            n,
            k: n - degree,
            generator,
            family,
            m,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &BitPolynomial {
        &self.generator
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> Option<u32> {
        self.m
    }

    /// Check polynomial `h = (Tⁿ − 1)/g`.
    pub fn check_polynomial(&self) -> BitPolynomial {
        BitPolynomial::cyclotomic_modulus(self.n).div_rem(&self.generator).0
    }

    /// The rows `T^j g` for `0 <= j < k`.
    pub fn generator_matrix(&self) -> Vec<Codeword> {
        (0..self.k)
            .map(|j| Codeword::from_polynomial(self.n, &self.generator.shifted(j)))
            .collect()
    }

    pub fn contains(&self, word: &Codeword) -> bool {
        word.len() == self.n && word.to_polynomial().div_rem(&self.generator).1.is_zero()
    }

    /// The dual as a cyclic code, generated by the reciprocal of the check polynomial.
    pub fn dual_code(&self) -> CyclicCode {
        let h = self.check_polynomial();
        CyclicCode::new(self.n, h.reciprocal()).expect("reciprocal check polynomial divides Tⁿ − 1")
    }

    /// Encodes `message(T) · g(T)` for a message of degree `< k`.
    pub fn encode(&self, message: &BitPolynomial) -> Codeword {
        assert!(message.degree().is_none_or(|d| d < self.k));
        Codeword::from_polynomial(self.n, &message.mul(&self.generator))
    }
}

/// Constructs a named family member. `param` is the field degree `m` for
/// hamming/bch2/melas and the length `n` for parity/repetition.
pub fn build_named_code(family: Family, param: u32) -> Result<CyclicCode> {
    let range_err = |requirement| Error::FamilyRange {
        family: family.name(),
        requirement,
        got: param,
    };
    match family {
        Family::Parity | Family::Repetition => {
            if param < 2 {
                return Err(range_err("length n >= 2"));
            }
            let n = param as usize;
            let g = if family == Family::Parity {
                BitPolynomial::from_u64(0b11)
            } else {
                BitPolynomial::from_coefficients(std::iter::repeat_n(true, n))
            };
            CyclicCode::with_family(n, g, family, None)
        }
        Family::Hamming | Family::Bch2 | Family::Melas => {
            let min = if family == Family::Hamming { 2 } else { 3 };
            if param < min || param > crate::gf2m::MAX_DEGREE {
                return Err(range_err(if min == 2 { "2 <= m <= 16" } else { "3 <= m <= 16" }));
            }
            let ctx = make_field(param)?;
            let n = ctx.q() as usize - 1;
            let f_alpha = ctx.minimal_polynomial(ctx.alpha());
            let g = match family {
                Family::Hamming => f_alpha,
                Family::Bch2 => f_alpha.mul(&ctx.minimal_polynomial(ctx.alpha_pow(3))),
                _ => f_alpha.mul(&ctx.minimal_polynomial(ctx.alpha_pow(-1))),
            };
            let code = CyclicCode::with_family(n, g, family, Some(param))?;
            let expected_k = match family {
                Family::Hamming => n - param as usize,
                _ => n - 2 * param as usize,
            };
            debug_assert_eq!(code.k, expected_k);
            Ok(code)
        }
        Family::Custom => Err(Error::Unsupported(
            "custom codes are built from an explicit generator".into(),
        )),
    }
}

/// Exhaustive weight distribution of all `2^k` codewords.
pub fn enumerate_weight_distribution(code: &CyclicCode, work_limit: u64) -> Result<WeightEnumerator> {
    enumerate_weight_distribution_with(code, work_limit, Execution::default())
}

pub fn enumerate_weight_distribution_with(
    code: &CyclicCode,
    work_limit: u64,
    exec: Execution,
) -> Result<WeightEnumerator> {
    span_weight_distribution(&code.generator_matrix(), code.n, work_limit, exec)
}

pub fn minimum_distance(code: &CyclicCode, work_limit: u64) -> Result<Option<usize>> {
    Ok(enumerate_weight_distribution(code, work_limit)?.min_distance())
}

/// `n − k` independent words spanning the dual of the code.
pub fn dual_basis(code: &CyclicCode) -> Vec<Codeword> {
    nullspace(&code.generator_matrix(), code.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn poly(s: &str) -> BitPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn named_generators() {
        let b = build_named_code(Family::Bch2, 4).unwrap();
        assert_eq!((b.generator().clone(), b.n(), b.k()), (poly("T^8+T^7+T^6+T^4+1"), 15, 7));
        let m = build_named_code(Family::Melas, 4).unwrap();
        assert_eq!((m.generator().clone(), m.n(), m.k()), (poly("T^8+T^7+T^5+T^4+T^3+T+1"), 15, 7));
        let h = build_named_code(Family::Hamming, 3).unwrap();
        assert_eq!((h.generator().clone(), h.n(), h.k()), (poly("T^3+T+1"), 7, 4));
    }

    #[test]
    fn dimensions_for_all_degrees() {
        for m in 3..=12u32 {
            let q = 1usize << m;
            assert_eq!(build_named_code(Family::Hamming, m).unwrap().k(), q - 1 - m as usize);
            assert_eq!(build_named_code(Family::Bch2, m).unwrap().k(), q - 1 - 2 * m as usize);
            assert_eq!(build_named_code(Family::Melas, m).unwrap().k(), q - 1 - 2 * m as usize);
        }
    }

    #[test]
    fn family_ranges() {
        assert!(build_named_code(Family::Hamming, 1).is_err());
        assert!(build_named_code(Family::Hamming, 2).is_ok());
        assert!(build_named_code(Family::Bch2, 2).is_err());
        assert!(build_named_code(Family::Melas, 2).is_err());
        assert!(build_named_code(Family::Melas, 17).is_err());
        assert!(build_named_code(Family::Parity, 1).is_err());
    }

    #[test]
    fn construction_rejects_non_divisors() {
        assert_eq!(
            CyclicCode::new(7, poly("T^2+1")).unwrap_err(),
            Error::GeneratorNotDivisor { n: 7 }
        );
        assert!(CyclicCode::new(7, BitPolynomial::zero()).is_err());
        assert!(CyclicCode::new(3, poly("T^7+1")).is_err());
        assert_eq!(CyclicCode::new(7, BitPolynomial::one()).unwrap().k(), 7);
    }

    #[test]
    fn small_distributions() {
        let h = build_named_code(Family::Hamming, 3).unwrap();
        assert_eq!(
            enumerate_weight_distribution(&h, DEFAULT_WORK_LIMIT).unwrap(),
            WeightEnumerator::from_u64s(7, &[1, 0, 0, 7, 7, 0, 0, 1])
        );
        let r = build_named_code(Family::Repetition, 7).unwrap();
        assert_eq!(
            enumerate_weight_distribution(&r, DEFAULT_WORK_LIMIT).unwrap(),
            WeightEnumerator::from_sparse(7, &[(0, 1u32), (7, 1u32)])
        );
        let p = build_named_code(Family::Parity, 3).unwrap();
        assert_eq!(
            enumerate_weight_distribution(&p, DEFAULT_WORK_LIMIT).unwrap(),
            WeightEnumerator::from_u64s(3, &[1, 0, 3, 0])
        );
    }

    #[test]
    fn minimum_distances() {
        let h = build_named_code(Family::Hamming, 3).unwrap();
        assert_eq!(minimum_distance(&h, DEFAULT_WORK_LIMIT).unwrap(), Some(3));
        let b = build_named_code(Family::Bch2, 4).unwrap();
        assert_eq!(minimum_distance(&b, DEFAULT_WORK_LIMIT).unwrap(), Some(5));
        let m5 = build_named_code(Family::Melas, 5).unwrap();
        let d = minimum_distance(&m5, DEFAULT_WORK_LIMIT).unwrap().unwrap();
        assert!(d >= 5, "melas m=5 minimum distance {d}");
        assert!(minimum_distance(&b, 64).is_err());
    }

    #[test]
    fn cyclic_shift_closure() {
        for family in [Family::Hamming, Family::Bch2, Family::Melas] {
            let code = build_named_code(family, 4).unwrap();
            for w in span(&code.generator_matrix(), code.n()) {
                assert!(code.contains(&w.rotate()));
            }
        }
    }

    #[test]
    fn dual_of_repetition_is_parity() {
        let rep = build_named_code(Family::Repetition, 7).unwrap();
        let dual: HashSet<_> = span(&dual_basis(&rep), 7).into_iter().collect();
        let parity = build_named_code(Family::Parity, 7).unwrap();
        let expected: HashSet<_> = span(&parity.generator_matrix(), 7).into_iter().collect();
        assert_eq!(dual, expected);
    }

    #[test]
    fn dual_code_matches_nullspace() {
        for family in [Family::Hamming, Family::Bch2, Family::Melas] {
            let code = build_named_code(family, 4).unwrap();
            let basis = dual_basis(&code);
            assert_eq!(basis.len(), code.n() - code.k());
            let dual = code.dual_code();
            let a: HashSet<_> = span(&basis, code.n()).into_iter().collect();
            let b: HashSet<_> = span(&dual.generator_matrix(), code.n()).into_iter().collect();
            assert_eq!(a, b);
            // Applying the dual twice gives back the code.
            let again: HashSet<_> = span(&nullspace(&basis, code.n()), code.n()).into_iter().collect();
            let orig: HashSet<_> = span(&code.generator_matrix(), code.n()).into_iter().collect();
            assert_eq!(again, orig);
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let code = build_named_code(Family::Hamming, 4).unwrap();
        let a = enumerate_weight_distribution_with(&code, DEFAULT_WORK_LIMIT, Execution::Sequential).unwrap();
        let b = enumerate_weight_distribution_with(&code, DEFAULT_WORK_LIMIT, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.total(), num_bigint::BigUint::from(1u32 << 11));
    }
}
