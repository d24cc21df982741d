//! Weight enumerators with arbitrary-precision counts and the exact
//! MacWilliams transform.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use crate::error::{Error, Result};
use crate::exec::{map_reduce, Execution};

/// Weight counts `A_0..A_n` of a binary code of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    n: usize,
    counts: Vec<BigUint>,
}

/// Summary of an enumerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyStats {
    pub min_distance: Option<usize>,
    pub total: BigUint,
    pub mean_weight: BigRational,
}

impl WeightEnumerator {
    /// Builds from dense counts; the vector is padded or must fit length `n + 1`.
    pub fn new(n: usize, mut counts: Vec<BigUint>) -> Self {
        assert!(counts.len() <= n + 1, "more counts than weights 0..=n");
        counts.resize(n + 1, BigUint::zero());
        Self { n, counts }
    }

    pub fn from_u64s(n: usize, counts: &[u64]) -> Self {
        Self::new(n, counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn from_sparse<C: Into<BigUint> + Clone>(n: usize, entries: &[(usize, C)]) -> Self {
        let mut counts = vec![BigUint::zero(); n + 1];
        for (w, c) in entries {
            counts[*w] += c.clone().into();
        }
        Self { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> BigUint {
        self.counts.get(weight).cloned().unwrap_or_default()
    }

    /// Nonzero `(weight, count)` pairs in increasing weight.
    pub fn sparse(&self) -> Vec<(usize, BigUint)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w, c.clone()))
            .collect()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.counts.iter().skip(1).position(|c| !c.is_zero()).map(|i| i + 1)
    }

    pub fn stats(&self) -> PolyStats {
        poly_stats(self)
    }
}

/// Minimum distance, total count and mean weight.
pub fn poly_stats(w: &WeightEnumerator) -> PolyStats {
    let total = w.total();
    let weighted: BigUint = w
        .counts
        .iter()
        .enumerate()
        .map(|(i, c)| c * BigUint::from(i))
        .sum();
    let mean_weight = if total.is_zero() {
        BigRational::zero()
    } else {
        BigRational::new(weighted.into(), total.clone().into())
    };
    PolyStats {
        min_distance: w.min_distance(),
        total,
        mean_weight,
    }
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigUint::one();
    for i in 0..=n {
        row.push(c.clone());
        c = c * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    row
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// Coefficients of `(1 - X)^i (1 + X)^(n - i)`, i.e. the Krawtchouk values
/// `K_0(i), ..., K_n(i)`, via the three-term recurrence in the degree.
pub fn krawtchouk_row(n: usize, i: usize) -> Vec<BigInt> {
    assert!(i <= n);
    let mut out = Vec::with_capacity(n + 1);
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    let slope = BigInt::from(n as i64 - 2 * i as i64);
    for k in 0..=n {
        out.push(cur.clone());
        if k == n {
            break;
        }
        // (k+1) K_{k+1} = (n - 2i) K_k - (n - k + 1) K_{k-1}
        let next = (&slope * &cur - BigInt::from(n + 1 - k) * &prev) / BigInt::from(k + 1);
        prev = std::mem::replace(&mut cur, next);
    }
    out
}

/// Exact MacWilliams transform: `(1/#C) Σ A_i (1-X)^i (1+X)^(n-i)`.
pub fn macwilliams_transform(w: &WeightEnumerator, code_size: &BigUint) -> Result<WeightEnumerator> {
    macwilliams_transform_with(w, code_size, Execution::default())
}

pub fn macwilliams_transform_with(
    w: &WeightEnumerator,
    code_size: &BigUint,
    exec: Execution,
) -> Result<WeightEnumerator> {
    if code_size.is_zero() || code_size.count_ones() != 1 || *code_size != w.total() {
        return Err(Error::InvalidCodeSize);
    }
    let n = w.n;
    let terms = w.sparse();
    let acc = map_reduce(
        exec,
        terms.len() as u64,
        vec![BigInt::zero(); n + 1],
        |range| {
            let mut acc = vec![BigInt::zero(); n + 1];
            for (i, a) in &terms[range.start as usize..range.end as usize] {
                let a = BigInt::from(a.clone());
                for (slot, k) in acc.iter_mut().zip(krawtchouk_row(n, *i)) {
                    *slot += &a * k;
                }
            }
            acc
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    let size = BigInt::from(code_size.clone());
    let mut counts = Vec::with_capacity(n + 1);
    for (index, c) in acc.into_iter().enumerate() {
        let (quot, rem) = c.div_rem(&size);
        if !rem.is_zero() {
            return Err(Error::NonExactDivision { index });
        }
        if quot.is_negative() {
            return Err(Error::NegativeCoefficient { index });
        }
        counts.push(quot.to_biguint().expect("nonnegative"));
    }
    Ok(WeightEnumerator { n, counts })
}

/// Signed integer to `BigUint`, `None` when negative.
pub(crate) fn nonnegative(x: &BigInt) -> Option<BigUint> {
    match x.sign() {
        Sign::Minus => None,
        _ => x.to_biguint(),
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn repetition_transforms_to_even_weights() {
        for n in 3..=10 {
            let rep = WeightEnumerator::from_sparse(n, &[(0, 1u32), (n, 1u32)]);
            let dual = macwilliams_transform(&rep, &big(2)).unwrap();
            for (i, c) in dual.counts().iter().enumerate() {
                let expected = if i % 2 == 0 { binomial(n, i) } else { BigUint::zero() };
                assert_eq!(*c, expected, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn hamming_dual_transform() {
        let dual = WeightEnumerator::from_sparse(7, &[(0, 1u32), (4, 7u32)]);
        let primal = macwilliams_transform(&dual, &big(8)).unwrap();
        assert_eq!(primal, WeightEnumerator::from_u64s(7, &[1, 0, 0, 7, 7, 0, 0, 1]));
        let back = macwilliams_transform(&primal, &big(16)).unwrap();
        assert_eq!(back, dual);
    }

    #[test]
    fn rejects_non_codes() {
        // (1+X)^3 + 3(1-X)(1+X)^2 = 4 + 6X - 2X^3
        let w = WeightEnumerator::from_u64s(3, &[1, 3, 0, 0]);
        assert!(matches!(
            macwilliams_transform(&w, &big(4)),
            Err(Error::NonExactDivision { .. }) | Err(Error::NegativeCoefficient { .. })
        ));
        let w = WeightEnumerator::from_u64s(3, &[1, 2, 0, 0]);
        assert_eq!(macwilliams_transform(&w, &big(3)), Err(Error::InvalidCodeSize));
        assert_eq!(macwilliams_transform(&w, &big(4)), Err(Error::InvalidCodeSize));
    }

    #[test]
    fn krawtchouk_matches_polynomial_product() {
        for n in 0..=12usize {
            for i in 0..=n {
                let mut poly = vec![BigInt::one()];
                for step in 0..n {
                    let sign = if step < i { -1 } else { 1 };
                    let mut next = vec![BigInt::zero(); poly.len() + 1];
                    for (d, c) in poly.iter().enumerate() {
                        next[d] += c;
                        next[d + 1] += c * sign;
                    }
                    poly = next;
                }
                assert_eq!(krawtchouk_row(n, i), poly);
            }
        }
    }

    #[test]
    fn stats() {
        let h = WeightEnumerator::from_u64s(7, &[1, 0, 0, 7, 7, 0, 0, 1]);
        let s = poly_stats(&h);
        assert_eq!(s.min_distance, Some(3));
        assert_eq!(s.total, big(16));
        assert_eq!(s.mean_weight, BigRational::from_integer(BigInt::from(56)) / BigInt::from(16));
        assert_eq!(WeightEnumerator::from_u64s(4, &[1]).min_distance(), None);
        assert_eq!(WeightEnumerator::from_u64s(4, &[1, 0, 6, 0, 1]).min_distance(), Some(2));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_row(5), [1u32, 5, 10, 10, 5, 1].map(BigUint::from).to_vec());
        assert_eq!(binomial(255, 30), binomial_row(255)[30]);
        assert!(binomial(255, 30) > BigUint::from(u64::MAX));
        assert_eq!(binomial(3, 4), BigUint::zero());
    }
}
