//! Closed-form weight distributions for the parity, Hamming, BCH and Melas
//! families and their duals, including the Hecke-trace formula for Melas
//! codes.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::classnum::class_number_row;
use crate::curves::melas_weight_from_trace;
use crate::enumerator::{binomial_row, macwilliams_transform, nonnegative, WeightEnumerator};
use crate::error::{Error, Result};
use crate::exec::{map_indices, Execution};
use crate::hecke::{hecke_trace_table, HeckeTraceTable};

fn require_m(family: &'static str, m: u32, min: u32) -> Result<u64> {
    if m < min || m > crate::gf2m::MAX_DEGREE {
        return Err(Error::FamilyRange {
            family,
            requirement: if min == 2 { "2 <= m <= 16" } else { "3 <= m <= 16" },
            got: m,
        });
    }
    Ok(1u64 << m)
}

/// `(−1)^⌊(i+1)/2⌋`.
fn alternating_sign(i: usize) -> i64 {
    if i.div_ceil(2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Divides exactly and checks nonnegativity.
fn exact_count(numerator: BigInt, denominator: &BigInt, index: usize) -> Result<BigUint> {
    let (quot, rem) = numerator.div_rem(denominator);
    if !rem.is_zero() {
        return Err(Error::FormulaInconsistent {
            index,
            reason: format!("{numerator} is not divisible by {denominator}"),
        });
    }
    nonnegative(&quot).ok_or_else(|| Error::FormulaInconsistent {
        index,
        reason: format!("negative count {quot}"),
    })
}

/// Even-weight code of length `n`: `A_i = C(n, i)` for even `i`.
pub fn parity_distribution(n: usize) -> Result<WeightEnumerator> {
    if n == 0 {
        return Err(Error::Unsupported("parity code needs length n >= 1".into()));
    }
    let counts = binomial_row(n)
        .into_iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c } else { BigUint::zero() })
        .collect();
    Ok(WeightEnumerator::new(n, counts))
}

/// `1 + Xⁿ`.
pub fn repetition_distribution(n: usize) -> WeightEnumerator {
    WeightEnumerator::from_sparse(n, &[(0, 1u32), (n, 1u32)])
}

/// `A_i = (C(q−1, i) + (q−1)(−1)^⌊(i+1)/2⌋ C(q/2−1, ⌊i/2⌋)) / q`.
pub fn hamming_distribution(m: u32) -> Result<WeightEnumerator> {
    let q = require_m("hamming", m, 2)?;
    let n = q as usize - 1;
    let full = binomial_row(n);
    let half = binomial_row(q as usize / 2 - 1);
    let qq = BigInt::from(q);
    let counts = (0..=n)
        .map(|i| {
            let num = BigInt::from(full[i].clone())
                + BigInt::from((q - 1) as i64 * alternating_sign(i)) * BigInt::from(half[i / 2].clone());
            exact_count(num, &qq, i)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightEnumerator::new(n, counts))
}

/// `{0: 1, q/2: q − 1}`.
pub fn hamming_dual_distribution(m: u32) -> Result<WeightEnumerator> {
    let q = require_m("hamming", m, 2)?;
    Ok(WeightEnumerator::from_sparse(q as usize - 1, &[(0, 1u64), (q as usize / 2, q - 1)]))
}

/// Weights and frequencies of the double-error-correcting BCH dual.
pub fn bch_dual_distribution(m: u32) -> Result<WeightEnumerator> {
    let q = require_m("bch2", m, 3)? as i64;
    let n = q as usize - 1;
    // (weight numerator over 2, frequency numerator, frequency denominator)
    let rows: Vec<(i64, i64, i64)> = if m % 2 == 1 {
        let s = 1i64 << m.div_ceil(2);
        vec![
            (q + s, (q - 1) * (q - s), 4),
            (q, (q - 1) * q + 2 * (q - 1), 2),
            (q - s, (q - 1) * (q + s), 4),
        ]
    } else {
        let r = 1i64 << (m / 2);
        vec![
            (q + 2 * r, (q - 1) * (q - 2 * r), 24),
            (q + r, (q - 1) * (q - r), 3),
            (q, (q - 1) * q + 4 * (q - 1), 4),
            (q - r, (q - 1) * (q + r), 3),
            (q - 2 * r, (q - 1) * (q + 2 * r), 24),
        ]
    };
    let mut entries = vec![(0usize, BigUint::one())];
    for (w2, num, den) in rows {
        let weight = (w2 / 2) as usize;
        let count = exact_count(BigInt::from(num), &BigInt::from(den), weight)?;
        entries.push((weight, count));
    }
    Ok(WeightEnumerator::from_sparse(n, &entries))
}

/// BCH primal distribution, obtained by transforming the dual table.
pub fn bch_distribution(m: u32) -> Result<WeightEnumerator> {
    let q = 1u64 << m;
    macwilliams_transform(&bch_dual_distribution(m)?, &BigUint::from(q * q))
}

/// Melas dual: weight `(q − 1 + t)/2` occurs `(q − 1)·H(t² − 4q)` times over
/// the admissible traces, plus `2(q − 1)` extra words of weight `q/2`
/// (`t = 1`) from the parameters with `λμ = 0`.
pub fn melas_dual_distribution(m: u32) -> Result<WeightEnumerator> {
    let q = require_m("melas", m, 3)?;
    let n = q as usize - 1;
    let row = class_number_row(q)?;
    let mut entries = vec![(0usize, BigUint::one())];
    for e in &row.entries {
        let extra = if e.t == 1 { 2 } else { 0 };
        let count = (q - 1) * (e.h + extra);
        entries.push((melas_weight_from_trace(q, e.t) as usize, BigUint::from(count)));
    }
    Ok(WeightEnumerator::from_sparse(n, &entries))
}

/// Triangular table of rationals `W_{i,j}(q)`, stored as integers scaled by `i!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WTable {
    q: u64,
    /// `scaled[i][j] = i! · W_{i,j}(q)`, `0 <= j <= i`.
    scaled: Vec<Vec<BigInt>>,
    factorials: Vec<BigInt>,
}

/// Next row of `i!·W`: `V_{i+1,j+1} = −q V_{i,j+2} − V_{i,j} − (q−i)·i·V_{i−1,j+1}`.
fn next_scaled_row(q: u64, i: usize, prev: &[BigInt], cur: &[BigInt], exec: Execution) -> Vec<BigInt> {
    let at = |row: &[BigInt], j: i64| -> BigInt {
        if j < 0 || j as usize >= row.len() {
            BigInt::zero()
        } else {
            row[j as usize].clone()
        }
    };
    let qq = BigInt::from(q);
    let back = BigInt::from((q as i64 - i as i64) * i as i64);
    map_indices(exec, i + 2, |jj| {
        // jj = j + 1
        if (jj + i + 1) % 2 == 1 {
            return BigInt::zero();
        }
        let j = jj as i64 - 1;
        -(&qq * at(cur, j + 2)) - at(cur, j) - &back * at(prev, j + 1)
    })
}

impl WTable {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn i_max(&self) -> usize {
        self.scaled.len() - 1
    }

    /// `W_{i,j}(q)`, zero outside `0 <= j <= i` and for `i ≢ j (mod 2)`.
    pub fn get(&self, i: usize, j: i64) -> BigRational {
        if j < 0 || j as usize > i || i > self.i_max() {
            return BigRational::zero();
        }
        BigRational::new(self.scaled[i][j as usize].clone(), self.factorials[i].clone())
    }
}

pub fn w_table(i_max: usize, q: u64) -> WTable {
    let mut scaled: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    let mut factorials = vec![BigInt::one()];
    if i_max >= 1 {
        scaled.push(vec![BigInt::zero(), -BigInt::one()]);
        factorials.push(BigInt::one());
    }
    for i in 1..i_max {
        let row = next_scaled_row(q, i, &scaled[i - 1], &scaled[i], Execution::Sequential);
        scaled.push(row);
        factorials.push(&factorials[i] * BigInt::from(i + 1));
    }
    WTable { q, scaled, factorials }
}

/// Melas distribution from binomials and Hecke traces:
///
/// `q²A_i = C(q−1,i) + 2(−1)^⌊(i+1)/2⌋(q−1)C(q/2−1,⌊i/2⌋) − (q−1) Σ_j W_{i,j}(q)(1 + τ_{j+2}(q))`.
pub fn melas_distribution(m: u32) -> Result<WeightEnumerator> {
    let q = require_m("melas", m, 3)?;
    let traces = hecke_trace_table(m, q as u32 + 1)?;
    melas_distribution_from_traces(m, &traces, Execution::default())
}

/// Same as [`melas_distribution`] with caller-supplied traces, which must
/// cover weights `2..=q+1`.
pub fn melas_distribution_from_traces(m: u32, traces: &HeckeTraceTable, exec: Execution) -> Result<WeightEnumerator> {
    let q = require_m("melas", m, 3)?;
    if traces.q != q {
        return Err(Error::Unsupported(format!("trace table is for q={}, not {q}", traces.q)));
    }
    let n = q as usize - 1;
    let one_plus_tau: Vec<BigInt> = (0..=n)
        .map(|j| {
            traces
                .get(j as u32 + 2)
                .map(|t| t + 1)
                .ok_or_else(|| Error::Unsupported(format!("missing trace for weight {}", j + 2)))
        })
        .collect::<Result<_>>()?;
    let full = binomial_row(n);
    let half = binomial_row(q as usize / 2 - 1);
    let q_minus_1 = BigInt::from(q - 1);
    let q_squared = BigInt::from(q * q);

    let mut counts = Vec::with_capacity(n + 1);
    let mut prev: Vec<BigInt> = Vec::new();
    let mut cur: Vec<BigInt> = vec![BigInt::one()];
    let mut factorial = BigInt::one();
    for i in 0..=n {
        if i >= 1 {
            let next = if i == 1 {
                vec![BigInt::zero(), -BigInt::one()]
            } else {
                next_scaled_row(q, i - 1, &prev, &cur, exec)
            };
            prev = std::mem::replace(&mut cur, next);
            factorial *= BigInt::from(i);
        }
        let products = map_indices(exec, i + 1, |j| {
            if (i + j) % 2 == 1 || cur[j].is_zero() {
                BigInt::zero()
            } else {
                &cur[j] * &one_plus_tau[j]
            }
        });
        let hecke_sum: BigInt = products.into_iter().sum();
        let head = BigInt::from(full[i].clone())
            + BigInt::from(2 * (q as i64 - 1) * alternating_sign(i)) * BigInt::from(half[i / 2].clone());
        // i!·q²·A_i
        let scaled = head * &factorial - &q_minus_1 * hecke_sum;
        let denom = &q_squared * &factorial;
        counts.push(exact_count(scaled, &denom, i)?);
    }
    Ok(WeightEnumerator::new(n, counts))
}
