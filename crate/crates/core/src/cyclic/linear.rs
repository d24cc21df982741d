//! Binary vectors, row reduction over F₂, and exhaustive span enumeration.

use std::fmt;

use crate::enumerator::WeightEnumerator;
use crate::error::{Error, Result};
use crate::exec::{add_histograms, map_reduce, Execution};
use crate::gf2m::BitPolynomial;

/// A binary word `(v_0, ..., v_{n-1})`, packed into 64-bit limbs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    n: usize,
    limbs: Vec<u64>,
}

fn limb_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl Codeword {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            limbs: vec![0; limb_count(n)],
        }
    }

    /// The coefficient vector of `p`; panics if `deg p >= n`.
    pub fn from_polynomial(n: usize, p: &BitPolynomial) -> Self {
        assert!(p.degree().is_none_or(|d| d < n), "polynomial does not fit length {n}");
        let mut limbs = p.limbs().to_vec();
        limbs.resize(limb_count(n), 0);
        Self { n, limbs }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(n: usize, bits: I) -> Self {
        let mut w = Self::zero(n);
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                w.set(i, true);
            }
        }
        w
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.limbs[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.n);
        let mask = 1u64 << (i % 64);
        if bit {
            self.limbs[i / 64] |= mask;
        } else {
            self.limbs[i / 64] &= !mask;
        }
    }

    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a ^= b;
        }
    }

    /// Standard inner product over F₂.
    pub fn dot(&self, other: &Self) -> bool {
        self.limbs
            .iter()
            .zip(&other.limbs)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Cyclic shift `(v_0..v_{n-1}) -> (v_{n-1}, v_0, ..., v_{n-2})`, i.e. multiplication by `T`.
    pub fn rotate(&self) -> Self {
        Self::from_bits(self.n, (0..self.n).map(|i| self.get((i + self.n - 1) % self.n)))
    }

    pub fn to_polynomial(&self) -> BitPolynomial {
        BitPolynomial::from_limbs(self.limbs.clone())
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    fn leading_index(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.get(i))
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.n).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "Codeword({s})")
    }
}

/// Reduced row echelon form; zero rows are dropped. Returns the rows and
/// their pivot columns.
pub fn row_reduce(rows: &[Codeword]) -> (Vec<Codeword>, Vec<usize>) {
    let mut basis: Vec<Codeword> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in rows {
        let mut r = row.clone();
        for (b, &p) in basis.iter().zip(&pivots) {
            if r.get(p) {
                r.xor_assign(b);
            }
        }
        if let Some(p) = r.leading_index() {
            for b in basis.iter_mut() {
                if b.get(p) {
                    b.xor_assign(&r);
                }
            }
            basis.push(r);
            pivots.push(p);
        }
    }
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    (
        order.iter().map(|&i| basis[i].clone()).collect(),
        order.iter().map(|&i| pivots[i]).collect(),
    )
}

pub fn rank(rows: &[Codeword]) -> usize {
    row_reduce(rows).0.len()
}

/// A basis of `{v : <v, r> = 0 for every row r}` in F₂ⁿ.
pub fn nullspace(rows: &[Codeword], n: usize) -> Vec<Codeword> {
    let (rref, pivots) = row_reduce(rows);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = Codeword::zero(n);
            v.set(free, true);
            for (r, &p) in rref.iter().zip(&pivots) {
                if r.get(free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}

/// All `2^k` words spanned by an independent basis.
pub fn span(basis: &[Codeword], n: usize) -> Vec<Codeword> {
    let mut out = vec![Codeword::zero(n)];
    for b in basis {
        let extra: Vec<Codeword> = out
            .iter()
            .map(|w| {
                let mut w = w.clone();
                w.xor_assign(b);
                w
            })
            .collect();
        out.extend(extra);
    }
    out
}

/// Weight histogram of the span of `basis` (assumed independent), walking
/// messages in Gray-code order so each step is a single row XOR.
pub fn span_weight_distribution(
    basis: &[Codeword],
    n: usize,
    work_limit: u64,
    exec: Execution,
) -> Result<WeightEnumerator> {
    let k = basis.len();
    if k >= 64 || (1u64 << k) > work_limit {
        return Err(Error::WorkLimitExceeded { k, limit: work_limit });
    }
    let total = 1u64 << k;
    let hist = if n <= 64 {
        let rows: Vec<u64> = basis.iter().map(|b| b.limbs.first().copied().unwrap_or(0)).collect();
        map_reduce(exec, total, vec![0u64; n + 1], |r| gray_chunk_u64(&rows, n, r), add_histograms)
    } else {
        map_reduce(exec, total, vec![0u64; n + 1], |r| gray_chunk_limbs(basis, n, r), add_histograms)
    };
    Ok(WeightEnumerator::from_u64s(n, &hist))
}

fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

fn gray_chunk_u64(rows: &[u64], n: usize, range: std::ops::Range<u64>) -> Vec<u64> {
    let mut hist = vec![0u64; n + 1];
    let start = gray(range.start);
    let mut word = rows
        .iter()
        .enumerate()
        .filter(|(j, _)| (start >> j) & 1 == 1)
        .fold(0u64, |acc, (_, r)| acc ^ r);
    for i in range.clone() {
        hist[word.count_ones() as usize] += 1;
        let next = i + 1;
        if next < range.end {
            word ^= rows[next.trailing_zeros() as usize];
        }
    }
    hist
}

fn gray_chunk_limbs(rows: &[Codeword], n: usize, range: std::ops::Range<u64>) -> Vec<u64> {
    let mut hist = vec![0u64; n + 1];
    let start = gray(range.start);
    let mut word = Codeword::zero(n);
    for (j, r) in rows.iter().enumerate() {
        if (start >> j) & 1 == 1 {
            word.xor_assign(r);
        }
    }
    for i in range.clone() {
        hist[word.weight() as usize] += 1;
        let next = i + 1;
        if next < range.end {
            word.xor_assign(&rows[next.trailing_zeros() as usize]);
        }
    }
    hist
}
