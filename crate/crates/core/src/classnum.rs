//! Kronecker class numbers `H(d)` by counting reduced positive-definite
//! binary quadratic forms.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};

/// Number of triples `(a, b, c)` with `b² − 4ac = d`, `|b| ≤ a ≤ c`, and
/// `b ≥ 0` whenever `|b| = a` or `a = c`.
pub fn kronecker_class_number(d: i64) -> Result<u64> {
    if d >= 0 || !matches!(d.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidDiscriminant(d));
    }
    let abs_d = -d;
    let a_max = (abs_d / 3).sqrt();
    let mut count = 0u64;
    // b has the parity of d.
    let mut b = abs_d % 2;
    while b <= a_max {
        let ac = (b * b + abs_d) / 4;
        let a_lo = b.max(1);
        let a_hi = ac.sqrt();
        for a in a_lo..=a_hi {
            if ac % a != 0 {
                continue;
            }
            let c = ac / a;
            // For b > 0 both signs are reduced unless a boundary forces b > 0.
            count += if b == 0 || b == a || a == c { 1 } else { 2 };
        }
        b += 2;
    }
    Ok(count)
}

fn memo() -> &'static RwLock<HashMap<i64, u64>> {
    static MEMO: OnceLock<RwLock<HashMap<i64, u64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// [`kronecker_class_number`] memoized for the lifetime of the process.
pub fn class_number_cached(d: i64) -> Result<u64> {
    if let Some(&h) = memo().read().expect("memo poisoned").get(&d) {
        return Ok(h);
    }
    let h = kronecker_class_number(d)?;
    memo().write().expect("memo poisoned").insert(d, h);
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassNumberEntry {
    pub t: i64,
    pub d: i64,
    pub h: u64,
}

/// `(t, t² − 4q, H(t² − 4q))` over odd `t` with `t ≡ q + 1 (mod 4)` and `t² < 4q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassNumberRow {
    pub q: u64,
    pub entries: Vec<ClassNumberEntry>,
}

impl ClassNumberRow {
    pub fn sum_h(&self) -> i64 {
        self.entries.iter().map(|e| e.h as i64).sum()
    }

    pub fn sum_t_h(&self) -> i64 {
        self.entries.iter().map(|e| e.t * e.h as i64).sum()
    }

    pub fn h_at(&self, t: i64) -> Option<u64> {
        self.entries.iter().find(|e| e.t == t).map(|e| e.h)
    }
}

/// `m` with `q = 2^m`, `m >= 2`.
pub(crate) fn two_power_exponent(q: u64) -> Result<u32> {
    if q.count_ones() != 1 || q < 4 {
        return Err(Error::NotTwoPower(q));
    }
    Ok(q.trailing_zeros())
}

/// The admissible Frobenius traces for `q`, in increasing order.
pub fn admissible_traces(q: u64) -> Vec<i64> {
    let q = q as i64;
    let bound = (4 * q).sqrt() + 1;
    (-bound..=bound)
        .filter(|t| t * t < 4 * q && (t - (q + 1)).rem_euclid(4) == 0)
        .collect()
}

pub fn class_number_row(q: u64) -> Result<ClassNumberRow> {
    two_power_exponent(q)?;
    let entries = admissible_traces(q)
        .into_iter()
        .map(|t| {
            let d = t * t - 4 * q as i64;
            Ok(ClassNumberEntry { t, d, h: class_number_cached(d)? })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassNumberRow { q, entries })
}
