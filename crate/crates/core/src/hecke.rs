//! Traces of the Hecke operator `T_q` on cusp forms for Γ₁(4), from the
//! Eichler–Selberg trace formula with Kronecker class numbers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::classnum::{class_number_row, two_power_exponent, ClassNumberRow};
use crate::error::{Error, Result};

/// Default largest weight in a trace table.
pub const DEFAULT_KMAX: u32 = 40;

/// `Q_κ(t, n)`: `Q_0 = 1`, `Q_1 = t`, `Q_{κ+1} = t Q_κ − n Q_{κ−1}`.
pub fn q_poly(kappa: u32, t: i64, n: i64) -> BigInt {
    q_poly_sequence(kappa, t, n).pop().expect("nonempty")
}

/// `Q_0(t, n), ..., Q_κmax(t, n)`.
pub fn q_poly_sequence(kappa_max: u32, t: i64, n: i64) -> Vec<BigInt> {
    let (t, n) = (BigInt::from(t), BigInt::from(n));
    let mut out = Vec::with_capacity(kappa_max as usize + 1);
    out.push(BigInt::one());
    if kappa_max >= 1 {
        out.push(t.clone());
    }
    for k in 2..=kappa_max as usize {
        let next = &t * &out[k - 1] - &n * &out[k - 2];
        out.push(next);
    }
    out
}

/// Sign `(−1)^(kq/2)` in front of the class-number sum.
fn sign_factor(k: u32, q: u64) -> i64 {
    if (k as u64 * (q / 2)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `−1 − (−1)^(kq/2) Σ_t Q_{k−2}(t, q) H(t² − 4q)`, evaluated for any `k >= 2`.
/// At `k = 2` this reproduces `−q` exactly when `Σ_t H = q − 1`.
pub fn trace_formula(k: u32, row: &ClassNumberRow) -> BigInt {
    assert!(k >= 2);
    let q = row.q as i64;
    let sum: BigInt = row
        .entries
        .iter()
        .map(|e| q_poly(k - 2, e.t, q) * BigInt::from(e.h))
        .sum();
    -BigInt::one() - BigInt::from(sign_factor(k, row.q)) * sum
}

/// `τ_k(q)`, with the convention `τ_2(q) = −q`.
pub fn hecke_trace(k: u32, q: u64) -> Result<BigInt> {
    two_power_exponent(q)?;
    if k < 2 {
        return Err(Error::Unsupported(format!("weight {k} below 2")));
    }
    if k == 2 {
        return Ok(-BigInt::from(q));
    }
    Ok(trace_formula(k, &class_number_row(q)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeTraceTable {
    pub q: u64,
    pub traces: BTreeMap<u32, BigInt>,
}

impl HeckeTraceTable {
    pub fn get(&self, k: u32) -> Option<&BigInt> {
        self.traces.get(&k)
    }

    pub fn k_max(&self) -> u32 {
        self.traces.keys().next_back().copied().unwrap_or(2)
    }
}

/// `τ_k(q)` for `2 <= k <= k_max`, sharing one class-number row and one
/// `Q` sequence per trace `t`.
pub fn hecke_trace_table(m: u32, k_max: u32) -> Result<HeckeTraceTable> {
    if !(2..=62).contains(&m) {
        return Err(Error::NotTwoPower(1u64.checked_shl(m).unwrap_or(0)));
    }
    let q = 1u64 << m;
    let row = class_number_row(q)?;
    let k_max = k_max.max(2);
    let mut sums = vec![BigInt::zero(); k_max as usize - 1];
    for e in &row.entries {
        let h = BigInt::from(e.h);
        for (kappa, qk) in q_poly_sequence(k_max - 2, e.t, q as i64).into_iter().enumerate() {
            sums[kappa] += qk * &h;
        }
    }
    let mut traces = BTreeMap::new();
    traces.insert(2, -BigInt::from(q));
    for k in 3..=k_max {
        let s = &sums[k as usize - 2];
        traces.insert(k, -BigInt::one() - BigInt::from(sign_factor(k, q)) * s);
    }
    Ok(HeckeTraceTable { q, traces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use num_traits::ToPrimitive;

    #[test]
    fn small_q_values() {
        assert_eq!(q_poly(0, 7, 3), BigInt::one());
        assert_eq!(q_poly(1, 7, 3), BigInt::from(7));
        for (t, n) in [(5, 16), (-3, 8), (0, 4)] {
            assert_eq!(q_poly(2, t, n), BigInt::from(t * t - n));
        }
        assert_eq!(q_poly(3, 5, 16), BigInt::from(-35));
    }

    #[test]
    fn closed_form_matches_recursion() {
        for n in 1..=12i64 {
            for t in -7..=7i64 {
                if t * t >= 4 * n {
                    continue;
                }
                let disc = Complex64::new((t * t - 4 * n) as f64, 0.0).sqrt();
                let rho = (Complex64::new(t as f64, 0.0) + disc) / 2.0;
                let rho_bar = rho.conj();
                for kappa in 0..=30u32 {
                    let closed = (rho.powu(kappa + 1) - rho_bar.powu(kappa + 1)) / (rho - rho_bar);
                    let exact = q_poly(kappa, t, n).to_f64().unwrap();
                    let scale = exact.abs().max((n as f64).powf(kappa as f64 / 2.0)).max(1.0);
                    assert!((closed.re - exact).abs() <= 1e-9 * scale, "t={t} n={n} k={kappa}");
                    assert!(closed.im.abs() <= 1e-9 * scale);
                }
            }
        }
    }

    #[test]
    fn low_weight_traces() {
        assert_eq!(hecke_trace(2, 16).unwrap(), BigInt::from(-16));
        assert_eq!(hecke_trace(3, 16).unwrap(), BigInt::zero());
        for m in 2..=10 {
            assert_eq!(hecke_trace(4, 1 << m).unwrap(), BigInt::zero(), "m={m}");
        }
        assert!(hecke_trace(3, 12).is_err());
        assert!(hecke_trace(3, 2).is_err());
        assert!(hecke_trace(1, 16).is_err());
    }

    #[test]
    fn formal_weight_two_reproduces_convention() {
        for m in 2..=12 {
            let q = 1u64 << m;
            let row = class_number_row(q).unwrap();
            assert_eq!(trace_formula(2, &row), -BigInt::from(q));
        }
    }

    #[test]
    fn table_matches_single_traces() {
        let table = hecke_trace_table(5, 20).unwrap();
        assert_eq!(table.k_max(), 20);
        for k in 2..=20 {
            assert_eq!(table.get(k).unwrap(), &hecke_trace(k, 32).unwrap());
        }
    }
}
