use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A polynomial over F₂, stored as little-endian 64-bit limbs
/// (bit `i` is the coefficient of `T^i`).
///
/// The limb vector never carries trailing zero limbs, so the leading
/// stored bit of a nonzero polynomial is always its leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitPolynomial {
    limbs: Vec<u64>,
}

impl BitPolynomial {
    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    pub fn from_u64(bits: u64) -> Self {
        Self::from_limbs(vec![bits])
    }

    pub fn from_limbs(limbs: Vec<u64>) -> Self {
        let mut p = Self { limbs };
        p.normalize();
        p
    }

    /// `T^d`.
    pub fn monomial(d: usize) -> Self {
        let mut limbs = vec![0u64; d / 64 + 1];
        limbs[d / 64] = 1 << (d % 64);
        Self { limbs }
    }

    /// `T^n - 1`, which equals `T^n + 1` over F₂.
    pub fn cyclotomic_modulus(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.flip(0);
        p
    }

    /// Builds a polynomial from its coefficient bits `c_0, c_1, ...`.
    pub fn from_coefficients<I: IntoIterator<Item = bool>>(coeffs: I) -> Self {
        let mut limbs = Vec::new();
        for (i, c) in coeffs.into_iter().enumerate() {
            if i / 64 >= limbs.len() {
                limbs.push(0);
            }
            if c {
                limbs[i / 64] |= 1 << (i % 64);
            }
        }
        Self::from_limbs(limbs)
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|l| (l >> (i % 64)) & 1 == 1)
    }

    pub fn flip(&mut self, i: usize) {
        if i / 64 >= self.limbs.len() {
            self.limbs.resize(i / 64 + 1, 0);
        }
        self.limbs[i / 64] ^= 1 << (i % 64);
        self.normalize();
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    /// Low 64 coefficients as an integer; `None` when the degree is 64 or more.
    pub fn to_u64(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    /// `self ^= other << shift`, without renormalizing.
    fn xor_shifted_raw(&mut self, other: &Self, shift: usize) {
        if other.is_zero() {
            return;
        }
        let (ws, bs) = (shift / 64, shift % 64);
        let need = ws + other.limbs.len() + 1;
        if self.limbs.len() < need {
            self.limbs.resize(need, 0);
        }
        for (i, &l) in other.limbs.iter().enumerate() {
            self.limbs[ws + i] ^= l << bs;
            if bs != 0 {
                self.limbs[ws + i + 1] ^= l >> (64 - bs);
            }
        }
    }

    pub fn shifted(&self, shift: usize) -> Self {
        let mut out = Self::zero();
        out.xor_shifted_raw(self, shift);
        out.normalize();
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut limbs = long.limbs.clone();
        for (a, b) in limbs.iter_mut().zip(&short.limbs) {
            *a ^= b;
        }
        Self::from_limbs(limbs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero();
        let Some(deg) = a.degree() else {
            return out;
        };
        for i in 0..=deg {
            if a.coeff(i) {
                out.xor_shifted_raw(b, i);
            }
        }
        out.normalize();
        out
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            rem.xor_shifted_raw(divisor, shift);
            rem.normalize();
            quot.flip(shift);
        }
        (quot, rem)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    /// The reciprocal `T^deg · p(1/T)`: coefficient order reversed.
    pub fn reciprocal(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => Self::from_coefficients((0..=d).map(|i| self.coeff(d - i))),
        }
    }

    /// Lowercase hexadecimal of the integer encoding, most significant digit first.
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = format!("{:x}", self.limbs.last().unwrap());
        for l in self.limbs.iter().rev().skip(1) {
            s.push_str(&format!("{l:016x}"));
        }
        s
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches("0x");
        if s.is_empty() {
            return Err(Error::Parse("empty hex string".into()));
        }
        let mut limbs = Vec::new();
        let bytes = s.as_bytes();
        let mut end = bytes.len();
        while end > 0 {
            let start = end.saturating_sub(16);
            let chunk = std::str::from_utf8(&bytes[start..end]).unwrap();
            let limb = u64::from_str_radix(chunk, 16)
                .map_err(|_| Error::Parse(format!("bad hex digits in {s:?}")))?;
            limbs.push(limb);
            end = start;
        }
        Ok(Self::from_limbs(limbs))
    }
}

impl fmt::Display for BitPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for i in (0..=deg).rev().filter(|&i| self.coeff(i)) {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "T")?,
                _ => write!(f, "T^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BitPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitPolynomial({self})")
    }
}

impl FromStr for BitPolynomial {
    type Err = Error;

    /// Parses forms like `T^8+T^7+T^6+T^4+1`; repeated terms cancel.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for term in cleaned.split('+') {
            let exp = match term {
                "1" => 0,
                "T" | "t" | "X" | "x" => 1,
                _ => {
                    let rest = term
                        .strip_prefix("T^")
                        .or_else(|| term.strip_prefix("t^"))
                        .or_else(|| term.strip_prefix("X^"))
                        .or_else(|| term.strip_prefix("x^"))
                        .ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?;
                    rest.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?
                }
            };
            p.flip(exp);
        }
        Ok(p)
    }
}
