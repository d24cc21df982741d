use std::fmt;

use super::poly::BitPolynomial;
use crate::error::{Error, Result};

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

/// An element of F_{2^m}: the residue bits of a polynomial modulo the
/// context's modulus. Meaningful only within the context that produced it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: Self = FieldElement(0);
    pub const ONE: Self = FieldElement(1);

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({:#x})", self.0)
    }
}

/// A realized GF(2^m) with the canonical modulus and primitive element,
/// and eager log/antilog/trace tables.
#[derive(Clone)]
pub struct FieldContext {
    m: u32,
    modulus: u32,
    alpha: FieldElement,
    /// `exp[i] = alpha^i` for `0 <= i < 2(q-1)`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
    trace: Vec<u8>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("m", &self.m)
            .field("modulus", &self.modulus_poly())
            .field("alpha", &self.alpha)
            .finish()
    }
}

/// Carry-less product of two polynomials of degree < 32.
fn clmul(a: u64, b: u64) -> u64 {
    let mut r = 0;
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a << i;
        }
        b >>= 1;
        i += 1;
    }
    r
}

fn reduce(mut a: u64, modulus: u64) -> u64 {
    let md = 63 - modulus.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= md {
        a ^= modulus << (63 - a.leading_zeros() - md);
    }
    a
}

fn mulmod(a: u64, b: u64, modulus: u64) -> u64 {
    reduce(clmul(a, b), modulus)
}

fn small_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = reduce(a, b);
        a = b;
        b = r;
    }
    a
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a degree-`m` polynomial over F₂.
fn is_irreducible(f: u64, m: u32) -> bool {
    // T^(2^k) mod f by repeated squaring of T.
    let frob = |k: u32| {
        let mut x = reduce(2, f);
        for _ in 0..k {
            x = mulmod(x, x, f);
        }
        x
    };
    if frob(m) != reduce(2, f) {
        return false;
    }
    prime_factors(m as u64)
        .into_iter()
        .all(|p| small_gcd(f, frob(m / p as u32) ^ reduce(2, f)) == 1)
}

impl FieldContext {
    /// Builds GF(2^m) from the irreducible modulus of smallest integer
    /// encoding and the primitive element of smallest encoding.
    pub fn new(m: u32) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let q = 1u64 << m;
        let modulus = (q + 1..2 * q)
            .step_by(2)
            .find(|&f| is_irreducible(f, m))
            .expect("an irreducible polynomial exists in every degree");
        let order = q - 1;
        let cofactors: Vec<u64> = prime_factors(order).into_iter().map(|p| order / p).collect();
        let pow = |a: u64, mut e: u64| {
            let (mut base, mut acc) = (a, 1u64);
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(acc, base, modulus);
                }
                base = mulmod(base, base, modulus);
                e >>= 1;
            }
            acc
        };
        let alpha = (2..q)
            .find(|&a| cofactors.iter().all(|&c| pow(a, c) != 1))
            .expect("the multiplicative group is cyclic");

        let n = order as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u64;
        for i in 0..n {
            exp[i] = x as u32;
            exp[i + n] = x as u32;
            log[x as usize] = i as u32;
            x = mulmod(x, alpha, modulus);
        }
        debug_assert_eq!(x, 1);

        let mut ctx = Self {
            m,
            modulus: modulus as u32,
            alpha: FieldElement(alpha as u32),
            exp,
            log,
            trace: Vec::new(),
        };
        ctx.trace = (0..q as u32)
            .map(|v| ctx.trace_by_frobenius(FieldElement(v)))
            .collect();
        Ok(ctx)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        1 << self.m
    }

    pub fn modulus_poly(&self) -> BitPolynomial {
        BitPolynomial::from_u64(self.modulus as u64)
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    /// Converts raw bits to an element, reducing modulo the modulus.
    pub fn element(&self, bits: u64) -> FieldElement {
        FieldElement(reduce(bits, self.modulus as u64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q()).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q()).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn inverse(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::InverseOfZero);
        }
        let n = self.q() - 1;
        Ok(FieldElement(self.exp[((n - self.log[a.0 as usize]) % n) as usize]))
    }

    /// `a^e` for any integer exponent; negative exponents need `a != 0`.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        let n = (self.q() - 1) as i64;
        if a.is_zero() {
            return match e {
                0 => Ok(FieldElement::ONE),
                e if e > 0 => Ok(FieldElement::ZERO),
                _ => Err(Error::InverseOfZero),
            };
        }
        let l = (self.log[a.0 as usize] as i64 * e.rem_euclid(n)).rem_euclid(n);
        Ok(FieldElement(self.exp[l as usize]))
    }

    /// `alpha^i` for any integer `i`.
    pub fn alpha_pow(&self, i: i64) -> FieldElement {
        let n = (self.q() - 1) as i64;
        FieldElement(self.exp[i.rem_euclid(n) as usize])
    }

    /// Discrete logarithm base alpha, `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    /// The unique square root (squaring is a bijection in characteristic 2).
    pub fn sqrt(&self, a: FieldElement) -> FieldElement {
        let mut x = a;
        for _ in 0..self.m - 1 {
            x = self.square(x);
        }
        x
    }

    /// Absolute trace to F₂, from the precomputed table.
    pub fn trace(&self, x: FieldElement) -> u8 {
        self.trace[x.0 as usize]
    }

    /// Absolute trace as `x + x^2 + ... + x^(2^(m-1))`.
    pub fn trace_by_frobenius(&self, x: FieldElement) -> u8 {
        let mut acc = FieldElement::ZERO;
        let mut y = x;
        for _ in 0..self.m {
            acc = self.add(acc, y);
            y = self.square(y);
        }
        debug_assert!(acc.0 <= 1);
        acc.0 as u8
    }

    /// Frobenius orbit `x, x^2, x^4, ...` up to (excluding) the return to `x`.
    pub fn conjugates(&self, x: FieldElement) -> Vec<FieldElement> {
        let mut out = vec![x];
        let mut y = self.square(x);
        while y != x {
            out.push(y);
            y = self.square(y);
        }
        out
    }

    /// Minimal polynomial over F₂: the product of `T - c` over the
    /// Frobenius orbit of `x`.
    pub fn minimal_polynomial(&self, x: FieldElement) -> BitPolynomial {
        // Coefficients in F_q, lowest degree first.
        let mut coeffs = vec![FieldElement::ONE];
        for c in self.conjugates(x) {
            let mut next = vec![FieldElement::ZERO; coeffs.len() + 1];
            for (i, &a) in coeffs.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], a);
                next[i] = self.add(next[i], self.mul(a, c));
            }
            coeffs = next;
        }
        BitPolynomial::from_coefficients(coeffs.into_iter().map(|c| {
            assert!(c.0 <= 1, "orbit product has a coefficient outside F2");
            c.0 == 1
        }))
    }

    /// Evaluates an F₂ polynomial at a field element by Horner's rule.
    pub fn eval(&self, p: &BitPolynomial, x: FieldElement) -> FieldElement {
        let Some(deg) = p.degree() else {
            return FieldElement::ZERO;
        };
        (0..=deg).rev().fold(FieldElement::ZERO, |acc, i| {
            let acc = self.mul(acc, x);
            if p.coeff(i) {
                self.add(acc, FieldElement::ONE)
            } else {
                acc
            }
        })
    }
}

/// Shorthand for [`FieldContext::new`].
pub fn make_field(m: u32) -> Result<FieldContext> {
    FieldContext::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn poly(s: &str) -> BitPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(make_field(3).unwrap().modulus_poly(), poly("T^3+T+1"));
        assert_eq!(make_field(4).unwrap().modulus_poly(), poly("T^4+T+1"));
        assert_eq!(make_field(2).unwrap().modulus_poly(), poly("T^2+T+1"));
        assert_eq!(make_field(8).unwrap().modulus_poly(), poly("T^8+T^4+T^3+T+1"));
    }

    #[test]
    fn degree_range_enforced() {
        assert_eq!(make_field(1).unwrap_err(), Error::DegreeOutOfRange(1));
        assert_eq!(make_field(17).unwrap_err(), Error::DegreeOutOfRange(17));
    }

    #[test]
    fn primitive_element_is_smallest_with_full_order() {
        // T^8+T^4+T^3+T+1 does not have T as a primitive root.
        let f8 = make_field(8).unwrap();
        assert_eq!(f8.alpha().bits(), 3);
        assert_eq!(make_field(4).unwrap().alpha().bits(), 2);
    }

    #[test]
    fn alpha_cubed_reduces_by_hand() {
        let f = make_field(3).unwrap();
        let a = f.alpha();
        assert_eq!(f.pow(a, 3).unwrap(), f.add(a, FieldElement::ONE));
    }

    #[test]
    fn basic_axioms() {
        let f = make_field(5).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, a), FieldElement::ZERO);
            assert_eq!(f.mul(a, FieldElement::ONE), a);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inverse(a).unwrap()), FieldElement::ONE);
                assert_eq!(f.square(f.sqrt(a)), a);
            }
        }
        assert_eq!(f.inverse(FieldElement::ZERO), Err(Error::InverseOfZero));
    }

    #[test]
    fn trace_basics() {
        for m in 2..=10 {
            let f = make_field(m).unwrap();
            assert_eq!(f.trace(FieldElement::ZERO), 0);
            assert_eq!(f.trace(FieldElement::ONE) as u32, m % 2);
            let zeros = f.elements().filter(|&x| f.trace(x) == 0).count();
            assert_eq!(zeros as u32, f.q() / 2);
        }
    }

    #[test]
    fn trace_linear_and_frobenius_permutes() {
        for m in 2..=8 {
            let f = make_field(m).unwrap();
            for x in f.elements() {
                assert_eq!(f.trace(x), f.trace_by_frobenius(x));
                for y in f.elements() {
                    assert_eq!(f.trace(f.add(x, y)), f.trace(x) ^ f.trace(y));
                }
            }
            let images: HashSet<_> = f.elements().map(|x| f.square(x)).collect();
            assert_eq!(images.len() as u32, f.q());
            let fixed: Vec<_> = f.elements().filter(|&x| f.square(x) == x).collect();
            assert_eq!(fixed, vec![FieldElement::ZERO, FieldElement::ONE]);
        }
    }

    #[test]
    fn alpha_powers_enumerate_units() {
        for m in 2..=12 {
            let f = make_field(m).unwrap();
            let seen: HashSet<_> = (0..f.q() as i64 - 1).map(|i| f.alpha_pow(i)).collect();
            assert_eq!(seen.len() as u32, f.q() - 1);
            assert!(!seen.contains(&FieldElement::ZERO));
        }
    }

    #[test]
    fn minimal_polynomials_of_small_codes() {
        let f3 = make_field(3).unwrap();
        assert_eq!(f3.minimal_polynomial(f3.alpha()), poly("T^3+T+1"));
        let f4 = make_field(4).unwrap();
        assert_eq!(f4.minimal_polynomial(f4.alpha_pow(-1)), poly("T^4+T^3+1"));
        assert_eq!(f4.minimal_polynomial(f4.alpha_pow(3)), poly("T^4+T^3+T^2+T+1"));
        assert_eq!(f4.minimal_polynomial(f4.alpha_pow(5)), poly("T^2+T+1"));
    }

    #[test]
    fn minimal_polynomial_vanishes_and_degree_divides_m() {
        for m in 2..=8 {
            let f = make_field(m).unwrap();
            for x in f.elements() {
                let p = f.minimal_polynomial(x);
                assert_eq!(f.eval(&p, x), FieldElement::ZERO);
                assert_eq!(m as usize % p.degree().unwrap(), 0);
                assert!(is_irreducible(p.to_u64().unwrap(), p.degree().unwrap() as u32) || p.degree() == Some(1));
            }
        }
    }
}
