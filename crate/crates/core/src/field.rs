//! Arithmetic in the prime field GF(p).
//!
//! Coefficients are stored as canonical residues `0..p` in a `u32`. The modulus is
//! capped below 2^31 so that any product of two residues, plus one more residue,
//! fits in a `u64`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("operands live in different fields (GF({0}) vs GF({1}))")]
    ModulusMismatch(u32, u32),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
}

/// A prime modulus `2 <= p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub const MAX: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= Self::MAX || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self(p as u32))
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    /// Canonical residue of an arbitrary signed integer.
    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.0 as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.0 - b)
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    /// Inverse by the extended Euclidean algorithm. `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.0) {
            return None;
        }
        let (mut r0, mut r1) = (self.0 as i64, (a % self.0) as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce(s0))
    }

    pub fn div(self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn element(self, v: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(v),
            modulus: self,
        }
    }
}

impl TryFrom<u32> for PrimeModulus {
    type Error = FieldError;

    fn try_from(p: u32) -> Result<Self, Self::Error> {
        Self::new(p as u64)
    }
}

impl From<PrimeModulus> for u32 {
    fn from(p: PrimeModulus) -> u32 {
        p.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic Miller-Rabin, exact for all `n < 3.3 * 10^24`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// An element of GF(p) together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: PrimeModulus,
}

impl FieldElement {
    pub fn new(value: i64, modulus: PrimeModulus) -> Self {
        modulus.element(value)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: Self) -> Result<PrimeModulus, FieldError> {
        if self.modulus != other.modulus {
            return Err(FieldError::ModulusMismatch(
                self.modulus.value(),
                other.modulus.value(),
            ));
        }
        Ok(self.modulus)
    }

    /// Applies `op`. Unary operations ignore `other` apart from the modulus check.
    pub fn arith(self, other: Self, op: ArithOp) -> Result<Self, FieldError> {
        let p = self.same_field(other)?;
        let value = match op {
            ArithOp::Add => p.add(self.value, other.value),
            ArithOp::Sub => p.sub(self.value, other.value),
            ArithOp::Mul => p.mul(self.value, other.value),
            ArithOp::Div => p
                .div(self.value, other.value)
                .ok_or(FieldError::DivisionByZero(p.value()))?,
            ArithOp::Neg => p.neg(self.value),
            ArithOp::Inv => p
                .inv(self.value)
                .ok_or(FieldError::DivisionByZero(p.value()))?,
        };
        Ok(Self { value, modulus: p })
    }

    pub fn try_add(self, other: Self) -> Result<Self, FieldError> {
        self.arith(other, ArithOp::Add)
    }

    pub fn try_sub(self, other: Self) -> Result<Self, FieldError> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn try_mul(self, other: Self) -> Result<Self, FieldError> {
        self.arith(other, ArithOp::Mul)
    }

    pub fn try_div(self, other: Self) -> Result<Self, FieldError> {
        self.arith(other, ArithOp::Div)
    }

    pub fn neg(self) -> Self {
        Self {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }

    pub fn inv(self) -> Result<Self, FieldError> {
        self.arith(self, ArithOp::Inv)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn small_examples() {
        let p = gf(7);
        let (a, b) = (p.element(3), p.element(5));
        assert_eq!(a.try_add(b).unwrap().value(), 1);
        assert_eq!(a.inv().unwrap().value(), 5);
        assert_eq!(a.try_mul(b).unwrap().value(), 1);
        let two = gf(2);
        assert_eq!(two.element(1).neg().value(), 1);
    }

    #[test]
    fn rejects_non_primes_and_large() {
        for n in [0u64, 1, 4, 9, 561, 1 << 31, (1 << 31) - 1 + 2] {
            assert!(PrimeModulus::new(n).is_err(), "{n}");
        }
        // 2^31 - 1 is prime and just inside the cap
        assert!(PrimeModulus::new((1 << 31) - 1).is_ok());
    }

    #[test]
    fn errors() {
        let (p, q) = (gf(7), gf(5));
        assert_eq!(
            p.element(1).try_add(q.element(1)),
            Err(FieldError::ModulusMismatch(7, 5))
        );
        assert_eq!(
            p.element(3).try_div(p.element(0)),
            Err(FieldError::DivisionByZero(7))
        );
        assert_eq!(p.element(0).inv(), Err(FieldError::DivisionByZero(7)));
    }

    #[test]
    fn primality_matches_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..20_000u64 {
            assert_eq!(is_prime(n), trial(n), "{n}");
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u64, 3, 5, 7] {
            let f = gf(p);
            let els: Vec<_> = (0..p as i64).map(|v| f.element(v)).collect();
            for &a in &els {
                assert_eq!(a.try_add(f.element(0)).unwrap(), a);
                assert_eq!(a.try_mul(f.element(1)).unwrap(), a);
                assert!(a.try_add(a.neg()).unwrap().is_zero());
                if !a.is_zero() {
                    assert_eq!(a.try_mul(a.inv().unwrap()).unwrap().value(), 1);
                }
                for &b in &els {
                    assert_eq!(a.try_add(b), b.try_add(a));
                    assert_eq!(a.try_mul(b), b.try_mul(a));
                    assert_eq!(
                        a.try_add(b).unwrap().value() as u64,
                        (a.value() as u64 + b.value() as u64) % p
                    );
                    assert_eq!(
                        a.try_mul(b).unwrap().value() as u64,
                        (a.value() as u64 * b.value() as u64) % p
                    );
                    assert_eq!(a.try_sub(b).unwrap().try_add(b).unwrap(), a);
                    for &c in &els {
                        let lhs = a.try_mul(b.try_add(c).unwrap()).unwrap();
                        let rhs = a
                            .try_mul(b)
                            .unwrap()
                            .try_add(a.try_mul(c).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                        let assoc = a.try_mul(b).unwrap().try_mul(c).unwrap();
                        assert_eq!(assoc, a.try_mul(b.try_mul(c).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn inverse_large_primes(a in 1u32..u32::MAX, idx in 0usize..4) {
            let p = gf([2_147_483_647u64, 1_000_000_007, 998_244_353, 7919][idx]);
            let x = p.element(a as i64);
            prop_assume!(!x.is_zero());
            prop_assert_eq!(x.try_mul(x.inv().unwrap()).unwrap().value(), 1);
        }
    }
}
