use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::AlgebraError;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol (a/p) by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8, AlgebraError> {
    if p < 3 || p % 2 == 0 {
        return Err(AlgebraError::InvalidModulus(p));
    }
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Ok(0);
    }
    Ok(if pow_mod(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// Element of the prime field F_q.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fq {
    q: u32,
    v: u32,
}

impl Fq {
    pub fn new(v: i64, q: u32) -> Self {
        Self { q, v: v.rem_euclid(q as i64) as u32 }
    }

    pub fn zero(q: u32) -> Self {
        Self { q, v: 0 }
    }

    pub fn one(q: u32) -> Self {
        Self { q, v: 1 % q }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.v
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.v == 0
    }

    pub fn pow(self, e: u64) -> Self {
        Self { q: self.q, v: pow_mod(self.v as u64, e, self.q as u64) as u32 }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        (self.v != 0).then(|| self.pow(self.q as u64 - 2))
    }

    pub fn is_square(self) -> bool {
        self.v == 0 || pow_mod(self.v as u64, (self.q as u64 - 1) / 2, self.q as u64) == 1
    }
}

impl Add for Fq {
    type Output = Fq;
    fn add(self, o: Fq) -> Fq {
        debug_assert_eq!(self.q, o.q);
        Fq { q: self.q, v: ((self.v as u64 + o.v as u64) % self.q as u64) as u32 }
    }
}

impl Sub for Fq {
    type Output = Fq;
    fn sub(self, o: Fq) -> Fq {
        debug_assert_eq!(self.q, o.q);
        Fq { q: self.q, v: ((self.v as u64 + self.q as u64 - o.v as u64) % self.q as u64) as u32 }
    }
}

impl Mul for Fq {
    type Output = Fq;
    fn mul(self, o: Fq) -> Fq {
        debug_assert_eq!(self.q, o.q);
        Fq { q: self.q, v: ((self.v as u64 * o.v as u64) % self.q as u64) as u32 }
    }
}

impl Neg for Fq {
    type Output = Fq;
    fn neg(self) -> Fq {
        Fq { q: self.q, v: (self.q - self.v) % self.q }
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(1, 7), Ok(1));
        assert_eq!(legendre(14, 7), Ok(0));
        assert_eq!(legendre(5, 13), Ok(-1));
        assert_eq!(legendre(-1, 13), Ok(1));
        assert!(legendre(3, 8).is_err());
        assert!(legendre(3, 1).is_err());
    }

    #[test]
    fn legendre_agrees_with_square_table() {
        for p in [3u64, 5, 7, 11, 13, 17] {
            let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
            for a in 1..p {
                let want = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(legendre(a as i64, p).unwrap(), want, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn field_inverse() {
        for v in 1..13 {
            let x = Fq::new(v, 13);
            assert_eq!(x * x.inv().unwrap(), Fq::one(13));
        }
        assert_eq!(Fq::zero(13).inv(), None);
    }
}
