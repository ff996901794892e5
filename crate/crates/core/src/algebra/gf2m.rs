//! F_{2^m} for 2 ≤ m ≤ 12 and polynomials over it.
//!
//! Each field is F₂[x]/(f) for the fixed primitive f below, bit i of the
//! constant being the coefficient of x^i:
//!
//! | m | f | m | f |
//! |---|---|---|---|
//! | 2 | x²+x+1 (0x7) | 8 | x⁸+x⁴+x³+x²+1 (0x11D) |
//! | 3 | x³+x+1 (0xB) | 9 | x⁹+x⁴+1 (0x211) |
//! | 4 | x⁴+x+1 (0x13) | 10 | x¹⁰+x³+1 (0x409) |
//! | 5 | x⁵+x²+1 (0x25) | 11 | x¹¹+x²+1 (0x805) |
//! | 6 | x⁶+x+1 (0x43) | 12 | x¹²+x⁶+x⁴+x+1 (0x1053) |
//! | 7 | x⁷+x+1 (0x83) | | |

use std::fmt;

use super::AlgebraError;

pub const PRIMITIVE_POLYS: [(u32, u32); 11] = [
    (2, 0x7),
    (3, 0xB),
    (4, 0x13),
    (5, 0x25),
    (6, 0x43),
    (7, 0x83),
    (8, 0x11D),
    (9, 0x211),
    (10, 0x409),
    (11, 0x805),
    (12, 0x1053),
];

/// The field F_{2^m}; elements are `u16` bit patterns.
#[derive(Clone)]
pub struct Gf2m {
    m: u32,
    poly: u32,
    exp: Vec<u16>,
    log: Vec<u32>,
}

impl fmt::Debug for Gf2m {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})[0x{:x}]", self.m, self.poly)
    }
}

impl Gf2m {
    pub fn new(m: u32) -> Result<Self, AlgebraError> {
        let poly = PRIMITIVE_POLYS
            .iter()
            .find(|(mm, _)| *mm == m)
            .map(|(_, p)| *p)
            .ok_or(AlgebraError::UnsupportedFieldDegree(m))?;
        let size = 1usize << m;
        let mut exp = vec![0u16; 2 * size];
        let mut log = vec![0u32; size];
        let mut x: u32 = 1;
        for i in 0..size - 1 {
            exp[i] = x as u16;
            log[x as usize] = i as u32;
            x <<= 1;
            if x & (1 << m) != 0 {
                x ^= poly;
            }
        }
        if x != 1 {
            return Err(AlgebraError::NotPrimitive(poly));
        }
        for i in size - 1..2 * size {
            exp[i] = exp[i - (size - 1)];
        }
        Ok(Self { m, poly, exp, log })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// Order of the multiplicative group, 2^m − 1.
    pub fn mult_order(&self) -> usize {
        self.size() - 1
    }

    /// α^k for the primitive element α = x.
    pub fn alpha_pow(&self, k: i64) -> u16 {
        let n = self.mult_order() as i64;
        self.exp[k.rem_euclid(n) as usize]
    }

    /// Discrete log base α; `None` for zero.
    pub fn log(&self, a: u16) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: u16) -> Option<u16> {
        (a != 0).then(|| self.exp[(self.mult_order() as u32 - self.log[a as usize]) as usize % self.mult_order()])
    }

    pub fn pow(&self, a: u16, e: u64) -> u16 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let k = (self.log[a as usize] as u64 * e) % self.mult_order() as u64;
        self.exp[k as usize]
    }

    /// Bit `i` of the coordinate vector of `a` in the basis 1, α, …, α^{m−1}.
    pub fn coord(&self, a: u16, i: u32) -> bool {
        (a >> i) & 1 == 1
    }
}

/// Polynomial over F_{2^m}, coefficients lowest degree first, no trailing
/// zeros (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    c: Vec<u16>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.c)
    }
}

impl Poly {
    pub fn new(mut c: Vec<u16>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { c }
    }

    pub fn zero() -> Self {
        Self { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self { c: vec![1] }
    }

    /// x^k.
    pub fn x_pow(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        Self { c }
    }

    /// x − a (= x + a in characteristic 2).
    pub fn linear(a: u16) -> Self {
        Self::new(vec![a, 1])
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> u16 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) ^ o.coeff(i)).collect())
    }

    pub fn scale(&self, f: &Gf2m, a: u16) -> Poly {
        Poly::new(self.c.iter().map(|&x| f.mul(x, a)).collect())
    }

    pub fn mul(&self, f: &Gf2m, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0u16; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] ^= f.mul(a, b);
            }
        }
        Poly::new(c)
    }

    /// (quotient, remainder) of division by a nonzero `d`.
    pub fn div_rem(&self, f: &Gf2m, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(d.c[dd]).unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![0u16; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let t = f.mul(r[k], lead_inv);
            if t == 0 {
                continue;
            }
            q[k - dd] = t;
            for (j, &dc) in d.c.iter().enumerate() {
                r[k - dd + j] ^= f.mul(t, dc);
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, f: &Gf2m, d: &Poly) -> Poly {
        self.div_rem(f, d).1
    }

    pub fn eval(&self, f: &Gf2m, x: u16) -> u16 {
        self.c.iter().rev().fold(0u16, |acc, &a| f.mul(acc, x) ^ a)
    }

    /// Formal derivative (odd-degree terms shift down).
    pub fn derivative(&self) -> Poly {
        Poly::new((1..self.c.len()).map(|i| if i % 2 == 1 { self.c[i] } else { 0 }).collect())
    }

    pub fn gcd(&self, f: &Gf2m, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        match a.degree() {
            Some(d) => a.scale(f, f.inv(a.c[d]).unwrap()),
            None => a,
        }
    }

    /// Inverse of `self` modulo `g`, if gcd(self, g) = 1.
    pub fn inv_mod(&self, f: &Gf2m, g: &Poly) -> Option<Poly> {
        // extended Euclid tracking only the coefficient of self
        let (mut r0, mut r1) = (g.clone(), self.rem(f, g));
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(f, &r1);
            let s2 = s0.add(&q.mul(f, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let c = f.inv(r0.c[0]).unwrap();
        Some(s0.scale(f, c).rem(f, g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_tabulated_polynomial_is_primitive() {
        for (m, _) in PRIMITIVE_POLYS {
            let f = Gf2m::new(m).unwrap();
            let mut seen = vec![false; f.size()];
            for k in 0..f.mult_order() {
                let a = f.alpha_pow(k as i64) as usize;
                assert!(!seen[a], "m={m}: α has order below 2^m−1");
                seen[a] = true;
            }
        }
        assert!(Gf2m::new(13).is_err());
    }

    #[test]
    fn field_axioms_gf16() {
        let f = Gf2m::new(4).unwrap();
        for a in 1..16u16 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            for b in 0..16u16 {
                // carry-less multiply then reduce mod x^4+x+1
                let mut p: u32 = 0;
                for i in 0..4 {
                    if b >> i & 1 == 1 {
                        p ^= (a as u32) << i;
                    }
                }
                for i in (4..8).rev() {
                    if p >> i & 1 == 1 {
                        p ^= 0x13 << (i - 4);
                    }
                }
                assert_eq!(f.mul(a, b) as u32, p);
            }
        }
    }

    #[test]
    fn poly_inverse_mod() {
        let f = Gf2m::new(4).unwrap();
        let g = Poly::new(vec![f.alpha_pow(3), 1, 1]);
        for gamma in [0u16, 1, 5, 9] {
            let lin = Poly::linear(gamma);
            let inv = lin.inv_mod(&f, &g).unwrap();
            assert_eq!(lin.mul(&f, &inv).rem(&f, &g), Poly::one());
        }
        let div = Poly::linear(f.alpha_pow(2)).mul(&f, &Poly::linear(7));
        assert_eq!(Poly::linear(7).inv_mod(&f, &div), None);
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = Gf2m::new(5).unwrap();
        let a = Poly::new(vec![3, 0, 7, 1, 30, 2]);
        let d = Poly::new(vec![5, 1, 9]);
        let (q, r) = a.div_rem(&f, &d);
        assert_eq!(q.mul(&f, &d).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }
}
