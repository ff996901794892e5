use super::{ClassicalError, LinearCode};
use crate::algebra::{Gf2m, Poly};
use crate::f2la::F2Matrix;

/// Binary Goppa code Γ(g, {γ_i}): c ∈ F₂ˢ with Σ c_i/(x − γ_i) ≡ 0 mod g.
/// Each (x − γ_i)⁻¹ mod g is expanded into its t coefficients and each
/// coefficient into m bits, giving an m·t × s parity check.
pub fn goppa_code(field: &Gf2m, g: &Poly, locators: &[u16]) -> Result<LinearCode, ClassicalError> {
    let t = g.degree().ok_or_else(|| ClassicalError::DomainError("Goppa polynomial is zero".into()))?;
    let m = field.m() as usize;
    let mut seen = vec![false; field.size()];
    for &gamma in locators {
        if gamma as usize >= field.size() {
            return Err(ClassicalError::DomainError(format!("{gamma} is not an element of F_2^{m}")));
        }
        if std::mem::replace(&mut seen[gamma as usize], true) {
            return Err(ClassicalError::DuplicateLocator(gamma));
        }
        if g.eval(field, gamma) == 0 {
            return Err(ClassicalError::LocatorRoot(gamma));
        }
    }
    let mut h = F2Matrix::zeros(m * t, locators.len());
    for (i, &gamma) in locators.iter().enumerate() {
        let u = Poly::linear(gamma).inv_mod(field, g).expect("x − γ is a unit mod g when g(γ) ≠ 0");
        for j in 0..t {
            let cj = u.coeff(j);
            for b in 0..m {
                if field.coord(cj, b as u32) {
                    h.set(j * m + b, i, true);
                }
            }
        }
    }
    Ok(LinearCode::from_check(h))
}

/// Narrow-sense binary BCH code of odd length s with designed distance
/// 2t + 1: the Goppa code with g = x^{2t} and locators β^i, β a primitive
/// s-th root of unity in the smallest F_{2^m} with s | 2^m − 1. Its zeros
/// are β^{−1}, …, β^{−2t}.
pub fn bch_code(s: usize, t: usize) -> Result<LinearCode, ClassicalError> {
    if s % 2 == 0 || s < 3 {
        return Err(ClassicalError::IncompatibleLength(s));
    }
    let m = (2u32..=12).find(|&m| ((1usize << m) - 1) % s == 0).ok_or(ClassicalError::IncompatibleLength(s))?;
    let field = Gf2m::new(m)?;
    let step = (field.mult_order() / s) as i64;
    let locators: Vec<u16> = (0..s as i64).map(|i| field.alpha_pow(i * step)).collect();
    let code = goppa_code(&field, &Poly::x_pow(2 * t), &locators)?;
    Ok(code.mark_cyclic())
}

/// Lower bound 2^{m−1} − (|Z|−1)/2 − (t−1)·2^{m/2} on the dual distance of
/// a Goppa code with separable g of degree t, root set Z, and locators
/// F_{2^m} − Z.
pub fn moreno_moreno_bound(m: u32, t: usize, roots: usize) -> f64 {
    2f64.powi(m as i32 - 1) - (roots as f64 - 1.0) / 2.0 - (t as f64 - 1.0) * 2f64.powf(m as f64 / 2.0)
}

/// Elements of F_{2^m} that are not roots of g, in increasing order.
pub fn non_roots(field: &Gf2m, g: &Poly) -> Vec<u16> {
    (0..field.size() as u16).filter(|&x| g.eval(field, x) != 0).collect()
}

#[cfg(test)]
mod tests {
    use super::super::{dual_code, exact_distance};
    use super::*;
    use crate::f2la::{kernel_basis, BitVec};

    /// Vandermonde form: rows γ_i^j / g(γ_i), j < t, expanded to bits.
    fn vandermonde_check(field: &Gf2m, g: &Poly, locs: &[u16]) -> F2Matrix {
        let t = g.degree().unwrap();
        let m = field.m() as usize;
        let mut h = F2Matrix::zeros(m * t, locs.len());
        for (i, &x) in locs.iter().enumerate() {
            let d = field.inv(g.eval(field, x)).unwrap();
            for j in 0..t {
                let v = field.mul(field.pow(x, j as u64), d);
                for b in 0..m {
                    if field.coord(v, b as u32) {
                        h.set(j * m + b, i, true);
                    }
                }
            }
        }
        h
    }

    #[test]
    fn congruence_matches_vandermonde_form() {
        let f = Gf2m::new(4).unwrap();
        for g in [Poly::new(vec![2, 1]), Poly::new(vec![1, 1, 1]), Poly::new(vec![3, 0, 1, 1]), Poly::x_pow(3)] {
            let locs = non_roots(&f, &g);
            let c = goppa_code(&f, &g, &locs).unwrap();
            let v = kernel_basis(&vandermonde_check(&f, &g, &locs));
            assert_eq!(v.dim(), c.k());
            assert!(v.vectors().iter().all(|x| c.is_codeword(x)));
        }
    }

    #[test]
    fn codewords_satisfy_congruence() {
        let f = Gf2m::new(3).unwrap();
        let g = Poly::new(vec![1, 1, 1]);
        let locs = non_roots(&f, &g);
        let c = goppa_code(&f, &g, &locs).unwrap();
        for mask in 0u32..1 << locs.len() {
            let v = BitVec::from_support(locs.len(), (0..locs.len()).filter(|i| (mask >> i) & 1 == 1));
            // Σ c_i (x − γ_i)⁻¹ mod g computed directly
            let mut acc = Poly::zero();
            for i in v.support() {
                acc = acc.add(&Poly::linear(locs[i]).inv_mod(&f, &g).unwrap());
            }
            assert_eq!(acc.rem(&f, &g).is_zero(), c.is_codeword(&v));
        }
    }

    #[test]
    fn goppa_bounds() {
        let f = Gf2m::new(4).unwrap();
        let gamma = f.alpha_pow(3);
        let g = Poly::linear(gamma);
        let locs = non_roots(&f, &g);
        assert_eq!(locs.len(), 15);
        let c = goppa_code(&f, &g, &locs).unwrap();
        assert!(c.k() >= 11);
        assert!(exact_distance(&c).unwrap().unwrap() >= 3);
        assert_eq!(goppa_code(&f, &g, &[gamma]), Err(ClassicalError::LocatorRoot(gamma)));
        assert_eq!(goppa_code(&f, &g, &[1, 1]), Err(ClassicalError::DuplicateLocator(1)));
    }

    #[test]
    fn moreno_moreno_on_m4() {
        let f = Gf2m::new(4).unwrap();
        // (x − a)(x − b): two distinct roots; x² + x + α³ is irreducible (no roots)
        let (a, b) = (f.alpha_pow(1), f.alpha_pow(5));
        let split = Poly::linear(a).mul(&f, &Poly::linear(b));
        let irreducible = Poly::new(vec![f.alpha_pow(3), 1, 1]);
        for g in [Poly::linear(a), split, irreducible] {
            let locs = non_roots(&f, &g);
            let roots = 16 - locs.len();
            let t = g.degree().unwrap();
            let c = goppa_code(&f, &g, &locs).unwrap();
            let dd = exact_distance(&dual_code(&c)).unwrap().unwrap();
            assert!(dd as f64 >= moreno_moreno_bound(4, t, roots), "t={t} |Z|={roots} d⊥={dd}");
        }
    }

    #[test]
    fn bch_parameters() {
        let h = bch_code(7, 1).unwrap();
        assert_eq!((h.k(), exact_distance(&h).unwrap()), (4, Some(3)));
        assert!(h.is_shift_invariant());
        let b = bch_code(15, 2).unwrap();
        assert!(b.k() >= 7);
        assert!(exact_distance(&b).unwrap().unwrap() >= 5);
        assert!(b.is_shift_invariant());
        let full = bch_code(15, 0).unwrap();
        assert_eq!((full.k(), exact_distance(&full).unwrap()), (15, Some(1)));
        assert_eq!(bch_code(8, 1), Err(ClassicalError::IncompatibleLength(8)));
        let over = bch_code(7, 4).unwrap();
        assert_eq!(over.k(), 0);
    }
}
