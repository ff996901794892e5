use super::ProductError;
use crate::algebra::{GroupAlgebraElem, GroupAlgebraMatrix};
use crate::complexes::ChainComplex;

/// Kronecker product over the commutative ring F₂[Z_ℓ].
pub fn group_algebra_kron(a: &GroupAlgebraMatrix, b: &GroupAlgebraMatrix) -> Result<GroupAlgebraMatrix, ProductError> {
    if a.ell != b.ell {
        return Err(ProductError::DimensionMismatch(format!("ℓ = {} and ℓ = {}", a.ell, b.ell)));
    }
    let mut out = GroupAlgebraMatrix::zeros(a.rows * b.rows, a.cols * b.cols, a.ell);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    out.set(i * b.rows + k, j * b.cols + l, x.try_mul(b.get(k, l))?);
                }
            }
        }
    }
    Ok(out)
}

pub fn group_algebra_identity(n: usize, ell: usize) -> GroupAlgebraMatrix {
    let mut m = GroupAlgebraMatrix::zeros(n, n, ell);
    for i in 0..n {
        m.set(i, i, GroupAlgebraElem::one(ell));
    }
    m
}

/// 1 + g^{ℓ−1}: its circulant lift is the incidence matrix of C_ℓ,
/// ∂σ_t = τ_t + τ_{t+1}.
pub fn cycle_element(ell: usize) -> GroupAlgebraElem {
    GroupAlgebraElem::from_exponents(ell, &[0, (ell - 1) % ell])
}

/// LP(A, B) for A: R^n → R^m and B: R^k → R^l, lifted to F₂:
///
/// ∂₂ = [I_n ⊗ B; A ⊗ I_k] and ∂₁ = [A ⊗ I_l, I_m ⊗ B],
///
/// with degree 1 ordered R^{n·l} (horizontal) then R^{m·k} (vertical).
/// Assembled directly from Kronecker products, without the double complex
/// machinery.
pub fn lifted_product(a: &GroupAlgebraMatrix, b: &GroupAlgebraMatrix) -> Result<ChainComplex, ProductError> {
    let ell = a.ell;
    let (m, n, l, k) = (a.rows, a.cols, b.rows, b.cols);
    let a_ik = group_algebra_kron(a, &group_algebra_identity(k, ell))?.lift();
    let a_il = group_algebra_kron(a, &group_algebra_identity(l, ell))?.lift();
    let in_b = group_algebra_kron(&group_algebra_identity(n, ell), b)?.lift();
    let im_b = group_algebra_kron(&group_algebra_identity(m, ell), b)?.lift();
    let d2 = in_b.vstack(&a_ik)?;
    let d1 = a_il.hstack(&im_b)?;
    Ok(ChainComplex::from_diffs(0, vec![d1, d2])?)
}
