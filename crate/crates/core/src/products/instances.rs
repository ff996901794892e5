use super::ProductError;
use crate::algebra::FiniteGroup;
use crate::classical::{repetition_code, LinearCode};
use crate::graphs::{cayley_graph, cycle_graph, lps_graph, GroupAction};
use crate::tanner::{build_tanner, TannerComplex};

/// X = C_9, H = Z_3 acting by v ↦ v + 3, L = [2,1,2].
pub fn toy_circle_instance() -> Result<(TannerComplex, GroupAction), ProductError> {
    let x = cycle_graph(9)?;
    let gen: Vec<usize> = (0..9).map(|v| (v + 3) % 9).collect();
    let act = GroupAction::new(x.clone(), &gen, 3)?;
    Ok((build_tanner(&x, &repetition_code(2))?, act))
}

/// LPS graph X_{p,q} with the unipotent subgroup of order q acting on the
/// right, so ℓ = q.
pub fn lps_circle_instance(p: u64, q: u64, local: &LinearCode) -> Result<(TannerComplex, GroupAction), ProductError> {
    let lps = lps_graph(p, q)?;
    let h = lps.group.unipotent_subgroup()?;
    let act = GroupAction::cayley_right(lps.graph.clone(), &lps.group, &h)?;
    Ok((build_tanner(&lps.graph, local)?, act))
}

/// Cayley(Z_n, gens) with the subgroup of order ℓ acting by translation.
pub fn cyclic_cayley_instance(
    n: usize,
    gens: &[usize],
    ell: usize,
    local: &LinearCode,
) -> Result<(TannerComplex, GroupAction), ProductError> {
    if ell == 0 || n % ell != 0 {
        return Err(ProductError::ActionInvalid(format!("ℓ = {ell} does not divide n = {n}")));
    }
    let z = FiniteGroup::cyclic(n);
    let x = cayley_graph(&z, gens)?;
    let act = GroupAction::cayley_right(x.clone(), &z, &z.cyclic_subgroup(n / ell))?;
    Ok((build_tanner(&x, local)?, act))
}
