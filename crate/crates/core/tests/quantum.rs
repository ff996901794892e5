use balprod::classical::LinearCode;
use balprod::complexes::{random_complex, torus_complex};
use balprod::f2la::{kernel_basis, BitVec, F2Matrix};
use balprod::products::{circle_balanced_product, cyclic_cayley_instance, toy_circle_instance, CircleProduct};
use balprod::quantum::{
    css_distance, css_from_complex, dressed_distance, exact_css_distance, ldpc_check, min_weight_logical, pk_bounds,
    subsystem_from_split, BoundStats, PauliType, SearchOptions, SubsystemCssCode,
};
use balprod::tanner::measured_beta;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BOUND_TOL: f64 = 1e-9;

/// Lightest z with h·z = 0 and t·z ≠ 0, over all 2ⁿ vectors (Gray code).
fn brute_force(h: &F2Matrix, t: &F2Matrix) -> Option<usize> {
    let n = h.cols();
    assert!(n <= 24);
    let hc: Vec<BitVec> = (0..n).map(|j| h.column(j)).collect();
    let tc: Vec<BitVec> = (0..n).map(|j| t.column(j)).collect();
    let (mut syn, mut test) = (BitVec::zeros(h.rows()), BitVec::zeros(t.rows()));
    let mut weight = 0usize;
    let mut cur = 0u32;
    let mut best: Option<usize> = None;
    for i in 1u32..1 << n {
        let bit = i.trailing_zeros() as usize;
        syn.xor_assign(&hc[bit]);
        test.xor_assign(&tc[bit]);
        cur ^= 1 << bit;
        weight = if cur >> bit & 1 == 1 { weight + 1 } else { weight - 1 };
        if syn.is_zero() && !test.is_zero() && best.is_none_or(|b| weight < b) {
            best = Some(weight);
        }
    }
    best
}

fn subsystem(cp: &CircleProduct) -> SubsystemCssCode {
    subsystem_from_split(cp.total(), &cp.homology_split().unwrap()).unwrap()
}

#[test]
fn toric_golden_family() {
    for ell in 2..=5 {
        let q = css_from_complex(&torus_complex(ell).unwrap(), 1).unwrap();
        assert_eq!((q.n(), q.k()), (2 * ell * ell, 2));
        let opts = SearchOptions::default();
        for p in [PauliType::X, PauliType::Z] {
            let (d, w) = exact_css_distance(&q, p, &opts).unwrap();
            assert_eq!(d, ell, "ℓ = {ell}, {p:?}");
            assert_eq!(w.weight(), ell);
        }
        assert_eq!(ldpc_check(&q).row_max, 4);
    }
}

#[test]
fn toy_subsystem_code_matches_brute_force() {
    let (t, act) = toy_circle_instance().unwrap();
    let cp = circle_balanced_product(&t, &act).unwrap();
    let s = subsystem(&cp);
    // the three checks of C(C_3, [2,1,2]) are dependent, leaving one gauge qubit
    assert_eq!((s.base().n(), s.k(), s.gauge_count()), (18, 1, 1));
    let opts = SearchOptions::default();
    let dz = dressed_distance(&s, PauliType::Z, &opts).unwrap();
    let dx = dressed_distance(&s, PauliType::X, &opts).unwrap();
    assert_eq!(dz.distance.exact(), brute_force(s.base().hx(), s.logical_x()));
    assert_eq!(dx.distance.exact(), brute_force(s.base().hz(), s.logical_z()));
    assert_eq!((dz.distance.exact(), dx.distance.exact()), (Some(4), Some(3)));
    let all = css_distance(s.base(), PauliType::Z, &opts).unwrap().distance.exact().unwrap();
    assert!(all <= dz.distance.exact().unwrap());
}

/// Cocycle representatives of H¹ that vanish on every row of `cycles`.
fn annihilator(s: &SubsystemCssCode, cycles: &F2Matrix) -> F2Matrix {
    let cocycles = s.base().x_logicals();
    let pairing = cocycles.mul(&cycles.transpose()).unwrap();
    kernel_basis(&pairing.transpose()).basis().mul(cocycles).unwrap()
}

#[test]
fn dressed_distance_sits_between_stabilizer_and_bare() {
    let local = LinearCode::from_check(F2Matrix::from_rows(&[[1u8, 1, 1, 1]]));
    let (t, act) = cyclic_cayley_instance(45, &[1, 44, 7, 38], 5, &local).unwrap();
    let cp = circle_balanced_product(&t, &act).unwrap();
    let s = subsystem(&cp);
    assert!(s.gauge_count() > 0);
    assert_eq!(s.k(), cp.quotient_tanner().code().k());
    assert_eq!(annihilator(&s, s.gauge_z()).rank(), s.logical_x().rank());
    let opts = SearchOptions::default();
    // every nontrivial class of the stabilizer code ⊇ classes with a logical part ⊇ logical classes
    let all = css_distance(s.base(), PauliType::Z, &opts).unwrap().distance.exact().unwrap();
    let dressed = dressed_distance(&s, PauliType::Z, &opts).unwrap().distance.exact().unwrap();
    let gauge_x = annihilator(&s, s.logical_z());
    let bare_h = s.base().hx().vstack(&gauge_x).unwrap();
    let bare = min_weight_logical(&bare_h, s.logical_x(), &opts).unwrap().found.unwrap().weight();
    assert!(all <= dressed && dressed <= bare, "{all} ≤ {dressed} ≤ {bare}");
    assert_eq!(dressed, 4);
    let dx = dressed_distance(&s, PauliType::X, &opts).unwrap().distance.exact().unwrap();
    assert_eq!(dx, 5);
}

#[test]
fn measured_expansion_bounds_are_dominated() {
    let local = LinearCode::from_check(F2Matrix::from_rows(&[[1u8, 1, 1, 1]]));
    let instances = [toy_circle_instance().unwrap(), cyclic_cayley_instance(45, &[1, 44, 7, 38], 5, &local).unwrap()];
    for (t, act) in instances {
        let cp = circle_balanced_product(&t, &act).unwrap();
        let s = subsystem(&cp);
        let opts = SearchOptions::default();
        let dz = dressed_distance(&s, PauliType::Z, &opts).unwrap().distance.exact().unwrap() as f64;
        let dx = dressed_distance(&s, PauliType::X, &opts).unwrap().distance.exact().unwrap() as f64;
        let d = t.boundary();
        let stats = BoundStats::of(&cp);
        assert!(s.k() as f64 >= pk_bounds(stats, 0.0, 0.0, 0.0, 0.0).unwrap().k_lower - BOUND_TOL);
        for alpha in [0.05, 0.1, 0.2, 0.34, 0.5] {
            let (Some(bho), Some(bco)) = (measured_beta(&d, alpha, 5), measured_beta(&d.transpose(), alpha, 5)) else {
                continue;
            };
            let r = pk_bounds(stats, alpha, bho, alpha, bco).unwrap();
            assert!(r.dz_lower <= dz + BOUND_TOL, "α = {alpha}: D_Z bound {} > {dz}", r.dz_lower);
            assert!(r.dx_lower <= dx + BOUND_TOL, "α = {alpha}: D_X bound {} > {dx}", r.dx_lower);
            assert!(r.dx_lower_printed <= dx + BOUND_TOL);
        }
    }
}

#[test]
fn ldpc_weights_are_bounded_by_the_local_code() {
    let (t, act) = toy_circle_instance().unwrap();
    let cp = circle_balanced_product(&t, &act).unwrap();
    let q = css_from_complex(cp.total(), 1).unwrap();
    let r = ldpc_check(&q);
    // a horizontal check row touches one local check's support and two fibre neighbours
    let local_w = t.local_check().row_weights().into_iter().max().unwrap();
    assert!(r.row_max <= local_w + 2);
    assert!(r.col_max <= t.graph().degree().max(t.checks_per_vertex()) + 2);
}

fn random_css(seed: u64) -> (balprod::complexes::ChainComplex, balprod::quantum::CssCode) {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dims = [rng.gen_range(0..5), rng.gen_range(1..13), rng.gen_range(0..5)];
    let c = random_complex(&mut rng, &dims);
    let q = css_from_complex(&c, c.min_degree() + 1).unwrap();
    (c, q)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn css_invariants(seed in any::<u64>()) {
        let (c, q) = random_css(seed);
        prop_assert!(q.hx().mul(&q.hz().transpose()).unwrap().is_zero());
        let (rx, rz) = q.stabilizer_ranks();
        prop_assert_eq!(q.k(), q.n() - rx - rz);
        prop_assert_eq!(q.k(), c.homology_dim(c.min_degree() + 1).unwrap());
    }

    #[test]
    fn distance_search_matches_brute_force(seed in any::<u64>()) {
        let (_, q) = random_css(seed);
        let opts = SearchOptions::default();
        for p in [PauliType::X, PauliType::Z] {
            let (h, t) = match p {
                PauliType::Z => (q.hx(), q.x_logicals()),
                PauliType::X => (q.hz(), q.z_logicals()),
            };
            match exact_css_distance(&q, p, &opts) {
                Ok((d, w)) => {
                    prop_assert_eq!(Some(d), brute_force(h, t));
                    prop_assert!(h.mul_vec(&w).unwrap().is_zero());
                }
                Err(balprod::quantum::QuantumError::NoLogicals) => prop_assert_eq!(q.k(), 0),
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }
}
