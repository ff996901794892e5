use balprod::classical::{repetition_code, LinearCode};
use balprod::complexes::random_matrix;
use balprod::f2la::{BitVec, F2Matrix};
use balprod::graphs::GroupAction;
use balprod::products::{
    balanced_product, circle_balanced_product, cyclic_cayley_instance, lps_circle_instance, toy_circle_instance,
    verify_balanced_kunneth, CellAction, CircleProduct,
};
use balprod::tanner::TannerComplex;
use balprod::algebra::{GroupAlgebraElem, GroupAlgebraMatrix};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn local_6_4() -> LinearCode {
    LinearCode::from_check(F2Matrix::from_rows(&[[1u8, 1, 1, 1, 0, 0], [0, 0, 1, 1, 1, 1]]))
}

fn instances() -> Vec<(&'static str, (TannerComplex, GroupAction))> {
    vec![
        ("toy", toy_circle_instance().unwrap()),
        ("cayley-z45", cyclic_cayley_instance(45, &[1, 44, 7, 38], 5, &LinearCode::from_check(F2Matrix::from_rows(&[[1u8, 1, 1, 1]]))).unwrap()),
        ("lps-5-7", lps_circle_instance(5, 7, &local_6_4()).unwrap()),
    ]
}

fn check_circle(name: &str, cp: &CircleProduct, seed: u64) {
    let eq = cp.triple_equivalence().unwrap();
    assert!(eq.balanced_equals_bundle, "{name}: balanced vs bundle");
    assert!(eq.bundle_equals_lifted, "{name}: bundle vs lifted");
    let split = cp.homology_split().unwrap();
    let k_base = cp.quotient_tanner().code().k();
    assert_eq!(split.horizontal_dim(), k_base, "{name}: horizontal homology vs quotient Tanner code");
    assert!(k_base as f64 >= cp.rate_lower_bound() - 1e-9);
    let total_h1 = cp.total().homology_dim(1).unwrap();
    assert_eq!(split.horizontal_dim() + split.vertical_dim(), total_h1);
    // vertical classes vanish when the base checks are independent
    let base_checks = cp.quotient_tanner().boundary();
    if base_checks.rank() == base_checks.rows() {
        assert_eq!(split.vertical_dim(), 0);
    }
    for n in 0..=2 {
        assert!(verify_balanced_kunneth(cp.product(), n).unwrap().holds(), "{name}: Künneth in degree {n}");
    }
    // π∘ι = id on the base Tanner code, and π∘p^h ignores boundaries
    let base_code = cp.quotient_tanner().code();
    let gens = base_code.generator();
    let d2 = cp.total().diff(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..gens.rows() {
        let x = gens.row(i);
        let lifted = cp.iota(&x);
        assert!(split.homology().is_cycle(&lifted));
        assert_eq!(cp.pi(&lifted), x);
        let w = BitVec::from_support(d2.cols(), (0..d2.cols()).filter(|_| rng.gen_bool(0.2)));
        let moved = lifted.xor(&d2.mul_vec(&w).unwrap());
        let px = cp.pi(&moved);
        assert!(base_code.is_codeword(&px));
        assert_eq!(px, x, "{name}: π∘p^h changed by a boundary");
        assert!(split.is_logical(&moved));
    }
    // p^h is onto
    assert_eq!(split.ph_matrix().rank(), split.horizontal_dim());
}

#[test]
fn circle_products() {
    for (i, (name, (t, act))) in instances().into_iter().enumerate() {
        let cp = circle_balanced_product(&t, &act).unwrap();
        let x = t.graph();
        assert_eq!(cp.middle_dim(), x.num_edges() + x.num_vertices() * t.checks_per_vertex());
        check_circle(name, &cp, i as u64);
    }
}

#[test]
fn toy_dimensions() {
    let (t, act) = toy_circle_instance().unwrap();
    let cp = circle_balanced_product(&t, &act).unwrap();
    assert_eq!(cp.total().dims(), &[9, 18, 9]);
    assert_eq!(cp.homology_split().unwrap().horizontal_dim(), 1);
}

#[test]
fn even_order_rejected() {
    let x = balprod::graphs::cycle_graph(8).unwrap();
    let gen: Vec<usize> = (0..8).map(|v| (v + 4) % 8).collect();
    let act = GroupAction::new(x.clone(), &gen, 2).unwrap();
    let t = balprod::tanner::build_tanner(&x, &repetition_code(2)).unwrap();
    assert!(circle_balanced_product(&t, &act).is_err());
}

fn random_ga(rng: &mut ChaCha8Rng, rows: usize, cols: usize, ell: usize) -> GroupAlgebraMatrix {
    let mut m = GroupAlgebraMatrix::zeros(rows, cols, ell);
    for i in 0..rows {
        for j in 0..cols {
            let coeffs = random_matrix(rng, 1, ell, 0.3).row(0);
            m.set(i, j, GroupAlgebraElem::from_coeffs(coeffs));
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn balanced_kunneth_random_free_actions(seed in any::<u64>(), ell_idx in 0usize..3) {
        let ell = [1, 3, 5][ell_idx];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, n) = (rng.gen_range(1..4), rng.gen_range(1..4));
        let (k, l) = (rng.gen_range(1..4), rng.gen_range(1..4));
        let a = CellAction::from_group_algebra(&random_ga(&mut rng, m, n, ell)).unwrap();
        let b = CellAction::from_group_algebra(&random_ga(&mut rng, k, l, ell)).unwrap();
        let bp = balanced_product(&a, &b).unwrap();
        prop_assert_eq!(bp.total().dims(), &[m * k * ell, (n * k + m * l) * ell, n * l * ell][..]);
        for deg in 0..=2 {
            let r = verify_balanced_kunneth(&bp, deg).unwrap();
            prop_assert!(r.holds(), "{:?}", r);
        }
    }
}
