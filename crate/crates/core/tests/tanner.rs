use balprod::classical::{dual_code, exact_distance, hamming_7_4, repetition_code, LinearCode};
use balprod::f2la::{BitVec, F2Matrix};
use balprod::graphs::{complete_graph, cycle_graph, klein_quartic_graph, lps_graph, petersen_graph, LabeledGraph};
use balprod::tanner::{build_tanner, search_labeling, TannerComplex};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KLEIN_FLIP_SEED: u64 = 1;
const KLEIN_FLIP_TRIALS: u64 = 2000;

fn klein() -> LabeledGraph {
    klein_quartic_graph().unwrap().1
}

#[test]
fn klein_quartic_canonical_labeling() {
    let t = build_tanner(&klein(), &hamming_7_4()).unwrap();
    let r = t.report(true).unwrap();
    assert_eq!((r.n, r.k, r.d), (84, 22, Some(12)));
    assert!(r.k as f64 >= r.rate_bound - 1e-9);
}

#[test]
fn klein_quartic_84_12_19() {
    let hit = search_labeling(&klein(), &hamming_7_4(), 12, 19, KLEIN_FLIP_TRIALS, KLEIN_FLIP_SEED).unwrap().expect("labeling found");
    let code = hit.tanner.code();
    assert_eq!((code.n(), code.k(), exact_distance(&code).unwrap()), (84, 12, Some(19)));
    let r = hit.tanner.report(false).unwrap();
    assert!(r.sipser_spielman_bound.unwrap() <= 19.0);
}

/// Independent check of x ∈ ker ∂: decode each vertex's local word directly.
fn locally_valid(t: &TannerComplex, x: &BitVec) -> bool {
    (0..t.graph().num_vertices()).all(|v| t.local().is_codeword(&t.local_view(x, v)))
}

fn kernel_characterization(t: &TannerComplex, seed: u64) {
    let code = t.code();
    let g = code.generator();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50 {
        let mut x = BitVec::zeros(code.n());
        for i in 0..g.rows() {
            if rng.gen() {
                x.xor_assign(&g.row(i));
            }
        }
        assert!(locally_valid(t, &x));
        let y = BitVec::from_support(code.n(), (0..code.n()).filter(|_| rng.gen_bool(0.3)));
        assert_eq!(locally_valid(t, &y), code.is_codeword(&y));
    }
}

#[test]
fn kernel_is_local_codewords() {
    kernel_characterization(&build_tanner(&klein(), &hamming_7_4()).unwrap(), 0);
    kernel_characterization(&build_tanner(&petersen_graph(), &repetition_code(3)).unwrap(), 1);
    let lps = lps_graph(5, 7).unwrap().graph;
    let local = LinearCode::from_check(F2Matrix::from_bitvecs(&[BitVec::ones(6)], 6));
    kernel_characterization(&build_tanner(&lps, &local).unwrap(), 2);
}

#[test]
fn distance_dominates_sipser_spielman() {
    let cases = [
        (klein(), hamming_7_4()),
        (complete_graph(4), repetition_code(3)),
        (petersen_graph(), repetition_code(3)),
        (cycle_graph(9).unwrap(), repetition_code(2)),
    ];
    for (x, local) in cases {
        let r = build_tanner(&x, &local).unwrap().report(true).unwrap();
        if let (Some(d), Some(dl), Some(b)) = (r.d, r.local_d, r.sipser_spielman_bound) {
            if dl as f64 > r.lambda2 {
                assert!(d as f64 >= b - 1e-9, "{r:?}");
            }
        }
        assert!(r.k as f64 >= r.rate_bound - 1e-9);
    }
}

#[test]
fn single_check_coboundary_weight() {
    let t = build_tanner(&klein(), &hamming_7_4()).unwrap();
    let dt = t.boundary().transpose();
    let dd = exact_distance(&dual_code(&hamming_7_4())).unwrap().unwrap();
    assert_eq!(dd, 4);
    assert!((0..dt.cols()).all(|c| dt.column(c).weight() >= dd));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rate_bound_under_relabeling(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = klein();
        let perms: Vec<Vec<usize>> = (0..x.num_vertices()).map(|_| {
            let mut p: Vec<usize> = (0..7).collect();
            for i in (1..7).rev() { p.swap(i, rng.gen_range(0..=i)); }
            p
        }).collect();
        let y = x.relabeled(|v, l| perms[v][l]).unwrap();
        let t = build_tanner(&y, &hamming_7_4()).unwrap();
        prop_assert!(t.code().k() as f64 >= t.rate_bound() - 1e-9);
        let x0 = BitVec::from_support(84, (0..84).filter(|_| rng.gen_bool(0.5)));
        prop_assert_eq!(locally_valid(&t, &x0), t.code().is_codeword(&x0));
    }
}
