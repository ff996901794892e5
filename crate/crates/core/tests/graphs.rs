use balprod::graphs::{
    check_quotient_condition, lps_graph, quotient_graph, second_eigenvalue, GroupAction, DENSE_EIGEN_MAX,
};

const EIGEN_TOL: f64 = 1e-6;

#[test]
fn lps_graphs_are_ramanujan() {
    for (p, q) in [(5u64, 13u64), (5, 17), (13, 17)] {
        let x = lps_graph(p, q).unwrap();
        let g = &x.graph;
        assert_eq!(g.degree() as u64, p + 1);
        assert!(g.is_simple() && g.is_connected());
        let l2 = second_eigenvalue(g).unwrap();
        let bound = 2.0 * (p as f64).sqrt();
        assert!(l2 < bound + EIGEN_TOL, "X_{p},{q}: λ₂ = {l2} ≥ 2√p = {bound}");
        eprintln!("X_{{{p},{q}}}: n = {}, λ₂ = {l2:.6}, dense = {}", g.num_vertices(), g.num_vertices() <= DENSE_EIGEN_MAX);
    }
}

#[test]
fn unipotent_quotients_satisfy_condition_and_reconstruct() {
    for (p, q) in [(5u64, 13u64), (5, 17), (5, 7)] {
        let x = lps_graph(p, q).unwrap();
        let h = x.group.unipotent_subgroup().unwrap();
        let chk = check_quotient_condition(&x.group, &x.generators, &h);
        assert!(chk.holds && chk.agrees(), "({p},{q})");
        assert_eq!(chk.determinant_shortcut, Some(true));
        let act = GroupAction::cayley_right(x.graph.clone(), &x.group, &h).unwrap();
        let quo = quotient_graph(&act).unwrap();
        assert_eq!(quo.base.num_vertices() * q as usize, x.graph.num_vertices());
        assert_eq!(quo.base.num_edges() * q as usize, x.graph.num_edges());
        assert!(quo.reconstruction_is_isomorphic(&x.graph));
    }
}
