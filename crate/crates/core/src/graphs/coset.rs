use super::{GraphError, LabeledGraph};
use crate::algebra::{FiniteGroup, Subgroup};

/// Graph whose vertices are the left cosets gV and whose edges are the left
/// cosets gE, with gV and g'E incident when they intersect.
///
/// Vertex cosets are represented by their smallest element r; the edge
/// through r·v_i (v_i the i-th listed element of V) gets label i at that
/// vertex. Each edge coset must meet exactly two vertex cosets in one
/// element each, which forces |E| = 2.
pub fn coset_graph(group: &FiniteGroup, vert_sub: &Subgroup, edge_sub: &Subgroup) -> Result<LabeledGraph, GraphError> {
    let n = group.order();
    let s = vert_sub.order();
    let mut vert_of = vec![(usize::MAX, 0usize); n];
    let mut nv = 0;
    for g in 0..n {
        if vert_of[g].0 != usize::MAX {
            continue;
        }
        for (i, &x) in vert_sub.elements().iter().enumerate() {
            vert_of[group.mul(g, x)] = (nv, i);
        }
        nv += 1;
    }
    let mut seen = vec![false; n];
    let mut edges = Vec::new();
    for g in 0..n {
        if seen[g] {
            continue;
        }
        let members: Vec<usize> = edge_sub.elements().iter().map(|&x| group.mul(g, x)).collect();
        for &m in &members {
            seen[m] = true;
        }
        if members.len() != 2 {
            return Err(GraphError::IncidenceDegenerate(format!(
                "edge coset of {g} meets {} vertex cosets",
                members.iter().map(|&m| vert_of[m].0).collect::<std::collections::BTreeSet<_>>().len()
            )));
        }
        let (a, b) = (vert_of[members[0]], vert_of[members[1]]);
        if a.0 == b.0 {
            return Err(GraphError::IncidenceDegenerate(format!("edge coset of {g} lies in one vertex coset")));
        }
        let (t, h) = if a.0 < b.0 { (a, b) } else { (b, a) };
        edges.push((t.0, h.0, t.1, h.1));
    }
    LabeledGraph::new(nv, s, &edges)
}

/// First pair (ρ, σ) in index order with ord ρ = 3, ord σ = 7, ord ρσ = 2,
/// generating the whole group. These are the rotations of the {3,7}
/// tessellation.
pub fn klein_quartic_generators(group: &FiniteGroup) -> Option<(usize, usize)> {
    let n = group.order();
    let orders: Vec<usize> = (0..n).map(|g| group.element_order(g)).collect();
    let rhos: Vec<usize> = (0..n).filter(|&g| orders[g] == 3).collect();
    let sigmas: Vec<usize> = (0..n).filter(|&g| orders[g] == 7).collect();
    rhos.iter()
        .flat_map(|&r| sigmas.iter().map(move |&s| (r, s)))
        .find(|&(r, s)| orders[group.mul(r, s)] == 2 && group.generated(&[r, s]).len() == n)
}

/// The 7-regular graph on 24 vertices and 84 edges: vertex cosets of ⟨σ⟩,
/// edge cosets of ⟨ρσ⟩ in PSL(2,7).
pub fn klein_quartic_graph() -> Result<(FiniteGroup, LabeledGraph), GraphError> {
    let g = FiniteGroup::psl2(7)?;
    let (rho, sigma) = klein_quartic_generators(&g).ok_or_else(|| GraphError::Invalid("no (3,7,2) generators".into()))?;
    let x = coset_graph(&g, &g.cyclic_subgroup(sigma), &g.cyclic_subgroup(g.mul(rho, sigma)))?;
    Ok((g, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_quartic_skeleton() {
        let (g, x) = klein_quartic_graph().unwrap();
        assert_eq!(g.order(), 168);
        assert_eq!((x.num_vertices(), x.num_edges(), x.degree()), (24, 84, 7));
        assert!(x.is_simple() && x.is_connected());
        let (r, s) = klein_quartic_generators(&g).unwrap();
        assert_eq!((g.element_order(r), g.element_order(s), g.element_order(g.mul(r, s))), (3, 7, 2));
    }

    #[test]
    fn degenerate_incidence_rejected() {
        let z = FiniteGroup::cyclic(6);
        let t = Subgroup::trivial();
        assert!(matches!(coset_graph(&z, &t, &t), Err(GraphError::IncidenceDegenerate(_))));
        // the edge coset {g, g+3} lies inside a coset of ⟨3⟩
        let h = z.cyclic_subgroup(3);
        assert!(matches!(coset_graph(&z, &h, &h), Err(GraphError::IncidenceDegenerate(_))));
    }

    #[test]
    fn cyclic_coset_graph_is_a_dipole() {
        // vertex cosets: evens and odds; edge cosets {g, g+5}
        let z = FiniteGroup::cyclic(10);
        let x = coset_graph(&z, &z.cyclic_subgroup(2), &z.cyclic_subgroup(5)).unwrap();
        assert_eq!((x.num_vertices(), x.num_edges(), x.degree()), (2, 5, 5));
        assert!(!x.is_simple());
    }
}
