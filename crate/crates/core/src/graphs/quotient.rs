use serde::Serialize;

use super::{GraphError, LabeledGraph};
use crate::algebra::{FiniteGroup, GroupKind, Subgroup};

/// Free right action of a cyclic group Z_ℓ = ⟨h⟩ on a labeled graph.
///
/// `vperm[k][v] = v·h^k` and `eperm[k][e] = e·h^k`. Construction checks that
/// the action is free on vertices and edges, preserves labels
/// (Λ_{vh}(eh) = Λ_v(e)) and satisfies the quotient condition (no edge joins
/// v and v·h^k for k ≠ 0).
#[derive(Clone, Debug)]
pub struct GroupAction {
    graph: LabeledGraph,
    order: usize,
    vperm: Vec<Vec<usize>>,
    eperm: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Action generated by the vertex permutation `gen` of order `order`.
    /// Edge images are read off the labels, so a non-invariant labeling is
    /// caught here.
    pub fn new(graph: LabeledGraph, gen: &[usize], order: usize) -> Result<Self, GraphError> {
        let n = graph.num_vertices();
        if gen.len() != n || order == 0 {
            return Err(GraphError::Invalid("generator permutation has wrong length".into()));
        }
        let mut vperm = vec![(0..n).collect::<Vec<_>>()];
        for k in 1..order {
            let prev = &vperm[k - 1];
            vperm.push((0..n).map(|v| gen[prev[v]]).collect());
        }
        if (0..n).any(|v| gen[vperm[order - 1][v]] != v) {
            return Err(GraphError::Invalid(format!("generator does not have order dividing {order}")));
        }
        let mut eperm = Vec::with_capacity(order);
        for vp in &vperm {
            let mut ep = Vec::with_capacity(graph.num_edges());
            for e in 0..graph.num_edges() {
                let [a, b] = graph.endpoints(e);
                let [la, lb] = graph.edge_labels(e);
                let f = graph.edge_at(vp[a], la);
                if graph.other_end(f, vp[a]) != vp[b] || graph.label_at(f, vp[b]) != lb {
                    return Err(GraphError::NotInvariant(format!("edge {e} is not mapped to an edge with the same labels")));
                }
                ep.push(f);
            }
            eperm.push(ep);
        }
        let act = Self { graph, order, vperm, eperm };
        act.check_free()?;
        act.check_quotient_condition()?;
        Ok(act)
    }

    /// Right multiplication by a cyclic subgroup H on a Cayley graph of
    /// `group` (vertices indexed by group elements).
    pub fn cayley_right(graph: LabeledGraph, group: &FiniteGroup, sub: &Subgroup) -> Result<Self, GraphError> {
        if graph.num_vertices() != group.order() {
            return Err(GraphError::Invalid("graph is not on the group's elements".into()));
        }
        let h = sub.generator();
        let gen: Vec<usize> = (0..group.order()).map(|g| group.mul(g, h)).collect();
        Self::new(graph, &gen, sub.order())
    }

    /// The trivial group acting on `graph`.
    pub fn trivial(graph: LabeledGraph) -> Self {
        let n = graph.num_vertices();
        let m = graph.num_edges();
        Self { graph, order: 1, vperm: vec![(0..n).collect()], eperm: vec![(0..m).collect()] }
    }

    fn check_free(&self) -> Result<(), GraphError> {
        for k in 1..self.order {
            if let Some(v) = (0..self.graph.num_vertices()).find(|&v| self.vperm[k][v] == v) {
                return Err(GraphError::NotFree(format!("h^{k} fixes vertex {v}")));
            }
            if let Some(e) = (0..self.graph.num_edges()).find(|&e| self.eperm[k][e] == e) {
                return Err(GraphError::NotFree(format!("h^{k} fixes edge {e}")));
            }
        }
        Ok(())
    }

    fn check_quotient_condition(&self) -> Result<(), GraphError> {
        for v in 0..self.graph.num_vertices() {
            for w in self.graph.neighbors(v) {
                if let Some(k) = (1..self.order).find(|&k| self.vperm[k][v] == w) {
                    return Err(GraphError::QuotientConditionViolated { v, k });
                }
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// v·h^k.
    pub fn act_vertex(&self, v: usize, k: usize) -> usize {
        self.vperm[k % self.order][v]
    }

    /// e·h^k.
    pub fn act_edge(&self, e: usize, k: usize) -> usize {
        self.eperm[k % self.order][e]
    }
}

/// Connection φ_R on the quotient: for each base edge E, oriented as stored,
/// the exponent m with (R(tail), R(head)·h^m) an edge of the cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connection {
    pub order: usize,
    pub values: Vec<usize>,
}

impl Connection {
    /// φ(E) traversed starting at `from`; the reversed orientation gives the
    /// inverse element.
    pub fn value_from(&self, base: &LabeledGraph, e: usize, from: usize) -> usize {
        if base.endpoints(e)[0] == from {
            self.values[e]
        } else {
            (self.order - self.values[e]) % self.order
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&m| m == 0)
    }
}

/// Quotient X/H plus the bookkeeping that relates it to X.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub base: LabeledGraph,
    pub connection: Connection,
    /// Orbit representative R(A) (smallest vertex index in the orbit).
    pub vertex_reps: Vec<usize>,
    /// Smallest edge index in each edge orbit.
    pub edge_reps: Vec<usize>,
    /// `vertex_lift[v] = (A, k)` with v = R(A)·h^k.
    pub vertex_lift: Vec<(usize, usize)>,
    /// `edge_orbit[e]` = base edge of e.
    pub edge_orbit: Vec<usize>,
}

/// X → X/H. Base vertices are ordered by representative, base edges by
/// their smallest member; each base edge is oriented from the lower to the
/// higher base vertex.
pub fn quotient_graph(act: &GroupAction) -> Result<Quotient, GraphError> {
    let x = act.graph();
    let l = act.order();
    let n = x.num_vertices();
    let mut vertex_lift = vec![(usize::MAX, 0); n];
    let mut vertex_reps = Vec::new();
    for v in 0..n {
        if vertex_lift[v].0 != usize::MAX {
            continue;
        }
        let a = vertex_reps.len();
        vertex_reps.push(v);
        for k in 0..l {
            vertex_lift[act.act_vertex(v, k)] = (a, k);
        }
    }
    let mut edge_orbit = vec![usize::MAX; x.num_edges()];
    let mut edge_reps = Vec::new();
    let mut base_edges = Vec::new();
    let mut values = Vec::new();
    for e in 0..x.num_edges() {
        if edge_orbit[e] != usize::MAX {
            continue;
        }
        let id = edge_reps.len();
        edge_reps.push(e);
        for k in 0..l {
            edge_orbit[act.act_edge(e, k)] = id;
        }
        let [u, w] = x.endpoints(e);
        let [lu, lw] = x.edge_labels(e);
        let ((au, ku), (aw, kw)) = (vertex_lift[u], vertex_lift[w]);
        if au == aw {
            return Err(GraphError::QuotientConditionViolated { v: u, k: (kw + l - ku) % l });
        }
        // translate so the tail is the representative: (R(A), R(B)·h^m)
        let (tail, head, lt, lh, kt, kh) = if au < aw { (au, aw, lu, lw, ku, kw) } else { (aw, au, lw, lu, kw, ku) };
        base_edges.push((tail, head, lt, lh));
        values.push((kh + l - kt) % l);
    }
    let base = LabeledGraph::new(vertex_reps.len(), x.degree(), &base_edges)?;
    Ok(Quotient { base, connection: Connection { order: l, values }, vertex_reps, edge_reps, vertex_lift, edge_orbit })
}

/// Cover rebuilt from (X/H, φ): vertex A·ℓ + k stands for R(A)·h^k and edge
/// E·ℓ + k joins (tail, k) to (head, k + φ(E)).
pub fn reconstruct_cover(base: &LabeledGraph, conn: &Connection) -> Result<LabeledGraph, GraphError> {
    let l = conn.order;
    let mut edges = Vec::with_capacity(base.num_edges() * l);
    for e in 0..base.num_edges() {
        let [a, b] = base.endpoints(e);
        let [la, lb] = base.edge_labels(e);
        for k in 0..l {
            edges.push((a * l + k, b * l + (k + conn.values[e]) % l, la, lb));
        }
    }
    LabeledGraph::new(base.num_vertices() * l, base.degree(), &edges)
}

impl Quotient {
    /// (E, k) with e the copy of base edge E whose tail end is R(tail E)·h^k,
    /// i.e. edge E·ℓ + k of the reconstructed cover.
    pub fn edge_lift(&self, x: &LabeledGraph, e: usize) -> (usize, usize) {
        let base_e = self.edge_orbit[e];
        let tail = self.base.endpoints(base_e)[0];
        let [u, w] = x.endpoints(e);
        let end = if self.vertex_lift[u].0 == tail { u } else { w };
        (base_e, self.vertex_lift[end].1)
    }

    /// Checks that v ↦ (A, k) maps X isomorphically, labels included, onto
    /// the cover reconstructed from the base and the connection.
    pub fn reconstruction_is_isomorphic(&self, x: &LabeledGraph) -> bool {
        let Ok(cover) = reconstruct_cover(&self.base, &self.connection) else {
            return false;
        };
        let l = self.connection.order;
        if cover.num_vertices() != x.num_vertices() || cover.num_edges() != x.num_edges() {
            return false;
        }
        let map = |v: usize| {
            let (a, k) = self.vertex_lift[v];
            a * l + k
        };
        (0..x.num_vertices()).all(|v| {
            (0..x.degree()).all(|lab| {
                let e = x.edge_at(v, lab);
                let w = x.other_end(e, v);
                let f = cover.edge_at(map(v), lab);
                cover.other_end(f, map(v)) == map(w) && cover.label_at(f, map(w)) == x.label_at(e, w)
            })
        })
    }
}

/// Result of testing S ∩ gHg⁻¹ = ∅ for every g.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    pub holds: bool,
    /// (g, h, s) with g·h·g⁻¹ = s, h ≠ 1.
    pub witness: Option<(usize, usize, usize)>,
    /// Some(true) when every h ∈ H has square determinant and every s ∈ S a
    /// non-square one, which forces the condition; None when the shortcut
    /// does not apply.
    pub determinant_shortcut: Option<bool>,
}

impl QuotientCheck {
    /// The shortcut never claims a condition that enumeration refutes.
    pub fn agrees(&self) -> bool {
        self.determinant_shortcut != Some(true) || self.holds
    }
}

pub fn check_quotient_condition(group: &FiniteGroup, gens: &[usize], sub: &Subgroup) -> QuotientCheck {
    let mut in_s = vec![false; group.order()];
    for &s in gens {
        in_s[s] = true;
    }
    let nontrivial: Vec<usize> = sub.elements().iter().copied().filter(|&h| h != group.identity()).collect();
    let witness = crate::par::find_first(0..group.order(), |g| {
        nontrivial.iter().find_map(|&h| {
            let c = group.conjugate(g, h);
            in_s[c].then_some((g, h, c))
        })
    })
    .map(|(_, w)| w);
    let determinant_shortcut = match group.kind() {
        GroupKind::Pgl2 { .. } => {
            let det_sq = |i: usize| group.matrix(i).unwrap().det_is_square();
            (nontrivial.iter().all(|&h| det_sq(h)) && gens.iter().all(|&s| !det_sq(s))).then_some(true)
        }
        _ => None,
    };
    QuotientCheck { holds: witness.is_none(), witness, determinant_shortcut }
}
