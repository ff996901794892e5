use std::collections::VecDeque;
use std::fmt::Write as _;

use super::GraphError;

/// s-regular graph with a labeling Λ_v: edges at v → [0, s).
///
/// Edges are stored with an orientation `[tail, head]`. Parallel edges are
/// allowed (quotients of simple graphs can have them); self-loops are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    s: usize,
    edges: Vec<[usize; 2]>,
    labels: Vec<[usize; 2]>,
    inc: Vec<Vec<usize>>,
}

impl LabeledGraph {
    /// `edges[e] = (tail, head, Λ_tail(e), Λ_head(e))`.
    pub fn new(n: usize, s: usize, edges: &[(usize, usize, usize, usize)]) -> Result<Self, GraphError> {
        let mut inc = vec![vec![usize::MAX; s]; n];
        for (e, &(a, b, la, lb)) in edges.iter().enumerate() {
            if a >= n || b >= n {
                return Err(GraphError::Invalid(format!("edge {e} has endpoint out of range")));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for (v, l) in [(a, la), (b, lb)] {
                if l >= s {
                    return Err(GraphError::Invalid(format!("label {l} at vertex {v} exceeds degree {s}")));
                }
                if inc[v][l] != usize::MAX {
                    return Err(GraphError::Invalid(format!("label {l} used twice at vertex {v}")));
                }
                inc[v][l] = e;
            }
        }
        if let Some(v) = inc.iter().position(|r| r.contains(&usize::MAX)) {
            return Err(GraphError::Invalid(format!("vertex {v} is not {s}-regular")));
        }
        Ok(Self {
            n,
            s,
            edges: edges.iter().map(|&(a, b, _, _)| [a, b]).collect(),
            labels: edges.iter().map(|&(_, _, la, lb)| [la, lb]).collect(),
            inc,
        })
    }

    /// Regular graph from an edge list, labeling each vertex's edges in the
    /// order they appear.
    pub fn from_edges_in_order(n: usize, s: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut next = vec![0usize; n];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(GraphError::Invalid("endpoint out of range".into()));
            }
            let la = next[a];
            next[a] += 1;
            let lb = next[b];
            next[b] += 1;
            edges.push((a, b, la, lb));
        }
        Self::new(n, s, &edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self) -> usize {
        self.s
    }

    /// `[tail, head]` of edge `e`.
    pub fn endpoints(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }

    /// `[Λ_tail(e), Λ_head(e)]`.
    pub fn edge_labels(&self, e: usize) -> [usize; 2] {
        self.labels[e]
    }

    /// Λ_v(e) for an endpoint v of e.
    pub fn label_at(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edges[e];
        if v == a {
            self.labels[e][0]
        } else {
            assert_eq!(v, b, "vertex {v} is not on edge {e}");
            self.labels[e][1]
        }
    }

    /// The edge at `v` with label `l`.
    pub fn edge_at(&self, v: usize, l: usize) -> usize {
        self.inc[v][l]
    }

    /// Edges at `v`, ordered by label.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edges[e];
        if v == a {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.inc[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|&[a, b]| seen.insert((a.min(b), a.max(b))))
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    pub fn components(&self) -> usize {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        count
    }

    /// Two-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// Same graph with Λ'_v(e) = f(v, Λ_v(e)); each f(v, ·) must permute [0, s).
    pub fn relabeled(&self, f: impl Fn(usize, usize) -> usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..self.edges.len())
            .map(|e| {
                let ([a, b], [la, lb]) = (self.edges[e], self.labels[e]);
                (a, b, f(a, la), f(b, lb))
            })
            .collect();
        Self::new(self.n, self.s, &edges)
    }

    /// One `u v label_u label_v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in 0..self.edges.len() {
            let [a, b] = self.edges[e];
            let [la, lb] = self.labels[e];
            writeln!(out, "{a} {b} {la} {lb}").unwrap();
        }
        out
    }

    /// Parses the edge-list format; n and s are inferred.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let f: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| GraphError::Invalid(format!("line {}: bad integer {t:?}", ln + 1))))
                .collect::<Result<_, _>>()?;
            if f.len() != 4 {
                return Err(GraphError::Invalid(format!("line {}: expected 4 fields", ln + 1)));
            }
            edges.push((f[0], f[1], f[2], f[3]));
        }
        let n = edges.iter().map(|&(a, b, _, _)| a.max(b) + 1).max().unwrap_or(0);
        let s = if n == 0 { 0 } else { 2 * edges.len() / n };
        Self::new(n, s, &edges)
    }
}

/// Cycle graph C_ℓ; edge i joins i and i+1 mod ℓ, labeled 1 at i and 0 at
/// i+1, oriented from the lower index.
pub fn cycle_graph(ell: usize) -> Result<LabeledGraph, GraphError> {
    let edges: Vec<_> = (0..ell).map(|i| if i + 1 < ell { (i, i + 1, 1, 0) } else { (0, i, 0, 1) }).collect();
    LabeledGraph::new(ell, 2, &edges)
}

pub fn complete_graph(n: usize) -> LabeledGraph {
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    LabeledGraph::from_edges_in_order(n, n.saturating_sub(1), &pairs).unwrap()
}

pub fn petersen_graph() -> LabeledGraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    LabeledGraph::from_edges_in_order(10, 3, &pairs).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_graphs() {
        let c = cycle_graph(5).unwrap();
        assert_eq!((c.num_vertices(), c.num_edges(), c.degree()), (5, 5, 2));
        assert!(c.is_connected() && c.is_simple());
        assert!(c.bipartition().is_none());
        assert!(cycle_graph(6).unwrap().bipartition().is_some());
        let p = petersen_graph();
        assert_eq!(p.num_edges(), 15);
        assert!(p.is_simple());
        assert_eq!(complete_graph(5).num_edges(), 10);
    }

    #[test]
    fn rejects_bad_labelings() {
        assert!(matches!(LabeledGraph::new(2, 1, &[(0, 0, 0, 0)]), Err(GraphError::SelfLoop(0))));
        assert!(LabeledGraph::new(3, 1, &[(0, 1, 0, 0)]).is_err());
        assert!(LabeledGraph::new(2, 2, &[(0, 1, 0, 0), (0, 1, 0, 0)]).is_err());
        let multi = LabeledGraph::new(2, 2, &[(0, 1, 0, 1), (0, 1, 1, 0)]).unwrap();
        assert!(!multi.is_simple());
    }

    #[test]
    fn edge_list_round_trip() {
        let p = petersen_graph();
        assert_eq!(LabeledGraph::from_edge_list(&p.to_edge_list()).unwrap(), p);
    }
}
