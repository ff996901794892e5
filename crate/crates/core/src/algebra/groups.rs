use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::fq::{is_prime, Fq};
use super::AlgebraError;

/// Largest q for which PGL(2,q) / PSL(2,q) is enumerated.
pub const PROJECTIVE_Q_CAP: u32 = 61;
/// Groups up to this order get a full multiplication table.
const TABLE_MAX_ORDER: usize = 1500;
/// Groups up to this order have their axioms checked exhaustively.
const VERIFY_MAX_ORDER: usize = 2500;

/// 2×2 invertible matrix over F_q modulo scalars, in canonical form: the
/// first nonzero entry of (a, b, c, d) is 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjMat2 {
    q: u32,
    e: [u32; 4],
}

impl ProjMat2 {
    pub fn new(q: u32, a: i64, b: i64, c: i64, d: i64) -> Result<Self, AlgebraError> {
        let f = |x: i64| Fq::new(x, q);
        Self::from_fq([f(a), f(b), f(c), f(d)])
    }

    pub fn from_fq(e: [Fq; 4]) -> Result<Self, AlgebraError> {
        let q = e[0].modulus();
        if (e[0] * e[3] - e[1] * e[2]).is_zero() {
            return Err(AlgebraError::Singular);
        }
        let lead = e.iter().find(|x| !x.is_zero()).unwrap().inv().unwrap();
        Ok(Self { q, e: e.map(|x| (x * lead).value()) })
    }

    pub fn identity(q: u32) -> Self {
        Self { q, e: [1, 0, 0, 1] }
    }

    pub fn modulus(&self) -> u32 {
        self.q
    }

    pub fn entries(&self) -> [u32; 4] {
        self.e
    }

    fn fq(&self) -> [Fq; 4] {
        self.e.map(|x| Fq::new(x as i64, self.q))
    }

    pub fn det(&self) -> Fq {
        let [a, b, c, d] = self.fq();
        a * d - b * c
    }

    /// Whether the determinant is a square, i.e. the element lies in PSL(2,q).
    /// Well defined because rescaling changes the determinant by a square.
    pub fn det_is_square(&self) -> bool {
        self.det().is_square()
    }

    pub fn trace(&self) -> Fq {
        let [a, _, _, d] = self.fq();
        a + d
    }

    pub fn mul(&self, o: &ProjMat2) -> ProjMat2 {
        let [a, b, c, d] = self.fq();
        let [e, f, g, h] = o.fq();
        Self::from_fq([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h]).expect("product of invertibles")
    }

    pub fn inv(&self) -> ProjMat2 {
        let [a, b, c, d] = self.fq();
        Self::from_fq([d, -b, -c, a]).expect("inverse of invertible")
    }
}

impl fmt::Debug for ProjMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.e;
        write!(f, "[[{a},{b}],[{c},{d}]]/F{}", self.q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupKind {
    Pgl2 { q: u32 },
    Psl2 { q: u32 },
    Cyclic { n: usize },
}

/// Enumerated finite group; elements are addressed by index, the identity
/// has index 0.
#[derive(Clone)]
pub struct FiniteGroup {
    kind: GroupKind,
    mats: Vec<ProjMat2>,
    index: HashMap<ProjMat2, usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({:?}, order {})", self.kind, self.order())
    }
}

fn check_q(q: u32) -> Result<(), AlgebraError> {
    if q < 3 || !is_prime(q as u64) {
        return Err(AlgebraError::InvalidModulus(q as u64));
    }
    if q > PROJECTIVE_Q_CAP {
        return Err(AlgebraError::CapExceeded { q, cap: PROJECTIVE_Q_CAP });
    }
    Ok(())
}

/// Canonical representatives of PGL(2,q), identity first, the rest in
/// lexicographic order of (a, b, c, d).
fn projective_elements(q: u32, psl_only: bool) -> Vec<ProjMat2> {
    let id = ProjMat2::identity(q);
    let mut out = vec![id];
    for a in 0..=1u32 {
        let b_range = if a == 1 { 0..q } else { 1..2 };
        for b in b_range {
            for c in 0..q {
                for d in 0..q {
                    let Ok(m) = ProjMat2::new(q, a as i64, b as i64, c as i64, d as i64) else { continue };
                    if m.e != [a, b, c, d] || m == id {
                        continue;
                    }
                    if psl_only && !m.det_is_square() {
                        continue;
                    }
                    out.push(m);
                }
            }
        }
    }
    out
}

impl FiniteGroup {
    pub fn pgl2(q: u32) -> Result<Self, AlgebraError> {
        check_q(q)?;
        Ok(Self::from_matrices(GroupKind::Pgl2 { q }, projective_elements(q, false)))
    }

    pub fn psl2(q: u32) -> Result<Self, AlgebraError> {
        check_q(q)?;
        Ok(Self::from_matrices(GroupKind::Psl2 { q }, projective_elements(q, true)))
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let inverses = (0..n).map(|i| (n - i) % n).collect();
        Self { kind: GroupKind::Cyclic { n }, mats: Vec::new(), index: HashMap::new(), inverses, table: None }
    }

    fn from_matrices(kind: GroupKind, mats: Vec<ProjMat2>) -> Self {
        let index: HashMap<ProjMat2, usize> = mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let inverses = mats.iter().map(|m| index[&m.inv()]).collect();
        let mut g = Self { kind, mats, index, inverses, table: None };
        let n = g.order();
        if n <= TABLE_MAX_ORDER {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = g.mul_uncached(a, b) as u32;
                }
            }
            g.table = Some(t);
        }
        if n <= VERIFY_MAX_ORDER {
            g.verify_axioms().expect("enumerated group violates group axioms");
        }
        g
    }

    /// Checks closure (via the index map), identity, inverses and, for small
    /// orders, associativity on a sample.
    pub fn verify_axioms(&self) -> Result<(), String> {
        let n = self.order();
        for a in 0..n {
            if self.mul(a, 0) != a || self.mul(0, a) != a {
                return Err(format!("identity fails at {a}"));
            }
            if self.mul(a, self.inv(a)) != 0 {
                return Err(format!("inverse fails at {a}"));
            }
        }
        for a in (0..n).step_by((n / 17).max(1)) {
            for b in (0..n).step_by((n / 13).max(1)) {
                for c in (0..n).step_by((n / 11).max(1)) {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("associativity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        match self.kind {
            GroupKind::Cyclic { n } => n,
            _ => self.mats.len(),
        }
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Matrix of element `i` (projective groups only).
    pub fn matrix(&self, i: usize) -> Option<&ProjMat2> {
        self.mats.get(i)
    }

    pub fn index_of(&self, m: &ProjMat2) -> Option<usize> {
        self.index.get(m).copied()
    }

    fn mul_uncached(&self, a: usize, b: usize) -> usize {
        match self.kind {
            GroupKind::Cyclic { n } => (a + b) % n,
            _ => self.index[&self.mats[a].mul(&self.mats[b])],
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.mul_uncached(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// g·h·g⁻¹.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted list of elements of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..n).filter(|&i| seen[i]).collect()
    }

    /// Cyclic subgroup ⟨a⟩ with elements listed as powers a⁰, a¹, ….
    pub fn cyclic_subgroup(&self, a: usize) -> Subgroup {
        let mut elements = vec![0];
        let mut x = a;
        while x != 0 {
            elements.push(x);
            x = self.mul(x, a);
        }
        Subgroup { generator: a, elements }
    }

    /// The unipotent upper-triangular subgroup {[[1,x],[0,1]]} of PGL(2,q),
    /// listed as powers of [[1,1],[0,1]].
    pub fn unipotent_subgroup(&self) -> Result<Subgroup, AlgebraError> {
        let GroupKind::Pgl2 { q } = self.kind else {
            return Err(AlgebraError::NotPgl);
        };
        let u = ProjMat2::new(q, 1, 1, 0, 1)?;
        let sub = self.cyclic_subgroup(self.index[&u]);
        debug_assert_eq!(sub.order(), q as usize);
        Ok(sub)
    }

    /// Greedy generating set in index order.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.order();
        let mut gens = Vec::new();
        let mut span = vec![false; n];
        span[0] = true;
        for a in 0..n {
            if !span[a] {
                gens.push(a);
                for x in self.generated(&gens) {
                    span[x] = true;
                }
            }
        }
        gens
    }

    /// Generator list as a JSON value for debugging.
    pub fn to_debug_json(&self) -> serde_json::Value {
        let gens = self.generators();
        match self.kind {
            GroupKind::Cyclic { n } => json!({ "kind": "cyclic", "n": n, "order": n, "generators": gens }),
            GroupKind::Pgl2 { q } | GroupKind::Psl2 { q } => {
                let name = if matches!(self.kind, GroupKind::Pgl2 { .. }) { "PGL2" } else { "PSL2" };
                let mats: Vec<[u32; 4]> = gens.iter().map(|&g| self.mats[g].entries()).collect();
                json!({ "kind": name, "q": q, "order": self.order(), "generators": mats })
            }
        }
    }
}

/// Cyclic subgroup, listed as powers of its generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    generator: usize,
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Self { generator: 0, elements: vec![0] }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    /// `elements()[k]` is generator^k.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(FiniteGroup::pgl2(3).unwrap().order(), 24);
        assert_eq!(FiniteGroup::pgl2(7).unwrap().order(), 336);
        assert_eq!(FiniteGroup::pgl2(13).unwrap().order(), 2184);
        assert_eq!(FiniteGroup::psl2(3).unwrap().order(), 12);
        assert_eq!(FiniteGroup::psl2(5).unwrap().order(), 60);
        assert_eq!(FiniteGroup::psl2(7).unwrap().order(), 168);
    }

    #[test]
    fn canonical_count_by_brute_force() {
        // every invertible matrix over F_3 lands on one of 24 classes, each
        // hit exactly q−1 = 2 times
        let mut counts: HashMap<ProjMat2, usize> = HashMap::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        if let Ok(m) = ProjMat2::new(3, a, b, c, d) {
                            *counts.entry(m).or_default() += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(counts.len(), 24);
        assert!(counts.values().all(|&c| c == 2));
    }

    #[test]
    fn caps_and_moduli() {
        assert!(matches!(FiniteGroup::pgl2(67), Err(AlgebraError::CapExceeded { .. })));
        assert!(matches!(FiniteGroup::pgl2(9), Err(AlgebraError::InvalidModulus(9))));
        assert!(matches!(FiniteGroup::psl2(2), Err(AlgebraError::InvalidModulus(2))));
    }

    #[test]
    fn unipotent_is_cyclic_of_order_q() {
        for q in [7u32, 13] {
            let g = FiniteGroup::pgl2(q).unwrap();
            let h = g.unipotent_subgroup().unwrap();
            assert_eq!(h.order(), q as usize);
            assert_eq!(g.pow(h.generator(), q as usize), 0);
            for &x in h.elements() {
                assert!(g.matrix(x).unwrap().det_is_square());
            }
        }
        assert_eq!(FiniteGroup::psl2(7).unwrap().unipotent_subgroup(), Err(AlgebraError::NotPgl));
    }

    #[test]
    fn psl_is_index_two_and_closed() {
        let g = FiniteGroup::pgl2(7).unwrap();
        let squares: Vec<usize> = (0..g.order()).filter(|&i| g.matrix(i).unwrap().det_is_square()).collect();
        assert_eq!(squares.len() * 2, g.order());
        assert_eq!(g.generated(&squares[1..4]).iter().all(|&x| g.matrix(x).unwrap().det_is_square()), true);
    }

    #[test]
    fn debug_json_generates_group() {
        let g = FiniteGroup::psl2(5).unwrap();
        let gens = g.generators();
        assert_eq!(g.generated(&gens).len(), 60);
        let js = g.to_debug_json();
        assert_eq!(js["order"], 60);
    }
}
