use super::{GraphError, LabeledGraph};
use crate::algebra::{is_prime, legendre, FiniteGroup, ProjMat2};

/// Cayley graph: g ~ sg for s ∈ S. The edge from g to sg carries label
/// idx(s) at g and idx(s⁻¹) at sg; it is stored oriented from the endpoint
/// of lower index. Right multiplication preserves the labeling.
pub fn cayley_graph(group: &FiniteGroup, gens: &[usize]) -> Result<LabeledGraph, GraphError> {
    let n = group.order();
    let s = gens.len();
    let mut pos = vec![usize::MAX; n];
    for (i, &g) in gens.iter().enumerate() {
        if g == group.identity() {
            return Err(GraphError::SelfLoop(0));
        }
        if pos[g] != usize::MAX {
            return Err(GraphError::Invalid(format!("generator {g} listed twice")));
        }
        pos[g] = i;
    }
    let inv_pos: Vec<usize> = gens.iter().map(|&g| pos[group.inv(g)]).collect();
    if inv_pos.contains(&usize::MAX) {
        return Err(GraphError::NotSymmetric);
    }
    let mut edges = Vec::with_capacity(n * s / 2);
    for g in 0..n {
        for (i, &x) in gens.iter().enumerate() {
            let h = group.mul(x, g);
            if g < h {
                edges.push((g, h, i, inv_pos[i]));
            }
        }
    }
    LabeledGraph::new(n, s, &edges)
}

/// Integer quadruples with a² + b² + c² + d² = p, normalized as follows.
/// p ≡ 1 mod 4: a positive and odd. p ≡ 3 mod 4: a even and the first
/// nonzero entry positive. Ordered lexicographically.
pub fn lps_quadruples(p: u64) -> Vec<[i64; 4]> {
    let p = p as i64;
    let r = (p as f64).sqrt().ceil() as i64;
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                for d in -r..=r {
                    if a * a + b * b + c * c + d * d != p {
                        continue;
                    }
                    let keep = if p % 4 == 1 {
                        a > 0 && a % 2 == 1
                    } else {
                        a % 2 == 0 && [a, b, c, d].into_iter().find(|&x| x != 0).is_some_and(|x| x > 0)
                    };
                    if keep {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// (x, y) with x² + y² + 1 ≡ 0 mod q; y is scanned outermost, so for q ≡ 1
/// mod 4 the result has y = 0.
pub fn lps_root_of_minus_one(q: u64) -> (u64, u64) {
    for y in 0..q {
        for x in 0..q {
            if (x * x + y * y + 1) % q == 0 {
                return (x, y);
            }
        }
    }
    unreachable!("every odd prime field is a sum of two squares")
}

fn check_primes(p: u64, q: u64) -> Result<(), GraphError> {
    let ok = p != q && p > 2 && q > 2 && is_prime(p) && is_prime(q) && q * q > 4 * p;
    if ok {
        Ok(())
    } else {
        Err(GraphError::InvalidPrimes { p, q })
    }
}

/// S_{p,q}: the matrices [[a+bx+dy, −by+c+dx], [−by−c+dx, a−bx−dy]] over F_q
/// for the quadruples of [`lps_quadruples`]. Each has determinant p.
pub fn lps_generators(p: u64, q: u64) -> Result<Vec<ProjMat2>, GraphError> {
    check_primes(p, q)?;
    let quads = lps_quadruples(p);
    if quads.len() as u64 != p + 1 {
        return Err(GraphError::SizeMismatch { expected: p as usize + 1, found: quads.len() });
    }
    let (x, y) = lps_root_of_minus_one(q);
    let (x, y) = (x as i64, y as i64);
    let mut mats = Vec::with_capacity(quads.len());
    for [a, b, c, d] in quads {
        let m = ProjMat2::new(q as u32, a + b * x + d * y, -b * y + c + d * x, -b * y - c + d * x, a - b * x - d * y)?;
        if m == m.inv() {
            return Err(GraphError::InvolutiveGenerator(m.entries()));
        }
        mats.push(m);
    }
    let mut sorted = mats.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != mats.len() {
        return Err(GraphError::SizeMismatch { expected: mats.len(), found: sorted.len() });
    }
    if mats.iter().any(|m| !mats.contains(&m.inv())) {
        return Err(GraphError::NotSymmetric);
    }
    Ok(mats)
}

/// An LPS graph X_{p,q} together with its group and generators.
#[derive(Clone, Debug)]
pub struct LpsGraph {
    pub p: u64,
    pub q: u64,
    /// PSL(2,q) if (p/q) = 1, PGL(2,q) if (p/q) = −1.
    pub group: FiniteGroup,
    /// Generator indices in the order of [`lps_generators`].
    pub generators: Vec<usize>,
    pub graph: LabeledGraph,
}

pub fn lps_graph(p: u64, q: u64) -> Result<LpsGraph, GraphError> {
    let mats = lps_generators(p, q)?;
    let group = if legendre(p as i64, q)? == 1 { FiniteGroup::psl2(q as u32)? } else { FiniteGroup::pgl2(q as u32)? };
    let generators = mats
        .iter()
        .map(|m| group.index_of(m).ok_or_else(|| GraphError::Invalid(format!("{m:?} is not in {:?}", group.kind()))))
        .collect::<Result<Vec<_>, _>>()?;
    let graph = cayley_graph(&group, &generators)?;
    Ok(LpsGraph { p, q, group, generators, graph })
}
