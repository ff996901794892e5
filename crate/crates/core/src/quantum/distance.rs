use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{CssCode, PauliType, QuantumError, SubsystemCssCode};
use crate::f2la::{kernel_basis, BitVec, F2Matrix};
use crate::par;

/// Budget for a distance search.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Largest support size enumerated.
    pub max_weight: usize,
    /// Enumerated supports, summed over all weights, before giving up.
    pub cap: u64,
    /// Information-set samples drawn for an upper bound when the
    /// enumeration gives up.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { max_weight: usize::MAX, cap: 200_000_000, samples: 64, seed: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Distance {
    Exact { value: usize },
    /// `lower` is proven by exhaustion; `upper` is the lightest logical seen.
    Bound { lower: usize, upper: Option<usize> },
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Distance::Exact { value } => Some(value),
            Distance::Bound { .. } => None,
        }
    }

    pub fn lower(&self) -> usize {
        match *self {
            Distance::Exact { value } => value,
            Distance::Bound { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> Option<usize> {
        match *self {
            Distance::Exact { value } => Some(value),
            Distance::Bound { upper, .. } => upper,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DistanceSearch {
    pub pauli: PauliType,
    pub distance: Distance,
    /// A logical of weight `distance.upper()`, when one is known.
    pub witness: Option<BitVec>,
    pub visited: u64,
}

const ABORT_CHECK: u64 = 1 << 12;

struct Walker<'a> {
    nbrs: &'a [Vec<usize>],
    hcols: &'a [BitVec],
    tcols: &'a [BitVec],
    target: usize,
    start: usize,
    cover: Vec<u32>,
    sub: Vec<usize>,
    syn: BitVec,
    test: BitVec,
    local: u64,
    visited: &'a AtomicU64,
    cap: u64,
    abort: &'a AtomicBool,
}

impl Walker<'_> {
    fn push(&mut self, u: usize) {
        self.sub.push(u);
        self.cover[u] += 1;
        for &x in &self.nbrs[u] {
            self.cover[x] += 1;
        }
        self.syn.xor_assign(&self.hcols[u]);
        self.test.xor_assign(&self.tcols[u]);
    }

    fn pop(&mut self) {
        let u = self.sub.pop().unwrap();
        self.cover[u] -= 1;
        for &x in &self.nbrs[u] {
            self.cover[x] -= 1;
        }
        self.syn.xor_assign(&self.hcols[u]);
        self.test.xor_assign(&self.tcols[u]);
    }

    fn tick(&mut self) -> bool {
        self.local += 1;
        if self.local >= ABORT_CHECK.min(self.cap.max(1)) {
            let total = self.visited.fetch_add(self.local, Ordering::Relaxed) + self.local;
            self.local = 0;
            if total > self.cap {
                self.abort.store(true, Ordering::Relaxed);
            }
        }
        !self.abort.load(Ordering::Relaxed)
    }

    /// ESU enumeration: every connected support with minimum `start` is
    /// reached exactly once.
    fn extend(&mut self, mut ext: Vec<usize>) -> bool {
        if !self.tick() {
            return false;
        }
        if self.sub.len() == self.target {
            return self.syn.is_zero() && !self.test.is_zero();
        }
        while let Some(u) = ext.pop() {
            let mut next = ext.clone();
            next.extend(self.nbrs[u].iter().copied().filter(|&x| x > self.start && self.cover[x] == 0));
            self.push(u);
            if self.extend(next) {
                return true;
            }
            self.pop();
        }
        false
    }

    fn flush(&mut self) {
        self.visited.fetch_add(self.local, Ordering::Relaxed);
        self.local = 0;
    }
}

/// Qubits sharing a row of `h`.
fn check_neighbours(h: &F2Matrix) -> Vec<Vec<usize>> {
    let n = h.cols();
    let mut nbrs = vec![Vec::new(); n];
    for i in 0..h.rows() {
        let row = h.row_support(i);
        for &a in &row {
            nbrs[a].extend(row.iter().copied().filter(|&b| b != a));
        }
    }
    for l in &mut nbrs {
        l.sort_unstable();
        l.dedup();
    }
    nbrs
}

fn columns(m: &F2Matrix) -> Vec<BitVec> {
    let mt = m.transpose();
    (0..m.cols()).map(|j| mt.row(j)).collect()
}

/// Outcome of [`min_weight_logical`].
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub found: Option<BitVec>,
    /// Every support of size ≤ this was checked and none qualified.
    pub exhausted_weight: usize,
    pub visited: u64,
}

/// Lightest z with h·z = 0 and t·z ≠ 0.
///
/// If z = z₁ + z₂ with the two parts sharing no row of h, both parts lie in
/// ker h and one of them has t·zᵢ ≠ 0, so a lightest z is connected in the
/// graph joining qubits that share a row of h. Supports are enumerated as
/// connected sets, by increasing size, until one qualifies or the budget is
/// spent.
pub fn min_weight_logical(h: &F2Matrix, t: &F2Matrix, opts: &SearchOptions) -> Result<Enumeration, QuantumError> {
    if h.cols() != t.cols() {
        return Err(QuantumError::ShapeMismatch(format!("{} vs {} qubits", h.cols(), t.cols())));
    }
    let n = h.cols();
    let nbrs = check_neighbours(h);
    let hcols = columns(h);
    let tcols = columns(t);
    let visited = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let max_w = opts.max_weight.min(n);
    for w in 1..=max_w {
        let hit = par::find_first(0..n, |start| {
            if abort.load(Ordering::Relaxed) {
                return None;
            }
            let mut walker = Walker {
                nbrs: &nbrs,
                hcols: &hcols,
                tcols: &tcols,
                target: w,
                start,
                cover: vec![0; n],
                sub: Vec::with_capacity(w),
                syn: BitVec::zeros(h.rows()),
                test: BitVec::zeros(t.rows()),
                local: 0,
                visited: &visited,
                cap: opts.cap,
                abort: &abort,
            };
            walker.push(start);
            let ext: Vec<usize> = nbrs[start].iter().copied().filter(|&x| x > start).collect();
            let found = walker.extend(ext);
            walker.flush();
            found.then(|| BitVec::from_support(n, walker.sub.iter().copied()))
        });
        // a hit is a lightest logical even if the budget ran out meanwhile:
        // all lighter supports were exhausted in earlier rounds
        if let Some((_, z)) = hit {
            return Ok(Enumeration { found: Some(z), exhausted_weight: w - 1, visited: visited.into_inner() });
        }
        if abort.load(Ordering::Relaxed) {
            return Ok(Enumeration { found: None, exhausted_weight: w - 1, visited: visited.into_inner() });
        }
    }
    Ok(Enumeration { found: None, exhausted_weight: max_w, visited: visited.into_inner() })
}

/// Lightest qualifying vector seen over random information sets of ker h:
/// the kernel basis is row-reduced with the pivots pushed onto a random
/// column order and each reduced row is tested.
pub fn sample_upper(h: &F2Matrix, t: &F2Matrix, samples: usize, seed: u64) -> Option<BitVec> {
    let n = h.cols();
    let basis = kernel_basis(h).basis().clone();
    if basis.rows() == 0 {
        return None;
    }
    let per_trial = |trial: usize| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut m = basis.select_columns(&order);
        m.rref_in_place();
        let mut best: Option<BitVec> = None;
        for i in 0..m.rows() {
            let r = m.row(i);
            if r.is_zero() {
                continue;
            }
            let z = BitVec::from_support(n, r.iter_ones().map(|j| order[j]));
            if !t.mul_vec(&z).expect("shapes checked").is_zero() && best.as_ref().is_none_or(|b| z.weight() < b.weight()) {
                best = Some(z);
            }
        }
        best.map(|z| (z.weight(), z))
    };
    par::min_by_key_range(0..samples, per_trial).map(|(_, z)| z)
}

fn lightest_row(t: &F2Matrix, rows: &F2Matrix) -> Option<BitVec> {
    (0..rows.rows())
        .map(|i| rows.row(i))
        .filter(|z| !t.mul_vec(z).expect("shapes checked").is_zero())
        .min_by_key(|z| z.weight())
}

fn search(
    h: &F2Matrix,
    t: &F2Matrix,
    known: &F2Matrix,
    pauli: PauliType,
    opts: &SearchOptions,
) -> Result<DistanceSearch, QuantumError> {
    if t.rows() == 0 {
        return Err(QuantumError::NoLogicals);
    }
    let e = min_weight_logical(h, t, opts)?;
    if let Some(z) = e.found {
        return Ok(DistanceSearch { pauli, distance: Distance::Exact { value: z.weight() }, witness: Some(z), visited: e.visited });
    }
    let mut witness = lightest_row(t, known);
    if opts.samples > 0 {
        if let Some(z) = sample_upper(h, t, opts.samples, opts.seed) {
            if witness.as_ref().is_none_or(|w| z.weight() < w.weight()) {
                witness = Some(z);
            }
        }
    }
    let lower = e.exhausted_weight + 1;
    let distance = match witness.as_ref().map(|w| w.weight()) {
        Some(u) if u <= lower => Distance::Exact { value: u },
        upper => Distance::Bound { lower, upper },
    };
    Ok(DistanceSearch { pauli, distance, witness, visited: e.visited })
}

/// (constraint, test) matrices for bare distances: Z logicals lie in
/// ker H_X and pair nontrivially with some X logical, and dually.
fn bare_problem(q: &CssCode, pauli: PauliType) -> (&F2Matrix, &F2Matrix, &F2Matrix) {
    match pauli {
        PauliType::Z => (q.hx(), q.x_logicals(), q.z_logicals()),
        PauliType::X => (q.hz(), q.z_logicals(), q.x_logicals()),
    }
}

/// Exact minimum weight of a nontrivial (co)homology class.
pub fn exact_css_distance(q: &CssCode, pauli: PauliType, opts: &SearchOptions) -> Result<(usize, BitVec), QuantumError> {
    let (h, t, known) = bare_problem(q, pauli);
    let r = search(h, t, known, pauli, &SearchOptions { samples: 0, ..*opts })?;
    match (r.distance, r.witness) {
        (Distance::Exact { value }, Some(w)) => Ok((value, w)),
        (d, _) => Err(QuantumError::TooLarge { exhausted_weight: d.lower() - 1, upper: d.upper() }),
    }
}

/// Bare distance, exact when the budget allows and a bound pair otherwise.
pub fn css_distance(q: &CssCode, pauli: PauliType, opts: &SearchOptions) -> Result<DistanceSearch, QuantumError> {
    let (h, t, known) = bare_problem(q, pauli);
    search(h, t, known, pauli, opts)
}

/// Dressed distance: minimum weight over chains whose class has a nonzero
/// logical part, gauge classes and boundaries being free to add.
pub fn dressed_distance(s: &SubsystemCssCode, pauli: PauliType, opts: &SearchOptions) -> Result<DistanceSearch, QuantumError> {
    let q = s.base();
    match pauli {
        PauliType::Z => search(q.hx(), s.logical_x(), s.logical_z(), pauli, opts),
        PauliType::X => search(q.hz(), s.logical_z(), s.logical_x(), pauli, opts),
    }
}
