//! Fault-tolerant cycle embedding through a prescribed edge.
//!
//! [`Embedder::embed`] follows an inductive case analysis on the split
//! dimension with the most faults. `BH_2` is handled by explicit cycle
//! families; every level re-validates what it builds and falls back to a
//! bounded search if a construction does not apply.

mod base;
mod cycle;
mod faults;
mod induction;
mod lemmas;
mod lengths;
mod parts;
mod search;
mod trace;

pub use cycle::CyclePath;
pub use faults::FaultSet;
pub use lemmas::{
    cross_path_family, disjoint_cross_paths, eight_cycle_cross, two_path_exit, FamilyPath,
};
pub use lengths::{choose_length_split, rows as length_rows, LengthSplit, SplitRule};
pub use search::{cycle_through_edge, hamiltonian_path, SEARCH_BUDGET};
pub use trace::{EmbedTrace, TraceStep};

use crate::error::{Error, Result};
use crate::topology::{Automorphism, BalancedHypercube, Color, Edge, Vertex, MAX_DIMENSION};

/// Owns `BH_1 ..= BH_n` and embeds cycles into `BH_n`.
#[derive(Debug)]
pub struct Embedder {
    levels: Vec<BalancedHypercube>,
    exchange: Automorphism,
}

impl Embedder {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_DIMENSION).contains(&n) {
            return Err(Error::InvalidInput(format!(
                "embedding needs 2 <= n <= {MAX_DIMENSION}, got {n}"
            )));
        }
        let levels = (1..=n)
            .map(BalancedHypercube::new)
            .collect::<Result<Vec<_>>>()?;
        let exchange = Automorphism::exchanging(&levels[1], 0, 1)?;
        Ok(Self { levels, exchange })
    }

    pub fn n(&self) -> usize {
        self.levels.len()
    }

    /// The target graph `BH_n`.
    pub fn graph(&self) -> &BalancedHypercube {
        self.levels.last().expect("n >= 2")
    }

    /// `BH_m` for `1 <= m <= n`.
    pub fn level(&self, m: usize) -> &BalancedHypercube {
        &self.levels[m - 1]
    }

    /// Checks the preconditions of the guarantee.
    pub fn check_request(&self, e: Edge, len: usize, faults: &FaultSet) -> Result<()> {
        let g = self.graph();
        let n = self.n();
        g.edge(e.lo(), e.hi())?;
        if faults.n() != n {
            return Err(Error::InvalidInput(format!(
                "fault set is for BH_{}, graph is BH_{n}",
                faults.n()
            )));
        }
        if len % 2 == 1 || len < 6 {
            return Err(Error::UnsupportedLength(len));
        }
        if len > g.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "length {len} exceeds the {} vertices of BH_{n}",
                g.vertex_count()
            )));
        }
        if faults.contains(&e) {
            return Err(Error::InvalidInput("edge is faulty".into()));
        }
        if faults.len() > 2 * n - 2 {
            return Err(Error::GuaranteeVoid(format!(
                "{} faults exceed 2n-2 = {}",
                faults.len(),
                2 * n - 2
            )));
        }
        Ok(())
    }

    /// A fault-free cycle of length `len` through `e`, with the trace of the
    /// cases that produced it.
    pub fn embed(&self, e: Edge, len: usize, faults: &FaultSet) -> Result<(CyclePath, EmbedTrace)> {
        self.check_request(e, len, faults)?;
        let mut trace = EmbedTrace::default();
        let n = self.n();
        match self.solve(n, e.lo(), e.hi(), len, faults, 0, &mut trace) {
            Some(c) if is_valid_cycle(self.graph(), &c, e.lo(), e.hi(), len, faults) => {
                Ok((CyclePath::cycle(c), trace))
            }
            _ => Err(Error::Internal(format!(
                "no construction produced a {len}-cycle through {}",
                e.label(n)
            ))),
        }
    }

    /// Search-only embedding for requests outside the guarantee: more than
    /// `2n - 2` faults, or length 4.
    pub fn embed_best_effort(
        &self,
        e: Edge,
        len: usize,
        faults: &FaultSet,
        budget: u64,
    ) -> Result<(CyclePath, EmbedTrace)> {
        let g = self.graph();
        g.edge(e.lo(), e.hi())?;
        if faults.contains(&e) {
            return Err(Error::InvalidInput("edge is faulty".into()));
        }
        if len % 2 == 1 || len < 4 || len > g.vertex_count() {
            return Err(Error::UnsupportedLength(len));
        }
        let mut trace = EmbedTrace::default();
        trace.push(0, "Experiment/Search", "bounded search");
        cycle_through_edge(g, e.lo(), e.hi(), len, faults, budget)
            .map(|c| (CyclePath::cycle(c), trace))
            .ok_or_else(|| {
                Error::NotFound(format!(
                    "no {len}-cycle through {} within budget",
                    e.label(self.n())
                ))
            })
    }

    /// Fault-free cycle of length `len` through `e` in `BH_n`: the twin
    /// 4-cycle for `len = 4`, otherwise [`Self::embed`] with no faults.
    pub fn edge_bipancyclic_fault_free(&self, e: Edge, len: usize) -> Result<CyclePath> {
        let g = self.graph();
        g.edge(e.lo(), e.hi())?;
        if len == 4 {
            let none = FaultSet::empty(self.n());
            let c = lemmas::four_cycle(g, e.lo(), e.hi(), &none)
                .ok_or_else(|| Error::Internal("twin 4-cycle missing".into()))?;
            return Ok(CyclePath::cycle(c.to_vec()));
        }
        self.embed(e, len, &FaultSet::empty(self.n()))
            .map(|(c, _)| c)
    }

    /// Hamiltonian path from `u` to `v` in `BH_n - faults`.
    pub fn ham_path_faulty(&self, u: Vertex, v: Vertex, faults: &FaultSet) -> Result<CyclePath> {
        ham_path_faulty(self.graph(), u, v, faults)
    }

    /// Cycle of length `len` through `(a, b)` in `BH_m - faults`, or `None`.
    /// Requests outside the guarantee are refused rather than searched.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn solve(
        &self,
        m: usize,
        a: Vertex,
        b: Vertex,
        len: usize,
        faults: &FaultSet,
        depth: usize,
        trace: &mut EmbedTrace,
    ) -> Option<Vec<Vertex>> {
        let g = self.level(m);
        if m < 2
            || len < 6
            || len % 2 == 1
            || len > g.vertex_count()
            || faults.len() > 2 * m - 2
            || !g.is_adjacent(a, b)
            || faults.contains_pair(a, b)
        {
            return None;
        }
        let job = Job {
            emb: self,
            m,
            g,
            faults,
            depth,
        };
        let mark = trace.mark();
        let built = if m == 2 {
            base::solve(&job, a, b, len, trace)
        } else {
            induction::solve(&job, a, b, len, trace)
        };
        if let Some(c) = built {
            if is_valid_cycle(g, &c, a, b, len, faults) {
                return Some(c);
            }
        }
        trace.rewind(mark);
        let c = cycle_through_edge(g, a, b, len, faults, SEARCH_BUDGET)?;
        trace.push(depth, "Fallback/Search", "bounded search");
        Some(c)
    }

    pub(crate) fn exchange(&self) -> &Automorphism {
        &self.exchange
    }
}

/// One-shot [`Embedder::embed`] on `BH_n`.
pub fn embed_cycle(
    n: usize,
    e: Edge,
    len: usize,
    faults: &FaultSet,
) -> Result<(CyclePath, EmbedTrace)> {
    Embedder::new(n)?.embed(e, len, faults)
}

/// Checked Hamiltonian path between opposite colors of `g - faults`.
pub fn ham_path_faulty(
    g: &BalancedHypercube,
    u: Vertex,
    v: Vertex,
    faults: &FaultSet,
) -> Result<CyclePath> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if g.color(u) == g.color(v) {
        return Err(Error::InvalidInput(format!(
            "{} and {} have the same color",
            g.label(u),
            g.label(v)
        )));
    }
    search::ham_path_faulty(g, u, v, faults)
        .map(CyclePath::path)
        .ok_or_else(|| {
            Error::Internal(format!(
                "no Hamiltonian path {} -> {}",
                g.label(u),
                g.label(v)
            ))
        })
}

/// Checked Hamiltonian path of `g - w - faults` between two vertices of the
/// color opposite to `w`.
pub fn hyper_ham_path(
    g: &BalancedHypercube,
    w: Vertex,
    u: Vertex,
    v: Vertex,
    faults: &FaultSet,
) -> Result<CyclePath> {
    for x in [w, u, v] {
        g.check_vertex(x)?;
    }
    let opposite = g.color(w).opposite();
    if g.color(u) != opposite || g.color(v) != opposite || u == v {
        return Err(Error::InvalidInput(
            "endpoints must be distinct and colored opposite to the removed vertex".into(),
        ));
    }
    search::hyper_ham_path(g, w, u, v, faults)
        .map(CyclePath::path)
        .ok_or_else(|| Error::Internal("no Hamiltonian path avoiding the removed vertex".into()))
}

/// One embedding request at level `m`.
pub(crate) struct Job<'a> {
    pub emb: &'a Embedder,
    pub m: usize,
    pub g: &'a BalancedHypercube,
    pub faults: &'a FaultSet,
    pub depth: usize,
}

impl Job<'_> {
    pub fn valid(&self, c: &[Vertex], a: Vertex, b: Vertex, len: usize) -> bool {
        is_valid_cycle(self.g, c, a, b, len, self.faults)
    }
}

pub(crate) fn is_valid_cycle(
    g: &BalancedHypercube,
    c: &[Vertex],
    a: Vertex,
    b: Vertex,
    len: usize,
    faults: &FaultSet,
) -> bool {
    if c.len() != len || len < 3 {
        return false;
    }
    let mut seen = vec![false; g.vertex_count()];
    let mut has_edge = false;
    for i in 0..len {
        let (x, y) = (c[i], c[(i + 1) % len]);
        if !g.contains(x) || seen[x.index()] {
            return false;
        }
        seen[x.index()] = true;
        if !g.is_adjacent(x, y) || faults.contains_pair(x, y) {
            return false;
        }
        has_edge |= (x, y) == (a, b) || (x, y) == (b, a);
    }
    has_edge
}

/// The cycle `c` opened at the edge `(a, b)`: a path from `a` to `b` over
/// all of `c`'s vertices.
pub(crate) fn open_at(c: &[Vertex], a: Vertex, b: Vertex) -> Option<Vec<Vertex>> {
    let k = c.len();
    let i = c.iter().position(|&x| x == a)?;
    if c[(i + 1) % k] == b {
        Some((0..k).map(|t| c[(i + k - t) % k]).collect())
    } else if c[(i + k - 1) % k] == b {
        Some((0..k).map(|t| c[(i + t) % k]).collect())
    } else {
        None
    }
}

pub(crate) fn white_first(g: &BalancedHypercube, a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if g.color(a) == Color::White {
        (a, b)
    } else {
        (b, a)
    }
}
