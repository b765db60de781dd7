use super::faults::FaultSet;
use super::lemmas::{self, cross_nbrs, inner_nbrs};
use super::search;
use super::trace::EmbedTrace;
use super::{open_at, Job};
use crate::topology::{BalancedHypercube, Split, Vertex};

/// A split of the job's graph with per-part fault sets in `BH_{m-1}` labels.
pub(crate) struct Parts<'a> {
    pub job: &'a Job<'a>,
    pub s: &'a Split,
    pub sub: &'a BalancedHypercube,
    pub local: Vec<FaultSet>,
    pub q: usize,
}

impl<'a> Parts<'a> {
    pub fn new(job: &'a Job<'a>, d: usize) -> Option<Self> {
        let s = job.g.split_along(d).ok()?;
        let sub = job.emb.level(job.m - 1);
        let mut buckets: Vec<Vec<_>> = vec![Vec::new(); 4];
        for e in job.faults.edges() {
            let p = s.part_of(e.lo());
            if p == s.part_of(e.hi()) {
                buckets[p].push(sub.edge(s.local(e.lo()), s.local(e.hi())).ok()?);
            }
        }
        let local = buckets
            .into_iter()
            .map(|b| FaultSet::new(sub, b).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            job,
            s,
            sub,
            local,
            q: sub.vertex_count(),
        })
    }

    pub fn g(&self) -> &BalancedHypercube {
        self.job.g
    }

    pub fn faults(&self) -> &FaultSet {
        self.job.faults
    }

    pub fn part(&self, v: Vertex) -> usize {
        self.s.part_of(v)
    }

    pub fn ok(&self, a: Vertex, b: Vertex) -> bool {
        self.job.g.is_adjacent(a, b) && !self.job.faults.contains_pair(a, b)
    }

    pub fn inner(&self, v: Vertex) -> Vec<Vertex> {
        inner_nbrs(self.job.g, self.s, v, self.job.faults).collect()
    }

    pub fn cross(&self, v: Vertex) -> Vec<Vertex> {
        cross_nbrs(self.s, v, self.job.faults)
    }

    pub fn two_paths(&self, u: Vertex) -> Vec<[Vertex; 3]> {
        lemmas::two_paths(self.job.g, self.s, u, self.job.faults)
    }

    /// Faults inside part `p`.
    pub fn count(&self, p: usize) -> usize {
        self.local[p].len()
    }

    fn lift(&self, p: usize, c: Vec<Vertex>) -> Vec<Vertex> {
        c.into_iter().map(|v| self.s.global(p, v)).collect()
    }

    /// `len`-cycle through `(a, b)` inside part `p` avoiding the part's faults.
    pub fn cycle_in(
        &self,
        p: usize,
        a: Vertex,
        b: Vertex,
        len: usize,
        trace: &mut EmbedTrace,
    ) -> Option<Vec<Vertex>> {
        self.cycle_in_with(p, a, b, len, &self.local[p], trace)
    }

    /// As [`Self::cycle_in`] with an explicit local fault set.
    pub fn cycle_in_with(
        &self,
        p: usize,
        a: Vertex,
        b: Vertex,
        len: usize,
        local: &FaultSet,
        trace: &mut EmbedTrace,
    ) -> Option<Vec<Vertex>> {
        if self.part(a) != p || self.part(b) != p {
            return None;
        }
        let (la, lb) = (self.s.local(a), self.s.local(b));
        let mark = trace.mark();
        let c = if len == 4 {
            lemmas::four_cycle(self.sub, la, lb, local).map(|c| c.to_vec())
        } else {
            self.job.emb.solve(
                self.job.m - 1,
                la,
                lb,
                len,
                local,
                self.job.depth + 1,
                trace,
            )
        };
        if c.is_none() {
            trace.rewind(mark);
        }
        c.map(|c| self.lift(p, c))
    }

    /// Path from `a` to `b` with exactly `plen` edges inside part `p`.
    pub fn path_in(
        &self,
        p: usize,
        a: Vertex,
        b: Vertex,
        plen: usize,
        trace: &mut EmbedTrace,
    ) -> Option<Vec<Vertex>> {
        if plen == 1 {
            return (self.part(a) == p && self.part(b) == p && self.ok(a, b)).then(|| vec![a, b]);
        }
        let c = self.cycle_in(p, a, b, plen + 1, trace)?;
        open_at(&c, a, b)
    }

    /// Hamiltonian path of part `p` from `a` to `b`.
    pub fn ham_path_in(&self, p: usize, a: Vertex, b: Vertex) -> Option<Vec<Vertex>> {
        if self.part(a) != p || self.part(b) != p {
            return None;
        }
        search::ham_path_faulty(self.sub, self.s.local(a), self.s.local(b), &self.local[p])
            .map(|c| self.lift(p, c))
    }

    /// Hamiltonian path of part `p` minus `w`, from `a` to `b`.
    pub fn hyper_path_in(&self, p: usize, w: Vertex, a: Vertex, b: Vertex) -> Option<Vec<Vertex>> {
        search::hyper_ham_path(
            self.sub,
            self.s.local(w),
            self.s.local(a),
            self.s.local(b),
            &self.local[p],
        )
        .map(|c| self.lift(p, c))
    }
}
