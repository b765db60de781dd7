use std::collections::{HashSet, VecDeque};

use crate::embed::FaultSet;
use crate::topology::{Edge, Vertex};

use super::validate::oracle_neighbors;

/// Node-expansion cap used when none is given.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Outcome of an exhaustive cycle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    /// A cycle through the edge, starting at its smaller endpoint.
    Yes(Vec<Vertex>),
    No,
    Timeout,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Decision::Yes(_) => "yes",
            Decision::No => "no",
            Decision::Timeout => "timeout",
        }
    }
}

/// Order in which neighbors are branched on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branching {
    Forward,
    Reverse,
}

/// Decides whether `BH_n - faults` has a cycle of length `len` through `e`,
/// branching in increasing neighbor order.
pub fn exists_cycle_bruteforce(
    n: usize,
    e: Edge,
    len: usize,
    faults: &FaultSet,
    budget: u64,
) -> Decision {
    exists_cycle_bruteforce_with(n, e, len, faults, budget, Branching::Forward)
}

struct Search<'a> {
    adj: &'a [Vec<Vertex>],
    dist: Vec<usize>,
    target: Vertex,
    len: usize,
    path: Vec<Vertex>,
    used: Vec<bool>,
    expansions: u64,
    budget: u64,
}

impl Search<'_> {
    /// `Some(true)` on success, `Some(false)` when exhausted, `None` when
    /// the budget ran out.
    fn extend(&mut self) -> Option<bool> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return None;
        }
        let x = *self.path.last().unwrap();
        // vertices still to add, the target included
        let remaining = self.len - self.path.len();
        for &y in &self.adj[x.index()] {
            if self.used[y.index()] {
                continue;
            }
            if y == self.target {
                if remaining == 1 {
                    self.path.push(y);
                    return Some(true);
                }
                continue;
            }
            if remaining < 2 {
                continue;
            }
            let (d, left) = (self.dist[y.index()], remaining - 1);
            if d == usize::MAX || d > left || (left - d) % 2 == 1 {
                continue;
            }
            self.used[y.index()] = true;
            self.path.push(y);
            match self.extend() {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.path.pop();
            self.used[y.index()] = false;
        }
        Some(false)
    }
}

/// As [`exists_cycle_bruteforce`] with an explicit branching order.
///
/// Searches simple paths from the smaller endpoint of `e` to the larger one
/// with `len - 1` edges, pruning on the fault-free distance to the target and
/// its parity.
pub fn exists_cycle_bruteforce_with(
    n: usize,
    e: Edge,
    len: usize,
    faults: &FaultSet,
    budget: u64,
    order: Branching,
) -> Decision {
    let count = 1usize << (2 * n);
    let bad: HashSet<(Vertex, Vertex)> = faults.edges().iter().map(|f| (f.lo(), f.hi())).collect();
    let (s, t) = (e.lo(), e.hi());
    if len < 4 || len % 2 == 1 || len > count || t.index() >= count {
        return Decision::No;
    }
    if !oracle_neighbors(n, s).contains(&t) || bad.contains(&(s, t)) {
        return Decision::No;
    }
    let adj: Vec<Vec<Vertex>> = (0..count as u32)
        .map(|c| {
            let x = Vertex(c);
            let mut nb: Vec<Vertex> = oracle_neighbors(n, x)
                .into_iter()
                .filter(|&y| !bad.contains(&(x.min(y), x.max(y))))
                .collect();
            nb.sort_unstable();
            nb.dedup();
            if order == Branching::Reverse {
                nb.reverse();
            }
            nb
        })
        .collect();
    if adj[s.index()].len() < 2 || adj[t.index()].len() < 2 {
        return Decision::No;
    }
    // distances to t avoiding s and the edge e
    let mut dist = vec![usize::MAX; count];
    dist[t.index()] = 0;
    let mut queue = VecDeque::from([t]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x.index()] {
            if y != s && dist[y.index()] == usize::MAX {
                dist[y.index()] = dist[x.index()] + 1;
                queue.push_back(y);
            }
        }
    }
    let mut used = vec![false; count];
    used[s.index()] = true;
    let mut search = Search {
        adj: &adj,
        dist,
        target: t,
        len,
        path: vec![s],
        used,
        expansions: 0,
        budget,
    };
    match search.extend() {
        Some(true) => Decision::Yes(search.path),
        Some(false) => Decision::No,
        None => Decision::Timeout,
    }
}
