use std::collections::VecDeque;

use super::faults::FaultSet;
use crate::topology::{BalancedHypercube, Vertex};

/// Node budget for the embedder's internal searches.
pub const SEARCH_BUDGET: u64 = 20_000_000;

fn usable_adjacency(
    g: &BalancedHypercube,
    faults: &FaultSet,
    removed: Option<Vertex>,
) -> Vec<Vec<Vertex>> {
    g.vertices()
        .map(|v| {
            if Some(v) == removed {
                return Vec::new();
            }
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| Some(w) != removed && !faults.contains_pair(v, w))
                .collect()
        })
        .collect()
}

struct HamDfs {
    adj: Vec<Vec<Vertex>>,
    visited: Vec<bool>,
    free_degree: Vec<u32>,
    path: Vec<Vertex>,
    target: Vertex,
    remaining: usize,
    budget: u64,
    queue: VecDeque<Vertex>,
    seen: Vec<bool>,
}

impl HamDfs {
    fn enter(&mut self, v: Vertex) {
        self.visited[v.index()] = true;
        self.remaining -= 1;
        for i in 0..self.adj[v.index()].len() {
            let w = self.adj[v.index()][i];
            self.free_degree[w.index()] -= 1;
        }
        self.path.push(v);
    }

    fn leave(&mut self, v: Vertex) {
        self.path.pop();
        for i in 0..self.adj[v.index()].len() {
            let w = self.adj[v.index()][i];
            self.free_degree[w.index()] += 1;
        }
        self.remaining += 1;
        self.visited[v.index()] = false;
    }

    fn unvisited_connected(&mut self) -> bool {
        self.seen.iter_mut().for_each(|s| *s = false);
        self.queue.clear();
        self.queue.push_back(self.target);
        self.seen[self.target.index()] = true;
        let mut reached = 1;
        while let Some(x) = self.queue.pop_front() {
            for &y in &self.adj[x.index()] {
                if !self.visited[y.index()] && !self.seen[y.index()] {
                    self.seen[y.index()] = true;
                    reached += 1;
                    self.queue.push_back(y);
                }
            }
        }
        reached == self.remaining
    }

    fn run(&mut self, cur: Vertex) -> bool {
        if self.remaining == 0 {
            return cur == self.target;
        }
        if self.budget == 0 {
            return false;
        }
        self.budget -= 1;
        let t = self.target;
        if self.free_degree[t.index()] == 0 && self.remaining > 1 {
            return false;
        }
        let mut forced = None;
        for &w in &self.adj[cur.index()] {
            if self.visited[w.index()] || w == t {
                continue;
            }
            match self.free_degree[w.index()] {
                0 => return false,
                1 => {
                    if forced.is_some() {
                        return false;
                    }
                    forced = Some(w);
                }
                _ => {}
            }
        }
        if self.remaining > 2 && !self.unvisited_connected() {
            return false;
        }
        let moves: Vec<Vertex> = match forced {
            Some(w) => vec![w],
            None => self.adj[cur.index()]
                .iter()
                .copied()
                .filter(|&w| !self.visited[w.index()] && (w != t || self.remaining == 1))
                .collect(),
        };
        for w in moves {
            self.enter(w);
            if self.run(w) {
                return true;
            }
            self.leave(w);
        }
        false
    }
}

/// Hamiltonian path from `from` to `to` in `g - faults - removed`, explored
/// in lexicographic neighbor order. `None` if none exists or the node budget
/// runs out.
pub fn hamiltonian_path(
    g: &BalancedHypercube,
    from: Vertex,
    to: Vertex,
    faults: &FaultSet,
    removed: Option<Vertex>,
    budget: u64,
) -> Option<Vec<Vertex>> {
    if from == to || Some(from) == removed || Some(to) == removed {
        return None;
    }
    let adj = usable_adjacency(g, faults, removed);
    let total = g.vertex_count() - usize::from(removed.is_some());
    let (mut same, mut other) = (0usize, 0usize);
    for v in g.vertices() {
        if v == from || Some(v) == removed {
            continue;
        }
        if g.color(v) == g.color(from) {
            same += 1;
        } else {
            other += 1;
        }
    }
    let k = total - 1;
    if other != k.div_ceil(2) || same != k / 2 {
        return None;
    }
    let end_color = if k.is_multiple_of(2) {
        g.color(from)
    } else {
        g.color(from).opposite()
    };
    if g.color(to) != end_color {
        return None;
    }
    let mut visited = vec![false; g.vertex_count()];
    if let Some(r) = removed {
        visited[r.index()] = true;
    }
    let free_degree = adj.iter().map(|l| l.len() as u32).collect();
    let mut dfs = HamDfs {
        adj,
        visited,
        free_degree,
        path: Vec::with_capacity(total),
        target: to,
        remaining: total,
        budget,
        queue: VecDeque::new(),
        seen: vec![false; g.vertex_count()],
    };
    dfs.enter(from);
    dfs.run(from).then_some(dfs.path)
}

/// Hamiltonian path in `g - faults` between two vertices of opposite colors.
pub fn ham_path_faulty(
    g: &BalancedHypercube,
    from: Vertex,
    to: Vertex,
    faults: &FaultSet,
) -> Option<Vec<Vertex>> {
    hamiltonian_path(g, from, to, faults, None, SEARCH_BUDGET)
}

/// Hamiltonian path of `g - faults - removed` between two vertices of the
/// color opposite to `removed`.
pub fn hyper_ham_path(
    g: &BalancedHypercube,
    removed: Vertex,
    from: Vertex,
    to: Vertex,
    faults: &FaultSet,
) -> Option<Vec<Vertex>> {
    hamiltonian_path(g, from, to, faults, Some(removed), SEARCH_BUDGET)
}

fn distances_from(adj: &[Vec<Vertex>], src: Vertex) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    dist[src.index()] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x.index()] {
            if dist[y.index()] == u32::MAX {
                dist[y.index()] = dist[x.index()] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Cycle of exactly `len` edges through `(a, b)` avoiding `faults`, found by
/// a distance-pruned depth-first search. Returned starting `a, b, ...`.
pub fn cycle_through_edge(
    g: &BalancedHypercube,
    a: Vertex,
    b: Vertex,
    len: usize,
    faults: &FaultSet,
    budget: u64,
) -> Option<Vec<Vertex>> {
    if len < 4 || len % 2 == 1 || len > g.vertex_count() || !g.is_adjacent(a, b) {
        return None;
    }
    if faults.contains_pair(a, b) {
        return None;
    }
    if len == g.vertex_count() {
        let blocked = faults.with(g.edge(a, b).ok()?);
        let mut path = hamiltonian_path(g, b, a, &blocked, None, budget)?;
        path.insert(0, a);
        path.pop();
        return Some(path);
    }
    let adj = usable_adjacency(g, faults, None);
    let dist = distances_from(&adj, a);
    let mut on_path = vec![false; g.vertex_count()];
    on_path[a.index()] = true;
    on_path[b.index()] = true;
    let mut path = vec![a, b];
    let mut left = budget;
    if extend_cycle(&adj, &dist, &mut on_path, &mut path, len, a, &mut left) {
        Some(path)
    } else {
        None
    }
}

fn extend_cycle(
    adj: &[Vec<Vertex>],
    dist: &[u32],
    on_path: &mut [bool],
    path: &mut Vec<Vertex>,
    len: usize,
    start: Vertex,
    budget: &mut u64,
) -> bool {
    let cur = *path.last().expect("non-empty path");
    if path.len() == len {
        return adj[cur.index()].contains(&start);
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let edges_left = (len - path.len() + 1) as u32;
    for &w in &adj[cur.index()] {
        if on_path[w.index()] || dist[w.index()] > edges_left - 1 {
            continue;
        }
        on_path[w.index()] = true;
        path.push(w);
        if extend_cycle(adj, dist, on_path, path, len, start, budget) {
            return true;
        }
        path.pop();
        on_path[w.index()] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::Color;

    fn assert_path(g: &BalancedHypercube, p: &[Vertex], faults: &FaultSet) {
        for w in p.windows(2) {
            assert!(g.is_adjacent(w[0], w[1]));
            assert!(!faults.contains_pair(w[0], w[1]));
        }
        let mut sorted = p.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), p.len());
    }

    #[test]
    fn hamiltonian_paths_between_opposite_colors_in_bh2() {
        let g = BalancedHypercube::new(2).unwrap();
        let none = FaultSet::empty(2);
        let u = Vertex(0);
        for v in g.vertices().filter(|&v| g.color(v) == Color::Black) {
            let p = ham_path_faulty(&g, u, v, &none).expect("laceable");
            assert_eq!(p.len(), 16);
            assert_eq!((p[0], p[15]), (u, v));
            assert_path(&g, &p, &none);
        }
        assert!(ham_path_faulty(&g, u, g.twin(u), &none).is_none());
    }

    #[test]
    fn hyper_paths_skip_the_removed_vertex() {
        let g = BalancedHypercube::new(2).unwrap();
        let none = FaultSet::empty(2);
        let w = Vertex(0);
        let from = g.parse_vertex("10").unwrap();
        let to = g.parse_vertex("31").unwrap();
        let p = hyper_ham_path(&g, w, from, to, &none).unwrap();
        assert_eq!(p.len(), 15);
        assert!(!p.contains(&w));
        assert_path(&g, &p, &none);
    }

    #[test]
    fn cycles_of_every_even_length_in_bh3() {
        let g = BalancedHypercube::new(3).unwrap();
        let none = FaultSet::empty(3);
        let a = Vertex(0);
        let b = g.neighbors(a)[0];
        for len in (4..=64).step_by(2) {
            let c = cycle_through_edge(&g, a, b, len, &none, SEARCH_BUDGET).unwrap();
            assert_eq!(c.len(), len);
            assert_eq!((c[0], c[1]), (a, b));
            assert!(g.is_adjacent(c[len - 1], a));
            assert_path(&g, &c, &none);
        }
    }
}
