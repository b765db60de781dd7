use std::collections::HashSet;

use thiserror::Error;

use crate::embed::{CyclePath, FaultSet};
use crate::topology::{Edge, Vertex};

/// First defect found in a claimed cycle or path.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("sequence is not closed")]
    NotClosed,
    #[error("sequence is closed, expected a path")]
    Closed,
    #[error("length {actual}, expected {expected}")]
    WrongLength { expected: usize, actual: usize },
    #[error("vertex code {0} outside the graph")]
    UnknownVertex(u32),
    #[error("repeated vertex {0}")]
    RepeatedVertex(String),
    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(String, String),
    #[error("fault used: {0}-{1}")]
    FaultUsed(String, String),
    #[error("edge {0} not on the cycle")]
    MissingEdge(String),
    #[error("path runs {0} -> {1}, expected {2} -> {3}")]
    WrongEndpoints(String, String, String, String),
}

fn digits(n: usize, v: Vertex) -> Vec<u32> {
    let mut code = v.0;
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = code % 4;
        code /= 4;
    }
    out
}

fn pack(d: &[u32]) -> Vertex {
    Vertex(d.iter().fold(0, |acc, &x| acc * 4 + x))
}

/// Neighbors of `v` in `BH_n` from the coordinate rule: dimension 0 moves the
/// inner index by ±1, dimension `i >= 1` also shifts digit `i` by `+1` when
/// the inner index is even and by `-1` when it is odd.
pub fn oracle_neighbors(n: usize, v: Vertex) -> Vec<Vertex> {
    let a = digits(n, v);
    let shift = if a[0].is_multiple_of(2) { 1 } else { 3 };
    let mut out = Vec::with_capacity(2 * n);
    for step in [1, 3] {
        let mut b = a.clone();
        b[0] = (a[0] + step) % 4;
        out.push(pack(&b));
        for i in 1..n {
            let mut c = b.clone();
            c[i] = (a[i] + shift) % 4;
            out.push(pack(&c));
        }
    }
    out
}

fn adjacent(n: usize, a: Vertex, b: Vertex) -> bool {
    oracle_neighbors(n, a).contains(&b)
}

fn label(n: usize, v: Vertex) -> String {
    digits(n, v)
        .iter()
        .map(|d| char::from_digit(*d, 4).unwrap())
        .collect()
}

fn fault_pairs(faults: &FaultSet) -> HashSet<(Vertex, Vertex)> {
    faults.edges().iter().map(|e| (e.lo(), e.hi())).collect()
}

fn check_walk(n: usize, vs: &[Vertex], closed: bool, faults: &FaultSet) -> Result<(), Violation> {
    let limit = 1u64 << (2 * n);
    let mut seen = HashSet::new();
    for &v in vs {
        if u64::from(v.0) >= limit {
            return Err(Violation::UnknownVertex(v.0));
        }
        if !seen.insert(v) {
            return Err(Violation::RepeatedVertex(label(n, v)));
        }
    }
    let bad = fault_pairs(faults);
    let k = vs.len();
    let steps = if closed { k } else { k.saturating_sub(1) };
    for i in 0..steps {
        let (x, y) = (vs[i], vs[(i + 1) % k]);
        if !adjacent(n, x, y) {
            return Err(Violation::NotAdjacent(label(n, x), label(n, y)));
        }
        if bad.contains(&(x.min(y), x.max(y))) {
            return Err(Violation::FaultUsed(label(n, x), label(n, y)));
        }
    }
    Ok(())
}

/// Checks that `c` is a closed cycle of length `len` in `BH_n - faults`
/// passing through `e`.
pub fn validate_cycle(
    n: usize,
    c: &CyclePath,
    e: Edge,
    len: usize,
    faults: &FaultSet,
) -> Result<(), Violation> {
    if !c.is_closed() {
        return Err(Violation::NotClosed);
    }
    let vs = c.vertices();
    if vs.len() != len {
        return Err(Violation::WrongLength {
            expected: len,
            actual: vs.len(),
        });
    }
    check_walk(n, vs, true, faults)?;
    let k = vs.len();
    let on_cycle = (0..k).any(|i| {
        let (x, y) = (vs[i], vs[(i + 1) % k]);
        (x.min(y), x.max(y)) == (e.lo(), e.hi())
    });
    if !on_cycle {
        return Err(Violation::MissingEdge(format!(
            "{}-{}",
            label(n, e.lo()),
            label(n, e.hi())
        )));
    }
    Ok(())
}

/// Checks that `p` is an open path from `from` to `to` with `vertices`
/// vertices in `BH_n - faults`.
pub fn validate_path(
    n: usize,
    p: &CyclePath,
    from: Vertex,
    to: Vertex,
    vertices: usize,
    faults: &FaultSet,
) -> Result<(), Violation> {
    if p.is_closed() {
        return Err(Violation::Closed);
    }
    let vs = p.vertices();
    if vs.len() != vertices {
        return Err(Violation::WrongLength {
            expected: vertices,
            actual: vs.len(),
        });
    }
    if vs.first() != Some(&from) || vs.last() != Some(&to) {
        let end = |v: Option<&Vertex>| v.map(|&v| label(n, v)).unwrap_or_default();
        return Err(Violation::WrongEndpoints(
            end(vs.first()),
            end(vs.last()),
            label(n, from),
            label(n, to),
        ));
    }
    check_walk(n, vs, false, faults)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::BalancedHypercube;

    #[test]
    fn neighbors_agree_with_topology() {
        for n in 1..=3 {
            let g = BalancedHypercube::new(n).unwrap();
            for v in g.vertices() {
                let mut ours = oracle_neighbors(n, v);
                ours.sort();
                ours.dedup();
                assert_eq!(ours, g.neighbors(v), "n={n} v={}", g.label(v));
            }
        }
    }
}
