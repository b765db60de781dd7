use super::cycle::CyclePath;
use super::faults::FaultSet;
use crate::error::{Error, Result};
use crate::topology::{add_mod4, BalancedHypercube, Color, Edge, Split, Vertex};

/// Neighbors of `v` inside its own part, over fault-free edges, ascending.
pub(crate) fn inner_nbrs<'a>(
    g: &'a BalancedHypercube,
    s: &'a Split,
    v: Vertex,
    faults: &'a FaultSet,
) -> impl Iterator<Item = Vertex> + 'a {
    let p = s.part_of(v);
    g.neighbors(v)
        .iter()
        .copied()
        .filter(move |&w| s.part_of(w) == p && !faults.contains_pair(v, w))
}

/// Crossing neighbors of `v` over fault-free edges, ascending.
pub(crate) fn cross_nbrs(s: &Split, v: Vertex, faults: &FaultSet) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = s
        .crossing(v)
        .into_iter()
        .filter(|&w| !faults.contains_pair(v, w))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Every fault-free 2-path `⟨u, v, w⟩` with `v` in the part of `u` and `w`
/// outside it, in lexicographic order of `v` then `w`.
pub(crate) fn two_paths(
    g: &BalancedHypercube,
    s: &Split,
    u: Vertex,
    faults: &FaultSet,
) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for v in inner_nbrs(g, s, u, faults) {
        for w in cross_nbrs(s, v, faults) {
            out.push([u, v, w]);
        }
    }
    out
}

/// A fault-free 2-path leaving the part of `u` in the split along `split_dim`.
///
/// Requires `|F| <= 2n - 2` and at most `2n - 3` faults inside the part of `u`.
pub fn two_path_exit(
    g: &BalancedHypercube,
    split_dim: usize,
    u: Vertex,
    faults: &FaultSet,
) -> Result<[Vertex; 3]> {
    g.check_vertex(u)?;
    let n = g.n();
    let s = g.split_along(split_dim)?;
    if faults.len() > 2 * n - 2 {
        return Err(Error::InvalidInput(format!(
            "{} faults exceed 2n-2 = {}",
            faults.len(),
            2 * n - 2
        )));
    }
    let p = s.part_of(u);
    let inside = faults
        .edges()
        .iter()
        .filter(|e| s.part_of(e.lo()) == p && s.part_of(e.hi()) == p)
        .count();
    if inside > 2 * n - 3 {
        return Err(Error::InvalidInput(format!(
            "{inside} faults inside the part exceed 2n-3 = {}",
            2 * n - 3
        )));
    }
    two_paths(g, s, u, faults)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal(format!("no 2-path leaves {}", g.label(u))))
}

/// All 7-paths `x, x1, y1, x2, y2, x3, y3, y` from the white endpoint `x` of
/// an edge inside one part to its black endpoint `y`, spending one edge in
/// each of the other three parts. Lexicographic order.
pub(crate) fn cross_paths(
    g: &BalancedHypercube,
    s: &Split,
    x: Vertex,
    y: Vertex,
    faults: &FaultSet,
) -> Vec<[Vertex; 8]> {
    let mut out = Vec::new();
    for x1 in cross_nbrs(s, x, faults) {
        for y1 in inner_nbrs(g, s, x1, faults) {
            for x2 in cross_nbrs(s, y1, faults) {
                for y2 in inner_nbrs(g, s, x2, faults) {
                    for x3 in cross_nbrs(s, y2, faults) {
                        for y3 in inner_nbrs(g, s, x3, faults) {
                            if s.part_of(y3) != s.part_of(y)
                                && g.is_adjacent(y3, y)
                                && !faults.contains_pair(y3, y)
                            {
                                out.push([x, x1, y1, x2, y2, x3, y3, y]);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn white_black(g: &BalancedHypercube, a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if g.color(a) == Color::White {
        (a, b)
    } else {
        (b, a)
    }
}

/// Two internally vertex-disjoint 7-paths joining the endpoints of `e`, an
/// edge inside one part of the split along `split_dim`. Each path runs from
/// the white endpoint to the black one through the other three parts.
pub fn disjoint_cross_paths(
    g: &BalancedHypercube,
    split_dim: usize,
    e: Edge,
) -> Result<[[Vertex; 8]; 2]> {
    let s = g.split_along(split_dim)?;
    if s.is_crossing(e.lo(), e.hi()) {
        return Err(Error::InvalidInput(format!(
            "edge {} crosses the split",
            e.label(g.n())
        )));
    }
    let (x, y) = white_black(g, e.lo(), e.hi());
    let paths = cross_paths(g, s, x, y, &FaultSet::empty(g.n()));
    for (i, p) in paths.iter().enumerate() {
        for q in &paths[i + 1..] {
            if p[1..7].iter().all(|v| !q[1..7].contains(v)) {
                return Ok([*p, *q]);
            }
        }
    }
    Err(Error::Internal(format!(
        "no disjoint pair of 7-paths for {}",
        e.label(g.n())
    )))
}

/// One member of the 5-path family used for 8-cycles through a crossing edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPath {
    /// 0 for the paths that only move the inner index and the split
    /// coordinate, otherwise the extra coordinate they also move.
    pub k: usize,
    /// Member index 1..=4.
    pub t: usize,
    pub vertices: [Vertex; 6],
}

const FAMILY_0: [[(u32, u32); 6]; 4] = [
    [(1, 0), (2, 3), (3, 3), (0, 2), (1, 2), (2, 1)],
    [(1, 0), (0, 3), (1, 3), (2, 2), (3, 2), (0, 1)],
    [(3, 0), (2, 3), (1, 3), (0, 2), (3, 2), (2, 1)],
    [(3, 0), (0, 3), (3, 3), (2, 2), (1, 2), (0, 1)],
];

const FAMILY_K: [[(u32, u32, u32); 6]; 4] = [
    [
        (1, 1, 0),
        (2, 1, 3),
        (3, 2, 3),
        (0, 2, 2),
        (1, 3, 2),
        (2, 3, 1),
    ],
    [
        (1, 1, 0),
        (0, 1, 3),
        (1, 2, 3),
        (2, 2, 2),
        (3, 3, 2),
        (0, 3, 1),
    ],
    [
        (3, 1, 0),
        (2, 1, 3),
        (1, 2, 3),
        (0, 2, 2),
        (3, 3, 2),
        (2, 3, 1),
    ],
    [
        (3, 1, 0),
        (0, 1, 3),
        (3, 2, 3),
        (2, 2, 2),
        (1, 3, 2),
        (0, 3, 1),
    ],
];

/// The `4(n-1)` 5-paths joining the part neighbors of `u` to those of `v`
/// for a crossing edge `(u, v)` of dimension `d >= 1`, `u` white.
///
/// The paths are written for `u = 0`, `v = (1, 0, .., 0, 1)` and mapped onto
/// the given edge by reflecting the inner index, swapping coordinate `d` with
/// the last one and translating every other coordinate.
pub fn cross_path_family(g: &BalancedHypercube, u: Vertex, v: Vertex) -> Result<Vec<FamilyPath>> {
    let n = g.n();
    let d = g.edge_dimension(u, v)?;
    if d == 0 {
        return Err(Error::InvalidInput(
            "the 5-path family needs a crossing edge of dimension >= 1".into(),
        ));
    }
    let (u, v) = white_black(g, u, v);
    let x = u.coords(n);
    let sigma: i32 = if v.coord(n, 0) == add_mod4(x[0], 1) {
        1
    } else {
        -1
    };
    let last = n - 1;
    let map = |canon: &[u32]| -> Vertex {
        let mut out = vec![0u32; n];
        out[0] = add_mod4(x[0], sigma * canon[0] as i32);
        for k in 1..n {
            let src = if k == d {
                canon[last]
            } else if k == last {
                canon[d]
            } else {
                canon[k]
            };
            out[k] = (src + x[k]) % 4;
        }
        Vertex::from_coords(&out).expect("digits stay below 4")
    };
    let mut family = Vec::with_capacity(4 * (n - 1));
    for (t, rows) in FAMILY_0.iter().enumerate() {
        let mut vertices = [Vertex(0); 6];
        for (slot, &(a0, al)) in rows.iter().enumerate() {
            let mut c = vec![0u32; n];
            c[0] = a0;
            c[last] = al;
            vertices[slot] = map(&c);
        }
        family.push(FamilyPath {
            k: 0,
            t: t + 1,
            vertices,
        });
    }
    for k in 1..last {
        for (t, rows) in FAMILY_K.iter().enumerate() {
            let mut vertices = [Vertex(0); 6];
            for (slot, &(a0, ak, al)) in rows.iter().enumerate() {
                let mut c = vec![0u32; n];
                c[0] = a0;
                c[k] = ak;
                c[last] = al;
                vertices[slot] = map(&c);
            }
            family.push(FamilyPath {
                k,
                t: t + 1,
                vertices,
            });
        }
    }
    Ok(family)
}

fn cycle_is_clean(g: &BalancedHypercube, c: &[Vertex], faults: &FaultSet) -> bool {
    let k = c.len();
    (0..k).all(|i| {
        let (a, b) = (c[i], c[(i + 1) % k]);
        g.is_adjacent(a, b) && !faults.contains_pair(a, b)
    }) && {
        let mut sorted = c.to_vec();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

/// 8-cycles `u, p0, .., p5, v` through the crossing edge `(u, v)` (u white)
/// that spend one edge in each part, found by direct enumeration.
pub(crate) fn enumerate_eight_cycles(
    g: &BalancedHypercube,
    s: &Split,
    u: Vertex,
    v: Vertex,
    faults: &FaultSet,
) -> Vec<[Vertex; 8]> {
    let mut out = Vec::new();
    for p0 in inner_nbrs(g, s, u, faults) {
        for p1 in cross_nbrs(s, p0, faults) {
            for p2 in inner_nbrs(g, s, p1, faults) {
                for p3 in cross_nbrs(s, p2, faults) {
                    for p4 in inner_nbrs(g, s, p3, faults) {
                        for p5 in cross_nbrs(s, p4, faults) {
                            if s.part_of(p5) == s.part_of(v)
                                && p5 != v
                                && g.is_adjacent(p5, v)
                                && !faults.contains_pair(p5, v)
                            {
                                out.push([u, p0, p1, p2, p3, p4, p5, v]);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Fault-free 8-cycles through the crossing edge `(a, b)` of split `s` with
/// one edge per part: the translated family first (when `s` is the
/// coordinate split of the edge's own dimension), then the enumeration.
pub(crate) fn eight_cycles(
    g: &BalancedHypercube,
    s: &Split,
    a: Vertex,
    b: Vertex,
    faults: &FaultSet,
) -> Vec<[Vertex; 8]> {
    let (u, v) = white_black(g, a, b);
    let mut out: Vec<[Vertex; 8]> = Vec::new();
    if s.dim() >= 1 && g.edge_dimension(u, v).ok() == Some(s.dim()) {
        if let Ok(family) = cross_path_family(g, u, v) {
            for p in family {
                let mut c = [u; 8];
                c[1..7].copy_from_slice(&p.vertices);
                c[7] = v;
                if cycle_is_clean(g, &c, faults) {
                    out.push(c);
                }
            }
        }
    }
    for c in enumerate_eight_cycles(g, s, u, v, faults) {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Fault-free 8-cycle through the crossing edge `e` with exactly one edge in
/// the part of its white endpoint, for the split along `e`'s dimension.
pub fn eight_cycle_cross(g: &BalancedHypercube, e: Edge, faults: &FaultSet) -> Result<CyclePath> {
    g.edge(e.lo(), e.hi())?;
    if faults.contains(&e) {
        return Err(Error::InvalidInput("edge is faulty".into()));
    }
    let s = g.split_along(e.dim())?;
    let (u, _) = white_black(g, e.lo(), e.hi());
    let c = eight_cycles(g, s, e.lo(), e.hi(), faults)
        .into_iter()
        .next()
        .ok_or_else(|| {
            Error::Internal(format!("no fault-free 8-cycle through {}", e.label(g.n())))
        })?;
    let home = s.part_of(u);
    let inside = (0..8)
        .filter(|&i| {
            let (x, y) = (c[i], c[(i + 1) % 8]);
            s.part_of(x) == home && s.part_of(y) == home
        })
        .count();
    if inside != 1 {
        return Err(Error::Internal(format!(
            "8-cycle has {inside} edges in the home part"
        )));
    }
    Ok(CyclePath::cycle(c.to_vec()))
}

/// A fault-free 4-cycle through `(a, b)`, starting `a, b`. The twin cycle
/// `a, b, twin(a), twin(b)` is tried first.
pub(crate) fn four_cycle(
    g: &BalancedHypercube,
    a: Vertex,
    b: Vertex,
    faults: &FaultSet,
) -> Option<[Vertex; 4]> {
    let twin = [a, b, g.twin(a), g.twin(b)];
    if cycle_is_clean(g, &twin, faults) {
        return Some(twin);
    }
    for &x in g.neighbors(b) {
        if x == a {
            continue;
        }
        for &w in g.neighbors(a) {
            let c = [a, b, x, w];
            if w != b && w != x && cycle_is_clean(g, &c, faults) {
                return Some(c);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(g: &BalancedHypercube, vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|&v| g.label(v)).collect()
    }

    #[test]
    fn two_path_exit_scans_lexicographically() {
        let g = BalancedHypercube::new(2).unwrap();
        let u = g.parse_vertex("00").unwrap();
        let p = two_path_exit(&g, 1, u, &FaultSet::empty(2)).unwrap();
        assert_eq!(labels(&g, &p), ["00", "10", "03"]);
    }

    #[test]
    fn two_path_exit_rejects_overloaded_part() {
        let g = BalancedHypercube::new(2).unwrap();
        let u = g.parse_vertex("00").unwrap();
        let f = FaultSet::parse_text(&g, "00-10\n20-30\n").unwrap();
        assert!(matches!(
            two_path_exit(&g, 1, u, &f),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn family_first_cycle_in_bh2() {
        let g = BalancedHypercube::new(2).unwrap();
        let e = g.parse_edge("00-11").unwrap();
        let c = eight_cycle_cross(&g, e, &FaultSet::empty(2)).unwrap();
        assert_eq!(
            c.labels(2),
            ["00", "10", "23", "33", "02", "12", "21", "11"]
        );
    }

    #[test]
    fn family_paths_are_valid_and_edge_disjoint() {
        for n in 2..=4 {
            let g = BalancedHypercube::new(n).unwrap();
            for e in g.edges().into_iter().filter(|e| e.dim() > 0).step_by(7) {
                let fam = cross_path_family(&g, e.lo(), e.hi()).unwrap();
                assert_eq!(fam.len(), 4 * (n - 1));
                let mut seen = std::collections::BTreeSet::new();
                for p in &fam {
                    for w in p.vertices.windows(2) {
                        assert!(g.is_adjacent(w[0], w[1]), "n={n} k={} t={}", p.k, p.t);
                        let key = (w[0].min(w[1]), w[0].max(w[1]));
                        assert!(seen.insert(key), "shared edge in family");
                    }
                }
            }
        }
    }

    #[test]
    fn disjoint_paths_in_bh2() {
        let g = BalancedHypercube::new(2).unwrap();
        let e = g.parse_edge("00-10").unwrap();
        let [p, q] = disjoint_cross_paths(&g, 1, e).unwrap();
        let s = g.split(1).unwrap();
        for path in [p, q] {
            for part in 1..4 {
                let inside = path
                    .windows(2)
                    .filter(|w| s.part_of(w[0]) == part && s.part_of(w[1]) == part)
                    .count();
                assert_eq!(inside, 1);
            }
        }
        assert!(p[1..7].iter().all(|v| !q.contains(v)));
    }

    #[test]
    fn twin_four_cycle() {
        let g = BalancedHypercube::new(2).unwrap();
        let a = g.parse_vertex("00").unwrap();
        let b = g.parse_vertex("10").unwrap();
        let c = four_cycle(&g, a, b, &FaultSet::empty(2)).unwrap();
        assert_eq!(labels(&g, &c), ["00", "10", "20", "30"]);
    }
}
