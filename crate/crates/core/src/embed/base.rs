//! `BH_2` by explicit cycle families.
//!
//! Templates are written for a white endpoint `(a0, c)` and black endpoint
//! `(b0, c')`: a token `xk` is `(x0, c + k)` and an upper-case letter adds 2
//! to the inner index, so `B3` reads `(b0 + 2, c + 3)`.

use super::faults::FaultSet;
use super::lemmas;
use super::search;
use super::trace::EmbedTrace;
use super::{white_first, Job};
use crate::topology::{add_mod4, BalancedHypercube, Split, Vertex};

/// `e = ((a0, c), (b0, c))`, lengths 6..=14; the three cycles of each length
/// share no dimension-1 edge.
const INNER_EDGE: [[&str; 3]; 5] = [
    [
        "a0 b0 a3 B3 A3 B0",
        "a0 b0 A3 b3 a3 B0",
        "a0 b0 A0 b1 a1 B1",
    ],
    [
        "a0 b0 a3 b3 a2 B3 A3 B0",
        "a0 b0 A3 b3 A2 B3 a3 B0",
        "a0 b0 A0 b1 A1 b2 a1 B1",
    ],
    [
        "a0 b0 a3 b3 a2 b2 A2 B3 A3 B0",
        "a0 b0 A3 b3 A2 b2 a2 B3 a3 B0",
        "a0 b0 A0 b1 A1 B2 A2 b2 a1 B1",
    ],
    [
        "a0 b0 a3 b3 A3 B3 A2 b2 a2 B2 a1 b1",
        "a0 b0 A3 B3 a3 b3 a2 B2 A2 b2 A1 B1",
        "a0 b0 A0 b1 A1 B2 A2 b2 a2 B3 a3 B0",
    ],
    [
        "a0 b0 a3 b3 A3 B3 A2 b2 a2 B2 A1 b1 a1 B1",
        "a0 b0 A3 B3 a3 b3 A2 B2 a2 b2 A1 B1 a1 b1",
        "a0 b0 A0 b1 a1 B2 A2 b2 a2 B3 a3 b3 A3 B0",
    ],
];

/// `e = ((a0, c), (b0, c + 1))`, lengths 6 and 8.
const CROSS_EDGE: [[&str; 3]; 2] = [
    [
        "a0 b1 a1 B1 A0 b0",
        "a0 b1 a1 B2 A1 B1",
        "a0 b1 A0 B0 a3 b0",
    ],
    [
        "a0 b1 a1 b2 a2 b3 a3 b0",
        "a0 b1 A1 B2 A2 B3 A3 B0",
        "a0 b1 a1 B2 a2 B3 a3 B0",
    ],
];

/// 6-cycles through a crossing edge when one fault lies in each class,
/// chosen by whether `((a0 + 2, c), (b0 + 2, c + 1))` is fault-free.
const CROSS_SIX_CLEAR: [&str; 2] = ["a0 b1 a1 B1 A0 b0", "a0 b1 A1 B1 A0 B0"];
const CROSS_SIX_BLOCKED: [&str; 2] = ["a0 b1 a1 b2 A1 B1", "a0 b1 A1 B2 a1 B1"];

fn instantiate(tpl: &str, a0: u32, b0: u32, c: u32) -> Vec<Vertex> {
    tpl.split_whitespace()
        .map(|tok| {
            let mut chars = tok.chars();
            let letter = chars.next().expect("token letter");
            let k: u32 = chars.as_str().parse().expect("token digit");
            let base = if letter.eq_ignore_ascii_case(&'a') {
                a0
            } else {
                b0
            };
            let inner = if letter.is_ascii_uppercase() {
                add_mod4(base, 2)
            } else {
                base
            };
            Vertex::from_coords(&[inner, (c + k) % 4]).expect("digits below 4")
        })
        .collect()
}

/// Instantiated members of one template family, for tests and tooling.
pub(crate) fn family(kind: Family, len: usize, a0: u32, b0: u32, c: u32) -> Vec<Vec<Vertex>> {
    let tpls: &[&str] = match (kind, len) {
        (Family::InnerEdge, 6..=14) => &INNER_EDGE[(len - 6) / 2],
        (Family::CrossEdge, 6 | 8) => &CROSS_EDGE[(len - 6) / 2],
        (Family::CrossSixClear, 6) => &CROSS_SIX_CLEAR,
        (Family::CrossSixBlocked, 6) => &CROSS_SIX_BLOCKED,
        _ => &[],
    };
    tpls.iter().map(|t| instantiate(t, a0, b0, c)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Family {
    InnerEdge,
    CrossEdge,
    CrossSixClear,
    CrossSixBlocked,
}

fn clean(g: &BalancedHypercube, c: &[Vertex], faults: &FaultSet) -> bool {
    super::is_valid_cycle(g, c, c[0], c[1], c.len(), faults)
}

fn first_clean(
    g: &BalancedHypercube,
    cands: Vec<Vec<Vertex>>,
    faults: &FaultSet,
) -> Option<(Vec<Vertex>, String)> {
    let total = cands.len();
    cands
        .into_iter()
        .enumerate()
        .find(|(_, c)| clean(g, c, faults))
        .map(|(i, c)| (c, format!("family member {} of {total}", i + 1)))
}

pub(super) fn solve(
    job: &Job,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<Vec<Vertex>> {
    let g = job.g;
    let faults = job.faults;
    if len == g.vertex_count() {
        let path = search::ham_path_faulty(g, a, b, faults)?;
        trace.push(job.depth, "Base/Ham16", "Hamiltonian path closed by e");
        return Some(path);
    }
    if faults.tally(0) > faults.tally(1) {
        let x = job.emb.exchange();
        let swapped = FaultSet::new(g, faults.edges().iter().map(|e| x.apply_edge(g, e))).ok()?;
        let mark = trace.mark();
        trace.push(job.depth, "Base/Exchange", "swap dimension classes 0 and 1");
        let c = normalized(job, &swapped, x.apply(a), x.apply(b), len, trace);
        if c.is_none() {
            trace.rewind(mark);
        }
        return c.map(|c| c.into_iter().map(|v| x.invert(v)).collect());
    }
    normalized(job, faults, a, b, len, trace)
}

/// Requires `F_0 <= F_1`.
fn normalized(
    job: &Job,
    faults: &FaultSet,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<Vec<Vertex>> {
    let g = job.g;
    let dim = g.edge_dimension(a, b).ok()?;
    let (u, v) = white_first(g, a, b);
    let (a0, b0, c) = (u.coord(2, 0), v.coord(2, 0), u.coord(2, 1));
    let d = job.depth;
    let found = if faults.tally(0) == 0 {
        if dim == 0 {
            first_clean(g, family(Family::InnerEdge, len, a0, b0, c), faults)
                .map(|r| ("Base/Case1.1", r))
        } else if len <= 8 {
            first_clean(g, family(Family::CrossEdge, len, a0, b0, c), faults)
                .map(|r| ("Base/Case1.2.1", r))
        } else {
            let eights = family(Family::CrossEdge, 8, a0, b0, c);
            expand_first(g, eights, len, faults).map(|r| ("Base/Case1.2.2", r))
        }
    } else if dim == 1 {
        cross_case(g, faults, u, v, len)
    } else {
        let x = job.emb.exchange();
        let swapped = FaultSet::new(g, faults.edges().iter().map(|e| x.apply_edge(g, e))).ok()?;
        let (xu, xv) = white_first(g, x.apply(u), x.apply(v));
        let (label, (cyc, via)) = cross_case(g, &swapped, xu, xv, len)?;
        trace.push(d, "Base/Case2.2", "swap dimension classes 0 and 1");
        Some((label, (cyc.into_iter().map(|w| x.invert(w)).collect(), via)))
    };
    let (label, (cyc, via)) = found?;
    trace.push(d, label, via);
    Some(cyc)
}

/// Crossing edge with one fault in each dimension class.
fn cross_case(
    g: &BalancedHypercube,
    faults: &FaultSet,
    u: Vertex,
    v: Vertex,
    len: usize,
) -> Option<(&'static str, (Vec<Vertex>, String))> {
    let (a0, b0, c) = (u.coord(2, 0), v.coord(2, 0), u.coord(2, 1));
    match len {
        6 => {
            let probe = instantiate("A0 B1", a0, b0, c);
            let kind = if faults.contains_pair(probe[0], probe[1]) {
                Family::CrossSixBlocked
            } else {
                Family::CrossSixClear
            };
            first_clean(g, family(kind, 6, a0, b0, c), faults).map(|r| ("Base/Case2.1.1", r))
        }
        8 => {
            let s = g.split(1).ok()?;
            lemmas::eight_cycles(g, s, u, v, faults)
                .into_iter()
                .next()
                .map(|c| {
                    (
                        "Base/Case2.1.2",
                        (c.to_vec(), "8-cycle through e".to_string()),
                    )
                })
        }
        _ => {
            let s = g.split(1).ok()?;
            let eights = lemmas::eight_cycles(g, s, u, v, faults)
                .into_iter()
                .map(|c| c.to_vec())
                .collect();
            expand_first(g, eights, len, faults).map(|r| ("Base/Case2.1.3", r))
        }
    }
}

/// Lengthens a fault-free 8-cycle with one edge per part of the dimension-1
/// split by replacing part edges with the 3-path around the part's 4-cycle.
fn expand_first(
    g: &BalancedHypercube,
    eights: Vec<Vec<Vertex>>,
    len: usize,
    faults: &FaultSet,
) -> Option<(Vec<Vertex>, String)> {
    let s = g.split(1).ok()?;
    let extra = (len - 8) / 2;
    eights
        .into_iter()
        .filter(|c| clean(g, c, faults))
        .find_map(|c| expand(g, s, &c, extra, faults))
        .map(|c| (c, format!("8-cycle with {extra} part edges lengthened")))
}

fn expand(
    g: &BalancedHypercube,
    s: &Split,
    c: &[Vertex],
    extra: usize,
    faults: &FaultSet,
) -> Option<Vec<Vertex>> {
    let (u, _) = white_first(g, c[0], c[1]);
    let home = s.part_of(u);
    let k = c.len();
    let inner: Vec<usize> = (0..k)
        .filter(|&i| s.part_of(c[i]) == s.part_of(c[(i + 1) % k]))
        .collect();
    let detour = |i: usize| {
        let (x, y) = (c[i], c[(i + 1) % k]);
        [x, g.twin(y), g.twin(x), y]
    };
    let usable = |i: usize| {
        let p = detour(i);
        p.windows(2).all(|w| !faults.contains_pair(w[0], w[1]))
    };
    let mut chosen = Vec::new();
    for step in [1, 2, 3, 0] {
        let part = (home + step) % 4;
        if let Some(&i) = inner.iter().find(|&&i| s.part_of(c[i]) == part) {
            if chosen.len() < extra && usable(i) {
                chosen.push(i);
            }
        }
    }
    if chosen.len() < extra {
        return None;
    }
    let mut out = Vec::with_capacity(8 + 2 * extra);
    for (i, &x) in c.iter().enumerate() {
        out.push(x);
        if chosen.contains(&i) {
            let p = detour(i);
            out.push(p[1]);
            out.push(p[2]);
        }
    }
    clean(g, &out, faults).then_some(out)
}
