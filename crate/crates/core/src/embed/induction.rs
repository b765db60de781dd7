//! Inductive construction for `n >= 3`.
//!
//! The graph is split along the dimension `d*` holding the most faults.
//! Case 1 handles an edge inside a part, Case 2 a crossing edge. Part-local
//! cycles come from the level below; every assembled cycle is validated
//! before it is returned, and candidate choices are tried in lexicographic
//! order until one validates.

use super::lengths::{choose_length_split, SplitRule};
use super::parts::Parts;
use super::trace::EmbedTrace;
use super::{lemmas, open_at, white_first, Job};
use crate::topology::{Color, Split, Vertex};

type Built = (Vec<Vertex>, String);

/// Runs `body` as the step `label`; on failure the trace is rolled back.
fn step(
    trace: &mut EmbedTrace,
    depth: usize,
    label: &str,
    body: impl FnOnce(&mut EmbedTrace) -> Option<(Built, Option<&'static str>)>,
) -> Option<Vec<Vertex>> {
    let mark = trace.mark();
    trace.push(depth, label, "");
    match body(trace) {
        Some(((c, via), relabel)) => {
            trace.annotate(mark, relabel, via);
            Some(c)
        }
        None => {
            trace.rewind(mark);
            None
        }
    }
}

pub(super) fn solve(
    job: &Job,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<Vec<Vertex>> {
    let m = job.m;
    let d_star = job.faults.heaviest_dimension();
    let pc = Parts::new(job, d_star)?;
    if !pc.s.is_crossing(a, b) {
        return case1(&pc, a, b, len, trace);
    }
    if job.faults.tally(d_star) <= 2 * m - 3 {
        case21(job, d_star, a, b, len, trace)
    } else {
        case22(job, &pc, d_star, a, b, len, trace)
    }
}

fn case1(
    pc: &Parts,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<Vec<Vertex>> {
    let q = pc.q;
    let depth = pc.job.depth;
    let p0 = pc.part(a);
    if len <= q {
        step(trace, depth, "Case1/Sub1.1", |t| {
            let c = pc.cycle_in(p0, a, b, len, t)?;
            Some(((c, "cycle inside the part of e".into()), None))
        })
    } else if len <= 2 * q + 6 {
        step(trace, depth, "Case1/Sub1.2", |t| sub12(pc, a, b, len, t))
    } else {
        step(trace, depth, "Case1/Sub1.3", |t| sub13(pc, a, b, len, t))
    }
}

/// White and black member of a pair, and the pair's path oriented from the
/// black member to the white one.
fn orient(
    pc: &Parts,
    x: Vertex,
    y: Vertex,
    path_y_to_x: Vec<Vertex>,
) -> (Vertex, Vertex, Vec<Vertex>) {
    if pc.g().color(x) == Color::White {
        (x, y, path_y_to_x)
    } else {
        let mut p = path_y_to_x;
        p.reverse();
        (y, x, p)
    }
}

/// Tries every way to leave `w` (white) through part `p0 + 1` and `k`
/// (black) through part `p0 + 3` with 2-paths that both land in part
/// `p0 + 2`, calling `finish` with `(x, x', z, y, y', z')`.
fn bridge_pairs(
    pc: &Parts,
    w: Vertex,
    k: Vertex,
    mut finish: impl FnMut([Vertex; 6]) -> Option<Vec<Vertex>>,
) -> Option<Vec<Vertex>> {
    let far = (pc.part(w) + 2) % 4;
    for x in pc.cross(w) {
        for [_, x1, z] in pc.two_paths(x) {
            if pc.part(z) != far {
                continue;
            }
            for y in pc.cross(k) {
                for [_, y1, z1] in pc.two_paths(y) {
                    if pc.part(z1) != far || z1 == z {
                        continue;
                    }
                    if let Some(c) = finish([x, x1, z, y, y1, z1]) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

fn sub12(
    pc: &Parts,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<(Built, Option<&'static str>)> {
    let q = pc.q;
    let h = q / 2;
    let p0 = pc.part(a);
    let far = (p0 + 2) % 4;
    let c0 = pc.cycle_in(p0, a, b, q, trace)?;
    let c = open_at(&c0, a, b)?;
    let (fx, fy) = first_inner_edge(pc, far)?;
    let c2 = pc.cycle_in(far, fx, fy, q, trace)?;
    let mut pos2 = vec![usize::MAX; pc.g().vertex_count()];
    for (i, v) in c2.iter().enumerate() {
        pos2[v.index()] = i;
    }
    let mut label = None;
    for t in 1..=h - 5 {
        let (i, j) = (t - 1, h + t + 4);
        let p: Vec<Vertex> = c[j..].iter().chain(c[..=i].iter()).copied().collect();
        let (w, k, p0_path) = orient(pc, c[i], c[j], p);
        let found = bridge_pairs(pc, w, k, |[x, x1, z, y, y1, z1]| {
            let d = (pos2[z1.index()] + q - pos2[z.index()]) % q;
            let arc = d.min(q - d);
            let (rule, name) = if arc == h - 1 {
                (SplitRule::Sub121, "Case1/Sub1.2.1")
            } else if arc <= h - 3 {
                (SplitRule::Sub122 { arc }, "Case1/Sub1.2.2")
            } else {
                return None;
            };
            let [l0, l1, l2, l3] = choose_length_split(len, rule, q)?.parts();
            debug_assert_eq!(l0, h - 5);
            let p2: Vec<Vertex> = if l2 == d {
                (0..=d).map(|s| c2[(pos2[z.index()] + s) % q]).collect()
            } else if l2 == q - d {
                (0..=q - d)
                    .map(|s| c2[(pos2[z.index()] + q - s) % q])
                    .collect()
            } else {
                return None;
            };
            let mark = trace.mark();
            let built = (|| {
                let p1 = pc.path_in(pc.part(x), x, x1, l1, trace)?;
                let p3 = pc.path_in(pc.part(y), y1, y, l3, trace)?;
                let mut cyc = vec![w];
                cyc.extend(p1);
                cyc.extend(p2);
                cyc.extend(p3);
                cyc.extend(&p0_path[..p0_path.len() - 1]);
                pc.job.valid(&cyc, a, b, len).then_some(cyc)
            })();
            if built.is_none() {
                trace.rewind(mark);
            } else {
                label = Some(name);
            }
            built
        });
        if let Some(cyc) = found {
            return Some(((cyc, format!("pair t = {t}")), label));
        }
    }
    None
}

fn first_inner_edge(pc: &Parts, p: usize) -> Option<(Vertex, Vertex)> {
    pc.s.view(p)
        .vertices()
        .iter()
        .copied()
        .min()
        .and_then(|x| pc.inner(x).first().map(|&y| (x, y)))
        .or_else(|| {
            pc.s.view(p)
                .vertices()
                .iter()
                .find_map(|&x| pc.inner(x).first().map(|&y| (x, y)))
        })
}

fn sub13(
    pc: &Parts,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<(Built, Option<&'static str>)> {
    let q = pc.q;
    let p0 = pc.part(a);
    let far = (p0 + 2) % 4;
    let [_, l1, _, l3] = choose_length_split(len, SplitRule::Sub13, q)?.parts();
    let c0 = pc.cycle_in(p0, a, b, q, trace)?;
    let c = open_at(&c0, a, b)?;
    for t in 1..=q / 2 {
        let (i, j) = (2 * t - 2, 2 * t - 1);
        let p: Vec<Vertex> = c[j..].iter().chain(c[..=i].iter()).copied().collect();
        let (w, k, p0_path) = orient(pc, c[i], c[j], p);
        let found = bridge_pairs(pc, w, k, |[x, x1, z, y, y1, z1]| {
            let mark = trace.mark();
            let built = (|| {
                let p2 = pc.ham_path_in(far, z, z1)?;
                let p1 = pc.path_in(pc.part(x), x, x1, l1, trace)?;
                let p3 = pc.path_in(pc.part(y), y1, y, l3, trace)?;
                let mut cyc = vec![w];
                cyc.extend(p1);
                cyc.extend(p2);
                cyc.extend(p3);
                cyc.extend(&p0_path[..p0_path.len() - 1]);
                pc.job.valid(&cyc, a, b, len).then_some(cyc)
            })();
            if built.is_none() {
                trace.rewind(mark);
            }
            built
        });
        if let Some(cyc) = found {
            return Some(((cyc, format!("pair edge t = {t}")), None));
        }
    }
    None
}

fn case21(
    job: &Job,
    d_star: usize,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<Vec<Vertex>> {
    let m = job.m;
    let depth = job.depth;
    let d2 = job.faults.heaviest_excluding(Some(d_star));
    let pc = Parts::new(job, d2)?;
    let counts: Vec<usize> = (0..4).map(|p| pc.count(p)).collect();
    if counts.iter().all(|&c| c <= 2 * m - 4) {
        let mark = trace.mark();
        trace.push(
            depth,
            "Case2/Sub2.1.1",
            format!("re-split along dimension {d2}"),
        );
        let c = case1(&pc, a, b, len, trace);
        if c.is_none() {
            trace.rewind(mark);
        }
        return c;
    }
    let pf = counts.iter().position(|&c| c == 2 * m - 3)?;
    let pe = pc.part(a);
    let q = pc.q;
    if pe == pf {
        if len == 6 {
            step(trace, depth, "Case2/Sub2.1.2.1.1", |_| {
                six_via_neighbor(&pc, a, b).map(|c| ((c, "2-path and neighbor part".into()), None))
            })
        } else if len == 8 {
            step(trace, depth, "Case2/Sub2.1.2.1.2", |_| {
                eight_via_paths(&pc, a, b)
                    .map(|c| ((c, "7-path through the other parts".into()), None))
            })
        } else if len <= 3 * q + 2 {
            step(trace, depth, "Case2/Sub2.1.2.1.3", |t| {
                sub21213(&pc, a, b, len, t)
            })
        } else {
            step(trace, depth, "Case2/Sub2.1.2.1.4", |t| {
                sub21214(&pc, pf, a, b, len, t)
            })
        }
    } else if len <= q {
        step(trace, depth, "Case2/Sub2.1.2.2.1", |t| {
            let c = pc.cycle_in(pe, a, b, len, t)?;
            Some(((c, "cycle inside the part of e".into()), None))
        })
    } else if len <= 2 * q - 2 {
        step(trace, depth, "Case2/Sub2.1.2.2.2", |t| {
            sub21222(&pc, pf, a, b, len, t)
        })
    } else if len <= 2 * q + 8 {
        step(trace, depth, "Case2/Sub2.1.2.2.3", |t| {
            sub21223(&pc, pf, a, b, len, t)
        })
    } else {
        step(trace, depth, "Case2/Sub2.1.2.2.4", |t| {
            sub21224(&pc, pf, a, b, len, t)
        })
    }
}

/// 6-cycle `⟨p, mid, r, r', w, p'⟩` from a 2-path through `e` inside its part
/// and a common neighbor of the two exits.
fn six_via_neighbor(pc: &Parts, a: Vertex, b: Vertex) -> Option<Vec<Vertex>> {
    let g = pc.g();
    let (white, black) = white_first(g, a, b);
    for (mid, p) in [(black, white), (white, black)] {
        for r in pc.inner(mid) {
            if r == p {
                continue;
            }
            for p1 in pc.cross(p) {
                for r1 in pc.cross(r) {
                    if p1 == r1 || pc.part(p1) != pc.part(r1) {
                        continue;
                    }
                    for w in pc.inner(p1) {
                        if w != r1 && pc.ok(w, r1) {
                            let c = vec![p, mid, r, r1, w, p1];
                            if pc.job.valid(&c, a, b, 6) {
                                return Some(c);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Fault-free cross 7-paths closing `e` into an 8-cycle, the disjoint pair
/// first.
fn closing_paths(pc: &Parts, a: Vertex, b: Vertex) -> Vec<[Vertex; 8]> {
    let (w, k) = white_first(pc.g(), a, b);
    let mut out = Vec::new();
    if let Ok(pair) =
        lemmas::disjoint_cross_paths(pc.g(), pc.s.dim(), pc.g().edge(a, b).ok().unwrap())
    {
        out.extend(pair.into_iter().filter(|p| clean_path(pc, p)));
    }
    for p in lemmas::cross_paths(pc.g(), pc.s, w, k, pc.faults()) {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn clean_path(pc: &Parts, p: &[Vertex]) -> bool {
    p.windows(2).all(|w| pc.ok(w[0], w[1]))
}

fn eight_via_paths(pc: &Parts, a: Vertex, b: Vertex) -> Option<Vec<Vertex>> {
    closing_paths(pc, a, b)
        .into_iter()
        .map(|p| p.to_vec())
        .find(|c| pc.job.valid(c, a, b, 8))
}

/// Replaces the part edges `(path[i], path[i + 1])` (for the listed `i`)
/// with paths of the given lengths inside their parts.
fn widen(
    pc: &Parts,
    ring: &[Vertex],
    edges: &[(usize, usize)],
    trace: &mut EmbedTrace,
) -> Option<Vec<Vertex>> {
    let k = ring.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < k {
        match edges.iter().find(|&&(at, _)| at == i) {
            Some(&(_, plen)) if plen > 1 => {
                let (x, y) = (ring[i], ring[(i + 1) % k]);
                let p = pc.path_in(pc.part(x), x, y, plen, trace)?;
                out.extend(&p[..p.len() - 1]);
            }
            _ => out.push(ring[i]),
        }
        i += 1;
    }
    Some(out)
}

fn sub21213(
    pc: &Parts,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<(Built, Option<&'static str>)> {
    let [_, l1, l2, l3] = choose_length_split(len, SplitRule::Sub21213, pc.q)?.parts();
    for ring in closing_paths(pc, a, b) {
        let mark = trace.mark();
        if let Some(c) = widen(pc, &ring, &[(1, l1), (3, l2), (5, l3)], trace) {
            if pc.job.valid(&c, a, b, len) {
                return Some(((c, format!("parts widened to {l1}/{l2}/{l3}")), None));
            }
        }
        trace.rewind(mark);
    }
    None
}

fn sub21214(
    pc: &Parts,
    pf: usize,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<(Built, Option<&'static str>)> {
    let q = pc.q;
    let [_, l1, l2, l3] = choose_length_split(len, SplitRule::Sub21214, q)?.parts();
    let s = pc.s;
    let faulty: Vec<_> = pc
        .faults()
        .edges()
        .iter()
        .filter(|e| s.part_of(e.lo()) == pf && s.part_of(e.hi()) == pf)
        .copied()
        .collect();
    for bar in faulty {
        let local_bar = pc.sub.edge(s.local(bar.lo()), s.local(bar.hi())).ok()?;
        let relaxed = pc.local[pf].without(&local_bar);
        let mark = trace.mark();
        let Some(c0) = pc.cycle_in_with(pf, a, b, q, &relaxed, trace) else {
            continue;
        };
        let on_cycle = open_at(&c0, bar.lo(), bar.hi()).is_some();
        let cands: Vec<(Vertex, Vertex)> = if on_cycle {
            vec![(bar.lo(), bar.hi())]
        } else {
            (0..q)
                .map(|i| (c0[i], c0[(i + 1) % q]))
                .filter(|&(x, y)| !((x, y) == (a, b) || (x, y) == (b, a)))
                .collect()
        };
        for (x, y) in cands {
            let (w0, k0) = white_first(pc.g(), x, y);
            let Some(p0) = open_at(&c0, k0, w0) else {
                continue;
            };
            for ring in lemmas::cross_paths(pc.g(), s, w0, k0, pc.faults()) {
                let inner = trace.mark();
                if let Some(mut c) = widen(pc, &ring[..7], &[(1, l1), (3, l2), (5, l3)], trace) {
                    c.extend(&p0[..p0.len() - 1]);
                    if pc.job.valid(&c, a, b, len) {
                        return Some((
                            (c, format!("faulty edge {} reopened", bar.label(pc.job.m))),
                            None,
                        ));
                    }
                }
                trace.rewind(inner);
            }
        }
        trace.rewind(mark);
    }
    None
}

fn sub21222(
    pc: &Parts,
    pf: usize,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<(Built, Option<&'static str>)> {
    let q = pc.q;
    let pe = pc.part(a);
    let l1 = len - q;
    let (white, black) = white_first(pc.g(), a, b);
    let c1 = pc.cycle_in(pe, a, b, q, trace)?;
    for (u, v) in [(white, black), (black, white)] {
        let x = Split::exit_part(pe, pc.g().color(u));
        if x == pf {
            continue;
        }
        let back = open_at(&c1, v, u)?;
        let mut c: Vec<Vertex> = vec![u];
        c.extend(&back[..back.len() - 1]);
        let seg = &c[..=l1];
        let end = c[l1];
        for u2 in pc.cross(end) {
            for v2 in pc.cross(u) {
                if u2 == v2 || pc.part(u2) != x || pc.part(v2) != x {
                    continue;
                }
                let removable: Vec<Vertex> =
                    pc.s.view(x)
                        .vertices()
                        .iter()
                        .copied()
                        .filter(|&w| pc.g().color(w) == pc.g().color(u))
                        .collect();
                let mut sorted = removable;
                sorted.sort_unstable();
                for w in sorted {
                    if let Some(p2) = pc.hyper_path_in(x, w, u2, v2) {
                        let mut cyc = seg.to_vec();
                        cyc.extend(p2);
                        if pc.job.valid(&cyc, a, b, len) {
                            return Some((
                                (
                                    cyc,
                                    format!(
                                        "prefix of {l1} edges, vertex {} skipped",
                                        w.label(pc.job.m)
                                    ),
                                ),
                                None,
                            ));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Simple paths of `k` edges inside the part of `start`, beginning with the
/// edge `(start, next)`, in lexicographic order.
fn part_paths(pc: &Parts, start: Vertex, next: Vertex, k: usize) -> Vec<Vec<Vertex>> {
    fn grow(pc: &Parts, path: &mut Vec<Vertex>, k: usize, out: &mut Vec<Vec<Vertex>>) {
        if path.len() == k + 1 {
            out.push(path.clone());
            return;
        }
        let last = *path.last().expect("non-empty");
        for w in pc.inner(last) {
            if !path.contains(&w) {
                path.push(w);
                grow(pc, path, k, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    if pc.ok(start, next) {
        grow(pc, &mut vec![start, next], k, &mut out);
    }
    out
}

/// Second vertices for a path that enters a part at `entry`.
fn leg_options(pc: &Parts, entry: Vertex) -> Vec<Vertex> {
    pc.inner(entry)
}

/// Direction of travel `s` and the four parts visited from `start`.
fn ring_parts(start: usize, s: i32) -> [usize; 4] {
    let step = |k: i32| ((start as i32 + s * k).rem_euclid(4)) as usize;
    [step(0), step(1), step(2), step(3)]
}

fn exit_toward(pc: &Parts, v: Vertex, part: usize) -> Vec<Vertex> {
    pc.cross(v)
        .into_iter()
        .filter(|&w| pc.part(w) == part)
        .collect()
}

/// Cap on assembled ring candidates per case.
const RING_TRIES: usize = 400;

fn sub21223(
    pc: &Parts,
    pf: usize,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<(Built, Option<&'static str>)> {
    let q = pc.q;
    let pe = pc.part(a);
    let [_, _, _, l3] = choose_length_split(len, SplitRule::Sub21223, q)?.parts();
    let dirs: Vec<i32> = if (pe + 1) % 4 == pf {
        vec![1]
    } else if (pe + 3) % 4 == pf {
        vec![-1]
    } else {
        vec![1, -1]
    };
    let mut tries = 0;
    for s in dirs {
        let [_, r1, r2, r3] = ring_parts(pe, s);
        let (u, v) = if Split::exit_part(pe, pc.g().color(a)) == r3 {
            (a, b)
        } else {
            (b, a)
        };
        if Split::exit_part(pe, pc.g().color(u)) != r3 {
            continue;
        }
        // lengths per ring position: the faulty part takes one edge, the
        // other middle part the long cycle, the last part a Hamiltonian path
        let lens = if r1 == pf { [1, l3] } else { [l3, 1] };
        for p1 in part_paths(pc, u, v, 5) {
            let z = p1[5];
            for e1 in exit_toward(pc, z, r1) {
                for f1 in leg_options(pc, e1) {
                    let mark = trace.mark();
                    let Some(seg1) = pc.path_in(r1, e1, f1, lens[0], trace) else {
                        trace.rewind(mark);
                        continue;
                    };
                    for e2 in exit_toward(pc, f1, r2) {
                        for f2 in leg_options(pc, e2) {
                            let mark2 = trace.mark();
                            let Some(seg2) = pc.path_in(r2, e2, f2, lens[1], trace) else {
                                trace.rewind(mark2);
                                continue;
                            };
                            for e3 in exit_toward(pc, f2, r3) {
                                for f3 in exit_toward(pc, u, r3) {
                                    tries += 1;
                                    if tries > RING_TRIES {
                                        return None;
                                    }
                                    let Some(seg3) = pc.ham_path_in(r3, e3, f3) else {
                                        continue;
                                    };
                                    let mut c = p1.clone();
                                    c.extend(&seg1);
                                    c.extend(&seg2);
                                    c.extend(seg3);
                                    if pc.job.valid(&c, a, b, len) {
                                        return Some(((c, format!("ring direction {s:+}")), None));
                                    }
                                }
                            }
                            trace.rewind(mark2);
                        }
                    }
                    trace.rewind(mark);
                }
            }
        }
    }
    None
}

fn sub21224(
    pc: &Parts,
    pf: usize,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<(Built, Option<&'static str>)> {
    let q = pc.q;
    let s_ = pc.s;
    let pe = pc.part(a);
    let [l0, _, _, l3] = choose_length_split(len, SplitRule::Sub21224, q)?.parts();
    let dirs: Vec<i32> = if (pf + 1) % 4 == pe {
        vec![-1]
    } else if (pf + 3) % 4 == pe {
        vec![1]
    } else {
        vec![-1, 1]
    };
    let faulty: Vec<_> = pc
        .faults()
        .edges()
        .iter()
        .filter(|e| s_.part_of(e.lo()) == pf && s_.part_of(e.hi()) == pf)
        .copied()
        .collect();
    let c1 = pc.cycle_in(pe, a, b, q, trace)?;
    let mut tries = 0;
    for s in dirs {
        let [_, t1, t2, t3] = ring_parts(pf, s);
        for bar in &faulty {
            let (x, y) = (bar.lo(), bar.hi());
            let (a0, b0) = if Split::exit_part(pf, pc.g().color(y)) == t1 {
                (x, y)
            } else {
                (y, x)
            };
            if Split::exit_part(pf, pc.g().color(b0)) != t1 {
                continue;
            }
            let local_bar = pc.sub.edge(s_.local(a0), s_.local(b0)).ok()?;
            let relaxed = pc.local[pf].without(&local_bar);
            let mark = trace.mark();
            let Some(c0) = pc.cycle_in_with(pf, a0, b0, l0 + 1, &relaxed, trace) else {
                trace.rewind(mark);
                continue;
            };
            let Some(p0) = open_at(&c0, a0, b0) else {
                trace.rewind(mark);
                continue;
            };
            for e1 in exit_toward(pc, b0, t1) {
                for f1 in leg_options(pc, e1) {
                    let mark1 = trace.mark();
                    let Some(seg1) = pc.path_in(t1, e1, f1, l3, trace) else {
                        trace.rewind(mark1);
                        continue;
                    };
                    for e2 in exit_toward(pc, f1, t2) {
                        for f3 in exit_toward(pc, a0, t3) {
                            tries += 1;
                            if tries > RING_TRIES {
                                return None;
                            }
                            let tail = if t3 == pe {
                                ham_then_e_part(pc, &c1, a, b, e2, t2, f3)
                            } else {
                                e_part_then_ham(pc, &c1, a, b, e2, t3, f3)
                            };
                            if let Some(tail) = tail {
                                let mut c = p0.clone();
                                c.extend(&seg1);
                                c.extend(tail);
                                if pc.job.valid(&c, a, b, len) {
                                    return Some((
                                        (
                                            c,
                                            format!("faulty edge {} reopened", bar.label(pc.job.m)),
                                        ),
                                        None,
                                    ));
                                }
                            }
                        }
                    }
                    trace.rewind(mark1);
                }
            }
            trace.rewind(mark);
        }
    }
    None
}

/// Hamiltonian path through part `t2` from `e2`, then the Hamiltonian cycle
/// `c1` of the part of `e` opened next to its exit `f3`.
fn ham_then_e_part(
    pc: &Parts,
    c1: &[Vertex],
    a: Vertex,
    b: Vertex,
    e2: Vertex,
    t2: usize,
    f3: Vertex,
) -> Option<Vec<Vertex>> {
    let k = c1.len();
    let i = c1.iter().position(|&v| v == f3)?;
    for entry in [c1[(i + 1) % k], c1[(i + k - 1) % k]] {
        if (entry, f3) == (a, b) || (entry, f3) == (b, a) {
            continue;
        }
        let p3 = open_at(c1, entry, f3)?;
        for f2 in exit_toward(pc, entry, t2) {
            if let Some(p2) = pc.ham_path_in(t2, e2, f2) {
                let mut out = p2;
                out.extend(p3);
                return Some(out);
            }
        }
    }
    None
}

/// The Hamiltonian cycle `c1` of the part of `e` opened at its entry `e2`,
/// then a Hamiltonian path of part `t3` ending at `f3`.
fn e_part_then_ham(
    pc: &Parts,
    c1: &[Vertex],
    a: Vertex,
    b: Vertex,
    e2: Vertex,
    t3: usize,
    f3: Vertex,
) -> Option<Vec<Vertex>> {
    let k = c1.len();
    let i = c1.iter().position(|&v| v == e2)?;
    for exit in [c1[(i + 1) % k], c1[(i + k - 1) % k]] {
        if (exit, e2) == (a, b) || (exit, e2) == (b, a) {
            continue;
        }
        let p2 = open_at(c1, e2, exit)?;
        for e3 in exit_toward(pc, exit, t3) {
            if let Some(p3) = pc.ham_path_in(t3, e3, f3) {
                let mut out = p2.clone();
                out.extend(p3);
                return Some(out);
            }
        }
    }
    None
}

fn case22(
    job: &Job,
    pc: &Parts,
    d_star: usize,
    a: Vertex,
    b: Vertex,
    len: usize,
    trace: &mut EmbedTrace,
) -> Option<Vec<Vertex>> {
    let m = job.m;
    let depth = job.depth;
    match len {
        6 => step(trace, depth, "Case2/Sub2.2.1", |t| {
            let d2 = job.faults.heaviest_excluding(Some(d_star));
            let pc2 = Parts::new(job, d2)?;
            let pe = pc2.part(a);
            if pc2.count(pe) <= 2 * m - 4 {
                if let Some(c) = pc2.cycle_in(pe, a, b, 6, t) {
                    return Some(((c, "6-cycle inside the part of e".into()), None));
                }
            }
            six_via_neighbor(&pc2, a, b).map(|c| ((c, "2-path and neighbor part".into()), None))
        }),
        8 => step(trace, depth, "Case2/Sub2.2.2", |_| {
            lemmas::eight_cycles(job.g, pc.s, a, b, job.faults)
                .into_iter()
                .map(|c| c.to_vec())
                .find(|c| job.valid(c, a, b, 8))
                .map(|c| ((c, "8-cycle with one edge per part".into()), None))
        }),
        _ => step(trace, depth, "Case2/Sub2.2.3", |t| {
            let [l0, l1, l2, l3] = choose_length_split(len, SplitRule::Sub223, pc.q)?.parts();
            for ring in lemmas::eight_cycles(job.g, pc.s, a, b, job.faults) {
                let mark = t.mark();
                if let Some(c) = widen(pc, &ring, &[(0, l0), (2, l3), (4, l2), (6, l1)], t) {
                    if job.valid(&c, a, b, len) {
                        return Some(((c, format!("parts widened to {l0}/{l1}/{l2}/{l3}")), None));
                    }
                }
                t.rewind(mark);
            }
            None
        }),
    }
}
