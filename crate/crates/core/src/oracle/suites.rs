use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embed::{
    cross_path_family, eight_cycle_cross, ham_path_faulty, two_path_exit, CyclePath, Embedder,
    FaultSet,
};
use crate::error::Result;
use crate::topology::{BalancedHypercube, Color, Edge, Vertex};

use super::campaigns::{all_fault_sets_bh2, failure};
use super::exec::Execution;
use super::report::{CampaignReport, Failure, Outcome};
use super::validate::{oracle_neighbors, validate_cycle, validate_path};

fn subject_failure(
    n: usize,
    subject: String,
    faults: &FaultSet,
    reason: impl Into<String>,
) -> Failure {
    Failure {
        n,
        edge: subject,
        length: None,
        faults: faults.edges().iter().map(|f| f.label(n)).collect(),
        reason: reason.into(),
    }
}

fn check(label: &str, result: std::result::Result<(), Failure>) -> Outcome {
    match result {
        Ok(()) => Outcome::pass(vec![label.to_owned()]),
        Err(f) => Outcome::fail(vec![label.to_owned()], f),
    }
}

fn free_step(n: usize, faults: &FaultSet, a: Vertex, b: Vertex) -> bool {
    oracle_neighbors(n, a).contains(&b) && !faults.contains_pair(a, b)
}

/// Every `u`, split and fault set of `BH_2` with `|F| <= 2` and at most one
/// fault inside the part of `u`: a 2-path leaving the part must be found.
pub fn suite_two_path_bh2(exec: Execution) -> Result<CampaignReport> {
    let g = BalancedHypercube::new(2)?;
    let sets = all_fault_sets_bh2(&g);
    let outcomes = exec.map(&sets, |f| {
        let mut out = Vec::new();
        for d in 0..2 {
            let s = g.split_along(d).expect("split exists");
            for u in g.vertices() {
                let p = s.part_of(u);
                let inside = f
                    .edges()
                    .iter()
                    .filter(|e| s.part_of(e.lo()) == p && s.part_of(e.hi()) == p)
                    .count();
                if inside > 1 {
                    continue;
                }
                let subject = format!("u={} split={d}", g.label(u));
                let result = match two_path_exit(&g, d, u, f) {
                    Ok([a, v, w]) => {
                        let ok = a == u
                            && s.part_of(v) == p
                            && s.part_of(w) != p
                            && free_step(2, f, u, v)
                            && free_step(2, f, v, w);
                        if ok {
                            Ok(())
                        } else {
                            Err(subject_failure(
                                2,
                                subject,
                                f,
                                "2-path does not leave the part cleanly",
                            ))
                        }
                    }
                    Err(err) => Err(subject_failure(2, subject, f, err.to_string())),
                };
                out.push(check("two_path_exit", result));
            }
        }
        out
    });
    let report = CampaignReport::new(
        2,
        "2-path exit: every u, split, |F| <= 2 with <= 1 in the part",
        None,
    );
    Ok(report.collect(outcomes.into_iter().flatten()))
}

/// Every fault set of `BH_2` with `|F| <= 2` and every white-black pair:
/// a fault-free Hamiltonian path must be found.
pub fn suite_ham_bh2(exec: Execution) -> Result<CampaignReport> {
    let g = BalancedHypercube::new(2)?;
    let sets = all_fault_sets_bh2(&g);
    let whites: Vec<Vertex> = g
        .vertices()
        .filter(|&v| g.color(v) == Color::White)
        .collect();
    let blacks: Vec<Vertex> = g
        .vertices()
        .filter(|&v| g.color(v) == Color::Black)
        .collect();
    let outcomes = exec.map(&sets, |f| {
        let mut out = Vec::new();
        for &u in &whites {
            for &v in &blacks {
                let subject = format!("{} -> {}", g.label(u), g.label(v));
                let result = ham_path_faulty(&g, u, v, f)
                    .map_err(|e| e.to_string())
                    .and_then(|p| validate_path(2, &p, u, v, 16, f).map_err(|e| e.to_string()))
                    .map_err(|reason| subject_failure(2, subject, f, reason));
                out.push(check("ham_path_faulty", result));
            }
        }
        out
    });
    let report = CampaignReport::new(
        2,
        "Hamiltonian laceability: |F| <= 2, every white-black pair",
        None,
    );
    Ok(report.collect(outcomes.into_iter().flatten()))
}

/// Seeded fault sets with `|F| <= 2n - 2` and at least one fault in the
/// last dimension class; a random fault-free edge of that class must lie on
/// a fault-free 8-cycle with exactly one edge in its white endpoint's part.
pub fn suite_eight_cycle(
    n: usize,
    samples: usize,
    seed: u64,
    exec: Execution,
) -> Result<CampaignReport> {
    let g = BalancedHypercube::new(n)?;
    let d = n - 1;
    let s = g.split_along(d)?;
    let edges = g.edges();
    let class: Vec<Edge> = edges.iter().copied().filter(|e| e.dim() == d).collect();
    let idx: Vec<u64> = (0..samples as u64).collect();
    let outcomes = exec.map(&idx, |&i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i);
        let k = rng.gen_range(1..=2 * n - 2);
        let first = class[rng.gen_range(0..class.len())];
        let mut chosen = vec![first];
        while chosen.len() < k {
            let e = edges[rng.gen_range(0..edges.len())];
            if !chosen.contains(&e) {
                chosen.push(e);
            }
        }
        let f = FaultSet::new(&g, chosen).expect("distinct edges");
        let free: Vec<Edge> = class.iter().copied().filter(|e| !f.contains(e)).collect();
        let e = free[rng.gen_range(0..free.len())];
        let result = match eight_cycle_cross(&g, e, &f) {
            Ok(c) => validate_cycle(n, &c, e, 8, &f)
                .map_err(|v| v.to_string())
                .and_then(|()| {
                    let white = if g.color(e.lo()) == Color::White {
                        e.lo()
                    } else {
                        e.hi()
                    };
                    let home = s.part_of(white);
                    let inside = c
                        .steps()
                        .filter(|&(x, y)| s.part_of(x) == home && s.part_of(y) == home)
                        .count();
                    if inside == 1 {
                        Ok(())
                    } else {
                        Err(format!("{inside} edges in the home part"))
                    }
                })
                .map_err(|r| failure(n, e, 8, &f, r)),
            Err(err) => Err(failure(n, e, 8, &f, err.to_string())),
        };
        check("eight_cycle_cross", result)
    });
    let report = CampaignReport::new(
        n,
        format!(
            "8-cycle through a crossing edge: |F| <= {} with a fault in dimension {d}",
            2 * n - 2
        ),
        Some(seed),
    );
    Ok(report.collect(outcomes))
}

/// The `4(n - 1)` 5-paths joining `0...0` to the neighbors used by the
/// 8-cycle construction: each must be a path and no two may share an edge.
pub fn suite_family(n: usize) -> Result<CampaignReport> {
    let g = BalancedHypercube::new(n)?;
    let mut digits = vec![0; n];
    digits[0] = 1;
    digits[n - 1] = 1;
    let (u, v) = (Vertex(0), Vertex::from_coords(&digits)?);
    let family = cross_path_family(&g, u, v)?;
    let none = FaultSet::empty(n);
    let mut report = CampaignReport::new(n, "5-path family: validity and edge-disjointness", None);
    let count = if family.len() == 4 * (n - 1) {
        Ok(())
    } else {
        Err(subject_failure(
            n,
            "family".into(),
            &none,
            format!("{} paths, expected {}", family.len(), 4 * (n - 1)),
        ))
    };
    report.record(check("family/count", count));
    let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    for p in &family {
        let subject = format!("P({},{})", p.k, p.t);
        let path = CyclePath::path(p.vertices.to_vec());
        let (a, b) = (p.vertices[0], p.vertices[5]);
        let mut result = validate_path(n, &path, a, b, 6, &none)
            .map_err(|e| subject_failure(n, subject.clone(), &none, e.to_string()));
        for w in p.vertices.windows(2) {
            if !seen.insert((w[0].min(w[1]), w[0].max(w[1]))) && result.is_ok() {
                result = Err(subject_failure(
                    n,
                    subject.clone(),
                    &none,
                    "shares an edge with an earlier path",
                ));
            }
        }
        report.record(check("family/path", result));
    }
    Ok(report)
}

/// Each part of each split has `4^(n-1)` vertices, induces a copy of
/// `BH_(n-1)` under its relabeling, and sends white crossing edges to the
/// next part and black ones to the previous part.
pub fn suite_splits(n: usize) -> Result<CampaignReport> {
    let g = BalancedHypercube::new(n)?;
    let sub = BalancedHypercube::new(n - 1)?;
    let none = FaultSet::empty(n);
    let mut report = CampaignReport::new(
        n,
        "splits: part sizes, induced subgraphs, crossing orientation",
        None,
    );
    for d in 0..n {
        let s = g.split_along(d)?;
        for p in 0..4 {
            let view = s.view(p);
            let mut induced = BTreeSet::new();
            let mut oriented = true;
            for &a in view.vertices() {
                for b in oracle_neighbors(n, a) {
                    if s.part_of(b) == p {
                        let (x, y) = (s.local(a), s.local(b));
                        induced.insert((x.min(y), x.max(y)));
                    } else {
                        let want = match g.color(a) {
                            Color::White => (p + 1) % 4,
                            Color::Black => (p + 3) % 4,
                        };
                        oriented &= s.part_of(b) == want;
                    }
                }
            }
            let subject = format!("dimension {d} part {p}");
            let result = if view.len() != sub.vertex_count() {
                Err(format!("{} vertices", view.len()))
            } else if induced != sub.edge_set() {
                Err("induced subgraph differs from the smaller cube".into())
            } else if !oriented {
                Err("crossing edge reaches the wrong part".into())
            } else {
                Ok(())
            };
            report.record(check(
                "splits",
                result.map_err(|r| subject_failure(n, subject, &none, r)),
            ));
        }
    }
    Ok(report)
}

/// Single-point corruptions of a valid cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Remove the vertex at this position.
    DropVertex(usize),
    /// Exchange the vertices at this position and the next one.
    SwapNext(usize),
    /// Declare the cycle edge leaving this position faulty.
    FaultEdge(usize),
}

/// Every mutation of `c`, with the mutated sequence and fault set. Swaps are
/// limited to positions `1..len-2` so that the sequence still starts at the
/// same vertex.
pub fn mutations(
    g: &BalancedHypercube,
    c: &[Vertex],
    faults: &FaultSet,
) -> Vec<(Mutation, Vec<Vertex>, FaultSet)> {
    let k = c.len();
    let mut out = Vec::new();
    for i in 0..k {
        let mut v = c.to_vec();
        v.remove(i);
        out.push((Mutation::DropVertex(i), v, faults.clone()));
    }
    for i in 1..k - 1 {
        let mut v = c.to_vec();
        v.swap(i, i + 1);
        out.push((Mutation::SwapNext(i), v, faults.clone()));
    }
    for i in 0..k {
        if let Ok(e) = g.edge(c[i], c[(i + 1) % k]) {
            out.push((Mutation::FaultEdge(i), c.to_vec(), faults.with(e)));
        }
    }
    out
}

/// Embeds `samples` seeded instances and checks that the validator accepts
/// each cycle and rejects every mutation of it.
pub fn mutation_suite(
    n: usize,
    samples: usize,
    seed: u64,
    exec: Execution,
) -> Result<CampaignReport> {
    let emb = Embedder::new(n)?;
    let g = emb.graph();
    let edges = g.edges();
    let half = g.vertex_count() / 2;
    let idx: Vec<u64> = (0..samples as u64).collect();
    let outcomes = exec.map(&idx, |&i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i);
        let e = edges[rng.gen_range(0..edges.len())];
        let len = 2 * rng.gen_range(3..=half);
        let none = FaultSet::empty(n);
        let c = match emb.embed(e, len, &none) {
            Ok((c, _)) => c,
            Err(err) => return check("mutation", Err(failure(n, e, len, &none, err.to_string()))),
        };
        if let Err(v) = validate_cycle(n, &c, e, len, &none) {
            return check("mutation", Err(failure(n, e, len, &none, v.to_string())));
        }
        for (m, vs, f) in mutations(g, c.vertices(), &none) {
            if validate_cycle(n, &CyclePath::cycle(vs), e, len, &f).is_ok() {
                return check(
                    "mutation",
                    Err(failure(n, e, len, &f, format!("{m:?} accepted"))),
                );
            }
        }
        check("mutation", Ok(()))
    });
    Ok(
        CampaignReport::new(n, "mutations of valid cycles are rejected", Some(seed))
            .collect(outcomes),
    )
}
