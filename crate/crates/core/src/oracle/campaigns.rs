use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embed::{EmbedTrace, Embedder, FaultSet};
use crate::error::Result;
use crate::topology::{BalancedHypercube, Edge, Vertex};

use super::exec::Execution;
use super::report::{CampaignReport, Failure, Outcome};
use super::validate::validate_cycle;

/// Label recorded for instances where some level fell back to search.
pub const FALLBACK_LABEL: &str = "any/Fallback";

fn top_labels(trace: &EmbedTrace) -> Vec<String> {
    let mut out: Vec<String> = trace.top_labels().into_iter().map(str::to_owned).collect();
    if trace.uses_fallback() {
        out.push(FALLBACK_LABEL.to_owned());
    }
    out
}

pub(crate) fn failure(n: usize, e: Edge, len: usize, faults: &FaultSet, reason: String) -> Failure {
    Failure {
        n,
        edge: e.label(n),
        length: Some(len),
        faults: faults.edges().iter().map(|f| f.label(n)).collect(),
        reason,
    }
}

/// Embeds one instance and re-validates the result with the oracle.
pub(crate) fn run_instance(emb: &Embedder, e: Edge, len: usize, faults: &FaultSet) -> Outcome {
    let n = emb.n();
    match emb.embed(e, len, faults) {
        Ok((c, trace)) => match validate_cycle(n, &c, e, len, faults) {
            Ok(()) => Outcome::pass(top_labels(&trace)),
            Err(v) => Outcome::fail(
                top_labels(&trace),
                failure(n, e, len, faults, v.to_string()),
            ),
        },
        Err(err) => Outcome::fail(Vec::new(), failure(n, e, len, faults, err.to_string())),
    }
}

fn even_lengths(g: &BalancedHypercube) -> impl Iterator<Item = usize> {
    (6..=g.vertex_count()).step_by(2)
}

/// Every fault set of `BH_2` with at most two edges: the empty set, then
/// singletons, then pairs, each in lexicographic edge order.
pub fn all_fault_sets_bh2(g: &BalancedHypercube) -> Vec<FaultSet> {
    let edges = g.edges();
    let mut out = vec![FaultSet::empty(g.n())];
    for &e in &edges {
        out.push(FaultSet::new(g, [e]).expect("distinct edges"));
    }
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            out.push(FaultSet::new(g, [edges[i], edges[j]]).expect("distinct edges"));
        }
    }
    out
}

/// Instance count of the exhaustive `BH_2` campaign: each fault set times
/// its fault-free edges times the six even lengths 6..=16.
pub fn exhaustive_bh2_total() -> usize {
    let m = 32;
    (m + m * (m - 1) + m * (m - 1) / 2 * (m - 2)) * 6
}

/// Embeds every (fault set with `|F| <= 2`, fault-free edge, even length)
/// instance of `BH_2`.
pub fn campaign_exhaustive_bh2(exec: Execution) -> Result<CampaignReport> {
    let emb = Embedder::new(2)?;
    let g = emb.graph();
    let edges = g.edges();
    let sets = all_fault_sets_bh2(g);
    let outcomes = exec.map(&sets, |f| {
        let mut out = Vec::new();
        for &e in edges.iter().filter(|e| !f.contains(e)) {
            for len in even_lengths(g) {
                out.push(run_instance(&emb, e, len, f));
            }
        }
        out
    });
    let report = CampaignReport::new(
        2,
        "exhaustive: all |F| <= 2, fault-free e, even length 6..=16",
        None,
    );
    Ok(report.collect(outcomes.into_iter().flatten()))
}

/// Random generator for trial `index` of a campaign seeded with `seed`.
fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_subset(rng: &mut ChaCha8Rng, pool: &[Edge], k: usize) -> Vec<Edge> {
    let mut idx = sample(rng, pool.len(), k.min(pool.len())).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|i| pool[i]).collect()
}

/// `trials` seeded instances of `BH_n`: `|F|` uniform in `0..=2n-2`, `F`
/// uniform of that size, `e` uniform among fault-free edges, `ℓ` uniform
/// among the even lengths from 6 to `4^n`.
pub fn campaign_random(
    n: usize,
    trials: usize,
    seed: u64,
    exec: Execution,
) -> Result<CampaignReport> {
    let emb = Embedder::new(n)?;
    let g = emb.graph();
    let edges = g.edges();
    let half = g.vertex_count() / 2;
    let idx: Vec<u64> = (0..trials as u64).collect();
    let outcomes = exec.map(&idx, |&i| {
        let mut rng = trial_rng(seed, i);
        let k = rng.gen_range(0..=2 * n - 2);
        let faults = FaultSet::new(g, random_subset(&mut rng, &edges, k)).expect("sampled edges");
        let free: Vec<Edge> = edges
            .iter()
            .copied()
            .filter(|e| !faults.contains(e))
            .collect();
        let e = free[rng.gen_range(0..free.len())];
        let len = 2 * rng.gen_range(3..=half);
        run_instance(&emb, e, len, &faults)
    });
    let domain = format!(
        "random: |F| <= {}, fault-free e, even length 6..={}",
        2 * n - 2,
        2 * half
    );
    Ok(CampaignReport::new(n, domain, Some(seed)).collect(outcomes))
}

/// [`campaign_random`] at `n = 3`.
pub fn campaign_random_bh3(trials: usize, seed: u64, exec: Execution) -> Result<CampaignReport> {
    campaign_random(3, trials, seed, exec)
}

/// Fault sets that concentrate `2n - 2` faults: at one vertex, inside one
/// dimension class (every class, dimension 0 included), and split evenly
/// between two parts of a split. Each set is tried on several edges at all
/// even lengths.
pub fn campaign_adversarial(n: usize, seed: u64, exec: Execution) -> Result<CampaignReport> {
    let emb = Embedder::new(n)?;
    let g = emb.graph();
    let edges = g.edges();
    let k = 2 * n - 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets: Vec<(FaultSet, Option<Vertex>)> = Vec::new();
    for _ in 0..16 {
        let v = Vertex(rng.gen_range(0..g.vertex_count() as u32));
        let star: Vec<Edge> = edges
            .iter()
            .copied()
            .filter(|e| e.has_endpoint(v))
            .collect();
        sets.push((
            FaultSet::new(g, random_subset(&mut rng, &star, k))?,
            Some(v),
        ));
    }
    for d in 0..n {
        let class: Vec<Edge> = edges.iter().copied().filter(|e| e.dim() == d).collect();
        for _ in 0..8 {
            sets.push((FaultSet::new(g, random_subset(&mut rng, &class, k))?, None));
        }
    }
    for _ in 0..16 {
        let s = g.split_along(rng.gen_range(0..n))?;
        let p = rng.gen_range(0..4);
        let q = (p + rng.gen_range(1..4)) % 4;
        let inside = |part: usize| -> Vec<Edge> {
            edges
                .iter()
                .copied()
                .filter(|e| s.part_of(e.lo()) == part && s.part_of(e.hi()) == part)
                .collect()
        };
        let mut chosen = random_subset(&mut rng, &inside(p), k / 2);
        chosen.extend(random_subset(&mut rng, &inside(q), k - k / 2));
        sets.push((FaultSet::new(g, chosen)?, None));
    }
    let mut jobs: Vec<(usize, Edge)> = Vec::new();
    for (i, (faults, center)) in sets.iter().enumerate() {
        let free: Vec<Edge> = edges
            .iter()
            .copied()
            .filter(|e| !faults.contains(e))
            .collect();
        if let Some(v) = center {
            if let Some(&e) = free.iter().find(|e| e.has_endpoint(*v)) {
                jobs.push((i, e));
            }
        }
        while jobs.iter().filter(|(j, _)| *j == i).count() < 4 {
            jobs.push((i, free[rng.gen_range(0..free.len())]));
        }
    }
    let outcomes = exec.map(&jobs, |&(i, e)| {
        even_lengths(g)
            .map(|len| run_instance(&emb, e, len, &sets[i].0))
            .collect::<Vec<_>>()
    });
    let domain =
        format!("adversarial: {k} faults at one vertex, in one dimension class, or in two parts");
    Ok(CampaignReport::new(n, domain, Some(seed)).collect(outcomes.into_iter().flatten()))
}
