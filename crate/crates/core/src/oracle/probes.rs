use serde::{Deserialize, Serialize};

use crate::embed::{Embedder, FaultSet};
use crate::error::Result;
use crate::topology::{BalancedHypercube, Edge, Vertex};

use super::brute::{exists_cycle_bruteforce, Decision};
use super::campaigns::run_instance;

/// `e = (x, y)` with `x = 0...0` and `y = 10...01`, and the two faults
/// `(x, twin(y))`, `(twin(x), y)` that leave `e` on no 4-cycle.
pub fn counterexample_four_cycle(g: &BalancedHypercube) -> Result<(Edge, FaultSet)> {
    let n = g.n();
    let x = Vertex(0);
    let mut digits = vec![0; n];
    digits[0] = 1;
    digits[n - 1] = 1;
    let y = Vertex::from_coords(&digits)?;
    let e = g.edge(x, y)?;
    let faults = FaultSet::new(g, [g.edge(x, g.twin(y))?, g.edge(g.twin(x), y)?])?;
    Ok((e, faults))
}

/// `e = (u, v)` with `u = 0...0` and `v = 10...0`, and all `2n - 1` other
/// edges at `u` as faults.
pub fn optimality_probe(g: &BalancedHypercube) -> Result<(Edge, FaultSet)> {
    let n = g.n();
    let u = Vertex(0);
    let mut digits = vec![0; n];
    digits[0] = 1;
    let e = g.edge(u, Vertex::from_coords(&digits)?)?;
    let others = g
        .neighbors(u)
        .iter()
        .filter(|&&w| !e.has_endpoint(w))
        .map(|&w| g.edge(u, w))
        .collect::<Result<Vec<_>>>()?;
    Ok((e, FaultSet::new(g, others)?))
}

/// Oracle verdicts on [`counterexample_four_cycle`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleCheck {
    pub n: usize,
    pub edge: String,
    pub faults: Vec<String>,
    /// Brute-force verdict for a 4-cycle through `e`.
    pub four_cycle: String,
    /// Brute-force verdict for a 6-cycle through `e`.
    pub six_cycle: String,
    /// Even lengths from 6 whose embedded cycle failed validation.
    pub failed_lengths: Vec<usize>,
    pub holds: bool,
}

pub fn verify_counterexample(n: usize, budget: u64) -> Result<CounterexampleCheck> {
    let emb = Embedder::new(n)?;
    let g = emb.graph();
    let (e, faults) = counterexample_four_cycle(g)?;
    let four = exists_cycle_bruteforce(n, e, 4, &faults, budget);
    let six = exists_cycle_bruteforce(n, e, 6, &faults, budget);
    let failed_lengths: Vec<usize> = (6..=g.vertex_count())
        .step_by(2)
        .filter(|&len| run_instance(&emb, e, len, &faults).failure.is_some())
        .collect();
    Ok(CounterexampleCheck {
        n,
        edge: e.label(n),
        faults: faults.edges().iter().map(|f| f.label(n)).collect(),
        holds: four == Decision::No && six.is_yes() && failed_lengths.is_empty(),
        four_cycle: four.as_str().into(),
        six_cycle: six.as_str().into(),
        failed_lengths,
    })
}

/// One fault removed from the optimality probe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Restored {
    pub removed: String,
    pub failed_lengths: Vec<usize>,
}

/// Oracle verdicts on [`optimality_probe`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityCheck {
    pub n: usize,
    pub edge: String,
    pub faults: Vec<String>,
    /// Even lengths from 4 for which the oracle did not answer "no".
    pub not_refuted: Vec<usize>,
    pub restored: Vec<Restored>,
    pub holds: bool,
}

pub fn verify_optimality(n: usize, budget: u64) -> Result<OptimalityCheck> {
    let emb = Embedder::new(n)?;
    let g = emb.graph();
    let (e, faults) = optimality_probe(g)?;
    let not_refuted: Vec<usize> = (4..=g.vertex_count())
        .step_by(2)
        .filter(|&len| !exists_cycle_bruteforce(n, e, len, &faults, budget).is_no())
        .collect();
    let restored: Vec<Restored> = faults
        .edges()
        .iter()
        .map(|f| {
            let fewer = faults.without(f);
            Restored {
                removed: f.label(n),
                failed_lengths: (6..=g.vertex_count())
                    .step_by(2)
                    .filter(|&len| run_instance(&emb, e, len, &fewer).failure.is_some())
                    .collect(),
            }
        })
        .collect();
    Ok(OptimalityCheck {
        n,
        edge: e.label(n),
        faults: faults.edges().iter().map(|f| f.label(n)).collect(),
        holds: not_refuted.is_empty() && restored.iter().all(|r| r.failed_lengths.is_empty()),
        not_refuted,
        restored,
    })
}
