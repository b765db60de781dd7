use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topology::{BalancedHypercube, Edge, Vertex};

/// A set of failed edges with per-dimension tallies `F_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FaultSet {
    n: usize,
    edges: Vec<Edge>,
    tallies: Vec<usize>,
}

impl FaultSet {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            tallies: vec![0; n],
        }
    }

    /// Builds a fault set; repeated edges are rejected.
    pub fn new(g: &BalancedHypercube, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list: Vec<Edge> = edges.into_iter().collect();
        for e in &list {
            g.edge(e.lo(), e.hi())?;
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!(
                "duplicate fault edge {}",
                w[0].label(g.n())
            )));
        }
        let mut tallies = vec![0; g.n()];
        for e in &list {
            tallies[e.dim()] += 1;
        }
        Ok(Self {
            n: g.n(),
            edges: list,
            tallies,
        })
    }

    /// Parses the fault-file format: one `u-v` edge per line, `#` comments,
    /// blank lines ignored.
    pub fn parse_text(g: &BalancedHypercube, text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let e = g.parse_edge(line).map_err(|err| {
                Error::InvalidInput(format!("fault file line {}: {err}", lineno + 1))
            })?;
            edges.push(e);
        }
        Self::new(g, edges)
    }

    pub fn to_text(&self) -> String {
        self.edges
            .iter()
            .map(|e| format!("{}\n", e.label(self.n)))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `|F ∩ ∂D_d|`.
    pub fn tally(&self, d: usize) -> usize {
        self.tallies[d]
    }

    pub fn tallies(&self) -> &[usize] {
        &self.tallies
    }

    #[inline]
    pub fn contains(&self, e: &Edge) -> bool {
        self.contains_pair(e.lo(), e.hi())
    }

    /// Whether the edge between `a` and `b` (either order) is faulty.
    #[inline]
    pub fn contains_pair(&self, a: Vertex, b: Vertex) -> bool {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.edges
            .binary_search_by(|e| (e.lo(), e.hi()).cmp(&key))
            .is_ok()
    }

    /// Copy with `e` added (no-op if already present).
    pub fn with(&self, e: Edge) -> Self {
        let mut out = self.clone();
        if let Err(pos) = out.edges.binary_search(&e) {
            out.edges.insert(pos, e);
            out.tallies[e.dim()] += 1;
        }
        out
    }

    /// Copy with `e` removed (no-op if absent).
    pub fn without(&self, e: &Edge) -> Self {
        let mut out = self.clone();
        if let Ok(pos) = out.edges.binary_search(e) {
            out.edges.remove(pos);
            out.tallies[e.dim()] -= 1;
        }
        out
    }

    /// Dimension with the most faults; ties go to the largest index.
    pub fn heaviest_dimension(&self) -> usize {
        self.heaviest_excluding(None)
    }

    pub(crate) fn heaviest_excluding(&self, skip: Option<usize>) -> usize {
        let mut best = None;
        for d in (0..self.n).rev() {
            if Some(d) == skip {
                continue;
            }
            match best {
                Some(b) if self.tallies[b] >= self.tallies[d] => {}
                _ => best = Some(d),
            }
        }
        best.unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> BalancedHypercube {
        BalancedHypercube::new(2).unwrap()
    }

    #[test]
    fn parse_and_tally() {
        let g = g2();
        let f = FaultSet::parse_text(&g, "# faults\n00-31\n\n20-11\n").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.tallies(), &[0, 2]);
        assert!(f.contains_pair(g.parse_vertex("31").unwrap(), g.parse_vertex("00").unwrap()));
        assert_eq!(f.to_text(), "00-31\n11-20\n");
    }

    #[test]
    fn duplicates_and_non_edges_are_rejected() {
        let g = g2();
        assert!(FaultSet::parse_text(&g, "00-10\n10-00\n").is_err());
        assert!(FaultSet::parse_text(&g, "00-01\n").is_err());
    }

    #[test]
    fn heaviest_dimension_breaks_ties_upward() {
        let g = BalancedHypercube::new(3).unwrap();
        assert_eq!(FaultSet::empty(3).heaviest_dimension(), 2);
        let e0 = g.parse_edge("000-100").unwrap();
        let f = FaultSet::new(&g, [e0]).unwrap();
        assert_eq!(f.heaviest_dimension(), 0);
        assert_eq!(f.heaviest_excluding(Some(0)), 2);
        let e1 = g.parse_edge("000-110").unwrap();
        let f = f.with(e1);
        assert_eq!(f.tallies(), &[1, 1, 0]);
        assert_eq!(f.heaviest_dimension(), 1);
        assert_eq!(f.without(&e1).len(), 1);
    }
}
