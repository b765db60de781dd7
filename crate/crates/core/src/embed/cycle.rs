use serde::{Deserialize, Serialize};

use crate::topology::{BalancedHypercube, Vertex};

/// A vertex sequence: an open path or a closed cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclePath {
    vertices: Vec<Vertex>,
    closed: bool,
}

impl CyclePath {
    pub fn cycle(vertices: Vec<Vertex>) -> Self {
        Self {
            vertices,
            closed: true,
        }
    }

    pub fn path(vertices: Vec<Vertex>) -> Self {
        Self {
            vertices,
            closed: false,
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        match (self.closed, self.vertices.len()) {
            (_, 0) => 0,
            (true, k) => k,
            (false, k) => k - 1,
        }
    }

    /// Consecutive vertex pairs, including the closing pair of a cycle.
    pub fn steps(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let k = self.vertices.len();
        let count = self.length();
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn labels(&self, n: usize) -> Vec<String> {
        self.vertices.iter().map(|v| v.label(n)).collect()
    }

    pub fn parse(
        g: &BalancedHypercube,
        labels: &[impl AsRef<str>],
        closed: bool,
    ) -> crate::Result<Self> {
        let vertices = labels
            .iter()
            .map(|s| g.parse_vertex(s.as_ref()))
            .collect::<crate::Result<Vec<_>>>()?;
        Ok(Self { vertices, closed })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_and_steps() {
        let c = CyclePath::cycle(vec![Vertex(0), Vertex(1), Vertex(2), Vertex(3)]);
        assert_eq!(c.length(), 4);
        assert_eq!(c.steps().last(), Some((Vertex(3), Vertex(0))));
        let p = CyclePath::path(vec![Vertex(0), Vertex(1), Vertex(2)]);
        assert_eq!(p.length(), 2);
        assert_eq!(p.steps().count(), 2);
        assert_eq!(CyclePath::path(vec![]).length(), 0);
    }
}
