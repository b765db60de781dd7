use super::graph::BalancedHypercube;
use super::isomorphism::find_isomorphism;
use super::vertex::{Edge, Vertex};
use crate::error::{Error, Result};

/// A vertex permutation of `BH_n` that preserves adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    forward: Vec<Vertex>,
    inverse: Vec<Vertex>,
}

impl Automorphism {
    /// Wraps `map` after checking that it is a bijection preserving every edge.
    pub fn new(g: &BalancedHypercube, map: Vec<Vertex>) -> Result<Self> {
        if map.len() != g.vertex_count() {
            return Err(Error::InvalidInput("automorphism has wrong length".into()));
        }
        let mut inverse = vec![Vertex(u32::MAX); map.len()];
        for (i, &w) in map.iter().enumerate() {
            if !g.contains(w) || inverse[w.index()].0 != u32::MAX {
                return Err(Error::InvalidInput("map is not a bijection".into()));
            }
            inverse[w.index()] = Vertex(i as u32);
        }
        for a in g.vertices() {
            for &b in g.neighbors(a) {
                if !g.is_adjacent(map[a.index()], map[b.index()]) {
                    return Err(Error::InvalidInput(
                        "map does not preserve adjacency".into(),
                    ));
                }
            }
        }
        Ok(Self {
            forward: map,
            inverse,
        })
    }

    /// Builds from a per-vertex function, verifying the result.
    pub fn from_fn(g: &BalancedHypercube, f: impl Fn(Vertex) -> Vertex) -> Result<Self> {
        Self::new(g, g.vertices().map(f).collect())
    }

    /// Searches for an automorphism that swaps the dimension classes `∂D_a`
    /// and `∂D_b` and keeps every other class in place, fixing vertex 0.
    pub fn exchanging(g: &BalancedHypercube, a: usize, b: usize) -> Result<Self> {
        let n = g.n();
        if a >= n || b >= n {
            return Err(Error::InvalidInput("dimension out of range".into()));
        }
        let adj: Vec<Vec<(usize, u8)>> = g
            .vertices()
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .map(|&w| (w.index(), g.edge_dimension(v, w).unwrap() as u8))
                    .collect()
            })
            .collect();
        let swap = |d: u8| {
            if d as usize == a {
                b as u8
            } else if d as usize == b {
                a as u8
            } else {
                d
            }
        };
        let map = find_isomorphism(&adj, &adj, |s, t| swap(s) == t, (0, 0)).ok_or_else(|| {
            Error::NotFound(format!(
                "no automorphism of BH_{n} exchanging dimensions {a} and {b}"
            ))
        })?;
        Self::new(g, map.into_iter().map(|i| Vertex(i as u32)).collect())
    }

    #[inline]
    pub fn apply(&self, v: Vertex) -> Vertex {
        self.forward[v.index()]
    }

    #[inline]
    pub fn invert(&self, v: Vertex) -> Vertex {
        self.inverse[v.index()]
    }

    /// Image of an edge, with its dimension recomputed in `g`.
    pub fn apply_edge(&self, g: &BalancedHypercube, e: &Edge) -> Edge {
        g.edge(self.apply(e.lo()), self.apply(e.hi()))
            .expect("automorphism preserves adjacency")
    }

    pub fn invert_edge(&self, g: &BalancedHypercube, e: &Edge) -> Edge {
        g.edge(self.invert(e.lo()), self.invert(e.hi()))
            .expect("automorphism preserves adjacency")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twin_map_is_an_automorphism() {
        let g = BalancedHypercube::new(2).unwrap();
        assert!(Automorphism::from_fn(&g, |v| g.twin(v)).is_ok());
    }

    #[test]
    fn rejects_non_automorphism() {
        let g = BalancedHypercube::new(2).unwrap();
        // Swapping colors of a single pair breaks adjacency.
        let mut map: Vec<Vertex> = g.vertices().collect();
        map.swap(0, 1);
        assert!(Automorphism::new(&g, map).is_err());
    }

    #[test]
    fn exchange_swaps_dimension_classes() {
        for n in 2..=3 {
            let g = BalancedHypercube::new(n).unwrap();
            let x = Automorphism::exchanging(&g, 0, n - 1).unwrap();
            for e in g.edges() {
                let image = x.apply_edge(&g, &e);
                let expected = match e.dim() {
                    0 => n - 1,
                    d if d == n - 1 => 0,
                    d => d,
                };
                assert_eq!(image.dim(), expected);
                assert_eq!(x.invert_edge(&g, &image), e);
            }
        }
    }
}
