use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::OnceLock;

use super::split::Split;
use super::vertex::{add_mod4, Color, Edge, Vertex};
use crate::error::{Error, Result};

/// Largest dimension accepted by the constructors (`4^12` vertices).
pub const MAX_DIMENSION: usize = 12;

/// The balanced hypercube `BH_n`.
///
/// Adjacency lists are materialized once at construction and sorted, so
/// neighbor scans run in lexicographic order. Subcube splits are built lazily
/// on first use and cached; the graph itself never changes.
pub struct BalancedHypercube {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    splits: Vec<OnceLock<Split>>,
}

impl std::fmt::Debug for BalancedHypercube {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BalancedHypercube")
            .field("n", &self.n)
            .finish()
    }
}

impl BalancedHypercube {
    /// Builds `BH_n` from the coordinate adjacency rule.
    pub fn new(n: usize) -> Result<Self> {
        check_dimension(n)?;
        let count = 1usize << (2 * n);
        let adj = (0..count as u32)
            .map(|code| {
                let mut nb = coordinate_neighbors(Vertex(code), n);
                nb.sort_unstable();
                nb
            })
            .collect();
        Ok(Self::from_adjacency(n, adj))
    }

    /// Builds `BH_n` from four copies of `BH_{n-1}` joined by the
    /// last-coordinate crossing rule, starting from the 4-cycle `BH_1`.
    pub fn build_recursive(n: usize) -> Result<Self> {
        check_dimension(n)?;
        let edges = recursive_edges(n);
        let count = 1usize << (2 * n);
        let mut adj = vec![Vec::new(); count];
        for &(a, b) in &edges {
            adj[a.index()].push(b);
            adj[b.index()].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_adjacency(n, adj))
    }

    fn from_adjacency(n: usize, adj: Vec<Vec<Vertex>>) -> Self {
        Self {
            n,
            adj,
            splits: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.adj.len() as u32).map(Vertex)
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v.index() < self.adj.len()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "vertex code {} is not a label of BH_{}",
                v.0, self.n
            )))
        }
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v.index()]
    }

    /// Checked variant of [`Self::neighbors`] taking a coordinate tuple.
    pub fn neighbors_of(&self, coords: &[u32]) -> Result<Vec<Vertex>> {
        if coords.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "label has {} coordinates, expected {}",
                coords.len(),
                self.n
            )));
        }
        let v = Vertex::from_coords(coords)?;
        Ok(self.neighbors(v).to_vec())
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> Color {
        v.color(self.n)
    }

    #[inline]
    pub fn twin(&self, v: Vertex) -> Vertex {
        v.twin(self.n)
    }

    #[inline]
    pub fn is_adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.contains(a) && self.contains(b) && self.adj[a.index()].binary_search(&b).is_ok()
    }

    /// Dimension of the edge `(a, b)`: 0 when only the inner index differs,
    /// otherwise the unique other coordinate that changes.
    pub fn edge_dimension(&self, a: Vertex, b: Vertex) -> Result<usize> {
        if !self.is_adjacent(a, b) {
            return Err(Error::NotAnEdge(format!(
                "{}-{}",
                self.label_or_code(a),
                self.label_or_code(b)
            )));
        }
        Ok(dimension_of_pair(a, b, self.n))
    }

    /// Checked canonical edge.
    pub fn edge(&self, a: Vertex, b: Vertex) -> Result<Edge> {
        let dim = self.edge_dimension(a, b)?;
        Ok(Edge::new_unchecked(a, b, dim))
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in self.vertices() {
            for &b in self.neighbors(a) {
                if a < b {
                    out.push(Edge::new_unchecked(a, b, dimension_of_pair(a, b, self.n)));
                }
            }
        }
        out
    }

    /// The dimension class `∂D_d`.
    pub fn dimension_class(&self, d: usize) -> Result<Vec<Edge>> {
        if d >= self.n {
            return Err(Error::InvalidInput(format!(
                "dimension {d} out of range for BH_{}",
                self.n
            )));
        }
        Ok(self.edges().into_iter().filter(|e| e.dim() == d).collect())
    }

    /// Splits along coordinate `j >= 1`: part `i` holds the vertices with
    /// `a_j = i`.
    pub fn split(&self, j: usize) -> Result<&Split> {
        if j == 0 {
            return Err(Error::InvalidInput(
                "dimension 0 has no coordinate split; use component_split_dim0".into(),
            ));
        }
        if j >= self.n {
            return Err(Error::InvalidInput(format!(
                "split dimension {j} out of range for BH_{}",
                self.n
            )));
        }
        Ok(self.splits[j].get_or_init(|| Split::by_coordinate(self, j)))
    }

    /// The four components of `BH_n - ∂D_0`, each with an isomorphism onto
    /// `BH_{n-1}`.
    pub fn component_split_dim0(&self) -> Result<&Split> {
        if self.n < 2 {
            return Err(Error::InvalidInput("component split needs n >= 2".into()));
        }
        if let Some(s) = self.splits[0].get() {
            return Ok(s);
        }
        let built = Split::by_components(self)?;
        Ok(self.splits[0].get_or_init(|| built))
    }

    /// Split along any dimension: coordinate split for `d >= 1`, component
    /// split for `d = 0`.
    pub fn split_along(&self, d: usize) -> Result<&Split> {
        if d == 0 {
            self.component_split_dim0()
        } else {
            self.split(d)
        }
    }

    pub fn label(&self, v: Vertex) -> String {
        v.label(self.n)
    }

    fn label_or_code(&self, v: Vertex) -> String {
        if self.contains(v) {
            v.label(self.n)
        } else {
            format!("#{}", v.0)
        }
    }

    pub fn parse_vertex(&self, text: &str) -> Result<Vertex> {
        let v = Vertex::parse(text, self.n)?;
        self.check_vertex(v)?;
        Ok(v)
    }

    /// Parses `u-v` and returns the canonical edge.
    pub fn parse_edge(&self, text: &str) -> Result<Edge> {
        let text = text.trim();
        let (a, b) = text
            .split_once('-')
            .ok_or_else(|| Error::InvalidInput(format!("edge '{text}' must look like u-v")))?;
        let a = self.parse_vertex(a)?;
        let b = self.parse_vertex(b)?;
        self.edge(a, b)
    }

    /// Sorted edge list with a header comment (`|V|`, `|E|`, per-dimension
    /// counts), one `u-v` per line.
    pub fn edge_list_text(&self) -> String {
        let edges = self.edges();
        let mut counts = vec![0usize; self.n];
        for e in &edges {
            counts[e.dim()] += 1;
        }
        let mut lines: Vec<String> = edges.iter().map(|e| e.label(self.n)).collect();
        lines.sort();
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# BH_{} |V|={} |E|={}",
            self.n,
            self.vertex_count(),
            edges.len()
        );
        let per_dim: Vec<String> = counts
            .iter()
            .enumerate()
            .map(|(d, c)| format!("D{d}={c}"))
            .collect();
        let _ = writeln!(out, "# {}", per_dim.join(" "));
        for line in lines {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    /// Canonical edge set as endpoint pairs, for structural comparisons.
    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges().iter().map(Edge::endpoints).collect()
    }
}

fn check_dimension(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIMENSION {
        return Err(Error::InvalidInput(format!(
            "dimension must lie in 1..={MAX_DIMENSION}, got {n}"
        )));
    }
    Ok(())
}

/// Neighbors from the coordinate rule: `(a_0 ± 1, rest)` and
/// `(a_0 ± 1, ..., a_i + (-1)^{a_0}, ...)` for `1 <= i < n`.
fn coordinate_neighbors(v: Vertex, n: usize) -> Vec<Vertex> {
    let a0 = v.coord(n, 0);
    let step = if a0.is_multiple_of(2) { 1 } else { -1 };
    let mut out = Vec::with_capacity(2 * n);
    for delta in [1, -1] {
        let base = v.with_coord(n, 0, add_mod4(a0, delta));
        out.push(base);
        for i in 1..n {
            out.push(base.with_coord(n, i, add_mod4(v.coord(n, i), step)));
        }
    }
    out
}

fn dimension_of_pair(a: Vertex, b: Vertex, n: usize) -> usize {
    (1..n)
        .find(|&i| a.coord(n, i) != b.coord(n, i))
        .unwrap_or(0)
}

fn recursive_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    if n == 1 {
        return (0..4u32)
            .map(|a| (Vertex(a), Vertex((a + 1) % 4)))
            .collect();
    }
    let inner = recursive_edges(n - 1);
    let mut out = Vec::with_capacity(inner.len() * 4 + (1 << (2 * n)));
    // A BH_{n-1} label (a_0..a_{n-2}) placed in copy i becomes (a_0..a_{n-2}, i).
    let lift = |v: Vertex, i: u32| Vertex(v.0 * 4 + i);
    for i in 0..4u32 {
        for &(a, b) in &inner {
            out.push((lift(a, i), lift(b, i)));
        }
    }
    let sub_count = 1u32 << (2 * (n - 1));
    for i in 0..4u32 {
        for local in 0..sub_count {
            let v = lift(Vertex(local), i);
            let a0 = v.coord(n, 0);
            if a0 % 2 == 0 {
                for delta in [1, -1] {
                    let w = v.with_coord(n, 0, add_mod4(a0, delta)).with_coord(
                        n,
                        n - 1,
                        add_mod4(i, 1),
                    );
                    out.push((v, w));
                }
            }
        }
    }
    out
}
