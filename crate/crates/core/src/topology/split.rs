use std::collections::VecDeque;

use super::graph::BalancedHypercube;
use super::isomorphism::find_isomorphism;
use super::vertex::{Color, Vertex};
use crate::error::{Error, Result};

/// One of the four `BH_{n-1}` parts of a split, with its relabeling onto
/// `BH_{n-1}` and the two crossing neighbors of each of its vertices.
#[derive(Debug, Clone)]
pub struct SubcubeView {
    split_dim: usize,
    part: usize,
    vertices: Vec<Vertex>,
    crossing: Vec<[Vertex; 2]>,
}

impl SubcubeView {
    pub fn split_dim(&self) -> usize {
        self.split_dim
    }

    pub fn part(&self) -> usize {
        self.part
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Global vertices, indexed by their `BH_{n-1}` code.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Global vertex carrying the `BH_{n-1}` label `local`.
    pub fn global(&self, local: Vertex) -> Vertex {
        self.vertices[local.index()]
    }

    /// Crossing neighbors (outside this part) of the vertex with label `local`.
    pub fn crossing_of_local(&self, local: Vertex) -> [Vertex; 2] {
        self.crossing[local.index()]
    }
}

/// Partition of `BH_n` into four parts, each isomorphic to `BH_{n-1}`, by
/// removing the dimension class `∂D_d`.
///
/// Parts are numbered so that white vertices of part `i` have their crossing
/// neighbors in part `i + 1 (mod 4)` and black vertices in part `i - 1`.
#[derive(Debug, Clone)]
pub struct Split {
    dim: usize,
    n: usize,
    part_of: Vec<u8>,
    local_of: Vec<u32>,
    parts: [SubcubeView; 4],
}

impl Split {
    pub(crate) fn by_coordinate(g: &BalancedHypercube, j: usize) -> Split {
        let n = g.n();
        let mut part_of = Vec::with_capacity(g.vertex_count());
        let mut local_of = Vec::with_capacity(g.vertex_count());
        for v in g.vertices() {
            part_of.push(v.coord(n, j) as u8);
            let mut code = 0u32;
            for i in (0..n).filter(|&i| i != j) {
                code = code * 4 + v.coord(n, i);
            }
            local_of.push(code);
        }
        Split::assemble(g, j, part_of, local_of)
    }

    pub(crate) fn by_components(g: &BalancedHypercube) -> Result<Split> {
        let n = g.n();
        let count = g.vertex_count();
        let same_part = |a: Vertex, b: Vertex| (1..n).any(|i| a.coord(n, i) != b.coord(n, i));

        let mut component = vec![usize::MAX; count];
        let mut members: Vec<Vec<Vertex>> = Vec::new();
        for start in g.vertices() {
            if component[start.index()] != usize::MAX {
                continue;
            }
            let id = members.len();
            let mut list = Vec::new();
            let mut queue = VecDeque::from([start]);
            component[start.index()] = id;
            while let Some(x) = queue.pop_front() {
                list.push(x);
                for &y in g.neighbors(x) {
                    if same_part(x, y) && component[y.index()] == usize::MAX {
                        component[y.index()] = id;
                        queue.push_back(y);
                    }
                }
            }
            list.sort_unstable();
            members.push(list);
        }
        if members.len() != 4 {
            return Err(Error::Internal(format!(
                "BH_{n} minus dimension-0 edges has {} components, expected 4",
                members.len()
            )));
        }

        // Cyclic numbering: part 0 holds the all-zero label, part i+1 is where
        // the white vertices of part i send their dimension-0 edges.
        let mut order = vec![component[0]];
        while order.len() < 4 {
            let current = &members[*order.last().unwrap()];
            let white = current
                .iter()
                .copied()
                .find(|v| v.color(n) == Color::White)
                .ok_or_else(|| Error::Internal("component without white vertex".into()))?;
            let next = g
                .neighbors(white)
                .iter()
                .map(|&y| component[y.index()])
                .find(|&c| c != component[white.index()])
                .ok_or_else(|| Error::Internal("component without crossing edge".into()))?;
            if order.contains(&next) {
                return Err(Error::Internal("components do not form a 4-cycle".into()));
            }
            order.push(next);
        }

        let sub = BalancedHypercube::new(n - 1)?;
        let dst: Vec<Vec<(usize, u8)>> = sub
            .vertices()
            .map(|v| sub.neighbors(v).iter().map(|w| (w.index(), 0)).collect())
            .collect();
        let mut part_of = vec![0u8; count];
        let mut local_of = vec![0u32; count];
        for (part, &comp) in order.iter().enumerate() {
            let list = &members[comp];
            let position = |v: Vertex| list.binary_search(&v).ok();
            let src: Vec<Vec<(usize, u8)>> = list
                .iter()
                .map(|&x| {
                    g.neighbors(x)
                        .iter()
                        .filter_map(|&y| position(y).map(|p| (p, 0)))
                        .collect()
                })
                .collect();
            if list[0].color(n) != Color::White {
                return Err(Error::Internal("component anchor is not white".into()));
            }
            let map = find_isomorphism(&src, &dst, |_, _| true, (0, 0)).ok_or_else(|| {
                Error::Internal(format!(
                    "no isomorphism from component {part} onto BH_{}",
                    n - 1
                ))
            })?;
            for (p, &x) in list.iter().enumerate() {
                part_of[x.index()] = part as u8;
                local_of[x.index()] = map[p] as u32;
            }
        }
        let split = Split::assemble(g, 0, part_of, local_of);
        split.check_orientation(g)?;
        Ok(split)
    }

    fn assemble(g: &BalancedHypercube, dim: usize, part_of: Vec<u8>, local_of: Vec<u32>) -> Split {
        let size = g.vertex_count() / 4;
        let mut vertices = vec![vec![Vertex(0); size]; 4];
        for v in g.vertices() {
            vertices[part_of[v.index()] as usize][local_of[v.index()] as usize] = v;
        }
        let mut views = vertices.into_iter().enumerate().map(|(part, verts)| {
            let crossing = verts
                .iter()
                .map(|&v| {
                    let mut out = g
                        .neighbors(v)
                        .iter()
                        .copied()
                        .filter(|w| part_of[w.index()] != part as u8);
                    [out.next().unwrap(), out.next().unwrap()]
                })
                .collect();
            SubcubeView {
                split_dim: dim,
                part,
                vertices: verts,
                crossing,
            }
        });
        let parts = [
            views.next().unwrap(),
            views.next().unwrap(),
            views.next().unwrap(),
            views.next().unwrap(),
        ];
        Split {
            dim,
            n: g.n(),
            part_of,
            local_of,
            parts,
        }
    }

    fn check_orientation(&self, g: &BalancedHypercube) -> Result<()> {
        for v in g.vertices() {
            let expected = match g.color(v) {
                Color::White => (self.part_of(v) + 1) % 4,
                Color::Black => (self.part_of(v) + 3) % 4,
            };
            if self
                .crossing(v)
                .iter()
                .any(|&w| self.part_of(w) != expected)
            {
                return Err(Error::Internal(format!(
                    "crossing edges of {} do not reach part {expected}",
                    g.label(v)
                )));
            }
        }
        Ok(())
    }

    /// The removed dimension class.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the parts, `n - 1`.
    pub fn sub_dimension(&self) -> usize {
        self.n - 1
    }

    #[inline]
    pub fn part_of(&self, v: Vertex) -> usize {
        self.part_of[v.index()] as usize
    }

    /// `BH_{n-1}` label of `v` inside its part.
    #[inline]
    pub fn local(&self, v: Vertex) -> Vertex {
        Vertex(self.local_of[v.index()])
    }

    #[inline]
    pub fn global(&self, part: usize, local: Vertex) -> Vertex {
        self.parts[part].global(local)
    }

    pub fn view(&self, part: usize) -> &SubcubeView {
        &self.parts[part]
    }

    pub fn views(&self) -> &[SubcubeView; 4] {
        &self.parts
    }

    /// The two neighbors of `v` outside its part.
    #[inline]
    pub fn crossing(&self, v: Vertex) -> [Vertex; 2] {
        self.parts[self.part_of(v)].crossing_of_local(self.local(v))
    }

    #[inline]
    pub fn is_crossing(&self, a: Vertex, b: Vertex) -> bool {
        self.part_of(a) != self.part_of(b)
    }

    /// Part reached by the crossing edges of a vertex of `color` in `part`.
    pub fn exit_part(part: usize, color: Color) -> usize {
        match color {
            Color::White => (part + 1) % 4,
            Color::Black => (part + 3) % 4,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(g: &BalancedHypercube, vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|&v| g.label(v)).collect()
    }

    #[test]
    fn coordinate_split_of_bh2() {
        let g = BalancedHypercube::new(2).unwrap();
        let s = g.split(1).unwrap();
        for i in 0..4 {
            let view = s.view(i);
            assert_eq!(view.len(), 4);
            assert!(view.vertices().iter().all(|&v| v.coord(2, 1) == i as u32));
        }
        let origin = g.parse_vertex("00").unwrap();
        let mut cross = s.crossing(origin).to_vec();
        cross.sort();
        assert_eq!(labels(&g, &cross), ["11", "31"]);
    }

    #[test]
    fn split_rejects_dimension_zero_and_out_of_range() {
        let g = BalancedHypercube::new(2).unwrap();
        assert!(g.split(0).is_err());
        assert!(g.split(2).is_err());
        assert!(BalancedHypercube::new(1)
            .unwrap()
            .component_split_dim0()
            .is_err());
    }

    #[test]
    fn component_split_of_bh2() {
        let g = BalancedHypercube::new(2).unwrap();
        let s = g.component_split_dim0().unwrap();
        let mut part0 = s.view(0).vertices().to_vec();
        part0.sort();
        assert_eq!(labels(&g, &part0), ["00", "11", "20", "31"]);
        for view in s.views() {
            assert_eq!(view.len(), 4);
        }
    }

    #[test]
    fn parts_relabel_onto_smaller_cube() {
        for n in 2..=3 {
            let g = BalancedHypercube::new(n).unwrap();
            let sub = BalancedHypercube::new(n - 1).unwrap();
            for d in 0..n {
                let s = g.split_along(d).unwrap();
                for view in s.views() {
                    let mut induced = std::collections::BTreeSet::new();
                    for &a in view.vertices() {
                        for &b in g.neighbors(a) {
                            if s.part_of(b) == view.part() {
                                let (x, y) = (s.local(a), s.local(b));
                                induced.insert((x.min(y), x.max(y)));
                            }
                        }
                    }
                    assert_eq!(induced, sub.edge_set(), "n={n} d={d} part={}", view.part());
                }
            }
        }
    }
}
