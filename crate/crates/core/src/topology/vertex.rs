use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Adds a signed offset to a base-4 digit.
///
/// Every coordinate update in the crate goes through here so that `a - 1`
/// on digit 0 wraps to 3 rather than underflowing.
#[inline]
pub fn add_mod4(digit: u32, delta: i32) -> u32 {
    (digit as i32 + delta).rem_euclid(4) as u32
}

/// A vertex of `BH_n`, packed as a base-4 integer with the inner index `a_0`
/// as the most significant digit.
///
/// Numeric order of the packed code equals lexicographic order of the
/// coordinate tuple, so sorting vertices sorts labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex(pub u32);

impl Vertex {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Digit `i` of the label (`i = 0` is the inner index).
    #[inline]
    pub fn coord(self, n: usize, i: usize) -> u32 {
        debug_assert!(i < n);
        (self.0 >> (2 * (n - 1 - i))) & 3
    }

    /// Returns the label with digit `i` replaced by `value`.
    #[inline]
    pub fn with_coord(self, n: usize, i: usize, value: u32) -> Vertex {
        let shift = 2 * (n - 1 - i);
        Vertex((self.0 & !(3 << shift)) | ((value & 3) << shift))
    }

    pub fn from_coords(coords: &[u32]) -> Result<Vertex> {
        if coords.is_empty() {
            return Err(Error::InvalidInput("empty vertex label".into()));
        }
        let mut code = 0u32;
        for &c in coords {
            if c > 3 {
                return Err(Error::InvalidInput(format!("coordinate {c} outside 0..=3")));
            }
            code = code * 4 + c;
        }
        Ok(Vertex(code))
    }

    pub fn coords(self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.coord(n, i)).collect()
    }

    #[inline]
    pub fn color(self, n: usize) -> Color {
        if self.coord(n, 0).is_multiple_of(2) {
            Color::White
        } else {
            Color::Black
        }
    }

    /// The vertex whose inner index differs by 2; it has the same neighborhood.
    #[inline]
    pub fn twin(self, n: usize) -> Vertex {
        self.with_coord(n, 0, add_mod4(self.coord(n, 0), 2))
    }

    /// Text form: exactly `n` base-4 digits, inner index first.
    pub fn label(self, n: usize) -> String {
        (0..n)
            .map(|i| char::from_digit(self.coord(n, i), 4).unwrap())
            .collect()
    }

    pub fn parse(text: &str, n: usize) -> Result<Vertex> {
        let text = text.trim();
        if text.chars().count() != n {
            return Err(Error::InvalidInput(format!(
                "vertex '{text}' must have exactly {n} base-4 digits"
            )));
        }
        let digits = text
            .chars()
            .map(|c| {
                c.to_digit(4).ok_or_else(|| {
                    Error::InvalidInput(format!("bad digit '{c}' in vertex '{text}'"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Vertex::from_coords(&digits)
    }
}

/// Bipartition class: white iff the inner index is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// An undirected edge in canonical form: the smaller endpoint is stored first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
    dim: u8,
}

impl Edge {
    /// Builds the canonical form. Adjacency is not checked here; use
    /// [`crate::BalancedHypercube::edge`] for a checked constructor.
    pub(crate) fn new_unchecked(a: Vertex, b: Vertex, dim: usize) -> Edge {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Edge {
            lo,
            hi,
            dim: dim as u8,
        }
    }

    #[inline]
    pub fn lo(&self) -> Vertex {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> Vertex {
        self.hi
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    #[inline]
    pub fn has_endpoint(&self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// Same endpoints regardless of order.
    #[inline]
    pub fn joins(&self, a: Vertex, b: Vertex) -> bool {
        (self.lo == a && self.hi == b) || (self.lo == b && self.hi == a)
    }

    pub fn label(&self, n: usize) -> String {
        format!("{}-{}", self.lo.label(n), self.hi.label(n))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod4_wraps_both_ways() {
        assert_eq!(add_mod4(0, -1), 3);
        assert_eq!(add_mod4(3, 1), 0);
        assert_eq!(add_mod4(1, 2), 3);
        assert_eq!(add_mod4(2, -6), 0);
    }

    #[test]
    fn label_round_trip() {
        let v = Vertex::parse("302", 3).unwrap();
        assert_eq!(v.coords(3), vec![3, 0, 2]);
        assert_eq!(v.label(3), "302");
        assert_eq!(v.coord(3, 0), 3);
        assert_eq!(v.color(3), Color::Black);
    }

    #[test]
    fn parse_rejects_malformed_labels() {
        assert!(Vertex::parse("0", 2).is_err());
        assert!(Vertex::parse("04", 2).is_err());
        assert!(Vertex::parse("0a", 2).is_err());
        assert!(Vertex::from_coords(&[]).is_err());
        assert!(Vertex::from_coords(&[1, 5]).is_err());
    }

    #[test]
    fn twin_is_fixed_point_free_involution() {
        for code in 0..64 {
            let v = Vertex(code);
            assert_ne!(v.twin(3), v);
            assert_eq!(v.twin(3).twin(3), v);
            assert_eq!(v.twin(3).color(3), v.color(3));
        }
    }

    #[test]
    fn lexicographic_order_matches_code_order() {
        let a = Vertex::parse("03", 2).unwrap();
        let b = Vertex::parse("10", 2).unwrap();
        assert!(a < b);
    }

    #[test]
    fn edge_canonical_order() {
        let a = Vertex(5);
        let b = Vertex(2);
        let e = Edge::new_unchecked(a, b, 0);
        assert_eq!(e.lo(), b);
        assert_eq!(e, Edge::new_unchecked(b, a, 0));
        assert!(e.joins(a, b) && e.joins(b, a));
    }
}
