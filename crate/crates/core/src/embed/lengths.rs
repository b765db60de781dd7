use serde::{Deserialize, Serialize};

/// Path lengths `(ℓ0, ℓ1, ℓ2, ℓ3)` spent inside the four parts of a split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LengthSplit(pub [usize; 4]);

impl LengthSplit {
    pub fn parts(&self) -> [usize; 4] {
        self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

/// The subcases whose cycle is assembled from four part paths plus four
/// crossing edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplitRule {
    /// Arc of length `h - 1` in the far part.
    Sub121,
    /// Arc of the given odd length `L <= h - 3` in the far part.
    Sub122 {
        arc: usize,
    },
    Sub13,
    Sub21213,
    Sub21214,
    Sub21223,
    Sub21224,
    Sub223,
}

pub type Row = [(usize, usize); 4];

/// Admissible odd ranges per part, in table order.
pub fn rows(rule: SplitRule, q: usize) -> Vec<Row> {
    let h = q / 2;
    let top = q - 1;
    match rule {
        SplitRule::Sub121 => vec![
            [(h - 5, h - 5), (1, 1), (h + 1, h + 1), (1, 1)],
            [(h - 5, h - 5), (5, top), (h - 1, h - 1), (1, 1)],
            [(h - 5, h - 5), (5, top), (h - 1, h - 1), (5, top)],
        ],
        SplitRule::Sub122 { arc } => vec![
            [(h - 5, h - 5), (5, top), (arc, arc), (1, 1)],
            [(h - 5, h - 5), (5, top), (arc, arc), (5, top)],
        ],
        SplitRule::Sub13 => vec![
            [(top, top), (5, top), (top, top), (1, 1)],
            [(top, top), (5, top), (top, top), (5, top)],
        ],
        SplitRule::Sub21213 => vec![
            [(1, 1), (3, top), (1, 1), (1, 1)],
            [(1, 1), (3, top), (3, top), (1, 1)],
            [(1, 1), (3, top), (3, top), (3, top)],
        ],
        SplitRule::Sub21214 => vec![[(top, top), (3, top), (3, top), (3, top)]],
        SplitRule::Sub21223 => vec![[(1, 1), (5, 5), (top, top), (q - 9, top)]],
        SplitRule::Sub21224 => vec![[(5, top), (top, top), (top, top), (3, top)]],
        SplitRule::Sub223 => vec![
            [(3, top), (1, 1), (1, 1), (1, 1)],
            [(3, top), (3, top), (1, 1), (1, 1)],
            [(3, top), (3, top), (3, top), (1, 1)],
            [(3, top), (3, top), (3, top), (3, top)],
        ],
    }
}

const FILL_ORDER: [usize; 4] = [0, 2, 1, 3];

/// Picks part lengths summing to `len - 4` (four crossing edges close the
/// cycle). Rows are scanned in table order; within a row the parts are
/// filled in the order ℓ0, ℓ2, ℓ1, ℓ3, each taking the largest odd value
/// that keeps the rest feasible.
pub fn choose_length_split(len: usize, rule: SplitRule, q: usize) -> Option<LengthSplit> {
    if len < 4 || q < 16 {
        return None;
    }
    let target = len - 4;
    rows(rule, q)
        .into_iter()
        .find_map(|row| fill_row(&row, target))
}

fn fill_row(row: &Row, target: usize) -> Option<LengthSplit> {
    let mut out = [0usize; 4];
    let mut remaining = target;
    for (k, &slot) in FILL_ORDER.iter().enumerate() {
        let rest = &FILL_ORDER[k + 1..];
        let rest_lo: usize = rest.iter().map(|&i| row[i].0).sum();
        let rest_hi: usize = rest.iter().map(|&i| row[i].1).sum();
        let (lo, hi) = row[slot];
        let mut pick = None;
        let mut x = if hi % 2 == 1 {
            hi
        } else {
            hi.saturating_sub(1)
        };
        while x >= lo && x >= 1 {
            if x <= remaining {
                let left = remaining - x;
                if left >= rest_lo && left <= rest_hi && left % 2 == rest.len() % 2 {
                    pick = Some(x);
                    break;
                }
            }
            if x < 2 {
                break;
            }
            x -= 2;
        }
        let x = pick?;
        out[slot] = x;
        remaining -= x;
    }
    (remaining == 0).then_some(LengthSplit(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_expansion_in_sub223() {
        let s = choose_length_split(10, SplitRule::Sub223, 16).unwrap();
        assert_eq!(s.parts(), [3, 1, 1, 1]);
    }

    #[test]
    fn full_length_in_sub13() {
        let s = choose_length_split(64, SplitRule::Sub13, 16).unwrap();
        assert_eq!(s.parts(), [15, 15, 15, 15]);
    }

    #[test]
    fn every_advertised_length_is_covered() {
        for q in [16usize, 64] {
            let h = q / 2;
            let cases: Vec<(SplitRule, Vec<usize>)> = vec![
                (SplitRule::Sub121, (q + 2..=2 * q + 6).step_by(2).collect()),
                (SplitRule::Sub13, (2 * q + 8..=4 * q).step_by(2).collect()),
                (SplitRule::Sub21213, (10..=3 * q + 2).step_by(2).collect()),
                (
                    SplitRule::Sub21214,
                    (3 * q + 4..=4 * q).step_by(2).collect(),
                ),
                (
                    SplitRule::Sub21223,
                    (2 * q..=2 * q + 8).step_by(2).collect(),
                ),
                (
                    SplitRule::Sub21224,
                    (2 * q + 10..=4 * q).step_by(2).collect(),
                ),
                (SplitRule::Sub223, (10..=4 * q).step_by(2).collect()),
            ];
            for (rule, lens) in cases {
                for len in lens {
                    let s = choose_length_split(len, rule, q)
                        .unwrap_or_else(|| panic!("{rule:?} q={q} len={len}"));
                    assert_eq!(s.sum() + 4, len);
                    assert!(s.parts().iter().all(|x| x % 2 == 1));
                }
            }
            for arc in (1..=h - 3).step_by(2) {
                for len in (q + 2..=2 * q + 6).step_by(2) {
                    let s = choose_length_split(len, SplitRule::Sub122 { arc }, q)
                        .unwrap_or_else(|| panic!("Sub122 arc={arc} len={len}"));
                    assert_eq!(s.sum() + 4, len);
                }
            }
        }
    }
}
