use std::collections::VecDeque;

/// Adjacency list with an edge label (the edge dimension) on every arc.
pub type LabeledAdjacency = [Vec<(usize, u8)>];

/// Anchored backtracking search for a graph isomorphism `src -> dst`.
///
/// `anchor.0` is mapped to `anchor.1`; the remaining vertices are assigned in
/// breadth-first order from the anchor, each candidate drawn from the
/// neighbors of an already-mapped neighbor and checked against every mapped
/// neighbor. `label_ok(src_label, dst_label)` constrains which edge labels may
/// correspond. Returns `map[src] = dst`, verified to be a bijection that
/// carries the edge set of `src` exactly onto the edge set of `dst`.
pub fn find_isomorphism(
    src: &LabeledAdjacency,
    dst: &LabeledAdjacency,
    label_ok: impl Fn(u8, u8) -> bool,
    anchor: (usize, usize),
) -> Option<Vec<usize>> {
    let count = src.len();
    if count != dst.len() || count == 0 {
        return None;
    }
    let arcs = |g: &LabeledAdjacency| g.iter().map(Vec::len).sum::<usize>();
    if arcs(src) != arcs(dst) {
        return None;
    }

    let mut order = Vec::with_capacity(count);
    let mut seen = vec![false; count];
    let mut queue = VecDeque::from([anchor.0]);
    seen[anchor.0] = true;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &(y, _) in &src[x] {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    if order.len() != count {
        return None;
    }

    let mut search = Search {
        src,
        dst,
        label_ok: &label_ok,
        order,
        map: vec![usize::MAX; count],
        used: vec![false; count],
    };
    if src[anchor.0].len() != dst[anchor.1].len() {
        return None;
    }
    search.map[anchor.0] = anchor.1;
    search.used[anchor.1] = true;
    if !search.extend(1) {
        return None;
    }
    let map = search.map;
    // Exact check: every source edge lands on a destination edge with an
    // accepted label; equal arc counts then make this an edge bijection.
    for (x, list) in src.iter().enumerate() {
        for &(y, l) in list {
            let ok = dst[map[x]]
                .iter()
                .any(|&(z, m)| z == map[y] && label_ok(l, m));
            if !ok {
                return None;
            }
        }
    }
    Some(map)
}

struct Search<'a, F: Fn(u8, u8) -> bool> {
    src: &'a LabeledAdjacency,
    dst: &'a LabeledAdjacency,
    label_ok: &'a F,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<F: Fn(u8, u8) -> bool> Search<'_, F> {
    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let x = self.order[pos];
        let Some(&(parent, parent_label)) = self.src[x]
            .iter()
            .find(|&&(y, _)| self.map[y] != usize::MAX)
        else {
            return false;
        };
        let candidates: Vec<usize> = self.dst[self.map[parent]]
            .iter()
            .filter(|&&(z, m)| !self.used[z] && (self.label_ok)(parent_label, m))
            .map(|&(z, _)| z)
            .collect();
        for z in candidates {
            if self.dst[z].len() != self.src[x].len() || !self.consistent(x, z) {
                continue;
            }
            self.map[x] = z;
            self.used[z] = true;
            if self.extend(pos + 1) {
                return true;
            }
            self.map[x] = usize::MAX;
            self.used[z] = false;
        }
        false
    }

    fn consistent(&self, x: usize, z: usize) -> bool {
        self.src[x].iter().all(|&(y, l)| {
            let my = self.map[y];
            my == usize::MAX
                || self.dst[z]
                    .iter()
                    .any(|&(w, m)| w == my && (self.label_ok)(l, m))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(len: usize) -> Vec<Vec<(usize, u8)>> {
        (0..len)
            .map(|i| vec![((i + 1) % len, 0), ((i + len - 1) % len, 0)])
            .collect()
    }

    #[test]
    fn maps_cycle_onto_relabelled_cycle() {
        let a = cycle(6);
        // 0-2-4-1-3-5-0
        let perm = [0usize, 2, 4, 1, 3, 5];
        let mut b = vec![Vec::new(); 6];
        for i in 0..6 {
            let (x, y) = (perm[i], perm[(i + 1) % 6]);
            b[x].push((y, 0));
            b[y].push((x, 0));
        }
        let map = find_isomorphism(&a, &b, |_, _| true, (0, 0)).unwrap();
        for i in 0..6 {
            let j = (i + 1) % 6;
            assert!(b[map[i]].iter().any(|&(z, _)| z == map[j]));
        }
    }

    #[test]
    fn rejects_non_isomorphic() {
        let a = cycle(6);
        let mut b = cycle(3);
        b.extend(
            cycle(3)
                .into_iter()
                .map(|l| l.into_iter().map(|(y, m)| (y + 3, m)).collect()),
        );
        assert!(find_isomorphism(&a, &b, |_, _| true, (0, 0)).is_none());
    }
}
