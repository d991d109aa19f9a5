//! Connected components of segment unions.

use crate::geom::{Lift, Segment};

#[derive(Clone, Debug)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
    sets: usize,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
            sets: n,
        }
    }

    pub(crate) fn find(&mut self, mut node: usize) -> usize {
        let mut root = node;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[node] != root {
            let next = self.parent[node];
            self.parent[node] = root;
            node = next;
        }
        root
    }

    /// Returns false when both nodes were already in the same set.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.rank[a] < self.rank[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        if self.rank[a] == self.rank[b] {
            self.rank[a] += 1;
        }
        self.sets -= 1;
        true
    }

    pub(crate) fn sets(&self) -> usize {
        self.sets
    }
}

/// Axis-aligned box used only to skip pairs that cannot touch. Padded so the
/// float conversion can never reject a pair the exact test would accept.
struct Bounds {
    lo: [f64; 3],
    hi: [f64; 3],
}

impl Bounds {
    fn of<P: Lift>(s: &Segment<P>) -> Self {
        let a = s.start.lift().to_f64();
        let b = s.end.lift().to_f64();
        let mut lo = [0.0; 3];
        let mut hi = [0.0; 3];
        for k in 0..3 {
            let pad = 1e-9 * (1.0 + a[k].abs().max(b[k].abs()));
            lo[k] = a[k].min(b[k]) - pad;
            hi[k] = a[k].max(b[k]) + pad;
        }
        Self { lo, hi }
    }

    fn overlaps_yz(&self, other: &Bounds) -> bool {
        (1..3).all(|k| self.lo[k] <= other.hi[k] && other.lo[k] <= self.hi[k])
    }
}

/// Number of connected components of the union of `segments`, where two
/// segments are adjacent when they share at least one point (exact test).
pub fn count_components<P: Lift>(segments: &[Segment<P>]) -> usize {
    let bounds: Vec<Bounds> = segments.iter().map(Bounds::of).collect();
    let mut order: Vec<usize> = (0..segments.len()).collect();
    order.sort_by(|&i, &j| bounds[i].lo[0].total_cmp(&bounds[j].lo[0]));

    let mut dsu = DisjointSet::new(segments.len());
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if bounds[j].lo[0] > bounds[i].hi[0] {
                break;
            }
            if !bounds[i].overlaps_yz(&bounds[j]) || dsu.find(i) == dsu.find(j) {
                continue;
            }
            if segments[i].touches(&segments[j]) {
                dsu.union(i, j);
            }
        }
    }
    dsu.sets()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{int, Point2};

    #[test]
    fn disjoint_set_counts() {
        let mut d = DisjointSet::new(5);
        assert!(d.union(0, 1));
        assert!(d.union(3, 4));
        assert!(!d.union(1, 0));
        assert_eq!(d.sets(), 3);
        assert_eq!(d.find(4), d.find(3));
    }

    #[test]
    fn crossing_segments_join() {
        let pt = |x, y| Point2::new(int(x), int(y));
        let segs = vec![
            Segment::new(pt(0, 1), pt(4, 1)).unwrap(),
            Segment::new(pt(2, 0), pt(2, 3)).unwrap(),
            Segment::new(pt(10, 0), pt(11, 0)).unwrap(),
        ];
        assert_eq!(count_components(&segs), 2);
        assert_eq!(count_components::<Point2>(&[]), 0);
    }
}
