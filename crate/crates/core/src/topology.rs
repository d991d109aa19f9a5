//! Winding numbers of loops and index vectors against complement pieces.
//!
//! A loop in the plane minus finitely many hole points induces a circle map
//! per hole; its degree is the winding number. Two loops have the same index
//! class at a given stage when all those winding numbers agree. That is the
//! whole claim: nothing here reasons about the limit set.

use crate::error::{Error, Result};
use crate::geom::{orient2, point_in_polygon, Location, Loop, Point2};
use crate::planar::PieceSet;

/// Exact winding number of `l` about `p` by signed crossings of the
/// rightward horizontal ray. An edge counts only when it strictly straddles
/// the ray line under the half-open rule (upward edges include their lower
/// endpoint, downward edges their upper one), so vertices on the ray are
/// counted once.
pub fn winding_number(l: &Loop, p: &Point2) -> Result<i64> {
    if l.on_loop(p) {
        return Err(Error::IndeterminateWinding(p.to_string()));
    }
    let mut wn = 0i64;
    for (a, b) in l.edges() {
        if a.y <= p.y {
            if b.y > p.y && orient2(a, b, p) > num_traits::Zero::zero() {
                wn += 1;
            }
        } else if b.y <= p.y && orient2(a, b, p) < num_traits::Zero::zero() {
            wn -= 1;
        }
    }
    Ok(wn)
}

/// One interior point per bounded complement piece.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HoleSet {
    pub representatives: Vec<Point2>,
    pub labels: Vec<String>,
}

impl HoleSet {
    pub fn new(representatives: Vec<Point2>, labels: Vec<String>) -> Result<Self> {
        if representatives.len() != labels.len() {
            return Err(Error::Parameter(format!(
                "{} representatives but {} labels",
                representatives.len(),
                labels.len()
            )));
        }
        Ok(Self {
            representatives,
            labels,
        })
    }

    /// Centroids of all removed pieces, in the piece set's canonical order.
    /// Each centroid is checked to lie strictly inside its piece.
    pub fn from_pieces(ps: &PieceSet) -> Result<Self> {
        let mut representatives = Vec::with_capacity(ps.removed().len());
        let mut labels = Vec::with_capacity(ps.removed().len());
        for piece in ps.removed() {
            let c = piece.centroid();
            if point_in_polygon(&piece.boundary, &c)? != Location::Inside {
                return Err(Error::UnsupportedGeometry(format!(
                    "centroid {c} is not interior to piece {}",
                    piece.label()
                )));
            }
            representatives.push(c);
            labels.push(piece.label());
        }
        Ok(Self {
            representatives,
            labels,
        })
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IndexVector(pub Vec<i64>);

impl IndexVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn negated(&self) -> IndexVector {
        IndexVector(self.0.iter().map(|e| -e).collect())
    }
}

pub fn index_vector(l: &Loop, holes: &HoleSet) -> Result<IndexVector> {
    holes
        .representatives
        .iter()
        .map(|p| winding_number(l, p))
        .collect::<Result<Vec<_>>>()
        .map(IndexVector)
}

pub fn reverse_orientation(l: &Loop) -> Loop {
    l.reversed()
}

/// Equality of every circle-map index at this stage.
pub fn same_index_class(l1: &Loop, l2: &Loop, holes: &HoleSet) -> Result<bool> {
    Ok(index_vector(l1, holes)? == index_vector(l2, holes)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{int, rat};
    use crate::planar::{build_planar, PlanarVariant};

    fn square(x0: i64, y0: i64, side: i64) -> Loop {
        let p = |x, y| Point2::new(int(x), int(y));
        Loop::new(vec![p(x0, y0), p(x0 + side, y0), p(x0 + side, y0 + side), p(x0, y0 + side)]).unwrap()
    }

    fn centre() -> Point2 {
        Point2::new(rat(1, 2), rat(1, 2))
    }

    /// Angle-summation reference in floating point.
    fn angle_winding(l: &Loop, p: &Point2) -> f64 {
        let [px, py] = p.to_f64();
        let total: f64 = l
            .edges()
            .map(|(a, b)| {
                let [ax, ay] = a.to_f64();
                let [bx, by] = b.to_f64();
                let (ux, uy, vx, vy) = (ax - px, ay - py, bx - px, by - py);
                (ux * vy - uy * vx).atan2(ux * vx + uy * vy)
            })
            .sum();
        total / std::f64::consts::TAU
    }

    #[test]
    fn unit_square_windings() {
        let sq = square(0, 0, 1);
        assert_eq!(winding_number(&sq, &centre()).unwrap(), 1);
        assert_eq!(winding_number(&sq.reversed(), &centre()).unwrap(), -1);
        let twice = sq.repeated(2).unwrap();
        assert_eq!(twice.len(), 8);
        assert_eq!(winding_number(&twice, &centre()).unwrap(), 2);
        assert!((angle_winding(&twice, &centre()) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn point_on_loop_is_indeterminate() {
        let sq = square(0, 0, 1);
        assert!(matches!(
            winding_number(&sq, &Point2::new(int(1), rat(1, 3))),
            Err(Error::IndeterminateWinding(_))
        ));
        assert!(matches!(
            winding_number(&sq, &Point2::new(int(0), int(0))),
            Err(Error::IndeterminateWinding(_))
        ));
    }

    #[test]
    fn carpet_index_vectors() {
        let ps = build_planar(PlanarVariant::Carpet, 1).unwrap();
        let holes = HoleSet::from_pieces(&ps).unwrap();
        let outer = PlanarVariant::Carpet.base_tile().boundary;
        assert_eq!(index_vector(&outer, &holes).unwrap(), IndexVector(vec![1]));

        let ps = build_planar(PlanarVariant::Carpet, 2).unwrap();
        let holes = HoleSet::from_pieces(&ps).unwrap();
        assert_eq!(holes.len(), 9);
        let first_hole = &ps.removed()[0].boundary;
        let iv = index_vector(first_hole, &holes).unwrap();
        assert_eq!(iv.0, vec![1, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(index_vector(first_hole, &HoleSet::default()).unwrap(), IndexVector(vec![]));
    }

    #[test]
    fn reversal_negates_index_vector() {
        // holes at (1/2,1/2) inside once, (5,5) outside, (3/2,1/2) inside twice
        let base = Point2::new(int(0), int(0));
        let small = square(0, 0, 1);
        let wide = Loop::new(vec![
            base.clone(),
            Point2::new(int(2), int(0)),
            Point2::new(int(2), int(1)),
            Point2::new(int(0), int(1)),
        ])
        .unwrap();
        let lp = wide.concat_at_base(&wide).unwrap().concat_at_base(&small.reversed().rotated(3)).unwrap();
        let holes = HoleSet::new(
            vec![centre(), Point2::new(int(5), int(5)), Point2::new(rat(3, 2), rat(1, 2))],
            vec!["a".into(), "b".into(), "c".into()],
        )
        .unwrap();
        let iv = index_vector(&lp, &holes).unwrap();
        assert_eq!(iv.0, vec![1, 0, 2]);
        let rev = index_vector(&reverse_orientation(&lp), &holes).unwrap();
        assert_eq!(rev.0, vec![-1, 0, -2]);
        assert_eq!(rev, iv.negated());
        assert_eq!(reverse_orientation(&reverse_orientation(&lp)), lp);
    }

    #[test]
    fn index_classes() {
        let sq = square(0, 0, 3);
        let holes = HoleSet::new(vec![Point2::new(int(1), int(1))], vec!["h".into()]).unwrap();
        assert!(same_index_class(&sq, &sq.rotated(2), &holes).unwrap());
        assert!(!same_index_class(&sq, &sq.reversed(), &holes).unwrap());
        let inner = Loop::new(vec![
            Point2::new(rat(1, 2), rat(1, 2)),
            Point2::new(rat(3, 2), rat(1, 2)),
            Point2::new(rat(3, 2), rat(3, 2)),
            Point2::new(rat(1, 2), rat(3, 2)),
        ])
        .unwrap();
        assert!(same_index_class(&sq, &inner, &holes).unwrap());
    }

    #[test]
    fn mismatched_labels_rejected() {
        assert!(HoleSet::new(vec![centre()], vec![]).is_err());
    }
}
