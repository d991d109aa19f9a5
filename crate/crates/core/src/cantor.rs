//! Corner-squares Cantor construction with retained square boundaries.
//!
//! Stage `n` holds the `4^n` corner squares of side `a^n` together with the
//! boundary segments of every square from stages `0..=n`. The squares cover
//! the Cantor dust (the singular part); the segments are the one-dimensional
//! skeleton that makes the whole set connected.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::components::count_components;
use crate::error::{Error, Result};
use crate::geom::{int, pow, rat, Point2, Rational, Segment, Segment2};

pub const DEFAULT_DEPTH_CAP: usize = 10;

/// Checks `0 < a < 1/2`, or `a = 1/2` when `allow_half` is set.
pub(crate) fn validate_scale(a: &Rational, allow_half: bool) -> Result<()> {
    let half = rat(1, 2);
    let ok = *a > Rational::zero() && (*a < half || (allow_half && *a == half));
    if ok {
        Ok(())
    } else {
        let range = if allow_half { "(0, 1/2]" } else { "(0, 1/2)" };
        Err(Error::Parameter(format!("scale a = {a} must lie in {range}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params2 {
    pub a: Rational,
    pub depth: usize,
    pub cap: usize,
}

impl Params2 {
    pub fn new(a: Rational, depth: usize) -> Result<Self> {
        Self::with_cap(a, depth, DEFAULT_DEPTH_CAP)
    }

    pub fn with_cap(a: Rational, depth: usize, cap: usize) -> Result<Self> {
        validate_scale(&a, true)?;
        if depth > cap {
            return Err(Error::Capacity(format!(
                "depth {depth} exceeds the cap of {cap}"
            )));
        }
        Ok(Self { a, depth, cap })
    }
}

/// Corner offsets per address letter: 0=SW, 1=SE, 2=NE, 3=NW, as multiples
/// of `(1 - a) * side` along x and y.
const CORNERS: [(bool, bool); 4] = [(false, false), (true, false), (true, true), (false, true)];

/// One square of the construction, addressed by its path of corner choices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub address: Vec<u8>,
    /// South-west corner.
    pub corner: Point2,
    pub side: Rational,
}

impl Cell {
    pub fn unit() -> Self {
        Self {
            address: Vec::new(),
            corner: Point2::origin(),
            side: Rational::one(),
        }
    }

    pub fn level(&self) -> usize {
        self.address.len()
    }

    pub fn children(&self, a: &Rational) -> [Cell; 4] {
        let side = &self.side * a;
        let shift = &self.side - &side;
        let mut letter = 0u8;
        CORNERS.map(|(east, north)| {
            let mut corner = self.corner.clone();
            if east {
                corner.x += &shift;
            }
            if north {
                corner.y += &shift;
            }
            let mut address = self.address.clone();
            address.push(letter);
            letter += 1;
            Cell {
                address,
                corner,
                side: side.clone(),
            }
        })
    }

    /// Corners in counterclockwise order starting at the south-west.
    pub fn vertices(&self) -> [Point2; 4] {
        let Point2 { x, y } = &self.corner;
        let (x1, y1) = (x + &self.side, y + &self.side);
        [
            Point2::new(x.clone(), y.clone()),
            Point2::new(x1.clone(), y.clone()),
            Point2::new(x1, y1.clone()),
            Point2::new(x.clone(), y1),
        ]
    }

    /// The four boundary edges in canonical form.
    pub fn edges(&self) -> [Segment2; 4] {
        let [p0, p1, p2, p3] = self.vertices();
        [
            Segment::canonical_unchecked(p0.clone(), p1.clone()),
            Segment::canonical_unchecked(p1, p2.clone()),
            Segment::canonical_unchecked(p3.clone(), p2),
            Segment::canonical_unchecked(p0, p3),
        ]
    }

    /// Closed containment of `other` in `self`.
    pub fn contains(&self, other: &Cell) -> bool {
        other.corner.x >= self.corner.x
            && other.corner.y >= self.corner.y
            && &other.corner.x + &other.side <= &self.corner.x + &self.side
            && &other.corner.y + &other.side <= &self.corner.y + &self.side
    }

    /// True when the closed squares share no point.
    pub fn disjoint_from(&self, other: &Cell) -> bool {
        &self.corner.x + &self.side < other.corner.x
            || &other.corner.x + &other.side < self.corner.x
            || &self.corner.y + &self.side < other.corner.y
            || &other.corner.y + &other.side < self.corner.y
    }

    /// True when the open squares share no point.
    pub fn interior_disjoint_from(&self, other: &Cell) -> bool {
        &self.corner.x + &self.side <= other.corner.x
            || &other.corner.x + &other.side <= self.corner.x
            || &self.corner.y + &self.side <= other.corner.y
            || &other.corner.y + &other.side <= self.corner.y
    }
}

/// All cells at one level plus every boundary segment kept so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage2 {
    pub(crate) params: Params2,
    pub(crate) level: usize,
    pub(crate) cells: Vec<Cell>,
    pub(crate) segments: BTreeSet<Segment2>,
}

impl Stage2 {
    /// The level-0 stage: the unit square and its four edges.
    pub fn initial(params: Params2) -> Self {
        let cell = Cell::unit();
        let segments = cell.edges().into_iter().collect();
        Self {
            params,
            level: 0,
            cells: vec![cell],
            segments,
        }
    }

    pub fn params(&self) -> &Params2 {
        &self.params
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn segments(&self) -> &BTreeSet<Segment2> {
        &self.segments
    }

    pub fn side(&self) -> Rational {
        pow(&self.params.a, self.level)
    }

    /// Replaces every cell by its four corner children and records their
    /// boundaries. Segments identical to an existing one are merged; partial
    /// overlaps are kept as distinct segments.
    pub fn refine(&self) -> Result<Stage2> {
        if self.level >= self.params.cap {
            return Err(Error::Capacity(format!(
                "cannot refine past level {}",
                self.params.cap
            )));
        }
        let a = &self.params.a;
        let mut cells: Vec<Cell> = self
            .cells
            .par_iter()
            .flat_map_iter(|c| c.children(a))
            .collect();
        cells.par_sort_by(|x, y| x.address.cmp(&y.address));
        let mut segments = self.segments.clone();
        for c in &cells {
            segments.extend(c.edges());
        }
        Ok(Stage2 {
            params: self.params.clone(),
            level: self.level + 1,
            cells,
            segments,
        })
    }
}

pub fn refine(stage: &Stage2) -> Result<Stage2> {
    stage.refine()
}

/// Runs the construction from the unit square to `params.depth`.
pub fn build(params: &Params2) -> Result<Stage2> {
    validate_scale(&params.a, true)?;
    if params.depth > params.cap {
        return Err(Error::Capacity(format!(
            "depth {} exceeds the cap of {}",
            params.depth, params.cap
        )));
    }
    let mut stage = Stage2::initial(params.clone());
    while stage.level < params.depth {
        stage = stage.refine()?;
    }
    Ok(stage)
}

/// `log 4 / (-log a)`, the similarity dimension of the corner-squares dust.
pub fn hausdorff_dimension(a: &Rational) -> Result<f64> {
    validate_scale(a, true)?;
    Ok(4f64.ln() / -ln_rational(a))
}

/// Natural log of a positive rational, taken as `ln p - ln q` so that small
/// scales keep full relative precision.
pub(crate) fn ln_rational(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    let p = r.numer().to_f64().unwrap_or(f64::INFINITY);
    let q = r.denom().to_f64().unwrap_or(f64::INFINITY);
    p.ln() - q.ln()
}

/// Total length of all square perimeters up to stage `n`, counted with
/// multiplicity (each stage contributes `4^k` perimeters of `4 a^k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerimeterSeries {
    pub partial_sum: Rational,
    /// `4 / (1 - 4a)`, present only when the series converges.
    pub limit: Option<Rational>,
    pub finite: bool,
}

/// Partial sum `4 * sum_{k=0}^{n} (4a)^k`. The series converges exactly when
/// `a < 1/4`; `a = 1/4` diverges linearly.
pub fn perimeter_series(a: &Rational, n: usize) -> Result<PerimeterSeries> {
    validate_scale(a, false)?;
    let ratio = int(4) * a;
    let mut term = Rational::one();
    let mut sum = Rational::zero();
    for _ in 0..=n {
        sum += &term;
        term *= &ratio;
    }
    let finite = ratio < Rational::one();
    let limit = finite.then(|| int(4) / (Rational::one() - &ratio));
    Ok(PerimeterSeries {
        partial_sum: int(4) * sum,
        limit,
        finite,
    })
}

/// The level-`n` cells; together they cover the limit dust, so this is the
/// stage-`n` approximation of the singular part.
pub fn singular_cover(stage: &Stage2) -> &[Cell] {
    &stage.cells
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub components: usize,
}

/// Components of the retained boundary skeleton.
pub fn connectivity(stage: &Stage2) -> Connectivity {
    segment_components(&stage.segments)
}

/// Components of an arbitrary set of planar segments.
pub fn segment_components(segments: &BTreeSet<Segment2>) -> Connectivity {
    let segs: Vec<Segment2> = segments.iter().cloned().collect();
    Connectivity {
        components: count_components(&segs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::union_length;

    fn stage(a: Rational, depth: usize) -> Stage2 {
        build(&Params2::new(a, depth).unwrap()).unwrap()
    }

    #[test]
    fn first_refinement_places_corner_squares() {
        let s = stage(rat(1, 4), 1);
        let corners: Vec<Point2> = s.cells().iter().map(|c| c.corner.clone()).collect();
        assert_eq!(
            corners,
            vec![
                Point2::from_ratios((0, 1), (0, 1)),
                Point2::from_ratios((3, 4), (0, 1)),
                Point2::from_ratios((3, 4), (3, 4)),
                Point2::from_ratios((0, 1), (3, 4)),
            ]
        );
        assert!(s.cells().iter().all(|c| c.side == rat(1, 4)));
    }

    #[test]
    fn depth_zero_is_the_unit_square() {
        let s = stage(rat(1, 3), 0);
        assert_eq!(s.cells(), &[Cell::unit()]);
        assert_eq!(s.segments().len(), 4);
        assert_eq!(singular_cover(&s), &[Cell::unit()]);
    }

    #[test]
    fn extreme_cells_at_depth_two() {
        let s = stage(rat(1, 3), 2);
        assert_eq!(s.cells().len(), 16);
        assert_eq!(s.cells()[0].corner, Point2::origin());
        let ne = s.cells().iter().find(|c| c.address == [2, 2]).unwrap();
        assert_eq!(ne.corner, Point2::from_ratios((8, 9), (8, 9)));
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(Params2::new(int(0), 1), Err(Error::Parameter(_))));
        assert!(matches!(Params2::new(rat(3, 5), 1), Err(Error::Parameter(_))));
        assert!(Params2::new(rat(1, 2), 1).is_ok());
        assert!(matches!(Params2::new(rat(1, 3), 11), Err(Error::Capacity(_))));
        let capped = build(&Params2::with_cap(rat(1, 3), 2, 2).unwrap()).unwrap();
        assert!(matches!(capped.refine(), Err(Error::Capacity(_))));
        assert!(matches!(perimeter_series(&rat(1, 2), 1), Err(Error::Parameter(_))));
        assert!(hausdorff_dimension(&rat(-1, 3)).is_err());
    }

    #[test]
    fn refine_leaves_input_untouched() {
        let s = stage(rat(1, 5), 1);
        let before = s.clone();
        let t = refine(&s).unwrap();
        assert_eq!(s, before);
        assert_eq!(t.level(), 2);
        assert_eq!(t.cells().len(), 16);
    }

    #[test]
    fn half_scale_tiles_the_square() {
        let s = stage(rat(1, 2), 2);
        let area: Rational = s.cells().iter().map(|c| &c.side * &c.side).sum();
        assert_eq!(area, int(1));
        for (i, x) in s.cells().iter().enumerate() {
            for y in &s.cells()[i + 1..] {
                assert!(x.interior_disjoint_from(y));
            }
        }
    }

    #[test]
    fn dimension_values() {
        assert!((hausdorff_dimension(&rat(1, 2)).unwrap() - 2.0).abs() < 1e-12);
        assert!((hausdorff_dimension(&rat(1, 4)).unwrap() - 1.0).abs() < 1e-12);
        // ln 4 / ln 5 from mpmath at 30 digits: 0.861353116146786101340213...
        assert!((hausdorff_dimension(&rat(1, 5)).unwrap() - 0.861_353_116_146_786_1).abs() < 1e-14);
    }

    #[test]
    fn perimeter_series_examples() {
        let s = perimeter_series(&rat(1, 5), 1).unwrap();
        assert_eq!(s.partial_sum, rat(36, 5));
        assert_eq!(s.limit, Some(int(20)));
        assert!(s.finite);
        assert!(!perimeter_series(&rat(3, 10), 4).unwrap().finite);
        for n in 0..6 {
            let q = perimeter_series(&rat(1, 4), n).unwrap();
            assert!(!q.finite);
            assert_eq!(q.limit, None);
            assert_eq!(q.partial_sum, int(4 * (n as i64 + 1)));
        }
    }

    #[test]
    fn union_is_shorter_than_perimeter_sum() {
        let s = stage(rat(1, 5), 1);
        let union = union_length(s.segments()).unwrap();
        assert_eq!(union, rat(28, 5));
        assert!(union < perimeter_series(&rat(1, 5), 1).unwrap().partial_sum);
    }

    #[test]
    fn skeleton_is_connected() {
        for a in [rat(1, 5), rat(1, 4), rat(1, 3), rat(2, 5)] {
            for depth in 0..4 {
                assert_eq!(connectivity(&stage(a.clone(), depth)).components, 1);
            }
        }
    }

    #[test]
    fn two_separate_squares_form_two_components() {
        let mut far = Cell::unit();
        far.corner = Point2::new(int(3), int(0));
        let segs: BTreeSet<Segment2> = Cell::unit().edges().into_iter().chain(far.edges()).collect();
        assert_eq!(segment_components(&segs).components, 2);
    }
}
