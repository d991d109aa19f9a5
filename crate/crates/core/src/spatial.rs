//! Spatial constructions whose completion attaches two-dimensional pieces
//! bounded by loops of the one-dimensional skeleton.
//!
//! `CubeWireframe` keeps the 8 corner cubes of relative side `a` and all cube
//! edges of every level; its pieces are squares. `TetraGasket` keeps the 4
//! half-scale corner tetrahedra; its pieces are triangles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::cantor::{validate_scale, Connectivity};
use crate::components::count_components;
use crate::error::{Error, Result};
use crate::geom::{int, rat, segment_covered, Loop, Point2, Point3, Rational, Segment, Segment3};

pub const CUBE_DEPTH_CAP: usize = 4;
pub const TETRA_DEPTH_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpatialVariant {
    CubeWireframe { a: Rational },
    TetraGasket,
}

impl SpatialVariant {
    pub fn cube(a: Rational) -> Result<Self> {
        validate_scale(&a, false)?;
        Ok(SpatialVariant::CubeWireframe { a })
    }

    pub fn name(&self) -> &'static str {
        match self {
            SpatialVariant::CubeWireframe { .. } => "cube_wireframe",
            SpatialVariant::TetraGasket => "tetra_gasket",
        }
    }

    pub fn default_cap(&self) -> usize {
        match self {
            SpatialVariant::CubeWireframe { .. } => CUBE_DEPTH_CAP,
            SpatialVariant::TetraGasket => TETRA_DEPTH_CAP,
        }
    }

    pub fn branching(&self) -> usize {
        match self {
            SpatialVariant::CubeWireframe { .. } => 8,
            SpatialVariant::TetraGasket => 4,
        }
    }

    pub fn contraction(&self) -> Rational {
        match self {
            SpatialVariant::CubeWireframe { a } => a.clone(),
            SpatialVariant::TetraGasket => rat(1, 2),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            SpatialVariant::CubeWireframe { a } => validate_scale(a, false),
            SpatialVariant::TetraGasket => Ok(()),
        }
    }

    pub fn base_cell(&self) -> Cell3 {
        match self {
            SpatialVariant::CubeWireframe { .. } => Cell3::cube(Vec::new(), &Point3::origin(), &Rational::one()),
            SpatialVariant::TetraGasket => {
                let (o, l) = (Rational::zero(), Rational::one());
                Cell3 {
                    address: Vec::new(),
                    vertices: vec![
                        Point3::new(o.clone(), o.clone(), o.clone()),
                        Point3::new(l.clone(), o.clone(), o.clone()),
                        Point3::new(o.clone(), l.clone(), o.clone()),
                        Point3::new(o.clone(), o, l),
                    ],
                }
            }
        }
    }
}

const CUBE_EDGES: [(usize, usize); 12] = [
    (0, 1), (2, 3), (4, 5), (6, 7),
    (0, 2), (1, 3), (4, 6), (5, 7),
    (0, 4), (1, 5), (2, 6), (3, 7),
];

// Vertex index bits: x = 1, y = 2, z = 4. Each face is a 4-cycle.
const CUBE_FACES: [[usize; 4]; 6] = [
    [0, 2, 6, 4], [1, 3, 7, 5],
    [0, 4, 5, 1], [2, 6, 7, 3],
    [0, 1, 3, 2], [4, 5, 7, 6],
];

const TETRA_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
const TETRA_FACES: [[usize; 3]; 4] = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]];

/// A cube (8 vertices indexed by coordinate bits) or a tetrahedron
/// (4 vertices), addressed by its path of child choices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell3 {
    pub address: Vec<u8>,
    pub vertices: Vec<Point3>,
}

impl Cell3 {
    fn cube(address: Vec<u8>, corner: &Point3, side: &Rational) -> Self {
        let vertices = (0..8)
            .map(|bits| {
                let step = |bit: usize| if bits & bit != 0 { side.clone() } else { Rational::zero() };
                corner.add(&Point3::new(step(1), step(2), step(4)))
            })
            .collect();
        Self { address, vertices }
    }

    pub fn is_cube(&self) -> bool {
        self.vertices.len() == 8
    }

    pub fn level(&self) -> usize {
        self.address.len()
    }

    fn children(&self, variant: &SpatialVariant) -> Vec<Cell3> {
        let child_address = |letter: usize| {
            let mut address = self.address.clone();
            address.push(letter as u8);
            address
        };
        match variant {
            SpatialVariant::CubeWireframe { a } => {
                let corner = &self.vertices[0];
                let side = &self.vertices[1].x - &corner.x;
                let child_side = &side * a;
                let shift = &side - &child_side;
                (0..8)
                    .map(|bits| {
                        let step = |bit: usize| if bits & bit != 0 { shift.clone() } else { Rational::zero() };
                        let c = corner.add(&Point3::new(step(1), step(2), step(4)));
                        Cell3::cube(child_address(bits), &c, &child_side)
                    })
                    .collect()
            }
            SpatialVariant::TetraGasket => (0..4)
                .map(|i| Cell3 {
                    address: child_address(i),
                    vertices: (0..4)
                        .map(|j| {
                            if i == j {
                                self.vertices[i].clone()
                            } else {
                                self.vertices[i].midpoint(&self.vertices[j])
                            }
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn edges(&self) -> Vec<Segment3> {
        let pairs: &[(usize, usize)] = if self.is_cube() { &CUBE_EDGES } else { &TETRA_EDGES };
        pairs
            .iter()
            .map(|&(i, j)| Segment::canonical_unchecked(self.vertices[i].clone(), self.vertices[j].clone()))
            .collect()
    }

    pub fn faces(&self) -> Vec<Face3> {
        let level = self.level();
        let build = |idx: &[usize]| Face3::new(idx.iter().map(|&i| self.vertices[i].clone()).collect(), level);
        if self.is_cube() {
            CUBE_FACES.iter().map(|f| build(f)).collect()
        } else {
            TETRA_FACES.iter().map(|f| build(f)).collect()
        }
    }

    /// Every vertex of `other` lies in the closed convex hull of `self`.
    pub fn contains(&self, other: &Cell3) -> bool {
        if self.is_cube() {
            let lo = &self.vertices[0];
            let hi = &self.vertices[7];
            other.vertices.iter().all(|p| {
                p.coords().iter().zip(lo.coords()).zip(hi.coords()).all(|((c, l), h)| *c >= l && *c <= h)
            })
        } else {
            other.vertices.iter().all(|p| in_tetrahedron(&self.vertices, p))
        }
    }
}

fn in_tetrahedron(t: &[Point3], p: &Point3) -> bool {
    let det = |a: &Point3, b: &Point3, c: &Point3, d: &Point3| b.sub(a).cross(&c.sub(a)).dot(&d.sub(a));
    let full = det(&t[0], &t[1], &t[2], &t[3]);
    let parts = [
        det(p, &t[1], &t[2], &t[3]),
        det(&t[0], p, &t[2], &t[3]),
        det(&t[0], &t[1], p, &t[3]),
        det(&t[0], &t[1], &t[2], p),
    ];
    parts.iter().all(|d| d.is_zero() || d.is_positive() == full.is_positive())
}

/// A planar square or triangle attached to the skeleton.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face3 {
    pub boundary: Vec<Point3>,
    pub birth_level: usize,
    /// Square of the area; kept rational so comparisons stay exact.
    pub squared_area: Rational,
}

impl Face3 {
    pub fn new(boundary: Vec<Point3>, birth_level: usize) -> Self {
        let n = twice_vector_area(&boundary);
        let squared_area = n.dot(&n) / int(4);
        Self {
            boundary,
            birth_level,
            squared_area,
        }
    }

    pub fn area(&self) -> f64 {
        crate::geom::rational_to_f64(&self.squared_area).sqrt()
    }

    pub fn edges(&self) -> Vec<Segment3> {
        let n = self.boundary.len();
        (0..n)
            .map(|i| Segment::canonical_unchecked(self.boundary[i].clone(), self.boundary[(i + 1) % n].clone()))
            .collect()
    }

    pub fn translated(&self, v: &Point3) -> Face3 {
        Face3 {
            boundary: self.boundary.iter().map(|p| p.add(v)).collect(),
            birth_level: self.birth_level,
            squared_area: self.squared_area.clone(),
        }
    }

    pub fn is_planar(&self) -> bool {
        let n = twice_vector_area(&self.boundary);
        let o = &self.boundary[0];
        self.boundary.iter().all(|p| p.sub(o).dot(&n).is_zero())
    }

    /// Projects the face along its dominant normal axis. Returns the planar
    /// loop and the projected vertex centroid, an interior point.
    pub fn project_to_loop(&self) -> Result<(Loop, Point2)> {
        let n = twice_vector_area(&self.boundary);
        let [nx, ny, nz] = n.coords().map(|c| c.abs());
        let drop = if nx >= ny && nx >= nz {
            0
        } else if ny >= nz {
            1
        } else {
            2
        };
        if n.coords()[drop].is_zero() {
            return Err(Error::MalformedLoop("face has zero area".into()));
        }
        let project = |p: &Point3| {
            let c = p.coords();
            match drop {
                0 => Point2::new(c[1].clone(), c[2].clone()),
                1 => Point2::new(c[2].clone(), c[0].clone()),
                _ => Point2::new(c[0].clone(), c[1].clone()),
            }
        };
        let l = Loop::new(self.boundary.iter().map(project).collect())?;
        let centroid = l.vertex_centroid();
        Ok((l, centroid))
    }
}

fn twice_vector_area(boundary: &[Point3]) -> Point3 {
    let mut acc = Point3::origin();
    for (i, p) in boundary.iter().enumerate() {
        acc = acc.add(&p.cross(&boundary[(i + 1) % boundary.len()]));
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage3 {
    pub(crate) variant: SpatialVariant,
    pub(crate) level: usize,
    pub(crate) cells: Vec<Cell3>,
    pub(crate) skeleton: BTreeSet<Segment3>,
    pub(crate) pieces: Vec<Face3>,
}

impl Stage3 {
    pub fn variant(&self) -> &SpatialVariant {
        &self.variant
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn cells(&self) -> &[Cell3] {
        &self.cells
    }

    pub fn skeleton(&self) -> &BTreeSet<Segment3> {
        &self.skeleton
    }

    /// Faces of every cell of every level, grouped by level in address order.
    pub fn pieces(&self) -> &[Face3] {
        &self.pieces
    }
}

pub fn build_spatial(variant: &SpatialVariant, depth: usize) -> Result<Stage3> {
    build_spatial_with_cap(variant, depth, variant.default_cap())
}

pub fn build_spatial_with_cap(variant: &SpatialVariant, depth: usize, cap: usize) -> Result<Stage3> {
    variant.validate()?;
    if depth > cap {
        return Err(Error::Capacity(format!(
            "{} depth {depth} exceeds the cap of {cap}",
            variant.name()
        )));
    }
    let base = variant.base_cell();
    let mut skeleton: BTreeSet<Segment3> = base.edges().into_iter().collect();
    let mut pieces = base.faces();
    let mut cells = vec![base];
    for _ in 0..depth {
        let mut next: Vec<Cell3> = cells.par_iter().flat_map_iter(|c| c.children(variant)).collect();
        next.par_sort_by(|x, y| x.address.cmp(&y.address));
        let faces: Vec<Vec<Face3>> = next.par_iter().map(Cell3::faces).collect();
        for c in &next {
            skeleton.extend(c.edges());
        }
        pieces.extend(faces.into_iter().flatten());
        cells = next;
    }
    Ok(Stage3 {
        variant: variant.clone(),
        level: depth,
        cells,
        skeleton,
        pieces,
    })
}

/// Exact sum of rational multiples of square roots of squarefree integers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Surd {
    /// radicand -> coefficient; radicand 1 is the rational part.
    terms: BTreeMap<u64, Rational>,
}

impl Surd {
    pub fn rational(r: Rational) -> Self {
        let mut s = Surd::default();
        s.push(1, r);
        s
    }

    /// `sqrt(r)` for a nonnegative rational whose numerator times
    /// denominator fits in 64 bits.
    pub fn sqrt_of(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::Numerical(format!("square root of negative {r}")));
        }
        // sqrt(p/q) = sqrt(p q) / q
        let pq: BigInt = r.numer() * r.denom();
        let mut m = pq
            .to_u64()
            .ok_or_else(|| Error::Numerical(format!("radicand of {r} too large")))?;
        let mut outside: u64 = 1;
        let mut d: u64 = 2;
        while d.saturating_mul(d) <= m {
            while m % (d * d) == 0 {
                m /= d * d;
                outside *= d;
            }
            d += 1;
        }
        let coeff = Rational::new(BigInt::from(outside), r.denom().clone());
        let mut s = Surd::default();
        s.push(if m == 0 { 1 } else { m }, if m == 0 { Rational::zero() } else { coeff });
        Ok(s)
    }

    fn push(&mut self, radicand: u64, coeff: Rational) {
        let entry = self.terms.entry(radicand).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    pub fn add(&self, other: &Surd) -> Surd {
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.push(*r, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Surd {
        let mut out = Surd::default();
        for (r, c) in &self.terms {
            out.push(*r, c * k);
        }
        out
    }

    /// The value when it has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> + '_ {
        self.terms.iter().map(|(r, c)| (*r, c))
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, c)| crate::geom::rational_to_f64(c) * (*r as f64).sqrt())
            .sum()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (r, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *r == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*sqrt({r})")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMeasures {
    pub edge_length_sum: Surd,
    pub face_area_sum: Surd,
    pub edge_finite: bool,
    pub area_finite: bool,
    pub edge_limit: Option<Surd>,
    pub area_limit: Option<Surd>,
}

/// Edge-length and face-area sums over stages `0..=n`, with multiplicity.
///
/// Level `k` carries `N^k` cells scaled by `r^k`, so edge lengths grow by
/// `N r` per level and areas by `N r^2`; a series is finite exactly when its
/// ratio is strictly below one. For the cube that is `a < 1/8` (edges) and
/// `8 a^2 < 1` (faces); the tetrahedral ratios are 2 and 1, both divergent.
pub fn series_measures(variant: &SpatialVariant, n: usize) -> Result<SeriesMeasures> {
    variant.validate()?;
    let base = variant.base_cell();
    let mut base_edges = Surd::default();
    for e in base.edges() {
        base_edges = base_edges.add(&Surd::sqrt_of(&e.length_squared())?);
    }
    let mut base_faces = Surd::default();
    for f in base.faces() {
        base_faces = base_faces.add(&Surd::sqrt_of(&f.squared_area)?);
    }
    let branching = int(variant.branching() as i64);
    let r = variant.contraction();
    let edge_ratio = &branching * &r;
    let area_ratio = &branching * &r * &r;
    let geometric = |ratio: &Rational| {
        let mut term = Rational::one();
        let mut sum = Rational::zero();
        for _ in 0..=n {
            sum += &term;
            term *= ratio;
        }
        sum
    };
    let limit = |base: &Surd, ratio: &Rational| {
        (*ratio < Rational::one()).then(|| base.scale(&(Rational::one() / (Rational::one() - ratio))))
    };
    Ok(SeriesMeasures {
        edge_length_sum: base_edges.scale(&geometric(&edge_ratio)),
        face_area_sum: base_faces.scale(&geometric(&area_ratio)),
        edge_finite: edge_ratio < Rational::one(),
        area_finite: area_ratio < Rational::one(),
        edge_limit: limit(&base_edges, &edge_ratio),
        area_limit: limit(&base_faces, &area_ratio),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub violations: usize,
}

/// Counts piece boundary edges not covered by the skeleton.
pub fn boundary_incidence(stage: &Stage3) -> Incidence {
    boundary_incidence_of(&stage.skeleton, &stage.pieces)
}

pub fn boundary_incidence_of(skeleton: &BTreeSet<Segment3>, pieces: &[Face3]) -> Incidence {
    let violations = pieces
        .par_iter()
        .map(|face| {
            face.edges()
                .iter()
                .filter(|e| !skeleton.contains(e) && !segment_covered(*e, skeleton))
                .count()
        })
        .sum();
    Incidence { violations }
}

pub fn connectivity3(stage: &Stage3) -> Connectivity {
    skeleton_components(&stage.skeleton)
}

pub fn skeleton_components(skeleton: &BTreeSet<Segment3>) -> Connectivity {
    let segs: Vec<Segment3> = skeleton.iter().cloned().collect();
    Connectivity {
        components: count_components(&segs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pow;

    fn cube(a: Rational) -> SpatialVariant {
        SpatialVariant::cube(a).unwrap()
    }

    #[test]
    fn unit_cube_stage() {
        let s = build_spatial(&cube(rat(1, 3)), 0).unwrap();
        assert_eq!(s.cells().len(), 1);
        assert_eq!(s.skeleton().len(), 12);
        assert_eq!(s.pieces().len(), 6);
        assert!(s.pieces().iter().all(|f| f.boundary.len() == 4 && f.squared_area == int(1)));
        assert!(s.pieces().iter().all(Face3::is_planar));
    }

    #[test]
    fn corner_cubes_at_depth_one() {
        let s = build_spatial(&cube(rat(1, 3)), 1).unwrap();
        assert_eq!(s.cells().len(), 8);
        let corners: BTreeSet<Point3> = s.cells().iter().map(|c| c.vertices[0].clone()).collect();
        let expect: BTreeSet<Point3> = (0..8)
            .map(|b: i32| {
                let c = |bit| if b & bit != 0 { rat(2, 3) } else { int(0) };
                Point3::new(c(1), c(2), c(4))
            })
            .collect();
        assert_eq!(corners, expect);
        // brute-force dedup of all 12 + 8*12 cell edges
        let mut all: Vec<Segment3> = Vec::new();
        let root = SpatialVariant::CubeWireframe { a: rat(1, 3) }.base_cell();
        all.extend(root.edges());
        for c in s.cells() {
            all.extend(c.edges());
        }
        assert_eq!(all.len(), 108);
        let mut distinct: Vec<Segment3> = Vec::new();
        for e in all {
            if !distinct.contains(&e) {
                distinct.push(e);
            }
        }
        assert_eq!(s.skeleton().len(), distinct.len());
    }

    #[test]
    fn tetra_counts_and_face_areas() {
        let s = build_spatial(&SpatialVariant::TetraGasket, 2).unwrap();
        assert_eq!(s.cells().len(), 16);
        assert_eq!(s.pieces().len(), 4 + 16 + 64);
        assert!(s.pieces().iter().all(|f| f.boundary.len() == 3));
        let base = SpatialVariant::TetraGasket.base_cell().faces();
        for (i, f) in s.pieces().iter().enumerate() {
            // faces come in cell order, each cell lists its faces in the same order
            let k = f.birth_level;
            let expected = &base[i % 4].squared_area * pow(&rat(1, 16), k);
            assert_eq!(f.squared_area, expected);
        }
    }

    #[test]
    fn children_sit_inside_parents() {
        for v in [cube(rat(2, 5)), SpatialVariant::TetraGasket] {
            let base = v.base_cell();
            let s = build_spatial(&v, 2).unwrap();
            for c in s.cells() {
                assert!(base.contains(c));
                let parent = base.children(&v).into_iter().find(|p| p.address[0] == c.address[0]).unwrap();
                assert!(parent.contains(c));
            }
        }
    }

    #[test]
    fn cube_series() {
        let m = series_measures(&cube(rat(1, 10)), 3).unwrap();
        assert_eq!(m.edge_limit.unwrap().as_rational(), Some(int(60)));
        assert!(m.edge_finite);
        let m = series_measures(&cube(rat(1, 5)), 3).unwrap();
        assert!(!m.edge_finite);
        assert!(m.area_finite);
        assert_eq!(m.area_limit.unwrap().as_rational(), Some(rat(150, 17)));
        // partial sums for n = 1: 12 (1 + 8/5), 6 (1 + 8/25)
        let m = series_measures(&cube(rat(1, 5)), 1).unwrap();
        assert_eq!(m.edge_length_sum.as_rational(), Some(rat(156, 5)));
        assert_eq!(m.face_area_sum.as_rational(), Some(rat(198, 25)));
        assert!(!series_measures(&cube(rat(1, 8)), 2).unwrap().edge_finite);
    }

    #[test]
    fn tetra_series_is_irrational_and_divergent() {
        let m = series_measures(&SpatialVariant::TetraGasket, 1).unwrap();
        assert!(!m.edge_finite && !m.area_finite);
        assert!(m.edge_limit.is_none());
        // level 0: 3 + 3 sqrt 2, level 1: twice that
        let edges: Vec<(u64, Rational)> = m.edge_length_sum.terms().map(|(r, c)| (r, c.clone())).collect();
        assert_eq!(edges, vec![(1, int(9)), (2, int(9))]);
        // faces: 3/2 + sqrt(3)/2 at each level
        let faces: Vec<(u64, Rational)> = m.face_area_sum.terms().map(|(r, c)| (r, c.clone())).collect();
        assert_eq!(faces, vec![(1, int(3)), (3, int(1))]);
    }

    #[test]
    fn surd_square_roots() {
        let s = Surd::sqrt_of(&rat(3, 4)).unwrap();
        assert_eq!(s.terms().map(|(r, c)| (r, c.clone())).collect::<Vec<_>>(), vec![(3, rat(1, 2))]);
        assert_eq!(Surd::sqrt_of(&rat(9, 4)).unwrap().as_rational(), Some(rat(3, 2)));
        assert_eq!(Surd::sqrt_of(&int(0)).unwrap().as_rational(), Some(int(0)));
        assert!(Surd::sqrt_of(&int(-1)).is_err());
        assert!((Surd::sqrt_of(&int(8)).unwrap().to_f64() - 8f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn incidence_holds_and_detects_displacement() {
        for v in [cube(rat(1, 3)), SpatialVariant::TetraGasket] {
            let s = build_spatial(&v, 2).unwrap();
            assert_eq!(boundary_incidence(&s).violations, 0);
            let mut pieces = s.pieces().to_vec();
            let shift = Point3::new(rat(1, 7), rat(1, 11), rat(1, 13));
            let sides = pieces[5].boundary.len();
            pieces[5] = pieces[5].translated(&shift);
            assert_eq!(boundary_incidence_of(s.skeleton(), &pieces).violations, sides);
        }
    }

    #[test]
    fn level_two_faces_lie_on_level_two_edges() {
        let s = build_spatial(&cube(rat(1, 3)), 2).unwrap();
        let level_two: BTreeSet<Segment3> = s.cells().iter().flat_map(Cell3::edges).collect();
        for f in s.pieces().iter().filter(|f| f.birth_level == 2) {
            for e in f.edges() {
                assert!(level_two.contains(&e));
            }
        }
    }

    #[test]
    fn skeleton_connectivity() {
        for v in [cube(rat(1, 3)), cube(rat(1, 5)), SpatialVariant::TetraGasket] {
            for depth in 0..=2 {
                assert_eq!(connectivity3(&build_spatial(&v, depth).unwrap()).components, 1);
            }
        }
        let one = build_spatial(&cube(rat(1, 3)), 0).unwrap();
        let shift = Point3::new(int(5), int(0), int(0));
        let mut two = one.skeleton().clone();
        two.extend(one.skeleton().iter().map(|e| Segment::canonical_unchecked(e.start.add(&shift), e.end.add(&shift))));
        assert_eq!(skeleton_components(&two).components, 2);
    }

    #[test]
    fn projected_faces_wind_once() {
        use crate::topology::winding_number;
        for v in [cube(rat(1, 3)), SpatialVariant::TetraGasket] {
            for f in build_spatial(&v, 1).unwrap().pieces() {
                let (l, inner) = f.project_to_loop().unwrap();
                assert_eq!(winding_number(&l, &inner).unwrap().abs(), 1);
            }
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(SpatialVariant::cube(rat(1, 2)), Err(Error::Parameter(_))));
        assert!(matches!(
            build_spatial(&SpatialVariant::CubeWireframe { a: int(1) }, 1),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(build_spatial(&cube(rat(1, 3)), 5), Err(Error::Capacity(_))));
        assert!(matches!(build_spatial(&SpatialVariant::TetraGasket, 7), Err(Error::Capacity(_))));
    }
}
