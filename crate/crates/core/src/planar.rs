//! Sierpinski carpet and gasket, together with the bounded complement pieces
//! removed at each level.
//!
//! Kept tiles approximate the fractal; removed pieces are open squares or
//! triangles. Kept plus removed always fills the starting tile exactly.

use std::collections::BTreeSet;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{int, rat, Loop, Point2, Rational, Segment2};

pub const CARPET_DEPTH_CAP: usize = 7;
pub const GASKET_DEPTH_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlanarVariant {
    /// Unit square, 3x3 subdivision, center removed.
    Carpet,
    /// Triangle (0,0), (1,0), (1/2,1), midpoint subdivision, middle removed.
    Gasket,
}

impl PlanarVariant {
    pub fn name(self) -> &'static str {
        match self {
            PlanarVariant::Carpet => "carpet",
            PlanarVariant::Gasket => "gasket",
        }
    }

    pub fn default_cap(self) -> usize {
        match self {
            PlanarVariant::Carpet => CARPET_DEPTH_CAP,
            PlanarVariant::Gasket => GASKET_DEPTH_CAP,
        }
    }

    /// Tiles kept per subdivision.
    pub fn branching(self) -> usize {
        match self {
            PlanarVariant::Carpet => 8,
            PlanarVariant::Gasket => 3,
        }
    }

    /// Linear contraction of each kept tile.
    pub fn contraction(self) -> Rational {
        match self {
            PlanarVariant::Carpet => rat(1, 3),
            PlanarVariant::Gasket => rat(1, 2),
        }
    }

    pub fn base_tile(self) -> Tile {
        let p = |x: (i64, i64), y: (i64, i64)| Point2::from_ratios(x, y);
        let vertices = match self {
            PlanarVariant::Carpet => vec![p((0, 1), (0, 1)), p((1, 1), (0, 1)), p((1, 1), (1, 1)), p((0, 1), (1, 1))],
            PlanarVariant::Gasket => vec![p((0, 1), (0, 1)), p((1, 1), (0, 1)), p((1, 2), (1, 1))],
        };
        Tile {
            address: Vec::new(),
            boundary: Loop::new(vertices).expect("base tile is a valid loop"),
        }
    }

    pub fn initial_area(self) -> Rational {
        self.base_tile().boundary.signed_area()
    }
}

/// Self-similarity dimension `log N / -log r`: `log 8 / log 3` for the
/// carpet and `log 3 / log 2` for the gasket.
pub fn similarity_dimension(variant: PlanarVariant) -> f64 {
    let n = variant.branching() as f64;
    n.ln() / -crate::cantor::ln_rational(&variant.contraction())
}

/// A square or triangle still present in the fractal approximation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tile {
    pub address: Vec<u8>,
    /// Counterclockwise; squares start at their south-west corner.
    pub boundary: Loop,
}

impl Tile {
    pub fn area(&self) -> Rational {
        self.boundary.signed_area()
    }

    fn subdivide(&self, variant: PlanarVariant, level: usize) -> (Vec<Tile>, Piece) {
        let child = |letter: u8, vertices: Vec<Point2>| {
            let mut address = self.address.clone();
            address.push(letter);
            Tile {
                address,
                boundary: Loop::new(vertices).expect("child tile is a valid loop"),
            }
        };
        let v = self.boundary.vertices();
        let (children, hole) = match variant {
            PlanarVariant::Carpet => {
                let corner = &v[0];
                let third = (&v[1].x - &corner.x) / int(3);
                let square = |i: i64, j: i64| {
                    let sw = Point2::new(&corner.x + &third * int(i), &corner.y + &third * int(j));
                    let ne = Point2::new(&sw.x + &third, &sw.y + &third);
                    vec![
                        sw.clone(),
                        Point2::new(ne.x.clone(), sw.y.clone()),
                        ne.clone(),
                        Point2::new(sw.x, ne.y),
                    ]
                };
                let mut children = Vec::with_capacity(8);
                let mut letter = 0;
                for j in 0..3 {
                    for i in 0..3 {
                        if (i, j) != (1, 1) {
                            children.push(child(letter, square(i, j)));
                            letter += 1;
                        }
                    }
                }
                (children, square(1, 1))
            }
            PlanarVariant::Gasket => {
                let (a, b, c) = (&v[0], &v[1], &v[2]);
                let (ab, bc, ca) = (a.midpoint(b), b.midpoint(c), c.midpoint(a));
                let children = vec![
                    child(0, vec![a.clone(), ab.clone(), ca.clone()]),
                    child(1, vec![ab.clone(), b.clone(), bc.clone()]),
                    child(2, vec![ca.clone(), bc.clone(), c.clone()]),
                ];
                (children, vec![ab, bc, ca])
            }
        };
        let boundary = Loop::new(hole).expect("removed piece is a valid loop");
        let piece = Piece {
            area: boundary.signed_area(),
            boundary,
            birth_level: level,
            address: self.address.clone(),
        };
        (children, piece)
    }
}

/// A bounded complement component, removed when its parent tile was
/// subdivided.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Piece {
    /// Counterclockwise.
    pub boundary: Loop,
    pub birth_level: usize,
    /// Address of the tile this piece was cut from.
    pub address: Vec<u8>,
    pub area: Rational,
}

impl Piece {
    /// Interior representative used as a hole point.
    pub fn centroid(&self) -> Point2 {
        self.boundary.vertex_centroid()
    }

    pub fn label(&self) -> String {
        format!("L{}:{}", self.birth_level, crate::geom::address_string(&self.address))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceSet {
    pub(crate) variant: PlanarVariant,
    pub(crate) level: usize,
    pub(crate) kept: Vec<Tile>,
    pub(crate) removed: Vec<Piece>,
}

impl PieceSet {
    pub fn variant(&self) -> PlanarVariant {
        self.variant
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn kept(&self) -> &[Tile] {
        &self.kept
    }

    /// Ordered by birth level, then by parent address.
    pub fn removed(&self) -> &[Piece] {
        &self.removed
    }

    pub fn removed_at(&self, level: usize) -> impl Iterator<Item = &Piece> + '_ {
        self.removed.iter().filter(move |p| p.birth_level == level)
    }

    /// Canonical edges of the kept tiles.
    pub fn kept_segments(&self) -> BTreeSet<Segment2> {
        self.kept.iter().flat_map(|t| t.boundary.segments()).collect()
    }
}

pub fn build_planar(variant: PlanarVariant, depth: usize) -> Result<PieceSet> {
    build_planar_with_cap(variant, depth, variant.default_cap())
}

pub fn build_planar_with_cap(variant: PlanarVariant, depth: usize, cap: usize) -> Result<PieceSet> {
    if depth > cap {
        return Err(Error::Capacity(format!(
            "{} depth {depth} exceeds the cap of {cap}",
            variant.name()
        )));
    }
    let mut kept = vec![variant.base_tile()];
    let mut removed = Vec::new();
    for level in 1..=depth {
        let split: Vec<(Vec<Tile>, Piece)> = kept
            .par_iter()
            .map(|t| t.subdivide(variant, level))
            .collect();
        let mut next = Vec::with_capacity(kept.len() * variant.branching());
        let mut holes = Vec::with_capacity(kept.len());
        for (children, piece) in split {
            next.extend(children);
            holes.push(piece);
        }
        next.par_sort_by(|x, y| x.address.cmp(&y.address));
        holes.sort_by(|x, y| x.address.cmp(&y.address));
        removed.extend(holes);
        kept = next;
    }
    Ok(PieceSet {
        variant,
        level: depth,
        kept,
        removed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaAccounting {
    pub kept_area: Rational,
    pub removed_area: Rational,
}

/// Sums kept and removed areas piece by piece.
pub fn area_accounting(ps: &PieceSet) -> AreaAccounting {
    let kept_area = ps
        .kept
        .par_iter()
        .map(Tile::area)
        .reduce(Rational::zero, |a, b| a + b);
    let removed_area = ps.removed.iter().map(|p| &p.area).sum();
    AreaAccounting {
        kept_area,
        removed_area,
    }
}

/// Outer boundary plus the boundaries of all removed pieces: the stage-`n`
/// picture of the fractal as the boundary of the open complement.
pub fn boundary_of_rest(ps: &PieceSet) -> BTreeSet<Segment2> {
    let mut out: BTreeSet<Segment2> = ps.variant.base_tile().boundary.segments().collect();
    for p in &ps.removed {
        out.extend(p.boundary.segments());
    }
    out
}
