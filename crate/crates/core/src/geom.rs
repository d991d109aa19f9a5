//! Exact rational points, segments, and loops.
//!
//! Every coordinate in the crate is a [`Rational`]; predicates here never
//! round. The only floating-point values produced by the geometric layer are
//! the ones explicitly requested for display.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{CheckedDiv, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for building the rational `num / den`. Panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn checked_div(lhs: &Rational, rhs: &Rational) -> Result<Rational> {
    lhs.checked_div(rhs).ok_or(Error::DivisionByZero)
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `base^exp` for a nonnegative exponent.
pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ratios(x: (i64, i64), y: (i64, i64)) -> Self {
        Self::new(rat(x.0, x.1), rat(y.0, y.1))
    }

    pub fn origin() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn add(&self, other: &Point2) -> Point2 {
        Point2::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &Point2) -> Point2 {
        Point2::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn scale(&self, s: &Rational) -> Point2 {
        Point2::new(&self.x * s, &self.y * s)
    }

    pub fn midpoint(&self, other: &Point2) -> Point2 {
        let half = rat(1, 2);
        Point2::new((&self.x + &other.x) * &half, (&self.y + &other.y) * &half)
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [rational_to_f64(&self.x), rational_to_f64(&self.y)]
    }
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Self { x, y, z }
    }

    pub fn origin() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn add(&self, other: &Point3) -> Point3 {
        Point3::new(&self.x + &other.x, &self.y + &other.y, &self.z + &other.z)
    }

    pub fn sub(&self, other: &Point3) -> Point3 {
        Point3::new(&self.x - &other.x, &self.y - &other.y, &self.z - &other.z)
    }

    pub fn scale(&self, s: &Rational) -> Point3 {
        Point3::new(&self.x * s, &self.y * s, &self.z * s)
    }

    pub fn midpoint(&self, other: &Point3) -> Point3 {
        self.add(other).scale(&rat(1, 2))
    }

    pub fn dot(&self, other: &Point3) -> Rational {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn cross(&self, other: &Point3) -> Point3 {
        Point3::new(
            &self.y * &other.z - &self.z * &other.y,
            &self.z * &other.x - &self.x * &other.z,
            &self.x * &other.y - &self.y * &other.x,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn coords(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [
            rational_to_f64(&self.x),
            rational_to_f64(&self.y),
            rational_to_f64(&self.z),
        ]
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Points that can be embedded into three-space for exact incidence tests.
pub trait Lift: Clone + Ord {
    fn lift(&self) -> Point3;
}

impl Lift for Point2 {
    fn lift(&self) -> Point3 {
        Point3::new(self.x.clone(), self.y.clone(), Rational::zero())
    }
}

impl Lift for Point3 {
    fn lift(&self) -> Point3 {
        self.clone()
    }
}

/// A straight segment between two distinct points.
///
/// The canonical form stores the lexicographically smaller endpoint first and
/// is unique per unordered endpoint pair; stages keep their segments in that
/// form so a `BTreeSet` deduplicates them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment<P> {
    pub start: P,
    pub end: P,
}

pub type Segment2 = Segment<Point2>;
pub type Segment3 = Segment<Point3>;

impl<P: Lift> Segment<P> {
    pub fn new(start: P, end: P) -> Result<Self> {
        if start == end {
            return Err(Error::UnsupportedGeometry(
                "segment endpoints must be distinct".into(),
            ));
        }
        Ok(Self { start, end })
    }

    /// Canonical segment; the caller guarantees distinct endpoints.
    pub(crate) fn canonical_unchecked(a: P, b: P) -> Self {
        debug_assert!(a != b);
        if a <= b {
            Self { start: a, end: b }
        } else {
            Self { start: b, end: a }
        }
    }

    pub fn canonical(&self) -> Self {
        Self::canonical_unchecked(self.start.clone(), self.end.clone())
    }

    pub fn is_canonical(&self) -> bool {
        self.start < self.end
    }

    pub fn length_squared(&self) -> Rational {
        let d = self.end.lift().sub(&self.start.lift());
        d.dot(&d)
    }

    /// Exact closed-segment intersection test (shared point, crossing, or
    /// collinear overlap).
    pub fn touches(&self, other: &Segment<P>) -> bool {
        segments_touch(
            &self.start.lift(),
            &self.end.lift(),
            &other.start.lift(),
            &other.end.lift(),
        )
    }
}

impl Segment2 {
    /// Exact length of an axis-parallel segment.
    pub fn axis_length(&self) -> Result<Rational> {
        if self.start.x == self.end.x {
            Ok((&self.end.y - &self.start.y).abs())
        } else if self.start.y == self.end.y {
            Ok((&self.end.x - &self.start.x).abs())
        } else {
            Err(Error::UnsupportedGeometry(format!(
                "segment {} - {} is not axis-parallel",
                self.start, self.end
            )))
        }
    }
}

fn segments_touch(p0: &Point3, p1: &Point3, q0: &Point3, q1: &Point3) -> bool {
    let d1 = p1.sub(p0);
    let d2 = q1.sub(q0);
    let w = q0.sub(p0);
    let n = d1.cross(&d2);
    if n.is_zero() {
        // Parallel: they meet only when collinear with overlapping ranges.
        if !w.cross(&d1).is_zero() {
            return false;
        }
        let len = d1.dot(&d1);
        let t0 = w.dot(&d1);
        let t1 = q1.sub(p0).dot(&d1);
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        return hi >= Rational::zero() && lo <= len;
    }
    if !w.dot(&n).is_zero() {
        return false;
    }
    // p0 + t d1 = q0 + s d2, scaled by |n|^2 to stay in exact arithmetic.
    let nn = n.dot(&n);
    let t = w.cross(&d2).dot(&n);
    let s = w.cross(&d1).dot(&n);
    let zero = Rational::zero();
    t >= zero && t <= nn && s >= zero && s <= nn
}

/// True when every point of `target` lies on the union of the `candidates`
/// collinear with it. Non-collinear candidates are ignored.
pub fn segment_covered<'a, P: Lift + 'a>(
    target: &Segment<P>,
    candidates: impl IntoIterator<Item = &'a Segment<P>>,
) -> bool {
    let a = target.start.lift();
    let d = target.end.lift().sub(&a);
    let len = d.dot(&d);
    let mut intervals: Vec<(Rational, Rational)> = Vec::new();
    for c in candidates {
        let u = c.start.lift().sub(&a);
        let v = c.end.lift().sub(&a);
        if !u.cross(&d).is_zero() || !v.cross(&d).is_zero() {
            continue;
        }
        let (tu, tv) = (u.dot(&d), v.dot(&d));
        let (lo, hi) = if tu <= tv { (tu, tv) } else { (tv, tu) };
        intervals.push((lo, hi));
    }
    intervals.sort();
    let mut reach = Rational::zero();
    for (lo, hi) in intervals {
        if lo > reach {
            break;
        }
        if hi > reach {
            reach = hi;
        }
        if reach >= len {
            return true;
        }
    }
    reach >= len
}

/// Exact one-dimensional measure of a union of axis-parallel segments.
///
/// Segments are grouped by carrier line and overlapping intervals merged, so
/// the result never double counts shared pieces.
pub fn union_length<'a>(segments: impl IntoIterator<Item = &'a Segment2>) -> Result<Rational> {
    // carrier key: (is_vertical, fixed coordinate)
    let mut carriers: BTreeMap<(bool, Rational), Vec<(Rational, Rational)>> = BTreeMap::new();
    for s in segments {
        let (key, lo, hi) = if s.start.y == s.end.y {
            ((false, s.start.y.clone()), &s.start.x, &s.end.x)
        } else if s.start.x == s.end.x {
            ((true, s.start.x.clone()), &s.start.y, &s.end.y)
        } else {
            return Err(Error::UnsupportedGeometry(format!(
                "union_length needs axis-parallel segments, got {} - {}",
                s.start, s.end
            )));
        };
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        carriers.entry(key).or_default().push((lo.clone(), hi.clone()));
    }
    let mut total = Rational::zero();
    for mut intervals in carriers.into_values() {
        intervals.sort();
        let mut iter = intervals.into_iter();
        let (mut cur_lo, mut cur_hi) = iter.next().expect("carrier has an interval");
        for (lo, hi) in iter {
            if lo <= cur_hi {
                if hi > cur_hi {
                    cur_hi = hi;
                }
            } else {
                total += &cur_hi - &cur_lo;
                cur_lo = lo;
                cur_hi = hi;
            }
        }
        total += cur_hi - cur_lo;
    }
    Ok(total)
}

/// `(b - a) x (p - a)`: positive when `p` is left of the directed line `ab`.
pub fn orient2(a: &Point2, b: &Point2, p: &Point2) -> Rational {
    (&b.x - &a.x) * (&p.y - &a.y) - (&p.x - &a.x) * (&b.y - &a.y)
}

pub(crate) fn on_segment2(a: &Point2, b: &Point2, p: &Point2) -> bool {
    if !orient2(a, b, p).is_zero() {
        return false;
    }
    let (xlo, xhi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    &p.x >= xlo && &p.x <= xhi && &p.y >= ylo && &p.y <= yhi
}

/// Shoelace signed area; fails on fewer than three vertices.
pub fn signed_area(vertices: &[Point2]) -> Result<Rational> {
    if vertices.len() < 3 {
        return Err(Error::MalformedLoop(format!(
            "need at least 3 vertices, got {}",
            vertices.len()
        )));
    }
    let mut twice = Rational::zero();
    for (i, a) in vertices.iter().enumerate() {
        let b = &vertices[(i + 1) % vertices.len()];
        twice += &a.x * &b.y - &b.x * &a.y;
    }
    Ok(twice / int(2))
}

/// A closed oriented polygonal curve; the last vertex connects to the first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Loop {
    vertices: Vec<Point2>,
}

impl Loop {
    /// Requires at least three vertices with no two cyclically consecutive
    /// vertices equal. Zero-area loops are accepted here; operations that
    /// need a simple loop reject them.
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::MalformedLoop(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let n = vertices.len();
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(Error::MalformedLoop(format!(
                    "repeated consecutive vertex {}",
                    vertices[i]
                )));
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point2, &Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn signed_area(&self) -> Rational {
        signed_area(&self.vertices).expect("loop has at least 3 vertices")
    }

    /// +1 counterclockwise, -1 clockwise, 0 for zero signed area.
    pub fn orientation(&self) -> i8 {
        let a = self.signed_area();
        if a.is_positive() {
            1
        } else if a.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn reversed(&self) -> Loop {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Loop { vertices }
    }

    /// Same curve started at vertex `k`.
    pub fn rotated(&self, k: usize) -> Loop {
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(k % self.vertices.len());
        Loop { vertices }
    }

    pub fn translated(&self, v: &Point2) -> Loop {
        Loop {
            vertices: self.vertices.iter().map(|p| p.add(v)).collect(),
        }
    }

    /// Traverses `self` then `other`; both must start at the same vertex.
    pub fn concat_at_base(&self, other: &Loop) -> Result<Loop> {
        if self.vertices[0] != other.vertices[0] {
            return Err(Error::MalformedLoop(
                "concatenated loops must share their first vertex".into(),
            ));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        Loop::new(vertices)
    }

    /// Traverses `self` `times` times in a row.
    pub fn repeated(&self, times: usize) -> Result<Loop> {
        if times == 0 {
            return Err(Error::MalformedLoop("repeat count must be positive".into()));
        }
        Loop::new((0..times).flat_map(|_| self.vertices.iter().cloned()).collect())
    }

    pub fn on_loop(&self, p: &Point2) -> bool {
        self.edges().any(|(a, b)| on_segment2(a, b, p))
    }

    /// Mean of the vertices. For triangles and parallelograms this is the
    /// area centroid and lies strictly inside.
    pub fn vertex_centroid(&self) -> Point2 {
        let n = int(self.vertices.len() as i64);
        let mut sx = Rational::zero();
        let mut sy = Rational::zero();
        for v in &self.vertices {
            sx += &v.x;
            sy += &v.y;
        }
        Point2::new(sx / &n, sy / n)
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment2> + '_ {
        self.edges()
            .map(|(a, b)| Segment::canonical_unchecked(a.clone(), b.clone()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    Outside,
    Boundary,
}

/// Exact crossing-parity classification of `p` against a simple loop.
///
/// Results on self-intersecting loops follow the even-odd rule and are not
/// otherwise meaningful.
pub fn point_in_polygon(l: &Loop, p: &Point2) -> Result<Location> {
    if l.signed_area().is_zero() {
        return Err(Error::MalformedLoop("loop has zero area".into()));
    }
    if l.on_loop(p) {
        return Ok(Location::Boundary);
    }
    let mut inside = false;
    for (a, b) in l.edges() {
        // half-open rule: an edge counts when exactly one endpoint is above p
        if (a.y > p.y) != (b.y > p.y) {
            // x of the crossing compared with p.x, without dividing
            let lhs = (&p.x - &a.x) * (&b.y - &a.y);
            let rhs = (&b.x - &a.x) * (&p.y - &a.y);
            let left_of_crossing = if b.y > a.y { lhs < rhs } else { lhs > rhs };
            if left_of_crossing {
                inside = !inside;
            }
        }
    }
    Ok(if inside {
        Location::Inside
    } else {
        Location::Outside
    })
}


pub(crate) fn address_string(address: &[u8]) -> String {
    address.iter().map(|d| char::from(b'0' + d)).collect()
}
