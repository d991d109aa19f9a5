#![allow(dead_code)]

use quasifractal::geom::{rat, Loop, Point2, Rational};
use rand::Rng;

/// Winding number by summing turning angles in floating point; only used
/// away from the loop, where the rounding error is far below one half.
pub fn angle_winding(l: &Loop, p: &Point2) -> i64 {
    let [px, py] = p.to_f64();
    let vs: Vec<[f64; 2]> = l.vertices().iter().map(|v| v.to_f64()).collect();
    let mut total = 0.0f64;
    for i in 0..vs.len() {
        let a = vs[i];
        let b = vs[(i + 1) % vs.len()];
        let (ax, ay) = (a[0] - px, a[1] - py);
        let (bx, by) = (b[0] - px, b[1] - py);
        total += (ax * by - ay * bx).atan2(ax * bx + ay * by);
    }
    (total / std::f64::consts::TAU).round() as i64
}

/// Random closed polygon (possibly self-intersecting) on a grid of step 1/4
/// inside [-2, 2]^2.
pub fn random_loop<R: Rng>(rng: &mut R, max_vertices: usize) -> Loop {
    loop {
        let n = rng.random_range(3..=max_vertices);
        let vs: Vec<Point2> = (0..n).map(|_| grid_point(rng)).collect();
        if let Ok(l) = Loop::new(vs) {
            if l.edges().all(|(a, b)| a != b) {
                return l;
            }
        }
    }
}

pub fn grid_point<R: Rng>(rng: &mut R) -> Point2 {
    Point2::new(rat(rng.random_range(-8..=8), 4), rat(rng.random_range(-8..=8), 4))
}

/// Random query point with denominator 7, so it rarely lies on grid edges.
pub fn query_point<R: Rng>(rng: &mut R) -> Point2 {
    Point2::new(rat(rng.random_range(-16..=16), 7), rat(rng.random_range(-16..=16), 7))
}

pub fn r(n: i64, d: i64) -> Rational {
    rat(n, d)
}
