//! Toeplitz operators with Laurent-polynomial symbols on the unit circle.
//!
//! For a symbol `s` that does not vanish on the circle, the Toeplitz operator
//! `T_s` on the Hardy space is Fredholm with index `-wind(s)` (Gohberg–Krein).
//! The winding number is computed two independent ways: by accumulating the
//! argument of `s(e^{iθ})` and by counting roots of `z^m s(z)` inside the
//! disk. Both guards against vanishing on the circle must pass before an
//! index is reported.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Minimum modulus on the sampled circle below which a symbol is treated as
/// vanishing.
pub const MODULUS_THRESHOLD: f64 = 1e-8;
/// Roots closer than this to the unit circle make the operator non-Fredholm.
pub const ROOT_CIRCLE_GUARD: f64 = 1e-6;
pub const RANK_TOLERANCE: f64 = 1e-10;

const MAX_ARGUMENT_SAMPLES: usize = 1 << 22;
const DENSE_SAMPLES: usize = 4096;

/// A Laurent polynomial `sum_{k=-m}^{p} c_k z^k`.
///
/// The exponent range always contains 0 and is trimmed on both sides, so
/// `c_{-m} != 0` unless `m = 0`, and `c_p != 0` unless `p = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Symbol {
    m: usize,
    /// `coeffs[i]` is the coefficient of `z^(i - m)`.
    coeffs: Vec<Complex64>,
}

impl Symbol {
    /// Builds a symbol from `(exponent, coefficient)` terms; repeated
    /// exponents are summed.
    pub fn new(terms: impl IntoIterator<Item = (i32, Complex64)>) -> Result<Self> {
        let mut map: BTreeMap<i32, Complex64> = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_default() += c;
        }
        map.retain(|_, c| *c != Complex64::new(0.0, 0.0));
        let (Some(&lo), Some(&hi)) = (map.keys().next(), map.keys().next_back()) else {
            return Err(Error::Parameter("symbol needs a nonzero coefficient".into()));
        };
        let lo = lo.min(0);
        let hi = hi.max(0);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (hi - lo) as usize + 1];
        for (k, c) in map {
            coeffs[(k - lo) as usize] = c;
        }
        Ok(Self {
            m: (-lo) as usize,
            coeffs,
        })
    }

    pub fn monomial(k: i32, c: Complex64) -> Result<Self> {
        Self::new([(k, c)])
    }

    /// Lower band limit: the most negative exponent is `-m`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Upper band limit.
    pub fn p(&self) -> usize {
        self.coeffs.len() - 1 - self.m
    }

    pub fn coeff(&self, k: i64) -> Complex64 {
        let i = k + self.m as i64;
        if i < 0 || i as usize >= self.coeffs.len() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[i as usize]
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != Complex64::new(0.0, 0.0))
            .map(move |(i, c)| (i as i32 - self.m as i32, *c))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        // Horner in z, then divide by z^m.
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc / z.powi(self.m as i32)
    }

    pub fn eval_on_circle(&self, theta: f64) -> Complex64 {
        self.eval(Complex64::from_polar(1.0, theta))
    }

    /// Single nonzero term `(k, c)`, if any.
    pub fn as_monomial(&self) -> Option<(i32, Complex64)> {
        let mut terms = self.terms();
        let first = terms.next()?;
        terms.next().is_none().then_some(first)
    }

    /// Pointwise product on the circle.
    pub fn product(&self, other: &Symbol) -> Result<Symbol> {
        let mut terms = Vec::new();
        for (j, a) in self.terms() {
            for (k, b) in other.terms() {
                terms.push((j + k, a * b));
            }
        }
        Symbol::new(terms)
    }

    pub fn scaled(&self, c: Complex64) -> Result<Symbol> {
        Symbol::new(self.terms().map(|(k, a)| (k, a * c)))
    }

    /// `z -> s(1/z)`: the same curve traversed with the opposite orientation.
    pub fn orientation_flip(&self) -> Symbol {
        Symbol::new(self.terms().map(|(k, c)| (-k, c))).expect("flip keeps nonzero terms")
    }

    /// Minimum of `|s|` over `n` equally spaced points of the circle.
    pub fn min_modulus(&self, n: usize) -> f64 {
        (0..n)
            .map(|j| self.eval_on_circle(TAU * j as f64 / n as f64).norm())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Grammar: comma-separated terms `k:re`, where a term may be followed by
/// one more comma-separated token without a colon giving its imaginary
/// part. `"-1:1, 0:4, 1:1"` is `z^-1 + 4 + z`; `"1:0.5,+2"` is
/// `(0.5 + 2i) z`. Repeated exponents are rejected.
impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse(format!("symbol {s:?}: {msg}"));
        let mut terms: Vec<(i32, f64, Option<f64>)> = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(bad("empty term".into()));
            }
            if let Some((k, re)) = token.split_once(':') {
                let k: i32 = k.trim().parse().map_err(|_| bad(format!("bad exponent in {token:?}")))?;
                let re: f64 = re.trim().parse().map_err(|_| bad(format!("bad real part in {token:?}")))?;
                if terms.iter().any(|t| t.0 == k) {
                    return Err(bad(format!("exponent {k} given twice")));
                }
                terms.push((k, re, None));
            } else {
                let im: f64 = token.parse().map_err(|_| bad(format!("bad imaginary part {token:?}")))?;
                match terms.last_mut() {
                    Some(t) if t.2.is_none() => t.2 = Some(im),
                    _ => return Err(bad(format!("imaginary part {token:?} has no term"))),
                }
            }
        }
        if terms.iter().any(|t| !t.1.is_finite() || !t.2.unwrap_or(0.0).is_finite()) {
            return Err(bad("coefficients must be finite".into()));
        }
        Symbol::new(
            terms
                .into_iter()
                .map(|(k, re, im)| (k, Complex64::new(re, im.unwrap_or(0.0)))),
        )
        .map_err(|e| bad(e.to_string()))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}:{}", c.re)?;
            if c.im != 0.0 {
                write!(f, ",{:+}", c.im)?;
            }
        }
        Ok(())
    }
}

/// Winding number of `s(e^{iθ})` about the origin by summing argument
/// increments. The sample count doubles until every increment is below
/// `π/2` in magnitude; the total must then be within 0.01 of an integer
/// multiple of `2π`.
pub fn winding_by_argument(s: &Symbol, samples: usize) -> Result<i64> {
    let min_samples = 8 * (s.m() + s.p() + 1);
    if samples < min_samples {
        return Err(Error::Parameter(format!(
            "need at least {min_samples} samples, got {samples}"
        )));
    }
    let mut n = samples;
    loop {
        let values: Vec<Complex64> = (0..n)
            .map(|j| s.eval_on_circle(TAU * j as f64 / n as f64))
            .collect();
        let min = values.iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min);
        if min <= MODULUS_THRESHOLD {
            return Err(Error::NotFredholm(format!(
                "symbol modulus {min:e} on the circle is below {MODULUS_THRESHOLD:e}"
            )));
        }
        let mut total = 0.0;
        let mut largest: f64 = 0.0;
        for j in 0..n {
            let step = (values[(j + 1) % n] / values[j]).arg();
            largest = largest.max(step.abs());
            total += step;
        }
        if largest < FRAC_PI_2 {
            let turns = total / TAU;
            let w = turns.round();
            if (turns - w).abs() >= 0.01 {
                return Err(Error::SamplingFailure(format!(
                    "argument total {turns} is not near an integer"
                )));
            }
            return Ok(w as i64);
        }
        n *= 2;
        if n > MAX_ARGUMENT_SAMPLES {
            return Err(Error::SamplingFailure(format!(
                "argument steps still exceed π/2 at {} samples",
                n / 2
            )));
        }
    }
}

/// Winding number by the argument principle: roots of `z^m s(z)` inside the
/// unit disk, minus the pole order `m` at the origin.
pub fn winding_by_roots(s: &Symbol) -> Result<i64> {
    let roots = symbol_roots(s)?;
    let mut inside = 0i64;
    for r in &roots {
        let gap = r.norm() - 1.0;
        if gap.abs() < ROOT_CIRCLE_GUARD {
            return Err(Error::NotFredholm(format!(
                "root {r} lies within {ROOT_CIRCLE_GUARD:e} of the unit circle"
            )));
        }
        if gap < 0.0 {
            inside += 1;
        }
    }
    Ok(inside - s.m() as i64)
}

/// All finite roots of `z^m s(z)`, with roots at the origin exact.
pub fn symbol_roots(s: &Symbol) -> Result<Vec<Complex64>> {
    let zero = Complex64::new(0.0, 0.0);
    let low = s.coeffs.iter().take_while(|c| **c == zero).count();
    let high = s.coeffs.iter().rposition(|c| *c != zero).expect("nonzero symbol");
    let mut roots = vec![zero; low];
    roots.extend(polynomial_roots(&s.coeffs[low..=high])?);
    Ok(roots)
}

/// Simultaneous Aberth–Ehrlich iteration for all roots of
/// `sum coeffs[i] z^i`. The leading coefficient must be nonzero.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let degree = coeffs.len().saturating_sub(1);
    let lead = *coeffs.last().ok_or_else(|| Error::Numerical("empty polynomial".into()))?;
    if lead.norm() == 0.0 {
        return Err(Error::Numerical("leading coefficient is zero".into()));
    }
    if degree == 0 {
        return Ok(Vec::new());
    }
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if degree == 1 {
        return Ok(vec![-monic[0]]);
    }

    // Fujiwara's bound places every root inside this radius.
    let radius = (1..=degree)
        .map(|k| {
            let c = monic[degree - k].norm();
            let c = if k == degree { c / 2.0 } else { c };
            c.powf(1.0 / k as f64)
        })
        .fold(0.0, f64::max)
        * 2.0;
    let radius = if radius > 0.0 { radius } else { 1.0 };
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / degree as f64 + 0.4))
        .collect();

    let horner = |x: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };

    let mut converged = false;
    for _ in 0..2000 {
        let mut biggest = 0.0f64;
        for i in 0..degree {
            let (p, dp) = horner(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[i] -= step;
            biggest = biggest.max(step.norm() / (1.0 + z[i].norm()));
        }
        if biggest < 1e-15 {
            converged = true;
            break;
        }
    }

    // Accept slow convergence (clustered roots) when the backward error is
    // already tiny.
    let backward = |x: Complex64| {
        let scale: f64 = monic.iter().rev().fold(0.0, |acc, c| acc * x.norm() + c.norm());
        horner(x).0.norm() / scale
    };
    if !converged && z.iter().any(|&x| backward(x) > 1e-10) {
        return Err(Error::Numerical(
            "root iteration did not converge".into(),
        ));
    }
    if z.iter().any(|x| !x.re.is_finite() || !x.im.is_finite()) {
        return Err(Error::Numerical("root iteration diverged".into()));
    }
    Ok(z)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndexReport {
    pub winding_arg: i64,
    pub winding_roots: i64,
    pub fredholm_index: i64,
    pub min_modulus_on_circle: f64,
    pub methods_agree: bool,
    /// Known analytically for monomial symbols only.
    pub kernel_dim: Option<u64>,
    pub cokernel_dim: Option<u64>,
}

/// Index of `T_s` from the winding correspondence, with both winding
/// methods reported.
pub fn fredholm_index(s: &Symbol) -> Result<IndexReport> {
    let dense = DENSE_SAMPLES.max(64 * (s.m() + s.p() + 1));
    let min_modulus_on_circle = s.min_modulus(dense);
    if min_modulus_on_circle <= MODULUS_THRESHOLD {
        return Err(Error::NotFredholm(format!(
            "symbol modulus {min_modulus_on_circle:e} on the circle is below {MODULUS_THRESHOLD:e}"
        )));
    }
    let winding_roots = winding_by_roots(s)?;
    let samples = 256.max(8 * (s.m() + s.p() + 1));
    let winding_arg = winding_by_argument(s, samples)?;
    let fredholm_index = -winding_roots;
    // T_{z^k}: k > 0 is an isometric shift with k-dimensional cokernel;
    // k < 0 is its adjoint with |k|-dimensional kernel.
    let (kernel_dim, cokernel_dim) = match s.as_monomial() {
        Some((k, _)) if k >= 0 => (Some(0), Some(k as u64)),
        Some((k, _)) => (Some(k.unsigned_abs() as u64), Some(0)),
        None => (None, None),
    };
    Ok(IndexReport {
        winding_arg,
        winding_roots,
        fredholm_index,
        min_modulus_on_circle,
        methods_agree: winding_arg == winding_roots,
        kernel_dim,
        cokernel_dim,
    })
}

pub fn orientation_flip(s: &Symbol) -> Symbol {
    s.orientation_flip()
}

/// The `N x N` finite section `(c_{j-k})` of a Toeplitz operator.
///
/// Every square matrix has index 0, so a truncation cannot exhibit the
/// Fredholm index directly; for monomials the rank deficit `|k|` mirrors
/// the kernel or cokernel of the operator.
#[derive(Clone, Debug, PartialEq)]
pub struct ToeplitzTruncation {
    pub n: usize,
    pub entries: DMatrix<Complex64>,
    pub numerical_rank: usize,
    pub smallest_singular_value: f64,
}

impl ToeplitzTruncation {
    pub fn is_toeplitz(&self) -> bool {
        let n = self.n;
        (1..n).all(|j| (1..n).all(|k| self.entries[(j, k)] == self.entries[(j - 1, k - 1)]))
    }
}

pub fn truncate(s: &Symbol, n: usize) -> Result<ToeplitzTruncation> {
    let band = s.m() + s.p() + 1;
    if n < band {
        return Err(Error::Parameter(format!(
            "truncation size {n} is below the band width {band}"
        )));
    }
    let entries = DMatrix::from_fn(n, n, |j, k| s.coeff(j as i64 - k as i64));
    let singular = entries.clone().svd(false, false).singular_values;
    let numerical_rank = singular.iter().filter(|&&v| v > RANK_TOLERANCE).count();
    let smallest_singular_value = singular.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(ToeplitzTruncation {
        n,
        entries,
        numerical_rank,
        smallest_singular_value,
    })
}

/// Random symbol with band limits in `0..=4` and coefficients uniform in
/// `[-1, 1]^2`, resampled until its minimum circle modulus is at least
/// `min_modulus`.
pub fn random_symbol<R: Rng>(rng: &mut R, min_modulus: f64) -> Symbol {
    loop {
        let m = rng.random_range(0..=4i32);
        let p = rng.random_range(0..=4i32);
        let terms: Vec<(i32, Complex64)> = (-m..=p)
            .map(|k| {
                let c = Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
                (k, c)
            })
            .collect();
        let Ok(s) = Symbol::new(terms) else { continue };
        if s.min_modulus(DENSE_SAMPLES) >= min_modulus {
            return s;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BatchReport {
    pub seed: u64,
    pub symbols: usize,
    pub agreements: usize,
    pub flip_negates: usize,
    pub failures: Vec<String>,
}

/// Cross-checks both winding methods and the orientation flip on a seeded
/// batch of random symbols.
pub fn cross_check_batch(seed: u64, count: usize) -> BatchReport {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut report = BatchReport {
        seed,
        symbols: count,
        agreements: 0,
        flip_negates: 0,
        failures: Vec::new(),
    };
    for _ in 0..count {
        let s = random_symbol(&mut rng, 0.05);
        match (fredholm_index(&s), fredholm_index(&s.orientation_flip())) {
            (Ok(r), Ok(f)) => {
                if r.methods_agree {
                    report.agreements += 1;
                } else {
                    report.failures.push(format!("methods disagree on {s}"));
                }
                if f.fredholm_index == -r.fredholm_index {
                    report.flip_negates += 1;
                } else {
                    report.failures.push(format!("flip does not negate index of {s}"));
                }
            }
            (Err(e), _) | (_, Err(e)) => report.failures.push(format!("{s}: {e}")),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn sym(text: &str) -> Symbol {
        text.parse().unwrap()
    }

    #[test]
    fn trimmed_band_limits() {
        let s = sym("2:1");
        assert_eq!((s.m(), s.p()), (0, 2));
        let s = sym("-3:1");
        assert_eq!((s.m(), s.p()), (3, 0));
        let s = sym("-1:1, 0:4, 1:1");
        assert_eq!((s.m(), s.p()), (1, 1));
        assert!(Symbol::new([(1, c(0.0))]).is_err());
    }

    #[test]
    fn grammar() {
        let s = sym("1:0.5,+2");
        assert_eq!(s.coeff(1), Complex64::new(0.5, 2.0));
        let s = sym(" -1:1 , 0:4,-0.5, 1:1");
        assert_eq!(s.coeff(0), Complex64::new(4.0, -0.5));
        assert_eq!(s.coeff(-1), c(1.0));
        for bad in ["", "1", "1:x", "a:1", "1:1,2,3", "1:1, 1:2", "0:0", "1:1,,2:1", "1:inf"] {
            assert!(matches!(bad.parse::<Symbol>(), Err(Error::Parse(_))), "{bad:?}");
        }
        let s = sym("-2:1.5, 0:-1, 3:0.25,-0.75");
        assert_eq!(sym(&s.to_string()), s);
    }

    #[test]
    fn argument_winding_examples() {
        assert_eq!(winding_by_argument(&sym("1:1"), 64).unwrap(), 1);
        assert_eq!(winding_by_argument(&sym("-3:1"), 64).unwrap(), -3);
        assert_eq!(winding_by_argument(&sym("1:1, 0:-2"), 64).unwrap(), 0);
        assert!(matches!(
            winding_by_argument(&sym("1:1"), 4),
            Err(Error::Parameter(_))
        ));
        // z - 1 vanishes at a sample point
        assert!(matches!(
            winding_by_argument(&sym("1:1, 0:-1"), 64),
            Err(Error::NotFredholm(_))
        ));
    }

    #[test]
    fn argument_sampling_refines() {
        // root at 0.999: the argument swings by nearly π between adjacent
        // coarse samples near θ = 0, so 16 samples must be doubled
        let s = sym("1:1, 0:-0.999");
        assert_eq!(winding_by_argument(&s, 16).unwrap(), 1);
        assert_eq!(winding_by_roots(&s).unwrap(), 1);
    }

    #[test]
    fn root_winding_examples() {
        assert_eq!(winding_by_roots(&sym("1:1")).unwrap(), 1);
        assert_eq!(winding_by_roots(&sym("0:2, -1:1")).unwrap(), 0);
        assert_eq!(winding_by_roots(&sym("-1:1, 0:4, 1:1")).unwrap(), 0);
        assert_eq!(winding_by_roots(&sym("-3:1")).unwrap(), -3);
        assert!(matches!(
            winding_by_roots(&sym("1:1, 0:-1.0000001")),
            Err(Error::NotFredholm(_))
        ));
    }

    #[test]
    fn quadratic_roots_match_formula() {
        // z^2 + 4z + 1: -2 ± sqrt 3
        let roots = symbol_roots(&sym("-1:1, 0:4, 1:1")).unwrap();
        let mut re: Vec<f64> = roots.iter().map(|r| r.re).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] - (-2.0 - 3f64.sqrt())).abs() < 1e-12);
        assert!((re[1] - (-2.0 + 3f64.sqrt())).abs() < 1e-12);
        assert!(roots.iter().all(|r| r.im.abs() < 1e-12));
    }

    #[test]
    fn repeated_roots_are_accepted() {
        // (z - 2)^3
        let roots = polynomial_roots(&[c(-8.0), c(12.0), c(-6.0), c(1.0)]).unwrap();
        assert!(roots.iter().all(|r| (r - c(2.0)).norm() < 1e-4));
    }

    #[test]
    fn monomial_indices() {
        let r = fredholm_index(&sym("3:1")).unwrap();
        assert_eq!(r.fredholm_index, -3);
        assert_eq!((r.kernel_dim, r.cokernel_dim), (Some(0), Some(3)));
        let r = fredholm_index(&sym("-2:1")).unwrap();
        assert_eq!(r.fredholm_index, 2);
        assert_eq!((r.kernel_dim, r.cokernel_dim), (Some(2), Some(0)));
        let r = fredholm_index(&sym("-1:1, 0:4, 1:1")).unwrap();
        assert!(r.methods_agree);
        assert_eq!(r.kernel_dim, None);
        assert!(matches!(
            fredholm_index(&sym("0:1, 1:1")),
            Err(Error::NotFredholm(_))
        ));
    }

    #[test]
    fn flip_and_product() {
        let s = sym("-1:0.2, 1:1, 2:0.1");
        let w = fredholm_index(&s).unwrap().fredholm_index;
        assert_eq!(fredholm_index(&orientation_flip(&s)).unwrap().fredholm_index, -w);
        let t = sym("-2:1, 0:0.3");
        let st = s.product(&t).unwrap();
        assert_eq!(
            fredholm_index(&st).unwrap().fredholm_index,
            w + fredholm_index(&t).unwrap().fredholm_index
        );
        let scaled = s.scaled(Complex64::new(-3.0, 0.5)).unwrap();
        assert_eq!(winding_by_roots(&scaled).unwrap(), winding_by_roots(&s).unwrap());
    }

    #[test]
    fn truncations() {
        let t = truncate(&sym("1:1"), 4).unwrap();
        assert_eq!(t.numerical_rank, 3);
        assert!(t.is_toeplitz());
        for j in 0..4 {
            for k in 0..4 {
                let expect = if j == k + 1 { 1.0 } else { 0.0 };
                assert_eq!(t.entries[(j, k)], c(expect));
            }
        }
        let id = truncate(&sym("0:1"), 3).unwrap();
        assert_eq!(id.numerical_rank, 3);
        assert_eq!(id.entries, DMatrix::identity(3, 3));
        // zero-diagonal tridiagonal of size 5: eigenvalues 2 cos(jπ/6), one is 0
        let tri = truncate(&sym("-1:1, 1:1"), 5).unwrap();
        assert_eq!(tri.numerical_rank, 4);
        assert!(tri.smallest_singular_value < 1e-12);
        assert!(matches!(truncate(&sym("-1:1, 1:1"), 2), Err(Error::Parameter(_))));
    }

    #[test]
    fn monomial_truncation_rank() {
        for k in 0..6 {
            let t = truncate(&Symbol::monomial(k, c(1.0)).unwrap(), 6).unwrap();
            assert_eq!(t.numerical_rank, 6 - k as usize);
            let t = truncate(&Symbol::monomial(-k, c(1.0)).unwrap(), 6).unwrap();
            assert_eq!(t.numerical_rank, 6 - k as usize);
        }
    }

    #[test]
    fn small_batch_agrees() {
        let r = cross_check_batch(7, 20);
        assert_eq!(r.agreements, 20, "{:?}", r.failures);
        assert_eq!(r.flip_negates, 20);
    }
}
