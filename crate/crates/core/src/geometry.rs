//! Plane polylines built from the sums `Z(N, p, q)`, and Cantor interval sets.

use num_complex::Complex;
use num_traits::{FromPrimitive, Num};

use crate::cycsum::CurveSpec;
use crate::digits::u_term_u64;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::words::cantor;

/// Largest vertex count the curve builders will allocate.
pub const MAX_VERTICES: u64 = 1 << 22;

/// Largest Cantor generation materialised as an explicit interval list.
pub const MAX_CANTOR_GENERATION: u32 = 14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(T::zero(), T::zero())
    }

    pub fn to_complex(self) -> Complex<T> {
        Complex::new(self.x, self.y)
    }

    pub fn distance(self, other: Point<T>) -> T {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Distance to the closed segment `[a, b]`.
    pub fn distance_to_segment(self, a: Point<T>, b: Point<T>) -> T {
        let (dx, dy) = (b.x - a.x, b.y - a.y);
        let len2 = dx * dx + dy * dy;
        if len2 == T::zero() {
            return self.distance(a);
        }
        let t = ((self.x - a.x) * dx + (self.y - a.y) * dy) / len2;
        let t = t.max(T::zero()).min(T::one());
        self.distance(Point::new(a.x + t * dx, a.y + t * dy))
    }
}

impl<T> From<Complex<T>> for Point<T> {
    fn from(z: Complex<T>) -> Self {
        Point { x: z.re, y: z.im }
    }
}

/// An ordered, nonempty list of points.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline<T> {
    points: Vec<Point<T>>,
}

impl<T: Real> Polyline<T> {
    pub fn new(points: Vec<Point<T>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Domain("a polyline needs at least one point".into()));
        }
        if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::Domain("polyline coordinates must be finite".into()));
        }
        Ok(Polyline { points })
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn start(&self) -> Point<T> {
        self.points[0]
    }

    pub fn end(&self) -> Point<T> {
        *self.points.last().expect("nonempty")
    }

    pub fn segments(&self) -> impl Iterator<Item = (Point<T>, Point<T>)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn length(&self) -> T {
        self.segments()
            .map(|(a, b)| a.distance(b))
            .fold(T::zero(), |acc, l| acc + l)
    }

    /// Applies `z ↦ factor·z + shift` to every vertex.
    pub fn transformed(&self, factor: Complex<T>, shift: Complex<T>) -> Self {
        Polyline {
            points: self
                .points
                .iter()
                .map(|p| (p.to_complex() * factor + shift).into())
                .collect(),
        }
    }

    /// Converts the coordinates to another scalar type.
    pub fn cast<U: Real>(&self) -> Polyline<U> {
        Polyline {
            points: self
                .points
                .iter()
                .map(|p| Point {
                    x: U::from(p.x).expect("finite"),
                    y: U::from(p.y).expect("finite"),
                })
                .collect(),
        }
    }
}

fn check_budget(vertices: u64) -> Result<usize> {
    if vertices > MAX_VERTICES {
        return Err(Error::Resource(format!(
            "{vertices} vertices (limit {MAX_VERTICES})"
        )));
    }
    Ok(vertices as usize)
}

/// Vertices `v_0 = 0`, `v_k = v_{k-1} + u_{k-1}` for `k ≤ count`.
pub fn partial_sum_polyline<T: Real>(spec: &CurveSpec<T>, count: u64) -> Result<Polyline<T>> {
    let vertices = check_budget(count.saturating_add(1))?;
    let mut points = Vec::with_capacity(vertices);
    let mut pos = Complex::new(T::zero(), T::zero());
    points.push(Point::from(pos));
    for k in 0..count {
        pos = pos + u_term_u64(k, spec.p, spec.q).to_complex::<T>();
        points.push(pos.into());
    }
    Polyline::new(points)
}

/// Generation `n` of the segment substitution `z ↦ (z w_0, …, z w_{Q-1})`
/// started from the unit segment, without renormalisation.
pub fn substitution_polyline<T: Real>(spec: &CurveSpec<T>, n: u32) -> Result<Polyline<T>> {
    let total = spec
        .block
        .checked_pow(n)
        .and_then(|v| v.checked_add(1))
        .unwrap_or(u64::MAX);
    check_budget(total)?;
    // offsets c_r = w_0 + … + w_{r-1}
    let mut offsets = Vec::with_capacity(spec.weights.len());
    let mut acc = Complex::new(T::zero(), T::zero());
    for w in spec.weights_complex() {
        offsets.push(acc);
        acc = acc + w;
    }
    let sigma = spec.sigma_complex;
    let mut points = vec![Point::origin(), Point::new(T::one(), T::zero())];
    for _ in 0..n {
        let mut next = Vec::with_capacity((points.len() - 1) * offsets.len() + 1);
        for pair in points.windows(2) {
            let start = pair[0].to_complex();
            let z = pair[1].to_complex() - start;
            let base = start * sigma;
            next.extend(offsets.iter().map(|&c| Point::from(base + z * c)));
        }
        next.push((points.last().expect("nonempty").to_complex() * sigma).into());
        points = next;
    }
    Polyline::new(points)
}

/// Multiplies every vertex by `σ^{-n}` (complex, so rotation is included).
pub fn renormalize<T: Real>(
    poly: &Polyline<T>,
    spec: &CurveSpec<T>,
    n: u32,
) -> Result<Polyline<T>> {
    let sigma = spec.sigma_complex;
    if sigma.norm() < T::lit(1e-12) {
        return Err(Error::Domain(format!(
            "σ = Z({}) vanishes for q = {}, nothing to renormalise by",
            spec.block, spec.q
        )));
    }
    let factor = sigma.inv().powu(n);
    Ok(poly.transformed(factor, Complex::new(T::zero(), T::zero())))
}

/// Points along `poly` no further than `step` apart, vertices included.
fn samples<T: Real>(poly: &Polyline<T>, step: T) -> Vec<Point<T>> {
    let mut out = vec![poly.start()];
    for (a, b) in poly.segments() {
        let pieces = (a.distance(b) / step).ceil().to_usize().unwrap_or(1).max(1);
        let denom = T::from_usize(pieces).expect("small count");
        for i in 1..pieces {
            let t = T::from_usize(i).expect("small count") / denom;
            out.push(Point::new(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t));
        }
        out.push(b);
    }
    out
}

fn directed_hausdorff<T: Real>(from: &Polyline<T>, to: &Polyline<T>, step: T) -> T {
    let pts = to.points();
    let segs = pts.len().saturating_sub(1).max(1);
    let seg = |i: usize| {
        if pts.len() == 1 {
            (pts[0], pts[0])
        } else {
            (pts[i], pts[i + 1])
        }
    };
    let mut worst = T::zero();
    let mut hint = 0;
    for s in samples(from, step) {
        let mut best = T::infinity();
        let mut best_idx = hint;
        for offset in 0..segs {
            let idx = (hint + offset) % segs;
            let (a, b) = seg(idx);
            let d = s.distance_to_segment(a, b);
            if d < best {
                best = d;
                best_idx = idx;
            }
            // this sample can no longer raise the maximum
            if best <= worst {
                break;
            }
        }
        hint = best_idx;
        if best > worst {
            worst = best;
        }
    }
    worst
}

/// Symmetric Hausdorff distance between two polylines, from points sampled at
/// most `step` apart on each curve against exact segment distances on the other.
pub fn hausdorff_distance<T: Real>(a: &Polyline<T>, b: &Polyline<T>, step: T) -> T {
    assert!(step > T::zero(), "sampling step must be positive");
    if a.points() == b.points() {
        return T::zero();
    }
    directed_hausdorff(a, b, step).max(directed_hausdorff(b, a, step))
}

/// Sorted, pairwise disjoint closed intervals `[l, r]` with `l < r`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalSet<T> {
    intervals: Vec<(T, T)>,
}

impl<T> IntervalSet<T> {
    pub fn intervals(&self) -> &[(T, T)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

impl<T: Clone + Num + PartialOrd> IntervalSet<T> {
    pub fn new(intervals: Vec<(T, T)>) -> Result<Self> {
        for (l, r) in &intervals {
            if l >= r {
                return Err(Error::Domain("interval with l >= r".into()));
            }
        }
        for pair in intervals.windows(2) {
            if pair[0].1 >= pair[1].0 {
                return Err(Error::Domain(
                    "intervals must be sorted and disjoint".into(),
                ));
            }
        }
        Ok(IntervalSet { intervals })
    }

    pub fn total_length(&self) -> T {
        self.intervals
            .iter()
            .fold(T::zero(), |acc, (l, r)| acc + r.clone() - l.clone())
    }

    /// True when every interval of `other` lies inside an interval of `self`.
    pub fn contains_set(&self, other: &IntervalSet<T>) -> bool {
        other
            .intervals
            .iter()
            .all(|(l, r)| self.intervals.iter().any(|(ol, or)| ol <= l && r <= or))
    }
}

/// Generation `k` of the ternary Cantor set from the fixed point of
/// `0 → 000, 1 → 101`: the `m`-th letter, when it is `1`, contributes
/// `[m·3^{-k}, (m+1)·3^{-k}]`.
pub fn cantor_intervals<T>(k: u32) -> Result<IntervalSet<T>>
where
    T: Clone + Num + PartialOrd + FromPrimitive,
{
    if k > MAX_CANTOR_GENERATION {
        return Err(Error::Resource(format!(
            "Cantor generation {k} (limit {MAX_CANTOR_GENERATION})"
        )));
    }
    let cells = 3u64.pow(k);
    let word = cantor().fixed_point_prefix(&'1', cells as usize)?;
    let denom = T::from_u64(cells).expect("representable");
    let mut intervals = Vec::new();
    for (m, letter) in word.iter().enumerate() {
        if *letter == '1' {
            let l = T::from_usize(m).expect("representable") / denom.clone();
            let r = T::from_usize(m + 1).expect("representable") / denom.clone();
            intervals.push((l, r));
        }
    }
    IntervalSet::new(intervals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycsum::make_curve_spec;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn koch() -> CurveSpec<f64> {
        make_curve_spec(2, 3).unwrap()
    }

    fn close(p: Point<f64>, x: f64, y: f64, tol: f64) -> bool {
        (p.x - x).abs() <= tol && (p.y - y).abs() <= tol
    }

    #[test]
    fn partial_sums_first_steps() {
        let poly = partial_sum_polyline(&koch(), 4).unwrap();
        let h = 3f64.sqrt() / 2.0;
        let expected = [(0.0, 0.0), (1.0, 0.0), (1.5, -h), (2.0, 0.0), (3.0, 0.0)];
        assert_eq!(poly.len(), 5);
        for (p, (x, y)) in poly.points().iter().zip(expected) {
            assert!(close(*p, x, y, 1e-12), "{p:?}");
        }
        let one = partial_sum_polyline(&koch(), 1).unwrap();
        assert_eq!(one.points(), &[Point::new(0.0, 0.0), Point::new(1.0, 0.0)]);
    }

    #[test]
    fn substitution_generations() {
        let spec = koch();
        let g0 = substitution_polyline(&spec, 0).unwrap();
        assert_eq!(g0.points(), &[Point::new(0.0, 0.0), Point::new(1.0, 0.0)]);
        let g1 = substitution_polyline(&spec, 1).unwrap();
        let ps = partial_sum_polyline(&spec, 4).unwrap();
        for (a, b) in g1.points().iter().zip(ps.points()) {
            assert!(a.distance(*b) < 1e-12);
        }
        let g2 = substitution_polyline(&spec, 2).unwrap();
        assert_eq!(g2.len(), 17);
        assert!(close(g2.end(), 9.0, 0.0, 1e-12));
        assert!(matches!(
            substitution_polyline(&spec, 12),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn renormalised_first_generation() {
        let spec = koch();
        let g0 = substitution_polyline(&spec, 0).unwrap();
        assert_eq!(renormalize(&g0, &spec, 0).unwrap(), g0);
        let g1 = renormalize(&substitution_polyline(&spec, 1).unwrap(), &spec, 1).unwrap();
        let expected = [
            (0.0, 0.0),
            (1.0 / 3.0, 0.0),
            (0.5, -3f64.sqrt() / 6.0),
            (2.0 / 3.0, 0.0),
            (1.0, 0.0),
        ];
        for (p, (x, y)) in g1.points().iter().zip(expected) {
            assert!(close(*p, x, y, 1e-12), "{p:?}");
        }
    }

    #[test]
    fn vanishing_sigma_is_rejected() {
        let mut spec = koch();
        spec.sigma_complex = Complex::new(0.0, 0.0);
        let g0 = substitution_polyline(&koch(), 0).unwrap();
        assert!(matches!(renormalize(&g0, &spec, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn hausdorff_basics() {
        let a = Polyline::new(vec![Point::new(0.0, 0.0)]).unwrap();
        let b = Polyline::new(vec![Point::new(1.0, 0.0)]).unwrap();
        assert_eq!(hausdorff_distance(&a, &b, 1e-3), 1.0);
        let spec = koch();
        let g1 = renormalize(&substitution_polyline(&spec, 1).unwrap(), &spec, 1).unwrap();
        assert_eq!(hausdorff_distance(&g1, &g1, 1e-3), 0.0);
        let g0 = substitution_polyline(&spec, 0).unwrap();
        let d = hausdorff_distance(&g0, &g1, 1e-3);
        assert!((d - 3f64.sqrt() / 6.0).abs() < 1e-6, "{d}");
    }

    #[test]
    fn hausdorff_refines_with_step() {
        // the largest gap sits mid-segment, so coarse sampling underestimates it
        let a = Polyline::new(vec![Point::new(0.0, 0.0), Point::new(2.0, 0.0)]).unwrap();
        let b = Polyline::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(2.0, 1.0),
            Point::new(2.0, 0.0),
        ])
        .unwrap();
        let coarse: f64 = directed_hausdorff(&a, &b, 0.7);
        let fine: f64 = directed_hausdorff(&a, &b, 1e-3);
        assert!(coarse < fine);
        assert!(fine - coarse <= 0.7);
        assert!((fine - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cantor_generations() {
        let k0: IntervalSet<BigRational> = cantor_intervals(0).unwrap();
        let one = BigRational::from_integer(BigInt::from(1));
        assert_eq!(
            k0.intervals(),
            &[(BigRational::from_integer(BigInt::from(0)), one.clone())]
        );
        let k1: IntervalSet<BigRational> = cantor_intervals(1).unwrap();
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(k1.len(), 2);
        assert_eq!(k1.intervals()[0].1, third);
        let k2: IntervalSet<BigRational> = cantor_intervals(2).unwrap();
        assert_eq!(k2.len(), 4);
        assert_eq!(
            k2.total_length(),
            BigRational::new(BigInt::from(4), BigInt::from(9))
        );
        assert!(k1.contains_set(&k2));
        assert!(!k2.contains_set(&k1));
        assert!(matches!(
            cantor_intervals::<f64>(20),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn interval_validation() {
        assert!(IntervalSet::new(vec![(0.5, 0.2)]).is_err());
        assert!(IntervalSet::new(vec![(0.0, 0.5), (0.4, 0.6)]).is_err());
        assert!(IntervalSet::new(vec![(0.0, 0.1), (0.2, 0.3)]).is_ok());
    }

    #[test]
    fn single_precision_curves() {
        let spec = make_curve_spec::<f32>(2, 3).unwrap();
        let g3 = renormalize(&substitution_polyline(&spec, 3).unwrap(), &spec, 3).unwrap();
        assert!((g3.end().x - 1.0).abs() < 1e-5);
        assert!(g3.end().y.abs() < 1e-5);
    }
}
