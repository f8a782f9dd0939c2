//! Exact planar convex-set kernel.
//!
//! Sets are canonical convex polygons: counter-clockwise vertex lists whose
//! first vertex is the lexicographic minimum, with points and segments as
//! first-class degenerate cases. Canonical form makes set equality equal to
//! representation equality, so golden values can be asserted exactly.
//!
//! Hull and orientation predicates use a fixed cross-product epsilon of
//! 1e-12; inputs are expected at user scale. Hausdorff distances are computed
//! from vertex-to-set distances (exact for polygons), independent of any
//! direction net, so they can serve as an oracle for the LP pipeline.

use crate::lp;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Cross-product tolerance for hull/orientation predicates.
pub const EPS_CROSS: f64 = 1e-12;
/// Unit-vector tolerance for support directions.
pub const EPS_UNIT: f64 = 1e-12;
/// Orthogonality tolerance for transforms.
pub const EPS_ORTHO: f64 = 1e-10;

pub type Mat2 = [[f64; 2]; 2];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }
    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl std::ops::Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}
impl std::ops::Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}
impl std::ops::Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}
impl std::ops::Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("empty input point list")]
    EmptyInput,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("direction is not a unit vector")]
    NonUnit,
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("negative scale factor")]
    NegativeScale,
    #[error("invalid interval: lo > hi or non-finite")]
    InvalidInterval,
}

/// Compact convex set as a canonical vertex list (CCW, lexicographic-minimum
/// first; 1 vertex = point, 2 = segment).
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

fn lex_less(a: Point2, b: Point2) -> bool {
    a.x < b.x || (a.x == b.x && a.y < b.y)
}

/// Convex hull of arbitrary finite points in canonical form. Collinear point
/// sets collapse to a segment, coincident points to a single point.
pub fn canonicalize(points: &[Point2]) -> Result<ConvexPolygon, GeometryError> {
    if points.is_empty() {
        return Err(GeometryError::EmptyInput);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(GeometryError::NonFinite);
    }
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap().then(a.y.partial_cmp(&b.y).unwrap()));
    pts.dedup_by(|a, b| a.x == b.x && a.y == b.y);
    if pts.len() == 1 {
        return Ok(ConvexPolygon { vertices: pts });
    }
    // monotone chain with strict turns (cross <= EPS_CROSS drops the middle)
    let mut lower: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 {
            let a = lower[lower.len() - 2];
            let b = lower[lower.len() - 1];
            if (b - a).cross(p - a) <= EPS_CROSS {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p);
    }
    let mut upper: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 {
            let a = upper[upper.len() - 2];
            let b = upper[upper.len() - 1];
            if (b - a).cross(p - a) <= EPS_CROSS {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    let mut hull = lower;
    hull.extend(upper);
    if hull.len() < 2 {
        // fully collinear input: keep the two lexicographic extremes
        let first = pts[0];
        let last = pts[pts.len() - 1];
        if first == last {
            return Ok(ConvexPolygon { vertices: vec![first] });
        }
        return Ok(ConvexPolygon { vertices: vec![first, last] });
    }
    // rotate so the lexicographic minimum comes first
    let start = (0..hull.len())
        .min_by(|&a, &b| {
            if lex_less(hull[a], hull[b]) {
                std::cmp::Ordering::Less
            } else if lex_less(hull[b], hull[a]) {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        })
        .unwrap();
    hull.rotate_left(start);
    Ok(ConvexPolygon { vertices: hull })
}

impl ConvexPolygon {
    pub fn from_points(points: &[Point2]) -> Result<Self, GeometryError> {
        canonicalize(points)
    }

    pub fn point(p: Point2) -> Self {
        ConvexPolygon { vertices: vec![p] }
    }

    pub fn segment(a: Point2, b: Point2) -> Self {
        canonicalize(&[a, b]).expect("finite endpoints")
    }

    /// Regular k-gon with vertices on the circle (polygonal ball stand-in).
    pub fn regular_ngon(center: Point2, radius: f64, k: usize) -> Self {
        assert!(k >= 3 && radius >= 0.0);
        if radius == 0.0 {
            return ConvexPolygon::point(center);
        }
        let pts: Vec<Point2> = (0..k)
            .map(|i| {
                let th = 2.0 * std::f64::consts::PI * (i as f64) / (k as f64);
                Point2::new(center.x + radius * th.cos(), center.y + radius * th.sin())
            })
            .collect();
        canonicalize(&pts).expect("regular polygon is finite")
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Support function value without direction validation (internal use).
    pub(crate) fn support_raw(&self, u: Point2) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn translate(&self, v: Point2) -> ConvexPolygon {
        ConvexPolygon { vertices: self.vertices.iter().map(|&p| p + v).collect() }
    }
}

/// `h_P(u) = max_{v ∈ P} u·v`; `u` must be unit within 1e-12.
pub fn support(p: &ConvexPolygon, u: Point2) -> Result<f64, GeometryError> {
    if (u.norm() - 1.0).abs() > EPS_UNIT {
        return Err(GeometryError::NonUnit);
    }
    Ok(p.support_raw(u))
}

/// Minkowski sum in canonical form. Non-degenerate pairs use the linear-time
/// CCW edge merge; pairs involving points or segments fall back to the hull
/// of pairwise vertex sums.
pub fn minkowski_sum(p: &ConvexPolygon, q: &ConvexPolygon) -> ConvexPolygon {
    let (vp, vq) = (p.vertices(), q.vertices());
    if vp.len() >= 3 && vq.len() >= 3 {
        let start = |v: &[Point2]| {
            (0..v.len())
                .min_by(|&a, &b| {
                    v[a].y
                        .partial_cmp(&v[b].y)
                        .unwrap()
                        .then(v[a].x.partial_cmp(&v[b].x).unwrap())
                })
                .unwrap()
        };
        let (ia0, ib0) = (start(vp), start(vq));
        let mut out = Vec::with_capacity(vp.len() + vq.len());
        let (mut i, mut j) = (0usize, 0usize);
        while i < vp.len() || j < vq.len() {
            let a = vp[(ia0 + i) % vp.len()];
            let b = vq[(ib0 + j) % vq.len()];
            out.push(a + b);
            let ea = vp[(ia0 + i + 1) % vp.len()] - a;
            let eb = vq[(ib0 + j + 1) % vq.len()] - b;
            if i == vp.len() {
                j += 1;
            } else if j == vq.len() {
                i += 1;
            } else {
                let c = ea.cross(eb);
                if c > EPS_CROSS {
                    i += 1;
                } else if c < -EPS_CROSS {
                    j += 1;
                } else {
                    i += 1;
                    j += 1;
                }
            }
        }
        canonicalize(&out).expect("finite sums")
    } else {
        let mut sums = Vec::with_capacity(vp.len() * vq.len());
        for &a in vp {
            for &b in vq {
                sums.push(a + b);
            }
        }
        canonicalize(&sums).expect("finite sums")
    }
}

fn dist_point_segment(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = b - a;
    let denom = ab.dot(ab);
    if denom <= 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(ab) / denom).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Euclidean distance from a point to the convex set.
pub fn dist_point_polygon(p: Point2, poly: &ConvexPolygon) -> f64 {
    let v = poly.vertices();
    match v.len() {
        1 => (p - v[0]).norm(),
        2 => dist_point_segment(p, v[0], v[1]),
        n => {
            let mut inside = true;
            let mut dmin = f64::INFINITY;
            for i in 0..n {
                let a = v[i];
                let b = v[(i + 1) % n];
                if (b - a).cross(p - a) < -EPS_CROSS {
                    inside = false;
                }
                dmin = dmin.min(dist_point_segment(p, a, b));
            }
            if inside {
                0.0
            } else {
                dmin
            }
        }
    }
}

/// Exact Hausdorff distance between convex polygons: the directed suprema are
/// attained at vertices because distance-to-a-convex-set is convex.
pub fn hausdorff(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    let d1 = p
        .vertices()
        .iter()
        .map(|&v| dist_point_polygon(v, q))
        .fold(0.0, f64::max);
    let d2 = q
        .vertices()
        .iter()
        .map(|&v| dist_point_polygon(v, p))
        .fold(0.0, f64::max);
    d1.max(d2)
}

/// Chebyshev center: the largest inscribed ball, via a 3-variable LP over the
/// edge halfplanes. Points and segments have radius 0.
pub fn inscribed_radius(p: &ConvexPolygon) -> (f64, Point2) {
    let v = p.vertices();
    match v.len() {
        1 => (0.0, v[0]),
        2 => (0.0, (v[0] + v[1]) * 0.5),
        n => {
            let mut constraints = Vec::with_capacity(n);
            for i in 0..n {
                let a = v[i];
                let b = v[(i + 1) % n];
                let e = b - a;
                let len = e.norm();
                // outward normal of a CCW edge
                let nx = e.y / len;
                let ny = -e.x / len;
                constraints.push(lp::Constraint::new(
                    vec![(0, nx), (1, ny), (2, 1.0)],
                    lp::Relation::Le,
                    nx * a.x + ny * a.y,
                ));
            }
            let program = lp::LinearProgram {
                num_vars: 3,
                objective: vec![0.0, 0.0, -1.0],
                constraints,
                bounds: vec![lp::Bounds::free(), lp::Bounds::free(), lp::Bounds::lower(0.0)],
            };
            let sol = lp::solve(&program).expect("well-formed Chebyshev program");
            debug_assert_eq!(sol.status, lp::Status::Optimal);
            (sol.values[2].max(0.0), Point2::new(sol.values[0], sol.values[1]))
        }
    }
}

/// Minimum enclosing circle of the vertices (randomized incremental over at
/// most three support points; deterministic fixed-seed shuffle).
pub fn circumscribed_radius(p: &ConvexPolygon) -> (f64, Point2) {
    #[derive(Clone, Copy)]
    struct Circle {
        c: Point2,
        r: f64,
    }
    fn contains(c: &Circle, p: Point2) -> bool {
        (p - c.c).norm() <= c.r + 1e-10 * (1.0 + c.r)
    }
    fn diameter(a: Point2, b: Point2) -> Circle {
        let c = (a + b) * 0.5;
        Circle { c, r: (a - c).norm().max((b - c).norm()) }
    }
    fn circumcircle(a: Point2, b: Point2, c: Point2) -> Option<Circle> {
        let ox = (a.x.min(b.x).min(c.x) + a.x.max(b.x).max(c.x)) / 2.0;
        let oy = (a.y.min(b.y).min(c.y) + a.y.max(b.y).max(c.y)) / 2.0;
        let (ax, ay) = (a.x - ox, a.y - oy);
        let (bx, by) = (b.x - ox, b.y - oy);
        let (cx, cy) = (c.x - ox, c.y - oy);
        let d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0;
        if d.abs() < 1e-14 {
            return None;
        }
        let x = ox
            + ((ax * ax + ay * ay) * (by - cy)
                + (bx * bx + by * by) * (cy - ay)
                + (cx * cx + cy * cy) * (ay - by))
                / d;
        let y = oy
            + ((ax * ax + ay * ay) * (cx - bx)
                + (bx * bx + by * by) * (ax - cx)
                + (cx * cx + cy * cy) * (bx - ax))
                / d;
        let center = Point2::new(x, y);
        let r = (a - center).norm().max((b - center).norm()).max((c - center).norm());
        Some(Circle { c: center, r })
    }
    let v = p.vertices();
    if v.len() == 1 {
        return (0.0, v[0]);
    }
    let mut pts: Vec<Point2> = v.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d65632d736565);
    pts.shuffle(&mut rng);
    let mut circle = Circle { c: pts[0], r: 0.0 };
    for i in 1..pts.len() {
        if contains(&circle, pts[i]) {
            continue;
        }
        circle = Circle { c: pts[i], r: 0.0 };
        for j in 0..i {
            if contains(&circle, pts[j]) {
                continue;
            }
            circle = diameter(pts[i], pts[j]);
            for k in 0..j {
                if contains(&circle, pts[k]) {
                    continue;
                }
                if let Some(c3) = circumcircle(pts[i], pts[j], pts[k]) {
                    circle = c3;
                }
            }
        }
    }
    (circle.r, circle.c)
}

/// Image under an orthogonal map plus shift, re-canonicalized.
pub fn transform(p: &ConvexPolygon, t: Mat2, shift: Point2) -> Result<ConvexPolygon, GeometryError> {
    let dot_col = |a: usize, b: usize| t[0][a] * t[0][b] + t[1][a] * t[1][b];
    if (dot_col(0, 0) - 1.0).abs() > EPS_ORTHO
        || (dot_col(1, 1) - 1.0).abs() > EPS_ORTHO
        || dot_col(0, 1).abs() > EPS_ORTHO
    {
        return Err(GeometryError::NotOrthogonal);
    }
    let mapped: Vec<Point2> = p
        .vertices()
        .iter()
        .map(|&v| {
            Point2::new(
                t[0][0] * v.x + t[0][1] * v.y + shift.x,
                t[1][0] * v.x + t[1][1] * v.y + shift.y,
            )
        })
        .collect();
    canonicalize(&mapped)
}

pub fn rotation(theta: f64) -> Mat2 {
    let (s, c) = theta.sin_cos();
    [[c, -s], [s, c]]
}

/// `λ·P` for λ ≥ 0; λ = 0 collapses to the origin.
pub fn scale(p: &ConvexPolygon, lambda: f64) -> Result<ConvexPolygon, GeometryError> {
    if lambda.is_nan() || lambda < 0.0 {
        return Err(GeometryError::NegativeScale);
    }
    if lambda == 0.0 {
        return Ok(ConvexPolygon::point(Point2::new(0.0, 0.0)));
    }
    canonicalize(&p.vertices().iter().map(|&v| v * lambda).collect::<Vec<_>>())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ball2 {
    pub center: Point2,
    pub radius: f64,
}

impl Ball2 {
    pub fn new(center: Point2, radius: f64) -> Self {
        assert!(radius >= 0.0, "ball radius must be nonnegative");
        Ball2 { center, radius }
    }

    /// Inscribed regular k-gon approximation.
    pub fn to_polygon(self, k: usize) -> ConvexPolygon {
        if self.radius == 0.0 {
            ConvexPolygon::point(self.center)
        } else {
            ConvexPolygon::regular_ngon(self.center, self.radius, k)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval1 {
    pub lo: f64,
    pub hi: f64,
}

impl Interval1 {
    pub fn new(lo: f64, hi: f64) -> Result<Self, GeometryError> {
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(GeometryError::InvalidInterval);
        }
        Ok(Interval1 { lo, hi })
    }
    pub fn width(self) -> f64 {
        self.hi - self.lo
    }
    pub fn midpoint(self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
    /// Embedding on the x-axis of the plane.
    pub fn to_segment(self) -> ConvexPolygon {
        ConvexPolygon::segment(Point2::new(self.lo, 0.0), Point2::new(self.hi, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(f64, f64)]) -> ConvexPolygon {
        canonicalize(&pts.iter().map(|&(x, y)| Point2::new(x, y)).collect::<Vec<_>>()).unwrap()
    }

    fn unit_square() -> ConvexPolygon {
        poly(&[(-0.5, -0.5), (0.5, -0.5), (0.5, 0.5), (-0.5, 0.5)])
    }

    #[test]
    fn canonicalize_degenerate() {
        let p = poly(&[(0.0, 0.0)]);
        assert_eq!(p.vertices(), &[Point2::new(0.0, 0.0)]);
        let s = poly(&[(0.0, 0.0), (1.0, 0.0), (0.5, 0.0)]);
        assert_eq!(s.vertices(), &[Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)]);
    }

    #[test]
    fn canonicalize_pentagon_drops_interior() {
        // brute-force oracle: a point is a hull vertex iff removing it
        // changes the hull of the remaining points
        let pts = [(0.0, 0.0), (4.0, 0.0), (6.0, 2.0), (3.0, 4.0), (1.0, 2.0), (3.0, 1.0)];
        let p = poly(&pts);
        assert_eq!(p.vertices().len(), 5);
        assert_eq!(p.vertices()[0], Point2::new(0.0, 0.0));
        for v in p.vertices() {
            assert!(pts.contains(&(v.x, v.y)));
        }
        assert!(!p.vertices().contains(&Point2::new(3.0, 1.0)));
        // CCW orientation
        let v = p.vertices();
        for i in 0..v.len() {
            let a = v[i];
            let b = v[(i + 1) % v.len()];
            let c = v[(i + 2) % v.len()];
            assert!((b - a).cross(c - a) > 0.0);
        }
    }

    #[test]
    fn canonicalize_idempotent() {
        let p = poly(&[(0.0, 1.0), (2.0, -1.0), (-1.0, -1.0), (1.5, 1.5)]);
        let q = canonicalize(p.vertices()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn canonicalize_errors() {
        assert!(matches!(canonicalize(&[]), Err(GeometryError::EmptyInput)));
        assert!(matches!(
            canonicalize(&[Point2::new(f64::NAN, 0.0)]),
            Err(GeometryError::NonFinite)
        ));
    }

    #[test]
    fn support_examples() {
        let sq = unit_square();
        assert_eq!(support(&sq, Point2::new(1.0, 0.0)).unwrap(), 0.5);
        let pt = ConvexPolygon::point(Point2::new(2.0, 3.0));
        assert_eq!(support(&pt, Point2::new(0.0, 1.0)).unwrap(), 3.0);
        let pent = poly(&[(0.0, 0.0), (4.0, 0.0), (6.0, 2.0), (3.0, 4.0), (1.0, 2.0)]);
        assert_eq!(support(&pent, Point2::new(1.0, 0.0)).unwrap(), 6.0);
        assert!(matches!(
            support(&sq, Point2::new(1.0, 1.0)),
            Err(GeometryError::NonUnit)
        ));
    }

    #[test]
    fn minkowski_examples() {
        // [-t,t]x{0} ⊕ {0}x[-1,1] is the rectangle [-t,t]x[-1,1]
        let t = 0.75;
        let a = ConvexPolygon::segment(Point2::new(-t, 0.0), Point2::new(t, 0.0));
        let b = ConvexPolygon::segment(Point2::new(0.0, -1.0), Point2::new(0.0, 1.0));
        let s = minkowski_sum(&a, &b);
        assert_eq!(s, poly(&[(-t, -1.0), (t, -1.0), (t, 1.0), (-t, 1.0)]));
        // identity element
        let sq = unit_square();
        assert_eq!(minkowski_sum(&sq, &ConvexPolygon::point(Point2::new(0.0, 0.0))), sq);
        // two segments span the unit square
        let e1 = ConvexPolygon::segment(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0));
        let e2 = ConvexPolygon::segment(Point2::new(0.0, 0.0), Point2::new(0.0, 1.0));
        assert_eq!(
            minkowski_sum(&e1, &e2),
            poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
        );
    }

    #[test]
    fn minkowski_edge_merge_matches_pairwise_hull() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        use rand::Rng;
        for _ in 0..200 {
            let rand_poly = |rng: &mut ChaCha8Rng| {
                let n = rng.gen_range(3..=8);
                let pts: Vec<Point2> = (0..n)
                    .map(|_| Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                    .collect();
                canonicalize(&pts).unwrap()
            };
            let p = rand_poly(&mut rng);
            let q = rand_poly(&mut rng);
            if p.vertices().len() < 3 || q.vertices().len() < 3 {
                continue;
            }
            let fast = minkowski_sum(&p, &q);
            let mut sums = Vec::new();
            for &a in p.vertices() {
                for &b in q.vertices() {
                    sums.push(a + b);
                }
            }
            let slow = canonicalize(&sums).unwrap();
            assert!(hausdorff(&fast, &slow) <= 1e-9, "fast {fast:?} slow {slow:?}");
        }
    }

    #[test]
    fn support_additivity_on_sums() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        use rand::Rng;
        for _ in 0..50 {
            let rand_poly = |rng: &mut ChaCha8Rng| {
                let n = rng.gen_range(1..=8);
                let pts: Vec<Point2> = (0..n)
                    .map(|_| Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                    .collect();
                canonicalize(&pts).unwrap()
            };
            let p = rand_poly(&mut rng);
            let q = rand_poly(&mut rng);
            let s = minkowski_sum(&p, &q);
            for i in 0..64 {
                let th = 2.0 * std::f64::consts::PI * (i as f64) / 64.0;
                let u = Point2::new(th.cos(), th.sin());
                let lhs = s.support_raw(u);
                let rhs = p.support_raw(u) + q.support_raw(u);
                assert!((lhs - rhs).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn hausdorff_examples() {
        let a = ConvexPolygon::segment(Point2::new(-0.5, 0.0), Point2::new(0.5, 0.0));
        let b = ConvexPolygon::segment(Point2::new(0.0, -1.0), Point2::new(0.0, 1.0));
        assert!((hausdorff(&a, &b) - 1.0).abs() < 1e-12);
        let sq = unit_square();
        assert_eq!(hausdorff(&sq, &sq), 0.0);
        let shifted = sq.translate(Point2::new(0.3, 0.0));
        assert!((hausdorff(&sq, &shifted) - 0.3).abs() < 1e-12);
    }

    #[test]
    fn inscribed_examples() {
        let seg = ConvexPolygon::segment(Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0));
        let (r, c) = inscribed_radius(&seg);
        assert_eq!(r, 0.0);
        assert_eq!(c, Point2::new(0.0, 0.0));
        let (r, c) = inscribed_radius(&unit_square());
        assert!((r - 0.5).abs() < 1e-9);
        assert!(c.norm() < 1e-9);
        let (r, _) = inscribed_radius(&ConvexPolygon::point(Point2::new(1.0, 1.0)));
        assert_eq!(r, 0.0);
    }

    #[test]
    fn circumscribed_examples() {
        let seg = ConvexPolygon::segment(Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0));
        let (r, c) = circumscribed_radius(&seg);
        assert!((r - 1.0).abs() < 1e-9);
        assert!(c.norm() < 1e-9);
        let (r, _) = circumscribed_radius(&unit_square());
        assert!((r - 0.5_f64.sqrt()).abs() < 1e-9);
        let (r, _) = circumscribed_radius(&ConvexPolygon::point(Point2::new(3.0, 4.0)));
        assert_eq!(r, 0.0);
    }

    #[test]
    fn transform_examples() {
        let sq = unit_square();
        let d = transform(&sq, rotation(std::f64::consts::FRAC_PI_4), Point2::new(0.0, 0.0)).unwrap();
        let r = 0.5_f64.sqrt();
        let expect = poly(&[(r, 0.0), (0.0, r), (-r, 0.0), (0.0, -r)]);
        assert!(hausdorff(&d, &expect) < 1e-12);
        let t = transform(&sq, [[1.0, 0.0], [0.0, 1.0]], Point2::new(1.0, 2.0)).unwrap();
        assert_eq!(t, sq.translate(Point2::new(1.0, 2.0)));
        let twice = transform(
            &transform(&sq, rotation(std::f64::consts::FRAC_PI_2), Point2::new(0.0, 0.0)).unwrap(),
            rotation(std::f64::consts::FRAC_PI_2),
            Point2::new(0.0, 0.0),
        )
        .unwrap();
        let pi = transform(&sq, rotation(std::f64::consts::PI), Point2::new(0.0, 0.0)).unwrap();
        assert!(hausdorff(&twice, &pi) < 1e-12);
        assert!(matches!(
            transform(&sq, [[1.0, 0.1], [0.0, 1.0]], Point2::new(0.0, 0.0)),
            Err(GeometryError::NotOrthogonal)
        ));
    }

    #[test]
    fn scale_examples() {
        let sq = unit_square();
        assert_eq!(scale(&sq, 1.0).unwrap(), sq);
        assert_eq!(
            scale(&sq, 0.0).unwrap(),
            ConvexPolygon::point(Point2::new(0.0, 0.0))
        );
        let doubled = scale(&sq, 2.0).unwrap();
        assert_eq!(doubled, poly(&[(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)]));
        assert!(matches!(scale(&sq, -1.0), Err(GeometryError::NegativeScale)));
    }

    #[test]
    fn hausdorff_metric_axioms_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        use rand::Rng;
        let rand_poly = |rng: &mut ChaCha8Rng| {
            let n = rng.gen_range(1..=8);
            let pts: Vec<Point2> = (0..n)
                .map(|_| Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                .collect();
            canonicalize(&pts).unwrap()
        };
        for _ in 0..50 {
            let a = rand_poly(&mut rng);
            let b = rand_poly(&mut rng);
            let c = rand_poly(&mut rng);
            let dab = hausdorff(&a, &b);
            let dba = hausdorff(&b, &a);
            assert!((dab - dba).abs() <= 1e-9);
            let dac = hausdorff(&a, &c);
            let dcb = hausdorff(&c, &b);
            assert!(dab <= dac + dcb + 1e-9);
        }
    }

    #[test]
    fn radius_monotone_and_dilation() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        use rand::Rng;
        for _ in 0..30 {
            let n = rng.gen_range(3..=8);
            let pts: Vec<Point2> = (0..n)
                .map(|_| Point2::new(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0)))
                .collect();
            let p = canonicalize(&pts).unwrap();
            let mut bigger = pts.clone();
            bigger.push(Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)));
            let q = canonicalize(&bigger).unwrap();
            let (rp, _) = inscribed_radius(&p);
            let (rq, _) = inscribed_radius(&q);
            assert!(rp <= rq + 1e-9);
            let (cp, _) = circumscribed_radius(&p);
            let (cq, _) = circumscribed_radius(&q);
            assert!(cp <= cq + 1e-9);
            // dilation by a polygonal ball grows the inradius by ~delta
            let delta = 0.5;
            let ball = ConvexPolygon::regular_ngon(Point2::new(0.0, 0.0), delta, 64);
            let (rd, _) = inscribed_radius(&minkowski_sum(&p, &ball));
            let slack = delta * (1.0 - (std::f64::consts::PI / 64.0).cos()) + 1e-9;
            assert!((rd - rp - delta).abs() <= slack, "rd={rd} rp={rp}");
        }
    }

    #[test]
    fn interval_and_ball_types() {
        assert!(Interval1::new(2.0, 1.0).is_err());
        let i = Interval1::new(0.0, 4.0).unwrap();
        assert_eq!(i.width(), 4.0);
        assert_eq!(i.midpoint(), 2.0);
        let b = Ball2::new(Point2::new(0.0, 0.0), 0.0);
        assert!(b.to_polygon(64).is_point());
    }
}
