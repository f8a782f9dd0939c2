//! Uniform direction nets on the unit circle and sampled support vectors.
//!
//! A net of size m holds u_i = (cos θ_i, sin θ_i) with θ_i = 2πi/m. Every
//! unit vector lies within the fill distance 2·sin(π/2m) of some net
//! direction. Ties in nearest-direction queries break toward the smallest
//! index, which keeps every consumer deterministic.

use crate::geometry::{ConvexPolygon, Point2};
use thiserror::Error;

/// Pairs whose direction sum is shorter than this are treated as antipodal
/// and skipped (the normalized midpoint is undefined there).
pub const ANTIPODAL_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum NetError {
    #[error("net too coarse: m = {0} < 8")]
    TooCoarse(usize),
    #[error("k-index requires two distinct indices (got {0})")]
    SameIndex(usize),
}

#[derive(Clone, Debug)]
pub struct DirectionNet {
    m: usize,
    directions: Vec<Point2>,
    fill_distance: f64,
}

/// Uniform m-point net; rejects m < 8.
pub fn build_net(m: usize) -> Result<DirectionNet, NetError> {
    if m < 8 {
        return Err(NetError::TooCoarse(m));
    }
    let directions = (0..m)
        .map(|i| {
            let th = 2.0 * std::f64::consts::PI * (i as f64) / (m as f64);
            Point2::new(th.cos(), th.sin())
        })
        .collect();
    let fill_distance = 2.0 * (std::f64::consts::PI / (2.0 * m as f64)).sin();
    Ok(DirectionNet { m, directions, fill_distance })
}

impl DirectionNet {
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn directions(&self) -> &[Point2] {
        &self.directions
    }
    pub fn direction(&self, i: usize) -> Point2 {
        self.directions[i]
    }
    pub fn fill_distance(&self) -> f64 {
        self.fill_distance
    }

    /// Index of the net direction nearest to `u`, smallest index on ties.
    pub fn nearest_index(&self, u: Point2) -> usize {
        let theta = u.y.atan2(u.x);
        let step = 2.0 * std::f64::consts::PI / (self.m as f64);
        let t = theta / step;
        let base = t.floor() as i64;
        let mut best = usize::MAX;
        let mut best_d = f64::INFINITY;
        for cand in [base - 1, base, base + 1, base + 2] {
            let k = cand.rem_euclid(self.m as i64) as usize;
            let d = (self.directions[k] - u).norm();
            if d < best_d - 1e-12 || (d < best_d + 1e-12 && k < best) {
                best_d = d;
                best = k;
            }
        }
        best
    }
}

/// Support-function samples over a net (`values[i] ≈ h(u_i)`).
#[derive(Clone, Debug, PartialEq)]
pub struct SupportVector {
    m: usize,
    values: Vec<f64>,
}

impl SupportVector {
    pub fn new(values: Vec<f64>) -> Self {
        assert!(!values.is_empty() && values.iter().all(|v| v.is_finite()));
        SupportVector { m: values.len(), values }
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Exact support samples of a canonical polygon.
pub fn sample_support(p: &ConvexPolygon, net: &DirectionNet) -> SupportVector {
    SupportVector::new(net.directions.iter().map(|&u| p.support_raw(u)).collect())
}

/// Index of the net direction closest to the normalized sum of u_i and u_j;
/// `None` for antipodal pairs.
pub fn k_index(net: &DirectionNet, i: usize, j: usize) -> Result<Option<usize>, NetError> {
    if i == j {
        return Err(NetError::SameIndex(i));
    }
    let s = net.directions[i] + net.directions[j];
    let n = s.norm();
    if n <= ANTIPODAL_TOL {
        return Ok(None);
    }
    Ok(Some(net.nearest_index(s * (1.0 / n))))
}

/// Nearest-neighbor extension of sampled values to the whole circle.
pub fn extend_support(net: &DirectionNet, sv: &SupportVector, u: Point2) -> f64 {
    debug_assert!((u.norm() - 1.0).abs() <= 1e-9, "direction must be unit");
    debug_assert_eq!(sv.m, net.m);
    sv.values[net.nearest_index(u)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::canonicalize;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn build_net_examples() {
        assert!(matches!(build_net(4), Err(NetError::TooCoarse(4))));
        let n8 = build_net(8).unwrap();
        for (i, u) in n8.directions().iter().enumerate() {
            let th = std::f64::consts::FRAC_PI_4 * i as f64;
            assert!((u.x - th.cos()).abs() < 1e-15);
            assert!((u.y - th.sin()).abs() < 1e-15);
            assert!((u.norm() - 1.0).abs() <= 1e-12);
        }
        let n360 = build_net(360).unwrap();
        assert!((n360.fill_distance() - 0.008727).abs() < 1e-6);
    }

    #[test]
    fn net_covering() {
        let net = build_net(64).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100_000 {
            let th: f64 = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
            let u = Point2::new(th.cos(), th.sin());
            let k = net.nearest_index(u);
            assert!((net.direction(k) - u).norm() <= net.fill_distance() + 1e-12);
        }
    }

    #[test]
    fn sample_support_examples() {
        let net = build_net(8).unwrap();
        let sq = canonicalize(&[
            Point2::new(-0.5, -0.5),
            Point2::new(0.5, -0.5),
            Point2::new(0.5, 0.5),
            Point2::new(-0.5, 0.5),
        ])
        .unwrap();
        let sv = sample_support(&sq, &net);
        let r = 0.5_f64.sqrt();
        for i in 0..8 {
            let expect = if i % 2 == 0 { 0.5 } else { r };
            assert!((sv.values()[i] - expect).abs() < 1e-12);
        }
        let pt = ConvexPolygon::point(Point2::new(1.0, 0.0));
        let sv = sample_support(&pt, &net);
        for (i, v) in sv.values().iter().enumerate() {
            let th = std::f64::consts::FRAC_PI_4 * i as f64;
            assert!((v - th.cos()).abs() < 1e-15);
        }
        let origin = ConvexPolygon::point(Point2::new(0.0, 0.0));
        assert!(sample_support(&origin, &net).values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn k_index_examples() {
        let net = build_net(8).unwrap();
        assert_eq!(k_index(&net, 0, 2).unwrap(), Some(1));
        assert_eq!(k_index(&net, 0, 4).unwrap(), None);
        // 22.5° midpoint ties between u_0 and u_1, smallest index wins
        assert_eq!(k_index(&net, 0, 1).unwrap(), Some(0));
        assert!(matches!(k_index(&net, 3, 3), Err(NetError::SameIndex(3))));
    }

    #[test]
    fn k_index_symmetry_and_accuracy() {
        for m in [8usize, 12, 64] {
            let net = build_net(m).unwrap();
            for i in 0..m {
                for j in (i + 1)..m {
                    let a = k_index(&net, i, j).unwrap();
                    let b = k_index(&net, j, i).unwrap();
                    assert_eq!(a, b);
                    if let Some(k) = a {
                        let s = net.direction(i) + net.direction(j);
                        let w = s * (1.0 / s.norm());
                        assert!((net.direction(k) - w).norm() <= net.fill_distance() + 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn wraparound_tie_prefers_zero() {
        // midpoint of u_{m-1} and u_1 is u_0 exactly; midpoint between
        // u_{m-1} and u_0 ties and resolves to the smallest index 0
        let net = build_net(8).unwrap();
        assert_eq!(k_index(&net, 7, 1).unwrap(), Some(0));
        assert_eq!(k_index(&net, 7, 0).unwrap(), Some(0));
    }

    #[test]
    fn extend_support_examples() {
        let net = build_net(8).unwrap();
        let sv = SupportVector::new((0..8).map(|i| i as f64).collect());
        assert_eq!(extend_support(&net, &sv, net.direction(3)), 3.0);
        // nearer to u_0 than u_1
        let th = 0.1_f64;
        assert_eq!(extend_support(&net, &sv, Point2::new(th.cos(), th.sin())), 0.0);
        let csv = SupportVector::new(vec![2.5; 8]);
        let th = 1.234_f64;
        assert_eq!(extend_support(&net, &csv, Point2::new(th.cos(), th.sin())), 2.5);
    }

    #[test]
    fn sample_support_additive_on_net() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let net = build_net(32).unwrap();
        for _ in 0..30 {
            let rand_poly = |rng: &mut ChaCha8Rng| {
                let n = rng.gen_range(1..=8);
                let pts: Vec<Point2> = (0..n)
                    .map(|_| Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                    .collect();
                canonicalize(&pts).unwrap()
            };
            let p = rand_poly(&mut rng);
            let q = rand_poly(&mut rng);
            let s = crate::geometry::minkowski_sum(&p, &q);
            let sp = sample_support(&p, &net);
            let sq = sample_support(&q, &net);
            let ss = sample_support(&s, &net);
            for i in 0..net.m() {
                assert!((ss.values()[i] - sp.values()[i] - sq.values()[i]).abs() <= 1e-9);
            }
        }
    }
}
