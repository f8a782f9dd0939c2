//! The extended-difference pipeline: assemble the support-approximation LP,
//! solve it, reconstruct X, and report diagnostics.
//!
//! For sets A and B the pipeline seeks support values x_i ≈ h_X(u_i) on a
//! uniform net minimizing ε = max_i |f_i − x_i| with f_i = h_A(u_i) − h_B(u_i),
//! subject to discrete sublinearity. A sublinear h satisfies
//! `h(u_k) ≤ a·h(u_i) + b·h(u_j)` whenever `u_k = a·u_i + b·u_j` with a, b ≥ 0;
//! each non-antipodal pair {i, j} contributes that row for the net direction
//! u_k nearest to the normalized sum. When u_k is the exact midpoint — every
//! even-gap pair on a uniform net — the row is identical to
//! `‖u_i+u_j‖·x_k ≤ x_i + x_j`. Rows that reduce to `x_k ≤ x_k` (gap-1 pairs,
//! whose tie resolves to an endpoint) carry no information and are eliminated.
//! `SubadditivityNorm::Unit` instead emits the unweighted rows
//! `x_k ≤ x_i + x_j` as a comparison mode; note that its gap-1 rows
//! degenerate to x_i ≥ 0.

use crate::geometry::{
    self, canonicalize, hausdorff, minkowski_sum, Ball2, ConvexPolygon, Interval1, Point2,
};
use crate::lp::{self, Bounds, Constraint, LinearProgram, Relation};
use crate::net::{build_net, k_index, sample_support, DirectionNet, SupportVector};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reconstruction {
    /// Intersection of the sampled support halfplanes (default; exact for
    /// sets whose edge normals lie on the net).
    Halfplane,
    /// Convex hull of the radial points x_i·u_i; cheap but only faithful
    /// for sets containing the origin (kept as a comparison mode).
    RadialHull,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubadditivityNorm {
    /// Exact conic rows; equals the ‖u_i+u_j‖-scaled rows on midpoint-exact
    /// pairs.
    Scaled,
    /// Unweighted `x_k ≤ x_i + x_j`.
    Unit,
}

#[derive(Clone, Copy, Debug)]
pub struct DifferenceOptions {
    pub m: usize,
    pub reconstruction: Reconstruction,
    pub subadditivity_norm: SubadditivityNorm,
    /// Constrain x_i ≥ 0, restricting candidates to sets containing the
    /// origin (off by default; kept as a comparison mode).
    pub strict_nonneg: bool,
    /// Feasibility tolerance for band-residual checks on external support
    /// vectors.
    pub feas_band_tol: f64,
}

impl Default for DifferenceOptions {
    fn default() -> Self {
        DifferenceOptions {
            m: 128,
            reconstruction: Reconstruction::Halfplane,
            subadditivity_norm: SubadditivityNorm::Scaled,
            strict_nonneg: false,
            feas_band_tol: 1e-8,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Diagnostics {
    /// Any two minimizers lie within 2ε of each other (triangle
    /// inequality through A); this records that bound.
    pub scope_bound: f64,
    /// Inscribed-radius bracket for any minimizer.
    pub r_in_bounds: (f64, f64),
    /// Circumscribed-radius bracket for any minimizer.
    pub r_out_bounds: (f64, f64),
    /// Rank evidence for a singleton optimal face.
    pub lp_unique: bool,
}

#[derive(Clone, Debug)]
pub struct DifferenceSolution {
    /// Optimal discrete ε (sampled sup-norm surrogate of the true δ).
    pub epsilon: f64,
    pub x_values: SupportVector,
    pub x: ConvexPolygon,
    pub b_plus_x: ConvexPolygon,
    /// Exact d_H(A, B ⊕ X) recomputed by the geometry kernel.
    pub achieved_hausdorff: f64,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Error)]
pub enum DiffError {
    #[error(transparent)]
    Geometry(#[from] geometry::GeometryError),
    #[error(transparent)]
    Net(#[from] crate::net::NetError),
    #[error(transparent)]
    Lp(#[from] lp::LpError),
    #[error("halfplane intersection is empty")]
    EmptySet,
    #[error("LP solver returned {0:?}")]
    LpFailed(lp::Status),
}

/// Builds the difference LP: variables x_0..x_{m-1} then ε (index m); 2m
/// band rows `f_i − ε ≤ x_i ≤ f_i + ε` followed by one subadditivity row per
/// unordered non-antipodal pair, trivial and duplicate rows eliminated.
pub fn assemble_lp(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    net: &DirectionNet,
    opts: &DifferenceOptions,
) -> LinearProgram {
    let f = difference_samples(a, b, net);
    assemble_from_samples(&f, net, opts)
}

/// Same program built from precomputed samples f_i = h_A(u_i) − h_B(u_i).
pub fn assemble_from_samples(
    f: &[f64],
    net: &DirectionNet,
    opts: &DifferenceOptions,
) -> LinearProgram {
    let m = net.m();
    assert_eq!(f.len(), m);
    let eps = m; // ε variable index
    let mut constraints = Vec::with_capacity(2 * m + m * (m - 1) / 2);
    for (i, &fi) in f.iter().enumerate() {
        constraints.push(Constraint::new(vec![(i, 1.0), (eps, -1.0)], Relation::Le, fi));
        constraints.push(Constraint::new(vec![(i, -1.0), (eps, -1.0)], Relation::Le, -fi));
    }
    let mut seen = std::collections::HashSet::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let Some(k) = k_index(net, i, j).expect("i != j") else {
                continue; // antipodal pair
            };
            let mut coeffs: Vec<(usize, f64)> = Vec::with_capacity(3);
            let mut add = |idx: usize, v: f64| {
                if let Some(e) = coeffs.iter_mut().find(|(q, _)| *q == idx) {
                    e.1 += v;
                } else {
                    coeffs.push((idx, v));
                }
            };
            match opts.subadditivity_norm {
                SubadditivityNorm::Scaled => {
                    let (ui, uj, uk) = (net.direction(i), net.direction(j), net.direction(k));
                    let det = ui.cross(uj);
                    let alpha = uk.cross(uj) / det;
                    let beta = ui.cross(uk) / det;
                    add(k, 1.0);
                    add(i, -alpha);
                    add(j, -beta);
                }
                SubadditivityNorm::Unit => {
                    add(k, 1.0);
                    add(i, -1.0);
                    add(j, -1.0);
                }
            }
            coeffs.retain(|&(_, v)| v.abs() > 1e-12);
            if coeffs.is_empty() {
                continue; // implied row (x_k ≤ x_k)
            }
            coeffs.sort_by_key(|&(q, _)| q);
            let key: Vec<(usize, u64)> = coeffs.iter().map(|&(q, v)| (q, v.to_bits())).collect();
            if seen.insert(key) {
                constraints.push(Constraint::new(coeffs, Relation::Le, 0.0));
            }
        }
    }
    let mut objective = vec![0.0; m + 1];
    objective[eps] = 1.0;
    let mut bounds = vec![
        if opts.strict_nonneg {
            Bounds::lower(0.0)
        } else {
            Bounds::free()
        };
        m
    ];
    bounds.push(Bounds::lower(0.0));
    LinearProgram { num_vars: m + 1, objective, constraints, bounds }
}

/// Rebuilds a set from sampled support values.
pub fn reconstruct(
    net: &DirectionNet,
    sv: &SupportVector,
    mode: Reconstruction,
) -> Result<ConvexPolygon, DiffError> {
    let m = net.m();
    assert_eq!(sv.m(), m);
    let x = sv.values();
    match mode {
        Reconstruction::RadialHull => {
            let pts: Vec<Point2> = (0..m).map(|i| net.direction(i) * x[i]).collect();
            Ok(canonicalize(&pts)?)
        }
        Reconstruction::Halfplane => {
            let scale = x.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
            // exact pass first; retry with a small margin for inputs that are
            // only approximately consistent (LP round-off)
            for margin in [1e-12 * (1.0 + scale), 1e-9 * (1.0 + scale)] {
                if let Some(poly) = clip_halfplanes(net, x, margin) {
                    return Ok(canonicalize(&poly)?);
                }
            }
            Err(DiffError::EmptySet)
        }
    }
}

/// Sutherland-Hodgman clip of a bounding box by every halfplane
/// z·u_i ≤ x_i + margin. Returns None when the intersection is empty.
fn clip_halfplanes(net: &DirectionNet, x: &[f64], margin: f64) -> Option<Vec<Point2>> {
    let r = 2.0 * (x.iter().fold(0.0f64, |a, v| a.max(v.abs())) + 1.0);
    let mut poly = vec![
        Point2::new(-r, -r),
        Point2::new(r, -r),
        Point2::new(r, r),
        Point2::new(-r, r),
    ];
    let mut next: Vec<Point2> = Vec::with_capacity(poly.len() + 4);
    for (i, &u) in net.directions().iter().enumerate() {
        let c = x[i] + margin;
        next.clear();
        for t in 0..poly.len() {
            let p = poly[t];
            let q = poly[(t + 1) % poly.len()];
            let dp = u.dot(p) - c;
            let dq = u.dot(q) - c;
            if dp <= 0.0 {
                next.push(p);
            }
            if (dp < 0.0 && dq > 0.0) || (dp > 0.0 && dq < 0.0) {
                let s = dp / (dp - dq);
                next.push(p + (q - p) * s);
            }
        }
        std::mem::swap(&mut poly, &mut next);
        if poly.is_empty() {
            return None;
        }
    }
    Some(poly)
}

/// Full pipeline: sample → assemble → solve → reconstruct → re-measure.
pub fn extended_difference(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    opts: &DifferenceOptions,
) -> Result<DifferenceSolution, DiffError> {
    let net = build_net(opts.m)?;
    let program = assemble_lp(a, b, &net, opts);
    let sol = lp::solve(&program)?;
    if sol.status != lp::Status::Optimal {
        return Err(DiffError::LpFailed(sol.status));
    }
    solution_from_values(a, b, &net, &program, &sol, opts)
}

pub(crate) fn solution_from_values(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    net: &DirectionNet,
    program: &LinearProgram,
    sol: &lp::LpSolution,
    opts: &DifferenceOptions,
) -> Result<DifferenceSolution, DiffError> {
    let m = net.m();
    let epsilon = sol.values[m].max(0.0);
    let x_values = SupportVector::new(sol.values[..m].to_vec());
    let x = reconstruct(net, &x_values, opts.reconstruction)?;
    let b_plus_x = minkowski_sum(b, &x);
    let achieved_hausdorff = hausdorff(a, &b_plus_x);
    let lp_unique = lp::uniqueness_probe(program, sol);
    Ok(DifferenceSolution {
        epsilon,
        x_values,
        diagnostics: diagnostics_for(a, b, epsilon, lp_unique),
        x,
        b_plus_x,
        achieved_hausdorff,
    })
}

/// Radius brackets from the inscribed/circumscribed radii of the inputs.
pub fn diagnostics_for(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    epsilon: f64,
    lp_unique: bool,
) -> Diagnostics {
    let (rin_a, _) = geometry::inscribed_radius(a);
    let (rin_b, _) = geometry::inscribed_radius(b);
    let (rout_a, _) = geometry::circumscribed_radius(a);
    let (rout_b, _) = geometry::circumscribed_radius(b);
    Diagnostics {
        scope_bound: 2.0 * epsilon,
        r_in_bounds: (
            (rin_a - rout_b - epsilon).max(0.0),
            (rin_a - rin_b + epsilon).max(0.0),
        ),
        r_out_bounds: (
            (rout_a - rout_b - epsilon).max(0.0),
            (rout_a - rin_b + epsilon).max(0.0),
        ),
        lp_unique,
    }
}

/// Closed form on the line: shrink to the midpoint difference when A is
/// narrower than B, endpoint differences otherwise.
pub fn interval_difference(a: Interval1, b: Interval1) -> Interval1 {
    if a.width() < b.width() {
        let p = a.midpoint() - b.midpoint();
        Interval1 { lo: p, hi: p }
    } else {
        Interval1 { lo: a.lo - b.lo, hi: a.hi - b.hi }
    }
}

/// Closed form for balls: a ball of radius r1−r2 when r1 ≥ r2, otherwise the
/// singleton at the center difference (the printed sign in the source
/// example is c2−c1; the translation oracle min_x d_H(B1, B2 ⊕ {x}) gives
/// c1−c2, which is what this returns).
pub fn ball_difference(b1: Ball2, b2: Ball2) -> Ball2 {
    let center = b1.center - b2.center;
    if b1.radius >= b2.radius {
        Ball2::new(center, b1.radius - b2.radius)
    } else {
        Ball2::new(center, 0.0)
    }
}

/// Pairwise scope check across several solutions of the same instance:
/// every two near-minimizers must lie within 2·min(ε) + tol of each other.
#[derive(Clone, Debug)]
pub struct ScopeReport {
    /// (i, j, d_H(X_i, X_j)) for every unordered pair.
    pub pairs: Vec<(usize, usize, f64)>,
    pub min_epsilon: f64,
    pub bound: f64,
    pub satisfied: bool,
}

pub fn scope_check(sols: &[&DifferenceSolution], tol: f64) -> ScopeReport {
    if sols.is_empty() {
        return ScopeReport { pairs: Vec::new(), min_epsilon: 0.0, bound: tol, satisfied: true };
    }
    let min_epsilon = sols.iter().map(|s| s.epsilon).fold(f64::INFINITY, f64::min);
    let bound = 2.0 * min_epsilon + tol;
    let mut pairs = Vec::new();
    let mut satisfied = true;
    for i in 0..sols.len() {
        for j in (i + 1)..sols.len() {
            let d = hausdorff(&sols[i].x, &sols[j].x);
            if d > bound {
                satisfied = false;
            }
            pairs.push((i, j, d));
        }
    }
    ScopeReport { pairs, min_epsilon, bound, satisfied }
}

/// A-priori feasible point: the constant max(f̄, 0) with its band size.
/// Constant support values are valid only when nonnegative — the plain
/// maximum stops being subadditive when f̄ < 0 (A strictly inside B), so it
/// is clamped at zero.
pub fn feasibility_witness(f: &[f64]) -> (Vec<f64>, f64) {
    let fbar = f.iter().cloned().fold(f64::NEG_INFINITY, f64::max).max(0.0);
    let eps = f.iter().map(|&fi| (fbar - fi).abs()).fold(0.0, f64::max);
    let mut z = vec![fbar; f.len()];
    z.push(eps);
    (z, eps)
}

/// Support samples f_i = h_A(u_i) − h_B(u_i) for an instance.
pub fn difference_samples(a: &ConvexPolygon, b: &ConvexPolygon, net: &DirectionNet) -> Vec<f64> {
    let fa = sample_support(a, net);
    let fb = sample_support(b, net);
    fa.values().iter().zip(fb.values()).map(|(x, y)| x - y).collect()
}
