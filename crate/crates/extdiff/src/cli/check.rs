//! Randomized property suites for the geometry kernel, the difference
//! pipeline and the refinement stage.
//!
//! Each property reports its worst residual against a documented tolerance;
//! residuals are normalized so that 0 means "holds exactly" and anything
//! above the tolerance is a failure. Polygons are drawn as hulls of 3–10
//! uniform points in [−5, 5]²; everything is seeded, single-threaded and
//! byte-reproducible.

use crate::diff::{
    self, extended_difference, DifferenceOptions,
};
use crate::geometry::{
    self, canonicalize, hausdorff, minkowski_sum, transform, ConvexPolygon, Mat2, Point2,
};
use crate::lp;
use crate::net::{build_net, sample_support};
use crate::refine::{gamma_sweep, refine, symmetrize, PenaltyFunctional};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct PropertyResult {
    pub name: &'static str,
    pub trials: usize,
    pub worst: f64,
    pub tol: f64,
}

impl PropertyResult {
    pub fn pass(&self) -> bool {
        self.worst <= self.tol
    }
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub properties: Vec<PropertyResult>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.properties.iter().all(|p| p.pass())
    }

    pub fn render_lines(&self) -> Vec<String> {
        self.properties
            .iter()
            .map(|p| {
                format!(
                    "property={} trials={} worst={:.3e} tol={:.3e} status={}",
                    p.name,
                    p.trials,
                    p.worst,
                    p.tol,
                    if p.pass() { "pass" } else { "FAIL" }
                )
            })
            .collect()
    }
}

fn random_polygon(rng: &mut ChaCha8Rng) -> ConvexPolygon {
    let n = rng.gen_range(3..=10);
    let pts: Vec<Point2> = (0..n)
        .map(|_| Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
        .collect();
    canonicalize(&pts).expect("finite random points")
}

struct Acc {
    name: &'static str,
    trials: usize,
    worst: f64,
    tol: f64,
}

impl Acc {
    fn new(name: &'static str, tol: f64) -> Self {
        Acc { name, trials: 0, worst: 0.0, tol }
    }
    fn push(&mut self, residual: f64) {
        self.trials += 1;
        if residual > self.worst {
            self.worst = residual;
        }
    }
    fn into_result(self) -> PropertyResult {
        PropertyResult { name: self.name, trials: self.trials, worst: self.worst, tol: self.tol }
    }
}

/// Runs every suite for `trials` rounds at net size `m`.
pub fn run_checks(trials: usize, seed: u64, m: usize) -> CheckReport {
    let mut report = CheckReport::default();
    if trials == 0 {
        return report; // vacuous pass
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    report.properties.extend(geometry_suite(trials, &mut rng));
    report.properties.extend(diff_suite(trials, m, &mut rng));
    report.properties.extend(refine_suite(m.max(32)));
    report
}

// ---------------------------------------------------------------------------
// geometry properties
// ---------------------------------------------------------------------------

fn geometry_suite(trials: usize, rng: &mut ChaCha8Rng) -> Vec<PropertyResult> {
    let mut additivity = Acc::new("support_additivity", 1e-9);
    let mut identity = Acc::new("hausdorff_support_identity", 1e-6);
    let mut metric = Acc::new("hausdorff_metric_axioms", 1e-9);
    let mut isometry = Acc::new("transform_isometry", 1e-9);
    let mut monotone = Acc::new("radius_monotonicity", 1e-9);
    let mut dilation = Acc::new("inradius_ball_dilation", 1e-9);
    let probe = build_net(64).expect("m >= 8");
    let fine = build_net(4096).expect("m >= 8");
    for _ in 0..trials {
        let p = random_polygon(rng);
        let q = random_polygon(rng);
        let r = random_polygon(rng);
        // h_{P⊕Q} = h_P + h_Q on the probe net
        let s = minkowski_sum(&p, &q);
        let sp = sample_support(&p, &probe);
        let sq = sample_support(&q, &probe);
        let ss = sample_support(&s, &probe);
        for i in 0..probe.m() {
            additivity.push((ss.values()[i] - sp.values()[i] - sq.values()[i]).abs());
        }
        // d_H equals the sup of |h_P − h_Q|; a 4096-direction net sees it up
        // to the Lipschitz slack L·fill with L = R_out(P) + R_out(Q)
        let d = hausdorff(&p, &q);
        let fp = sample_support(&p, &fine);
        let fq = sample_support(&q, &fine);
        let net_sup = fp
            .values()
            .iter()
            .zip(fq.values())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let (rp, _) = geometry::circumscribed_radius(&p);
        let (rq, _) = geometry::circumscribed_radius(&q);
        let slack = (rp + rq) * fine.fill_distance();
        identity.push((net_sup - d).max(d - net_sup - slack).max(0.0));
        // symmetry and triangle inequality
        metric.push((hausdorff(&p, &q) - hausdorff(&q, &p)).abs());
        metric.push((d - hausdorff(&p, &r) - hausdorff(&r, &q)).max(0.0));
        // random rotation (optionally composed with a reflection)
        let theta = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
        let mut t = geometry::rotation(theta);
        if rng.gen_bool(0.5) {
            t = [[t[0][0], t[0][1]], [-t[1][0], -t[1][1]]];
        }
        let shift = Point2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let tp = transform(&p, t, shift).expect("orthogonal");
        let tq = transform(&q, t, shift).expect("orthogonal");
        isometry.push((hausdorff(&tp, &tq) - d).abs());
        // radius monotonicity on a nested pair built by adding points
        let mut bigger: Vec<Point2> = p.vertices().to_vec();
        bigger.push(Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)));
        let pq = canonicalize(&bigger).expect("finite");
        let (rin_p, _) = geometry::inscribed_radius(&p);
        let (rin_q, _) = geometry::inscribed_radius(&pq);
        let (rout_p, _) = geometry::circumscribed_radius(&p);
        let (rout_q, _) = geometry::circumscribed_radius(&pq);
        monotone.push((rin_p - rin_q).max(0.0));
        monotone.push((rout_p - rout_q).max(0.0));
        // dilation by a polygonal ball grows the inradius by delta up to the
        // k-gon approximation error
        let delta = rng.gen_range(0.1..1.0);
        let ball = ConvexPolygon::regular_ngon(Point2::new(0.0, 0.0), delta, 64);
        let (rin_d, _) = geometry::inscribed_radius(&minkowski_sum(&p, &ball));
        let approx = delta * (1.0 - (std::f64::consts::PI / 64.0).cos());
        dilation.push(((rin_d - rin_p - delta).abs() - approx).max(0.0));
    }
    vec![
        additivity.into_result(),
        identity.into_result(),
        metric.into_result(),
        isometry.into_result(),
        monotone.into_result(),
        dilation.into_result(),
    ]
}

// ---------------------------------------------------------------------------
// difference-pipeline properties
// ---------------------------------------------------------------------------

fn diff_suite(trials: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<PropertyResult> {
    let opts = DifferenceOptions { m, ..DifferenceOptions::default() };
    let net = build_net(m).expect("m >= 8");
    let fill = net.fill_distance();
    let mut translate_eps = Acc::new("translation_equivariance_eps", 1e-9);
    let mut translate_x = Acc::new("translation_equivariance_x", 1e-9);
    let mut scale_eps = Acc::new("scale_equivariance_eps", 1e-6);
    let mut cancel_eps = Acc::new("cancellation_eps", 1e-6);
    let mut rot_eps = Acc::new("rotation_equivariance_eps", 1e-9);
    let mut rot_x_scope = Acc::new("rotation_x_scope_bound", 1e-6);
    let mut discrete_opt = Acc::new("closed_form_optimality", 1e-7);
    let mut stability = Acc::new("perturbation_stability", 1e-9);
    let mut radius_bounds = Acc::new("radius_bracket_bounds", 1e-9);
    let mut witness = Acc::new("constant_witness_feasible", 0.0);
    for _ in 0..trials {
        let a = random_polygon(rng);
        let b = random_polygon(rng);
        let base = match extended_difference(&a, &b, &opts) {
            Ok(s) => s,
            Err(e) => panic!("difference pipeline failed on a random instance: {e}"),
        };
        let scale_len = 12.0; // inputs live in [-5,5]^2

        // translating A translates X and leaves epsilon unchanged
        let v = Point2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let a_shift = a.translate(v);
        let shifted = extended_difference(&a_shift, &b, &opts).expect("pipeline");
        translate_eps.push((shifted.epsilon - base.epsilon).abs());
        let x_back = shifted.x.translate(-v);
        let bound = 2.0 * fill * (scale_len + v.norm())
            + (base.achieved_hausdorff - base.epsilon).max(0.0)
            + (shifted.achieved_hausdorff - shifted.epsilon).max(0.0);
        translate_x.push((hausdorff(&x_back, &base.x) - bound).max(0.0));

        // scaling both inputs scales epsilon
        for lambda in [0.5, 2.0] {
            let la = geometry::scale(&a, lambda).expect("nonnegative");
            let lb = geometry::scale(&b, lambda).expect("nonnegative");
            let ls = extended_difference(&la, &lb, &opts).expect("pipeline");
            scale_eps.push((ls.epsilon - lambda * base.epsilon).abs() / lambda);
        }

        // a common Minkowski summand cancels
        let c = random_polygon(rng);
        let ac = minkowski_sum(&a, &c);
        let bc = minkowski_sum(&b, &c);
        let cs = extended_difference(&ac, &bc, &opts).expect("pipeline");
        cancel_eps.push((cs.epsilon - base.epsilon).abs());

        // net-compatible rotations permute the samples, so epsilon is exact
        let k = rng.gen_range(1..m);
        let theta = 2.0 * std::f64::consts::PI * (k as f64) / (m as f64);
        let t: Mat2 = geometry::rotation(theta);
        let ra = transform(&a, t, Point2::new(0.0, 0.0)).expect("orthogonal");
        let rb = transform(&b, t, Point2::new(0.0, 0.0)).expect("orthogonal");
        let rs = extended_difference(&ra, &rb, &opts).expect("pipeline");
        rot_eps.push((rs.epsilon - base.epsilon).abs());
        let tx = transform(&base.x, t, Point2::new(0.0, 0.0)).expect("orthogonal");
        rot_x_scope.push((hausdorff(&tx, &rs.x) - 2.0 * base.epsilon).max(0.0));

        // families with an analytically known optimum: interval pairs
        // (restricted to m divisible by 4 so the binding axis directions
        // are on the net)
        if m.is_multiple_of(4) {
            let w1 = rng.gen_range(0.0..2.0);
            let w2 = rng.gen_range(0.0..2.0);
            let lo1 = rng.gen_range(-2.0..2.0);
            let lo2 = rng.gen_range(-2.0..2.0);
            let ia = ConvexPolygon::segment(Point2::new(lo1, 0.0), Point2::new(lo1 + w1, 0.0));
            let ib = ConvexPolygon::segment(Point2::new(lo2, 0.0), Point2::new(lo2 + w2, 0.0));
            let delta = if w1 < w2 { 0.5 * (w2 - w1) } else { 0.0 };
            let is = extended_difference(&ia, &ib, &opts).expect("pipeline");
            discrete_opt.push((is.epsilon - delta).max(delta - is.epsilon).abs());
        }

        // stability: vertex perturbations of size eta move epsilon by at
        // most 2*eta (support samples are 1-Lipschitz in each input set)
        let eta = 1e-3;
        let jitter = |p: &ConvexPolygon, rng: &mut ChaCha8Rng| {
            let pts: Vec<Point2> = p
                .vertices()
                .iter()
                .map(|&q| {
                    let ang: f64 = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
                    let rad: f64 = rng.gen_range(0.0..eta);
                    q + Point2::new(ang.cos() * rad, ang.sin() * rad)
                })
                .collect();
            canonicalize(&pts).expect("finite")
        };
        let ap = jitter(&a, rng);
        let bp = jitter(&b, rng);
        let ps = extended_difference(&ap, &bp, &opts).expect("pipeline");
        stability.push(((ps.epsilon - base.epsilon).abs() - 2.0 * eta).max(0.0));

        // the radius brackets hold for the reconstructed X
        let (rin_x, _) = geometry::inscribed_radius(&base.x);
        let (rout_x, _) = geometry::circumscribed_radius(&base.x);
        let tol = 2.0 * fill * scale_len;
        let d = base.diagnostics;
        radius_bounds.push((d.r_in_bounds.0 - rin_x - tol).max(0.0));
        radius_bounds.push((rin_x - d.r_in_bounds.1 - tol).max(0.0));
        radius_bounds.push((d.r_out_bounds.0 - rout_x - tol).max(0.0));
        radius_bounds.push((rout_x - d.r_out_bounds.1 - tol).max(0.0));

        // the constant witness is feasible for the assembled LP
        let f = diff::difference_samples(&a, &b, &net);
        let program = diff::assemble_from_samples(&f, &net, &opts);
        let (z, _) = diff::feasibility_witness(&f);
        let ok = lp::check_feasible(&program, &z).expect("well-formed");
        witness.push(if ok { 0.0 } else { 1.0 });
    }
    vec![
        translate_eps.into_result(),
        translate_x.into_result(),
        scale_eps.into_result(),
        cancel_eps.into_result(),
        rot_eps.into_result(),
        rot_x_scope.into_result(),
        discrete_opt.into_result(),
        stability.into_result(),
        radius_bounds.into_result(),
        witness.into_result(),
    ]
}

// ---------------------------------------------------------------------------
// refinement properties (fixed instances)
// ---------------------------------------------------------------------------

fn refine_suite(m: usize) -> Vec<PropertyResult> {
    let a = ConvexPolygon::segment(Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0));
    let b = ConvexPolygon::segment(Point2::new(0.0, -1.0), Point2::new(0.0, 1.0));
    let opts = DifferenceOptions { m, ..DifferenceOptions::default() };
    let net = build_net(m).expect("m >= 8");
    let mut stage2_opt = Acc::new("refine_stage2_optimality", 1e-7);
    let mut anchor_sel = Acc::new("refine_anchor_selection", 2.0 * net.fill_distance());
    let mut sym_feas = Acc::new("symmetrize_band_feasible", 1e-8);
    let mut distinct = Acc::new("refine_distinct_limits", 0.0);
    let mut scope = Acc::new("scope_bound_selections", 1e-6);
    let mut sweep_conv = Acc::new("gamma_path_convergence", 0.05);

    let pen_origin = PenaltyFunctional::l2_origin(m);
    let ro = refine(&a, &b, &opts, &pen_origin).expect("refine");
    let anchor_poly = ConvexPolygon::segment(Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0));
    let anchor = sample_support(&anchor_poly, &net);
    let ra = refine(&a, &b, &opts, &PenaltyFunctional::l2_anchor(anchor)).expect("refine");

    // stage-2 optimality against 50 random tilts of the optimal face
    let mut program = diff::assemble_lp(&a, &b, &net, &opts);
    let base_sol = lp::solve(&program).expect("well-formed");
    let eps = base_sol.values[m];
    program.constraints.push(lp::Constraint::new(
        vec![(m, 1.0)],
        lp::Relation::Le,
        eps + crate::refine::SLACK_TOL,
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e57);
    for _ in 0..50 {
        for c in program.objective.iter_mut().take(m) {
            *c = rng.gen_range(-1.0..1.0);
        }
        program.objective[m] = 0.0;
        let vertex = lp::solve(&program).expect("well-formed");
        if vertex.status != lp::Status::Optimal {
            continue;
        }
        let q = pen_origin.value(&vertex.values[..m]);
        stage2_opt.push((ro.penalty_value - q).max(0.0));
    }

    // anchoring at a known family member selects that member
    anchor_sel.push(hausdorff(&ra.x_set, &anchor_poly));

    // orbit averaging keeps the band residual within the optimum
    let id: Mat2 = [[1.0, 0.0], [0.0, 1.0]];
    let fx: Mat2 = [[-1.0, 0.0], [0.0, 1.0]];
    let fy: Mat2 = [[1.0, 0.0], [0.0, -1.0]];
    let neg: Mat2 = [[-1.0, 0.0], [0.0, -1.0]];
    let base = extended_difference(&a, &b, &opts).expect("pipeline");
    let avg = symmetrize(&base.x_values, &[id, fx, fy, neg], &net).expect("group");
    let f = diff::difference_samples(&a, &b, &net);
    let worst = f
        .iter()
        .zip(avg.values())
        .map(|(fi, xi)| (fi - xi).abs())
        .fold(0.0, f64::max);
    sym_feas.push((worst - base.epsilon).max(0.0));

    // distinct penalties land on distinct members (t = 0 vs t = 1)
    let gap = hausdorff(&ro.x_set, &ra.x_set);
    distinct.push(if gap >= 0.9 { 0.0 } else { 0.9 - gap });

    // scope bound across every selection of this instance
    let eps_min = base.epsilon;
    for (p, q) in [
        (&base.x, &ro.x_set),
        (&base.x, &ra.x_set),
        (&ro.x_set, &ra.x_set),
    ] {
        scope.push((hausdorff(p, q) - 2.0 * eps_min).max(0.0));
    }

    // the gamma path approaches the two-stage selection
    let sweep = gamma_sweep(&a, &b, &opts, &pen_origin, &[1.0, 0.1, 0.01, 0.001]).expect("sweep");
    let dists: Vec<f64> = sweep
        .iter()
        .map(|(_, s)| hausdorff(&s.x, &ro.x_set))
        .collect();
    sweep_conv.push(dists[dists.len() - 1]);
    for w in dists.windows(2) {
        sweep_conv.push((w[1] - w[0] - 1e-3).max(0.0));
    }

    vec![
        stage2_opt.into_result(),
        anchor_sel.into_result(),
        sym_feas.into_result(),
        distinct.into_result(),
        scope.into_result(),
        sweep_conv.into_result(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_trials_is_vacuous_pass() {
        let report = run_checks(0, 7, 64);
        assert!(report.properties.is_empty());
        assert!(report.all_pass());
    }

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let r1 = run_checks(3, 7, 32);
        let r2 = run_checks(3, 7, 32);
        assert!(r1.all_pass(), "failures: {:?}", r1
            .properties
            .iter()
            .filter(|p| !p.pass())
            .collect::<Vec<_>>());
        assert_eq!(r1.render_lines(), r2.render_lines());
    }
}
