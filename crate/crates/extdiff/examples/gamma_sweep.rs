//! The penalized objective ε + γ·∫h_X² du selects a unique minimizer for any
//! γ > 0, and as γ → 0⁺ the solutions converge to the penalty minimizer over
//! the optimal face — here the origin end of the crossed-segments family.
//!
//! Run with: cargo run --release --example gamma_sweep

use extdiff::diff::DifferenceOptions;
use extdiff::geometry::{hausdorff, ConvexPolygon, Point2};
use extdiff::refine::{gamma_sweep, refine, PenaltyFunctional};

fn main() {
    let m = 128;
    let a = ConvexPolygon::segment(Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0));
    let b = ConvexPolygon::segment(Point2::new(0.0, -1.0), Point2::new(0.0, 1.0));
    let opts = DifferenceOptions { m, ..DifferenceOptions::default() };
    let pen = PenaltyFunctional::l2_origin(m);

    let limit = refine(&a, &b, &opts, &pen).unwrap();
    println!(
        "two-stage limit: penalty = {:.3e}, converged = {}",
        limit.penalty_value, limit.converged
    );
    println!();
    println!("{:>10}  {:>12}  {:>14}  {:>16}", "gamma", "epsilon", "penalty", "d_H to limit");
    for (gamma, sol) in gamma_sweep(&a, &b, &opts, &pen, &[1.0, 0.1, 0.01, 0.001]).unwrap() {
        let d = hausdorff(&sol.x, &limit.x_set);
        let q = pen.value(sol.x_values.values());
        println!("{gamma:>10}  {:>12.6}  {q:>14.3e}  {d:>16.3e}", sol.epsilon);
    }
    println!();
    println!("a huge gamma favors the penalty even at the cost of the distance:");
    for (gamma, sol) in gamma_sweep(&a, &b, &opts, &pen, &[1e6]).unwrap() {
        let d = hausdorff(&sol.x, &ConvexPolygon::point(Point2::new(0.0, 0.0)));
        println!("  gamma = {gamma}: epsilon = {:.6}, d_H(X, origin) = {d:.3e}", sol.epsilon);
    }
}
