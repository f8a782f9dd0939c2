//! Balls have closed-form differences: shrinking when the first radius
//! dominates, collapsing to the center difference otherwise. The LP pipeline
//! on polygonal approximations reproduces both branches.
//!
//! Run with: cargo run --release --example balls

use extdiff::diff::{ball_difference, extended_difference, DifferenceOptions};
use extdiff::geometry::{hausdorff, Ball2, Point2};

fn main() {
    let opts = DifferenceOptions::default();

    // r1 > r2: a genuine Minkowski inverse exists
    let b1 = Ball2::new(Point2::new(0.0, 0.0), 1.2);
    let b2 = Ball2::new(Point2::new(0.0, 0.0), 0.5);
    let cf = ball_difference(b1, b2);
    println!(
        "closed form (1.2 vs 0.5): ball of radius {} at ({}, {})",
        cf.radius, cf.center.x, cf.center.y
    );
    let sol = extended_difference(&b1.to_polygon(64), &b2.to_polygon(64), &opts).unwrap();
    println!(
        "pipeline:  epsilon = {:.2e}, d_H(X, closed form 64-gon) = {:.2e}",
        sol.epsilon,
        hausdorff(&sol.x, &cf.to_polygon(64))
    );

    // r1 < r2: no inverse; the difference collapses to the center offset
    let b1 = Ball2::new(Point2::new(1.0, 0.0), 0.5);
    let b2 = Ball2::new(Point2::new(0.0, 0.0), 1.2);
    let cf = ball_difference(b1, b2);
    println!();
    println!(
        "closed form (0.5 vs 1.2): the singleton {{({}, {})}}",
        cf.center.x, cf.center.y
    );
    let sol = extended_difference(&b1.to_polygon(64), &b2.to_polygon(64), &opts).unwrap();
    println!(
        "pipeline:  epsilon = {:.6} (radius gap 0.7), d_H(X, point) = {:.2e}",
        sol.epsilon,
        hausdorff(&sol.x, &cf.to_polygon(64))
    );
}
