//! Subtracting a unit square from a pentagon: a full-dimensional instance
//! where no exact Minkowski difference exists. Writes an SVG overlay of A, B,
//! X and B ⊕ X next to the printed diagnostics.
//!
//! Run with: cargo run --release --example pentagon_minus_square

use extdiff::cli::svg::render_svg;
use extdiff::diff::{extended_difference, DifferenceOptions};
use extdiff::geometry::{canonicalize, ConvexPolygon, Point2};

fn main() {
    let a = canonicalize(&[
        Point2::new(0.0, 0.0),
        Point2::new(4.0, 0.0),
        Point2::new(6.0, 2.0),
        Point2::new(3.0, 4.0),
        Point2::new(1.0, 2.0),
    ])
    .unwrap();
    let b = canonicalize(&[
        Point2::new(-0.5, -0.5),
        Point2::new(0.5, -0.5),
        Point2::new(0.5, 0.5),
        Point2::new(-0.5, 0.5),
    ])
    .unwrap();
    let opts = DifferenceOptions { m: 256, ..DifferenceOptions::default() };
    let sol = extended_difference(&a, &b, &opts).unwrap();

    println!("epsilon       = {:.9}", sol.epsilon);
    println!("achieved d_H  = {:.9}", sol.achieved_hausdorff);
    println!("X vertices    = {}", sol.x.vertices().len());
    println!("scope bound   = {:.6}", sol.diagnostics.scope_bound);
    println!(
        "r_in(X) bracket  = [{:.4}, {:.4}]",
        sol.diagnostics.r_in_bounds.0, sol.diagnostics.r_in_bounds.1
    );
    println!(
        "R_out(X) bracket = [{:.4}, {:.4}]",
        sol.diagnostics.r_out_bounds.0, sol.diagnostics.r_out_bounds.1
    );

    let out = std::path::Path::new("target").join("pentagon_minus_square.svg");
    std::fs::create_dir_all("target").unwrap();
    render_svg(&a, &b, &sol, &out).unwrap();
    println!("overlay written to {}", out.display());
    let reconstructed = ConvexPolygon::from_points(sol.x.vertices()).unwrap();
    assert_eq!(reconstructed, sol.x, "canonical form is stable");
}
