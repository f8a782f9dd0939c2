//! Subtracting a square from a larger circle. No convex X satisfies
//! B ⊕ X = A here, so the classical differences are undefined, while the
//! extended difference returns the rotated-square-like set that best fills
//! the circle's corners.
//!
//! Run with: cargo run --release --example circle_minus_square

use extdiff::cli::svg::render_svg;
use extdiff::diff::{extended_difference, DifferenceOptions};
use extdiff::geometry::{canonicalize, Ball2, Point2};

fn main() {
    // circle of radius 1.2 as a 64-gon; square of side 1.6
    let a = Ball2::new(Point2::new(0.0, 0.0), 1.2).to_polygon(64);
    let h = 0.8;
    let b = canonicalize(&[
        Point2::new(-h, -h),
        Point2::new(h, -h),
        Point2::new(h, h),
        Point2::new(-h, h),
    ])
    .unwrap();
    let opts = DifferenceOptions { m: 128, ..DifferenceOptions::default() };
    let sol = extended_difference(&a, &b, &opts).unwrap();
    println!("epsilon      = {:.9}", sol.epsilon);
    println!("achieved d_H = {:.9}", sol.achieved_hausdorff);
    println!("X vertices   = {}", sol.x.vertices().len());
    // X leans diagonal: its support in the corner directions exceeds the
    // axis ones
    let diag = sol.x.vertices().iter().map(|v| v.x + v.y).fold(f64::MIN, f64::max) / 2f64.sqrt();
    let axis = sol.x.vertices().iter().map(|v| v.x).fold(f64::MIN, f64::max);
    println!("support along diagonal = {diag:.4}, along x-axis = {axis:.4}");

    let out = std::path::Path::new("target").join("circle_minus_square.svg");
    std::fs::create_dir_all("target").unwrap();
    render_svg(&a, &b, &sol, &out).unwrap();
    println!("overlay written to {}", out.display());
}
