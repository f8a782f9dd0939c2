//! When A and B are both symmetric under a finite orthogonal group, the
//! extended difference always contains a symmetric minimizer: averaging the
//! support values of any minimizer over the group orbit stays optimal. Here
//! the crossed segments are invariant under the Klein four-group, and orbit
//! averaging turns an asymmetric family member into the symmetric one.
//!
//! Run with: cargo run --release --example symmetry

use extdiff::diff::{difference_samples, extended_difference, DifferenceOptions};
use extdiff::geometry::{ConvexPolygon, Mat2, Point2};
use extdiff::net::{build_net, sample_support, SupportVector};
use extdiff::refine::symmetrize;

fn main() {
    let m = 64;
    let net = build_net(m).unwrap();
    let a = ConvexPolygon::segment(Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0));
    let b = ConvexPolygon::segment(Point2::new(0.0, -1.0), Point2::new(0.0, 1.0));
    let opts = DifferenceOptions { m, ..DifferenceOptions::default() };
    let sol = extended_difference(&a, &b, &opts).unwrap();

    let id: Mat2 = [[1.0, 0.0], [0.0, 1.0]];
    let flip_x: Mat2 = [[-1.0, 0.0], [0.0, 1.0]];
    let flip_y: Mat2 = [[1.0, 0.0], [0.0, -1.0]];
    let neg: Mat2 = [[-1.0, 0.0], [0.0, -1.0]];
    let klein = [id, flip_x, flip_y, neg];

    let f = difference_samples(&a, &b, &net);
    let band = |x: &SupportVector| {
        f.iter()
            .zip(x.values())
            .map(|(fi, xi)| (fi - xi).abs())
            .fold(0.0, f64::max)
    };

    // an asymmetric member of the minimizer collection: the one-sided
    // segment [-1,0]×{0} (achieves d_H = 1 like the symmetric family)
    let one_sided = ConvexPolygon::segment(Point2::new(-1.0, 0.0), Point2::new(0.0, 0.0));
    let member = sample_support(&one_sided, &net);
    println!(
        "asymmetric member band residual: {:.6} (epsilon = {:.6})",
        band(&member),
        sol.epsilon
    );
    let averaged = symmetrize(&member, &klein, &net).unwrap();
    println!("orbit-averaged band residual:    {:.6}", band(&averaged));
    // the average is the symmetric family member [-1/2, 1/2]×{0}
    let midpoint = sample_support(
        &ConvexPolygon::segment(Point2::new(-0.5, 0.0), Point2::new(0.5, 0.0)),
        &net,
    );
    let dev = averaged
        .values()
        .iter()
        .zip(midpoint.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    println!("average equals the symmetric member [-1/2,1/2]x{{0}}: max dev = {dev:.2e}");

    // averaging the solver's own minimizer also stays within the band
    let avg_sol = symmetrize(&sol.x_values, &klein, &net).unwrap();
    println!("averaged solver minimizer band residual: {:.6}", band(&avg_sol));
}
