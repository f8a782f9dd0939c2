//! On the line the extended difference has a two-branch closed form: the
//! endpoint differences when A is at least as wide as B, otherwise the
//! midpoint offset alone. Embedded as collinear segments, the planar LP
//! pipeline reproduces both branches.
//!
//! Run with: cargo run --release --example intervals

use extdiff::diff::{extended_difference, interval_difference, DifferenceOptions};
use extdiff::geometry::{hausdorff, ConvexPolygon, Interval1, Point2};

fn show(a: Interval1, b: Interval1) {
    let d = interval_difference(a, b);
    let label = if d.lo == d.hi {
        format!("{{{}}}", d.lo)
    } else {
        format!("[{}, {}]", d.lo, d.hi)
    };
    println!("[{}, {}] minus [{}, {}] = {label}", a.lo, a.hi, b.lo, b.hi);

    let opts = DifferenceOptions { m: 128, ..DifferenceOptions::default() };
    let sol = extended_difference(&a.to_segment(), &b.to_segment(), &opts).unwrap();
    let expect = if d.lo == d.hi {
        ConvexPolygon::point(Point2::new(d.lo, 0.0))
    } else {
        d.to_segment()
    };
    let delta = if a.width() < b.width() { 0.5 * (b.width() - a.width()) } else { 0.0 };
    println!(
        "  pipeline: epsilon = {:.9} (analytic {delta}), d_H to closed form = {:.2e}",
        sol.epsilon,
        hausdorff(&sol.x, &expect)
    );
}

fn main() {
    let i = |lo, hi| Interval1::new(lo, hi).unwrap();
    show(i(0.0, 1.0), i(2.0, 4.0));
    show(i(0.0, 4.0), i(1.0, 2.0));
    show(i(1.0, 3.0), i(1.0, 3.0));
}
