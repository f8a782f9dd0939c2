//! Deterministic SVG overlays of a difference instance: A, B, X and B ⊕ X as
//! labeled filled paths with a computed viewBox. Coordinates are written with
//! fixed six-decimal formatting so identical inputs produce identical bytes.

use crate::diff::DifferenceSolution;
use crate::geometry::{ConvexPolygon, Point2};
use std::fmt::Write as _;
use std::path::Path;

struct Layer<'a> {
    label: &'static str,
    color: &'static str,
    poly: &'a ConvexPolygon,
}

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

fn path_data(p: &ConvexPolygon, flip_y: f64) -> String {
    let mut d = String::new();
    for (i, v) in p.vertices().iter().enumerate() {
        let _ = write!(d, "{}{},{}", if i == 0 { "M" } else { " L" }, fmt(v.x), fmt(flip_y - v.y));
    }
    d.push_str(" Z");
    d
}

fn layer_svg(layer: &Layer, flip_y: f64, stroke_w: f64, point_r: f64) -> String {
    let mut s = String::new();
    let v = layer.poly.vertices();
    match v.len() {
        1 => {
            let _ = write!(
                s,
                r#"  <circle cx="{}" cy="{}" r="{}" fill="{}" fill-opacity="0.9"><title>{}</title></circle>"#,
                fmt(v[0].x),
                fmt(flip_y - v[0].y),
                fmt(point_r),
                layer.color,
                layer.label
            );
        }
        2 => {
            let _ = write!(
                s,
                r#"  <path d="{}" fill="none" stroke="{}" stroke-width="{}" stroke-linecap="round"><title>{}</title></path>"#,
                path_data(layer.poly, flip_y),
                layer.color,
                fmt(stroke_w * 1.8),
                layer.label
            );
        }
        _ => {
            let _ = write!(
                s,
                r#"  <path d="{}" fill="{}" fill-opacity="0.35" stroke="{}" stroke-width="{}"><title>{}</title></path>"#,
                path_data(layer.poly, flip_y),
                layer.color,
                layer.color,
                fmt(stroke_w),
                layer.label
            );
        }
    }
    s
}

/// Writes the overlay; deterministic bytes for fixed inputs.
pub fn render_svg(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    solution: &DifferenceSolution,
    path: &Path,
) -> std::io::Result<()> {
    let layers = [
        Layer { label: "B+X", color: "#3a7bd5", poly: &solution.b_plus_x },
        Layer { label: "A", color: "#2e8b57", poly: a },
        Layer { label: "B", color: "#e07b39", poly: b },
        Layer { label: "X", color: "#7b5ad1", poly: &solution.x },
    ];
    let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for l in &layers {
        for v in l.poly.vertices() {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-6);
    let margin = 0.1 * span;
    // svg's y axis points down; flip around the box's midline
    let flip_y = lo.y + hi.y;
    let (min_x, min_y) = (lo.x - margin, lo.y - margin);
    let (w, h) = (hi.x - lo.x + 2.0 * margin, hi.y - lo.y + 2.0 * margin);
    let stroke_w = 0.004 * span;
    let point_r = 0.012 * span;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        fmt(min_x),
        fmt(min_y),
        fmt(w),
        fmt(h)
    );
    for l in &layers {
        let _ = writeln!(out, "{}", layer_svg(l, flip_y, stroke_w, point_r));
    }
    // legend swatches top-left
    let font = 0.035 * span;
    for (i, l) in layers.iter().enumerate() {
        let y = min_y + margin * 0.4 + (i as f64) * font * 1.3;
        let _ = writeln!(
            out,
            r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
            fmt(min_x + margin * 0.3),
            fmt(y),
            fmt(font * 0.8),
            fmt(font * 0.8),
            l.color
        );
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="{}" font-family="monospace">{}</text>"#,
            fmt(min_x + margin * 0.3 + font),
            fmt(y + font * 0.7),
            fmt(font),
            l.label
        );
    }
    out.push_str("</svg>\n");
    std::fs::write(path, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diff::{extended_difference, DifferenceOptions};

    #[test]
    fn svg_bytes_are_deterministic() {
        let a = ConvexPolygon::segment(Point2::new(-0.5, 0.0), Point2::new(0.5, 0.0));
        let b = ConvexPolygon::segment(Point2::new(0.0, -1.0), Point2::new(0.0, 1.0));
        let opts = DifferenceOptions { m: 32, ..DifferenceOptions::default() };
        let sol = extended_difference(&a, &b, &opts).unwrap();
        let dir = std::env::temp_dir();
        let p1 = dir.join("extdiff_svg_test_1.svg");
        let p2 = dir.join("extdiff_svg_test_2.svg");
        render_svg(&a, &b, &sol, &p1).unwrap();
        render_svg(&a, &b, &sol, &p2).unwrap();
        let b1 = std::fs::read(&p1).unwrap();
        let b2 = std::fs::read(&p2).unwrap();
        assert!(!b1.is_empty());
        assert_eq!(b1, b2);
        let text = String::from_utf8(b1).unwrap();
        // degenerate inputs render as strokes/points, X as a point circle here
        assert!(text.contains("<svg"));
        assert!(text.contains("stroke-linecap"));
        let _ = std::fs::remove_file(p1);
        let _ = std::fs::remove_file(p2);
    }
}
