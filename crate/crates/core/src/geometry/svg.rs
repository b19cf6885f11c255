//! SVG rendering of packings.

use std::fmt::Write;

use num_complex::Complex64;

use crate::geometry::hyperbolic::{euclidean_circle, geodesic_circle};
use crate::geometry::packing::{Geometry, Packing};
use crate::geometry::triangulate::{Triangulation, VertexRole};

/// Circles and edges; hyperbolic edges are drawn as arcs orthogonal to the unit circle.
pub fn render_svg(tri: &Triangulation, p: &Packing) -> String {
    let g = &tri.graph;
    let n = g.vertex_count();
    let circles: Vec<(Complex64, f64)> = (0..n)
        .map(|v| match p.geometry {
            Geometry::Euclidean => (p.center(v), p.radii[v]),
            Geometry::Hyperbolic => euclidean_circle(p.center(v), p.radii[v]),
        })
        .collect();
    let (lo, hi) = match p.geometry {
        Geometry::Hyperbolic => (Complex64::new(-1.0, -1.0), Complex64::new(1.0, 1.0)),
        Geometry::Euclidean => circles.iter().fold(
            (Complex64::new(f64::MAX, f64::MAX), Complex64::new(f64::MIN, f64::MIN)),
            |(lo, hi), &(c, r)| {
                (
                    Complex64::new(lo.re.min(c.re - r), lo.im.min(c.im - r)),
                    Complex64::new(hi.re.max(c.re + r), hi.im.max(c.im + r)),
                )
            },
        ),
    };
    let span = (hi.re - lo.re).max(hi.im - lo.im);
    let pad = 0.02 * span;
    let stroke = span / 800.0;
    // The y axis is flipped so the picture is not mirrored.
    let pt = |z: Complex64| (z.re, -z.im);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="800" height="800">"#,
        lo.re - pad,
        -hi.im - pad,
        hi.re - lo.re + 2.0 * pad,
        hi.im - lo.im + 2.0 * pad
    );
    if p.geometry == Geometry::Hyperbolic {
        let _ = writeln!(s, r##"<circle cx="0" cy="0" r="1" fill="none" stroke="#888" stroke-width="{stroke}"/>"##);
    }
    for (v, &(c, r)) in circles.iter().enumerate() {
        let (x, y) = pt(c);
        let fill = match tri.roles[v] {
            VertexRole::Original => "#9ecae1",
            VertexRole::Collar => "#eeeeee",
            _ => "#fdd0a2",
        };
        let _ = writeln!(
            s,
            r##"<circle cx="{x}" cy="{y}" r="{r}" fill="{fill}" fill-opacity="0.6" stroke="#3182bd" stroke-width="{stroke}"/>"##
        );
    }
    for e in g.edges() {
        let [u, v] = g.ends(e);
        let (a, b) = (p.center(u), p.center(v));
        let (ax, ay) = pt(a);
        let (bx, by) = pt(b);
        let path = match (p.geometry, geodesic_circle(a, b)) {
            (Geometry::Hyperbolic, Some((c, r))) => {
                let (cx, cy) = pt(c);
                let cross = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
                let sweep = u8::from(cross > 0.0);
                format!("M {ax} {ay} A {r} {r} 0 0 {sweep} {bx} {by}")
            }
            _ => format!("M {ax} {ay} L {bx} {by}"),
        };
        let width = if e < tri.original_edges { 3.0 * stroke } else { stroke };
        let _ = writeln!(s, r##"<path d="{path}" fill="none" stroke="#08306b" stroke-width="{width}"/>"##);
    }
    s.push_str("</svg>\n");
    s
}
