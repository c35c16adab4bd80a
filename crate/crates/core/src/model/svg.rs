use std::fmt::Write;

use crate::geom::{Body, ConvexPolygon};

use super::PackingDoc;

struct View {
    x0: f64,
    y1: f64,
    scale: f64,
}

impl View {
    fn x(&self, x: f64) -> f64 {
        (x - self.x0) * self.scale
    }

    // SVG y grows downwards.
    fn y(&self, y: f64) -> f64 {
        (self.y1 - y) * self.scale
    }
}

fn path(poly: &ConvexPolygon, v: &View) -> String {
    let mut d = String::new();
    for (i, p) in poly.vertices().iter().enumerate() {
        let (x, y) = p.to_f64();
        let _ = write!(d, "{}{:.4},{:.4} ", if i == 0 { "M" } else { "L" }, v.x(x), v.y(y));
    }
    d.push('Z');
    d
}

/// Draws the container outline and every body, in index order.
///
/// `width_px` is clamped to at least 64.
pub fn render_svg(doc: &PackingDoc, width_px: u32) -> String {
    let width = width_px.max(64) as f64;
    let b = Body::Polygon(doc.container.clone()).bbox_f64();
    let (w, h) = (b[2] - b[0], b[3] - b[1]);
    let margin = 0.02 * w.max(h);
    let view = View {
        x0: b[0] - margin,
        y1: b[3] + margin,
        scale: width / (w + 2.0 * margin),
    };
    let height = ((h + 2.0 * margin) * view.scale).ceil();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<path d="{}" fill="none" stroke="black" stroke-width="1"/>"#,
        path(&doc.container, &view)
    );
    for body in &doc.bodies {
        match body {
            Body::Disk(d) => {
                let (x, y) = d.center().to_f64();
                let _ = writeln!(
                    out,
                    r#"<circle cx="{:.4}" cy="{:.4}" r="{:.4}" fill="steelblue" fill-opacity="0.5"/>"#,
                    view.x(x),
                    view.y(y),
                    d.radius().to_f64() * view.scale
                );
            }
            Body::Polygon(p) => {
                let _ = writeln!(
                    out,
                    r#"<path d="{}" fill="steelblue" fill-opacity="0.5"/>"#,
                    path(p, &view)
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Disk, Point};
    use crate::scalar::{Mode, Scalar};
    use serde_json::Map;

    fn doc(bodies: Vec<Body>) -> PackingDoc {
        PackingDoc::new(ConvexPolygon::unit_square(Mode::Exact), bodies, None, "t", Map::new()).unwrap()
    }

    #[test]
    fn one_circle_per_disk() {
        let d = Disk::new(Point::ratio((1, 2), (1, 2)), Scalar::ratio(1, 2)).unwrap();
        let svg = render_svg(&doc(vec![Body::Disk(d)]), 200);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<path").count(), 1);
    }

    #[test]
    fn empty_doc_draws_only_container() {
        let svg = render_svg(&doc(vec![]), 64);
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 0);
        assert_eq!(svg, render_svg(&doc(vec![]), 64));
    }

    #[test]
    fn y_axis_points_up() {
        let d = Disk::new(Point::ratio((1, 2), (3, 4)), Scalar::ratio(1, 8)).unwrap();
        let svg = render_svg(&doc(vec![Body::Disk(d)]), 104);
        // width 104 over 1.04 units: scale 100, top margin 0.02 → cy = (1.02-0.75)·100
        assert!(svg.contains(r#"cy="27.0000""#), "{svg}");
    }
}
