use crate::scalar::{Mode, Scalar};

use super::body::{Body, ConvexPolygon};
use super::point::{Point, Segment};
use super::GeomError;

/// Rigid frame in which a container edge `a → b` becomes the positive
/// x-axis starting at the origin, with the container above it.
///
/// The frame is EXACT only when the edge length is rational; otherwise all
/// mapped coordinates are FLOAT.
#[derive(Clone, Debug)]
pub struct EdgeFrame {
    origin: Point,
    v: Point,
    len: Scalar,
}

impl EdgeFrame {
    pub fn new(edge: &Segment) -> Result<EdgeFrame, GeomError> {
        let v = edge.vector();
        if v.x.is_zero() && v.y.is_zero() {
            return Err(GeomError::ZeroDirection);
        }
        let len = v.norm();
        if len.is_exact() {
            Ok(EdgeFrame { origin: edge.a.clone(), v, len })
        } else {
            Ok(EdgeFrame {
                origin: edge.a.to_float(),
                v: v.to_float(),
                len,
            })
        }
    }

    pub fn of_edge(container: &ConvexPolygon, index: usize) -> Result<EdgeFrame, GeomError> {
        if index >= container.len() {
            return Err(GeomError::BadEdge(index));
        }
        EdgeFrame::new(&container.edge(index))
    }

    pub fn mode(&self) -> Mode {
        self.len.mode()
    }

    /// Length of the defining edge.
    pub fn length(&self) -> &Scalar {
        &self.len
    }

    fn conv(&self, p: &Point) -> Point {
        if self.mode() == Mode::Float {
            p.to_float()
        } else {
            p.clone()
        }
    }

    pub fn to_frame(&self, p: &Point) -> Point {
        let d = &self.conv(p) - &self.origin;
        Point {
            x: self.v.dot(&d) / &self.len,
            y: self.v.cross(&d) / &self.len,
        }
    }

    pub fn from_frame(&self, p: &Point) -> Point {
        let p = self.conv(p);
        let n = self.v.perp();
        let off = &self.v.scale(&p.x) + &n.scale(&p.y);
        &self.origin + &off.scale(&(Scalar::one(self.mode()) / &self.len))
    }

    pub fn polygon_to_frame(&self, poly: &ConvexPolygon) -> ConvexPolygon {
        poly.map_points(|p| self.to_frame(p))
    }

    pub fn body_to_frame(&self, b: &Body) -> Body {
        let b = if self.mode() == Mode::Float { b.to_float() } else { b.clone() };
        b.map_points(|p| self.to_frame(p), &Scalar::one(self.mode()))
    }

    pub fn body_from_frame(&self, b: &Body) -> Body {
        let b = if self.mode() == Mode::Float { b.to_float() } else { b.clone() };
        b.map_points(|p| self.from_frame(p), &Scalar::one(self.mode()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_exact() {
        let seg = Segment::new(Point::int(1, 1, Mode::Exact), Point::int(4, 5, Mode::Exact));
        let f = EdgeFrame::new(&seg).unwrap();
        assert_eq!(f.mode(), Mode::Exact);
        assert_eq!(f.to_frame(&seg.b), Point::int(5, 0, Mode::Exact));
        let p = Point::ratio((2, 3), (-7, 5));
        assert_eq!(f.from_frame(&f.to_frame(&p)), p);
    }

    #[test]
    fn irrational_edge_gives_float_frame() {
        let seg = Segment::new(Point::int(1, 0, Mode::Exact), Point::int(0, 1, Mode::Exact));
        let f = EdgeFrame::new(&seg).unwrap();
        assert_eq!(f.mode(), Mode::Float);
        let q = f.to_frame(&Point::int(0, 0, Mode::Exact));
        assert!((q.y.to_f64() - 0.5f64.sqrt()).abs() < 1e-15);
    }
}
