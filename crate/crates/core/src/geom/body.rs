use std::cmp::Ordering;
use std::f64::consts::PI;

use crate::scalar::{Mode, Scalar, DEFAULT_EPS};

use super::point::{orient, Direction, Point, Segment};
use super::GeomError;

/// Absolute slack covering the rounding error carried by FLOAT coordinates
/// of magnitude `scale`.
pub(crate) fn roundoff_floor(scale: f64) -> f64 {
    64.0 * f64::EPSILON * scale.max(1.0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Disk {
    center: Point,
    radius: Scalar,
}

impl Disk {
    pub fn new(center: Point, radius: Scalar) -> Result<Disk, GeomError> {
        center.x.same_mode(&radius)?;
        if !radius.is_positive() {
            return Err(GeomError::NonPositiveRadius);
        }
        Ok(Disk { center, radius })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius(&self) -> &Scalar {
        &self.radius
    }

    pub fn mode(&self) -> Mode {
        self.radius.mode()
    }
}

/// A strictly convex polygon with counter-clockwise vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Validates the ring; degenerate input is rejected, never repaired.
    pub fn new(vertices: Vec<Point>) -> Result<ConvexPolygon, GeomError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeomError::TooFewVertices(n));
        }
        let mode = vertices[0].mode();
        for v in &vertices {
            if v.mode() != mode || v.y.mode() != mode {
                return Err(GeomError::Scalar(crate::scalar::ScalarError::MixedModes));
            }
        }
        // Every vertex must lie strictly left of every edge it is not on.
        // This rules out collinear triples, clockwise rings and rings that
        // wind more than once.
        for i in 0..n {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % n];
            let e = b - a;
            if e.x.is_zero() && e.y.is_zero() {
                return Err(GeomError::NotConvex(i));
            }
            for (j, p) in vertices.iter().enumerate() {
                if j == i || j == (i + 1) % n {
                    continue;
                }
                let o = orient(a, b, p);
                let ok = match &o {
                    Scalar::Exact(_) => o.is_positive(),
                    Scalar::Float(v) => {
                        let scale = (e.norm2().to_f64() * (p - a).norm2().to_f64()).sqrt();
                        *v > 1e-12 * scale
                    }
                };
                if !ok {
                    return Err(GeomError::NotConvex((i + 1) % n));
                }
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    /// Axis-aligned rectangle `[x0,x1] × [y0,y1]`.
    pub fn rect(x0: Scalar, y0: Scalar, x1: Scalar, y1: Scalar) -> Result<ConvexPolygon, GeomError> {
        ConvexPolygon::new(vec![
            Point::new(x0.clone(), y0.clone())?,
            Point::new(x1.clone(), y0)?,
            Point::new(x1, y1.clone())?,
            Point::new(x0, y1)?,
        ])
    }

    /// The unit square `[0,1]²` in the given mode.
    pub fn unit_square(mode: Mode) -> ConvexPolygon {
        ConvexPolygon::rect(
            Scalar::zero(mode),
            Scalar::zero(mode),
            Scalar::one(mode),
            Scalar::one(mode),
        )
        .expect("unit square")
    }

    /// Axis-aligned square with lower-left corner `origin`.
    pub fn square(origin: &Point, side: &Scalar) -> Result<ConvexPolygon, GeomError> {
        ConvexPolygon::rect(
            origin.x.clone(),
            origin.y.clone(),
            &origin.x + side,
            &origin.y + side,
        )
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mode(&self) -> Mode {
        self.vertices[0].mode()
    }

    pub fn edge(&self, i: usize) -> Segment {
        let n = self.vertices.len();
        Segment::new(self.vertices[i % n].clone(), self.vertices[(i + 1) % n].clone())
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.vertices.len()).map(move |i| self.edge(i))
    }

    pub fn to_float(&self) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(Point::to_float).collect(),
        }
    }

    /// Applies a point map that preserves orientation and convexity
    /// (similarities with positive determinant).
    pub(crate) fn map_points(&self, f: impl Fn(&Point) -> Point) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(f).collect(),
        }
    }

    /// True when every edge is horizontal or vertical.
    pub fn is_axis_aligned(&self) -> bool {
        self.edges().all(|e| {
            let v = e.vector();
            v.x.is_zero() || v.y.is_zero()
        })
    }

    /// Perimeter of the polygon; see [`perimeter`].
    pub fn perimeter(&self) -> Scalar {
        let lengths: Vec<Scalar> = self.edges().map(|e| e.length()).collect();
        Scalar::sum_promoting(&lengths)
    }

    pub fn area(&self) -> Scalar {
        let n = self.vertices.len();
        let twice = (0..n)
            .map(|i| self.vertices[i].cross(&self.vertices[(i + 1) % n]))
            .reduce(|a, b| a + b)
            .expect("nonempty");
        twice.half()
    }

    /// Is `p` in the closed polygon?
    pub fn contains_point(&self, p: &Point) -> bool {
        self.edges().all(|e| !orient(&e.a, &e.b, p).is_negative())
    }

    /// Largest coordinate magnitude, used to scale FLOAT tolerances.
    pub(crate) fn coord_scale(&self) -> f64 {
        self.vertices
            .iter()
            .map(|p| p.x.to_f64().abs().max(p.y.to_f64().abs()))
            .fold(0.0, f64::max)
    }

    /// Tolerance used for containment and contact tests in FLOAT mode.
    pub fn float_tolerance(&self, eps: f64) -> f64 {
        eps * self.coord_scale().max(1.0)
    }

    /// How far `body` sticks out of this closed polygon, if at all.
    ///
    /// EXACT mode decides with zero tolerance; FLOAT mode tolerates
    /// [`ConvexPolygon::float_tolerance`].
    pub fn protrusion(&self, body: &Body, eps: f64) -> Option<Scalar> {
        let mut worst: Option<Scalar> = None;
        for e in self.edges() {
            // Positive when the body crosses the supporting line of `e`.
            let dist = match body {
                Body::Polygon(p) => {
                    let m = p
                        .vertices
                        .iter()
                        .map(|v| orient(&e.a, &e.b, v))
                        .reduce(|a, b| a.min(b))
                        .expect("nonempty");
                    if !m.is_negative() {
                        continue;
                    }
                    divide_by_length(&(-m), &e)
                }
                Body::Disk(d) => {
                    let o = orient(&e.a, &e.b, &d.center);
                    let r2len2 = d.radius.square() * e.vector().norm2();
                    if !o.is_negative() && o.square() >= r2len2 {
                        continue;
                    }
                    let (r, s) = Scalar::unify(&d.radius, &divide_by_length(&o, &e));
                    r - s
                }
            };
            let out = match &dist {
                Scalar::Exact(_) => dist.is_positive(),
                Scalar::Float(v) => *v > self.float_tolerance(eps),
            };
            if out {
                worst = Some(match worst {
                    None => dist,
                    Some(w) => {
                        let (w, d) = Scalar::unify(&w, &dist);
                        w.max(d)
                    }
                });
            }
        }
        worst
    }
}

/// `value / |e|`, EXACT when the edge length is rational.
pub(crate) fn divide_by_length(value: &Scalar, e: &Segment) -> Scalar {
    let len = e.length();
    let (v, l) = Scalar::unify(value, &len);
    v / l
}

#[derive(Clone, Debug, PartialEq)]
pub enum Body {
    Disk(Disk),
    Polygon(ConvexPolygon),
}

/// `ℓ_d(b) ∩ b`: a side or a single extreme point.
#[derive(Clone, Debug, PartialEq)]
pub enum Support {
    Side(Segment),
    Point(Point),
}

impl Body {
    pub fn mode(&self) -> Mode {
        match self {
            Body::Disk(d) => d.mode(),
            Body::Polygon(p) => p.mode(),
        }
    }

    pub fn as_disk(&self) -> Option<&Disk> {
        match self {
            Body::Disk(d) => Some(d),
            Body::Polygon(_) => None,
        }
    }

    pub fn as_polygon(&self) -> Option<&ConvexPolygon> {
        match self {
            Body::Polygon(p) => Some(p),
            Body::Disk(_) => None,
        }
    }

    pub fn to_float(&self) -> Body {
        match self {
            Body::Disk(d) => Body::Disk(Disk {
                center: d.center.to_float(),
                radius: d.radius.to_float(),
            }),
            Body::Polygon(p) => Body::Polygon(p.to_float()),
        }
    }

    /// Rational multiplier of π in the perimeter (disks only).
    pub fn perimeter_pi_coefficient(&self) -> Option<Scalar> {
        self.as_disk().map(|d| &d.radius + &d.radius)
    }

    /// Rational multiplier of π in the area (disks only).
    pub fn area_pi_coefficient(&self) -> Option<Scalar> {
        self.as_disk().map(|d| d.radius.square())
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bbox(&self) -> (Point, Point) {
        match self {
            Body::Disk(d) => (
                Point {
                    x: &d.center.x - &d.radius,
                    y: &d.center.y - &d.radius,
                },
                Point {
                    x: &d.center.x + &d.radius,
                    y: &d.center.y + &d.radius,
                },
            ),
            Body::Polygon(p) => {
                let v = p.vertices();
                let mut lo = v[0].clone();
                let mut hi = v[0].clone();
                for q in &v[1..] {
                    if q.x < lo.x {
                        lo.x = q.x.clone();
                    }
                    if q.y < lo.y {
                        lo.y = q.y.clone();
                    }
                    if q.x > hi.x {
                        hi.x = q.x.clone();
                    }
                    if q.y > hi.y {
                        hi.y = q.y.clone();
                    }
                }
                (lo, hi)
            }
        }
    }

    pub fn bbox_f64(&self) -> [f64; 4] {
        match self {
            Body::Disk(d) => {
                let (x, y) = d.center.to_f64();
                let r = d.radius.to_f64();
                [x - r, y - r, x + r, y + r]
            }
            Body::Polygon(p) => {
                let mut b = [f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY];
                for v in p.vertices() {
                    let (x, y) = v.to_f64();
                    b[0] = b[0].min(x);
                    b[1] = b[1].min(y);
                    b[2] = b[2].max(x);
                    b[3] = b[3].max(y);
                }
                b
            }
        }
    }

    /// Largest extent of the bounding box.
    pub fn size_f64(&self) -> f64 {
        let b = self.bbox_f64();
        (b[2] - b[0]).max(b[3] - b[1])
    }

    /// Side length of the smallest axis-aligned square containing the body.
    pub fn bounding_square_side(&self) -> Scalar {
        let (lo, hi) = self.bbox();
        (&hi.x - &lo.x).max(&hi.y - &lo.y)
    }

    pub(crate) fn map_points(&self, f: impl Fn(&Point) -> Point, scale: &Scalar) -> Body {
        match self {
            Body::Disk(d) => Body::Disk(Disk {
                center: f(&d.center),
                radius: &d.radius * scale,
            }),
            Body::Polygon(p) => Body::Polygon(p.map_points(f)),
        }
    }
}

/// Perimeter of a body.
///
/// Polygon perimeters stay EXACT when every edge length is rational (in
/// particular for axis-parallel polygons) and are FLOAT otherwise. Disk
/// perimeters are always FLOAT; use [`Body::perimeter_pi_coefficient`] for the
/// exact multiplier of π.
pub fn perimeter(b: &Body) -> Scalar {
    match b {
        Body::Disk(d) => Scalar::Float(2.0 * PI * d.radius.to_f64()),
        Body::Polygon(p) => p.perimeter(),
    }
}

/// Area of a body; disks follow the same π convention as [`perimeter`].
pub fn area(b: &Body) -> Scalar {
    match b {
        Body::Disk(d) => Scalar::Float(PI * d.radius.to_f64().powi(2)),
        Body::Polygon(p) => p.area(),
    }
}

/// `ℓ_d(b) ∩ b` for the directed supporting line of direction `d` that has
/// `b` on its left.
pub fn support_side(b: &Body, d: &Direction) -> Support {
    match b {
        Body::Polygon(p) => {
            for e in p.edges() {
                if let Ok(dir) = e.direction() {
                    if dir.matches(d, DEFAULT_EPS) {
                        return Support::Side(e);
                    }
                }
            }
            let (dv, _) = Scalar::unify(d.dx(), &p.vertices()[0].x);
            let dir = if dv.mode() == p.mode() {
                d.vector().clone()
            } else {
                d.vector().to_float()
            };
            let best = p
                .vertices()
                .iter()
                .min_by(|u, v| dir.cross(u).partial_cmp(&dir.cross(v)).unwrap_or(Ordering::Equal))
                .expect("nonempty");
            Support::Point(best.clone())
        }
        Body::Disk(disk) => {
            let v = d.vector();
            let len = v.norm();
            let mode = if len.is_exact() && disk.mode() == Mode::Exact {
                Mode::Exact
            } else {
                Mode::Float
            };
            let conv = |s: &Scalar| s.to_mode(mode).expect("exact to float");
            let normal = v.perp();
            let k = conv(&disk.radius) / conv(&len);
            let c = &disk.center;
            Support::Point(Point {
                x: conv(&c.x) - conv(&normal.x) * &k,
                y: conv(&c.y) - conv(&normal.y) * &k,
            })
        }
    }
}

/// The image of `b` under `p ↦ mu·p + t`.
pub fn apply_homothety(b: &Body, mu: &Scalar, t: &Point) -> Result<Body, GeomError> {
    mu.same_mode(&t.x)?;
    if b.mode() != mu.mode() {
        return Err(GeomError::Scalar(crate::scalar::ScalarError::MixedModes));
    }
    if !mu.is_positive() {
        return Err(GeomError::NonPositiveFactor);
    }
    Ok(b.map_points(|p| &p.scale(mu) + t, mu))
}

/// Minimum distance from `b` to the supporting line of `e`, an edge of the
/// convex `container` holding `b`.
pub fn body_edge_distance(b: &Body, e: &Segment, container: &ConvexPolygon) -> Result<Scalar, GeomError> {
    if container.protrusion(b, DEFAULT_EPS).is_some() {
        return Err(GeomError::NotInside);
    }
    Ok(edge_distance_unchecked(b, e))
}

pub(crate) fn edge_distance_unchecked(b: &Body, e: &Segment) -> Scalar {
    match b {
        Body::Polygon(p) => {
            let m = p
                .vertices()
                .iter()
                .map(|v| orient(&e.a, &e.b, v))
                .reduce(|a, b| a.min(b))
                .expect("nonempty");
            divide_by_length(&m, e)
        }
        Body::Disk(d) => {
            let o = orient(&e.a, &e.b, &d.center);
            // Exact tangency test first so that touching disks yield an exact 0.
            if o.is_exact() && !o.is_negative() && o.square() == d.radius.square() * e.vector().norm2() {
                return Scalar::zero(Mode::Exact);
            }
            let dist = divide_by_length(&o, e);
            let (dist, r) = Scalar::unify(&dist, &d.radius);
            let gap = dist - r;
            if gap.is_negative() {
                Scalar::zero(gap.mode())
            } else {
                gap
            }
        }
    }
}

/// Finds `(mu, t)` with `body = mu·reference + t`, if the body is a positive
/// homothet of `reference`.
pub fn homothety_between(reference: &Body, body: &Body, eps: f64) -> Option<(Scalar, Point)> {
    match (reference, body) {
        (Body::Disk(c), Body::Disk(d)) => {
            let (rc, rd) = Scalar::unify(&c.radius, &d.radius);
            let mu = rd / rc;
            let center = if mu.is_exact() { c.center.clone() } else { c.center.to_float() };
            let dc = if mu.is_exact() { d.center.clone() } else { d.center.to_float() };
            let t = &dc - &center.scale(&mu);
            Some((mu, t))
        }
        (Body::Polygon(c), Body::Polygon(p)) => {
            let n = c.len();
            if p.len() != n {
                return None;
            }
            let float = c.mode() == Mode::Float || p.mode() == Mode::Float;
            let cv: Vec<Point> = c.vertices().iter().map(|v| if float { v.to_float() } else { v.clone() }).collect();
            let pv: Vec<Point> = p.vertices().iter().map(|v| if float { v.to_float() } else { v.clone() }).collect();
            let scale = p.coord_scale().max(c.coord_scale());
            'offset: for k in 0..n {
                let ec = &cv[(k + 1) % n] - &cv[k];
                let ep = &pv[1] - &pv[0];
                let mu = if ec.x.abs() >= ec.y.abs() { &ep.x / &ec.x } else { &ep.y / &ec.y };
                if !mu.is_positive() {
                    continue;
                }
                for i in 0..n {
                    let ec = &cv[(k + i + 1) % n] - &cv[(k + i) % n];
                    let ep = &pv[(i + 1) % n] - &pv[i];
                    let diff = &ep - &ec.scale(&mu);
                    let ok = match &diff.x {
                        Scalar::Exact(_) => diff.x.is_zero() && diff.y.is_zero(),
                        Scalar::Float(_) => {
                            let tol = eps * ep.norm2().to_f64().sqrt() + roundoff_floor(scale);
                            diff.x.to_f64().abs() <= tol && diff.y.to_f64().abs() <= tol
                        }
                    };
                    if !ok {
                        continue 'offset;
                    }
                }
                let t = &pv[0] - &cv[k].scale(&mu);
                return Some((mu, t));
            }
            None
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::int(0, 0, Mode::Exact),
            Point::int(1, 0, Mode::Exact),
            Point::int(0, 1, Mode::Exact),
        ])
        .unwrap()
    }

    fn unit_disk() -> Body {
        Body::Disk(Disk::new(Point::int(0, 0, Mode::Exact), Scalar::ratio(1, 1)).unwrap())
    }

    #[test]
    fn perimeter_examples() {
        let sq = Body::Polygon(ConvexPolygon::unit_square(Mode::Exact));
        assert_eq!(perimeter(&sq), Scalar::ratio(4, 1));
        let d = Body::Disk(Disk::new(Point::int(0, 0, Mode::Exact), Scalar::ratio(1, 2)).unwrap());
        assert_eq!(d.perimeter_pi_coefficient(), Some(Scalar::ratio(1, 1)));
        assert!((perimeter(&d).to_f64() - PI).abs() < 1e-15);
        let t = perimeter(&Body::Polygon(tri()));
        assert!(!t.is_exact());
        assert!((t.to_f64() - (2.0 + 2f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn rational_edges_keep_perimeter_exact() {
        let t = ConvexPolygon::new(vec![
            Point::int(0, 0, Mode::Exact),
            Point::int(4, 0, Mode::Exact),
            Point::int(0, 3, Mode::Exact),
        ])
        .unwrap();
        assert_eq!(t.perimeter(), Scalar::ratio(12, 1));
    }

    #[test]
    fn area_examples() {
        assert_eq!(area(&Body::Polygon(ConvexPolygon::unit_square(Mode::Exact))), Scalar::ratio(1, 1));
        assert_eq!(area(&Body::Polygon(tri())), Scalar::ratio(1, 2));
        let d = Body::Disk(Disk::new(Point::int(0, 0, Mode::Exact), Scalar::ratio(2, 1)).unwrap());
        assert_eq!(d.area_pi_coefficient(), Some(Scalar::ratio(4, 1)));
        assert!((area(&d).to_f64() - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn rejects_degenerate_polygons() {
        let collinear = vec![
            Point::int(0, 0, Mode::Exact),
            Point::int(1, 0, Mode::Exact),
            Point::int(2, 0, Mode::Exact),
            Point::int(0, 1, Mode::Exact),
        ];
        assert!(matches!(ConvexPolygon::new(collinear), Err(GeomError::NotConvex(_))));
        let cw = vec![
            Point::int(0, 0, Mode::Exact),
            Point::int(0, 1, Mode::Exact),
            Point::int(1, 0, Mode::Exact),
        ];
        assert!(ConvexPolygon::new(cw).is_err());
        assert!(matches!(
            ConvexPolygon::new(vec![Point::int(0, 0, Mode::Exact), Point::int(1, 0, Mode::Exact)]),
            Err(GeomError::TooFewVertices(2))
        ));
        // pentagram: every turn is left but the ring winds twice
        let star: Vec<Point> = (0..5)
            .map(|i| {
                let a = (i * 2) as f64 * 2.0 * PI / 5.0;
                Point::float(a.cos(), a.sin())
            })
            .collect();
        assert!(ConvexPolygon::new(star).is_err());
    }

    #[test]
    fn disk_radius_must_be_positive() {
        assert!(matches!(
            Disk::new(Point::int(0, 0, Mode::Exact), Scalar::ratio(-1, 4)),
            Err(GeomError::NonPositiveRadius)
        ));
    }

    #[test]
    fn support_side_examples() {
        let sq = Body::Polygon(ConvexPolygon::unit_square(Mode::Exact));
        assert_eq!(
            support_side(&sq, &Direction::ratio(1, 0)),
            Support::Side(Segment::new(Point::int(0, 0, Mode::Exact), Point::int(1, 0, Mode::Exact)))
        );
        let t = Body::Polygon(tri());
        assert_eq!(support_side(&t, &Direction::ratio(0, 1)), Support::Point(Point::int(1, 0, Mode::Exact)));
        assert_eq!(
            support_side(&t, &Direction::ratio(-1, 1)),
            Support::Side(Segment::new(Point::int(1, 0, Mode::Exact), Point::int(0, 1, Mode::Exact)))
        );
        assert_eq!(support_side(&t, &Direction::ratio(-1, -1)), Support::Point(Point::int(0, 1, Mode::Exact)));
        assert_eq!(
            support_side(&unit_disk(), &Direction::ratio(1, 0)),
            Support::Point(Point::int(0, -1, Mode::Exact))
        );
    }

    #[test]
    fn homothety_examples() {
        let sq = Body::Polygon(ConvexPolygon::unit_square(Mode::Exact));
        let half = apply_homothety(&sq, &Scalar::ratio(1, 2), &Point::origin(Mode::Exact)).unwrap();
        assert_eq!(perimeter(&half), Scalar::ratio(2, 1));
        let d = apply_homothety(&unit_disk(), &Scalar::ratio(3, 1), &Point::int(1, 1, Mode::Exact)).unwrap();
        assert_eq!(d, Body::Disk(Disk::new(Point::int(1, 1, Mode::Exact), Scalar::ratio(3, 1)).unwrap()));
        let same = apply_homothety(&sq, &Scalar::ratio(1, 1), &Point::origin(Mode::Exact)).unwrap();
        assert_eq!(same, sq);
        assert!(matches!(
            apply_homothety(&sq, &Scalar::ratio(0, 1), &Point::origin(Mode::Exact)),
            Err(GeomError::NonPositiveFactor)
        ));
        assert_eq!(
            homothety_between(&sq, &half, DEFAULT_EPS),
            Some((Scalar::ratio(1, 2), Point::origin(Mode::Exact)))
        );
        assert_eq!(homothety_between(&sq, &Body::Polygon(tri()), DEFAULT_EPS), None);
    }

    #[test]
    fn edge_distance_examples() {
        let u = ConvexPolygon::unit_square(Mode::Exact);
        let d = Body::Disk(Disk::new(Point::ratio((1, 2), (1, 2)), Scalar::ratio(1, 4)).unwrap());
        assert_eq!(body_edge_distance(&d, &u.edge(0), &u).unwrap(), Scalar::ratio(1, 4));
        let sq = Body::Polygon(ConvexPolygon::square(&Point::ratio((3, 8), (3, 8)), &Scalar::ratio(1, 4)).unwrap());
        assert_eq!(body_edge_distance(&sq, &u.edge(3), &u).unwrap(), Scalar::ratio(3, 8));
        let touching = Body::Disk(Disk::new(Point::ratio((1, 2), (1, 2)), Scalar::ratio(1, 2)).unwrap());
        assert_eq!(body_edge_distance(&touching, &u.edge(0), &u).unwrap(), Scalar::ratio(0, 1));
        let outside = Body::Disk(Disk::new(Point::ratio((1, 2), (1, 2)), Scalar::ratio(3, 4)).unwrap());
        assert!(matches!(body_edge_distance(&outside, &u.edge(0), &u), Err(GeomError::NotInside)));
    }
}
