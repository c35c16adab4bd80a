use std::ops::{Add, Sub};

use crate::scalar::{Mode, Scalar, DEFAULT_EPS};

use super::GeomError;

/// A point (or a free vector) whose coordinates share one scalar mode.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Result<Point, GeomError> {
        x.same_mode(&y)?;
        Ok(Point { x, y })
    }

    pub fn ratio(x: (i64, i64), y: (i64, i64)) -> Point {
        Point {
            x: Scalar::ratio(x.0, x.1),
            y: Scalar::ratio(y.0, y.1),
        }
    }

    pub fn int(x: i64, y: i64, mode: Mode) -> Point {
        Point {
            x: Scalar::int(x, mode),
            y: Scalar::int(y, mode),
        }
    }

    pub fn float(x: f64, y: f64) -> Point {
        Point {
            x: Scalar::Float(x),
            y: Scalar::Float(y),
        }
    }

    pub fn origin(mode: Mode) -> Point {
        Point::int(0, 0, mode)
    }

    pub fn mode(&self) -> Mode {
        self.x.mode()
    }

    pub fn to_float(&self) -> Point {
        Point {
            x: self.x.to_float(),
            y: self.y.to_float(),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }

    pub fn scale(&self, k: &Scalar) -> Point {
        Point {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    pub fn dot(&self, o: &Point) -> Scalar {
        &self.x * &o.x + &self.y * &o.y
    }

    /// z-component of `self × o`; positive when `o` is counter-clockwise of `self`.
    pub fn cross(&self, o: &Point) -> Scalar {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn norm2(&self) -> Scalar {
        self.dot(self)
    }

    pub fn norm(&self) -> Scalar {
        self.norm2().sqrt()
    }

    /// Counter-clockwise perpendicular.
    pub fn perp(&self) -> Point {
        Point {
            x: -&self.y,
            y: self.x.clone(),
        }
    }
}

impl Add<&Point> for &Point {
    type Output = Point;
    fn add(self, o: &Point) -> Point {
        Point {
            x: &self.x + &o.x,
            y: &self.y + &o.y,
        }
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;
    fn sub(self, o: &Point) -> Point {
        Point {
            x: &self.x - &o.x,
            y: &self.y - &o.y,
        }
    }
}

/// `cross(b - a, p - a)`: twice the signed area of `(a, b, p)`; positive when
/// `p` lies left of the directed line `a → b`.
pub fn orient(a: &Point, b: &Point, p: &Point) -> Scalar {
    (b - a).cross(&(p - a))
}

/// A nonzero direction. Two directions are equal when one is a positive
/// multiple of the other.
#[derive(Clone, Debug)]
pub struct Direction {
    v: Point,
}

impl Direction {
    pub fn new(dx: Scalar, dy: Scalar) -> Result<Direction, GeomError> {
        let v = Point::new(dx, dy)?;
        if v.x.is_zero() && v.y.is_zero() {
            return Err(GeomError::ZeroDirection);
        }
        Ok(Direction { v })
    }

    pub fn from_vector(v: Point) -> Result<Direction, GeomError> {
        Direction::new(v.x, v.y)
    }

    pub fn ratio(dx: i64, dy: i64) -> Direction {
        Direction::new(Scalar::ratio(dx, 1), Scalar::ratio(dy, 1)).expect("nonzero direction")
    }

    pub fn vector(&self) -> &Point {
        &self.v
    }

    pub fn dx(&self) -> &Scalar {
        &self.v.x
    }

    pub fn dy(&self) -> &Scalar {
        &self.v.y
    }

    /// Same direction up to positive scaling. EXACT directions are compared
    /// with cross products; FLOAT ones with `|sin θ| ≤ eps`.
    pub fn matches(&self, o: &Direction, eps: f64) -> bool {
        let (a, b) = Scalar::unify(&self.v.x, &o.v.x);
        let (c, d) = Scalar::unify(&self.v.y, &o.v.y);
        let u = Point { x: a, y: c };
        let w = Point { x: b, y: d };
        let cross = u.cross(&w);
        let dot = u.dot(&w);
        match cross {
            Scalar::Exact(_) => cross.is_zero() && dot.is_positive(),
            Scalar::Float(c) => {
                let scale = (u.norm2().to_f64() * w.norm2().to_f64()).sqrt();
                c.abs() <= eps * scale && dot.is_positive()
            }
        }
    }
}

impl PartialEq for Direction {
    fn eq(&self, o: &Direction) -> bool {
        self.matches(o, DEFAULT_EPS)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Segment {
        Segment { a, b }
    }

    pub fn vector(&self) -> Point {
        &self.b - &self.a
    }

    pub fn length(&self) -> Scalar {
        self.vector().norm()
    }

    pub fn direction(&self) -> Result<Direction, GeomError> {
        Direction::from_vector(self.vector())
    }

    pub fn midpoint(&self) -> Point {
        Point {
            x: (&self.a.x + &self.b.x).half(),
            y: (&self.a.y + &self.b.y).half(),
        }
    }

    /// The sub-segment of half the length sharing this segment's midpoint.
    pub fn middle_half(&self) -> Segment {
        let v = self.vector();
        let q = Scalar::frac(1, 4, v.x.mode());
        let step = v.scale(&q);
        Segment {
            a: &self.a + &step,
            b: &self.b - &step,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direction_equality_is_positive_proportionality() {
        assert_eq!(Direction::ratio(1, 2), Direction::ratio(3, 6));
        assert_ne!(Direction::ratio(1, 2), Direction::ratio(-1, -2));
        assert_ne!(Direction::ratio(1, 0), Direction::ratio(0, 1));
        let f = Direction::new(Scalar::Float(0.1), Scalar::Float(0.2)).unwrap();
        assert_eq!(f, Direction::ratio(1, 2));
    }

    #[test]
    fn zero_direction_rejected() {
        assert!(matches!(
            Direction::new(Scalar::ratio(0, 1), Scalar::ratio(0, 1)),
            Err(GeomError::ZeroDirection)
        ));
    }

    #[test]
    fn mixed_point_rejected() {
        assert!(Point::new(Scalar::ratio(1, 2), Scalar::Float(0.5)).is_err());
    }

    #[test]
    fn middle_half() {
        let s = Segment::new(Point::int(0, 0, Mode::Exact), Point::int(1, 0, Mode::Exact));
        let m = s.middle_half();
        assert_eq!(m.a, Point::ratio((1, 4), (0, 1)));
        assert_eq!(m.b, Point::ratio((3, 4), (0, 1)));
    }
}
