//! Greedy packing of disks touching the boundary of the unit square.
//!
//! Each step takes the largest disk that fits in the free part of the square
//! and touches its boundary. The maximum is searched over disks tangent to
//! three constraints (sides or placed disks, at least one side) and disks
//! wedged between two parallel constraints.

use crate::geom::{Body, ConvexPolygon, Disk, Point};
use crate::model::PackingDoc;
use crate::params;
use crate::scalar::{Mode, Scalar};

use super::{out_of_range, GenError};

/// Radius `(3 − 2√2)/2` of the disks in the corners left by the first one.
pub fn corner_radius() -> f64 {
    (3.0 - 2.0 * 2f64.sqrt()) / 2.0
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct C {
    x: f64,
    y: f64,
    r: f64,
}

const TOL: f64 = 1e-12;

fn fits(c: &C, placed: &[C]) -> bool {
    c.r > TOL
        && c.x - c.r >= -TOL
        && c.y - c.r >= -TOL
        && c.x + c.r <= 1.0 + TOL
        && c.y + c.r <= 1.0 + TOL
        && placed.iter().all(|d| clear(c, d))
}

fn clear(c: &C, d: &C) -> bool {
    let dist = ((c.x - d.x).powi(2) + (c.y - d.y).powi(2)).sqrt();
    dist >= c.r + d.r - TOL * (1.0 + c.r + d.r)
}

/// Maps local coordinates of side `s` (x along the side, y the distance from
/// it) to the square and back. Sides: 0 bottom, 1 right, 2 top, 3 left.
fn to_local(s: usize, x: f64, y: f64) -> (f64, f64) {
    match s {
        0 => (x, y),
        1 => (y, 1.0 - x),
        2 => (x, 1.0 - y),
        _ => (y, x),
    }
}

fn from_local(s: usize, u: f64, v: f64) -> (f64, f64) {
    match s {
        0 => (u, v),
        1 => (1.0 - v, u),
        2 => (u, 1.0 - v),
        _ => (v, u),
    }
}

fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    if a.abs() < 1e-14 {
        if b.abs() < 1e-300 {
            return vec![];
        }
        return vec![-c / b];
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return vec![];
    }
    let sq = disc.sqrt();
    // Numerically stable pair.
    let q = -0.5 * (b + b.signum() * sq);
    if q == 0.0 {
        return vec![0.0];
    }
    vec![q / a, c / q]
}

/// Candidates tangent to the sides alone: the inscribed disk.
fn side_only() -> Vec<C> {
    vec![C { x: 0.5, y: 0.5, r: 0.5 }]
}

/// Candidates tangent to two sides and disk `d`.
fn two_sides_one_disk(d: &C) -> Vec<C> {
    let mut out = Vec::new();
    // Corners: center (±r, ±r) from the corner.
    for (cx, cy) in [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)] {
        let sx: f64 = if cx == 0.0 { 1.0 } else { -1.0 };
        let sy: f64 = if cy == 0.0 { 1.0 } else { -1.0 };
        let a = (d.x - cx) * sx;
        let b = (d.y - cy) * sy;
        // (r-a)² + (r-b)² = (r+R)²
        for r in quadratic_roots(1.0, -2.0 * (a + b + d.r), a * a + b * b - d.r * d.r) {
            if r > 0.0 {
                out.push(C { x: cx + sx * r, y: cy + sy * r, r });
            }
        }
    }
    // Between two opposite sides: r = 1/2.
    let h = (1.0f64 + d.r).powi(2);
    for horizontal in [true, false] {
        let (a, b) = if horizontal { (d.y, d.x) } else { (d.x, d.y) };
        let rest = h - (0.5 - a).powi(2);
        if rest < 0.0 {
            continue;
        }
        for t in [b - rest.sqrt(), b + rest.sqrt()] {
            let (x, y) = if horizontal { (t, 0.5) } else { (0.5, t) };
            out.push(C { x, y, r: 0.5 });
        }
    }
    out
}

/// Candidates tangent to side `s` and to disk `d` at the antipodal point.
fn one_side_one_disk(s: usize, d: &C) -> Vec<C> {
    let (u, v) = to_local(s, d.x, d.y);
    let r = (v - d.r) / 2.0;
    if r <= 0.0 {
        return vec![];
    }
    let (x, y) = from_local(s, u, r);
    vec![C { x, y, r }]
}

/// Candidates tangent to side `s` and disks `d1`, `d2`.
fn one_side_two_disks(s: usize, d1: &C, d2: &C) -> Vec<C> {
    let (a1, b1) = to_local(s, d1.x, d1.y);
    let (a2, b2) = to_local(s, d2.x, d2.y);
    // Local center (x, r) with (x-a)² + b² - R² = 2r(b+R) for both disks.
    let (c1, k1) = (b1 * b1 - d1.r * d1.r, 2.0 * (b1 + d1.r));
    let (c2, k2) = (b2 * b2 - d2.r * d2.r, 2.0 * (b2 + d2.r));
    let qa = k2 - k1;
    let qb = -2.0 * a1 * k2 + 2.0 * a2 * k1;
    let qc = k2 * (a1 * a1 + c1) - k1 * (a2 * a2 + c2);
    let mut out = Vec::new();
    for x in quadratic_roots(qa, qb, qc) {
        let r = ((x - a1).powi(2) + c1) / k1;
        if r > 0.0 && r.is_finite() {
            let (gx, gy) = from_local(s, x, r);
            out.push(C { x: gx, y: gy, r });
        }
    }
    out
}

fn better(a: &C, b: &C) -> bool {
    let tie = (a.r - b.r).abs() <= 1e-10 * a.r.max(b.r);
    if !tie {
        return a.r > b.r;
    }
    (a.x, a.y) < (b.x, b.y)
}

/// Centers and radii `(x, y, r)` of the first `n` greedy disks.
pub fn greedy_disks(n: usize) -> Result<Vec<(f64, f64, f64)>, GenError> {
    if !(1..=500).contains(&n) {
        return Err(out_of_range("n must be in 1..=500"));
    }
    let mut placed: Vec<C> = Vec::with_capacity(n);
    let mut pool: Vec<C> = side_only();
    while placed.len() < n {
        // Every pool entry fits the current packing.
        let best = pool
            .iter()
            .fold(None::<C>, |acc, c| match acc {
                Some(b) if !better(c, &b) => Some(b),
                _ => Some(*c),
            });
        let Some(new) = best else {
            return Err(out_of_range("no room for another disk"));
        };
        placed.push(new);
        pool.retain(|c| clear(c, &new));
        let mut fresh = two_sides_one_disk(&new);
        for s in 0..4 {
            fresh.extend(one_side_one_disk(s, &new));
            for d in &placed[..placed.len() - 1] {
                fresh.extend(one_side_two_disks(s, &new, d));
            }
        }
        pool.extend(fresh.into_iter().filter(|c| fits(c, &placed)));
    }
    Ok(placed.into_iter().map(|c| (c.x, c.y, c.r)).collect())
}

/// The greedy packing `S_n` in the unit square (FLOAT).
pub fn gen_greedy_square(n: usize) -> Result<PackingDoc, GenError> {
    let disks = greedy_disks(n)?;
    let bodies = disks
        .into_iter()
        .map(|(x, y, r)| Ok(Body::Disk(Disk::new(Point::float(x, y), Scalar::float(r)?)?)))
        .collect::<Result<Vec<_>, GenError>>()?;
    let reference = Body::Disk(Disk::new(Point::float(0.0, 0.0), Scalar::Float(1.0))?);
    Ok(PackingDoc::from_parts(
        ConvexPolygon::unit_square(Mode::Float),
        bodies,
        Some(reference),
        "greedy",
        params! {"n" => n},
    ))
}
