use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::geom::{Body, ConvexPolygon, Disk, Point};
use crate::model::PackingDoc;
use crate::params;
use crate::scalar::Scalar;

use super::{out_of_range, GenError};

/// Radius of the disk tangent to two tangent disks and their common tangent
/// line: `r^{-1/2} = r1^{-1/2} + r2^{-1/2}`.
pub fn next_radius(r1: f64, r2: f64) -> f64 {
    let s = 1.0 / r1.sqrt() + 1.0 / r2.sqrt();
    1.0 / (s * s)
}

/// A gap between two consecutive disks on the line.
#[derive(Clone, Copy, Debug)]
struct Gap {
    left: usize,
    right: usize,
    candidate: f64,
    x_left: f64,
}

impl PartialEq for Gap {
    fn eq(&self, o: &Gap) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}

impl Eq for Gap {}

impl PartialOrd for Gap {
    fn partial_cmp(&self, o: &Gap) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

// Max-heap: largest candidate first, then leftmost abscissa.
impl Ord for Gap {
    fn cmp(&self, o: &Gap) -> Ordering {
        self.candidate
            .total_cmp(&o.candidate)
            .then_with(|| o.x_left.total_cmp(&self.x_left))
    }
}

/// Tangency abscissas and radii of `F_n(r1, r2)`, in insertion order.
fn chain(r1: f64, r2: f64, n: usize) -> Vec<(f64, f64)> {
    let mut disks = vec![(0.0, r1), (2.0 * (r1 * r2).sqrt(), r2)];
    let mut heap = BinaryHeap::new();
    let gap = |disks: &[(f64, f64)], l: usize, r: usize| Gap {
        left: l,
        right: r,
        candidate: next_radius(disks[l].1, disks[r].1),
        x_left: disks[l].0,
    };
    heap.push(gap(&disks, 0, 1));
    while disks.len() < n {
        let g = heap.pop().expect("a chain always has a gap");
        let (xl, rl) = disks[g.left];
        let x = xl + 2.0 * (rl * g.candidate).sqrt();
        disks.push((x, g.candidate));
        let k = disks.len() - 1;
        heap.push(gap(&disks, g.left, k));
        heap.push(gap(&disks, k, g.right));
    }
    disks.truncate(n);
    disks
}

/// Radii of `F_n(r1, r2)` without building a document.
pub fn apollonian_radii(r1: f64, r2: f64, n: usize) -> Result<Vec<f64>, GenError> {
    check(r1, r2, n)?;
    Ok(chain(r1, r2, n).into_iter().map(|(_, r)| r).collect())
}

fn check(r1: f64, r2: f64, n: usize) -> Result<(), GenError> {
    if !(r1 > 0.0 && r2 > 0.0 && r1.is_finite() && r2.is_finite()) {
        return Err(out_of_range("radii must be positive"));
    }
    if n < 2 {
        return Err(out_of_range("n must be at least 2"));
    }
    Ok(())
}

/// The chain `F_n(r1, r2)` of disks tangent to the x-axis, grown by always
/// filling the gap that admits the largest disk. The container is the
/// bounding box of the disks.
pub fn gen_apollonian_chain(r1: f64, r2: f64, n: usize) -> Result<PackingDoc, GenError> {
    check(r1, r2, n)?;
    let disks = chain(r1, r2, n);
    let mut bodies = Vec::with_capacity(n);
    let (mut x0, mut x1, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, 0.0f64);
    for &(x, r) in &disks {
        x0 = x0.min(x - r);
        x1 = x1.max(x + r);
        y1 = y1.max(2.0 * r);
        bodies.push(Body::Disk(Disk::new(Point::float(x, r), Scalar::float(r)?)?));
    }
    let container = ConvexPolygon::rect(Scalar::float(x0)?, Scalar::Float(0.0), Scalar::float(x1)?, Scalar::float(y1)?)?;
    let reference = Body::Disk(Disk::new(Point::float(0.0, 0.0), Scalar::Float(1.0))?);
    Ok(PackingDoc::from_parts(
        container,
        bodies,
        Some(reference),
        "apollonian",
        params! {"n" => n, "r1" => r1, "r2" => r2},
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    #[test]
    fn first_radii() {
        let r = sorted(apollonian_radii(0.5, 0.5, 3).unwrap());
        assert!((r[2] - 0.125).abs() < 1e-15);
        let r = sorted(apollonian_radii(0.5, 0.5, 5).unwrap());
        assert!((r[3] - 1.0 / 18.0).abs() < 1e-15);
        assert!((r[4] - 1.0 / 18.0).abs() < 1e-15);
    }

    #[test]
    fn tangency_spacing() {
        let d = chain(0.5, 0.5, 3);
        assert!((d[1].0 - 1.0).abs() < 1e-15);
        assert!((d[2].0 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(gen_apollonian_chain(0.5, 0.5, 1).is_err());
        assert!(gen_apollonian_chain(-0.5, 0.5, 4).is_err());
    }
}
