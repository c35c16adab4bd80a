use serde::Serialize;

use crate::geom::{Body, ConvexPolygon, Disk, Point};
use crate::model::PackingDoc;
use crate::params;
use crate::scalar::{Mode, Scalar};

use super::intervals::{Interval, IntervalRecord};
use super::{out_of_range, GenError};

/// The allocation behind [`gen_explicit_disks`].
#[derive(Clone, Debug, Serialize)]
pub struct ExplicitAllocation {
    /// `classes[k-1]` is `X_k`, in the order its pieces were allocated.
    pub classes: Vec<Vec<Interval>>,
    /// One record per disk, parallel to `disks`.
    pub records: Vec<IntervalRecord>,
    /// `(class k, center abscissa, diameter)` per disk.
    pub disks: Vec<(usize, Scalar, Scalar)>,
}

impl ExplicitAllocation {
    /// `|S_k|`.
    pub fn class_count(&self, k: usize) -> usize {
        self.disks.iter().filter(|d| d.0 == k).count()
    }
}

/// Runs the allocation for classes `1..=k_max`.
pub fn explicit_allocation(k_max: u32) -> Result<ExplicitAllocation, GenError> {
    if k_max > 6 {
        return Err(out_of_range("K must be in 0..=6"));
    }
    let one = Scalar::one(Mode::Exact);
    let mut records = vec![IntervalRecord::new(
        Scalar::zero(Mode::Exact),
        Interval::new(Scalar::ratio(-1, 2), Scalar::ratio(1, 2)),
    )];
    let mut disks = vec![(0usize, Scalar::zero(Mode::Exact), one.clone())];
    let mut classes = Vec::new();
    for k in 1..=k_max as usize {
        let diameter = Scalar::ratio(1, 16i64.pow(k as u32));
        let existing = records.len();
        let mut pieces = Vec::new();
        for rec in records.iter_mut().take(existing) {
            pieces.extend(rec.advance().iter().cloned());
        }
        for piece in &pieces {
            let count = piece.len() / &diameter;
            assert!(count.is_integer(), "piece of X_{k} is not a multiple of the disk size");
            let count = count.to_f64() as i64;
            for i in 0..count {
                let lo = &piece.lo + &(&diameter * &Scalar::int(i, Mode::Exact));
                let hi = &lo + &diameter;
                let center = (&lo + &hi).half();
                records.push(IntervalRecord::new(center.clone(), Interval::new(lo, hi)));
                disks.push((k, center, diameter.clone()));
            }
        }
        classes.push(pieces);
    }
    Ok(ExplicitAllocation { classes, records, disks })
}

/// Disks of diameters `16^{-k}`, `k ≤ K`, tangent to the bottom of
/// `[-1/2, 1/2] × [0, 1]`, with class `k` tiling `X_k`.
pub fn gen_explicit_disks(k_max: u32) -> Result<PackingDoc, GenError> {
    let alloc = explicit_allocation(k_max)?;
    let mut bodies = Vec::with_capacity(alloc.disks.len());
    for (_, x, d) in &alloc.disks {
        let r = d.half();
        bodies.push(Body::Disk(Disk::new(Point { x: x.clone(), y: r.clone() }, r)?));
    }
    let container = ConvexPolygon::rect(Scalar::ratio(-1, 2), Scalar::ratio(0, 1), Scalar::ratio(1, 2), Scalar::ratio(1, 1))?;
    let reference = Body::Disk(Disk::new(Point::origin(Mode::Exact), Scalar::ratio(1, 1))?);
    Ok(PackingDoc::from_parts(
        container,
        bodies,
        Some(reference),
        "explicit-disks",
        params! {"K" => k_max},
    ))
}
