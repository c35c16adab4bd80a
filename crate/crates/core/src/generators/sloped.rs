//! Axis-aligned squares hanging from the sloped side `y = s·x` of the
//! triangle `(0,0), (1,0), (1,s)`.
//!
//! Every square touches the slope with its top-left corner, so its touch
//! abscissa is the left end of its projection interval and the allocated
//! intervals `I_k(Q)` are successive right halves. Over each interval of
//! class `k` the children tile the interval, sit above `Q` and touch the
//! slope.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::geom::{roundoff_floor, Body, ConvexPolygon, Point};
use crate::model::PackingDoc;
use crate::params;
use crate::scalar::{Mode, Scalar};

use super::intervals::{Interval, IntervalRecord};
use super::{out_of_range, GenError};

const MAX_SQUARES: usize = 5_000_000;

#[derive(Clone, Copy, Debug)]
struct Sq {
    x0: f64,
    side: f64,
    top: f64,
}

impl Sq {
    fn x1(&self) -> f64 {
        self.x0 + self.side
    }

    fn bottom(&self) -> f64 {
        self.top - self.side
    }
}

/// A construction run with per-class statistics.
#[derive(Clone, Debug, Serialize)]
pub struct SlopedRun {
    #[serde(skip)]
    pub doc: PackingDoc,
    /// Class of each body, parallel to `doc.bodies`.
    pub classes: Vec<u32>,
    pub class_counts: Vec<usize>,
    pub class_perimeters: Vec<f64>,
    /// Candidates dropped after three failed shrink attempts.
    pub skipped: usize,
}

struct Index {
    // Per class: squares keyed by (left abscissa bits, index); abscissas are
    // nonnegative so bit order is numeric order.
    maps: Vec<BTreeMap<(u64, usize), ()>>,
    widest: Vec<f64>,
}

impl Index {
    fn new(classes: usize) -> Index {
        Index {
            maps: vec![BTreeMap::new(); classes],
            widest: vec![0.0; classes],
        }
    }

    fn insert(&mut self, class: usize, i: usize, q: &Sq) {
        self.maps[class].insert((q.x0.to_bits(), i), ());
        self.widest[class] = self.widest[class].max(q.side);
    }

    fn conflicts(&self, q: &Sq, placed: &[Sq]) -> bool {
        let tol = roundoff_floor(1.0);
        for (map, w) in self.maps.iter().zip(&self.widest) {
            let from = (q.x0 - w).max(0.0).to_bits();
            let to = q.x1().to_bits();
            for (&(_, j), _) in map.range((from, 0)..=(to, usize::MAX)) {
                let p = &placed[j];
                let ox = q.x1().min(p.x1()) - q.x0.max(p.x0);
                let oy = q.top.min(p.top) - q.bottom().max(p.bottom());
                if ox > tol && oy > tol {
                    return true;
                }
            }
        }
        false
    }
}

/// Builds the hierarchy for slope `s ∈ (0, 1]` down to class `depth ≤ 12`.
pub fn sloped_squares(s: f64, depth: u32) -> Result<SlopedRun, GenError> {
    if !(s > 0.0 && s <= 1.0) {
        return Err(out_of_range("slope must be in (0, 1]"));
    }
    if depth > 12 {
        return Err(out_of_range("depth must be at most 12"));
    }
    let depth = depth as usize;
    // Largest square under the slope standing on the bottom edge and
    // touching the right edge: [x0, 1] × [0, s·x0] with s·x0 = 1 − x0.
    let x0 = 1.0 / (1.0 + s);
    let root = Sq { x0, side: 1.0 - x0, top: s * x0 };
    let mut placed = vec![root];
    let mut classes = vec![0u32];
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); depth + 1];
    by_class[0].push(0);
    let mut index = Index::new(depth + 1);
    index.insert(0, 0, &root);
    let mut skipped = 0usize;

    for c in 0..=depth {
        let members = std::mem::take(&mut by_class[c]);
        for &qi in &members {
            let q = placed[qi];
            let mut rec = IntervalRecord::new(
                Scalar::Float(q.x0),
                Interval::new(Scalar::Float(q.x0), Scalar::Float(q.x1())),
            );
            for k in 1..=depth - c {
                let pieces: Vec<(f64, f64)> = rec.advance().iter().map(|iv| (iv.lo.to_f64(), iv.hi.to_f64())).collect();
                for (lo, hi) in pieces {
                    let dist = lo - q.x0;
                    let target = s * dist;
                    if target.is_nan() || target <= 0.0 {
                        continue;
                    }
                    let m = ((hi - lo) / target - 1e-9).ceil().max(1.0) as usize;
                    let step = (hi - lo) / m as f64;
                    for t in 0..m {
                        let a = lo + step * t as f64;
                        let b = if t + 1 == m { hi } else { lo + step * (t + 1) as f64 };
                        let top = s * a;
                        let mut side = (b - a).min(top - q.top);
                        let mut accepted = false;
                        for _ in 0..4 {
                            if side <= 0.0 {
                                break;
                            }
                            let cand = Sq { x0: a, side, top };
                            if !index.conflicts(&cand, &placed) {
                                let i = placed.len();
                                placed.push(cand);
                                classes.push((c + k) as u32);
                                index.insert(c + k, i, &cand);
                                if c + k <= depth {
                                    by_class[c + k].push(i);
                                }
                                accepted = true;
                                break;
                            }
                            side /= 2.0;
                        }
                        if !accepted {
                            skipped += 1;
                        }
                        if placed.len() > MAX_SQUARES {
                            return Err(out_of_range("construction exceeds the square budget"));
                        }
                    }
                }
            }
        }
        by_class[c] = members;
    }

    let mut class_counts = vec![0usize; depth + 1];
    let mut class_perimeters = vec![0.0f64; depth + 1];
    let mut bodies = Vec::with_capacity(placed.len());
    for (q, &c) in placed.iter().zip(&classes) {
        class_counts[c as usize] += 1;
        class_perimeters[c as usize] += 4.0 * q.side;
        let f = |v: f64| Scalar::Float(v);
        bodies.push(Body::Polygon(ConvexPolygon::new(vec![
            Point::new(f(q.x0), f(q.bottom()))?,
            Point::new(f(q.x1()), f(q.bottom()))?,
            Point::new(f(q.x1()), f(q.top))?,
            Point::new(f(q.x0), f(q.top))?,
        ])?));
    }
    let container = ConvexPolygon::new(vec![Point::float(0.0, 0.0), Point::float(1.0, 0.0), Point::float(1.0, s)])?;
    let doc = PackingDoc::from_parts(
        container,
        bodies,
        Some(Body::Polygon(ConvexPolygon::unit_square(Mode::Float))),
        "sloped-squares",
        params! {
            "class_counts" => class_counts,
            "class_perimeters" => class_perimeters,
            "depth" => depth,
            "skipped" => skipped,
            "slope" => s,
        },
    );
    Ok(SlopedRun {
        doc,
        classes,
        class_counts,
        class_perimeters,
        skipped,
    })
}

pub fn gen_sloped_squares(s: f64, depth: u32) -> Result<PackingDoc, GenError> {
    Ok(sloped_squares(s, depth)?.doc)
}
