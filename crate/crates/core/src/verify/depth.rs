use serde::Serialize;

use crate::geom::{edge_distance_unchecked, support_side, EdgeFrame, Support};
use crate::model::PackingDoc;
use crate::scalar::Scalar;

use super::VerifyError;

/// Depth of the projected middle halves `b_i` of close bodies along one
/// container edge.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DepthProfile {
    pub edge: usize,
    /// Indices of the bodies in `S_close` for this edge.
    pub close: Vec<usize>,
    /// `proj_i` in edge coordinates (distance from the edge's start).
    pub projections: Vec<(Scalar, Scalar)>,
    /// Sorted distinct interval endpoints.
    pub breakpoints: Vec<Scalar>,
    /// `depths[i]` is `d(x)` on `(breakpoints[i], breakpoints[i+1])`.
    pub depths: Vec<u32>,
    /// `measures[k-1] = |I_k| = |{x : d(x) ≥ k}|`.
    pub measures: Vec<Scalar>,
}

impl DepthProfile {
    /// `|I_k|`, zero beyond the maximal depth.
    pub fn measure(&self, k: usize) -> Option<&Scalar> {
        self.measures.get(k.checked_sub(1)?)
    }

    pub fn max_depth(&self) -> u32 {
        self.depths.iter().copied().max().unwrap_or(0)
    }
}

fn unify_min(a: Scalar, b: Scalar) -> Scalar {
    let (a, b) = Scalar::unify(&a, &b);
    a.min(b)
}

/// Builds `d(x)` on edge `edge` for the bodies whose closest container edge
/// is `edge` (ties go to the lowest index) and that satisfy
/// `esc(C_i) < rho2·|b_i|/lambda`.
pub fn depth_profile(doc: &PackingDoc, edge: usize, lambda: &Scalar, rho2: &Scalar) -> Result<DepthProfile, VerifyError> {
    let d = &doc.container;
    if edge >= d.len() {
        return Err(VerifyError::BadEdge(edge));
    }
    let reference = doc.reference_body.as_ref().ok_or(VerifyError::MissingReference)?;
    let dir = d.edge(edge).direction()?;
    if !matches!(support_side(reference, &dir), Support::Side(_)) {
        return Err(VerifyError::NoParallelSide(edge));
    }
    let frame = EdgeFrame::of_edge(d, edge)?;
    let edges: Vec<_> = d.edges().collect();

    let mut close = Vec::new();
    let mut projections = Vec::new();
    for (i, b) in doc.bodies.iter().enumerate() {
        let dists: Vec<Scalar> = edges.iter().map(|e| edge_distance_unchecked(b, e)).collect();
        let best = dists.iter().cloned().reduce(unify_min).expect("nonempty");
        let owner = dists
            .iter()
            .position(|x| {
                let (x, m) = Scalar::unify(x, &best);
                x == m
            })
            .expect("minimum attained");
        if owner != edge {
            continue;
        }
        let side = match support_side(b, &dir) {
            Support::Side(s) => s.middle_half(),
            Support::Point(_) => return Err(VerifyError::NoParallelSide(edge)),
        };
        let blen = side.length();
        let (r, l) = Scalar::unify(rho2, &blen);
        let (threshold, lam) = Scalar::unify(&(r * l), lambda);
        let threshold = threshold / lam;
        let (esc, threshold) = Scalar::unify(&best, &threshold);
        if esc >= threshold {
            continue;
        }
        let u = frame.to_frame(&side.a).x;
        let v = frame.to_frame(&side.b).x;
        let (lo, hi) = if u <= v { (u, v) } else { (v, u) };
        close.push(i);
        projections.push((lo, hi));
    }
    let (breakpoints, depths, measures) = sweep(&projections, frame.mode());
    Ok(DepthProfile {
        edge,
        close,
        projections,
        breakpoints,
        depths,
        measures,
    })
}

/// Piecewise-constant coverage depth of a family of closed intervals.
pub(crate) fn sweep(intervals: &[(Scalar, Scalar)], mode: crate::Mode) -> (Vec<Scalar>, Vec<u32>, Vec<Scalar>) {
    let mut events: Vec<(Scalar, i32)> = Vec::with_capacity(2 * intervals.len());
    for (a, b) in intervals {
        events.push((a.clone(), 1));
        events.push((b.clone(), -1));
    }
    events.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("comparable"));
    let mut breakpoints: Vec<Scalar> = Vec::new();
    let mut depths: Vec<u32> = Vec::new();
    let mut measures: Vec<Scalar> = Vec::new();
    let mut depth: i32 = 0;
    let mut i = 0;
    while i < events.len() {
        let x = events[i].0.clone();
        while i < events.len() && events[i].0 == x {
            depth += events[i].1;
            i += 1;
        }
        if let Some(prev) = breakpoints.last() {
            let len = &x - prev;
            let k = depths.last().copied().unwrap_or(0) as usize;
            if measures.len() < k {
                measures.resize(k, Scalar::zero(mode));
            }
            for m in measures.iter_mut().take(k) {
                *m = &*m + &len;
            }
        }
        breakpoints.push(x);
        if i < events.len() {
            depths.push(depth.max(0) as u32);
        }
    }
    (breakpoints, depths, measures)
}
