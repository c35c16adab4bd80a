//! Pairwise interior-disjointness with a sweep-and-prune prefilter.

use rayon::prelude::*;

use crate::geom::{orient, roundoff_floor, Body, ConvexPolygon, Disk, Point};
use crate::model::PackingDoc;
use crate::scalar::{Mode, Scalar};

use super::Witness;

fn seg_dist2(p: &Point, a: &Point, b: &Point) -> Scalar {
    let v = b - a;
    let w = p - a;
    let vv = v.norm2();
    let t = w.dot(&v) / &vv;
    let t = if t.is_negative() {
        Scalar::zero(t.mode())
    } else if t > Scalar::one(t.mode()) {
        Scalar::one(t.mode())
    } else {
        t
    };
    let c = a + &v.scale(&t);
    (p - &c).norm2()
}

/// `s - √d2` when the root is taken exactly, FLOAT otherwise.
fn minus_root(s: &Scalar, d2: &Scalar) -> Scalar {
    let (s, d) = Scalar::unify(s, &d2.sqrt());
    s - d
}

fn exceeds(pen: &Scalar, tol: f64) -> bool {
    match pen {
        Scalar::Exact(_) => pen.is_positive(),
        Scalar::Float(v) => *v > tol,
    }
}

fn disk_disk(a: &Disk, b: &Disk, tol: f64) -> Option<Scalar> {
    let s = a.radius() + b.radius();
    let d2 = (a.center() - b.center()).norm2();
    if a.mode() == Mode::Exact && d2 >= s.square() {
        return None;
    }
    let pen = minus_root(&s, &d2);
    exceeds(&pen, tol).then_some(pen)
}

fn disk_polygon(d: &Disk, p: &ConvexPolygon, tol: f64) -> Option<Scalar> {
    let c = d.center();
    let r = d.radius();
    if p.contains_point(c) {
        let depth = p
            .edges()
            .map(|e| crate::geom::divide_by_length(&orient(&e.a, &e.b, c), &e))
            .reduce(|a, b| {
                let (a, b) = Scalar::unify(&a, &b);
                a.min(b)
            })
            .expect("nonempty");
        let (r, depth) = Scalar::unify(r, &depth);
        return Some(r + depth);
    }
    let d2 = p
        .edges()
        .map(|e| seg_dist2(c, &e.a, &e.b))
        .reduce(|a, b| a.min(b))
        .expect("nonempty");
    if d.mode() == Mode::Exact && d2 >= r.square() {
        return None;
    }
    let pen = minus_root(r, &d2);
    exceeds(&pen, tol).then_some(pen)
}

fn extent(p: &ConvexPolygon, n: &Point) -> (Scalar, Scalar) {
    let mut it = p.vertices().iter().map(|v| n.dot(v));
    let first = it.next().expect("nonempty");
    it.fold((first.clone(), first), |(lo, hi), x| (lo.min(x.clone()), hi.max(x)))
}

fn polygon_polygon(a: &ConvexPolygon, b: &ConvexPolygon, tol: f64) -> Option<Scalar> {
    if a.is_axis_aligned() && b.is_axis_aligned() {
        let (alo, ahi) = Body::Polygon(a.clone()).bbox();
        let (blo, bhi) = Body::Polygon(b.clone()).bbox();
        let ox = ahi.x.clone().min(bhi.x.clone()) - alo.x.clone().max(blo.x.clone());
        let oy = ahi.y.clone().min(bhi.y.clone()) - alo.y.clone().max(blo.y.clone());
        let pen = ox.min(oy);
        return exceeds(&pen, tol).then_some(pen);
    }
    let mut pen: Option<Scalar> = None;
    for e in a.edges().chain(b.edges()) {
        let n = e.vector().perp();
        let (alo, ahi) = extent(a, &n);
        let (blo, bhi) = extent(b, &n);
        let overlap = ahi.min(bhi) - alo.max(blo);
        if overlap.is_exact() && !overlap.is_positive() {
            return None;
        }
        let (o, len) = Scalar::unify(&overlap, &n.norm());
        let depth = o / len;
        if !exceeds(&depth, tol) {
            return None;
        }
        pen = Some(match pen {
            None => depth,
            Some(p) => {
                let (p, d) = Scalar::unify(&p, &depth);
                p.min(d)
            }
        });
    }
    pen
}

pub(crate) fn pair_penetration(a: &Body, b: &Body, tol: f64) -> Option<Scalar> {
    match (a, b) {
        (Body::Disk(x), Body::Disk(y)) => disk_disk(x, y, tol),
        (Body::Disk(x), Body::Polygon(p)) | (Body::Polygon(p), Body::Disk(x)) => disk_polygon(x, p, tol),
        (Body::Polygon(p), Body::Polygon(q)) => polygon_polygon(p, q, tol),
    }
}

/// Smallest `(i, j)` pair (by index order) whose interiors overlap.
pub(crate) fn first_overlap(doc: &PackingDoc, eps: f64) -> Option<Witness> {
    let n = doc.bodies.len();
    let boxes: Vec<[f64; 4]> = doc.bodies.iter().map(Body::bbox_f64).collect();
    let sizes: Vec<f64> = doc.bodies.iter().map(Body::size_f64).collect();
    let scale = boxes
        .iter()
        .flat_map(|b| b.iter())
        .fold(doc.container.coord_scale(), |m, v| m.max(v.abs()));
    let exact = doc.mode() == Mode::Exact;
    // Conversions of EXACT coordinates to f64 may round; widen the boxes so
    // the prefilter never drops a genuine overlap.
    let slack = if exact { 1e-12 * scale.max(1.0) } else { roundoff_floor(scale) + eps * scale.max(1.0) };
    let floor = roundoff_floor(scale);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| boxes[i][0].total_cmp(&boxes[j][0]).then(i.cmp(&j)));

    let found = (0..n)
        .into_par_iter()
        .filter_map(|p| {
            let i = order[p];
            let bi = &boxes[i];
            let mut best: Option<(usize, usize, Scalar)> = None;
            for &j in &order[p + 1..] {
                let bj = &boxes[j];
                if bj[0] > bi[2] + slack {
                    break;
                }
                if bj[1] > bi[3] + slack || bi[1] > bj[3] + slack {
                    continue;
                }
                let key = (i.min(j), i.max(j));
                if let Some((a, b, _)) = &best {
                    if (*a, *b) <= key {
                        continue;
                    }
                }
                let tol = if exact { 0.0 } else { eps * sizes[i].min(sizes[j]) + floor };
                if let Some(pen) = pair_penetration(&doc.bodies[i], &doc.bodies[j], tol) {
                    best = Some((key.0, key.1, pen));
                }
            }
            best
        })
        .min_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    found.map(|(i, j, pen)| Witness {
        bodies: vec![i, j],
        quantity: "penetration".into(),
        value: pen,
    })
}
