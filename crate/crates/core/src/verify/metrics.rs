use rayon::prelude::*;
use serde::Serialize;

use crate::geom::{edge_distance_unchecked, perimeter, support_side, Body, ConvexPolygon, Support};
use crate::model::PackingDoc;
use crate::scalar::{Mode, Scalar, DEFAULT_EPS};

use super::{VerifyError, Witness};

fn min_promoting(a: Scalar, b: Scalar) -> Scalar {
    let (a, b) = Scalar::unify(&a, &b);
    a.min(b)
}

/// Escape distance of `b` without the containment check.
pub(crate) fn escape_unchecked(b: &Body, d: &ConvexPolygon) -> Scalar {
    d.edges()
        .map(|e| edge_distance_unchecked(b, &e))
        .reduce(min_promoting)
        .expect("nonempty")
}

/// Distance from `b` to the boundary of `d`; zero iff `b` touches it.
pub fn escape_distance(b: &Body, d: &ConvexPolygon) -> Result<Scalar, VerifyError> {
    if d.protrusion(b, DEFAULT_EPS).is_some() {
        return Err(VerifyError::NotInside(0));
    }
    Ok(escape_unchecked(b, d))
}

/// Does every side direction of `d` also give a side of `c`?
pub fn is_parallel(d: &ConvexPolygon, c: &Body) -> bool {
    d.edges().all(|e| match e.direction() {
        Ok(dir) => matches!(support_side(c, &dir), Support::Side(_)),
        Err(_) => false,
    })
}

pub(crate) fn first_protrusion(doc: &PackingDoc, eps: f64) -> Option<Witness> {
    doc.bodies
        .par_iter()
        .enumerate()
        .find_first(|(_, b)| doc.container.protrusion(b, eps).is_some())
        .map(|(i, b)| Witness {
            bodies: vec![i],
            quantity: "protrusion".into(),
            value: doc.container.protrusion(b, eps).expect("found above"),
        })
}

fn touches(esc: &Scalar, tol: f64) -> bool {
    match esc {
        Scalar::Exact(_) => esc.is_zero(),
        Scalar::Float(v) => *v <= tol,
    }
}

pub(crate) fn first_non_contact(doc: &PackingDoc, eps: f64) -> Option<Witness> {
    let tol = doc.container.float_tolerance(eps);
    doc.bodies
        .par_iter()
        .enumerate()
        .map(|(i, b)| (i, escape_unchecked(b, &doc.container)))
        .find_first(|(_, esc)| !touches(esc, tol))
        .map(|(i, esc)| Witness {
            bodies: vec![i],
            quantity: "escape".into(),
            value: esc,
        })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BodyMetrics {
    pub perimeter: Scalar,
    pub escape: Scalar,
}

/// `per(S)` and `esc(S)` with their per-body terms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Metrics {
    pub n: usize,
    pub total_perimeter: Scalar,
    /// `total_perimeter / π` as an exact rational, for all-disk EXACT docs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perimeter_pi_coefficient: Option<Scalar>,
    pub total_escape: Scalar,
    pub per_body: Vec<BodyMetrics>,
}

pub fn packing_metrics(doc: &PackingDoc) -> Result<Metrics, VerifyError> {
    if let Some(w) = first_protrusion(doc, DEFAULT_EPS) {
        return Err(VerifyError::NotInside(w.bodies[0]));
    }
    let per_body: Vec<BodyMetrics> = doc
        .bodies
        .par_iter()
        .map(|b| BodyMetrics {
            perimeter: perimeter(b),
            escape: escape_unchecked(b, &doc.container),
        })
        .collect();
    let all_disks = doc.bodies.iter().all(|b| b.as_disk().is_some());
    let perimeter_pi_coefficient = (all_disks && doc.mode() == Mode::Exact).then(|| {
        let coefs: Vec<Scalar> = doc
            .bodies
            .iter()
            .map(|b| b.perimeter_pi_coefficient().expect("disk"))
            .collect();
        Scalar::sum(Mode::Exact, &coefs).expect("exact disks")
    });
    let total_perimeter = match &perimeter_pi_coefficient {
        Some(c) if !doc.bodies.is_empty() => Scalar::Float(std::f64::consts::PI * c.to_f64()),
        _ if doc.bodies.is_empty() => Scalar::zero(doc.mode()),
        _ => Scalar::sum_promoting(per_body.iter().map(|m| &m.perimeter).collect::<Vec<_>>()),
    };
    let total_escape = if per_body.is_empty() {
        Scalar::zero(doc.mode())
    } else {
        Scalar::sum_promoting(per_body.iter().map(|m| &m.escape).collect::<Vec<_>>())
    };
    Ok(Metrics {
        n: doc.bodies.len(),
        total_perimeter,
        perimeter_pi_coefficient,
        total_escape,
        per_body,
    })
}
