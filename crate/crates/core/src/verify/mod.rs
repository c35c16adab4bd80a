//! Validation and measurement of packings.

mod depth;
mod dyadic;
mod metrics;
mod pairs;

use serde::Serialize;

use crate::geom::GeomError;
use crate::model::PackingDoc;
use crate::scalar::{Scalar, DEFAULT_EPS};

pub use depth::{depth_profile, DepthProfile};
pub use dyadic::{ceil_log2, dyadic_certificate, DyadicCertificate, DyadicRow};
pub use metrics::{escape_distance, is_parallel, packing_metrics, BodyMetrics, Metrics};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("body {0} is not inside the container")]
    NotInside(usize),
    #[error("document has no reference body")]
    MissingReference,
    #[error("reference body has no side parallel to container edge {0}")]
    NoParallelSide(usize),
    #[error("container has no edge {0}")]
    BadEdge(usize),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// The offending bodies and the violated quantity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub bodies: Vec<usize>,
    pub quantity: String,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub summary: bool,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &str, witness: Option<Witness>) -> Check {
    Check {
        name: name.to_string(),
        pass: witness.is_none(),
        witness,
    }
}

/// Runs containment, pairwise disjointness and optionally boundary contact
/// with the default FLOAT tolerance.
pub fn verify_packing(doc: &PackingDoc, require_boundary_contact: bool) -> VerificationReport {
    verify_packing_eps(doc, require_boundary_contact, DEFAULT_EPS)
}

pub fn verify_packing_eps(doc: &PackingDoc, require_boundary_contact: bool, eps: f64) -> VerificationReport {
    let mut checks = vec![
        check("containment", metrics::first_protrusion(doc, eps)),
        check("disjointness", pairs::first_overlap(doc, eps)),
    ];
    if require_boundary_contact {
        checks.push(check("boundary_contact", metrics::first_non_contact(doc, eps)));
    }
    let summary = checks.iter().all(|c| c.pass);
    VerificationReport { checks, summary }
}
