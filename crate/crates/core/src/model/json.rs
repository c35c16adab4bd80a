use std::fmt;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::geom::{Body, ConvexPolygon, Disk, GeomError, Point};
use crate::scalar::{Mode, Scalar, ScalarError};

use super::{Metadata, PackingDoc};

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {msg}")]
    Invalid { path: String, msg: String },
}

impl ModelError {
    pub(crate) fn invalid(path: impl Into<String>, msg: impl fmt::Display) -> ModelError {
        ModelError::Invalid {
            path: path.into(),
            msg: msg.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    version: u32,
    container: RawBody,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    reference_body: Option<RawBody>,
    bodies: Vec<RawBody>,
    metadata: RawMeta,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMeta {
    generator: String,
    params: Map<String, Value>,
    mode: Mode,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum RawBody {
    Disk { center: [Scalar; 2], radius: Scalar },
    Polygon { vertices: Vec<[Scalar; 2]> },
}

fn point(p: &[Scalar; 2], path: &str) -> Result<Point, ModelError> {
    Point::new(p[0].clone(), p[1].clone()).map_err(|e| ModelError::invalid(path, e))
}

fn raw_to_polygon(raw: &RawBody, path: &str) -> Result<ConvexPolygon, ModelError> {
    match raw {
        RawBody::Polygon { vertices } => {
            let pts = vertices
                .iter()
                .enumerate()
                .map(|(i, v)| point(v, &format!("{path}.vertices[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            check_uniform(pts.iter().flat_map(|p| [&p.x, &p.y]), &format!("{path}.vertices"))?;
            ConvexPolygon::new(pts).map_err(|e| ModelError::invalid(format!("{path}.vertices"), e))
        }
        RawBody::Disk { .. } => Err(ModelError::invalid(path, "expected a polygon")),
    }
}

fn raw_to_body(raw: &RawBody, path: &str) -> Result<Body, ModelError> {
    match raw {
        RawBody::Disk { center, radius } => {
            let c = point(center, &format!("{path}.center"))?;
            c.x.same_mode(radius)
                .map_err(|e| ModelError::invalid(format!("{path}.radius"), e))?;
            Disk::new(c, radius.clone())
                .map(Body::Disk)
                .map_err(|e| ModelError::invalid(format!("{path}.radius"), e))
        }
        RawBody::Polygon { .. } => raw_to_polygon(raw, path).map(Body::Polygon),
    }
}

fn check_uniform<'a>(mut it: impl Iterator<Item = &'a Scalar>, path: &str) -> Result<(), ModelError> {
    if let Some(first) = it.next() {
        let m = first.mode();
        if it.any(|s| s.mode() != m) {
            return Err(ModelError::invalid(path, ScalarError::MixedModes));
        }
    }
    Ok(())
}

fn pair(p: &Point) -> [Scalar; 2] {
    [p.x.clone(), p.y.clone()]
}

fn body_to_raw(b: &Body) -> RawBody {
    match b {
        Body::Disk(d) => RawBody::Disk {
            center: pair(d.center()),
            radius: d.radius().clone(),
        },
        Body::Polygon(p) => RawBody::Polygon {
            vertices: p.vertices().iter().map(pair).collect(),
        },
    }
}

fn from_raw(raw: RawDoc) -> Result<PackingDoc, ModelError> {
    if raw.version != 1 {
        return Err(ModelError::invalid("version", format!("unsupported version {}", raw.version)));
    }
    let container = raw_to_polygon(&raw.container, "container")?;
    let mode = container.mode();
    let reference_body = raw
        .reference_body
        .as_ref()
        .map(|r| raw_to_body(r, "reference_body"))
        .transpose()?;
    let bodies = raw
        .bodies
        .iter()
        .enumerate()
        .map(|(i, b)| raw_to_body(b, &format!("bodies[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let doc = PackingDoc {
        container,
        bodies,
        reference_body,
        metadata: Metadata {
            generator: raw.metadata.generator,
            params: raw.metadata.params,
            mode: raw.metadata.mode,
        },
    };
    // Report mode clashes between components before the declared mode.
    if let Some(r) = &doc.reference_body {
        if r.mode() != mode {
            return Err(ModelError::invalid("reference_body", ScalarError::MixedModes));
        }
    }
    if let Some(i) = doc.bodies.iter().position(|b| b.mode() != mode) {
        return Err(ModelError::invalid(format!("bodies[{i}]"), ScalarError::MixedModes));
    }
    doc.validate()?;
    Ok(doc)
}

pub fn load_str(text: &str) -> Result<PackingDoc, ModelError> {
    from_raw(serde_json::from_str(text)?)
}

/// Parses a single body object such as `{"type": "disk", ...}`.
pub fn load_body_str(text: &str) -> Result<Body, ModelError> {
    let raw: RawBody = serde_json::from_str(text)?;
    let body = raw_to_body(&raw, "body")?;
    let coords: Vec<&Scalar> = match &body {
        Body::Disk(d) => vec![&d.center().x, &d.center().y, d.radius()],
        Body::Polygon(p) => p.vertices().iter().flat_map(|v| [&v.x, &v.y]).collect(),
    };
    check_uniform(coords.into_iter(), "body")?;
    Ok(body)
}

/// Reads a document from a file path, or from stdin when the path is `-`.
pub fn load(path: &Path) -> Result<PackingDoc, ModelError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    load_str(&text)
}

/// Canonical pretty-printed JSON with a fixed key order.
pub fn save(doc: &PackingDoc) -> String {
    let raw = RawDoc {
        version: 1,
        container: body_to_raw(&Body::Polygon(doc.container.clone())),
        reference_body: doc.reference_body.as_ref().map(body_to_raw),
        bodies: doc.bodies.iter().map(body_to_raw).collect(),
        metadata: RawMeta {
            generator: doc.metadata.generator.clone(),
            params: doc.metadata.params.clone(),
            mode: doc.metadata.mode,
        },
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("serializable");
    s.push('\n');
    s
}

impl From<GeomError> for ModelError {
    fn from(e: GeomError) -> ModelError {
        ModelError::invalid("document", e)
    }
}
