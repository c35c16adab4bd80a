//! The packing document and its serialized forms.

mod json;
mod svg;

use serde_json::{Map, Value};

use crate::geom::{homothety_between, Body, ConvexPolygon, GeomError};
use crate::scalar::{Mode, DEFAULT_EPS};

pub use json::{load, load_body_str, load_str, save, ModelError};
pub use svg::render_svg;

/// The unit square `[0,1]²`.
pub fn unit_square(mode: Mode) -> ConvexPolygon {
    ConvexPolygon::unit_square(mode)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Metadata {
    pub generator: String,
    pub params: Map<String, Value>,
    pub mode: Mode,
}

/// A container, the bodies packed in it and how they were produced.
#[derive(Clone, Debug, PartialEq)]
pub struct PackingDoc {
    pub container: ConvexPolygon,
    pub bodies: Vec<Body>,
    pub reference_body: Option<Body>,
    pub metadata: Metadata,
}

impl PackingDoc {
    /// Builds a document, checking that every value shares the container's
    /// mode and that bodies are homothets of the reference body.
    pub fn new(
        container: ConvexPolygon,
        bodies: Vec<Body>,
        reference_body: Option<Body>,
        generator: &str,
        params: Map<String, Value>,
    ) -> Result<PackingDoc, ModelError> {
        let doc = PackingDoc {
            metadata: Metadata {
                generator: generator.to_string(),
                params,
                mode: container.mode(),
            },
            container,
            bodies,
            reference_body,
        };
        doc.validate()?;
        Ok(doc)
    }

    /// Assembles a document whose invariants hold by construction.
    pub(crate) fn from_parts(
        container: ConvexPolygon,
        bodies: Vec<Body>,
        reference_body: Option<Body>,
        generator: &str,
        params: Map<String, Value>,
    ) -> PackingDoc {
        PackingDoc {
            metadata: Metadata {
                generator: generator.to_string(),
                params,
                mode: container.mode(),
            },
            container,
            bodies,
            reference_body,
        }
    }

    pub fn mode(&self) -> Mode {
        self.metadata.mode
    }

    pub fn len(&self) -> usize {
        self.bodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bodies.is_empty()
    }

    pub(crate) fn validate(&self) -> Result<(), ModelError> {
        let mode = self.container.mode();
        if self.metadata.mode != mode {
            return Err(ModelError::invalid(
                "metadata.mode",
                format!("declared {} but coordinates are {}", self.metadata.mode, mode),
            ));
        }
        let mixed = |path: String| ModelError::invalid(path, GeomError::Scalar(crate::ScalarError::MixedModes));
        if let Some(r) = &self.reference_body {
            if r.mode() != mode {
                return Err(mixed("reference_body".into()));
            }
        }
        for (i, b) in self.bodies.iter().enumerate() {
            if b.mode() != mode {
                return Err(mixed(format!("bodies[{i}]")));
            }
            if let Some(r) = &self.reference_body {
                if homothety_between(r, b, DEFAULT_EPS).is_none() {
                    return Err(ModelError::invalid(
                        format!("bodies[{i}]"),
                        "body is not a positive homothet of reference_body",
                    ));
                }
            }
        }
        Ok(())
    }

    /// Sets a metadata parameter, keeping keys sorted.
    pub fn set_param(&mut self, key: &str, value: impl Into<Value>) {
        self.metadata.params.insert(key.to_string(), value.into());
    }
}

/// Shorthand for building parameter maps in generators.
#[macro_export]
macro_rules! params {
    ($($k:expr => $v:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut m = ::serde_json::Map::new();
        $( m.insert($k.to_string(), ::serde_json::json!($v)); )*
        m
    }};
}
