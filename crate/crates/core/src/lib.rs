//! Packings of homothetic convex bodies: exact geometry, generators for the
//! classical families, a verifier, and perimeter bound formulas.

pub mod bounds;
pub mod generators;
pub mod geom;
pub mod model;
pub mod scalar;
pub mod verify;

pub use scalar::{Mode, Scalar, ScalarError, DEFAULT_EPS};
