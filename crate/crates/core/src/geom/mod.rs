//! Geometric primitives over [`Scalar`](crate::scalar::Scalar) coordinates.

mod body;
mod frame;
pub(crate) mod lp;
mod point;

pub use body::{
    apply_homothety, area, body_edge_distance, homothety_between, perimeter, support_side, Body,
    ConvexPolygon, Disk, Support,
};
pub(crate) use body::{divide_by_length, edge_distance_unchecked, roundoff_floor};
pub use frame::EdgeFrame;
pub use lp::{max_inscribed_square, max_square_on_edge};
pub use point::{orient, Direction, Point, Segment};

use crate::scalar::ScalarError;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum GeomError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon is not strictly convex and counter-clockwise at vertex {0}")]
    NotConvex(usize),
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("homothety factor must be positive")]
    NonPositiveFactor,
    #[error("body is not inside the container")]
    NotInside,
    #[error("edge index {0} out of range")]
    BadEdge(usize),
    #[error("body has no side parallel to the requested direction")]
    NoParallelSide,
    #[error("{0}")]
    Infeasible(&'static str),
}
