//! Constructions of the packing families.

mod apollonian;
mod explicit;
mod ford;
mod greedy;
mod grid;
mod intervals;
mod layers;
mod sloped;

pub use apollonian::{apollonian_radii, gen_apollonian_chain, next_radius};
pub use explicit::{explicit_allocation, gen_explicit_disks, ExplicitAllocation};
pub use ford::{ford_radius, gen_ford};
pub use greedy::{corner_radius, gen_greedy_square, greedy_disks};
pub use grid::gen_grid_translates;
pub use intervals::{allocate_step, Interval, IntervalRecord};
pub use layers::{gen_layers_general, gen_square_layers, layer_margin};
pub use sloped::{gen_sloped_squares, sloped_squares, SlopedRun};

use crate::geom::GeomError;
use crate::model::ModelError;
use crate::scalar::ScalarError;

#[derive(Debug, thiserror::Error)]
pub enum GenError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl From<ScalarError> for GenError {
    fn from(e: ScalarError) -> GenError {
        GenError::Geom(GeomError::Scalar(e))
    }
}

pub(crate) fn out_of_range(msg: impl Into<String>) -> GenError {
    GenError::OutOfRange(msg.into())
}
