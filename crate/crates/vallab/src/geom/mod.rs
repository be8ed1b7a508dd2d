//! Exact polytope kernel: vectors, linear maps, hyperplanes, and
//! vertex-representation polytopes with cached facet data.

mod hull;
mod linalg;
mod matrix;
mod polytope;
mod vector;

pub use matrix::LinearMap;
pub use polytope::{CutPieces, FacetData, Hyperplane, OriginStatus, Polytope};
pub use vector::Vector;

pub(crate) use hull::{affine_rank_and_pivots, triangulate_full, volume_full};
pub(crate) use linalg::canonical_direction;
