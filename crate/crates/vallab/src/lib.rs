//! Exact-arithmetic toolkit for SL(n) contravariant valuations on convex
//! polytopes.
//!
//! Everything geometric is computed over an exact ordered field: either the
//! rationals or the quadratic extension generated by sqrt(2). Polytopes are
//! kept in vertex representation with cached facet data (primitive normals,
//! supports, normalized areas, cone volumes), and every valuation formula in
//! the crate is scale-invariant in the facet normals, so no square root is
//! ever materialized.
//!
//! The crate is organized as:
//!
//! * [`scalar`] — exact field arithmetic and additive (Cauchy) functionals,
//! * [`geom`] — vectors, linear maps, hyperplanes and the polytope kernel,
//! * [`measure`] — discrete normal measures, volume and projection values,
//! * [`valuation`] — the function-valued valuations and their classified
//!   combinations,
//! * [`tensor`] — symmetric-tensor valuations and contractions,
//! * [`harness`] — seeded generators, property suites, negative controls and
//!   classification-data extraction,
//! * [`io`] — JSON documents for polytopes, measures, zeta specs, tensors.

pub mod error;
pub mod geom;
pub mod harness;
// pub mod io;
pub mod measure;
pub mod scalar;
pub mod tensor;
pub mod valuation;

pub use error::Error;
pub use geom::{FacetData, Hyperplane, LinearMap, Polytope, Vector};
pub use scalar::{CauchyFunctional, QuadScalar, Rational, Scalar};
