//! Exact computations for gluing maps between torus boundary components.
//!
//! The crate works entirely in exact arbitrary-precision arithmetic:
//!
//! - [`slope_algebra`]: slopes in Q ∪ {∞}, SL₂(Q)/SL₂(Z) matrices, rational eigenslopes.
//! - [`farey`]: Farey-graph distance and geodesics.
//! - [`normal_torus`]: normal curves on the one-vertex triangulation of the torus.
//! - [`class_maps`]: slope maps of compatibility classes built from boundary data.
//! - [`certify`]: distance certificates for gluing maps and collections of tori.
//! - [`anosov`]: the least power of an Anosov map after which every composition
//!   with the class maps fixes no slope.
//! - [`cli`]: the `torus-gluing` command line front end.

pub mod anosov;
pub mod certify;
pub mod class_maps;
pub mod cli;
pub mod error;
pub mod farey;
pub mod json;
pub mod normal_torus;
pub mod slope_algebra;

pub use error::{Error, Result};
pub use slope_algebra::{PrimitiveClass, Slope, UnimodularQ, UnimodularZ};
