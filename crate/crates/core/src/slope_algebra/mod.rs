//! Exact arithmetic on slopes and on 2×2 determinant-one matrices over Q and Z.

mod eigen;
mod matrix;
mod slope;

pub use eigen::{fixes, rational_eigenslopes, rational_sqrt, Eigenslopes};
pub use matrix::{basis_completion, compose, denominator, invert, lft_apply, trace, UnimodularQ, UnimodularZ};
pub use slope::{intersection_number, slope_normalize, PrimitiveClass, Slope};
