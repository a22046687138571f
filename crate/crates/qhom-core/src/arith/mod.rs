//! Exact field arithmetic and dense linear algebra.

mod field;
mod matrix;
mod minpoly;
mod poly;
mod ratfunc;
mod scalar;
mod subspace;

pub use field::Field;
pub use matrix::Matrix;
pub use minpoly::{field_check_parameter, minimal_polynomial, ScalarPoly};
pub use poly::Poly;
pub use ratfunc::{QPoly, RatFunc};
pub use scalar::{fmt_poly, parse_poly, Backend, ParseScalarError, Scalar};
pub use subspace::{rank, unit, Echelon, Subspace};
