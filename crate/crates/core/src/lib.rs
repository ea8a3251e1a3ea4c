//! Continued fractions of quadratic irrationals, their generating functions,
//! and zeta functions of hyperbolic toral automorphisms.

pub mod cf;
pub mod error;
pub mod genfun;
pub mod levy;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod ratfun;
pub mod real;
pub mod report;
pub mod surd;
pub mod torus;
pub mod zetaid;

pub use cf::CFExpansion;
pub use error::*;
pub use matrix::IntMatrix;
pub use parse::{parse_input, Input, InputError};
pub use poly::Polynomial;
pub use ratfun::{PowerSeries, RationalFunction, RfMatrix};
pub use real::Real;
pub use surd::{QuadNumber, QuadraticSurd};
pub use torus::ToralAutomorphism;
