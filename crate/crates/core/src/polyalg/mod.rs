//! Sparse multivariate polynomials, binary forms and the substitution
//! action of invertible 2x2 matrices.

mod form;
mod multipoly;
mod resultant;

pub use form::{BinaryForm, FourOneForm, Mobius};
pub use multipoly::{var_names, Monomial, MultiPoly, MAX_VARS};
pub use resultant::{bareiss_det, discriminant, discriminant_scale, resultant};
