//! Exact arithmetic in F₂[T] and in the binary fields F_{2^m}.

mod field;
mod poly;

pub use field::{make_field, FieldContext, FieldElement, MAX_DEGREE, MIN_DEGREE};
pub use poly::BitPolynomial;
