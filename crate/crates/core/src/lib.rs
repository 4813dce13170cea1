//! Solving-degree and degree-of-regularity toolkit for polynomial systems over GF(p).

pub mod analyze;
pub mod bounds;
pub mod field;
pub mod macaulay;
pub mod poly;
pub mod random;

pub use field::{FieldElement, PrimeModulus};
pub use poly::{Monomial, PolySystem, Polynomial, Ring};
