//! Exact coefficients, monomials, sparse polynomials and the expression parser.

pub mod field;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod ring;

pub use field::{Field, Fp, Rational};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_coefficient, parse_polynomial};
pub use polynomial::Polynomial;
pub use ring::Ring;
