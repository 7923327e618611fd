//! Cohen-Macaulay loci of finitely generated modules over polynomial rings.
//!
//! The crate computes the deficiency modules `K^i(M) = Ext^{n-i}(M, R)` of a
//! module `M` presented over `R = k[x_1, ..., x_n]`, their annihilators
//! `a_i(M)`, and from those the pseudo supports, pseudo dimensions, the
//! non-Cohen-Macaulay locus, Serre conditions and localized depth/dimension.
//! Everything rests on a self-contained Gröbner basis engine for ideals and
//! submodules of free modules.
//!
//! All algebra is generic over the coefficient [`Field`]; the aliases below fix
//! the common choices.

pub mod duality;
pub mod error;
pub mod groebner;
pub mod locus;
pub mod modres;
pub mod polyarith;
pub mod session;

pub use duality::{deficiency_modules, ext_module, DeficiencyData};
pub use error::{AlgebraError, Result};
pub use groebner::Ideal;
pub use locus::{LocusReport, PrimeIdeal};
pub use modres::{FreeElement, PolyMatrix, PresentedModule, Resolution};
pub use polyarith::{Field, Fp, Monomial, MonomialOrder, Polynomial, Rational, Ring};

/// Polynomials with rational coefficients.
pub type QPolynomial = Polynomial<Rational>;
/// The prime field with 32003 elements, a common choice for fast runs.
pub type Gf32003 = Fp<32003>;
/// Ideals of polynomial rings over the rationals.
pub type QIdeal = Ideal<Rational>;
/// Presented modules over the rationals.
pub type QModule = PresentedModule<Rational>;
/// Deficiency data over the rationals.
pub type QDeficiency = DeficiencyData<Rational>;
