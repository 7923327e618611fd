//! Buchberger's algorithm, normal forms and ideal operations.

pub mod buchberger;
pub mod dimension;
pub mod ideal;

pub use buchberger::{normal_form, reduced_basis, s_polynomial};
pub use dimension::dimension_from_leads;
pub use ideal::{buchberger, ideal_contains, ideal_membership, krull_dim, Ideal};
