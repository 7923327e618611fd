//! Submodules of free modules, presentations and free resolutions.

pub mod free;
pub mod matrix;
pub mod module_gb;
pub mod presented;
pub mod resolution;

pub use free::FreeElement;
pub use matrix::PolyMatrix;
pub use module_gb::{module_buchberger, module_contains, module_normal_form};
pub use presented::{subquotient_presentation, PresentedModule};
pub use resolution::{free_resolution, kernel, minimize_generators, syzygy_basis, Resolution};
