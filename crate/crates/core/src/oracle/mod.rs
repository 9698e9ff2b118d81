//! Independent numerical ground truth for the exact results.

pub mod classical;
pub mod gamma;
pub mod hydrogen;
pub mod mellin;
pub mod pcf;
pub mod quad;

pub use gamma::{complex_gamma, recip_gamma};
pub use hydrogen::{hydrogen_mellin, hydrogen_mellin_factor, hydrogen_quadrature, HydrogenState};
pub use mellin::{mellin_quadrature_hermite, mellin_quadrature_laguerre};
pub use pcf::{generating_function_check, parabolic_cylinder, GfResidual};

/// Evaluation point `s`; both components must be finite.
pub type ComplexPoint = num_complex::Complex64;
