pub mod error;
pub mod gamma_form;
pub mod hermite;
pub mod hyp2f1;
pub mod laguerre;
pub mod numerics;
pub mod oracle;
pub mod relations;
pub(crate) mod serde_rational;
pub mod zeros;

pub use error::{MellinError, Result};
