use thiserror::Error;

pub type Result<T, E = MellinError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MellinError {
    /// A Pochhammer symbol in a series denominator vanishes.
    #[error("denominator parameter {param} hits a Pochhammer pole at term {term}")]
    DenominatorPole { param: String, term: usize },

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// Argument lies within `distance` of a pole of the Gamma function.
    #[error("argument {re}+{im}i is {distance:e} from a Gamma pole")]
    NearPole { re: f64, im: f64, distance: f64 },

    #[error("series did not converge after {terms} terms")]
    NonConvergence { terms: usize },

    #[error(
        "quadrature did not reach tolerance: estimated error {error:e} after {intervals} intervals"
    )]
    Quadrature { error: f64, intervals: usize },

    /// Gamma-normal forms with different exponential or Gamma headers cannot be compared.
    #[error("structural mismatch: {0}")]
    Structural(String),

    #[error("zero certification failed: {0}")]
    Certification(String),

    #[error("invalid hydrogenic state: {0}")]
    InvalidState(String),
}
