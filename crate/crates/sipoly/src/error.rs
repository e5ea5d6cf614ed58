//! Error type shared by every module of the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the exact algorithms and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The even part `p0` of a polynomial vanishes identically, so the
    /// associated function `p1/p0` does not exist.
    #[error("degenerate even/odd split: the even part is identically zero")]
    DegenerateSplit,

    /// A Laurent expansion at infinity was requested for a function whose
    /// polynomial part has degree greater than one.
    #[error("unsupported growth at infinity: numerator degree {num} exceeds denominator degree {den} by more than one")]
    UnsupportedGrowth {
        /// Degree of the numerator.
        num: usize,
        /// Degree of the denominator.
        den: usize,
    },

    /// Not enough series coefficients to build the requested minors.
    #[error("need at least {needed} series coefficients, got {got}")]
    Length {
        /// Required number of coefficients.
        needed: usize,
        /// Available number of coefficients.
        got: usize,
    },

    /// A sign sequence that cannot be processed (for example a leading zero).
    #[error("invalid sign sequence: {0}")]
    InvalidSequence(String),

    /// A polynomial pair `(p, q)` with `deg q > deg p`.
    #[error("invalid polynomial pair: deg q = {deg_q} exceeds deg p = {deg_p}")]
    InvalidPair {
        /// Degree of `p`.
        deg_p: usize,
        /// Degree of `q`.
        deg_q: usize,
    },

    /// A Stieltjes continued fraction does not exist because a minor in a
    /// denominator vanishes.
    #[error("no Stieltjes continued fraction: {minor} vanishes")]
    NoContinuedFraction {
        /// Name of the vanishing minor, e.g. `D_2` or `Delta_3`.
        minor: String,
    },

    /// A matrix does not have the required band pattern or entries.
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// A structure specification cannot be realized by any polynomial.
    #[error("unrealizable structure: {0}")]
    Unrealizable(String),

    /// The numeric root finder did not converge.
    #[error("numeric oracle failure: {0}")]
    OracleFailure(String),

    /// A text token could not be parsed as an exact rational.
    #[error("cannot parse {token:?} as an exact rational")]
    Parse {
        /// The offending token.
        token: String,
    },
}
