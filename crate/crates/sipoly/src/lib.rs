//! Exact classification of real polynomials by their zero locations:
//! Hurwitz stable, quasi-stable, self-interlacing and generalized Hurwitz
//! polynomials, decided through Hurwitz and Hankel minors, Stieltjes
//! continued fractions and duality transforms. A floating-point root oracle
//! and instance generators provide independent ground truth for testing, and
//! [`simatrix`] builds and certifies matrices with self-interlacing spectra.
//!
//! All product code paths are exact: coefficients are arbitrary-precision
//! rationals and every criterion is a sign test on exact values.

pub mod classify;
pub mod error;
pub mod matrix;
pub mod minors;
pub mod oracle;
pub mod polyalg;
pub mod rational;
mod serde_util;
pub mod simatrix;
pub mod stieltjes;

pub use classify::{classify, ClassificationReport, Label, SiType};
pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use minors::{HankelMinors, HurwitzMinors, NablaMinors};
pub use polyalg::{EvenOddSplit, LaurentSeries, Polynomial, RationalFunction};
pub use rational::Q;
pub use stieltjes::{ExtendedCF, StieltjesCF, Tail};
