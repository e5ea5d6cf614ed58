//! Command-line arguments.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

/// Exact classification of real polynomials by zero location.
///
/// Coefficients are comma-separated exact rationals, leading coefficient
/// first, e.g. `1,4,1,-6` or `1/2,0,-3`. Decimals are rejected.
#[derive(Debug, Parser)]
#[command(name = "sipoly", version, about)]
pub struct Cli {
    /// Print a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Largest minor order examined by total-nonnegativity and signature
    /// scans (default: the full dimension).
    #[arg(long, global = true, value_name = "N")]
    pub max_order: Option<usize>,

    /// Seed for the random matrix generators.
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a polynomial: label, order k, degeneracy index m, type and
    /// the supporting determinants.
    Classify {
        /// Coefficients, leading first.
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Hurwitz determinants, infinite-matrix minors, Hankel minors of the
    /// associated function and a total-nonnegativity scan of the Hurwitz
    /// matrix.
    Minors {
        /// Coefficients, leading first.
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Stieltjes continued fraction of the associated function.
    Cf {
        /// Coefficients, leading first.
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// The dual polynomial (self-interlacing type I <-> Hurwitz stable).
    Dual {
        /// Coefficients, leading first.
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Build or check matrices with self-interlacing spectra.
    Matrix {
        #[command(subcommand)]
        action: MatrixAction,
    },
    /// Zero counts of the auxiliary polynomials of a Hurwitz stable
    /// polynomial.
    Strange {
        /// Coefficients, leading first.
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Classify samples along a parameter path and flag order changes.
    Sweep {
        /// File with one `alpha;c0,c1,...,cn` line per sample.
        file: PathBuf,
    },
}

/// `matrix` actions.
#[derive(Debug, Subcommand)]
pub enum MatrixAction {
    /// Build a matrix from a spec:
    /// `flip:N`, `tn:N` (random, seeded), `anti-bidiagonal:A1;B2,..,Bn;C2,..,Cn`,
    /// `random-anti-bidiagonal:N` (seeded), `tridiagonal:A;B;C` or
    /// `anti-tridiagonal:A;B;C` (diagonal, super- and subdiagonal).
    Build {
        /// Matrix spec.
        #[arg(allow_hyphen_values = true)]
        spec: String,
    },
    /// Certify a matrix given as `a,b;c,d` (rows separated by `;`).
    Check {
        /// Matrix entries.
        #[arg(allow_hyphen_values = true)]
        spec: String,
    },
}
