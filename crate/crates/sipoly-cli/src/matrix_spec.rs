//! `matrix build` specs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sipoly::rational::parse_rational;
use sipoly::simatrix::{
    anti_bidiagonal, flip, random_anti_bidiagonal_data, random_tn_matrix, JacobiData,
};
use sipoly::{ExactMatrix, Q};

use crate::error::{CliError, CliResult};

/// Largest dimension accepted by the generators.
const MAX_DIM: usize = 64;

/// A built matrix: the main result and, for flipped constructions, the
/// source matrix.
pub struct Built {
    pub kind: &'static str,
    pub matrix: ExactMatrix,
    pub source: Option<ExactMatrix>,
}

fn list(text: &str) -> CliResult<Vec<Q>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(text
        .split(',')
        .map(parse_rational)
        .collect::<sipoly::Result<Vec<_>>>()?)
}

fn dimension(text: &str) -> CliResult<usize> {
    let n: usize = text
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("cannot parse {text:?} as a dimension")))?;
    if n == 0 || n > MAX_DIM {
        return Err(CliError::Domain(format!(
            "dimension must lie in 1..={MAX_DIM}, got {n}"
        )));
    }
    Ok(n)
}

/// Splits `a;b;c` into exactly three rational lists.
fn three_lists(body: &str) -> CliResult<[Vec<Q>; 3]> {
    let parts: Vec<&str> = body.split(';').collect();
    if parts.len() != 3 {
        return Err(CliError::Input(format!(
            "expected three ';'-separated lists, got {}",
            parts.len()
        )));
    }
    Ok([list(parts[0])?, list(parts[1])?, list(parts[2])?])
}

fn jacobi(body: &str) -> CliResult<JacobiData> {
    let [a, b, c] = three_lists(body)?;
    Ok(JacobiData { a, b, c })
}

/// Builds the matrix described by `spec` (see `matrix build --help`).
pub fn build(spec: &str, seed: u64) -> CliResult<Built> {
    let (kind, body) = spec
        .split_once(':')
        .ok_or_else(|| CliError::Input(format!("matrix spec {spec:?} lacks a 'kind:' prefix")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let built = match kind {
        "flip" => Built {
            kind: "flip",
            matrix: flip(dimension(body)?),
            source: None,
        },
        "tn" => {
            let n = dimension(body)?;
            let a = random_tn_matrix(n, &mut rng);
            Built {
                kind: "flipped-tn",
                matrix: flip(n).mul(&a),
                source: Some(a),
            }
        }
        "anti-bidiagonal" => {
            let [a1, b, c] = three_lists(body)?;
            if a1.len() != 1 {
                return Err(CliError::Input(format!(
                    "anti-bidiagonal needs exactly one diagonal entry, got {}",
                    a1.len()
                )));
            }
            Built {
                kind: "anti-bidiagonal",
                matrix: anti_bidiagonal(&a1[0], &b, &c)?,
                source: None,
            }
        }
        "random-anti-bidiagonal" => {
            let (a1, b, c) = random_anti_bidiagonal_data(dimension(body)?, &mut rng);
            Built {
                kind: "anti-bidiagonal",
                matrix: anti_bidiagonal(&a1, &b, &c)?,
                source: None,
            }
        }
        "tridiagonal" => Built {
            kind: "tridiagonal",
            matrix: jacobi(body)?.tridiagonal()?,
            source: None,
        },
        "anti-tridiagonal" => {
            let data = jacobi(body)?;
            Built {
                kind: "anti-tridiagonal",
                matrix: data.anti_tridiagonal()?,
                source: Some(data.tridiagonal()?),
            }
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown matrix kind {other:?}; expected flip, tn, anti-bidiagonal, \
                 random-anti-bidiagonal, tridiagonal or anti-tridiagonal"
            )))
        }
    };
    Ok(built)
}
