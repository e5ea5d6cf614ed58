//! Dense exact-rational matrices and fraction-free determinants.
//!
//! Determinants are computed with Bareiss elimination over big integers after
//! each row has been cleared of denominators, so every intermediate quotient
//! is exact and the cost stays polynomial.

use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyalg::Polynomial;
use crate::rational::{format_rational, parse_rational, Q};

/// Dense matrix of exact rationals, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl ExactMatrix {
    /// All-zero `rows x cols` matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    /// Identity matrix of order `n`.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Q::one() } else { Q::zero() })
    }

    /// Builds a matrix entry by entry from 0-based indices.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidMatrix("rows of unequal length".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from integer rows.
    ///
    /// # Panics
    /// Panics if the rows have unequal lengths.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect())
                .collect(),
        )
        .expect("rectangular integer rows")
    }

    /// Parses `"a,b;c,d"`: rows separated by `;`, entries by `,`.
    pub fn parse(text: &str) -> Result<Self> {
        let rows = text
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// True for square matrices.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    /// Mutable entry at 0-based `(i, j)`.
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Row-major nested vectors.
    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Matrix product.
    ///
    /// # Panics
    /// Panics on a dimension mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Q::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc += a * rhs.get(k, j);
                }
            }
            acc
        })
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Submatrix with the given (0-based) row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Top-left `k x k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        Self::from_fn(k, k, |i, j| self.get(i, j).clone())
    }

    /// Determinant of a square matrix (`1` for the empty matrix).
    ///
    /// # Panics
    /// Panics if the matrix is not square.
    pub fn det(&self) -> Q {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let (mut m, scale) = self.integer_rows();
        let det = bareiss_det(&mut m, self.rows);
        Q::new(det, scale)
    }

    /// Minor with the given row and column index sets (0-based).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Q {
        self.select(rows, cols).det()
    }

    /// Leading principal minors of orders `1..=count`.
    ///
    /// Runs a single Bareiss pass without pivoting, where each pivot is the
    /// next leading minor; after a vanishing pivot the remaining minors are
    /// computed one at a time.
    pub fn leading_principal_minors(&self, count: usize) -> Vec<Q> {
        let count = count.min(self.rows).min(self.cols);
        let block = self.leading_block(count);
        let (mut m, _) = block.integer_rows();
        // Row multipliers: leading minor k of the integer matrix equals the
        // rational minor times the product of the first k multipliers.
        let mults = block.row_multipliers();
        let mut out = Vec::with_capacity(count);
        let mut prev = BigInt::one();
        let mut prefix = BigInt::one();
        let mut k = 0;
        while k < count {
            prefix *= &mults[k];
            let pivot = m[k][k].clone();
            if pivot.is_zero() {
                break;
            }
            out.push(Q::new(pivot.clone(), prefix.clone()));
            for i in k + 1..count {
                for j in k + 1..count {
                    let v = &m[i][j] * &pivot - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = pivot;
            k += 1;
        }
        while out.len() < count {
            let s = out.len() + 1;
            out.push(self.leading_block(s).det());
        }
        out
    }

    /// Multiplies each row by the lcm of its denominators.
    fn row_multipliers(&self) -> Vec<BigInt> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
            })
            .collect()
    }

    /// Integer rows plus the product of the row multipliers.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mults = self.row_multipliers();
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let l = &mults[i];
                scale *= l;
                self.row(i)
                    .iter()
                    .map(|x| x.numer() * (l / x.denom()))
                    .collect()
            })
            .collect();
        (rows, scale)
    }

    /// Characteristic polynomial `det(zI - M)` by the Faddeev–LeVerrier
    /// recursion (exact over the rationals).
    ///
    /// # Panics
    /// Panics if the matrix is not square.
    pub fn char_poly(&self) -> Polynomial {
        assert!(
            self.is_square(),
            "characteristic polynomial of a non-square matrix"
        );
        let n = self.rows;
        // c[k] is the coefficient of z^(n-k); c[0] = 1.
        let mut c = vec![Q::one()];
        let mut mk = ExactMatrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{k-1} I
            let mut next = self.mul(&mk);
            for i in 0..n {
                *next.get_mut(i, i) += &c[k - 1];
            }
            mk = next;
            let am = self.mul(&mk);
            let trace: Q = (0..n).map(|i| am.get(i, i).clone()).sum();
            c.push(-trace / Q::from_integer((k as i64).into()));
        }
        Polynomial::new(c)
    }

    /// Lossy conversion to an `f64` nalgebra matrix for numeric checks.
    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| {
            crate::rational::to_f64(self.get(i, j))
        })
    }

    /// True when every entry is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }
}

/// Fraction-free Gaussian elimination with row pivoting.
fn bareiss_det(m: &mut [Vec<BigInt>], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                None => return BigInt::zero(),
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
            }
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &pivot - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = pivot;
    }
    sign * m[n - 1][n - 1].clone()
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(format_rational)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl Serialize for ExactMatrix {
    /// Row-major nested arrays of rational strings.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect();
        rows.serialize(s)
    }
}

/// Lexicographic iterator over the `k`-element subsets of `0..n`.
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    /// All `k`-subsets of `0..n` in lexicographic order.
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        // Advance to the next subset.
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
