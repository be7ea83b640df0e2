//! Dense exact linear algebra: a small rational matrix type and the
//! first-dependency search used for minimal polynomials and subalgebra
//! bases.
//!
//! The dependency search clears denominators and eliminates with integer
//! cross-multiplication (fraction-free, Bareiss style) so intermediate
//! entries stay integral; rows are divided by their content after each
//! elimination step. Pivots are chosen as the first nonzero entry in
//! column order, which makes the whole computation deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from rows, rejecting ragged input.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
        }
        let row_count = rows.len();
        Ok(RationalMatrix {
            rows: row_count,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.cols + col] = value;
    }

    /// Rank by plain fractional Gaussian elimination. Kept independent of
    /// [`first_dependency`] so the two can cross-check each other.
    pub fn rank(&self) -> usize {
        let mut work: Vec<Vec<Rational>> = (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot_row) = (rank..work.len()).find(|&r| !work[r][col].is_zero()) else {
                continue;
            };
            work.swap(rank, pivot_row);
            let pivot = work[rank][col].clone();
            for r in 0..work.len() {
                if r != rank && !work[r][col].is_zero() {
                    let factor = &work[r][col] / &pivot;
                    for c in col..self.cols {
                        let delta = &factor * &work[rank][c];
                        work[r][c] = &work[r][c] - &delta;
                    }
                }
            }
            rank += 1;
            if rank == work.len() {
                break;
            }
        }
        rank
    }
}

/// One reduced row of the elimination state: an integer vector together
/// with the integer combination of the original scaled vectors that
/// produced it.
struct EchelonRow {
    row: Vec<BigInt>,
    pivot: usize,
    combination: Vec<BigInt>,
}

/// Finds the first linear dependency among `vectors`.
///
/// Returns coefficients `c_0, ..., c_k` with `sum c_i * vectors[i] = 0` and
/// `c_k = 1`, where `k` is the smallest index at which any dependency
/// exists (equivalently: `vectors[k]` is the first vector lying in the span
/// of its predecessors). Returns `None` when the whole family is
/// independent. Errors if the vectors do not share a common length; the
/// empty family is independent.
pub fn first_dependency(vectors: &[Vec<Rational>]) -> Result<Option<Vec<Rational>>> {
    let Some(first) = vectors.first() else {
        return Ok(None);
    };
    let dim = first.len();
    for v in vectors {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
    }

    // Per-vector denominator clearing: w_i = s_i * v_i with s_i > 0.
    let mut scales: Vec<BigInt> = Vec::with_capacity(vectors.len());
    let mut integral: Vec<Vec<BigInt>> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut scale = BigInt::one();
        for entry in v {
            scale = scale.lcm(entry.denom());
        }
        let row: Vec<BigInt> = v
            .iter()
            .map(|entry| entry.numer() * (&scale / entry.denom()))
            .collect();
        scales.push(scale);
        integral.push(row);
    }

    let mut echelon: Vec<EchelonRow> = Vec::new();
    for (k, w) in integral.iter().enumerate() {
        let mut row = w.clone();
        let mut combination = vec![BigInt::zero(); k + 1];
        combination[k] = BigInt::one();

        for e in &echelon {
            if row[e.pivot].is_zero() {
                continue;
            }
            let a = e.row[e.pivot].clone();
            let b = row[e.pivot].clone();
            for (target, source) in row.iter_mut().zip(&e.row) {
                *target = &*target * &a - source * &b;
            }
            for (i, target) in combination.iter_mut().enumerate() {
                let source = e.combination.get(i).cloned().unwrap_or_else(BigInt::zero);
                *target = &*target * &a - &source * &b;
            }
            reduce_content(&mut row, &mut combination);
        }

        match row.iter().position(|entry| !entry.is_zero()) {
            None => {
                // Dependency: sum combination[i] * w_i = 0. Translate back to
                // the original vectors and normalize the last coefficient.
                let lead = &combination[k] * &scales[k];
                debug_assert!(!lead.is_zero());
                let coefficients = combination
                    .iter()
                    .zip(&scales)
                    .map(|(c, s)| Rational::new(c * s, lead.clone()))
                    .collect();
                return Ok(Some(coefficients));
            }
            Some(pivot) => {
                let position = echelon
                    .iter()
                    .position(|e| e.pivot > pivot)
                    .unwrap_or(echelon.len());
                echelon.insert(
                    position,
                    EchelonRow {
                        row,
                        pivot,
                        combination,
                    },
                );
            }
        }
    }
    Ok(None)
}

/// Divides the row and its combination jointly by their common content.
fn reduce_content(row: &mut [BigInt], combination: &mut [BigInt]) {
    let mut content = BigInt::zero();
    for entry in row.iter().chain(combination.iter()) {
        content = content.gcd(entry);
        if content.is_one() {
            return;
        }
    }
    if content.is_zero() || content.is_one() {
        return;
    }
    let content = content.abs();
    for entry in row.iter_mut() {
        *entry = &*entry / &content;
    }
    for entry in combination.iter_mut() {
        *entry = &*entry / &content;
    }
}
