use alloc::vec::Vec;
use core::fmt;

use super::{ExactError, GaussRational};

/// Dense row-major matrix over `ℚ[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussRational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussRational>) -> Result<Self, ExactError> {
        if entries.len() != rows * cols {
            return Err(ExactError::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<GaussRational>>) -> Result<Self, ExactError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(ExactError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            entries,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(rows: usize, cols: usize, values: &[i64]) -> Result<Self, ExactError> {
        Self::new(
            rows,
            cols,
            values.iter().map(|&v| GaussRational::from(v)).collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: alloc::vec![GaussRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.entries[k * n + k] = GaussRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[GaussRational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<GaussRational> {
        self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: GaussRational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[GaussRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[GaussRational]> {
        // chunks(0) panics, and a zero-column matrix still has `rows` empty rows.
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussRational::is_zero)
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, ExactError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(ExactError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &GaussRational) -> ExactMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn conj_transpose(&self) -> ExactMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out
    }

    /// Reduced row-echelon form (same shape, zero rows last) and the rank.
    pub fn rref(&self) -> (ExactMatrix, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Row-reduces in place and returns the rank.
    pub(crate) fn rref_in_place(&mut self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_row = 0;
        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            let Some(p) = (pivot_row..rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(p, pivot_row);
            let inv = self
                .get(pivot_row, col)
                .inv()
                .expect("pivot is nonzero by construction");
            for c in col..cols {
                let idx = pivot_row * cols + c;
                self.entries[idx] = &self.entries[idx] * &inv;
            }
            for r in 0..rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..cols {
                    let delta = &factor * self.get(pivot_row, c);
                    let idx = r * cols + c;
                    self.entries[idx] = &self.entries[idx] - &delta;
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Whether `v` is a linear combination of the rows of `self`.
    pub fn in_row_space(&self, v: &[GaussRational]) -> Result<bool, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let rank = self.rank();
        let mut extended = self.clone();
        extended.entries.extend(v.iter().cloned());
        extended.rows += 1;
        Ok(extended.rank() == rank)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, GaussRational::one());
        }
        aug.rref_in_place();
        for i in 0..n {
            if !aug.get(i, i).is_one() {
                return None;
            }
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(out)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.row_iter().enumerate() {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
