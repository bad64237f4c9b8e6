//! 0-1 matrices, pattern containment, crosses and the extremal oracle.
//!
//! Indices are 0-based throughout; reports add one.

mod containment;
mod cross;
mod extremal;
mod patterns;

use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use containment::{contains_pattern, enumerate_occurrences, Occurrence, Occurrences};
pub use cross::{
    find_crossing_ktt, matrix_to_segments, row_col_cross, HSegment, MatrixKtt, SegmentReduction, VSegment,
};
pub use extremal::{max_ones_avoiding, Extremal};
pub use patterns::{adjacency_matrix, bipartite_adjacency, build_pattern, PatternKind};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, found: usize },
    #[error("cell ({row}, {col}) outside a {rows}x{cols} matrix")]
    IndexOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("t must be at least 1")]
    InvalidT,
    #[error("left vertex {left} does not precede right vertex {right}")]
    OrderViolation { left: usize, right: usize },
    #[error("every {n}x{n} matrix contains the pattern")]
    Unavoidable { n: usize },
    #[error("search budget exhausted")]
    BudgetExceeded,
}

/// Dense 0-1 matrix stored as one bitset per row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FixedBitSet>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BitMatrix {
        BitMatrix { rows, cols, data: (0..rows).map(|_| FixedBitSet::with_capacity(cols)).collect() }
    }

    pub fn identity(t: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(t, t);
        for i in 0..t {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values; every row must have the same
    /// length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<BitMatrix, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(MatrixError::RaggedRows { row: i, expected: cols, found: r.len() });
            }
            for (j, &b) in r.iter().enumerate() {
                if b != 0 {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    /// Matrix with ones exactly at the given cells.
    pub fn from_ones<I: IntoIterator<Item = (usize, usize)>>(
        rows: usize,
        cols: usize,
        ones: I,
    ) -> Result<BitMatrix, MatrixError> {
        let mut m = BitMatrix::zeros(rows, cols);
        for (row, col) in ones {
            m.check(row, col)?;
            m.set(row, col, true);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub(crate) fn check(&self, row: usize, col: usize) -> Result<(), MatrixError> {
        if row < self.rows && col < self.cols {
            Ok(())
        } else {
            Err(MatrixError::IndexOutOfRange { row, col, rows: self.rows, cols: self.cols })
        }
    }

    /// Panics when out of range.
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(col < self.cols, "column {col} out of range");
        self.data[row].contains(col)
    }

    /// Panics when out of range.
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(col < self.cols, "column {col} out of range");
        self.data[row].set(col, value);
    }

    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.data[i]
    }

    /// Columns holding a 1 in row `i`, increasing.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.data[i].ones()
    }

    /// All 1-cells in row-major order.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |i| self.data[i].ones().map(move |j| (i, j)))
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (i, j) in self.ones() {
            t.set(j, i, true);
        }
        t
    }

    /// Entrywise `self <= other` for equal shapes.
    pub fn is_dominated_by(&self, other: &BitMatrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.is_subset(b))
    }

    /// Exactly one 1 in every row and every column.
    pub fn is_permutation(&self) -> bool {
        self.rows == self.cols
            && self.data.iter().all(|r| r.count_ones(..) == 1)
            && (0..self.cols).all(|j| (0..self.rows).filter(|&i| self.get(i, j)).count() == 1)
    }

    /// `M^+`: a new last row and a new first column whose only 1 is the new
    /// bottom-left corner.
    pub fn plus_extend(&self) -> BitMatrix {
        let mut p = BitMatrix::zeros(self.rows + 1, self.cols + 1);
        for (i, j) in self.ones() {
            p.set(i, j + 1, true);
        }
        p.set(self.rows, 0, true);
        p
    }

    /// Copy with `other` appended to the right. Row counts must agree.
    pub fn hconcat(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, other.rows, "row counts differ");
        let mut m = BitMatrix::zeros(self.rows, self.cols + other.cols);
        for (i, j) in self.ones() {
            m.set(i, j, true);
        }
        for (i, j) in other.ones() {
            m.set(i, self.cols + j, true);
        }
        m
    }
}

/// Rows of `0`/`1` characters separated by newlines, no trailing newline.
impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn plus_extend_examples() {
        let one = BitMatrix::from_rows(&[[1]]).unwrap();
        assert_eq!(one.plus_extend(), BitMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap());
        let i2p = BitMatrix::identity(2).plus_extend();
        assert_eq!(i2p, BitMatrix::from_ones(3, 3, [(0, 1), (1, 2), (2, 0)]).unwrap());
        let zero = BitMatrix::from_rows(&[[0]]).unwrap();
        assert_eq!(zero.plus_extend(), BitMatrix::from_rows(&[[0, 0], [1, 0]]).unwrap());
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows: [&[u8]; 2] = [&[1, 0], &[1]];
        assert_eq!(BitMatrix::from_rows(&rows), Err(MatrixError::RaggedRows { row: 1, expected: 2, found: 1 }));
    }

    #[test]
    fn display_and_transpose() {
        let m = BitMatrix::from_rows(&[[1, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(m.to_string(), "110\n001");
        assert_eq!(m.transpose().to_string(), "10\n10\n01");
        assert_eq!(m.count_ones(), 3);
    }
}
