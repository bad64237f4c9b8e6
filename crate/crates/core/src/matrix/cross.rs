use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::budget::Budget;
use crate::ordered::ktt::{biclique_search, Biclique};

use super::{BitMatrix, MatrixError};

/// Row `i` and column `j` cross when `M[i][j] = 1`, or when row `i` has ones
/// on both sides of column `j` and column `j` has ones above and below row `i`.
pub fn row_col_cross(m: &BitMatrix, i: usize, j: usize) -> Result<bool, MatrixError> {
    m.check(i, j)?;
    if m.get(i, j) {
        return Ok(true);
    }
    let left = (0..j).any(|c| m.get(i, c));
    let right = (j + 1..m.cols()).any(|c| m.get(i, c));
    let above = (0..i).any(|r| m.get(r, j));
    let below = (i + 1..m.rows()).any(|r| m.get(r, j));
    Ok(left && right && above && below)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixKtt {
    /// `t` rows and `t` columns, every pair crossing.
    Found {
        rows: Vec<usize>,
        cols: Vec<usize>,
    },
    Free,
    Inconclusive,
}

/// `t` rows and `t` columns that pairwise cross, searched exactly within
/// `budget`.
pub fn find_crossing_ktt(m: &BitMatrix, t: usize, budget: &mut Budget) -> Result<MatrixKtt, MatrixError> {
    if t == 0 {
        return Err(MatrixError::InvalidT);
    }
    let rows: Vec<FixedBitSet> = (0..m.rows())
        .map(|i| {
            let mut b = FixedBitSet::with_capacity(m.cols());
            for j in 0..m.cols() {
                if row_col_cross(m, i, j).expect("in range") {
                    b.insert(j);
                }
            }
            b
        })
        .collect();
    Ok(match biclique_search(&rows, m.cols(), t, budget) {
        Biclique::Found(rows, cols) => MatrixKtt::Found { rows, cols },
        Biclique::None => MatrixKtt::Free,
        Biclique::OutOfBudget => MatrixKtt::Inconclusive,
    })
}

/// Horizontal segment through the extreme 1-cells of a row; `left == right`
/// when the row has a single 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HSegment {
    pub row: usize,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VSegment {
    pub col: usize,
    pub top: usize,
    pub bottom: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentReduction {
    pub h_segments: Vec<HSegment>,
    pub v_segments: Vec<VSegment>,
    /// `(row, col)` pairs whose segments meet, sorted.
    pub intersecting_pairs: Vec<(usize, usize)>,
}

/// One segment per nonempty row and per nonempty column, and all meeting
/// pairs. Empty rows and columns get no segment.
pub fn matrix_to_segments(m: &BitMatrix) -> SegmentReduction {
    let h_segments: Vec<HSegment> = (0..m.rows())
        .filter_map(|row| {
            let mut ones = m.row_ones(row);
            let left = ones.next()?;
            let right = ones.last().unwrap_or(left);
            Some(HSegment { row, left, right })
        })
        .collect();
    let v_segments: Vec<VSegment> = (0..m.cols())
        .filter_map(|col| {
            let top = (0..m.rows()).find(|&r| m.get(r, col))?;
            let bottom = (0..m.rows()).rev().find(|&r| m.get(r, col)).expect("top exists");
            Some(VSegment { col, top, bottom })
        })
        .collect();
    let mut intersecting_pairs = Vec::new();
    for h in &h_segments {
        for v in &v_segments {
            if h.left <= v.col && v.col <= h.right && v.top <= h.row && h.row <= v.bottom {
                intersecting_pairs.push((h.row, v.col));
            }
        }
    }
    SegmentReduction { h_segments, v_segments, intersecting_pairs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cross_example() -> BitMatrix {
        BitMatrix::from_rows(&[[0, 1, 0], [1, 0, 1], [0, 1, 0]]).unwrap()
    }

    #[test]
    fn cross_examples() {
        let i2 = BitMatrix::identity(2);
        assert!(row_col_cross(&i2, 0, 0).unwrap());
        assert!(!row_col_cross(&i2, 0, 1).unwrap());
        assert!(row_col_cross(&cross_example(), 1, 1).unwrap());
        let z = BitMatrix::zeros(3, 3);
        assert!((0..3).all(|i| (0..3).all(|j| !row_col_cross(&z, i, j).unwrap())));
        assert!(matches!(row_col_cross(&z, 3, 0), Err(MatrixError::IndexOutOfRange { .. })));
    }

    #[test]
    fn crossing_ktt_examples() {
        let b = &mut Budget::default();
        assert_eq!(
            find_crossing_ktt(&BitMatrix::identity(3), 1, b).unwrap(),
            MatrixKtt::Found { rows: vec![0], cols: vec![0] }
        );
        let ones = BitMatrix::from_rows(&[[1, 1, 1]; 3]).unwrap();
        assert_eq!(
            find_crossing_ktt(&ones, 3, b).unwrap(),
            MatrixKtt::Found { rows: vec![0, 1, 2], cols: vec![0, 1, 2] }
        );
        assert_eq!(find_crossing_ktt(&BitMatrix::identity(3), 2, b).unwrap(), MatrixKtt::Free);
        assert_eq!(find_crossing_ktt(&ones, 0, b), Err(MatrixError::InvalidT));
    }

    #[test]
    fn segment_examples() {
        let s = matrix_to_segments(&BitMatrix::identity(2));
        assert_eq!(s.h_segments, vec![HSegment { row: 0, left: 0, right: 0 }, HSegment { row: 1, left: 1, right: 1 }]);
        assert_eq!(s.v_segments.len(), 2);
        assert_eq!(s.intersecting_pairs, vec![(0, 0), (1, 1)]);

        let s = matrix_to_segments(&BitMatrix::from_rows(&[[1, 1, 1]]).unwrap());
        assert_eq!(s.h_segments, vec![HSegment { row: 0, left: 0, right: 2 }]);
        assert!(s.v_segments.iter().all(|v| v.top == v.bottom));
        assert_eq!(s.intersecting_pairs.len(), 3);

        let s = matrix_to_segments(&cross_example());
        assert!(s.intersecting_pairs.contains(&(1, 1)));
    }
}
