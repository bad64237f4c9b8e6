use crate::budget::Budget;

use super::{contains_pattern, BitMatrix, MatrixError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremal {
    pub count: usize,
    pub witness: BitMatrix,
}

/// Maximum number of ones in an `n x n` matrix avoiding `p`, with a witness.
///
/// Branch and bound over cells in row-major order, trying 1 before 0. A
/// partial matrix (undecided cells read as 0) that already contains `p`
/// is cut, since adding ones never removes an occurrence.
pub fn max_ones_avoiding(p: &BitMatrix, n: usize, budget: &mut Budget) -> Result<Extremal, MatrixError> {
    if p.rows() > n || p.cols() > n {
        let mut all = BitMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                all.set(i, j, true);
            }
        }
        return Ok(Extremal { count: n * n, witness: all });
    }
    if p.count_ones() == 0 {
        return Err(MatrixError::Unavoidable { n });
    }
    let mut best = Extremal { count: 0, witness: BitMatrix::zeros(n, n) };
    let mut cur = BitMatrix::zeros(n, n);
    search(p, n, 0, 0, &mut cur, &mut best, budget)?;
    Ok(best)
}

fn search(
    p: &BitMatrix,
    n: usize,
    cell: usize,
    count: usize,
    cur: &mut BitMatrix,
    best: &mut Extremal,
    budget: &mut Budget,
) -> Result<(), MatrixError> {
    if !budget.tick() {
        return Err(MatrixError::BudgetExceeded);
    }
    if count > best.count {
        *best = Extremal { count, witness: cur.clone() };
    }
    if cell == n * n || count + (n * n - cell) <= best.count {
        return Ok(());
    }
    let (i, j) = (cell / n, cell % n);
    cur.set(i, j, true);
    if contains_pattern(cur, p).is_none() {
        search(p, n, cell + 1, count + 1, cur, best, budget)?;
    }
    cur.set(i, j, false);
    search(p, n, cell + 1, count, cur, best, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_two() {
        let i2 = BitMatrix::identity(2);
        for (n, want) in [(2, 3), (3, 5), (4, 7)] {
            let e = max_ones_avoiding(&i2, n, &mut Budget::default()).unwrap();
            assert_eq!(e.count, want, "n = {n}");
            assert_eq!(e.witness.count_ones(), want);
            assert!(contains_pattern(&e.witness, &i2).is_none());
        }
    }

    #[test]
    fn edge_cases() {
        let one = BitMatrix::identity(1);
        assert_eq!(max_ones_avoiding(&one, 3, &mut Budget::default()).unwrap().count, 0);
        assert_eq!(max_ones_avoiding(&BitMatrix::identity(3), 2, &mut Budget::default()).unwrap().count, 4);
        assert_eq!(
            max_ones_avoiding(&BitMatrix::zeros(1, 1), 2, &mut Budget::default()),
            Err(MatrixError::Unavoidable { n: 2 })
        );
        assert_eq!(
            max_ones_avoiding(&BitMatrix::identity(2), 4, &mut Budget::new(3)),
            Err(MatrixError::BudgetExceeded)
        );
    }
}
