use crate::graph::Graph;
use crate::ordered::BipartiteSplit;

use super::{BitMatrix, MatrixError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Identity(usize),
    /// `I_t`, then `t - 1` copies of the `t x 2` block with ones at its
    /// top-left and bottom-right cells, then `I_t` again.
    PolygonMt(usize),
    /// `((I_{2t}^+)^T)^+`.
    MonotoneMt(usize),
}

pub fn build_pattern(kind: PatternKind) -> Result<BitMatrix, MatrixError> {
    let t = match kind {
        PatternKind::Identity(t) | PatternKind::PolygonMt(t) | PatternKind::MonotoneMt(t) => t,
    };
    if t == 0 {
        return Err(MatrixError::InvalidT);
    }
    Ok(match kind {
        PatternKind::Identity(t) => BitMatrix::identity(t),
        PatternKind::PolygonMt(t) => {
            let block = BitMatrix::from_ones(t, 2, [(0, 0), (t - 1, 1)])?;
            let mut m = BitMatrix::identity(t);
            for _ in 1..t {
                m = m.hconcat(&block);
            }
            m.hconcat(&BitMatrix::identity(t))
        }
        PatternKind::MonotoneMt(t) => BitMatrix::identity(2 * t).plus_extend().transpose().plus_extend(),
    })
}

/// Adjacency between `rows` and `cols` (each taken in the given order):
/// entry `(i, j)` is 1 iff `rows[i] ~ cols[j]` in `g`.
pub fn adjacency_matrix(g: &Graph, rows: &[usize], cols: &[usize]) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows.len(), cols.len());
    for (i, &a) in rows.iter().enumerate() {
        for (j, &b) in cols.iter().enumerate() {
            if g.has_edge(a, b) {
                m.set(i, j, true);
            }
        }
    }
    m
}

/// `|L| x |R|` matrix of the kept edges of `split`, rows and columns in
/// vertex order. Every left vertex must precede every right vertex.
pub fn bipartite_adjacency(split: &BipartiteSplit) -> Result<BitMatrix, MatrixError> {
    let left = split.left();
    let right = split.right();
    if let (Some(&l), Some(&r)) = (left.last(), right.first()) {
        if l > r {
            return Err(MatrixError::OrderViolation { left: l, right: r });
        }
    }
    let mut m = BitMatrix::zeros(left.len(), right.len());
    for e in &split.kept {
        let i = left.binary_search(&e.lo).expect("kept edges start on the left");
        let j = right.binary_search(&e.hi).expect("kept edges end on the right");
        m.set(i, j, true);
    }
    Ok(m)
}
