use alloc::vec::Vec;

use super::BitMatrix;

/// Row and column indices of `M` onto which a pattern maps, both strictly
/// increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Occurrence {
    /// Every 1 of `p` lands on a 1 of `m`.
    pub fn verify(&self, m: &BitMatrix, p: &BitMatrix) -> bool {
        self.rows.len() == p.rows()
            && self.cols.len() == p.cols()
            && self.rows.windows(2).all(|w| w[0] < w[1])
            && self.cols.windows(2).all(|w| w[0] < w[1])
            && self.rows.last().is_none_or(|&r| r < m.rows())
            && self.cols.last().is_none_or(|&c| c < m.cols())
            && p.ones().all(|(i, j)| m.get(self.rows[i], self.cols[j]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrences {
    pub found: Vec<Occurrence>,
    /// The enumeration stopped at the cap.
    pub capped: bool,
}

struct Search<'a> {
    m: &'a BitMatrix,
    p: &'a BitMatrix,
    /// Rows of `p` with a 1 in each column.
    col_support: Vec<Vec<usize>>,
    row_weight: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(m: &'a BitMatrix, p: &'a BitMatrix) -> Self {
        let mut col_support = alloc::vec![Vec::new(); p.cols()];
        for (i, j) in p.ones() {
            col_support[j].push(i);
        }
        let row_weight = (0..p.rows()).map(|i| p.row(i).count_ones(..)).collect();
        Search { m, p, col_support, row_weight }
    }

    /// Earliest increasing columns compatible with the first `rows.len()`
    /// pattern rows. Taking each column as early as possible never rules out
    /// a later one, so this succeeds iff some column map exists.
    fn greedy_cols(&self, rows: &[usize]) -> Option<Vec<usize>> {
        let mut cols = Vec::with_capacity(self.p.cols());
        let mut c = 0;
        for support in &self.col_support {
            let need: Vec<usize> = support.iter().filter(|&&i| i < rows.len()).map(|&i| rows[i]).collect();
            let found = (c..self.m.cols()).find(|&cc| need.iter().all(|&r| self.m.get(r, cc)))?;
            cols.push(found);
            c = found + 1;
        }
        Some(cols)
    }

    /// Depth-first over row selections in lexicographic order; `visit`
    /// returns `false` to stop.
    fn run(&self, rows: &mut Vec<usize>, visit: &mut dyn FnMut(Occurrence) -> bool) -> bool {
        let k = rows.len();
        if k == self.p.rows() {
            let cols = self.greedy_cols(rows).expect("checked on the way down");
            return visit(Occurrence { rows: rows.clone(), cols });
        }
        let start = rows.last().map_or(0, |&r| r + 1);
        let remaining = self.p.rows() - k;
        for r in start..=self.m.rows().saturating_sub(remaining) {
            if self.m.row(r).count_ones(..) < self.row_weight[k] {
                continue;
            }
            rows.push(r);
            if self.greedy_cols(rows).is_some() && !self.run(rows, visit) {
                return false;
            }
            rows.pop();
        }
        true
    }
}

/// Lexicographically first occurrence of `p` in `m` (rows first, then the
/// earliest columns for those rows), or `None`.
pub fn contains_pattern(m: &BitMatrix, p: &BitMatrix) -> Option<Occurrence> {
    if p.rows() > m.rows() || p.cols() > m.cols() {
        return None;
    }
    let s = Search::new(m, p);
    s.greedy_cols(&[])?;
    let mut out = None;
    s.run(&mut Vec::new(), &mut |o| {
        out = Some(o);
        false
    });
    out
}

/// One occurrence per feasible row selection, in lexicographic order of the
/// rows, stopping after `cap` of them.
pub fn enumerate_occurrences(m: &BitMatrix, p: &BitMatrix, cap: usize) -> Occurrences {
    let mut found = Vec::new();
    let mut capped = false;
    if p.rows() <= m.rows() && p.cols() <= m.cols() && cap > 0 {
        let s = Search::new(m, p);
        if s.greedy_cols(&[]).is_some() {
            s.run(&mut Vec::new(), &mut |o| {
                if found.len() == cap {
                    capped = true;
                    return false;
                }
                found.push(o);
                true
            });
        }
    }
    Occurrences { found, capped }
}
