//! Minimal exact linear algebra over [`Rat`]: rank and nullspace via
//! Gauss-Jordan elimination. Dense matrices are fine at the scales this
//! crate targets (tens of rows).

use crate::ratio::Rat;

#[derive(Clone, Debug)]
pub(crate) struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_columns(cols: &[Vec<Rat>], rows: usize) -> Self {
        let mut m = QMatrix::zero(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().1.len()
    }

    /// Basis of the right nullspace, one `cols`-length vector per element.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.clone().reduce();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (c, maybe_row) in pivot_of_col.iter().enumerate() {
                if let Some(r) = maybe_row {
                    vec[c] = -&rref[(*r, free)];
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Row-reduces in place; returns the matrix and the pivot column of each
    /// nonzero row.
    fn reduce(mut self) -> (Self, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].clone();
            for c in col..self.cols {
                self[(row, c)] = &self[(row, c)] / &inv;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)].clone();
                    for c in col..self.cols {
                        let delta = &factor * &self[(row, c)];
                        self[(r, c)] -= &delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        (self, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

/// Rank of the span of a list of vectors (all the same length).
pub(crate) fn span_rank(vectors: &[Vec<Rat>], dim: usize) -> usize {
    if vectors.is_empty() || dim == 0 {
        return 0;
    }
    QMatrix::from_columns(vectors, dim).rank()
}
