use std::fmt;

use super::echelon::{dense_to_sparse, sparse_rank};
use super::{LinalgError, Rational};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: QMatrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::RaggedRow { row: i, expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(QMatrix { rows: n, cols, data })
    }

    /// Convenience constructor from small integers; panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect();
        Self::from_rows(rows, cols).expect("ragged integer matrix")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn push_row(&mut self, row: Vec<Rational>) -> Result<(), LinalgError> {
        if row.len() != self.cols {
            return Err(LinalgError::RaggedRow { row: self.rows, expected: self.cols, found: row.len() });
        }
        self.data.extend(row);
        self.rows += 1;
        Ok(())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form. Pivot columns are scanned left to right and the
    /// first row (from the current position down) with a nonzero entry is used,
    /// so the output is deterministic.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            let support: Vec<usize> = (c..m.cols).filter(|&j| !m[(r, j)].is_zero()).collect();
            for &j in &support {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for &j in &support {
                    let v = m[(i, j)].sub_mul(&f, &m[(r, j)]);
                    m[(i, j)] = v;
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        let rank = pivot_cols.len();
        Rref { reduced: m, pivot_cols, rank }
    }

    /// Rank via sparse incremental elimination (cheaper than a full rref).
    pub fn rank(&self) -> usize {
        sparse_rank(self.cols, (0..self.rows).map(|i| dense_to_sparse(self.row(i))))
    }

    /// Determinant by fraction-based elimination; `None` for non-square input.
    pub fn determinant(&self) -> Option<Rational> {
        if self.rows != self.cols {
            return None;
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Some(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = &det * &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let v = m[(i, j)].sub_mul(&f, &m[(c, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        Some(det)
    }

    /// Basis of the right null space: one vector per free column, with a 1 in
    /// that column and zeros in the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivot_cols {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in rref.pivot_cols.iter().enumerate() {
                    v[p] = -&rref.reduced[(i, f)];
                }
                v
            })
            .collect()
    }

    /// True iff the two row spans coincide, decided by comparing reduced forms.
    pub fn row_space_equal(&self, other: &QMatrix) -> Result<bool, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let a = self.rref();
        let b = other.rref();
        if a.rank != b.rank || a.pivot_cols != b.pivot_cols {
            return Ok(false);
        }
        Ok((0..a.rank).all(|i| a.reduced.row(i) == b.reduced.row(i)))
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
