//! Incremental sparse row echelon basis.
//!
//! Rows are inserted one at a time and reduced against the current pivots;
//! only leading terms are kept distinct, which is all that rank and
//! normal-form computations need. Most matrices in this crate are block
//! sparse, so rows are stored as sorted `(column, value)` lists.

use super::Rational;

/// Sparse vector: strictly increasing column indices, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// `v[start..] - f * row`, keeping `v[..start]` untouched. Every column of
/// `row` must be `>= v[start].0` when `start < v.len()`.
fn sub_scaled_tail(v: &[(usize, Rational)], start: usize, f: &Rational, row: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(v.len().max(start + row.len()));
    out.extend_from_slice(&v[..start]);
    let (mut i, mut j) = (start, 0);
    while i < v.len() || j < row.len() {
        let ci = v.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = row.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push(v[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(f * &row[j].1)));
            j += 1;
        } else {
            let val = v[i].1.sub_mul(f, &row[j].1);
            if !val.is_zero() {
                out.push((ci, val));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    /// Reduces leading terms until the vector is zero or leads with a non-pivot column.
    fn reduce_leading(&self, v: SparseVec) -> SparseVec {
        let start = match v.first() {
            Some((c, _)) if self.pivot_row[*c].is_some() => *c,
            _ => return v,
        };
        if v.len() <= 4 {
            return self.reduce_leading_sparse(v);
        }
        // dense accumulator over columns start..ncols
        let mut acc = vec![Rational::zero(); self.ncols - start];
        for (c, x) in v {
            acc[c - start] = x;
        }
        for i in 0..acc.len() {
            if acc[i].is_zero() {
                continue;
            }
            match self.pivot_row[start + i] {
                Some(p) => {
                    let f = std::mem::take(&mut acc[i]);
                    for (c, x) in &self.rows[p][1..] {
                        let slot = &mut acc[c - start];
                        *slot = slot.sub_mul(&f, x);
                    }
                }
                None => {
                    return acc
                        .into_iter()
                        .enumerate()
                        .skip(i)
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(j, x)| (start + j, x))
                        .collect();
                }
            }
        }
        Vec::new()
    }

    fn reduce_leading_sparse(&self, mut v: SparseVec) -> SparseVec {
        while let Some((c, a)) = v.first() {
            match self.pivot_row[*c] {
                Some(p) => {
                    let f = a.clone();
                    v = sub_scaled_tail(&v, 0, &f, &self.rows[p]);
                }
                None => break,
            }
        }
        v
    }

    /// Eliminates every pivot column from `v`: the coordinates of `v` in the
    /// complement spanned by the non-pivot unit vectors, modulo the row span.
    pub fn normal_form(&self, mut v: SparseVec) -> SparseVec {
        let mut i = 0;
        while i < v.len() {
            let c = v[i].0;
            match self.pivot_row[c] {
                Some(p) => {
                    let f = v[i].1.clone();
                    v = sub_scaled_tail(&v, i, &f, &self.rows[p]);
                }
                None => i += 1,
            }
        }
        v
    }

    /// Inserts a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0));
        let v = self.reduce_leading(v);
        let Some((lead, a)) = v.first() else {
            return false;
        };
        let lead = *lead;
        let inv = a.recip();
        let row: SparseVec = v.into_iter().map(|(c, x)| (c, &x * &inv)).collect();
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Back-substitutes so every row is zero on all pivot columns but its own.
    pub fn reduce_fully(&mut self) {
        let mut order: Vec<(usize, usize)> =
            (0..self.ncols).filter_map(|c| self.pivot_row[c].map(|p| (c, p))).collect();
        order.reverse();
        for (_, p) in order {
            let mut row = std::mem::take(&mut self.rows[p]);
            let lead = row.remove(0);
            let mut tail = self.normal_form(row);
            tail.insert(0, lead);
            self.rows[p] = tail;
        }
    }

    /// Row whose leading column is `col`, if `col` is a pivot.
    pub fn pivot_row(&self, col: usize) -> Option<&[(usize, Rational)]> {
        self.pivot_row[col].map(|p| self.rows[p].as_slice())
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Null space basis of the row span, one vector per non-pivot column.
    /// Call after `reduce_fully`.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let mut by_free: Vec<SparseVec> = vec![Vec::new(); self.ncols];
        for c in 0..self.ncols {
            if let Some(p) = self.pivot_row[c] {
                for (j, x) in &self.rows[p][1..] {
                    by_free[*j].push((c, -x));
                }
            }
        }
        self.non_pivots()
            .into_iter()
            .map(|f| {
                let mut v = std::mem::take(&mut by_free[f]);
                v.push((f, Rational::one()));
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce_leading(v).is_empty()
    }
}

pub fn dense_to_sparse(row: &[Rational]) -> SparseVec {
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (c, x.clone()))
        .collect()
}

/// Rank of a family of sparse rows over `ncols` columns.
pub fn sparse_rank(ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
        if e.rank() == ncols {
            break;
        }
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(c, x)| (c, Rational::from_int(x))).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![sv(&[(0, 1), (1, 2)]), sv(&[(0, 2), (1, 4)]), sv(&[(2, 5)])];
        assert_eq!(sparse_rank(3, rows), 2);
    }

    #[test]
    fn full_reduction_and_kernel() {
        let mut e = Echelon::new(4);
        e.insert(sv(&[(0, 1), (1, 1), (3, 2)]));
        e.insert(sv(&[(1, 2), (2, 1), (3, 1)]));
        e.reduce_fully();
        assert!(e.pivot_row(0).unwrap().iter().all(|(c, _)| *c == 0 || !e.is_pivot(*c)));
        let k = e.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in [sv(&[(0, 1), (1, 1), (3, 2)]), sv(&[(1, 2), (2, 1), (3, 1)])] {
                let dot: Rational = v
                    .iter()
                    .filter_map(|(c, x)| r.iter().find(|e| e.0 == *c).map(|e| x * &e.1))
                    .sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn normal_form_kills_pivot_columns() {
        let mut e = Echelon::new(3);
        e.insert(sv(&[(0, 1), (1, 1)]));
        e.insert(sv(&[(1, 1), (2, 1)]));
        // x0 = -x1 = x2 modulo the span, so e0 reduces to e2.
        let nf = e.normal_form(sv(&[(0, 1)]));
        assert_eq!(nf, sv(&[(2, 1)]));
        assert!(e.contains(sv(&[(0, 1), (1, 2), (2, 1)])));
        assert!(!e.contains(sv(&[(2, 1)])));
        assert_eq!(e.pivots(), vec![0, 1]);
        assert_eq!(e.non_pivots(), vec![2]);
    }
}
