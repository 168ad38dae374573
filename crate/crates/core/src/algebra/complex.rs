//! The complex `R/J(Delta)`: one summand `R/J_psi` per interior face `psi`,
//! with `R` itself on every cell, and the simplicial boundary relative to
//! the boundary of `Delta`.

use std::collections::HashMap;

use super::ideal::{face_ideal, quotient_hilbert, reduce_forms, GradedPiece, HomForm, PowerIdeal};
use super::AlgebraError;
use crate::formulas::binom_safe;
use crate::linalg::{sparse_rank, Rational, SparseVec};
use crate::mesh::{SimplicialComplex, Simplex};

#[derive(Clone, Debug)]
pub struct ChainComplexRJ {
    k: usize,
    r: u32,
    nvars: usize,
    faces: Vec<Vec<Simplex>>,
    ideals: Vec<Vec<PowerIdeal>>,
    index: Vec<HashMap<Simplex, usize>>,
}

/// Degree-`d` realization: quotient bases per face and block offsets per index.
struct DegreePiece {
    pieces: Vec<Vec<GradedPiece>>,
    offsets: Vec<Vec<usize>>,
    dims: Vec<usize>,
}

pub fn build_chain_complex(mesh: &SimplicialComplex, r: u32) -> Result<ChainComplexRJ, AlgebraError> {
    mesh.ensure_valid()?;
    let k = mesh.dim();
    let nvars = k + 1;
    let mut faces = Vec::with_capacity(k + 1);
    let mut ideals = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let fs: Vec<Simplex> = mesh.interior_faces(i)?.to_vec();
        let js = if i == k {
            fs.iter().map(|_| PowerIdeal::zero(nvars, r + 1)).collect()
        } else {
            fs.iter().map(|f| face_ideal(mesh, f, r)).collect::<Result<Vec<_>, _>>()?
        };
        faces.push(fs);
        ideals.push(js);
    }
    Ok(ChainComplexRJ::from_parts(k, r, nvars, faces, ideals))
}

impl ChainComplexRJ {
    fn from_parts(k: usize, r: u32, nvars: usize, faces: Vec<Vec<Simplex>>, ideals: Vec<Vec<PowerIdeal>>) -> Self {
        let index = faces.iter().map(|fs| fs.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect()).collect();
        ChainComplexRJ { k, r, nvars, faces, ideals, index }
    }

    pub fn top_dim(&self) -> usize {
        self.k
    }

    pub fn smoothness(&self) -> u32 {
        self.r
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Interior `i`-faces in complex order.
    pub fn faces(&self, i: usize) -> &[Simplex] {
        &self.faces[i]
    }

    pub fn ideals(&self, i: usize) -> &[PowerIdeal] {
        &self.ideals[i]
    }

    /// `dim (RJ_i)_d`, with `RJ_k` the free part.
    pub fn term_dim(&self, i: usize, d: u32) -> u64 {
        self.ideals[i].iter().map(|j| quotient_hilbert(j, d)).sum()
    }

    /// `sum_i (-1)^i dim (RJ_{k-i})_d`.
    pub fn euler_dim(&self, d: u32) -> i64 {
        (0..=self.k)
            .map(|i| {
                let t = self.term_dim(self.k - i, d) as i64;
                if i % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum()
    }

    fn degree_piece(&self, d: u32) -> DegreePiece {
        let mut pieces = Vec::with_capacity(self.k + 1);
        let mut offsets = Vec::with_capacity(self.k + 1);
        let mut dims = Vec::with_capacity(self.k + 1);
        for js in &self.ideals {
            let ps: Vec<GradedPiece> = js.iter().map(|j| GradedPiece::new(j, d)).collect();
            let mut off = Vec::with_capacity(ps.len());
            let mut total = 0;
            for p in &ps {
                off.push(total);
                total += p.quotient_dim();
            }
            pieces.push(ps);
            offsets.push(off);
            dims.push(total);
        }
        DegreePiece { pieces, offsets, dims }
    }

    /// Images of the quotient basis of `RJ_i` under the boundary map, one
    /// sparse vector per basis element, in the coordinates of `RJ_{i-1}`.
    fn boundary_columns(&self, dp: &DegreePiece, i: usize) -> Vec<SparseVec> {
        assert!(i >= 1 && i <= self.k);
        let mut cols = Vec::with_capacity(dp.dims[i]);
        for (fi, face) in self.faces[i].iter().enumerate() {
            let targets: Vec<(usize, bool)> = (0..face.len())
                .filter_map(|j| self.index[i - 1].get(&face.omit(j)).map(|&t| (t, j % 2 == 1)))
                .collect();
            for &col in dp.pieces[i][fi].quotient_cols() {
                let mut acc: HashMap<usize, Rational> = HashMap::new();
                for &(t, negative) in &targets {
                    let base = dp.offsets[i - 1][t];
                    for (pos, x) in dp.pieces[i - 1][t].reduce_monomial(col) {
                        let x = if negative { -x } else { x };
                        let e = acc.entry(base + pos).or_default();
                        *e += &x;
                    }
                }
                let mut v: SparseVec = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                v.sort_by_key(|e| e.0);
                cols.push(v);
            }
        }
        cols
    }

    /// `(dim (RJ_i)_d, rank of the boundary out of RJ_i)` for every `i`, on the
    /// explicit quotient bases.
    fn dims_and_ranks(&self, d: u32) -> (Vec<usize>, Vec<usize>) {
        let dp = self.degree_piece(d);
        let mut ranks = vec![0; self.k + 1];
        for i in 1..=self.k {
            ranks[i] = sparse_rank(dp.dims[i - 1], self.boundary_columns(&dp, i));
        }
        (dp.dims, ranks)
    }

    /// `dim H_i(R/J)_d` for `i = 0..k` from explicit boundary matrices.
    pub fn homology_direct(&self, d: u32) -> Vec<usize> {
        let (dims, ranks) = self.dims_and_ranks(d);
        (0..=self.k)
            .map(|i| dims[i] - ranks[i] - if i < self.k { ranks[i + 1] } else { 0 })
            .collect()
    }

    /// The same complex written over a basis of the span of all forms that occur,
    /// plus the number of unused variables. The full complex is this one tensored
    /// with a polynomial ring in those variables.
    pub fn essential(&self) -> (ChainComplexRJ, usize) {
        let all: Vec<HomForm> = self.ideals.iter().flatten().flat_map(|j| j.forms().iter().cloned()).collect();
        let (reduced, e) = reduce_forms(&all, self.nvars);
        let mut it = reduced.into_iter();
        let ideals = self
            .ideals
            .iter()
            .map(|js| {
                js.iter()
                    .map(|j| {
                        let forms = it.by_ref().take(j.forms().len()).collect();
                        PowerIdeal::new(e, j.exponent(), forms).expect("reduced forms")
                    })
                    .collect()
            })
            .collect();
        (ChainComplexRJ::from_parts(self.k, self.r, e, self.faces.clone(), ideals), self.nvars - e)
    }

    /// `dim H_i(R/J)_t` for every `t <= d_max`, computed on the essential
    /// complex and spread over the unused variables.
    pub fn homology_series(&self, d_max: u32) -> Vec<Vec<usize>> {
        let (small, c) = self.essential();
        if c == 0 {
            return (0..=d_max).map(|d| self.homology_direct(d)).collect();
        }
        let small_h: Vec<Vec<usize>> = (0..=d_max).map(|t| small.homology_direct(t)).collect();
        (0..=d_max)
            .map(|d| {
                (0..=self.k)
                    .map(|i| {
                        (0..=d)
                            .map(|t| {
                                small_h[t as usize][i] as u64
                                    * binom_safe((d - t) as i64 + c as i64 - 1, c as u64 - 1)
                            })
                            .sum::<u64>() as usize
                    })
                    .collect()
            })
            .collect()
    }

    pub fn homology(&self, d: u32) -> Vec<usize> {
        self.homology_series(d).pop().expect("nonempty series")
    }

    /// Checks that `boundary_{i-1} . boundary_i` vanishes in degree `d` for all `i`.
    pub fn boundary_squares_to_zero(&self, d: u32) -> bool {
        let dp = self.degree_piece(d);
        for i in 2..=self.k {
            let outer = self.boundary_columns(&dp, i - 1);
            for col in self.boundary_columns(&dp, i) {
                let mut acc: HashMap<usize, Rational> = HashMap::new();
                for (pos, x) in &col {
                    for (p2, y) in &outer[*pos] {
                        *acc.entry(*p2).or_default() += &(x * y);
                    }
                }
                if acc.values().any(|v| !v.is_zero()) {
                    return false;
                }
            }
        }
        true
    }
}

/// `dim H_i(R/J(Delta))_d` for `i = 0..k`.
pub fn homology_graded_dims(mesh: &SimplicialComplex, r: u32, d: u32) -> Result<Vec<usize>, AlgebraError> {
    Ok(build_chain_complex(mesh, r)?.homology(d))
}

/// Alternating sum of the degree-`d` term dimensions of `R/J(Delta)`.
pub fn euler_dim(mesh: &SimplicialComplex, r: u32, d: u32) -> Result<i64, AlgebraError> {
    Ok(build_chain_complex(mesh, r)?.euler_dim(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::Point;

    fn two_triangles() -> SimplicialComplex {
        let v = vec![Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0]), Point::from_ints(&[0, 1]), Point::from_ints(&[1, 1])];
        SimplicialComplex::new(2, v, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap()
    }

    fn alfeld_t2() -> SimplicialComplex {
        let v = vec![Point::from_ints(&[0, 0]), Point::from_ints(&[3, 0]), Point::from_ints(&[0, 3]), Point::from_ints(&[1, 1])];
        SimplicialComplex::new(2, v, vec![vec![0, 1, 3], vec![1, 2, 3], vec![0, 2, 3]]).unwrap()
    }

    #[test]
    fn single_simplex() {
        let t = SimplicialComplex::standard_simplex(2, 1);
        let c = build_chain_complex(&t, 3).unwrap();
        assert_eq!(c.faces(2).len(), 1);
        assert!(c.faces(1).is_empty() && c.faces(0).is_empty());
        for d in 0..6 {
            assert_eq!(c.homology(d), vec![0, 0, binom_safe(d as i64 + 2, 2) as usize]);
            assert_eq!(c.euler_dim(d), binom_safe(d as i64 + 2, 2) as i64);
        }
    }

    #[test]
    fn two_triangle_complex() {
        let c = build_chain_complex(&two_triangles(), 1).unwrap();
        assert_eq!(c.faces(1).len(), 1);
        assert_eq!(c.ideals(1)[0].forms().len(), 1);
        assert_eq!(c.homology_direct(2), vec![0, 0, 7]);
        assert_eq!(c.homology(2), vec![0, 0, 7]);
    }

    #[test]
    fn alfeld_complex() {
        let m = alfeld_t2();
        let c = build_chain_complex(&m, 1).unwrap();
        assert_eq!((c.faces(2).len(), c.faces(1).len(), c.faces(0).len()), (3, 3, 1));
        assert_eq!(c.ideals(0)[0].forms().len(), 3);
        assert_eq!(c.homology_direct(3), vec![0, 0, 12]);
        assert_eq!(c.euler_dim(3), 12);
        assert_eq!(c.term_dim(1, 3), 21);
        assert_eq!(c.term_dim(0, 3), 3);
        for d in 0..7 {
            assert!(c.boundary_squares_to_zero(d));
            assert_eq!(c.homology(d), c.homology_direct(d), "d={d}");
        }
    }
}
