//! Brute-force spline spaces: one coefficient block per cell, and for every
//! interior facet the conditions that the difference of the two neighbouring
//! pieces lies in `l^{r+1} * (polynomials of degree d-r-1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{homogenize, reduce_forms, MonomialBasis, Poly};
use crate::formulas::binom_safe;
use crate::linalg::{Echelon, QMatrix, Rational, SparseVec};
use crate::mesh::{AffineForm, MeshError, SimplicialComplex, Simplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Degree at most `d` in `k` variables on `Delta`.
    Affine,
    /// Homogeneous degree `d` in `k+1` variables on the cone over `Delta`.
    Cone,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Affine => "affine",
            Mode::Cone => "cone",
        })
    }
}

impl FromStr for Mode {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "affine" => Ok(Mode::Affine),
            "cone" => Ok(Mode::Cone),
            other => Err(OracleError::UnknownMode(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error("expected {expected} cell polynomials, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("piece {cell} has {found} variables, expected {expected}")]
    VariableMismatch { cell: usize, expected: usize, found: usize },
    #[error("unknown mode `{0}` (expected affine or cone)")]
    UnknownMode(String),
}

fn poly_basis(mode: Mode, k: usize, d: u32) -> MonomialBasis {
    match mode {
        Mode::Affine => MonomialBasis::up_to(k, d),
        Mode::Cone => MonomialBasis::homogeneous(k + 1, d),
    }
}

fn form_poly(mode: Mode, f: &AffineForm) -> Poly {
    match mode {
        Mode::Affine => Poly::linear(f.coefficients(), f.constant()),
        Mode::Cone => homogenize(f).to_poly(),
    }
}

/// Per-facet constraint block.
#[derive(Clone, Debug)]
pub struct FacetConstraint {
    pub facet: Simplex,
    pub cells: (usize, usize),
    /// Rows over the unknowns of both cells.
    pub rows: Vec<SparseVec>,
}

/// Linear system whose kernel is the spline space.
#[derive(Clone, Debug)]
pub struct SplineSystem {
    mode: Mode,
    r: u32,
    d: u32,
    num_cells: usize,
    basis: MonomialBasis,
    blocks: Vec<FacetConstraint>,
}

impl SplineSystem {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn smoothness(&self) -> u32 {
        self.r
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    /// Monomial basis of every cell block.
    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn block_size(&self) -> usize {
        self.basis.len()
    }

    pub fn num_unknowns(&self) -> usize {
        self.num_cells * self.block_size()
    }

    pub fn blocks(&self) -> &[FacetConstraint] {
        &self.blocks
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.blocks.iter().flat_map(|b| b.rows.iter())
    }

    pub fn num_rows(&self) -> usize {
        self.blocks.iter().map(|b| b.rows.len()).sum()
    }

    /// Dense constraint matrix; meant for small systems.
    pub fn to_qmatrix(&self) -> QMatrix {
        let mut m = QMatrix::zeros(0, self.num_unknowns());
        for row in self.rows() {
            let mut dense = vec![Rational::zero(); self.num_unknowns()];
            for (c, x) in row {
                dense[*c] = x.clone();
            }
            m.push_row(dense).expect("row length");
        }
        m
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.num_unknowns());
        for row in self.rows() {
            e.insert(row.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn kernel_dim(&self) -> usize {
        self.num_unknowns() - self.rank()
    }
}

/// Constraint rows for one interior facet with form `l`: the coordinates of
/// `f_lo - f_hi` modulo the divisible subspace `l^{r+1} * cofactors`.
fn facet_rows(l: &Poly, r: u32, basis: &MonomialBasis, cofactors: Option<&MonomialBasis>, lo: usize, hi: usize) -> Vec<SparseVec> {
    let n = basis.len();
    let mut div = Echelon::new(n);
    if let Some(cof) = cofactors {
        let power = l.pow(r + 1);
        for mu in cof.monomials() {
            div.insert(power.mul_monomial(mu).to_sparse(basis).expect("product stays in degree d"));
        }
    }
    div.reduce_fully();
    // coordinate j of the normal form of v is v_j - sum_c R[c][j] v_c over pivots c
    let mut per_free: Vec<SparseVec> = vec![Vec::new(); n];
    for c in div.pivots() {
        for (j, x) in &div.pivot_row(c).expect("pivot")[1..] {
            per_free[*j].push((c, -x));
        }
    }
    div.non_pivots()
        .into_iter()
        .map(|j| {
            let mut local = std::mem::take(&mut per_free[j]);
            local.push((j, Rational::one()));
            local.sort_by_key(|e| e.0);
            let mut row: SparseVec = local.iter().map(|(c, x)| (lo * n + c, x.clone())).collect();
            row.extend(local.iter().map(|(c, x)| (hi * n + c, -x)));
            row
        })
        .collect()
}

/// Assembles the smoothness conditions for `S^r_d(Delta)`.
pub fn smoothness_system(mesh: &SimplicialComplex, r: u32, d: u32, mode: Mode) -> Result<SplineSystem, OracleError> {
    mesh.ensure_valid()?;
    let k = mesh.dim();
    let basis = poly_basis(mode, k, d);
    let cofactors = (d > r).then(|| poly_basis(mode, k, d - r - 1));
    let mut blocks = Vec::new();
    for (facet, lo, hi) in mesh.interior_facet_pairs() {
        let l = form_poly(mode, &mesh.facet_form(&facet)?);
        let rows = facet_rows(&l, r, &basis, cofactors.as_ref(), lo, hi);
        blocks.push(FacetConstraint { facet, cells: (lo, hi), rows });
    }
    Ok(SplineSystem { mode, r, d, num_cells: mesh.num_cells(), basis, blocks })
}

/// `dim S^r_d(Delta)` as cells times block size minus the constraint rank.
/// Cone mode goes through [`spline_dim_series`].
pub fn spline_dim(mesh: &SimplicialComplex, r: u32, d: u32, mode: Mode) -> Result<usize, OracleError> {
    match mode {
        Mode::Affine => Ok(smoothness_system(mesh, r, d, mode)?.kernel_dim()),
        Mode::Cone => Ok(spline_dim_series(mesh, r, d, mode)?[d as usize]),
    }
}

/// `dim S^r_d(Delta)` for `d = 0..=d_max`.
///
/// In cone mode the homogenized facet forms are rewritten in a basis of their
/// span (`e` variables); the system is solved there in every degree `t` and
/// each solution is spread over the `c = k+1-e` unused variables:
/// `dim S_d = sum_t dim S'_t * C(d-t+c-1, c-1)`. For a star of an interior
/// vertex `c = 1`. Affine mode always solves the full system.
pub fn spline_dim_series(mesh: &SimplicialComplex, r: u32, d_max: u32, mode: Mode) -> Result<Vec<usize>, OracleError> {
    mesh.ensure_valid()?;
    let k = mesh.dim();
    if mode == Mode::Affine {
        return (0..=d_max).map(|d| Ok(smoothness_system(mesh, r, d, mode)?.kernel_dim())).collect();
    }
    let pairs = mesh.interior_facet_pairs();
    let forms = pairs
        .iter()
        .map(|(f, _, _)| Ok(homogenize(&mesh.facet_form(f)?)))
        .collect::<Result<Vec<_>, OracleError>>()?;
    let cells = mesh.num_cells();
    if forms.is_empty() {
        return Ok((0..=d_max).map(|d| cells * binom_safe(d as i64 + k as i64, k as u64) as usize).collect());
    }
    let (reduced, e) = reduce_forms(&forms, k + 1);
    let c = k + 1 - e;
    if c == 0 {
        return (0..=d_max).map(|d| Ok(smoothness_system(mesh, r, d, mode)?.kernel_dim())).collect();
    }
    let polys: Vec<Poly> = reduced.iter().map(|f| f.to_poly()).collect();
    let small: Vec<usize> = (0..=d_max)
        .map(|t| {
            let basis = MonomialBasis::homogeneous(e, t);
            let cofactors = (t > r).then(|| MonomialBasis::homogeneous(e, t - r - 1));
            let mut ech = Echelon::new(cells * basis.len());
            for ((_, lo, hi), l) in pairs.iter().zip(&polys) {
                for row in facet_rows(l, r, &basis, cofactors.as_ref(), *lo, *hi) {
                    ech.insert(row);
                }
            }
            cells * basis.len() - ech.rank()
        })
        .collect();
    Ok((0..=d_max)
        .map(|d| {
            (0..=d)
                .map(|t| small[t as usize] * binom_safe((d - t) as i64 + c as i64 - 1, c as u64 - 1) as usize)
                .sum()
        })
        .collect())
}

/// One polynomial per cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePoly {
    pub mode: Mode,
    pub degree: u32,
    pub pieces: Vec<Poly>,
}

impl PiecewisePoly {
    /// The same polynomial on every cell.
    pub fn global(mode: Mode, degree: u32, num_cells: usize, p: Poly) -> Self {
        PiecewisePoly { mode, degree, pieces: vec![p; num_cells] }
    }
}

/// Kernel basis of the smoothness system in reduced echelon order.
pub fn spline_basis(mesh: &SimplicialComplex, r: u32, d: u32, mode: Mode) -> Result<Vec<PiecewisePoly>, OracleError> {
    let sys = smoothness_system(mesh, r, d, mode)?;
    let mut e = sys.echelon();
    e.reduce_fully();
    let n = sys.block_size();
    Ok(e.kernel_basis()
        .into_iter()
        .map(|v| {
            let mut coords: Vec<SparseVec> = vec![Vec::new(); sys.num_cells];
            for (c, x) in v {
                coords[c / n].push((c % n, x));
            }
            let pieces = coords
                .iter()
                .map(|cs| Poly::from_coords(&sys.basis, cs.iter().map(|(i, x)| (*i, x))))
                .collect();
            PiecewisePoly { mode, degree: d, pieces }
        })
        .collect())
}

/// Whether `l^{r+1}` divides `f`: with `j` the lead variable of `l` (coefficient 1),
/// substitute `x_j -> x_j - (l - x_j)` so `l` becomes `x_j`, then read off the
/// smallest power of `x_j`.
pub fn divisible_by_power(f: &Poly, l: &Poly, j: usize, m: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    let xj = Poly::var(l.nvars(), j);
    let shift = xj.sub(&l.sub(&xj));
    f.substitute(j, &shift).min_exponent(j).expect("nonzero") >= m
}

/// Checks every interior facet difference for divisibility by `l_tau^{r+1}`.
pub fn is_spline(mesh: &SimplicialComplex, r: u32, f: &PiecewisePoly) -> Result<bool, OracleError> {
    if f.pieces.len() != mesh.num_cells() {
        return Err(OracleError::ShapeMismatch { expected: mesh.num_cells(), found: f.pieces.len() });
    }
    let nvars = match f.mode {
        Mode::Affine => mesh.dim(),
        Mode::Cone => mesh.dim() + 1,
    };
    if let Some((cell, p)) = f.pieces.iter().enumerate().find(|(_, p)| p.nvars() != nvars) {
        return Err(OracleError::VariableMismatch { cell, expected: nvars, found: p.nvars() });
    }
    for (facet, lo, hi) in mesh.interior_facet_pairs() {
        let form = mesh.facet_form(&facet)?;
        let l = form_poly(f.mode, &form);
        let j = match f.mode {
            Mode::Affine => form.lead_index(),
            Mode::Cone => form.lead_index() + 1,
        };
        if !divisible_by_power(&f.pieces[lo].sub(&f.pieces[hi]), &l, j, r + 1) {
            return Ok(false);
        }
    }
    Ok(true)
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
    fn single_simplex_has_no_constraints() {
        let t = SimplicialComplex::standard_simplex(2, 1);
        let s = smoothness_system(&t, 1, 3, Mode::Affine).unwrap();
        assert_eq!(s.num_rows(), 0);
        assert_eq!(spline_dim(&t, 1, 3, Mode::Cone).unwrap(), 10);
    }

    #[test]
    fn two_triangles_system() {
        let m = two_triangles();
        let s = smoothness_system(&m, 1, 2, Mode::Affine).unwrap();
        assert_eq!(s.num_unknowns(), 12);
        assert_eq!(s.to_qmatrix().rank(), 5);
        assert_eq!(s.rank(), 5);
        assert_eq!(spline_dim(&m, 1, 2, Mode::Affine).unwrap(), 7);
        assert_eq!(spline_dim(&m, 1, 2, Mode::Cone).unwrap(), 7);
        // d < r+1 forces equal pieces
        assert_eq!(spline_dim(&m, 3, 2, Mode::Affine).unwrap(), 6);
    }

    #[test]
    fn alfeld_dimension_and_basis() {
        let m = alfeld_t2();
        assert_eq!(spline_dim(&m, 1, 3, Mode::Affine).unwrap(), 12);
        assert_eq!(spline_dim(&m, 1, 3, Mode::Cone).unwrap(), 12);
        for mode in [Mode::Affine, Mode::Cone] {
            let b = spline_basis(&m, 1, 3, mode).unwrap();
            assert_eq!(b.len(), 12);
            for s in &b {
                assert!(is_spline(&m, 1, s).unwrap());
            }
        }
    }

    #[test]
    fn reduced_cone_matches_direct() {
        let m = alfeld_t2();
        for r in 0..3 {
            let series = spline_dim_series(&m, r, 7, Mode::Cone).unwrap();
            for d in 0..=7 {
                let direct = smoothness_system(&m, r, d, Mode::Cone).unwrap().kernel_dim();
                assert_eq!(series[d as usize], direct, "r={r} d={d}");
            }
        }
        let t = two_triangles();
        assert_eq!(spline_dim_series(&t, 1, 4, Mode::Cone).unwrap(), vec![1, 3, 7, 13, 21]);
        let single = SimplicialComplex::standard_simplex(3, 1);
        assert_eq!(spline_dim_series(&single, 1, 3, Mode::Cone).unwrap(), vec![1, 4, 10, 20]);
    }

    #[test]
    fn checker_rejects_broken_pieces() {
        let m = two_triangles();
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let c = PiecewisePoly::global(Mode::Affine, 0, 2, Poly::constant(2, Rational::from_int(3)));
        assert!(is_spline(&m, 4, &c).unwrap());
        // shared edge is x + y = 1
        let l = x.add(&y).sub(&Poly::constant(2, Rational::one()));
        let ok = PiecewisePoly { mode: Mode::Affine, degree: 3, pieces: vec![Poly::zero(2), l.pow(2).mul(&x)] };
        assert!(is_spline(&m, 1, &ok).unwrap());
        assert!(!is_spline(&m, 2, &ok).unwrap());
        let bad = PiecewisePoly { mode: Mode::Affine, degree: 2, pieces: vec![x.clone(), y.clone()] };
        assert!(!is_spline(&m, 0, &bad).unwrap());
        let short = PiecewisePoly { mode: Mode::Affine, degree: 1, pieces: vec![x] };
        assert!(is_spline(&m, 0, &short).is_err());
    }
}
