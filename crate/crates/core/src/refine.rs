//! Single-cell subdivisions: Alfeld, facet and double Alfeld splits and their
//! partial variants, the simple and split predicates, and the dimension
//! additivity check for split subdivisions.

use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::{build_chain_complex, face_ideal, face_ideal_of_points, ideals_equal, AlgebraError};
use crate::formulas::binom_safe;
use crate::mesh::{
    barycenter, barycentric_coords, geometric_contains, hyperplane_through, line_hyperplane_intersection,
    signed_volume, strictly_inside, MeshError, Point, SimplicialComplex, Simplex,
};
use crate::oracle::{spline_dim_series, Mode, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RefineError {
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("cell index {index} out of range ({count} cells)")]
    CellOutOfRange { index: usize, count: usize },
    #[error("facet index {index} out of range (0..={max})")]
    FacetOutOfRange { index: usize, max: usize },
    #[error("point {point} is not strictly inside {face}")]
    NotStrictlyInterior { point: Point, face: String },
    #[error("point {point} is not collinear with {a} and {b}")]
    NotCollinear { point: Point, a: Point, b: Point },
    #[error("expected a single-cell complex, found {0} cells")]
    NotASimplex(usize),
    #[error("subdivision does not cover the cell: {0}")]
    Coverage(String),
    #[error("subdivision is not simple; unmatched interior facets: {}", fmt_faces(.0))]
    NotSimple(Vec<Vec<Point>>),
    #[error("{what}: expected {expected}, found {found}")]
    CountMismatch { what: &'static str, expected: usize, found: usize },
}

fn fmt_points(pts: &[Point]) -> String {
    let parts: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_faces(faces: &[Vec<Point>]) -> String {
    faces.iter().map(|f| fmt_points(f)).collect::<Vec<_>>().join("; ")
}

/// `(Delta, sigma, Delta'', Delta')` plus the faces of the boundary of `Delta''`
/// that are interior in `Delta'` (the faces the split condition looks at).
#[derive(Clone, Debug)]
pub struct SubdivisionRecord {
    pub coarse: SimplicialComplex,
    pub cell: usize,
    pub piece: SimplicialComplex,
    pub fine: SimplicialComplex,
    /// Vertex ids refer to `fine`.
    pub new_boundary_faces: Vec<Simplex>,
    pub new_vertices: Vec<Point>,
}

fn check_cell(mesh: &SimplicialComplex, cell: usize) -> Result<(), RefineError> {
    if cell >= mesh.num_cells() {
        return Err(RefineError::CellOutOfRange { index: cell, count: mesh.num_cells() });
    }
    Ok(())
}

fn same_points(a: &[Point], b: &[Point]) -> bool {
    let sa: HashSet<&Point> = a.iter().collect();
    let sb: HashSet<&Point> = b.iter().collect();
    sa == sb
}

/// Boundary facets of a complex as point sets.
fn boundary_point_sets(mesh: &SimplicialComplex) -> Vec<Vec<Point>> {
    mesh.boundary_facets().iter().map(|f| mesh.points(f)).collect()
}

fn check_coverage(mesh: &SimplicialComplex, cell: usize, piece: &SimplicialComplex) -> Result<(), RefineError> {
    if piece.dim() != mesh.dim() {
        return Err(MeshError::DimensionMismatch { expected: mesh.dim(), found: piece.dim() }.into());
    }
    piece.ensure_valid()?;
    let sigma = mesh.points(mesh.cell(cell));
    for p in piece.vertices() {
        if !geometric_contains(std::slice::from_ref(p), &sigma)? {
            return Err(RefineError::Coverage(format!("vertex {p} lies outside the cell")));
        }
    }
    let vol = signed_volume(&sigma)?.abs();
    if piece.volume() != vol {
        return Err(RefineError::Coverage(format!("volume {} differs from cell volume {vol}", piece.volume())));
    }
    Ok(())
}

/// Facets of `sigma` that are interior in `mesh` but do not survive in the boundary
/// of `piece`, plus boundary facets of `piece` lying in such facets.
fn simplicity_violations(mesh: &SimplicialComplex, cell: usize, piece: &SimplicialComplex) -> Result<Vec<Vec<Point>>, RefineError> {
    let sigma = mesh.cell(cell);
    let piece_boundary = boundary_point_sets(piece);
    let mut bad = Vec::new();
    for j in 0..sigma.len() {
        let f = sigma.omit(j);
        let fp = mesh.points(&f);
        if mesh.cells_of_facet(&f).len() == 1 {
            continue;
        }
        if !piece_boundary.iter().any(|g| same_points(g, &fp)) {
            bad.push(fp);
        }
    }
    Ok(bad)
}

/// `boundary(sigma) = boundary(Delta'')` away from the boundary of `Delta`:
/// every facet of `sigma` shared with another cell is kept whole in `Delta''`.
pub fn is_simple(mesh: &SimplicialComplex, cell: usize, piece: &SimplicialComplex) -> Result<bool, RefineError> {
    check_cell(mesh, cell)?;
    check_coverage(mesh, cell, piece)?;
    Ok(simplicity_violations(mesh, cell, piece)?.is_empty())
}

/// Replaces cell `cell` of `mesh` by `piece`.
pub fn replace_cell(mesh: &SimplicialComplex, cell: usize, piece: &SimplicialComplex) -> Result<SubdivisionRecord, RefineError> {
    check_cell(mesh, cell)?;
    check_coverage(mesh, cell, piece)?;
    let bad = simplicity_violations(mesh, cell, piece)?;
    if !bad.is_empty() {
        return Err(RefineError::NotSimple(bad));
    }
    let mut vertices: Vec<Point> = mesh.vertices().to_vec();
    let old: HashSet<&Point> = mesh.vertices().iter().collect();
    let new_vertices: Vec<Point> = piece.vertices().iter().filter(|p| !old.contains(p)).cloned().collect();
    let offset = vertices.len();
    vertices.extend(piece.vertices().iter().cloned());
    let mut cells: Vec<Vec<usize>> = mesh
        .cells()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != cell)
        .map(|(_, c)| c.vertices().to_vec())
        .collect();
    cells.extend(piece.cells().iter().map(|c| c.vertices().iter().map(|v| v + offset).collect()));
    let fine = SimplicialComplex::new(mesh.dim(), vertices, cells)?;
    fine.ensure_valid()?;

    // faces of the boundary of the piece, in fine ids, that are interior in fine
    let mut piece_boundary_faces: HashSet<Simplex> = HashSet::new();
    for b in piece.boundary_facets() {
        let ids: Vec<usize> = b
            .vertices()
            .iter()
            .map(|&v| fine.vertex_index(piece.vertex(v)).expect("piece vertex present"))
            .collect();
        let s = Simplex::new(ids);
        for size in 1..=s.len() {
            piece_boundary_faces.extend(s.subfaces(size));
        }
    }
    let mut new_boundary_faces = Vec::new();
    for i in 0..mesh.dim() {
        for f in fine.interior_faces(i)? {
            if piece_boundary_faces.contains(f) {
                new_boundary_faces.push(f.clone());
            }
        }
    }
    Ok(SubdivisionRecord { coarse: mesh.clone(), cell, piece: piece.clone(), fine, new_boundary_faces, new_vertices })
}

/// The cone from `apex` over the Alfeld split of the face `base` at `center`.
/// With `apex = None` this is the Alfeld split of the full-dimensional `base`.
fn coned_alfeld(dim: usize, base: &[Point], center: &Point, apex: Option<&Point>) -> Result<SimplicialComplex, MeshError> {
    let mut vertices: Vec<Point> = base.to_vec();
    vertices.push(center.clone());
    let c = base.len();
    let mut extra = vec![c];
    if let Some(a) = apex {
        vertices.push(a.clone());
        extra.push(c + 1);
    }
    let cells = (0..base.len())
        .map(|j| (0..base.len()).filter(|&i| i != j).chain(extra.iter().copied()).collect())
        .collect();
    SimplicialComplex::new(dim, vertices, cells)
}

/// Alfeld split of `mesh`'s cell `cell` at `u` (default: its barycenter).
pub fn alfeld(mesh: &SimplicialComplex, cell: usize, u: Option<Point>) -> Result<SubdivisionRecord, RefineError> {
    check_cell(mesh, cell)?;
    let sigma = mesh.points(mesh.cell(cell));
    let u = u.unwrap_or_else(|| barycenter(&sigma));
    if !strictly_inside(&sigma, &u)? {
        return Err(RefineError::NotStrictlyInterior { point: u, face: fmt_points(&sigma) });
    }
    let piece = coned_alfeld(mesh.dim(), &sigma, &u, None)?;
    replace_cell(mesh, cell, &piece)
}

/// Options shared by the facet and double Alfeld constructors.
#[derive(Clone, Debug, Default)]
pub struct SplitOptions {
    /// Interior point of `T_k`; barycenter when `None`.
    pub u: Option<Point>,
    /// Facet indices to split (facet `i` is opposite vertex `i`); all when `None`.
    pub subset: Option<Vec<usize>>,
    /// Custom points `u_i`, indexed by facet. Computed when `None`.
    pub points: Option<Vec<Point>>,
    /// Reject custom `u_i` that are not collinear with `v_i` and `u`.
    pub skip_collinearity: bool,
}

fn collinear(p: &Point, a: &Point, b: &Point) -> bool {
    let u = a.sub(p);
    let v = b.sub(p);
    // all 2x2 minors vanish
    (0..u.len()).all(|i| (i + 1..u.len()).all(|j| (&u[i] * &v[j] - &u[j] * &v[i]).is_zero()))
}

struct Start {
    simplex: Vec<Point>,
    u: Point,
    subset: Vec<usize>,
    first: SubdivisionRecord,
}

fn start(tk: &SimplicialComplex, opts: &SplitOptions) -> Result<Start, RefineError> {
    if tk.num_cells() != 1 {
        return Err(RefineError::NotASimplex(tk.num_cells()));
    }
    tk.ensure_valid()?;
    let k = tk.dim();
    let simplex = tk.points(tk.cell(0));
    let subset = opts.subset.clone().unwrap_or_else(|| (0..=k).collect());
    let mut seen = HashSet::new();
    for &i in &subset {
        if i > k {
            return Err(RefineError::FacetOutOfRange { index: i, max: k });
        }
        if !seen.insert(i) {
            return Err(RefineError::FacetOutOfRange { index: i, max: k });
        }
    }
    if let Some(pts) = &opts.points {
        if pts.len() != k + 1 {
            return Err(RefineError::CountMismatch { what: "custom points", expected: k + 1, found: pts.len() });
        }
    }
    let first = alfeld(tk, 0, opts.u.clone())?;
    let u = first.new_vertices[0].clone();
    let mut subset = subset;
    subset.sort_unstable();
    Ok(Start { simplex, u, subset, first })
}

/// Index of the cell of `mesh` spanned by exactly the given points.
fn find_cell(mesh: &SimplicialComplex, pts: &[Point]) -> Option<usize> {
    (0..mesh.num_cells()).find(|&c| same_points(&mesh.points(mesh.cell(c)), pts))
}

fn facet_points(simplex: &[Point], i: usize) -> Vec<Point> {
    simplex.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect()
}

fn strictly_inside_face(face: &[Point], p: &Point) -> Result<bool, MeshError> {
    Ok(matches!(barycentric_coords(face, p)?, Some(l) if l.iter().all(|x| x.is_positive())))
}

/// Facet split: Alfeld split at `u`, then each selected subsimplex `[u, F_i]`
/// is replaced by the cone from `u` over the Alfeld split of `F_i` at
/// `u_i = line(v_i, u) ∩ aff(F_i)`. Returns the record of every step.
pub fn facet_split(tk: &SimplicialComplex, opts: &SplitOptions) -> Result<Vec<SubdivisionRecord>, RefineError> {
    let Start { simplex, u, subset, first } = start(tk, opts)?;
    let k = tk.dim();
    let mut records = vec![first];
    for &i in &subset {
        let face = facet_points(&simplex, i);
        let ui = match &opts.points {
            Some(pts) => {
                let p = pts[i].clone();
                if !opts.skip_collinearity && !collinear(&p, &simplex[i], &u) {
                    return Err(RefineError::NotCollinear { point: p, a: simplex[i].clone(), b: u.clone() });
                }
                p
            }
            None => line_hyperplane_intersection(&simplex[i], &u, &hyperplane_through(&face)?)?,
        };
        if !strictly_inside_face(&face, &ui)? {
            return Err(RefineError::NotStrictlyInterior { point: ui, face: fmt_points(&face) });
        }
        let current = &records.last().expect("nonempty").fine;
        let mut target = face.clone();
        target.push(u.clone());
        let cell = find_cell(current, &target).expect("subsimplex [u, F_i] present");
        let piece = coned_alfeld(k, &face, &ui, Some(&u))?;
        let mut rec = replace_cell(current, cell, &piece)?;
        rec.new_vertices = vec![ui];
        records.push(rec);
    }
    if subset.len() == k + 1 {
        let fine = &records.last().expect("nonempty").fine;
        expect_counts(fine, k * k + k, 1, 2 * k + 2)?;
    }
    Ok(records)
}

/// Double Alfeld split: Alfeld split at `u`, then each selected subsimplex
/// `T^i = [u, F_i]` is Alfeld split at `u_i` (default: its barycenter, which lies
/// on the line through `u` and `v_i`).
pub fn double_alfeld(tk: &SimplicialComplex, opts: &SplitOptions) -> Result<Vec<SubdivisionRecord>, RefineError> {
    let Start { simplex, u, subset, first } = start(tk, opts)?;
    let k = tk.dim();
    let mut records = vec![first];
    for &i in &subset {
        let mut sub = facet_points(&simplex, i);
        sub.push(u.clone());
        let ui = match &opts.points {
            Some(pts) => pts[i].clone(),
            None => {
                let b = barycenter(&sub);
                // ((k+2) u - v_i) / (k+1)
                let kk = crate::linalg::Rational::from(k + 1);
                let expected = Point::new(
                    u.coords()
                        .iter()
                        .zip(simplex[i].coords())
                        .map(|(x, v)| (&(x * &crate::linalg::Rational::from(k + 2)) - v) / &kk)
                        .collect(),
                );
                assert_eq!(b, expected, "barycenter of [u, F_i] off the line through u and v_i");
                b
            }
        };
        if !opts.skip_collinearity && !collinear(&ui, &simplex[i], &u) {
            return Err(RefineError::NotCollinear { point: ui, a: simplex[i].clone(), b: u.clone() });
        }
        let current = &records.last().expect("nonempty").fine;
        let cell = find_cell(current, &sub).expect("subsimplex [u, F_i] present");
        records.push(alfeld(current, cell, Some(ui))?);
    }
    if subset.len() == k + 1 {
        let fine = &records.last().expect("nonempty").fine;
        expect_counts(fine, (k + 1) * (k + 1), k + 2, k + 1)?;
    }
    Ok(records)
}

fn expect_counts(mesh: &SimplicialComplex, cells: usize, interior: usize, boundary: usize) -> Result<(), RefineError> {
    let found = [mesh.num_cells(), mesh.interior_vertices().len(), mesh.boundary_vertex_count()];
    for ((what, expected), found) in [("cells", cells), ("interior vertices", interior), ("boundary vertices", boundary)]
        .into_iter()
        .zip(found)
    {
        if expected != found {
            return Err(RefineError::CountMismatch { what, expected, found });
        }
    }
    Ok(())
}

/// A face where the fine and coarse ideals differ.
#[derive(Clone, Debug, Serialize)]
pub struct SplitWitness {
    pub face: Vec<Point>,
    pub fine_forms: usize,
    pub coarse_forms: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitReport {
    pub split: bool,
    pub checked_faces: usize,
    pub witnesses: Vec<SplitWitness>,
}

/// Compares `J(Delta')_gamma` with `J(Delta)_gamma` on every face of the boundary
/// of `Delta''` that is not on the boundary of `Delta'`.
pub fn is_split(rec: &SubdivisionRecord, r: u32) -> Result<SplitReport, RefineError> {
    let mut witnesses = Vec::new();
    for gamma in &rec.new_boundary_faces {
        let pts = rec.fine.points(gamma);
        let fine = face_ideal(&rec.fine, gamma, r)?;
        let coarse = face_ideal_of_points(&rec.coarse, &pts, r)?;
        if !ideals_equal(&fine, &coarse)? {
            witnesses.push(SplitWitness { face: pts, fine_forms: fine.forms().len(), coarse_forms: coarse.forms().len() });
        }
    }
    Ok(SplitReport { split: witnesses.is_empty(), checked_faces: rec.new_boundary_faces.len(), witnesses })
}

#[derive(Clone, Debug, Serialize)]
pub struct AdditivityRow {
    pub d: u32,
    pub fine: usize,
    pub coarse: usize,
    pub piece: usize,
    pub polynomials: usize,
    /// `dim H_{k-1}(R/J(Delta))_d`.
    pub coarse_h_km1: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdditivityReport {
    pub r: u32,
    pub split: SplitReport,
    pub rows: Vec<AdditivityRow>,
}

impl AdditivityReport {
    /// Split, `H_{k-1}` vanishing and the identity in every tested degree.
    pub fn passed(&self) -> bool {
        self.split.split && self.rows.iter().all(|r| r.holds && r.coarse_h_km1 == 0)
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.split.split {
            out.push(format!("not split at r={}: {} witness faces", self.r, self.split.witnesses.len()));
        }
        for row in &self.rows {
            if row.coarse_h_km1 != 0 {
                out.push(format!("d={}: H_(k-1) of the coarse complex has dimension {}", row.d, row.coarse_h_km1));
            }
            if !row.holds {
                out.push(format!(
                    "d={}: {} != {} + {} - {}",
                    row.d, row.fine, row.coarse, row.piece, row.polynomials
                ));
            }
        }
        out
    }
}

/// Checks `dim S(Delta') = dim S(Delta) + dim S(Delta'') - C(d+k, k)` with the oracle,
/// along with the hypotheses (split, vanishing `H_{k-1}` of the coarse complex).
pub fn verify_additivity(rec: &SubdivisionRecord, r: u32, degrees: impl IntoIterator<Item = u32>) -> Result<AdditivityReport, RefineError> {
    let split = is_split(rec, r)?;
    let degrees: Vec<u32> = degrees.into_iter().collect();
    let d_max = degrees.iter().copied().max().unwrap_or(0);
    let fine = spline_dim_series(&rec.fine, r, d_max, Mode::Cone)?;
    let coarse = spline_dim_series(&rec.coarse, r, d_max, Mode::Cone)?;
    let piece = spline_dim_series(&rec.piece, r, d_max, Mode::Cone)?;
    let homology = build_chain_complex(&rec.coarse, r)?.homology_series(d_max);
    let k = rec.coarse.dim();
    let rows = degrees
        .into_iter()
        .map(|d| additivity_row(k, d, fine[d as usize], coarse[d as usize], piece[d as usize], homology[d as usize][k - 1]))
        .collect();
    Ok(AdditivityReport { r, split, rows })
}

pub fn additivity_row(k: usize, d: u32, fine: usize, coarse: usize, piece: usize, coarse_h_km1: usize) -> AdditivityRow {
    let polynomials = binom_safe(d as i64 + k as i64, k as u64) as usize;
    AdditivityRow { d, fine, coarse, piece, polynomials, coarse_h_km1, holds: fine + polynomials == coarse + piece }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    fn t(k: usize) -> SimplicialComplex {
        SimplicialComplex::standard_simplex(k, k as i64 + 1)
    }

    #[test]
    fn alfeld_counts() {
        let rec = alfeld(&t(2), 0, Some(Point::from_ints(&[1, 1]))).unwrap();
        assert_eq!(rec.fine.num_cells(), 3);
        assert_eq!(rec.fine.faces(1).unwrap().len(), 6);
        assert_eq!(rec.fine.interior_vertices(), vec![Point::from_ints(&[1, 1])]);
        assert_eq!(alfeld(&t(3), 0, None).unwrap().fine.num_cells(), 4);
        assert!(matches!(alfeld(&t(2), 0, Some(Point::from_ints(&[0, 1]))), Err(RefineError::NotStrictlyInterior { .. })));
        // the split of the single cell leaves the interior vertex and spokes as new interior faces
        assert_eq!(rec.new_boundary_faces.len(), 0);
    }

    #[test]
    fn facet_split_counts() {
        let f2 = facet_split(&t(2), &SplitOptions::default()).unwrap();
        assert_eq!(f2.len(), 4);
        assert_eq!(f2.last().unwrap().fine.num_cells(), 6);
        let f3 = facet_split(&t(3), &SplitOptions { subset: Some(vec![0]), ..Default::default() }).unwrap();
        assert_eq!(f3.last().unwrap().fine.num_cells(), 6);
        let full = facet_split(&t(3), &SplitOptions::default()).unwrap();
        assert_eq!(full.last().unwrap().fine.num_cells(), 12);
        // default u_i is the facet barycenter
        let s = t(3);
        let pts = s.points(s.cell(0));
        assert_eq!(full[1].new_vertices[0], barycenter(&facet_points(&pts, 0)));
    }

    #[test]
    fn double_alfeld_counts() {
        let aa2 = double_alfeld(&t(2), &SplitOptions::default()).unwrap();
        assert_eq!(aa2.last().unwrap().fine.num_cells(), 9);
        let aa3 = double_alfeld(&t(3), &SplitOptions { subset: Some(vec![0]), ..Default::default() }).unwrap();
        assert_eq!(aa3.last().unwrap().fine.num_cells(), 7);
        let bad = SplitOptions {
            points: Some(vec![Point::new(vec![Rational::new(6, 5), Rational::new(7, 5)]); 3]),
            ..Default::default()
        };
        assert!(matches!(double_alfeld(&t(2), &bad), Err(RefineError::NotCollinear { .. })));
    }

    #[test]
    fn simplicity() {
        let a = alfeld(&t(2), 0, None).unwrap();
        assert!(is_simple(&a.coarse, 0, &a.piece).unwrap());
        // bisecting an edge shared with another cell
        let v = vec![Point::from_ints(&[0, 0]), Point::from_ints(&[2, 0]), Point::from_ints(&[0, 2]), Point::from_ints(&[2, 2])];
        let two = SimplicialComplex::new(2, v, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let piece = SimplicialComplex::new(
            2,
            vec![Point::from_ints(&[0, 0]), Point::from_ints(&[2, 0]), Point::from_ints(&[0, 2]), Point::from_ints(&[1, 1])],
            vec![vec![0, 1, 3], vec![0, 2, 3]],
        )
        .unwrap();
        assert!(!is_simple(&two, 0, &piece).unwrap());
        assert!(matches!(replace_cell(&two, 0, &piece), Err(RefineError::NotSimple(_))));
    }
}

#[cfg(test)]
mod split_tests {
    use super::*;
    use crate::fixtures;

    fn witness_set(rep: &SplitReport) -> Vec<Point> {
        let mut v: Vec<Point> = rep.witnesses.iter().flat_map(|w| w.face.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    #[test]
    fn interior_triangle_split() {
        let aligned = fixtures::interior_triangle_split(fixtures::aligned_point()).unwrap();
        let generic = fixtures::interior_triangle_split(fixtures::generic_point()).unwrap();
        assert_eq!(aligned.new_boundary_faces.len(), 6);
        for r in 1..=3 {
            assert!(is_split(&aligned, r).unwrap().split, "aligned r={r}");
        }
        assert!(is_split(&generic, 1).unwrap().split);
        let r2 = is_split(&generic, 2).unwrap();
        assert!(!r2.split);
        assert_eq!(witness_set(&r2), vec![Point::from_ints(&[1, 0])]);
        let r3 = is_split(&generic, 3).unwrap();
        assert_eq!(witness_set(&r3), vec![Point::from_ints(&[-1, -1]), Point::from_ints(&[1, 0])]);
    }

    #[test]
    fn additivity_small() {
        let a2 = fixtures::alfeld_split(2);
        let step = alfeld(&a2, 0, None).unwrap();
        let rep = verify_additivity(&step, 1, 0..=6).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        let single = alfeld(&fixtures::simplex(2), 0, None).unwrap();
        assert!(verify_additivity(&single, 2, 0..=6).unwrap().passed());
    }
}
