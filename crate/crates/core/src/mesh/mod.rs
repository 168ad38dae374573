//! Simplicial complexes in `R^k` with exact rational coordinates.
//!
//! A [`SimplicialComplex`] owns its vertices and maximal cells and derives the
//! face lattice, the boundary facets and the interior faces on construction.
//! Geometric validity (nondegenerate cells, proper pairwise intersections,
//! pseudo-manifold facet counts) is checked on demand by
//! [`SimplicialComplex::validate`] and cached.
//!
//! Topological ball recognition is not attempted: a valid complex here is a
//! pure pseudo-manifold with boundary whose cells meet properly.

mod geometry;
mod lp;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

pub use geometry::{
    affinely_independent, barycenter, barycentric_coords, geometric_contains, hyperplane_through,
    line_hyperplane_intersection, signed_volume, strictly_inside, AffineForm, Point,
};

use crate::linalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MeshError {
    #[error("expected ambient dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("expected {expected} vertices, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("vertex index {index} out of range ({count} vertices)")]
    VertexOutOfRange { index: usize, count: usize },
    #[error("cell {cell} repeats a vertex")]
    RepeatedVertex { cell: usize },
    #[error("face dimension {dim} out of range 0..={max}")]
    FaceDimensionOutOfRange { dim: usize, max: usize },
    #[error("degenerate simplex (affinely dependent vertices)")]
    DegenerateSimplex,
    #[error("affine form is identically zero")]
    ZeroForm,
    #[error("line is parallel to the hyperplane")]
    Parallel,
    #[error("line through two equal points")]
    DegenerateLine,
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("invalid complex: {0}")]
    Invalid(ValidationReport),
}

/// A simplex given by sorted, distinct vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Simplex(ids)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension; the empty simplex is reported as dimension 0 as well.
    pub fn dim(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Drops the `j`-th vertex.
    pub fn omit(&self, j: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(j);
        Simplex(v)
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }

    /// All faces with `size` vertices, in lexicographic order.
    pub fn subfaces(&self, size: usize) -> Vec<Simplex> {
        fn walk(src: &[usize], start: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Simplex>) {
            if cur.len() == size {
                out.push(Simplex(cur.clone()));
                return;
            }
            let needed = size - cur.len();
            for i in start..=src.len().saturating_sub(needed) {
                if i >= src.len() {
                    break;
                }
                cur.push(src[i]);
                walk(src, i + 1, size, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if size <= self.0.len() {
            walk(&self.0, 0, size, &mut Vec::with_capacity(size), &mut out);
        }
        out
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Empty,
    NonPure { cell: usize, vertex_count: usize },
    DegenerateCell { cell: usize },
    DuplicateCell { first: usize, second: usize },
    ImproperIntersection { first: usize, second: usize },
    OverSharedFacet { facet: Simplex, cells: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "complex has no cells"),
            Violation::NonPure { cell, vertex_count } => {
                write!(f, "non-pure: cell {cell} has {vertex_count} vertices")
            }
            Violation::DegenerateCell { cell } => write!(f, "degenerate cell {cell} (zero volume)"),
            Violation::DuplicateCell { first, second } => write!(f, "cells {first} and {second} coincide"),
            Violation::ImproperIntersection { first, second } => {
                write!(f, "improper intersection between cells {first} and {second}")
            }
            Violation::OverSharedFacet { facet, cells } => {
                write!(f, "facet {facet} shared by {} cells {cells:?}", cells.len())
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// A pure `k`-dimensional simplicial complex in `R^k`.
#[derive(Clone)]
pub struct SimplicialComplex {
    dim: usize,
    vertices: Vec<Point>,
    cells: Vec<Simplex>,
    faces: Vec<Vec<Simplex>>,
    facet_cells: BTreeMap<Simplex, Vec<usize>>,
    boundary_facets: Vec<Simplex>,
    interior: Vec<Vec<Simplex>>,
    validation: OnceLock<ValidationReport>,
}

impl SimplicialComplex {
    /// Builds the complex and its face lattice. Vertices with identical
    /// coordinates are merged; geometric validity is not checked here.
    pub fn new(dim: usize, vertices: Vec<Point>, cells: Vec<Vec<usize>>) -> Result<Self, MeshError> {
        if dim == 0 {
            return Err(MeshError::ZeroDimension);
        }
        if let Some(p) = vertices.iter().find(|p| p.dim() != dim) {
            return Err(MeshError::DimensionMismatch { expected: dim, found: p.dim() });
        }
        let mut unique: Vec<Point> = Vec::new();
        let mut seen: HashMap<Point, usize> = HashMap::new();
        let remap: Vec<usize> = vertices
            .into_iter()
            .map(|p| {
                *seen.entry(p.clone()).or_insert_with(|| {
                    unique.push(p);
                    unique.len() - 1
                })
            })
            .collect();
        let mut simplices = Vec::with_capacity(cells.len());
        for (ci, cell) in cells.into_iter().enumerate() {
            let mut ids = Vec::with_capacity(cell.len());
            for v in cell {
                let &m = remap.get(v).ok_or(MeshError::VertexOutOfRange { index: v, count: remap.len() })?;
                ids.push(m);
            }
            let s = Simplex::new(ids.clone());
            if s.len() != ids.len() {
                return Err(MeshError::RepeatedVertex { cell: ci });
            }
            simplices.push(s);
        }
        Ok(Self::assemble(dim, unique, simplices))
    }

    fn assemble(dim: usize, vertices: Vec<Point>, cells: Vec<Simplex>) -> Self {
        let mut face_sets: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); dim + 1];
        let mut facet_cells: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
        for (ci, cell) in cells.iter().enumerate() {
            for i in 0..=dim.min(cell.dim()) {
                face_sets[i].extend(cell.subfaces(i + 1));
            }
            if cell.len() == dim + 1 {
                for j in 0..cell.len() {
                    facet_cells.entry(cell.omit(j)).or_default().push(ci);
                }
            }
        }
        let faces: Vec<Vec<Simplex>> = face_sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let boundary_facets: Vec<Simplex> = facet_cells
            .iter()
            .filter(|(_, cs)| cs.len() == 1)
            .map(|(f, _)| f.clone())
            .collect();
        let mut me = SimplicialComplex {
            dim,
            vertices,
            cells,
            faces,
            facet_cells,
            boundary_facets,
            interior: Vec::new(),
            validation: OnceLock::new(),
        };
        me.interior = (0..=dim)
            .map(|i| {
                if i == dim {
                    me.cells.clone()
                } else {
                    me.faces[i].iter().filter(|f| !me.on_boundary(f)).cloned().collect()
                }
            })
            .collect();
        me
    }

    /// A face lies on the boundary iff it is contained (geometrically) in a boundary facet.
    fn on_boundary(&self, face: &Simplex) -> bool {
        let pts = self.points(face);
        self.boundary_facets.iter().any(|b| {
            face.is_face_of(b) || geometric_contains(&pts, &self.points(b)).unwrap_or(false)
        })
    }

    /// The single-cell complex on the given vertices.
    pub fn simplex(vertices: Vec<Point>) -> Result<Self, MeshError> {
        let dim = vertices.first().map(Point::dim).ok_or(MeshError::ZeroDimension)?;
        let n = vertices.len();
        Self::new(dim, vertices, vec![(0..n).collect()])
    }

    /// Standard simplex `T_k`: the origin and `scale * e_i`.
    pub fn standard_simplex(dim: usize, scale: i64) -> Self {
        let mut vertices = vec![Point(vec![Rational::zero(); dim])];
        for i in 0..dim {
            let mut c = vec![Rational::zero(); dim];
            c[i] = Rational::from_int(scale);
            vertices.push(Point(c));
        }
        Self::simplex(vertices).expect("standard simplex is well formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, p: &Point) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    pub fn cells(&self) -> &[Simplex] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &Simplex {
        &self.cells[i]
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn points(&self, s: &Simplex) -> Vec<Point> {
        s.vertices().iter().map(|&v| self.vertices[v].clone()).collect()
    }

    fn check_face_dim(&self, i: usize) -> Result<(), MeshError> {
        if i > self.dim {
            Err(MeshError::FaceDimensionOutOfRange { dim: i, max: self.dim })
        } else {
            Ok(())
        }
    }

    /// All `i`-dimensional faces, sorted.
    pub fn faces(&self, i: usize) -> Result<&[Simplex], MeshError> {
        self.check_face_dim(i)?;
        Ok(&self.faces[i])
    }

    /// Interior `i`-faces; for `i = k` these are all cells (in cell order).
    pub fn interior_faces(&self, i: usize) -> Result<&[Simplex], MeshError> {
        self.check_face_dim(i)?;
        Ok(&self.interior[i])
    }

    pub fn boundary_facets(&self) -> &[Simplex] {
        &self.boundary_facets
    }

    /// Cells containing the given `(k-1)`-face.
    pub fn cells_of_facet(&self, facet: &Simplex) -> &[usize] {
        self.facet_cells.get(facet).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Interior facets with their two cells, lower cell index first.
    pub fn interior_facet_pairs(&self) -> Vec<(Simplex, usize, usize)> {
        self.facet_cells
            .iter()
            .filter(|(_, cs)| cs.len() == 2)
            .map(|(f, cs)| (f.clone(), cs[0].min(cs[1]), cs[0].max(cs[1])))
            .collect()
    }

    /// Interior vertices as points.
    pub fn interior_vertices(&self) -> Vec<Point> {
        self.interior[0].iter().map(|s| self.vertices[s.vertices()[0]].clone()).collect()
    }

    pub fn boundary_vertex_count(&self) -> usize {
        self.faces[0].len() - self.interior[0].len()
    }

    /// Canonical affine form of the hyperplane spanned by a `(k-1)`-face.
    pub fn facet_form(&self, facet: &Simplex) -> Result<AffineForm, MeshError> {
        if facet.len() != self.dim {
            return Err(MeshError::WrongArity { expected: self.dim, found: facet.len() });
        }
        if let Some(&v) = facet.vertices().iter().find(|&&v| v >= self.vertices.len()) {
            return Err(MeshError::VertexOutOfRange { index: v, count: self.vertices.len() });
        }
        hyperplane_through(&self.points(facet))
    }

    /// Sum of absolute cell volumes (times `k!`).
    pub fn volume(&self) -> Rational {
        self.cells
            .iter()
            .filter_map(|c| signed_volume(&self.points(c)).ok())
            .map(|v| v.abs())
            .sum()
    }

    pub fn validate(&self) -> &ValidationReport {
        self.validation.get_or_init(|| self.compute_validation())
    }

    pub fn ensure_valid(&self) -> Result<(), MeshError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(MeshError::Invalid(report.clone()))
        }
    }

    fn compute_validation(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.cells.is_empty() {
            violations.push(Violation::Empty);
        }
        let mut well_formed = vec![true; self.cells.len()];
        for (ci, cell) in self.cells.iter().enumerate() {
            if cell.len() != self.dim + 1 {
                violations.push(Violation::NonPure { cell: ci, vertex_count: cell.len() });
                well_formed[ci] = false;
            } else if signed_volume(&self.points(cell)).map(|v| v.is_zero()).unwrap_or(true) {
                violations.push(Violation::DegenerateCell { cell: ci });
                well_formed[ci] = false;
            }
        }
        for a in 0..self.cells.len() {
            for b in a + 1..self.cells.len() {
                if !(well_formed[a] && well_formed[b]) {
                    continue;
                }
                if self.cells[a] == self.cells[b] {
                    violations.push(Violation::DuplicateCell { first: a, second: b });
                } else if !self.meet_properly(a, b) {
                    violations.push(Violation::ImproperIntersection { first: a, second: b });
                }
            }
        }
        for (facet, cs) in &self.facet_cells {
            if cs.len() > 2 {
                violations.push(Violation::OverSharedFacet { facet: facet.clone(), cells: cs.clone() });
            }
        }
        ValidationReport { violations }
    }

    /// Two full-dimensional cells meet properly iff every common point lies in
    /// the hull of their shared vertices, i.e. no point of the intersection puts
    /// positive barycentric weight (in the first cell) on an unshared vertex.
    /// Decided as an exact LP feasibility problem.
    fn meet_properly(&self, a: usize, b: usize) -> bool {
        let pa = self.points(&self.cells[a]);
        let pb = self.points(&self.cells[b]);
        let disjoint_boxes = (0..self.dim).any(|c| {
            let (amin, amax) = min_max(pa.iter().map(|p| &p.0[c]));
            let (bmin, bmax) = min_max(pb.iter().map(|p| &p.0[c]));
            amax < bmin || bmax < amin
        });
        if disjoint_boxes {
            return true;
        }
        let shared: Vec<bool> = self.cells[a]
            .vertices()
            .iter()
            .map(|v| self.cells[b].vertices().contains(v))
            .collect();
        // unknowns: lambda (na), mu (nb); rows: coordinates, weight balance, unshared mass = 1
        let (na, nb) = (pa.len(), pb.len());
        let mut rows = Vec::with_capacity(self.dim + 2);
        let mut rhs = Vec::with_capacity(self.dim + 2);
        for c in 0..self.dim {
            let mut r: Vec<Rational> = pa.iter().map(|p| p.0[c].clone()).collect();
            r.extend(pb.iter().map(|p| -&p.0[c]));
            rows.push(r);
            rhs.push(Rational::zero());
        }
        let mut r = vec![Rational::one(); na];
        r.extend(std::iter::repeat(-Rational::one()).take(nb));
        rows.push(r);
        rhs.push(Rational::zero());
        let mut r: Vec<Rational> =
            shared.iter().map(|&s| if s { Rational::zero() } else { Rational::one() }).collect();
        r.extend(std::iter::repeat(Rational::zero()).take(nb));
        rows.push(r);
        rhs.push(Rational::one());
        !lp::nonneg_feasible(&rows, &rhs)
    }

    /// Same complex with vertices sorted by coordinates and cells sorted, unused
    /// vertices dropped.
    pub fn canonical(&self) -> SimplicialComplex {
        let mut used: Vec<usize> = self.faces[0].iter().map(|s| s.vertices()[0]).collect();
        used.sort_by(|&a, &b| self.vertices[a].cmp(&self.vertices[b]));
        let mut new_index = vec![usize::MAX; self.vertices.len()];
        for (n, &old) in used.iter().enumerate() {
            new_index[old] = n;
        }
        let vertices = used.iter().map(|&i| self.vertices[i].clone()).collect();
        let mut cells: Vec<Simplex> = self
            .cells
            .iter()
            .map(|c| Simplex::new(c.vertices().iter().map(|&v| new_index[v]).collect()))
            .collect();
        cells.sort();
        Self::assemble(self.dim, vertices, cells)
    }
}

fn min_max<'a>(mut it: impl Iterator<Item = &'a Rational>) -> (&'a Rational, &'a Rational) {
    let first = it.next().expect("nonempty");
    it.fold((first, first), |(lo, hi), x| (if x < lo { x } else { lo }, if x > hi { x } else { hi }))
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices && self.cells == other.cells
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("dim", &self.dim)
            .field("vertices", &self.vertices)
            .field("cells", &self.cells)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(c: &[&[i64]]) -> Vec<Point> {
        c.iter().map(|x| Point::from_ints(x)).collect()
    }

    fn two_triangles() -> SimplicialComplex {
        SimplicialComplex::new(2, pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]), vec![vec![0, 1, 2], vec![1, 2, 3]])
            .unwrap()
    }

    #[test]
    fn subfaces_enumerate_combinations() {
        let s = Simplex::new(vec![4, 1, 7, 2]);
        assert_eq!(s.vertices(), &[1, 2, 4, 7]);
        assert_eq!(s.subfaces(2).len(), 6);
        assert_eq!(s.subfaces(4), vec![s.clone()]);
        assert_eq!(s.subfaces(1).len(), 4);
        assert!(s.subfaces(5).is_empty());
        assert_eq!(Simplex::new(vec![0, 1, 2]).subfaces(2), vec![
            Simplex::new(vec![0, 1]),
            Simplex::new(vec![0, 2]),
            Simplex::new(vec![1, 2])
        ]);
    }

    #[test]
    fn single_triangle() {
        let t = SimplicialComplex::simplex(pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert!(t.validate().is_valid());
        assert_eq!(t.faces(1).unwrap().len(), 3);
        assert!(t.interior_faces(0).unwrap().is_empty());
        assert!(t.interior_faces(1).unwrap().is_empty());
        assert_eq!(t.interior_faces(2).unwrap().len(), 1);
        assert!(matches!(t.faces(3), Err(MeshError::FaceDimensionOutOfRange { .. })));
    }

    #[test]
    fn shared_edge() {
        let c = two_triangles();
        assert!(c.validate().is_valid());
        assert_eq!(c.interior_faces(1).unwrap(), &[Simplex::new(vec![1, 2])]);
        assert!(c.interior_faces(0).unwrap().is_empty());
        assert_eq!(c.interior_facet_pairs(), vec![(Simplex::new(vec![1, 2]), 0, 1)]);
    }

    #[test]
    fn overlapping_triangles_are_rejected() {
        let c = SimplicialComplex::new(
            2,
            pts(&[&[0, 0], &[2, 0], &[0, 2], &[1, 0], &[3, 0], &[1, 2]]),
            vec![vec![0, 1, 2], vec![3, 4, 5]],
        )
        .unwrap();
        let report = c.validate();
        assert_eq!(report.violations, vec![Violation::ImproperIntersection { first: 0, second: 1 }]);
        assert!(report.to_string().contains("improper intersection"));
    }

    #[test]
    fn overlap_sharing_an_edge_is_rejected() {
        // both triangles on the same side of the shared edge
        let c = SimplicialComplex::new(
            2,
            pts(&[&[0, 0], &[4, 0], &[0, 4], &[1, 1]]),
            vec![vec![0, 1, 2], vec![0, 1, 3]],
        )
        .unwrap();
        assert!(!c.validate().is_valid());
    }

    #[test]
    fn vertex_touching_edge_interior_is_rejected() {
        // T-junction: the apex of the second triangle sits inside an edge of the first
        let c = SimplicialComplex::new(
            2,
            pts(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[2, 2]]),
            vec![vec![0, 1, 2], vec![1, 3, 4]],
        )
        .unwrap();
        assert!(!c.validate().is_valid());
    }

    #[test]
    fn degenerate_and_nonpure_cells() {
        let c = SimplicialComplex::new(2, pts(&[&[0, 0], &[1, 1], &[2, 2], &[3, 0]]), vec![vec![0, 1, 2], vec![
            0, 3,
        ]])
        .unwrap();
        let v = &c.validate().violations;
        assert!(v.contains(&Violation::DegenerateCell { cell: 0 }));
        assert!(v.contains(&Violation::NonPure { cell: 1, vertex_count: 2 }));
    }

    #[test]
    fn over_shared_facet() {
        // three triangles on one edge (two of them overlap too)
        let c = SimplicialComplex::new(
            2,
            pts(&[&[0, 0], &[1, 0], &[0, 1], &[0, -1], &[1, 3]]),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]],
        )
        .unwrap();
        assert!(c
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, Violation::OverSharedFacet { cells, .. } if cells.len() == 3)));
    }

    #[test]
    fn duplicate_vertices_are_merged() {
        let c = SimplicialComplex::new(
            2,
            pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 0], &[0, 1], &[1, 1]]),
            vec![vec![0, 1, 2], vec![3, 4, 5]],
        )
        .unwrap();
        assert_eq!(c.vertices().len(), 4);
        assert_eq!(c, two_triangles());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            SimplicialComplex::new(2, pts(&[&[0, 0, 0]]), vec![]),
            Err(MeshError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            SimplicialComplex::new(2, pts(&[&[0, 0]]), vec![vec![0, 5, 1]]),
            Err(MeshError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            SimplicialComplex::new(2, pts(&[&[0, 0], &[1, 0]]), vec![vec![0, 0, 1]]),
            Err(MeshError::RepeatedVertex { cell: 0 })
        ));
    }

    #[test]
    fn facet_form_vanishes_on_facet() {
        let c = two_triangles();
        for (facet, a, b) in c.interior_facet_pairs() {
            let f = c.facet_form(&facet).unwrap();
            for p in c.points(&facet) {
                assert!(f.eval(&p).is_zero());
            }
            for cell in [a, b] {
                let opposite = c.cell(cell).vertices().iter().find(|v| !facet.vertices().contains(v)).unwrap();
                assert!(!f.eval(c.vertex(*opposite)).is_zero());
            }
        }
    }

    #[test]
    fn canonical_sorts_vertices() {
        let c = SimplicialComplex::new(2, pts(&[&[1, 1], &[1, 0], &[0, 1], &[0, 0]]), vec![vec![3, 1, 2], vec![
            1, 2, 0,
        ]])
        .unwrap();
        assert_eq!(c.canonical(), two_triangles().canonical());
        assert_eq!(c.canonical().vertices()[1], Point::from_ints(&[0, 1]));
    }
}
