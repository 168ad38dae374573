//! Named meshes used by tests, the CLI and the verify suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Rational;
use crate::mesh::{Point, SimplicialComplex};
use crate::refine::{alfeld, double_alfeld, facet_split, RefineError, SplitOptions, SubdivisionRecord};

/// `T_k` with vertices `0` and `(k+1) e_i`, so its barycenter is `(1, ..., 1)`.
pub fn simplex(k: usize) -> SimplicialComplex {
    SimplicialComplex::standard_simplex(k, k as i64 + 1)
}

fn last_fine(records: Vec<SubdivisionRecord>) -> SimplicialComplex {
    records.into_iter().last().expect("at least one step").fine
}

pub fn alfeld_split(k: usize) -> SimplicialComplex {
    alfeld(&simplex(k), 0, None).expect("barycenter is interior").fine
}

pub fn facet_split_steps(k: usize, subset: Option<Vec<usize>>) -> Result<Vec<SubdivisionRecord>, RefineError> {
    facet_split(&simplex(k), &SplitOptions { subset, ..Default::default() })
}

pub fn double_alfeld_steps(k: usize, subset: Option<Vec<usize>>) -> Result<Vec<SubdivisionRecord>, RefineError> {
    double_alfeld(&simplex(k), &SplitOptions { subset, ..Default::default() })
}

pub fn facet_split_mesh(k: usize) -> SimplicialComplex {
    last_fine(facet_split_steps(k, None).expect("default facet split"))
}

pub fn double_alfeld_mesh(k: usize) -> SimplicialComplex {
    last_fine(double_alfeld_steps(k, None).expect("default double Alfeld split"))
}

/// The pyramid `P_0` of the facet split of `T_k`: the cone from the barycenter
/// over the Alfeld split of the facet opposite vertex 0.
pub fn pyramid(k: usize) -> SimplicialComplex {
    let steps = facet_split_steps(k, Some(vec![0])).expect("default facet split");
    steps[1].piece.clone()
}

/// Two triangles sharing the edge `(1,0)-(0,1)`.
pub fn two_triangles() -> SimplicialComplex {
    let v = vec![Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0]), Point::from_ints(&[0, 1]), Point::from_ints(&[1, 1])];
    SimplicialComplex::new(2, v, vec![vec![0, 1, 2], vec![1, 2, 3]]).expect("valid")
}

pub const INNER: [[i64; 2]; 3] = [[1, 0], [0, 1], [-1, -1]];
pub const OUTER: [[i64; 2]; 3] = [[3, 0], [0, 3], [-3, -3]];

/// Inner triangle `abc` surrounded by six cells of an outer triangle `ABC`.
/// The cell `abc` has index 0. At `a` the edges `ab`, `ac`, `aA` give three
/// slopes, at `b` five and at `c` four.
pub fn interior_triangle() -> SimplicialComplex {
    let v: Vec<Point> = INNER.iter().chain(OUTER.iter()).map(|p| Point::from_ints(p)).collect();
    // a b c A B C = 0 1 2 3 4 5
    let cells = vec![
        vec![0, 1, 2],
        vec![0, 1, 3],
        vec![0, 2, 3],
        vec![3, 4, 1],
        vec![1, 4, 5],
        vec![1, 5, 2],
        vec![2, 5, 3],
    ];
    SimplicialComplex::new(2, v, cells).expect("valid")
}

/// Interior point of `abc` on which all three spokes `Aa`, `Bb`, `Cc` meet
/// when extended.
pub fn aligned_point() -> Point {
    Point::from_ints(&[0, 0])
}

pub fn generic_point() -> Point {
    Point::new(vec![Rational::new(1, 5), Rational::new(1, 10)])
}

/// Alfeld split of the inner triangle at `w`.
pub fn interior_triangle_split(w: Point) -> Result<SubdivisionRecord, RefineError> {
    alfeld(&interior_triangle(), 0, Some(w))
}

/// A small valid mesh: `T_k` (or a random perturbation of the two-triangle
/// square when `k = 2` and the seed is odd) refined by `steps` Alfeld splits at
/// random rational interior points of random cells. Deterministic in `seed`.
pub fn random_mesh(seed: u64, k: usize, steps: usize) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mesh = if k == 2 && seed % 2 == 1 {
        let top = Point::new(vec![Rational::new(rng.gen_range(3..9), 4), Rational::new(rng.gen_range(3..9), 4)]);
        let v = vec![Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0]), Point::from_ints(&[0, 1]), top];
        SimplicialComplex::new(2, v, vec![vec![0, 1, 2], vec![1, 2, 3]]).expect("convex quadrilateral")
    } else {
        simplex(k)
    };
    for _ in 0..steps {
        let cell = rng.gen_range(0..mesh.num_cells());
        let pts = mesh.points(mesh.cell(cell));
        let weights: Vec<i64> = (0..=k).map(|_| rng.gen_range(1..6)).collect();
        let total: i64 = weights.iter().sum();
        let coords = (0..k)
            .map(|i| {
                pts.iter()
                    .zip(&weights)
                    .map(|(p, &w)| &p.coords()[i] * &Rational::new(w, total))
                    .fold(Rational::zero(), |a, b| &a + &b)
            })
            .collect();
        mesh = alfeld(&mesh, cell, Some(Point::new(coords))).expect("positive weights give an interior point").fine;
    }
    mesh
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for k in 2..=4 {
            assert_eq!(alfeld_split(k).num_cells(), k + 1);
        }
        for k in 2..=3 {
            let f = facet_split_mesh(k);
            assert_eq!((f.num_cells(), f.interior_vertices().len(), f.boundary_vertex_count()), (k * k + k, 1, 2 * k + 2));
            let aa = double_alfeld_mesh(k);
            assert_eq!((aa.num_cells(), aa.interior_vertices().len(), aa.boundary_vertex_count()), ((k + 1) * (k + 1), k + 2, k + 1));
        }
        assert_eq!(pyramid(3).num_cells(), 3);
        assert_eq!(pyramid(2).num_cells(), 2);
    }

    #[test]
    fn interior_triangle_geometry() {
        let m = interior_triangle();
        assert_eq!(m.volume(), Rational::from(27));
        assert_eq!(m.interior_vertices().len(), 3);
        // w=(0,0) lies on the lines Aa, Bb, Cc
        for (p, q) in INNER.iter().zip(OUTER.iter()) {
            assert_eq!(p[0] * q[1] - p[1] * q[0], 0);
        }
    }
}
