use std::fmt;

use serde::{Deserialize, Serialize};

use super::MeshError;
use crate::linalg::{QMatrix, Rational};

/// A point of `R^k` with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&x| Rational::from_int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn sub(&self, other: &Point) -> Vec<Rational> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    /// `self + t * (other - self)`
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + &(t * &(b - a))).collect())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Affine function `a . x + c`, scaled so that the first nonzero `a_i` is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineForm {
    coefficients: Vec<Rational>,
    constant: Rational,
}

impl AffineForm {
    /// Canonicalizes the given form; errors when all linear coefficients vanish.
    pub fn new(coefficients: Vec<Rational>, constant: Rational) -> Result<Self, MeshError> {
        let lead = coefficients
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or(MeshError::ZeroForm)?;
        let inv = lead.recip();
        Ok(AffineForm {
            coefficients: coefficients.iter().map(|c| c * &inv).collect(),
            constant: &constant * &inv,
        })
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn eval(&self, p: &Point) -> Rational {
        self.coefficients
            .iter()
            .zip(&p.0)
            .map(|(a, x)| a * x)
            .fold(self.constant.clone(), |acc, t| acc + t)
    }

    /// Index of the leading (unit) coefficient.
    pub fn lead_index(&self) -> usize {
        self.coefficients.iter().position(|c| !c.is_zero()).expect("canonical form has a unit coefficient")
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coefficients.iter().enumerate() {
            if !c.is_zero() {
                terms.push(format!("{c}*x{}", i + 1));
            }
        }
        if !self.constant.is_zero() {
            terms.push(self.constant.to_string());
        }
        write!(f, "{}", terms.join(" + "))
    }
}

pub fn barycenter(points: &[Point]) -> Point {
    assert!(!points.is_empty(), "barycenter of no points");
    let n = Rational::from(points.len());
    let dim = points[0].dim();
    Point(
        (0..dim)
            .map(|c| points.iter().map(|p| &p.0[c]).sum::<Rational>() / &n)
            .collect(),
    )
}

fn check_dims(points: &[Point], dim: usize) -> Result<(), MeshError> {
    match points.iter().find(|p| p.dim() != dim) {
        Some(p) => Err(MeshError::DimensionMismatch { expected: dim, found: p.dim() }),
        None => Ok(()),
    }
}

/// True iff the points are affinely independent.
pub fn affinely_independent(points: &[Point]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let base = &points[0];
    let rows: Vec<Vec<Rational>> = points[1..].iter().map(|p| p.sub(base)).collect();
    let cols = base.dim();
    if rows.len() > cols {
        return false;
    }
    QMatrix::from_rows(rows, cols).map(|m| m.rank() == points.len() - 1).unwrap_or(false)
}

/// Barycentric coordinates of `p` with respect to the affinely independent
/// `simplex`, or `None` when `p` is off its affine span.
pub fn barycentric_coords(simplex: &[Point], p: &Point) -> Result<Option<Vec<Rational>>, MeshError> {
    let dim = p.dim();
    check_dims(simplex, dim)?;
    if !affinely_independent(simplex) {
        return Err(MeshError::DegenerateSimplex);
    }
    let n = simplex.len();
    // Solve sum l_i s_i = p, sum l_i = 1 via the augmented system.
    let mut rows = Vec::with_capacity(dim + 1);
    for c in 0..dim {
        let mut r: Vec<Rational> = simplex.iter().map(|s| s.0[c].clone()).collect();
        r.push(p.0[c].clone());
        rows.push(r);
    }
    let mut r: Vec<Rational> = vec![Rational::one(); n];
    r.push(Rational::one());
    rows.push(r);
    let rref = QMatrix::from_rows(rows, n + 1).expect("rectangular").rref();
    if rref.pivot_cols.last() == Some(&n) {
        return Ok(None);
    }
    debug_assert_eq!(rref.rank, n);
    Ok(Some((0..n).map(|i| rref.reduced[(i, n)].clone()).collect()))
}

/// Convex-hull containment `conv(inner) ⊆ conv(outer)`, decided by exact
/// barycentric coordinates of each vertex of `inner`.
pub fn geometric_contains(inner: &[Point], outer: &[Point]) -> Result<bool, MeshError> {
    let Some(dim) = outer.first().map(Point::dim) else {
        return Ok(inner.is_empty());
    };
    check_dims(inner, dim)?;
    for p in inner {
        match barycentric_coords(outer, p)? {
            Some(l) if l.iter().all(|x| !x.is_negative()) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// True iff every barycentric coordinate of `p` in `simplex` is strictly positive.
pub fn strictly_inside(simplex: &[Point], p: &Point) -> Result<bool, MeshError> {
    Ok(matches!(barycentric_coords(simplex, p)?, Some(l) if l.iter().all(Rational::is_positive)))
}

/// Signed volume up to the factor `1/k!`: `det[v_1 - v_0, ..., v_k - v_0]`.
pub fn signed_volume(simplex: &[Point]) -> Result<Rational, MeshError> {
    let dim = simplex.first().map(Point::dim).unwrap_or(0);
    check_dims(simplex, dim)?;
    if simplex.len() != dim + 1 {
        return Err(MeshError::WrongArity { expected: dim + 1, found: simplex.len() });
    }
    let rows: Vec<Vec<Rational>> = simplex[1..].iter().map(|p| p.sub(&simplex[0])).collect();
    Ok(QMatrix::from_rows(rows, dim).expect("square").determinant().expect("square"))
}

/// The canonical affine form vanishing on the hyperplane through `k` points of `R^k`.
pub fn hyperplane_through(points: &[Point]) -> Result<AffineForm, MeshError> {
    let dim = points.first().map(Point::dim).ok_or(MeshError::DegenerateSimplex)?;
    check_dims(points, dim)?;
    if points.len() != dim {
        return Err(MeshError::WrongArity { expected: dim, found: points.len() });
    }
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| p.0.iter().cloned().chain(std::iter::once(Rational::one())).collect())
        .collect();
    let kernel = QMatrix::from_rows(rows, dim + 1).expect("rectangular").kernel_basis();
    if kernel.len() != 1 {
        return Err(MeshError::DegenerateSimplex);
    }
    let v = &kernel[0];
    AffineForm::new(v[..dim].to_vec(), v[dim].clone()).map_err(|_| MeshError::DegenerateSimplex)
}

/// The unique point of the line through `p` and `q` on the zero set of `form`.
pub fn line_hyperplane_intersection(p: &Point, q: &Point, form: &AffineForm) -> Result<Point, MeshError> {
    if p.dim() != form.dim() || q.dim() != form.dim() {
        return Err(MeshError::DimensionMismatch { expected: form.dim(), found: p.dim().max(q.dim()) });
    }
    if p == q {
        return Err(MeshError::DegenerateLine);
    }
    let dir = q.sub(p);
    let slope: Rational = form.coefficients().iter().zip(&dir).map(|(a, x)| a * x).sum();
    if slope.is_zero() {
        return Err(MeshError::Parallel);
    }
    let t = -(form.eval(p) / slope);
    Ok(p.lerp(q, &t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> Point {
        Point::from_ints(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn facet_forms() {
        let f = hyperplane_through(&[pt(&[0, 0]), pt(&[1, 0])]).unwrap();
        assert_eq!(f.coefficients(), &[q(0, 1), q(1, 1)]);
        assert!(f.constant().is_zero());

        let f = hyperplane_through(&[pt(&[0, 0]), pt(&[1, 1])]).unwrap();
        assert_eq!(f.coefficients(), &[q(1, 1), q(-1, 1)]);

        let f = hyperplane_through(&[pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])]).unwrap();
        assert_eq!(f.coefficients(), &[q(1, 1), q(1, 1), q(1, 1)]);
        assert_eq!(f.constant(), &q(-1, 1));

        assert!(matches!(
            hyperplane_through(&[pt(&[1, 1]), pt(&[1, 1])]),
            Err(MeshError::DegenerateSimplex)
        ));
    }

    #[test]
    fn containment() {
        let tri = [pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])];
        let third = Point(vec![q(1, 3), q(1, 3)]);
        assert_eq!(barycentric_coords(&tri, &third).unwrap().unwrap(), vec![q(1, 3); 3]);
        assert!(geometric_contains(&[third.clone()], &tri).unwrap());
        assert!(!geometric_contains(&[pt(&[1, 1])], &tri).unwrap());
        assert!(geometric_contains(&tri, &tri).unwrap());
        // a point on the line of an edge but outside the segment
        assert!(!geometric_contains(&[pt(&[2, 0])], &tri[..2]).unwrap());
        assert!(geometric_contains(&[Point(vec![q(1, 2), q(0, 1)])], &tri[..2]).unwrap());
        // off the affine span of a lower-dimensional simplex
        assert!(!geometric_contains(&[third.clone()], &tri[..2]).unwrap());
        assert!(matches!(
            geometric_contains(&[pt(&[0, 0, 0])], &tri),
            Err(MeshError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn barycenter_and_lines() {
        let tri = [pt(&[0, 0]), pt(&[3, 0]), pt(&[0, 3])];
        assert_eq!(barycenter(&tri), pt(&[1, 1]));
        let edge = hyperplane_through(&[pt(&[3, 0]), pt(&[0, 3])]).unwrap();
        let hit = line_hyperplane_intersection(&pt(&[0, 0]), &pt(&[1, 1]), &edge).unwrap();
        assert_eq!(hit, Point(vec![q(3, 2), q(3, 2)]));
        let parallel = line_hyperplane_intersection(&pt(&[0, 0]), &pt(&[1, -1]), &edge);
        assert!(matches!(parallel, Err(MeshError::Parallel)));
    }

    #[test]
    fn volumes() {
        let tri = [pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])];
        assert_eq!(signed_volume(&tri).unwrap(), q(1, 1));
        let flat = [pt(&[0, 0]), pt(&[1, 1]), pt(&[2, 2])];
        assert!(signed_volume(&flat).unwrap().is_zero());
    }
}
