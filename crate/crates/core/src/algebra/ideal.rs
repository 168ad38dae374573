use std::collections::HashMap;
use std::fmt;

use super::monomial::{monomials_of_degree, MonomialBasis};
use super::poly::Poly;
use super::AlgebraError;
use crate::formulas::binom_safe;
use crate::linalg::{Echelon, QMatrix, Rational, SparseVec};
use crate::mesh::{geometric_contains, AffineForm, MeshError, Point, SimplicialComplex, Simplex};

/// Linear form over `[x_0, x_1, .., x_k]`, scaled so that the first nonzero
/// coefficient among `x_1..x_k` is 1 (or the `x_0` coefficient if it is the only one).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomForm(Vec<Rational>);

impl HomForm {
    pub fn new(mut coefficients: Vec<Rational>) -> Result<Self, AlgebraError> {
        let lead = (1..coefficients.len())
            .chain(std::iter::once(0))
            .find(|&i| i < coefficients.len() && !coefficients[i].is_zero())
            .ok_or(AlgebraError::ZeroForm)?;
        let inv = coefficients[lead].recip();
        for c in coefficients.iter_mut() {
            *c = &*c * &inv;
        }
        Ok(HomForm(coefficients))
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn to_poly(&self) -> Poly {
        Poly::linear(&self.0, &Rational::zero())
    }

    /// Value at the lifted point `(1, p)`.
    pub fn eval_lifted(&self, p: &Point) -> Rational {
        let mut acc = self.0[0].clone();
        for (c, x) in self.0[1..].iter().zip(p.coords()) {
            acc += &(c * x);
        }
        acc
    }
}

impl fmt::Debug for HomForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{c}*x{i}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for HomForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `a . x + b` becomes `b x_0 + a . x`.
pub fn homogenize(f: &AffineForm) -> HomForm {
    let mut c = Vec::with_capacity(f.dim() + 1);
    c.push(f.constant().clone());
    c.extend(f.coefficients().iter().cloned());
    HomForm::new(c).expect("affine forms are nonzero")
}

/// Ideal generated by the `exponent`-th powers of a set of linear forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerIdeal {
    nvars: usize,
    exponent: u32,
    forms: Vec<HomForm>,
}

impl PowerIdeal {
    pub fn new(nvars: usize, exponent: u32, mut forms: Vec<HomForm>) -> Result<Self, AlgebraError> {
        if let Some(f) = forms.iter().find(|f| f.nvars() != nvars) {
            return Err(AlgebraError::VariableMismatch { expected: nvars, found: f.nvars() });
        }
        forms.sort();
        forms.dedup();
        Ok(PowerIdeal { nvars, exponent, forms })
    }

    pub fn zero(nvars: usize, exponent: u32) -> Self {
        PowerIdeal { nvars, exponent, forms: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn forms(&self) -> &[HomForm] {
        &self.forms
    }

    /// Generator powers `l^m`.
    pub fn generators(&self) -> Vec<Poly> {
        self.forms.iter().map(|l| l.to_poly().pow(self.exponent)).collect()
    }

    /// The ideal in `e` variables obtained by writing every form in a basis
    /// of their span, together with the number `c` of variables that do not
    /// occur. `R/J` is then `(S/J') [z_1..z_c]`.
    pub fn essential(&self) -> (PowerIdeal, usize) {
        let (forms, e) = reduce_forms(&self.forms, self.nvars);
        let ideal = PowerIdeal::new(e, self.exponent, forms).expect("reduced forms have the right length");
        (ideal, self.nvars - e)
    }
}

impl fmt::Debug for PowerIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, l) in self.forms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({l:?})^{}", self.exponent)?;
        }
        write!(f, ">")
    }
}

/// Rewrites forms in coordinates of a basis of their span (the reduced row
/// echelon basis). Returns the rewritten forms and the span dimension.
pub(crate) fn reduce_forms(forms: &[HomForm], nvars: usize) -> (Vec<HomForm>, usize) {
    let rows: Vec<Vec<Rational>> = forms.iter().map(|f| f.coefficients().to_vec()).collect();
    let m = QMatrix::from_rows(rows, nvars).expect("forms share a length");
    let pivots = m.rref().pivot_cols;
    let reduced = forms
        .iter()
        .map(|f| HomForm::new(pivots.iter().map(|&p| f.coefficients()[p].clone()).collect()).expect("nonzero form"))
        .collect();
    (reduced, pivots.len())
}

/// Fully reduced echelon basis of `(J)_d` in the homogeneous degree-`d` monomial basis.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    basis: MonomialBasis,
    ech: Echelon,
    quotient_cols: Vec<usize>,
    quotient_pos: HashMap<usize, usize>,
}

impl GradedPiece {
    pub fn new(ideal: &PowerIdeal, d: u32) -> Self {
        let basis = MonomialBasis::homogeneous(ideal.nvars, d);
        let mut ech = Echelon::new(basis.len());
        if d >= ideal.exponent && !ideal.forms.is_empty() {
            let shifts = monomials_of_degree(ideal.nvars, d - ideal.exponent);
            'outer: for g in ideal.generators() {
                for mu in &shifts {
                    let row = g.mul_monomial(mu).to_sparse(&basis).expect("degree-d product");
                    ech.insert(row);
                    if ech.rank() == basis.len() {
                        break 'outer;
                    }
                }
            }
        }
        ech.reduce_fully();
        let quotient_cols = ech.non_pivots();
        let quotient_pos = quotient_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        GradedPiece { basis, ech, quotient_cols, quotient_pos }
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn ideal_dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn quotient_dim(&self) -> usize {
        self.quotient_cols.len()
    }

    /// Monomial columns forming the quotient basis.
    pub fn quotient_cols(&self) -> &[usize] {
        &self.quotient_cols
    }

    /// Quotient coordinates of the monomial in column `col`.
    pub fn reduce_monomial(&self, col: usize) -> SparseVec {
        match self.ech.pivot_row(col) {
            None => vec![(self.quotient_pos[&col], Rational::one())],
            Some(row) => row[1..].iter().map(|(j, x)| (self.quotient_pos[j], -x)).collect(),
        }
    }

    pub fn echelon(&self) -> &Echelon {
        &self.ech
    }
}

/// `dim (J)_d`, by rank of the generators-times-monomials matrix.
pub fn ideal_graded_dim(ideal: &PowerIdeal, d: u32) -> usize {
    GradedPiece::new(ideal, d).ideal_dim()
}

/// `dim (R/J)_d` through the essential-variable reduction:
/// `sum_t dim (S/J')_t * #monomials of degree d-t in the unused variables`.
pub fn quotient_hilbert(ideal: &PowerIdeal, d: u32) -> u64 {
    let (small, c) = ideal.essential();
    if c == 0 {
        return GradedPiece::new(&small, d).quotient_dim() as u64;
    }
    let mut total = 0u64;
    for t in 0..=d {
        let h = GradedPiece::new(&small, t).quotient_dim() as u64;
        if h == 0 {
            break;
        }
        total += h * binom_safe((d - t) as i64 + c as i64 - 1, c as u64 - 1);
    }
    total
}

/// Equality of ideals generated in the single degree `m`: compares the spans of
/// the generator powers inside the degree-`m` forms.
pub fn ideals_equal(a: &PowerIdeal, b: &PowerIdeal) -> Result<bool, AlgebraError> {
    if a.exponent != b.exponent {
        return Err(AlgebraError::ExponentMismatch(a.exponent, b.exponent));
    }
    if a.nvars != b.nvars {
        return Err(AlgebraError::VariableMismatch { expected: a.nvars, found: b.nvars });
    }
    let basis = MonomialBasis::homogeneous(a.nvars, a.exponent);
    let to_matrix = |j: &PowerIdeal| {
        let mut m = QMatrix::zeros(0, basis.len());
        for g in j.generators() {
            let mut row = vec![Rational::zero(); basis.len()];
            for (c, x) in g.to_sparse(&basis).expect("degree-m power") {
                row[c] = x;
            }
            m.push_row(row).expect("row length");
        }
        m
    };
    Ok(to_matrix(a).row_space_equal(&to_matrix(b))?)
}

/// `J_gamma`: powers of the homogenized forms of every facet of `mesh` that
/// contains the point set `gamma` geometrically.
pub fn face_ideal_of_points(mesh: &SimplicialComplex, gamma: &[Point], r: u32) -> Result<PowerIdeal, AlgebraError> {
    let mut forms = Vec::new();
    for tau in mesh.faces(mesh.dim() - 1)? {
        if geometric_contains(gamma, &mesh.points(tau))? {
            forms.push(homogenize(&mesh.facet_form(tau)?));
        }
    }
    PowerIdeal::new(mesh.dim() + 1, r + 1, forms)
}

/// `J_gamma` for a face given by vertex ids of `mesh`.
pub fn face_ideal(mesh: &SimplicialComplex, gamma: &Simplex, r: u32) -> Result<PowerIdeal, AlgebraError> {
    if let Some(&v) = gamma.vertices().iter().find(|&&v| v >= mesh.vertices().len()) {
        return Err(MeshError::VertexOutOfRange { index: v, count: mesh.vertices().len() }.into());
    }
    face_ideal_of_points(mesh, &mesh.points(gamma), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn form(c: &[i64]) -> HomForm {
        HomForm::new(c.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn homogenize_examples() {
        let y = AffineForm::new(vec![q(0), q(1)], q(0)).unwrap();
        assert_eq!(homogenize(&y), form(&[0, 0, 1]));
        let x1 = AffineForm::new(vec![q(1), q(0)], q(-1)).unwrap();
        assert_eq!(homogenize(&x1).coefficients(), &[q(-1), q(1), q(0)]);
        let xy2 = AffineForm::new(vec![q(1), q(1)], q(-2)).unwrap();
        let h = homogenize(&xy2);
        assert_eq!(h.coefficients(), &[q(-2), q(1), q(1)]);
        assert!(h.eval_lifted(&Point::from_ints(&[1, 1])).is_zero());
        assert!(h.eval_lifted(&Point::from_ints(&[2, 0])).is_zero());
        assert!(HomForm::new(vec![q(0); 3]).is_err());
    }

    #[test]
    fn graded_dim_examples() {
        // <x^2, y^2> in three variables
        let j = PowerIdeal::new(3, 2, vec![form(&[0, 1, 0]), form(&[0, 0, 1])]).unwrap();
        assert_eq!(ideal_graded_dim(&j, 2), 2);
        assert_eq!(quotient_hilbert(&j, 2), 4);
        assert_eq!(ideal_graded_dim(&j, 1), 0);
        for d in 0..8 {
            let direct = GradedPiece::new(&j, d).quotient_dim() as u64;
            assert_eq!(quotient_hilbert(&j, d), direct, "d={d}");
        }
    }

    #[test]
    fn single_form_quotient_closed_form() {
        let j = PowerIdeal::new(4, 3, vec![form(&[2, 1, -1, 3])]).unwrap();
        for d in 0..9u32 {
            let expect = binom_safe(d as i64 + 3, 3) - binom_safe(d as i64 - 3 + 3, 3);
            assert_eq!(GradedPiece::new(&j, d).quotient_dim() as u64, expect);
            assert_eq!(quotient_hilbert(&j, d), expect);
        }
    }

    #[test]
    fn ideal_equality_examples() {
        let three = vec![form(&[0, 1, 0]), form(&[0, 0, 1]), form(&[0, 1, -1])];
        let mut four = three.clone();
        four.push(form(&[0, 1, -2]));
        let a = PowerIdeal::new(3, 2, three.clone()).unwrap();
        let b = PowerIdeal::new(3, 2, four.clone()).unwrap();
        assert!(ideals_equal(&a, &a).unwrap());
        assert!(ideals_equal(&a, &b).unwrap());
        let a3 = PowerIdeal::new(3, 3, three).unwrap();
        let b3 = PowerIdeal::new(3, 3, four).unwrap();
        assert!(!ideals_equal(&a3, &b3).unwrap());
        assert!(matches!(ideals_equal(&a, &a3), Err(AlgebraError::ExponentMismatch(2, 3))));
    }

    #[test]
    fn dedup_up_to_scalar() {
        let j = PowerIdeal::new(3, 2, vec![form(&[0, 2, -2]), form(&[0, -1, 1])]).unwrap();
        assert_eq!(j.forms().len(), 1);
    }

    #[test]
    fn essential_reduction() {
        // forms through the lifted point (1, 1, 1) span a 2-dim space
        let j = PowerIdeal::new(3, 2, vec![form(&[-1, 1, 0]), form(&[-1, 0, 1]), form(&[0, 1, -1])]).unwrap();
        let (small, c) = j.essential();
        assert_eq!((small.nvars(), c), (2, 1));
        for d in 0..9 {
            assert_eq!(quotient_hilbert(&j, d), GradedPiece::new(&j, d).quotient_dim() as u64);
        }
    }
}
