use std::collections::BTreeMap;
use std::fmt;

use super::monomial::{Monomial, MonomialBasis};
use crate::linalg::{Rational, SparseVec};

/// Polynomial with exact coefficients over a declared number of variables.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    /// `sum coeffs[i] * x_i + constant`.
    pub fn linear(coeffs: &[Rational], constant: &Rational) -> Self {
        let n = coeffs.len();
        let mut p = Poly::constant(n, constant.clone());
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(self.nvars, Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&e, xi)| &acc * &xi.pow(e))
            })
            .sum()
    }

    /// Coordinates in `basis`; `None` if a term lies outside it.
    pub fn to_sparse(&self, basis: &MonomialBasis) -> Option<SparseVec> {
        let mut v: SparseVec = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            v.push((basis.index_of(m)?, c.clone()));
        }
        v.sort_by_key(|e| e.0);
        Some(v)
    }

    pub fn from_coords<'a>(basis: &MonomialBasis, coords: impl IntoIterator<Item = (usize, &'a Rational)>) -> Poly {
        let mut p = Poly::zero(basis.nvars());
        for (i, c) in coords {
            p.add_term(basis.get(i).clone(), c);
        }
        p
    }

    /// Replaces variable `j` by `replacement` (which may itself involve `x_j`).
    pub fn substitute(&self, j: usize, replacement: &Poly) -> Poly {
        let max_e = self.terms.keys().map(|m| m.0[j]).max().unwrap_or(0);
        let mut powers = vec![Poly::constant(self.nvars, Rational::one())];
        for e in 1..=max_e as usize {
            powers.push(powers[e - 1].mul(replacement));
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = rest.0[j] as usize;
            rest.0[j] = 0;
            for (pm, pc) in &powers[e].terms {
                out.add_term(pm.mul(&rest), &(pc * c));
            }
        }
        out
    }

    /// Smallest exponent of `x_j` among the terms; `None` for zero.
    pub fn min_exponent(&self, j: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[j]).min()
    }

    /// `x_0^d f(x/x_0)`: adds a new leading variable.
    pub fn homogenize(&self, d: u32) -> Poly {
        let mut out = Poly::zero(self.nvars + 1);
        for (m, c) in &self.terms {
            let deg = m.degree();
            assert!(deg <= d, "degree {deg} exceeds homogenization degree {d}");
            let mut e = Vec::with_capacity(self.nvars + 1);
            e.push(d - deg);
            e.extend_from_slice(&m.0);
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Sets the leading variable to 1 and drops it.
    pub fn dehomogenize(&self) -> Poly {
        let mut out = Poly::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            out.add_term(Monomial(m.0[1..].to_vec()), c);
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(m, c)| format!("{c}*{m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn arithmetic() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let s = x.sub(&y);
        let sq = s.pow(2);
        assert_eq!(sq.coeff(&Monomial(vec![1, 1])), q(-2));
        assert_eq!(sq.num_terms(), 3);
        assert!(sq.is_homogeneous());
        assert_eq!(sq.eval(&[q(3), q(1)]), q(4));
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn substitution_adapted_frame() {
        // (x - y)^2 with x -> x + y becomes x^2
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let f = x.sub(&y).pow(2);
        let g = f.substitute(0, &x.add(&y));
        assert_eq!(g, x.pow(2));
        assert_eq!(g.min_exponent(0), Some(2));
    }

    #[test]
    fn homogenize_roundtrip() {
        let f = Poly::linear(&[q(1), q(1)], &q(-2)).pow(2);
        let h = f.homogenize(3);
        assert!(h.is_homogeneous());
        assert_eq!(h.degree(), Some(3));
        assert_eq!(h.dehomogenize(), f);
    }
}
