use std::collections::HashMap;
use std::fmt;

/// Exponent vector over a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// Graded lex: higher degree first, then lexicographically larger exponents.
/// This is a monomial order, so leading terms are multiplicative.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All monomials of exactly degree `d` in `nvars` variables, largest first.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn fill(nvars: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == nvars {
            cur[pos] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            fill(nvars, pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    fill(nvars, 0, d, &mut vec![0; nvars], &mut out);
    out
}

/// An ordered monomial basis (largest monomial first) with reverse lookup.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    nvars: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    fn from_monomials(nvars: usize, monomials: Vec<Monomial>) -> Self {
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis { nvars, monomials, index }
    }

    /// Homogeneous monomials of degree `d`.
    pub fn homogeneous(nvars: usize, d: u32) -> Self {
        Self::from_monomials(nvars, monomials_of_degree(nvars, d))
    }

    /// Monomials of degree at most `d`.
    pub fn up_to(nvars: usize, d: u32) -> Self {
        let monomials = (0..=d).rev().flat_map(|e| monomials_of_degree(nvars, e)).collect();
        Self::from_monomials(nvars, monomials)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::binom_safe;

    #[test]
    fn counts_match_binomials() {
        for n in 1..5usize {
            for d in 0..7u32 {
                let h = monomials_of_degree(n, d);
                assert_eq!(h.len() as u64, binom_safe(d as i64 + n as i64 - 1, n as u64 - 1));
                let u = MonomialBasis::up_to(n, d);
                assert_eq!(u.len() as u64, binom_safe(d as i64 + n as i64, n as u64));
            }
        }
    }

    #[test]
    fn basis_is_sorted_descending() {
        let b = MonomialBasis::up_to(3, 3);
        assert!(b.monomials().windows(2).all(|w| w[0] > w[1]));
        assert_eq!(b.get(0), &Monomial(vec![3, 0, 0]));
        assert_eq!(b.index_of(&Monomial(vec![0, 0, 0])), Some(b.len() - 1));
    }
}
