//! Closed-form spline dimensions for the Alfeld split, the pyramid over an
//! Alfeld split, the facet split and the double Alfeld split, plus the
//! read-off of free generator degrees from a Hilbert function.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Binomial coefficient with the convention `C(n, k) = 0` whenever `n < k`,
/// negative `n` included.
pub fn binom_safe(n: i64, k: u64) -> u64 {
    if n < 0 || (n as u64) < k {
        return 0;
    }
    let n = n as u64;
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

fn poly_dim(k: u32, d: u32) -> u64 {
    binom_safe(d as i64 + k as i64, k as u64)
}

/// Correction term of the Alfeld split dimension.
///
/// Odd `r`: `k C(d + k - (r+1)(k+1)/2, k)`.
/// Even `r`: the `k` consecutive terms `C(d + k - 1 - r(k+1)/2, k) + ... + C(d - r(k+1)/2, k)`.
#[allow(non_snake_case)]
pub fn A_formula(k: u32, d: u32, r: u32) -> u64 {
    let (k, d, r) = (k as i64, d as i64, r as i64);
    if r % 2 == 1 {
        k as u64 * binom_safe(d + k - (r + 1) * (k + 1) / 2, k as u64)
    } else {
        let shift = r * (k + 1) / 2;
        (0..k).map(|j| binom_safe(d + k - 1 - j - shift, k as u64)).sum()
    }
}

/// Correction term of the pyramid (cone over `A(T_{k-1})`) dimension.
///
/// Odd `r`: `(k-1) C(d + k - (r+1)k/2, k)`.
/// Even `r`: `C(d + k - 1 - rk/2, k) + ... + C(d + 1 - rk/2, k)`, i.e. `k - 1` terms.
#[allow(non_snake_case)]
pub fn P_formula(k: u32, d: u32, r: u32) -> u64 {
    let (k, d, r) = (k as i64, d as i64, r as i64);
    if r % 2 == 1 {
        (k - 1).max(0) as u64 * binom_safe(d + k - (r + 1) * k / 2, k as u64)
    } else {
        let shift = r * k / 2;
        (0..k - 1).map(|j| binom_safe(d + k - 1 - j - shift, k as u64)).sum()
    }
}

pub fn dim_alfeld(k: u32, d: u32, r: u32) -> u64 {
    poly_dim(k, d) + A_formula(k, d, r)
}

pub fn dim_pyramid(k: u32, d: u32, r: u32) -> u64 {
    poly_dim(k, d) + P_formula(k, d, r)
}

pub fn dim_facet(k: u32, d: u32, r: u32) -> u64 {
    poly_dim(k, d) + A_formula(k, d, r) + (k as u64 + 1) * P_formula(k, d, r)
}

pub fn dim_double_alfeld(k: u32, d: u32, r: u32) -> u64 {
    poly_dim(k, d) + (k as u64 + 2) * A_formula(k, d, r)
}

/// Facet split where only `split` of the `k+1` pyramids have been formed.
pub fn dim_partial_facet(k: u32, d: u32, r: u32, split: usize) -> u64 {
    poly_dim(k, d) + A_formula(k, d, r) + split as u64 * P_formula(k, d, r)
}

/// Double Alfeld split where only `split` of the `k+1` subsimplices were refined.
pub fn dim_partial_double_alfeld(k: u32, d: u32, r: u32, split: usize) -> u64 {
    poly_dim(k, d) + (1 + split as u64) * A_formula(k, d, r)
}

/// Checks the pyramid dimension against its summation form
/// `sum_{i<=d} [C(i+k-1, k-1) + A(k-1, i, r)]`. Requires `k >= 2`.
pub fn pyramid_sum_identity(k: u32, d: u32, r: u32) -> bool {
    assert!(k >= 2, "pyramid needs k >= 2");
    let sum: u64 = (0..=d).map(|i| poly_dim(k - 1, i) + A_formula(k - 1, i, r)).sum();
    sum == dim_pyramid(k, d, r)
}

/// Subdivision families with a closed-form dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    Simplex,
    Alfeld,
    Pyramid,
    Facet,
    DoubleAlfeld,
}

impl Scheme {
    pub fn dim(self, k: u32, d: u32, r: u32) -> u64 {
        match self {
            Scheme::Simplex => poly_dim(k, d),
            Scheme::Alfeld => dim_alfeld(k, d, r),
            Scheme::Pyramid => dim_pyramid(k, d, r),
            Scheme::Facet => dim_facet(k, d, r),
            Scheme::DoubleAlfeld => dim_double_alfeld(k, d, r),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Simplex => "simplex",
            Scheme::Alfeld => "alfeld",
            Scheme::Pyramid => "pyramid",
            Scheme::Facet => "facet",
            Scheme::DoubleAlfeld => "double-alfeld",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("unknown scheme `{0}` (expected simplex, alfeld, pyramid, facet or double-alfeld)")]
    UnknownScheme(String),
    #[error("dimension sequence is not of free form: residual {residual} at degree {degree}")]
    NotFree { degree: u32, residual: i128 },
}

impl FromStr for Scheme {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "simplex" => Ok(Scheme::Simplex),
            "alfeld" | "a" => Ok(Scheme::Alfeld),
            "pyramid" | "p" => Ok(Scheme::Pyramid),
            "facet" | "f" => Ok(Scheme::Facet),
            "double-alfeld" | "double_alfeld" | "aa" => Ok(Scheme::DoubleAlfeld),
            other => Err(FormulaError::UnknownScheme(other.to_string())),
        }
    }
}

/// Reads generator degrees off a Hilbert function `h(d) = sum_j C(d + k - a_j, k)`
/// given for `d = 0..h.len()`, by peeling the smallest positive residual.
pub fn infer_generator_degrees(h: &[u64], k: u32) -> Result<BTreeMap<u32, u64>, FormulaError> {
    let mut gens: BTreeMap<u32, u64> = BTreeMap::new();
    for (d, &value) in h.iter().enumerate() {
        let d = d as u32;
        let explained: i128 = gens
            .iter()
            .map(|(&a, &m)| m as i128 * binom_safe(d as i64 - a as i64 + k as i64, k as u64) as i128)
            .sum();
        let residual = value as i128 - explained;
        if residual < 0 {
            return Err(FormulaError::NotFree { degree: d, residual });
        }
        if residual > 0 {
            gens.insert(d, residual as u64);
        }
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_convention() {
        assert_eq!(binom_safe(5, 2), 10);
        assert_eq!(binom_safe(1, 3), 0);
        assert_eq!(binom_safe(-2, 3), 0);
        assert_eq!(binom_safe(0, 0), 1);
        assert_eq!(binom_safe(-1, 0), 0);
        assert_eq!(binom_safe(30, 15), 155_117_520);
    }

    #[test]
    fn alfeld_values() {
        assert_eq!(A_formula(2, 3, 1), 2);
        assert_eq!(A_formula(2, 1, 0), 1);
        assert_eq!(dim_alfeld(2, 1, 0), 4);
        assert_eq!(A_formula(3, 2, 1), 0);
        assert_eq!(dim_alfeld(2, 3, 1), 12);
    }

    #[test]
    fn continuous_linear_dimension_is_vertex_count() {
        for k in 2..=5 {
            assert_eq!(dim_alfeld(k, 1, 0), k as u64 + 2);
        }
    }

    #[test]
    fn pyramid_values() {
        assert_eq!(P_formula(2, 2, 1), 1);
        assert_eq!(P_formula(3, 4, 1), 8);
        for k in 2..6 {
            for r in 1..5 {
                assert_eq!(P_formula(k, 0, r), 0);
            }
        }
    }

    #[test]
    fn composite_values() {
        assert_eq!(dim_facet(2, 2, 1), 9);
        assert_eq!(dim_double_alfeld(2, 3, 1), 18);
        assert_eq!(dim_partial_facet(2, 2, 1, 3), dim_facet(2, 2, 1));
        assert_eq!(dim_partial_double_alfeld(3, 4, 2, 4), dim_double_alfeld(3, 4, 2));
        assert_eq!(dim_partial_facet(3, 4, 1, 0), dim_alfeld(3, 4, 1));
    }

    #[test]
    fn pyramid_identity_holds() {
        for d in 0..=10 {
            assert!(pyramid_sum_identity(3, d, 1));
            assert!(pyramid_sum_identity(2, d, 0));
        }
        assert!(pyramid_sum_identity(2, 0, 3));
        for k in 2..=5 {
            for r in 0..=5 {
                for d in 0..=14 {
                    assert!(pyramid_sum_identity(k, d, r), "k={k} r={r} d={d}");
                }
            }
        }
    }

    #[test]
    fn generator_degrees() {
        // 10 + 2 C(d-1, 2) at d = 3: two new generators in degree 3, none in degree 2
        let h: Vec<u64> = (0..12).map(|d| dim_alfeld(2, d, 1)).collect();
        assert_eq!(h[..4], [1, 3, 6, 12]);
        assert_eq!(infer_generator_degrees(&h, 2).unwrap(), BTreeMap::from([(0, 1), (3, 2)]));
        let h: Vec<u64> = (0..12).map(|d| binom_safe(d as i64 + 2, 2)).collect();
        assert_eq!(infer_generator_degrees(&h, 2).unwrap(), BTreeMap::from([(0, 1)]));
        let h: Vec<u64> = (0..12).map(|d| dim_pyramid(3, d, 1)).collect();
        assert_eq!(infer_generator_degrees(&h, 3).unwrap(), BTreeMap::from([(0, 1), (3, 2)]));
        // not a free Hilbert function: too small in degree 1
        assert!(matches!(infer_generator_degrees(&[1, 2], 2), Err(FormulaError::NotFree { degree: 1, .. })));
    }

    #[test]
    fn scheme_tags() {
        assert_eq!("double-alfeld".parse::<Scheme>().unwrap(), Scheme::DoubleAlfeld);
        assert_eq!(Scheme::Facet.dim(2, 2, 1), 9);
        assert!("powell".parse::<Scheme>().is_err());
    }
}
