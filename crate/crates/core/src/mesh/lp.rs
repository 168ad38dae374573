//! Exact feasibility test for `{x >= 0 : A x = b}` (phase one of the simplex
//! method, Bland's rule). Only used on tiny systems by the intersection check.

use crate::linalg::Rational;

pub(crate) fn nonneg_feasible(a: &[Vec<Rational>], b: &[Rational]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    let width = n + m;
    // tableau rows: [A | I | b], with rows flipped so that b >= 0
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(width + 1);
        for x in &a[i] {
            row.push(if flip { -x } else { x.clone() });
        }
        for j in 0..m {
            row.push(if i == j { Rational::one() } else { Rational::zero() });
        }
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost: Vec<Rational> = vec![Rational::zero(); width + 1];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[width] -= &row[width];
    }
    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so an entering column always has a positive entry
        let Some((p, _)) = leave else {
            break;
        };
        let inv = t[p][enter].recip();
        for x in t[p].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == p || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.sub_mul(&f, y);
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, y) in cost.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.sub_mul(&f, y);
                }
            }
        }
        basis[p] = enter;
    }
    // -cost[width] is the optimal sum of artificials
    cost[width].is_zero()
}
