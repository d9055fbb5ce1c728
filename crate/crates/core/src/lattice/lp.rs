//! Exact feasibility for `A x = b, x >= 0` by phase-one simplex with
//! Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::num::Rational;

/// Returns a nonnegative solution of `a x = b`, or `None` if there is none.
///
/// `a` has one row per equation, every row of length `nvars`.
pub fn feasible(a: &[Vec<Rational>], b: &[Rational], nvars: usize) -> Option<Vec<Rational>> {
    let m = a.len();
    assert_eq!(b.len(), m);
    if m == 0 {
        return Some(vec![Rational::zero(); nvars]);
    }
    // Tableau columns: nvars structural, m artificial, then rhs.
    let width = nvars + m + 1;
    let rhs = width - 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), nvars);
        let flip = bi.is_negative();
        let mut r = vec![Rational::zero(); width];
        for (j, x) in row.iter().enumerate() {
            r[j] = if flip { -x.clone() } else { x.clone() };
        }
        r[nvars + i] = Rational::one();
        r[rhs] = if flip { -bi.clone() } else { bi.clone() };
        t.push(r);
    }
    let mut basis: Vec<usize> = (nvars..nvars + m).collect();

    // Objective row: minimize the sum of artificials, stored as reduced costs.
    let mut obj = vec![Rational::zero(); width];
    for r in &t {
        for j in 0..nvars {
            obj[j] -= &r[j];
        }
        obj[rhs] -= &r[rhs];
    }

    // Bland: smallest index with negative reduced cost.
    while let Some(enter) = (0..nvars + m).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, r) in t.iter().enumerate() {
            if r[enter].is_positive() {
                let ratio = &r[rhs] / &r[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((li, _)) = leave else {
            // Unbounded direction cannot occur for a phase-one objective
            // bounded below by zero.
            unreachable!("phase-one objective is bounded");
        };
        pivot(&mut t, &mut obj, li, enter);
        basis[li] = enter;
    }

    if !obj[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); nvars];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < nvars {
            x[bv] = t[i][rhs].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rational>], obj: &mut [Rational], row: usize, col: usize) {
    let inv = t[row][col].recip();
    for x in t[row].iter_mut() {
        *x *= &inv;
    }
    let prow = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i != row && !r[col].is_zero() {
            let f = r[col].clone();
            for (x, p) in r.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
    }
    if !obj[col].is_zero() {
        let f = obj[col].clone();
        for (x, p) in obj.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
    }
}
