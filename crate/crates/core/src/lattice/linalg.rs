//! Exact linear algebra over `Q` and `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::num::{self, Rational};

/// Dense rational matrix with an explicit column count, so that matrices
/// with no rows still know their width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    ncols: usize,
    rows: Vec<Vec<Rational>>,
}

impl RatMatrix {
    /// Panics if a row does not have `ncols` entries.
    pub fn new(ncols: usize, rows: Vec<Vec<Rational>>) -> Self {
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols, "row {i} has {} entries, expected {ncols}", r.len());
        }
        RatMatrix { ncols, rows }
    }

    pub fn from_ints(ncols: usize, rows: &[Vec<i64>]) -> Self {
        Self::new(
            ncols,
            rows.iter()
                .map(|r| r.iter().map(|&x| num::rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RatMatrix {
            ncols,
            rows: vec![vec![Rational::zero(); ncols]; nrows],
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Rational] {
        &mut self.rows[i]
    }

    pub fn push_row(&mut self, row: Vec<Rational>) {
        assert_eq!(row.len(), self.ncols);
        self.rows.push(row);
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.ncols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                t.rows[j][i] = x.clone();
            }
        }
        t
    }
}

/// Clears denominators row by row, giving an integer matrix with the same
/// row space.
fn integer_rows(a: &RatMatrix) -> Vec<Vec<BigInt>> {
    a.rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, q| num::lcm(&acc, q.denom()));
            r.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect()
}

/// Rank by fraction-free (Bareiss) elimination with row pivoting.
pub fn rank(a: &RatMatrix) -> usize {
    let mut m = integer_rows(a);
    let nrows = m.len();
    let ncols = a.ncols;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// `dim ker A = #columns - rank A`.
pub fn kernel_dimension(a: &RatMatrix) -> usize {
    a.ncols - rank(a)
}

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
pub fn rref(a: &RatMatrix) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m = a.rows.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of the rational null space, one vector per free column.
pub fn kernel_basis(a: &RatMatrix) -> Vec<Vec<Rational>> {
    let (red, pivots) = rref(a);
    let n = a.ncols;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Scales a rational vector to a primitive integer vector pointing the same
/// way. Returns `None` for the zero vector.
pub fn to_primitive_integer(v: &[Rational]) -> Option<Vec<BigInt>> {
    let l = v.iter().fold(BigInt::one(), |acc, q| num::lcm(&acc, q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    let g = num::gcd_all(&ints);
    if g.is_zero() {
        return None;
    }
    Some(ints.into_iter().map(|x| x / &g).collect())
}

/// Canonical integer basis of a row space: the RREF rows scaled to
/// primitive integer vectors.
pub fn canonical_row_basis(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let m = RatMatrix::new(
        ncols,
        rows.iter()
            .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
            .collect(),
    );
    rref(&m).0.iter().filter_map(|r| to_primitive_integer(r)).collect()
}

/// Solves `m x = b` for square nonsingular `m`.
pub fn solve_square(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let aug = RatMatrix::new(
        n + 1,
        m.iter()
            .zip(b)
            .map(|(r, bi)| {
                let mut row = r.clone();
                row.push(bi.clone());
                row
            })
            .collect(),
    );
    let (red, pivots) = rref(&aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(red.iter().map(|r| r[n].clone()).collect())
}

/// Orthogonal projection of `v` onto the orthogonal complement of the span of
/// `basis` (which must be linearly independent).
pub fn project_off(v: &[Rational], basis: &[Vec<Rational>]) -> Vec<Rational> {
    if basis.is_empty() {
        return v.to_vec();
    }
    let dot = |a: &[Rational], b: &[Rational]| -> Rational { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let gram: Vec<Vec<Rational>> = basis
        .iter()
        .map(|bi| basis.iter().map(|bj| dot(bi, bj)).collect())
        .collect();
    let rhs: Vec<Rational> = basis.iter().map(|bi| dot(bi, v)).collect();
    let coef = solve_square(&gram, &rhs).expect("projection basis must be independent");
    let mut out = v.to_vec();
    for (c, bi) in coef.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(bi) {
            *o -= c * x;
        }
    }
    out
}

/// A `Z`-basis of `ker A ∩ Z^n` for an integer matrix `A` with `n` columns.
///
/// Column operations reduce `A` to column echelon form while the same
/// operations are applied to an identity matrix `U`; the columns of `U`
/// that end up under zero columns of `A U` span the integer kernel.
pub fn integer_kernel_basis(a: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    // u[j] is column j of the transform.
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut col = 0;
    for row in 0..m.len() {
        if col == n {
            break;
        }
        loop {
            // Pick the column >= col with the smallest nonzero |entry| in this row.
            let best = (col..n)
                .filter(|&j| !m[row][j].is_zero())
                .min_by(|&x, &y| m[row][x].abs().cmp(&m[row][y].abs()));
            let Some(b) = best else { break };
            swap_cols(&mut m, &mut u, col, b);
            let mut done = true;
            for j in col + 1..n {
                if m[row][j].is_zero() {
                    continue;
                }
                let q = m[row][j].div_floor(&m[row][col]);
                add_col_multiple(&mut m, &mut u, j, col, &(-q));
                if !m[row][j].is_zero() {
                    done = false;
                }
            }
            if done {
                col += 1;
                break;
            }
        }
    }
    (col..n).map(|j| u[j].clone()).collect()
}

fn swap_cols(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for r in m.iter_mut() {
        r.swap(a, b);
    }
    u.swap(a, b);
}

/// column `dst += f * column src`
fn add_col_multiple(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], dst: usize, src: usize, f: &BigInt) {
    for r in m.iter_mut() {
        let v = &r[src] * f;
        r[dst] += v;
    }
    let s = u[src].clone();
    for (d, x) in u[dst].iter_mut().zip(&s) {
        *d += x * f;
    }
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn sign_of(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}
