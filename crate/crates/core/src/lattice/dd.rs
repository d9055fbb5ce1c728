//! Double description: generators of `{ y : a_i . y >= 0 }`.
//!
//! The cone is kept as `L + cone(R)` with `L` a lineality basis and `R` the
//! extreme rays modulo `L`. Constraints are added one at a time; when a
//! constraint cuts the lineality space a lineality vector is turned into a
//! ray, otherwise rays are split into `+ / 0 / -` classes and adjacent
//! `(+,-)` pairs are combined (combinatorial adjacency test).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{self, canonical_row_basis};
use crate::num::{self, Rational};

/// `L + cone(R)` in canonical form: `lineality` is an RREF-derived integer
/// basis, `rays` are primitive, orthogonal to the lineality space and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators {
    pub dim: usize,
    pub lineality: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

impl Generators {
    /// Dimension of the cone (of its linear span).
    pub fn cone_dim(&self) -> usize {
        // rays are orthogonal to the lineality space
        self.lineality.len() + span_rank(&self.rays, self.dim)
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }
}

fn span_rank(rows: &[Vec<BigInt>], dim: usize) -> usize {
    canonical_row_basis(rows, dim).len()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn make_primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = num::gcd_all(&v);
    if g.is_zero() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

struct Ray {
    v: Vec<BigInt>,
    tight: BTreeSet<usize>,
}

/// Generators of the polyhedral cone `{ y in R^dim : a . y >= 0 for a in inequalities }`.
pub fn cone_from_inequalities(inequalities: &[Vec<BigInt>], dim: usize) -> Generators {
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|j| (0..dim).map(|i| BigInt::from(i64::from(i == j))).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in inequalities.iter().enumerate() {
        assert_eq!(a.len(), dim);
        if let Some(p) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lineality.swap_remove(p);
            let mut al = dot(a, &l);
            if al.is_negative() {
                l = l.iter().map(|x| -x).collect();
                al = -al;
            }
            for other in lineality.iter_mut() {
                let ao = dot(a, other);
                let v: Vec<BigInt> = other.iter().zip(&l).map(|(o, x)| &al * o - &ao * x).collect();
                *other = make_primitive(v);
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                let v: Vec<BigInt> = r.v.iter().zip(&l).map(|(o, x)| &al * o - &ar * x).collect();
                r.v = make_primitive(v);
                r.tight.insert(k);
            }
            // l is tight on every earlier constraint, since it was lineality.
            rays.push(Ray {
                v: l,
                tight: (0..k).collect(),
            });
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let zero: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_zero()).collect();

        let mut next: Vec<Ray> = Vec::new();
        for &i in &pos {
            next.push(Ray {
                v: rays[i].v.clone(),
                tight: rays[i].tight.clone(),
            });
        }
        for &i in &zero {
            let mut tight = rays[i].tight.clone();
            tight.insert(k);
            next.push(Ray {
                v: rays[i].v.clone(),
                tight,
            });
        }
        for &i in &pos {
            for &j in &neg {
                let common: BTreeSet<usize> = rays[i].tight.intersection(&rays[j].tight).cloned().collect();
                let adjacent = !(0..rays.len()).any(|r| r != i && r != j && common.is_subset(&rays[r].tight));
                if !adjacent {
                    continue;
                }
                let vi = &vals[i];
                let vj = -&vals[j];
                let v: Vec<BigInt> = rays[i]
                    .v
                    .iter()
                    .zip(&rays[j].v)
                    .map(|(x, y)| &vj * x + vi * y)
                    .collect();
                let mut tight = common;
                tight.insert(k);
                next.push(Ray {
                    v: make_primitive(v),
                    tight,
                });
            }
        }
        rays = next;
    }

    canonicalize(dim, lineality, rays.into_iter().map(|r| r.v).collect())
}

/// Puts `L + cone(R)` into canonical form.
pub fn canonicalize(dim: usize, lineality: Vec<Vec<BigInt>>, rays: Vec<Vec<BigInt>>) -> Generators {
    let lineality = canonical_row_basis(&lineality, dim);
    let lin_q: Vec<Vec<Rational>> = lineality
        .iter()
        .map(|l| l.iter().cloned().map(Rational::from_integer).collect())
        .collect();
    let mut out: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for r in rays {
        let rq: Vec<Rational> = r.into_iter().map(Rational::from_integer).collect();
        let p = linalg::project_off(&rq, &lin_q);
        if let Some(v) = linalg::to_primitive_integer(&p) {
            out.insert(v);
        }
    }
    Generators {
        dim,
        lineality,
        rays: out.into_iter().collect(),
    }
}

/// H-description `{ x : e . x = 0 (e in equations), f . x >= 0 (f in facets) }`
/// of `cone(generators)`, obtained from the generators of the dual cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub dim: usize,
    pub equations: Vec<Vec<BigInt>>,
    pub facets: Vec<Vec<BigInt>>,
}

pub fn facets_of(generators: &[Vec<BigInt>], dim: usize) -> HRep {
    let dual = cone_from_inequalities(generators, dim);
    HRep {
        dim,
        equations: dual.lineality,
        facets: dual.rays,
    }
}

impl HRep {
    pub fn contains(&self, p: &[Rational]) -> bool {
        self.equations.iter().all(|e| dot_q(e, p).is_zero()) && self.facets.iter().all(|f| !dot_q(f, p).is_negative())
    }

    pub fn contains_relative_interior(&self, p: &[Rational]) -> bool {
        self.equations.iter().all(|e| dot_q(e, p).is_zero()) && self.facets.iter().all(|f| dot_q(f, p).is_positive())
    }
}

pub fn dot_q(a: &[BigInt], p: &[Rational]) -> Rational {
    a.iter()
        .zip(p)
        .map(|(x, y)| Rational::from_integer(x.clone()) * y)
        .sum()
}
