use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::dd::{self, HRep};
use super::lp;
use super::vector::{PrimitiveVec, RatVec};
use crate::error::{Error, Result};
use crate::num::Rational;

/// Facet descriptions are only computed up to this ambient dimension.
pub const MAX_FACET_DIM: usize = 6;
/// ... and this many generators.
pub const MAX_FACET_GENERATORS: usize = 32;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    Closure,
    RelativeInterior,
}

/// Rational polyhedral cone, the nonnegative span of primitive generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<PrimitiveVec>,
}

impl Cone {
    pub fn new(ambient_dim: usize, generators: impl IntoIterator<Item = PrimitiveVec>) -> Result<Self> {
        let set: BTreeSet<PrimitiveVec> = generators.into_iter().collect();
        for g in &set {
            if g.dim() != ambient_dim {
                return Err(Error::DimMismatch {
                    expected: ambient_dim,
                    found: g.dim(),
                });
            }
        }
        Ok(Cone {
            ambient_dim,
            generators: set.into_iter().collect(),
        })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Cone {
            ambient_dim,
            generators: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[PrimitiveVec] {
        &self.generators
    }

    fn generator_ints(&self) -> Vec<Vec<BigInt>> {
        self.generators.iter().map(|g| g.coords().to_vec()).collect()
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        super::linalg::canonical_row_basis(&self.generator_ints(), self.ambient_dim).len()
    }

    /// Decides membership by exact LP feasibility over the generators.
    ///
    /// In relative-interior mode `p` must also satisfy: for every generator
    /// `g` some `s >= 0` has `s p - g` in the cone, i.e. `p` can be pushed
    /// backwards along every generator without leaving the cone.
    pub fn contains(&self, p: &RatVec, mode: Containment) -> Result<bool> {
        if p.dim() != self.ambient_dim {
            return Err(Error::DimMismatch {
                expected: self.ambient_dim,
                found: p.dim(),
            });
        }
        let k = self.generators.len();
        let n = self.ambient_dim;
        let gen_cols: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                self.generators
                    .iter()
                    .map(|g| Rational::from_integer(g[i].clone()))
                    .collect()
            })
            .collect();
        if lp::feasible(&gen_cols, p.coords(), k).is_none() {
            return Ok(false);
        }
        if mode == Containment::Closure {
            return Ok(true);
        }
        for g in &self.generators {
            // sum l_i g_i - s p = -g
            let a: Vec<Vec<Rational>> = gen_cols
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let mut r = row.clone();
                    r.push(-p[i].clone());
                    r
                })
                .collect();
            let b: Vec<Rational> = g.coords().iter().map(|x| -Rational::from_integer(x.clone())).collect();
            if lp::feasible(&a, &b, k + 1).is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Facet description by double description, within the desk-scale
    /// limits.
    pub fn h_rep(&self) -> Result<HRep> {
        if self.ambient_dim > MAX_FACET_DIM || self.generators.len() > MAX_FACET_GENERATORS {
            return Err(Error::TooLargeForFacets {
                dim: self.ambient_dim,
                generators: self.generators.len(),
            });
        }
        Ok(dd::facets_of(&self.generator_ints(), self.ambient_dim))
    }

    pub fn is_pointed(&self) -> Result<bool> {
        let h = self.h_rep()?;
        // The dual cone is full-dimensional iff this one is pointed.
        let mut rows = h.equations.clone();
        rows.extend(h.facets.iter().cloned());
        Ok(super::linalg::canonical_row_basis(&rows, self.ambient_dim).len() == self.ambient_dim)
    }

    /// All faces, as sets of generator indices. Includes the cone itself and
    /// the face spanned by no generators. Meaningful for pointed cones.
    pub fn faces(&self) -> Result<BTreeSet<BTreeSet<usize>>> {
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut stack = vec![(0..self.generators.len()).collect::<BTreeSet<usize>>()];
        while let Some(face) = stack.pop() {
            if !seen.insert(face.clone()) {
                continue;
            }
            let sub = self.sub_cone(&face);
            let h = sub.h_rep()?;
            for f in &h.facets {
                let tight: BTreeSet<usize> = face
                    .iter()
                    .cloned()
                    .filter(|&i| dot_int(f, self.generators[i].coords()).is_zero())
                    .collect();
                if !seen.contains(&tight) {
                    stack.push(tight);
                }
            }
        }
        Ok(seen)
    }

    /// Indices of generators that are not extreme rays.
    pub fn redundant_generators(&self) -> Result<Vec<usize>> {
        let faces = self.faces()?;
        Ok((0..self.generators.len())
            .filter(|i| !faces.contains(&BTreeSet::from([*i])))
            .collect())
    }

    pub fn sub_cone(&self, idx: &BTreeSet<usize>) -> Cone {
        Cone {
            ambient_dim: self.ambient_dim,
            generators: idx.iter().map(|&i| self.generators[i].clone()).collect(),
        }
    }
}

fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Groups faces by dimension; handy for reports and tests.
pub fn faces_by_dim(c: &Cone) -> Result<BTreeMap<usize, Vec<BTreeSet<usize>>>> {
    let mut out: BTreeMap<usize, Vec<BTreeSet<usize>>> = BTreeMap::new();
    for f in c.faces()? {
        out.entry(c.sub_cone(&f).dim()).or_default().push(f);
    }
    Ok(out)
}
