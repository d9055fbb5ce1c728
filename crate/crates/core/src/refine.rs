//! Preparing a curve against a fan: the recession-support hypothesis,
//! subdivision so that every edge and ray sits in a single cone, and global
//! rescaling to integral length/weight ratios.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::curve::{Edge, Ray, TropicalCurve, Vertex};
use crate::error::{Error, Result};
use crate::lattice::dd::dot_q;
use crate::lattice::{Containment, Fan, RatVec};
use crate::num::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecessionCheck {
    pub supported: bool,
    /// Rays whose direction is not a ray of the fan.
    pub offending: Vec<String>,
}

/// Every ray direction of the curve must be a ray generator of the fan.
pub fn check_recession_support(c: &TropicalCurve, f: &Fan) -> Result<RecessionCheck> {
    if c.ambient_dim != f.ambient_dim() {
        return Err(Error::DimMismatch {
            expected: f.ambient_dim(),
            found: c.ambient_dim,
        });
    }
    let rays: BTreeSet<_> = f.rays().iter().collect();
    let offending: Vec<String> = c
        .rays
        .iter()
        .filter(|r| !rays.contains(&r.direction))
        .map(|r| r.id.clone())
        .collect();
    Ok(RecessionCheck {
        supported: offending.is_empty(),
        offending,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewVertex {
    pub id: String,
    /// Edge or ray of the input curve that was split.
    pub host: String,
    /// Cones (as fan ray index lists) containing the pieces before and after
    /// the new vertex.
    pub cones: [Vec<usize>; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionRecord {
    pub output: TropicalCurve,
    pub new_vertices: Vec<NewVertex>,
}

/// Walls to test against: every facet normal and every linear equation of
/// every cone of the fan.
fn wall_normals(f: &Fan) -> Result<Vec<Vec<BigInt>>> {
    let mut out: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for i in 0..f.cones().len() {
        let h = f.cone(i).h_rep()?;
        out.extend(h.facets);
        out.extend(h.equations);
    }
    Ok(out.into_iter().collect())
}

/// Parameters in `(0, upper)` (or `(0, inf)` when `upper` is `None`) where
/// `start + t * dir` meets one of the walls transversally.
fn crossings(walls: &[Vec<BigInt>], start: &RatVec, dir: &[Rational], upper: Option<&Rational>) -> Vec<Rational> {
    let mut ts: BTreeSet<Rational> = BTreeSet::new();
    for h in walls {
        let b = dot_q(h, dir);
        if b.is_zero() {
            continue;
        }
        let t = -dot_q(h, start.coords()) / b;
        if t.is_positive() && upper.is_none_or(|u| &t < u) {
            ts.insert(t);
        }
    }
    ts.into_iter().collect()
}

fn point_at(start: &RatVec, dir: &[Rational], t: &Rational) -> RatVec {
    RatVec(start.coords().iter().zip(dir).map(|(s, d)| s + t * d).collect())
}

/// Splits `[0, upper]` at the wall crossings and keeps only the breakpoints
/// where the containing cone changes. Returns `(breakpoints, cones)` with one
/// more cone than breakpoints.
fn split_path(
    f: &Fan,
    walls: &[Vec<BigInt>],
    start: &RatVec,
    dir: &[Rational],
    upper: Option<&Rational>,
) -> Result<(Vec<Rational>, Vec<usize>)> {
    let ts = crossings(walls, start, dir, upper);
    let mut bounds = vec![Rational::zero()];
    bounds.extend(ts.iter().cloned());
    let mut piece_cones = Vec::with_capacity(bounds.len());
    for (i, lo) in bounds.iter().enumerate() {
        let rep = match (bounds.get(i + 1), upper) {
            (Some(hi), _) => (lo + hi) / Rational::from_integer(2.into()),
            (None, Some(u)) => (lo + u) / Rational::from_integer(2.into()),
            (None, None) => lo + Rational::one(),
        };
        piece_cones.push(f.smallest_containing_cone(&point_at(start, dir, &rep))?);
    }
    let mut breaks = Vec::new();
    let mut cones = vec![piece_cones[0]];
    for (i, &c) in piece_cones.iter().enumerate().skip(1) {
        if c != *cones.last().unwrap() {
            breaks.push(bounds[i].clone());
            cones.push(c);
        }
    }
    Ok((breaks, cones))
}

fn check_piece(f: &Fan, cone: usize, a: &RatVec, b: &RatVec) -> Result<()> {
    let c = f.cone(cone);
    if c.contains(a, Containment::Closure)? && c.contains(b, Containment::Closure)? {
        Ok(())
    } else {
        Err(Error::CertificateInconsistency(format!(
            "piece {a} -- {b} is not contained in cone {:?}",
            f.cones()[cone]
        )))
    }
}

/// Inserts 2-valent vertices wherever an edge or ray passes from one cone of
/// the fan to another. Every output edge and ray lies in a single cone.
///
/// New vertices are named `<host>#k` and new pieces `<host>/k`, numbered in
/// crossing order from the start of the host; the unbounded piece of a split
/// ray keeps the ray's id.
pub fn subdivide_along_fan(c: &TropicalCurve, f: &Fan) -> Result<SubdivisionRecord> {
    if c.ambient_dim != f.ambient_dim() {
        return Err(Error::DimMismatch {
            expected: f.ambient_dim(),
            found: c.ambient_dim,
        });
    }
    c.require_valid()?;
    let walls = wall_normals(f)?;
    let mut vertices = c.vertices.clone();
    let mut edges = Vec::new();
    let mut rays = Vec::new();
    let mut new_vertices = Vec::new();

    for e in &c.edges {
        let start = c.position(&e.ends[0])?.clone();
        let end = c.position(&e.ends[1])?;
        let dir = (end - &start).0;
        let (breaks, cones) = split_path(f, &walls, &start, &dir, Some(&Rational::one()))?;
        if breaks.is_empty() {
            check_piece(f, cones[0], &start, end)?;
            edges.push(e.clone());
            continue;
        }
        let mut prev_id = e.ends[0].clone();
        let mut prev_pos = start.clone();
        for (k, t) in breaks.iter().enumerate() {
            let id = format!("{}#{}", e.id, k + 1);
            let pos = point_at(&start, &dir, t);
            check_piece(f, cones[k], &prev_pos, &pos)?;
            vertices.push(Vertex {
                id: id.clone(),
                coords: pos.clone(),
            });
            new_vertices.push(NewVertex {
                id: id.clone(),
                host: e.id.clone(),
                cones: [f.cones()[cones[k]].clone(), f.cones()[cones[k + 1]].clone()],
            });
            edges.push(Edge {
                id: format!("{}/{}", e.id, k + 1),
                ends: [prev_id, id.clone()],
                weight: e.weight,
            });
            prev_id = id;
            prev_pos = pos;
        }
        check_piece(f, *cones.last().unwrap(), &prev_pos, end)?;
        edges.push(Edge {
            id: format!("{}/{}", e.id, breaks.len() + 1),
            ends: [prev_id, e.ends[1].clone()],
            weight: e.weight,
        });
    }

    for r in &c.rays {
        let start = c.position(&r.base)?.clone();
        let dir = r.direction.to_rationals();
        let (breaks, cones) = split_path(f, &walls, &start, &dir, None)?;
        let mut prev_id = r.base.clone();
        let mut prev_pos = start.clone();
        for (k, t) in breaks.iter().enumerate() {
            let id = format!("{}#{}", r.id, k + 1);
            let pos = point_at(&start, &dir, t);
            check_piece(f, cones[k], &prev_pos, &pos)?;
            vertices.push(Vertex {
                id: id.clone(),
                coords: pos.clone(),
            });
            new_vertices.push(NewVertex {
                id: id.clone(),
                host: r.id.clone(),
                cones: [f.cones()[cones[k]].clone(), f.cones()[cones[k + 1]].clone()],
            });
            edges.push(Edge {
                id: format!("{}/{}", r.id, k + 1),
                ends: [prev_id, id.clone()],
                weight: r.weight,
            });
            prev_id = id;
            prev_pos = pos;
        }
        // The tail must stay in its cone: base point and direction both in it.
        let tail = *cones.last().unwrap();
        check_piece(f, tail, &prev_pos, &r.direction.to_rat())?;
        rays.push(Ray {
            id: r.id.clone(),
            base: prev_id,
            direction: r.direction.clone(),
            weight: r.weight,
        });
    }

    Ok(SubdivisionRecord {
        output: TropicalCurve {
            ambient_dim: c.ambient_dim,
            vertices,
            edges,
            rays,
        },
        new_vertices,
    })
}

/// Least positive integer `N` with `N * l(e) / w(e)` integral for every
/// bounded edge.
pub fn integral_multiplier(c: &TropicalCurve) -> Result<BigInt> {
    let mut n = BigInt::one();
    for e in &c.edges {
        let ratio = c.edge_data(&e.id)?.length / Rational::from_integer(e.weight.into());
        n = num::lcm(&n, ratio.denom());
    }
    Ok(n)
}

/// Multiplies every vertex position by the least `N` making all
/// length/weight ratios integral.
pub fn rescale_integral(c: &TropicalCurve) -> Result<(TropicalCurve, BigInt)> {
    c.require_valid()?;
    let n = integral_multiplier(c)?;
    Ok((c.scaled(&Rational::from_integer(n.clone())), n))
}
