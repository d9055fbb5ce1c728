//! Well-spacedness of genus-one curves, checked against the affine span of
//! the cycle: among the points where the curve leaves that span, the
//! minimal distance to the cycle must be attained at least twice.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::curve::TropicalCurve;
use crate::error::{Error, Result};
use crate::lattice::linalg::canonical_row_basis;
use crate::lattice::{IntVec, PrimitiveVec, RatVec};
use crate::num::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleData {
    /// Cyclically ordered, starting at the smallest id.
    pub vertices: Vec<String>,
    /// `edges[i]` joins `vertices[i]` and `vertices[i + 1]` (cyclically).
    pub edges: Vec<String>,
    pub base_point: RatVec,
    /// Basis of the direction space of the affine span.
    pub span: Vec<IntVec>,
    pub codim: usize,
}

impl CycleData {
    pub fn contains_direction(&self, d: &PrimitiveVec) -> bool {
        let mut rows: Vec<Vec<BigInt>> = self.span.iter().map(|v| v.0.clone()).collect();
        rows.push(d.coords().to_vec());
        canonical_row_basis(&rows, d.dim()).len() == self.span.len()
    }
}

/// The unique cycle of a genus-one curve, found by pruning leaves.
pub fn cycle(c: &TropicalCurve) -> Result<CycleData> {
    c.require_valid()?;
    let g = c.genus();
    if g != 1 {
        return Err(Error::GenusNotOne(g));
    }
    let mut alive: BTreeSet<&str> = c.edges.iter().map(|e| e.id.as_str()).collect();
    loop {
        let mut degree: BTreeMap<&str, usize> = BTreeMap::new();
        for e in c.edges.iter().filter(|e| alive.contains(e.id.as_str())) {
            for end in &e.ends {
                *degree.entry(end.as_str()).or_default() += 1;
            }
        }
        let leaves: Vec<&str> = c
            .edges
            .iter()
            .filter(|e| alive.contains(e.id.as_str()))
            .filter(|e| e.ends.iter().any(|v| degree[v.as_str()] == 1))
            .map(|e| e.id.as_str())
            .collect();
        if leaves.is_empty() {
            break;
        }
        for l in leaves {
            alive.remove(l);
        }
    }

    // Walk around the cycle from its smallest vertex.
    let cyc: Vec<_> = c.edges.iter().filter(|e| alive.contains(e.id.as_str())).collect();
    let start = cyc
        .iter()
        .flat_map(|e| e.ends.iter())
        .min()
        .expect("genus one has a cycle")
        .clone();
    let mut vertices = vec![start.clone()];
    let mut edges: Vec<String> = Vec::new();
    let mut cur = start.clone();
    loop {
        let next = cyc
            .iter()
            .filter(|e| !edges.contains(&e.id))
            .filter(|e| e.ends.contains(&cur))
            .min_by(|a, b| a.id.cmp(&b.id))
            .expect("cycle is closed");
        edges.push(next.id.clone());
        cur = if next.ends[0] == cur {
            next.ends[1].clone()
        } else {
            next.ends[0].clone()
        };
        if cur == start {
            break;
        }
        vertices.push(cur.clone());
    }

    let mut dirs = Vec::with_capacity(edges.len());
    for e in &edges {
        dirs.push(c.edge_data(e)?.direction.coords().to_vec());
    }
    let span: Vec<IntVec> = canonical_row_basis(&dirs, c.ambient_dim)
        .into_iter()
        .map(IntVec)
        .collect();
    Ok(CycleData {
        base_point: c.position(&start)?.clone(),
        codim: c.ambient_dim - span.len(),
        vertices,
        edges,
        span,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Departure {
    pub vertex: String,
    #[serde(with = "num::rational")]
    pub distance: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellSpacedness {
    pub well_spaced: bool,
    pub span_codim: usize,
    /// Sorted by distance, then vertex id.
    pub departures: Vec<Departure>,
}

pub fn well_spaced(c: &TropicalCurve) -> Result<WellSpacedness> {
    let cyc = cycle(c)?;
    if cyc.codim == 0 {
        return Ok(WellSpacedness {
            well_spaced: true,
            span_codim: 0,
            departures: Vec::new(),
        });
    }

    // Distances within the part of the curve reachable from the cycle
    // through edges parallel to the span.
    let mut dist: BTreeMap<String, Rational> = BTreeMap::new();
    let mut heap: BinaryHeap<Reverse<(Rational, String)>> = BinaryHeap::new();
    for v in &cyc.vertices {
        heap.push(Reverse((Rational::zero(), v.clone())));
    }
    while let Some(Reverse((d, v))) = heap.pop() {
        if dist.contains_key(&v) {
            continue;
        }
        for inc in c.incidences(&v)? {
            let Some(other) = inc.other else { continue };
            if dist.contains_key(&other) || !cyc.contains_direction(&inc.direction) {
                continue;
            }
            let len = c.edge_data(&inc.id)?.length;
            heap.push(Reverse((&d + len, other)));
        }
        dist.insert(v, d);
    }

    let mut departures = Vec::new();
    for (v, d) in &dist {
        let leaves = c
            .incidences(v)?
            .iter()
            .any(|inc| !cyc.contains_direction(&inc.direction));
        if leaves {
            departures.push(Departure {
                vertex: v.clone(),
                distance: d.clone(),
            });
        }
    }
    departures.sort_by(|a, b| (&a.distance, &a.vertex).cmp(&(&b.distance, &b.vertex)));
    let well_spaced = match departures.first() {
        None => true,
        Some(first) => departures.iter().filter(|d| d.distance == first.distance).count() >= 2,
    };
    Ok(WellSpacedness {
        well_spaced,
        span_codim: cyc.codim,
        departures,
    })
}
