//! Embedded tropical curves: weighted graphs in `R^n` with bounded edges and
//! rays, plus the checks that make them tropical curves.
//!
//! Bounded edge directions are always derived from vertex positions; ray
//! directions are stored and never inferred. Since positions are rational,
//! every edge is automatically a rational segment.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{primitive_of_rational, Fan, IntVec, PrimitiveVec, RatVec};
use crate::num::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    #[serde(with = "num::id")]
    pub id: String,
    pub coords: RatVec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    #[serde(with = "num::id")]
    pub id: String,
    /// Stored orientation `(u, w)`.
    #[serde(with = "num::id::pair")]
    pub ends: [String; 2],
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ray {
    #[serde(with = "num::id")]
    pub id: String,
    #[serde(with = "num::id")]
    pub base: String,
    pub direction: PrimitiveVec,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalCurve {
    pub ambient_dim: usize,
    pub vertices: Vec<Vertex>,
    #[serde(default)]
    pub edges: Vec<Edge>,
    #[serde(default)]
    pub rays: Vec<Ray>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CurveViolation {
    Empty,
    DimMismatch { id: String, expected: usize, found: usize },
    DuplicateId { id: String },
    UnknownVertex { id: String, vertex: String },
    Disconnected { components: usize },
    NonpositiveWeight { id: String, weight: i64 },
    DegenerateEdge { id: String },
}

impl std::fmt::Display for CurveViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        match self {
            CurveViolation::Empty => write!(f, "curve has no vertices"),
            CurveViolation::DimMismatch { id, expected, found } => {
                write!(f, "{id}: dimension {found}, expected {expected}")
            }
            CurveViolation::DuplicateId { id } => write!(f, "duplicate id {id:?}"),
            CurveViolation::UnknownVertex { id, vertex } => write!(f, "{id}: unknown vertex {vertex:?}"),
            CurveViolation::Disconnected { components } => {
                write!(f, "underlying graph has {components} connected components")
            }
            CurveViolation::NonpositiveWeight { id, weight } => write!(f, "{id}: weight {weight} is not positive"),
            CurveViolation::DegenerateEdge { id } => write!(f, "{id}: endpoints coincide"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<CurveViolation>,
}

/// `(d, l)` with `w - u = l * d`, `d` primitive and `l > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeData {
    pub direction: PrimitiveVec,
    pub length: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDefect {
    pub vertex: String,
    pub defect: IntVec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceReport {
    pub balanced: bool,
    pub defects: Vec<VertexDefect>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IncidenceKind {
    Edge,
    Ray,
}

/// An edge or ray seen from one of its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub kind: IncidenceKind,
    pub id: String,
    /// Primitive direction pointing away from the vertex.
    pub direction: PrimitiveVec,
    pub weight: i64,
    /// Opposite endpoint for bounded edges.
    pub other: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarRay {
    pub direction: PrimitiveVec,
    pub weight: i64,
    pub sources: Vec<String>,
}

/// The fan of outgoing directions at a vertex, with weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Star {
    pub vertex: String,
    pub rays: Vec<StarRay>,
}

impl Star {
    pub fn fan(&self, ambient_dim: usize) -> Fan {
        Fan::from_rays(ambient_dim, self.rays.iter().map(|r| r.direction.clone()).collect())
            .expect("star directions have the ambient dimension")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfinityPoint {
    pub id: String,
    pub ray: String,
}

/// The curve with one point at infinity closing off each ray.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactifiedCurve {
    pub base: TropicalCurve,
    pub infinity_points: Vec<InfinityPoint>,
}

impl CompactifiedCurve {
    pub fn forget(self) -> TropicalCurve {
        self.base
    }

    /// Every infinity point meets exactly one ray.
    pub fn valence_at_infinity(&self, point: &str) -> usize {
        self.infinity_points.iter().filter(|p| p.id == point).count()
    }
}

impl TropicalCurve {
    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn position(&self, id: &str) -> Result<&RatVec> {
        self.vertex(id)
            .map(|v| &v.coords)
            .ok_or_else(|| Error::NoSuchVertex(id.to_string()))
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn ray(&self, id: &str) -> Option<&Ray> {
        self.rays.iter().find(|r| r.id == id)
    }

    pub fn vertex_ids_sorted(&self) -> Vec<String> {
        let mut v: Vec<String> = self.vertices.iter().map(|v| v.id.clone()).collect();
        v.sort();
        v
    }

    pub fn edge_ids_sorted(&self) -> Vec<String> {
        let mut v: Vec<String> = self.edges.iter().map(|e| e.id.clone()).collect();
        v.sort();
        v
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.vertices.is_empty() {
            violations.push(CurveViolation::Empty);
        }
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(("v", v.id.as_str())) {
                violations.push(CurveViolation::DuplicateId { id: v.id.clone() });
            }
            if v.coords.dim() != self.ambient_dim {
                violations.push(CurveViolation::DimMismatch {
                    id: v.id.clone(),
                    expected: self.ambient_dim,
                    found: v.coords.dim(),
                });
            }
        }
        let vertex_ids: BTreeSet<&str> = self.vertices.iter().map(|v| v.id.as_str()).collect();
        let mut positions_ok = true;
        for e in &self.edges {
            if !seen.insert(("e", e.id.as_str())) {
                violations.push(CurveViolation::DuplicateId { id: e.id.clone() });
            }
            for end in &e.ends {
                if !vertex_ids.contains(end.as_str()) {
                    positions_ok = false;
                    violations.push(CurveViolation::UnknownVertex {
                        id: e.id.clone(),
                        vertex: end.clone(),
                    });
                }
            }
            if e.weight <= 0 {
                violations.push(CurveViolation::NonpositiveWeight {
                    id: e.id.clone(),
                    weight: e.weight,
                });
            }
        }
        for r in &self.rays {
            if !seen.insert(("e", r.id.as_str())) {
                violations.push(CurveViolation::DuplicateId { id: r.id.clone() });
            }
            if !vertex_ids.contains(r.base.as_str()) {
                violations.push(CurveViolation::UnknownVertex {
                    id: r.id.clone(),
                    vertex: r.base.clone(),
                });
            }
            if r.direction.dim() != self.ambient_dim {
                violations.push(CurveViolation::DimMismatch {
                    id: r.id.clone(),
                    expected: self.ambient_dim,
                    found: r.direction.dim(),
                });
            }
            if r.weight <= 0 {
                violations.push(CurveViolation::NonpositiveWeight {
                    id: r.id.clone(),
                    weight: r.weight,
                });
            }
        }
        if positions_ok {
            for e in &self.edges {
                let (Ok(a), Ok(b)) = (self.position(&e.ends[0]), self.position(&e.ends[1])) else {
                    continue;
                };
                if a == b {
                    violations.push(CurveViolation::DegenerateEdge { id: e.id.clone() });
                }
            }
            let components = self.components();
            if components > 1 {
                violations.push(CurveViolation::Disconnected { components });
            }
        }
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    pub fn require_valid(&self) -> Result<()> {
        let r = self.validate();
        if r.valid {
            Ok(())
        } else {
            let msg: Vec<String> = r.violations.iter().map(|v| v.to_string()).collect();
            Err(Error::InvalidCurve(msg.join("; ")))
        }
    }

    /// Number of connected components of the graph on vertices and bounded
    /// edges.
    pub fn components(&self) -> usize {
        let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for v in &self.vertices {
            adj.entry(v.id.as_str()).or_default();
        }
        for e in &self.edges {
            adj.entry(e.ends[0].as_str()).or_default().push(e.ends[1].as_str());
            adj.entry(e.ends[1].as_str()).or_default().push(e.ends[0].as_str());
        }
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut count = 0;
        for &start in adj.keys() {
            if seen.contains(start) {
                continue;
            }
            count += 1;
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn edge_data(&self, id: &str) -> Result<EdgeData> {
        let e = self.edge(id).ok_or_else(|| Error::NoSuchEdge(id.to_string()))?;
        let u = self.position(&e.ends[0])?;
        let w = self.position(&e.ends[1])?;
        let diff = w - u;
        let (direction, length) = primitive_of_rational(&diff).map_err(|_| Error::DegenerateEdge(id.to_string()))?;
        Ok(EdgeData { direction, length })
    }

    /// Edges and rays at `v`, with outgoing primitive directions, in stored
    /// order (edges first).
    pub fn incidences(&self, v: &str) -> Result<Vec<Incidence>> {
        if self.vertex(v).is_none() {
            return Err(Error::NoSuchVertex(v.to_string()));
        }
        let mut out = Vec::new();
        for e in &self.edges {
            for (side, end) in e.ends.iter().enumerate() {
                if end != v {
                    continue;
                }
                let d = self.edge_data(&e.id)?.direction;
                out.push(Incidence {
                    kind: IncidenceKind::Edge,
                    id: e.id.clone(),
                    direction: if side == 0 { d } else { d.neg() },
                    weight: e.weight,
                    other: Some(e.ends[1 - side].clone()),
                });
            }
        }
        for r in &self.rays {
            if r.base == v {
                out.push(Incidence {
                    kind: IncidenceKind::Ray,
                    id: r.id.clone(),
                    direction: r.direction.clone(),
                    weight: r.weight,
                    other: None,
                });
            }
        }
        Ok(out)
    }

    pub fn valence(&self, v: &str) -> Result<usize> {
        Ok(self.incidences(v)?.len())
    }

    /// Weighted sum of outgoing primitive directions at every vertex.
    pub fn balancing(&self) -> Result<BalanceReport> {
        let mut defects = Vec::new();
        for v in &self.vertices {
            let mut sum = vec![BigInt::zero(); self.ambient_dim];
            for inc in self.incidences(&v.id)? {
                let w = BigInt::from(inc.weight);
                for (s, d) in sum.iter_mut().zip(inc.direction.coords()) {
                    *s += &w * d;
                }
            }
            if sum.iter().any(|x| !x.is_zero()) {
                defects.push(VertexDefect {
                    vertex: v.id.clone(),
                    defect: IntVec(sum),
                });
            }
        }
        Ok(BalanceReport {
            balanced: defects.is_empty(),
            defects,
        })
    }

    pub fn is_balanced(&self) -> Result<bool> {
        Ok(self.balancing()?.balanced)
    }

    /// First Betti number `#edges - #vertices + 1` of a connected curve.
    pub fn genus(&self) -> usize {
        (self.edges.len() + 1)
            .checked_sub(self.vertices.len())
            .expect("genus of a disconnected graph")
    }

    /// Distinct primitive ray directions plus the origin.
    pub fn recession_fan(&self) -> Fan {
        let dirs: BTreeSet<PrimitiveVec> = self.rays.iter().map(|r| r.direction.clone()).collect();
        Fan::from_rays(self.ambient_dim, dirs.into_iter().collect()).expect("ray dimensions validated")
    }

    pub fn star(&self, v: &str) -> Result<Star> {
        let mut by_dir: BTreeMap<PrimitiveVec, (i64, Vec<String>)> = BTreeMap::new();
        for inc in self.incidences(v)? {
            let entry = by_dir.entry(inc.direction).or_insert((0, Vec::new()));
            entry.0 += inc.weight;
            entry.1.push(inc.id);
        }
        Ok(Star {
            vertex: v.to_string(),
            rays: by_dir
                .into_iter()
                .map(|(direction, (weight, sources))| StarRay {
                    direction,
                    weight,
                    sources,
                })
                .collect(),
        })
    }

    pub fn compactify(&self) -> CompactifiedCurve {
        CompactifiedCurve {
            base: self.clone(),
            infinity_points: self
                .rays
                .iter()
                .map(|r| InfinityPoint {
                    id: format!("inf:{}", r.id),
                    ray: r.id.clone(),
                })
                .collect(),
        }
    }

    pub fn translated(&self, by: &RatVec) -> TropicalCurve {
        let mut c = self.clone();
        for v in &mut c.vertices {
            v.coords = &v.coords + by;
        }
        c
    }

    pub fn scaled(&self, s: &Rational) -> TropicalCurve {
        let mut c = self.clone();
        for v in &mut c.vertices {
            v.coords = v.coords.scale(s);
        }
        c
    }
}
