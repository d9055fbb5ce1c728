//! Combinatorics of the special fiber of the degeneration: the dual nodal
//! curve, node monoids, node slopes, and the assembled realization
//! certificate for the logarithmic map to the Artin fan.
//!
//! Orientation: for a bounded edge stored as `(u, w)`, the node slope is
//! `u_q = (u - w) / weight`, i.e. `v1` is the first stored endpoint. The
//! identity `rho * u_q = v1 - v2` is then checked exactly.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::curve::TropicalCurve;
use crate::error::{Error, Result};
use crate::lattice::{Fan, IntVec, PrimitiveVec, RatVec, ValidationConfig};
use crate::num::{self, format_rational, Rational};
use crate::refine::{self, NewVertex};

/// A rational component of the special fiber, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub id: String,
    pub genus: u32,
    /// Labels of the node branches and marked points lying on it.
    pub special_points: Vec<String>,
}

/// A node, one per bounded edge, joining the components of its endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: String,
    pub components: [String; 2],
    pub branches: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedPoint {
    pub id: String,
    pub component: String,
    pub contact_order: i64,
}

/// Explicit isomorphism between the curve's graph and the dual graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualIsomorphism {
    pub vertex_to_component: BTreeMap<String, String>,
    pub edge_to_node: BTreeMap<String, String>,
    pub ray_to_marked_point: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCurve {
    pub components: Vec<Component>,
    pub nodes: Vec<Node>,
    pub marked_points: Vec<MarkedPoint>,
    pub isomorphism: DualIsomorphism,
}

fn branch_label(edge: &str, vertex: &str) -> String {
    format!("q:{edge}@{vertex}")
}

fn marked_label(ray: &str) -> String {
    format!("p:{ray}")
}

/// One `P^1` per vertex, a node per bounded edge, a marked point per ray
/// with contact order equal to the ray weight.
pub fn dual_curve(c: &TropicalCurve) -> DualCurve {
    let mut special: BTreeMap<&str, Vec<String>> = c.vertices.iter().map(|v| (v.id.as_str(), Vec::new())).collect();
    let mut nodes = Vec::with_capacity(c.edges.len());
    let mut iso = DualIsomorphism {
        vertex_to_component: c.vertices.iter().map(|v| (v.id.clone(), v.id.clone())).collect(),
        edge_to_node: BTreeMap::new(),
        ray_to_marked_point: BTreeMap::new(),
    };
    for e in &c.edges {
        let branches = [branch_label(&e.id, &e.ends[0]), branch_label(&e.id, &e.ends[1])];
        for (end, b) in e.ends.iter().zip(&branches) {
            if let Some(list) = special.get_mut(end.as_str()) {
                list.push(b.clone());
            }
        }
        iso.edge_to_node.insert(e.id.clone(), e.id.clone());
        nodes.push(Node {
            id: e.id.clone(),
            components: e.ends.clone(),
            branches,
        });
    }
    let mut marked_points = Vec::with_capacity(c.rays.len());
    for r in &c.rays {
        if let Some(list) = special.get_mut(r.base.as_str()) {
            list.push(marked_label(&r.id));
        }
        iso.ray_to_marked_point.insert(r.id.clone(), r.id.clone());
        marked_points.push(MarkedPoint {
            id: r.id.clone(),
            component: r.base.clone(),
            contact_order: r.weight,
        });
    }
    let components = c
        .vertices
        .iter()
        .map(|v| Component {
            id: v.id.clone(),
            genus: 0,
            special_points: special.remove(v.id.as_str()).unwrap_or_default(),
        })
        .collect();
    DualCurve {
        components,
        nodes,
        marked_points,
        isomorphism: iso,
    }
}

/// Stalk of the characteristic at a node: `{(n1,n2) in N^2 : n2 - n1 in kZ}`,
/// the pushout of `N <- N -> N` along the diagonal and multiplication by `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeMonoid {
    #[serde(with = "num::integer")]
    k: BigInt,
}

impl NodeMonoid {
    pub fn new(k: BigInt) -> Result<Self> {
        if !k.is_positive() {
            return Err(Error::NonIntegralRatio { ratio: k.to_string() });
        }
        Ok(NodeMonoid { k })
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    /// `(1,1), (k,0), (0,k)`.
    pub fn generators(&self) -> [[BigInt; 2]; 3] {
        [
            [BigInt::one(), BigInt::one()],
            [self.k.clone(), BigInt::zero()],
            [BigInt::zero(), self.k.clone()],
        ]
    }

    pub fn contains(&self, n1: &BigInt, n2: &BigInt) -> bool {
        !n1.is_negative() && !n2.is_negative() && (n2 - n1).is_multiple_of(&self.k)
    }

    pub fn is_free(&self) -> bool {
        self.k.is_one()
    }
}

/// Node monoid of an edge of lattice length `length` and weight `weight`.
pub fn node_monoid(length: &Rational, weight: i64) -> Result<NodeMonoid> {
    let ratio = length / Rational::from_integer(weight.into());
    match num::as_integer(&ratio) {
        Some(k) if k.is_positive() => NodeMonoid::new(k),
        _ => Err(Error::NonIntegralRatio {
            ratio: format_rational(&ratio),
        }),
    }
}

/// `u_q = (v1 - v2) / weight` for edge `e` stored as `(v1, v2)`.
pub fn node_slope(c: &TropicalCurve, e: &str) -> Result<IntVec> {
    let edge = c.edge(e).ok_or_else(|| Error::NoSuchEdge(e.to_string()))?;
    let v1 = c.position(&edge.ends[0])?;
    let v2 = c.position(&edge.ends[1])?;
    let diff = (v1 - v2).scale(&Rational::new(BigInt::one(), edge.weight.into()));
    diff.to_integers()
        .map(IntVec)
        .ok_or_else(|| Error::CertificateInconsistency(format!("node slope {diff} of edge {e} is not integral")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCone {
    /// Fan ray indices of the cone whose relative interior holds the vertex.
    pub cone: Vec<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDatum {
    pub edge: String,
    /// `l / w` of the rescaled edge.
    #[serde(with = "num::integer")]
    pub k: BigInt,
    pub rho: i64,
    pub u_q: IntVec,
}

/// The point of the deformation cone given by the curve before rescaling:
/// the valuation `l(e) / w(e)` of each node's smoothing parameter and the
/// vertex positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasePoint {
    #[serde(with = "num::rational_map")]
    pub edge_valuations: BTreeMap<String, Rational>,
    pub vertex_positions: BTreeMap<String, RatVec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationCertificate {
    /// The subdivided, rescaled curve.
    pub curve: TropicalCurve,
    pub fan: Fan,
    #[serde(with = "num::integer")]
    pub multiplier: BigInt,
    pub subdivision: Vec<NewVertex>,
    pub vertex_cones: BTreeMap<String, VertexCone>,
    /// Directions the refinement of each vertex cone has to contain.
    pub vertex_stars: BTreeMap<String, Vec<PrimitiveVec>>,
    pub dual_curve: DualCurve,
    pub node_data: Vec<NodeDatum>,
    pub base_point: BasePoint,
}

fn star_directions(c: &TropicalCurve, v: &str) -> Result<Vec<PrimitiveVec>> {
    Ok(c.star(v)?.rays.into_iter().map(|r| r.direction).collect())
}

/// Runs subdivision, rescaling and the dual-curve construction and records
/// everything needed to check the combinatorial identities.
pub fn certify(c: &TropicalCurve, f: &Fan) -> Result<RealizationCertificate> {
    c.require_valid()?;
    let bal = c.balancing()?;
    if !bal.balanced {
        let at: Vec<&str> = bal.defects.iter().map(|d| d.vertex.as_str()).collect();
        return Err(Error::Unbalanced(at.join(", ")));
    }
    let support = refine::check_recession_support(c, f)?;
    if !support.supported {
        return Err(Error::RecessionNotSupported(support.offending));
    }
    let report = f.validate(&ValidationConfig::default());
    if let Some(v) = report.violation {
        return Err(Error::InvalidFan(v.to_string()));
    }

    let sub = refine::subdivide_along_fan(c, f)?;
    let (hat, multiplier) = refine::rescale_integral(&sub.output)?;

    let mut vertex_cones = BTreeMap::new();
    let mut vertex_stars = BTreeMap::new();
    for v in &hat.vertices {
        let i = f.smallest_containing_cone(&v.coords)?;
        vertex_cones.insert(
            v.id.clone(),
            VertexCone {
                cone: f.cones()[i].clone(),
                dim: f.cone(i).dim(),
            },
        );
        vertex_stars.insert(v.id.clone(), star_directions(&hat, &v.id)?);
    }

    let mut node_data = Vec::with_capacity(hat.edges.len());
    for e in &hat.edges {
        let monoid = node_monoid(&hat.edge_data(&e.id)?.length, e.weight)?;
        node_data.push(NodeDatum {
            edge: e.id.clone(),
            k: monoid.k().clone(),
            rho: e.weight,
            u_q: node_slope(&hat, &e.id)?,
        });
    }

    let mut edge_valuations = BTreeMap::new();
    for e in &sub.output.edges {
        let l = sub.output.edge_data(&e.id)?.length;
        edge_valuations.insert(e.id.clone(), l / Rational::from_integer(e.weight.into()));
    }
    let vertex_positions = sub
        .output
        .vertices
        .iter()
        .map(|v| (v.id.clone(), v.coords.clone()))
        .collect();

    Ok(RealizationCertificate {
        dual_curve: dual_curve(&hat),
        curve: hat,
        fan: f.clone(),
        multiplier,
        subdivision: sub.new_vertices,
        vertex_cones,
        vertex_stars,
        node_data,
        base_point: BasePoint {
            edge_valuations,
            vertex_positions,
        },
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

/// Re-derives every field from the rescaled curve and the fan.
pub fn verify_certificate(cert: &RealizationCertificate) -> CertificateReport {
    let mut v: Vec<String> = Vec::new();
    let c = &cert.curve;
    let f = &cert.fan;

    let validation = c.validate();
    if !validation.valid {
        for x in validation.violations {
            v.push(format!("curve: {x}"));
        }
        return CertificateReport {
            valid: false,
            violations: v,
        };
    }
    match c.balancing() {
        Ok(b) if b.balanced => {}
        Ok(b) => {
            for d in b.defects {
                v.push(format!("vertex {}: unbalanced, defect {:?}", d.vertex, d.defect.0));
            }
        }
        Err(e) => v.push(format!("balancing: {e}")),
    }
    if c.ambient_dim != f.ambient_dim() {
        v.push(format!(
            "fan dimension {} != curve dimension {}",
            f.ambient_dim(),
            c.ambient_dim
        ));
        return CertificateReport {
            valid: false,
            violations: v,
        };
    }
    if !cert.multiplier.is_positive() {
        v.push(format!("multiplier {} is not positive", cert.multiplier));
    }

    verify_dual_curve(c, &cert.dual_curve, &mut v);

    // vertex cones and stars
    let ids: BTreeSet<&String> = c.vertices.iter().map(|x| &x.id).collect();
    let recorded: BTreeSet<&String> = cert.vertex_cones.keys().collect();
    if ids != recorded {
        v.push("vertex_cones does not list exactly the vertices".into());
    }
    for vx in &c.vertices {
        match f.smallest_containing_cone(&vx.coords) {
            Ok(i) => {
                if cert.vertex_cones.get(&vx.id).map(|vc| &vc.cone) != Some(&f.cones()[i]) {
                    v.push(format!(
                        "vertex {}: recorded cone differs from {:?}",
                        vx.id,
                        f.cones()[i]
                    ));
                }
            }
            Err(e) => v.push(format!("vertex {}: {e}", vx.id)),
        }
        match star_directions(c, &vx.id) {
            Ok(dirs) if cert.vertex_stars.get(&vx.id) == Some(&dirs) => {}
            _ => v.push(format!("vertex {}: star directions differ", vx.id)),
        }
    }

    // node data
    let mut seen = BTreeSet::new();
    let n = Rational::from_integer(cert.multiplier.clone());
    for nd in &cert.node_data {
        if !seen.insert(nd.edge.clone()) {
            v.push(format!("edge {}: listed twice in node_data", nd.edge));
            continue;
        }
        let Some(e) = c.edge(&nd.edge) else {
            v.push(format!("edge {}: not an edge of the curve", nd.edge));
            continue;
        };
        if nd.rho != e.weight {
            v.push(format!("edge {}: rho {} != weight {}", nd.edge, nd.rho, e.weight));
        }
        let len = match c.edge_data(&e.id) {
            Ok(d) => d.length,
            Err(err) => {
                v.push(format!("edge {}: {err}", e.id));
                continue;
            }
        };
        if Rational::from_integer(&nd.k * BigInt::from(e.weight)) != len {
            v.push(format!(
                "edge {}: k * weight = {} * {} != length {}",
                nd.edge,
                nd.k,
                e.weight,
                format_rational(&len)
            ));
        }
        let v1 = c.position(&e.ends[0]).expect("validated");
        let v2 = c.position(&e.ends[1]).expect("validated");
        let lhs = nd.u_q.to_rat().scale(&Rational::from_integer(nd.rho.into()));
        if nd.u_q.0.len() != c.ambient_dim || lhs != v1 - v2 {
            v.push(format!("edge {}: rho * u_q != v1 - v2", nd.edge));
        }
        match cert.base_point.edge_valuations.get(&nd.edge) {
            Some(val) if val * &n == Rational::from_integer(nd.k.clone()) => {}
            Some(val) => v.push(format!(
                "edge {}: base valuation {} does not match k / multiplier",
                nd.edge,
                format_rational(val)
            )),
            None => v.push(format!("edge {}: missing base valuation", nd.edge)),
        }
    }
    for e in &c.edges {
        if !seen.contains(&e.id) {
            v.push(format!("edge {}: missing from node_data", e.id));
        }
    }
    if cert.base_point.edge_valuations.len() != c.edges.len() {
        v.push("base_point lists edges that are not in the curve".into());
    }
    for vx in &c.vertices {
        match cert.base_point.vertex_positions.get(&vx.id) {
            Some(p) if p.scale(&n) == vx.coords => {}
            _ => v.push(format!(
                "vertex {}: base position does not scale to the rescaled position",
                vx.id
            )),
        }
    }
    if cert.base_point.vertex_positions.len() != c.vertices.len() {
        v.push("base_point lists vertices that are not in the curve".into());
    }

    CertificateReport {
        valid: v.is_empty(),
        violations: v,
    }
}

fn verify_dual_curve(c: &TropicalCurve, d: &DualCurve, v: &mut Vec<String>) {
    let comps: BTreeSet<&str> = d.components.iter().map(|x| x.id.as_str()).collect();
    for vx in &c.vertices {
        match d.isomorphism.vertex_to_component.get(&vx.id) {
            Some(comp) if comps.contains(comp.as_str()) => {}
            _ => v.push(format!("vertex {}: no component", vx.id)),
        }
    }
    if d.components.len() != c.vertices.len() {
        v.push(format!(
            "dual curve has {} components for {} vertices",
            d.components.len(),
            c.vertices.len()
        ));
    }
    if d.components.iter().any(|x| x.genus != 0) {
        v.push("dual curve has a component of positive genus".into());
    }
    let comp_of = |vertex: &str| d.isomorphism.vertex_to_component.get(vertex).cloned();
    for e in &c.edges {
        let node = d
            .isomorphism
            .edge_to_node
            .get(&e.id)
            .and_then(|n| d.nodes.iter().find(|x| &x.id == n));
        match node {
            Some(node) => {
                let expected = [comp_of(&e.ends[0]), comp_of(&e.ends[1])];
                if [Some(node.components[0].clone()), Some(node.components[1].clone())] != expected {
                    v.push(format!("edge {}: node joins the wrong components", e.id));
                }
            }
            None => v.push(format!("edge {}: no node", e.id)),
        }
    }
    if d.nodes.len() != c.edges.len() {
        v.push(format!(
            "dual curve has {} nodes for {} edges",
            d.nodes.len(),
            c.edges.len()
        ));
    }
    for r in &c.rays {
        let mp = d
            .isomorphism
            .ray_to_marked_point
            .get(&r.id)
            .and_then(|m| d.marked_points.iter().find(|x| &x.id == m));
        match mp {
            Some(mp) => {
                if Some(mp.component.clone()) != comp_of(&r.base) {
                    v.push(format!("ray {}: marked point on the wrong component", r.id));
                }
                if mp.contact_order != r.weight {
                    v.push(format!(
                        "ray {}: contact order {} != weight {}",
                        r.id, mp.contact_order, r.weight
                    ));
                }
            }
            None => v.push(format!("ray {}: no marked point", r.id)),
        }
    }
    if d.marked_points.len() != c.rays.len() {
        v.push(format!(
            "dual curve has {} marked points for {} rays",
            d.marked_points.len(),
            c.rays.len()
        ));
    }
    for comp in &d.components {
        let distinct: BTreeSet<&String> = comp.special_points.iter().collect();
        if distinct.len() != comp.special_points.len() {
            v.push(format!("component {}: special points are not distinct", comp.id));
        }
    }
}
