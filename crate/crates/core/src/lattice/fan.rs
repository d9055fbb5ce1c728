use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::cone::{Cone, Containment};
use super::dd;
use super::vector::{PrimitiveVec, RatVec};
use crate::error::{Error, Result};

/// A fan given by a ray list and cones as sets of ray indices.
///
/// The cone list is expected to be closed under faces; [`Fan::validate`]
/// checks that and the intersection property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FanFile", into = "FanFile")]
pub struct Fan {
    ambient_dim: usize,
    rays: Vec<PrimitiveVec>,
    cones: Vec<Vec<usize>>,
    trusted_complete: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct FanFile {
    ambient_dim: usize,
    rays: Vec<PrimitiveVec>,
    cones: Vec<Vec<usize>>,
    #[serde(default)]
    trusted_complete: bool,
}

impl TryFrom<FanFile> for Fan {
    type Error = Error;

    fn try_from(f: FanFile) -> Result<Fan> {
        Fan::new(f.ambient_dim, f.rays, f.cones, f.trusted_complete)
    }
}

impl From<Fan> for FanFile {
    fn from(f: Fan) -> FanFile {
        FanFile {
            ambient_dim: f.ambient_dim,
            rays: f.rays,
            cones: f.cones,
            trusted_complete: f.trusted_complete,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FanViolation {
    DuplicateRay {
        rays: [usize; 2],
    },
    NotPointed {
        cone: Vec<usize>,
    },
    RedundantGenerator {
        cone: Vec<usize>,
        ray: usize,
    },
    FaceClosure {
        cone: Vec<usize>,
        missing_face: Vec<usize>,
    },
    NonFaceIntersection {
        cones: [Vec<usize>; 2],
        intersection_rays: Vec<Vec<i64>>,
    },
    TooLarge {
        cone: Vec<usize>,
    },
}

impl std::fmt::Display for FanViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        match self {
            FanViolation::DuplicateRay { rays } => write!(f, "rays {} and {} coincide", rays[0], rays[1]),
            FanViolation::NotPointed { cone } => write!(f, "cone {cone:?} is not pointed"),
            FanViolation::RedundantGenerator { cone, ray } => {
                write!(f, "ray {ray} is not an extreme ray of cone {cone:?}")
            }
            FanViolation::FaceClosure { cone, missing_face } => {
                write!(
                    f,
                    "face closure violated: face {missing_face:?} of cone {cone:?} is missing"
                )
            }
            FanViolation::NonFaceIntersection { cones, .. } => write!(
                f,
                "intersection of cones {:?} and {:?} is not a face of both",
                cones[0], cones[1]
            ),
            FanViolation::TooLarge { cone } => write!(f, "cone {cone:?} exceeds facet enumeration limits"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanReport {
    pub valid: bool,
    pub skipped: bool,
    pub warnings: Vec<String>,
    pub violation: Option<FanViolation>,
}

#[derive(Clone, Copy, Debug)]
pub struct ValidationConfig {
    /// A trusted fan with more cones than this is not checked.
    pub trusted_skip_above: usize,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        ValidationConfig { trusted_skip_above: 64 }
    }
}

impl Fan {
    /// Structural checks only: ray dimensions and cone indices. Cone index
    /// lists are sorted and deduplicated.
    pub fn new(
        ambient_dim: usize,
        rays: Vec<PrimitiveVec>,
        cones: Vec<Vec<usize>>,
        trusted_complete: bool,
    ) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidFan("ambient dimension must be positive".into()));
        }
        for r in &rays {
            if r.dim() != ambient_dim {
                return Err(Error::DimMismatch {
                    expected: ambient_dim,
                    found: r.dim(),
                });
            }
        }
        let mut normalized = Vec::with_capacity(cones.len());
        for c in cones {
            let set: BTreeSet<usize> = c.into_iter().collect();
            if let Some(&bad) = set.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidFan(format!("cone refers to missing ray {bad}")));
            }
            normalized.push(set.into_iter().collect());
        }
        Ok(Fan {
            ambient_dim,
            rays,
            cones: normalized,
            trusted_complete,
        })
    }

    /// Builds a fan from its maximal cones, adding every face.
    pub fn from_maximal_cones(
        ambient_dim: usize,
        rays: Vec<PrimitiveVec>,
        maximal: &[Vec<usize>],
        trusted_complete: bool,
    ) -> Result<Self> {
        let skeleton = Fan::new(ambient_dim, rays, maximal.to_vec(), trusted_complete)?;
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for i in 0..skeleton.cones.len() {
            for face in skeleton.faces_of_cone(i)? {
                all.insert(face);
            }
        }
        let mut cones: Vec<Vec<usize>> = all.into_iter().collect();
        cones.sort_by_cached_key(|c| skeleton.cone_sort_key(c));
        Fan::new(ambient_dim, skeleton.rays, cones, trusted_complete)
    }

    /// The 1-dimensional fan of the given distinct rays plus the origin.
    pub fn from_rays(ambient_dim: usize, rays: Vec<PrimitiveVec>) -> Result<Self> {
        let mut cones = vec![vec![]];
        cones.extend((0..rays.len()).map(|i| vec![i]));
        Fan::new(ambient_dim, rays, cones, false)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[PrimitiveVec] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn trusted_complete(&self) -> bool {
        self.trusted_complete
    }

    pub fn set_trusted_complete(&mut self, trusted: bool) {
        self.trusted_complete = trusted;
    }

    pub fn cone(&self, i: usize) -> Cone {
        Cone::new(self.ambient_dim, self.cones[i].iter().map(|&r| self.rays[r].clone()))
            .expect("ray dimensions checked on construction")
    }

    pub fn cone_generators(&self, i: usize) -> Vec<PrimitiveVec> {
        self.cones[i].iter().map(|&r| self.rays[r].clone()).collect()
    }

    pub fn find_cone(&self, ray_indices: &[usize]) -> Option<usize> {
        let key: Vec<usize> = ray_indices
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        self.cones.iter().position(|c| *c == key)
    }

    fn cone_sort_key(&self, c: &[usize]) -> Vec<PrimitiveVec> {
        let mut g: Vec<PrimitiveVec> = c.iter().map(|&r| self.rays[r].clone()).collect();
        g.sort();
        g
    }

    /// Cone indices ordered lexicographically by their sorted generator
    /// lists; all reports iterate in this order.
    pub fn ordered_cones(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.cones.len()).collect();
        idx.sort_by(|&a, &b| {
            self.cone_sort_key(&self.cones[a])
                .cmp(&self.cone_sort_key(&self.cones[b]))
                .then(a.cmp(&b))
        });
        idx
    }

    /// Faces of cone `i` as sets of fan ray indices.
    pub fn faces_of_cone(&self, i: usize) -> Result<Vec<Vec<usize>>> {
        let cone = self.cone(i);
        let local_to_fan: Vec<usize> = cone
            .generators()
            .iter()
            .map(|g| {
                *self.cones[i]
                    .iter()
                    .find(|&&r| &self.rays[r] == g)
                    .expect("generator comes from this cone")
            })
            .collect();
        let mut out: Vec<Vec<usize>> = cone
            .faces()?
            .into_iter()
            .map(|f| {
                let mut v: Vec<usize> = f.into_iter().map(|l| local_to_fan[l]).collect();
                v.sort();
                v
            })
            .collect();
        out.sort_by_cached_key(|c| self.cone_sort_key(c));
        Ok(out)
    }

    pub fn validate(&self, config: &ValidationConfig) -> FanReport {
        let mut report = FanReport::default();
        if self.trusted_complete && self.cones.len() > config.trusted_skip_above {
            report.valid = true;
            report.skipped = true;
            report.warnings.push(format!(
                "validation skipped: fan is trusted and has {} cones (> {})",
                self.cones.len(),
                config.trusted_skip_above
            ));
            return report;
        }
        match self.first_violation() {
            Some(v) => {
                report.valid = false;
                report.violation = Some(v);
            }
            None => report.valid = true,
        }
        if !self.trusted_complete {
            report
                .warnings
                .push("completeness is not checked; containment failures will surface as NotInSupport".into());
        }
        report
    }

    fn first_violation(&self) -> Option<FanViolation> {
        for a in 0..self.rays.len() {
            for b in a + 1..self.rays.len() {
                if self.rays[a] == self.rays[b] {
                    return Some(FanViolation::DuplicateRay { rays: [a, b] });
                }
            }
        }
        let present: BTreeSet<&Vec<usize>> = self.cones.iter().collect();
        let order = self.ordered_cones();
        let mut faces: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
        for &i in &order {
            let cone = self.cone(i);
            let too_large = || FanViolation::TooLarge {
                cone: self.cones[i].clone(),
            };
            match cone.is_pointed() {
                Ok(true) => {}
                Ok(false) => {
                    return Some(FanViolation::NotPointed {
                        cone: self.cones[i].clone(),
                    })
                }
                Err(_) => return Some(too_large()),
            }
            let Ok(fs) = self.faces_of_cone(i) else {
                return Some(too_large());
            };
            let fs: BTreeSet<Vec<usize>> = fs.into_iter().collect();
            for &r in &self.cones[i] {
                if !fs.contains(&vec![r]) {
                    return Some(FanViolation::RedundantGenerator {
                        cone: self.cones[i].clone(),
                        ray: r,
                    });
                }
            }
            let mut sorted_faces: Vec<&Vec<usize>> = fs.iter().collect();
            sorted_faces.sort_by_cached_key(|c| self.cone_sort_key(c));
            for f in sorted_faces {
                if !present.contains(f) {
                    return Some(FanViolation::FaceClosure {
                        cone: self.cones[i].clone(),
                        missing_face: f.clone(),
                    });
                }
            }
            faces.insert(i, fs);
        }
        for (ai, &a) in order.iter().enumerate() {
            for &b in &order[ai + 1..] {
                if let Some(v) = self.intersection_violation(a, b, &faces) {
                    return Some(v);
                }
            }
        }
        None
    }

    fn intersection_violation(
        &self,
        a: usize,
        b: usize,
        faces: &BTreeMap<usize, BTreeSet<Vec<usize>>>,
    ) -> Option<FanViolation> {
        let ca = &self.cones[a];
        let cb = &self.cones[b];
        let shared: Vec<usize> = ca.iter().filter(|r| cb.contains(r)).cloned().collect();
        let ha = self.cone(a).h_rep().ok()?;
        let hb = self.cone(b).h_rep().ok()?;
        let mut ineq = Vec::new();
        for h in [&ha, &hb] {
            for e in &h.equations {
                ineq.push(e.clone());
                ineq.push(e.iter().map(|x| -x).collect());
            }
            ineq.extend(h.facets.iter().cloned());
        }
        let inter = dd::cone_from_inequalities(&ineq, self.ambient_dim);
        let shared_cone =
            Cone::new(self.ambient_dim, shared.iter().map(|&r| self.rays[r].clone())).expect("dims checked");
        let mut ok = faces[&a].contains(&shared) && faces[&b].contains(&shared);
        if ok {
            ok = inter.lineality.is_empty()
                && inter.rays.iter().all(|r| {
                    shared_cone
                        .contains(&RatVec::from_integer_vec(r), Containment::Closure)
                        .unwrap_or(false)
                });
        }
        if ok {
            return None;
        }
        let mut gens: Vec<Vec<i64>> = inter
            .rays
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap_or(i64::MAX)).collect())
            .collect();
        gens.sort();
        Some(FanViolation::NonFaceIntersection {
            cones: [ca.clone(), cb.clone()],
            intersection_rays: gens,
        })
    }

    /// Index of the unique cone whose relative interior contains `p`.
    pub fn smallest_containing_cone(&self, p: &RatVec) -> Result<usize> {
        if p.dim() != self.ambient_dim {
            return Err(Error::DimMismatch {
                expected: self.ambient_dim,
                found: p.dim(),
            });
        }
        for i in self.ordered_cones() {
            if self.cone(i).contains(p, Containment::RelativeInterior)? {
                return Ok(i);
            }
        }
        Err(Error::NotInSupport(p.to_string()))
    }
}
