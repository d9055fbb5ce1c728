//! Canonical curves and fans shared by tests, benches and the CLI self-test.
//!
//! The same objects are shipped as JSON under `fixtures/` at the workspace
//! root; a test keeps the two in sync.

use crate::curve::{Edge, Ray, TropicalCurve, Vertex};
use crate::lattice::{Fan, PrimitiveVec, RatVec};
use crate::num::rat;

fn vx(id: &str, coords: &[i64]) -> Vertex {
    Vertex {
        id: id.into(),
        coords: RatVec::from_ints(coords),
    }
}

fn ed(id: &str, u: &str, w: &str, weight: i64) -> Edge {
    Edge {
        id: id.into(),
        ends: [u.into(), w.into()],
        weight,
    }
}

fn ry(id: &str, base: &str, dir: &[i64], weight: i64) -> Ray {
    Ray {
        id: id.into(),
        base: base.into(),
        direction: PrimitiveVec::from_ints(dir).expect("fixture directions are primitive"),
        weight,
    }
}

fn pv(v: &[i64]) -> PrimitiveVec {
    PrimitiveVec::from_ints(v).expect("fixture rays are primitive")
}

/// Vertex at the origin with rays `±(1,0)`.
pub fn line() -> TropicalCurve {
    TropicalCurve {
        ambient_dim: 2,
        vertices: vec![vx("v", &[0, 0])],
        edges: vec![],
        rays: vec![ry("r+", "v", &[1, 0], 1), ry("r-", "v", &[-1, 0], 1)],
    }
}

/// The tropical line in the plane.
pub fn tripod() -> TropicalCurve {
    TropicalCurve {
        ambient_dim: 2,
        vertices: vec![vx("v", &[0, 0])],
        edges: vec![],
        rays: vec![
            ry("r1", "v", &[1, 0], 1),
            ry("r2", "v", &[0, 1], 1),
            ry("r3", "v", &[-1, -1], 1),
        ],
    }
}

/// Two rays `(1,0)`, `(0,1)`; unbalanced with defect `(1,1)`.
pub fn unbal() -> TropicalCurve {
    TropicalCurve {
        ambient_dim: 2,
        vertices: vec![vx("v", &[0, 0])],
        edges: vec![],
        rays: vec![ry("r1", "v", &[1, 0], 1), ry("r2", "v", &[0, 1], 1)],
    }
}

/// Segment `(0,0)-(2,0)` of weight 2 with weight-2 rays continuing it.
pub fn segfan() -> TropicalCurve {
    TropicalCurve {
        ambient_dim: 2,
        vertices: vec![vx("a", &[0, 0]), vx("b", &[2, 0])],
        edges: vec![ed("e", "a", "b", 2)],
        rays: vec![ry("ra", "a", &[-1, 0], 2), ry("rb", "b", &[1, 0], 2)],
    }
}

/// Triangle `(0,0),(1,0),(0,1)` with balancing rays; genus 1 in the plane.
pub fn cycle3() -> TropicalCurve {
    TropicalCurve {
        ambient_dim: 2,
        vertices: vec![vx("v0", &[0, 0]), vx("v1", &[1, 0]), vx("v2", &[0, 1])],
        edges: vec![
            ed("e01", "v0", "v1", 1),
            ed("e12", "v1", "v2", 1),
            ed("e20", "v2", "v0", 1),
        ],
        rays: vec![
            ry("r0", "v0", &[-1, -1], 1),
            ry("r1", "v1", &[2, -1], 1),
            ry("r2", "v2", &[-1, 2], 1),
        ],
    }
}

/// `cycle3` in the plane `z = 0` of `R^3`, with the ray at the origin split
/// into `(-1,-1,-1)` and `(0,0,1)`. The only place the curve leaves the plane
/// of its cycle is the origin, so it is not well-spaced.
pub fn speyer3() -> TropicalCurve {
    TropicalCurve {
        ambient_dim: 3,
        vertices: vec![vx("v0", &[0, 0, 0]), vx("v1", &[1, 0, 0]), vx("v2", &[0, 1, 0])],
        edges: vec![
            ed("e01", "v0", "v1", 1),
            ed("e12", "v1", "v2", 1),
            ed("e20", "v2", "v0", 1),
        ],
        rays: vec![
            ry("r0a", "v0", &[-1, -1, -1], 1),
            ry("r0b", "v0", &[0, 0, 1], 1),
            ry("r1", "v1", &[2, -1, 0], 1),
            ry("r2", "v2", &[-1, 2, 0], 1),
        ],
    }
}

/// `speyer3` with the ray at `(1,0,0)` also split out of the plane, giving
/// two departures at distance zero.
pub fn speyer3_two() -> TropicalCurve {
    let mut c = speyer3();
    c.rays.retain(|r| r.id != "r1");
    c.rays.insert(2, ry("r1a", "v1", &[2, -1, -1], 1));
    c.rays.insert(3, ry("r1b", "v1", &[0, 0, 1], 1));
    c
}

/// Diagonal segment `(-1,-1)-(1,1)` with rays `±(1,1)`; crosses the origin
/// wall of the fan of P^2.
pub fn diag() -> TropicalCurve {
    TropicalCurve {
        ambient_dim: 2,
        vertices: vec![vx("a", &[-1, -1]), vx("b", &[1, 1])],
        edges: vec![ed("e", "a", "b", 1)],
        rays: vec![ry("ra", "a", &[-1, -1], 1), ry("rb", "b", &[1, 1], 1)],
    }
}

/// Tree whose bounded edges have length/weight ratios `3/4` and `5/6`.
pub fn ratios() -> TropicalCurve {
    TropicalCurve {
        ambient_dim: 2,
        vertices: vec![
            Vertex {
                id: "a".into(),
                coords: RatVec::from_ints(&[0, 0]),
            },
            Vertex {
                id: "b".into(),
                coords: RatVec(vec![rat(3, 4), rat(0, 1)]),
            },
            Vertex {
                id: "c".into(),
                coords: RatVec(vec![rat(3, 4), rat(5, 3)]),
            },
        ],
        edges: vec![ed("ab", "a", "b", 1), ed("bc", "b", "c", 2)],
        rays: vec![
            ry("ra", "a", &[-1, 0], 1),
            ry("rb", "b", &[1, -2], 1),
            ry("rc", "c", &[0, 1], 2),
        ],
    }
}

/// The six canonical curves.
pub fn all_curves() -> Vec<(&'static str, TropicalCurve)> {
    vec![
        ("line", line()),
        ("tripod", tripod()),
        ("unbal", unbal()),
        ("segfan", segfan()),
        ("cycle3", cycle3()),
        ("speyer3", speyer3()),
    ]
}

/// Auxiliary curves used by individual operations.
pub fn extra_curves() -> Vec<(&'static str, TropicalCurve)> {
    vec![("speyer3_two", speyer3_two()), ("diag", diag()), ("ratios", ratios())]
}

/// Fan of P^2: rays `(1,0), (0,1), (-1,-1)`.
pub fn fan_p2() -> Fan {
    Fan::from_maximal_cones(
        2,
        vec![pv(&[1, 0]), pv(&[0, 1]), pv(&[-1, -1])],
        &[vec![0, 1], vec![1, 2], vec![0, 2]],
        true,
    )
    .expect("fixture fan")
}

/// Fan of P^1 x P^1: the four quadrants.
pub fn fan_p1xp1() -> Fan {
    Fan::from_maximal_cones(
        2,
        vec![pv(&[1, 0]), pv(&[0, 1]), pv(&[-1, 0]), pv(&[0, -1])],
        &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        true,
    )
    .expect("fixture fan")
}

/// Complete fan of the plane on the ray directions of `cycle3`.
pub fn fan_cycle3() -> Fan {
    Fan::from_maximal_cones(
        2,
        vec![pv(&[-1, -1]), pv(&[2, -1]), pv(&[-1, 2])],
        &[vec![0, 1], vec![1, 2], vec![0, 2]],
        true,
    )
    .expect("fixture fan")
}

/// Fan of P^3 stellarly subdivided at `(2,-1,0)` and `(-1,2,0)`, so that its
/// rays contain every ray direction of `speyer3`.
pub fn fan_p3_speyer() -> Fan {
    // a=e1 b=e2 c=e3 d=(-1,-1,-1) p=(2,-1,0) q=(-1,2,0)
    let (a, b, c, d, p, q) = (0, 1, 2, 3, 4, 5);
    Fan::from_maximal_cones(
        3,
        vec![
            pv(&[1, 0, 0]),
            pv(&[0, 1, 0]),
            pv(&[0, 0, 1]),
            pv(&[-1, -1, -1]),
            pv(&[2, -1, 0]),
            pv(&[-1, 2, 0]),
        ],
        &[
            vec![a, b, c],
            vec![a, b, d],
            vec![p, c, d],
            vec![a, p, d],
            vec![a, c, p],
            vec![q, c, d],
            vec![b, q, d],
            vec![b, c, q],
        ],
        true,
    )
    .expect("fixture fan")
}

pub fn all_fans() -> Vec<(&'static str, Fan)> {
    vec![
        ("p2", fan_p2()),
        ("p1xp1", fan_p1xp1()),
        ("cycle3_fan", fan_cycle3()),
        ("p3_speyer", fan_p3_speyer()),
    ]
}

/// A complete fan whose rays support the recession fan of the named curve.
pub fn compatible_fan(curve: &str) -> Option<Fan> {
    match curve {
        "line" | "segfan" => Some(fan_p1xp1()),
        "tripod" => Some(fan_p2()),
        "cycle3" => Some(fan_cycle3()),
        "speyer3" => Some(fan_p3_speyer()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::PathBuf;

    fn fixture_dir() -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
    }

    /// Set `TROPIC_WRITE_FIXTURES=1` to regenerate the JSON files.
    #[test]
    fn json_files_match_constructors() {
        let write = std::env::var("TROPIC_WRITE_FIXTURES").is_ok();
        let dir = fixture_dir();
        for (name, c) in all_curves().into_iter().chain(extra_curves()) {
            let path = dir.join(format!("{name}.json"));
            if write {
                std::fs::write(&path, serde_json::to_string_pretty(&c).unwrap() + "\n").unwrap();
            }
            let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path:?}: {e}"));
            let parsed: TropicalCurve = serde_json::from_str(&text).unwrap();
            assert_eq!(parsed, c, "{name}");
        }
        for (name, f) in all_fans() {
            let path = dir.join(format!("{name}.json"));
            if write {
                std::fs::write(&path, serde_json::to_string_pretty(&f).unwrap() + "\n").unwrap();
            }
            let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path:?}: {e}"));
            let parsed: Fan = serde_json::from_str(&text).unwrap();
            assert_eq!(parsed, f, "{name}");
        }
    }
}
