//! Random balanced trivalent trees, for property tests and benchmarks.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::curve::{Edge, Ray, TropicalCurve, Vertex};
use crate::lattice::{primitive, PrimitiveVec, RatVec};
use crate::num::Rational;

#[derive(Clone, Debug)]
pub struct TreeParams {
    pub ambient_dim: usize,
    /// Number of vertices, at least 1.
    pub vertices: usize,
    /// Bound on the coordinates of the directions drawn at each split.
    pub max_coord: i64,
    /// Edge lengths are `p / q` with `1 <= p <= max_length * q`, `1 <= q <= max_denominator`.
    pub max_length: i64,
    pub max_denominator: i64,
}

impl TreeParams {
    pub fn new(ambient_dim: usize, vertices: usize) -> Self {
        TreeParams {
            ambient_dim,
            vertices,
            max_coord: 2,
            max_length: 3,
            max_denominator: 1,
        }
    }
}

fn random_vector(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<BigInt> {
    (0..n).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()
}

/// `(primitive direction, weight)` of a nonzero integer vector.
fn split_weight(v: &[BigInt]) -> (PrimitiveVec, i64) {
    let p = primitive(v).expect("nonzero");
    let i = v.iter().position(|x| !x.is_zero()).expect("nonzero");
    let w = (&v[i] / &p.coords()[i]).abs();
    (p, i64::try_from(w).expect("small weight"))
}

fn parallel(a: &[BigInt], b: &[BigInt]) -> bool {
    let n = a.len();
    (0..n).all(|i| (0..n).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

/// Two nonzero vectors summing to `total`, neither parallel to `total` nor
/// to each other.
fn split(rng: &mut impl Rng, total: &[BigInt], bound: i64) -> (Vec<BigInt>, Vec<BigInt>) {
    loop {
        let a = random_vector(rng, total.len(), bound);
        let b: Vec<BigInt> = total.iter().zip(&a).map(|(t, x)| t - x).collect();
        let zero = |v: &[BigInt]| v.iter().all(Zero::is_zero);
        if zero(&a) || zero(&b) || parallel(&a, total) || parallel(&b, total) || parallel(&a, &b) {
            continue;
        }
        return (a, b);
    }
}

/// A balanced trivalent tree: grown from a tripod by repeatedly turning a
/// ray into an edge ending at a new vertex, where the ray splits in two.
pub fn random_trivalent_tree(rng: &mut impl Rng, p: &TreeParams) -> TropicalCurve {
    let n = p.ambient_dim;
    assert!(n >= 2 && p.vertices >= 1);
    let root = RatVec(
        (0..n)
            .map(|_| Rational::from_integer(rng.gen_range(-3..=3).into()))
            .collect(),
    );
    let mut c = TropicalCurve {
        ambient_dim: n,
        vertices: vec![Vertex {
            id: "v0".into(),
            coords: root,
        }],
        edges: Vec::new(),
        rays: Vec::new(),
    };

    // three vectors summing to zero, pairwise non-parallel
    let first = loop {
        let v = random_vector(rng, n, p.max_coord);
        if v.iter().any(|x| !x.is_zero()) {
            break v;
        }
    };
    let neg: Vec<BigInt> = first.iter().map(|x| -x).collect();
    let (a, b) = split(rng, &neg, p.max_coord);
    let mut next_ray = 0;
    for v in [first, a, b] {
        let (direction, weight) = split_weight(&v);
        next_ray += 1;
        c.rays.push(Ray {
            id: format!("r{next_ray}"),
            base: "v0".into(),
            direction,
            weight,
        });
    }

    for k in 1..p.vertices {
        let i = rng.gen_range(0..c.rays.len());
        let ray = c.rays.remove(i);
        let q = rng.gen_range(1..=p.max_denominator);
        let len = Rational::new(rng.gen_range(1..=p.max_length * q).into(), q.into());
        let base = c.position(&ray.base).expect("known vertex").clone();
        let id = format!("v{k}");
        c.vertices.push(Vertex {
            id: id.clone(),
            coords: base.add_scaled(&len, ray.direction.coords()),
        });
        c.edges.push(Edge {
            id: format!("e{k}"),
            ends: [ray.base.clone(), id.clone()],
            weight: ray.weight,
        });
        let total = ray.direction.scaled(&BigInt::from(ray.weight));
        let (a, b) = split(rng, &total, p.max_coord);
        for v in [a, b] {
            let (direction, weight) = split_weight(&v);
            next_ray += 1;
            c.rays.push(Ray {
                id: format!("r{next_ray}"),
                base: id.clone(),
                direction,
                weight,
            });
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trees_are_valid_balanced_and_trivalent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..60 {
            let mut p = TreeParams::new(2 + i % 2, 1 + i % 6);
            p.max_denominator = 1 + (i as i64) % 3;
            let c = random_trivalent_tree(&mut rng, &p);
            assert!(c.validate().valid, "{c:?}");
            assert!(c.is_balanced().unwrap());
            assert_eq!(c.genus(), 0);
            assert_eq!(c.vertices.len(), p.vertices);
            for v in &c.vertices {
                assert_eq!(c.valence(&v.id).unwrap(), 3);
            }
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let p = TreeParams::new(3, 5);
        let a = random_trivalent_tree(&mut ChaCha8Rng::seed_from_u64(1), &p);
        let b = random_trivalent_tree(&mut ChaCha8Rng::seed_from_u64(1), &p);
        assert_eq!(a, b);
    }
}
