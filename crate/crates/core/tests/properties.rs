use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;

use common::{on_curve, samples};
use tropic_core::defspace;
use tropic_core::degeneration::NodeMonoid;
use tropic_core::fixtures;
use tropic_core::generate::{random_trivalent_tree, TreeParams};
use tropic_core::lattice::{kernel_dimension, Containment, Fan, RatMatrix, RatVec};
use tropic_core::num::rat;
use tropic_core::refine::{rescale_integral, subdivide_along_fan};
use tropic_core::{Rational, TropicalCurve};

/// Rank by elimination with full pivoting, scanning columns from the right.
fn rank_column_pivot(rows: &[Vec<Rational>], ncols: usize) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut used_rows = vec![false; m.len()];
    let mut rank = 0;
    for col in (0..ncols).rev() {
        let Some(p) = (0..m.len()).find(|&r| !used_rows[r] && !m[r][col].is_zero()) else {
            continue;
        };
        used_rows[p] = true;
        rank += 1;
        let pivot = m[p].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if used_rows[r] || row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot[col];
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
    }
    rank
}

#[test]
fn kernel_dimension_agrees_with_column_pivoting() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let nrows = rng.gen_range(1..=6);
        let ncols = rng.gen_range(1..=7);
        let rows: Vec<Vec<Rational>> = (0..nrows)
            .map(|_| {
                (0..ncols)
                    .map(|_| {
                        // sparse, with some dependent rows
                        if rng.gen_bool(0.3) {
                            Rational::zero()
                        } else {
                            rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))
                        }
                    })
                    .collect()
            })
            .collect();
        let mut rows = rows;
        if nrows > 2 && rng.gen_bool(0.5) {
            let combo: Vec<Rational> = rows[0].iter().zip(&rows[1]).map(|(a, b)| a * rat(2, 1) - b).collect();
            rows.push(combo);
        }
        let m = RatMatrix::new(ncols, rows.clone());
        assert_eq!(
            kernel_dimension(&m),
            ncols - rank_column_pivot(&rows, ncols),
            "{rows:?}"
        );
    }
}

fn cases() -> Vec<(String, TropicalCurve, Fan)> {
    let mut out = Vec::new();
    for (name, c) in fixtures::all_curves().into_iter().chain(fixtures::extra_curves()) {
        let fan = if c.ambient_dim == 3 {
            fixtures::fan_p3_speyer()
        } else {
            fixtures::fan_p2()
        };
        out.push((format!("{name}/p2-or-p3"), c.clone(), fan));
        if let Some(f) = fixtures::compatible_fan(name) {
            out.push((format!("{name}/compatible"), c.clone(), f));
        }
        if c.ambient_dim == 2 {
            out.push((format!("{name}/p1xp1"), c, fixtures::fan_p1xp1()));
        }
    }
    out
}

#[test]
fn subdivision_preserves_support() {
    for (name, c, f) in cases() {
        let out = subdivide_along_fan(&c, &f).unwrap().output;
        for p in samples(&c) {
            assert!(on_curve(&out, &p), "{name}: lost {p}");
        }
        for p in samples(&out) {
            assert!(on_curve(&c, &p), "{name}: gained {p}");
        }
    }
}

#[test]
fn subdivision_preserves_balancing_genus_and_recession() {
    for (name, c, f) in cases() {
        let rec = subdivide_along_fan(&c, &f).unwrap();
        let out = &rec.output;
        assert!(out.validate().valid, "{name}");
        assert_eq!(out.is_balanced().unwrap(), c.is_balanced().unwrap(), "{name}");
        assert_eq!(out.genus(), c.genus(), "{name}");
        assert_eq!(out.recession_fan(), c.recession_fan(), "{name}");
        for nv in &rec.new_vertices {
            assert_eq!(out.valence(&nv.id).unwrap(), 2, "{name}: {}", nv.id);
        }
        assert_eq!(out.vertices.len(), c.vertices.len() + rec.new_vertices.len(), "{name}");
    }
}

#[test]
fn subdivision_pieces_lie_in_single_cones() {
    for (name, c, f) in cases() {
        let out = subdivide_along_fan(&c, &f).unwrap().output;
        let in_one_cone = |pts: &[RatVec]| {
            (0..f.cones().len()).any(|i| pts.iter().all(|p| f.cone(i).contains(p, Containment::Closure).unwrap()))
        };
        for e in &out.edges {
            let u = out.position(&e.ends[0]).unwrap().clone();
            let w = out.position(&e.ends[1]).unwrap().clone();
            assert!(in_one_cone(&[u, w]), "{name}: edge {}", e.id);
        }
        for r in &out.rays {
            let b = out.position(&r.base).unwrap().clone();
            let far = &b + &r.direction.to_rat().scale(&rat(1000, 1));
            assert!(in_one_cone(&[b, far]), "{name}: ray {}", r.id);
        }
    }
}

#[test]
fn subdivision_is_idempotent() {
    for (name, c, f) in cases() {
        let once = subdivide_along_fan(&c, &f).unwrap();
        let twice = subdivide_along_fan(&once.output, &f).unwrap();
        assert_eq!(twice.output, once.output, "{name}");
        assert!(twice.new_vertices.is_empty(), "{name}");
    }
}

#[test]
fn rescaling_commutes_with_subdivision() {
    for (name, c, f) in cases() {
        let (scaled, n) = rescale_integral(&c).unwrap();
        let a = subdivide_along_fan(&scaled, &f).unwrap().output;
        let b = subdivide_along_fan(&c, &f)
            .unwrap()
            .output
            .scaled(&Rational::from_integer(n));
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn rescaled_curves_have_integral_ratios() {
    for (name, c) in fixtures::all_curves().into_iter().chain(fixtures::extra_curves()) {
        let (hat, n) = rescale_integral(&c).unwrap();
        assert!(n.is_positive());
        for e in &hat.edges {
            let l = hat.edge_data(&e.id).unwrap().length;
            assert!((l / Rational::from_integer(e.weight.into())).is_integer(), "{name}");
        }
        assert_eq!(hat.is_balanced().unwrap(), c.is_balanced().unwrap());
        assert_eq!(
            defspace::combinatorial_type(&hat).unwrap(),
            defspace::combinatorial_type(&c).unwrap()
        );
    }
}

#[test]
fn random_trees_are_never_superabundant() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..50 {
        let mut p = TreeParams::new(2 + i % 2, 1 + i % 6);
        p.max_denominator = 3;
        let c = random_trivalent_tree(&mut rng, &p);
        let s = defspace::is_superabundant(&c).unwrap();
        assert_eq!(s.excess, 0, "{c:?}");
        let x = defspace::point_of_curve(&c).unwrap();
        let t = defspace::combinatorial_type(&c).unwrap();
        assert!(defspace::deformation_cone(&t).contains(&x));
    }
}

proptest! {
    #[test]
    fn node_monoid_is_a_monoid(k in 1i64..10, a in 0i64..40, b in 0i64..40, c in 0i64..40, d in 0i64..40) {
        let m = NodeMonoid::new(BigInt::from(k)).unwrap();
        for g in m.generators() {
            prop_assert!(m.contains(&g[0], &g[1]));
        }
        let (a, b, c, d) = (BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d));
        if m.contains(&a, &b) && m.contains(&c, &d) {
            prop_assert!(m.contains(&(&a + &c), &(&b + &d)));
        }
    }

    #[test]
    fn superabundance_is_translation_invariant(seed in 0u64..500, dx in -5i64..5, dy in -5i64..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_trivalent_tree(&mut rng, &TreeParams::new(2, 4));
        let moved = c.translated(&RatVec::from_ints(&[dx, dy]));
        prop_assert_eq!(
            defspace::is_superabundant(&c).unwrap(),
            defspace::is_superabundant(&moved).unwrap()
        );
    }
}
