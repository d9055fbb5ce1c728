use num_traits::{Signed, Zero};

use tropic_core::num::rat;
use tropic_core::{RatVec, Rational, TropicalCurve};

/// Is `p` on an edge, ray or vertex of `c`?
pub fn on_curve(c: &TropicalCurve, p: &RatVec) -> bool {
    let on_path = |start: &RatVec, dir: &RatVec, bounded: bool| {
        // p = start + s * dir with s >= 0 (and s <= 1 if bounded)
        let diff = p - start;
        let i = match dir.coords().iter().position(|x| !x.is_zero()) {
            Some(i) => i,
            None => return diff.is_zero(),
        };
        let s = &diff.coords()[i] / &dir.coords()[i];
        if s.is_negative() || (bounded && s > Rational::from_integer(1.into())) {
            return false;
        }
        start + &dir.scale(&s) == *p
    };
    c.vertices.iter().any(|v| v.coords == *p)
        || c.edges.iter().any(|e| {
            let u = c.position(&e.ends[0]).unwrap();
            let w = c.position(&e.ends[1]).unwrap();
            on_path(u, &(w - u), true)
        })
        || c.rays
            .iter()
            .any(|r| on_path(c.position(&r.base).unwrap(), &r.direction.to_rat(), false))
}

/// Sample points on every edge and ray of `a`.
pub fn samples(a: &TropicalCurve) -> Vec<RatVec> {
    let mut out = Vec::new();
    for e in &a.edges {
        let u = a.position(&e.ends[0]).unwrap();
        let w = a.position(&e.ends[1]).unwrap();
        for k in 0..=12 {
            out.push(u + &(w - u).scale(&rat(k, 12)));
        }
    }
    for r in &a.rays {
        let b = a.position(&r.base).unwrap();
        for k in 0..=40 {
            out.push(b + &r.direction.to_rat().scale(&rat(k, 4)));
        }
    }
    out
}
