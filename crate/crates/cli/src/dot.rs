//! Graphviz output: vertices labeled by coordinates, bounded edges by weight
//! and lattice length, rays as arrows to points at infinity.

use std::fmt::Write;

use tropic_core::num::format_rational;
use tropic_core::{CompactifiedCurve, TropicalCurve};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn emit_dot(c: &TropicalCurve) -> String {
    let ids: Vec<String> = c.rays.iter().map(|r| format!("inf:{}", r.id)).collect();
    render(c, &ids)
}

pub fn emit_dot_compactified(c: &CompactifiedCurve) -> String {
    let ids: Vec<String> = c
        .base
        .rays
        .iter()
        .map(|r| {
            c.infinity_points
                .iter()
                .find(|p| p.ray == r.id)
                .map(|p| p.id.clone())
                .unwrap_or_else(|| format!("inf:{}", r.id))
        })
        .collect();
    render(&c.base, &ids)
}

fn render(c: &TropicalCurve, infinity_ids: &[String]) -> String {
    let mut out = String::from("digraph curve {\n");
    for v in &c.vertices {
        let _ = writeln!(
            out,
            "  {} [label={}];",
            quote(&v.id),
            quote(&format!("{} {}", v.id, v.coords))
        );
    }
    for e in &c.edges {
        let len = c
            .edge_data(&e.id)
            .map(|d| format_rational(&d.length))
            .unwrap_or_else(|_| "?".into());
        let _ = writeln!(
            out,
            "  {} -> {} [dir=none, label={}];",
            quote(&e.ends[0]),
            quote(&e.ends[1]),
            quote(&format!("w={}, l={}", e.weight, len))
        );
    }
    for (r, inf) in c.rays.iter().zip(infinity_ids) {
        let _ = writeln!(out, "  {} [shape=point, label=\"\"];", quote(inf));
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(&r.base),
            quote(inf),
            quote(&format!("w={}, d={}", r.weight, r.direction))
        );
    }
    out.push_str("}\n");
    out
}
