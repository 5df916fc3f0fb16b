//! DOT and CSV renderings. Output depends only on the inputs.

use std::fmt::Write as _;

use anyhow::Result;
use hurwitz_core::graph::{GraphHandle, MetricsReport};
use hurwitz_core::GeometricTree;

/// Radius of the circle trees are drawn on.
const TREE_RADIUS: f64 = 2.0;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT of a whole graph; vertices are ids labelled with their
/// word or tree text.
pub fn graph_dot(g: &GraphHandle) -> String {
    let mut out = String::new();
    writeln!(out, "graph {}_n{} {{", g.kind().name(), g.n()).unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for v in 0..g.vertex_count() {
        writeln!(out, "  v{v} [label={}];", quote(&g.label(v))).unwrap();
    }
    for v in 0..g.vertex_count() {
        for &u in g.neighbors(v) {
            if v < u {
                writeln!(out, "  v{v} -- v{u};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Fixed-precision coordinate with negative zero folded to zero.
fn coord(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

/// Point `k` of `n` on the circle, 1 at the top, proceeding clockwise.
pub fn circle_position(n: usize, k: u8) -> (f64, f64) {
    let angle = std::f64::consts::FRAC_PI_2 - std::f64::consts::TAU * f64::from(k - 1) / n as f64;
    (TREE_RADIUS * angle.cos(), TREE_RADIUS * angle.sin())
}

/// DOT of a tree with its vertices pinned on a circle (render with `neato`).
pub fn tree_dot(t: &GeometricTree) -> String {
    let mut out = String::new();
    out.push_str("graph tree {\n");
    out.push_str("  layout=neato;\n");
    out.push_str("  node [shape=circle];\n");
    for k in 1..=t.n() as u8 {
        let (x, y) = circle_position(t.n(), k);
        writeln!(out, "  {k} [pos=\"{},{}!\"];", coord(x), coord(y)).unwrap();
    }
    for e in t.edges() {
        writeln!(out, "  {} -- {};", e.a(), e.b()).unwrap();
    }
    out.push_str("}\n");
    out
}

/// One row per vertex: id, text, eccentricity, central flag.
pub fn eccentricity_csv(g: &GraphHandle, m: &MetricsReport) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(["vertex", "label", "eccentricity", "central"])?;
    for v in 0..g.vertex_count() {
        let e = m.eccentricities[v];
        w.write_record([v.to_string(), g.label(v), e.to_string(), (e == m.radius).to_string()])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
