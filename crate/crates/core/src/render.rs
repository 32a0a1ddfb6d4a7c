//! Emitters: Hasse diagrams as DOT text and dissections as SVG.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::perm::ValueInterval;
use crate::polygon::Dissection;
use crate::poset::IntervalPoset;

const RADIUS: f64 = 100.0;
const CENTER: f64 = 140.0;
const LABEL_RADIUS: f64 = 118.0;

fn node_id(v: &ValueInterval) -> String {
    format!("i{}_{}", v.lo, v.hi)
}

/// Hasse diagram in DOT. Children of a node are emitted in ascending order
/// of their minimum and `ordering=out` keeps them left to right.
pub fn poset_to_dot(p: &IntervalPoset) -> String {
    let mut out = String::from("digraph interval_poset {\n");
    out.push_str("  graph [ordering=out, rankdir=TB];\n");
    out.push_str("  node [shape=plaintext, fontname=\"Helvetica\"];\n");
    for v in p.intervals() {
        let _ = writeln!(out, "  {} [label=\"{}\"];", node_id(v), v);
    }
    for c in p.hasse_edges() {
        let _ = writeln!(out, "  {} -> {};", node_id(&c.parent), node_id(&c.child));
    }
    out.push_str("}\n");
    out
}

/// Vertex `i` of an `m`-gon: vertex 1 at the top, indices running clockwise.
pub fn vertex_position(i: u32, m: u32, radius: f64) -> (f64, f64) {
    let angle = PI / 2.0 - 2.0 * PI * f64::from(i - 1) / f64::from(m);
    (CENTER + radius * angle.cos(), CENTER - radius * angle.sin())
}

fn fmt_coord(x: f64) -> String {
    // avoid "-0.000"
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// The polygon on a circle with its diagonals as straight segments.
pub fn dissection_to_svg(d: &Dissection) -> String {
    let m = d.m();
    let size = 2.0 * CENTER;
    let pos = |i: u32| {
        let (x, y) = vertex_position(i, m, RADIUS);
        (fmt_coord(x), fmt_coord(y))
    };
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    );
    let _ = writeln!(out, "  <title>{d}</title>");
    let points: Vec<String> = (1..=m)
        .map(|i| {
            let (x, y) = pos(i);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        out,
        "  <polygon class=\"outline\" points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>",
        points.join(" ")
    );
    for c in d.diagonals() {
        let (x1, y1) = pos(c.u);
        let (x2, y2) = pos(c.v);
        let _ = writeln!(
            out,
            "  <line class=\"diagonal\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"steelblue\" stroke-width=\"1.5\"/>"
        );
    }
    for i in 1..=m {
        let (x, y) = pos(i);
        let _ = writeln!(
            out,
            "  <circle class=\"vertex\" cx=\"{x}\" cy=\"{y}\" r=\"3\"/>"
        );
        let (lx, ly) = vertex_position(i, m, LABEL_RADIUS);
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">{i}</text>",
            fmt_coord(lx),
            fmt_coord(ly)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::phi;

    fn poset(s: &str) -> IntervalPoset {
        IntervalPoset::of(&s.parse().unwrap())
    }

    #[test]
    fn dot_counts() {
        let dot = poset_to_dot(&poset("2413"));
        assert_eq!(dot.matches("[label=").count(), 5);
        assert_eq!(dot.matches(" -> ").count(), 4);
        assert!(dot.contains("i1_4 [label=\"[1,4]\"]"));
        assert!(dot.contains("i3_3 [label=\"{3}\"]"));

        let dot = poset_to_dot(&poset("1"));
        assert_eq!(dot.matches("[label=").count(), 1);
        assert_eq!(dot.matches(" -> ").count(), 0);
    }

    #[test]
    fn dot_children_left_to_right() {
        let dot = poset_to_dot(&poset("5123647"));
        let a = dot.find("i1_6 -> i1_3;").unwrap();
        let b = dot.find("i1_6 -> i4_4;").unwrap();
        let c = dot.find("i1_6 -> i6_6;").unwrap();
        assert!(a < b && b < c);
    }

    #[test]
    fn vertex_one_on_top_and_clockwise() {
        let (x, y) = vertex_position(1, 4, RADIUS);
        assert!((x - CENTER).abs() < 1e-9 && (y - (CENTER - RADIUS)).abs() < 1e-9);
        // clockwise in screen coordinates: vertex 2 of a square sits on the right
        let (x, y) = vertex_position(2, 4, RADIUS);
        assert!((x - (CENTER + RADIUS)).abs() < 1e-9 && (y - CENTER).abs() < 1e-9);
    }

    #[test]
    fn svg_elements() {
        let svg = dissection_to_svg(&phi(&poset("5123647")));
        assert_eq!(svg.matches("<line class=\"diagonal\"").count(), 4);
        assert_eq!(svg.matches("<circle").count(), 8);
        assert_eq!(svg.matches("<text ").count(), 8);
        assert!(!svg.contains("-0.000"));
    }
}
