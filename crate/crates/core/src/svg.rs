//! Static SVG drawings of wirings.

use std::fmt::Write;

use crate::tree::OrderedTree;
use crate::wiring::GridWiring;

const UNIT: i64 = 16;
const PALETTE: [&str; 3] = ["black", "blue", "red"];

/// Draws `w` on a 16 px lattice, y pointing up. Vertices are filled circles
/// and edge paths 2 px polylines, colored by the depth of the node (for edges,
/// the child) modulo 3.
pub fn render_svg(tree: &OrderedTree, w: &GridWiring) -> String {
    let depths = tree.depths();
    let Some(bbox) = w.bounding_box() else {
        return String::from(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n",
        );
    };
    let (x0, y1) = (bbox.min.x - 1, bbox.max.y + 1);
    let width = (bbox.width() as i64 + 2) * UNIT;
    let height = (bbox.height() as i64 + 2) * UNIT;
    let sx = |x: i64| (x - x0) * UNIT;
    let sy = |y: i64| (y1 - y) * UNIT;

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    out.push_str("<g stroke=\"#dddddd\" stroke-width=\"1\">\n");
    for x in bbox.min.x..=bbox.max.x {
        writeln!(
            out,
            "<line x1=\"{0}\" y1=\"0\" x2=\"{0}\" y2=\"{height}\"/>",
            sx(x)
        )
        .unwrap();
    }
    for y in bbox.min.y..=bbox.max.y {
        writeln!(
            out,
            "<line x1=\"0\" y1=\"{0}\" x2=\"{width}\" y2=\"{0}\"/>",
            sy(y)
        )
        .unwrap();
    }
    out.push_str("</g>\n<g fill=\"none\" stroke-width=\"2\">\n");
    for e in &w.edges {
        let color = PALETTE[depths.get(e.to.0).copied().unwrap_or(0) % 3];
        let points: Vec<String> = e
            .path
            .iter()
            .map(|p| format!("{},{}", sx(p.x), sy(p.y)))
            .collect();
        writeln!(
            out,
            "<polyline stroke=\"{color}\" points=\"{}\"/>",
            points.join(" ")
        )
        .unwrap();
    }
    out.push_str("</g>\n<g>\n");
    for (v, p) in &w.vertices {
        let color = PALETTE[depths.get(v.0).copied().unwrap_or(0) % 3];
        writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{color}\"><title>{v}</title></circle>",
            sx(p.x),
            sy(p.y)
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}
