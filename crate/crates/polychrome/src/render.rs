//! SVG emission for unit-distance graphs.
//!
//! Layout uses the floating-point embedding of the exact coordinates; this
//! is untrusted display output and plays no role in any verification.

use crate::catalog::{OrbitRole, VectorCatalog};
use crate::graph::{EdgeLabel, UnitGraph};

/// Which edges to draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeLayer {
    All,
    /// Edges labeled by a generating orbit (the expected edges).
    Expected,
    /// Everything else: accidental orbits and uncataloged unit distances.
    Accidental,
}

impl EdgeLayer {
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "all" => Some(EdgeLayer::All),
            "expected" => Some(EdgeLayer::Expected),
            "accidental" => Some(EdgeLayer::Accidental),
            _ => None,
        }
    }
}

fn edge_in_layer(label: &EdgeLabel, layer: EdgeLayer, catalog: &VectorCatalog) -> bool {
    let generating = match label {
        EdgeLabel::Orbit(name) => catalog
            .orbits
            .iter()
            .any(|o| o.name == name && o.role == OrbitRole::Generating),
        EdgeLabel::Uncataloged => false,
    };
    match layer {
        EdgeLayer::All => true,
        EdgeLayer::Expected => generating,
        EdgeLayer::Accidental => !generating,
    }
}

/// Renders the graph as a standalone SVG document.
pub fn render_svg(g: &UnitGraph, layer: EdgeLayer, catalog: &VectorCatalog) -> String {
    const SIZE: f64 = 900.0;
    const MARGIN: f64 = 40.0;
    let coords: Vec<(f64, f64)> = g.vertices().iter().map(|p| p.embed_f64()).collect();
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &(x, y) in &coords {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    // SVG y grows downward; flip it.
    let place = |(x, y): (f64, f64)| {
        (
            MARGIN + (x - min_x) * scale,
            MARGIN + (max_y - y) * scale,
        )
    };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"0 0 {size} {size}\">\n",
        size = SIZE
    ));
    out.push_str(&format!("<!-- {} -->\n", g.provenance()));
    for e in g.edges() {
        if !edge_in_layer(&e.label, layer, catalog) {
            continue;
        }
        let (x1, y1) = place(coords[e.i as usize]);
        let (x2, y2) = place(coords[e.j as usize]);
        let color = match &e.label {
            EdgeLabel::Orbit(name)
                if catalog
                    .orbits
                    .iter()
                    .any(|o| o.name == name && o.role == OrbitRole::Generating) =>
            {
                "#2a6fdb"
            }
            EdgeLabel::Orbit(_) => "#d64545",
            EdgeLabel::Uncataloged => "#888888",
        };
        out.push_str(&format!(
            "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" \
             stroke=\"{color}\" stroke-width=\"1\"/>\n"
        ));
    }
    for &(x, y) in &coords {
        let (cx, cy) = place((x, y));
        out.push_str(&format!(
            "<circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"2.5\" fill=\"#111111\"/>\n"
        ));
    }
    out.push_str("</svg>\n");
    out
}
