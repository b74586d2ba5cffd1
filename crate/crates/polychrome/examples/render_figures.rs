//! Writes SVG figures for G120: all edges, the expected (generating) layer,
//! and the accidental layer, mirroring the two-layer figure scheme.

use polychrome::catalog::catalog;
use polychrome::graph::{compiled_seeds, seed_graph, EdgeMode};
use polychrome::metric::MetricId;
use polychrome::render::{render_svg, EdgeLayer};

fn main() -> std::io::Result<()> {
    let cat = catalog(MetricId::Octagon).expect("catalog validates");
    let g = seed_graph(&compiled_seeds(MetricId::Octagon), &cat, EdgeMode::FullBoundary, 1);
    for (layer, name) in [
        (EdgeLayer::All, "g120-all.svg"),
        (EdgeLayer::Expected, "g120-expected.svg"),
        (EdgeLayer::Accidental, "g120-accidental.svg"),
    ] {
        let svg = render_svg(&g, layer, &cat);
        let lines = svg.matches("<line").count();
        std::fs::write(name, &svg)?;
        println!("{name}: {} vertices, {lines} edges", g.vertex_count());
    }
    Ok(())
}
