//! The Moser spindle in the octagon metric: the explicit seven-point
//! embedding, its chromatic number, and pattern counting inside the larger
//! graphs — G120 contains 24 spindles, G121 none.

use polychrome::catalog::catalog;
use polychrome::color::{k_colorable, SolveOptions};
use polychrome::graph::{build_graph, compiled_seeds, seed_graph, EdgeMode};
use polychrome::metric::MetricId;
use polychrome::structure::{count_spindles, octagon_spindle, SpindleTemplate};

fn main() {
    let emb = octagon_spindle();
    emb.verify().expect("all template differences are unit vectors");
    println!("spindle points:");
    let roles = ["o", "a1", "c2", "a1+c2", "a3", "d1", "a3+d1"];
    for (role, p) in roles.iter().zip(&emb.points) {
        println!("  {role:6} = {p:?}");
    }
    let cat = catalog(MetricId::Octagon).expect("catalog validates");
    println!("template edges and the orbits of their differences:");
    for &(i, j) in &SpindleTemplate::EDGES {
        let diff = &emb.points[j] - &emb.points[i];
        let orbit = cat.orbit_of(&diff).map(|o| o.name).unwrap_or("?");
        println!("  {} - {}: {diff:?} ∈ ⟨{orbit}⟩", roles[i], roles[j]);
    }

    let g = build_graph(
        emb.points.to_vec(),
        EdgeMode::FullBoundary,
        &cat,
        1,
        "octagon spindle".into(),
    );
    let opts = SolveOptions::default();
    println!(
        "spindle graph: 3 colors {}, 4 colors {}",
        k_colorable(&g, 3, &opts).verdict.name(),
        k_colorable(&g, 4, &opts).verdict.name()
    );

    let g120 = seed_graph(&compiled_seeds(MetricId::Octagon), &cat, EdgeMode::FullBoundary, 1);
    let count = count_spindles(&g120);
    println!(
        "G120: {} spindles as 7-vertex subsets ({} as distinct subgraphs)",
        count.vertex_subsets, count.subgraphs
    );

    let cat5 = catalog(MetricId::Decagon).expect("catalog validates");
    let g121 = seed_graph(&compiled_seeds(MetricId::Decagon), &cat5, EdgeMode::FullBoundary, 1);
    println!("G121: {} spindles", count_spindles(&g121).vertex_subsets);
}
