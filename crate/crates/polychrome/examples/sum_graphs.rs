//! Builds the 2-fold Minkowski sum graphs U+U in all three metrics and
//! compares edge modes: generating edges only, the full cataloged set, and
//! the ground-truth boundary scan. Also runs accidental-vector discovery —
//! on the decagon the scan turns up two orbits beyond the catalog.

use polychrome::catalog::catalog;
use polychrome::graph::{
    edge_distribution, find_accidental, sum_graph, EdgeMode,
};
use polychrome::metric::MetricId;

fn main() {
    for metric in MetricId::ALL {
        let cat = catalog(metric).expect("catalog validates");
        println!("== {metric} ==");
        let gu = sum_graph(&cat, EdgeMode::CatalogU, 1);
        println!(
            "  U+U: {} vertices, {} generating edges",
            gu.vertex_count(),
            gu.edge_count()
        );
        let gw = sum_graph(&cat, EdgeMode::CatalogW, 1);
        println!("  with cataloged accidental edges: {} edges", gw.edge_count());
        let gf = sum_graph(&cat, EdgeMode::FullBoundary, 1);
        let dist = edge_distribution(&gf, &cat);
        println!(
            "  full boundary scan: {} edges ({} uncataloged)",
            gf.edge_count(),
            dist.uncataloged
        );
        print!("{dist}");

        let reps = find_accidental(gf.vertices(), &cat);
        println!("  accidental orbits discovered: {}", reps.len());
        for rep in reps {
            match cat.orbit_of(&rep) {
                Some(orbit) => println!("    {rep:?} = cataloged ⟨{}⟩", orbit.name),
                None => println!("    {rep:?} = NOT in the catalog"),
            }
        }
        println!();
    }
}
