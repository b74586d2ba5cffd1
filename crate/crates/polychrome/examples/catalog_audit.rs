//! Prints every validated unit-vector catalog: orbit names, roles, the
//! side ratios defining the seeds, and the set sizes. Construction
//! re-derives each seed from its ratio and re-classifies every member, so
//! a catalog that prints here has passed the full audit.

use polychrome::catalog::{catalog, OrbitRole};
use polychrome::metric::MetricId;

fn main() {
    for metric in MetricId::ALL {
        let cat = catalog(metric).expect("catalog validates");
        println!(
            "== {} (√{}, {} sides, orbit size {}) ==",
            metric,
            metric.radicand(),
            metric.polygon_sides(),
            metric.orbit_size()
        );
        for orbit in &cat.orbits {
            let role = match orbit.role {
                OrbitRole::Generating => "generating",
                OrbitRole::Accidental => "accidental",
            };
            println!(
                "  ⟨{}⟩ {role:10} side {} at ratio {:12}  seed {:?}",
                orbit.name,
                orbit.side,
                orbit.ratio.to_string(),
                orbit.seed
            );
        }
        println!(
            "  |U| = {}, |V| = {}, |W| = {}",
            cat.generating_count(),
            cat.accidental_count(),
            cat.unit_vectors().len()
        );
        println!();
    }
}
