//! The acceptance suite: every published quantity and every gating
//! property, one test per criterion, each ending in a `criterion NN: PASS`
//! line (visible with `--nocapture`).
//!
//! Heavier artifacts (catalogs, sum graphs, the three small graphs) are
//! built once and shared through `OnceLock` fixtures.

use std::cmp::Ordering;
use std::sync::OnceLock;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use polychrome::catalog::{catalog, OrbitRole, VectorCatalog};
use polychrome::color::{
    export_cnf, heuristic_coloring, k_colorable, verify_coloring, ColoringCertificate,
    SolveOptions, Verdict,
};
use polychrome::field::{rat, QuadExt, Rational};
use polychrome::graph::{
    build_graph, compiled_seeds, contains_subgraph, edge_distribution, find_accidental,
    minkowski_sum, orbit_representative, seed_graph, sum_graph, EdgeLabel, EdgeMode, UnitGraph,
};
use polychrome::metric::{side_point, Location, MetricId, Point4, SidePoint};
use polychrome::structure::{
    count_spindles, find_k_chromatic_subgraph, octagon_spindle, SearchBudget, SpindleTemplate,
    SubgraphSearch,
};

// ---------------------------------------------------------------------------
// fixtures

fn opts() -> SolveOptions {
    SolveOptions {
        timeout: Some(Duration::from_secs(600)),
    }
}

fn the_catalog(metric: MetricId) -> &'static VectorCatalog {
    static CATS: OnceLock<Vec<VectorCatalog>> = OnceLock::new();
    let cats = CATS.get_or_init(|| {
        MetricId::ALL
            .iter()
            .map(|&m| catalog(m).expect("catalog validates"))
            .collect()
    });
    &cats[MetricId::ALL.iter().position(|&m| m == metric).unwrap()]
}

fn graph_fixture(cell: &'static OnceLock<UnitGraph>, build: impl FnOnce() -> UnitGraph) -> &'static UnitGraph {
    cell.get_or_init(build)
}

macro_rules! fixture {
    ($name:ident, $build:expr) => {
        fn $name() -> &'static UnitGraph {
            static CELL: OnceLock<UnitGraph> = OnceLock::new();
            graph_fixture(&CELL, $build)
        }
    };
}

fixture!(oct_sum_u, || sum_graph(the_catalog(MetricId::Octagon), EdgeMode::CatalogU, 1));
fixture!(oct_sum_full, || sum_graph(the_catalog(MetricId::Octagon), EdgeMode::FullBoundary, 1));
fixture!(dec_sum_u, || sum_graph(the_catalog(MetricId::Decagon), EdgeMode::CatalogU, 1));
fixture!(dec_sum_w, || sum_graph(the_catalog(MetricId::Decagon), EdgeMode::CatalogW, 1));
fixture!(dec_sum_full, || sum_graph(the_catalog(MetricId::Decagon), EdgeMode::FullBoundary, 1));
fixture!(dod_sum_u, || sum_graph(the_catalog(MetricId::Dodecagon), EdgeMode::CatalogU, 1));
fixture!(dod_sum_w, || sum_graph(the_catalog(MetricId::Dodecagon), EdgeMode::CatalogW, 1));
fixture!(g120, || seed_graph(
    &compiled_seeds(MetricId::Octagon),
    the_catalog(MetricId::Octagon),
    EdgeMode::FullBoundary,
    1
));
fixture!(g121, || seed_graph(
    &compiled_seeds(MetricId::Decagon),
    the_catalog(MetricId::Decagon),
    EdgeMode::FullBoundary,
    1
));
fixture!(g295, || seed_graph(
    &compiled_seeds(MetricId::Dodecagon),
    the_catalog(MetricId::Dodecagon),
    EdgeMode::FullBoundary,
    1
));

/// Expects a verified coloring at `k` from the exhaustive search.
fn assert_sat_verified(g: &UnitGraph, k: u32) {
    let report = k_colorable(g, k, &opts());
    let Verdict::Satisfiable(cert) = &report.verdict else {
        panic!("expected SAT at k = {k}, got {}", report.verdict.name());
    };
    verify_coloring(g, cert).expect("certificate verifies");
}

fn assert_unsat(g: &UnitGraph, k: u32) {
    let report = k_colorable(g, k, &opts());
    assert!(
        report.verdict.is_unsat(),
        "expected UNSAT at k = {k}, got {}",
        report.verdict.name()
    );
}

/// External cross-check: the DIMACS CNF for "g is k-colorable" must be
/// unsatisfiable for an independent CDCL solver.
fn assert_cnf_unsat_externally(g: &UnitGraph, k: u32) {
    let cnf = export_cnf(g, k);
    let mut solver = varisat::Solver::new();
    solver
        .add_dimacs_cnf(cnf.as_bytes())
        .expect("CNF parses back");
    assert!(!solver.solve().unwrap(), "external solver disagrees");
}

fn v_labeled_count(g: &UnitGraph, cat: &VectorCatalog) -> usize {
    let dist = edge_distribution(g, cat);
    dist.per_orbit
        .iter()
        .zip(&cat.orbits)
        .filter(|(_, o)| o.role == OrbitRole::Accidental)
        .map(|((_, n), _)| n)
        .sum()
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

// ---------------------------------------------------------------------------
// Octagon

#[test]
fn criterion_01_octagon_catalog() {
    let cat = the_catalog(MetricId::Octagon);
    assert_eq!(cat.generating_count(), 32);
    assert_eq!(cat.accidental_count(), 48);
    // Construction already cross-checks the ratio definitions against the
    // seed tuples and classifies every member as boundary; doubling any
    // vector must leave the polygon.
    for v in cat.unit_vectors() {
        assert_eq!(v.classify(), Location::Boundary);
        assert_eq!((&v + &v).classify(), Location::Outside);
    }
    println!("criterion 01: PASS — octagon catalog |U|=32 |V|=48, all boundary, ratios reproduce");
}

#[test]
fn criterion_02_octagon_sum_counts() {
    let cat = the_catalog(MetricId::Octagon);
    let gu = oct_sum_u();
    assert_eq!(gu.vertex_count(), 465);
    assert_eq!(gu.edge_count(), 2368);
    let gf = oct_sum_full();
    assert_eq!(gf.vertex_count(), 465);
    let dist = edge_distribution(gf, cat);
    assert_eq!(v_labeled_count(gf, cat), 1072);
    assert_eq!(dist.uncataloged, 0);
    assert_eq!(gf.edge_count(), 2368 + 1072);
    // Discovery route agrees: exactly the six accidental orbits.
    let found = find_accidental(gf.vertices(), cat);
    let expected: Vec<Point4> = cat
        .orbits_with_role(OrbitRole::Accidental)
        .map(|o| orbit_representative(&o.seed))
        .collect();
    let mut expected = expected;
    expected.sort();
    assert_eq!(found, expected);
    println!("criterion 02: PASS — U32+U32: 465 vertices, 2368 U-edges, 1072 V-edges, 0 uncataloged");
}

#[test]
fn criterion_03_octagon_sum_chromatic() {
    let gu = oct_sum_u();
    assert_unsat(gu, 3);
    assert_sat_verified(gu, 4);
    let gf = oct_sum_full();
    assert_unsat(gf, 4);
    assert_sat_verified(gf, 5);
    assert_cnf_unsat_externally(gf, 4);
    println!("criterion 03: PASS — chi(U-sum)=4, chi(W-sum)=5, 4-UNSAT confirmed externally");
}

#[test]
fn criterion_04_g120() {
    let cat = the_catalog(MetricId::Octagon);
    let g = g120();
    assert_eq!(g.vertex_count(), 120);
    assert_eq!(g.edge_count(), 704);
    g.verify_edges().expect("every edge is a unit distance");
    let dist = edge_distribution(g, cat);
    assert_eq!(dist.counts(), vec![160, 128, 136, 128, 16, 8, 32, 8, 32, 56]);
    assert_eq!(dist.uncataloged, 0);
    assert_unsat(g, 4);
    assert_sat_verified(g, 5);
    println!("criterion 04: PASS — G120: 120 vertices, 704 edges, exact distribution, chi=5");
}

#[test]
fn criterion_05_octagon_spindle() {
    let emb = octagon_spindle();
    emb.verify().expect("all 11 differences are unit vectors");
    let cat = the_catalog(MetricId::Octagon);
    let g = build_graph(
        emb.points.to_vec(),
        EdgeMode::FullBoundary,
        cat,
        1,
        "spindle".into(),
    );
    assert_eq!(g.vertex_count(), 7);
    // The eleven template edges are all present in the induced graph.
    for &(i, j) in &SpindleTemplate::EDGES {
        let (a, b) = (
            g.vertex_index(&emb.points[i]).unwrap() as u32,
            g.vertex_index(&emb.points[j]).unwrap() as u32,
        );
        let (a, b) = (a.min(b), a.max(b));
        assert!(
            g.edges().iter().any(|e| (e.i, e.j) == (a, b)),
            "template edge ({i},{j}) missing"
        );
    }
    // Independent oracle: none of the 3^7 assignments is proper, while at
    // least one of the 4^7 is.
    let proper = |c: &[u32; 7]| {
        g.edges()
            .iter()
            .all(|e| c[e.i as usize] != c[e.j as usize])
    };
    let enumerate = |base: u32| {
        (0..base.pow(7)).any(|code| {
            let mut c = [0u32; 7];
            let mut x = code;
            for slot in &mut c {
                *slot = x % base;
                x /= base;
            }
            proper(&c)
        })
    };
    assert!(!enumerate(3), "brute force found a 3-coloring");
    assert!(enumerate(4), "brute force found no 4-coloring");
    assert_unsat(&g, 3);
    assert_sat_verified(&g, 4);
    println!("criterion 05: PASS — spindle embeds with 11 unit edges; induced graph has chi=4");
}

#[test]
fn criterion_06_spindle_counts() {
    let c120 = count_spindles(g120());
    assert_eq!(
        c120.vertex_subsets, 24,
        "7-subset convention must reproduce the count"
    );
    // Both conventions coincide here; the subset convention is the
    // documented one.
    assert_eq!(c120.subgraphs, 24);
    let c121 = count_spindles(g121());
    assert_eq!(c121.vertex_subsets, 0);
    println!("criterion 06: PASS — 24 spindles in G120 (7-subset convention), 0 in G121");
}

// ---------------------------------------------------------------------------
// Decagon

#[test]
fn criterion_07_decagon_catalog() {
    let cat = the_catalog(MetricId::Decagon);
    assert_eq!(cat.generating_count(), 30);
    assert_eq!(cat.accidental_count(), 20);
    // First five members of every orbit as printed; the back half is the
    // negated front half.
    let heads: [(&str, [[i64; 4]; 5]); 5] = [
        ("a1", [[-2, 2, 0, 0], [2, 0, 2, 0], [3, -1, 1, 1], [-3, 1, 1, 1], [-2, 0, 2, 0]]),
        ("b1", [[9, -3, 3, -1], [6, -2, -2, 2], [-11, 5, 1, 1], [1, -1, 5, -1], [9, -5, -1, 1]]),
        ("c1", [[-9, 5, -1, 1], [-1, 1, 5, -1], [11, -5, 1, 1], [-6, 2, -2, 2], [-9, 3, 3, -1]]),
        ("d1", [[-20, 10, -4, 2], [-5, 3, 9, -3], [25, -11, 1, 1], [-10, 4, -6, 4], [-20, 8, 6, -2]]),
        ("e1", [[20, -8, 6, -2], [10, -4, -6, 4], [-25, 11, 1, 1], [5, -3, 9, -3], [20, -10, -4, 2]]),
    ];
    for (name, tuples) in heads {
        let orbit = cat.orbits.iter().find(|o| o.name == name).unwrap();
        for (k, t) in tuples.iter().enumerate() {
            assert_eq!(orbit.members[k], Point4::from_integers(MetricId::Decagon, *t));
        }
    }
    for v in cat.unit_vectors() {
        assert_eq!((&v + &v).classify(), Location::Outside);
    }
    println!("criterion 07: PASS — decagon catalog |U|=30 |V|=20, printed orbit heads match");
}

#[test]
fn criterion_08_decagon_sum() {
    let cat = the_catalog(MetricId::Decagon);
    let gu = dec_sum_u();
    assert_eq!(gu.vertex_count(), 421);
    assert_eq!(gu.edge_count(), 2640);
    let gw = dec_sum_w();
    assert_eq!(gw.edge_count(), 3140);
    assert_eq!(v_labeled_count(gw, cat), 500);
    assert_unsat(gu, 3);
    assert_sat_verified(gu, 4);
    assert_unsat(gw, 4);
    assert_sat_verified(gw, 5);
    assert_cnf_unsat_externally(gw, 4);

    // The exact predicate is stronger than the catalog here: the full
    // boundary scan finds two further accidental orbits beyond the
    // cataloged twenty vectors. Pin that discovery exactly, and check the
    // enlarged graph is still 5-chromatic.
    let gf = dec_sum_full();
    assert_eq!(v_labeled_count(gf, cat), 500);
    let dist = edge_distribution(gf, cat);
    assert_eq!(dist.uncataloged, 160);
    assert_eq!(gf.edge_count(), 3300);
    let extra: Vec<Point4> = find_accidental(gf.vertices(), cat)
        .into_iter()
        .filter(|rep| cat.orbit_of(rep).is_none())
        .collect();
    let expected: Vec<Point4> = [[-33, 15, -1, -1], [-33, 15, 1, 1]]
        .iter()
        .map(|t| orbit_representative(&Point4::from_integers(MetricId::Decagon, *t)))
        .collect();
    assert_eq!(extra, expected);
    assert_unsat(gf, 4);
    assert_sat_verified(gf, 5);
    println!("criterion 08: PASS — U30+U30: 421/2640/500 (3140 total), chi 4→5; full scan adds 160 edges in 2 extra orbits, chi still 5");
}

#[test]
fn criterion_09_g121() {
    let cat = the_catalog(MetricId::Decagon);
    let g = g121();
    assert_eq!(g.vertex_count(), 121);
    assert_eq!(g.edge_count(), 680);
    g.verify_edges().expect("every edge is a unit distance");
    let dist = edge_distribution(g, cat);
    assert_eq!(dist.counts(), vec![300, 180, 180, 10, 10]);
    assert_eq!(dist.uncataloged, 0);
    assert_unsat(g, 4);
    assert_sat_verified(g, 5);
    println!("criterion 09: PASS — G121: 121 vertices, 680 edges, exact distribution, chi=5");
}

#[test]
fn criterion_10_order_ten_subgraph() {
    let outcome = find_k_chromatic_subgraph(g121(), 4, 10, &SearchBudget::default());
    let SubgraphSearch::Found(witness) = outcome else {
        panic!("no order-10 4-chromatic subgraph found within budget");
    };
    assert!(witness.graph.vertex_count() <= 10);
    assert_eq!(witness.chi, 4);
    // Re-verify independently of the search.
    assert_unsat(&witness.graph, 3);
    assert_sat_verified(&witness.graph, 4);
    // And the witness really is an induced subgraph of G121.
    assert!(contains_subgraph(g121(), &witness.graph));
    println!(
        "criterion 10: PASS — verified 4-chromatic subgraph of order {} in G121",
        witness.graph.vertex_count()
    );
}

/// Optional, non-gating long-running check (about two minutes): the
/// order-10 witness of criterion 10 is minimal — no 4-chromatic subgraph
/// on 9 or fewer vertices exists anywhere in G121. Run with
/// `cargo test -p polychrome --test acceptance -- --ignored`.
#[test]
#[ignore = "exhaustive order-9 enumeration takes ~2 minutes"]
fn optional_no_4_chromatic_subgraph_below_order_10() {
    let witness = polychrome::structure::exhaustive_subgraph_absence_check(g121(), 4, 9);
    assert!(
        witness.is_none(),
        "found an unexpectedly small 4-chromatic subgraph"
    );
    println!("optional: PASS — no 4-chromatic subgraph of order ≤ 9 exists in G121");
}

// ---------------------------------------------------------------------------
// Dodecagon

#[test]
fn criterion_11_dodecagon_catalog() {
    let cat = the_catalog(MetricId::Dodecagon);
    assert_eq!(cat.generating_count(), 42);
    assert_eq!(cat.accidental_count(), 60);
    // Ratio definitions on both sides, including the a2a3 trio.
    for (name, side) in [("f1", 1usize), ("g1", 1), ("r1", 1), ("b1", 0), ("q1", 0)] {
        let orbit = cat.orbits.iter().find(|o| o.name == name).unwrap();
        assert_eq!(orbit.side, side);
        let recomputed = side_point(
            MetricId::Dodecagon,
            &SidePoint::new(orbit.side, orbit.ratio.clone()),
        )
        .unwrap();
        assert_eq!(recomputed, orbit.seed);
    }
    for v in cat.unit_vectors() {
        assert_eq!((&v + &v).classify(), Location::Outside);
    }
    println!("criterion 11: PASS — dodecagon catalog |U|=42 |V|=60, ratio definitions reproduce");
}

#[test]
fn criterion_12_dodecagon_sum() {
    let cat = the_catalog(MetricId::Dodecagon);
    let gu = dod_sum_u();
    assert_eq!(gu.vertex_count(), 847);
    assert_eq!(gu.edge_count(), 4809);
    let gw = dod_sum_w();
    assert_eq!(v_labeled_count(gw, cat), 1686);
    assert_eq!(gw.edge_count(), 6495);
    let dist = edge_distribution(gw, cat);
    assert_eq!(dist.uncataloged, 0);
    // Full-boundary mode agrees exactly: the catalog is complete here.
    let gf = sum_graph(cat, EdgeMode::FullBoundary, 1);
    assert_eq!(gf, *gw);

    assert_unsat(gu, 3);
    assert_sat_verified(gu, 4);

    // chi(all edges) = 5. Lower bound by lifting: the 295-vertex witness
    // embeds in the sum graph and is 4-UNSAT for the exhaustive search;
    // cross-checked externally on the full 847-vertex CNF. Upper bound by
    // an independently verified 5-coloring.
    assert!(contains_subgraph(gw, g295()));
    assert_unsat(g295(), 4);
    assert_cnf_unsat_externally(gw, 4);
    let cert = (0..16)
        .find_map(|seed| heuristic_coloring(gw, 5, seed))
        .expect("tabu search finds a 5-coloring");
    verify_coloring(gw, &cert).expect("5-coloring verifies");
    println!("criterion 12: PASS — U42+U42: 847/4809/1686 (6495 total), chi(U)=4, chi(all)=5");
}

#[test]
fn criterion_13_g295() {
    let cat = the_catalog(MetricId::Dodecagon);
    let g = g295();
    assert_eq!(g.vertex_count(), 295);
    assert_eq!(g.edge_count(), 1644);
    g.verify_edges().expect("every edge is a unit distance");
    let dist = edge_distribution(g, cat);
    assert_eq!(
        dist.counts(),
        vec![270, 168, 72, 222, 78, 162, 306, 6, 12, 42, 18, 0, 48, 60, 54, 48, 78]
    );
    assert_eq!(dist.uncataloged, 0);
    assert_unsat(g, 4);
    assert_sat_verified(g, 5);
    println!("criterion 13: PASS — G295: 295 vertices, 1644 edges, exact distributions (⟨l1⟩=0), chi=5");
}

/// Optional: greedy χ-preserving shrink of the full 465-vertex octagon sum
/// graph down to a 5-vertex-critical core (several minutes of exhaustive
/// 4-colorability re-checks).
#[test]
#[ignore = "shrinking the 465-vertex graph re-decides 4-colorability hundreds of times"]
fn optional_shrink_octagon_sum_graph() {
    use polychrome::structure::shrink_preserving_chi;
    let g = oct_sum_full();
    let core = shrink_preserving_chi(g, 5, &opts()).expect("precondition chi >= 5 holds");
    assert!(core.vertex_count() <= g.vertex_count());
    // The shrink already re-verified 4-UNSAT; confirm 5-colorability too.
    assert_sat_verified(&core, 5);
    println!(
        "optional: PASS — octagon sum graph shrinks to a 5-vertex-critical core of order {}",
        core.vertex_count()
    );
}

// ---------------------------------------------------------------------------
// Property suites

/// Sign of `a + b·√d` via a 50-decimal-digit integer square root, fully
/// independent of the implementation's compare-squares path.
fn sign_oracle(x: &QuadExt) -> Ordering {
    let scale = BigInt::from(10).pow(50);
    let floor_sqrt = (BigInt::from(x.radicand()) * &scale * &scale).sqrt();
    let lo = x.rational_part().clone()
        + x.radical_part() * Rational::new(floor_sqrt.clone(), scale.clone());
    let hi = x.rational_part().clone()
        + x.radical_part() * Rational::new(floor_sqrt + 1, scale);
    let sgn = |r: &Rational| {
        if r.is_zero() {
            Ordering::Equal
        } else if r.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    };
    let (a, b) = (sgn(&lo), sgn(&hi));
    if a == b {
        a
    } else {
        // Straddling zero at 50 digits means the value is exactly zero for
        // the coefficient sizes used in this suite.
        Ordering::Equal
    }
}

fn random_quadext(state: &mut u64, d: u32) -> QuadExt {
    let part = |state: &mut u64| {
        let num = (splitmix(state) % 2_000_001) as i64 - 1_000_000;
        let den = (splitmix(state) % 1000) as i64 + 1;
        Rational::new(BigInt::from(num), BigInt::from(den))
    };
    QuadExt::new(d, part(state), part(state)).unwrap()
}

#[test]
fn criterion_14_field_properties() {
    let mut state = 0xfeed_0001u64;
    for i in 0..10_000 {
        let d = [2, 3, 5][(i % 3) as usize];
        let x = random_quadext(&mut state, d);
        assert_eq!(x.sign(), sign_oracle(&x), "sign oracle disagrees on {x}");
        assert_eq!(
            x.sign() == Ordering::Equal,
            x.rational_part().is_zero() && x.radical_part().is_zero(),
            "sign is zero only for the zero element"
        );
    }
    // Ring axioms on random triples, exact equality.
    for i in 0..1_000 {
        let d = [2, 3, 5][(i % 3) as usize];
        let (x, y, z) = (
            random_quadext(&mut state, d),
            random_quadext(&mut state, d),
            random_quadext(&mut state, d),
        );
        assert_eq!(&x + &y, &y + &x);
        assert_eq!(&x * &y, &y * &x);
        assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }
    println!("criterion 14: PASS — sign oracle agreement on 10,000 values; ring axioms hold");
}

fn random_point(state: &mut u64, metric: MetricId) -> Point4 {
    let t = [0; 4].map(|_| ((splitmix(state) % 81) as i64) - 40);
    Point4::from_integers(metric, t)
}

#[test]
fn criterion_15_metric_properties() {
    let mut state = 0x0badc0deu64;
    for metric in MetricId::ALL {
        let n = metric.orbit_size();
        for _ in 0..1_000 {
            let p = random_point(&mut state, metric);
            let mut q = p.clone();
            for _ in 0..n / 2 {
                q = q.rotate_step();
            }
            assert_eq!(q, -&p, "{metric}: half orbit is negation");
            for _ in 0..n / 2 {
                q = q.rotate_step();
            }
            assert_eq!(q, p, "{metric}: full orbit is identity");
        }
        // classify is invariant under the symmetry group.
        for _ in 0..300 {
            let p = random_point(&mut state, metric);
            let loc = p.classify();
            assert_eq!(p.rotate_step().classify(), loc);
            assert_eq!((-&p).classify(), loc);
        }
        // Random points of the boundary stay on the boundary.
        for i in 0..100 {
            let side = (splitmix(&mut state) % metric.polygon_sides() as u64) as usize;
            let num = (i % 101) as i64;
            let t = QuadExt::new(metric.radicand(), Rational::new(num.into(), 100.into()), rat(0))
                .unwrap();
            let p = side_point(metric, &SidePoint::new(side, t)).unwrap();
            assert_eq!(p.classify(), Location::Boundary);
        }
    }
    // Decagon closed forms for two, three and four steps, on random tuples.
    for _ in 0..1_000 {
        let p = random_point(&mut state, MetricId::Decagon);
        let [a, b, c, d] = p.tuple().clone();
        let q = |n: [Rational; 4]| {
            polychrome::metric::Point4::new(MetricId::Decagon, n.map(|x| x / rat(4)))
        };
        let p3 = q([
            -&a + rat(5) * &b - rat(5) * &c + rat(5) * &d,
            &a - &b + &c - rat(5) * &d,
            rat(3) * &a + rat(5) * &b - &c + rat(5) * &d,
            &a + rat(3) * &b + &c - &d,
        ]);
        // Third-step second component carries a corrected leading sign;
        // composing the single-step map forces it (see decisions notes).
        let p4 = q([
            &a - rat(5) * &b - rat(5) * &c + rat(5) * &d,
            -&a + &b + &c - rat(5) * &d,
            rat(3) * &a + rat(5) * &b + &c - rat(5) * &d,
            &a + rat(3) * &b - &c + &d,
        ]);
        let p5 = q([
            -&a - rat(5) * &b + rat(5) * &c - rat(15) * &d,
            -&a - &b - rat(3) * &c + rat(5) * &d,
            &a + rat(5) * &b - &c - rat(5) * &d,
            &a + &b - &c - &d,
        ]);
        let r2 = p.rotate_step().rotate_step();
        assert_eq!(r2, p3);
        let r3 = r2.rotate_step();
        assert_eq!(r3, p4);
        assert_eq!(r3.rotate_step(), p5);
    }
    println!("criterion 15: PASS — rotation closure, classify invariance, closed-form agreement");
}

/// Applies a point map to every vertex and checks it permutes the edges.
fn assert_graph_automorphism(g: &UnitGraph, map: impl Fn(&Point4) -> Point4) {
    let perm: Vec<u32> = g
        .vertices()
        .iter()
        .map(|p| {
            g.vertex_index(&map(p))
                .expect("vertex set closed under the map") as u32
        })
        .collect();
    let mut mapped: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (perm[e.i as usize], perm[e.j as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    mapped.sort_unstable();
    let original: Vec<(u32, u32)> = g.edges().iter().map(|e| (e.i, e.j)).collect();
    assert_eq!(mapped, original);
}

#[test]
fn criterion_16_builder_properties() {
    for g in [g120(), g121(), g295()] {
        assert_graph_automorphism(g, |p| p.rotate_step());
        assert_graph_automorphism(g, |p| -p);
    }

    // Independent quadratic brute force over all pairs on random subsets.
    let cat = the_catalog(MetricId::Octagon);
    let full = oct_sum_full();
    let mut state = 0x5eed_5eedu64;
    for _ in 0..20 {
        let mut indices: Vec<u32> = (0..full.vertex_count() as u32).collect();
        for i in (1..indices.len()).rev() {
            let j = (splitmix(&mut state) % (i as u64 + 1)) as usize;
            indices.swap(i, j);
        }
        let points: Vec<Point4> = indices[..30]
            .iter()
            .map(|&i| full.vertices()[i as usize].clone())
            .collect();
        let g = build_graph(points.clone(), EdgeMode::FullBoundary, cat, 1, "subset".into());
        // Oracle: direct pairwise scan, no caching, no normalization.
        let mut sorted = points;
        sorted.sort();
        sorted.dedup();
        let mut expected = Vec::new();
        for i in 0..sorted.len() {
            for j in (i + 1)..sorted.len() {
                if (&sorted[j] - &sorted[i]).classify() == Location::Boundary {
                    expected.push((i as u32, j as u32));
                }
            }
        }
        let got: Vec<(u32, u32)> = g.edges().iter().map(|e| (e.i, e.j)).collect();
        assert_eq!(got, expected);
    }

    // Edge set is insertion-order independent.
    let mut shuffled = oct_sum_full().vertices().to_vec();
    for i in (1..shuffled.len()).rev() {
        let j = (splitmix(&mut state) % (i as u64 + 1)) as usize;
        shuffled.swap(i, j);
    }
    let rebuilt = build_graph(
        shuffled,
        EdgeMode::FullBoundary,
        cat,
        1,
        oct_sum_full().provenance().to_string(),
    );
    assert_eq!(&rebuilt, oct_sum_full());
    println!("criterion 16: PASS — automorphism invariance, pair-oracle agreement, order independence");
}

#[test]
fn criterion_17_chromatic_properties() {
    // Certificate checker independence: SAT verdicts verify; a corrupted
    // certificate is rejected.
    let g = g121();
    let report = k_colorable(g, 5, &opts());
    let Verdict::Satisfiable(cert) = &report.verdict else {
        panic!("G121 must be 5-colorable");
    };
    verify_coloring(g, cert).unwrap();
    let mut bad = cert.clone();
    bad.assignment = bad.assignment.iter().map(|&c| c % 4).collect();
    bad.k = 4;
    assert!(
        matches!(
            verify_coloring(g, &bad),
            Err(polychrome::color::ColoringViolation::MonochromeEdges(v)) if !v.is_empty()
        ),
        "truncated certificate must expose violations"
    );

    // Bit-deterministic single-threaded search.
    for k in [4, 5] {
        let a = k_colorable(g120(), k, &opts());
        let b = k_colorable(g120(), k, &opts());
        assert_eq!(a.nodes, b.nodes, "node counts must reproduce at k={k}");
        assert_eq!(a.verdict.is_sat(), b.verdict.is_sat());
    }

    // External-solver agreement on the three 4-UNSAT instances.
    for g in [g120(), g121(), g295()] {
        assert_unsat(g, 4);
        assert_cnf_unsat_externally(g, 4);
    }

    // Monotonicity spot checks: SAT at k implies SAT at k+1, on the
    // compiled-in graphs and on random induced subgraphs.
    assert_sat_verified(g120(), 5);
    assert_sat_verified(g120(), 6);
    let mut state = 0xabcd_ef01u64;
    for _ in 0..20 {
        let mut indices: Vec<u32> = (0..g121().vertex_count() as u32).collect();
        for i in (1..indices.len()).rev() {
            let j = (splitmix(&mut state) % (i as u64 + 1)) as usize;
            indices.swap(i, j);
        }
        let take = 10 + (splitmix(&mut state) % 30) as usize;
        let sub = g121().induced_subgraph(&indices[..take], "random subset".into());
        for k in 1..=4 {
            if k_colorable(&sub, k, &opts()).verdict.is_sat() {
                assert!(k_colorable(&sub, k + 1, &opts()).verdict.is_sat());
                // Restricting a certificate of the parent also colors the
                // subgraph (subgraph monotonicity at k = 5).
                let parent = k_colorable(g121(), 5, &opts());
                if let Verdict::Satisfiable(c) = &parent.verdict {
                    let restricted = ColoringCertificate {
                        graph_hash: sub.canonical_hash_hex(),
                        k: 5,
                        assignment: indices[..take]
                            .iter()
                            .map(|&v| c.assignment[v as usize])
                            .collect(),
                    };
                    // Indices were remapped by induced_subgraph in sorted
                    // order; rebuild the restriction accordingly.
                    let mut sorted = indices[..take].to_vec();
                    sorted.sort_unstable();
                    let restricted = ColoringCertificate {
                        assignment: sorted
                            .iter()
                            .map(|&v| c.assignment[v as usize])
                            .collect(),
                        ..restricted
                    };
                    verify_coloring(&sub, &restricted).unwrap();
                }
                break;
            }
        }
    }
    println!("criterion 17: PASS — checker independence, determinism, external agreement, monotonicity");
}

// ---------------------------------------------------------------------------
// Cross-cutting sanity: full/catalog-W equality where the catalogs are
// complete, and graph JSON round-trips.

#[test]
fn full_boundary_matches_catalog_w_on_complete_catalogs() {
    let oct_w = sum_graph(the_catalog(MetricId::Octagon), EdgeMode::CatalogW, 1);
    assert_eq!(oct_sum_full().edges().len(), oct_w.edges().len());
    for g in [g120(), g121(), g295()] {
        let w = build_graph(
            g.vertices().to_vec(),
            EdgeMode::CatalogW,
            the_catalog(g.metric()),
            1,
            g.provenance().to_string(),
        );
        assert_eq!(g, &w);
    }
    println!("extra: PASS — full-boundary and catalog-W builds coincide on complete catalogs");
}

#[test]
fn graph_json_round_trips_with_hash_equality() {
    for g in [g120(), g121()] {
        let json = serde_json::to_string(g).unwrap();
        let back: UnitGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(&back, g);
        assert_eq!(back.canonical_hash(), g.canonical_hash());
    }
    println!("extra: PASS — graph JSON round-trips with canonical hash equality");
}

#[test]
fn uncataloged_labels_survive_round_trip() {
    let cat = the_catalog(MetricId::Decagon);
    let gf = dec_sum_full();
    assert!(gf.edges().iter().any(|e| e.label == EdgeLabel::Uncataloged));
    let json = serde_json::to_string(gf).unwrap();
    let back: UnitGraph = serde_json::from_str(&json).unwrap();
    assert_eq!(&back, gf);
    let _ = cat;
    println!("extra: PASS — uncataloged edge labels survive serialization");
}

#[test]
fn minkowski_sum_counts() {
    // Dedup sanity on the published sum sizes.
    let u32v = the_catalog(MetricId::Octagon).generating_vectors();
    assert_eq!(minkowski_sum(&u32v, &u32v).len(), 465);
    let u30 = the_catalog(MetricId::Decagon).generating_vectors();
    assert_eq!(minkowski_sum(&u30, &u30).len(), 421);
    let u42 = the_catalog(MetricId::Dodecagon).generating_vectors();
    assert_eq!(minkowski_sum(&u42, &u42).len(), 847);
    println!("extra: PASS — Minkowski sum cardinalities 465 / 421 / 847");
}
