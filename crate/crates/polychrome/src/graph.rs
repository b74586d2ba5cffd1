//! Unit-distance graph construction: Minkowski sums, orbit closures, exact
//! edge generation with orbit labels, and accidental-vector discovery.
//!
//! Vertices are kept in canonical order (lexicographic on the coordinate
//! tuple) and edges as `(i, j)` with `i < j` in lexicographic order, so a
//! graph built from the same point set is bit-identical regardless of input
//! order or thread count.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::catalog::VectorCatalog;
use crate::metric::{Location, MetricId, Point4};

/// Which differences count as edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeMode {
    /// Differences in the generating set `U` only.
    CatalogU,
    /// Differences in the full catalog `W = U ∪ V`.
    CatalogW,
    /// Differences lying anywhere on the unit polygon, labeled through the
    /// catalog when possible. The default for verification: it is the
    /// ground-truth unit-distance predicate, independent of catalog
    /// completeness.
    FullBoundary,
}

impl EdgeMode {
    pub fn name(self) -> &'static str {
        match self {
            EdgeMode::CatalogU => "catalog-u",
            EdgeMode::CatalogW => "catalog-w",
            EdgeMode::FullBoundary => "full",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "catalog-u" => Some(EdgeMode::CatalogU),
            "catalog-w" => Some(EdgeMode::CatalogW),
            "full" => Some(EdgeMode::FullBoundary),
            _ => None,
        }
    }
}

/// Edge label: the catalog orbit of the difference vector, or explicitly
/// uncataloged (a unit distance the catalog does not explain).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    Orbit(String),
    Uncataloged,
}

impl EdgeLabel {
    pub fn as_str(&self) -> &str {
        match self {
            EdgeLabel::Orbit(name) => name,
            EdgeLabel::Uncataloged => "uncataloged",
        }
    }

    pub fn from_name(s: &str) -> Self {
        if s == "uncataloged" {
            EdgeLabel::Uncataloged
        } else {
            EdgeLabel::Orbit(s.to_string())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub i: u32,
    pub j: u32,
    pub label: EdgeLabel,
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.i, self.j, self.label.as_str()).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (i, j, label): (u32, u32, String) = Deserialize::deserialize(deserializer)?;
        Ok(Edge {
            i,
            j,
            label: EdgeLabel::from_name(&label),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {0} repeated or out of canonical order")]
    VerticesNotCanonical(usize),
    #[error("vertex {point:?} uses metric {found}, graph is {expected}")]
    MixedMetrics {
        point: String,
        found: MetricId,
        expected: MetricId,
    },
    #[error("edge ({i}, {j}) malformed: {reason}")]
    BadEdge { i: u32, j: u32, reason: String },
    #[error("seed list contains duplicate point {0}")]
    DuplicateSeed(String),
}

/// An immutable unit-distance graph over canonical vertices.
#[derive(Clone, Debug, Serialize)]
pub struct UnitGraph {
    #[serde(serialize_with = "serialize_metric")]
    metric: MetricId,
    vertices: Vec<Point4>,
    edges: Vec<Edge>,
    provenance: String,
}

/// Equality is mathematical: metric, vertices and labeled edges.
/// Provenance is construction metadata and does not participate.
impl PartialEq for UnitGraph {
    fn eq(&self, other: &Self) -> bool {
        self.metric == other.metric
            && self.vertices == other.vertices
            && self.edges == other.edges
    }
}

impl Eq for UnitGraph {}

fn serialize_metric<S: Serializer>(m: &MetricId, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(m.name())
}

#[derive(Deserialize)]
struct UnitGraphRepr {
    metric: String,
    vertices: Vec<Point4>,
    edges: Vec<Edge>,
    #[serde(default)]
    provenance: String,
}

impl<'de> Deserialize<'de> for UnitGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = UnitGraphRepr::deserialize(deserializer)?;
        let metric = MetricId::from_name(&repr.metric)
            .ok_or_else(|| D::Error::custom(format!("unknown metric {:?}", repr.metric)))?;
        UnitGraph::from_parts(metric, repr.vertices, repr.edges, repr.provenance)
            .map_err(D::Error::custom)
    }
}

impl UnitGraph {
    /// Assembles a graph from already-canonical parts, verifying the
    /// representation invariants (sorted unique vertices, one metric,
    /// ordered deduplicated edges with in-range endpoints).
    pub fn from_parts(
        metric: MetricId,
        vertices: Vec<Point4>,
        edges: Vec<Edge>,
        provenance: String,
    ) -> Result<Self, GraphError> {
        for (idx, v) in vertices.iter().enumerate() {
            if v.metric() != metric {
                return Err(GraphError::MixedMetrics {
                    point: format!("{v:?}"),
                    found: v.metric(),
                    expected: metric,
                });
            }
            if idx > 0 && vertices[idx - 1] >= *v {
                return Err(GraphError::VerticesNotCanonical(idx));
            }
        }
        let n = vertices.len() as u32;
        let mut prev: Option<(u32, u32)> = None;
        for e in &edges {
            let bad = |reason: &str| GraphError::BadEdge {
                i: e.i,
                j: e.j,
                reason: reason.to_string(),
            };
            if e.i >= e.j {
                return Err(bad("endpoints not strictly increasing"));
            }
            if e.j >= n {
                return Err(bad("endpoint out of range"));
            }
            if let Some(p) = prev {
                if p >= (e.i, e.j) {
                    return Err(bad("edges out of order or duplicated"));
                }
            }
            prev = Some((e.i, e.j));
        }
        Ok(UnitGraph {
            metric,
            vertices,
            edges,
            provenance,
        })
    }

    pub fn metric(&self) -> MetricId {
        self.metric
    }

    pub fn vertices(&self) -> &[Point4] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Index of a point in the canonical vertex order.
    pub fn vertex_index(&self, p: &Point4) -> Option<usize> {
        self.vertices.binary_search(p).ok()
    }

    /// Adjacency lists (sorted, symmetric).
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.i as usize].push(e.j);
            adj[e.j as usize].push(e.i);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    /// FNV-1a hash of the canonical form; stable across runs and platforms.
    /// Certificates cite it to pin the graph they were produced for.
    pub fn canonical_hash(&self) -> u64 {
        const OFFSET: u64 = 0xcbf29ce484222325;
        const PRIME: u64 = 0x100000001b3;
        let mut h = OFFSET;
        let mut eat = |bytes: &[u8]| {
            for &b in bytes {
                h ^= b as u64;
                h = h.wrapping_mul(PRIME);
            }
        };
        eat(self.metric.name().as_bytes());
        for v in &self.vertices {
            for r in v.tuple() {
                eat(crate::field::rational_to_string(r).as_bytes());
                eat(b",");
            }
            eat(b";");
        }
        for e in &self.edges {
            eat(&e.i.to_le_bytes());
            eat(&e.j.to_le_bytes());
            eat(e.label.as_str().as_bytes());
        }
        h
    }

    pub fn canonical_hash_hex(&self) -> String {
        format!("{:016x}", self.canonical_hash())
    }

    /// The induced subgraph on a vertex subset (indices into this graph).
    /// Vertices keep canonical order; edges are relabeled accordingly.
    pub fn induced_subgraph(&self, subset: &[u32], provenance: String) -> UnitGraph {
        let mut keep: Vec<u32> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut remap: HashMap<u32, u32> = HashMap::new();
        let vertices: Vec<Point4> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| {
                remap.insert(old, new as u32);
                self.vertices[old as usize].clone()
            })
            .collect();
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter_map(|e| {
                let (i, j) = (remap.get(&e.i)?, remap.get(&e.j)?);
                Some(Edge {
                    i: *i,
                    j: *j,
                    label: e.label.clone(),
                })
            })
            .collect();
        UnitGraph::from_parts(self.metric, vertices, edges, provenance)
            .expect("induced subgraph preserves canonical form")
    }

    /// Re-checks the unit-distance property of every edge against the exact
    /// boundary predicate. For auditing externally supplied graph files.
    pub fn verify_edges(&self) -> Result<(), GraphError> {
        for e in &self.edges {
            let diff = &self.vertices[e.j as usize] - &self.vertices[e.i as usize];
            if diff.classify() != Location::Boundary {
                return Err(GraphError::BadEdge {
                    i: e.i,
                    j: e.j,
                    reason: "difference is not a unit vector".to_string(),
                });
            }
        }
        Ok(())
    }
}

/// A list of orbit seeds, the compiled-in data behind the small graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeedList {
    #[serde(serialize_with = "serialize_metric")]
    pub metric: MetricId,
    pub points: Vec<Point4>,
}

#[derive(Deserialize)]
struct SeedListRepr {
    metric: String,
    points: Vec<Point4>,
}

impl<'de> Deserialize<'de> for SeedList {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeedListRepr::deserialize(deserializer)?;
        let metric = MetricId::from_name(&repr.metric)
            .ok_or_else(|| D::Error::custom(format!("unknown metric {:?}", repr.metric)))?;
        SeedList::new(metric, repr.points).map_err(D::Error::custom)
    }
}

impl SeedList {
    pub fn new(metric: MetricId, points: Vec<Point4>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for p in &points {
            if p.metric() != metric {
                return Err(GraphError::MixedMetrics {
                    point: format!("{p:?}"),
                    found: p.metric(),
                    expected: metric,
                });
            }
            if !seen.insert(p.clone()) {
                return Err(GraphError::DuplicateSeed(format!("{p:?}")));
            }
        }
        Ok(SeedList { metric, points })
    }

    pub fn from_integers(metric: MetricId, tuples: &[[i64; 4]]) -> Self {
        let points = tuples
            .iter()
            .map(|t| Point4::from_integers(metric, *t))
            .collect();
        SeedList::new(metric, points).expect("compiled-in seed tuples are distinct")
    }
}

/// `{x + y | x ∈ a, y ∈ b}`, deduplicated by exact equality, in canonical
/// order.
pub fn minkowski_sum(a: &[Point4], b: &[Point4]) -> Vec<Point4> {
    let mut out = BTreeSet::new();
    for x in a {
        for y in b {
            out.insert(x + y);
        }
    }
    out.into_iter().collect()
}

/// Union of the orbits of all seeds, in canonical order.
pub fn orbit_closure(seeds: &SeedList) -> Vec<Point4> {
    let mut out = BTreeSet::new();
    for s in &seeds.points {
        out.extend(s.orbit());
    }
    out.into_iter().collect()
}

/// Builds the unit-distance graph on `vertices` under the given edge mode.
///
/// Differences are tested pairwise with exact predicates — O(n²) over at
/// most 847 vertices, no spatial indexing. In full-boundary mode the
/// boundary test is memoized per distinct difference (the polygon is
/// centrally symmetric, so a difference and its negation share the verdict).
/// `threads > 1` classifies vertex rows in parallel; output is canonical
/// regardless.
pub fn build_graph(
    vertices: Vec<Point4>,
    mode: EdgeMode,
    catalog: &VectorCatalog,
    threads: usize,
    provenance: String,
) -> UnitGraph {
    let mut vertices = vertices;
    vertices.sort();
    vertices.dedup();
    let metric = catalog.metric;

    let row_edges = |i: usize, cache: &mut HashMap<Point4, bool>| -> Vec<Edge> {
        let mut out = Vec::new();
        for j in (i + 1)..vertices.len() {
            let diff = &vertices[j] - &vertices[i];
            let is_edge = match mode {
                EdgeMode::CatalogU => catalog.is_generating(&diff),
                EdgeMode::CatalogW => catalog.is_unit_vector(&diff),
                EdgeMode::FullBoundary => *cache
                    .entry(normalize_sign(&diff))
                    .or_insert_with_key(|key| key.classify() == Location::Boundary),
            };
            if is_edge {
                let label = match catalog.orbit_of(&diff) {
                    Some(orbit) => EdgeLabel::Orbit(orbit.name.to_string()),
                    None => EdgeLabel::Uncataloged,
                };
                out.push(Edge {
                    i: i as u32,
                    j: j as u32,
                    label,
                });
            }
        }
        out
    };

    let edges: Vec<Edge> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..vertices.len())
                .into_par_iter()
                .map_init(HashMap::new, |cache, i| row_edges(i, cache))
                .flatten()
                .collect()
        })
    } else {
        let mut cache = HashMap::new();
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            edges.extend(row_edges(i, &mut cache));
        }
        edges
    };

    let mut edges = edges;
    edges.sort_by_key(|e| (e.i, e.j));
    UnitGraph::from_parts(metric, vertices, edges, provenance).expect("builder output is canonical")
}

/// Canonical representative of `{p, −p}`: whichever compares smaller.
fn normalize_sign(p: &Point4) -> Point4 {
    let neg = -p;
    if neg < *p {
        neg
    } else {
        p.clone()
    }
}

/// All boundary difference vectors of `vertices` that are not generating
/// vectors, reduced to one representative per orbit (the lexicographically
/// least member). This is the discovery route for the accidental sets:
/// run it against a catalog and compare with the tabulated `V`.
pub fn find_accidental(vertices: &[Point4], catalog: &VectorCatalog) -> Vec<Point4> {
    let mut cache: HashMap<Point4, bool> = HashMap::new();
    let mut reps = BTreeSet::new();
    for (i, u) in vertices.iter().enumerate() {
        for v in &vertices[i + 1..] {
            let diff = v - u;
            if catalog.is_generating(&diff) {
                continue;
            }
            let key = normalize_sign(&diff);
            let on_boundary = *cache
                .entry(key)
                .or_insert_with_key(|k| k.classify() == Location::Boundary);
            if on_boundary {
                reps.insert(orbit_representative(&diff));
            }
        }
    }
    reps.into_iter().collect()
}

/// The lexicographically least member of `⟨p⟩`.
pub fn orbit_representative(p: &Point4) -> Point4 {
    p.orbit().into_iter().min().expect("orbit is nonempty")
}

/// Edge counts per catalog orbit, in catalog order, plus the uncataloged
/// remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDistribution {
    pub per_orbit: Vec<(String, usize)>,
    pub uncataloged: usize,
}

impl EdgeDistribution {
    pub fn total(&self) -> usize {
        self.per_orbit.iter().map(|(_, n)| n).sum::<usize>() + self.uncataloged
    }

    /// Counts in catalog order, without names.
    pub fn counts(&self) -> Vec<usize> {
        self.per_orbit.iter().map(|&(_, n)| n).collect()
    }
}

impl fmt::Display for EdgeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, count) in &self.per_orbit {
            writeln!(f, "  ⟨{name}⟩: {count}")?;
        }
        if self.uncataloged > 0 {
            writeln!(f, "  uncataloged: {}", self.uncataloged)?;
        }
        Ok(())
    }
}

/// Tallies `g`'s edge labels against the catalog's orbit order.
pub fn edge_distribution(g: &UnitGraph, catalog: &VectorCatalog) -> EdgeDistribution {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    let mut uncataloged = 0usize;
    for e in g.edges() {
        match &e.label {
            EdgeLabel::Orbit(name) => *counts.entry(name.as_str()).or_default() += 1,
            EdgeLabel::Uncataloged => uncataloged += 1,
        }
    }
    let per_orbit = catalog
        .orbits
        .iter()
        .map(|o| (o.name.to_string(), counts.remove(o.name).unwrap_or(0)))
        .collect();
    // Labels not present in the catalog (foreign graph files) count as
    // uncataloged rather than disappearing.
    uncataloged += counts.values().sum::<usize>();
    EdgeDistribution {
        per_orbit,
        uncataloged,
    }
}

/// True iff `sub` embeds in `sup` by point identity: every vertex of `sub`
/// appears in `sup` and every edge of `sub` joins points adjacent in `sup`.
/// The workhorse behind lower-bound lifting: χ(sup) ≥ χ(sub) whenever this
/// holds.
pub fn contains_subgraph(sup: &UnitGraph, sub: &UnitGraph) -> bool {
    if sup.metric() != sub.metric() {
        return false;
    }
    let map: Option<Vec<u32>> = sub
        .vertices()
        .iter()
        .map(|p| sup.vertex_index(p).map(|i| i as u32))
        .collect();
    let Some(map) = map else {
        return false;
    };
    let sup_edges: std::collections::HashSet<(u32, u32)> =
        sup.edges().iter().map(|e| (e.i, e.j)).collect();
    sub.edges().iter().all(|e| {
        let (mut a, mut b) = (map[e.i as usize], map[e.j as usize]);
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        sup_edges.contains(&(a, b))
    })
}

/// The orbit seeds of the three published small 5-chromatic graphs.
pub fn compiled_seeds(metric: MetricId) -> SeedList {
    match metric {
        // G120: 15 octagonal orbits.
        MetricId::Octagon => SeedList::from_integers(
            metric,
            &[
                [-4, 4, 0, 0],
                [-4, 5, 2, -1],
                [-2, 2, 6, -4],
                [-2, 3, -4, 3],
                [-2, 4, -2, 2],
                [0, 1, 2, -1],
                [0, 2, 4, -2],
                [2, -1, -4, 3],
                [2, 0, -2, 2],
                [2, 1, 0, 1],
                [2, 2, 2, 0],
                [4, 0, -4, 4],
                [4, 0, 0, 0],
                [6, -2, 2, 0],
                [6, -1, 0, 1],
            ],
        ),
        // G121: the origin plus 12 decagonal orbits.
        MetricId::Decagon => SeedList::from_integers(
            metric,
            &[
                [0, 0, 0, 0],
                [-9, 5, -1, 1],
                [-8, 4, 0, 0],
                [-6, 4, 2, 0],
                [-5, 3, 3, -1],
                [-3, 3, -1, 1],
                [-2, 2, 0, 0],
                [1, 1, 3, -1],
                [5, -1, -1, 1],
                [6, -2, 0, 0],
                [8, -2, 2, 0],
                [9, -3, 3, -1],
                [14, -6, 0, 0],
            ],
        ),
        // G295: the origin plus 49 hexagonal orbits.
        MetricId::Dodecagon => SeedList::from_integers(
            metric,
            &[
                [0, 0, 0, 0],
                [-12, 16, 0, 0],
                [-12, 16, 24, -4],
                [-12, 18, 6, 0],
                [-12, 18, 18, -4],
                [-12, 20, 0, 0],
                [-9, 14, 24, -5],
                [-9, 16, 6, -1],
                [-8, 10, -2, 4],
                [-8, 10, 10, -4],
                [-8, 12, 4, 0],
                [-6, 6, 6, -2],
                [-6, 7, 3, 0],
                [-6, 8, 0, 2],
                [-6, 8, 12, -6],
                [-6, 8, 12, -2],
                [-6, 9, 9, 0],
                [-6, 10, 6, -2],
                [-6, 10, 18, -2],
                [-6, 12, 0, 2],
                [-6, 12, 12, -2],
                [-6, 14, 6, -2],
                [-6, 14, 18, -2],
                [-6, 16, 12, -2],
                [-5, 7, 1, 1],
                [-5, 9, 7, -3],
                [-5, 15, 13, -3],
                [-4, 4, -4, 4],
                [-4, 6, 2, 0],
                [-4, 9, 17, -2],
                [-4, 12, 8, 0],
                [-3, 6, 12, -3],
                [-3, 7, 9, -1],
                [-3, 8, 6, -3],
                [-3, 8, 6, 1],
                [-2, 4, 4, -2],
                [-2, 4, 4, 2],
                [-2, 8, 4, -2],
                [-2, 8, 16, -2],
                [0, 1, -3, 2],
                [0, 2, -6, 4],
                [0, 4, 0, 0],
                [0, 4, 12, -4],
                [0, 5, 9, -2],
                [0, 6, 6, 0],
                [0, 8, 24, -4],
                [2, 8, 8, -2],
                [2, 8, 20, -2],
                [4, 0, 4, 0],
                [6, -2, 6, -2],
            ],
        ),
    }
}

/// Name of the compiled-in small graph for a metric (`g120`, `g121`, `g295`).
pub fn compiled_graph_name(metric: MetricId) -> &'static str {
    match metric {
        MetricId::Octagon => "g120",
        MetricId::Decagon => "g121",
        MetricId::Dodecagon => "g295",
    }
}

/// `U + U` with the requested edge mode.
pub fn sum_graph(catalog: &VectorCatalog, mode: EdgeMode, threads: usize) -> UnitGraph {
    let u = catalog.generating_vectors();
    let vertices = minkowski_sum(&u, &u);
    let provenance = format!(
        "2-fold minkowski sum of U ({}), edges={}",
        catalog.metric.name(),
        mode.name()
    );
    build_graph(vertices, mode, catalog, threads, provenance)
}

/// Orbit closure of a seed list with the requested edge mode.
pub fn seed_graph(
    seeds: &SeedList,
    catalog: &VectorCatalog,
    mode: EdgeMode,
    threads: usize,
) -> UnitGraph {
    let vertices = orbit_closure(seeds);
    let provenance = format!(
        "orbit closure of {} seeds ({}), edges={}",
        seeds.points.len(),
        seeds.metric.name(),
        mode.name()
    );
    build_graph(vertices, mode, catalog, threads, provenance)
}

/// Undirected DIMACS graph format: `p edge n m` then 1-based `e i j` lines.
pub fn to_dimacs(g: &UnitGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("c {}\n", g.provenance()));
    out.push_str(&format!("c metric {}\n", g.metric().name()));
    out.push_str(&format!("p edge {} {}\n", g.vertex_count(), g.edge_count()));
    for e in g.edges() {
        out.push_str(&format!("e {} {}\n", e.i + 1, e.j + 1));
    }
    out
}
