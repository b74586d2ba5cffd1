//! Structural analysis beyond chromatic numbers: the Moser spindle
//! embedding, spindle counting, small k-chromatic subgraph search, and
//! χ-preserving shrinking.

use std::collections::HashSet;
use std::time::Duration;

use crate::bits::BitAdjacency;
use crate::color::{k_colorable, SolveOptions, Verdict};
use crate::graph::UnitGraph;
use crate::metric::{Location, MetricId, Point4};

/// The abstract Moser spindle: two rhombi (each a pair of triangles glued
/// along a diagonal) sharing the hub vertex, apexes joined by an edge.
///
/// Vertex roles: `0` hub, `1 2` first rhombus pair, `3` its apex, `4 5`
/// second rhombus pair, `6` its apex. As an abstract graph it has 7
/// vertices, 11 edges, chromatic number 4.
pub struct SpindleTemplate;

impl SpindleTemplate {
    pub const VERTEX_COUNT: usize = 7;
    pub const EDGES: [(usize, usize); 11] = [
        (0, 1),
        (0, 2),
        (1, 2),
        (1, 3),
        (2, 3),
        (0, 4),
        (0, 5),
        (4, 5),
        (4, 6),
        (5, 6),
        (3, 6),
    ];
}

/// A concrete spindle drawn in a metric plane: seven points whose template
/// differences are all unit vectors.
#[derive(Clone, Debug)]
pub struct SpindleEmbedding {
    pub points: [Point4; 7],
}

impl SpindleEmbedding {
    /// The 11 template edges as point pairs.
    pub fn edges(&self) -> impl Iterator<Item = (&Point4, &Point4)> {
        SpindleTemplate::EDGES
            .iter()
            .map(|&(i, j)| (&self.points[i], &self.points[j]))
    }

    /// Checks that every template difference lies on the unit polygon.
    pub fn verify(&self) -> Result<(), String> {
        for (idx, &(i, j)) in SpindleTemplate::EDGES.iter().enumerate() {
            let diff = &self.points[j] - &self.points[i];
            if diff.classify() != Location::Boundary {
                return Err(format!(
                    "edge {idx} ({i},{j}): difference {diff:?} is not a unit vector"
                ));
            }
        }
        Ok(())
    }
}

/// The spindle drawn in the regular octagon metric: hub at the origin, one
/// rhombus on a1 and c2, the other on a3 and d1. The apex difference
/// (a3+d1) − (a1+c2) = (0,−2,0,2) is the octagon vertex a4.
pub fn octagon_spindle() -> SpindleEmbedding {
    let m = MetricId::Octagon;
    let p = |t: [i64; 4]| Point4::from_integers(m, t);
    SpindleEmbedding {
        points: [
            p([0, 0, 0, 0]),   // hub o
            p([4, 0, 0, 0]),   // a1
            p([2, 0, 6, -2]),  // c2
            p([6, 0, 6, -2]),  // a1 + c2
            p([0, 0, 4, 0]),   // a3
            p([6, -2, 2, 0]),  // d1
            p([6, -2, 6, 0]),  // a3 + d1
        ],
    }
}

/// Spindle counts of a graph under the two natural conventions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpindleCount {
    /// 7-vertex subsets whose induced subgraph contains a spanning spindle.
    pub vertex_subsets: u64,
    /// Distinct spindle subgraphs (vertex set plus 11-edge set); this equals
    /// labeled template embeddings divided by the spindle's automorphisms.
    pub subgraphs: u64,
}

/// Counts Moser spindles by direct pattern enumeration: every rhombus is a
/// triangle `{hub, a, b}` plus a second common neighbor of `a` and `b`;
/// spindles are pairs of vertex-disjoint rhombi at one hub with adjacent
/// apexes.
pub fn count_spindles(g: &UnitGraph) -> SpindleCount {
    let n = g.vertex_count();
    let adj = BitAdjacency::new(n, g.edges().iter().map(|e| (e.i, e.j)));

    // rhombi[hub] = (pair low, pair high, apex)
    let mut rhombi: Vec<Vec<(u32, u32, u32)>> = vec![Vec::new(); n];
    for e in g.edges() {
        let (a, b) = (e.i as usize, e.j as usize);
        let common: Vec<usize> = adj
            .row(a)
            .iter()
            .zip(adj.row(b))
            .enumerate()
            .flat_map(|(w, (x, y))| {
                let mut bits = x & y;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        None
                    } else {
                        let t = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        Some(w * 64 + t)
                    }
                })
            })
            .collect();
        for &hub in &common {
            for &apex in &common {
                if hub != apex {
                    rhombi[hub].push((e.i, e.j, apex as u32));
                }
            }
        }
    }

    let mut subsets: HashSet<[u32; 7]> = HashSet::new();
    let mut subgraphs: HashSet<[(u32, u32); 11]> = HashSet::new();
    for (hub, list) in rhombi.iter().enumerate() {
        for (x, &(a1, b1, t1)) in list.iter().enumerate() {
            for &(a2, b2, t2) in &list[x + 1..] {
                let first = [a1, b1, t1];
                let second = [a2, b2, t2];
                if first.iter().any(|v| second.contains(v)) {
                    continue;
                }
                if !adj.contains(t1 as usize, t2 as usize) {
                    continue;
                }
                let mut subset = [hub as u32, a1, b1, t1, a2, b2, t2];
                subset.sort_unstable();
                subsets.insert(subset);
                let h = hub as u32;
                let mut edges = [
                    (h, a1),
                    (h, b1),
                    (a1, b1),
                    (a1, t1),
                    (b1, t1),
                    (h, a2),
                    (h, b2),
                    (a2, b2),
                    (a2, t2),
                    (b2, t2),
                    (t1, t2),
                ];
                for pair in &mut edges {
                    if pair.0 > pair.1 {
                        *pair = (pair.1, pair.0);
                    }
                }
                edges.sort_unstable();
                subgraphs.insert(edges);
            }
        }
    }
    SpindleCount {
        vertex_subsets: subsets.len() as u64,
        subgraphs: subgraphs.len() as u64,
    }
}

/// A vertex-induced subgraph witnessing chromatic number `chi`, with its
/// indices into the parent graph. `chi` is recomputed by the chromatic
/// module, never trusted from the search. Serializes as the induced graph
/// JSON plus the parent index list.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SubgraphWitness {
    pub vertex_indices: Vec<u32>,
    pub graph: UnitGraph,
    pub chi: u32,
}

#[derive(Clone, Debug)]
pub enum SubgraphSearch {
    Found(SubgraphWitness),
    /// Proven absent: the whole graph is (k−1)-colorable.
    None,
    /// The attempt budget ran out before a small enough witness appeared.
    BudgetExhausted,
}

#[derive(Clone, Debug)]
pub struct SearchBudget {
    /// Randomized shrink attempts (deterministically seeded).
    pub attempts: u32,
    /// Time budget per colorability decision inside the search.
    pub solve_timeout: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            attempts: 64,
            solve_timeout: Some(Duration::from_secs(120)),
        }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn shuffle<T>(items: &mut [T], seed: u64) {
    let mut state = seed;
    for i in (1..items.len()).rev() {
        let j = (splitmix64(&mut state) % (i as u64 + 1)) as usize;
        items.swap(i, j);
    }
}

/// Iteratively drops vertices with fewer than `min_degree` neighbors inside
/// the set. Any k-vertex-critical subgraph has minimum degree ≥ k−1, so
/// pruning to the (k−1)-core preserves every witness.
fn prune_core(adj: &[Vec<u32>], alive: &mut [bool], min_degree: usize) {
    loop {
        let mut changed = false;
        for v in 0..alive.len() {
            if !alive[v] {
                continue;
            }
            let deg = adj[v].iter().filter(|&&u| alive[u as usize]).count();
            if deg < min_degree {
                alive[v] = false;
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

fn alive_indices(alive: &[bool]) -> Vec<u32> {
    alive
        .iter()
        .enumerate()
        .filter_map(|(v, &a)| a.then_some(v as u32))
        .collect()
}

/// Searches for an induced subgraph of order ≤ `max_order` with chromatic
/// number ≥ `k` (necessarily exactly `k` when found by shrinking).
///
/// Strategy: if the graph itself is (k−1)-colorable there is nothing to
/// find. Otherwise run deterministic randomized-order greedy shrinks that
/// preserve "not (k−1)-colorable", pruning to the (k−1)-core after every
/// deletion; each attempt ends in a k-vertex-critical subgraph. The first
/// one small enough is re-verified through the chromatic module and
/// returned.
pub fn find_k_chromatic_subgraph(
    g: &UnitGraph,
    k: u32,
    max_order: usize,
    budget: &SearchBudget,
) -> SubgraphSearch {
    assert!(k >= 2, "k must be at least 2");
    let opts = SolveOptions {
        timeout: budget.solve_timeout,
    };
    let n = g.vertex_count();
    match k_colorable(g, k - 1, &opts).verdict {
        Verdict::Satisfiable(_) => return SubgraphSearch::None,
        Verdict::Unsatisfiable => {}
        Verdict::Indeterminate => return SubgraphSearch::BudgetExhausted,
    }
    let adj = g.adjacency();
    let not_colorable = |alive: &[bool]| -> Option<bool> {
        let sub = g.induced_subgraph(&alive_indices(alive), String::new());
        match k_colorable(&sub, k - 1, &opts).verdict {
            Verdict::Satisfiable(_) => Some(false),
            Verdict::Unsatisfiable => Some(true),
            Verdict::Indeterminate => None,
        }
    };

    for attempt in 0..budget.attempts {
        let mut alive = vec![true; n];
        prune_core(&adj, &mut alive, (k - 1) as usize);
        let mut order: Vec<u32> = (0..n as u32).collect();
        let mut pass_seed = 0x5eed ^ (attempt as u64) << 32;
        loop {
            let mut removed_any = false;
            shuffle(&mut order, splitmix64(&mut pass_seed));
            for &v in &order {
                if !alive[v as usize] {
                    continue;
                }
                alive[v as usize] = false;
                let mut trial = alive.clone();
                prune_core(&adj, &mut trial, (k - 1) as usize);
                match not_colorable(&trial) {
                    Some(true) => {
                        alive = trial;
                        removed_any = true;
                    }
                    Some(false) => alive[v as usize] = true,
                    None => return SubgraphSearch::BudgetExhausted,
                }
            }
            if !removed_any {
                break;
            }
        }
        let indices = alive_indices(&alive);
        if indices.len() <= max_order {
            let graph = g.induced_subgraph(
                &indices,
                format!("order-{} subgraph of [{}]", indices.len(), g.provenance()),
            );
            // Independent re-verification of the witness.
            let unsat = k_colorable(&graph, k - 1, &opts).verdict.is_unsat();
            let sat = k_colorable(&graph, k, &opts).verdict.is_sat();
            if unsat && sat {
                return SubgraphSearch::Found(SubgraphWitness {
                    vertex_indices: indices,
                    graph,
                    chi: k,
                });
            }
        }
    }
    SubgraphSearch::BudgetExhausted
}

/// Exhaustively decides whether `g` contains a k-chromatic subgraph on at
/// most `max_order` vertices. Unlike [`find_k_chromatic_subgraph`] this
/// runs to completion: `None` is a proof of absence, not a give-up.
///
/// Any witness would contain a (k−1)-core: peeling vertices of degree
/// < k−1 preserves "not (k−1)-colorable", and some connected component of
/// the result still is not (k−1)-colorable. So it suffices to enumerate
/// every connected induced subgraph of order ≤ `max_order` with minimum
/// degree ≥ k−1 and test each. Enumeration is ESU-style (each subset
/// generated exactly once from its least vertex), pruned by degree
/// feasibility: a subset vertex that cannot reach degree k−1 from the
/// remaining extension candidates kills the subtree. Long-running on
/// graphs of any size — minutes, not milliseconds; parallel over roots.
pub fn exhaustive_subgraph_absence_check(
    g: &UnitGraph,
    k: u32,
    max_order: usize,
) -> Option<SubgraphWitness> {
    use rayon::prelude::*;
    assert!(k >= 2);
    let n = g.vertex_count();
    let adj = BitAdjacency::new(n, g.edges().iter().map(|e| (e.i, e.j)));
    let words = adj.words();
    let min_deg = (k - 1) as usize;
    let opts = SolveOptions { timeout: None };

    let found: Vec<Vec<u32>> = (0..n as u32)
        .into_par_iter()
        .filter_map(|root| {
            let mut walker = CoreWalker {
                adj: &adj,
                root,
                min_deg,
                max_order,
                subset: Vec::with_capacity(max_order),
                subset_mask: vec![0u64; words],
                deg_in: vec![0u8; n],
                hits: Vec::new(),
            };
            walker.push(root);
            let ext: Vec<u32> = adj.neighbors(root as usize).map(|u| u as u32).filter(|&u| u > root).collect();
            let mut ext_mask = vec![0u64; words];
            for &u in &ext {
                ext_mask[u as usize / 64] |= 1 << (u % 64);
            }
            walker.extend(&ext, &ext_mask);
            if walker.hits.is_empty() {
                None
            } else {
                Some(walker.hits)
            }
        })
        .flatten()
        .collect();

    // Candidate cores are rare; re-test them through the solver.
    let mut candidates = found;
    candidates.sort();
    for subset in candidates {
        let sub = g.induced_subgraph(&subset, format!("order-{} core", subset.len()));
        if k_colorable(&sub, k - 1, &opts).verdict.is_unsat() {
            return Some(SubgraphWitness {
                vertex_indices: subset,
                graph: sub,
                chi: k,
            });
        }
    }
    None
}

struct CoreWalker<'a> {
    adj: &'a BitAdjacency,
    root: u32,
    min_deg: usize,
    max_order: usize,
    subset: Vec<u32>,
    subset_mask: Vec<u64>,
    deg_in: Vec<u8>,
    /// Subsets with minimum induced degree ≥ `min_deg` (colorability is
    /// checked later, outside the hot loop).
    hits: Vec<Vec<u32>>,
}

impl CoreWalker<'_> {
    fn push(&mut self, w: u32) {
        let wi = w as usize;
        let mut d = 0u8;
        for (word, bits) in self.adj.row(wi).iter().enumerate() {
            let mut hit = bits & self.subset_mask[word];
            while hit != 0 {
                let u = word * 64 + hit.trailing_zeros() as usize;
                hit &= hit - 1;
                self.deg_in[u] += 1;
                d += 1;
            }
        }
        self.deg_in[wi] = d;
        self.subset.push(w);
        self.subset_mask[wi / 64] |= 1 << (w % 64);
    }

    fn pop(&mut self) {
        let w = self.subset.pop().expect("pop matches push");
        let wi = w as usize;
        self.subset_mask[wi / 64] &= !(1 << (w % 64));
        for (word, bits) in self.adj.row(wi).iter().enumerate() {
            let mut hit = bits & self.subset_mask[word];
            while hit != 0 {
                let u = word * 64 + hit.trailing_zeros() as usize;
                hit &= hit - 1;
                self.deg_in[u] -= 1;
            }
        }
        self.deg_in[wi] = 0;
    }

    fn extend(&mut self, ext: &[u32], ext_mask: &[u64]) {
        let slots = self.max_order - self.subset.len();
        // Feasibility: every chosen vertex must still be able to reach the
        // degree floor using extension candidates alone (future exclusive
        // neighbors are never adjacent to the current subset).
        let mut all_met = true;
        for &s in &self.subset {
            let d = self.deg_in[s as usize] as usize;
            if d < self.min_deg {
                all_met = false;
                let potential: u32 = self
                    .adj
                    .row(s as usize)
                    .iter()
                    .zip(ext_mask)
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                if d + (potential as usize).min(slots) < self.min_deg {
                    return;
                }
            }
        }
        if all_met && self.subset.len() > self.min_deg {
            self.hits.push(self.subset.clone());
        }
        if slots == 0 {
            return;
        }
        let mut remaining = ext.to_vec();
        let mut remaining_mask = ext_mask.to_vec();
        while let Some(w) = remaining.pop() {
            remaining_mask[w as usize / 64] &= !(1 << (w % 64));
            // Exclusive neighbors of w extend the candidate pool.
            let mut ext2 = remaining.clone();
            let mut ext2_mask = remaining_mask.clone();
            // Mask of vertices adjacent to the current subset.
            for u in self.adj.neighbors(w as usize) {
                let u32u = u as u32;
                if u32u > self.root
                    && self.subset_mask[u / 64] & (1 << (u % 64)) == 0
                    && ext2_mask[u / 64] & (1 << (u % 64)) == 0
                {
                    let adjacent_to_subset = self
                        .adj
                        .row(u)
                        .iter()
                        .zip(&self.subset_mask)
                        .any(|(a, b)| a & b != 0);
                    if !adjacent_to_subset {
                        ext2.push(u32u);
                        ext2_mask[u / 64] |= 1 << (u % 64);
                    }
                }
            }
            self.push(w);
            self.extend(&ext2, &ext2_mask);
            self.pop();
            // w stays excluded from this branch's siblings.
        }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum ShrinkError {
    #[error("graph is ({0})-colorable, nothing to preserve")]
    PreconditionFailed(u32),
    #[error("a colorability decision timed out during shrinking")]
    Indeterminate,
}

/// Greedy χ-preserving shrink: repeatedly deletes, in canonical vertex
/// order, any vertex whose removal keeps the graph not-(k−1)-colorable,
/// until no single deletion does. The result is k-vertex-critical (single
/// deletions cannot shrink it further) and is re-verified before returning.
pub fn shrink_preserving_chi(
    g: &UnitGraph,
    k: u32,
    opts: &SolveOptions,
) -> Result<UnitGraph, ShrinkError> {
    assert!(k >= 2, "k must be at least 2");
    let check = |graph: &UnitGraph| -> Result<bool, ShrinkError> {
        match k_colorable(graph, k - 1, opts).verdict {
            Verdict::Unsatisfiable => Ok(true),
            Verdict::Satisfiable(_) => Ok(false),
            Verdict::Indeterminate => Err(ShrinkError::Indeterminate),
        }
    };
    if !check(g)? {
        return Err(ShrinkError::PreconditionFailed(k - 1));
    }
    let mut current = g.clone();
    loop {
        let mut removed_any = false;
        let mut v = 0u32;
        while (v as usize) < current.vertex_count() {
            let keep: Vec<u32> = (0..current.vertex_count() as u32)
                .filter(|&u| u != v)
                .collect();
            let trial = current.induced_subgraph(&keep, current.provenance().to_string());
            if check(&trial)? {
                current = trial;
                removed_any = true;
                // Same position now holds the next vertex.
            } else {
                v += 1;
            }
        }
        if !removed_any {
            break;
        }
    }
    debug_assert!(check(&current)?);
    let provenance = format!(
        "chi>={k}-preserving shrink of [{}], order {}",
        g.provenance(),
        current.vertex_count()
    );
    let renamed = UnitGraph::from_parts(
        current.metric(),
        current.vertices().to_vec(),
        current.edges().to_vec(),
        provenance,
    )
    .expect("shrunk graph stays canonical");
    Ok(renamed)
}
