//! The named unit-vector orbits of each metric: the generating sets `U` and
//! the accidental sets `V`, as compiled-in, validated, queryable data.
//!
//! Every orbit is defined twice over — by its printed coordinate tuple and
//! by the ratio in which its seed divides a polygon side — and construction
//! cross-checks one against the other, classifies every member as a boundary
//! point, and verifies the expected set sizes. A catalog that fails any of
//! these checks is unusable, so [`catalog`] refuses to return it.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::field::QuadExt;
use crate::metric::{side_point, Location, MetricId, Point4, SidePoint};

/// Whether an orbit belongs to the generating set `U` or the accidental
/// set `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitRole {
    Generating,
    Accidental,
}

/// A named orbit `⟨seed⟩` together with its defining side point.
#[derive(Clone, Serialize)]
pub struct NamedOrbit {
    pub name: &'static str,
    #[serde(serialize_with = "serialize_metric")]
    pub metric: MetricId,
    pub role: OrbitRole,
    /// Index of the polygon side carrying the seed.
    pub side: usize,
    /// Ratio in which the seed divides that side.
    pub ratio: QuadExt,
    pub seed: Point4,
    /// `orbit(seed)` in rotation order: `p₁ … p_h, −p₁ … −p_h`.
    pub members: Vec<Point4>,
}

fn serialize_metric<S: serde::Serializer>(m: &MetricId, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(m.name())
}

impl fmt::Debug for NamedOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "⟨{}⟩ ({:?}, {} members)",
            self.name,
            self.role,
            self.members.len()
        )
    }
}

/// Where a vector sits inside a catalog: which orbit, which rotation index,
/// and whether it is the negated image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MemberRef {
    pub orbit: usize,
    pub rotation: usize,
    pub negated: bool,
}

/// The full validated vector catalog of one metric.
#[derive(Clone, Serialize)]
pub struct VectorCatalog {
    #[serde(serialize_with = "serialize_metric")]
    pub metric: MetricId,
    pub orbits: Vec<NamedOrbit>,
    #[serde(skip)]
    index: HashMap<Point4, MemberRef>,
}

impl VectorCatalog {
    /// The orbit containing `v`, if any.
    pub fn orbit_of(&self, v: &Point4) -> Option<&NamedOrbit> {
        self.index.get(v).map(|r| &self.orbits[r.orbit])
    }

    /// Orbit plus position (rotation index, negation flag) of `v`.
    pub fn member_ref(&self, v: &Point4) -> Option<(&NamedOrbit, MemberRef)> {
        self.index.get(v).map(|r| (&self.orbits[r.orbit], *r))
    }

    /// True iff `v` is a generating unit vector (member of `U`).
    pub fn is_generating(&self, v: &Point4) -> bool {
        self.index
            .get(v)
            .map(|r| self.orbits[r.orbit].role == OrbitRole::Generating)
            .unwrap_or(false)
    }

    /// True iff `v` is a cataloged unit vector (member of `W = U ∪ V`).
    pub fn is_unit_vector(&self, v: &Point4) -> bool {
        self.index.contains_key(v)
    }

    pub fn orbits_with_role(&self, role: OrbitRole) -> impl Iterator<Item = &NamedOrbit> {
        self.orbits.iter().filter(move |o| o.role == role)
    }

    /// All members of `U`, in catalog order.
    pub fn generating_vectors(&self) -> Vec<Point4> {
        self.vectors_with_role(OrbitRole::Generating)
    }

    /// All members of `V`, in catalog order.
    pub fn accidental_vectors(&self) -> Vec<Point4> {
        self.vectors_with_role(OrbitRole::Accidental)
    }

    /// All members of `W = U ∪ V`, in catalog order.
    pub fn unit_vectors(&self) -> Vec<Point4> {
        self.orbits
            .iter()
            .flat_map(|o| o.members.iter().cloned())
            .collect()
    }

    fn vectors_with_role(&self, role: OrbitRole) -> Vec<Point4> {
        self.orbits_with_role(role)
            .flat_map(|o| o.members.iter().cloned())
            .collect()
    }

    /// Number of vectors in `U`.
    pub fn generating_count(&self) -> usize {
        self.orbits_with_role(OrbitRole::Generating)
            .map(|o| o.members.len())
            .sum()
    }

    /// Number of vectors in `V`.
    pub fn accidental_count(&self) -> usize {
        self.orbits_with_role(OrbitRole::Accidental)
            .map(|o| o.members.len())
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("polygon geometry check failed: {0}")]
    Geometry(String),
    #[error("orbit {orbit}: side point from the defining ratio is {computed:?}, table says {printed:?}")]
    SeedMismatch {
        orbit: &'static str,
        computed: String,
        printed: String,
    },
    #[error("orbit {orbit}: member {member:?} does not lie on the unit polygon")]
    MemberNotOnBoundary { orbit: &'static str, member: String },
    #[error("orbit {orbit}: expected {expected} members, found {found}")]
    WrongOrbitSize {
        orbit: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("orbit {orbit}: member {member:?} has a non-integer component")]
    NonIntegralMember { orbit: &'static str, member: String },
    #[error("orbits {first} and {second} overlap at {member:?}")]
    OverlappingOrbits {
        first: &'static str,
        second: &'static str,
        member: String,
    },
    #[error("{metric}: |{set}| is {found}, expected {expected}")]
    WrongSetSize {
        metric: MetricId,
        set: char,
        found: usize,
        expected: usize,
    },
}

/// Static description of one orbit: name, role, defining side point
/// (ratio `an/ad + (bn/bd)·√d`), and the printed seed tuple.
struct OrbitSpec {
    name: &'static str,
    role: OrbitRole,
    side: usize,
    ratio: (i64, i64, i64, i64),
    seed: [i64; 4],
}

use OrbitRole::{Accidental as Acc, Generating as Gen};

const OCTAGON_ORBITS: &[OrbitSpec] = &[
    OrbitSpec { name: "a1", role: Gen, side: 0, ratio: (0, 1, 0, 1), seed: [4, 0, 0, 0] },
    OrbitSpec { name: "b1", role: Gen, side: 0, ratio: (1, 2, 0, 1), seed: [2, 1, 0, 1] },
    OrbitSpec { name: "c1", role: Gen, side: 0, ratio: (1, 1, -1, 2), seed: [-2, 4, -2, 2] },
    OrbitSpec { name: "d1", role: Gen, side: 0, ratio: (0, 1, 1, 2), seed: [6, -2, 2, 0] },
    OrbitSpec { name: "e1", role: Acc, side: 0, ratio: (-1, 1, 1, 1), seed: [12, -6, 4, -2] },
    OrbitSpec { name: "f1", role: Acc, side: 0, ratio: (2, 1, -1, 1), seed: [-8, 8, -4, 4] },
    OrbitSpec { name: "g1", role: Acc, side: 0, ratio: (3, 2, -1, 1), seed: [-6, 7, -4, 3] },
    OrbitSpec { name: "h1", role: Acc, side: 0, ratio: (-1, 2, 1, 1), seed: [10, -5, 4, -1] },
    OrbitSpec { name: "i1", role: Acc, side: 0, ratio: (-1, 2, 1, 2), seed: [8, -3, 2, -1] },
    OrbitSpec { name: "j1", role: Acc, side: 0, ratio: (3, 2, -1, 2), seed: [-4, 5, -2, 3] },
];

const DECAGON_ORBITS: &[OrbitSpec] = &[
    OrbitSpec { name: "a1", role: Gen, side: 0, ratio: (0, 1, 0, 1), seed: [-2, 2, 0, 0] },
    OrbitSpec { name: "b1", role: Gen, side: 0, ratio: (3, 2, -1, 2), seed: [9, -3, 3, -1] },
    OrbitSpec { name: "c1", role: Gen, side: 0, ratio: (-1, 2, 1, 2), seed: [-9, 5, -1, 1] },
    OrbitSpec { name: "d1", role: Acc, side: 0, ratio: (-2, 1, 1, 1), seed: [-20, 10, -4, 2] },
    OrbitSpec { name: "e1", role: Acc, side: 0, ratio: (3, 1, -1, 1), seed: [20, -8, 6, -2] },
];

const DODECAGON_ORBITS: &[OrbitSpec] = &[
    OrbitSpec { name: "a2", role: Gen, side: 1, ratio: (0, 1, 0, 1), seed: [0, 6, 6, 0] },
    OrbitSpec { name: "b1", role: Gen, side: 0, ratio: (2, 3, -1, 3), seed: [-2, 8, 4, -2] },
    OrbitSpec { name: "c1", role: Gen, side: 0, ratio: (5, 6, -1, 3), seed: [-4, 9, 5, -2] },
    OrbitSpec { name: "d1", role: Gen, side: 0, ratio: (1, 1, -1, 3), seed: [-6, 10, 6, -2] },
    OrbitSpec { name: "e1", role: Gen, side: 0, ratio: (4, 3, -1, 3), seed: [-10, 12, 8, -2] },
    OrbitSpec { name: "f1", role: Gen, side: 1, ratio: (0, 1, 1, 6), seed: [-3, 7, 9, -1] },
    OrbitSpec { name: "g1", role: Gen, side: 1, ratio: (0, 1, 1, 3), seed: [-6, 8, 12, -2] },
    OrbitSpec { name: "h1", role: Acc, side: 0, ratio: (7, 6, -2, 3), seed: [-14, 15, 7, -4] },
    OrbitSpec { name: "i1", role: Acc, side: 0, ratio: (4, 3, -2, 3), seed: [-16, 16, 8, -4] },
    OrbitSpec { name: "j1", role: Acc, side: 0, ratio: (1, 3, 0, 1), seed: [8, 2, 2, 0] },
    OrbitSpec { name: "k1", role: Acc, side: 0, ratio: (1, 2, 0, 1), seed: [6, 3, 3, 0] },
    OrbitSpec { name: "l1", role: Acc, side: 0, ratio: (5, 3, -2, 3), seed: [-20, 18, 10, -4] },
    OrbitSpec { name: "m1", role: Acc, side: 0, ratio: (7, 6, -1, 3), seed: [-8, 11, 7, -2] },
    OrbitSpec { name: "n1", role: Acc, side: 0, ratio: (2, 3, 0, 1), seed: [4, 4, 4, 0] },
    OrbitSpec { name: "p1", role: Acc, side: 0, ratio: (5, 6, 0, 1), seed: [2, 5, 5, 0] },
    OrbitSpec { name: "q1", role: Acc, side: 0, ratio: (3, 2, -1, 3), seed: [-12, 13, 9, -2] },
    OrbitSpec { name: "r1", role: Acc, side: 1, ratio: (0, 1, 1, 2), seed: [-9, 9, 15, -3] },
];

fn orbit_specs(metric: MetricId) -> &'static [OrbitSpec] {
    match metric {
        MetricId::Octagon => OCTAGON_ORBITS,
        MetricId::Decagon => DECAGON_ORBITS,
        MetricId::Dodecagon => DODECAGON_ORBITS,
    }
}

/// Expected `(|U|, |V|)` per metric.
pub fn expected_set_sizes(metric: MetricId) -> (usize, usize) {
    match metric {
        MetricId::Octagon => (32, 48),
        MetricId::Decagon => (30, 20),
        MetricId::Dodecagon => (42, 60),
    }
}

/// Builds and validates the unit-vector catalog of a metric.
///
/// Checks, in order: polygon geometry closure; for every orbit, that the
/// side-ratio definition reproduces the tabulated seed tuple, that the orbit
/// is full-sized (8 / 10 / 6 members), that every member is integral and on
/// the polygon boundary, and that orbits are pairwise disjoint; finally the
/// `|U|` / `|V|` totals. Any violation aborts with the offending orbit.
pub fn catalog(metric: MetricId) -> Result<VectorCatalog, CatalogError> {
    crate::metric::validate_geometry(metric).map_err(CatalogError::Geometry)?;

    let d = metric.radicand();
    let mut orbits: Vec<NamedOrbit> = Vec::new();
    let mut index: HashMap<Point4, MemberRef> = HashMap::new();

    for spec in orbit_specs(metric) {
        let (an, ad, bn, bd) = spec.ratio;
        let ratio = QuadExt::from_ratios(d, an, ad, bn, bd);
        let definition = SidePoint::new(spec.side, ratio.clone());
        let computed = side_point(metric, &definition).map_err(|e| CatalogError::SeedMismatch {
            orbit: spec.name,
            computed: e.to_string(),
            printed: format!("{:?}", spec.seed),
        })?;
        let printed = Point4::from_integers(metric, spec.seed);
        if computed != printed {
            return Err(CatalogError::SeedMismatch {
                orbit: spec.name,
                computed: format!("{computed:?}"),
                printed: format!("{printed:?}"),
            });
        }

        let members = printed.orbit();
        if members.len() != metric.orbit_size() {
            return Err(CatalogError::WrongOrbitSize {
                orbit: spec.name,
                expected: metric.orbit_size(),
                found: members.len(),
            });
        }
        let half = metric.half_orbit();
        for (pos, member) in members.iter().enumerate() {
            if !member.is_integral() {
                return Err(CatalogError::NonIntegralMember {
                    orbit: spec.name,
                    member: format!("{member:?}"),
                });
            }
            if member.classify() != Location::Boundary {
                return Err(CatalogError::MemberNotOnBoundary {
                    orbit: spec.name,
                    member: format!("{member:?}"),
                });
            }
            let mref = MemberRef {
                orbit: orbits.len(),
                rotation: pos % half,
                negated: pos >= half,
            };
            if let Some(prev) = index.insert(member.clone(), mref) {
                return Err(CatalogError::OverlappingOrbits {
                    first: orbits[prev.orbit].name,
                    second: spec.name,
                    member: format!("{member:?}"),
                });
            }
        }

        orbits.push(NamedOrbit {
            name: spec.name,
            metric,
            role: spec.role,
            side: spec.side,
            ratio,
            seed: printed,
            members,
        });
    }

    let cat = VectorCatalog {
        metric,
        orbits,
        index,
    };
    let (expected_u, expected_v) = expected_set_sizes(metric);
    if cat.generating_count() != expected_u {
        return Err(CatalogError::WrongSetSize {
            metric,
            set: 'U',
            found: cat.generating_count(),
            expected: expected_u,
        });
    }
    if cat.accidental_count() != expected_v {
        return Err(CatalogError::WrongSetSize {
            metric,
            set: 'V',
            found: cat.accidental_count(),
            expected: expected_v,
        });
    }
    Ok(cat)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(metric: MetricId, t: [i64; 4]) -> Point4 {
        Point4::from_integers(metric, t)
    }

    #[test]
    fn all_catalogs_validate() {
        for metric in MetricId::ALL {
            let cat = catalog(metric).unwrap();
            let (u, v) = expected_set_sizes(metric);
            assert_eq!(cat.generating_count(), u);
            assert_eq!(cat.accidental_count(), v);
            assert_eq!(cat.unit_vectors().len(), u + v);
        }
    }

    #[test]
    fn octagon_catalog_shape() {
        let cat = catalog(MetricId::Octagon).unwrap();
        let names: Vec<_> = cat.orbits.iter().map(|o| o.name).collect();
        assert_eq!(
            names,
            ["a1", "b1", "c1", "d1", "e1", "f1", "g1", "h1", "i1", "j1"]
        );
        assert_eq!(cat.orbits_with_role(OrbitRole::Generating).count(), 4);
        assert_eq!(cat.orbits_with_role(OrbitRole::Accidental).count(), 6);
    }

    #[test]
    fn decagon_catalog_shape() {
        let cat = catalog(MetricId::Decagon).unwrap();
        let names: Vec<_> = cat.orbits.iter().map(|o| o.name).collect();
        assert_eq!(names, ["a1", "b1", "c1", "d1", "e1"]);
        assert_eq!(cat.generating_count(), 30);
        assert_eq!(cat.accidental_count(), 20);
    }

    #[test]
    fn dodecagon_catalog_shape() {
        let cat = catalog(MetricId::Dodecagon).unwrap();
        assert_eq!(cat.orbits.len(), 17);
        assert_eq!(cat.orbits_with_role(OrbitRole::Generating).count(), 7);
        assert_eq!(cat.orbits_with_role(OrbitRole::Accidental).count(), 10);
        assert_eq!(cat.orbits[0].name, "a2");
    }

    #[test]
    fn printed_octagon_orbits_match() {
        let cat = catalog(MetricId::Octagon).unwrap();
        let expect: [(&str, [[i64; 4]; 8]); 4] = [
            (
                "a1",
                [
                    [4, 0, 0, 0], [0, 2, 0, 2], [0, 0, 4, 0], [0, -2, 0, 2],
                    [-4, 0, 0, 0], [0, -2, 0, -2], [0, 0, -4, 0], [0, 2, 0, -2],
                ],
            ),
            (
                "b1",
                [
                    [2, 1, 0, 1], [0, 1, 2, 1], [0, -1, 2, 1], [-2, -1, 0, 1],
                    [-2, -1, 0, -1], [0, -1, -2, -1], [0, 1, -2, -1], [2, 1, 0, -1],
                ],
            ),
            (
                "c1",
                [
                    [-2, 4, -2, 2], [2, 0, 6, -2], [2, -2, -2, 4], [-6, 2, 2, 0],
                    [2, -4, 2, -2], [-2, 0, -6, 2], [-2, 2, 2, -4], [6, -2, -2, 0],
                ],
            ),
            (
                "d1",
                [
                    [6, -2, 2, 0], [-2, 2, -2, 4], [-2, 0, 6, -2], [2, -4, -2, 2],
                    [-6, 2, -2, 0], [2, -2, 2, -4], [2, 0, -6, 2], [-2, 4, 2, -2],
                ],
            ),
        ];
        for (name, tuples) in expect {
            let orbit = cat.orbits.iter().find(|o| o.name == name).unwrap();
            let want: Vec<_> = tuples
                .iter()
                .map(|t| pt(MetricId::Octagon, *t))
                .collect();
            assert_eq!(orbit.members, want, "orbit {name}");
        }
    }

    #[test]
    fn printed_decagon_orbit_heads_match() {
        let cat = catalog(MetricId::Decagon).unwrap();
        let expect: [(&str, [[i64; 4]; 5]); 5] = [
            ("a1", [[-2, 2, 0, 0], [2, 0, 2, 0], [3, -1, 1, 1], [-3, 1, 1, 1], [-2, 0, 2, 0]]),
            ("b1", [[9, -3, 3, -1], [6, -2, -2, 2], [-11, 5, 1, 1], [1, -1, 5, -1], [9, -5, -1, 1]]),
            ("c1", [[-9, 5, -1, 1], [-1, 1, 5, -1], [11, -5, 1, 1], [-6, 2, -2, 2], [-9, 3, 3, -1]]),
            ("d1", [[-20, 10, -4, 2], [-5, 3, 9, -3], [25, -11, 1, 1], [-10, 4, -6, 4], [-20, 8, 6, -2]]),
            ("e1", [[20, -8, 6, -2], [10, -4, -6, 4], [-25, 11, 1, 1], [5, -3, 9, -3], [20, -10, -4, 2]]),
        ];
        for (name, tuples) in expect {
            let orbit = cat.orbits.iter().find(|o| o.name == name).unwrap();
            for (k, t) in tuples.iter().enumerate() {
                assert_eq!(orbit.members[k], pt(MetricId::Decagon, *t), "⟨{name}⟩[{k}]");
                // The back half is the negated front half.
                assert_eq!(
                    orbit.members[k + 5],
                    -&orbit.members[k],
                    "⟨{name}⟩[{}]",
                    k + 5
                );
            }
        }
    }

    #[test]
    fn orbit_lookup() {
        let cat = catalog(MetricId::Octagon).unwrap();
        let b1_rot = pt(MetricId::Octagon, [0, 1, 2, 1]);
        assert_eq!(cat.orbit_of(&b1_rot).unwrap().name, "b1");
        let (orbit, mref) = cat.member_ref(&b1_rot).unwrap();
        assert_eq!((orbit.name, mref.rotation, mref.negated), ("b1", 1, false));
        assert!(cat.orbit_of(&Point4::origin(MetricId::Octagon)).is_none());

        let cat = catalog(MetricId::Decagon).unwrap();
        let d1_rot = pt(MetricId::Decagon, [25, -11, 1, 1]);
        assert_eq!(cat.orbit_of(&d1_rot).unwrap().name, "d1");
    }

    #[test]
    fn membership_queries() {
        let cat = catalog(MetricId::Dodecagon).unwrap();
        let a2 = pt(MetricId::Dodecagon, [0, 6, 6, 0]);
        let r1 = pt(MetricId::Dodecagon, [-9, 9, 15, -3]);
        assert!(cat.is_generating(&a2));
        assert!(!cat.is_generating(&r1));
        assert!(cat.is_unit_vector(&r1));
        assert!(!cat.is_unit_vector(&Point4::origin(MetricId::Dodecagon)));
    }
}
