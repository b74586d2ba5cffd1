//! The three polygonal Minkowski metrics: regular octagon, decagon and
//! dodecagon unit circles, with exact tuple encodings.
//!
//! A plane point is stored as four rationals `(a, b, c, d)` whose Euclidean
//! meaning depends on the metric:
//!
//! * octagon:   `(a + b√2, c + d√2)`
//! * decagon:   `((a + b√5)·cos θ, (c + d√5)·sin θ)` with `θ = π/5`
//! * dodecagon: `(a + b√3, c + d√3)`
//!
//! For the decagon, `cos θ = (1+√5)/4` while `sin θ = √(10−2√5)/4` is a
//! nested radical. Neither factor is ever represented: both are positive, so
//! coordinate comparisons divide them out, and a cross product carries the
//! common factor `cos θ · sin θ > 0`, reducing every predicate to the sign
//! of a pure Q(√5) element. The whole system stays inside quadratic fields.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::{parse_rational, rat, rational_to_f64, rational_to_string, QuadExt, Rational};

/// One of the three supported Minkowski unit circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MetricId {
    Octagon,
    Decagon,
    Dodecagon,
}

impl MetricId {
    pub const ALL: [MetricId; 3] = [MetricId::Octagon, MetricId::Decagon, MetricId::Dodecagon];

    /// Radicand of the quadratic field carrying this metric's coordinates.
    pub fn radicand(self) -> u32 {
        match self {
            MetricId::Octagon => 2,
            MetricId::Decagon => 5,
            MetricId::Dodecagon => 3,
        }
    }

    /// Number of polygon vertices (= sides).
    pub fn polygon_sides(self) -> usize {
        match self {
            MetricId::Octagon => 8,
            MetricId::Decagon => 10,
            MetricId::Dodecagon => 12,
        }
    }

    /// Size of a generic rotation orbit: octagonal 8, decagonal 10,
    /// hexagonal 6. The dodecagon deliberately uses the π/3 (hexagonal)
    /// orbit, not the full dodecagonal one.
    pub fn orbit_size(self) -> usize {
        match self {
            MetricId::Octagon => 8,
            MetricId::Decagon => 10,
            MetricId::Dodecagon => 6,
        }
    }

    /// Rotation images per orbit before negation takes over (half the orbit).
    pub fn half_orbit(self) -> usize {
        self.orbit_size() / 2
    }

    /// How many polygon vertices one orbit rotation step advances:
    /// π/4 and π/5 are single vertex steps, π/3 skips a dodecagon vertex.
    pub fn vertex_step(self) -> usize {
        match self {
            MetricId::Octagon | MetricId::Decagon => 1,
            MetricId::Dodecagon => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MetricId::Octagon => "octagon",
            MetricId::Decagon => "decagon",
            MetricId::Dodecagon => "dodecagon",
        }
    }

    pub fn from_name(name: &str) -> Option<MetricId> {
        match name {
            "octagon" => Some(MetricId::Octagon),
            "decagon" => Some(MetricId::Decagon),
            "dodecagon" => Some(MetricId::Dodecagon),
            _ => None,
        }
    }

    /// The unit polygon's vertices, counterclockwise from the positive-x
    /// vertex. Hardcoded from the tuple encodings and cross-validated by
    /// [`validate_geometry`].
    pub fn polygon_vertices(self) -> &'static [Point4] {
        &geometry(self).vertices
    }
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    #[error("side ratio {0} outside [0, 1]")]
    RatioOutOfRange(String),
    #[error("side index {index} out of range for {metric} ({sides} sides)")]
    SideIndexOutOfRange {
        metric: MetricId,
        index: usize,
        sides: usize,
    },
    #[error("unknown metric name {0:?}")]
    UnknownMetric(String),
}

/// Exact location of a point relative to the metric's unit polygon.
/// `Boundary` is the Minkowski unit-distance predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// A plane point in tuple encoding. Componentwise canonical (each rational
/// reduced), so equality and hashing are structural; ordering is
/// lexicographic on the tuple, which is the canonical vertex order used
/// throughout the graph builder.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point4 {
    metric: MetricId,
    t: [Rational; 4],
}

impl Point4 {
    pub fn new(metric: MetricId, t: [Rational; 4]) -> Self {
        Point4 { metric, t }
    }

    pub fn from_integers(metric: MetricId, t: [i64; 4]) -> Self {
        Point4::new(metric, t.map(rat))
    }

    pub fn origin(metric: MetricId) -> Self {
        Point4::from_integers(metric, [0, 0, 0, 0])
    }

    pub fn metric(&self) -> MetricId {
        self.metric
    }

    pub fn tuple(&self) -> &[Rational; 4] {
        &self.t
    }

    pub fn is_origin(&self) -> bool {
        self.t.iter().all(num_traits::Zero::is_zero)
    }

    /// True when all four components are integers. The compiled-in
    /// catalogs stay integral even though the rotation formulas divide.
    pub fn is_integral(&self) -> bool {
        use num_traits::One;
        self.t.iter().all(|r| r.denom().is_one())
    }

    /// The factored coordinates `(X, Y)`: the Euclidean point is
    /// `(X·fx, Y·fy)` with `fx = fy = 1` (octagon, dodecagon) or
    /// `fx = cos θ, fy = sin θ > 0` (decagon). Signs of coordinates and
    /// cross products are unaffected by the factors.
    pub fn factored(&self) -> (QuadExt, QuadExt) {
        let d = self.metric.radicand();
        let x = QuadExt::new(d, self.t[0].clone(), self.t[1].clone()).expect("valid radicand");
        let y = QuadExt::new(d, self.t[2].clone(), self.t[3].clone()).expect("valid radicand");
        (x, y)
    }

    /// Inverse of [`Point4::factored`].
    pub fn from_factored(metric: MetricId, x: &QuadExt, y: &QuadExt) -> Self {
        debug_assert_eq!(x.radicand(), metric.radicand());
        debug_assert_eq!(y.radicand(), metric.radicand());
        Point4::new(
            metric,
            [
                x.rational_part().clone(),
                x.radical_part().clone(),
                y.rational_part().clone(),
                y.radical_part().clone(),
            ],
        )
    }

    /// One counterclockwise step of the metric's orbit rotation (π/4, π/5
    /// or π/3), as an exact closed-form tuple map. No integrality is
    /// assumed: the divisions land in rationals and the catalogs happening
    /// to stay integral is a checked property, not a precondition.
    pub fn rotate_step(&self) -> Point4 {
        let [a, b, c, d] = &self.t;
        let half = || crate::field::ratio(1, 2);
        let quarter = || crate::field::ratio(1, 4);
        let t = match self.metric {
            // (a, b, c, d) ↦ (b−d, (a−c)/2, b+d, (a+c)/2)
            MetricId::Octagon => [
                b - d,
                (a - c) * half(),
                b + d,
                (a + c) * half(),
            ],
            // (a, b, c, d) ↦ ((a+5b+5c−15d)/4, (a+b−3c+5d)/4,
            //                 (a+5b+c+5d)/4,   (a+b+c+d)/4)
            MetricId::Decagon => [
                (a + b * rat(5) + c * rat(5) - d * rat(15)) * quarter(),
                (a + b - c * rat(3) + d * rat(5)) * quarter(),
                (a + b * rat(5) + c + d * rat(5)) * quarter(),
                (a + b + c + d) * quarter(),
            ],
            // (a, b, c, d) ↦ ((a−3d)/2, (b−c)/2, (3b+c)/2, (a+d)/2)
            MetricId::Dodecagon => [
                (a - d * rat(3)) * half(),
                (b - c) * half(),
                (b * rat(3) + c) * half(),
                (a + d) * half(),
            ],
        };
        Point4::new(self.metric, t)
    }

    /// The orbit `⟨p⟩ = {±rotᵏ(p)}`, in the order `p₁, …, p_h, −p₁, …, −p_h`
    /// with duplicates dropped. A generic point yields the full orbit
    /// (8 / 10 / 6 members); the origin yields a singleton.
    pub fn orbit(&self) -> Vec<Point4> {
        let half = self.metric.half_orbit();
        let mut rotations = Vec::with_capacity(half);
        let mut p = self.clone();
        for _ in 0..half {
            rotations.push(p.clone());
            p = p.rotate_step();
        }
        let mut members: Vec<Point4> = Vec::with_capacity(2 * half);
        for q in rotations.iter().cloned().chain(rotations.iter().map(|q| -q)) {
            if !members.contains(&q) {
                members.push(q);
            }
        }
        members
    }

    /// Exact location relative to the unit polygon.
    ///
    /// Walks the sides counterclockwise: a negative cross product puts the
    /// point strictly outside; a zero cross product makes it collinear with
    /// that side, where closed coordinatewise betweenness decides between
    /// boundary and outside. All signs via [`QuadExt::sign`].
    pub fn classify(&self) -> Location {
        let geom = geometry(self.metric);
        let (px, py) = self.factored();
        let mut on_boundary = false;
        for side in &geom.sides {
            let dx = &px - &side.vx;
            let dy = &py - &side.vy;
            let cross = &side.sx * &dy - &side.sy * &dx;
            match cross.sign() {
                Ordering::Less => return Location::Outside,
                Ordering::Greater => {}
                Ordering::Equal => {
                    // Collinear with this side's line: on the closed segment
                    // or strictly outside the polygon (no two sides share a
                    // line in a regular polygon).
                    if within(&side.vx, &side.wx, &px) && within(&side.vy, &side.wy, &py) {
                        on_boundary = true;
                    } else {
                        return Location::Outside;
                    }
                }
            }
        }
        if on_boundary {
            Location::Boundary
        } else {
            Location::Inside
        }
    }

    /// Floating Euclidean coordinates for rendering. Untrusted: never used
    /// in predicates.
    pub fn embed_f64(&self) -> (f64, f64) {
        let x = rational_to_f64(&self.t[0]);
        let xr = rational_to_f64(&self.t[1]);
        let y = rational_to_f64(&self.t[2]);
        let yr = rational_to_f64(&self.t[3]);
        let s = (self.metric.radicand() as f64).sqrt();
        let (fx, fy) = match self.metric {
            MetricId::Decagon => {
                let cos = (1.0 + 5f64.sqrt()) / 4.0;
                let sin = (10.0 - 2.0 * 5f64.sqrt()).sqrt() / 4.0;
                (cos, sin)
            }
            _ => (1.0, 1.0),
        };
        ((x + xr * s) * fx, (y + yr * s) * fy)
    }
}

fn assert_same_metric(a: &Point4, b: &Point4) {
    assert_eq!(
        a.metric, b.metric,
        "points from different metrics cannot be combined"
    );
}

impl Add for &Point4 {
    type Output = Point4;
    fn add(self, rhs: &Point4) -> Point4 {
        assert_same_metric(self, rhs);
        let t = [
            &self.t[0] + &rhs.t[0],
            &self.t[1] + &rhs.t[1],
            &self.t[2] + &rhs.t[2],
            &self.t[3] + &rhs.t[3],
        ];
        Point4::new(self.metric, t)
    }
}

impl Sub for &Point4 {
    type Output = Point4;
    fn sub(self, rhs: &Point4) -> Point4 {
        assert_same_metric(self, rhs);
        let t = [
            &self.t[0] - &rhs.t[0],
            &self.t[1] - &rhs.t[1],
            &self.t[2] - &rhs.t[2],
            &self.t[3] - &rhs.t[3],
        ];
        Point4::new(self.metric, t)
    }
}

impl Neg for &Point4 {
    type Output = Point4;
    fn neg(self) -> Point4 {
        let t = [-&self.t[0], -&self.t[1], -&self.t[2], -&self.t[3]];
        Point4::new(self.metric, t)
    }
}

impl Add for Point4 {
    type Output = Point4;
    fn add(self, rhs: Point4) -> Point4 {
        &self + &rhs
    }
}

impl Sub for Point4 {
    type Output = Point4;
    fn sub(self, rhs: Point4) -> Point4 {
        &self - &rhs
    }
}

impl Neg for Point4 {
    type Output = Point4;
    fn neg(self) -> Point4 {
        -&self
    }
}

impl fmt::Debug for Point4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})@{}",
            rational_to_string(&self.t[0]),
            rational_to_string(&self.t[1]),
            rational_to_string(&self.t[2]),
            rational_to_string(&self.t[3]),
            self.metric
        )
    }
}

#[derive(Serialize, Deserialize)]
struct Point4Repr {
    metric: String,
    t: [String; 4],
}

impl Serialize for Point4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Point4Repr {
            metric: self.metric.name().to_string(),
            t: [
                rational_to_string(&self.t[0]),
                rational_to_string(&self.t[1]),
                rational_to_string(&self.t[2]),
                rational_to_string(&self.t[3]),
            ],
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Point4 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = Point4Repr::deserialize(deserializer)?;
        let metric = MetricId::from_name(&repr.metric)
            .ok_or_else(|| D::Error::custom(format!("unknown metric {:?}", repr.metric)))?;
        let mut t = [rat(0), rat(0), rat(0), rat(0)];
        for (slot, s) in t.iter_mut().zip(repr.t.iter()) {
            *slot = parse_rational(s).map_err(D::Error::custom)?;
        }
        Ok(Point4::new(metric, t))
    }
}

/// A point on the polygon boundary given as side index `k` (the side from
/// vertex `k` to vertex `k+1`, counterclockwise) and a ratio `t ∈ [0, 1]`
/// along it, exact in the metric's field.
#[derive(Clone, Debug, PartialEq)]
pub struct SidePoint {
    pub side: usize,
    pub t: QuadExt,
}

impl SidePoint {
    pub fn new(side: usize, t: QuadExt) -> Self {
        SidePoint { side, t }
    }
}

/// `v_k + t·(v_{k+1} − v_k)`, exact. For the decagon the interpolation acts
/// on the factored coordinates directly, so the basis factors never appear.
pub fn side_point(metric: MetricId, sp: &SidePoint) -> Result<Point4, MetricError> {
    let sides = metric.polygon_sides();
    if sp.side >= sides {
        return Err(MetricError::SideIndexOutOfRange {
            metric,
            index: sp.side,
            sides,
        });
    }
    debug_assert_eq!(sp.t.radicand(), metric.radicand());
    let one = QuadExt::one(metric.radicand());
    if sp.t.sign() == Ordering::Less || (&one - &sp.t).sign() == Ordering::Less {
        return Err(MetricError::RatioOutOfRange(sp.t.to_string()));
    }
    let geom = geometry(metric);
    let side = &geom.sides[sp.side];
    let x = &side.vx + &(&sp.t * &side.sx);
    let y = &side.vy + &(&sp.t * &side.sy);
    Ok(Point4::from_factored(metric, &x, &y))
}

/// Closed-interval membership `x ∈ [min(a,b), max(a,b)]` within one field.
fn within(a: &QuadExt, b: &QuadExt, x: &QuadExt) -> bool {
    let (lo, hi) = if a.partial_cmp(b) == Some(Ordering::Greater) {
        (b, a)
    } else {
        (a, b)
    };
    lo.partial_cmp(x) != Some(Ordering::Greater) && x.partial_cmp(hi) != Some(Ordering::Greater)
}

struct SideGeometry {
    /// Factored coordinates of the side's start vertex.
    vx: QuadExt,
    vy: QuadExt,
    /// Factored coordinates of the side's end vertex.
    wx: QuadExt,
    wy: QuadExt,
    /// Side direction `w − v`.
    sx: QuadExt,
    sy: QuadExt,
}

struct Geometry {
    vertices: Vec<Point4>,
    sides: Vec<SideGeometry>,
}

fn build_geometry(metric: MetricId) -> Geometry {
    let tuples: &[[i64; 4]] = match metric {
        MetricId::Octagon => &[
            [4, 0, 0, 0],
            [0, 2, 0, 2],
            [0, 0, 4, 0],
            [0, -2, 0, 2],
            [-4, 0, 0, 0],
            [0, -2, 0, -2],
            [0, 0, -4, 0],
            [0, 2, 0, -2],
        ],
        MetricId::Decagon => &[
            [-2, 2, 0, 0],
            [2, 0, 2, 0],
            [3, -1, 1, 1],
            [-3, 1, 1, 1],
            [-2, 0, 2, 0],
            [2, -2, 0, 0],
            [-2, 0, -2, 0],
            [-3, 1, -1, -1],
            [3, -1, -1, -1],
            [2, 0, -2, 0],
        ],
        MetricId::Dodecagon => &[
            [12, 0, 0, 0],
            [0, 6, 6, 0],
            [6, 0, 0, 6],
            [0, 0, 12, 0],
            [-6, 0, 0, 6],
            [0, -6, 6, 0],
            [-12, 0, 0, 0],
            [0, -6, -6, 0],
            [-6, 0, 0, -6],
            [0, 0, -12, 0],
            [6, 0, 0, -6],
            [0, 6, -6, 0],
        ],
    };
    let vertices: Vec<Point4> = tuples
        .iter()
        .map(|t| Point4::from_integers(metric, *t))
        .collect();
    let n = vertices.len();
    let sides = (0..n)
        .map(|k| {
            let (vx, vy) = vertices[k].factored();
            let (wx, wy) = vertices[(k + 1) % n].factored();
            let sx = &wx - &vx;
            let sy = &wy - &vy;
            SideGeometry {
                vx,
                vy,
                wx,
                wy,
                sx,
                sy,
            }
        })
        .collect();
    Geometry { vertices, sides }
}

fn geometry(metric: MetricId) -> &'static Geometry {
    static OCTAGON: OnceLock<Geometry> = OnceLock::new();
    static DECAGON: OnceLock<Geometry> = OnceLock::new();
    static DODECAGON: OnceLock<Geometry> = OnceLock::new();
    let cell = match metric {
        MetricId::Octagon => &OCTAGON,
        MetricId::Decagon => &DECAGON,
        MetricId::Dodecagon => &DODECAGON,
    };
    cell.get_or_init(|| build_geometry(metric))
}

/// Cross-validates the hardcoded vertex tables against the rotation maps:
/// one orbit step must advance the vertex list by [`MetricId::vertex_step`],
/// every vertex must classify as boundary, and every doubled vertex as
/// outside. Two independent sources of truth for the polygon data.
pub fn validate_geometry(metric: MetricId) -> Result<(), String> {
    let vertices = metric.polygon_vertices();
    let n = vertices.len();
    if n != metric.polygon_sides() {
        return Err(format!("{metric}: vertex table has {n} entries"));
    }
    let step = metric.vertex_step();
    for (k, v) in vertices.iter().enumerate() {
        let rotated = v.rotate_step();
        let expected = &vertices[(k + step) % n];
        if &rotated != expected {
            return Err(format!(
                "{metric}: rotation of vertex {k} gave {rotated:?}, expected {expected:?}"
            ));
        }
        if v.classify() != Location::Boundary {
            return Err(format!("{metric}: vertex {k} does not classify as boundary"));
        }
        if (v + v).classify() != Location::Outside {
            return Err(format!("{metric}: doubled vertex {k} not outside"));
        }
    }
    Ok(())
}
