//! A tour of the exact arithmetic layer: quadratic-field numbers with
//! decidable sign, and the point-location predicate built on them.

use polychrome::field::QuadExt;
use polychrome::metric::{side_point, MetricId, Point4, SidePoint};

fn main() {
    // (3 − 2√2)(3 + 2√2) = 1, exactly.
    let u = QuadExt::from_integers(2, 3, -2);
    let v = QuadExt::from_integers(2, 3, 2);
    println!("({u}) · ({v}) = {}", &u * &v);

    // Sign decisions never touch floating point: -9 + 5√5 is positive
    // because 5·25 = 125 > 81.
    let x = QuadExt::from_integers(5, -9, 5);
    println!("sign({x}) = {:?}  (float ≈ {:.6})", x.sign(), x.to_f64());

    // √2/2 versus 7/10, decided by comparing squares.
    let a = QuadExt::from_ratios(2, 0, 1, 1, 2);
    let b = QuadExt::from_ratios(2, 7, 10, 0, 1);
    println!("{a} > {b} ? {}", a > b);

    // Points carry a metric; their location relative to the unit polygon is
    // an exact three-way answer.
    for (metric, tuple) in [
        (MetricId::Octagon, [0i64, 0, 0, 0]),
        (MetricId::Octagon, [4, 0, 0, 0]),
        (MetricId::Octagon, [4, 2, 0, 2]),
        (MetricId::Octagon, [8, -3, 2, -1]),
        (MetricId::Dodecagon, [-9, 9, 15, -3]),
    ] {
        let p = Point4::from_integers(metric, tuple);
        println!("classify {p:?} = {:?}", p.classify());
    }

    // Walking a polygon side with an irrational ratio stays exact: the
    // point at √2−1 along the first octagon side has integer encoding.
    let t = QuadExt::from_integers(2, -1, 1);
    let p = side_point(MetricId::Octagon, &SidePoint::new(0, t)).unwrap();
    println!("octagon side 0 at ratio √2−1: {p:?} ({:?})", p.classify());

    // Orbits: rotations and negations of a seed, deduplicated.
    let seed = Point4::from_integers(MetricId::Decagon, [9, -3, 3, -1]);
    println!("decagonal orbit of {seed:?}:");
    for q in seed.orbit() {
        println!("  {q:?}");
    }
}
