//! Rational stand-ins for disks.
//!
//! Every disk in the decision pipeline is replaced by a convex polygon with
//! rational vertices whose boundary lies inside the annulus between two
//! concentric circles. Vertices sit exactly on the outer circle; the
//! per-quadrant subdivision count is the smallest that keeps every chord
//! clear of the inner circle, which uses asymptotically optimal
//! `O(sqrt(b/(b-a)))` vertices.

use crate::error::{Error, Result};
use crate::geom::{Point, Ring};
use crate::numeric::{ceil_sqrt, rat_int, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Inner and outer radius of the annulus a disk polygon must respect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnulusSpec {
    a: Rational,
    b: Rational,
}

impl AnnulusSpec {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if !a.is_positive() || a >= b {
            return Err(Error::InvalidAnnulus(format!(
                "need 0 < a < b, got a={a}, b={b}"
            )));
        }
        Ok(AnnulusSpec { a, b })
    }

    pub fn inner(&self) -> &Rational {
        &self.a
    }

    pub fn outer(&self) -> &Rational {
        &self.b
    }
}

/// A convex, origin-centered polygon with all vertices on the circle of
/// radius `b` and all edges at distance at least `a` from the origin,
/// symmetric under quarter turns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnulusPolygon {
    spec: AnnulusSpec,
    vertices: Vec<Point>,
    z: u64,
}

/// The rational point `(b(1-t^2)/(1+t^2), 2bt/(1+t^2))` on the circle of
/// radius `b`, sweeping the first quadrant as `t` goes from 0 to 1.
pub fn circle_point(b: &Rational, t: &Rational) -> Point {
    let t2 = t * t;
    let denom = rat_int(1) + &t2;
    let x = b * (rat_int(1) - &t2) / &denom;
    let y = b * rat_int(2) * t / denom;
    Point::new(x, y)
}

/// Builds the annulus polygon for `spec` with the canonical per-quadrant
/// count `z = ceil(sqrt(b/(b-a)))`.
pub fn annulus_polygon(spec: AnnulusSpec) -> AnnulusPolygon {
    let ratio = spec.b.clone() / (&spec.b - &spec.a);
    let z = ceil_sqrt(&ratio).to_u64().expect("per-quadrant count fits u64");

    let zr = Rational::from_integer(BigInt::from(z));
    // First quadrant, (b,0) inclusive up to but not including (0,b); the
    // other quadrants are exact quarter-turn images.
    let mut quadrant: Vec<Point> = Vec::with_capacity(z as usize);
    for i in 0..z {
        let t = Rational::from_integer(BigInt::from(i)) / zr.clone();
        quadrant.push(circle_point(&spec.b, &t));
    }

    let mut vertices: Vec<Point> = Vec::with_capacity(4 * z as usize);
    vertices.extend(quadrant.iter().cloned());
    let mut prev = quadrant;
    for _ in 1..4 {
        let rotated: Vec<Point> = prev.iter().map(Point::rot90).collect();
        vertices.extend(rotated.iter().cloned());
        prev = rotated;
    }

    let poly = AnnulusPolygon { spec, vertices, z };
    debug_assert!(poly.check_invariants().is_ok());
    poly
}

/// `inner_disk(s, d)` stands in for the `s`-disk from below: the polygon
/// for the annulus `[s - d, s]`.
pub fn inner_disk(s: &Rational, delta: &Rational) -> Result<AnnulusPolygon> {
    let spec = AnnulusSpec::new(s - delta, s.clone())?;
    Ok(annulus_polygon(spec))
}

/// `outer_disk(s, d)` stands in for the `s`-disk from above: the polygon
/// for the annulus `[s, s + d]`.
pub fn outer_disk(s: &Rational, delta: &Rational) -> Result<AnnulusPolygon> {
    let spec = AnnulusSpec::new(s.clone(), s + delta)?;
    Ok(annulus_polygon(spec))
}

impl AnnulusPolygon {
    pub fn spec(&self) -> &AnnulusSpec {
        &self.spec
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn per_quadrant(&self) -> u64 {
        self.z
    }

    /// The polygon as a counterclockwise ring.
    pub fn ring(&self) -> Ring {
        Ring::new_unchecked(self.vertices.clone())
    }

    /// Exact verification of all construction invariants.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.vertices.len();
        if n != 4 * self.z as usize {
            return Err(Error::Defect("annulus polygon vertex count".into()));
        }
        let b_sq = &self.spec.b * &self.spec.b;
        let a_sq = &self.spec.a * &self.spec.a;
        for v in &self.vertices {
            if v.norm_sq() != b_sq {
                return Err(Error::Defect("annulus vertex off the outer circle".into()));
            }
        }
        let origin = Point::new(Rational::zero(), Rational::zero());
        for i in 0..n {
            let p = &self.vertices[i];
            let q = &self.vertices[(i + 1) % n];
            if crate::geom::sq_dist_point_segment(&origin, p, q) < a_sq {
                return Err(Error::Defect("annulus chord dips into the inner disk".into()));
            }
        }
        Ok(())
    }
}
