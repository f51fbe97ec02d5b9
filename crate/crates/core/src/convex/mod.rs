//! Linear-time specialization for convex input.
//!
//! For a convex polygon the container of feasible summands is itself
//! convex: every edge line moves inward by `r - eps`. The decision then
//! reduces to checking that each vertex's `(r+eps)`-disk reaches the
//! shrunk polygon, with no working precision at all. On YES, a witness
//! with nearly minimal vertex count comes from hopping along the shrunk
//! polygon's boundary: each hop goes to the farthest point whose chord
//! still meets every required disk on the way.

mod decide;
mod eyelet;
mod greedy;
mod horizon;
mod inset;
mod shifted;

pub use decide::{convex_decide, ConvexDecision};
pub use eyelet::{compute_eyelets, Eyelet};
pub use greedy::greedy_witness;
pub use horizon::horizon;
pub use inset::convex_inset;

use crate::error::{Error, Result};
use crate::geom::{orient, Orientation, Point, Region, Ring};
use crate::numeric::{QuadraticNumber, RadicalSum, Rational};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// A strictly convex counterclockwise polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::NotConvex(format!("{n} vertices")));
        }
        for i in 0..n {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % n];
            let c = &vertices[(i + 2) % n];
            if orient(a, b, c) != Orientation::Ccw {
                return Err(Error::NotConvex(format!(
                    "turn at vertex {} is not strictly counterclockwise",
                    (i + 1) % n
                )));
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    /// Accepts a region that is one strictly convex hole-free face.
    pub fn from_region(region: &Region) -> Result<Self> {
        if region.faces().len() != 1 || !region.faces()[0].holes.is_empty() {
            return Err(Error::NotConvex("not a single hole-free face".into()));
        }
        ConvexPolygon::new(region.faces()[0].outer.simplified().vertices().to_vec())
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge(&self, i: usize) -> (&Point, &Point) {
        (
            &self.vertices[i],
            &self.vertices[(i + 1) % self.vertices.len()],
        )
    }

    pub fn to_region(&self) -> Region {
        Region::from_faces_unchecked(vec![crate::geom::Face {
            outer: Ring::new_unchecked(self.vertices.clone()),
            holes: Vec::new(),
        }])
    }

    /// Exact squared distance from a point to the polygon (zero inside).
    pub fn sq_dist_point(&self, p: &Point) -> Rational {
        if self.contains(p) {
            return Rational::zero();
        }
        let n = self.len();
        let mut best: Option<Rational> = None;
        for i in 0..n {
            let (a, b) = self.edge(i);
            let d = crate::geom::sq_dist_point_segment(p, a, b);
            best = Some(match best {
                None => d,
                Some(cur) => cur.min(d),
            });
        }
        best.unwrap()
    }

    pub fn contains(&self, p: &Point) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            let (a, b) = self.edge(i);
            orient(a, b, p) != Orientation::Cw
        })
    }

    /// The exact point at rational parameter `t` along edge `i`.
    pub fn point_at(&self, edge: usize, t: &Rational) -> Point {
        let (a, b) = self.edge(edge);
        a.add(&b.sub(a).scale(t))
    }
}

/// An exact location on the boundary of a convex polygon: edge index plus
/// a degree-2 algebraic parameter in `[0, 1]` along that edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryPoint {
    pub edge: usize,
    pub t: QuadraticNumber,
}

impl BoundaryPoint {
    pub fn rational(edge: usize, t: Rational) -> Self {
        BoundaryPoint {
            edge,
            t: QuadraticNumber::from_rational(t),
        }
    }

    pub fn vertex(edge: usize) -> Self {
        Self::rational(edge, Rational::zero())
    }

    pub fn is_rational(&self) -> bool {
        self.t.is_rational()
    }

    /// Exact comparison along the boundary; parameters over different
    /// radicands go through the multi-radicand sign procedure.
    pub fn cmp(&self, other: &BoundaryPoint) -> Ordering {
        if self.edge != other.edge {
            return self.edge.cmp(&other.edge);
        }
        cmp_quadratics(&self.t, &other.t)
    }

    /// Position in counterclockwise order starting at `origin`; the origin
    /// itself is the minimum.
    pub fn cmp_from(&self, other: &BoundaryPoint, origin: &BoundaryPoint) -> Ordering {
        let a = self.cmp(origin) == Ordering::Less;
        let b = other.cmp(origin) == Ordering::Less;
        match (a, b) {
            (false, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
            _ => self.cmp(other),
        }
    }
}

/// Exact comparison of two quadratic numbers, tolerating different
/// radicands.
pub(crate) fn cmp_quadratics(x: &QuadraticNumber, y: &QuadraticNumber) -> Ordering {
    if let Ok(ord) = x.cmp_same_radicand(y) {
        return ord;
    }
    let bases = [x.radicand().clone(), y.radicand().clone()];
    let xs = RadicalSum::from_quadratic(&bases, 0, x);
    let ys = RadicalSum::from_quadratic(&bases, 1, y);
    xs.sub(&ys).sign()
}

/// The exact coordinates of a boundary point, in the same quadratic field
/// as the parameter.
pub(crate) fn boundary_coords(
    pi: &ConvexPolygon,
    bp: &BoundaryPoint,
) -> (QuadraticNumber, QuadraticNumber) {
    let (a, b) = pi.edge(bp.edge);
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    let x = bp.t.scale(&dx).add_rational(&a.x);
    let y = bp.t.scale(&dy).add_rational(&a.y);
    (x, y)
}

/// Rational parameter at most `t` and within `2^-bits` of it, floored at
/// zero.
pub(crate) fn rational_below(t: &QuadraticNumber, bits: u32) -> Rational {
    if let Some(r) = t.as_rational() {
        return r.clone();
    }
    let (lo, _) = t.bounds(bits);
    if lo.is_negative() {
        Rational::zero()
    } else {
        lo
    }
}
