use crate::numeric::{rat_int, Rational};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A point (or free vector) with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Point::new(rat_int(x), rat_int(y))
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn neg(&self) -> Point {
        Point::new(-self.x.clone(), -self.y.clone())
    }

    pub fn scale(&self, k: &Rational) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn sq_dist(&self, other: &Point) -> Rational {
        self.sub(other).norm_sq()
    }

    /// Rotation by a quarter turn counterclockwise.
    pub fn rot90(&self) -> Point {
        Point::new(-self.y.clone(), self.x.clone())
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        Point::new(
            (&self.x + &other.x) / rat_int(2),
            (&self.y + &other.y) / rat_int(2),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Collinear,
    Cw,
}

/// Sign of the cross product `(b - a) x (c - a)`; `Ccw` means `c` lies to the
/// left of the directed line through `a` and `b`.
///
/// Evaluated over integers with denominators cleared, which skips the gcd
/// normalization rational arithmetic would run after every step; this
/// predicate dominates the overlay runtime.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Orientation {
    // (n1/d1)(n2/d2) - (n3/d3)(n4/d4) with all d > 0 has the sign of
    // n1*n2*d3*d4 - n3*n4*d1*d2.
    let (n1, d1) = diff_parts(&b.x, &a.x);
    let (n2, d2) = diff_parts(&c.y, &a.y);
    let (n3, d3) = diff_parts(&b.y, &a.y);
    let (n4, d4) = diff_parts(&c.x, &a.x);
    let lhs = n1 * n2 * d3 * d4;
    let rhs = n3 * n4 * d1 * d2;
    match lhs.cmp(&rhs) {
        Ordering::Greater => Orientation::Ccw,
        Ordering::Equal => Orientation::Collinear,
        Ordering::Less => Orientation::Cw,
    }
}

/// Numerator and (positive) denominator of `p - q`, unreduced.
fn diff_parts(p: &Rational, q: &Rational) -> (num_bigint::BigInt, num_bigint::BigInt) {
    (
        p.numer() * q.denom() - q.numer() * p.denom(),
        p.denom() * q.denom(),
    )
}

/// Sign of `u x v` with denominators cleared.
pub(crate) fn cross_sign(u: &Point, v: &Point) -> Ordering {
    let lhs = u.x.numer() * v.y.numer() * u.y.denom() * v.x.denom();
    let rhs = u.y.numer() * v.x.numer() * u.x.denom() * v.y.denom();
    lhs.cmp(&rhs)
}

/// Exact squared distance from `p` to the closed segment `ab`.
pub fn sq_dist_point_segment(p: &Point, a: &Point, b: &Point) -> Rational {
    let ab = b.sub(a);
    let ap = p.sub(a);
    let len_sq = ab.norm_sq();
    if len_sq.is_zero() {
        return ap.norm_sq();
    }
    let t = ap.dot(&ab);
    if !t.is_positive() {
        return ap.norm_sq();
    }
    if t >= len_sq {
        return p.sq_dist(b);
    }
    // |ap|^2 - t^2 / |ab|^2, exactly.
    &ap.norm_sq() - &(&t * &t / len_sq)
}

/// Total order of nonzero direction vectors counterclockwise starting just
/// above the positive x-axis. Opposite vectors compare as distinct; equal
/// directions (parallel, same sense) compare equal.
pub fn cmp_direction(u: &Point, v: &Point) -> Ordering {
    debug_assert!(!u.is_zero() && !v.is_zero());
    let half = |p: &Point| -> u8 {
        // half 0: y > 0, or y == 0 and x > 0; half 1: the rest.
        if p.y.is_positive() || (p.y.is_zero() && p.x.is_positive()) {
            0
        } else {
            1
        }
    };
    match half(u).cmp(&half(v)) {
        Ordering::Equal => {
            // u before v counterclockwise when v is to the left of u.
            match cross_sign(u, v) {
                Ordering::Greater => Ordering::Less,
                Ordering::Less => Ordering::Greater,
                Ordering::Equal => Ordering::Equal,
            }
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn orientation_basics() {
        let o = Point::from_i64(0, 0);
        assert_eq!(
            orient(&o, &Point::from_i64(1, 0), &Point::from_i64(0, 1)),
            Orientation::Ccw
        );
        assert_eq!(
            orient(&o, &Point::from_i64(1, 1), &Point::from_i64(2, 2)),
            Orientation::Collinear
        );
        assert_eq!(
            orient(&o, &Point::from_i64(0, 1), &Point::from_i64(1, 0)),
            Orientation::Cw
        );
    }

    #[test]
    fn orient_antisymmetric_under_swaps() {
        let a = Point::new(rat(1, 3), rat(2, 7));
        let b = Point::from_i64(4, -1);
        let c = Point::new(rat(-5, 2), rat(9, 4));
        let flip = |o: Orientation| match o {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        };
        assert_eq!(orient(&a, &b, &c), flip(orient(&b, &a, &c)));
        assert_eq!(orient(&a, &b, &c), flip(orient(&a, &c, &b)));
        assert_eq!(orient(&a, &b, &c), flip(orient(&c, &b, &a)));
    }

    #[test]
    fn segment_distance_cases() {
        let a = Point::from_i64(0, 0);
        let b = Point::from_i64(10, 0);
        assert_eq!(
            sq_dist_point_segment(&Point::from_i64(5, 3), &a, &b),
            rat(9, 1)
        );
        assert_eq!(
            sq_dist_point_segment(&Point::from_i64(-3, 4), &a, &b),
            rat(25, 1)
        );
        assert_eq!(
            sq_dist_point_segment(&Point::from_i64(13, -4), &a, &b),
            rat(25, 1)
        );
        assert_eq!(
            sq_dist_point_segment(&Point::from_i64(7, 0), &a, &b),
            rat(0, 1)
        );
    }

    #[test]
    fn direction_order_is_ccw_from_positive_x() {
        let dirs = [
            Point::from_i64(1, 0),
            Point::from_i64(1, 1),
            Point::from_i64(0, 1),
            Point::from_i64(-1, 1),
            Point::from_i64(-1, 0),
            Point::from_i64(-1, -1),
            Point::from_i64(0, -1),
            Point::from_i64(1, -1),
        ];
        for w in dirs.windows(2) {
            assert_eq!(cmp_direction(&w[0], &w[1]), Ordering::Less);
        }
        assert_eq!(
            cmp_direction(&Point::from_i64(2, 2), &Point::from_i64(5, 5)),
            Ordering::Equal
        );
    }
}
