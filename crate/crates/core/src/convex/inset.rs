//! The inward offset of a convex polygon by a straight-line distance.

use super::shifted::ShiftedSystem;
use super::ConvexPolygon;
use crate::error::{Error, Result};
use crate::geom::{intersect_halfplanes, HalfPlane, Point};
use crate::numeric::{rational_sqrt_exact, sqrt_lower, sqrt_upper, Rational};
use num_traits::Signed;

/// How the shift distances along each edge normal turn into rationals.
#[derive(Clone, Copy)]
pub(super) enum ShiftRounding {
    /// Requires every edge normal length to be rational; the result is the
    /// exact inset.
    Exact,
    /// Rounds each shift up at the given precision: the result is a subset
    /// of the true inset.
    Inner(u32),
    /// Rounds each shift down: the result is a superset.
    Outer(u32),
}

/// Shifted halfplanes with the chosen rounding; `None` when exact shifting
/// is impossible for some edge.
pub(super) fn shifted_halfplanes(
    q: &ConvexPolygon,
    d: &Rational,
    rounding: ShiftRounding,
) -> Option<Vec<HalfPlane>> {
    let mut out = Vec::with_capacity(q.len());
    for i in 0..q.len() {
        let (a, b) = q.edge(i);
        let n = b.sub(a).rot90().neg();
        let c = n.dot(a);
        let s = n.norm_sq();
        let root = match rounding {
            ShiftRounding::Exact => rational_sqrt_exact(&s)?,
            ShiftRounding::Inner(bits) => sqrt_upper(&s, bits),
            ShiftRounding::Outer(bits) => sqrt_lower(&s, bits),
        };
        out.push(HalfPlane::new(n, c - d * root));
    }
    Some(out)
}

/// Whether every edge normal of `q` has an exactly representable length,
/// making all inset computations rational.
pub(super) fn all_normals_rational(q: &ConvexPolygon) -> bool {
    (0..q.len()).all(|i| {
        let (a, b) = q.edge(i);
        rational_sqrt_exact(&b.sub(a).norm_sq()).is_some()
    })
}

pub(super) fn polygon_from_halfplanes(hs: &[HalfPlane]) -> Option<ConvexPolygon> {
    let pts = intersect_halfplanes(hs)?;
    ConvexPolygon::new(pts).ok()
}

/// The set of points at straight-line depth at least `d` inside `q`:
/// the intersection of the edge-supporting halfplanes shifted inward by
/// `d`, built through the envelope scan of the shifted lines.
///
/// With `d = 0` this is the polygon itself. Emptiness is decided exactly
/// even when the shifted lines are irrational; a degenerate intersection
/// (a point or segment) counts as empty, matching regularized semantics.
/// When the polygon's edge normals all have rational length (axis-aligned
/// and Pythagorean-direction edges) the returned vertices are the exact
/// inset; otherwise they form a certified inner approximation refined
/// until its Hausdorff gap to the true inset is negligible against `d`
/// (below `2^-64 d`).
pub fn convex_inset(q: &ConvexPolygon, d: &Rational) -> Result<Option<ConvexPolygon>> {
    if d.is_negative() {
        return Err(Error::InvalidParams(format!(
            "inset distance must be non-negative, got {d}"
        )));
    }
    if d.is_zero() {
        return Ok(Some(q.clone()));
    }
    if let Some(hs) = shifted_halfplanes(q, d, ShiftRounding::Exact) {
        return Ok(polygon_from_halfplanes(&hs));
    }
    // Interior emptiness first, decided exactly: the closed set shrunk a
    // hair must stay feasible for the open interior to be non-empty.
    let sys = ShiftedSystem::from_polygon(q, d);
    if !sys.closed_feasible() {
        return Ok(None);
    }
    for bits in [64u32, 128, 256, 512] {
        let inner = shifted_halfplanes(q, d, ShiftRounding::Inner(bits)).unwrap();
        if let Some(poly) = polygon_from_halfplanes(&inner) {
            return Ok(Some(poly));
        }
        let outer = shifted_halfplanes(q, d, ShiftRounding::Outer(bits)).unwrap();
        if polygon_from_halfplanes(&outer).is_none() {
            // Even the superset has empty interior.
            return Ok(None);
        }
    }
    // The interior, if any, is thinner than the finest rounding; treat it
    // as degenerate.
    Ok(None)
}

/// A rational polygon contained in the true inset, together with the
/// rounding precision that produced it. Callers that need slack against
/// the true inset pass larger `bits`.
pub(super) fn inner_inset(
    q: &ConvexPolygon,
    d: &Rational,
    bits: u32,
) -> Option<ConvexPolygon> {
    if let Some(hs) = shifted_halfplanes(q, d, ShiftRounding::Exact) {
        return polygon_from_halfplanes(&hs);
    }
    let hs = shifted_halfplanes(q, d, ShiftRounding::Inner(bits)).unwrap();
    polygon_from_halfplanes(&hs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};

    fn square10() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::from_i64(0, 0),
            Point::from_i64(10, 0),
            Point::from_i64(10, 10),
            Point::from_i64(0, 10),
        ])
        .unwrap()
    }

    #[test]
    fn axis_aligned_is_exact() {
        let inset = convex_inset(&square10(), &rat(4, 5)).unwrap().unwrap();
        assert_eq!(inset.len(), 4);
        assert!(inset.vertices().contains(&Point::new(rat(4, 5), rat(4, 5))));
        assert!(inset
            .vertices()
            .contains(&Point::new(rat(46, 5), rat(46, 5))));
    }

    #[test]
    fn zero_distance_is_identity() {
        let q = square10();
        assert_eq!(convex_inset(&q, &rat_int(0)).unwrap().unwrap(), q);
    }

    #[test]
    fn near_regular_hexagon_empties_at_its_depth() {
        // A rational hexagon close to regular, circumradius 2. The two
        // horizontal edges pinch first: the interior vanishes at depth
        // exactly 17/10, where the intersection degenerates to a segment.
        let hex = ConvexPolygon::new(vec![
            Point::from_i64(2, 0),
            Point::new(rat_int(1), rat(17, 10)),
            Point::new(rat_int(-1), rat(17, 10)),
            Point::from_i64(-2, 0),
            Point::new(rat_int(-1), rat(-17, 10)),
            Point::new(rat_int(1), rat(-17, 10)),
        ])
        .unwrap();
        assert!(convex_inset(&hex, &rat(169, 100)).unwrap().is_some());
        assert!(convex_inset(&hex, &rat(171, 100)).unwrap().is_none());
        // Degenerate at the exact depth: a segment, regularized away.
        assert!(convex_inset(&hex, &rat(17, 10)).unwrap().is_none());
    }

    #[test]
    fn inset_distributes_over_depth_for_rational_normals() {
        // Chaining insets equals one combined inset when shifts stay
        // rational; all edge directions here are Pythagorean.
        let q = ConvexPolygon::new(vec![
            Point::from_i64(0, 0),
            Point::from_i64(20, 0),
            Point::from_i64(36, 12),
            Point::from_i64(36, 27),
            Point::from_i64(24, 43),
            Point::from_i64(0, 43),
        ])
        .unwrap();
        assert!(all_normals_rational(&q));
        let a = rat(3, 2);
        let b = rat(5, 4);
        let chained = convex_inset(&convex_inset(&q, &a).unwrap().unwrap(), &b)
            .unwrap()
            .unwrap();
        let direct = convex_inset(&q, &(a + b)).unwrap().unwrap();
        assert_eq!(chained, direct);
    }

    #[test]
    fn irrational_normals_give_inner_approximation() {
        let diamond = ConvexPolygon::new(vec![
            Point::from_i64(4, 0),
            Point::from_i64(8, 4),
            Point::from_i64(4, 8),
            Point::from_i64(0, 4),
        ])
        .unwrap();
        let d = rat_int(1);
        let inset = convex_inset(&diamond, &d).unwrap().unwrap();
        // Contained in the true inset: every vertex keeps straight-line
        // depth >= 1, i.e. L1 distance from the center within 4 - sqrt(2).
        for v in inset.vertices() {
            let l1 = (&v.x - rat_int(4)).abs() + (&v.y - rat_int(4)).abs();
            // 4 - sqrt(2) > 2.585
            assert!(l1 < rat(2586, 1000));
            assert!(l1 > rat(2585, 1000));
        }
    }
}
