//! Exact decision for convex input, with no working precision parameter.

use super::inset::{all_normals_rational, inner_inset, polygon_from_halfplanes, shifted_halfplanes, ShiftRounding};
use super::shifted::ShiftedSystem;
use super::ConvexPolygon;
use crate::error::{Error, Result};
use crate::geom::sq_dist_point_segment;
use crate::numeric::Rational;
use num_traits::Signed;

/// Outcome of the convex decision: the verdict is always exact; `pi` is a
/// rational polygon contained in the true summand container (equal to it
/// when all edge normals have rational length), available whenever that
/// container has interior.
#[derive(Debug, Clone)]
pub struct ConvexDecision {
    pub yes: bool,
    pub pi: Option<ConvexPolygon>,
}

/// Decides whether the convex polygon is within `eps` of the `r`-offset of
/// some polygonal region: the container `pi` is the polygon shrunk by
/// `r - eps`, and the answer is YES exactly when every vertex's
/// `(r+eps)`-disk meets `pi`.
///
/// The common cases settle in rational arithmetic (exactly representable
/// shifts, or a YES/NO certified by inner/outer rational approximations of
/// the shifted lines); razor-edge instances fall back to exact sign
/// computations in the mixed-radicand field of the shift terms.
pub fn convex_decide(q: &ConvexPolygon, r: &Rational, eps: &Rational) -> Result<ConvexDecision> {
    if !r.is_positive() {
        return Err(Error::InvalidParams(format!(
            "radius must be positive, got {r}"
        )));
    }
    if eps.is_negative() {
        return Err(Error::InvalidParams(format!(
            "tolerance must be non-negative, got {eps}"
        )));
    }
    if eps.is_zero() {
        return Ok(ConvexDecision {
            yes: false,
            pi: None,
        });
    }
    if eps >= r {
        return Ok(ConvexDecision {
            yes: true,
            pi: Some(q.clone()),
        });
    }
    let d = r - eps;
    let reach = r + eps;
    let rho_sq = &reach * &reach;

    if all_normals_rational(q) {
        let hs = shifted_halfplanes(q, &d, ShiftRounding::Exact).expect("rational normals");
        return match polygon_from_halfplanes(&hs) {
            Some(pi) => {
                let yes = all_disks_reach(q, &pi, &rho_sq);
                Ok(ConvexDecision { yes, pi: Some(pi) })
            }
            None => {
                // Degenerate container (empty, a point or a segment): the
                // closed set still decides, through the exact system.
                let decision = decide_exact(q, &d, &rho_sq);
                Ok(ConvexDecision {
                    yes: decision,
                    pi: None,
                })
            }
        };
    }

    // Certified bracketing: an inner approximation that passes certifies
    // YES, an outer approximation that fails certifies NO.
    for bits in [64u32, 128, 256] {
        let inner = shifted_halfplanes(q, &d, ShiftRounding::Inner(bits)).unwrap();
        if let Some(pi_in) = polygon_from_halfplanes(&inner) {
            if all_disks_reach(q, &pi_in, &rho_sq) {
                return Ok(ConvexDecision {
                    yes: true,
                    pi: Some(pi_in),
                });
            }
        }
        let outer = shifted_halfplanes(q, &d, ShiftRounding::Outer(bits)).unwrap();
        match polygon_from_halfplanes(&outer) {
            Some(pi_out) => {
                if !all_disks_reach(q, &pi_out, &rho_sq) {
                    return Ok(ConvexDecision {
                        yes: false,
                        pi: inner_inset(q, &d, 128),
                    });
                }
            }
            None => break, // container may be degenerate; settle exactly
        }
    }

    let yes = decide_exact(q, &d, &rho_sq);
    Ok(ConvexDecision {
        yes,
        pi: inner_inset(q, &d, 256),
    })
}

/// Exact decision against the closed shifted system.
fn decide_exact(q: &ConvexPolygon, d: &Rational, rho_sq: &Rational) -> bool {
    let sys = ShiftedSystem::from_polygon(q, d);
    if !sys.closed_feasible() {
        return false;
    }
    q.vertices().iter().all(|v| sys.disk_reaches(v, rho_sq))
}

/// Whether every vertex's disk of squared radius `rho_sq` meets the
/// container polygon. Vertices advance counterclockwise, so the probe
/// edge resumes where the previous vertex succeeded and wraps through the
/// edge list at most a bounded number of times on YES instances.
fn all_disks_reach(q: &ConvexPolygon, pi: &ConvexPolygon, rho_sq: &Rational) -> bool {
    let m = pi.len();
    let mut j = 0usize;
    for v in q.vertices() {
        let mut hit = false;
        for _ in 0..m {
            let (a, b) = pi.edge(j);
            if &sq_dist_point_segment(v, a, b) <= rho_sq {
                hit = true;
                break;
            }
            j = (j + 1) % m;
        }
        if !hit {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
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
    fn square_thresholds() {
        // Critical tolerance for the square is (3 - 2 sqrt2) r.
        let r = rat_int(1);
        assert!(convex_decide(&square10(), &r, &rat(1, 5)).unwrap().yes);
        assert!(!convex_decide(&square10(), &r, &rat(1, 10)).unwrap().yes);
        // Rational bracketing of 3 - 2 sqrt2 = 0.17157287...
        assert!(!convex_decide(&square10(), &r, &rat(17157, 100000)).unwrap().yes);
        assert!(convex_decide(&square10(), &r, &rat(17158, 100000)).unwrap().yes);
    }

    #[test]
    fn square_container_is_exact() {
        let out = convex_decide(&square10(), &rat_int(1), &rat(1, 5)).unwrap();
        let pi = out.pi.unwrap();
        assert!(pi.vertices().contains(&Point::new(rat(4, 5), rat(4, 5))));
        assert!(pi.vertices().contains(&Point::new(rat(46, 5), rat(46, 5))));
    }

    #[test]
    fn degenerate_tolerances() {
        let q = square10();
        assert!(!convex_decide(&q, &rat_int(1), &rat_int(0)).unwrap().yes);
        let at_r = convex_decide(&q, &rat_int(1), &rat_int(1)).unwrap();
        assert!(at_r.yes);
        assert_eq!(at_r.pi.unwrap(), q);
    }

    #[test]
    fn diamond_thresholds() {
        // The diamond is a rotated square with sqrt(2)-length normals, so
        // its critical tolerance matches the square's (3 - 2 sqrt2) r; the
        // exact answer here must come through the irrational-shift path.
        let diamond = ConvexPolygon::new(vec![
            Point::from_i64(40, 0),
            Point::from_i64(80, 40),
            Point::from_i64(40, 80),
            Point::from_i64(0, 40),
        ])
        .unwrap();
        let r = rat_int(1);
        assert!(convex_decide(&diamond, &r, &rat(172, 1000)).unwrap().yes);
        assert!(!convex_decide(&diamond, &r, &rat(171, 1000)).unwrap().yes);
    }

    #[test]
    fn tiny_polygon_saturates() {
        // A polygon much smaller than r: the container empties as soon as
        // r - eps exceeds the inradius (about 0.618 here), so the decision
        // flips around eps = r - inradius = 9.38...
        let tri = ConvexPolygon::new(vec![
            Point::from_i64(0, 0),
            Point::from_i64(2, 0),
            Point::from_i64(1, 2),
        ])
        .unwrap();
        let out = convex_decide(&tri, &rat_int(10), &rat(97, 10)).unwrap();
        assert!(out.yes);
        let out = convex_decide(&tri, &rat_int(10), &rat_int(3)).unwrap();
        assert!(!out.yes);
    }
}
