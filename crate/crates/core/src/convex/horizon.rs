//! The farthest reachable boundary point: from an anchor on the container
//! boundary, chords may only advance counterclockwise as long as they keep
//! meeting every reach disk whose spot they pass. Each disk admits an
//! angular interval of chord directions; the horizon is the exit point of
//! the最 counterclockwise direction in the running intersection.

use super::eyelet::Eyelet;
use super::{cmp_quadratics, BoundaryPoint, ConvexPolygon};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::numeric::{QuadraticNumber, RadicalSum, Rational};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// A direction from the anchor with exact degree-2 components over one
/// shared radicand.
#[derive(Debug, Clone)]
pub(super) struct QDir {
    pub x: QuadraticNumber,
    pub y: QuadraticNumber,
}

impl QDir {
    fn from_rational(v: &Point) -> Self {
        QDir {
            x: QuadraticNumber::from_rational(v.x.clone()),
            y: QuadraticNumber::from_rational(v.y.clone()),
        }
    }
}

/// Exact sign of the cross product of two directions, radicands mixed.
pub(super) fn qdir_cross_sign(a: &QDir, b: &QDir) -> Ordering {
    let wa = if a.x.is_rational() {
        a.y.radicand().clone()
    } else {
        a.x.radicand().clone()
    };
    let wb = if b.x.is_rational() {
        b.y.radicand().clone()
    } else {
        b.x.radicand().clone()
    };
    let bases = [wa, wb];
    let term = |p: &QuadraticNumber, q: &QuadraticNumber| -> RadicalSum {
        RadicalSum::from_quadratic(&bases, 0, p).mul(&RadicalSum::from_quadratic(&bases, 1, q))
    };
    term(&a.x, &b.y).sub(&term(&a.y, &b.x)).sign()
}

fn qdir_dot_sign(a: &QDir, b: &QDir) -> Ordering {
    let wa = if a.x.is_rational() {
        a.y.radicand().clone()
    } else {
        a.x.radicand().clone()
    };
    let wb = if b.x.is_rational() {
        b.y.radicand().clone()
    } else {
        b.x.radicand().clone()
    };
    let bases = [wa, wb];
    let term = |p: &QuadraticNumber, q: &QuadraticNumber| -> RadicalSum {
        RadicalSum::from_quadratic(&bases, 0, p).mul(&RadicalSum::from_quadratic(&bases, 1, q))
    };
    term(&a.x, &b.x).add(&term(&a.y, &b.y)).sign()
}

/// Total order on chord directions from an anchor, counterclockwise
/// starting at the forward direction along the anchor's edge. Valid chord
/// directions stay between forward and the backward limit (the reversed
/// previous edge when the anchor is a vertex).
pub(super) struct Fan {
    forward: QDir,
    back_limit: QDir,
}

impl Fan {
    pub fn new(forward_edge_dir: &Point, back_limit_dir: &Point) -> Self {
        Fan {
            forward: QDir::from_rational(forward_edge_dir),
            back_limit: QDir::from_rational(back_limit_dir),
        }
    }

    fn rank(&self, d: &QDir) -> u8 {
        match qdir_cross_sign(&self.forward, d) {
            Ordering::Greater => 1,
            Ordering::Less => 3, // outside the half-turn; callers guard
            Ordering::Equal => {
                if qdir_dot_sign(&self.forward, d) == Ordering::Greater {
                    0
                } else {
                    2
                }
            }
        }
    }

    /// Whether a direction points into the polygon from the anchor.
    pub fn admits(&self, d: &QDir) -> bool {
        if self.rank(d) == 3 {
            return false;
        }
        // Not past the backward limit: cross(d, back_limit) >= 0 keeps d
        // clockwise of it.
        qdir_cross_sign(d, &self.back_limit) != Ordering::Less
    }

    pub fn cmp(&self, a: &QDir, b: &QDir) -> Ordering {
        let (ra, rb) = (self.rank(a), self.rank(b));
        if ra != rb {
            return ra.cmp(&rb);
        }
        if ra != 1 {
            return Ordering::Equal; // parallel within the fan
        }
        match qdir_cross_sign(a, b) {
            Ordering::Greater => Ordering::Less,
            Ordering::Less => Ordering::Greater,
            Ordering::Equal => Ordering::Equal,
        }
    }
}

/// Where the ray from `anchor` in direction `d` leaves the container.
pub(super) fn ray_exit(
    pi: &ConvexPolygon,
    anchor_edge: usize,
    anchor: &Point,
    fan: &Fan,
    d: &QDir,
) -> Result<BoundaryPoint> {
    let m = pi.len();
    // Vertices counterclockwise from the anchor have monotonically later
    // directions; the exit edge is bracketed by the first vertex whose
    // direction is not before `d`.
    let mut prev_vertex = (anchor_edge + 1) % m;
    let mut exit_edge = None;
    for step in 1..=m {
        let k = (anchor_edge + step) % m;
        let vk = &pi.vertices()[k];
        if vk == anchor {
            // Anchor sits exactly on a vertex; the final edge before it
            // catches everything later than the last proper direction.
            exit_edge = Some((k + m - 1) % m);
            break;
        }
        let dir_k = QDir::from_rational(&vk.sub(anchor));
        if fan.cmp(&dir_k, d) != Ordering::Less {
            exit_edge = Some(if step == 1 {
                anchor_edge
            } else {
                (k + m - 1) % m
            });
            break;
        }
        prev_vertex = k;
    }
    let edge = exit_edge.unwrap_or((prev_vertex + m - 1) % m);
    let (a, b) = pi.edge(edge);
    // Solve anchor + s d = a + tau (b - a) for tau.
    let e = b.sub(a);
    let ua = anchor.sub(a);
    let denom = d
        .x
        .scale(&e.y)
        .checked_sub(&d.y.scale(&e.x))
        .map_err(|_| Error::Defect("mixed radicands in exit computation".into()))?;
    let numer = d
        .x
        .scale(&ua.y)
        .checked_sub(&d.y.scale(&ua.x))
        .map_err(|_| Error::Defect("mixed radicands in exit computation".into()))?;
    let tau = numer
        .checked_div(&denom)
        .map_err(|_| Error::Defect("ray parallel to its exit edge".into()))?;
    let zero = QuadraticNumber::from_rational(Rational::zero());
    let one = QuadraticNumber::from_rational(Rational::from_integer(1.into()));
    let tau = if tau.cmp_same_radicand(&zero).unwrap_or(Ordering::Greater) != Ordering::Greater {
        zero
    } else if tau.cmp_same_radicand(&one).unwrap_or(Ordering::Less) != Ordering::Less {
        one
    } else {
        tau
    };
    if tau.as_rational() == Some(&Rational::from_integer(1.into())) {
        Ok(BoundaryPoint::vertex((edge + 1) % m))
    } else {
        Ok(BoundaryPoint { edge, t: tau })
    }
}

/// Whether the chord from the rational `anchor` to the (exact) exit point
/// of direction `d` comes within the disk `(center, rho_sq)`.
fn chord_hits_disk(
    pi: &ConvexPolygon,
    anchor_edge: usize,
    anchor: &Point,
    fan: &Fan,
    d: &QDir,
    center: &Point,
    rho_sq: &Rational,
) -> Result<bool> {
    let exit = ray_exit(pi, anchor_edge, anchor, fan, d)?;
    let (ex, ey) = super::boundary_coords(pi, &exit);
    // Squared distance from the center to segment(anchor, exit), all in
    // the exit point's quadratic field.
    let abx = ex.add_rational(&-anchor.x.clone());
    let aby = ey.add_rational(&-anchor.y.clone());
    let ap = center.sub(anchor);
    let dot = abx.scale(&ap.x).checked_add(&aby.scale(&ap.y)).unwrap();
    let len_sq = abx
        .checked_mul(&abx)
        .unwrap()
        .checked_add(&aby.checked_mul(&aby).unwrap())
        .unwrap();
    let zero = QuadraticNumber::from_rational(Rational::zero());
    if dot.cmp_same_radicand(&zero).unwrap() != Ordering::Greater {
        return Ok(&ap.norm_sq() <= rho_sq);
    }
    if dot.cmp_same_radicand(&len_sq).unwrap() != Ordering::Less {
        let dx = ex.add_rational(&-center.x.clone());
        let dy = ey.add_rational(&-center.y.clone());
        let dist = dx
            .checked_mul(&dx)
            .unwrap()
            .checked_add(&dy.checked_mul(&dy).unwrap())
            .unwrap();
        return Ok(
            dist.cmp_same_radicand(&QuadraticNumber::from_rational(rho_sq.clone()))
                .unwrap()
                != Ordering::Greater,
        );
    }
    // |ap|^2 len^2 - dot^2 <= rho^2 len^2, with len^2 > 0.
    let lhs = len_sq
        .scale(&ap.norm_sq())
        .checked_sub(&dot.checked_mul(&dot).unwrap())
        .unwrap();
    let rhs = len_sq.scale(rho_sq);
    Ok(lhs.cmp_same_radicand(&rhs).unwrap() != Ordering::Greater)
}

/// Candidate extreme chord directions for one disk: the two tangents from
/// the anchor (when their touch points stay in the container) and the
/// directions toward every crossing of the disk boundary with the
/// container boundary.
fn disk_direction_candidates(
    pi: &ConvexPolygon,
    anchor: &Point,
    center: &Point,
    rho_sq: &Rational,
) -> Vec<QDir> {
    let mut out = Vec::new();
    let cu = center.sub(anchor);
    let l_sq = cu.norm_sq();
    let w = &l_sq - rho_sq;
    if w.is_positive() {
        // Touch points z = center - (rho^2/L^2) cu +- (sqrt(rho^2 w)/L^2) rot90(cu).
        let radicand = rho_sq * &w;
        let base_x = &center.x - &cu.x * rho_sq / &l_sq;
        let base_y = &center.y - &cu.y * rho_sq / &l_sq;
        let r90 = cu.rot90();
        for sgn in [1i64, -1] {
            let s = Rational::from_integer(sgn.into()) / &l_sq;
            let zx = QuadraticNumber::new(base_x.clone(), &r90.x * &s, radicand.clone()).unwrap();
            let zy = QuadraticNumber::new(base_y.clone(), &r90.y * &s, radicand.clone()).unwrap();
            // Keep the tangent only when the touch point lies in the
            // container (otherwise a boundary crossing binds instead).
            let inside = (0..pi.len()).all(|j| {
                let (a, b) = pi.edge(j);
                let n = b.sub(a).rot90().neg();
                let c = n.dot(a);
                let expr = zx
                    .scale(&n.x)
                    .checked_add(&zy.scale(&n.y))
                    .unwrap()
                    .add_rational(&-c);
                expr.sign() != Ordering::Greater
            });
            if inside {
                out.push(QDir {
                    x: zx.add_rational(&-anchor.x.clone()),
                    y: zy.add_rational(&-anchor.y.clone()),
                });
            }
        }
    }
    for j in 0..pi.len() {
        if let Some((lo, hi)) = super::eyelet::edge_disk_interval(pi, j, center, rho_sq) {
            for t in [lo, hi] {
                let bp = BoundaryPoint { edge: j, t };
                let (x, y) = super::boundary_coords(pi, &bp);
                let dx = x.add_rational(&-anchor.x.clone());
                let dy = y.add_rational(&-anchor.y.clone());
                if dx.sign() == Ordering::Equal && dy.sign() == Ordering::Equal {
                    continue;
                }
                out.push(QDir { x: dx, y: dy });
            }
        }
    }
    out
}

/// The farthest counterclockwise boundary point `h` such that the chord
/// from `u` to `h` meets every disk whose spot lies strictly between `u`
/// and `h`.
///
/// The anchor must be rational: the walk that consumes horizons re-anchors
/// on rational boundary points, which keeps every computation inside a
/// single quadratic extension. When no spot constrains the chord at all
/// the full wrap is allowed and `u` itself is returned.
pub fn horizon(
    pi: &ConvexPolygon,
    eyelets: &[Eyelet],
    u: &BoundaryPoint,
) -> Result<BoundaryPoint> {
    let t = u
        .t
        .as_rational()
        .ok_or_else(|| Error::InvalidParams("horizon anchor must be rational".into()))?
        .clone();
    let anchor = pi.point_at(u.edge, &t);
    let (ea, eb) = pi.edge(u.edge);
    let back_limit = if t.is_zero() {
        let prev = (u.edge + pi.len() - 1) % pi.len();
        let (pa, pb) = pi.edge(prev);
        pa.sub(pb)
    } else {
        ea.sub(eb)
    };
    let fan = Fan::new(&eb.sub(ea), &back_limit);

    let mut order: Vec<&Eyelet> = eyelets
        .iter()
        .filter(|e| e.spot.cmp(u) != Ordering::Equal)
        .collect();
    order.sort_by(|a, b| a.spot.cmp_from(&b.spot, u));
    if order.is_empty() {
        return Ok(u.clone());
    }

    let mut running: Option<(QDir, QDir, BoundaryPoint)> = None; // lo, hi, exit(hi)
    for eyelet in order {
        if let Some((_, _, reach)) = &running {
            // Spots beyond the current reach never constrain the chord.
            if eyelet.spot.cmp_from(reach, u) == Ordering::Greater {
                break;
            }
        }
        if &anchor.sq_dist(&eyelet.center) <= &eyelet.radius_sq {
            continue; // the anchor already touches this disk
        }
        let candidates =
            disk_direction_candidates(pi, &anchor, &eyelet.center, &eyelet.radius_sq);
        let mut lo_k: Option<QDir> = None;
        let mut hi_k: Option<QDir> = None;
        for d in candidates {
            if !fan.admits(&d) {
                continue; // points out of the polygon from this anchor
            }
            if !chord_hits_disk(
                pi,
                u.edge,
                &anchor,
                &fan,
                &d,
                &eyelet.center,
                &eyelet.radius_sq,
            )? {
                continue;
            }
            lo_k = Some(match lo_k {
                None => d.clone(),
                Some(cur) => {
                    if fan.cmp(&d, &cur) == Ordering::Less {
                        d.clone()
                    } else {
                        cur
                    }
                }
            });
            hi_k = Some(match hi_k {
                None => d,
                Some(cur) => {
                    if fan.cmp(&d, &cur) == Ordering::Greater {
                        d
                    } else {
                        cur
                    }
                }
            });
        }
        let (lo_k, hi_k) = match (lo_k, hi_k) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::Defect(
                    "no chord from the anchor reaches a constraining disk".into(),
                ))
            }
        };
        running = Some(match running {
            None => {
                let exit = ray_exit(pi, u.edge, &anchor, &fan, &hi_k)?;
                (lo_k, hi_k, exit)
            }
            Some((lo, hi, reach)) => {
                let new_lo = if fan.cmp(&lo_k, &lo) == Ordering::Greater {
                    lo_k
                } else {
                    lo
                };
                let (new_hi, new_reach) = if fan.cmp(&hi_k, &hi) == Ordering::Less {
                    let exit = ray_exit(pi, u.edge, &anchor, &fan, &hi_k)?;
                    (hi_k, exit)
                } else {
                    (hi, reach)
                };
                if fan.cmp(&new_lo, &new_hi) == Ordering::Greater {
                    // Intersection just emptied: the previous reach stands.
                    return Ok(new_reach);
                }
                (new_lo, new_hi, new_reach)
            }
        });
    }
    match running {
        Some((_, _, reach)) => Ok(reach),
        None => Ok(u.clone()),
    }
}
