//! Exact feasibility and disk-reach tests against the inward-shifted edge
//! lines.
//!
//! Each edge of the input polygon contributes the constraint
//! `n . x <= c - d * sqrt(s)` with rational `n`, `c`, `s = |n|^2` and shift
//! distance `d`. Shift terms are irrational whenever `s` is not a perfect
//! square, so the predicates below assemble the relevant expressions in
//! `Q(sqrt(s_1), sqrt(s_2), sqrt(s_3))` and take exact signs there. With
//! the plane being two-dimensional, Helly's theorem reduces emptiness of
//! the whole intersection (optionally together with one disk) to triples.

use super::ConvexPolygon;
use crate::geom::Point;
use crate::numeric::{RadicalSum, Rational};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// One inward-shifted supporting line: `n . x <= c - d * sqrt(s)`.
#[derive(Debug, Clone)]
pub(super) struct ShiftedLine {
    pub n: Point,
    pub c: Rational,
    pub s: Rational,
}

pub(super) struct ShiftedSystem {
    pub lines: Vec<ShiftedLine>,
    pub d: Rational,
}

impl ShiftedSystem {
    pub fn from_polygon(q: &ConvexPolygon, d: &Rational) -> Self {
        let lines = (0..q.len())
            .map(|i| {
                let (a, b) = q.edge(i);
                let n = b.sub(a).rot90().neg();
                let c = n.dot(a);
                let s = n.norm_sq();
                ShiftedLine { n, c, s }
            })
            .collect();
        ShiftedSystem {
            lines,
            d: d.clone(),
        }
    }

    /// Whether the closed intersection of all shifted halfplanes is
    /// non-empty (single points and segments count as non-empty).
    pub fn closed_feasible(&self) -> bool {
        let m = self.lines.len();
        for i in 0..m {
            for j in i + 1..m {
                if !self.pair_feasible(i, j) {
                    return false;
                }
                for k in j + 1..m {
                    if !self.triple_feasible(i, j, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether the closed disk `(center, radius_sq)` meets the closed
    /// intersection. Assumes the intersection itself is feasible; Helly
    /// then only asks for the disk together with every pair of halfplanes.
    pub fn disk_reaches(&self, center: &Point, radius_sq: &Rational) -> bool {
        let m = self.lines.len();
        for j in 0..m {
            if !self.disk_halfplane_feasible(center, radius_sq, j) {
                return false;
            }
        }
        for j in 0..m {
            for k in j + 1..m {
                if !self.disk_pair_feasible(center, radius_sq, j, k) {
                    return false;
                }
            }
        }
        true
    }

    /// Sign of `n_k . v_ij - (c_k - d sqrt(s_k))` where `v_ij` solves the
    /// two shifted line equations; non-positive means the vertex satisfies
    /// constraint `k`.
    fn vertex_in(&self, i: usize, j: usize, k: usize) -> Ordering {
        let (li, lj, lk) = (&self.lines[i], &self.lines[j], &self.lines[k]);
        let det = li.n.cross(&lj.n);
        debug_assert!(!det.is_zero());
        // v = ( M^{-1} ) rhs with rhs_t = c_t - d sqrt(s_t).
        // v_x = ( lj.n.y * rhs_i - li.n.y * rhs_j ) / det
        // v_y = ( -lj.n.x * rhs_i + li.n.x * rhs_j ) / det
        let bases = [li.s.clone(), lj.s.clone(), lk.s.clone()];
        let rhs = |mask: usize, c: &Rational, coeff: &Rational| -> RadicalSum {
            // coeff * (c - d sqrt(s)) over the basis
            RadicalSum::from_rational(&bases, coeff * c)
                .sub(&RadicalSum::term(&bases, mask, coeff * &self.d))
        };
        let vx_num = rhs(0b001, &li.c, &lj.n.y).sub(&rhs(0b010, &lj.c, &li.n.y));
        let vy_num = rhs(0b010, &lj.c, &li.n.x).sub(&rhs(0b001, &li.c, &lj.n.x));
        // n_k . v - c_k + d sqrt(s_k), scaled by det (sign-corrected).
        let expr = vx_num
            .scale(&lk.n.x)
            .add(&vy_num.scale(&lk.n.y))
            .sub(&RadicalSum::from_rational(&bases, &lk.c * &det))
            .add(&RadicalSum::term(&bases, 0b100, &self.d * &det));
        let sign = expr.sign();
        if det.is_positive() {
            sign
        } else {
            sign.reverse()
        }
    }

    fn pair_feasible(&self, i: usize, j: usize) -> bool {
        let (li, lj) = (&self.lines[i], &self.lines[j]);
        if !li.n.cross(&lj.n).is_zero() {
            return true;
        }
        if li.n.dot(&lj.n).is_positive() {
            return true; // same direction, one is redundant
        }
        // Anti-parallel: n_j = -t n_i with t > 0; the strip is non-empty
        // iff t c'_i + c'_j >= 0.
        let t = if !li.n.x.is_zero() {
            -(&lj.n.x / &li.n.x)
        } else {
            -(&lj.n.y / &li.n.y)
        };
        debug_assert!(t.is_positive());
        let bases = [li.s.clone(), lj.s.clone()];
        let expr = RadicalSum::from_rational(&bases, &t * &li.c + &lj.c)
            .sub(&RadicalSum::term(&bases, 0b01, &t * &self.d))
            .sub(&RadicalSum::term(&bases, 0b10, self.d.clone()));
        expr.sign() != Ordering::Less
    }

    fn triple_feasible(&self, i: usize, j: usize, k: usize) -> bool {
        let pairs = [(i, j, k), (i, k, j), (j, k, i)];
        let mut any_vertex = false;
        for &(a, b, c) in &pairs {
            if self.lines[a].n.cross(&self.lines[b].n).is_zero() {
                continue; // covered by the pair test plus the unbounded strip
            }
            any_vertex = true;
            if self.vertex_in(a, b, c) != Ordering::Greater {
                return true;
            }
        }
        if !any_vertex {
            // All three normals parallel: reduce to a one-dimensional
            // interval, which the pairwise tests already certify.
            return true;
        }
        false
    }

    /// `D(center, rho) meets halfplane j`: the center's signed excess over
    /// the shifted line stays within `rho * sqrt(s_j)`.
    fn disk_halfplane_feasible(&self, center: &Point, radius_sq: &Rational, j: usize) -> bool {
        let lj = &self.lines[j];
        let excess = lj.n.dot(center) - &lj.c; // + d sqrt(s_j) pending
        // Need excess + d sqrt(s_j) <= rho sqrt(s_j), i.e.
        // excess <= (rho - d) sqrt(s_j) with rho = sqrt(radius_sq).
        // Assemble over bases { s_j * radius_sq, s_j }:
        // excess + d sqrt(s_j) - sqrt(radius_sq * s_j) <= 0.
        let bases = [lj.s.clone(), &lj.s * radius_sq];
        let expr = RadicalSum::from_rational(&bases, excess)
            .add(&RadicalSum::term(&bases, 0b01, self.d.clone()))
            .sub(&RadicalSum::term(&bases, 0b10, Rational::from_integer(1.into())));
        expr.sign() != Ordering::Greater
    }

    /// `D(center, rho)` meets the wedge of halfplanes `j` and `k`: the
    /// squared distance from the center to the wedge is within the squared
    /// radius. The nearest wedge point is the center itself, a projection
    /// onto one bounding line (if that projection satisfies the other
    /// constraint), or the wedge corner.
    fn disk_pair_feasible(
        &self,
        center: &Point,
        radius_sq: &Rational,
        j: usize,
        k: usize,
    ) -> bool {
        let (lj, lk) = (&self.lines[j], &self.lines[k]);
        if lj.n.cross(&lk.n).is_zero() {
            // Parallel lines: either a strip (disk meets it iff it meets
            // both halfplanes, covered by the single-halfplane tests) or a
            // redundant pair.
            return true;
        }
        let inside = |l: &ShiftedLine, mask: usize, bases: &[Rational; 2]| -> Ordering {
            let excess = l.n.dot(center) - &l.c;
            RadicalSum::from_rational(bases, excess)
                .add(&RadicalSum::term(bases, mask, self.d.clone()))
                .sign()
        };
        let bases_jk = [lj.s.clone(), lk.s.clone()];
        let in_j = inside(lj, 0b01, &bases_jk) != Ordering::Greater;
        let in_k = inside(lk, 0b10, &bases_jk) != Ordering::Greater;
        if in_j && in_k {
            return true; // the center lies in the wedge
        }
        // Projection onto line j: distance (excess_j + d sqrt(s_j)) along
        // n_j / s_j; it belongs to the wedge iff constraint k holds there.
        if self.projection_feasible(center, radius_sq, j, k) {
            return true;
        }
        if self.projection_feasible(center, radius_sq, k, j) {
            return true;
        }
        // Wedge corner: |center - v_jk|^2 <= radius_sq.
        self.corner_within(center, radius_sq, j, k)
    }

    /// Projection of the center onto shifted line `j` lies on the feasible
    /// side of `k` and within the radius.
    fn projection_feasible(
        &self,
        center: &Point,
        radius_sq: &Rational,
        j: usize,
        k: usize,
    ) -> bool {
        let (lj, lk) = (&self.lines[j], &self.lines[k]);
        // proj = center - ((excess_j + d sqrt(s_j)) / s_j) n_j.
        let excess_j = lj.n.dot(center) - &lj.c;
        // Distance feasibility: (excess_j + d sqrt(s_j))^2 <= radius_sq * s_j.
        let ex_sq = &excess_j * &excess_j + &self.d * &self.d * &lj.s;
        let cross_term = Rational::from_integer(2.into()) * &excess_j * &self.d;
        let bases_j = [lj.s.clone()];
        let dist_expr = RadicalSum::from_rational(&bases_j, ex_sq - radius_sq * &lj.s)
            .add(&RadicalSum::term(&bases_j, 0b1, cross_term));
        if dist_expr.sign() == Ordering::Greater {
            return false;
        }
        // Constraint k at the projection:
        // n_k . proj - c_k + d sqrt(s_k)
        //   = excess_k + d sqrt(s_k) - (n_k . n_j / s_j)(excess_j + d sqrt(s_j)).
        let excess_k = lk.n.dot(center) - &lk.c;
        let njk = lj.n.dot(&lk.n);
        let bases = [lj.s.clone(), lk.s.clone()];
        let expr = RadicalSum::from_rational(&bases, &excess_k * &lj.s - &njk * &excess_j)
            .add(&RadicalSum::term(&bases, 0b10, &self.d * &lj.s))
            .sub(&RadicalSum::term(&bases, 0b01, &self.d * &njk));
        // Scaled by s_j > 0, sign unchanged.
        expr.sign() != Ordering::Greater
    }

    /// Whether the corner of wedge (j, k) lies within the radius of the
    /// center.
    fn corner_within(&self, center: &Point, radius_sq: &Rational, j: usize, k: usize) -> bool {
        let (lj, lk) = (&self.lines[j], &self.lines[k]);
        let det = lj.n.cross(&lk.n);
        debug_assert!(!det.is_zero());
        let bases = [lj.s.clone(), lk.s.clone()];
        let rhs = |mask: usize, c: &Rational, coeff: &Rational| -> RadicalSum {
            RadicalSum::from_rational(&bases, coeff * c)
                .sub(&RadicalSum::term(&bases, mask, coeff * &self.d))
        };
        // det * v = (lk.n.y rhs_j - lj.n.y rhs_k, lj.n.x rhs_k - lk.n.x rhs_j)
        let vx = rhs(0b01, &lj.c, &lk.n.y).sub(&rhs(0b10, &lk.c, &lj.n.y));
        let vy = rhs(0b10, &lk.c, &lj.n.x).sub(&rhs(0b01, &lj.c, &lk.n.x));
        // |det * (v - center)|^2 <= radius_sq * det^2
        let det_sq = &det * &det;
        let cx = RadicalSum::from_rational(&bases, &center.x * &det);
        let cy = RadicalSum::from_rational(&bases, &center.y * &det);
        let dx = vx.sub(&cx);
        let dy = vy.sub(&cy);
        let expr = dx
            .mul(&dx)
            .add(&dy.mul(&dy))
            .sub(&RadicalSum::from_rational(&bases, radius_sq * det_sq));
        expr.sign() != Ordering::Greater
    }
}
