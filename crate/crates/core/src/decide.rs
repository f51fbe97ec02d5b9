//! The rational decision procedures.
//!
//! `approx_decide` answers whether a polygonal region `Q` is within
//! Hausdorff distance `eps` of the `r`-offset of some polygonal region.
//! Disks are replaced by annulus polygons at working precision `delta`:
//! the interior variant under-approximates every stage and certifies YES,
//! the exterior variant over-approximates and certifies NO. Whenever
//! `delta < |eps - eps_critical| / 2` one of the two is guaranteed to be
//! decisive; in between the combined answer may be UNDECIDED.

use crate::disk::{inner_disk, outer_disk};
use crate::error::{Error, Result};
use crate::geom::{Frame, Region};
use crate::minkowski::{inset_hat, offset_hat};
use crate::numeric::{rat_int, Rational};
use crate::overlay::is_subset;
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Yes => write!(f, "YES"),
            Verdict::No => write!(f, "NO"),
            Verdict::Undecided => write!(f, "UNDECIDED"),
        }
    }
}

/// Offset radius, tolerance and working precision for one decision run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionParams {
    r: Rational,
    eps: Rational,
    delta: Rational,
}

impl DecisionParams {
    /// Requires `0 < delta < eps < r`; the degenerate tolerances are
    /// resolved by [`approx_decide`] before parameters are built.
    pub fn new(r: Rational, eps: Rational, delta: Rational) -> Result<Self> {
        if !delta.is_positive() || delta >= eps || eps >= r {
            return Err(Error::InvalidParams(format!(
                "need 0 < delta < eps < r, got r={r}, eps={eps}, delta={delta}"
            )));
        }
        Ok(DecisionParams { r, eps, delta })
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    pub fn eps(&self) -> &Rational {
        &self.eps
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }
}

/// The three stage results, retained for rendering diagnostics.
#[derive(Debug, Clone)]
pub struct Intermediates {
    /// Tolerance-grown input.
    pub q_grown: Region,
    /// Container of all feasible summands.
    pub pi: Region,
    /// Reach of the container's full offset; the subset test runs against it.
    pub q_reach: Region,
}

#[derive(Debug, Clone)]
pub struct DecisionOutcome {
    pub verdict: Verdict,
    /// A summand whose `r`-offset is `eps`-close to the input; present
    /// exactly on YES.
    pub witness: Option<Region>,
    pub intermediates: Option<Intermediates>,
}

impl DecisionOutcome {
    fn undecided(intermediates: Option<Intermediates>) -> Self {
        DecisionOutcome {
            verdict: Verdict::Undecided,
            witness: None,
            intermediates,
        }
    }
}

/// The clamping frame: the input's bounding box expanded by
/// `r + eps + 2 delta + 1` on every side, which keeps every intermediate
/// set of both variants strictly clear of the frame boundary.
pub fn decision_frame(q: &Region, params: &DecisionParams) -> Result<Frame> {
    let margin = &params.r + &params.eps + rat_int(2) * &params.delta + rat_int(1);
    Frame::around(q, &margin)
}

/// One-sided interior variant: every disk is under-approximated, so a YES
/// is certified and carries the stage-2 set as witness.
pub fn approx_decide_interior(q: &Region, params: &DecisionParams) -> Result<DecisionOutcome> {
    if q.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let frame = decision_frame(q, params)?;
    let d_eps = inner_disk(&params.eps, &params.delta)?;
    let q_grown = offset_hat(q, &d_eps);
    let d_r = outer_disk(&params.r, &params.delta)?;
    let pi = inset_hat(&q_grown, &d_r, &frame)?;
    let reach_radius = &params.r + &params.eps;
    let d_reach = inner_disk(&reach_radius, &params.delta)?;
    let q_reach = offset_hat(&pi, &d_reach);
    let inter = Intermediates {
        q_grown,
        pi: pi.clone(),
        q_reach: q_reach.clone(),
    };
    if !pi.is_empty() && is_subset(q, &q_reach) {
        Ok(DecisionOutcome {
            verdict: Verdict::Yes,
            witness: Some(pi),
            intermediates: Some(inter),
        })
    } else {
        Ok(DecisionOutcome::undecided(Some(inter)))
    }
}

/// One-sided exterior variant: every disk is over-approximated, so a NO is
/// certified.
pub fn approx_decide_exterior(q: &Region, params: &DecisionParams) -> Result<DecisionOutcome> {
    if q.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let frame = decision_frame(q, params)?;
    let d_eps = outer_disk(&params.eps, &params.delta)?;
    let q_grown = offset_hat(q, &d_eps);
    let d_r = inner_disk(&params.r, &params.delta)?;
    let pi = inset_hat(&q_grown, &d_r, &frame)?;
    let reach_radius = &params.r + &params.eps;
    let d_reach = outer_disk(&reach_radius, &params.delta)?;
    let q_reach = offset_hat(&pi, &d_reach);
    let inter = Intermediates {
        q_grown,
        pi,
        q_reach: q_reach.clone(),
    };
    if is_subset(q, &q_reach) {
        Ok(DecisionOutcome::undecided(Some(inter)))
    } else {
        Ok(DecisionOutcome {
            verdict: Verdict::No,
            witness: None,
            intermediates: Some(inter),
        })
    }
}

/// Combined decision. Degenerate tolerances follow the closed-form rules:
/// `eps = 0` is NO, `eps >= r` is YES with the input itself as witness.
pub fn approx_decide(
    q: &Region,
    r: &Rational,
    eps: &Rational,
    delta: &Rational,
    keep_intermediates: bool,
) -> Result<DecisionOutcome> {
    if q.is_empty() {
        return Err(Error::EmptyRegion);
    }
    if !r.is_positive() {
        return Err(Error::InvalidParams(format!("radius must be positive, got {r}")));
    }
    if eps.is_negative() {
        return Err(Error::InvalidParams(format!(
            "tolerance must be non-negative, got {eps}"
        )));
    }
    if eps.is_zero() {
        return Ok(DecisionOutcome {
            verdict: Verdict::No,
            witness: None,
            intermediates: None,
        });
    }
    if eps >= r {
        return Ok(DecisionOutcome {
            verdict: Verdict::Yes,
            witness: Some(q.clone()),
            intermediates: None,
        });
    }
    let params = DecisionParams::new(r.clone(), eps.clone(), delta.clone())?;
    // The one-sided runs are independent and could join in parallel, but
    // running the interior first and short-circuiting on YES saves the
    // whole exterior pipeline in the common decisive case; inner unions
    // already parallelize across pieces.
    let mut interior = approx_decide_interior(q, &params)?;
    if interior.verdict == Verdict::Yes {
        if !keep_intermediates {
            interior.intermediates = None;
        }
        return Ok(interior);
    }
    let mut exterior = approx_decide_exterior(q, &params)?;
    if exterior.verdict == Verdict::No {
        if !keep_intermediates {
            exterior.intermediates = None;
        }
        return Ok(exterior);
    }
    Ok(DecisionOutcome::undecided(if keep_intermediates {
        interior.intermediates
    } else {
        None
    }))
}

/// Certified three-way test of `H(X, Y) <= eps` by polygonal sandwiching:
/// both inclusions with inner disks certify YES, a failed inclusion with
/// outer disks certifies NO, anything else is UNDECIDED.
pub fn hausdorff_leq(
    x: &Region,
    y: &Region,
    eps: &Rational,
    delta: &Rational,
) -> Result<Verdict> {
    if !delta.is_positive() || delta >= eps {
        return Err(Error::InvalidParams(format!(
            "need 0 < delta < eps, got eps={eps}, delta={delta}"
        )));
    }
    match (x.is_empty(), y.is_empty()) {
        (true, true) => return Ok(Verdict::Yes),
        (true, false) | (false, true) => return Ok(Verdict::No),
        _ => {}
    }
    let inner = inner_disk(eps, delta)?;
    if is_subset(y, &offset_hat(x, &inner)) && is_subset(x, &offset_hat(y, &inner)) {
        return Ok(Verdict::Yes);
    }
    let outer = outer_disk(eps, delta)?;
    if !is_subset(y, &offset_hat(x, &outer)) || !is_subset(x, &offset_hat(y, &outer)) {
        return Ok(Verdict::No);
    }
    Ok(Verdict::Undecided)
}

/// Consistency check for a YES witness: its certified offset sandwich must
/// not be refutably far from the input.
pub fn witness_sandwich_ok(
    q: &Region,
    witness: &Region,
    r: &Rational,
    eps: &Rational,
    delta: &Rational,
) -> Result<bool> {
    if delta >= r {
        return Err(Error::InvalidParams("delta must stay below r".into()));
    }
    let inner_r = inner_disk(r, delta)?;
    let offset = offset_hat(witness, &inner_r);
    Ok(hausdorff_leq(&offset, q, eps, delta)? != Verdict::No)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn square10() -> Region {
        Region::rect(0, 0, 10, 10)
    }

    // For the axis-aligned square of side length L with radius r, the
    // decision flips at eps = (3 - 2*sqrt(2)) r = 0.17157... r  (corner
    // distance sqrt(2)(r - eps) <= r + eps), as long as the square stays
    // fat relative to r.

    #[test]
    fn square_yes_above_critical() {
        let out = approx_decide(&square10(), &rat_int(1), &rat(1, 4), &rat(1, 32), false).unwrap();
        assert_eq!(out.verdict, Verdict::Yes);
        let w = out.witness.expect("witness on YES");
        assert!(!w.is_empty());
    }

    #[test]
    fn square_no_below_critical() {
        let out = approx_decide(&square10(), &rat_int(1), &rat(1, 10), &rat(1, 32), false).unwrap();
        assert_eq!(out.verdict, Verdict::No);
        assert!(out.witness.is_none());
    }

    #[test]
    fn one_sided_variants_stay_undecided_on_their_blind_side() {
        let params = DecisionParams::new(rat_int(1), rat(1, 10), rat(1, 32)).unwrap();
        let interior = approx_decide_interior(&square10(), &params).unwrap();
        assert_eq!(interior.verdict, Verdict::Undecided);

        let params = DecisionParams::new(rat_int(1), rat(1, 4), rat(1, 32)).unwrap();
        let exterior = approx_decide_exterior(&square10(), &params).unwrap();
        assert_eq!(exterior.verdict, Verdict::Undecided);
    }

    #[test]
    fn degenerate_tolerances() {
        let q = square10();
        let zero = approx_decide(&q, &rat_int(1), &rat_int(0), &rat(1, 64), false).unwrap();
        assert_eq!(zero.verdict, Verdict::No);
        let at_r = approx_decide(&q, &rat_int(1), &rat_int(1), &rat(1, 64), false).unwrap();
        assert_eq!(at_r.verdict, Verdict::Yes);
        assert_eq!(at_r.witness.unwrap(), q);
        let above = approx_decide(&q, &rat_int(1), &rat_int(2), &rat(1, 64), false).unwrap();
        assert_eq!(above.verdict, Verdict::Yes);
    }

    #[test]
    fn invalid_params_rejected() {
        let q = square10();
        assert!(approx_decide(&q, &rat_int(1), &rat(1, 2), &rat(3, 4), false).is_err());
        assert!(approx_decide(&q, &rat_int(0), &rat(1, 2), &rat(1, 8), false).is_err());
        assert!(approx_decide(&q, &rat_int(1), &rat(-1, 2), &rat(1, 8), false).is_err());
        assert!(DecisionParams::new(rat_int(1), rat(1, 2), rat_int(0)).is_err());
    }

    #[test]
    fn witness_offset_sandwich_consistent() {
        let q = square10();
        let out = approx_decide(&q, &rat_int(1), &rat(1, 4), &rat(1, 32), false).unwrap();
        let w = out.witness.unwrap();
        assert!(witness_sandwich_ok(&q, &w, &rat_int(1), &rat(1, 4), &rat(1, 32)).unwrap());
    }

    #[test]
    fn round_trip_offset_is_deconstructible() {
        // Q built as an exact polygonal offset of a known summand must come
        // back YES: eps_crit <= delta'' and delta < (eps - eps_crit)/2.
        let p0 = Region::from_ring(
            crate::geom::Ring::new(vec![
                crate::geom::Point::from_i64(0, 0),
                crate::geom::Point::from_i64(7, 1),
                crate::geom::Point::from_i64(9, 6),
                crate::geom::Point::from_i64(4, 8),
                crate::geom::Point::from_i64(-1, 5),
            ])
            .unwrap(),
        )
        .unwrap();
        let r = rat_int(1);
        let delta2 = rat(1, 64);
        let q = offset_hat(&p0, &inner_disk(&r, &delta2).unwrap());
        let eps = rat(1, 16); // 4 * delta
        let delta = rat(1, 64);
        let out = approx_decide(&q, &r, &eps, &delta, false).unwrap();
        assert_eq!(out.verdict, Verdict::Yes);
        let w = out.witness.unwrap();
        assert!(witness_sandwich_ok(&q, &w, &r, &eps, &delta).unwrap());
    }

    #[test]
    fn hausdorff_cases() {
        let a = Region::rect(0, 0, 1, 1);
        assert_eq!(
            hausdorff_leq(&a, &a, &rat(1, 2), &rat(1, 8)).unwrap(),
            Verdict::Yes
        );
        let b = a.translate(&crate::geom::Point::from_i64(3, 0));
        assert_eq!(
            hausdorff_leq(&a, &b, &rat_int(1), &rat(1, 8)).unwrap(),
            Verdict::No
        );
        // Distance exactly 3 along x: YES at eps slightly above.
        assert_eq!(
            hausdorff_leq(&a, &b, &rat(13, 4), &rat(1, 8)).unwrap(),
            Verdict::Yes
        );
        assert_eq!(
            hausdorff_leq(&Region::empty(), &a, &rat_int(1), &rat(1, 8)).unwrap(),
            Verdict::No
        );
        assert_eq!(
            hausdorff_leq(&Region::empty(), &Region::empty(), &rat_int(1), &rat(1, 8)).unwrap(),
            Verdict::Yes
        );
    }

    #[test]
    fn interior_disks_nest_into_exterior_disks() {
        // The under-approximating tolerance disk is contained in the
        // over-approximating one, so the grown inputs nest as well.
        let q = square10();
        let eps = rat(1, 4);
        let delta = rat(1, 32);
        let inner = inner_disk(&eps, &delta).unwrap();
        let outer = outer_disk(&eps, &delta).unwrap();
        let grown_inner = offset_hat(&q, &inner);
        let grown_outer = offset_hat(&q, &outer);
        assert!(is_subset(&grown_inner, &grown_outer));
        assert!(is_subset(&q, &grown_inner));
    }
}
