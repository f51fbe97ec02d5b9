//! Parameter searches built on the decision procedure: the critical
//! tolerance interval for a fixed radius, witness extraction at that
//! tolerance, the largest workable radius for a fixed tolerance, and the
//! radius-quality scan `r / eps_critical(r)`.

use crate::decide::{approx_decide, Verdict};
use crate::error::{Error, Result};
use crate::geom::Region;
use crate::numeric::{rat_int, Rational};
use num_traits::{Signed, Zero};
use rayon::prelude::*;

/// Bisection state for the critical tolerance: the invariant maintained by
/// every step is `eps_critical` lies in `[eps_no, eps_yes]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsSearchState {
    pub eps_no: Rational,
    pub eps_yes: Rational,
    pub precision: Rational,
    pub iterations: u32,
}

impl EpsSearchState {
    pub fn width(&self) -> Rational {
        &self.eps_yes - &self.eps_no
    }

    pub fn is_final(&self) -> bool {
        self.width() <= self.precision
    }
}

/// Shrinks `[0, r]` to an interval of width at most `precision` that
/// contains the critical tolerance. Every iteration halves the interval:
/// YES keeps the left half, NO the right half, and UNDECIDED recenters at
/// the midpoint with half width, which is sound because an undecided
/// answer at working precision `width/8` pins the critical value within
/// `width/4` of the midpoint.
pub fn approx_search_eps(q: &Region, r: &Rational, precision: &Rational) -> Result<EpsSearchState> {
    if !r.is_positive() {
        return Err(Error::InvalidParams(format!("radius must be positive, got {r}")));
    }
    if !precision.is_positive() {
        return Err(Error::InvalidParams(format!(
            "precision must be positive, got {precision}"
        )));
    }
    let mut eps_no = Rational::zero();
    let mut eps_yes = r.clone();
    let mut iterations = 0;
    while &eps_yes - &eps_no > *precision {
        let width = &eps_yes - &eps_no;
        let mid = (&eps_no + &eps_yes) / rat_int(2);
        let delta = &width / rat_int(8);
        let res = approx_decide(q, r, &mid, &delta, false)?;
        match res.verdict {
            Verdict::Yes => eps_yes = mid,
            Verdict::No => eps_no = mid,
            Verdict::Undecided => {
                let quarter = &width / rat_int(4);
                eps_no = &mid - &quarter;
                eps_yes = &mid + &quarter;
            }
        }
        iterations += 1;
    }
    Ok(EpsSearchState {
        eps_no,
        eps_yes,
        precision: precision.clone(),
        iterations,
    })
}

/// Produces a tolerance within the search precision of the critical value
/// together with a witness summand. The first attempt decides at the
/// interval's right endpoint; if that is undecided, the bumped tolerance
/// `eps_yes + precision/2` is guaranteed to come back YES, and anything
/// else is an internal defect.
pub fn extract_solution(
    q: &Region,
    r: &Rational,
    state: &EpsSearchState,
) -> Result<(Rational, Region)> {
    if !state.is_final() {
        return Err(Error::InvalidParams(
            "extract_solution needs a finished search state".into(),
        ));
    }
    let width = state.width();
    if width.is_positive() {
        let delta = &width / rat_int(4);
        let res = approx_decide(q, r, &state.eps_yes, &delta, false)?;
        if res.verdict == Verdict::Yes {
            return Ok((state.eps_yes.clone(), res.witness.expect("witness on YES")));
        }
    }
    let eps_tilde = &state.eps_yes + &state.precision / rat_int(2);
    let delta = &state.precision / rat_int(8);
    let res = approx_decide(q, r, &eps_tilde, &delta, false)?;
    if res.verdict != Verdict::Yes {
        return Err(Error::Defect(format!(
            "decision at eps={eps_tilde} delta={delta} must be YES but was {}",
            res.verdict
        )));
    }
    Ok((eps_tilde, res.witness.expect("witness on YES")))
}

/// Result of the radius search at a fixed tolerance. The left endpoint is
/// a certified-YES radius and the right endpoint certified-NO unless
/// `delta_floor_hit` is set (the refinement loop bottomed out somewhere and
/// the right endpoint may undershoot the true critical radius). When
/// `saturated` is set the tolerance dominates every feature of the input
/// and the search never found a NO radius below its certified upper bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusSearchResult {
    pub interval: (Rational, Rational),
    pub delta_floor_hit: bool,
    pub saturated: bool,
}

/// Decides at one radius, halving the working precision from `eps/2` until
/// the answer is decisive or the floor is reached.
fn decide_refining(
    q: &Region,
    r: &Rational,
    eps: &Rational,
    delta_floor: &Rational,
) -> Result<Option<Verdict>> {
    let mut delta = eps / rat_int(2);
    loop {
        if delta < *delta_floor {
            return Ok(None);
        }
        let res = approx_decide(q, r, eps, &delta, false)?;
        match res.verdict {
            Verdict::Undecided => delta /= rat_int(2),
            decisive => return Ok(Some(decisive)),
        }
    }
}

/// Bisection over the radius for a fixed tolerance. Unlike the tolerance
/// search, an UNDECIDED answer says nothing about the distance to the
/// critical radius, so each probe refines its working precision instead;
/// a probe that bottoms out is retried once at a nudged radius and then
/// conservatively assigned to the NO side.
pub fn search_radius(
    q: &Region,
    eps: &Rational,
    step: &Rational,
    delta_floor: &Rational,
) -> Result<RadiusSearchResult> {
    if !eps.is_positive() || !step.is_positive() || !delta_floor.is_positive() {
        return Err(Error::InvalidParams(
            "eps, radius precision and delta floor must be positive".into(),
        ));
    }
    let (lo_pt, hi_pt) = q.bbox().ok_or(Error::EmptyRegion)?;
    // Half the bounding-box half-perimeter bounds the smallest enclosing
    // circle radius from above; any certified overestimate works here.
    let enclosing = (&hi_pt.x - &lo_pt.x + &hi_pt.y - &lo_pt.y) / rat_int(2);
    let r_max = &enclosing + eps;
    if *eps >= r_max {
        // The tolerance covers the whole shape: YES everywhere up to the
        // certified bound and no NO endpoint exists below it.
        return Ok(RadiusSearchResult {
            interval: (r_max.clone(), r_max),
            delta_floor_hit: false,
            saturated: true,
        });
    }

    let mut delta_floor_hit = false;
    let mut lo = Rational::zero(); // r = 0 is YES by definition
    let mut hi = r_max.clone();
    match decide_refining(q, &r_max, eps, delta_floor)? {
        Some(Verdict::No) => {}
        Some(Verdict::Yes) => {
            return Ok(RadiusSearchResult {
                interval: (r_max.clone(), r_max),
                delta_floor_hit: false,
                saturated: true,
            });
        }
        _ => delta_floor_hit = true,
    }

    while &hi - &lo > *step {
        let mid = (&lo + &hi) / rat_int(2);
        match decide_refining(q, &mid, eps, delta_floor)? {
            Some(Verdict::Yes) => lo = mid,
            Some(Verdict::No) => hi = mid,
            _ => {
                let nudged = &mid + step / rat_int(4);
                match decide_refining(q, &nudged, eps, delta_floor)? {
                    Some(Verdict::Yes) => lo = nudged,
                    Some(Verdict::No) => hi = nudged,
                    _ => {
                        delta_floor_hit = true;
                        hi = mid;
                    }
                }
            }
        }
    }
    Ok(RadiusSearchResult {
        interval: (lo, hi),
        delta_floor_hit,
        saturated: false,
    })
}

/// One radius sample of the quality scan: the critical-tolerance interval
/// and the induced bounds on `J = r / eps_critical`. `j_hi` is `None` when
/// the lower tolerance endpoint is zero (unbounded quality).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JSample {
    pub r: Rational,
    pub eps_lo: Rational,
    pub eps_hi: Rational,
    pub j_lo: Rational,
    pub j_hi: Option<Rational>,
}

/// Critical-tolerance scan over a list of radii; samples are independent
/// and run in parallel.
pub fn j_scan(q: &Region, radii: &[Rational], precision: &Rational) -> Result<Vec<JSample>> {
    for r in radii {
        if !r.is_positive() {
            return Err(Error::InvalidParams(format!("radius must be positive, got {r}")));
        }
    }
    radii
        .par_iter()
        .map(|r| {
            let state = approx_search_eps(q, r, precision)?;
            let j_lo = r / &state.eps_yes;
            let j_hi = if state.eps_no.is_positive() {
                Some(r / &state.eps_no)
            } else {
                None
            };
            Ok(JSample {
                r: r.clone(),
                eps_lo: state.eps_no,
                eps_hi: state.eps_yes,
                j_lo,
                j_hi,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, sqrt_lower, sqrt_upper};

    fn square10() -> Region {
        Region::rect(0, 0, 10, 10)
    }

    /// Rational bracket of the square's critical tolerance (3 - 2 sqrt 2) r.
    fn critical_bracket(r: &Rational) -> (Rational, Rational) {
        let two = rat_int(2);
        let lo = (rat_int(3) - rat_int(2) * sqrt_upper(&two, 60)) * r;
        let hi = (rat_int(3) - rat_int(2) * sqrt_lower(&two, 60)) * r;
        (lo, hi)
    }

    #[test]
    fn eps_search_brackets_square_critical() {
        let r = rat_int(1);
        let precision = rat(1, 128);
        let state = approx_search_eps(&square10(), &r, &precision).unwrap();
        assert!(state.is_final());
        let (lo, hi) = critical_bracket(&r);
        assert!(state.eps_no <= hi, "eps_no={} above critical", state.eps_no);
        assert!(state.eps_yes >= lo, "eps_yes={} below critical", state.eps_yes);
        // Exactly ceil(log2(r / precision)) halvings.
        assert_eq!(state.iterations, 7);
        // Endpoint certificates: the final endpoints cannot contradict the
        // invariant when re-decided at a fine working precision.
        let delta = &precision / rat_int(8);
        let at_yes = approx_decide(&square10(), &r, &state.eps_yes, &delta, false).unwrap();
        assert_ne!(at_yes.verdict, Verdict::No);
        if state.eps_no.is_positive() {
            let at_no = approx_decide(&square10(), &r, &state.eps_no, &delta, false).unwrap();
            assert_ne!(at_no.verdict, Verdict::Yes);
        }
    }

    #[test]
    fn eps_search_immediate_when_precision_dominates() {
        let state = approx_search_eps(&square10(), &rat_int(1), &rat_int(2)).unwrap();
        assert_eq!(state.eps_no, rat_int(0));
        assert_eq!(state.eps_yes, rat_int(1));
        assert_eq!(state.iterations, 0);
    }

    #[test]
    fn extract_solution_on_square() {
        let r = rat_int(1);
        let precision = rat(1, 64);
        let state = approx_search_eps(&square10(), &r, &precision).unwrap();
        let (eps_tilde, witness) = extract_solution(&square10(), &r, &state).unwrap();
        let (lo, _) = critical_bracket(&r);
        assert!(eps_tilde >= lo - &precision);
        assert!(eps_tilde <= state.eps_yes + &precision);
        assert!(!witness.is_empty());
        let delta = &precision / rat_int(8);
        assert!(
            crate::decide::witness_sandwich_ok(&square10(), &witness, &r, &eps_tilde, &delta)
                .unwrap()
        );
    }

    #[test]
    fn radius_search_on_square() {
        // Inverting eps_crit(r) = (3 - 2 sqrt2) r at eps = 1/5 gives
        // r* = (3 + 2 sqrt2) / 5.
        let eps = rat(1, 5);
        let out = search_radius(&square10(), &eps, &rat(1, 64), &rat(1, 1 << 20)).unwrap();
        assert!(!out.delta_floor_hit);
        assert!(!out.saturated);
        let two = rat_int(2);
        let r_lo = (rat_int(3) + rat_int(2) * sqrt_lower(&two, 60)) * &eps;
        let r_hi = (rat_int(3) + rat_int(2) * sqrt_upper(&two, 60)) * &eps;
        assert!(out.interval.0 <= r_hi);
        assert!(out.interval.1 >= r_lo);
        assert!(&out.interval.1 - &out.interval.0 <= rat(1, 64));
    }

    #[test]
    fn radius_search_with_dominating_tolerance() {
        // eps = 5 dwarfs the unit square: every radius up to 5 is YES via
        // the degenerate rule, and the best summand beyond that is
        // essentially a center point, whose offset stays 5-close up to
        // r = 5 + 1/2. The certified upper bound 6 is never YES, so the
        // search converges normally just above 5.5.
        let out = search_radius(&Region::rect(0, 0, 1, 1), &rat_int(5), &rat(1, 16), &rat(1, 64))
            .unwrap();
        assert!(!out.saturated);
        assert!(out.interval.0 <= rat(11, 2) + rat(1, 16));
        assert!(out.interval.1 >= rat(11, 2) - rat(1, 16));
        assert!(&out.interval.1 - &out.interval.0 <= rat(1, 16));
    }

    #[test]
    fn j_scan_square_is_scale_free() {
        // The square's critical tolerance is linear in r, so J is the
        // constant 1 / (3 - 2 sqrt2) = 5.828... for every radius.
        let radii = vec![rat(1, 2), rat_int(1), rat_int(2)];
        let samples = j_scan(&square10(), &radii, &rat(1, 128)).unwrap();
        assert_eq!(samples.len(), 3);
        for s in &samples {
            assert!(s.j_lo <= rat(5829, 1000));
            let hi = s.j_hi.clone().expect("positive lower endpoint");
            assert!(hi >= rat(5828, 1000));
        }
        assert!(j_scan(&square10(), &[], &rat(1, 16)).unwrap().is_empty());
    }
}
