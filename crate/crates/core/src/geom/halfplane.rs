use super::point::Point;
use crate::numeric::Rational;
use num_traits::{Signed, Zero};

/// The closed halfplane `n . x <= c` with an unnormalized rational normal.
#[derive(Debug, Clone)]
pub struct HalfPlane {
    pub n: Point,
    pub c: Rational,
}

impl HalfPlane {
    pub fn new(n: Point, c: Rational) -> Self {
        debug_assert!(!n.is_zero());
        HalfPlane { n, c }
    }

    /// Halfplane bounded by the directed edge `a -> b` with the region on
    /// its left (the convention of counterclockwise polygons).
    pub fn from_edge(a: &Point, b: &Point) -> Self {
        let n = b.sub(a).rot90().neg(); // outward normal
        let c = n.dot(a);
        HalfPlane { n, c }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.n.dot(p) <= self.c
    }
}

/// A non-vertical constraint in slope-intercept form, `y <= m x + q` for
/// upper constraints and `y >= m x + q` for lower ones.
#[derive(Debug, Clone)]
struct Line {
    m: Rational,
    q: Rational,
}

impl Line {
    fn eval(&self, x: &Rational) -> Rational {
        &self.m * x + &self.q
    }

    fn cross_x(&self, other: &Line) -> Rational {
        (&other.q - &self.q) / (&self.m - &other.m)
    }
}

/// Intersection of closed halfplanes as a strictly convex counterclockwise
/// polygon; `None` when the interior is empty (including the cases where
/// the intersection degenerates to a point or segment).
///
/// Works by the dual-hull construction: split constraints into those
/// bounding from above and below, build the lower and upper envelopes by a
/// monotone scan over slopes, then cut the region between them, clipped by
/// the vertical constraints.
pub fn intersect_halfplanes(halfplanes: &[HalfPlane]) -> Option<Vec<Point>> {
    let mut upper: Vec<Line> = Vec::new(); // y <= m x + q
    let mut lower: Vec<Line> = Vec::new(); // y >= m x + q
    let mut x_max: Option<Rational> = None;
    let mut x_min: Option<Rational> = None;
    for h in halfplanes {
        if h.n.y.is_zero() {
            let bound = &h.c / &h.n.x;
            if h.n.x.is_positive() {
                x_max = Some(match x_max {
                    None => bound,
                    Some(cur) => cur.min(bound),
                });
            } else {
                x_min = Some(match x_min {
                    None => bound,
                    Some(cur) => cur.max(bound),
                });
            }
        } else {
            let m = -(&h.n.x / &h.n.y);
            let q = &h.c / &h.n.y;
            if h.n.y.is_positive() {
                upper.push(Line { m, q });
            } else {
                lower.push(Line { m, q });
            }
        }
    }
    // A bounded region needs both chains; callers always pass polygons'
    // full edge sets, so missing chains mean an unbounded (invalid) input.
    if upper.is_empty() || lower.is_empty() {
        return None;
    }

    let f = envelope(upper, true); // pointwise minimum, concave upper bound
    let g = envelope(lower, false); // pointwise maximum, convex lower bound

    // Feasible x-range of f - g (a concave piecewise-linear function).
    let (xl, xr) = positive_range(&f, &g, &x_min, &x_max)?;
    if xl >= xr {
        return None;
    }

    // Walk the lower bound left to right, then the upper bound right to
    // left; collinear and duplicate vertices drop at the end.
    let mut pts: Vec<Point> = Vec::new();
    let mut push = |x: Rational, y: Rational| {
        let p = Point::new(x, y);
        if pts.last() != Some(&p) {
            pts.push(p);
        }
    };
    push(xl.clone(), g.eval(&xl));
    for i in 0..g.breaks.len() {
        let bx = &g.breaks[i];
        if *bx > xl && *bx < xr {
            push(bx.clone(), g.lines[i + 1].eval(bx));
        }
    }
    push(xr.clone(), g.eval(&xr));
    push(xr.clone(), f.eval(&xr));
    for i in (0..f.breaks.len()).rev() {
        let bx = &f.breaks[i];
        if *bx > xl && *bx < xr {
            push(bx.clone(), f.lines[i + 1].eval(bx));
        }
    }
    push(xl.clone(), f.eval(&xl));
    if pts.last() == Some(&pts[0]) {
        pts.pop();
    }
    if pts.len() < 3 {
        return None;
    }
    let ring = super::ring::Ring::new_unchecked(pts).simplified();
    if !ring.signed_area2().is_positive() {
        return None;
    }
    Some(ring.vertices().to_vec())
}

struct Envelope {
    lines: Vec<Line>,
    /// `breaks[i]` is the abscissa where `lines[i]` hands over to
    /// `lines[i+1]`; strictly increasing.
    breaks: Vec<Rational>,
}

impl Envelope {
    fn eval(&self, x: &Rational) -> Rational {
        let i = self.breaks.partition_point(|b| b < x);
        self.lines[i].eval(x)
    }
}

/// Lower envelope of upper constraints (`minimize = true`) or upper
/// envelope of lower constraints.
fn envelope(mut lines: Vec<Line>, minimize: bool) -> Envelope {
    // Order slopes so the kept chain reads left to right; for the minimum
    // the slopes decrease, for the maximum they increase.
    lines.sort_by(|a, b| {
        let ord = a.m.cmp(&b.m);
        let ord = if minimize { ord.reverse() } else { ord };
        ord.then_with(|| {
            let tie = a.q.cmp(&b.q);
            if minimize {
                tie
            } else {
                tie.reverse()
            }
        })
    });
    lines.dedup_by(|next, kept| next.m == kept.m);

    let mut chain: Vec<Line> = Vec::new();
    for line in lines {
        while chain.len() >= 2 {
            let t = &chain[chain.len() - 1];
            let s = &chain[chain.len() - 2];
            // Top line is redundant once the newcomer overtakes it before
            // it ever wins against the line below.
            if line.cross_x(s) <= t.cross_x(s) {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(line);
    }
    let breaks = chain
        .windows(2)
        .map(|w| w[0].cross_x(&w[1]))
        .collect();
    Envelope {
        lines: chain,
        breaks,
    }
}

/// The maximal interval where `f - g >= 0`, clipped to the vertical
/// bounds; `None` when empty. `f - g` is concave, so the feasible set is a
/// single interval delimited by at most two sign changes.
fn positive_range(
    f: &Envelope,
    g: &Envelope,
    x_min: &Option<Rational>,
    x_max: &Option<Rational>,
) -> Option<(Rational, Rational)> {
    // Candidate abscissas: all breakpoints of both envelopes.
    let mut xs: Vec<Rational> = f.breaks.iter().chain(g.breaks.iter()).cloned().collect();
    xs.sort();
    xs.dedup();

    let h = |x: &Rational| f.eval(x) - g.eval(x);

    // Slopes at the far ends decide behavior beyond the breakpoints.
    let leftmost_slope = &f.lines[0].m - &g.lines[0].m;
    let rightmost_slope =
        &f.lines[f.lines.len() - 1].m - &g.lines[g.lines.len() - 1].m;

    // Find some x with h(x) >= 0, exploiting concavity: the maximum of h is
    // at a breakpoint unless h is monotone, in which case it grows toward
    // one end.
    let mut peak: Option<Rational> = xs.iter().find(|x| !h(x).is_negative()).cloned();
    if peak.is_none() {
        if xs.is_empty() {
            // Both envelopes are single lines; h is linear.
            let x0 = Rational::zero();
            if !h(&x0).is_negative() {
                peak = Some(x0);
            } else if leftmost_slope.is_negative() {
                peak = find_by_march(&h, Rational::zero(), false);
            } else if leftmost_slope.is_positive() {
                peak = find_by_march(&h, Rational::zero(), true);
            }
        } else {
            if leftmost_slope.is_negative() {
                peak = find_by_march(&h, xs[0].clone(), false);
            }
            if peak.is_none() && rightmost_slope.is_positive() {
                peak = find_by_march(&h, xs[xs.len() - 1].clone(), true);
            }
        }
    }
    let peak = peak?;

    // From the peak, walk outward to the sign changes; a missing crossing
    // means the function stays non-negative in that direction and the
    // vertical constraints must bound the region instead.
    let xl = boundary_toward(f, g, &xs, &peak, false, leftmost_slope);
    let xr = boundary_toward(f, g, &xs, &peak, true, rightmost_slope);

    let lo = match (xl, x_min) {
        (Some(a), Some(m)) => a.max(m.clone()),
        (Some(a), None) => a,
        (None, Some(m)) => m.clone(),
        (None, None) => return None,
    };
    let hi = match (xr, x_max) {
        (Some(a), Some(m)) => a.min(m.clone()),
        (Some(a), None) => a,
        (None, Some(m)) => m.clone(),
        (None, None) => return None,
    };
    if lo >= hi {
        return None;
    }
    debug_assert!(!(f.eval(&lo) - g.eval(&lo)).is_negative());
    debug_assert!(!(f.eval(&hi) - g.eval(&hi)).is_negative());
    Some((lo, hi))
}

/// Marches geometrically from `start` in the given direction until the
/// concave function becomes non-negative; bounded steps because a concave
/// function unbounded above in a direction grows at least linearly.
fn find_by_march(
    h: &dyn Fn(&Rational) -> Rational,
    start: Rational,
    rightward: bool,
) -> Option<Rational> {
    let mut step = Rational::from_integer(1.into());
    let mut x = start;
    for _ in 0..256 {
        x = if rightward { &x + &step } else { &x - &step };
        if !h(&x).is_negative() {
            return Some(x);
        }
        step *= Rational::from_integer(2.into());
    }
    None
}

/// The abscissa where `f - g` crosses zero walking from `from` in the
/// given direction. `None` when the function stays positive forever, which
/// cannot happen for bounded inputs.
fn boundary_toward(
    f: &Envelope,
    g: &Envelope,
    xs: &[Rational],
    from: &Rational,
    rightward: bool,
    end_slope: Rational,
) -> Option<Rational> {
    let h = |x: &Rational| f.eval(x) - g.eval(x);
    let mut prev = from.clone();
    let iter: Box<dyn Iterator<Item = &Rational>> = if rightward {
        Box::new(xs.iter().filter(|x| *x > from))
    } else {
        Box::new(xs.iter().rev().filter(|x| *x < from))
    };
    for x in iter {
        if h(x).is_negative() {
            return Some(cross_zero(f, g, &prev, x));
        }
        prev = x.clone();
    }
    // Beyond the last breakpoint the function is a single line.
    if rightward && end_slope.is_negative() || !rightward && end_slope.is_positive() {
        // Solve on the unbounded final piece.
        let far = if rightward {
            find_negative(&h, prev.clone(), true)
        } else {
            find_negative(&h, prev.clone(), false)
        };
        let far = far?;
        return Some(cross_zero(f, g, &prev, &far));
    }
    None
}

fn find_negative(
    h: &dyn Fn(&Rational) -> Rational,
    start: Rational,
    rightward: bool,
) -> Option<Rational> {
    let mut step = Rational::from_integer(1.into());
    let mut x = start;
    for _ in 0..256 {
        x = if rightward { &x + &step } else { &x - &step };
        if h(&x).is_negative() {
            return Some(x);
        }
        step *= Rational::from_integer(2.into());
    }
    None
}

/// Zero of the linear piece of `f - g` between `a` (non-negative) and `b`
/// (negative).
fn cross_zero(f: &Envelope, g: &Envelope, a: &Rational, b: &Rational) -> Rational {
    let ha = f.eval(a) - g.eval(a);
    let hb = f.eval(b) - g.eval(b);
    debug_assert!(!ha.is_negative() && hb.is_negative());
    // x = a + ha * (b - a) / (ha - hb)
    a + &ha * (b - a) / (&ha - &hb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};

    fn square_halfplanes(shift: i64) -> Vec<HalfPlane> {
        // [0,10]^2 shrunk by `shift` on each side.
        vec![
            HalfPlane::new(Point::from_i64(0, -1), rat_int(-shift)),
            HalfPlane::new(Point::from_i64(1, 0), rat_int(10 - shift)),
            HalfPlane::new(Point::from_i64(0, 1), rat_int(10 - shift)),
            HalfPlane::new(Point::from_i64(-1, 0), rat_int(-shift)),
        ]
    }

    #[test]
    fn square_intersection() {
        let pts = intersect_halfplanes(&square_halfplanes(1)).unwrap();
        assert_eq!(pts.len(), 4);
        assert!(pts.contains(&Point::from_i64(1, 1)));
        assert!(pts.contains(&Point::from_i64(9, 9)));
    }

    #[test]
    fn empty_when_over_shrunk() {
        assert!(intersect_halfplanes(&square_halfplanes(6)).is_none());
        // Exactly degenerate: a point.
        assert!(intersect_halfplanes(&square_halfplanes(5)).is_none());
    }

    #[test]
    fn triangle_with_diagonals() {
        let hs = vec![
            HalfPlane::from_edge(&Point::from_i64(0, 0), &Point::from_i64(4, 0)),
            HalfPlane::from_edge(&Point::from_i64(4, 0), &Point::from_i64(0, 4)),
            HalfPlane::from_edge(&Point::from_i64(0, 4), &Point::from_i64(0, 0)),
        ];
        let pts = intersect_halfplanes(&hs).unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts.contains(&Point::from_i64(0, 0)));
        assert!(pts.contains(&Point::from_i64(4, 0)));
        assert!(pts.contains(&Point::from_i64(0, 4)));
    }

    #[test]
    fn redundant_halfplanes_drop() {
        let mut hs = square_halfplanes(0);
        hs.push(HalfPlane::new(Point::from_i64(1, 0), rat_int(100)));
        hs.push(HalfPlane::new(Point::from_i64(1, 1), rat_int(100)));
        let pts = intersect_halfplanes(&hs).unwrap();
        assert_eq!(pts.len(), 4);
    }

    #[test]
    fn octagon_from_eight_cuts() {
        let mut hs = square_halfplanes(0);
        hs.push(HalfPlane::new(Point::from_i64(1, 1), rat_int(16)));
        hs.push(HalfPlane::new(Point::from_i64(-1, 1), rat_int(6)));
        hs.push(HalfPlane::new(Point::from_i64(1, -1), rat_int(6)));
        hs.push(HalfPlane::new(Point::from_i64(-1, -1), rat_int(-4)));
        let pts = intersect_halfplanes(&hs).unwrap();
        assert_eq!(pts.len(), 8);
        for p in &pts {
            for h in &hs {
                assert!(h.contains(p));
            }
        }
    }

    #[test]
    fn thin_sliver_nonempty() {
        // y >= 0, y <= x/1000, x <= 1: a tiny triangle.
        let hs = vec![
            HalfPlane::new(Point::from_i64(0, -1), rat_int(0)),
            HalfPlane::new(Point::new(rat(-1, 1000), rat_int(1)), rat_int(0)),
            HalfPlane::new(Point::from_i64(1, 0), rat_int(1)),
        ];
        let pts = intersect_halfplanes(&hs).unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts.contains(&Point::new(rat_int(1), rat(1, 1000))));
    }
}
