//! Arrangement phase: split every input segment at every point where it
//! meets another one, then merge coincident pieces into groups carrying
//! per-operand signed cover counts.

use super::MAX_OPS;
use crate::geom::{orient, Orientation, Point, Region};
use crate::numeric::{to_f64, Rational};
use std::collections::{HashMap, HashSet};

pub(super) struct InputSeg {
    /// Canonical endpoints, `a < b` lexicographically (by x, then y); along
    /// a segment this order is also the geometric order.
    pub a: Point,
    pub b: Point,
    pub op: usize,
    /// +1 when the ring traverses `a -> b` (rightward, or upward if
    /// vertical), -1 otherwise.
    pub dir: i64,
}

/// One arrangement edge: interiors of distinct groups are disjoint.
pub(super) struct Group {
    pub a: Point,
    pub b: Point,
    /// Net signed number of times each operand's boundary runs along this
    /// edge in canonical direction.
    pub cover: [i64; MAX_OPS],
}

impl Group {
    pub fn is_vertical(&self) -> bool {
        self.a.x == self.b.x
    }
}

pub(super) fn collect_segments(region: &Region, op: usize, out: &mut Vec<InputSeg>) {
    for ring in region.rings() {
        for (p, q) in ring.edges() {
            debug_assert_ne!(p, q);
            if p < q {
                out.push(InputSeg {
                    a: p.clone(),
                    b: q.clone(),
                    op,
                    dir: 1,
                });
            } else {
                out.push(InputSeg {
                    a: q.clone(),
                    b: p.clone(),
                    op,
                    dir: -1,
                });
            }
        }
    }
}

struct BBox {
    min_x: Rational,
    max_x: Rational,
    min_y: Rational,
    max_y: Rational,
}

/// Conservative float bounding box used only to bucket segments into grid
/// cells; the padding absorbs rounding so every truly overlapping pair
/// shares a cell, and every candidate still passes the exact tests.
struct FloatBox {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

fn pad_lo(v: f64) -> f64 {
    v - v.abs() * 1e-9 - 1e-300
}

fn pad_hi(v: f64) -> f64 {
    v + v.abs() * 1e-9 + 1e-300
}

/// Splits all segments at pairwise intersections and groups coincident
/// subsegments. Pair candidates come from uniform grid hashing of padded
/// float boxes; exact arithmetic confirms or rejects every candidate.
pub(super) fn split_segments(segs: Vec<InputSeg>) -> Vec<Group> {
    let n = segs.len();
    let boxes: Vec<BBox> = segs
        .iter()
        .map(|s| BBox {
            min_x: s.a.x.clone(),
            max_x: s.b.x.clone(),
            min_y: s.a.y.clone().min(s.b.y.clone()),
            max_y: s.a.y.clone().max(s.b.y.clone()),
        })
        .collect();
    let fboxes: Vec<FloatBox> = boxes
        .iter()
        .map(|b| FloatBox {
            min_x: pad_lo(to_f64(&b.min_x)),
            max_x: pad_hi(to_f64(&b.max_x)),
            min_y: pad_lo(to_f64(&b.min_y)),
            max_y: pad_hi(to_f64(&b.max_y)),
        })
        .collect();

    // Cell size: around the median segment extent, clamped so that long
    // segments do not explode into too many cells.
    let mut dims: Vec<f64> = fboxes
        .iter()
        .map(|b| (b.max_x - b.min_x).max(b.max_y - b.min_y))
        .collect();
    dims.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median = dims[dims.len() / 2].max(1e-12);
    let span_x = fboxes.iter().map(|b| b.max_x).fold(f64::MIN, f64::max)
        - fboxes.iter().map(|b| b.min_x).fold(f64::MAX, f64::min);
    let span_y = fboxes.iter().map(|b| b.max_y).fold(f64::MIN, f64::max)
        - fboxes.iter().map(|b| b.min_y).fold(f64::MAX, f64::min);
    let span = span_x.max(span_y).max(1e-12);
    let cell = (median * 2.0).max(span / 2048.0);

    let mut grid: HashMap<(i64, i64), Vec<u32>> = HashMap::new();
    let key = |v: f64| -> i64 { (v / cell).floor() as i64 };
    for (i, b) in fboxes.iter().enumerate() {
        for gx in key(b.min_x)..=key(b.max_x) {
            for gy in key(b.min_y)..=key(b.max_y) {
                grid.entry((gx, gy)).or_default().push(i as u32);
            }
        }
    }

    let mut cuts: Vec<Vec<Point>> = vec![Vec::new(); n];
    let mut seen: HashSet<(u32, u32)> = HashSet::new();
    for bucket in grid.values() {
        for (k, &i) in bucket.iter().enumerate() {
            for &j in &bucket[k + 1..] {
                let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                if !seen.insert((lo, hi)) {
                    continue;
                }
                let (bi, bj) = (&boxes[lo as usize], &boxes[hi as usize]);
                if bi.min_x > bj.max_x
                    || bj.min_x > bi.max_x
                    || bi.min_y > bj.max_y
                    || bj.min_y > bi.max_y
                {
                    continue;
                }
                intersect_pair(
                    &segs[lo as usize],
                    &segs[hi as usize],
                    &mut cuts,
                    lo as usize,
                    hi as usize,
                );
            }
        }
    }

    let mut groups: HashMap<(Point, Point), [i64; MAX_OPS]> = HashMap::new();
    for (i, seg) in segs.iter().enumerate() {
        let pieces = &mut cuts[i];
        pieces.sort();
        pieces.dedup();
        let mut prev = &seg.a;
        let mut add = |lo: &Point, hi: &Point| {
            debug_assert!(lo < hi);
            let entry = groups
                .entry((lo.clone(), hi.clone()))
                .or_insert([0; MAX_OPS]);
            entry[seg.op] += seg.dir;
        };
        for cut in pieces.iter() {
            debug_assert!(&seg.a < cut && cut < &seg.b);
            add(prev, cut);
            prev = cut;
        }
        add(prev, &seg.b);
    }

    groups
        .into_iter()
        .filter(|(_, cover)| cover.iter().any(|&c| c != 0))
        .map(|((a, b), cover)| Group { a, b, cover })
        .collect()
}

/// Records every point where the interiors of `s` and `t` meet as a cut on
/// the segment whose interior contains it.
fn intersect_pair(s: &InputSeg, t: &InputSeg, cuts: &mut [Vec<Point>], si: usize, ti: usize) {
    let o1 = orient(&s.a, &s.b, &t.a);
    let o2 = orient(&s.a, &s.b, &t.b);
    let o3 = orient(&t.a, &t.b, &s.a);
    let o4 = orient(&t.a, &t.b, &s.b);

    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        // Same supporting line: cut each segment at the other's interior
        // endpoints so overlapping parts become identical pieces.
        for p in [&t.a, &t.b] {
            if strictly_inside_collinear(p, &s.a, &s.b) {
                cuts[si].push(p.clone());
            }
        }
        for p in [&s.a, &s.b] {
            if strictly_inside_collinear(p, &t.a, &t.b) {
                cuts[ti].push(p.clone());
            }
        }
        return;
    }

    let mut touched = false;
    if o1 == Orientation::Collinear && strictly_inside_collinear(&t.a, &s.a, &s.b) {
        cuts[si].push(t.a.clone());
        touched = true;
    }
    if o2 == Orientation::Collinear && strictly_inside_collinear(&t.b, &s.a, &s.b) {
        cuts[si].push(t.b.clone());
        touched = true;
    }
    if o3 == Orientation::Collinear && strictly_inside_collinear(&s.a, &t.a, &t.b) {
        cuts[ti].push(s.a.clone());
        touched = true;
    }
    if o4 == Orientation::Collinear && strictly_inside_collinear(&s.b, &t.a, &t.b) {
        cuts[ti].push(s.b.clone());
        touched = true;
    }
    if touched {
        return;
    }

    if o1 != o2
        && o3 != o4
        && o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
    {
        // Proper transversal crossing, strictly interior to both.
        let d = s.b.sub(&s.a);
        let r = t.b.sub(&t.a);
        let denom = d.cross(&r);
        debug_assert!(!num_traits::Zero::is_zero(&denom));
        let u = t.a.sub(&s.a).cross(&r) / denom;
        let p = s.a.add(&d.scale(&u));
        cuts[si].push(p.clone());
        cuts[ti].push(p);
    }
}

/// For `p` known to lie on the line of `ab`: strictly between the endpoints?
fn strictly_inside_collinear(p: &Point, a: &Point, b: &Point) -> bool {
    debug_assert!(a < b);
    a < p && p < b && orient(a, b, p) == Orientation::Collinear
}
