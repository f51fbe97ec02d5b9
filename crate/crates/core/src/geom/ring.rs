use super::point::{orient, Orientation, Point};
use crate::error::{Error, Result};
use crate::numeric::Rational;
use num_traits::{Signed, Zero};

/// A simple closed polygonal chain. The vertex list is implicitly closed;
/// consecutive duplicates and self-intersections are rejected at
/// construction. Orientation is not constrained here: outer boundaries are
/// counterclockwise and holes clockwise by [`super::Region`] convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    vertices: Vec<Point>,
}

impl Ring {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let ring = Ring { vertices };
        ring.validate()?;
        Ok(ring)
    }

    /// Builds without the simplicity check; used by overlay output assembly
    /// which guarantees simple rings by construction.
    pub(crate) fn new_unchecked(vertices: Vec<Point>) -> Self {
        Ring { vertices }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        if n < 3 {
            return Err(Error::InvalidRing {
                reason: format!("needs at least 3 vertices, got {n}"),
                vertex: None,
            });
        }
        for i in 0..n {
            if self.vertices[i] == self.vertices[(i + 1) % n] {
                return Err(Error::InvalidRing {
                    reason: "consecutive equal vertices".into(),
                    vertex: Some(i),
                });
            }
        }
        self.check_simple()?;
        if self.signed_area2().is_zero() {
            return Err(Error::InvalidRing {
                reason: "zero area".into(),
                vertex: None,
            });
        }
        Ok(())
    }

    /// Exact simplicity test. Edges are tested pairwise with a sweep over
    /// x-intervals so that well-behaved rings stay near linear.
    fn check_simple(&self) -> Result<()> {
        let n = self.vertices.len();
        // Spikes: consecutive edges folding back over each other.
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            let c = &self.vertices[(i + 2) % n];
            if orient(a, b, c) == Orientation::Collinear && b.sub(a).dot(&c.sub(b)).is_negative() {
                return Err(Error::InvalidRing {
                    reason: "boundary folds back on itself".into(),
                    vertex: Some((i + 1) % n),
                });
            }
        }
        #[derive(Clone)]
        struct Edge {
            idx: usize,
            min_x: Rational,
            max_x: Rational,
            min_y: Rational,
            max_y: Rational,
        }
        let mut edges: Vec<Edge> = (0..n)
            .map(|i| {
                let a = &self.vertices[i];
                let b = &self.vertices[(i + 1) % n];
                Edge {
                    idx: i,
                    min_x: a.x.clone().min(b.x.clone()),
                    max_x: a.x.clone().max(b.x.clone()),
                    min_y: a.y.clone().min(b.y.clone()),
                    max_y: a.y.clone().max(b.y.clone()),
                }
            })
            .collect();
        edges.sort_by(|p, q| p.min_x.cmp(&q.min_x));
        let mut active: Vec<Edge> = Vec::new();
        for e in &edges {
            active.retain(|f| f.max_x >= e.min_x);
            for f in &active {
                if f.min_y > e.max_y || e.min_y > f.max_y {
                    continue;
                }
                let (i, j) = (e.idx.min(f.idx), e.idx.max(f.idx));
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let (a1, b1) = self.edge(i);
                let (a2, b2) = self.edge(j);
                if adjacent {
                    // Sharing one endpoint is fine; anything more was caught
                    // by the spike test above or is a real overlap.
                    continue;
                }
                if segments_touch(a1, b1, a2, b2) {
                    return Err(Error::InvalidRing {
                        reason: format!("edges {i} and {j} intersect"),
                        vertex: Some(j),
                    });
                }
            }
            active.push(e.clone());
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge(&self, i: usize) -> (&Point, &Point) {
        let n = self.vertices.len();
        (&self.vertices[i], &self.vertices[(i + 1) % n])
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        (0..self.vertices.len()).map(move |i| self.edge(i))
    }

    /// Twice the signed area; positive for counterclockwise rings.
    pub fn signed_area2(&self) -> Rational {
        let n = self.vertices.len();
        let mut sum = Rational::zero();
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            sum += a.cross(b);
        }
        sum
    }

    pub fn is_ccw(&self) -> bool {
        self.signed_area2().is_positive()
    }

    pub fn reversed(&self) -> Ring {
        let mut v = self.vertices.clone();
        v.reverse();
        Ring { vertices: v }
    }

    pub fn bbox(&self) -> (Point, Point) {
        let mut min = self.vertices[0].clone();
        let mut max = self.vertices[0].clone();
        for p in &self.vertices[1..] {
            if p.x < min.x {
                min.x = p.x.clone();
            }
            if p.y < min.y {
                min.y = p.y.clone();
            }
            if p.x > max.x {
                max.x = p.x.clone();
            }
            if p.y > max.y {
                max.y = p.y.clone();
            }
        }
        (min, max)
    }

    /// Rotates the vertex list so it starts at the lexicographically
    /// smallest vertex.
    pub fn normalize_start(&mut self) {
        let start = self
            .vertices
            .iter()
            .enumerate()
            .min_by(|(_, p), (_, q)| p.cmp(q))
            .map(|(i, _)| i)
            .unwrap_or(0);
        self.vertices.rotate_left(start);
    }

    /// Drops vertices where the boundary goes straight through.
    pub fn simplified(&self) -> Ring {
        let n = self.vertices.len();
        let mut keep = Vec::with_capacity(n);
        for i in 0..n {
            let prev = &self.vertices[(i + n - 1) % n];
            let cur = &self.vertices[i];
            let next = &self.vertices[(i + 1) % n];
            if orient(prev, cur, next) != Orientation::Collinear {
                keep.push(cur.clone());
            }
        }
        if keep.len() < 3 {
            self.clone()
        } else {
            Ring { vertices: keep }
        }
    }

    /// Where `p` sits relative to the closed curve, ignoring orientation.
    pub fn locate_point(&self, p: &Point) -> RingLocation {
        let n = self.vertices.len();
        let mut crossings = 0i64;
        for i in 0..n {
            let (a, b) = self.edge(i);
            if on_segment(p, a, b) {
                return RingLocation::Boundary;
            }
            // Downward ray from p, half-open rule on x.
            let (lo, hi) = if a.x <= b.x { (a, b) } else { (b, a) };
            if lo.x <= p.x && p.x < hi.x {
                // Edge passes strictly below p at x = p.x?
                if orient(lo, hi, p) == Orientation::Ccw {
                    crossings += 1;
                }
            }
        }
        if crossings % 2 == 1 {
            RingLocation::Inside
        } else {
            RingLocation::Outside
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingLocation {
    Inside,
    Boundary,
    Outside,
}

pub(crate) fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orient(a, b, p) != Orientation::Collinear {
        return false;
    }
    let min_x = if a.x <= b.x { &a.x } else { &b.x };
    let max_x = if a.x <= b.x { &b.x } else { &a.x };
    let min_y = if a.y <= b.y { &a.y } else { &b.y };
    let max_y = if a.y <= b.y { &b.y } else { &a.y };
    &p.x >= min_x && &p.x <= max_x && &p.y >= min_y && &p.y <= max_y
}

/// Whether two closed segments share any point.
pub(crate) fn segments_touch(a1: &Point, b1: &Point, a2: &Point, b2: &Point) -> bool {
    let o1 = orient(a1, b1, a2);
    let o2 = orient(a1, b1, b2);
    let o3 = orient(a2, b2, a1);
    let o4 = orient(a2, b2, b1);
    if o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
    {
        return o1 != o2 && o3 != o4;
    }
    on_segment(a2, a1, b1) || on_segment(b2, a1, b1) || on_segment(a1, a2, b2) || on_segment(b1, a2, b2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Vec<Point> {
        vec![
            Point::from_i64(0, 0),
            Point::from_i64(1, 0),
            Point::from_i64(1, 1),
            Point::from_i64(0, 1),
        ]
    }

    #[test]
    fn valid_square() {
        let r = Ring::new(square()).unwrap();
        assert!(r.is_ccw());
        assert_eq!(r.signed_area2(), crate::numeric::rat_int(2));
    }

    #[test]
    fn rejects_self_intersection() {
        let bowtie = vec![
            Point::from_i64(0, 0),
            Point::from_i64(2, 2),
            Point::from_i64(2, 0),
            Point::from_i64(0, 2),
        ];
        let err = Ring::new(bowtie).unwrap_err();
        match err {
            Error::InvalidRing { vertex, .. } => assert!(vertex.is_some()),
            e => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn rejects_duplicate_and_degenerate() {
        assert!(Ring::new(vec![Point::from_i64(0, 0), Point::from_i64(1, 0)]).is_err());
        let dup = vec![
            Point::from_i64(0, 0),
            Point::from_i64(0, 0),
            Point::from_i64(1, 1),
        ];
        assert!(Ring::new(dup).is_err());
        let flat = vec![
            Point::from_i64(0, 0),
            Point::from_i64(1, 0),
            Point::from_i64(2, 0),
        ];
        assert!(Ring::new(flat).is_err());
    }

    #[test]
    fn point_location() {
        let r = Ring::new(square()).unwrap();
        assert_eq!(
            r.locate_point(&Point::new(
                crate::numeric::rat(1, 2),
                crate::numeric::rat(1, 2)
            )),
            RingLocation::Inside
        );
        assert_eq!(
            r.locate_point(&Point::new(
                crate::numeric::rat_int(1),
                crate::numeric::rat(1, 2)
            )),
            RingLocation::Boundary
        );
        assert_eq!(
            r.locate_point(&Point::from_i64(2, 0)),
            RingLocation::Outside
        );
        // Vertex-grazing ray cases.
        assert_eq!(
            r.locate_point(&Point::from_i64(0, 2)),
            RingLocation::Outside
        );
    }

    #[test]
    fn normalization_and_simplify() {
        let mut r = Ring::new(vec![
            Point::from_i64(1, 1),
            Point::from_i64(0, 1),
            Point::from_i64(0, 0),
            Point::from_i64(1, 0),
        ])
        .unwrap();
        r.normalize_start();
        assert_eq!(r.vertices()[0], Point::from_i64(0, 0));

        let collinear = Ring::new(vec![
            Point::from_i64(0, 0),
            Point::from_i64(1, 0),
            Point::from_i64(2, 0),
            Point::from_i64(2, 2),
            Point::from_i64(0, 2),
        ])
        .unwrap();
        assert_eq!(collinear.simplified().len(), 4);
    }
}
