use super::point::{sq_dist_point_segment, Point};
use super::ring::{segments_touch, Ring, RingLocation};
use crate::error::{Error, Result};
use crate::numeric::{rat_int, Rational};
use num_traits::Zero;

/// One connected piece of a region: a counterclockwise outer boundary with
/// clockwise holes strictly inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub outer: Ring,
    pub holes: Vec<Ring>,
}

/// A closed, bounded polygonal point set: zero or more faces with pairwise
/// disjoint interiors. Faces may touch at isolated boundary points (overlay
/// output); overlapping interiors are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Region {
    faces: Vec<Face>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointLocation {
    Inside,
    Boundary,
    Outside,
}

impl Region {
    pub fn empty() -> Self {
        Region { faces: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Builds a region from faces, normalizing orientations and start
    /// vertices, and validating all invariants.
    pub fn new(faces: Vec<Face>) -> Result<Self> {
        let mut region = Region { faces };
        region.normalize();
        region.validate()?;
        Ok(region)
    }

    /// A single face without holes.
    pub fn from_ring(outer: Ring) -> Result<Self> {
        Region::new(vec![Face {
            outer,
            holes: Vec::new(),
        }])
    }

    /// Axis-aligned rectangle, a frequent test fixture.
    pub fn rect(x0: i64, y0: i64, x1: i64, y1: i64) -> Self {
        let ring = Ring::new(vec![
            Point::from_i64(x0, y0),
            Point::from_i64(x1, y0),
            Point::from_i64(x1, y1),
            Point::from_i64(x0, y1),
        ])
        .expect("rect ring");
        Region::from_ring(ring).expect("rect region")
    }

    pub(crate) fn from_faces_unchecked(mut faces: Vec<Face>) -> Self {
        let mut region = Region {
            faces: std::mem::take(&mut faces),
        };
        region.normalize();
        region
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.faces
            .iter()
            .map(|f| f.outer.len() + f.holes.iter().map(Ring::len).sum::<usize>())
            .sum()
    }

    /// Twice the enclosed area.
    pub fn area2(&self) -> Rational {
        let mut total = Rational::zero();
        for f in &self.faces {
            total += f.outer.signed_area2();
            for h in &f.holes {
                total += h.signed_area2(); // holes are clockwise, negative
            }
        }
        total
    }

    pub fn bbox(&self) -> Option<(Point, Point)> {
        let mut it = self.faces.iter();
        let first = it.next()?;
        let (mut min, mut max) = first.outer.bbox();
        for f in it {
            let (lo, hi) = f.outer.bbox();
            if lo.x < min.x {
                min.x = lo.x;
            }
            if lo.y < min.y {
                min.y = lo.y;
            }
            if hi.x > max.x {
                max.x = hi.x;
            }
            if hi.y > max.y {
                max.y = hi.y;
            }
        }
        Some((min, max))
    }

    /// All boundary rings with their stored orientation (outer ccw, holes cw).
    pub fn rings(&self) -> impl Iterator<Item = &Ring> {
        self.faces
            .iter()
            .flat_map(|f| std::iter::once(&f.outer).chain(f.holes.iter()))
    }

    /// Canonical form: ccw outers, cw holes, rings started at their
    /// lexicographic minimum, holes and faces sorted by start vertex.
    pub fn normalize(&mut self) {
        for f in &mut self.faces {
            if !f.outer.is_ccw() {
                f.outer = f.outer.reversed();
            }
            f.outer.normalize_start();
            for h in &mut f.holes {
                if h.is_ccw() {
                    *h = h.reversed();
                }
                h.normalize_start();
            }
            f.holes
                .sort_by(|a, b| a.vertices()[0].cmp(&b.vertices()[0]));
        }
        self.faces
            .sort_by(|a, b| a.outer.vertices()[0].cmp(&b.outer.vertices()[0]));
    }

    pub fn validate(&self) -> Result<()> {
        for f in &self.faces {
            f.outer.validate()?;
            if !f.outer.is_ccw() {
                return Err(Error::InvalidRegion("outer ring not counterclockwise".into()));
            }
            for h in &f.holes {
                h.validate()?;
                if h.is_ccw() {
                    return Err(Error::InvalidRegion("hole not clockwise".into()));
                }
                match f.outer.locate_point(&h.vertices()[0]) {
                    RingLocation::Inside => {}
                    _ => {
                        return Err(Error::InvalidRegion(
                            "hole not strictly inside its outer ring".into(),
                        ))
                    }
                }
            }
            // Rings of one face must not cross each other.
            let rings: Vec<&Ring> = std::iter::once(&f.outer).chain(f.holes.iter()).collect();
            for i in 0..rings.len() {
                for j in i + 1..rings.len() {
                    if rings_cross(rings[i], rings[j])? {
                        return Err(Error::InvalidRegion(
                            "rings of one face intersect".into(),
                        ));
                    }
                }
            }
            for (i, h) in f.holes.iter().enumerate() {
                for h2 in &f.holes[i + 1..] {
                    if h.locate_point(&h2.vertices()[0]) == RingLocation::Inside
                        || h2.locate_point(&h.vertices()[0]) == RingLocation::Inside
                    {
                        return Err(Error::InvalidRegion("nested holes".into()));
                    }
                }
            }
        }
        // Faces must have disjoint interiors; touching at points is allowed,
        // which the representative-point test captures once edges do not
        // properly cross.
        for i in 0..self.faces.len() {
            for j in i + 1..self.faces.len() {
                let a = &self.faces[i];
                let b = &self.faces[j];
                if rings_cross(&a.outer, &b.outer)? {
                    return Err(Error::InvalidRegion("faces intersect".into()));
                }
                let pa = a.outer.edge(0);
                let mid_a = pa.0.midpoint(pa.1);
                let pb = b.outer.edge(0);
                let mid_b = pb.0.midpoint(pb.1);
                if face_contains(b, &mid_a) == PointLocation::Inside
                    || face_contains(a, &mid_b) == PointLocation::Inside
                {
                    return Err(Error::InvalidRegion("face inside another face".into()));
                }
            }
        }
        Ok(())
    }

    /// Exact classification of a point against the closed set.
    pub fn locate_point(&self, p: &Point) -> PointLocation {
        let mut inside = false;
        for f in &self.faces {
            match face_contains(f, p) {
                PointLocation::Boundary => return PointLocation::Boundary,
                PointLocation::Inside => inside = true,
                PointLocation::Outside => {}
            }
        }
        if inside {
            PointLocation::Inside
        } else {
            PointLocation::Outside
        }
    }

    /// Exact squared Euclidean distance from `p` to the region; zero when the
    /// point belongs to the closed set.
    pub fn sq_dist_point(&self, p: &Point) -> Result<Rational> {
        if self.is_empty() {
            return Err(Error::EmptyRegion);
        }
        if self.locate_point(p) != PointLocation::Outside {
            return Ok(Rational::zero());
        }
        let mut best: Option<Rational> = None;
        for ring in self.rings() {
            for (a, b) in ring.edges() {
                let d = sq_dist_point_segment(p, a, b);
                best = Some(match best {
                    None => d,
                    Some(cur) => {
                        if d < cur {
                            d
                        } else {
                            cur
                        }
                    }
                });
            }
        }
        Ok(best.unwrap())
    }

    /// Translates the whole region by a vector.
    pub fn translate(&self, v: &Point) -> Region {
        let faces = self
            .faces
            .iter()
            .map(|f| Face {
                outer: Ring::new_unchecked(f.outer.vertices().iter().map(|p| p.add(v)).collect()),
                holes: f
                    .holes
                    .iter()
                    .map(|h| Ring::new_unchecked(h.vertices().iter().map(|p| p.add(v)).collect()))
                    .collect(),
            })
            .collect();
        Region::from_faces_unchecked(faces)
    }
}

fn face_contains(f: &Face, p: &Point) -> PointLocation {
    match f.outer.locate_point(p) {
        RingLocation::Outside => return PointLocation::Outside,
        RingLocation::Boundary => return PointLocation::Boundary,
        RingLocation::Inside => {}
    }
    for h in &f.holes {
        match h.locate_point(p) {
            RingLocation::Inside => return PointLocation::Outside,
            RingLocation::Boundary => return PointLocation::Boundary,
            RingLocation::Outside => {}
        }
    }
    PointLocation::Inside
}

/// Whether boundaries of two rings share any point (crossing or touching).
fn rings_cross(a: &Ring, b: &Ring) -> Result<bool> {
    let (alo, ahi) = a.bbox();
    let (blo, bhi) = b.bbox();
    if alo.x > bhi.x || blo.x > ahi.x || alo.y > bhi.y || blo.y > ahi.y {
        return Ok(false);
    }
    for (a1, b1) in a.edges() {
        for (a2, b2) in b.edges() {
            if segments_touch(a1, b1, a2, b2) {
                // Touching at a single shared vertex is tolerated (overlay
                // regularization can emit it); proper crossings are not.
                if !(shared_endpoint_only(a1, b1, a2, b2)) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn shared_endpoint_only(a1: &Point, b1: &Point, a2: &Point, b2: &Point) -> bool {
    use super::ring::on_segment;
    let ends = [(a1, true), (b1, true), (a2, false), (b2, false)];
    // Every contact point must be an endpoint of both segments.
    for (p, of_first) in ends {
        let on_other = if of_first {
            on_segment(p, a2, b2)
        } else {
            on_segment(p, a1, b1)
        };
        if on_other {
            let is_shared = p == a2 || p == b2 || p == a1 || p == b1;
            let is_endpoint_of_other = if of_first {
                p == a2 || p == b2
            } else {
                p == a1 || p == b1
            };
            if !(is_shared && is_endpoint_of_other) {
                return false;
            }
        }
    }
    // No proper interior crossing: if neither endpoint lies on the other
    // segment yet they touch, it must have been a transversal crossing.
    use super::point::{orient, Orientation};
    let o1 = orient(a1, b1, a2);
    let o2 = orient(a1, b1, b2);
    let o3 = orient(a2, b2, a1);
    let o4 = orient(a2, b2, b1);
    if o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
    {
        return false; // transversal proper crossing
    }
    true
}

/// A bounded axis-aligned stand-in for the plane, used when complements are
/// taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub min: Point,
    pub max: Point,
}

impl Frame {
    pub fn new(min: Point, max: Point) -> Result<Self> {
        if min.x >= max.x || min.y >= max.y {
            return Err(Error::InvalidRegion("frame min must be below max".into()));
        }
        Ok(Frame { min, max })
    }

    /// The frame of a region's bounding box expanded by `margin` on every
    /// side.
    pub fn around(region: &Region, margin: &Rational) -> Result<Self> {
        let (lo, hi) = region.bbox().ok_or(Error::EmptyRegion)?;
        Frame::new(
            Point::new(&lo.x - margin, &lo.y - margin),
            Point::new(&hi.x + margin, &hi.y + margin),
        )
    }

    pub fn to_region(&self) -> Region {
        let ring = Ring::new(vec![
            self.min.clone(),
            Point::new(self.max.x.clone(), self.min.y.clone()),
            self.max.clone(),
            Point::new(self.min.x.clone(), self.max.y.clone()),
        ])
        .expect("frame ring");
        Region::from_ring(ring).expect("frame region")
    }

    /// Whether every point of `r` is strictly inside the frame.
    pub fn strictly_contains(&self, r: &Region) -> bool {
        match r.bbox() {
            None => true,
            Some((lo, hi)) => {
                lo.x > self.min.x && lo.y > self.min.y && hi.x < self.max.x && hi.y < self.max.y
            }
        }
    }

    pub fn expanded(&self, margin: &Rational) -> Frame {
        Frame {
            min: Point::new(&self.min.x - margin, &self.min.y - margin),
            max: Point::new(&self.max.x + margin, &self.max.y + margin),
        }
    }

    pub fn width(&self) -> Rational {
        &self.max.x - &self.min.x
    }

    pub fn height(&self) -> Rational {
        &self.max.y - &self.min.y
    }

    /// Half of the bounding-box perimeter sum, a certified upper bound for
    /// the radius of the smallest enclosing circle of anything inside.
    pub fn enclosing_radius_bound(&self) -> Rational {
        (self.width() + self.height()) / rat_int(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn unit_square_queries() {
        let r = Region::rect(0, 0, 1, 1);
        assert_eq!(
            r.locate_point(&Point::new(rat(1, 2), rat(1, 2))),
            PointLocation::Inside
        );
        assert_eq!(
            r.locate_point(&Point::new(rat_int(1), rat(1, 2))),
            PointLocation::Boundary
        );
        assert_eq!(
            r.locate_point(&Point::from_i64(2, 0)),
            PointLocation::Outside
        );
    }

    #[test]
    fn sq_dist_examples() {
        let r = Region::rect(0, 0, 1, 1);
        assert_eq!(r.sq_dist_point(&Point::from_i64(3, 0)).unwrap(), rat_int(4));
        assert_eq!(r.sq_dist_point(&Point::from_i64(2, 2)).unwrap(), rat_int(2));
        assert_eq!(
            r.sq_dist_point(&Point::new(rat(1, 2), rat(1, 2))).unwrap(),
            Rational::zero()
        );
        assert!(Region::empty().sq_dist_point(&Point::from_i64(0, 0)).is_err());
    }

    #[test]
    fn region_with_hole_validates() {
        let outer = Ring::new(vec![
            Point::from_i64(0, 0),
            Point::from_i64(4, 0),
            Point::from_i64(4, 4),
            Point::from_i64(0, 4),
        ])
        .unwrap();
        let hole = Ring::new(vec![
            Point::from_i64(1, 1),
            Point::from_i64(3, 1),
            Point::from_i64(3, 3),
            Point::from_i64(1, 3),
        ])
        .unwrap();
        let region = Region::new(vec![Face {
            outer,
            holes: vec![hole],
        }])
        .unwrap();
        assert_eq!(region.area2(), rat_int(2 * 16 - 2 * 4));
        assert_eq!(
            region.locate_point(&Point::from_i64(2, 2)),
            PointLocation::Outside
        );
        // Hole boundaries belong to the closed set.
        assert_eq!(
            region.locate_point(&Point::from_i64(1, 2)),
            PointLocation::Boundary
        );
    }

    #[test]
    fn overlapping_faces_rejected() {
        let a = Ring::new(vec![
            Point::from_i64(0, 0),
            Point::from_i64(2, 0),
            Point::from_i64(2, 2),
            Point::from_i64(0, 2),
        ])
        .unwrap();
        let b = Ring::new(vec![
            Point::from_i64(1, 1),
            Point::from_i64(3, 1),
            Point::from_i64(3, 3),
            Point::from_i64(1, 3),
        ])
        .unwrap();
        let res = Region::new(vec![
            Face {
                outer: a,
                holes: vec![],
            },
            Face {
                outer: b,
                holes: vec![],
            },
        ]);
        assert!(res.is_err());
    }

    #[test]
    fn frame_basics() {
        let r = Region::rect(0, 0, 10, 10);
        let f = Frame::around(&r, &rat_int(2)).unwrap();
        assert!(f.strictly_contains(&r));
        assert!(!f.strictly_contains(&Region::rect(-5, 0, 1, 1)));
        assert_eq!(f.to_region().area2(), rat_int(2 * 14 * 14));
    }
}
