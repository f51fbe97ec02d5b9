//! Minkowski sums with convex polygons, and the offset/inset operators
//! parameterized by annulus polygons.
//!
//! `minkowski_sum_convex` follows the decomposition route: triangulate,
//! sum each convex piece, union the results. The offset and inset
//! operators instead exploit that every disk polygon contains the origin:
//! `R + D = R  U  (boundary(R) + D)` and the eroded set is `R` minus the
//! boundary band, which sidesteps triangulating large inputs entirely.
//! Both routes produce the same set; tests cross-check them.

use crate::disk::AnnulusPolygon;
use crate::error::{Error, Result};
use crate::geom::{orient, sq_dist_point_segment, Frame, HalfPlane, Orientation, Point, Region, Ring};
use crate::numeric::Rational;
use crate::overlay;
use num_traits::Signed;
use rayon::prelude::*;

/// Splits a region into convex pieces (triangles) with pairwise disjoint
/// interiors whose union is the region. Holes are bridged into their outer
/// ring before ear clipping.
pub fn convex_decompose(region: &Region) -> Result<Vec<Ring>> {
    let mut pieces = Vec::new();
    for face in region.faces() {
        let merged = bridge_holes(face)?;
        ear_clip(&merged, &mut pieces)?;
    }
    Ok(pieces)
}

/// Minkowski sum of a region with a convex counterclockwise polygon,
/// computed as the union of per-piece convex sums.
pub fn minkowski_sum_convex(region: &Region, convex: &Ring) -> Result<Region> {
    validate_convex(convex)?;
    if region.is_empty() {
        return Ok(Region::empty());
    }
    let pieces = convex_decompose(region)?;
    let sums: Vec<Region> = pieces
        .par_iter()
        .map(|piece| {
            let ring = convex_sum_cycles(piece.vertices(), convex.vertices());
            Region::from_faces_unchecked(vec![crate::geom::Face {
                outer: ring,
                holes: Vec::new(),
            }])
        })
        .collect();
    Ok(overlay::union_all(&sums))
}

/// Dilation by a disk polygon: `R + D`. Since `D` contains the origin this
/// is `R` together with the band swept along its boundary; for convex
/// input the sum collapses to one rotating edge merge.
pub fn offset_hat(region: &Region, disk: &AnnulusPolygon) -> Region {
    if region.is_empty() {
        return Region::empty();
    }
    if let Some(outer) = convex_face(region) {
        let ring = convex_sum_cycles(outer.vertices(), disk.vertices());
        return Region::from_faces_unchecked(vec![crate::geom::Face {
            outer: ring,
            holes: Vec::new(),
        }]);
    }
    let mut parts = edge_bands(region, disk);
    parts.push(region.clone());
    overlay::union_all(&parts)
}

/// The single convex hole-free face of a region, if that is its shape.
fn convex_face(region: &Region) -> Option<&Ring> {
    if region.faces().len() != 1 {
        return None;
    }
    let face = &region.faces()[0];
    if !face.holes.is_empty() {
        return None;
    }
    let ring = &face.outer;
    let n = ring.len();
    for i in 0..n {
        let a = &ring.vertices()[i];
        let b = &ring.vertices()[(i + 1) % n];
        let c = &ring.vertices()[(i + 2) % n];
        if orient(a, b, c) != Orientation::Ccw {
            return None;
        }
    }
    Some(ring)
}

/// Erosion by a disk polygon within a frame: the clamped complement of the
/// dilated clamped complement. The frame must leave at least the disk
/// radius of margin around the region so clamping cannot distort the
/// result; the band identity then reduces the whole construction to
/// carving the boundary band out of `R`.
pub fn inset_hat(region: &Region, disk: &AnnulusPolygon, frame: &Frame) -> Result<Region> {
    if region.is_empty() {
        return Ok(Region::empty());
    }
    if !frame.strictly_contains(region) {
        return Err(Error::FrameTooSmall);
    }
    let (lo, hi) = region.bbox().expect("non-empty region");
    let b = disk.spec().outer();
    if &(&lo.x - &frame.min.x) <= b
        || &(&lo.y - &frame.min.y) <= b
        || &(&frame.max.x - &hi.x) <= b
        || &(&frame.max.y - &hi.y) <= b
    {
        return Err(Error::FrameTooSmall);
    }
    if let Some(outer) = convex_face(region) {
        return Ok(convex_inset_by_disk(outer, disk));
    }
    let bands = edge_bands(region, disk);
    let band_union = overlay::union_all(&bands);
    Ok(overlay::difference(region, &band_union))
}

/// Erosion of a convex polygon by a centrally symmetric disk polygon:
/// every edge line moves inward by the disk's support in the outward
/// normal direction, and the result is the (rational) intersection of the
/// shifted halfplanes. Carving the boundary band out of the polygon gives
/// the same set because the disk's symmetry makes reach and support agree
/// on both sides of every edge line.
fn convex_inset_by_disk(outer: &Ring, disk: &AnnulusPolygon) -> Region {
    let halfplanes: Vec<HalfPlane> = outer
        .edges()
        .map(|(a, b)| {
            let base = HalfPlane::from_edge(a, b);
            let support = disk
                .vertices()
                .iter()
                .map(|d| base.n.dot(d))
                .max()
                .expect("disk has vertices");
            HalfPlane::new(base.n, &base.c - &support)
        })
        .collect();
    match crate::geom::intersect_halfplanes(&halfplanes) {
        None => Region::empty(),
        Some(pts) => Region::from_faces_unchecked(vec![crate::geom::Face {
            outer: Ring::new_unchecked(pts),
            holes: Vec::new(),
        }]),
    }
}

/// The convex regions swept by each boundary edge: `e + D` for every edge
/// `e` of every ring.
fn edge_bands(region: &Region, disk: &AnnulusPolygon) -> Vec<Region> {
    let edges: Vec<(Point, Point)> = region
        .rings()
        .flat_map(|ring| {
            ring.edges()
                .map(|(a, b)| (a.clone(), b.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    edges
        .par_iter()
        .map(|(a, b)| {
            let seg = [a.clone(), b.clone()];
            let ring = convex_sum_cycles(&seg, disk.vertices());
            Region::from_faces_unchecked(vec![crate::geom::Face {
                outer: ring,
                holes: Vec::new(),
            }])
        })
        .collect()
}

fn validate_convex(ring: &Ring) -> Result<()> {
    let n = ring.len();
    if n < 3 {
        return Err(Error::NotConvex(format!("{n} vertices")));
    }
    if !ring.is_ccw() {
        return Err(Error::NotConvex("clockwise".into()));
    }
    for i in 0..n {
        let a = &ring.vertices()[i];
        let b = &ring.vertices()[(i + 1) % n];
        let c = &ring.vertices()[(i + 2) % n];
        if orient(a, b, c) == Orientation::Cw {
            return Err(Error::NotConvex(format!("reflex turn at vertex {}", (i + 1) % n)));
        }
    }
    Ok(())
}

/// Minkowski sum of two convex vertex cycles by the rotating edge merge.
/// A two-point cycle stands for a segment. Both inputs counterclockwise;
/// the output starts at the bottom-most point and is free of collinear
/// runs.
fn convex_sum_cycles(a: &[Point], b: &[Point]) -> Ring {
    let a = rotate_to_bottom(a);
    let b = rotate_to_bottom(b);
    let edges_a = cycle_edges(&a);
    let edges_b = cycle_edges(&b);

    let mut vertices = Vec::with_capacity(edges_a.len() + edges_b.len());
    let mut cur = a[0].add(&b[0]);
    let (mut i, mut j) = (0usize, 0usize);
    while i < edges_a.len() || j < edges_b.len() {
        let step = if i >= edges_a.len() {
            let v = edges_b[j].clone();
            j += 1;
            v
        } else if j >= edges_b.len() {
            let v = edges_a[i].clone();
            i += 1;
            v
        } else {
            match crate::geom::cmp_direction(&edges_a[i], &edges_b[j]) {
                std::cmp::Ordering::Less => {
                    let v = edges_a[i].clone();
                    i += 1;
                    v
                }
                std::cmp::Ordering::Greater => {
                    let v = edges_b[j].clone();
                    j += 1;
                    v
                }
                std::cmp::Ordering::Equal => {
                    let v = edges_a[i].add(&edges_b[j]);
                    i += 1;
                    j += 1;
                    v
                }
            }
        };
        vertices.push(cur.clone());
        cur = cur.add(&step);
    }
    debug_assert_eq!(cur, vertices[0], "edge merge did not close");
    Ring::new_unchecked(vertices).simplified()
}

/// Rotates a vertex cycle to start at its bottom-most (then left-most)
/// point, where a counterclockwise traversal's edge directions increase
/// monotonically without wrapping.
fn rotate_to_bottom(pts: &[Point]) -> Vec<Point> {
    let start = pts
        .iter()
        .enumerate()
        .min_by(|(_, p), (_, q)| p.y.cmp(&q.y).then_with(|| p.x.cmp(&q.x)))
        .map(|(i, _)| i)
        .unwrap();
    let mut out = Vec::with_capacity(pts.len());
    out.extend_from_slice(&pts[start..]);
    out.extend_from_slice(&pts[..start]);
    out
}

/// Edge vectors of a cycle; a two-point cycle yields the segment vector and
/// its reverse.
fn cycle_edges(pts: &[Point]) -> Vec<Point> {
    let n = pts.len();
    (0..n).map(|i| pts[(i + 1) % n].sub(&pts[i])).collect()
}

/// Splices every hole of a face into its outer ring along a mutually
/// visible pair, yielding one weakly simple counterclockwise cycle.
fn bridge_holes(face: &crate::geom::Face) -> Result<Vec<Point>> {
    let mut polygon: Vec<Point> = face.outer.vertices().to_vec();
    // Holes with larger maximal x first: each bridge shoots rightward and
    // may only hit the outer ring or an already spliced hole.
    let mut holes: Vec<&Ring> = face.holes.iter().collect();
    let max_x_vertex = |ring: &Ring| -> usize {
        ring.vertices()
            .iter()
            .enumerate()
            .max_by(|(_, p), (_, q)| p.x.cmp(&q.x).then_with(|| p.y.cmp(&q.y)))
            .map(|(i, _)| i)
            .unwrap()
    };
    holes.sort_by(|h1, h2| {
        let p1 = &h1.vertices()[max_x_vertex(h1)];
        let p2 = &h2.vertices()[max_x_vertex(h2)];
        p2.x.cmp(&p1.x)
    });

    for hole in holes {
        let mi = max_x_vertex(hole);
        let m = hole.vertices()[mi].clone();
        let wi = find_bridge_target(&polygon, &m)?;
        // polygon[..=wi], M, hole cycle from mi around, M again, back at wi.
        let mut spliced = Vec::with_capacity(polygon.len() + hole.len() + 2);
        spliced.extend_from_slice(&polygon[..=wi]);
        spliced.push(m.clone());
        let hn = hole.len();
        for k in 1..hn {
            // Holes are stored clockwise, which is the correct traversal
            // sense when walking them as part of the ccw outer cycle.
            spliced.push(hole.vertices()[(mi + k) % hn].clone());
        }
        spliced.push(m.clone());
        spliced.extend_from_slice(&polygon[wi..]);
        polygon = spliced;
    }
    Ok(polygon)
}

/// Index of a polygon vertex visible from `m` (a hole's right-most vertex),
/// found by shooting a ray in +x and falling back to the blocking reflex
/// vertex closest in angle.
fn find_bridge_target(polygon: &[Point], m: &Point) -> Result<usize> {
    let n = polygon.len();
    // Closest intersection of the rightward ray with the polygon.
    let mut best: Option<(Rational, usize)> = None; // (x of intersection, edge idx)
    for i in 0..n {
        let u = &polygon[i];
        let v = &polygon[(i + 1) % n];
        if (u.y <= m.y && m.y < v.y) || (v.y <= m.y && m.y < u.y) {
            let t = (&m.y - &u.y) / (&v.y - &u.y);
            let x = &u.x + (&v.x - &u.x) * t;
            if x > m.x {
                match &best {
                    Some((bx, _)) if *bx <= x => {}
                    _ => best = Some((x, i)),
                }
            }
        }
    }
    let (ix, edge) = best.ok_or_else(|| Error::Defect("hole sees no boundary to its right".into()))?;
    let i_point = Point::new(ix, m.y.clone());
    let u = &polygon[edge];
    let v = &polygon[(edge + 1) % n];
    if &i_point == u {
        return Ok(edge);
    }
    if &i_point == v {
        return Ok((edge + 1) % n);
    }
    // Candidate endpoint of the hit edge with the larger x.
    let k = if u.x > v.x { edge } else { (edge + 1) % n };
    let kp = polygon[k].clone();
    // Reflex vertices inside triangle (m, i, k) block visibility; take the
    // one with the smallest angle to the ray, then closest.
    let mut pick: Option<usize> = None;
    for r in 0..n {
        if polygon[r] == kp || polygon[r] == *m {
            continue;
        }
        let prev = &polygon[(r + n - 1) % n];
        let next = &polygon[(r + 1) % n];
        let reflex = orient(prev, &polygon[r], next) == Orientation::Cw;
        if !reflex {
            continue;
        }
        if in_triangle_closed(&polygon[r], m, &i_point, &kp) {
            pick = match pick {
                None => Some(r),
                Some(cur) => {
                    if angle_then_distance_less(m, &polygon[r], &polygon[cur]) {
                        Some(r)
                    } else {
                        Some(cur)
                    }
                }
            };
        }
    }
    Ok(pick.unwrap_or(k))
}

fn in_triangle_closed(p: &Point, a: &Point, b: &Point, c: &Point) -> bool {
    // Accept either orientation of (a, b, c).
    let (b, c) = if orient(a, b, c) == Orientation::Cw {
        (c, b)
    } else {
        (b, c)
    };
    orient(a, b, p) != Orientation::Cw
        && orient(b, c, p) != Orientation::Cw
        && orient(c, a, p) != Orientation::Cw
}

/// Whether candidate `r` beats `cur`: smaller absolute angle between the
/// rightward ray from `m` and `m->r`, ties by distance.
fn angle_then_distance_less(m: &Point, r: &Point, cur: &Point) -> bool {
    let dr = r.sub(m);
    let dc = cur.sub(m);
    debug_assert!(dr.x.is_positive() && dc.x.is_positive());
    // |dy_r| * dx_c < |dy_c| * dx_r compares tangents of the angles.
    let lhs = dr.y.abs() * &dc.x;
    let rhs = dc.y.abs() * &dr.x;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => dr.norm_sq() < dc.norm_sq(),
    }
}

/// Ear clipping on a weakly simple counterclockwise cycle (bridge vertices
/// may repeat). Emits one triangle per ear into `out`.
fn ear_clip(cycle: &[Point], out: &mut Vec<Ring>) -> Result<()> {
    let n = cycle.len();
    if n < 3 {
        return Err(Error::Defect("degenerate face cycle".into()));
    }
    let mut next: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut prev: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
    let mut alive = n;
    let mut cur = 0usize;
    let mut since_progress = 0usize;

    while alive > 3 {
        let p = prev[cur];
        let q = next[cur];
        let (a, b, c) = (&cycle[p], &cycle[cur], &cycle[q]);
        let clipped = match orient(a, b, c) {
            Orientation::Collinear => true, // straight or fold: zero area, safe to drop
            Orientation::Cw => false,
            Orientation::Ccw => {
                let mut blocked = false;
                let mut r = next[q];
                while r != p {
                    let cand = &cycle[r];
                    let at_corner = cand == a || cand == b || cand == c;
                    if !at_corner
                        && reflex_at(cycle, &prev, &next, r)
                        && in_triangle_closed(cand, a, b, c)
                    {
                        blocked = true;
                        break;
                    }
                    r = next[r];
                }
                if !blocked {
                    out.push(Ring::new_unchecked(vec![a.clone(), b.clone(), c.clone()]));
                }
                !blocked
            }
        };
        if clipped {
            next[p] = q;
            prev[q] = p;
            alive -= 1;
            cur = p;
            since_progress = 0;
        } else {
            cur = q;
            since_progress += 1;
            if since_progress > alive + 1 {
                return Err(Error::Defect("ear clipping stalled".into()));
            }
        }
    }
    let p = prev[cur];
    let q = next[cur];
    if orient(&cycle[p], &cycle[cur], &cycle[q]) == Orientation::Ccw {
        out.push(Ring::new_unchecked(vec![
            cycle[p].clone(),
            cycle[cur].clone(),
            cycle[q].clone(),
        ]));
    }
    Ok(())
}

fn reflex_at(cycle: &[Point], prev: &[usize], next: &[usize], i: usize) -> bool {
    orient(&cycle[prev[i]], &cycle[i], &cycle[next[i]]) != Orientation::Ccw
}

/// Exact test that a convex sum piece stays within distance `bound` of the
/// region (used by tests; kept here so both routes share it).
pub fn within_offset(region: &Region, sum: &Region, bound: &Rational) -> bool {
    let bound_sq = bound * bound;
    for ring in sum.rings() {
        for v in ring.vertices() {
            match region.sq_dist_point(v) {
                Ok(d) if d <= bound_sq => {}
                _ => return false,
            }
        }
    }
    true
}

/// Squared distance from a point to the nearest boundary edge of a region
/// (ignores insideness; helper for sandwich tests).
pub fn boundary_sq_dist(region: &Region, p: &Point) -> Option<Rational> {
    let mut best: Option<Rational> = None;
    for ring in region.rings() {
        for (a, b) in ring.edges() {
            let d = sq_dist_point_segment(p, a, b);
            best = Some(match best {
                None => d,
                Some(cur) => cur.min(d),
            });
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::{annulus_polygon, AnnulusSpec};
    use crate::geom::Face;
    use crate::numeric::{rat, rat_int};
    use num_traits::Zero;

    fn ring_of(coords: &[(i64, i64)]) -> Ring {
        Ring::new(coords.iter().map(|&(x, y)| Point::from_i64(x, y)).collect()).unwrap()
    }

    #[test]
    fn decompose_convex_quad() {
        let region = Region::rect(0, 0, 2, 3);
        let pieces = convex_decompose(&region).unwrap();
        let total: Rational = pieces.iter().map(|r| r.signed_area2()).sum();
        assert_eq!(total, region.area2());
        assert_eq!(pieces.len(), 2); // two triangles
    }

    #[test]
    fn decompose_l_shape() {
        let region = Region::from_ring(ring_of(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]))
            .unwrap();
        let pieces = convex_decompose(&region).unwrap();
        let total: Rational = pieces.iter().map(|r| r.signed_area2()).sum();
        assert_eq!(total, region.area2());
        for p in &pieces {
            assert!(p.is_ccw());
        }
    }

    #[test]
    fn decompose_with_hole() {
        let outer = ring_of(&[(0, 0), (6, 0), (6, 6), (0, 6)]);
        let hole = ring_of(&[(2, 2), (4, 2), (4, 4), (2, 4)]);
        let region = Region::new(vec![Face {
            outer,
            holes: vec![hole],
        }])
        .unwrap();
        let pieces = convex_decompose(&region).unwrap();
        assert!(pieces.len() >= 3);
        let total: Rational = pieces.iter().map(|r| r.signed_area2()).sum();
        assert_eq!(total, region.area2());
    }

    #[test]
    fn sum_of_squares() {
        let a = Region::rect(0, 0, 1, 1);
        let unit = ring_of(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let sum = minkowski_sum_convex(&a, &unit).unwrap();
        assert_eq!(sum, Region::rect(0, 0, 2, 2));
    }

    #[test]
    fn triangle_plus_square_matches_hull_oracle() {
        let tri = Region::from_ring(ring_of(&[(0, 0), (2, 0), (0, 2)])).unwrap();
        let unit = ring_of(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let sum = minkowski_sum_convex(&tri, &unit).unwrap();

        // Hull-of-pairwise-vertex-sums oracle for convex inputs.
        let mut pts = Vec::new();
        for p in tri.faces()[0].outer.vertices() {
            for q in unit.vertices() {
                pts.push(p.add(q));
            }
        }
        let hull = crate::geom::convex_hull(&pts);
        let expected = Region::from_ring(Ring::new(hull).unwrap()).unwrap();
        assert_eq!(sum, expected);
        assert_eq!(sum.faces()[0].outer.len(), 5);
    }

    #[test]
    fn degenerate_summand_rejected() {
        let a = Region::rect(0, 0, 1, 1);
        let seg = Ring::new_unchecked(vec![Point::from_i64(0, 0), Point::from_i64(1, 1)]);
        assert!(minkowski_sum_convex(&a, &seg).is_err());
    }

    #[test]
    fn offset_contains_input_and_matches_decomposition_route() {
        let region = Region::from_ring(ring_of(&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]))
            .unwrap();
        let disk = annulus_polygon(AnnulusSpec::new(rat(3, 4), rat_int(1)).unwrap());
        let fast = offset_hat(&region, &disk);
        assert!(overlay::is_subset(&region, &fast));
        let slow = minkowski_sum_convex(&region, &disk.ring()).unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn offset_of_empty() {
        let disk = annulus_polygon(AnnulusSpec::new(rat(3, 4), rat_int(1)).unwrap());
        assert!(offset_hat(&Region::empty(), &disk).is_empty());
    }

    #[test]
    fn inset_bounds_for_square() {
        let region = Region::rect(0, 0, 10, 10);
        let disk = annulus_polygon(AnnulusSpec::new(rat(3, 4), rat_int(1)).unwrap());
        let frame = Frame::around(&region, &rat_int(3)).unwrap();
        let inset = inset_hat(&region, &disk, &frame).unwrap();
        assert!(!inset.is_empty());
        // Contains the safely eroded square and stays inside the loose one.
        let inner = Region::rect(1, 1, 9, 9);
        assert!(overlay::is_subset(&inner, &inset));
        let outer_ring = Ring::new(vec![
            Point::new(rat(3, 4), rat(3, 4)),
            Point::new(rat(37, 4), rat(3, 4)),
            Point::new(rat(37, 4), rat(37, 4)),
            Point::new(rat(3, 4), rat(37, 4)),
        ])
        .unwrap();
        let loose = Region::from_ring(outer_ring).unwrap();
        assert!(overlay::is_subset(&inset, &loose));
    }

    #[test]
    fn inset_wider_than_region_is_empty() {
        let region = Region::rect(0, 0, 1, 1);
        let disk = annulus_polygon(AnnulusSpec::new(rat_int(2), rat(5, 2)).unwrap());
        let frame = Frame::around(&region, &rat_int(4)).unwrap();
        assert!(inset_hat(&region, &disk, &frame).unwrap().is_empty());
    }

    #[test]
    fn inset_frame_too_small() {
        let region = Region::rect(0, 0, 4, 4);
        let disk = annulus_polygon(AnnulusSpec::new(rat(1, 2), rat_int(1)).unwrap());
        let frame = Frame::around(&region, &rat(1, 2)).unwrap();
        assert_eq!(
            inset_hat(&region, &disk, &frame).unwrap_err(),
            Error::FrameTooSmall
        );
    }

    #[test]
    fn inset_after_offset_recovers_region() {
        let region = Region::from_ring(ring_of(&[(0, 0), (5, 0), (5, 3), (3, 3), (3, 5), (0, 5)]))
            .unwrap();
        let disk = annulus_polygon(AnnulusSpec::new(rat(7, 8), rat_int(1)).unwrap());
        let grown = offset_hat(&region, &disk);
        let frame = Frame::around(&grown, &rat_int(3)).unwrap();
        let back = inset_hat(&grown, &disk, &frame).unwrap();
        assert!(overlay::is_subset(&region, &back));
    }

    #[test]
    fn offset_monotone_in_region() {
        let small = Region::rect(1, 1, 3, 3);
        let big = Region::rect(0, 0, 4, 4);
        let disk = annulus_polygon(AnnulusSpec::new(rat(1, 2), rat_int(1)).unwrap());
        assert!(overlay::is_subset(
            &offset_hat(&small, &disk),
            &offset_hat(&big, &disk)
        ));
    }

    #[test]
    fn disk_sandwich_on_convex_input() {
        // Offsetting with the annulus polygon lands between the true inner
        // and outer offsets; verified through vertex distances (outer) and
        // per-edge support distances (inner).
        let region = Region::from_ring(ring_of(&[(0, 0), (6, 1), (5, 5), (1, 4)])).unwrap();
        let a = rat(3, 2);
        let b = rat_int(2);
        let disk = annulus_polygon(AnnulusSpec::new(a.clone(), b.clone()).unwrap());
        let sum = offset_hat(&region, &disk);
        // Outer: every sum vertex within b of the region.
        assert!(within_offset(&region, &sum, &b));
        // Inner: every point of the true a-offset lies in the sum. Sample
        // region vertices pushed outward along edge normals and diagonals.
        for ring in region.rings() {
            for (p, q) in ring.edges() {
                let mid = p.midpoint(q);
                let n = q.sub(p).rot90().neg(); // outward for ccw
                let len_sq = n.norm_sq();
                // Scale to length a (inside the band, using a rational
                // under-approximation of a/|n|).
                let scale_sq = &(&a * &a) / &len_sq;
                let s = crate::numeric::sqrt_lower(&scale_sq, 40);
                let probe = mid.add(&n.scale(&s));
                assert_eq!(
                    sum.locate_point(&probe),
                    crate::geom::PointLocation::Inside
                );
            }
        }
        let _ = Rational::zero();
    }
}
