//! Labeling phase: one left-to-right sweep assigns every arrangement edge
//! the winding numbers of each operand on its two sides.
//!
//! For a non-vertical edge the reference side is the face just below it;
//! for a vertical edge, the face just to its right. The opposite side then
//! differs by the edge's own signed cover. The status structure only holds
//! non-vertical edges ordered by height; since edges never cross (they were
//! split), the order is stable for the lifetime of membership.

use super::split::Group;
use super::MAX_OPS;
use crate::geom::{orient, Orientation, Point};
use std::cmp::Ordering;

pub(super) struct Labeled {
    pub group: Group,
    /// Winding of each operand just below (non-vertical) or just right of
    /// (vertical) the edge midpoint.
    pub w_low: [i64; MAX_OPS],
}

impl Labeled {
    /// Winding on the other side: above, or left for verticals.
    pub fn w_high(&self) -> [i64; MAX_OPS] {
        let mut w = self.w_low;
        for (acc, c) in w.iter_mut().zip(self.group.cover.iter()) {
            *acc += c;
        }
        w
    }
}

pub(super) fn label(groups: Vec<Group>) -> Vec<Labeled> {
    let n = groups.len();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by(|&i, &j| {
        groups[i]
            .a
            .cmp(&groups[j].a)
            .then_with(|| groups[i].b.cmp(&groups[j].b))
    });
    let mut ends: Vec<usize> = (0..n).filter(|&i| !groups[i].is_vertical()).collect();
    ends.sort_by(|&i, &j| groups[i].b.x.cmp(&groups[j].b.x));

    // Status: indices of active non-vertical groups, bottom to top.
    let mut status: Vec<usize> = Vec::new();
    let mut w_low: Vec<[i64; MAX_OPS]> = vec![[0; MAX_OPS]; n];

    let mut si = 0;
    let mut ei = 0;
    while si < n {
        let x = groups[starts[si]].a.x.clone();
        // Retire edges ending at or before this abscissa.
        while ei < ends.len() && groups[ends[ei]].b.x <= x {
            let gone = ends[ei];
            if let Some(pos) = status.iter().position(|&g| g == gone) {
                status.remove(pos);
            }
            ei += 1;
        }
        // Admit every edge starting here, then label the batch: windings are
        // evaluated just right of x, where all of them are active.
        let batch_start = si;
        while si < n && groups[starts[si]].a.x == x {
            let gi = starts[si];
            if !groups[gi].is_vertical() {
                let pos = insert_position(&groups, &status, gi);
                status.insert(pos, gi);
            }
            si += 1;
        }
        for &gi in &starts[batch_start..si] {
            let g = &groups[gi];
            let count = if g.is_vertical() {
                let mid_y = (&g.a.y + &g.b.y) / crate::numeric::rat_int(2);
                let probe = Point::new(g.a.x.clone(), mid_y);
                status.partition_point(|&e| below_point(&groups[e], &probe))
            } else {
                status
                    .iter()
                    .position(|&e| e == gi)
                    .expect("inserted edge in status")
            };
            w_low[gi] = prefix(&groups, &status[..count]);
        }
    }

    groups
        .into_iter()
        .enumerate()
        .map(|(i, group)| Labeled {
            group,
            w_low: w_low[i],
        })
        .collect()
}

fn prefix(groups: &[Group], below: &[usize]) -> [i64; MAX_OPS] {
    let mut acc = [0i64; MAX_OPS];
    for &gi in below {
        for (a, c) in acc.iter_mut().zip(groups[gi].cover.iter()) {
            *a += c;
        }
    }
    acc
}

/// Whether active edge `e` passes strictly below the probe point.
fn below_point(e: &Group, probe: &Point) -> bool {
    match orient(&e.a, &e.b, probe) {
        Orientation::Ccw => true,
        Orientation::Cw => false,
        Orientation::Collinear => {
            debug_assert!(
                false,
                "active edge through a vertical edge's interior escaped splitting"
            );
            false
        }
    }
}

/// Insertion slot for `gi` at its left endpoint: after every strictly lower
/// edge; ties (shared endpoint) break by slope.
fn insert_position(groups: &[Group], status: &[usize], gi: usize) -> usize {
    let g = &groups[gi];
    status.partition_point(|&e| {
        let eg = &groups[e];
        match orient(&eg.a, &eg.b, &g.a) {
            Orientation::Ccw => true,  // new edge's origin is above e
            Orientation::Cw => false,
            Orientation::Collinear => {
                // Shared left endpoint: compare directions; e stays below
                // when the new edge is steeper (counterclockwise from it).
                let de = eg.b.sub(&eg.a);
                let dg = g.b.sub(&g.a);
                match crate::geom::point_cross_sign(&de, &dg) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => {
                        debug_assert!(false, "coincident edges escaped grouping");
                        false
                    }
                }
            }
        }
    })
}

/// Applies the keep rule to both sides of every labeled edge and emits the
/// surviving boundary edges directed with the kept side on their left.
pub(super) fn keep_edges<F>(labeled: &[Labeled], keep: &F) -> Vec<(Point, Point)>
where
    F: Fn(&[i64; MAX_OPS]) -> bool,
{
    let mut out = Vec::new();
    for l in labeled {
        let low = keep(&l.w_low);
        let high = keep(&l.w_high());
        if low == high {
            continue;
        }
        if high {
            // Interior above (or left of a vertical edge): walk a -> b.
            out.push((l.group.a.clone(), l.group.b.clone()));
        } else {
            out.push((l.group.b.clone(), l.group.a.clone()));
        }
    }
    out
}
