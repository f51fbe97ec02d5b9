//! Regularized boolean set operations on regions.
//!
//! All operations run one exact overlay: input boundary segments are split
//! at every pairwise intersection, each resulting arrangement edge is
//! labeled with the winding numbers of both operands on its two sides, and
//! edges whose sides disagree under the requested keep rule are stitched
//! back into rings. Closure-of-interior semantics throughout: shared edges
//! merge, lower-dimensional slivers vanish.

mod assemble;
mod split;
mod sweep;

use crate::error::{Error, Result};
use crate::geom::{Frame, Region};

pub(crate) const MAX_OPS: usize = 2;

/// Regularized union.
pub fn union(a: &Region, b: &Region) -> Region {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    overlay(&[(a, 0), (b, 1)], |w| w[0] > 0 || w[1] > 0)
}

/// Regularized intersection.
pub fn intersection(a: &Region, b: &Region) -> Region {
    if a.is_empty() || b.is_empty() {
        return Region::empty();
    }
    overlay(&[(a, 0), (b, 1)], |w| w[0] > 0 && w[1] > 0)
}

/// Regularized closure of `a \ b`.
pub fn difference(a: &Region, b: &Region) -> Region {
    if a.is_empty() {
        return Region::empty();
    }
    if b.is_empty() {
        return a.clone();
    }
    overlay(&[(a, 0), (b, 1)], |w| w[0] > 0 && w[1] <= 0)
}

/// Union of many regions. Small batches run as one overlay (every operand
/// is a valid region, so a point lies in the union exactly when the summed
/// winding is positive); larger inputs merge divide-and-conquer so that
/// heavily overlapping neighbors collapse early and intermediate
/// boundaries stay near the output size. Callers that pass pieces in
/// adjacency order (offset bands, decompositions) benefit most; the result
/// is the same normalized region for any order.
pub fn union_all(regions: &[Region]) -> Region {
    let non_empty: Vec<&Region> = regions.iter().filter(|r| !r.is_empty()).collect();
    union_refs(&non_empty)
}

const UNION_LEAF: usize = 6;

fn union_refs(regions: &[&Region]) -> Region {
    match regions.len() {
        0 => Region::empty(),
        1 => regions[0].clone(),
        n if n <= UNION_LEAF => {
            let ops: Vec<(&Region, usize)> = regions.iter().map(|r| (*r, 0)).collect();
            overlay(&ops, |w| w[0] > 0)
        }
        n => {
            let (left, right) = regions.split_at(n / 2);
            let (a, b) = rayon::join(|| union_refs(left), || union_refs(right));
            union(&a, &b)
        }
    }
}

/// Closure of `F \ A`, the bounded stand-in for the complement. `A` must be
/// strictly inside the frame.
pub fn clamped_complement(a: &Region, frame: &Frame) -> Result<Region> {
    if !frame.strictly_contains(a) {
        return Err(Error::FrameTooSmall);
    }
    Ok(difference(&frame.to_region(), a))
}

/// Whether `A` is contained in `B` as closed point sets, decided as
/// emptiness of the regularized difference.
pub fn is_subset(a: &Region, b: &Region) -> bool {
    difference(a, b).is_empty()
}

/// Shared overlay driver: splits, labels, keeps, assembles.
fn overlay<F>(operands: &[(&Region, usize)], keep: F) -> Region
where
    F: Fn(&[i64; MAX_OPS]) -> bool,
{
    let mut segments = Vec::new();
    for (region, op) in operands {
        debug_assert!(*op < MAX_OPS);
        split::collect_segments(region, *op, &mut segments);
    }
    if segments.is_empty() {
        return Region::empty();
    }
    let groups = split::split_segments(segments);
    let labeled = sweep::label(groups);
    let edges = sweep::keep_edges(&labeled, &keep);
    assemble::assemble(edges)
}
