//! Stitching phase: turns kept boundary edges (interior on the left) into
//! simple rings and nests them into faces.
//!
//! At a shared vertex an incoming edge continues along the outgoing edge
//! that lies immediately clockwise from its own reversed direction; this is
//! the rotation rule that keeps touching faces separate instead of fusing
//! them into figure-eights.

use crate::geom::{cmp_direction, Face, Point, Region, Ring};
use crate::numeric::Rational;
use num_traits::Signed;
use std::cmp::Ordering;
use std::collections::HashMap;

pub(super) fn assemble(edges: Vec<(Point, Point)>) -> Region {
    if edges.is_empty() {
        return Region::empty();
    }
    let mut node_ids: HashMap<Point, usize> = HashMap::new();
    let mut nodes: Vec<Point> = Vec::new();
    let mut id_of = |p: Point, nodes: &mut Vec<Point>| -> usize {
        if let Some(&i) = node_ids.get(&p) {
            i
        } else {
            let i = nodes.len();
            node_ids.insert(p.clone(), i);
            nodes.push(p);
            i
        }
    };
    let edge_nodes: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| {
            let u = id_of(a, &mut nodes);
            let v = id_of(b, &mut nodes);
            (u, v)
        })
        .collect();

    // Outgoing edges per node, sorted counterclockwise by direction.
    let dirs: Vec<Point> = edge_nodes
        .iter()
        .map(|&(u, v)| nodes[v].sub(&nodes[u]))
        .collect();
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (ei, &(u, _)) in edge_nodes.iter().enumerate() {
        outgoing[u].push(ei);
    }
    for list in &mut outgoing {
        list.sort_by(|&e1, &e2| cmp_direction(&dirs[e1], &dirs[e2]));
    }

    // Successor of each edge under the clockwise rotation rule.
    let mut next: Vec<usize> = vec![usize::MAX; edge_nodes.len()];
    for (ei, &(_, v)) in edge_nodes.iter().enumerate() {
        let back = dirs[ei].neg();
        let outs = &outgoing[v];
        debug_assert!(!outs.is_empty(), "dangling boundary edge");
        let idx = outs.partition_point(|&oe| cmp_direction(&dirs[oe], &back) == Ordering::Less);
        let chosen = if idx == 0 { outs[outs.len() - 1] } else { outs[idx - 1] };
        next[ei] = chosen;
    }

    // Walk cycles.
    let mut visited = vec![false; edge_nodes.len()];
    let mut drafts: Vec<Vec<Point>> = Vec::new();
    for start in 0..edge_nodes.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        loop {
            debug_assert!(!visited[cur], "edge pairing is not a permutation");
            visited[cur] = true;
            cycle.push(nodes[edge_nodes[cur].0].clone());
            cur = next[cur];
            if cur == start {
                break;
            }
        }
        drafts.push(cycle);
    }

    // Drop straight-through vertices introduced by arrangement splits.
    let rings: Vec<Ring> = drafts
        .into_iter()
        .map(|vs| Ring::new_unchecked(vs).simplified())
        .collect();
    nest(rings)
}

/// Groups rings into faces: even containment depth means outer boundary,
/// odd means hole of its innermost containing ring.
fn nest(rings: Vec<Ring>) -> Region {
    let n = rings.len();
    let reps: Vec<Point> = rings
        .iter()
        .map(|r| {
            let (a, b) = r.edge(0);
            a.midpoint(b)
        })
        .collect();
    let areas: Vec<Rational> = rings.iter().map(|r| r.signed_area2()).collect();

    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut depth: Vec<usize> = vec![0; n];
    for i in 0..n {
        let mut best: Option<usize> = None;
        for j in 0..n {
            if i == j {
                continue;
            }
            if rings[j].locate_point(&reps[i]) == crate::geom::RingLocation::Inside {
                depth[i] += 1;
                best = match best {
                    None => Some(j),
                    Some(k) => {
                        if areas[j].abs() < areas[k].abs() {
                            Some(j)
                        } else {
                            Some(k)
                        }
                    }
                };
            }
        }
        parent[i] = best;
    }

    let mut faces: HashMap<usize, Face> = HashMap::new();
    // Outers first so hole attachment finds its face.
    for i in 0..n {
        if depth[i] % 2 == 0 {
            debug_assert!(rings[i].is_ccw(), "outer ring assembled clockwise");
            faces.insert(
                i,
                Face {
                    outer: rings[i].clone(),
                    holes: Vec::new(),
                },
            );
        }
    }
    for i in 0..n {
        if depth[i] % 2 == 1 {
            debug_assert!(!rings[i].is_ccw(), "hole ring assembled counterclockwise");
            let p = parent[i].expect("hole without a containing ring");
            faces
                .get_mut(&p)
                .expect("hole parent is not an outer ring")
                .holes
                .push(rings[i].clone());
        }
    }

    Region::from_faces_unchecked(faces.into_values().collect())
}
