use super::point::{orient, Orientation, Point};

/// Convex hull by monotone chain, counterclockwise and strictly convex
/// (collinear points dropped). Returns fewer than three points for
/// degenerate input.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let chain = |iter: &mut dyn Iterator<Item = &Point>| -> Vec<Point> {
        let mut out: Vec<Point> = Vec::new();
        for p in iter {
            while out.len() >= 2
                && orient(&out[out.len() - 2], &out[out.len() - 1], p) != Orientation::Ccw
            {
                out.pop();
            }
            out.push(p.clone());
        }
        out
    };
    let mut lower = chain(&mut pts.iter());
    let mut upper = chain(&mut pts.iter().rev());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    lower
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_of_grid() {
        let pts: Vec<Point> = (0..3)
            .flat_map(|x| (0..3).map(move |y| Point::from_i64(x, y)))
            .collect();
        let h = convex_hull(&pts);
        assert_eq!(h.len(), 4);
        assert_eq!(h[0], Point::from_i64(0, 0));
        for i in 0..h.len() {
            let a = &h[i];
            let b = &h[(i + 1) % h.len()];
            let c = &h[(i + 2) % h.len()];
            assert_eq!(orient(a, b, c), Orientation::Ccw);
        }
    }

    #[test]
    fn collinear_input() {
        let pts = vec![
            Point::from_i64(0, 0),
            Point::from_i64(1, 1),
            Point::from_i64(2, 2),
        ];
        assert_eq!(convex_hull(&pts).len(), 2);
    }
}
