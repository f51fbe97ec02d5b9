//! Points, rings, regions and the exact predicates on them.

mod halfplane;
mod hull;
mod point;
mod region;
mod ring;

pub use halfplane::{intersect_halfplanes, HalfPlane};
pub use hull::convex_hull;
pub(crate) use point::cross_sign as point_cross_sign;
pub use point::{cmp_direction, orient, sq_dist_point_segment, Orientation, Point};
pub use region::{Face, Frame, PointLocation, Region};
pub use ring::{Ring, RingLocation};
