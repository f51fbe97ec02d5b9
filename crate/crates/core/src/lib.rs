//! Offset deconstruction for polygonal regions.
//!
//! Given a polygonal region `Q`, a radius `r` and a tolerance `eps`, this
//! crate decides whether `Q` is within Hausdorff distance `eps` of the
//! `r`-offset (Minkowski sum with the closed `r`-disk) of *some* polygonal
//! region `P`, and produces such a `P` when the answer is certified YES.
//! All geometry is carried out in exact rational arithmetic; disks are
//! replaced by rational annulus polygons at a working precision `delta`,
//! which yields certified one-sided YES/NO answers and an UNDECIDED band
//! that shrinks as `delta` does.
//!
//! On top of the decision procedure sit the parameter searches (critical
//! tolerance interval, valid radius interval, the `r/eps` quality scan) and
//! a linear-time specialization for convex input that also constructs a
//! near vertex-minimal witness.

pub mod convex;
pub mod decide;
pub mod disk;
pub mod error;
pub mod geom;
pub mod io;
pub mod minkowski;
pub mod numeric;
pub mod overlay;
pub mod search;
pub mod svg;

pub use error::Error;
pub use geom::{Frame, Point, Region, Ring};
pub use numeric::Rational;

/// Library version string.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
