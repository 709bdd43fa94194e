//! Line clipping against axis-aligned rectangular windows.
//!
//! * [`geom`]: points, segments, windows and the explicit line equations.
//! * [`clip`]: seven clippers behind one signature, keyed by [`AlgorithmId`].
//! * [`oracle`]: an exact rational clipper used as ground truth.
//! * [`bench`]: seeded workloads, timed runs and report rendering.
//! * [`verify`]: oracle-equivalence sweeps and the adversarial input suite.

pub mod bench;
pub mod clip;
pub mod geom;
pub mod oracle;
pub mod verify;

pub use clip::{clip, AlgorithmId};
pub use geom::{contains, x_at, y_at, ClipResult, ClipWindow, GeomError, LineEquation, Point2, Segment};
