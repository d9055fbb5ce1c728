//! Exact lattice geometry: vectors, linear algebra, cones and fans.

pub mod cone;
pub mod dd;
pub mod fan;
pub mod linalg;
pub mod lp;
pub mod vector;

pub use cone::{Cone, Containment};
pub use fan::{Fan, FanReport, FanViolation, ValidationConfig};
pub use linalg::{kernel_dimension, rank, RatMatrix};
pub use vector::{primitive, primitive_of_rational, IntVec, PrimitiveVec, RatVec};
