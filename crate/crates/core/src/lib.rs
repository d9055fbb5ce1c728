//! Exact combinatorics of embedded tropical curves.
//!
//! Validates and balances curves, prepares them against a complete fan
//! (subdivision, integral rescaling), computes deformation cones and detects
//! superabundance, checks well-spacedness in genus one, and assembles the
//! combinatorial data of a logarithmic map from the dual nodal curve to the
//! Artin fan of a toric variety.

pub mod curve;
pub mod defspace;
pub mod degeneration;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod lattice;
pub mod num;
pub mod refine;
pub mod wellspaced;

pub use curve::{CompactifiedCurve, Edge, Ray, TropicalCurve, Vertex};
pub use defspace::{
    basic_monoid, combinatorial_type, deformation_cone, expected_dimension, is_superabundant, point_of_curve,
    CombinatorialType, DeformationCone, Superabundance,
};
pub use degeneration::{certify, dual_curve, node_monoid, node_slope, verify_certificate, RealizationCertificate};
pub use error::{Error, Result};
pub use lattice::{Cone, Containment, Fan, IntVec, PrimitiveVec, RatVec};
pub use num::Rational;
pub use refine::{check_recession_support, rescale_integral, subdivide_along_fan, SubdivisionRecord};
pub use wellspaced::{cycle, well_spaced, CycleData, WellSpacedness};
