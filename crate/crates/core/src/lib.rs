//! THU-splines: truncated hierarchical, locally refinable, globally C1
//! splines on unstructured quadrilateral meshes with extraordinary vertices,
//! together with an isogeometric Galerkin solver.
//!
//! The crate is organized along the pipeline:
//!
//! - [`mesh`]: unstructured quad topology, classification, topological refinement
//! - [`bezier`]: Bernstein algebra, Bezier extraction, de Casteljau split,
//!   two-scale (knot insertion) coefficients
//! - [`dpatch`]: single-level smooth space around extraordinary vertices
//!   (smoothing projector, F-splines, same-level truncation)
//! - [`hierarchy`]: the hierarchical THU-spline space (selection, inter-level
//!   truncation, per-element operators, evaluation)
//! - [`solver`]: Galerkin assembly (linear elasticity, biharmonic), error
//!   norms and the adaptive refinement loop

pub mod bezier;
pub mod dpatch;
pub mod hierarchy;
pub mod mesh;
pub mod solver;
pub mod spline1d;

pub use mesh::{ElementClassification, QuadMesh};
