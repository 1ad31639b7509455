//! Discrete improper indefinite affine spheres from pairs of planar
//! polygonal lines.
//!
//! The kernel builds quad nets with constant affine normal via the discrete
//! centre-chord construction, validates general asymptotic nets, classifies
//! the singularities of the construction (cuspidal edges, the discrete
//! midpoint parallel tangent locus with its cusps, swallowtail vertices),
//! evaluates the bilinear interpolating patches, and handles the ruled case
//! including the discrete Cayley surface and its affine characterization.
//!
//! Modules:
//! - [`grid`]: doubled-coordinate addressing and discrete derivatives,
//! - [`polyline`]: planar polygonal lines and the genericity restrictions,
//! - [`centre_chord`]: the construction and its converse decomposition,
//! - [`asymptotic`]: validation, metric, and normal of bare nets,
//! - [`singularity`]: singular edges, locus components, swallowtails,
//! - [`patches`]: bilinear patches, tessellation, intersection tests,
//! - [`ruled`]: ruled classification, Cayley nets, graph form,
//! - [`io`]: file formats, exporters, and the analysis pipeline.

pub mod asymptotic;
pub mod centre_chord;
pub mod geom;
pub mod grid;
pub mod io;
pub mod patches;
pub mod polyline;
pub mod ruled;
pub mod singularity;
pub mod tol;

pub use centre_chord::{build_diias, decompose, metric_field, QuadNet};
pub use geom::{vec2, vec3, Vec2, Vec3};
pub use polyline::{check_admissible, Polyline2};
pub use singularity::singularity_report;
pub use tol::Tolerances;
