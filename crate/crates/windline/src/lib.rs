//! Numerical complex analysis for piecewise-C¹ cycles.
//!
//! The crate computes generalized (non-integer) winding numbers — meaningful
//! also for points that lie *on* the cycle — and evaluates contour integrals
//! of functions with singularities on the contour via Cauchy principal
//! values. On top of that sits a residue-theorem engine that classifies
//! singularities relative to a cycle, checks the flatness and rational-angle
//! admissibility conditions for higher-order on-curve poles, and verifies
//! the principal-value integral against the weighted residue sum.
//!
//! Modules:
//! - [`geometry`]: piecewise parametric curves, cycles, hit detection,
//!   corner angles, signed curvature, flatness order.
//! - [`integrate`]: adaptive Gauss–Kronrod contour quadrature and
//!   principal-value integrals with image-space exclusion and ε→0
//!   extrapolation / divergence classification.
//! - [`winding`]: four winding-number algorithms (principal value, bounded
//!   real integrand, geometric detour decomposition, classical integer).
//! - [`laurent`]: Laurent coefficient extraction on circles, singularity
//!   classification, residues.
//! - [`grt`]: the generalized residue theorem engine and the sinc·sinh
//!   improper-integral demonstration.
//! - [`expr`]: a small expression language so functions and curves can be
//!   supplied as text.
//!
//! With the default `parallel` feature, independent work items (segments,
//! exclusion radii, singularities) are evaluated on a rayon pool; results
//! are always reduced in a fixed order so output is identical to the
//! sequential build.

pub mod exec;
pub mod expr;
pub mod geometry;
pub mod grt;
pub mod integrate;
pub mod laurent;
pub mod winding;

pub use num_complex::Complex64;

pub use geometry::{ClosedCurve, Cycle, GeometryError, Hit, Segment};
pub use integrate::{IntegrateError, PvOutcome, PvResult, QuadratureConfig};
pub use laurent::{AnalyticFunction, LaurentSeries, Singularity, SingularityKind};
pub use winding::{WindingMethod, WindingReport};
