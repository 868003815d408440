//! Planar "toast" hierarchies: nested families of smooth disk regions over a
//! square window, together with coherent disk-to-ball charts and the flow
//! rebuilt through those charts.
//!
//! The crate is organized bottom-up:
//!
//! * [`geom2d`] — smooth disks as dense boundary polylines with a truncated
//!   Fourier descriptor; containment, relation, offset and sandwich tests.
//! * [`diffeo`] — invertible plane maps as words of smooth primitives with
//!   certified Jacobians and compactly supported extension machinery.
//! * [`separation`] — the wedge construction: a smooth disk between two
//!   concentric circles separating a family of disjoint disks.
//! * [`toast`] — cross-section generation on a rational grid and the leveled
//!   region hierarchy with its containment index.
//! * [`coherent`] — radii, shift tables and chart words aligned across levels.
//! * [`flow`] — the rebuilt action, its cocycle, the line set and the
//!   special-flow factorization, plus the verification sweeps.
//! * [`archive`], [`report`], [`render`], [`pipeline`] — serialization,
//!   machine-readable check reports, SVG output and orchestration.

pub mod archive;
pub mod coherent;
pub mod config;
pub mod diffeo;
pub mod flow;
pub mod geom2d;
pub mod pipeline;
pub mod render;
pub mod report;
pub mod rng;
pub mod separation;
pub mod toast;

/// Numeric tolerances used across the crate. Scale-free constants here;
/// scale-dependent ones are documented at the use site.
pub mod tol {
    /// Global inverse tolerance: `apply_inverse(w, apply(w, p))` must return
    /// to `p` within this distance for every word the system produces.
    pub const EPS_INV: f64 = 1e-6;

    /// Chart coherence tolerance, matching `EPS_INV`.
    pub const EPS_COH: f64 = 1e-6;

    /// Relative geometric tolerance; multiplied by a characteristic scale
    /// (disk radius or window size) before use.
    pub const TAU_GEOM_REL: f64 = 1e-9;

    /// Relative clearance demanded between a separating disk boundary and the
    /// input disks, as a fraction of the annulus width `r2 - r1`.
    pub const TAU_SEP_REL: f64 = 1e-3;

    /// Smallest admissible collar offset in the separation step, as a
    /// fraction of the annulus width.
    pub const DELTA_MIN_REL: f64 = 1e-3;

    /// Finite-difference step for word Jacobians, relative to local scale.
    pub const H_JACOBIAN_REL: f64 = 1e-6;

    /// Line-set membership tolerance, relative to the chart radius.
    pub const EPS_LINE_REL: f64 = 1e-9;
}

pub use geom2d::Vec2;
