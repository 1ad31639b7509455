//! Centralized tolerance scales.
//!
//! Two relative scales cover the whole kernel:
//!
//! - `fp_rel`: floating-point identity checks (discrete integrability,
//!   structural equations, round trips). All such quantities are short sums
//!   and differences of input-scale numbers, so 1e-9 relative to the field's
//!   maximum magnitude leaves six orders of headroom above f64 rounding.
//! - `geo_rel`: geometric sign predicates. A cross product compared against
//!   `geo_rel * diag^2` (with `diag` the bounding-box diagonal of the inputs)
//!   is treated as zero; strict half-plane tests report such values as
//!   degenerate instead of silently picking a side.
//!
//! The environment variable `AFFINE_NET_TOL` multiplies both scales.

/// Relative tolerance scales used by default throughout the kernel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub fp_rel: f64,
    pub geo_rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { fp_rel: 1e-9, geo_rel: 1e-9 }
    }
}

impl Tolerances {
    /// Defaults scaled by the `AFFINE_NET_TOL` environment variable when it
    /// holds a positive finite number.
    pub fn from_env() -> Self {
        let base = Tolerances::default();
        match std::env::var("AFFINE_NET_TOL").ok().and_then(|s| s.trim().parse::<f64>().ok()) {
            Some(k) if k.is_finite() && k > 0.0 => Tolerances {
                fp_rel: base.fp_rel * k,
                geo_rel: base.geo_rel * k,
            },
            _ => base,
        }
    }

    /// Absolute floating-point tolerance for quantities of magnitude `scale`.
    #[inline]
    pub fn fp_abs(&self, scale: f64) -> f64 {
        self.fp_rel * scale.max(1e-300)
    }

    /// Absolute cross-product tolerance for inputs with bounding-box diagonal
    /// `diag` (cross products scale as area).
    #[inline]
    pub fn cross_abs(&self, diag: f64) -> f64 {
        self.geo_rel * diag * diag
    }
}
