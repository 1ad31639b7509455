//! File formats and exporters: the `diias v1` net text format, polyline-pair
//! and analysis-report JSON, OBJ and SVG export, and number parsing for CLI
//! flags. All writers are deterministic byte for byte.

pub mod fraction;
pub mod net_format;
pub mod obj;
pub mod polyline_file;
pub mod report;
pub mod svg;

/// Shortest round-trip decimal for a finite `f64`; negative zero collapses
/// to `0` so identical geometry always prints identically.
pub(crate) fn fmt_f64(x: f64) -> String {
    debug_assert!(x.is_finite());
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}
