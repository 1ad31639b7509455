//! JSON input format for a generating pair of polygonal lines.
//!
//! ```json
//! {
//!   "alpha": { "start_index": -1, "points": [[-1, 3], [0, 2], [1, 5]] },
//!   "beta":  { "start_index": -1, "points": [[-1, 0], [0, 0], [1, 0]] },
//!   "z_base": 1.25
//! }
//! ```
//!
//! `z_base` is optional (default 0) and anchors the height at the minimal
//! index corner `(u_min, v_min)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::vec2;
use crate::polyline::{Polyline2, PolylineError};

#[derive(Debug, Error)]
pub enum PolylinePairError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{which}: {source}")]
    Polyline { which: &'static str, source: PolylineError },
    #[error("z_base must be finite")]
    NonFiniteBase,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PolylineJson {
    pub start_index: i64,
    pub points: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PolylinePairFile {
    pub alpha: PolylineJson,
    pub beta: PolylineJson,
    #[serde(default)]
    pub z_base: f64,
}

impl PolylinePairFile {
    pub fn parse(text: &str) -> Result<Self, PolylinePairError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_pair(&self) -> Result<(Polyline2, Polyline2, f64), PolylinePairError> {
        if !self.z_base.is_finite() {
            return Err(PolylinePairError::NonFiniteBase);
        }
        let alpha = Polyline2::new(
            self.alpha.start_index,
            self.alpha.points.iter().map(|p| vec2(p[0], p[1])).collect(),
        )
        .map_err(|source| PolylinePairError::Polyline { which: "alpha", source })?;
        let beta = Polyline2::new(
            self.beta.start_index,
            self.beta.points.iter().map(|p| vec2(p[0], p[1])).collect(),
        )
        .map_err(|source| PolylinePairError::Polyline { which: "beta", source })?;
        Ok((alpha, beta, self.z_base))
    }

    pub fn from_pair(alpha: &Polyline2, beta: &Polyline2, z_base: f64) -> Self {
        PolylinePairFile {
            alpha: PolylineJson {
                start_index: alpha.start_index(),
                points: alpha.points().iter().map(|p| [p.x, p.y]).collect(),
            },
            beta: PolylineJson {
                start_index: beta.start_index(),
                points: beta.points().iter().map(|p| [p.x, p.y]).collect(),
            },
            z_base,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        let text = r#"{
            "alpha": {"start_index": -1, "points": [[-1, 3], [0, 2], [1, 5]]},
            "beta":  {"start_index": -1, "points": [[-1, 0], [0, 0], [1, 0]]},
            "z_base": 1.25
        }"#;
        let file = PolylinePairFile::parse(text).unwrap();
        let (alpha, beta, z) = file.to_pair().unwrap();
        assert_eq!(alpha.start_index(), -1);
        assert_eq!(beta.len(), 3);
        assert_eq!(z, 1.25);
    }

    #[test]
    fn z_base_defaults_to_zero() {
        let text = r#"{
            "alpha": {"start_index": 0, "points": [[0, 0], [1, 1]]},
            "beta":  {"start_index": 0, "points": [[0, 2], [1, 1.5]]}
        }"#;
        let (_, _, z) = PolylinePairFile::parse(text).unwrap().to_pair().unwrap();
        assert_eq!(z, 0.0);
    }

    #[test]
    fn one_point_polyline_rejected() {
        let text = r#"{
            "alpha": {"start_index": 0, "points": [[0, 0]]},
            "beta":  {"start_index": 0, "points": [[0, 2], [1, 1.5]]}
        }"#;
        let err = PolylinePairFile::parse(text).unwrap().to_pair().unwrap_err();
        assert!(matches!(err, PolylinePairError::Polyline { which: "alpha", .. }));
    }

    #[test]
    fn json_round_trip() {
        let file = PolylinePairFile {
            alpha: PolylineJson { start_index: -2, points: vec![[0.1, -0.25], [1.0, 3.5]] },
            beta: PolylineJson { start_index: 4, points: vec![[-7.0, 0.0], [0.5, 0.125]] },
            z_base: -0.75,
        };
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(PolylinePairFile::parse(&text).unwrap(), file);
    }
}
