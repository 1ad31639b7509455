//! The machine-readable analysis report and the pipeline that assembles it:
//! metric, cubic form, singular edges, midpoint-locus components, vertex
//! configurations, swallowtails, ruling classification, Cayley congruence,
//! and validation residuals.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::asymptotic::ValidationReport;
use crate::centre_chord::{self, QuadNet};
use crate::geom::Vec3;
use crate::grid::{Axis, Field, GridAddress};
use crate::polyline::{self, Polyline2, ViolationKind};
use crate::ruled::{self, RuledKind};
use crate::singularity::{self, SingularityReport, StarConfig};
use crate::tol::Tolerances;

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error("inadmissible input: {0}")]
    Inadmissible(String),
    #[error(transparent)]
    Build(#[from] centre_chord::CentreChordError),
    #[error(transparent)]
    Assembly(#[from] centre_chord::NetAssemblyError),
    #[error(transparent)]
    Decompose(#[from] centre_chord::DecomposeError),
    #[error(transparent)]
    Singularity(#[from] singularity::SingularityError),
    #[error(transparent)]
    Ruled(#[from] ruled::RuledError),
    #[error(transparent)]
    Polyline(#[from] polyline::PolylineError),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FaceGridJson {
    /// Base face indices: `values[i][j]` is the value at the quadrangle
    /// `(u0 + i + 1/2, v0 + j + 1/2)`.
    pub u0: i64,
    pub v0: i64,
    pub values: Vec<Vec<f64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SequenceJson {
    pub first_index: i64,
    pub values: Vec<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct EdgeJson {
    /// `"u"` for the edge `(u + 1/2, v)`, `"v"` for `(u, v + 1/2)`.
    pub axis: String,
    pub u: i64,
    pub v: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ConfigJson {
    pub u: i64,
    pub v: i64,
    pub config: u8,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CayleyJson {
    pub a: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ResidualsJson {
    pub cross_planarity: f64,
    pub xi_constancy: f64,
    pub cubic_independence: f64,
    pub structural: f64,
    pub structural_as_printed: f64,
    pub compatibility: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ViolationJson {
    pub kind: String,
    pub alpha_index: i64,
    pub beta_index: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AdmissibilityJson {
    pub admissible: bool,
    pub violations: Vec<ViolationJson>,
    /// Set when the angle tests themselves are undefined (e.g. a recovered
    /// generator pair with a shared vertex).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degenerate_input: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AnalysisReport {
    pub omega: FaceGridJson,
    pub cubic_a: SequenceJson,
    pub cubic_b: SequenceJson,
    pub singular_edges: Vec<EdgeJson>,
    pub dmptl: Vec<Vec<[f64; 2]>>,
    pub configs: Vec<ConfigJson>,
    pub swallowtails: Vec<[i64; 2]>,
    pub ruled_kind: String,
    pub cayley: Option<CayleyJson>,
    pub residuals: ResidualsJson,
    pub admissibility: AdmissibilityJson,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Everything the exporters need from one analysis run.
pub struct Analysis {
    pub net: QuadNet,
    pub alpha: Polyline2,
    pub beta: Polyline2,
    pub singularity: SingularityReport,
    pub validation: ValidationReport,
    pub report: AnalysisReport,
}

/// Analyze a generating pair. Interior-angle violations are recorded in the
/// report, not fatal; a vanishing metric is.
pub fn analyze_pair(
    alpha: &Polyline2,
    beta: &Polyline2,
    z_base: f64,
    tol: &Tolerances,
) -> Result<Analysis, AnalyzeError> {
    let net = centre_chord::build_diias_with(alpha, beta, z_base, tol)?;
    let validation = crate::asymptotic::verify_diias(net.q(), tol.fp_rel)
        .map_err(centre_chord::NetAssemblyError::from)?;
    assemble(net, alpha.clone(), beta.clone(), validation, tol)
}

/// Analyze a bare net: validate it, recover a generating pair, then proceed
/// as for a pair (with the net's own vertices, not a rebuild).
pub fn analyze_net(q: Field<Vec3>, tol: &Tolerances) -> Result<Analysis, AnalyzeError> {
    let (net, validation) = QuadNet::from_vertices(q, tol.fp_rel)?;
    let dec = centre_chord::decompose_with(&net, tol)?;
    assemble(net, dec.alpha, dec.beta, validation, tol)
}

fn assemble(
    net: QuadNet,
    alpha: Polyline2,
    beta: Polyline2,
    validation: ValidationReport,
    tol: &Tolerances,
) -> Result<Analysis, AnalyzeError> {
    // A recovered pair may share a vertex (the split gauge can place
    // alpha(u0) on beta); the angle tests are then undefined but the
    // singularity analysis is not.
    let (admissible_flag, violations, degenerate) =
        match polyline::check_admissible_with(&alpha, &beta, tol) {
            Ok(report) => (report.admissible(), report.violations, None),
            Err(e @ polyline::PolylineError::CoincidentVertices { .. }) => {
                (false, Vec::new(), Some(e.to_string()))
            }
            Err(e) => return Err(e.into()),
        };
    let singularity = singularity::singularity_report_with(&alpha, &beta, tol)?;

    let scale = net.scale().max(1.0);
    let kind = ruled::ruled_kind(net.cubic_a(), net.cubic_b(), tol.fp_abs(scale));
    // Congruence preconditions (normalized gauge, wide enough domain) simply
    // mean "not a recognized Cayley net" for reporting purposes.
    let cayley =
        ruled::cayley_congruent(&net, tol.fp_rel).ok().flatten().map(|c| CayleyJson { a: c.a });

    let omega = face_grid_json(net.omega());
    let report = AnalysisReport {
        omega,
        cubic_a: SequenceJson {
            first_index: net.cubic_a().first_index(),
            values: net.cubic_a().values().to_vec(),
        },
        cubic_b: SequenceJson {
            first_index: net.cubic_b().first_index(),
            values: net.cubic_b().values().to_vec(),
        },
        singular_edges: singularity
            .singular_edges
            .iter()
            .map(|e| {
                let a = e.address();
                match e.label() {
                    Axis::U => EdgeJson { axis: "u".into(), u: (a.du - 1) / 2, v: a.dv / 2 },
                    Axis::V => EdgeJson { axis: "v".into(), u: a.du / 2, v: (a.dv - 1) / 2 },
                }
            })
            .collect(),
        dmptl: singularity
            .dmptl_components
            .iter()
            .map(|c| c.points.iter().map(|p| [p.x, p.y]).collect())
            .collect(),
        configs: singularity
            .config
            .iter()
            .map(|(&(u, v), c)| ConfigJson {
                u,
                v,
                config: match c {
                    StarConfig::Config0 => 0,
                    StarConfig::Config1 => 1,
                    StarConfig::Config2 => 2,
                    StarConfig::Config3 => 3,
                },
            })
            .collect(),
        swallowtails: singularity.swallowtails.iter().map(|&(u, v)| [u, v]).collect(),
        ruled_kind: match kind {
            RuledKind::NotRuled => "not_ruled".into(),
            RuledKind::RuledU => "ruled_u".into(),
            RuledKind::RuledV => "ruled_v".into(),
            RuledKind::DoublyRuled => "doubly_ruled".into(),
        },
        cayley,
        residuals: ResidualsJson {
            cross_planarity: validation.max_cross_planarity_residual,
            xi_constancy: validation.max_xi_constancy_residual,
            cubic_independence: validation.max_cubic_independence_residual,
            structural: validation.max_structural_residual,
            structural_as_printed: validation.max_structural_residual_as_printed,
            compatibility: validation.max_compatibility_residual,
        },
        admissibility: AdmissibilityJson {
            admissible: admissible_flag,
            violations: violations
                .iter()
                .map(|v| ViolationJson {
                    kind: match v.kind {
                        ViolationKind::AngleAlpha => "angle-alpha".into(),
                        ViolationKind::AngleBeta => "angle-beta".into(),
                        ViolationKind::ParallelEdges => "parallel-edges".into(),
                        ViolationKind::CollinearDegenerate => "collinear-degenerate".into(),
                    },
                    alpha_index: v.alpha_index,
                    beta_index: v.beta_index,
                })
                .collect(),
            degenerate_input: degenerate,
        },
    };
    Ok(Analysis { net, alpha, beta, singularity, validation, report })
}

fn face_grid_json(omega: &Field<f64>) -> FaceGridJson {
    let (u0, v0) = ((omega.origin().du - 1) / 2, (omega.origin().dv - 1) / 2);
    let values = (0..omega.nu() as i64)
        .map(|i| {
            (0..omega.nv() as i64)
                .map(|j| omega.get(GridAddress::face(u0 + i, v0 + j)).expect("in range"))
                .collect()
        })
        .collect();
    FaceGridJson { u0, v0, values }
}
