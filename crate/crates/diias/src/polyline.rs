//! Planar polygonal lines and the genericity restrictions on a generating
//! pair: interior-angle conditions, the no-parallel-edges condition, and the
//! half-plane test behind discrete parallelism.

use thiserror::Error;

use crate::geom::Vec2;
use crate::tol::Tolerances;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolylineError {
    #[error("polyline needs at least 2 vertices, got {0}")]
    TooShort(usize),
    #[error("polyline vertex {index} is not finite")]
    NonFinite { index: i64 },
    #[error("zero-length edge between indices {index} and {next}", next = index + 1)]
    ZeroEdge { index: i64 },
    #[error("index {index} is outside [{min}, {max}]")]
    IndexOutOfRange { index: i64, min: i64, max: i64 },
    #[error("index {index} is not interior (both neighbours required)")]
    NotInterior { index: i64 },
    #[error("degenerate input: alpha({alpha_index}) coincides with beta({beta_index})")]
    CoincidentVertices { alpha_index: i64, beta_index: i64 },
    #[error("degenerate half-plane test: point lies on the dividing line at index {index}")]
    OnDividingLine { index: i64 },
}

/// A planar polygonal line indexed by a contiguous integer range.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyline2 {
    start_index: i64,
    vertices: Vec<Vec2>,
}

impl Polyline2 {
    pub fn new(start_index: i64, vertices: Vec<Vec2>) -> Result<Self, PolylineError> {
        if vertices.len() < 2 {
            return Err(PolylineError::TooShort(vertices.len()));
        }
        for (k, p) in vertices.iter().enumerate() {
            if !p.is_finite() {
                return Err(PolylineError::NonFinite { index: start_index + k as i64 });
            }
        }
        for (k, w) in vertices.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(PolylineError::ZeroEdge { index: start_index + k as i64 });
            }
        }
        Ok(Polyline2 { start_index, vertices })
    }

    #[inline]
    pub fn start_index(&self) -> i64 {
        self.start_index
    }

    #[inline]
    pub fn end_index(&self) -> i64 {
        self.start_index + self.vertices.len() as i64 - 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn points(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn point(&self, index: i64) -> Result<Vec2, PolylineError> {
        if index < self.start_index || index > self.end_index() {
            return Err(PolylineError::IndexOutOfRange {
                index,
                min: self.start_index,
                max: self.end_index(),
            });
        }
        Ok(self.vertices[(index - self.start_index) as usize])
    }

    /// The discrete derivative at `index + 1/2`: `P(index + 1) - P(index)`.
    pub fn edge(&self, index: i64) -> Result<Vec2, PolylineError> {
        Ok(self.point(index + 1)? - self.point(index)?)
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> {
        self.start_index..=self.end_index()
    }

    /// Indices with both neighbours present.
    pub fn interior_indices(&self) -> impl Iterator<Item = i64> {
        self.start_index + 1..=self.end_index() - 1
    }

    pub fn translated(&self, t: Vec2) -> Polyline2 {
        Polyline2 {
            start_index: self.start_index,
            vertices: self.vertices.iter().map(|p| *p + t).collect(),
        }
    }
}

/// Sign of the cross product `[b - a, c - a]`: +1 for counter-clockwise,
/// -1 for clockwise, 0 when collinear within `tau` (an area tolerance).
pub fn orientation(a: Vec2, b: Vec2, c: Vec2, tau: f64) -> i8 {
    let det = (b - a).cross(c - a);
    if det > tau {
        1
    } else if det < -tau {
        -1
    } else {
        0
    }
}

/// Bounding-box diagonal of both polylines together; the length scale for
/// geometric predicates on the pair.
pub fn pair_diagonal(alpha: &Polyline2, beta: &Polyline2) -> f64 {
    let mut lo = alpha.points()[0];
    let mut hi = lo;
    for p in alpha.points().iter().chain(beta.points()) {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    (hi - lo).norm()
}

/// Classes of restriction violations for a generating pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// An interior alpha vertex is not strictly inside the angle spanned by
    /// its neighbours as seen from a beta vertex.
    AngleAlpha,
    /// An interior beta vertex is not strictly inside the angle spanned by
    /// its neighbours as seen from an alpha vertex.
    AngleBeta,
    /// An alpha edge is parallel to a beta edge, forcing a zero affine metric
    /// on the corresponding quadrangle.
    ParallelEdges,
    /// An angle test degenerates to exact collinearity (angle of 0 or 180
    /// degrees within tolerance).
    CollinearDegenerate,
}

/// One violated restriction, with the offending indices. For the angle kinds
/// the triplet is centred at the named index of its own polyline and viewed
/// from the named vertex of the other; for `ParallelEdges` the indices name
/// the base vertices of the two parallel edges.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub alpha_index: i64,
    pub beta_index: i64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct AdmissibilityReport {
    pub violations: Vec<Violation>,
}

impl AdmissibilityReport {
    #[inline]
    pub fn admissible(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations that degenerate the construction itself: parallel edges
    /// force a vanishing metric on a quadrangle. Angle violations (including
    /// collinear-degenerate angle tests) break only the singularity
    /// combinatorics.
    pub fn hard_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| matches!(v.kind, ViolationKind::ParallelEdges))
    }
}

/// Checks the interior-angle restrictions and the no-parallel-edges condition
/// over all point/triplet and edge/edge pairs, with default tolerances.
pub fn check_admissible(
    alpha: &Polyline2,
    beta: &Polyline2,
) -> Result<AdmissibilityReport, PolylineError> {
    check_admissible_with(alpha, beta, &Tolerances::default())
}

pub fn check_admissible_with(
    alpha: &Polyline2,
    beta: &Polyline2,
    tol: &Tolerances,
) -> Result<AdmissibilityReport, PolylineError> {
    let tau = tol.cross_abs(pair_diagonal(alpha, beta));
    let mut violations = Vec::new();

    for u in alpha.indices() {
        for v in beta.indices() {
            if alpha.point(u)? == beta.point(v)? {
                return Err(PolylineError::CoincidentVertices { alpha_index: u, beta_index: v });
            }
        }
    }

    // Each interior beta vertex must lie strictly inside the angle its
    // neighbours span at every alpha vertex (and the angle must be proper).
    for u in alpha.indices() {
        let apex = alpha.point(u)?;
        for v in beta.interior_indices() {
            match angle_violation(apex, beta.point(v - 1)?, beta.point(v)?, beta.point(v + 1)?, tau)
            {
                AngleOutcome::Inside => {}
                AngleOutcome::Outside => {
                    violations.push(Violation { kind: ViolationKind::AngleBeta, alpha_index: u, beta_index: v })
                }
                AngleOutcome::Degenerate => violations.push(Violation {
                    kind: ViolationKind::CollinearDegenerate,
                    alpha_index: u,
                    beta_index: v,
                }),
            }
        }
    }
    for v in beta.indices() {
        let apex = beta.point(v)?;
        for u in alpha.interior_indices() {
            match angle_violation(apex, alpha.point(u - 1)?, alpha.point(u)?, alpha.point(u + 1)?, tau)
            {
                AngleOutcome::Inside => {}
                AngleOutcome::Outside => {
                    violations.push(Violation { kind: ViolationKind::AngleAlpha, alpha_index: u, beta_index: v })
                }
                AngleOutcome::Degenerate => violations.push(Violation {
                    kind: ViolationKind::CollinearDegenerate,
                    alpha_index: u,
                    beta_index: v,
                }),
            }
        }
    }

    for u in alpha.start_index()..alpha.end_index() {
        let ea = alpha.edge(u)?;
        for v in beta.start_index()..beta.end_index() {
            if ea.cross(beta.edge(v)?).abs() <= tau {
                violations.push(Violation { kind: ViolationKind::ParallelEdges, alpha_index: u, beta_index: v });
            }
        }
    }

    Ok(AdmissibilityReport { violations })
}

enum AngleOutcome {
    Inside,
    Outside,
    Degenerate,
}

/// Is `mid` strictly inside the angle `prev apex next` (of less than 180
/// degrees)? Exact collinearity within `tau` is degenerate, not a side.
fn angle_violation(apex: Vec2, prev: Vec2, mid: Vec2, next: Vec2, tau: f64) -> AngleOutcome {
    let r1 = prev - apex;
    let r2 = next - apex;
    let m = mid - apex;
    let span = r1.cross(r2);
    if span.abs() <= tau {
        return AngleOutcome::Degenerate;
    }
    let c1 = r1.cross(m);
    let c2 = m.cross(r2);
    if c1.abs() <= tau || c2.abs() <= tau {
        return AngleOutcome::Degenerate;
    }
    if (c1 > 0.0) == (span > 0.0) && (c2 > 0.0) == (span > 0.0) {
        AngleOutcome::Inside
    } else {
        AngleOutcome::Outside
    }
}

/// The half-plane test of discrete parallelism: true iff `line(v - 1)` and
/// `line(v + 1)` lie strictly in the same open half-plane determined by the
/// straight line through `line(v)` with direction `edge_vector`. Points on
/// the dividing line (within `tau`, an area tolerance) are degenerate.
pub fn discretely_parallel(
    edge_vector: Vec2,
    line: &Polyline2,
    v: i64,
    tau: f64,
) -> Result<bool, PolylineError> {
    if v <= line.start_index() || v >= line.end_index() {
        return Err(PolylineError::NotInterior { index: v });
    }
    let centre = line.point(v)?;
    let c1 = edge_vector.cross(line.point(v - 1)? - centre);
    let c2 = edge_vector.cross(line.point(v + 1)? - centre);
    if c1.abs() <= tau || c2.abs() <= tau {
        return Err(PolylineError::OnDividingLine { index: v });
    }
    Ok((c1 > 0.0) == (c2 > 0.0))
}
