//! The discrete centre-chord construction and its converse.
//!
//! Two planar polygonal lines `alpha: I -> R^2`, `beta: J -> R^2` generate a
//! quad net `q(u, v) = (x(u, v), z(u, v))` with
//!
//! ```text
//! x = (alpha(u) + beta(v)) / 2,    y = (beta(v) - alpha(u)) / 2,
//! z_1(u + 1/2, v) = [x_1, y],      z_2(u, v + 1/2) = [x_2, y],
//! ```
//!
//! `z` is well defined because both mixed differences equal the affine metric
//! `omega(u + 1/2, v + 1/2) = [alpha_1, beta_2] / 4`; the construction asserts
//! this rather than assuming it. The affine normal is `(0, 0, 1)` and the
//! cubic form coefficients are `A(u) = [alpha_1(u - 1/2), alpha_1(u + 1/2)] / 4`
//! and `B(v) = -[beta_2(v - 1/2), beta_2(v + 1/2)] / 4` at interior indices.
//!
//! Conversely every such net splits as `x = (alpha + beta) / 2` up to the
//! translation gauge `(alpha + t, beta - t)`; [`decompose`] recovers the one
//! gauge whose reconstruction reproduces the net's `z` exactly, so
//! build-decompose round trips are identities.

use thiserror::Error;

use crate::asymptotic::{self, AsymptoticError, ValidationReport};
use crate::geom::{vec3, Vec2, Vec3};
use crate::grid::{Axis, Field, GridAddress, GridError};
use crate::polyline::{pair_diagonal, Polyline2, PolylineError};
use crate::tol::Tolerances;

#[derive(Debug, Error)]
pub enum CentreChordError {
    #[error(transparent)]
    Polyline(#[from] PolylineError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("affine metric vanishes on quadrangle ({u} + 1/2, {v} + 1/2): parallel generator edges")]
    OmegaZero { u: i64, v: i64 },
    #[error("discrete integrability failed: z_12 deviates from omega by {residual:e}")]
    PathDependence { residual: f64 },
}

#[derive(Debug, Error)]
pub enum DecomposeError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Polyline(#[from] PolylineError),
    #[error("net is not vertically normalized: affine normal is ({x}, {y}, {z}), expected (0, 0, 1)")]
    XiNotVertical { x: f64, y: f64, z: f64 },
    #[error("x-net quadrangles are not parallelograms: max |x_12| residual {residual:e}")]
    XNetNotParallelogram { residual: f64 },
    #[error("no translation gauge reproduces z: residual {residual:e}")]
    GaugeResidual { residual: f64 },
    #[error("gauge system is singular (all edge directions parallel)")]
    GaugeSingular,
}

/// Per-index cubic form coefficients, defined at interior indices only.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicSeq {
    first_index: i64,
    values: Vec<f64>,
}

impl CubicSeq {
    pub fn new(first_index: i64, values: Vec<f64>) -> Self {
        CubicSeq { first_index, values }
    }

    pub fn empty() -> Self {
        CubicSeq { first_index: 0, values: Vec::new() }
    }

    #[inline]
    pub fn first_index(&self) -> i64 {
        self.first_index
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, index: i64) -> Option<f64> {
        let k = index.checked_sub(self.first_index)?;
        if k < 0 || k as usize >= self.values.len() {
            None
        } else {
            Some(self.values[k as usize])
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.values.iter().enumerate().map(|(k, v)| (self.first_index + k as i64, *v))
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

/// The generating data of a centre-chord net: midpoints, half-chords, and the
/// integrated height.
#[derive(Clone, Debug)]
pub struct CentreChordData {
    pub alpha: Polyline2,
    pub beta: Polyline2,
    pub x: Field<Vec2>,
    pub y: Field<Vec2>,
    pub z: Field<f64>,
    pub z_base: f64,
}

/// A quad net with constant affine normal: vertices, signed per-face metric,
/// the normal, and the cubic form sequences.
#[derive(Clone, Debug)]
pub struct QuadNet {
    q: Field<Vec3>,
    omega: Field<f64>,
    xi: Vec3,
    cubic_a: CubicSeq,
    cubic_b: CubicSeq,
}

impl QuadNet {
    #[inline]
    pub fn q(&self) -> &Field<Vec3> {
        &self.q
    }

    #[inline]
    pub fn omega(&self) -> &Field<f64> {
        &self.omega
    }

    #[inline]
    pub fn xi(&self) -> Vec3 {
        self.xi
    }

    #[inline]
    pub fn cubic_a(&self) -> &CubicSeq {
        &self.cubic_a
    }

    #[inline]
    pub fn cubic_b(&self) -> &CubicSeq {
        &self.cubic_b
    }

    #[inline]
    pub fn u_min(&self) -> i64 {
        self.q.origin().du / 2
    }

    #[inline]
    pub fn v_min(&self) -> i64 {
        self.q.origin().dv / 2
    }

    #[inline]
    pub fn u_max(&self) -> i64 {
        self.u_min() + self.q.nu() as i64 - 1
    }

    #[inline]
    pub fn v_max(&self) -> i64 {
        self.v_min() + self.q.nv() as i64 - 1
    }

    pub fn vertex(&self, u: i64, v: i64) -> Result<Vec3, GridError> {
        self.q.get(GridAddress::vertex(u, v))
    }

    /// Largest coordinate magnitude over all vertices; the scale for
    /// floating-point tolerances on this net.
    pub fn scale(&self) -> f64 {
        self.q
            .values()
            .fold(0.0f64, |m, p| m.max(p.x.abs()).max(p.y.abs()).max(p.z.abs()))
    }

    /// Planar projection of the vertices (the x-net).
    pub fn x_net(&self) -> Field<Vec2> {
        self.q.map(|p| p.xy())
    }

    /// Assemble a net from bare vertices: validates that the field is a quad
    /// net with constant affine normal (within `tol`) and derives the signed
    /// metric, the normal, and the cubic form sequences from it.
    pub fn from_vertices(q: Field<Vec3>, tol: f64) -> Result<(QuadNet, ValidationReport), NetAssemblyError> {
        let report = asymptotic::verify_diias(&q, tol)?;
        if !report.is_diias {
            return Err(NetAssemblyError::NotDiias { report: Box::new(report) });
        }
        let (omega, xi_field) = asymptotic::affine_metric_and_normal(&q, tol)?;
        let xi = xi_field.values().next().expect("face field is non-empty");

        let q1 = q.partial(Axis::U)?;
        let q2 = q.partial(Axis::V)?;
        let net = QuadNet {
            cubic_a: mean_cubic(&q1, Axis::U, xi),
            cubic_b: mean_cubic(&q2, Axis::V, xi),
            q,
            omega,
            xi,
        };
        Ok((net, report))
    }

    /// Assemble from parts already known consistent; for closed-form
    /// constructions on domains too thin for full validation.
    pub(crate) fn from_parts_unchecked(q: Field<Vec3>, omega: Field<f64>, xi: Vec3) -> QuadNet {
        let q1 = q.partial(Axis::U).expect("at least two columns");
        let q2 = q.partial(Axis::V).expect("at least two rows");
        QuadNet {
            cubic_a: mean_cubic(&q1, Axis::U, xi),
            cubic_b: mean_cubic(&q2, Axis::V, xi),
            q,
            omega,
            xi,
        }
    }
}

#[derive(Debug, Error)]
pub enum NetAssemblyError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Asymptotic(#[from] AsymptoticError),
    #[error("net is not a discrete improper affine sphere: {}", report.failure_summary())]
    NotDiias { report: Box<ValidationReport> },
}

/// Cubic coefficient sequence along `axis`, averaged over the transverse
/// index (the per-vertex values are transverse-independent for a valid net;
/// validation has already bounded their spread).
fn mean_cubic(d: &Field<Vec3>, axis: Axis, xi: Vec3) -> CubicSeq {
    let cubic = match crate::asymptotic::cubic_field(d, axis, xi) {
        Ok(c) => c,
        Err(_) => return CubicSeq::empty(),
    };
    let (n_along, n_across) = match axis {
        Axis::U => (cubic.nu(), cubic.nv()),
        Axis::V => (cubic.nv(), cubic.nu()),
    };
    let first = match axis {
        Axis::U => cubic.origin().du / 2,
        Axis::V => cubic.origin().dv / 2,
    };
    let values = (0..n_along as i64)
        .map(|i| {
            (0..n_across as i64)
                .map(|j| {
                    let a = match axis {
                        Axis::U => cubic.origin().shifted(2 * i, 2 * j),
                        Axis::V => cubic.origin().shifted(2 * j, 2 * i),
                    };
                    cubic.get(a).unwrap()
                })
                .sum::<f64>()
                / n_across as f64
        })
        .collect();
    CubicSeq::new(first, values)
}

/// The signed affine metric on faces: `omega = [alpha_1, beta_2] / 4`. Zero
/// values are allowed here; construction rejects them.
pub fn metric_field(alpha: &Polyline2, beta: &Polyline2) -> Result<Field<f64>, CentreChordError> {
    let origin = GridAddress::face(alpha.start_index(), beta.start_index());
    let field = Field::from_fn(origin, alpha.len() - 1, beta.len() - 1, |a| {
        let u = (a.du - 1) / 2;
        let v = (a.dv - 1) / 2;
        0.25 * alpha.edge(u).unwrap().cross(beta.edge(v).unwrap())
    })?;
    Ok(field)
}

/// Midpoints, half-chords, and the integrated height for a generating pair,
/// anchored at `z(u_min, v_min) = z_base`.
pub fn centre_chord_data(
    alpha: &Polyline2,
    beta: &Polyline2,
    z_base: f64,
) -> Result<CentreChordData, CentreChordError> {
    centre_chord_data_with(alpha, beta, z_base, &Tolerances::default())
}

pub fn centre_chord_data_with(
    alpha: &Polyline2,
    beta: &Polyline2,
    z_base: f64,
    tol: &Tolerances,
) -> Result<CentreChordData, CentreChordError> {
    let (u0, v0) = (alpha.start_index(), beta.start_index());
    let origin = GridAddress::vertex(u0, v0);
    let (nu, nv) = (alpha.len(), beta.len());

    let x = Field::from_fn(origin, nu, nv, |a| {
        (alpha.point(a.du / 2).unwrap() + beta.point(a.dv / 2).unwrap()) * 0.5
    })?;
    let y = Field::from_fn(origin, nu, nv, |a| {
        (beta.point(a.dv / 2).unwrap() - alpha.point(a.du / 2).unwrap()) * 0.5
    })?;

    // Integrate z first along u at v0, then along v; path independence is
    // asserted against omega below, not assumed.
    let mut zs = vec![0.0f64; nu * nv];
    zs[0] = z_base;
    for i in 1..nu {
        let u = u0 + i as i64 - 1;
        let step = 0.25 * alpha.edge(u)?.cross(beta.point(v0)? - alpha.point(u)?);
        zs[i * nv] = zs[(i - 1) * nv] + step;
    }
    for i in 0..nu {
        let u = u0 + i as i64;
        for j in 1..nv {
            let v = v0 + j as i64 - 1;
            let step = 0.25 * beta.edge(v)?.cross(beta.point(v)? - alpha.point(u)?);
            zs[i * nv + j] = zs[i * nv + j - 1] + step;
        }
    }
    let mut it = zs.iter().copied();
    let z = Field::from_fn(origin, nu, nv, |_| it.next().unwrap())?;

    let omega = metric_field(alpha, beta)?;
    let z12 = z.mixed12()?;
    let scale = z.values().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut max_residual = 0.0f64;
    for a in z12.addresses() {
        max_residual = max_residual.max((z12.get(a)? - omega.get(a)?).abs());
    }
    if max_residual > tol.fp_abs(scale) {
        return Err(CentreChordError::PathDependence { residual: max_residual });
    }

    Ok(CentreChordData { alpha: alpha.clone(), beta: beta.clone(), x, y, z, z_base })
}

/// Build the quad net generated by `(alpha, beta)`. The affine metric must be
/// nonzero on every quadrangle; interior-angle admissibility is reported by
/// [`crate::polyline::check_admissible`] and is not required here, since the
/// construction itself only degenerates where the metric vanishes.
pub fn build_diias(
    alpha: &Polyline2,
    beta: &Polyline2,
    z_base: f64,
) -> Result<QuadNet, CentreChordError> {
    build_diias_with(alpha, beta, z_base, &Tolerances::default())
}

pub fn build_diias_with(
    alpha: &Polyline2,
    beta: &Polyline2,
    z_base: f64,
    tol: &Tolerances,
) -> Result<QuadNet, CentreChordError> {
    let omega = metric_field(alpha, beta)?;
    let tau = 0.25 * tol.cross_abs(pair_diagonal(alpha, beta));
    for a in omega.addresses() {
        if omega.get(a)?.abs() <= tau {
            return Err(CentreChordError::OmegaZero { u: (a.du - 1) / 2, v: (a.dv - 1) / 2 });
        }
    }

    let data = centre_chord_data_with(alpha, beta, z_base, tol)?;
    let q = Field::from_fn(data.x.origin(), data.x.nu(), data.x.nv(), |a| {
        let p = data.x.get(a).unwrap();
        vec3(p.x, p.y, data.z.get(a).unwrap())
    })?;

    let cubic_a = if alpha.len() >= 3 {
        CubicSeq::new(
            alpha.start_index() + 1,
            alpha
                .interior_indices()
                .map(|u| 0.25 * alpha.edge(u - 1).unwrap().cross(alpha.edge(u).unwrap()))
                .collect(),
        )
    } else {
        CubicSeq::empty()
    };
    let cubic_b = if beta.len() >= 3 {
        CubicSeq::new(
            beta.start_index() + 1,
            beta.interior_indices()
                .map(|v| -0.25 * beta.edge(v - 1).unwrap().cross(beta.edge(v).unwrap()))
                .collect(),
        )
    } else {
        CubicSeq::empty()
    };

    Ok(QuadNet { q, omega, xi: vec3(0.0, 0.0, 1.0), cubic_a, cubic_b })
}

/// A generating pair recovered from a net, with the height anchor.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub alpha: Polyline2,
    pub beta: Polyline2,
    pub z_base: f64,
}

/// Recover generating polylines from a net with `xi = (0, 0, 1)`.
///
/// The split `x = (alpha + beta) / 2` is unique only up to the translation
/// gauge `(alpha + t, beta - t)`; the height reconstruction is not gauge
/// invariant (gauges differ by vertical shears), so the gauge is solved from
/// the net's own `z` increments, making `build_diias(decompose(net))`
/// reproduce the net exactly.
pub fn decompose(net: &QuadNet) -> Result<Decomposition, DecomposeError> {
    decompose_with(net, &Tolerances::default())
}

pub fn decompose_with(net: &QuadNet, tol: &Tolerances) -> Result<Decomposition, DecomposeError> {
    let xi = net.xi();
    let scale = net.scale().max(1.0);
    if (xi - vec3(0.0, 0.0, 1.0)).norm() > tol.fp_abs(1.0) {
        return Err(DecomposeError::XiNotVertical { x: xi.x, y: xi.y, z: xi.z });
    }
    let x = net.x_net();
    let x12 = x.mixed12()?;
    let x12_residual = x12.values().fold(0.0f64, |m, v| m.max(v.norm()));
    if x12_residual > tol.fp_abs(scale) {
        return Err(DecomposeError::XNetNotParallelogram { residual: x12_residual });
    }

    let (u0, v0) = (net.u_min(), net.v_min());
    let base = x.get(GridAddress::vertex(u0, v0))?;
    // Provisional split with y(u0, v0) = 0.
    let alpha0: Vec<Vec2> = (u0..=net.u_max())
        .map(|u| x.get(GridAddress::vertex(u, v0)).unwrap() * 2.0 - base)
        .collect();
    let beta0: Vec<Vec2> = (v0..=net.v_max())
        .map(|v| x.get(GridAddress::vertex(u0, v)).unwrap() * 2.0 - base)
        .collect();
    let y0 = |u: i64, v: i64| {
        (beta0[(v - v0) as usize] - alpha0[(u - u0) as usize]) * 0.5
    };

    // Gauge equations: for the true pair (alpha0 + t, beta0 - t),
    // z_1 = [x_1, y0 - t] and z_2 = [x_2, y0 - t] must reproduce the net's
    // increments, i.e. [x_edge, t] = [x_edge, y0] - z_increment per edge.
    let z = net.q().map(|p| p.z);
    let z1 = z.partial(Axis::U)?;
    let z2 = z.partial(Axis::V)?;
    let x1 = x.partial(Axis::U)?;
    let x2 = x.partial(Axis::V)?;
    let mut rows: Vec<(Vec2, f64)> = Vec::new();
    for a in z1.addresses() {
        let (u, v) = ((a.du - 1) / 2, a.dv / 2);
        let e = x1.get(a)?;
        rows.push((e, e.cross(y0(u, v)) - z1.get(a)?));
    }
    for a in z2.addresses() {
        let (u, v) = (a.du / 2, (a.dv - 1) / 2);
        let e = x2.get(a)?;
        rows.push((e, e.cross(y0(u, v)) - z2.get(a)?));
    }
    // Least squares for t in [e, t] = r  <=>  (-e.y) t.x + e.x t.y = r.
    let (mut axx, mut axy, mut ayy, mut bx, mut by) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for &(e, r) in &rows {
        let (cx, cy) = (-e.y, e.x);
        axx += cx * cx;
        axy += cx * cy;
        ayy += cy * cy;
        bx += cx * r;
        by += cy * r;
    }
    let det = axx * ayy - axy * axy;
    let norm_sq = axx + ayy;
    if det.abs() <= 1e-14 * norm_sq * norm_sq {
        return Err(DecomposeError::GaugeSingular);
    }
    let t = Vec2 { x: (bx * ayy - by * axy) / det, y: (by * axx - bx * axy) / det };
    let residual = rows
        .iter()
        .fold(0.0f64, |m, &(e, r)| m.max((e.cross(t) - r).abs()));
    if residual > tol.fp_abs(scale * scale) {
        return Err(DecomposeError::GaugeResidual { residual });
    }

    let alpha = Polyline2::new(u0, alpha0.into_iter().map(|p| p + t).collect())?;
    let beta = Polyline2::new(v0, beta0.into_iter().map(|p| p - t).collect())?;
    let z_base = z.get(GridAddress::vertex(u0, v0))?;
    Ok(Decomposition { alpha, beta, z_base })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::vec2;

    fn pline(start: i64, pts: &[(f64, f64)]) -> Polyline2 {
        Polyline2::new(start, pts.iter().map(|&(x, y)| vec2(x, y)).collect()).unwrap()
    }

    fn example_ruled() -> (Polyline2, Polyline2) {
        (
            pline(-1, &[(-1.0, 3.0), (0.0, 2.0), (1.0, 5.0)]),
            pline(-1, &[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]),
        )
    }

    fn example_parabolas() -> (Polyline2, Polyline2) {
        let alpha: Vec<_> = (-2..=6).map(|u| (u as f64, 5.0 - (u as f64 - 2.0).powi(2) / 8.0)).collect();
        let beta: Vec<_> = (-4..=4).map(|v| ((v * v) as f64 - 2.0, v as f64)).collect();
        (pline(-2, &alpha), pline(-4, &beta))
    }

    #[test]
    fn metric_on_ruled_example() {
        let (alpha, beta) = example_ruled();
        let omega = metric_field(&alpha, &beta).unwrap();
        for v in [-1, 0] {
            assert_eq!(omega.get(GridAddress::face(-1, v)).unwrap(), 0.25);
            assert_eq!(omega.get(GridAddress::face(0, v)).unwrap(), -0.75);
        }
    }

    #[test]
    fn metric_on_parabola_example() {
        // At (1/2, 1/2): alpha_1 = (1, 3/8), beta_2 = (1, 1) -> omega = 5/32.
        let (alpha, beta) = example_parabolas();
        let omega = metric_field(&alpha, &beta).unwrap();
        assert!((omega.get(GridAddress::face(0, 0)).unwrap() - 5.0 / 32.0).abs() < 1e-15);
    }

    #[test]
    fn translated_copies_have_zero_metric() {
        let alpha = pline(0, &[(0.0, 0.0), (1.0, 0.5), (2.0, 1.5)]);
        let beta = alpha.translated(vec2(0.0, 3.0));
        let omega = metric_field(&alpha, &beta).unwrap();
        // Only the diagonal faces pair an edge with its own translate.
        assert_eq!(omega.get(GridAddress::face(0, 0)).unwrap(), 0.0);
        assert_eq!(omega.get(GridAddress::face(1, 1)).unwrap(), 0.0);
        assert!(matches!(
            build_diias(&alpha, &beta, 0.0),
            Err(CentreChordError::OmegaZero { .. })
        ));
    }

    #[test]
    fn ruled_example_heights() {
        // Anchored so that z(0, 0) = 0, the corner heights match the closed
        // form of the first quadrangle's patch.
        let (alpha, beta) = example_ruled();
        let net = build_diias(&alpha, &beta, 1.25).unwrap();
        let z = |u, v| net.vertex(u, v).unwrap().z;
        assert!((z(-1, -1) - 1.25).abs() < 1e-15);
        assert!((z(-1, 0) - 0.5).abs() < 1e-15);
        assert!((z(0, -1) - 0.5).abs() < 1e-15);
        assert!(z(0, 0).abs() < 1e-15);
    }

    #[test]
    fn ruled_example_cubic_form() {
        let (alpha, beta) = example_ruled();
        let net = build_diias(&alpha, &beta, 0.0).unwrap();
        assert_eq!(net.cubic_a().value(0), Some(1.0));
        assert_eq!(net.cubic_b().value(0), Some(0.0));
    }

    #[test]
    fn parallel_straight_lines_rejected() {
        let alpha = pline(0, &[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        let beta = pline(0, &[(0.0, 1.0), (1.0, 1.0), (2.0, 1.0)]);
        assert!(matches!(
            build_diias(&alpha, &beta, 0.0),
            Err(CentreChordError::OmegaZero { .. })
        ));
    }

    #[test]
    fn q12_is_omega_times_xi() {
        let (alpha, beta) = example_parabolas();
        let net = build_diias(&alpha, &beta, 0.0).unwrap();
        let q12 = net.q().mixed12().unwrap();
        let scale = net.scale();
        for a in q12.addresses() {
            let d = q12.get(a).unwrap() - net.xi() * net.omega().get(a).unwrap();
            assert!(d.norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn decompose_round_trips_exactly() {
        let (alpha, beta) = example_parabolas();
        let net = build_diias(&alpha, &beta, 0.75).unwrap();
        let dec = decompose(&net).unwrap();
        for u in alpha.indices() {
            assert!((dec.alpha.point(u).unwrap() - alpha.point(u).unwrap()).norm() < 1e-12);
        }
        for v in beta.indices() {
            assert!((dec.beta.point(v).unwrap() - beta.point(v).unwrap()).norm() < 1e-12);
        }
        assert!((dec.z_base - 0.75).abs() < 1e-12);
        let rebuilt = build_diias(&dec.alpha, &dec.beta, dec.z_base).unwrap();
        for (p, q) in rebuilt.q().values().zip(net.q().values()) {
            assert!((p - q).norm() < 1e-12);
        }
    }

    #[test]
    fn decompose_rejects_tilted_normal() {
        let (alpha, beta) = example_ruled();
        let net = build_diias(&alpha, &beta, 0.0).unwrap();
        // Shear the net so q_12 leaves the vertical direction.
        let sheared = net.q().map(|p| vec3(p.x, p.y + 0.25 * p.z, p.z + 0.5 * p.x));
        let (tilted, _) = QuadNet::from_vertices(sheared, 1e-9).unwrap();
        assert!(matches!(
            decompose(&tilted),
            Err(DecomposeError::XiNotVertical { .. })
        ));
    }
}
