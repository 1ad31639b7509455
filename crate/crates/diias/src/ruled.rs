//! Ruled nets: classification by the cubic form, the discrete Cayley surface
//! and its affine characterization, normalized parameterizations, and the
//! graph form `z = x1 x2 + phi(x1)` of singularity-free ruled nets.

use thiserror::Error;

use crate::centre_chord::{self, CubicSeq, NetAssemblyError, QuadNet};
use crate::geom::{vec2, vec3, Affine3, Mat3, Vec2, Vec3};
use crate::grid::{Field, GridAddress, GridError};
use crate::polyline::PolylineError;
use crate::singularity;
use crate::tol::Tolerances;

#[derive(Debug, Error)]
pub enum RuledError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Assembly(#[from] NetAssemblyError),
    #[error(transparent)]
    Polyline(#[from] PolylineError),
    #[error(transparent)]
    Decompose(#[from] centre_chord::DecomposeError),
    #[error("cayley parameter must be nonzero")]
    ZeroParameter,
    #[error("domain must span at least {needed} vertices along {axis} ({what})")]
    DomainTooSmall { axis: char, needed: usize, what: &'static str },
    #[error("net is not normalized (omega = 1, q_22 = 0 required)")]
    NotNormalized,
    #[error("net has singular edges; graph form requires a singularity-free net")]
    SingularEdges,
    #[error("net is not ruled with straight second generator (B must vanish)")]
    NotRuledU,
    #[error("second generator is not collinear")]
    BetaNotCollinear,
    #[error("first planar coordinate is not strictly monotone")]
    NotMonotone,
    #[error("graph-form identity failed with residual {residual:e}")]
    GraphIdentity { residual: f64 },
    #[error("congruence frame is singular")]
    SingularFrame,
    #[error("congruence verification failed with residual {residual:e}")]
    CongruenceResidual { residual: f64 },
}

/// Ruling classification from the cubic form sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuledKind {
    NotRuled,
    /// `B = 0`: the second generator is straight.
    RuledU,
    /// `A = 0`: the first generator is straight.
    RuledV,
    DoublyRuled,
}

/// Classify by the maxima of `|A|` and `|B|` against `tol`.
pub fn ruled_kind(a: &CubicSeq, b: &CubicSeq, tol: f64) -> RuledKind {
    let a_zero = a.max_abs() <= tol;
    let b_zero = b.max_abs() <= tol;
    match (a_zero, b_zero) {
        (true, true) => RuledKind::DoublyRuled,
        (false, true) => RuledKind::RuledU,
        (true, false) => RuledKind::RuledV,
        (false, false) => RuledKind::NotRuled,
    }
}

/// The discrete Cayley surface with parameter `a` on the inclusive index
/// rectangle: `q(u, v) = (u, v + a u (u - 1) / 2, u v + a u (u^2 - 1) / 6)`.
pub fn cayley_net(
    a: f64,
    u_range: (i64, i64),
    v_range: (i64, i64),
) -> Result<QuadNet, RuledError> {
    if a == 0.0 || !a.is_finite() {
        return Err(RuledError::ZeroParameter);
    }
    let (u0, u1) = u_range;
    let (v0, v1) = v_range;
    if u1 < u0 + 1 {
        return Err(RuledError::DomainTooSmall { axis: 'u', needed: 2, what: "faces" });
    }
    if v1 < v0 + 1 {
        return Err(RuledError::DomainTooSmall { axis: 'v', needed: 2, what: "faces" });
    }
    let q = Field::from_fn(
        GridAddress::vertex(u0, v0),
        (u1 - u0 + 1) as usize,
        (v1 - v0 + 1) as usize,
        |addr| cayley_vertex(a, addr.du / 2, addr.dv / 2),
    )?;
    // A 2-wide strip has no interior star to validate; assemble it without
    // the full verification (the closed form is exact by construction).
    if (u1 - u0 + 1) < 3 || (v1 - v0 + 1) < 3 {
        return Ok(assemble_cayley_strip(q));
    }
    let (net, _) = QuadNet::from_vertices(q, 1e-12)?;
    Ok(net)
}

#[inline]
fn cayley_vertex(a: f64, u: i64, v: i64) -> Vec3 {
    let (u, v) = (u as f64, v as f64);
    vec3(u, v + a * u * (u - 1.0) / 2.0, u * v + a * u * (u * u - 1.0) / 6.0)
}

fn assemble_cayley_strip(q: Field<Vec3>) -> QuadNet {
    use crate::geom::det3;
    let xi = vec3(0.0, 0.0, 1.0);
    let q1 = q.partial(crate::grid::Axis::U).expect("at least two columns");
    let q2 = q.partial(crate::grid::Axis::V).expect("at least two rows");
    let q12 = q1.partial(crate::grid::Axis::V).expect("faces exist");
    let omega = Field::from_fn(q12.origin(), q12.nu(), q12.nv(), |addr| {
        det3(
            q1.get(addr.shifted(0, -1)).unwrap(),
            q2.get(addr.shifted(-1, 0)).unwrap(),
            xi,
        )
    })
    .expect("face domain is non-empty");
    QuadNet::from_parts_unchecked(q, omega, xi)
}

/// Is the net normalized: `omega = 1` and `q_22 = 0` within `tol`?
pub fn is_normalized(net: &QuadNet, tol: f64) -> bool {
    if !net.omega().values().all(|w| (w - 1.0).abs() <= tol) {
        return false;
    }
    let q2 = match net.q().partial(crate::grid::Axis::V) {
        Ok(f) => f,
        Err(_) => return false,
    };
    let scale = q2.values().fold(1.0f64, |m, v| m.max(v.norm()));
    match q2.partial(crate::grid::Axis::V) {
        Ok(q22) => q22.values().all(|v| v.norm() <= tol * scale),
        Err(_) => true, // two rows only: no second difference to violate
    }
}

/// A recovered Cayley congruence: the parameter and the affine map carrying
/// the canonical net onto the given one.
#[derive(Clone, Debug)]
pub struct CayleyCongruence {
    pub a: f64,
    pub frame: Affine3,
}

/// For a normalized net, decide whether it is affinely congruent to a
/// discrete Cayley surface: `A` must be a nonzero constant and `B` zero
/// (within `tol`). On success returns the parameter and the frame map,
/// verified against every vertex.
///
/// The description `(omega, xi)` of a net is only determined up to a common
/// sign; a net whose stored metric is constantly -1 is normalized in the
/// flipped gauge and is handled by flipping `xi` and the cubic coefficients.
pub fn cayley_congruent(net: &QuadNet, tol: f64) -> Result<Option<CayleyCongruence>, RuledError> {
    let gauge_tol = tol.max(1e-12) * 10.0;
    let sign = if is_normalized(net, gauge_tol) {
        1.0
    } else if net.omega().values().all(|w| (w + 1.0).abs() <= gauge_tol) && {
        let flipped = QuadNet::from_parts_unchecked(
            net.q().clone(),
            net.omega().map(|w| -w),
            -net.xi(),
        );
        is_normalized(&flipped, gauge_tol)
    } {
        -1.0
    } else {
        return Err(RuledError::NotNormalized);
    };

    let a_seq = net.cubic_a();
    if a_seq.is_empty() {
        return Err(RuledError::DomainTooSmall {
            axis: 'u',
            needed: 3,
            what: "interior index for A",
        });
    }
    let mean = sign * a_seq.values().iter().sum::<f64>() / a_seq.len() as f64;
    let spread =
        a_seq.values().iter().fold(0.0f64, |m, v| m.max((sign * v - mean).abs()));
    let a_scale = a_seq.max_abs().max(1.0);
    if spread > tol * a_scale || mean.abs() <= tol * a_scale {
        return Ok(None);
    }
    if net.cubic_b().max_abs() > tol * a_scale {
        return Ok(None);
    }

    let a = mean;
    let (u0, v0) = (net.u_min(), net.v_min());
    // Match position, both first derivatives, and the normal at the base
    // corner of the canonical net.
    let canon_q = cayley_vertex(a, u0, v0);
    let canon_q1 = cayley_vertex(a, u0 + 1, v0) - canon_q;
    let canon_q2 = cayley_vertex(a, u0, v0 + 1) - canon_q;
    let canon_xi = vec3(0.0, 0.0, 1.0);
    let base = net.vertex(u0, v0)?;
    let q1 = net.vertex(u0 + 1, v0)? - base;
    let q2 = net.vertex(u0, v0 + 1)? - base;
    let xi = net.xi() * sign;

    let canon = Mat3::from_cols(canon_q1, canon_q2, canon_xi);
    let target = Mat3::from_cols(q1, q2, xi);
    let linear = target.mul(&canon.inverse().ok_or(RuledError::SingularFrame)?);
    let frame = Affine3 { linear, translation: base - linear.mul_vec(canon_q) };

    let scale = net.scale().max(1.0);
    let mut residual = 0.0f64;
    for u in u0..=net.u_max() {
        for v in v0..=net.v_max() {
            let mapped = frame.apply(cayley_vertex(a, u, v));
            residual = residual.max((mapped - net.vertex(u, v)?).norm());
        }
    }
    if residual > tol * scale {
        return Err(RuledError::CongruenceResidual { residual });
    }
    Ok(Some(CayleyCongruence { a, frame }))
}

/// One sample of the ruled graph form: the first planar coordinate and the
/// fibre offset at that coordinate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GraphFormSample {
    pub x1: f64,
    pub phi: f64,
}

/// Extract the graph form of a singularity-free ruled net with straight
/// second generator: after a unimodular planar map sending that generator
/// onto the second coordinate axis, the height satisfies
/// `z = x1 x2 + phi(x1)` at every vertex, with `x1` strictly monotone.
///
/// `phi` is read off along the base row and the identity is then verified at
/// every vertex within `tol`; an integration route for `phi` (telescoping
/// `[alpha_1, alpha]` sums) is cross-checked against the read-off values.
pub fn ruled_graph_form(net: &QuadNet, tol: f64) -> Result<Vec<GraphFormSample>, RuledError> {
    let tols = Tolerances { fp_rel: tol, geo_rel: tol };
    let scale = net.scale().max(1.0);
    if net.cubic_b().max_abs() > tol * scale {
        return Err(RuledError::NotRuledU);
    }
    let singular =
        singularity::singular_edges(net.omega(), 0.0).map_err(|_| RuledError::NotRuledU)?;
    if !singular.is_empty() {
        return Err(RuledError::SingularEdges);
    }

    let dec = centre_chord::decompose_with(net, &tols)?;
    let (alpha, beta) = (&dec.alpha, &dec.beta);

    // beta must be collinear; its supporting line becomes the second axis.
    let d = beta.edge(beta.start_index())?;
    for v in beta.start_index()..beta.end_index() {
        if beta.edge(v)?.cross(d).abs() > tol * scale {
            return Err(RuledError::BetaNotCollinear);
        }
    }
    let dn = d.norm();
    let origin = beta.point(beta.start_index())?;
    // Unimodular map sending the direction d onto the second axis.
    let map = |p: Vec2| -> Vec2 {
        let w = p - origin;
        vec2(w.cross(d) / dn, w.dot(d) / dn)
    };

    let alpha_n: Vec<Vec2> = alpha.points().iter().map(|p| map(*p)).collect();
    let beta_n: Vec<Vec2> = beta.points().iter().map(|p| map(*p)).collect();

    // x1(u) = alpha^1(u) / 2 must be strictly monotone.
    let x1: Vec<f64> = alpha_n.iter().map(|p| 0.5 * p.x).collect();
    let increasing = x1.windows(2).all(|w| w[1] > w[0]);
    let decreasing = x1.windows(2).all(|w| w[1] < w[0]);
    if !(increasing || decreasing) {
        return Err(RuledError::NotMonotone);
    }

    // phi along the base row, then the identity at every vertex.
    let (u0, v0) = (net.u_min(), net.v_min());
    let x2 = |iu: usize, iv: usize| 0.5 * (alpha_n[iu].y + beta_n[iv].y);
    let z = |u: i64, v: i64| -> Result<f64, RuledError> { Ok(net.vertex(u, v)?.z) };
    let nu = alpha_n.len();
    let nv = beta_n.len();
    let mut samples = Vec::with_capacity(nu);
    for (iu, &x1_here) in x1.iter().enumerate() {
        let phi = z(u0 + iu as i64, v0)? - x1_here * x2(iu, 0);
        samples.push(GraphFormSample { x1: x1_here, phi });
    }
    let mut residual = 0.0f64;
    for iu in 0..nu {
        for iv in 0..nv {
            let zv = z(u0 + iu as i64, v0 + iv as i64)?;
            residual = residual.max((zv - x1[iu] * x2(iu, iv) - samples[iu].phi).abs());
        }
    }
    if residual > tol * scale * scale {
        return Err(RuledError::GraphIdentity { residual });
    }

    // Independent route: phi from the telescoped [alpha_1, alpha] sums,
    // determined up to one additive constant.
    let mut g = vec![0.0f64; nu];
    for iu in 1..nu {
        let e = alpha_n[iu] - alpha_n[iu - 1];
        g[iu] = g[iu - 1] - 0.25 * e.cross(alpha_n[iu - 1]);
    }
    let phi_g = |iu: usize| g[iu] - 0.25 * alpha_n[iu].x * alpha_n[iu].y;
    let offset = samples[0].phi - phi_g(0);
    let mut cross_residual = 0.0f64;
    for (iu, s) in samples.iter().enumerate() {
        cross_residual = cross_residual.max((phi_g(iu) + offset - s.phi).abs());
    }
    if cross_residual > tol * scale * scale {
        return Err(RuledError::GraphIdentity { residual: cross_residual });
    }

    Ok(samples)
}
