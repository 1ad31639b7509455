//! Validation of asymptotic nets and nets with constant affine normal:
//! planar-cross residuals, the per-face metric and normal, structural
//! equations, and the compatibility identity.
//!
//! All residuals are dimensionless: planarity determinants are divided by the
//! product of the norms involved, coefficient identities by the magnitude of
//! the coefficients themselves. A report is only `is_diias` when every
//! residual is below the caller's tolerance.

use thiserror::Error;

use crate::geom::{det3, vec3, Vec3};
use crate::grid::{Axis, Field, GridError};

#[derive(Debug, Error)]
pub enum AsymptoticError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("net domain must be at least 3x3 to evaluate interior stars")]
    DomainTooSmall,
    #[error("metric determinant vanishes on quadrangle ({u} + 1/2, {v} + 1/2)")]
    MetricDegenerate { u: i64, v: i64 },
    #[error("star basis is nearly singular at vertex ({u}, {v})")]
    NearSingularStarBasis { u: i64, v: i64 },
}

/// Outcome of validating a net, with the worst residual per identity class.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub is_asymptotic: bool,
    pub is_diias: bool,
    /// Worst normalized cross-planarity determinant over interior stars.
    pub max_cross_planarity_residual: f64,
    /// Worst structural-equation residual over all four sign variants, with
    /// the second-derivative numerator offset matching its denominators.
    pub max_structural_residual: f64,
    /// Same check with the transverse-derivative numerator kept at `u + 1/2`
    /// in both second-variant denominators, exactly as printed in the source
    /// derivation; reported for reference, not gating.
    pub max_structural_residual_as_printed: f64,
    /// Worst compatibility-identity residual over interior vertices.
    pub max_compatibility_residual: f64,
    /// Worst deviation of the cubic coefficients from their per-index means
    /// (`A` must not depend on `v`, nor `B` on `u`).
    pub max_cubic_independence_residual: f64,
    /// Worst deviation of the per-face normal from the reference face.
    pub max_xi_constancy_residual: f64,
    pub xi_estimate: Option<Vec3>,
}

impl ValidationReport {
    /// Names the worst offending residual; used in error messages.
    pub fn failure_summary(&self) -> String {
        let mut worst = ("cross-planarity", self.max_cross_planarity_residual);
        for (name, value) in [
            ("xi-constancy", self.max_xi_constancy_residual),
            ("cubic-independence", self.max_cubic_independence_residual),
            ("structural", self.max_structural_residual),
            ("compatibility", self.max_compatibility_residual),
        ] {
            if value > worst.1 {
                worst = (name, value);
            }
        }
        format!("worst residual is {} = {:e}", worst.0, worst.1)
    }
}

struct Derivatives {
    q1: Field<Vec3>,
    q2: Field<Vec3>,
    q11: Field<Vec3>,
    q22: Field<Vec3>,
    q12: Field<Vec3>,
}

fn derivatives(q: &Field<Vec3>) -> Result<Derivatives, AsymptoticError> {
    if q.nu() < 3 || q.nv() < 3 {
        return Err(AsymptoticError::DomainTooSmall);
    }
    let q1 = q.partial(Axis::U)?;
    let q2 = q.partial(Axis::V)?;
    Ok(Derivatives {
        q11: q1.partial(Axis::U)?,
        q22: q2.partial(Axis::V)?,
        q12: q1.partial(Axis::V)?,
        q1,
        q2,
    })
}

fn planarity_residual(q: &Field<Vec3>, d: &Derivatives) -> Result<f64, AsymptoticError> {
    let mut max = 0.0f64;
    for a in q.addresses() {
        if !d.q11.contains(a) || !d.q22.contains(a) {
            continue; // boundary vertex
        }
        let edges = [
            d.q1.get(a.shifted(1, 0))?,
            d.q1.get(a.shifted(-1, 0))?,
            d.q2.get(a.shifted(0, 1))?,
            d.q2.get(a.shifted(0, -1))?,
        ];
        for second in [d.q11.get(a)?, d.q22.get(a)?] {
            for qu in &edges[0..2] {
                for qv in &edges[2..4] {
                    // Out-of-plane deviation relative to the star size. The
                    // third norm in the denominator is floored at the edge
                    // scale so that a second derivative that vanishes up to
                    // rounding noise does not produce a spurious residual.
                    let star = qu.norm().max(qv.norm());
                    let denom = qu.norm() * qv.norm() * second.norm().max(star);
                    if denom > 0.0 {
                        max = max.max(det3(*qu, *qv, second).abs() / denom);
                    }
                }
            }
        }
    }
    Ok(max)
}

/// Checks that all crosses are planar within `tol`. Structural and
/// compatibility fields of the returned report are not evaluated here.
pub fn is_asymptotic(q: &Field<Vec3>, tol: f64) -> Result<ValidationReport, AsymptoticError> {
    let d = derivatives(q)?;
    let residual = planarity_residual(q, &d)?;
    Ok(ValidationReport {
        is_asymptotic: residual <= tol,
        is_diias: false,
        max_cross_planarity_residual: residual,
        max_structural_residual: 0.0,
        max_structural_residual_as_printed: 0.0,
        max_compatibility_residual: 0.0,
        max_cubic_independence_residual: 0.0,
        max_xi_constancy_residual: 0.0,
        xi_estimate: None,
    })
}

/// Per-face metric and normal.
///
/// In general `|omega| = sqrt(|M|)` with `M = [q_1, q_2, q_12]` and
/// `xi = q_12 / omega`. When the mixed derivatives share one constant
/// direction across all faces (a constant-normal candidate), that direction
/// is oriented to positive third component (else first nonzero component
/// positive) and `omega` is signed by the oriented component of `q_12`, so
/// the normal field is constant for a true constant-normal net.
pub fn affine_metric_and_normal(
    q: &Field<Vec3>,
    tol: f64,
) -> Result<(Field<f64>, Field<Vec3>), AsymptoticError> {
    let q1 = q.partial(Axis::U)?;
    let q2 = q.partial(Axis::V)?;
    let q12 = q1.partial(Axis::V)?;

    let mut reference = Vec3::ZERO;
    for a in q12.addresses() {
        let w = q12.get(a)?;
        if w.norm() > reference.norm() {
            reference = w;
        }
    }

    let mut candidate = true;
    let mut metric = Vec::new();
    for a in q12.addresses() {
        let twist = q12.get(a)?;
        let qu = q1.get(a.shifted(0, -1))?;
        let qv = q2.get(a.shifted(-1, 0))?;
        let m = det3(qu, qv, twist);
        let denom = qu.norm() * qv.norm() * twist.norm();
        if m.abs() <= tol * denom {
            return Err(AsymptoticError::MetricDegenerate { u: (a.du - 1) / 2, v: (a.dv - 1) / 2 });
        }
        if twist.cross(reference).norm() > tol * twist.norm() * reference.norm() || m <= 0.0 {
            candidate = false;
        }
        metric.push((a, twist, m));
    }

    let orientation = if candidate {
        let n = reference / reference.norm();
        let sign = if n.z.abs() > 1e-12 {
            n.z.signum()
        } else if n.x.abs() > 1e-12 {
            n.x.signum()
        } else {
            n.y.signum()
        };
        Some(n * sign)
    } else {
        None
    };

    let mut omega_values = Vec::with_capacity(metric.len());
    let mut xi_values = Vec::with_capacity(metric.len());
    for &(_, twist, m) in &metric {
        let omega = match orientation {
            Some(n) => twist.dot(n).signum() * m.sqrt(),
            None => m.abs().sqrt(),
        };
        omega_values.push(omega);
        xi_values.push(twist / omega);
    }

    let mut it_o = omega_values.into_iter();
    let omega = Field::from_fn(q12.origin(), q12.nu(), q12.nv(), |_| it_o.next().unwrap())?;
    let mut it_x = xi_values.into_iter();
    let xi = Field::from_fn(q12.origin(), q12.nu(), q12.nv(), |_| it_x.next().unwrap())?;
    Ok((omega, xi))
}

/// Full validation: planar crosses, constant normal, independence of the
/// cubic coefficients, all structural-equation variants, and the
/// compatibility identity.
pub fn verify_diias(q: &Field<Vec3>, tol: f64) -> Result<ValidationReport, AsymptoticError> {
    let d = derivatives(q)?;
    let planarity = planarity_residual(q, &d)?;
    let (omega, xi_field) = affine_metric_and_normal(q, tol)?;

    // Reference normal: the face whose mixed derivative is largest.
    let mut xi = vec3(0.0, 0.0, 0.0);
    let mut best = -1.0;
    for a in xi_field.addresses() {
        let twist = d.q12.get(a)?;
        if twist.norm() > best {
            best = twist.norm();
            xi = xi_field.get(a)?;
        }
    }
    let mut xi_residual = 0.0f64;
    for a in xi_field.addresses() {
        xi_residual = xi_residual.max((xi_field.get(a)? - xi).norm() / xi.norm());
    }

    // Cubic coefficients from the net and their transverse independence.
    let cubic_a = cubic_field(&d.q1, Axis::U, xi)?;
    let cubic_b = cubic_field(&d.q2, Axis::V, xi)?;
    let independence = independence_residual(&cubic_a, Axis::U)
        .max(independence_residual(&cubic_b, Axis::V));

    let mut structural = 0.0f64;
    let mut structural_printed = 0.0f64;
    let mut compatibility = 0.0f64;
    for a in q.addresses() {
        if !d.q11.contains(a) || !d.q22.contains(a) {
            continue;
        }
        let (u, v) = (a.du / 2, a.dv / 2);
        let a_here = cubic_a.get(a)?;
        let b_here = cubic_b.get(a)?;

        for su in [-1i64, 1] {
            for sv in [-1i64, 1] {
                let qu = d.q1.get(a.shifted(su, 0))?;
                let qv = d.q2.get(a.shifted(0, sv))?;
                let normal = qu.cross(qv);
                let nn = normal.dot(normal);
                if nn <= (tol * qu.norm() * qv.norm()).powi(2) {
                    return Err(AsymptoticError::NearSingularStarBasis { u, v });
                }
                let om = omega.get(a.shifted(su, sv))?;

                // q_11 expansion in the star basis.
                let q11 = d.q11.get(a)?;
                let lam = det3(q11, qv, normal) / nn;
                let mu = det3(qu, q11, normal) / nn;
                let omega_1 = omega.get(a.shifted(1, sv))? - omega.get(a.shifted(-1, sv))?;
                let res = coefficient_residual(lam, mu, omega_1 / om, a_here / om);
                structural = structural.max(res);
                structural_printed = structural_printed.max(res);

                // q_22 expansion in the star basis.
                let q22 = d.q22.get(a)?;
                let lam = det3(q22, qv, normal) / nn;
                let mu = det3(qu, q22, normal) / nn;
                let omega_2_matched = omega.get(a.shifted(su, 1))? - omega.get(a.shifted(su, -1))?;
                let omega_2_plus = omega.get(a.shifted(1, 1))? - omega.get(a.shifted(1, -1))?;
                structural = structural.max(coefficient_residual(
                    lam,
                    mu,
                    b_here / om,
                    omega_2_matched / om,
                ));
                structural_printed = structural_printed.max(coefficient_residual(
                    lam,
                    mu,
                    b_here / om,
                    omega_2_plus / om,
                ));
            }
        }

        let lhs = omega.get(a.shifted(1, -1))? * omega.get(a.shifted(-1, 1))?
            - omega.get(a.shifted(1, 1))? * omega.get(a.shifted(-1, -1))?;
        let rhs = a_here * b_here;
        compatibility =
            compatibility.max((lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0));
    }

    let is_asymptotic = planarity <= tol;
    let is_diias = is_asymptotic
        && xi_residual <= tol
        && independence <= tol
        && structural <= tol
        && compatibility <= tol;
    Ok(ValidationReport {
        is_asymptotic,
        is_diias,
        max_cross_planarity_residual: planarity,
        max_structural_residual: structural,
        max_structural_residual_as_printed: structural_printed,
        max_compatibility_residual: compatibility,
        max_cubic_independence_residual: independence,
        max_xi_constancy_residual: xi_residual,
        xi_estimate: Some(xi),
    })
}

/// Vertex field of cubic coefficients along `axis`, defined where both
/// same-direction derivatives exist: `A = [q_1(u - 1/2), q_1(u + 1/2), xi]`
/// and `B = [q_2(v + 1/2), q_2(v - 1/2), xi]`. The argument order for `B` is
/// the one that satisfies the structural and compatibility identities (for a
/// centre-chord net it equals `-[beta_2(v - 1/2), beta_2(v + 1/2)] / 4`).
pub(crate) fn cubic_field(
    d: &Field<Vec3>,
    axis: Axis,
    xi: Vec3,
) -> Result<Field<f64>, AsymptoticError> {
    let second_origin = match axis {
        Axis::U => d.origin().shifted(1, 0),
        Axis::V => d.origin().shifted(0, 1),
    };
    let (nu, nv) = match axis {
        Axis::U => (d.nu() - 1, d.nv()),
        Axis::V => (d.nu(), d.nv() - 1),
    };
    let field = Field::from_fn(second_origin, nu, nv, |a| match axis {
        Axis::U => det3(d.get(a.shifted(-1, 0)).unwrap(), d.get(a.shifted(1, 0)).unwrap(), xi),
        Axis::V => det3(d.get(a.shifted(0, 1)).unwrap(), d.get(a.shifted(0, -1)).unwrap(), xi),
    })?;
    Ok(field)
}

/// Deviation of a cubic-coefficient field from its per-line mean transverse
/// to `axis`, relative to the field's magnitude.
fn independence_residual(c: &Field<f64>, axis: Axis) -> f64 {
    let scale = c.values().fold(1.0f64, |m, v| m.max(v.abs()));
    let (n_along, n_across) = match axis {
        Axis::U => (c.nu(), c.nv()),
        Axis::V => (c.nv(), c.nu()),
    };
    let mut max_dev = 0.0f64;
    for i in 0..n_along as i64 {
        let line: Vec<f64> = (0..n_across as i64)
            .map(|j| {
                let a = match axis {
                    Axis::U => c.origin().shifted(2 * i, 2 * j),
                    Axis::V => c.origin().shifted(2 * j, 2 * i),
                };
                c.get(a).unwrap()
            })
            .collect();
        let mean = line.iter().sum::<f64>() / line.len() as f64;
        for v in line {
            max_dev = max_dev.max((v - mean).abs());
        }
    }
    max_dev / scale
}

fn coefficient_residual(lam: f64, mu: f64, lam_expected: f64, mu_expected: f64) -> f64 {
    let scale = lam.abs().max(mu.abs()).max(1.0);
    ((lam - lam_expected).abs().max((mu - mu_expected).abs())) / scale
}
