//! Shared corpus generators for the integration suites: admissible generating
//! pairs (plain, with swallowtails, ruled), random planar and spatial affine
//! maps. Everything is seeded and deterministic.

use diias::geom::{vec2, vec3, Mat3, Vec2, Vec3};
use diias::polyline::{check_admissible, Polyline2};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pline(start: i64, pts: &[(f64, f64)]) -> Polyline2 {
    Polyline2::new(start, pts.iter().map(|&(x, y)| vec2(x, y)).collect()).unwrap()
}

/// The ruled worked example: a vee over a horizontal line.
pub fn ruled_example() -> (Polyline2, Polyline2) {
    (
        pline(-1, &[(-1.0, 3.0), (0.0, 2.0), (1.0, 5.0)]),
        pline(-1, &[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]),
    )
}

/// The two-parabola worked example on the given inclusive ranges.
pub fn parabola_example(u: (i64, i64), v: (i64, i64)) -> (Polyline2, Polyline2) {
    let alpha: Vec<(f64, f64)> =
        (u.0..=u.1).map(|u| (u as f64, 5.0 - (u as f64 - 2.0).powi(2) / 8.0)).collect();
    let beta: Vec<(f64, f64)> = (v.0..=v.1).map(|v| ((v * v) as f64 - 2.0, v as f64)).collect();
    (pline(u.0, &alpha), pline(v.0, &beta))
}

fn is_admissible(alpha: &Polyline2, beta: &Polyline2) -> bool {
    matches!(check_admissible(alpha, beta), Ok(r) if r.admissible())
}

/// Two convex arcs facing each other; rejection-sampled until the pair passes
/// the full restriction check. Domains stay within 8x8.
pub fn admissible_pair(rng: &mut ChaCha8Rng) -> (Polyline2, Polyline2) {
    for _ in 0..400 {
        let na: usize = rng.gen_range(4..=8);
        let nb: usize = rng.gen_range(4..=8);
        let ka: f64 = rng.gen_range(0.05..0.35);
        let kb: f64 = rng.gen_range(0.05..0.35);
        let gap: f64 = rng.gen_range(2.0..6.0);
        let xa0: f64 = rng.gen_range(-1.0..1.0);
        let xb0: f64 = rng.gen_range(-1.0..1.0);
        let sa: f64 = rng.gen_range(0.7..1.4);
        let sb: f64 = rng.gen_range(0.7..1.4);
        let u0: i64 = rng.gen_range(-3..=0);
        let v0: i64 = rng.gen_range(-3..=0);
        let alpha: Vec<(f64, f64)> = (0..na)
            .map(|i| {
                let t = sa * (i as f64 - (na - 1) as f64 / 2.0);
                (xa0 + t, gap / 2.0 - ka * t * t)
            })
            .collect();
        let beta: Vec<(f64, f64)> = (0..nb)
            .map(|j| {
                let t = sb * (j as f64 - (nb - 1) as f64 / 2.0);
                (xb0 + t, -gap / 2.0 + kb * t * t)
            })
            .collect();
        let (alpha, beta) = (pline(u0, &alpha), pline(v0, &beta));
        if is_admissible(&alpha, &beta) {
            return (alpha, beta);
        }
    }
    panic!("admissible_pair: rejection sampling exhausted");
}

/// A perturbed copy of the two-parabola example restricted to a window that
/// is simultaneously admissible and contains a swallowtail vertex.
pub fn swallowtail_pair(rng: &mut ChaCha8Rng) -> (Polyline2, Polyline2) {
    for _ in 0..400 {
        let du: f64 = rng.gen_range(-0.08..0.08);
        let k: f64 = rng.gen_range(7.0..9.0);
        let c: f64 = rng.gen_range(4.6..5.4);
        let e: f64 = rng.gen_range(0.9..1.1);
        let mut jitter = |p: (f64, f64)| {
            (p.0 + rng.gen_range(-0.03..0.03), p.1 + rng.gen_range(-0.03..0.03))
        };
        let alpha: Vec<(f64, f64)> =
            (1..=5).map(|u| jitter((u as f64 + du, c - (u as f64 - 2.0).powi(2) / k))).collect();
        let beta: Vec<(f64, f64)> =
            (-2..=0).map(|v| jitter((e * (v * v) as f64 - 2.0, v as f64))).collect();
        let (alpha, beta) = (pline(1, &alpha), pline(-2, &beta));
        if !is_admissible(&alpha, &beta) {
            continue;
        }
        if let Ok(report) = diias::singularity_report(&alpha, &beta) {
            if !report.swallowtails.is_empty() {
                return (alpha, beta);
            }
        }
    }
    panic!("swallowtail_pair: rejection sampling exhausted");
}

/// A ruled pair: collinear monotone beta, convex alpha arc above it. With
/// `fold` the tangent sweep of alpha crosses the beta direction once, giving
/// one column of singular edges; without it the pair is singularity-free.
pub fn ruled_pair(rng: &mut ChaCha8Rng, fold: bool) -> (Polyline2, Polyline2) {
    for _ in 0..800 {
        let nb: usize = rng.gen_range(3..=7);
        let na: usize = rng.gen_range(if fold { 5 } else { 4 }..=8);
        let dir_angle: f64 = rng.gen_range(-0.25..0.25);
        let d = vec2(dir_angle.cos(), dir_angle.sin());
        let base = vec2(rng.gen_range(-1.0..1.0), rng.gen_range(-3.5..-2.5));
        let mut t = 0.0;
        let beta: Vec<(f64, f64)> = (0..nb)
            .map(|_| {
                let p = base + d * t;
                t += rng.gen_range(0.5..1.5);
                (p.x, p.y)
            })
            .collect();

        // Edge directions sweep clockwise; with a fold they cross dir_angle.
        let start_off: f64 = rng.gen_range(0.35..0.7);
        let mut psi = dir_angle + start_off;
        let mut p = vec2(rng.gen_range(-1.0..1.0), rng.gen_range(1.0..2.0));
        let mut alpha = vec![(p.x, p.y)];
        let edges = na - 1;
        let total_turn: f64 = if fold {
            start_off + rng.gen_range(0.2..0.5)
        } else {
            rng.gen_range(0.3..(start_off - 0.1).max(0.31))
        };
        for i in 0..edges {
            let r: f64 = rng.gen_range(0.5..1.5);
            p = p + vec2(psi.cos(), psi.sin()) * r;
            alpha.push((p.x, p.y));
            if i + 1 < edges {
                psi -= total_turn / (edges - 1) as f64;
            }
        }
        let (alpha, beta) = (pline(rng.gen_range(-3..=0), &alpha), pline(rng.gen_range(-3..=0), &beta));
        if !is_admissible(&alpha, &beta) {
            continue;
        }
        let omega = diias::metric_field(&alpha, &beta).unwrap();
        let singular = match diias::singularity::singular_edges(&omega, 1e-12) {
            Ok(s) => s,
            Err(_) => continue,
        };
        if fold != singular.is_empty() {
            return (alpha, beta);
        }
    }
    panic!("ruled_pair: rejection sampling exhausted");
}

/// Orientation-preserving planar affine map applied to both generators.
pub fn random_planar_map(rng: &mut ChaCha8Rng) -> impl Fn(Vec2) -> Vec2 {
    let theta: f64 = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    let (s1, s2): (f64, f64) = (rng.gen_range(0.5..2.0), rng.gen_range(0.5..2.0));
    let sh: f64 = rng.gen_range(-0.5..0.5);
    let t = vec2(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
    let (c, s) = (theta.cos(), theta.sin());
    move |p: Vec2| {
        let p = vec2(s1 * p.x + sh * s2 * p.y, s2 * p.y);
        vec2(c * p.x - s * p.y, c * p.y + s * p.x) + t
    }
}

pub fn map_pair(
    pair: &(Polyline2, Polyline2),
    f: impl Fn(Vec2) -> Vec2,
) -> (Polyline2, Polyline2) {
    let apply = |l: &Polyline2| {
        Polyline2::new(l.start_index(), l.points().iter().map(|p| f(*p)).collect()).unwrap()
    };
    (apply(&pair.0), apply(&pair.1))
}

/// Random affine map of space with unit determinant.
pub fn random_unimodular_map(rng: &mut ChaCha8Rng) -> (Mat3, Vec3) {
    loop {
        let mut col = || {
            vec3(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        };
        let m = Mat3::from_cols(col(), col(), col());
        let det = m.det();
        if det.abs() < 0.2 {
            continue;
        }
        let scale = det.abs().powf(1.0 / 3.0) * det.signum();
        let m = Mat3::from_cols(m.cols[0] / scale, m.cols[1] / scale, m.cols[2] / scale);
        let t = vec3(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        return (m, t);
    }
}
