//! Bilinear interpolating patches: one hyperbolic-paraboloid piece per
//! quadrangle, glued with matching tangent planes along shared edges.
//! Includes tessellation for export, a tolerance-driven patch intersection
//! test, and the closed-form height ratios of the planar model star.

use thiserror::Error;

use crate::centre_chord::QuadNet;
use crate::geom::{vec3, Vec3};
use crate::grid::{CellKind, GridAddress, GridError};
use crate::singularity::EdgeRef;

#[derive(Debug, Error)]
pub enum PatchError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("address ({du}, {dv}) is not a face")]
    NotAFace { du: i64, dv: i64 },
    #[error("patch parameters ({s}, {t}) outside [0, 1]^2")]
    ParamOutOfRange { s: f64, t: f64 },
    #[error("subdivision count must be at least 1")]
    ZeroSubdivision,
    #[error("zero denominator in model-star ratios")]
    ZeroDenominator,
    #[error("edge ({du}, {dv}) does not have two adjacent faces")]
    NoAdjacentFaces { du: i64, dv: i64 },
    #[error("edge projects to a point; vertical plane undefined")]
    DegenerateEdge,
    #[error("sampled signs straddle the vertical plane")]
    MixedSigns,
}

/// The bilinear patch of one quadrangle. Stores the four corner points, so
/// corner evaluation is exact; the edge vectors and twist are derived views.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BilinearPatch {
    q00: Vec3,
    q10: Vec3,
    q01: Vec3,
    q11: Vec3,
    face: GridAddress,
}

impl BilinearPatch {
    /// Corner `q(u, v)` of the face `(u + 1/2, v + 1/2)`.
    #[inline]
    pub fn corner(&self) -> Vec3 {
        self.q00
    }

    /// `q_1(u + 1/2, v)`.
    #[inline]
    pub fn e1(&self) -> Vec3 {
        self.q10 - self.q00
    }

    /// `q_2(u, v + 1/2)`.
    #[inline]
    pub fn e2(&self) -> Vec3 {
        self.q01 - self.q00
    }

    /// `q_12(u + 1/2, v + 1/2)`.
    #[inline]
    pub fn twist(&self) -> Vec3 {
        self.q11 - self.q01 - self.q10 + self.q00
    }

    #[inline]
    pub fn face(&self) -> GridAddress {
        self.face
    }

    #[inline]
    pub fn corners(&self) -> [Vec3; 4] {
        [self.q00, self.q10, self.q01, self.q11]
    }

    /// Evaluate at `(s, t)` in `[0, 1]^2`. Computed as the convex corner
    /// combination, so parameter-boundary values are bit-identical between
    /// the two patches sharing an edge.
    pub fn eval(&self, s: f64, t: f64) -> Result<Vec3, PatchError> {
        if !(0.0..=1.0).contains(&s) || !(0.0..=1.0).contains(&t) {
            return Err(PatchError::ParamOutOfRange { s, t });
        }
        Ok(self.eval_unchecked(s, t))
    }

    #[inline]
    pub(crate) fn eval_unchecked(&self, s: f64, t: f64) -> Vec3 {
        let (rs, rt) = (1.0 - s, 1.0 - t);
        self.q00 * (rs * rt) + self.q10 * (s * rt) + self.q01 * (rs * t) + self.q11 * (s * t)
    }

    /// The patch restricted to a parameter rectangle, as a patch in its own
    /// right (bilinear maps restrict to bilinear maps).
    fn sub_patch(&self, s0: f64, s1: f64, t0: f64, t1: f64) -> BilinearPatch {
        BilinearPatch {
            q00: self.eval_unchecked(s0, t0),
            q10: self.eval_unchecked(s1, t0),
            q01: self.eval_unchecked(s0, t1),
            q11: self.eval_unchecked(s1, t1),
            face: self.face,
        }
    }

    /// Axis-aligned box of the corner control points; contains the patch.
    fn aabb(&self) -> (Vec3, Vec3) {
        let mut lo = self.q00;
        let mut hi = self.q00;
        for p in [self.q10, self.q01, self.q11] {
            lo = vec3(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z));
            hi = vec3(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z));
        }
        (lo, hi)
    }
}

/// The bilinear patch of the face `(u + 1/2, v + 1/2)` of a net.
pub fn patch_of(net: &QuadNet, face: GridAddress) -> Result<BilinearPatch, PatchError> {
    if face.kind() != CellKind::Face {
        return Err(PatchError::NotAFace { du: face.du, dv: face.dv });
    }
    let (u, v) = ((face.du - 1) / 2, (face.dv - 1) / 2);
    Ok(BilinearPatch {
        q00: net.vertex(u, v)?,
        q10: net.vertex(u + 1, v)?,
        q01: net.vertex(u, v + 1)?,
        q11: net.vertex(u + 1, v + 1)?,
        face,
    })
}

/// A small quad mesh from one patch.
#[derive(Clone, Debug, Default)]
pub struct Tessellation {
    pub vertices: Vec<Vec3>,
    pub quads: Vec<[usize; 4]>,
}

/// Sample the patch on an `(n + 1) x (n + 1)` parameter grid, producing
/// `n^2` consistently oriented quads.
pub fn tessellate(patch: &BilinearPatch, n: usize) -> Result<Tessellation, PatchError> {
    if n == 0 {
        return Err(PatchError::ZeroSubdivision);
    }
    let mut vertices = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        for j in 0..=n {
            vertices.push(patch.eval_unchecked(i as f64 / n as f64, j as f64 / n as f64));
        }
    }
    let mut quads = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let base = i * (n + 1) + j;
            quads.push([base, base + n + 1, base + n + 2, base + 1]);
        }
    }
    Ok(Tessellation { vertices, quads })
}

/// Outcome of the proximity test between two patches.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum IntersectOutcome {
    /// Points of the two surfaces within `tol` of each other were found.
    Intersecting { witness: Vec3 },
    /// The surfaces stay farther than `tol` apart.
    Disjoint,
    /// Subdivision exhausted its depth without a decision.
    Inconclusive,
}

impl IntersectOutcome {
    pub fn is_intersecting(&self) -> bool {
        matches!(self, IntersectOutcome::Intersecting { .. })
    }
}

const INTERSECT_MAX_DEPTH: u32 = 40;
const INTERSECT_NODE_BUDGET: usize = 500_000;

/// A non-planar bilinear patch lies on the quadric `zeta = sigma tau` in the
/// affine frame spanned by its edge vectors and twist. Membership of the
/// patch itself is `0 <= sigma, tau <= 1`.
struct PatchQuadric {
    origin: Vec3,
    inverse: crate::geom::Mat3,
}

impl PatchQuadric {
    fn of(patch: &BilinearPatch) -> Option<PatchQuadric> {
        let m = crate::geom::Mat3::from_cols(patch.e1(), patch.e2(), patch.twist());
        let inverse = m.inverse()?;
        // Reject nearly singular frames: coordinates would be meaningless.
        let scale = patch.e1().norm().max(patch.e2().norm()).max(patch.twist().norm());
        if !scale.is_finite() || m.det().abs() < 1e-12 * scale.powi(3) {
            return None;
        }
        Some(PatchQuadric { origin: patch.corner(), inverse })
    }

    /// Affine coordinates `(sigma, tau, zeta)` of a point.
    fn coords(&self, p: Vec3) -> Vec3 {
        self.inverse.mul_vec(p - self.origin)
    }

    /// Signed quadric value; zero exactly on the surface.
    fn value(&self, p: Vec3) -> f64 {
        let c = self.coords(p);
        c.z - c.x * c.y
    }

    /// The surface point with the given patch parameters.
    fn point(&self, patch: &BilinearPatch, sigma: f64, tau: f64) -> Vec3 {
        patch.eval_unchecked(sigma, tau)
    }
}

/// Try to certify a genuine crossing: the straight parameter-line edges of
/// `boxed` (a sub-patch of `target`'s partner) are scanned for sign changes
/// of the partner's quadric value; a bisected zero whose quadric coordinates
/// fall inside the partner's parameter square is an exact surface-surface
/// contact witness.
fn crossing_certificate(
    boxed: &BilinearPatch,
    partner: &BilinearPatch,
    quadric: &PatchQuadric,
    tol: f64,
) -> Option<Vec3> {
    let segments = [
        (boxed.q00, boxed.q10),
        (boxed.q01, boxed.q11),
        (boxed.q00, boxed.q01),
        (boxed.q10, boxed.q11),
    ];
    for (a, b) in segments {
        let (fa, fb) = (quadric.value(a), quadric.value(b));
        if fa == 0.0 || fb == 0.0 || (fa > 0.0) != (fb > 0.0) {
            // Bisection on the segment (which lies on the boxed patch).
            let (mut lo, mut hi, mut flo) = (0.0f64, 1.0f64, fa);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                let fm = quadric.value(a + (b - a) * mid);
                if fm == 0.0 {
                    lo = mid;
                    break;
                }
                if (fm > 0.0) == (flo > 0.0) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            let hit = a + (b - a) * lo;
            let c = quadric.coords(hit);
            if (0.0..=1.0).contains(&c.x) && (0.0..=1.0).contains(&c.y) {
                let on_partner = quadric.point(partner, c.x, c.y);
                if (hit - on_partner).norm() <= tol {
                    return Some((hit + on_partner) * 0.5);
                }
            }
        }
    }
    None
}

/// Do the two patches come within `tol` of each other on the parameter
/// region shrunk by `tol` from each boundary?
///
/// Bounding boxes of the corner control nets are pruned against each other
/// with recursive four-way parameter bisection of both patches, nearest pair
/// first. A sampled point pair within `tol` decides positively; exhausting
/// the box tree decides negatively; hitting the depth or node budget without
/// a decision is reported as such.
pub fn patches_intersect(p1: &BilinearPatch, p2: &BilinearPatch, tol: f64) -> IntersectOutcome {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    #[derive(PartialEq)]
    struct Dist(f64);
    impl Eq for Dist {}
    impl PartialOrd for Dist {
        fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(o))
        }
    }
    impl Ord for Dist {
        fn cmp(&self, o: &Self) -> std::cmp::Ordering {
            self.0.total_cmp(&o.0)
        }
    }

    let lo = tol.clamp(0.0, 0.49);
    let hi = 1.0 - lo;
    let a = p1.sub_patch(lo, hi, lo, hi);
    let b = p2.sub_patch(lo, hi, lo, hi);
    let quad_a = PatchQuadric::of(&a);
    let quad_b = PatchQuadric::of(&b);

    // Nearest box pair first; among touching pairs, deepest first, so the
    // search dives along an intersection instead of flooding breadth-first.
    type Key = (Dist, Reverse<u32>, Dist, usize);
    let mut frontier: BinaryHeap<Reverse<Key>> = BinaryHeap::new();
    let mut nodes: Vec<(BilinearPatch, BilinearPatch)> = vec![(a, b)];
    frontier.push(Reverse((Dist(0.0), Reverse(0), Dist(0.0), 0)));
    let mut visited = 0usize;
    let mut exhausted = false;
    while let Some(Reverse((_, Reverse(depth), _, idx))) = frontier.pop() {
        let (pa, pb) = nodes[idx];
        visited += 1;
        if visited > INTERSECT_NODE_BUDGET {
            return IntersectOutcome::Inconclusive;
        }
        // Exact crossing certificates via the partner's quadric.
        if let Some(q) = &quad_b {
            if let Some(witness) = crossing_certificate(&pa, &b, q, tol) {
                return IntersectOutcome::Intersecting { witness };
            }
        }
        if let Some(q) = &quad_a {
            if let Some(witness) = crossing_certificate(&pb, &a, q, tol) {
                return IntersectOutcome::Intersecting { witness };
            }
        }
        let (la, ha) = pa.aabb();
        let (lb, hb) = pb.aabb();
        let gap = aabb_distance(la, ha, lb, hb);
        // Each box contains surface points of its patch, so the surfaces
        // come within diam_a + gap + diam_b of each other.
        if (ha - la).norm() + gap + (hb - lb).norm() <= tol {
            let witness = ((la + ha) * 0.5 + (lb + hb) * 0.5) * 0.5;
            return IntersectOutcome::Intersecting { witness };
        }
        let ca = pa.eval_unchecked(0.5, 0.5);
        let cb = pb.eval_unchecked(0.5, 0.5);
        if (ca - cb).norm() <= tol {
            return IntersectOutcome::Intersecting { witness: (ca + cb) * 0.5 };
        }
        if depth >= INTERSECT_MAX_DEPTH {
            exhausted = true;
            continue;
        }
        for (s0, s1, t0, t1) in QUARTERS {
            let sa = pa.sub_patch(s0, s1, t0, t1);
            let (la, ha) = sa.aabb();
            for (r0, r1, w0, w1) in QUARTERS {
                let sb = pb.sub_patch(r0, r1, w0, w1);
                let (lb, hb) = sb.aabb();
                let d = aabb_distance(la, ha, lb, hb);
                if d <= tol {
                    let cd = (sa.eval_unchecked(0.5, 0.5) - sb.eval_unchecked(0.5, 0.5)).norm();
                    nodes.push((sa, sb));
                    frontier.push(Reverse((
                        Dist(d),
                        Reverse(depth + 1),
                        Dist(cd),
                        nodes.len() - 1,
                    )));
                }
            }
        }
    }
    if exhausted {
        IntersectOutcome::Inconclusive
    } else {
        IntersectOutcome::Disjoint
    }
}

const QUARTERS: [(f64, f64, f64, f64); 4] = [
    (0.0, 0.5, 0.0, 0.5),
    (0.5, 1.0, 0.0, 0.5),
    (0.0, 0.5, 0.5, 1.0),
    (0.5, 1.0, 0.5, 1.0),
];

fn aabb_distance(lo_a: Vec3, hi_a: Vec3, lo_b: Vec3, hi_b: Vec3) -> f64 {
    let dx = (lo_b.x - hi_a.x).max(lo_a.x - hi_b.x).max(0.0);
    let dy = (lo_b.y - hi_a.y).max(lo_a.y - hi_b.y).max(0.0);
    let dz = (lo_b.z - hi_a.z).max(lo_a.z - hi_b.z).max(0.0);
    vec3(dx, dy, dz).norm()
}

/// Height ratios of the planar model star with
/// `q(-1,0) = (s1, 0, 0)`, `q(1,0) = (0, s2, 0)`, `q(0,1) = (a, b, 0)`,
/// `q(0,-1) = (c, d, 0)` and `q(0,0)` at the origin: star planarity at the
/// four neighbours forces
/// `z(-1,1)/z(1,1) = -s1 b / (s2 a)`, `z(-1,-1)/z(1,1) = -s1 d / (s2 a)`,
/// `z(1,-1)/z(1,1) = c / a`.
pub fn model_net_ratios(
    s1: f64,
    s2: f64,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
) -> Result<(f64, f64, f64), PatchError> {
    if s2 * a == 0.0 || a == 0.0 {
        return Err(PatchError::ZeroDenominator);
    }
    Ok((-(s1 * b) / (s2 * a), -(s1 * d) / (s2 * a), c / a))
}

/// The two patches adjacent to an interior edge of the net.
pub fn edge_patch_pair(
    net: &QuadNet,
    edge: EdgeRef,
) -> Result<(BilinearPatch, BilinearPatch), PatchError> {
    let a = edge.address();
    let (f1, f2) = match edge.label() {
        crate::grid::Axis::U => (a.shifted(0, -1), a.shifted(0, 1)),
        crate::grid::Axis::V => (a.shifted(-1, 0), a.shifted(1, 0)),
    };
    if !net.omega().contains(f1) || !net.omega().contains(f2) {
        return Err(PatchError::NoAdjacentFaces { du: a.du, dv: a.dv });
    }
    Ok((patch_of(net, f1)?, patch_of(net, f2)?))
}

/// Cuspidal-edge geometry: both patches adjacent to the edge lie (weakly) on
/// one side of the vertical plane containing it. Interior samples on a 3x3
/// parameter grid decide the side; straddling samples are reported, not
/// resolved.
pub fn cuspidal_edge_same_side(
    net: &QuadNet,
    edge: EdgeRef,
    tau: f64,
) -> Result<bool, PatchError> {
    let [(u0, v0), (u1, v1)] = edge.endpoints();
    let p0 = net.vertex(u0, v0)?;
    let p1 = net.vertex(u1, v1)?;
    let dir = (p1 - p0).xy();
    if dir.norm() == 0.0 {
        return Err(PatchError::DegenerateEdge);
    }
    let (pa, pb) = edge_patch_pair(net, edge)?;
    let mut side = 0i8;
    for patch in [pa, pb] {
        for i in 1..=3 {
            for j in 1..=3 {
                let p = patch.eval_unchecked(i as f64 / 4.0, j as f64 / 4.0);
                let s = dir.cross(p.xy() - p0.xy());
                if s.abs() <= tau {
                    continue;
                }
                let sgn = if s > 0.0 { 1 } else { -1 };
                if side == 0 {
                    side = sgn;
                } else if side != sgn {
                    return Err(PatchError::MixedSigns);
                }
            }
        }
    }
    Ok(true)
}
