//! Singular (cuspidal) edge detection, the midpoint parallel tangent locus
//! and its connected components, star typicality, vertex configurations,
//! swallowtail vertices, and the step-by-step trichotomy tracer.
//!
//! Two equivalent singular-edge characterizations are implemented: the sign
//! test `omega * omega' < 0` across each interior edge, and the half-plane
//! test of discrete parallelism on the generating pair. They must agree edge
//! for edge on admissible pairs; tests assert this.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::geom::{Vec2, Vec3};
use crate::grid::{Axis, CellKind, Field, GridAddress, GridError};
use crate::polyline::{pair_diagonal, Polyline2, PolylineError};
use crate::tol::Tolerances;

#[derive(Debug, Error)]
pub enum SingularityError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Polyline(#[from] PolylineError),
    #[error("affine metric vanishes on quadrangle ({u} + 1/2, {v} + 1/2)")]
    OmegaZero { u: i64, v: i64 },
    #[error("vertex ({u}, {v}) has {count} singular star edges; restriction violation")]
    InvalidStar { u: i64, v: i64, count: usize },
    #[error("vertex ({u}, {v}) has degree {degree} in the singular-edge graph; not a simple chain")]
    ChainDegree { u: i64, v: i64, degree: usize },
    #[error("vertex ({u}, {v}) is not interior")]
    BoundaryVertex { u: i64, v: i64 },
    #[error("angular tie in the star at ({u}, {v})")]
    AngularTie { u: i64, v: i64 },
    #[error("degenerate half-plane test at vertex ({u}, {v})")]
    DegenerateSigns { u: i64, v: i64 },
    #[error("trichotomy hypothesis does not hold at ({u}, {v})")]
    HypothesisFailed { u: i64, v: i64 },
    #[error("zero or multiple trichotomy cases hold at ({u}, {v}); restriction violation")]
    NoUniqueCase { u: i64, v: i64 },
    #[error("swallowtail set and cusp set disagree at ({u}, {v}); restriction violation")]
    CuspMismatch { u: i64, v: i64 },
    #[error("chord through alpha({u}) and beta({v}) is degenerate")]
    DegenerateChord { u: i64, v: i64 },
    #[error("address ({du}, {dv}) is not an edge")]
    NotAnEdge { du: i64, dv: i64 },
}

/// A grid edge, identified by its doubled address (odd in exactly one axis).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    address: GridAddress,
}

impl EdgeRef {
    pub fn new(address: GridAddress) -> Result<Self, SingularityError> {
        match address.kind() {
            CellKind::UEdge | CellKind::VEdge => Ok(EdgeRef { address }),
            _ => Err(SingularityError::NotAnEdge { du: address.du, dv: address.dv }),
        }
    }

    /// The edge `(u + 1/2, v)`.
    pub fn u_edge(u: i64, v: i64) -> Self {
        EdgeRef { address: GridAddress::u_edge(u, v) }
    }

    /// The edge `(u, v + 1/2)`.
    pub fn v_edge(u: i64, v: i64) -> Self {
        EdgeRef { address: GridAddress::v_edge(u, v) }
    }

    #[inline]
    pub fn address(self) -> GridAddress {
        self.address
    }

    pub fn label(self) -> Axis {
        match self.address.kind() {
            CellKind::UEdge => Axis::U,
            _ => Axis::V,
        }
    }

    /// The two endpoint vertices `(u, v)`.
    pub fn endpoints(self) -> [(i64, i64); 2] {
        match self.label() {
            Axis::U => {
                let (u, v) = ((self.address.du - 1) / 2, self.address.dv / 2);
                [(u, v), (u + 1, v)]
            }
            Axis::V => {
                let (u, v) = (self.address.du / 2, (self.address.dv - 1) / 2);
                [(u, v), (u, v + 1)]
            }
        }
    }
}

/// Singular edges by the metric sign test: an edge is singular when the two
/// adjacent faces carry opposite metric signs. Boundary edges (one adjacent
/// face) are never included. A vanishing metric anywhere is an input error.
pub fn singular_edges(
    omega: &Field<f64>,
    tau_zero: f64,
) -> Result<BTreeSet<EdgeRef>, SingularityError> {
    for a in omega.addresses() {
        if omega.get(a)?.abs() <= tau_zero {
            return Err(SingularityError::OmegaZero { u: (a.du - 1) / 2, v: (a.dv - 1) / 2 });
        }
    }
    let mut out = BTreeSet::new();
    for a in omega.addresses() {
        let here = omega.get(a)?;
        // u-edge between faces (.., v - 1/2) and (.., v + 1/2)
        if let Ok(below) = omega.get(a.shifted(0, -2)) {
            if here * below < 0.0 {
                out.insert(EdgeRef::new(a.shifted(0, -1))?);
            }
        }
        // v-edge between faces (u - 1/2, ..) and (u + 1/2, ..)
        if let Ok(left) = omega.get(a.shifted(-2, 0)) {
            if here * left < 0.0 {
                out.insert(EdgeRef::new(a.shifted(-1, 0))?);
            }
        }
    }
    Ok(out)
}

/// Singular edges by the discrete-parallelism half-plane test on the
/// generating pair; the independent route to the same set.
pub fn singular_edges_by_parallelism(
    alpha: &Polyline2,
    beta: &Polyline2,
) -> Result<BTreeSet<EdgeRef>, SingularityError> {
    singular_edges_by_parallelism_with(alpha, beta, &Tolerances::default())
}

pub fn singular_edges_by_parallelism_with(
    alpha: &Polyline2,
    beta: &Polyline2,
    tol: &Tolerances,
) -> Result<BTreeSet<EdgeRef>, SingularityError> {
    let tau = tol.cross_abs(pair_diagonal(alpha, beta));
    let mut out = BTreeSet::new();
    // u-edge (u + 1/2, v): alpha_1(u + 1/2) discretely parallel to beta(v).
    for u in alpha.start_index()..alpha.end_index() {
        let e = alpha.edge(u)?;
        for v in beta.interior_indices() {
            if crate::polyline::discretely_parallel(e, beta, v, tau)? {
                out.insert(EdgeRef::u_edge(u, v));
            }
        }
    }
    // v-edge (u, v + 1/2): beta_2(v + 1/2) discretely parallel to alpha(u).
    for v in beta.start_index()..beta.end_index() {
        let e = beta.edge(v)?;
        for u in alpha.interior_indices() {
            if crate::polyline::discretely_parallel(e, alpha, u, tau)? {
                out.insert(EdgeRef::v_edge(u, v));
            }
        }
    }
    Ok(out)
}

/// One connected component of the midpoint locus: a chain of grid vertices
/// and their planar midpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct DmptlComponent {
    pub grid_vertices: Vec<(i64, i64)>,
    pub points: Vec<Vec2>,
}

/// Chain the midsegments of the singular edges into connected components.
///
/// Each singular edge contributes the x-net segment between its endpoints;
/// segments are chained by shared grid vertices (index-level adjacency, not
/// geometric coincidence). A vertex of degree > 2 violates the polygonal-line
/// corollary and is reported, never resolved silently.
pub fn dmptl(
    alpha: &Polyline2,
    beta: &Polyline2,
    singular: &BTreeSet<EdgeRef>,
) -> Result<Vec<DmptlComponent>, SingularityError> {
    let x = |u: i64, v: i64| -> Result<Vec2, SingularityError> {
        Ok((alpha.point(u)? + beta.point(v)?) * 0.5)
    };
    let mut incident: BTreeMap<(i64, i64), Vec<EdgeRef>> = BTreeMap::new();
    for &e in singular {
        for p in e.endpoints() {
            incident.entry(p).or_default().push(e);
        }
    }
    for (&(u, v), edges) in &incident {
        if edges.len() > 2 {
            return Err(SingularityError::ChainDegree { u, v, degree: edges.len() });
        }
    }

    let mut remaining: BTreeSet<EdgeRef> = singular.clone();
    let mut components = Vec::new();
    while let Some(&start_edge) = remaining.iter().next() {
        // Prefer a chain endpoint within this component so open chains are
        // walked end to end; fall back to the seed for closed loops.
        let mut cursor = start_edge;
        let mut from = start_edge.endpoints()[0];
        let mut walk_start = None;
        {
            // Find an endpoint of the component with degree 1.
            let mut stack = vec![start_edge];
            let mut seen = BTreeSet::new();
            while let Some(e) = stack.pop() {
                if !seen.insert(e) {
                    continue;
                }
                for p in e.endpoints() {
                    let inc = &incident[&p];
                    if inc.len() == 1 {
                        walk_start = Some((e, p));
                    }
                    for &n in inc {
                        if remaining.contains(&n) && !seen.contains(&n) {
                            stack.push(n);
                        }
                    }
                }
            }
        }
        if let Some((e, p)) = walk_start {
            cursor = e;
            from = p;
        }

        let mut grid_vertices = vec![from];
        let mut points = vec![x(from.0, from.1)?];
        loop {
            remaining.remove(&cursor);
            let [a, b] = cursor.endpoints();
            let next_vertex = if a == from { b } else { a };
            grid_vertices.push(next_vertex);
            points.push(x(next_vertex.0, next_vertex.1)?);
            let next_edge = incident[&next_vertex]
                .iter()
                .find(|e| **e != cursor && remaining.contains(e))
                .copied();
            match next_edge {
                Some(e) => {
                    cursor = e;
                    from = next_vertex;
                }
                None => break,
            }
        }
        // Canonical orientation: lexicographically smaller end first.
        if grid_vertices.last() < grid_vertices.first() {
            grid_vertices.reverse();
            points.reverse();
        }
        components.push(DmptlComponent { grid_vertices, points });
    }
    Ok(components)
}

/// Star classification of an interior vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarClass {
    /// Neighbours appear in grid order around the centre (either orientation).
    Typical,
    Atypical,
}

/// Star classification extended with boundary vertices, for report maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarClassification {
    Typical,
    Atypical,
    Boundary,
}

/// Classify the planar star at `(u, v)`: typical iff the four neighbours
/// occur in the cyclic order east, north, west, south (up to rotation and
/// reversal) when sorted by angle around the centre.
pub fn classify_star_x(
    x: &Field<Vec2>,
    u: i64,
    v: i64,
    tau: f64,
) -> Result<StarClass, SingularityError> {
    let centre = GridAddress::vertex(u, v);
    let mut dirs = [Vec2::ZERO; 4];
    let offsets = [(2, 0), (0, 2), (-2, 0), (0, -2)];
    for (k, (ddu, ddv)) in offsets.iter().enumerate() {
        let p = x
            .get(centre.shifted(*ddu, *ddv))
            .map_err(|_| SingularityError::BoundaryVertex { u, v })?;
        dirs[k] = p - x.get(centre)?;
    }
    classify_directions(&dirs, u, v, tau)
}

/// Classify the star of a spatial net inside its own star plane. For a net
/// with constant vertical normal this agrees with the planar classification.
pub fn classify_star_q(
    q: &Field<Vec3>,
    u: i64,
    v: i64,
    tau: f64,
) -> Result<StarClass, SingularityError> {
    let centre = GridAddress::vertex(u, v);
    let mut dirs3 = [Vec3::ZERO; 4];
    let offsets = [(2, 0), (0, 2), (-2, 0), (0, -2)];
    for (k, (ddu, ddv)) in offsets.iter().enumerate() {
        let p = q
            .get(centre.shifted(*ddu, *ddv))
            .map_err(|_| SingularityError::BoundaryVertex { u, v })?;
        dirs3[k] = p - q.get(centre)?;
    }
    // Star-plane normal: the largest cross product of adjacent directions
    // (the diagonals can be exactly parallel in symmetric stars).
    let mut n = Vec3::ZERO;
    for k in 0..4 {
        let c = dirs3[k].cross(dirs3[(k + 1) % 4]);
        if c.norm() > n.norm() {
            n = c;
        }
    }
    if n.norm() == 0.0 {
        return Err(SingularityError::DegenerateSigns { u, v });
    }
    let n = n / n.norm();
    let mut e1 = dirs3[0] - n * dirs3[0].dot(n);
    if e1.norm() == 0.0 {
        return Err(SingularityError::DegenerateSigns { u, v });
    }
    e1 = e1 / e1.norm();
    let e2 = n.cross(e1);
    let dirs: Vec<Vec2> = dirs3.iter().map(|d| Vec2 { x: d.dot(e1), y: d.dot(e2) }).collect();
    classify_directions(&[dirs[0], dirs[1], dirs[2], dirs[3]], u, v, tau)
}

fn classify_directions(
    dirs: &[Vec2; 4],
    u: i64,
    v: i64,
    tau: f64,
) -> Result<StarClass, SingularityError> {
    for d in dirs {
        if d.norm() == 0.0 {
            return Err(SingularityError::DegenerateSigns { u, v });
        }
    }
    // Same-direction ties make the angular order ill-defined (opposite
    // directions are fine).
    for i in 0..4 {
        for j in i + 1..4 {
            if dirs[i].cross(dirs[j]).abs() <= tau && dirs[i].dot(dirs[j]) > 0.0 {
                return Err(SingularityError::AngularTie { u, v });
            }
        }
    }
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&i, &j| {
        angle_key(dirs[i])
            .partial_cmp(&angle_key(dirs[j]))
            .expect("finite directions")
    });
    let pos = order.iter().position(|&k| k == 0).expect("index 0 present");
    let forward = (0..4).all(|k| order[(pos + k) % 4] == k);
    let backward = (0..4).all(|k| order[(pos + 4 - k) % 4] == k);
    Ok(if forward || backward { StarClass::Typical } else { StarClass::Atypical })
}

#[inline]
fn angle_key(d: Vec2) -> f64 {
    d.y.atan2(d.x)
}

/// The four vertex configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StarConfig {
    /// No singular edge in the star.
    Config0,
    /// Two consecutive singular edges with the same label.
    Config1,
    /// Two adjacent singular edges with different labels, typical star.
    Config2,
    /// Two adjacent singular edges with different labels, atypical star:
    /// a swallowtail vertex.
    Config3,
}

/// The four star edges at an interior vertex.
pub fn star_edges(u: i64, v: i64) -> [EdgeRef; 4] {
    [
        EdgeRef::u_edge(u - 1, v),
        EdgeRef::u_edge(u, v),
        EdgeRef::v_edge(u, v - 1),
        EdgeRef::v_edge(u, v),
    ]
}

/// Configuration of an interior vertex from its singular star edges and star
/// class. A star with one or more than two singular edges contradicts the
/// restriction corollary and is reported as an error.
pub fn vertex_configuration(
    singular: &BTreeSet<EdgeRef>,
    star: StarClass,
    u: i64,
    v: i64,
) -> Result<StarConfig, SingularityError> {
    let present: Vec<EdgeRef> =
        star_edges(u, v).into_iter().filter(|e| singular.contains(e)).collect();
    match present.len() {
        0 => Ok(StarConfig::Config0),
        2 => {
            if present[0].label() == present[1].label() {
                Ok(StarConfig::Config1)
            } else if star == StarClass::Typical {
                Ok(StarConfig::Config2)
            } else {
                Ok(StarConfig::Config3)
            }
        }
        n => Err(SingularityError::InvalidStar { u, v, count: n }),
    }
}

/// Swallowtail vertices: exactly the atypical different-label configurations.
pub fn swallowtails(configs: &BTreeMap<(i64, i64), StarConfig>) -> BTreeSet<(i64, i64)> {
    configs
        .iter()
        .filter(|(_, c)| **c == StarConfig::Config3)
        .map(|(&k, _)| k)
        .collect()
}

/// Cusps of the midpoint locus by the chord half-plane test: at a vertex
/// where two different-label singular edges meet, the two adjacent locus
/// vertices must lie strictly in the same open half-plane of the line through
/// `alpha(u)` and `beta(v)`.
pub fn dmptl_cusps(
    alpha: &Polyline2,
    beta: &Polyline2,
    singular: &BTreeSet<EdgeRef>,
) -> Result<BTreeSet<(i64, i64)>, SingularityError> {
    dmptl_cusps_with(alpha, beta, singular, &Tolerances::default())
}

pub fn dmptl_cusps_with(
    alpha: &Polyline2,
    beta: &Polyline2,
    singular: &BTreeSet<EdgeRef>,
    tol: &Tolerances,
) -> Result<BTreeSet<(i64, i64)>, SingularityError> {
    let tau = tol.cross_abs(pair_diagonal(alpha, beta));
    let x = |u: i64, v: i64| -> Result<Vec2, SingularityError> {
        Ok((alpha.point(u)? + beta.point(v)?) * 0.5)
    };
    let mut cusps = BTreeSet::new();
    for u in alpha.interior_indices() {
        for v in beta.interior_indices() {
            let present: Vec<EdgeRef> =
                star_edges(u, v).into_iter().filter(|e| singular.contains(e)).collect();
            if present.len() != 2 || present[0].label() == present[1].label() {
                continue;
            }
            let mut neighbours = Vec::with_capacity(2);
            for e in &present {
                let other = e.endpoints().into_iter().find(|p| *p != (u, v)).expect("two ends");
                neighbours.push(x(other.0, other.1)?);
            }
            let a = alpha.point(u)?;
            let b = beta.point(v)?;
            let chord = b - a;
            if chord.norm() == 0.0 {
                return Err(SingularityError::DegenerateChord { u, v });
            }
            let c1 = chord.cross(neighbours[0] - a);
            let c2 = chord.cross(neighbours[1] - a);
            if c1.abs() <= tau || c2.abs() <= tau {
                return Err(SingularityError::DegenerateChord { u, v });
            }
            if (c1 > 0.0) == (c2 > 0.0) {
                cusps.insert((u, v));
            }
        }
    }
    Ok(cusps)
}

/// A discrete-parallelism statement anchored at the vertex `(u, v)`:
/// with label `U`, "`alpha_1(u - 1/2)` is discretely parallel to `beta(v)`"
/// (the edge `(u - 1/2, v)` is singular); with label `V` the label-swapped
/// statement about the edge `(u, v - 1/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParallelismRecord {
    pub label: Axis,
    pub u: i64,
    pub v: i64,
}

/// The three continuation cases: the same-label edge on the opposite side,
/// or the other-label edge on the positive or negative side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrichotomyCase {
    Case1,
    Case2,
    Case3,
}

/// One step of the locus construction: given the parallelism record, decide
/// by the two-line region test which of the three continuations holds, and
/// return it with the continued record.
pub fn trichotomy_step(
    alpha: &Polyline2,
    beta: &Polyline2,
    record: ParallelismRecord,
    tau: f64,
) -> Result<(TrichotomyCase, ParallelismRecord), SingularityError> {
    let (u, v) = (record.u, record.v);
    let case = match record.label {
        Axis::U => region_case(
            beta.point(v)? - beta.point(v - 1)?,
            beta.point(v + 1)? - beta.point(v)?,
            alpha.point(u - 1)? - alpha.point(u)?,
            alpha.point(u + 1)? - alpha.point(u)?,
            (u, v),
            tau,
        )?,
        Axis::V => region_case(
            alpha.point(u)? - alpha.point(u - 1)?,
            alpha.point(u + 1)? - alpha.point(u)?,
            beta.point(v - 1)? - beta.point(v)?,
            beta.point(v + 1)? - beta.point(v)?,
            (u, v),
            tau,
        )?,
    };
    let next = match (record.label, case) {
        (Axis::U, TrichotomyCase::Case1) => ParallelismRecord { label: Axis::U, u: u + 1, v },
        (Axis::U, TrichotomyCase::Case2) => ParallelismRecord { label: Axis::V, u, v: v + 1 },
        (Axis::U, TrichotomyCase::Case3) => ParallelismRecord { label: Axis::V, u, v },
        (Axis::V, TrichotomyCase::Case1) => ParallelismRecord { label: Axis::V, u, v: v + 1 },
        (Axis::V, TrichotomyCase::Case2) => ParallelismRecord { label: Axis::U, u: u + 1, v },
        (Axis::V, TrichotomyCase::Case3) => ParallelismRecord { label: Axis::U, u, v },
    };
    Ok((case, next))
}

/// Region test behind the trichotomy. `d1`, `d2` direct the two lines through
/// the pivot (parallel to the incoming-side and outgoing-side edges of the
/// other polyline); `w_minus` points to the hypothesis-side neighbour,
/// `w_plus` to the continuation-side neighbour.
fn region_case(
    d1: Vec2,
    d2: Vec2,
    w_minus: Vec2,
    w_plus: Vec2,
    at: (i64, i64),
    tau: f64,
) -> Result<TrichotomyCase, SingularityError> {
    let (u, v) = at;
    let s1 = sign(d1.cross(w_minus), tau).ok_or(SingularityError::DegenerateSigns { u, v })?;
    let s2 = sign(d2.cross(w_minus), tau).ok_or(SingularityError::DegenerateSigns { u, v })?;
    let t1 = sign(d1.cross(w_plus), tau).ok_or(SingularityError::DegenerateSigns { u, v })?;
    let t2 = sign(d2.cross(w_plus), tau).ok_or(SingularityError::DegenerateSigns { u, v })?;
    if s1 != -s2 {
        return Err(SingularityError::HypothesisFailed { u, v });
    }
    match (t1 == s1, t2 == s1) {
        (false, true) => Ok(TrichotomyCase::Case1),
        (false, false) => Ok(TrichotomyCase::Case2),
        (true, true) => Ok(TrichotomyCase::Case3),
        (true, false) => Err(SingularityError::NoUniqueCase { u, v }),
    }
}

#[inline]
fn sign(x: f64, tau: f64) -> Option<i8> {
    if x > tau {
        Some(1)
    } else if x < -tau {
        Some(-1)
    } else {
        None
    }
}

/// Walk the locus from a seed singular edge by repeated region tests,
/// independently of the adjacency chaining. Both directions are walked; the
/// combined chain stops where a pivot vertex loses its full star (domain
/// boundary).
pub fn trace_dmptl_by_trichotomy(
    alpha: &Polyline2,
    beta: &Polyline2,
    seed: EdgeRef,
    tau: f64,
) -> Result<Vec<EdgeRef>, SingularityError> {
    let [a, b] = seed.endpoints();
    let mut backward = trace_direction(alpha, beta, seed, a, tau)?;
    let forward = trace_direction(alpha, beta, seed, b, tau)?;
    backward.reverse();
    backward.extend(forward.into_iter().skip(1)); // seed is in both halves
    Ok(backward)
}

fn trace_direction(
    alpha: &Polyline2,
    beta: &Polyline2,
    seed: EdgeRef,
    start_pivot: (i64, i64),
    tau: f64,
) -> Result<Vec<EdgeRef>, SingularityError> {
    let interior_u = |u: i64| u > alpha.start_index() && u < alpha.end_index();
    let interior_v = |v: i64| v > beta.start_index() && v < beta.end_index();
    let mut chain = vec![seed];
    let mut cursor = seed;
    let mut pivot = start_pivot;
    loop {
        let (u, v) = pivot;
        if !interior_u(u) || !interior_v(v) {
            break;
        }
        // Orient the region test so that w_minus points to the incoming side.
        let incoming = cursor;
        let other = |e: EdgeRef| e.endpoints().into_iter().find(|p| *p != pivot).expect("two ends");
        let (inc_u, inc_v) = other(incoming);
        let case = match incoming.label() {
            Axis::U => region_case(
                beta.point(v)? - beta.point(v - 1)?,
                beta.point(v + 1)? - beta.point(v)?,
                alpha.point(inc_u)? - alpha.point(u)?,
                alpha.point(2 * u - inc_u)? - alpha.point(u)?,
                pivot,
                tau,
            )?,
            Axis::V => region_case(
                alpha.point(u)? - alpha.point(u - 1)?,
                alpha.point(u + 1)? - alpha.point(u)?,
                beta.point(inc_v)? - beta.point(v)?,
                beta.point(2 * v - inc_v)? - beta.point(v)?,
                pivot,
                tau,
            )?,
        };
        let outgoing = match (incoming.label(), case) {
            // Same label, opposite side of the pivot.
            (Axis::U, TrichotomyCase::Case1) => {
                EdgeRef::u_edge(if inc_u < u { u } else { u - 1 }, v)
            }
            (Axis::U, TrichotomyCase::Case2) => EdgeRef::v_edge(u, v),
            (Axis::U, TrichotomyCase::Case3) => EdgeRef::v_edge(u, v - 1),
            (Axis::V, TrichotomyCase::Case1) => {
                EdgeRef::v_edge(u, if inc_v < v { v } else { v - 1 })
            }
            (Axis::V, TrichotomyCase::Case2) => EdgeRef::u_edge(u, v),
            (Axis::V, TrichotomyCase::Case3) => EdgeRef::u_edge(u - 1, v),
        };
        chain.push(outgoing);
        pivot = other(outgoing);
        cursor = outgoing;
    }
    Ok(chain)
}

/// Full singularity analysis of a generating pair.
#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub singular_edges: BTreeSet<EdgeRef>,
    pub dmptl_components: Vec<DmptlComponent>,
    pub star_class: BTreeMap<(i64, i64), StarClassification>,
    pub config: BTreeMap<(i64, i64), StarConfig>,
    pub swallowtails: BTreeSet<(i64, i64)>,
    pub dmptl_cusps: BTreeSet<(i64, i64)>,
}

pub fn singularity_report(
    alpha: &Polyline2,
    beta: &Polyline2,
) -> Result<SingularityReport, SingularityError> {
    singularity_report_with(alpha, beta, &Tolerances::default())
}

pub fn singularity_report_with(
    alpha: &Polyline2,
    beta: &Polyline2,
    tol: &Tolerances,
) -> Result<SingularityReport, SingularityError> {
    let omega = crate::centre_chord::metric_field(alpha, beta)
        .map_err(|_| SingularityError::OmegaZero { u: alpha.start_index(), v: beta.start_index() })?;
    let tau = tol.cross_abs(pair_diagonal(alpha, beta));
    let singular = singular_edges(&omega, 0.25 * tau)?;
    let components = dmptl(alpha, beta, &singular)?;

    let x = Field::from_fn(
        GridAddress::vertex(alpha.start_index(), beta.start_index()),
        alpha.len(),
        beta.len(),
        |a| (alpha.point(a.du / 2).unwrap() + beta.point(a.dv / 2).unwrap()) * 0.5,
    )?;

    let mut star_class = BTreeMap::new();
    let mut config = BTreeMap::new();
    for u in alpha.indices() {
        for v in beta.indices() {
            let interior = u > alpha.start_index()
                && u < alpha.end_index()
                && v > beta.start_index()
                && v < beta.end_index();
            if !interior {
                star_class.insert((u, v), StarClassification::Boundary);
                continue;
            }
            let class = classify_star_x(&x, u, v, tau)?;
            star_class.insert(
                (u, v),
                match class {
                    StarClass::Typical => StarClassification::Typical,
                    StarClass::Atypical => StarClassification::Atypical,
                },
            );
            config.insert((u, v), vertex_configuration(&singular, class, u, v)?);
        }
    }

    let swallowtails = swallowtails(&config);
    let cusps = dmptl_cusps_with(alpha, beta, &singular, tol)?;
    if swallowtails != cusps {
        let diff = swallowtails.symmetric_difference(&cusps).next().copied().unwrap_or((0, 0));
        return Err(SingularityError::CuspMismatch { u: diff.0, v: diff.1 });
    }

    Ok(SingularityReport {
        singular_edges: singular,
        dmptl_components: components,
        star_class,
        config,
        swallowtails,
        dmptl_cusps: cusps,
    })
}

/// The spatial polygonal chains of cuspidal edges, one per locus component.
pub fn cuspidal_chains(
    net_q: &Field<Vec3>,
    components: &[DmptlComponent],
) -> Result<Vec<Vec<Vec3>>, SingularityError> {
    components
        .iter()
        .map(|c| {
            c.grid_vertices
                .iter()
                .map(|&(u, v)| Ok(net_q.get(GridAddress::vertex(u, v))?))
                .collect()
        })
        .collect()
}
