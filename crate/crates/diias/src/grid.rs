//! Discrete derivative calculus on rectangular integer grids and their duals.
//!
//! Vertices live on the integer lattice, faces on the half-integer dual, and
//! edges in between. Doubled coordinates keep all four cell kinds in one exact
//! integer address type: vertex `(u, v)` is stored as `(2u, 2v)`, the face
//! `(u + 1/2, v + 1/2)` as `(2u + 1, 2v + 1)`, and so on. Derivatives shift the
//! parity class by one doubled step and shrink the domain accordingly.

use std::ops::Sub;

use thiserror::Error;

/// Doubled-coordinate address of a vertex, edge, face, or dual cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridAddress {
    pub du: i64,
    pub dv: i64,
}

/// Cell kind encoded by the parity of a doubled address.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    /// `(even, even)`: a lattice vertex `(u, v)`.
    Vertex,
    /// `(odd, even)`: the edge `(u + 1/2, v)`.
    UEdge,
    /// `(even, odd)`: the edge `(u, v + 1/2)`.
    VEdge,
    /// `(odd, odd)`: the face `(u + 1/2, v + 1/2)`.
    Face,
}

/// Grid axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    U,
    V,
}

impl GridAddress {
    #[inline]
    pub fn new(du: i64, dv: i64) -> Self {
        GridAddress { du, dv }
    }

    #[inline]
    pub fn vertex(u: i64, v: i64) -> Self {
        GridAddress { du: 2 * u, dv: 2 * v }
    }

    /// The face `(u + 1/2, v + 1/2)`.
    #[inline]
    pub fn face(u: i64, v: i64) -> Self {
        GridAddress { du: 2 * u + 1, dv: 2 * v + 1 }
    }

    /// The edge `(u + 1/2, v)`.
    #[inline]
    pub fn u_edge(u: i64, v: i64) -> Self {
        GridAddress { du: 2 * u + 1, dv: 2 * v }
    }

    /// The edge `(u, v + 1/2)`.
    #[inline]
    pub fn v_edge(u: i64, v: i64) -> Self {
        GridAddress { du: 2 * u, dv: 2 * v + 1 }
    }

    #[inline]
    pub fn kind(self) -> CellKind {
        match (self.du.rem_euclid(2), self.dv.rem_euclid(2)) {
            (0, 0) => CellKind::Vertex,
            (1, 0) => CellKind::UEdge,
            (0, 1) => CellKind::VEdge,
            _ => CellKind::Face,
        }
    }

    /// Translate by whole doubled steps.
    #[inline]
    pub fn shifted(self, ddu: i64, ddv: i64) -> Self {
        GridAddress { du: self.du + ddu, dv: self.dv + ddv }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("address ({du}, {dv}) is outside the field domain")]
    OutOfDomain { du: i64, dv: i64 },
    #[error("field domain must have extent >= 2 along {axis:?} to differentiate")]
    DomainTooSmall { axis: Axis },
    #[error("field domain must be non-empty")]
    EmptyDomain,
    #[error("field domains do not match")]
    DomainMismatch,
}

/// A value per cell of one parity class over a rectangular index range.
///
/// Immutable after construction. Lookups outside the domain are errors, never
/// defaults.
#[derive(Clone, Debug, PartialEq)]
pub struct Field<V> {
    origin: GridAddress,
    nu: usize,
    nv: usize,
    data: Vec<V>,
}

impl<V: Copy> Field<V> {
    /// Build a field over `nu x nv` cells of the parity class of `origin`,
    /// stepping by two doubled units per index.
    pub fn from_fn(
        origin: GridAddress,
        nu: usize,
        nv: usize,
        mut f: impl FnMut(GridAddress) -> V,
    ) -> Result<Self, GridError> {
        if nu == 0 || nv == 0 {
            return Err(GridError::EmptyDomain);
        }
        let mut data = Vec::with_capacity(nu * nv);
        for i in 0..nu {
            for j in 0..nv {
                data.push(f(origin.shifted(2 * i as i64, 2 * j as i64)));
            }
        }
        Ok(Field { origin, nu, nv, data })
    }

    #[inline]
    pub fn origin(&self) -> GridAddress {
        self.origin
    }

    #[inline]
    pub fn nu(&self) -> usize {
        self.nu
    }

    #[inline]
    pub fn nv(&self) -> usize {
        self.nv
    }

    #[inline]
    pub fn kind(&self) -> CellKind {
        self.origin.kind()
    }

    fn index_of(&self, a: GridAddress) -> Option<usize> {
        let di = a.du - self.origin.du;
        let dj = a.dv - self.origin.dv;
        if di < 0 || dj < 0 || di % 2 != 0 || dj % 2 != 0 {
            return None;
        }
        let (i, j) = ((di / 2) as usize, (dj / 2) as usize);
        if i >= self.nu || j >= self.nv {
            return None;
        }
        Some(i * self.nv + j)
    }

    #[inline]
    pub fn contains(&self, a: GridAddress) -> bool {
        self.index_of(a).is_some()
    }

    pub fn get(&self, a: GridAddress) -> Result<V, GridError> {
        self.index_of(a)
            .map(|i| self.data[i])
            .ok_or(GridError::OutOfDomain { du: a.du, dv: a.dv })
    }

    /// Addresses in row-major order (`u` outer, `v` inner).
    pub fn addresses(&self) -> impl Iterator<Item = GridAddress> + '_ {
        let (origin, nv) = (self.origin, self.nv as i64);
        (0..(self.nu as i64 * nv)).map(move |k| origin.shifted(2 * (k / nv), 2 * (k % nv)))
    }

    pub fn values(&self) -> impl Iterator<Item = V> + '_ {
        self.data.iter().copied()
    }

    pub fn map<W: Copy>(&self, f: impl Fn(V) -> W) -> Field<W> {
        Field {
            origin: self.origin,
            nu: self.nu,
            nv: self.nv,
            data: self.data.iter().map(|v| f(*v)).collect(),
        }
    }

    /// Forward difference along `axis`. The result lives on the shifted parity
    /// class: `result(a + 1/2 axis) = field(a + axis) - field(a)`.
    pub fn partial(&self, axis: Axis) -> Result<Field<V>, GridError>
    where
        V: Sub<Output = V>,
    {
        match axis {
            Axis::U => {
                if self.nu < 2 {
                    return Err(GridError::DomainTooSmall { axis });
                }
                let mut data = Vec::with_capacity((self.nu - 1) * self.nv);
                for i in 0..self.nu - 1 {
                    for j in 0..self.nv {
                        data.push(self.data[(i + 1) * self.nv + j] - self.data[i * self.nv + j]);
                    }
                }
                Ok(Field { origin: self.origin.shifted(1, 0), nu: self.nu - 1, nv: self.nv, data })
            }
            Axis::V => {
                if self.nv < 2 {
                    return Err(GridError::DomainTooSmall { axis });
                }
                let mut data = Vec::with_capacity(self.nu * (self.nv - 1));
                for i in 0..self.nu {
                    for j in 0..self.nv - 1 {
                        data.push(self.data[i * self.nv + j + 1] - self.data[i * self.nv + j]);
                    }
                }
                Ok(Field { origin: self.origin.shifted(0, 1), nu: self.nu, nv: self.nv - 1, data })
            }
        }
    }

    /// The mixed second difference `f_12 = f_21`, face-indexed for a vertex field.
    pub fn mixed12(&self) -> Result<Field<V>, GridError>
    where
        V: Sub<Output = V>,
    {
        self.partial(Axis::U)?.partial(Axis::V)
    }
}
