//! The `diias v1` net text format.
//!
//! ```text
//! diias v1 <u_min> <u_max> <v_min> <v_max>
//! <u> <v> <x> <y> <z>
//! ...
//! ```
//!
//! One vertex line per grid point in row-major order (`u` outer, `v` inner).
//! Coordinates are shortest round-trip decimals, so write-read cycles are
//! lossless and byte-stable.

use thiserror::Error;

use crate::geom::{vec3, Vec3};
use crate::grid::{Field, GridAddress};
use crate::io::fmt_f64;

/// Guards against absurd domains in untrusted headers.
const MAX_EXTENT: i64 = 1 << 20;
const MAX_VERTICES: i64 = 1 << 22;

#[derive(Debug, Error, PartialEq)]
pub enum NetFormatError {
    #[error("line 1: expected header `diias v1 <u_min> <u_max> <v_min> <v_max>`")]
    BadHeader,
    #[error("line 1: empty index range")]
    EmptyRange,
    #[error("line 1: domain too large")]
    DomainTooLarge,
    #[error("line {line}: expected `u v x y z`")]
    BadVertexLine { line: usize },
    #[error("line {line}: expected vertex ({u}, {v})")]
    OutOfOrder { line: usize, u: i64, v: i64 },
    #[error("line {line}: non-finite coordinate")]
    NonFinite { line: usize },
    #[error("expected {expected} vertex lines, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("cannot serialize non-finite coordinates")]
    NonFiniteOutput,
}

/// Serialize a vertex field to the text format.
pub fn write_net(q: &Field<Vec3>) -> Result<String, NetFormatError> {
    let (u_min, v_min) = (q.origin().du / 2, q.origin().dv / 2);
    let (u_max, v_max) = (u_min + q.nu() as i64 - 1, v_min + q.nv() as i64 - 1);
    let mut out = format!("diias v1 {u_min} {u_max} {v_min} {v_max}\n");
    for a in q.addresses() {
        let p = q.get(a).expect("address from iterator");
        if !p.is_finite() {
            return Err(NetFormatError::NonFiniteOutput);
        }
        out.push_str(&format!(
            "{} {} {} {} {}\n",
            a.du / 2,
            a.dv / 2,
            fmt_f64(p.x),
            fmt_f64(p.y),
            fmt_f64(p.z)
        ));
    }
    Ok(out)
}

/// Parse the text format back into a vertex field.
pub fn parse_net(text: &str) -> Result<Field<Vec3>, NetFormatError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(NetFormatError::BadHeader)?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 6 || tokens[0] != "diias" || tokens[1] != "v1" {
        return Err(NetFormatError::BadHeader);
    }
    let mut bounds = [0i64; 4];
    for (slot, tok) in bounds.iter_mut().zip(&tokens[2..]) {
        *slot = tok.parse().map_err(|_| NetFormatError::BadHeader)?;
    }
    let [u_min, u_max, v_min, v_max] = bounds;
    if u_max < u_min || v_max < v_min {
        return Err(NetFormatError::EmptyRange);
    }
    let (nu, nv) = (u_max - u_min + 1, v_max - v_min + 1);
    if nu > MAX_EXTENT || nv > MAX_EXTENT || nu.saturating_mul(nv) > MAX_VERTICES {
        return Err(NetFormatError::DomainTooLarge);
    }

    let expected = (nu * nv) as usize;
    let mut points = Vec::with_capacity(expected);
    let mut count = 0usize;
    for (idx, raw) in lines {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let parts: Vec<&str> = trimmed.split_whitespace().collect();
        if parts.len() != 5 {
            return Err(NetFormatError::BadVertexLine { line });
        }
        let u: i64 = parts[0].parse().map_err(|_| NetFormatError::BadVertexLine { line })?;
        let v: i64 = parts[1].parse().map_err(|_| NetFormatError::BadVertexLine { line })?;
        let want_u = u_min + count as i64 / nv;
        let want_v = v_min + count as i64 % nv;
        if u != want_u || v != want_v {
            return Err(NetFormatError::OutOfOrder { line, u: want_u, v: want_v });
        }
        let mut coords = [0.0f64; 3];
        for (slot, tok) in coords.iter_mut().zip(&parts[2..]) {
            *slot = tok.parse().map_err(|_| NetFormatError::BadVertexLine { line })?;
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(NetFormatError::NonFinite { line });
        }
        points.push(vec3(coords[0], coords[1], coords[2]));
        count += 1;
        if count > expected {
            break;
        }
    }
    if count != expected {
        return Err(NetFormatError::WrongCount { expected, found: count });
    }
    let mut it = points.into_iter();
    Ok(Field::from_fn(GridAddress::vertex(u_min, v_min), nu as usize, nv as usize, |_| {
        it.next().expect("counted")
    })
    .expect("non-empty domain"))
}

/// Does the content look like the net format (as opposed to JSON input)?
pub fn looks_like_net(text: &str) -> bool {
    text.trim_start().starts_with("diias ")
}
