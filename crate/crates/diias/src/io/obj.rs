//! Wavefront OBJ export of the bilinear-patch surface: each quadrangle's
//! patch is tessellated and shared-edge vertices are deduplicated by exact
//! coordinate match (boundary evaluations are bit-identical across adjacent
//! patches, so the weld is exact).

use std::collections::HashMap;

use crate::centre_chord::QuadNet;
use crate::geom::Vec3;
use crate::io::fmt_f64;
use crate::patches::{self, PatchError};

/// Tessellate every patch with `n` subdivisions and emit `v`/`f` lines with
/// 1-based indices and consistent orientation.
pub fn export_obj(net: &QuadNet, n: usize) -> Result<String, PatchError> {
    let mut keys: HashMap<[u64; 3], usize> = HashMap::new();
    let mut vertices: Vec<Vec3> = Vec::new();
    let mut faces: Vec<[usize; 4]> = Vec::new();

    let mut intern = |p: Vec3| -> usize {
        let canon = |x: f64| if x == 0.0 { 0.0f64 } else { x };
        let key = [canon(p.x).to_bits(), canon(p.y).to_bits(), canon(p.z).to_bits()];
        *keys.entry(key).or_insert_with(|| {
            vertices.push(p);
            vertices.len() - 1
        })
    };

    for a in net.omega().addresses() {
        let patch = patches::patch_of(net, a)?;
        let tess = patches::tessellate(&patch, n)?;
        let ids: Vec<usize> = tess.vertices.into_iter().map(&mut intern).collect();
        for quad in tess.quads {
            faces.push([ids[quad[0]], ids[quad[1]], ids[quad[2]], ids[quad[3]]]);
        }
    }

    let mut out = String::new();
    for p in &vertices {
        out.push_str(&format!("v {} {} {}\n", fmt_f64(p.x), fmt_f64(p.y), fmt_f64(p.z)));
    }
    for f in &faces {
        out.push_str(&format!("f {} {} {} {}\n", f[0] + 1, f[1] + 1, f[2] + 1, f[3] + 1));
    }
    Ok(out)
}

/// Vertex and face counts of [`export_obj`] for a net with `fu x fv` faces:
/// welding leaves an `(n fu + 1) x (n fv + 1)` vertex grid and `fu fv n^2`
/// quads.
pub fn expected_counts(face_u: usize, face_v: usize, n: usize) -> (usize, usize) {
    ((n * face_u + 1) * (n * face_v + 1), face_u * face_v * n * n)
}
