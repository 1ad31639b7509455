//! SVG diagnostics plot: the planar x-net, the generating polylines, the
//! midpoint-locus segments, and cusp markers, each in its own class.

use crate::geom::Vec2;
use crate::io::fmt_f64;
use crate::polyline::Polyline2;
use crate::singularity::SingularityReport;

const STYLE: &str = "\
  path.xnet { stroke: #c8c8c8; stroke-width: 0.6; fill: none; }\n\
  path.alpha { stroke: #3465a4; stroke-width: 1.2; fill: none; }\n\
  path.beta { stroke: #4e9a06; stroke-width: 1.2; fill: none; }\n\
  path.dmptl { stroke: #cc0000; stroke-width: 1.8; fill: none; }\n\
  circle.cusp { fill: #cc0000; stroke: none; }\n";

/// Render the planar diagnostics of one analysis. Deterministic byte for
/// byte: orderings come from the report's sorted sets and the float
/// formatting is canonical. The y axis is flipped so plots read
/// mathematically.
pub fn export_svg(alpha: &Polyline2, beta: &Polyline2, report: &SingularityReport) -> String {
    let x = |u: i64, v: i64| -> Vec2 {
        (alpha.point(u).expect("in range") + beta.point(v).expect("in range")) * 0.5
    };

    // Fit the view box over everything drawn, with a 5% margin.
    let mut pts: Vec<Vec2> = Vec::new();
    pts.extend(alpha.points());
    pts.extend(beta.points());
    for u in alpha.indices() {
        for v in beta.indices() {
            pts.push(x(u, v));
        }
    }
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in &pts {
        min_x = min_x.min(p.x);
        max_x = max_x.max(p.x);
        min_y = min_y.min(-p.y);
        max_y = max_y.max(-p.y);
    }
    let width = (max_x - min_x).max(1e-9);
    let height = (max_y - min_y).max(1e-9);
    let margin = 0.05 * width.max(height);
    let view = format!(
        "{} {} {} {}",
        fmt_f64(min_x - margin),
        fmt_f64(min_y - margin),
        fmt_f64(width + 2.0 * margin),
        fmt_f64(height + 2.0 * margin)
    );
    let marker_radius = 0.015 * (width.max(height) + 2.0 * margin);

    let path_of = |points: &[Vec2]| -> String {
        let mut d = String::new();
        for (k, p) in points.iter().enumerate() {
            let cmd = if k == 0 { 'M' } else { 'L' };
            d.push_str(&format!("{}{} {}", cmd, fmt_f64(p.x), fmt_f64(-p.y)));
            if k + 1 != points.len() {
                d.push(' ');
            }
        }
        d
    };

    let mut body = String::new();
    // x-net rows and columns.
    for u in alpha.indices() {
        let line: Vec<Vec2> = beta.indices().map(|v| x(u, v)).collect();
        body.push_str(&format!("<path class=\"xnet\" d=\"{}\"/>\n", path_of(&line)));
    }
    for v in beta.indices() {
        let line: Vec<Vec2> = alpha.indices().map(|u| x(u, v)).collect();
        body.push_str(&format!("<path class=\"xnet\" d=\"{}\"/>\n", path_of(&line)));
    }
    body.push_str(&format!("<path class=\"alpha\" d=\"{}\"/>\n", path_of(alpha.points())));
    body.push_str(&format!("<path class=\"beta\" d=\"{}\"/>\n", path_of(beta.points())));
    // One path per singular-edge midsegment.
    for edge in &report.singular_edges {
        let [(u0, v0), (u1, v1)] = edge.endpoints();
        body.push_str(&format!(
            "<path class=\"dmptl\" d=\"{}\"/>\n",
            path_of(&[x(u0, v0), x(u1, v1)])
        ));
    }
    for &(u, v) in &report.dmptl_cusps {
        let p = x(u, v);
        body.push_str(&format!(
            "<circle class=\"cusp\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n",
            fmt_f64(p.x),
            fmt_f64(-p.y),
            fmt_f64(marker_radius)
        ));
    }

    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{view}\">\n<style>\n{STYLE}</style>\n{body}</svg>\n"
    )
}
