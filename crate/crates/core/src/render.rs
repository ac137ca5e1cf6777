//! SVG pictures of a representation in the disc.
//!
//! Full geodesics are drawn as arcs of circles orthogonal to the absolute,
//! cycle edges as sampled polylines. Output depends only on the input.

use std::fmt::Write;

use num_complex::Complex64;

use crate::disc::{geodesic_through, Geodesic, ProjPoint};
use crate::error::Result;
use crate::isometry::SpecialUnitary;
use crate::representation::Representation;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Canvas width and height in pixels.
    pub size: f64,
    /// Base index of an i-cycle to mark on the absolute.
    pub icycle: Option<usize>,
    /// Chart point whose cycle is drawn as a polygon.
    pub cycle_from: Option<Complex64>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            size: 600.0,
            icycle: None,
            cycle_from: None,
        }
    }
}

struct Canvas {
    mid: f64,
    scale: f64,
}

impl Canvas {
    fn xy(&self, z: Complex64) -> (f64, f64) {
        (self.mid + self.scale * z.re, self.mid - self.scale * z.im)
    }
}

const SEGMENT_SAMPLES: usize = 32;

pub fn render_svg(rho: &Representation, opts: &RenderOptions) -> Result<String> {
    let canvas = Canvas {
        mid: opts.size / 2.0,
        scale: opts.size * 0.45,
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s:.0}" height="{s:.0}" viewBox="0 0 {s:.0} {s:.0}">"#,
        s = opts.size
    );
    let _ = writeln!(
        out,
        "<style>.absolute{{fill:none;stroke:#000;stroke-width:1.5}} .geodesic{{fill:none;stroke:#36c;stroke-width:1}} \
         .center{{fill:#c33}} .icycle{{fill:#393}} .cycle{{fill:none;stroke:#e90;stroke-width:1.2}} \
         text{{font-family:sans-serif;font-size:12px}}</style>"
    );
    let _ = writeln!(
        out,
        r#"<circle class="absolute" cx="{m:.6}" cy="{m:.6}" r="{r:.6}"/>"#,
        m = canvas.mid,
        r = canvas.scale
    );

    let n = rho.len();
    for k in 0..n {
        let (p, q) = (rho.centers()[k], rho.centers()[(k + 1) % n]);
        if let Ok(g) = geodesic_through(&p, &q) {
            let _ = writeln!(out, "{}", geodesic_path(&canvas, &g, k));
        }
    }

    if let Some(c0) = opts.cycle_from {
        let cycle = rho.cycle_of(&ProjPoint::try_from_chart(c0)?);
        for k in 0..cycle.len() {
            let pts = segment_points(&cycle[k], &cycle[(k + 1) % cycle.len()]);
            let coords: Vec<String> = pts
                .iter()
                .map(|z| {
                    let (x, y) = canvas.xy(*z);
                    format!("{x:.6},{y:.6}")
                })
                .collect();
            let _ = writeln!(
                out,
                r#"<polyline class="cycle" points="{}"/>"#,
                coords.join(" ")
            );
        }
    }

    for (k, q) in rho.centers().iter().enumerate() {
        let (x, y) = canvas.xy(q.chart());
        let _ = writeln!(
            out,
            r#"<circle class="center" cx="{x:.6}" cy="{y:.6}" r="4"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.6}" y="{:.6}">q{k}</text>"#,
            x + 6.0,
            y - 6.0
        );
    }

    if let Some(i) = opts.icycle {
        let cycle = rho.i_cycle(i)?;
        for (j, p) in cycle.points.iter().enumerate() {
            let (x, y) = canvas.xy(p.chart());
            let label = if j % 2 == 0 { 'v' } else { 'w' };
            let sup = i + j / 2;
            let _ = writeln!(
                out,
                r#"<circle class="icycle" cx="{x:.6}" cy="{y:.6}" r="3.5"/>"#
            );
            let outward = p.chart() * 1.06;
            let (lx, ly) = canvas.xy(outward);
            let _ = writeln!(out, r#"<text x="{lx:.6}" y="{ly:.6}">{label}{sup}</text>"#);
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Arc of the circle orthogonal to the absolute through the endpoints of `g`,
/// or a straight segment for a diameter.
fn geodesic_path(canvas: &Canvas, g: &Geodesic, label: usize) -> String {
    let a = g.src().chart();
    let b = g.dst().chart();
    let (ax, ay) = canvas.xy(a);
    let (bx, by) = canvas.xy(b);
    let denom = 1.0 + (a * b.conj()).re;
    if denom.abs() < 1e-9 {
        return format!(
            r#"<path class="geodesic" data-pair="{label}" d="M {ax:.6} {ay:.6} L {bx:.6} {by:.6}"/>"#
        );
    }
    let c = (a + b) / denom;
    let radius = (c.norm_sqr() - 1.0).max(0.0).sqrt() * canvas.scale;
    let (cx, cy) = canvas.xy(c);
    let cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    let sweep = u8::from(cross > 0.0);
    format!(
        r#"<path class="geodesic" data-pair="{label}" d="M {ax:.6} {ay:.6} A {radius:.6} {radius:.6} 0 0 {sweep} {bx:.6} {by:.6}"/>"#
    )
}

/// Points along the geodesic segment from `p` to `q`.
fn segment_points(p: &ProjPoint, q: &ProjPoint) -> Vec<Complex64> {
    let Ok(to0) = SpecialUnitary::moving_to_origin(p) else {
        return vec![p.chart(), q.chart()];
    };
    let back = to0.inverse();
    let far = to0.apply(q).chart();
    (0..=SEGMENT_SAMPLES)
        .map(|k| {
            let t = k as f64 / SEGMENT_SAMPLES as f64;
            // straight segments through the origin are geodesics; rescale hyperbolically
            let r = (t * far.norm().atanh()).tanh();
            let dir = if far.norm() > 0.0 {
                far / far.norm()
            } else {
                Complex64::new(1.0, 0.0)
            };
            back.apply(&ProjPoint::from_chart(dir * r)).chart()
        })
        .collect()
}
