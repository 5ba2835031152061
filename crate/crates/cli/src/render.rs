//! SVG output for scenes and glued scenes.

use std::fmt::Write;

use unimodal_core::arcs::Side;
use unimodal_core::gluing::{GluedScene, Owner};
use unimodal_core::scene::PlanarScene;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Landscape,
    /// Turned a quarter turn counterclockwise, arcs running vertically.
    PortraitRotated,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    pub margin: u32,
    pub orientation: Orientation,
    pub arc_stroke: f64,
    pub join_stroke: f64,
    pub labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            width: 800,
            height: 600,
            margin: 40,
            orientation: Orientation::Landscape,
            arc_stroke: 1.5,
            join_stroke: 1.0,
            labels: false,
        }
    }
}

pub enum Drawing<'a> {
    Scene(&'a PlanarScene),
    Glued(&'a GluedScene),
}

impl Drawing<'_> {
    fn base(&self) -> &PlanarScene {
        match self {
            Drawing::Scene(s) => s,
            Drawing::Glued(g) => &g.base,
        }
    }
}

/// Three decimals, with no negative zero.
fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

struct Frame {
    x0: f64,
    y0: f64,
    sx: f64,
    sy: f64,
    margin: f64,
    height: f64,
}

impl Frame {
    fn new(bounds: [f64; 4], spec: &RenderSpec) -> Self {
        let [mut x0, mut x1, mut y0, mut y1] = bounds;
        if x1 - x0 <= 0.0 {
            x0 -= 0.5;
            x1 += 0.5;
        }
        if y1 - y0 <= 0.0 {
            y0 -= 0.5;
            y1 += 0.5;
        }
        let m = spec.margin as f64;
        let (w, h) = (spec.width as f64, spec.height as f64);
        Self { x0, y0, sx: (w - 2.0 * m).max(1.0) / (x1 - x0), sy: (h - 2.0 * m).max(1.0) / (y1 - y0), margin: m, height: h }
    }

    fn px(&self, x: f64) -> f64 {
        self.margin + (x - self.x0) * self.sx
    }

    fn py(&self, y: f64) -> f64 {
        self.height - self.margin - (y - self.y0) * self.sy
    }
}

fn bounds(drawing: &Drawing) -> [f64; 4] {
    let scene = drawing.base();
    let mut b = [f64::INFINITY, f64::NEG_INFINITY, 0.0f64, 1.0f64];
    let mut take = |x: f64, y: f64| {
        b[0] = b[0].min(x);
        b[1] = b[1].max(x);
        b[2] = b[2].min(y);
        b[3] = b[3].max(y);
    };
    for &x in scene.ticks.values() {
        take(x, 0.0);
    }
    match drawing {
        Drawing::Scene(s) => {
            for (i, seg) in s.segments.iter().enumerate() {
                take(seg.x_lo, s.y_f64(i));
                take(seg.x_hi, s.y_f64(i));
            }
            for j in &s.joins {
                let (lo, hi) = s.join_span(j);
                let r = (hi - lo) as f64 / (2.0 * s.y_den() as f64);
                take(if j.pair.side == Side::Right { j.x + r } else { j.x - r }, 0.0);
            }
        }
        Drawing::Glued(g) => {
            for p in g.polylines.iter().flat_map(|l| &l.points) {
                take(p[0], p[1]);
            }
        }
    }
    if !b[0].is_finite() {
        b[0] = 0.0;
        b[1] = 1.0;
    }
    b
}

/// Deterministic SVG 1.1: axes with orbit ticks, one path per arc, one
/// arc path per semicircle (or one path per glued polyline), optional labels.
pub fn render_svg(drawing: &Drawing, spec: &RenderSpec) -> String {
    let scene = drawing.base();
    let f = Frame::new(bounds(drawing), spec);
    let (w, h) = (spec.width, spec.height);
    let mut out = String::new();
    let (outer_w, outer_h) = match spec.orientation {
        Orientation::Landscape => (w, h),
        Orientation::PortraitRotated => (h, w),
    };
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{outer_w}" height="{outer_h}" viewBox="0 0 {outer_w} {outer_h}">"#
    )
    .unwrap();
    match spec.orientation {
        Orientation::Landscape => writeln!(out, "<g>").unwrap(),
        Orientation::PortraitRotated => writeln!(out, r#"<g transform="translate(0 {w}) rotate(-90)">"#).unwrap(),
    }

    let (ax, ay) = (f.px(f.x0), f.py(f.y0));
    writeln!(out, r#"<g class="axes" stroke="gray" stroke-width="0.5" fill="none">"#).unwrap();
    writeln!(out, r#"<path d="M{} {} H{}"/>"#, num(ax), num(ay), num(w as f64 - f.margin)).unwrap();
    writeln!(out, r#"<path d="M{} {} V{}"/>"#, num(ax), num(ay), num(f.margin)).unwrap();
    for (i, &x) in &scene.ticks {
        writeln!(out, r#"<path d="M{0} {1} v4"/><text x="{0}" y="{2}" font-size="9" fill="gray" stroke="none" text-anchor="middle">T^{i}(c)</text>"#, num(f.px(x)), num(ay), num(ay + 14.0)).unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r#"<g fill="none" stroke="black">"#).unwrap();
    match drawing {
        Drawing::Scene(s) => {
            for (i, seg) in s.segments.iter().enumerate() {
                let y = f.py(s.y_f64(i));
                writeln!(
                    out,
                    r#"<path class="arc" stroke-width="{}" d="M{} {} H{}"/>"#,
                    spec.arc_stroke,
                    num(f.px(seg.x_lo)),
                    num(y),
                    num(f.px(seg.x_hi))
                )
                .unwrap();
            }
            let den = s.y_den() as f64;
            for j in &s.joins {
                let (lo, hi) = s.join_span(j);
                let r = (hi - lo) as f64 / (2.0 * den);
                let (side, sweep) = match j.pair.side {
                    Side::Right => ("right", 1),
                    Side::Left => ("left", 0),
                };
                writeln!(
                    out,
                    r#"<path class="join {side}" stroke-width="{}" d="M{} {} A{} {} 0 0 {sweep} {} {}"/>"#,
                    spec.join_stroke,
                    num(f.px(j.x)),
                    num(f.py(hi as f64 / den)),
                    num(r * f.sx),
                    num(r * f.sy),
                    num(f.px(j.x)),
                    num(f.py(lo as f64 / den)),
                )
                .unwrap();
            }
        }
        Drawing::Glued(g) => {
            for line in &g.polylines {
                let first = line.points[0];
                let collapsed = line.points.iter().all(|p| (p[0] - first[0]).abs() < 1e-9 && (p[1] - first[1]).abs() < 1e-9);
                let class = match line.owner {
                    Owner::Segment(_) => "arc",
                    Owner::Join(_) if collapsed => continue,
                    Owner::Join(_) => "join",
                };
                let mut d = String::new();
                for (k, p) in line.points.iter().enumerate() {
                    let cmd = if k == 0 { 'M' } else { 'L' };
                    write!(d, "{cmd}{} {}", num(f.px(p[0])), num(f.py(p[1]))).unwrap();
                }
                writeln!(out, r#"<path class="{class}" stroke-width="{}" d="{d}"/>"#, spec.arc_stroke).unwrap();
            }
        }
    }
    writeln!(out, "</g>").unwrap();

    if spec.labels {
        writeln!(out, r#"<g class="labels" font-size="9" font-family="monospace">"#).unwrap();
        for (i, seg) in scene.segments.iter().enumerate() {
            writeln!(
                out,
                r#"<text x="{}" y="{}">{}</text>"#,
                num(f.px(seg.x_hi) + 4.0),
                num(f.py(scene.y_f64(i)) + 3.0),
                escape(&seg.arc.code.to_string())
            )
            .unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</g>\n</svg>").unwrap();
    out
}
