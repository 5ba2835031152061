//! Gluing the semicircles away: the collapse profile `g`, the strip map
//! `f̂`, one glue region per level and the staged maps `F_n = f_n ∘ ... ∘ f_1`.
//!
//! Each level-`n` semicircle gets a thin tube of the annulus around its
//! centre, charted onto a box (radius to the first coordinate, angle to the
//! second) where `f̂` collapses the semicircle to a point. The tubes are kept
//! inside `V_n`, away from every deeper `V_i` and from all other geometry, so
//! the stages never interfere.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::arcs::Side;
use crate::error::{Error, Result};
use crate::scene::PlanarScene;

/// `g(a, x)`: the identity for `a = 1`, constant zero on `[-1/2, 1/2]` for
/// `a = 0`, and the identity at `x = ±1` for every `a`.
pub fn g_profile(a: f64, x: f64) -> Result<f64> {
    if !(0.0..=2.0).contains(&a) || !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain { a, x });
    }
    Ok(if x <= -0.5 {
        (2.0 - a) * (x + 1.0) - 1.0
    } else if x <= 0.5 {
        a * x
    } else {
        1.0 - (2.0 - a) * (1.0 - x)
    })
}

/// `f̂(x, y) = (x, g(d(x, W), y))` on `[-1, 2] x [-1, 1]`.
pub fn fhat(point: (f64, f64), w: &[f64]) -> Result<(f64, f64)> {
    let (x, y) = point;
    if !(-1.0..=2.0).contains(&x) {
        return Err(Error::Domain { a: f64::NAN, x });
    }
    let a = w.iter().map(|&v| (x - v).abs()).fold(f64::INFINITY, f64::min);
    let a = if a.is_finite() { a.min(2.0) } else { 2.0 };
    Ok((x, g_profile(a, y)?))
}

type Pt = [f64; 2];

fn sub(a: Pt, b: Pt) -> Pt {
    [a[0] - b[0], a[1] - b[1]]
}

fn dot(a: Pt, b: Pt) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

fn norm(a: Pt) -> f64 {
    a[0].hypot(a[1])
}

fn dist(a: Pt, b: Pt) -> f64 {
    norm(sub(a, b))
}

/// Half of a circle: the points `q` with `(q - c) . u >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct HalfCircle {
    c: Pt,
    r: f64,
    u: Pt,
}

impl HalfCircle {
    fn new(c: Pt, r: f64, side: Side) -> Self {
        let u = match side {
            Side::Right => [1.0, 0.0],
            Side::Left => [-1.0, 0.0],
        };
        Self { c, r, u }
    }

    fn ends(&self) -> [Pt; 2] {
        let perp = [-self.u[1], self.u[0]];
        [
            [self.c[0] + self.r * perp[0], self.c[1] + self.r * perp[1]],
            [self.c[0] - self.r * perp[0], self.c[1] - self.r * perp[1]],
        ]
    }

    fn holds(&self, q: Pt) -> bool {
        dot(sub(q, self.c), self.u) >= -1e-15
    }

    fn point_dist(&self, p: Pt) -> f64 {
        let v = sub(p, self.c);
        if dot(v, self.u) >= 0.0 {
            (norm(v) - self.r).abs()
        } else {
            let [e1, e2] = self.ends();
            dist(p, e1).min(dist(p, e2))
        }
    }

    fn point_inside_disc(&self, p: Pt) -> bool {
        let v = sub(p, self.c);
        dot(v, self.u) >= 0.0 && norm(v) <= self.r
    }
}

fn point_segment_dist(p: Pt, a: Pt, b: Pt) -> f64 {
    let ab = sub(b, a);
    let len2 = dot(ab, ab);
    if len2 == 0.0 {
        return dist(p, a);
    }
    let t = (dot(sub(p, a), ab) / len2).clamp(0.0, 1.0);
    dist(p, [a[0] + t * ab[0], a[1] + t * ab[1]])
}

fn arc_segment_dist(h: &HalfCircle, a: Pt, b: Pt) -> f64 {
    let mut best = h.point_dist(a).min(h.point_dist(b));
    for e in h.ends() {
        best = best.min(point_segment_dist(e, a, b));
    }
    let ab = sub(b, a);
    let len2 = dot(ab, ab);
    if len2 > 0.0 {
        let t = dot(sub(h.c, a), ab) / len2;
        let foot = [a[0] + t * ab[0], a[1] + t * ab[1]];
        if (0.0..=1.0).contains(&t) {
            best = best.min(h.point_dist(foot));
            let off = dist(foot, h.c);
            if off <= h.r {
                let w = (h.r * h.r - off * off).sqrt() / len2.sqrt();
                for s in [t - w, t + w] {
                    let q = [a[0] + s * ab[0], a[1] + s * ab[1]];
                    if (0.0..=1.0).contains(&s) && h.holds(q) {
                        return 0.0;
                    }
                }
            }
        }
    }
    best
}

fn arc_arc_dist(a: &HalfCircle, b: &HalfCircle) -> f64 {
    let mut best = f64::INFINITY;
    for e in a.ends() {
        best = best.min(b.point_dist(e));
    }
    for e in b.ends() {
        best = best.min(a.point_dist(e));
    }
    let d = dist(a.c, b.c);
    if d == 0.0 {
        return best.min((a.r - b.r).abs());
    }
    let u = [(b.c[0] - a.c[0]) / d, (b.c[1] - a.c[1]) / d];
    for s in [1.0, -1.0] {
        for t in [1.0, -1.0] {
            let p = [a.c[0] + s * a.r * u[0], a.c[1] + s * a.r * u[1]];
            let q = [b.c[0] + t * b.r * u[0], b.c[1] + t * b.r * u[1]];
            if a.holds(p) && b.holds(q) {
                best = best.min(dist(p, q));
            }
        }
    }
    if d <= a.r + b.r && d >= (a.r - b.r).abs() {
        let along = (a.r * a.r - b.r * b.r + d * d) / (2.0 * d);
        let h = (a.r * a.r - along * along).max(0.0).sqrt();
        let m = [a.c[0] + along * u[0], a.c[1] + along * u[1]];
        for s in [1.0, -1.0] {
            let q = [m[0] - s * h * u[1], m[1] + s * h * u[0]];
            if a.holds(q) && b.holds(q) {
                return 0.0;
            }
        }
    }
    best
}

/// Distance from a semicircle to a closed half-disc.
fn arc_halfdisc_dist(w: &HalfCircle, disc: &HalfCircle) -> f64 {
    if w.ends().iter().any(|&e| disc.point_inside_disc(e)) {
        return 0.0;
    }
    let [e1, e2] = disc.ends();
    arc_arc_dist(w, disc).min(arc_segment_dist(w, e1, e2))
}

/// The chart domain around one semicircle: radii `r ± delta`, angles up to
/// `π/2 + eps` from the open direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tube {
    pub join: usize,
    pub center: [f64; 2],
    pub r: f64,
    pub delta: f64,
    pub eps: f64,
    pub side: Side,
}

impl Tube {
    fn local(&self, p: Pt) -> (f64, f64) {
        let mut v = sub(p, self.center);
        if self.side == Side::Left {
            v[0] = -v[0];
        }
        (norm(v), v[1].atan2(v[0]))
    }

    fn global(&self, rho: f64, theta: f64) -> Pt {
        let (s, c) = theta.sin_cos();
        let dx = rho * c;
        let dx = if self.side == Side::Left { -dx } else { dx };
        [self.center[0] + dx, self.center[1] + rho * s]
    }

    pub fn contains(&self, p: Pt) -> bool {
        let (rho, theta) = self.local(p);
        (rho - self.r).abs() < self.delta && theta.abs() < FRAC_PI_2 + self.eps
    }

    fn to_box_y(&self, theta: f64) -> f64 {
        let a = theta.abs();
        let y = if a <= FRAC_PI_2 { a / PI } else { 0.5 + (a - FRAC_PI_2) / (2.0 * self.eps) };
        y.copysign(theta)
    }

    fn from_box_y(&self, y: f64) -> f64 {
        let a = y.abs();
        let t = if a <= 0.5 { a * PI } else { FRAC_PI_2 + (a - 0.5) * 2.0 * self.eps };
        t.copysign(y)
    }

    /// `chart^{-1} ∘ f̂ ∘ chart`; the identity off the tube.
    pub fn apply(&self, p: Pt) -> Pt {
        if !self.contains(p) {
            return p;
        }
        let (rho, theta) = self.local(p);
        let x = (rho - self.r) / self.delta;
        let (_, y) = fhat((x, self.to_box_y(theta)), &[0.0]).expect("tube points chart into the box");
        self.global(rho, self.from_box_y(y))
    }

    /// Where the whole semicircle lands.
    pub fn collapse_point(&self) -> Pt {
        self.global(self.r, 0.0)
    }
}

/// The glue data of one level.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GlueRegion {
    pub level: usize,
    pub side: Side,
    /// Abscissa `T^n(c)`.
    pub x: f64,
    /// Height numerators of the arcs joined at this level.
    pub heights: Vec<u64>,
    /// `A_n` as numerators over the scene's height denominator.
    pub a_lo: u64,
    pub a_hi: u64,
    /// Centre height `M_n`.
    pub mid: f64,
    /// `diam(A_n) / 2`.
    pub radius: f64,
    pub tubes: Vec<Tube>,
}

impl GlueRegion {
    pub fn diam_a(&self) -> f64 {
        2.0 * self.radius
    }

    /// `diam(V_n)`: the half-disc widened by `diam(A_n) / 6` on every side.
    pub fn diam_v(&self) -> f64 {
        2.0 * self.radius * (1.0 + 1.0 / 3.0)
    }

    fn half_disc(&self) -> HalfCircle {
        HalfCircle::new([self.x, self.mid], self.radius, self.side)
    }

    /// The tube holding `p`. Tubes of one level share their centre and are
    /// kept sorted by radius.
    fn tube_at(&self, p: Pt) -> Option<&Tube> {
        let first = self.tubes.first()?;
        let rho = dist(p, first.center);
        let i = self.tubes.partition_point(|t| t.r + t.delta <= rho);
        self.tubes[i.saturating_sub(1)..(i + 2).min(self.tubes.len())].iter().find(|t| t.contains(p))
    }

    pub fn contains(&self, p: Pt) -> bool {
        self.tube_at(p).is_some()
    }

    pub fn apply(&self, p: Pt) -> Pt {
        self.tube_at(p).map_or(p, |t| t.apply(p))
    }
}

fn join_circle(scene: &PlanarScene, k: usize) -> HalfCircle {
    let j = &scene.joins[k];
    let (lo, hi) = scene.join_span(j);
    let den = scene.y_den() as f64;
    HalfCircle::new([j.x, (lo + hi) as f64 / (2.0 * den)], (hi - lo) as f64 / (2.0 * den), j.pair.side)
}

/// One region per level that carries joins, levels ascending.
pub fn build_glue_regions(scene: &PlanarScene) -> Result<Vec<GlueRegion>> {
    let den = scene.y_den() as f64;
    let mut levels: Vec<usize> = scene.joins.iter().map(|j| j.pair.level).collect();
    levels.sort_unstable();
    levels.dedup();

    let mut regions: Vec<GlueRegion> = levels
        .iter()
        .map(|&level| {
            let members: Vec<usize> = (0..scene.joins.len()).filter(|&k| scene.joins[k].pair.level == level).collect();
            let first = &scene.joins[members[0]];
            let mut heights: Vec<u64> = members
                .iter()
                .flat_map(|&k| {
                    let p = scene.joins[k].pair;
                    [scene.segments[p.low].y, scene.segments[p.high].y]
                })
                .collect();
            heights.sort_unstable();
            heights.dedup();
            let (a_lo, a_hi) = (heights[0], *heights.last().expect("joins have two ends"));
            GlueRegion {
                level,
                side: first.pair.side,
                x: first.x,
                heights,
                a_lo,
                a_hi,
                mid: (a_lo + a_hi) as f64 / (2.0 * den),
                radius: (a_hi - a_lo) as f64 / (2.0 * den),
                tubes: Vec::new(),
            }
        })
        .collect();

    let circles: Vec<HalfCircle> = (0..scene.joins.len()).map(|k| join_circle(scene, k)).collect();
    let mut by_height: Vec<usize> = (0..scene.segments.len()).collect();
    by_height.sort_by_key(|&i| scene.segments[i].y);
    let deeper_discs: Vec<(usize, HalfCircle, f64)> =
        regions.iter().map(|r| (r.level, r.half_disc(), r.radius / 3.0)).collect();

    for region in regions.iter_mut() {
        let cap = region.radius / 12.0;
        for (k, w) in circles.iter().enumerate() {
            let join = &scene.joins[k];
            if join.pair.level != region.level {
                continue;
            }
            let mut budget = cap * 3.0;
            for &(level, disc, grow) in &deeper_discs {
                if level > region.level {
                    budget = budget.min(arc_halfdisc_dist(w, &disc) - grow);
                }
            }
            for (m, other) in circles.iter().enumerate() {
                if m == k || (other.c[1] - w.c[1]).abs() > other.r + w.r + budget {
                    continue;
                }
                budget = budget.min(arc_arc_dist(w, other));
            }
            let reach = w.r + budget;
            let lo = by_height.partition_point(|&i| (scene.segments[i].y as f64 / den) < w.c[1] - reach);
            let hi = by_height.partition_point(|&i| (scene.segments[i].y as f64 / den) <= w.c[1] + reach);
            for &i in &by_height[lo..hi] {
                if i == join.pair.low || i == join.pair.high {
                    continue;
                }
                let s = &scene.segments[i];
                let y = s.y as f64 / den;
                budget = budget.min(arc_segment_dist(w, [s.x_lo, y], [s.x_hi, y]));
            }
            if budget.is_nan() || budget <= 0.0 {
                return Err(Error::ChartOverflow { level: region.level });
            }
            let delta = (budget / 3.0).min(cap).min(w.r / 2.0);
            let eps = (delta / (w.r + delta)).asin();
            region.tubes.push(Tube { join: k, center: w.c, r: w.r, delta, eps, side: join.pair.side });
        }
        region.tubes.sort_by(|a, b| a.r.total_cmp(&b.r));
    }
    Ok(regions)
}

/// What a sampled polyline draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Owner {
    Segment(usize),
    Join(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polyline {
    pub owner: Owner,
    pub points: Vec<[f64; 2]>,
}

/// Sampling density for [`apply_f`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Samples {
    pub per_semicircle: usize,
    /// Evenly spaced points per segment, endpoints included.
    pub per_segment: usize,
}

impl Default for Samples {
    fn default() -> Self {
        Self { per_semicircle: 64, per_segment: 2 }
    }
}

/// The scene after `stages` glue maps.
#[derive(Debug, Clone, PartialEq)]
pub struct GluedScene {
    pub base: PlanarScene,
    pub regions: Vec<GlueRegion>,
    pub stages: usize,
    pub polylines: Vec<Polyline>,
    /// Bound on the displacement of stage `n` (index `n - 1`): `diam(A_n)`,
    /// which the chart domain of that stage reaches across.
    pub cauchy_bounds: Vec<f64>,
    /// Largest measured displacement of each stage.
    pub displacement: Vec<f64>,
    history: Vec<Vec<[f64; 2]>>,
}

impl GluedScene {
    /// Every sampled point after `stage` maps.
    pub fn points_at(&self, stage: usize) -> &[[f64; 2]] {
        &self.history[stage]
    }

    pub fn region(&self, level: usize) -> Option<&GlueRegion> {
        self.regions.iter().find(|r| r.level == level)
    }
}

/// Points along a segment: the evenly spaced ones plus a geometric run
/// toward each end, so the bends made by the glue maps near the endpoints
/// survive sampling.
fn segment_points(x_lo: f64, x_hi: f64, y: f64, even: usize, fine: f64) -> Vec<Pt> {
    let len = x_hi - x_lo;
    let mut ts: Vec<f64> = (0..even.max(2)).map(|i| i as f64 / (even.max(2) - 1) as f64).collect();
    if len > 0.0 {
        let mut step = fine / len;
        while step < 0.5 {
            ts.push(step);
            ts.push(1.0 - step);
            step *= 2.0;
        }
    }
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    ts.into_iter().map(|t| [x_lo + t * len, y]).collect()
}

fn semicircle_points(h: &HalfCircle, n: usize) -> Vec<Pt> {
    let n = n.max(2);
    (0..n)
        .map(|i| {
            let theta = -FRAC_PI_2 + PI * i as f64 / (n - 1) as f64;
            let (s, c) = theta.sin_cos();
            [h.c[0] + h.r * c * h.u[0], h.c[1] + h.r * s]
        })
        .collect()
}

/// Samples the scene and pushes it through `f_1, ..., f_stages`.
pub fn apply_f(scene: &PlanarScene, stages: usize, samples: Samples) -> Result<GluedScene> {
    if stages > scene.depth {
        return Err(Error::Scene(format!("{stages} glue stages requested for a depth-{} scene", scene.depth)));
    }
    let regions = build_glue_regions(scene)?;
    let fine = regions
        .iter()
        .flat_map(|r| r.tubes.iter().map(|t| t.delta))
        .fold(f64::INFINITY, f64::min)
        .min(1.0)
        / 4.0;
    let den = scene.y_den() as f64;
    let mut owners = Vec::new();
    let mut lengths = Vec::new();
    let mut points: Vec<Pt> = Vec::new();
    for (i, s) in scene.segments.iter().enumerate() {
        let pts = segment_points(s.x_lo, s.x_hi, s.y as f64 / den, samples.per_segment, fine);
        owners.push(Owner::Segment(i));
        lengths.push(pts.len());
        points.extend(pts);
    }
    for k in 0..scene.joins.len() {
        let pts = semicircle_points(&join_circle(scene, k), samples.per_semicircle);
        owners.push(Owner::Join(k));
        lengths.push(pts.len());
        points.extend(pts);
    }

    let mut history = vec![points];
    let mut cauchy_bounds = Vec::with_capacity(stages);
    let mut displacement = Vec::with_capacity(stages);
    for n in 1..=stages {
        let prev = history.last().expect("history starts with the base sample");
        let (next, bound, moved) = match regions.iter().find(|r| r.level == n) {
            None => (prev.clone(), 0.0, 0.0),
            Some(region) => {
                let next: Vec<Pt> = prev.iter().map(|&p| region.apply(p)).collect();
                let moved = prev.iter().zip(&next).map(|(&a, &b)| dist(a, b)).fold(0.0, f64::max);
                (next, region.diam_a(), moved)
            }
        };
        cauchy_bounds.push(bound);
        displacement.push(moved);
        history.push(next);
    }

    let last = history.last().expect("non-empty");
    let mut polylines = Vec::with_capacity(owners.len());
    let mut at = 0;
    for (owner, len) in owners.into_iter().zip(lengths) {
        polylines.push(Polyline { owner, points: last[at..at + len].to_vec() });
        at += len;
    }
    Ok(GluedScene { base: scene.clone(), regions, stages, polylines, cauchy_bounds, displacement, history })
}

/// `sup |F_m - F_n|` over the sampled points.
pub fn cauchy_gap(glued: &GluedScene, n: usize, m: usize) -> f64 {
    let (a, b) = (glued.points_at(n), glued.points_at(m));
    a.iter().zip(b).map(|(&p, &q)| dist(p, q)).fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ProbeOutcome {
    /// The vertical segment above the base point meets nothing else.
    Accessible { segment: usize, base: [f64; 2] },
    /// The first polyline the vertical segment runs into.
    Obstructed { owner: Owner, at: [f64; 2] },
}

impl ProbeOutcome {
    pub fn accessible(&self) -> bool {
        matches!(self, ProbeOutcome::Accessible { .. })
    }
}

/// Probes upward from `(x, y)` of a segment: any glued polyline point strictly
/// above the base on the vertical line through `x` is an obstruction.
pub fn probe_segment(glued: &GluedScene, segment: usize, x: f64) -> Result<ProbeOutcome> {
    let seg = glued.base.segments.get(segment).ok_or_else(|| Error::UnknownSegment(segment.to_string()))?;
    if x < seg.x_lo || x > seg.x_hi {
        return Err(Error::Scene(format!("x = {x} is outside the probed arc [{}, {}]", seg.x_lo, seg.x_hi)));
    }
    let base = [x, glued.base.y_f64(segment)];
    let mut hit: Option<(Owner, Pt)> = None;
    for line in &glued.polylines {
        for w in line.points.windows(2) {
            let (p, q) = (w[0], w[1]);
            let (lo, hi) = if p[0] <= q[0] { (p, q) } else { (q, p) };
            if x < lo[0] || x > hi[0] {
                continue;
            }
            let y = if hi[0] == lo[0] { lo[1].max(hi[1]) } else { lo[1] + (x - lo[0]) / (hi[0] - lo[0]) * (hi[1] - lo[1]) };
            if y > base[1] && hit.map_or(true, |(_, h)| y < h[1]) {
                hit = Some((line.owner, [x, y]));
            }
        }
    }
    Ok(match hit {
        Some((owner, at)) => ProbeOutcome::Obstructed { owner, at },
        None => ProbeOutcome::Accessible { segment, base },
    })
}

/// Probes the arc of the distinguished tail, the top of the scene.
pub fn accessibility_probe(glued: &GluedScene, a_tail: &crate::LeftTail, a_x: f64) -> Result<ProbeOutcome> {
    let top = glued.base.ctx.top();
    if a_tail != top {
        return Err(Error::WrongContext { probe: a_tail.to_string(), scene: top.to_string() });
    }
    let segment = (0..glued.base.segments.len())
        .max_by_key(|&i| glued.base.segments[i].y)
        .ok_or_else(|| Error::Scene("empty scene".into()))?;
    probe_segment(glued, segment, a_x)
}

#[derive(Serialize)]
struct PolylineDoc<'a> {
    points: &'a [[f64; 2]],
}

#[derive(Serialize)]
struct GluedDoc<'a> {
    nu: String,
    #[serde(rename = "L")]
    l: String,
    depth: usize,
    x_mode: crate::scene::XMode,
    stages: usize,
    polylines: Vec<PolylineDoc<'a>>,
    joins: serde_json::Value,
    cauchy_bounds: &'a [f64],
}

impl GluedScene {
    pub fn to_json(&self) -> String {
        let base: serde_json::Value = serde_json::from_str(&self.base.to_json()).expect("scene json parses");
        let doc = GluedDoc {
            nu: self.base.nu.to_string(),
            l: self.base.ctx.top().to_string(),
            depth: self.base.depth,
            x_mode: self.base.x_mode,
            stages: self.stages,
            polylines: self.polylines.iter().map(|p| PolylineDoc { points: &p.points }).collect(),
            joins: base["joins"].clone(),
            cauchy_bounds: &self.cauchy_bounds,
        };
        serde_json::to_string_pretty(&doc).expect("glued documents always serialize")
    }
}
