//! The planar representation: arcs as horizontal segments at Cantor-set
//! heights, identified endpoints joined by semicircles, and the checks that
//! nothing crosses.
//!
//! Heights of a depth-`n` scene are exact: segment `i` sits at
//! `y[i] / (2 * 3^n)`, the midpoint of its Cantor block.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::arcs::{
    boundary_pairs, enumerate_cylinders, orbit_compare, sort_cylinders, ArcCode, BasicArc, JoinPair, Side,
};
use crate::cantor::{cylinder_digits, precl_compare, OrderContext, Ternary};
use crate::error::{Error, Result};
use crate::sequence::{parse_word, LeftTail};
use crate::symbolic::admissible::{is_admissible_tail, tail_check_depth};
use crate::symbolic::{KneadingSequence, TentMap};

/// Largest depth whose height numerators fit in a `u64`.
pub const MAX_DEPTH: usize = 38;

/// Tolerance on abscissae in [`XMode::NumericOrbit`] scenes.
pub const NUMERIC_TOL: f64 = 1e-9;

/// How orbit indices become abscissae.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum XMode {
    /// `T^n(c)` for the tent map of the given slope.
    NumericOrbit { slope: f64 },
    /// Rank of `T^n(c)` among the scene's cut points, scaled into `[0, 1]`.
    #[default]
    SymbolicRank,
}

impl XMode {
    pub fn tolerance(&self) -> f64 {
        match self {
            XMode::NumericOrbit { .. } => NUMERIC_TOL,
            XMode::SymbolicRank => 0.0,
        }
    }
}

/// Abscissae of `T^i(c)` for each index, in input order.
pub fn resolve_x(indices: &[usize], nu: &KneadingSequence, mode: XMode) -> Result<Vec<f64>> {
    match mode {
        XMode::NumericOrbit { slope } => {
            let map = TentMap::new(slope)?;
            Ok(indices.iter().map(|&i| map.critical_orbit(i)).collect())
        }
        XMode::SymbolicRank => {
            let mut pool: Vec<usize> = indices.iter().copied().chain([1, 2]).collect();
            pool.sort_unstable();
            pool.dedup();
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for &i in &pool {
                let mut home = None;
                for (c, members) in classes.iter().enumerate() {
                    match orbit_compare(nu, members[0], i) {
                        None => return Err(Error::RankTie(members[0], i)),
                        Some(Ordering::Equal) => home = Some(c),
                        Some(_) => {}
                    }
                }
                match home {
                    Some(c) => classes[c].push(i),
                    None => classes.push(vec![i]),
                }
            }
            classes.sort_by(|a, b| orbit_compare(nu, a[0], b[0]).expect("decided above"));
            let scale = (classes.len() - 1).max(1) as f64;
            let rank: HashMap<usize, f64> = classes
                .iter()
                .enumerate()
                .flat_map(|(r, members)| members.iter().map(move |&i| (i, r as f64 / scale)))
                .collect();
            Ok(indices.iter().map(|i| rank[i]).collect())
        }
    }
}

/// A horizontal segment.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcSegment {
    pub arc: BasicArc,
    /// Height numerator over `2 * 3^depth`.
    pub y: u64,
    pub x_lo: f64,
    pub x_hi: f64,
}

/// A semicircle through the endpoints of `pair.low` and `pair.high`, centred
/// on the join abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiCircle {
    pub pair: JoinPair,
    pub x: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanarScene {
    pub nu: KneadingSequence,
    pub ctx: OrderContext,
    pub depth: usize,
    pub x_mode: XMode,
    pub segments: Vec<ArcSegment>,
    pub joins: Vec<SemiCircle>,
    /// Abscissa of every critical orbit point the scene refers to.
    pub ticks: BTreeMap<usize, f64>,
}

impl PlanarScene {
    /// Denominator shared by all heights.
    pub fn y_den(&self) -> u64 {
        2 * 3u64.pow(self.depth as u32)
    }

    pub fn y_f64(&self, segment: usize) -> f64 {
        self.segments[segment].y as f64 / self.y_den() as f64
    }

    /// Heights of the two ends of a join, lower first.
    pub fn join_span(&self, join: &SemiCircle) -> (u64, u64) {
        let a = self.segments[join.pair.low].y;
        let b = self.segments[join.pair.high].y;
        (a.min(b), a.max(b))
    }

    /// The same scene with segment `i` moved to the height of segment
    /// `perm[i]`. Used to build scenes that ignore `≺_L`.
    pub fn with_heights(&self, perm: &[usize]) -> Self {
        let mut out = self.clone();
        for (seg, &p) in out.segments.iter_mut().zip(perm) {
            seg.y = self.segments[p].y;
        }
        out
    }
}

fn check_depth(depth: usize) -> Result<()> {
    if depth > MAX_DEPTH {
        return Err(Error::DepthTooLarge(depth));
    }
    if depth == 0 {
        return Err(Error::Scene("depth must be at least 1".into()));
    }
    Ok(())
}

fn block_height(digits: &[u8]) -> u64 {
    let n = digits.iter().fold(0u64, |acc, &d| acc * 3 + d as u64);
    2 * n + 1
}

fn assemble(
    nu: &KneadingSequence,
    ctx: &OrderContext,
    depth: usize,
    mode: XMode,
    arcs: Vec<BasicArc>,
    heights: Vec<u64>,
) -> Result<PlanarScene> {
    let pairs = boundary_pairs(&arcs, nu);
    let mut indices: Vec<usize> = arcs
        .iter()
        .flat_map(|a| [a.projection.left, a.projection.right])
        .chain(pairs.iter().map(|p| p.level))
        .collect();
    indices.sort_unstable();
    indices.dedup();
    let xs = resolve_x(&indices, nu, mode)?;
    let ticks: BTreeMap<usize, f64> = indices.into_iter().zip(xs).collect();
    let segments = arcs
        .into_iter()
        .zip(heights)
        .map(|(arc, y)| {
            let (a, b) = (ticks[&arc.projection.left], ticks[&arc.projection.right]);
            let (x_lo, x_hi) = if arc.projection.degenerate { (b, b) } else { (a.min(b), a.max(b)) };
            ArcSegment { arc, y, x_lo, x_hi }
        })
        .collect();
    let joins = pairs.into_iter().map(|pair| SemiCircle { pair, x: ticks[&pair.level] }).collect();
    Ok(PlanarScene { nu: nu.clone(), ctx: ctx.clone(), depth, x_mode: mode, segments, joins, ticks })
}

/// Every admissible depth-`depth` cylinder, stacked bottom to top in `≺_L`.
pub fn build_scene(nu: &KneadingSequence, ctx: &OrderContext, depth: usize, mode: XMode) -> Result<PlanarScene> {
    check_depth(depth)?;
    let mut words = enumerate_cylinders(nu, depth);
    sort_cylinders(&mut words, ctx.top());
    let heights = words.iter().map(|w| block_height(&cylinder_digits(w, ctx.top()))).collect();
    let arcs = words.into_iter().map(|w| BasicArc::new(ArcCode::Word(w), nu)).collect();
    assemble(nu, ctx, depth, mode, arcs, heights)
}

/// A scene for a hand-picked set of tails; each is placed in its depth-`depth`
/// Cantor block, so the tails must differ within their last `depth` symbols.
pub fn build_scene_from_tails(
    nu: &KneadingSequence,
    ctx: &OrderContext,
    tails: &[LeftTail],
    depth: usize,
    mode: XMode,
) -> Result<PlanarScene> {
    check_depth(depth)?;
    for t in tails {
        if !is_admissible_tail(t, nu, tail_check_depth(t, depth)) {
            return Err(Error::InadmissibleTail(t.to_string()));
        }
    }
    let mut tails = tails.to_vec();
    tails.sort_by(|a, b| precl_compare(a, b, ctx));
    tails.dedup();
    let heights: Vec<u64> =
        tails.iter().map(|t| block_height(&cylinder_digits(&t.last_word(depth), ctx.top()))).collect();
    if heights.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Scene(format!("two tails share their last {depth} symbols")));
    }
    let arcs = tails.into_iter().map(|t| BasicArc::new(ArcCode::Tail(t), nu)).collect();
    assemble(nu, ctx, depth, mode, arcs, heights)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// A segment strictly between the ends of a semicircle meets it.
    ArcCrossing { join: usize, segment: usize },
    /// Two semicircles over the same point on the same side interleave.
    Interleaved { a: usize, b: usize },
    /// Two semicircles over different points intersect.
    CircleCrossing { a: usize, b: usize },
    /// A semicircle does not start at the ends of its arcs.
    Detached { join: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report<V> {
    pub violations: Vec<V>,
}

impl<V> Report<V> {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn end_x(seg: &ArcSegment, side: Side) -> f64 {
    match side {
        Side::Left => seg.x_lo,
        Side::Right => seg.x_hi,
    }
}

/// Semicircle in floating point: centre, radius, side.
#[derive(Clone, Copy)]
struct Disc {
    x: f64,
    y: f64,
    r: f64,
    side: Side,
}

impl Disc {
    fn of(scene: &PlanarScene, j: &SemiCircle) -> Self {
        let (lo, hi) = scene.join_span(j);
        let den = scene.y_den() as f64;
        Disc { x: j.x, y: (lo + hi) as f64 / (2.0 * den), r: (hi - lo) as f64 / (2.0 * den), side: j.pair.side }
    }

    /// Signed distance from the centre line into the open half-plane.
    fn depth_into(&self, x: f64) -> f64 {
        match self.side {
            Side::Right => x - self.x,
            Side::Left => self.x - x,
        }
    }

    fn x_at(&self, dy: f64) -> f64 {
        let w = (self.r * self.r - dy * dy).max(0.0).sqrt();
        match self.side {
            Side::Right => self.x + w,
            Side::Left => self.x - w,
        }
    }
}

fn circles_cross(a: &Disc, b: &Disc, tol: f64) -> bool {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let d2 = dx * dx + dy * dy;
    let d = d2.sqrt();
    if d == 0.0 || d > a.r + b.r || d < (a.r - b.r).abs() {
        return false;
    }
    let along = (a.r * a.r - b.r * b.r + d2) / (2.0 * d);
    let h = (a.r * a.r - along * along).max(0.0).sqrt();
    let mx = a.x + along * dx / d;
    let margin = tol.max(f64::EPSILON * 4.0);
    [1.0, -1.0].iter().any(|&s| {
        let px = mx - s * h * dy / d;
        a.depth_into(px) > margin && b.depth_into(px) > margin
    })
}

/// Brute-force geometric check that no semicircle meets a segment or another
/// semicircle except at the endpoints it joins.
pub fn verify_noncrossing(scene: &PlanarScene) -> Report<Violation> {
    let tol = scene.x_mode.tolerance();
    let mut violations = Vec::new();
    let mut by_height: Vec<usize> = (0..scene.segments.len()).collect();
    by_height.sort_by_key(|&i| scene.segments[i].y);
    let discs: Vec<Disc> = scene.joins.iter().map(|j| Disc::of(scene, j)).collect();
    let den = scene.y_den() as f64;

    for (k, j) in scene.joins.iter().enumerate() {
        let side = j.pair.side;
        let (a, b) = (&scene.segments[j.pair.low], &scene.segments[j.pair.high]);
        if (end_x(a, side) - j.x).abs() > tol || (end_x(b, side) - j.x).abs() > tol {
            violations.push(Violation::Detached { join: k });
        }
        let (lo, hi) = scene.join_span(j);
        let start = by_height.partition_point(|&i| scene.segments[i].y <= lo);
        let stop = by_height.partition_point(|&i| scene.segments[i].y < hi);
        let disc = discs[k];
        for &i in &by_height[start..stop] {
            let seg = &scene.segments[i];
            let dy = seg.y as f64 / den - disc.y;
            let xc = disc.x_at(dy);
            if seg.x_lo < xc - tol && xc + tol < seg.x_hi {
                violations.push(Violation::ArcCrossing { join: k, segment: i });
            }
        }
    }

    for a in 0..scene.joins.len() {
        for b in a + 1..scene.joins.len() {
            let (ja, jb) = (&scene.joins[a], &scene.joins[b]);
            let (da, db) = (&discs[a], &discs[b]);
            if (da.y - db.y).abs() > da.r + db.r {
                continue;
            }
            if ja.pair.side == jb.pair.side && (ja.x - jb.x).abs() <= tol {
                let (a0, a1) = scene.join_span(ja);
                let (b0, b1) = scene.join_span(jb);
                let interleave = (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1);
                if interleave {
                    violations.push(Violation::Interleaved { a, b });
                }
            } else if circles_cross(da, db, tol) {
                violations.push(Violation::CircleCrossing { a, b });
            }
        }
    }
    Report { violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BetweenViolation {
    pub join: usize,
    pub segment: usize,
}

/// Every segment strictly between the ends of a level-`n` join ends in
/// `c_1 ... c_{n-1}` and stays on the near side of the join abscissa.
pub fn betweenness_check(scene: &PlanarScene) -> Report<BetweenViolation> {
    let tol = scene.x_mode.tolerance();
    let mut violations = Vec::new();
    for (k, j) in scene.joins.iter().enumerate() {
        let (lo, hi) = scene.join_span(j);
        let head = scene.nu.prefix(j.pair.level - 1).ok();
        for (i, seg) in scene.segments.iter().enumerate() {
            if seg.y <= lo || seg.y >= hi {
                continue;
            }
            let suffix_ok = match &head {
                Some(h) => seg.arc.code.last_word(h.len()).as_ref() == Some(h),
                None => true,
            };
            let near = match j.pair.side {
                Side::Right => seg.x_hi <= j.x + tol,
                Side::Left => seg.x_lo >= j.x - tol,
            };
            if !(suffix_ok && near) {
                violations.push(BetweenViolation { join: k, segment: i });
            }
        }
    }
    Report { violations }
}

#[derive(Serialize, Deserialize)]
struct SegmentDoc {
    tail: String,
    y: String,
    x_lo: f64,
    x_hi: f64,
}

#[derive(Serialize, Deserialize)]
struct JoinDoc {
    level: usize,
    side: SideDoc,
    low_tail: String,
    high_tail: String,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(rename_all = "lowercase")]
enum SideDoc {
    Left,
    Right,
}

#[derive(Serialize, Deserialize)]
struct SceneDoc {
    nu: String,
    #[serde(rename = "L")]
    l: String,
    depth: usize,
    x_mode: XMode,
    segments: Vec<SegmentDoc>,
    joins: Vec<JoinDoc>,
}

/// `y / (2 * 3^depth)` as a ternary expansion: block digits then `(1)` for
/// odd numerators, `(0)` for even ones.
pub fn height_ternary(y: u64, depth: usize) -> Ternary {
    let (n, tail) = if y % 2 == 1 { ((y - 1) / 2, 1) } else { (y / 2, 0) };
    let mut digits = vec![0u8; depth];
    let mut rest = n;
    for d in digits.iter_mut().rev() {
        *d = (rest % 3) as u8;
        rest /= 3;
    }
    Ternary::new(digits, vec![tail])
}

fn height_from_ternary(t: &Ternary, depth: usize) -> Result<u64> {
    let scaled = t.value() * num_rational::BigRational::from_integer((2 * 3u64.pow(depth as u32)).into());
    if !scaled.is_integer() {
        return Err(Error::Scene(format!("height {t} is not a multiple of 1/(2*3^{depth})")));
    }
    let n = scaled.to_integer();
    u64::try_from(&n).map_err(|_| Error::Scene(format!("height {t} out of range")))
}

pub fn parse_arc_code(text: &str) -> Result<ArcCode> {
    if text.contains('(') {
        return text.parse().map(ArcCode::Tail);
    }
    let body = text.strip_suffix('.').ok_or(Error::Parse { column: text.len() + 1, message: "expected '.'".into() })?;
    Ok(ArcCode::Word(parse_word(body)?))
}

impl PlanarScene {
    pub fn to_json(&self) -> String {
        let name = |i: usize| self.segments[i].arc.code.to_string();
        let doc = SceneDoc {
            nu: self.nu.to_string(),
            l: self.ctx.top().to_string(),
            depth: self.depth,
            x_mode: self.x_mode,
            segments: self
                .segments
                .iter()
                .map(|s| SegmentDoc {
                    tail: s.arc.code.to_string(),
                    y: height_ternary(s.y, self.depth).to_string(),
                    x_lo: s.x_lo,
                    x_hi: s.x_hi,
                })
                .collect(),
            joins: self
                .joins
                .iter()
                .map(|j| JoinDoc {
                    level: j.pair.level,
                    side: match j.pair.side {
                        Side::Left => SideDoc::Left,
                        Side::Right => SideDoc::Right,
                    },
                    low_tail: name(j.pair.low),
                    high_tail: name(j.pair.high),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("scene documents always serialize")
    }

    /// Reads a scene document. Arc data is recomputed from the tails; heights
    /// and abscissae are taken as written, so hand-edited scenes can be
    /// verified.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SceneDoc = serde_json::from_str(text).map_err(|e| Error::Scene(e.to_string()))?;
        check_depth(doc.depth)?;
        let nu: KneadingSequence = doc.nu.parse()?;
        let ctx = OrderContext::new(doc.l.parse()?, nu.clone())?;
        let mut segments = Vec::with_capacity(doc.segments.len());
        for s in &doc.segments {
            let arc = BasicArc::new(parse_arc_code(&s.tail)?, &nu);
            let y = height_from_ternary(&s.y.parse()?, doc.depth)?;
            segments.push(ArcSegment { arc, y, x_lo: s.x_lo, x_hi: s.x_hi });
        }
        let index: HashMap<String, usize> =
            segments.iter().enumerate().map(|(i, s)| (s.arc.code.to_string(), i)).collect();
        let find = |t: &str| -> Result<usize> {
            let code = parse_arc_code(t)?.to_string();
            index.get(&code).copied().ok_or(Error::UnknownSegment(t.to_string()))
        };
        let mut joins = Vec::with_capacity(doc.joins.len());
        let mut ticks = BTreeMap::new();
        for j in &doc.joins {
            let side = match j.side {
                SideDoc::Left => Side::Left,
                SideDoc::Right => Side::Right,
            };
            let pair = JoinPair { level: j.level, side, low: find(&j.low_tail)?, high: find(&j.high_tail)? };
            let x = end_x(&segments[pair.low], side);
            ticks.insert(j.level, x);
            joins.push(SemiCircle { pair, x });
        }
        for s in &segments {
            ticks.entry(s.arc.projection.left).or_insert(s.x_lo);
            ticks.entry(s.arc.projection.right).or_insert(s.x_hi);
        }
        Ok(PlanarScene { nu, ctx, depth: doc.depth, x_mode: doc.x_mode, segments, joins, ticks })
    }
}
