//! Basic arcs: the match sets behind `τ_L` and `τ_R`, projections onto the
//! interval, cylinder enumeration and the pairs of arcs that share an
//! endpoint.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cantor::precl_compare_words;
use crate::sequence::{is_odd, word_to_string, LeftTail, Symbol, Word};
use crate::symbolic::admissible::is_admissible_word;
use crate::symbolic::order::plex_compare_iter;
use crate::symbolic::{plex_compare, KneadingSequence};

/// A value of `τ_L` or `τ_R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tau {
    /// No match of the required parity (only possible for `τ_L`).
    Empty,
    Finite(usize),
    Infinite,
}

impl Tau {
    pub fn finite(self) -> Option<usize> {
        match self {
            Tau::Finite(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tau::Empty => f.write_str("-"),
            Tau::Finite(n) => write!(f, "{n}"),
            Tau::Infinite => f.write_str("inf"),
        }
    }
}

/// Either a depth-`n` cylinder `s_{-n} ... s_{-1}` or a full left tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ArcCode {
    Word(Word),
    Tail(LeftTail),
}

impl ArcCode {
    /// `s_{-i}`, or `None` past the end of a cylinder word.
    pub fn at(&self, i: usize) -> Option<Symbol> {
        match self {
            ArcCode::Word(w) => (i <= w.len()).then(|| w[w.len() - i]),
            ArcCode::Tail(t) => Some(t.at(i)),
        }
    }

    /// `s_{-k} ... s_{-1}`, if that many symbols exist.
    pub fn last_word(&self, k: usize) -> Option<Word> {
        match self {
            ArcCode::Word(w) => (k <= w.len()).then(|| w[w.len() - k..].to_vec()),
            ArcCode::Tail(t) => Some(t.last_word(k)),
        }
    }

    pub fn depth(&self) -> Option<usize> {
        match self {
            ArcCode::Word(w) => Some(w.len()),
            ArcCode::Tail(_) => None,
        }
    }

    /// Changes `s_{-i}`; `None` past the end of a cylinder word.
    pub fn flip(&self, i: usize) -> Option<Self> {
        match self {
            ArcCode::Word(w) if i > w.len() || i == 0 => None,
            ArcCode::Word(w) => {
                let mut w = w.clone();
                let j = w.len() - i;
                w[j] = w[j].flipped();
                Some(ArcCode::Word(w))
            }
            ArcCode::Tail(t) => Some(ArcCode::Tail(t.flip(i))),
        }
    }
}

impl fmt::Display for ArcCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcCode::Word(w) => write!(f, "{}.", word_to_string(w)),
            ArcCode::Tail(t) => t.fmt(f),
        }
    }
}

/// All `n >= 1` with `s_{-(n-1)} ... s_{-1} = c_1 ... c_{n-1}`, split by the
/// parity of `#1(c_1 ... c_{n-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatchSet {
    pub odd: Vec<usize>,
    pub even: Vec<usize>,
    pub odd_unbounded: bool,
    pub even_unbounded: bool,
}

fn matches_at(code: &ArcCode, nu: &KneadingSequence, n: usize) -> Option<bool> {
    let tail = code.last_word(n - 1)?;
    let head = nu.prefix(n - 1).ok()?;
    Some(tail == head)
}

/// Scan length past which the match set of an eventually periodic tail
/// repeats with period `lcm(tail period, ν period)`.
fn periodic_window(tail: &LeftTail, nu: &KneadingSequence) -> Option<(usize, usize)> {
    let exact = nu.exact()?;
    let k = tail.period().len().lcm(&exact.period().len());
    let start = tail.transient().len() + exact.preperiod().len() + k + 2;
    Some((start, k))
}

pub fn match_set(code: &ArcCode, nu: &KneadingSequence) -> MatchSet {
    let mut set = MatchSet::default();
    let window = match code {
        ArcCode::Tail(t) => periodic_window(t, nu),
        ArcCode::Word(_) => None,
    };
    let limit = match (window, code.depth(), nu.known_len()) {
        (Some((start, k)), _, _) => start + 2 * k,
        (None, Some(d), Some(known)) => d.min(known) + 1,
        (None, Some(d), None) => d + 1,
        (None, None, Some(known)) => known + 1,
        (None, None, None) => unreachable!("exact ν always yields a window"),
    };
    let mut parity_odd = false;
    for n in 1..=limit {
        if n >= 2 {
            if let Some(c) = nu.symbol(n - 1) {
                parity_odd ^= c.is_one();
            }
        }
        if matches_at(code, nu, n) != Some(true) {
            continue;
        }
        let recurring = window.is_some_and(|(start, _)| n >= start);
        if parity_odd {
            set.odd.push(n);
            set.odd_unbounded |= recurring;
        } else {
            set.even.push(n);
            set.even_unbounded |= recurring;
        }
    }
    set
}

fn tau_of(found: &[usize], unbounded: bool) -> Tau {
    match (unbounded, found.last()) {
        (true, _) => Tau::Infinite,
        (false, Some(&n)) => Tau::Finite(n),
        (false, None) => Tau::Empty,
    }
}

/// Largest odd-parity match, `n >= 2`.
pub fn tau_left(code: &ArcCode, nu: &KneadingSequence) -> Tau {
    let m = match_set(code, nu);
    tau_of(&m.odd, m.odd_unbounded)
}

/// Largest even-parity match; `n = 1` always matches.
pub fn tau_right(code: &ArcCode, nu: &KneadingSequence) -> Tau {
    let m = match_set(code, nu);
    tau_of(&m.even, m.even_unbounded)
}

/// Compares `T^i(c)` with `T^j(c)` through their itineraries `σ^{i-1} ν`
/// and `σ^{j-1} ν`. `None` when the known part of `ν` does not decide.
pub fn orbit_compare(nu: &KneadingSequence, i: usize, j: usize) -> Option<Ordering> {
    debug_assert!(i >= 1 && j >= 1);
    match nu.exact() {
        Some(s) => Some(plex_compare(&s.shift(i - 1), &s.shift(j - 1))),
        None if i == j => Some(Ordering::Equal),
        None => {
            let len = nu.known_len().unwrap_or(0);
            plex_compare_iter(nu.shifted_window(i - 1, len), nu.shifted_window(j - 1, len))
        }
    }
}

/// The projection `[T^left(c), T^right(c)]` of a basic arc, as critical
/// orbit indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Projection {
    pub left: usize,
    pub right: usize,
    /// The interval is a single point.
    pub degenerate: bool,
    /// One of `τ_L`, `τ_R` is infinite.
    pub flagged: bool,
}

/// Index of the extreme orbit point among `candidates`; ties and undecided
/// comparisons go to the larger index.
fn extreme(nu: &KneadingSequence, candidates: &[usize], want: Ordering) -> Option<usize> {
    candidates.iter().copied().reduce(|best, n| match orbit_compare(nu, n, best) {
        Some(o) if o == want => n,
        Some(Ordering::Equal) | None => n.max(best),
        Some(_) => best,
    })
}

/// `inf π_0 = sup_{odd n} T^n(c)` and `sup π_0 = inf_{even n} T^n(c)`, with
/// `T^2(c)` standing in for an empty odd class.
pub fn arc_projection(code: &ArcCode, nu: &KneadingSequence) -> Projection {
    let m = match_set(code, nu);
    let left = extreme(nu, &m.odd, Ordering::Greater).unwrap_or(2);
    let right = extreme(nu, &m.even, Ordering::Less).unwrap_or(1);
    let degenerate = left == right || orbit_compare(nu, left, right) != Some(Ordering::Less);
    Projection { left, right, degenerate, flagged: m.odd_unbounded || m.even_unbounded }
}

/// A basic arc (or a cylinder of them) with its combinatorial data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicArc {
    pub code: ArcCode,
    pub tau_l: Tau,
    pub tau_r: Tau,
    pub projection: Projection,
}

impl BasicArc {
    pub fn new(code: ArcCode, nu: &KneadingSequence) -> Self {
        let m = match_set(&code, nu);
        let tau_l = tau_of(&m.odd, m.odd_unbounded);
        let tau_r = tau_of(&m.even, m.even_unbounded);
        let projection = arc_projection(&code, nu);
        Self { code, tau_l, tau_r, projection }
    }

    fn tau(&self, side: Side) -> Tau {
        match side {
            Side::Left => self.tau_l,
            Side::Right => self.tau_r,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// Semicircles at level `n` open to the right iff `#1(c_1 ... c_{n-1})`
    /// is even.
    pub fn for_level(nu: &KneadingSequence, level: usize) -> Option<Side> {
        let head = nu.prefix(level - 1).ok()?;
        Some(if is_odd(&head) { Side::Left } else { Side::Right })
    }
}

/// Two arcs with a common endpoint over `T^level(c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JoinPair {
    pub level: usize,
    pub side: Side,
    /// Indices into the arc list; `low < high`.
    pub low: usize,
    pub high: usize,
}

/// Words of length `depth` with no suffix outside `[σν, ν]`.
pub fn enumerate_cylinders(nu: &KneadingSequence, depth: usize) -> Vec<Word> {
    let mut words: Vec<Word> = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(words.len() * 2);
        for w in &words {
            for s in [Symbol::Zero, Symbol::One] {
                let mut longer = Vec::with_capacity(w.len() + 1);
                longer.push(s);
                longer.extend_from_slice(w);
                if is_admissible_word(&longer, nu) {
                    next.push(longer);
                }
            }
        }
        words = next;
    }
    words.sort();
    words
}

/// Sorts cylinder words bottom to top in `≺_L`.
pub fn sort_cylinders(words: &mut [Word], l: &LeftTail) {
    words.sort_by(|a, b| precl_compare_words(a, b, l));
}

/// Every pair of arcs that differ only at `-m`, end in `c_1 ... c_{m-1}` and
/// both have `τ = m` on the side fixed by the parity of that word.
pub fn boundary_pairs(arcs: &[BasicArc], nu: &KneadingSequence) -> Vec<JoinPair> {
    let index: HashMap<&ArcCode, usize> = arcs.iter().enumerate().map(|(i, a)| (&a.code, i)).collect();
    let mut pairs = Vec::new();
    for (i, arc) in arcs.iter().enumerate() {
        for side in [Side::Left, Side::Right] {
            let Some(m) = arc.tau(side).finite() else { continue };
            let Some(partner) = arc.code.flip(m) else { continue };
            let Some(&j) = index.get(&partner) else { continue };
            if j <= i || arcs[j].tau(side) != Tau::Finite(m) {
                continue;
            }
            debug_assert_eq!(Side::for_level(nu, m), Some(side));
            pairs.push(JoinPair { level: m, side, low: i, high: j });
        }
    }
    pairs.sort_by_key(|p| (p.level, p.low, p.high));
    pairs
}
