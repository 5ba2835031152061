use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::order::{plex_compare, plex_compare_iter};
use crate::error::{Error, Result};
use crate::sequence::{parse_word, word_to_string, RightSeq, Symbol, Word};

/// Default distance from the critical point below which an orbit point is
/// coded as `*`.
pub const DEFAULT_EPS: f64 = 1e-12;

/// The tent map `x -> min(s x, s (1 - x))` with critical point `1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TentMap {
    slope: f64,
}

impl TentMap {
    pub const CRITICAL: f64 = 0.5;

    pub fn new(slope: f64) -> Result<Self> {
        if slope > 1.0 && slope <= 2.0 {
            Ok(Self { slope })
        } else {
            Err(Error::SlopeOutOfRange(slope))
        }
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    pub fn apply(&self, x: f64) -> f64 {
        (self.slope * x).min(self.slope * (1.0 - x))
    }

    /// `T^n(c)` by direct iteration.
    pub fn critical_orbit(&self, n: usize) -> f64 {
        (0..n).fold(Self::CRITICAL, |x, _| self.apply(x))
    }

    fn code(x: f64, eps: f64) -> Symbol {
        if (x - Self::CRITICAL).abs() <= eps {
            Symbol::Star
        } else if x < Self::CRITICAL {
            Symbol::Zero
        } else {
            Symbol::One
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Body {
    Exact(RightSeq),
    Prefix(Word),
}

/// A `*`-free kneading sequence `c_1 c_2 ...`, either known exactly
/// (eventually periodic) or only through a finite prefix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KneadingSequence {
    body: Body,
    validated_depth: Option<usize>,
}

/// Result of checking `σ^k ν ⪯ ν`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// Least shift that exceeds the sequence.
    Violation(usize),
}

impl KneadingSequence {
    /// Accepts an exact sequence over `{0, 1}` that dominates all of its shifts.
    pub fn new(seq: RightSeq) -> Result<Self> {
        if seq.contains_star() {
            return Err(Error::Parse { column: 1, message: "kneading sequence must not contain '*'".into() });
        }
        let depth = exact_validation_depth(&seq);
        match validate_kneading(&seq, depth) {
            Validity::Valid => Ok(Self { body: Body::Exact(seq), validated_depth: None }),
            Validity::Violation(shift) => Err(Error::NotKneading { shift }),
        }
    }

    /// Accepts a finite prefix; shift-maximality is checked on the window.
    pub fn from_prefix(word: Word) -> Result<Self> {
        if word.is_empty() || word.contains(&Symbol::Star) {
            return Err(Error::Parse { column: 1, message: "kneading prefix must be a non-empty word over 0, 1".into() });
        }
        match validate_kneading_word(&word) {
            Validity::Valid => {
                let n = word.len();
                Ok(Self { body: Body::Prefix(word), validated_depth: Some(n) })
            }
            Validity::Violation(shift) => Err(Error::NotKneading { shift }),
        }
    }

    /// `None` for exact sequences.
    pub fn validated_depth(&self) -> Option<usize> {
        self.validated_depth
    }

    pub fn exact(&self) -> Option<&RightSeq> {
        match &self.body {
            Body::Exact(s) => Some(s),
            Body::Prefix(_) => None,
        }
    }

    /// Number of known symbols, `None` when infinite.
    pub fn known_len(&self) -> Option<usize> {
        match &self.body {
            Body::Exact(_) => None,
            Body::Prefix(w) => Some(w.len()),
        }
    }

    /// `c_i` for `i >= 1`, if known.
    pub fn symbol(&self, i: usize) -> Option<Symbol> {
        debug_assert!(i >= 1);
        match &self.body {
            Body::Exact(s) => Some(s.at(i - 1)),
            Body::Prefix(w) => w.get(i - 1).copied(),
        }
    }

    /// `c_1 ... c_n`.
    pub fn prefix(&self, n: usize) -> Result<Word> {
        match &self.body {
            Body::Exact(s) => Ok(s.prefix(n)),
            Body::Prefix(w) if w.len() >= n => Ok(w[..n].to_vec()),
            Body::Prefix(w) => Err(Error::InsufficientDepth { available: w.len(), requested: n }),
        }
    }

    /// Up to `n` known symbols of `σ^k ν = c_{k+1} c_{k+2} ...`.
    pub fn shifted_window(&self, k: usize, n: usize) -> Word {
        match &self.body {
            Body::Exact(s) => (k..k + n).map(|i| s.at(i)).collect(),
            Body::Prefix(w) => w.iter().skip(k).take(n).copied().collect(),
        }
    }

    /// Compares `s` with `σ^k ν`; `None` when undecidable on the known part.
    pub fn compare_shifted(&self, s: &RightSeq, k: usize) -> Option<Ordering> {
        match &self.body {
            Body::Exact(nu) => Some(plex_compare(s, &nu.shift(k))),
            Body::Prefix(w) => plex_compare_iter(s.iter(), w.iter().skip(k).copied()),
        }
    }

    /// Compares a finite word with `σ^k ν`; `None` when undecided.
    pub fn compare_word_shifted(&self, word: &[Symbol], k: usize) -> Option<Ordering> {
        plex_compare_iter(word.iter().copied(), self.shifted_window(k, word.len()))
    }

    /// Is `s` exactly `σ^k ν`? `None` when only a prefix of `ν` is known and
    /// `s` agrees with all of it.
    pub fn equals_shifted(&self, s: &RightSeq, k: usize) -> Option<bool> {
        match &self.body {
            Body::Exact(nu) => Some(*s == nu.shift(k)),
            Body::Prefix(w) => {
                let known = w.iter().skip(k);
                if known.clone().enumerate().all(|(i, &c)| s.at(i) == c) {
                    None
                } else {
                    Some(false)
                }
            }
        }
    }
}

impl fmt::Display for KneadingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            Body::Exact(s) => write!(f, "{s}"),
            Body::Prefix(w) => write!(f, "{}", word_to_string(w)),
        }
    }
}

/// `RIGHTSEQ` gives an exact sequence; a bare `WORD` gives a finite prefix.
impl FromStr for KneadingSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.contains('(') || text.contains(')') {
            Self::new(text.parse()?)
        } else {
            Self::from_prefix(parse_word(text)?)
        }
    }
}

impl Serialize for KneadingSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KneadingSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Depth at which [`validate_kneading`] is exact for `seq`.
pub fn exact_validation_depth(seq: &RightSeq) -> usize {
    seq.preperiod().len() + 2 * seq.period().len()
}

/// Checks `σ^k ν ⪯ ν` for `1 <= k <= depth`.
pub fn validate_kneading(nu: &RightSeq, depth: usize) -> Validity {
    (1..=depth)
        .find(|&k| plex_compare(&nu.shift(k), nu) == Ordering::Greater)
        .map_or(Validity::Valid, Validity::Violation)
}

/// Window version of [`validate_kneading`] for a finite prefix: a shift only
/// violates when the difference shows up inside the word.
pub fn validate_kneading_word(nu: &[Symbol]) -> Validity {
    (1..nu.len())
        .find(|&k| plex_compare_iter(nu[k..].iter().copied(), nu.iter().copied()) == Some(Ordering::Greater))
        .map_or(Validity::Valid, Validity::Violation)
}

/// Resolves `(c_1 ... c_{n-1} *)^∞` to the parity-lex smaller of the two
/// `*`-free completions.
pub fn modify_star(nu_star: &RightSeq) -> Result<KneadingSequence> {
    let period = nu_star.period();
    let star_last = period.last() == Some(&Symbol::Star);
    let star_count = period.iter().filter(|&&s| s == Symbol::Star).count();
    if !nu_star.preperiod().is_empty() || !star_last || star_count != 1 {
        return Err(Error::MalformedStarPeriod);
    }
    let head = &period[..period.len() - 1];
    let complete = |s: Symbol| {
        let mut w = head.to_vec();
        w.push(s);
        RightSeq::periodic(w)
    };
    let (zero, one) = (complete(Symbol::Zero), complete(Symbol::One));
    let smaller = if plex_compare(&zero, &one) == Ordering::Less { zero } else { one };
    KneadingSequence::new(smaller)
}

/// Kneading sequence of a tent map from its critical orbit.
///
/// A return of the orbit to within `eps` of the critical point produces the
/// `*` form, resolved by [`modify_star`]; a return to within `eps` of an
/// earlier orbit point closes an eventually periodic sequence. Otherwise the
/// first `n` symbols are returned as a prefix.
pub fn kneading_from_slope(map: &TentMap, n: usize, eps: f64) -> Result<KneadingSequence> {
    let mut orbit: Vec<f64> = Vec::with_capacity(n);
    let mut symbols: Word = Vec::with_capacity(n);
    let mut x = map.apply(TentMap::CRITICAL);
    for _ in 0..n.max(1) {
        if let Some(j) = orbit.iter().position(|&y| (y - x).abs() <= eps) {
            let pre = symbols[..j].to_vec();
            let period = symbols[j..].to_vec();
            return KneadingSequence::new(RightSeq::new(pre, period));
        }
        let sym = TentMap::code(x, eps);
        if sym == Symbol::Star {
            let mut period = symbols.clone();
            period.push(Symbol::Star);
            return modify_star(&RightSeq::periodic(period));
        }
        orbit.push(x);
        symbols.push(sym);
        x = map.apply(x);
    }
    KneadingSequence::from_prefix(symbols)
}

/// First `n` symbols of the (modified) itinerary of `x`.
///
/// After the first `*` the remainder is the kneading sequence. A point on a
/// periodic critical orbit, `x = T^j(c)` with `j >= 1`, has itinerary
/// `σ^{j-1} ν`.
pub fn tent_itinerary(map: &TentMap, x: f64, n: usize, eps: f64) -> Result<Word> {
    let nu = kneading_from_slope(map, n.max(64), eps)?;
    if (x - TentMap::CRITICAL).abs() > eps {
        if let Some(j) = critical_orbit_index(map, x, &nu, eps) {
            return Ok(nu.shifted_window(j - 1, n));
        }
    }
    let mut out = Word::with_capacity(n);
    let mut y = x;
    while out.len() < n {
        let sym = TentMap::code(y, eps);
        out.push(sym);
        if sym == Symbol::Star {
            let rest = n - out.len();
            out.extend(nu.shifted_window(0, rest));
            break;
        }
        y = map.apply(y);
    }
    Ok(out)
}

/// `Some(j)` when `x` is within `eps` of `T^j(c)` and the critical orbit is
/// periodic, so `x` belongs to it.
fn critical_orbit_index(map: &TentMap, x: f64, nu: &KneadingSequence, eps: f64) -> Option<usize> {
    let period = nu.exact()?.period().len();
    // Only a critical orbit that returns to c makes the modification apply.
    if (map.critical_orbit(period) - TentMap::CRITICAL).abs() > eps {
        return None;
    }
    (1..=period).find(|&j| (map.critical_orbit(j) - x).abs() <= eps)
}
