//! Symbols, finite words and eventually periodic sequences over `{0, *, 1}`.
//!
//! Every infinite sequence is stored as a preperiod followed by a primitive
//! period, with the preperiod as short as possible. Two sequences are equal
//! exactly when their canonical forms are equal.
//!
//! Text forms:
//!
//! ```text
//! RIGHTSEQ := WORD? '(' WORD ')'        "10(1)" = 10 1 1 1 ...
//! LEFTTAIL := '(' WORD ')' WORD? '.'    "(011)010." = ... 011 011 010 .
//! WORD     := [01*]+
//! ```

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A kneading symbol. The derived order is `Zero < Star < One`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    Star,
    One,
}

impl Symbol {
    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(Symbol::Zero),
            '*' => Some(Symbol::Star),
            '1' => Some(Symbol::One),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::Star => '*',
            Symbol::One => '1',
        }
    }

    pub fn is_one(self) -> bool {
        self == Symbol::One
    }

    /// Swaps `0` and `1`; `*` is left alone.
    pub fn flipped(self) -> Self {
        match self {
            Symbol::Zero => Symbol::One,
            Symbol::One => Symbol::Zero,
            Symbol::Star => Symbol::Star,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

pub type Word = Vec<Symbol>;

pub fn ones_count(word: &[Symbol]) -> usize {
    word.iter().filter(|s| s.is_one()).count()
}

/// `true` when the word contains an odd number of ones.
pub fn is_odd(word: &[Symbol]) -> bool {
    ones_count(word) % 2 == 1
}

pub fn word_to_string(word: &[Symbol]) -> String {
    word.iter().map(|s| s.to_char()).collect()
}

pub fn parse_word(text: &str) -> Result<Word> {
    parse_word_at(text, 1)
}

fn parse_word_at(text: &str, first_column: usize) -> Result<Word> {
    if text.is_empty() {
        return Err(Error::Parse {
            column: first_column,
            message: "expected a non-empty word over 0, *, 1".into(),
        });
    }
    text.chars()
        .enumerate()
        .map(|(i, c)| {
            Symbol::from_char(c).ok_or_else(|| Error::Parse {
                column: first_column + i,
                message: format!("unexpected character {c:?}"),
            })
        })
        .collect()
}

/// A sequence `pre · period^∞` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodic<T> {
    pre: Vec<T>,
    period: Vec<T>,
}

impl<T: Copy + Eq> EventuallyPeriodic<T> {
    /// Builds the canonical form of `pre · period^∞`.
    ///
    /// Panics if `period` is empty.
    pub fn new(mut pre: Vec<T>, mut period: Vec<T>) -> Self {
        assert!(!period.is_empty(), "period must be non-empty");
        let p = primitive_root_len(&period);
        period.truncate(p);
        while let (Some(a), Some(b)) = (pre.last(), period.last()) {
            if a != b {
                break;
            }
            pre.pop();
            period.rotate_right(1);
        }
        Self { pre, period }
    }

    pub fn periodic(period: Vec<T>) -> Self {
        Self::new(Vec::new(), period)
    }

    pub fn preperiod(&self) -> &[T] {
        &self.pre
    }

    pub fn period(&self) -> &[T] {
        &self.period
    }

    pub fn at(&self, i: usize) -> T {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.period[(i - self.pre.len()) % self.period.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Vec<T> {
        (0..n).map(|i| self.at(i)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = T> + '_ {
        (0..).map(move |i| self.at(i))
    }

    /// Drops the first `k` entries.
    pub fn shift(&self, k: usize) -> Self {
        if k <= self.pre.len() {
            Self::new(self.pre[k..].to_vec(), self.period.clone())
        } else {
            let mut period = self.period.clone();
            period.rotate_left((k - self.pre.len()) % self.period.len());
            Self::new(Vec::new(), period)
        }
    }

    /// Prepends `word`.
    pub fn prepend(&self, word: &[T]) -> Self {
        let mut pre = word.to_vec();
        pre.extend_from_slice(&self.pre);
        Self::new(pre, self.period.clone())
    }

    /// Number of leading entries after which two sequences that still agree
    /// agree forever.
    pub fn horizon(&self, other: &Self) -> usize {
        self.pre.len().max(other.pre.len()) + self.period.len().lcm(&other.period.len())
    }

    pub fn map<U: Copy + Eq>(&self, f: impl Fn(T) -> U) -> EventuallyPeriodic<U> {
        EventuallyPeriodic::new(
            self.pre.iter().map(|&x| f(x)).collect(),
            self.period.iter().map(|&x| f(x)).collect(),
        )
    }

    /// Index of the first disagreement with `other`, if any.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        (0..self.horizon(other)).find(|&i| self.at(i) != other.at(i))
    }
}

fn primitive_root_len<T: Eq>(period: &[T]) -> usize {
    let n = period.len();
    (1..=n)
        .filter(|d| n % d == 0)
        .find(|&d| (d..n).all(|i| period[i] == period[i - d]))
        .unwrap_or(n)
}

/// A right-infinite sequence `s_0 s_1 s_2 ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RightSeq(EventuallyPeriodic<Symbol>);

impl RightSeq {
    pub fn new(pre: Word, period: Word) -> Self {
        Self(EventuallyPeriodic::new(pre, period))
    }

    pub fn periodic(period: Word) -> Self {
        Self::new(Vec::new(), period)
    }

    pub fn inner(&self) -> &EventuallyPeriodic<Symbol> {
        &self.0
    }

    pub fn preperiod(&self) -> &[Symbol] {
        self.0.preperiod()
    }

    pub fn period(&self) -> &[Symbol] {
        self.0.period()
    }

    pub fn at(&self, i: usize) -> Symbol {
        self.0.at(i)
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.0.prefix(n)
    }

    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter()
    }

    pub fn shift(&self, k: usize) -> Self {
        Self(self.0.shift(k))
    }

    pub fn prepend(&self, word: &[Symbol]) -> Self {
        Self(self.0.prepend(word))
    }

    pub fn horizon(&self, other: &Self) -> usize {
        self.0.horizon(&other.0)
    }

    /// Length of preperiod plus period; every shift of the sequence equals one
    /// of the first `span()` shifts.
    pub fn span(&self) -> usize {
        self.0.preperiod().len() + self.0.period().len()
    }

    pub fn contains_star(&self) -> bool {
        self.preperiod().contains(&Symbol::Star) || self.period().contains(&Symbol::Star)
    }
}

impl fmt::Display for RightSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({})",
            word_to_string(self.preperiod()),
            word_to_string(self.period())
        )
    }
}

impl FromStr for RightSeq {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let open = text.find('(').ok_or_else(|| Error::Parse {
            column: text.chars().count() + 1,
            message: "expected '(' starting the period".into(),
        })?;
        let close = text.rfind(')').ok_or_else(|| Error::Parse {
            column: text.chars().count() + 1,
            message: "unbalanced '(': expected ')'".into(),
        })?;
        if close < open {
            return Err(Error::Parse { column: close + 1, message: "')' before '('".into() });
        }
        if close + 1 != text.len() {
            return Err(Error::Parse {
                column: close + 2,
                message: "trailing characters after ')'".into(),
            });
        }
        let pre = if open == 0 { Vec::new() } else { parse_word_at(&text[..open], 1)? };
        let period = parse_word_at(&text[open + 1..close], open + 2)?;
        Ok(Self::new(pre, period))
    }
}

/// A left-infinite tail `... s_{-3} s_{-2} s_{-1} .`.
///
/// Stored read backwards from the dot: entry `i` of the inner sequence is
/// `s_{-(i+1)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeftTail(EventuallyPeriodic<Symbol>);

impl LeftTail {
    /// `... period period transient .`, both words in reading order.
    pub fn new(period: &[Symbol], transient: &[Symbol]) -> Self {
        let pre: Word = transient.iter().rev().copied().collect();
        let per: Word = period.iter().rev().copied().collect();
        Self(EventuallyPeriodic::new(pre, per))
    }

    pub fn from_backward(seq: EventuallyPeriodic<Symbol>) -> Self {
        Self(seq)
    }

    /// The tail read leftwards from the dot.
    pub fn backward(&self) -> &EventuallyPeriodic<Symbol> {
        &self.0
    }

    /// `s_{-i}` for `i >= 1`.
    pub fn at(&self, i: usize) -> Symbol {
        debug_assert!(i >= 1);
        self.0.at(i - 1)
    }

    /// The last `n` symbols in reading order `s_{-n} ... s_{-1}`.
    pub fn last_word(&self, n: usize) -> Word {
        let mut w = self.0.prefix(n);
        w.reverse();
        w
    }

    /// The repeating block in reading order.
    pub fn period(&self) -> Word {
        self.0.period().iter().rev().copied().collect()
    }

    /// The transient block in reading order.
    pub fn transient(&self) -> Word {
        self.0.preperiod().iter().rev().copied().collect()
    }

    /// Appends `sym` at position `-1`.
    pub fn push(&self, sym: Symbol) -> Self {
        Self(self.0.prepend(&[sym]))
    }

    /// Removes the symbol at position `-1`.
    pub fn pop(&self) -> (Symbol, Self) {
        (self.0.at(0), Self(self.0.shift(1)))
    }

    /// Flips the symbol at position `-i`.
    pub fn flip(&self, i: usize) -> Self {
        let mut head = self.0.prefix(i);
        head[i - 1] = head[i - 1].flipped();
        Self(self.0.shift(i).prepend(&head))
    }

    /// Replaces the last `word.len()` symbols with `word` (reading order).
    pub fn with_suffix(&self, word: &[Symbol]) -> Self {
        let rev: Word = word.iter().rev().copied().collect();
        Self(self.0.shift(word.len()).prepend(&rev))
    }

    /// Transient length plus period length.
    pub fn span(&self) -> usize {
        self.0.preperiod().len() + self.0.period().len()
    }

    pub fn horizon(&self, other: &Self) -> usize {
        self.0.horizon(&other.0)
    }

    /// Least `k >= 1` with `s_{-k} != t_{-k}`.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.0.first_difference(&other.0).map(|i| i + 1)
    }
}

impl fmt::Display for LeftTail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}){}.",
            word_to_string(&self.period()),
            word_to_string(&self.transient())
        )
    }
}

impl FromStr for LeftTail {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if !text.starts_with('(') {
            return Err(Error::Parse { column: 1, message: "expected '(' starting the period".into() });
        }
        let close = text.find(')').ok_or_else(|| Error::Parse {
            column: text.chars().count() + 1,
            message: "unbalanced '(': expected ')'".into(),
        })?;
        if !text.ends_with('.') || text.len() == close + 1 {
            return Err(Error::Parse {
                column: text.chars().count() + 1,
                message: "expected '.' terminating the tail".into(),
            });
        }
        let period = parse_word_at(&text[1..close], 2)?;
        let body = &text[close + 1..text.len() - 1];
        let transient = if body.is_empty() { Vec::new() } else { parse_word_at(body, close + 2)? };
        Ok(Self::new(&period, &transient))
    }
}

macro_rules! serde_via_string {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                text.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_string!(RightSeq);
serde_via_string!(LeftTail);
