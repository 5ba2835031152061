//! The order `≺_L` on left tails and its embedding `ψ_L` into the middle-third
//! Cantor set.
//!
//! The `i`-th ternary digit of `ψ_L(s)` is `2` when `s_{-i} ... s_{-1}` and
//! `l_{-i} ... l_{-1}` contain the same number of ones modulo two, and `0`
//! otherwise. This is the alternating series `Σ ±3^{-i} + 1/2` rewritten
//! digit by digit, and it keeps eventually periodic tails eventually periodic.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sequence::{is_odd, EventuallyPeriodic, LeftTail, Symbol};
use crate::symbolic::admissible::{is_admissible_tail, tail_check_depth};
use crate::symbolic::KneadingSequence;

/// An eventually periodic base-3 expansion `0.d_1 d_2 ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ternary(EventuallyPeriodic<u8>);

impl Ternary {
    pub fn new(pre: Vec<u8>, period: Vec<u8>) -> Self {
        debug_assert!(pre.iter().chain(&period).all(|&d| d < 3));
        Self(EventuallyPeriodic::new(pre, period))
    }

    pub fn digits(&self) -> &EventuallyPeriodic<u8> {
        &self.0
    }

    /// `d_i` for `i >= 1`.
    pub fn digit(&self, i: usize) -> u8 {
        self.0.at(i - 1)
    }

    /// Exact value of the infinite expansion.
    pub fn value(&self) -> BigRational {
        let pre = self.0.preperiod();
        let period = self.0.period();
        let three = BigInt::from(3);
        let int_of = |ds: &[u8]| ds.iter().fold(BigInt::zero(), |acc, &d| acc * &three + BigInt::from(d));
        let scale = num_traits::pow(three.clone(), pre.len());
        let head = BigRational::new(int_of(pre), scale.clone());
        let body = int_of(period);
        let cycle = num_traits::pow(three.clone(), period.len()) - BigInt::one();
        head + BigRational::new(body, scale * cycle)
    }

    /// `Σ_{i<=n} d_i 3^{-i}`.
    pub fn truncated(&self, n: usize) -> BigRational {
        let three = BigInt::from(3);
        let num = (1..=n).fold(BigInt::zero(), |acc, i| acc * &three + BigInt::from(self.digit(i)));
        BigRational::new(num, num_traits::pow(three, n))
    }
}

impl fmt::Display for Ternary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |ds: &[u8]| ds.iter().map(|d| char::from(b'0' + d)).collect::<String>();
        write!(f, "{}({})", s(self.0.preperiod()), s(self.0.period()))
    }
}

impl FromStr for Ternary {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let err = |column: usize, message: &str| Error::Parse { column, message: message.into() };
        let open = text.find('(').ok_or_else(|| err(text.len() + 1, "expected '('"))?;
        if !text.ends_with(')') {
            return Err(err(text.len() + 1, "expected ')'"));
        }
        let digits = |part: &str, offset: usize| -> Result<Vec<u8>> {
            part.chars()
                .enumerate()
                .map(|(i, c)| match c {
                    '0'..='2' => Ok(c as u8 - b'0'),
                    _ => Err(err(offset + i, "expected a ternary digit")),
                })
                .collect()
        };
        let pre = digits(&text[..open], 1)?;
        let period = digits(&text[open + 1..text.len() - 1], open + 2)?;
        if period.is_empty() {
            return Err(err(open + 2, "empty period"));
        }
        Ok(Self::new(pre, period))
    }
}

/// A point of the middle-third Cantor set: a ternary expansion with digits in
/// `{0, 2}`. Ordered digit by digit, which agrees with the numeric order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CantorCoordinate(Ternary);

impl CantorCoordinate {
    pub fn new(digits: Ternary) -> Option<Self> {
        let d = digits.digits();
        d.preperiod().iter().chain(d.period()).all(|&x| x != 1).then_some(Self(digits))
    }

    pub fn ternary(&self) -> &Ternary {
        &self.0
    }

    pub fn digit(&self, i: usize) -> u8 {
        self.0.digit(i)
    }

    pub fn value(&self) -> BigRational {
        self.0.value()
    }

    /// Exact rational with denominator `3^n`; for `ψ_L(L)` this is `1 - 3^{-n}`.
    pub fn truncated(&self, n: usize) -> BigRational {
        self.0.truncated(n)
    }
}

impl Ord for CantorCoordinate {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.0.digits().first_difference(other.0.digits()) {
            None => Ordering::Equal,
            Some(i) => self.0.digits().at(i).cmp(&other.0.digits().at(i)),
        }
    }
}

impl PartialOrd for CantorCoordinate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CantorCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The distinguished tail `L` (the largest in `≺_L`) with its kneading
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderContext {
    l: LeftTail,
    nu: KneadingSequence,
}

impl OrderContext {
    pub fn new(l: LeftTail, nu: KneadingSequence) -> Result<Self> {
        let depth = tail_check_depth(&l, 32);
        if !is_admissible_tail(&l, &nu, depth) {
            return Err(Error::InadmissibleTail(l.to_string()));
        }
        Ok(Self { l, nu })
    }

    pub fn top(&self) -> &LeftTail {
        &self.l
    }

    pub fn nu(&self) -> &KneadingSequence {
        &self.nu
    }
}

fn precl_decide(k: usize, s_k: Symbol, t_k: Symbol, l_k: Symbol, parity_gap_odd: bool) -> Ordering {
    debug_assert!(s_k != t_k && k >= 1);
    let less = (t_k == l_k && !parity_gap_odd) || (s_k == l_k && parity_gap_odd);
    if less {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// `s ≺_L t` at the first position `-k` where the tails differ.
pub fn precl_compare(s: &LeftTail, t: &LeftTail, ctx: &OrderContext) -> Ordering {
    let Some(k) = s.first_difference(t) else {
        return Ordering::Equal;
    };
    let l = ctx.top();
    let gap = is_odd(&s.last_word(k - 1)) != is_odd(&l.last_word(k - 1));
    precl_decide(k, s.at(k), t.at(k), l.at(k), gap)
}

/// [`precl_compare`] for two cylinder words of equal length, written in
/// reading order `s_{-n} ... s_{-1}`.
pub fn precl_compare_words(s: &[Symbol], t: &[Symbol], l: &LeftTail) -> Ordering {
    debug_assert_eq!(s.len(), t.len());
    let n = s.len();
    let Some(k) = (1..=n).find(|&k| s[n - k] != t[n - k]) else {
        return Ordering::Equal;
    };
    let gap = is_odd(&s[n + 1 - k..]) != is_odd(&l.last_word(k - 1));
    precl_decide(k, s[n - k], t[n - k], l.at(k), gap)
}

/// Ternary digits of `ψ_L(s)`.
pub fn psi_digits(s: &LeftTail, ctx: &OrderContext) -> CantorCoordinate {
    let (a, b) = (s.backward(), ctx.top().backward());
    let pre = a.preperiod().len().max(b.preperiod().len());
    let period = a.period().len().lcm(&b.period().len());
    let mut odd = false;
    let digits: Vec<u8> = (0..pre + 2 * period)
        .map(|i| {
            if a.at(i) != b.at(i) {
                odd = !odd;
            }
            if odd {
                0
            } else {
                2
            }
        })
        .collect();
    let (head, cycle) = digits.split_at(pre);
    CantorCoordinate(Ternary::new(head.to_vec(), cycle.to_vec()))
}

/// `ψ_L(s)` truncated after `depth` digits.
pub fn psi_value(s: &LeftTail, ctx: &OrderContext, depth: usize) -> BigRational {
    psi_digits(s, ctx).truncated(depth)
}

/// First `n` digits of `ψ_L` for a cylinder word `s_{-n} ... s_{-1}`.
pub fn cylinder_digits(word: &[Symbol], l: &LeftTail) -> Vec<u8> {
    let n = word.len();
    let mut odd = false;
    (1..=n)
        .map(|i| {
            if word[n - i] != l.at(i) {
                odd = !odd;
            }
            if odd {
                0
            } else {
                2
            }
        })
        .collect()
}

/// The closed Cantor block `[lo, lo + 3^{-n}]` holding `ψ_L` of every tail
/// that ends in `word`.
pub fn cylinder_interval(word: &[Symbol], l: &LeftTail) -> (BigRational, BigRational) {
    let n = word.len();
    let three = BigInt::from(3);
    let num = cylinder_digits(word, l)
        .into_iter()
        .fold(BigInt::zero(), |acc, d| acc * &three + BigInt::from(d));
    let den = num_traits::pow(three, n);
    let lo = BigRational::new(num.clone(), den.clone());
    let hi = BigRational::new(num + BigInt::one(), den);
    (lo, hi)
}
