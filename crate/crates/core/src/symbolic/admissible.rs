//! Admissibility of itineraries against a kneading sequence.
//!
//! All checks are finite-depth approximations: a `true` answer means no
//! violation was found within the inspected window.

use std::cmp::Ordering;

use super::kneading::KneadingSequence;
use crate::sequence::{LeftTail, RightSeq, Symbol};

/// Which part of the interval the itinerary may live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Points of `[T^2(c), T(c)]`.
    Core,
    /// All of `[0, 1]`: additionally `0^∞`, `10^∞`, `0^j s`, `10^{j-1} s`.
    FullInterval,
}

/// `σν ⪯ σ^k s ⪯ ν` for every shift `k < depth` (bounded by the period of
/// `s`), plus the `*` rule: a `*` may occur at most once and must be followed
/// by `ν`.
pub fn is_admissible_right(s: &RightSeq, nu: &KneadingSequence, depth: usize, mode: Mode) -> bool {
    if core_admissible(s, nu, depth) {
        return true;
    }
    match mode {
        Mode::Core => false,
        Mode::FullInterval => outside_core_admissible(s, nu, depth),
    }
}

fn core_admissible(s: &RightSeq, nu: &KneadingSequence, depth: usize) -> bool {
    if !star_rule(s, nu) {
        return false;
    }
    (0..depth.min(s.span())).all(|k| {
        let tail = s.shift(k);
        nu.compare_shifted(&tail, 0) != Some(Ordering::Greater)
            && nu.compare_shifted(&tail, 1) != Some(Ordering::Less)
    })
}

fn star_rule(s: &RightSeq, nu: &KneadingSequence) -> bool {
    if s.period().contains(&Symbol::Star) {
        return false;
    }
    let pre = s.preperiod();
    let stars: Vec<usize> = pre.iter().enumerate().filter(|(_, &x)| x == Symbol::Star).map(|(i, _)| i).collect();
    match stars.as_slice() {
        [] => true,
        [j] => nu.equals_shifted(&s.shift(j + 1), 0) != Some(false),
        _ => false,
    }
}

fn outside_core_admissible(s: &RightSeq, nu: &KneadingSequence, depth: usize) -> bool {
    let (rest, min_zeros) = if s.at(0) == Symbol::One { (s.shift(1), 0) } else { (s.clone(), 1) };
    let zeros = leading_zeros(&rest);
    match zeros {
        None => true, // 0^∞ or 10^∞
        Some(z) if z < min_zeros => false,
        Some(z) => (min_zeros..=z).any(|j| core_admissible(&rest.shift(j), nu, depth)),
    }
}

/// `None` when the sequence is all zeros.
fn leading_zeros(s: &RightSeq) -> Option<usize> {
    if s.period() == [Symbol::Zero] && s.preperiod().iter().all(|&x| x == Symbol::Zero) {
        return None;
    }
    Some(s.iter().take_while(|&x| x == Symbol::Zero).count())
}

/// Finite-word test: no suffix of `word` is decidedly above `ν` or below `σν`.
///
/// A word passing this test occurs, up to the window, as a factor of an
/// admissible itinerary.
pub fn is_admissible_word(word: &[Symbol], nu: &KneadingSequence) -> bool {
    (0..word.len()).all(|k| {
        let u = &word[k..];
        nu.compare_word_shifted(u, 0) != Some(Ordering::Greater)
            && nu.compare_word_shifted(u, 1) != Some(Ordering::Less)
    })
}

/// Checks the last `depth` symbols of the tail with [`is_admissible_word`].
pub fn is_admissible_tail(tail: &LeftTail, nu: &KneadingSequence, depth: usize) -> bool {
    is_admissible_word(&tail.last_word(depth), nu)
}

/// A depth large enough that every factor of an eventually periodic tail of
/// bounded length shows up, with room for the comparison window.
pub fn tail_check_depth(tail: &LeftTail, window: usize) -> usize {
    tail.span() + tail.period().len() + window
}
