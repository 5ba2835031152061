use std::fmt;

use super::admissible::{is_admissible_right, Mode};
use super::kneading::KneadingSequence;
use crate::error::{Error, Result};
use crate::sequence::{LeftTail, RightSeq, Symbol};

/// `... s_{-2} s_{-1} . s_0 s_1 ...`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoSidedWindow {
    pub left: LeftTail,
    pub right: RightSeq,
}

impl TwoSidedWindow {
    pub fn new(left: LeftTail, right: RightSeq) -> Self {
        Self { left, right }
    }

    pub fn at(&self, i: isize) -> Symbol {
        if i < 0 {
            self.left.at(i.unsigned_abs())
        } else {
            self.right.at(i as usize)
        }
    }

    /// The right-infinite sequence starting at position `i`.
    pub fn from_position(&self, i: isize) -> RightSeq {
        if i < 0 {
            self.right.prepend(&self.left.last_word(i.unsigned_abs()))
        } else {
            self.right.shift(i as usize)
        }
    }

    pub fn flip(&self, i: isize) -> Self {
        if i < 0 {
            Self::new(self.left.flip(i.unsigned_abs()), self.right.clone())
        } else {
            let k = i as usize;
            let mut head = self.right.prefix(k + 1);
            head[k] = head[k].flipped();
            Self::new(self.left.clone(), self.right.shift(k + 1).prepend(&head))
        }
    }
}

impl fmt::Display for TwoSidedWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.left, self.right)
    }
}

/// Moves the dot one place to the left.
pub fn shift_two_sided(w: &TwoSidedWindow) -> TwoSidedWindow {
    let (s, left) = w.left.pop();
    TwoSidedWindow::new(left, w.right.prepend(&[s]))
}

/// Inverse of [`shift_two_sided`].
pub fn unshift_two_sided(w: &TwoSidedWindow) -> TwoSidedWindow {
    TwoSidedWindow::new(w.left.push(w.right.at(0)), w.right.shift(1))
}

/// Every right sequence starting in `[-depth, ∞)` is core-admissible.
pub fn is_admissible_window(w: &TwoSidedWindow, nu: &KneadingSequence, depth: usize) -> bool {
    let seq = w.from_position(-(depth as isize));
    is_admissible_right(&seq, nu, usize::MAX, Mode::Core)
}

/// The sequence identified with `w`: it differs from `w` only at a position
/// `k` with `s_{k+1} s_{k+2} ... = ν`.
///
/// Positions `k` in `[-depth, depth]` are tried; a flip only counts when the
/// result is admissible, and at most one flip may survive.
pub fn identify_partner(
    w: &TwoSidedWindow,
    nu: &KneadingSequence,
    depth: usize,
) -> Result<Option<TwoSidedWindow>> {
    let d = depth as isize;
    let mut partners = Vec::new();
    for k in -d..=d {
        match nu.equals_shifted(&w.from_position(k + 1), 0) {
            Some(false) => continue,
            None => return Err(Error::AmbiguousAtDepth(depth)),
            Some(true) => {}
        }
        let flipped = w.flip(k);
        if is_admissible_window(&flipped, nu, depth) {
            partners.push(flipped);
        }
    }
    match partners.len() {
        0 => Ok(None),
        1 => Ok(partners.pop()),
        _ => Err(Error::AmbiguousAtDepth(depth)),
    }
}
