//! Parity-lexicographic order.
//!
//! At the first index `k` where two sequences differ, the one with the smaller
//! symbol is smaller when the common prefix holds an even number of ones, and
//! larger when it holds an odd number.

use std::cmp::Ordering;

use crate::sequence::{RightSeq, Symbol};

/// Outcome of comparing two finite windows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowCmp {
    pub order: Ordering,
    /// `false` when the windows agree on their common length, in which case
    /// `order` is `Equal` and carries no information about the full sequences.
    pub decided: bool,
}

fn decide(a: Symbol, b: Symbol, odd_prefix: bool) -> Ordering {
    let o = a.cmp(&b);
    if odd_prefix {
        o.reverse()
    } else {
        o
    }
}

/// Compares two symbol streams, stopping when either runs out.
///
/// Returns `None` when no difference occurs before one of them ends.
pub fn plex_compare_iter<I, J>(a: I, b: J) -> Option<Ordering>
where
    I: IntoIterator<Item = Symbol>,
    J: IntoIterator<Item = Symbol>,
{
    let mut odd = false;
    for (x, y) in a.into_iter().zip(b) {
        if x != y {
            return Some(decide(x, y, odd));
        }
        if x.is_one() {
            odd = !odd;
        }
    }
    None
}

/// Compares two finite words on their common prefix.
pub fn plex_compare_words(a: &[Symbol], b: &[Symbol]) -> WindowCmp {
    match plex_compare_iter(a.iter().copied(), b.iter().copied()) {
        Some(order) => WindowCmp { order, decided: true },
        None => WindowCmp { order: Ordering::Equal, decided: false },
    }
}

/// Exact comparison of two eventually periodic sequences.
pub fn plex_compare(a: &RightSeq, b: &RightSeq) -> Ordering {
    let n = a.horizon(b);
    plex_compare_iter(a.iter().take(n), b.iter().take(n)).unwrap_or(Ordering::Equal)
}

/// Total order on finite words that reads every missing symbol as `*`.
///
/// A word that is a proper prefix of another is placed at the middle of its
/// own cylinder, so the order stays transitive on words of mixed length.
pub fn plex_compare_padded(a: &[Symbol], b: &[Symbol]) -> Ordering {
    let n = a.len().max(b.len());
    let pad = |w: &[Symbol], i: usize| w.get(i).copied().unwrap_or(Symbol::Star);
    plex_compare_iter((0..n).map(|i| pad(a, i)), (0..n).map(|i| pad(b, i)))
        .unwrap_or(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::parse_word;
    use proptest::prelude::*;

    fn seq(s: &str) -> RightSeq {
        s.parse().unwrap()
    }

    #[test]
    fn golden_mean_example() {
        assert_eq!(plex_compare(&seq("(101)"), &seq("(100)")), Ordering::Less);
    }

    #[test]
    fn empty_prefix_is_even() {
        assert_eq!(plex_compare(&seq("(0)"), &seq("1(0)")), Ordering::Less);
    }

    #[test]
    fn even_prefix_keeps_symbol_order() {
        assert_eq!(plex_compare(&seq("11(0)"), &seq("(1)")), Ordering::Less);
    }

    #[test]
    fn star_sits_between() {
        let w = |s| parse_word(s).unwrap();
        assert_eq!(plex_compare_words(&w("0"), &w("*")).order, Ordering::Less);
        assert_eq!(plex_compare_words(&w("1*"), &w("11")).order, Ordering::Greater);
        let undecided = plex_compare_words(&w("10"), &w("101"));
        assert!(!undecided.decided);
        assert_eq!(undecided.order, Ordering::Equal);
    }

    #[test]
    fn padded_order_places_prefixes_mid_cylinder() {
        let w = |s| parse_word(s).unwrap();
        // "0" behaves as 0*: above 00 (even prefix) and below 01.
        assert_eq!(plex_compare_padded(&w("0"), &w("00")), Ordering::Greater);
        assert_eq!(plex_compare_padded(&w("0"), &w("01")), Ordering::Less);
        // "1" behaves as 1*: the odd prefix reverses the order.
        assert_eq!(plex_compare_padded(&w("1"), &w("10")), Ordering::Less);
    }

    fn arb_seq() -> impl Strategy<Value = RightSeq> {
        let sym = prop_oneof![Just(Symbol::Zero), Just(Symbol::Star), Just(Symbol::One)];
        (
            proptest::collection::vec(sym.clone(), 0..5),
            proptest::collection::vec(sym, 1..4),
        )
            .prop_map(|(p, q)| RightSeq::new(p, q))
    }

    proptest! {
        #[test]
        fn antisymmetric(a in arb_seq(), b in arb_seq()) {
            prop_assert_eq!(plex_compare(&a, &b), plex_compare(&b, &a).reverse());
            prop_assert_eq!(plex_compare(&a, &b) == Ordering::Equal, a == b);
        }

        #[test]
        fn transitive(a in arb_seq(), b in arb_seq(), c in arb_seq()) {
            if plex_compare(&a, &b) == Ordering::Less && plex_compare(&b, &c) == Ordering::Less {
                prop_assert_eq!(plex_compare(&a, &c), Ordering::Less);
            }
        }

        #[test]
        fn padded_is_transitive(
            a in proptest::collection::vec(prop_oneof![Just(Symbol::Zero), Just(Symbol::One)], 0..6),
            b in proptest::collection::vec(prop_oneof![Just(Symbol::Zero), Just(Symbol::One)], 0..6),
            c in proptest::collection::vec(prop_oneof![Just(Symbol::Zero), Just(Symbol::One)], 0..6),
        ) {
            let ab = plex_compare_padded(&a, &b);
            let bc = plex_compare_padded(&b, &c);
            if ab != Ordering::Greater && bc != Ordering::Greater {
                prop_assert_ne!(plex_compare_padded(&a, &c), Ordering::Greater);
            }
        }
    }
}
