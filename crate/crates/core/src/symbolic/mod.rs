//! Kneading theory for unimodal maps: parity-lex order, tent-map itineraries,
//! kneading sequences, admissibility and the two-sided shift.

pub mod admissible;
pub mod kneading;
pub mod order;
pub mod two_sided;

pub use admissible::{is_admissible_right, is_admissible_tail, is_admissible_word, Mode};
pub use kneading::{
    kneading_from_slope, modify_star, tent_itinerary, validate_kneading, KneadingSequence, TentMap, Validity,
    DEFAULT_EPS,
};
pub use order::{plex_compare, plex_compare_padded, plex_compare_words, WindowCmp};
pub use two_sided::{identify_partner, shift_two_sided, unshift_two_sided, TwoSidedWindow};
