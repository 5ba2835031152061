//! Finite-depth planar representations of unimodal inverse limit spaces.
//!
//! Starting from a kneading sequence and a distinguished left tail `L`, the
//! crate orders basic arcs so that `L` is on top, places them at Cantor-set
//! heights, joins identified endpoints with semicircles, checks that nothing
//! crosses, and glues the semicircles away level by level.

pub mod arcs;
pub mod cantor;
pub mod error;
pub mod gluing;
pub mod scene;
pub mod sequence;
pub mod symbolic;

pub use error::{Error, Result};
pub use sequence::{LeftTail, RightSeq, Symbol, Word};
pub use symbolic::{KneadingSequence, TentMap};
