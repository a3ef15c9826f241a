//! Non-repetitive colorings that only forbid squares of large period.
//!
//! * [`words`] and [`repetitions`]: words, uniform morphisms, power-free
//!   generation and repetition detection.
//! * [`treecert`]: certificates that a morphic level coloring of rooted trees
//!   has no square of period `>= k` on any path.
//! * [`graphs`]: graph model, stacked triangulations, outerplanar families,
//!   path enumeration and the brute-force coloring verifier.
//! * [`search`]: exact `π_k` on small graphs and word/tree witness searches.
//! * [`suite`]: the acceptance checks, shared by the CLI and the test target.

pub mod cli;
pub mod error;
pub mod graphs;
pub mod rational;
pub mod repetitions;
pub mod search;
pub mod suite;
pub mod treecert;
pub mod words;

pub use error::{Error, Result};
pub use rational::Rational;
pub use repetitions::{Repetition, Verdict};
pub use words::{Morphism, PowerFreeSpec, Word};
