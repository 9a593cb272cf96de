//! The free algebra with trace.
//!
//! Monomials are a noncommutative [`Word`] times a commutative product of
//! trace symbols `tr(m)`, one per [`CyclicWord`]. Trace symbols commute with
//! everything, so a monomial is stored as its word part plus a sorted
//! multiset of cyclic words. The empty cyclic word is the formal symbol
//! `tr(1)`; it is never specialised to a number here.

mod parse;
mod poly;
mod word;

pub use parse::parse;
pub use poly::{TraceMonomial, TracePoly, VarStyle};
pub use word::{least_rotation, normalize, CyclicWord, Word};
