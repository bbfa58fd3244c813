//! Downward closures of languages under the (scattered) subword order.
//!
//! A word `u` is a subword of `v` if `u` can be obtained from `v` by deleting
//! letters at arbitrary positions. The downward closure of a language is the
//! set of all subwords of its members; it is always regular. This crate
//! computes downward closures for languages given as NFAs, blind k-counter
//! automata or context-free grammars, decomposes them into ideals
//! (products of the form `Y0* {x1,eps} Y1* ...`), and decides inclusion and
//! equivalence between the closures of any pair of supported models,
//! producing verifiable witnesses.

pub mod alphabet;
pub mod blind;
pub mod budget;
pub mod decide;
pub mod error;
pub mod format;
pub mod gen;
pub mod grammar;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod nfa;
pub mod trees;

pub use alphabet::{Alphabet, Word};
pub use budget::Budget;
pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
