//! Tree automata, deterministic tree-walking automata and regular word
//! separators for obfuscated context-free languages.
//!
//! The crate is organised around the reduction between two separation
//! problems:
//!
//! * [`trees`]: ranked alphabets, trees, linear terms with ports, combs,
//!   rotations, enumeration and the s-expression / XML text formats.
//! * [`bottomup`]: deterministic and nondeterministic bottom-up tree
//!   automata with determinization, minimization and Boolean operations.
//! * [`walking`]: deterministic tree-walking automata, their runs, the
//!   depth-first-search automaton built from a word DFA, and conversion to
//!   bottom-up automata through behavior summaries.
//! * [`words`]: word DFAs and exact separator verification against
//!   context-free languages.
//! * [`grammar`]: Chomsky-normal-form grammars, CYK and derivation trees.
//! * [`obfuscation`]: the obfuscation of a grammar into a tree language
//!   over the fresh letters `a` and `c`.
//! * [`rotation`]: transformation tables, the rotation-term search, comb
//!   DFAs and the separator extraction pipeline.

pub mod bottomup;
mod error;
pub mod grammar;
pub mod obfuscation;
pub mod rotation;
mod text;
pub mod trees;
pub mod walking;
pub mod words;

pub use error::{Error, Result};
pub use trees::{RankedAlphabet, Symbol, Term, Tree};
