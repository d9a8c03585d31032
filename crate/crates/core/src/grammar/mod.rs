//! Context-free grammars in Chomsky normal form.
//!
//! Derivations are trees whose inner nodes carry nonterminals (as binary
//! letters) and whose leaves carry terminals; the step `X -> σ` is implicit
//! in the leaf, so there are no unary nodes.

mod cnf;
mod cyk;
pub mod fixtures;

pub use cnf::CnfGrammar;
pub use cyk::{cyk_member, derivations, generate_words, is_derivation, yield_word};
