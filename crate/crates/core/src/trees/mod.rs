//! Ranked alphabets, trees and linear terms with ports.

mod alphabet;
mod enumerate;
mod sexpr;
mod term;
mod tree;

pub use alphabet::{RankedAlphabet, Symbol};
pub use enumerate::{enumerate_terms, enumerate_trees, terms_of_size, TermEnumerator};
pub use sexpr::{encode_xml, parse_term, parse_tree};
pub use term::{comb, comb_term, compose, compose_checked, Term};
pub use tree::{leaf_word, RotationDirection, Tree};
