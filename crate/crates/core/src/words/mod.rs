//! Deterministic word automata and exact verification of regular
//! separators for context-free languages.

mod dfa;
mod intersection;
mod separator;

pub use dfa::{random_dfa, Dfa, Word};
pub use intersection::{cfg_dfa_intersection_empty, cfg_dfa_witness};
pub use separator::{verify_separator, SeparationReport};

/// Renders a word as space-separated letters.
pub fn format_word(word: &[crate::Symbol]) -> String {
    word.iter()
        .map(|s| s.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests;
