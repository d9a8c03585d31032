//! Deterministic tree-walking automata.
//!
//! A run moves a single head through the tree; [`Dtwa::run`] detects
//! loops by remembering configurations. [`dfs_from_dfa`] builds the
//! depth-first-search automaton that reads the leaf word, and [`to_dbta`]
//! converts any walking automaton into a bottom-up one by summarising
//! subtrees as [`Behavior`]s.

mod behavior;
mod dfs;
mod dtwa;
mod format;
mod run;

pub use behavior::{behavior_compose, behavior_of_leaf, behavior_of_tree, to_dbta, Behavior, LocalOutcome};
pub use dfs::dfs_from_dfa;
pub use dtwa::{Action, Dtwa, DtwaBuilder, Move, Tag};
pub use run::{format_trace, Outcome, RunOutcome, TraceStep};
