//! Rotation terms and the extraction of word separators from walking
//! automata.
//!
//! For a minimized automaton, two terms of equal arity are interchangeable
//! in every context iff they induce the same transformation on states.
//! A binary term `t` over `{a, c}` is a rotation term when `t(t(x,y),z)`
//! and `t(x,t(y,z))` are interchangeable; then every member of `t*` with
//! `n` ports behaves like the left comb, and a word automaton reading the
//! comb recovers a separator for the underlying grammars.

mod comb;
mod pipeline;
mod search;
mod tables;

pub use comb::{comb_dfa, instantiate, skeletons, tstar_members, SKELETON};
pub use pipeline::{extract_separator, Extraction, ExtractionReport};
pub use search::{find_rotation_term, RotationSearch, RotationWitness};
pub use tables::{associations, is_associative, l_equivalent, transformation, MinDbta, Transformation, MAX_TABLE_ARITY};
