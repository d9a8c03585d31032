use rayon::prelude::*;

use super::tables::{associative_table, transformation, MinDbta};
use crate::bottomup::Dbta;
use crate::obfuscation::{padding_alphabet, BRANCH, PAD};
use crate::trees::{terms_of_size, Symbol, Term};
use crate::{Error, Result};

/// A binary term over `{a, c}` that is associative for an automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationWitness {
    pub term: Term,
    pub found_at_size: usize,
    /// Fingerprint of the minimized automaton the term was checked on.
    pub fingerprint: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RotationSearch {
    Found(RotationWitness),
    /// No term with at most `bound` nodes is associative.
    Exhausted { bound: usize },
}

/// Smallest associative binary term over `{a, c}` with at most `max_size`
/// nodes, ties broken lexicographically. Candidates of one size are checked
/// in parallel; the result does not depend on scheduling.
pub fn find_rotation_term(a: &Dbta, max_size: usize) -> Result<RotationSearch> {
    for (letter, arity) in [(BRANCH, 2), (PAD, 0)] {
        if a.alphabet().arity(&Symbol::new(letter)) != Some(arity) {
            return Err(Error::alphabet(format!(
                "rotation search needs `{letter}` of arity {arity} in {}",
                a.alphabet()
            )));
        }
    }
    let min = MinDbta::new(a);
    let pad = padding_alphabet();
    for size in 3..=max_size {
        let candidates = terms_of_size(&pad, 2, size);
        let found = candidates.par_iter().find_first(|t| {
            transformation(&min, t).is_ok_and(|table| associative_table(&table))
        });
        if let Some(t) = found {
            return Ok(RotationSearch::Found(RotationWitness {
                term: t.clone(),
                found_at_size: size,
                fingerprint: min.fingerprint(),
            }));
        }
    }
    Ok(RotationSearch::Exhausted { bound: max_size })
}
