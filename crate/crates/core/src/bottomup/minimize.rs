use std::collections::HashMap;

use super::dbta::{Dbta, StateId, Table};
use super::explore::{advance, explore};

/// Reachable part of `a` with total tables over the reached states.
pub(crate) fn reachable(a: &Dbta) -> Dbta {
    explore(
        &a.alphabet,
        |letter, args| {
            let args: Vec<StateId> = args.iter().map(|&&q| q).collect();
            a.step(letter, &args)
        },
        |_, &q| a.states[q].clone(),
        |&q| a.accepting[q],
    )
    .0
}

/// Minimal automaton for the language of `a`.
///
/// Unreachable states are dropped, then blocks are refined until no
/// single-letter context with one distinguished child position separates
/// two states of a block. Result states are the blocks, ordered by their
/// smallest member and named after it.
pub fn minimize(a: &Dbta) -> Dbta {
    let r = reachable(a);
    let n = r.states.len();
    let mut block: Vec<usize> = renumber(&r.accepting);
    let mut count = block.iter().max().map_or(0, |m| m + 1);
    loop {
        let signatures: Vec<Vec<usize>> = (0..n).map(|q| signature(&r, &block, q)).collect();
        let next = renumber(&signatures);
        let next_count = next.iter().max().map_or(0, |m| m + 1);
        block = next;
        if next_count == count {
            break;
        }
        count = next_count;
    }

    let mut reps: Vec<StateId> = vec![usize::MAX; count];
    for q in (0..n).rev() {
        reps[block[q]] = q;
    }
    let mut delta = r.delta.clone();
    for (letter, arity) in r.alphabet.letters() {
        let table: &mut Table = delta.get_mut(letter).unwrap();
        table.clear();
        let mut tuple = vec![0; arity];
        loop {
            let args: Vec<StateId> = tuple.iter().map(|&b| reps[b]).collect();
            table.insert(tuple.clone(), block[r.step(letter, &args)]);
            if !advance(&mut tuple, count) {
                break;
            }
        }
    }
    Dbta {
        alphabet: r.alphabet.clone(),
        states: reps.iter().map(|&q| r.states[q].clone()).collect(),
        accepting: reps.iter().map(|&q| r.accepting[q]).collect(),
        delta,
        sink: None,
    }
}

/// Current block of `q` followed by the blocks reached through every
/// letter, child position and assignment of the sibling states.
fn signature(r: &Dbta, block: &[usize], q: StateId) -> Vec<usize> {
    let n = r.states.len();
    let mut sig = vec![block[q]];
    for (letter, arity) in r.alphabet.letters().filter(|(_, a)| *a > 0) {
        for pos in 0..arity {
            let mut siblings = vec![0; arity - 1];
            loop {
                let mut args = siblings.clone();
                args.insert(pos, q);
                sig.push(block[r.step(letter, &args)]);
                if !advance(&mut siblings, n) {
                    break;
                }
            }
        }
    }
    sig
}

/// Dense block numbers in order of first occurrence.
fn renumber<T: Clone + Eq + std::hash::Hash>(values: &[T]) -> Vec<usize> {
    let mut ids: HashMap<&T, usize> = HashMap::new();
    values
        .iter()
        .map(|v| {
            let next = ids.len();
            *ids.entry(v).or_insert(next)
        })
        .collect()
}
