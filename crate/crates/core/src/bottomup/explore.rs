use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use super::dbta::{Dbta, StateId, Table};
use crate::trees::{RankedAlphabet, Symbol};

/// Reachable-state construction shared by determinization, products,
/// minimization and the walking-to-bottom-up conversion.
///
/// Starting from the leaf letters, `step` is applied to every tuple of
/// already discovered keys until no new key appears. States are numbered in
/// discovery order, which is deterministic: letters are visited in name
/// order and tuples lexicographically. The resulting tables are total over
/// the discovered states.
pub(crate) fn explore<K, F, N, A>(
    alphabet: &RankedAlphabet,
    mut step: F,
    name: N,
    accepting: A,
) -> (Dbta, Vec<K>)
where
    K: Clone + Eq + Hash,
    F: FnMut(&Symbol, &[&K]) -> K,
    N: Fn(StateId, &K) -> String,
    A: Fn(&K) -> bool,
{
    let mut keys: Vec<K> = Vec::new();
    let mut index: HashMap<K, StateId> = HashMap::new();
    let mut delta: BTreeMap<Symbol, Table> = alphabet
        .letters()
        .map(|(s, _)| (s.clone(), Table::new()))
        .collect();
    let letters: Vec<(Symbol, usize)> = alphabet.letters().map(|(s, a)| (s.clone(), a)).collect();

    let mut intern = |k: K, keys: &mut Vec<K>| -> StateId {
        if let Some(&q) = index.get(&k) {
            return q;
        }
        let q = keys.len();
        index.insert(k.clone(), q);
        keys.push(k);
        q
    };

    for (letter, _) in letters.iter().filter(|(_, a)| *a == 0) {
        let k = step(letter, &[]);
        let q = intern(k, &mut keys);
        delta.get_mut(letter).unwrap().insert(Vec::new(), q);
    }

    let mut done = 0;
    while done < keys.len() {
        let frontier = keys.len();
        for (letter, arity) in letters.iter().filter(|(_, a)| *a > 0) {
            let mut tuple = vec![0; *arity];
            loop {
                if tuple.iter().any(|&q| q >= done) {
                    let args: Vec<&K> = tuple.iter().map(|&q| &keys[q]).collect();
                    let k = step(letter, &args);
                    let q = intern(k, &mut keys);
                    delta.get_mut(letter).unwrap().insert(tuple.clone(), q);
                }
                if !advance(&mut tuple, frontier) {
                    break;
                }
            }
        }
        done = frontier;
    }

    let states = keys.iter().enumerate().map(|(q, k)| name(q, k)).collect();
    let acc = keys.iter().map(&accepting).collect();
    let dbta = Dbta {
        alphabet: alphabet.clone(),
        states,
        accepting: acc,
        delta,
        sink: None,
    };
    (dbta, keys)
}

/// Odometer increment over `[0, bound)^n`; false after the last tuple.
pub(crate) fn advance(tuple: &mut [StateId], bound: usize) -> bool {
    for slot in tuple.iter_mut().rev() {
        *slot += 1;
        if *slot < bound {
            return true;
        }
        *slot = 0;
    }
    false
}
