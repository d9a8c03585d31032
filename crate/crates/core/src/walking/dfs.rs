use super::dtwa::{Action, Dtwa, Move, Tag};
use crate::bottomup::StateId;
use crate::trees::RankedAlphabet;
use crate::words::Dfa;
use crate::{Error, Result};

/// Depth-first-search walking automaton that reads the leaf word of the
/// tree with `dfa`.
///
/// Each state pairs a DFA state with a mode: `down` while descending, and
/// `up i` right after returning from child `i`. Leaves whose letter is not
/// in the DFA alphabet are passed over without reading anything. The
/// result accepts `s` iff `leaf_word(s, Γ)` is accepted by `dfa`, where Γ is
/// the DFA alphabet.
pub fn dfs_from_dfa(dfa: &Dfa, alphabet: &RankedAlphabet) -> Result<Dtwa> {
    for letter in dfa.alphabet() {
        if alphabet.arity(letter) != Some(0) {
            return Err(Error::alphabet(format!(
                "DFA letter `{letter}` is not a leaf letter of {alphabet}"
            )));
        }
    }
    let maxarity = alphabet.maxarity();
    let modes = maxarity + 1;
    let id = |k: StateId, mode: usize| k * modes + mode;
    let mut states = Vec::with_capacity(dfa.num_states() * modes);
    for k in 0..dfa.num_states() {
        let name = dfa.state_name(k);
        states.push(format!("{name}_d"));
        for i in 1..=maxarity {
            states.push(format!("{name}_u{i}"));
        }
    }
    let verdict = |k: StateId| {
        if dfa.is_accepting(k) {
            Action::Accept
        } else {
            Action::Reject
        }
    };
    // Leaving a finished node: climb with the node's own child number, or
    // decide at the root.
    let finish = |k: StateId, tag: Tag| match tag {
        Tag::Root => verdict(k),
        Tag::Child(i) => Action::Go(id(k, i), Move::Parent),
    };

    let mut transitions = Vec::new();
    for (letter, arity) in alphabet.letters() {
        for k in 0..dfa.num_states() {
            for t in 0..modes {
                let tag = Tag::from_index(t);
                let down = if arity > 0 {
                    Action::Go(id(k, 0), Move::Child(1))
                } else {
                    finish(dfa.next(k, letter).unwrap_or(k), tag)
                };
                transitions.push((letter.clone(), tag, id(k, 0), down));
                for i in 1..=maxarity {
                    let up = if i < arity {
                        Action::Go(id(k, 0), Move::Child(i + 1))
                    } else if i == arity {
                        finish(k, tag)
                    } else {
                        Action::Reject
                    };
                    transitions.push((letter.clone(), tag, id(k, i), up));
                }
            }
        }
    }
    Dtwa::new(alphabet.clone(), states, id(dfa.initial(), 0), transitions)
}
