use std::fmt;

use super::dtwa::{Action, Dtwa, Move, Tag};
use crate::bottomup::{explore, Dbta, StateId};
use crate::trees::{Symbol, Tree};
use crate::{Error, Result};

/// What happens to a head that enters a subtree's root in some state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LocalOutcome {
    Accept,
    Reject,
    Loop,
    /// The head leaves the subtree upwards in the given state.
    ExitUp(StateId),
}

impl fmt::Display for LocalOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalOutcome::Accept => f.write_str("accept"),
            LocalOutcome::Reject => f.write_str("reject"),
            LocalOutcome::Loop => f.write_str("loop"),
            LocalOutcome::ExitUp(q) => write!(f, "up {q}"),
        }
    }
}

/// Summary of a subtree: the local outcome for every position tag and
/// entry state.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Behavior {
    num_states: usize,
    /// Indexed by `tag * num_states + state`.
    outcomes: Vec<LocalOutcome>,
}

impl Behavior {
    pub fn get(&self, tag: Tag, q: StateId) -> LocalOutcome {
        self.outcomes[tag.index() * self.num_states + q]
    }
}

/// Behavior of a node labelled `letter` whose children have the given
/// behaviors.
pub fn behavior_compose(w: &Dtwa, letter: &Symbol, children: &[&Behavior]) -> Result<Behavior> {
    let arity = w
        .alphabet
        .arity(letter)
        .ok_or_else(|| Error::alphabet(format!("`{letter}` is not in {}", w.alphabet)))?;
    if children.len() != arity {
        return Err(Error::ArgumentCount {
            expected: arity,
            got: children.len(),
        });
    }
    Ok(compose_unchecked(w, letter, children))
}

fn compose_unchecked(w: &Dtwa, letter: &Symbol, children: &[&Behavior]) -> Behavior {
    let n = w.num_states();
    let mut outcomes = Vec::with_capacity(n * w.num_tags());
    let mut seen = vec![false; n];
    for t in 0..w.num_tags() {
        let tag = Tag::from_index(t);
        for start in 0..n {
            seen.fill(false);
            let mut q = start;
            let outcome = loop {
                if std::mem::replace(&mut seen[q], true) {
                    break LocalOutcome::Loop;
                }
                match w.action(letter, q, tag) {
                    Action::Accept => break LocalOutcome::Accept,
                    Action::Reject => break LocalOutcome::Reject,
                    Action::Go(next, Move::Parent) => break LocalOutcome::ExitUp(next),
                    Action::Go(next, Move::Stay) => q = next,
                    Action::Go(next, Move::Child(i)) => {
                        match children[i - 1].get(Tag::Child(i), next) {
                            LocalOutcome::ExitUp(back) => q = back,
                            other => break other,
                        }
                    }
                }
            };
            outcomes.push(outcome);
        }
    }
    Behavior {
        num_states: n,
        outcomes,
    }
}

/// Behavior of a leaf letter.
pub fn behavior_of_leaf(w: &Dtwa, letter: &Symbol) -> Result<Behavior> {
    behavior_compose(w, letter, &[])
}

/// Behavior of a whole subtree, computed bottom-up.
pub fn behavior_of_tree(w: &Dtwa, tree: &Tree) -> Result<Behavior> {
    w.alphabet.check_tree(tree)?;
    fn go(w: &Dtwa, t: &Tree) -> Behavior {
        let kids: Vec<Behavior> = t.children().iter().map(|c| go(w, c)).collect();
        let refs: Vec<&Behavior> = kids.iter().collect();
        compose_unchecked(w, t.label(), &refs)
    }
    Ok(go(w, tree))
}

/// Bottom-up automaton for the language of `w`. States are the reachable
/// behaviors, named `b0, b1, ...` in discovery order.
pub fn to_dbta(w: &Dtwa) -> Dbta {
    let q0 = w.initial();
    let (dbta, _) = explore(
        &w.alphabet,
        |letter, args: &[&Behavior]| compose_unchecked(w, letter, args),
        |i, _| format!("b{i}"),
        |b| b.get(Tag::Root, q0) == LocalOutcome::Accept,
    );
    dbta
}
