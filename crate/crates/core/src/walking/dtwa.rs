use std::collections::BTreeMap;
use std::fmt;

use crate::bottomup::StateId;
use crate::trees::{RankedAlphabet, Symbol};
use crate::{Error, Result};

/// What the automaton sees besides its state: the child number of the
/// current node, or `Root`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Root,
    /// 1-based child number.
    Child(usize),
}

impl Tag {
    pub(crate) fn index(self) -> usize {
        match self {
            Tag::Root => 0,
            Tag::Child(i) => i,
        }
    }

    pub(crate) fn from_index(i: usize) -> Tag {
        if i == 0 {
            Tag::Root
        } else {
            Tag::Child(i)
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Root => f.write_str("root"),
            Tag::Child(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Parent,
    Stay,
    /// 1-based child number.
    Child(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Accept,
    Reject,
    Go(StateId, Move),
}

/// Deterministic tree-walking automaton. Every letter has an action for
/// every state and every tag in `root, 1..=maxarity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dtwa {
    pub(crate) alphabet: RankedAlphabet,
    pub(crate) states: Vec<String>,
    pub(crate) initial: StateId,
    /// Per letter, indexed by `state * num_tags + tag`.
    pub(crate) delta: BTreeMap<Symbol, Vec<Action>>,
}

impl Dtwa {
    pub fn new(
        alphabet: RankedAlphabet,
        states: Vec<String>,
        initial: StateId,
        transitions: impl IntoIterator<Item = (Symbol, Tag, StateId, Action)>,
    ) -> Result<Self> {
        let n = states.len();
        if n == 0 {
            return Err(Error::invalid("walking automaton has no states"));
        }
        if initial >= n {
            return Err(Error::invalid("initial state out of range"));
        }
        let num_tags = alphabet.maxarity() + 1;
        let mut table: BTreeMap<Symbol, Vec<Option<Action>>> = alphabet
            .letters()
            .map(|(s, _)| (s.clone(), vec![None; n * num_tags]))
            .collect();
        for (letter, tag, q, action) in transitions {
            let arity = alphabet.arity(&letter).ok_or_else(|| {
                Error::alphabet(format!("transition on `{letter}` outside the alphabet"))
            })?;
            if tag.index() >= num_tags || tag == Tag::Child(0) {
                return Err(Error::invalid(format!("position tag {tag} exceeds maxarity")));
            }
            if q >= n {
                return Err(Error::invalid(format!("state index {q} out of range")));
            }
            match action {
                Action::Go(t, _) if t >= n => {
                    return Err(Error::invalid(format!("state index {t} out of range")))
                }
                Action::Go(_, Move::Child(i)) if i == 0 || i > arity => {
                    return Err(Error::invalid(format!(
                        "`{letter}` has arity {arity}, cannot move to child {i}"
                    )))
                }
                _ => {}
            }
            let slot = &mut table.get_mut(&letter).unwrap()[q * num_tags + tag.index()];
            if slot.is_some_and(|old| old != action) {
                return Err(Error::invalid(format!(
                    "two actions for `{letter}[{tag}] {}`",
                    states[q]
                )));
            }
            *slot = Some(action);
        }
        let mut delta = BTreeMap::new();
        for (letter, row) in table {
            let mut actions = Vec::with_capacity(row.len());
            for (i, a) in row.into_iter().enumerate() {
                actions.push(a.ok_or_else(|| {
                    Error::invalid(format!(
                        "missing action for `{letter}[{}] {}`",
                        Tag::from_index(i % num_tags),
                        states[i / num_tags]
                    ))
                })?);
            }
            delta.insert(letter, actions);
        }
        Ok(Dtwa {
            alphabet,
            states,
            initial,
            delta,
        })
    }

    pub fn alphabet(&self) -> &RankedAlphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q]
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub(crate) fn num_tags(&self) -> usize {
        self.alphabet.maxarity() + 1
    }

    /// Action for `letter` seen in state `q` at a node with tag `tag`.
    pub fn action(&self, letter: &Symbol, q: StateId, tag: Tag) -> Action {
        self.delta[letter][q * self.num_tags() + tag.index()]
    }
}

/// Builds a [`Dtwa`] by state name; entries left open get the default
/// action.
#[derive(Debug, Clone)]
pub struct DtwaBuilder {
    alphabet: RankedAlphabet,
    states: Vec<String>,
    initial: Option<StateId>,
    entries: Vec<(Symbol, Tag, StateId, Action)>,
    default: Option<Action>,
}

impl DtwaBuilder {
    pub fn new(alphabet: RankedAlphabet) -> Self {
        DtwaBuilder {
            alphabet,
            states: Vec::new(),
            initial: None,
            entries: Vec::new(),
            default: None,
        }
    }

    pub fn state(&mut self, name: &str) -> StateId {
        match self.states.iter().position(|s| s == name) {
            Some(q) => q,
            None => {
                self.states.push(name.to_string());
                self.states.len() - 1
            }
        }
    }

    pub fn initial(&mut self, name: &str) -> &mut Self {
        self.initial = Some(self.state(name));
        self
    }

    /// Action used for every entry not set explicitly.
    pub fn default_action(&mut self, action: Action) -> &mut Self {
        self.default = Some(action);
        self
    }

    pub fn on(&mut self, letter: &str, tag: Tag, state: &str, action: Action) -> &mut Self {
        let q = self.state(state);
        self.entries.push((Symbol::new(letter), tag, q, action));
        self
    }

    /// Shorthand for `on(.., Action::Go(target, mv))`.
    pub fn go(&mut self, letter: &str, tag: Tag, state: &str, target: &str, mv: Move) -> &mut Self {
        let t = self.state(target);
        self.on(letter, tag, state, Action::Go(t, mv))
    }

    pub fn build(&self) -> Result<Dtwa> {
        let initial = self.initial.unwrap_or(0);
        let mut entries = self.entries.clone();
        if let Some(default) = self.default {
            let num_tags = self.alphabet.maxarity() + 1;
            for (letter, _) in self.alphabet.letters() {
                for q in 0..self.states.len() {
                    for t in 0..num_tags {
                        let tag = Tag::from_index(t);
                        if !self.entries.iter().any(|(l, g, s, _)| l == letter && *g == tag && *s == q) {
                            entries.push((letter.clone(), tag, q, default));
                        }
                    }
                }
            }
        }
        Dtwa::new(self.alphabet.clone(), self.states.clone(), initial, entries)
    }
}
