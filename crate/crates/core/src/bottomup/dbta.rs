use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::trees::{RankedAlphabet, Symbol, Term, Tree};
use crate::{Error, Result};

pub type StateId = usize;

pub(crate) type Table = BTreeMap<Vec<StateId>, StateId>;

/// Deterministic bottom-up tree automaton.
///
/// When `sink` is set, missing table entries and any tuple containing the
/// sink evaluate to the sink, which is never accepting. Without a sink
/// every table is total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dbta {
    pub(crate) alphabet: RankedAlphabet,
    pub(crate) states: Vec<String>,
    pub(crate) accepting: Vec<bool>,
    pub(crate) delta: BTreeMap<Symbol, Table>,
    pub(crate) sink: Option<StateId>,
}

impl Dbta {
    /// Builds and validates an automaton.
    pub fn new(
        alphabet: RankedAlphabet,
        states: Vec<String>,
        accepting: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (Symbol, Vec<StateId>, StateId)>,
        sink: Option<StateId>,
    ) -> Result<Self> {
        let n = states.len();
        if n == 0 {
            return Err(Error::invalid("automaton has no states"));
        }
        let unique: BTreeSet<&String> = states.iter().collect();
        if unique.len() != n {
            return Err(Error::invalid("duplicate state name"));
        }
        let check_id = |q: StateId| {
            if q < n {
                Ok(q)
            } else {
                Err(Error::invalid(format!("state index {q} out of range")))
            }
        };
        let mut acc = vec![false; n];
        for q in accepting {
            acc[check_id(q)?] = true;
        }
        if let Some(s) = sink {
            check_id(s)?;
            if acc[s] {
                return Err(Error::invalid("the sink state cannot be accepting"));
            }
        }
        let mut delta: BTreeMap<Symbol, Table> = alphabet
            .letters()
            .map(|(s, _)| (s.clone(), Table::new()))
            .collect();
        for (letter, args, target) in transitions {
            let arity = alphabet.arity(&letter).ok_or_else(|| {
                Error::alphabet(format!("transition on `{letter}` outside the alphabet"))
            })?;
            if args.len() != arity {
                return Err(Error::ArgumentCount {
                    expected: arity,
                    got: args.len(),
                });
            }
            for &q in &args {
                check_id(q)?;
            }
            check_id(target)?;
            if let Some(s) = sink {
                if args.contains(&s) && target != s {
                    return Err(Error::invalid(format!(
                        "transition on `{letter}` leaves the sink"
                    )));
                }
            }
            let table = delta.get_mut(&letter).expect("letter in alphabet");
            if let Some(old) = table.insert(args.clone(), target) {
                if old != target {
                    return Err(Error::invalid(format!(
                        "conflicting transitions for `{letter}` on {args:?}"
                    )));
                }
            }
        }
        let dbta = Dbta {
            alphabet,
            states,
            accepting: acc,
            delta,
            sink,
        };
        if sink.is_none() {
            dbta.check_total()?;
        }
        Ok(dbta)
    }

    fn check_total(&self) -> Result<()> {
        let n = self.states.len();
        for (letter, arity) in self.alphabet.letters() {
            let table = &self.delta[letter];
            let expected = n.checked_pow(arity as u32);
            if expected != Some(table.len()) {
                return Err(Error::invalid(format!(
                    "transition table of `{letter}` is partial and no sink is declared"
                )));
            }
        }
        Ok(())
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

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn state_by_name(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s == name)
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.states.len()).filter(|&q| self.accepting[q])
    }

    pub fn sink(&self) -> Option<StateId> {
        self.sink
    }

    /// Explicit table entries of one letter.
    pub fn transitions(&self, letter: &Symbol) -> impl Iterator<Item = (&[StateId], StateId)> + '_ {
        self.delta
            .get(letter)
            .into_iter()
            .flat_map(|t| t.iter().map(|(k, &v)| (k.as_slice(), v)))
    }

    /// One transition; `letter` must be in the alphabet and `args` must
    /// have its arity.
    pub fn step(&self, letter: &Symbol, args: &[StateId]) -> StateId {
        if let Some(s) = self.sink {
            if args.contains(&s) {
                return s;
            }
        }
        match self.delta.get(letter).and_then(|t| t.get(args)) {
            Some(&q) => q,
            None => self.sink.expect("partial table without sink"),
        }
    }

    /// State reached at the root of `tree`.
    pub fn eval(&self, tree: &Tree) -> Result<StateId> {
        self.alphabet.check_tree(tree)?;
        Ok(self.eval_unchecked(tree))
    }

    pub(crate) fn eval_unchecked(&self, tree: &Tree) -> StateId {
        let args: Vec<StateId> = tree
            .children()
            .iter()
            .map(|c| self.eval_unchecked(c))
            .collect();
        self.step(tree.label(), &args)
    }

    pub fn accepts(&self, tree: &Tree) -> Result<bool> {
        Ok(self.accepting[self.eval(tree)?])
    }

    /// Value of `term` when port `i` holds a subtree already evaluated to
    /// `port_states[i]`.
    pub fn eval_term(&self, term: &Term, port_states: &[StateId]) -> Result<StateId> {
        if port_states.len() != term.arity() {
            return Err(Error::ArgumentCount {
                expected: term.arity(),
                got: port_states.len(),
            });
        }
        if let Some(&q) = port_states.iter().find(|&&q| q >= self.states.len()) {
            return Err(Error::invalid(format!("state index {q} out of range")));
        }
        self.alphabet.check_term(term)?;
        Ok(self.eval_term_unchecked(term.tree(), &mut port_states.iter().copied()))
    }

    pub(crate) fn eval_term_unchecked(
        &self,
        tree: &Tree,
        ports: &mut impl Iterator<Item = StateId>,
    ) -> StateId {
        if tree.label().is_port() {
            return ports.next().expect("port count checked");
        }
        let args: Vec<StateId> = tree
            .children()
            .iter()
            .map(|c| self.eval_term_unchecked(c, ports))
            .collect();
        self.step(tree.label(), &args)
    }

    /// Smallest accepted tree, ties broken by preorder label order; `None`
    /// when the language is empty.
    pub fn witness(&self) -> Option<Tree> {
        let best = self.smallest_trees();
        self.accepting_states()
            .filter_map(|q| best.get(&q))
            .min()
            .map(|(_, t)| t.clone())
    }

    pub fn is_empty(&self) -> bool {
        self.witness().is_none()
    }

    /// Smallest tree reaching each reachable state (sink excluded).
    pub(crate) fn smallest_trees(&self) -> HashMap<StateId, (usize, Tree)> {
        let mut best: HashMap<StateId, (usize, Tree)> = HashMap::new();
        loop {
            let mut changed = false;
            for (letter, table) in &self.delta {
                for (args, &target) in table {
                    if Some(target) == self.sink {
                        continue;
                    }
                    let Some(size) = args
                        .iter()
                        .map(|q| best.get(q).map(|(s, _)| *s))
                        .sum::<Option<usize>>()
                    else {
                        continue;
                    };
                    let size = size + 1;
                    if best.get(&target).is_some_and(|(s, _)| *s < size) {
                        continue;
                    }
                    let cand = Tree::new(
                        letter,
                        args.iter().map(|q| best[q].1.clone()).collect(),
                    );
                    let better = match best.get(&target) {
                        None => true,
                        Some((s, t)) => (size, &cand) < (*s, t),
                    };
                    if better {
                        best.insert(target, (size, cand));
                        changed = true;
                    }
                }
            }
            if !changed {
                return best;
            }
        }
    }
}

/// Incremental construction of a [`Dbta`] by state name.
#[derive(Debug, Clone)]
pub struct DbtaBuilder {
    alphabet: RankedAlphabet,
    states: Vec<String>,
    accepting: Vec<StateId>,
    transitions: Vec<(Symbol, Vec<StateId>, StateId)>,
    sink: Option<StateId>,
}

impl DbtaBuilder {
    pub fn new(alphabet: RankedAlphabet) -> Self {
        DbtaBuilder {
            alphabet,
            states: Vec::new(),
            accepting: Vec::new(),
            transitions: Vec::new(),
            sink: None,
        }
    }

    /// Returns the id of `name`, declaring it on first use.
    pub fn state(&mut self, name: &str) -> StateId {
        match self.states.iter().position(|s| s == name) {
            Some(q) => q,
            None => {
                self.states.push(name.to_string());
                self.states.len() - 1
            }
        }
    }

    pub fn accept(&mut self, name: &str) -> &mut Self {
        let q = self.state(name);
        self.accepting.push(q);
        self
    }

    /// Declares a rejecting sink completing all missing entries.
    pub fn sink(&mut self, name: &str) -> &mut Self {
        self.sink = Some(self.state(name));
        self
    }

    pub fn transition(&mut self, letter: &str, args: &[&str], target: &str) -> &mut Self {
        let args = args.iter().map(|a| self.state(a)).collect();
        let target = self.state(target);
        self.transitions.push((Symbol::new(letter), args, target));
        self
    }

    pub fn build(&self) -> Result<Dbta> {
        Dbta::new(
            self.alphabet.clone(),
            self.states.clone(),
            self.accepting.iter().copied(),
            self.transitions.iter().cloned(),
            self.sink,
        )
    }
}
