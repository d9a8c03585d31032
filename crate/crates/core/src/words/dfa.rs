use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::bottomup::{BoolOp, StateId};
use crate::text::{lines, names, StateTable};
use crate::trees::Symbol;
use crate::{Error, Result};

pub type Word = Vec<Symbol>;

/// Complete deterministic finite automaton over a set of letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<Symbol>,
    states: Vec<String>,
    initial: StateId,
    accepting: Vec<bool>,
    /// `delta[q][i]` is the successor of `q` on `alphabet[i]`.
    delta: Vec<Vec<StateId>>,
}

impl Dfa {
    /// `delta` maps `(state, letter)` to the successor and must be total.
    pub fn new(
        alphabet: impl IntoIterator<Item = Symbol>,
        states: Vec<String>,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (StateId, Symbol, StateId)>,
    ) -> Result<Self> {
        let alphabet: Vec<Symbol> = alphabet.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if let Some(bad) = alphabet.iter().find(|s| s.is_port()) {
            return Err(Error::alphabet(format!("`{bad}` is reserved")));
        }
        let n = states.len();
        if n == 0 {
            return Err(Error::invalid("DFA has no states"));
        }
        if states.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(Error::invalid("duplicate state name"));
        }
        let in_range = |q: StateId| {
            if q < n {
                Ok(q)
            } else {
                Err(Error::invalid(format!("state index {q} out of range")))
            }
        };
        in_range(initial)?;
        let mut acc = vec![false; n];
        for q in accepting {
            acc[in_range(q)?] = true;
        }
        let mut delta = vec![vec![usize::MAX; alphabet.len()]; n];
        for (from, letter, to) in transitions {
            let i = alphabet.binary_search(&letter).map_err(|_| {
                Error::alphabet(format!("transition on `{letter}` outside the alphabet"))
            })?;
            let slot = &mut delta[in_range(from)?][i];
            let to = in_range(to)?;
            if *slot != usize::MAX && *slot != to {
                return Err(Error::invalid(format!(
                    "two transitions from `{}` on `{letter}`",
                    states[from]
                )));
            }
            *slot = to;
        }
        for (q, row) in delta.iter().enumerate() {
            if let Some(i) = row.iter().position(|&t| t == usize::MAX) {
                return Err(Error::invalid(format!(
                    "missing transition from `{}` on `{}`",
                    states[q], alphabet[i]
                )));
            }
        }
        Ok(Dfa {
            alphabet,
            states,
            initial,
            accepting: acc,
            delta,
        })
    }

    /// Sorted letters.
    pub fn alphabet(&self) -> &[Symbol] {
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

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    fn letter_index(&self, letter: &Symbol) -> Option<usize> {
        self.alphabet.binary_search(letter).ok()
    }

    /// Successor of `q` on `letter`, `None` for letters outside the alphabet.
    pub fn next(&self, q: StateId, letter: &Symbol) -> Option<StateId> {
        self.letter_index(letter).map(|i| self.delta[q][i])
    }

    pub fn run_from(&self, q: StateId, word: &[Symbol]) -> Result<StateId> {
        word.iter().try_fold(q, |q, x| {
            self.next(q, x)
                .ok_or_else(|| Error::alphabet(format!("letter `{x}` not in the DFA alphabet")))
        })
    }

    /// Membership of `word`.
    pub fn accepts(&self, word: &[Symbol]) -> Result<bool> {
        Ok(self.accepting[self.run_from(self.initial, word)?])
    }

    pub fn product(&self, other: &Dfa, op: BoolOp) -> Result<Dfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::alphabet("DFA product over different alphabets"));
        }
        let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0);
        let mut delta: Vec<Vec<StateId>> = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (x, y) = pairs[i];
            let row = (0..self.alphabet.len())
                .map(|l| {
                    let p = (self.delta[x][l], other.delta[y][l]);
                    *index.entry(p).or_insert_with(|| {
                        pairs.push(p);
                        pairs.len() - 1
                    })
                })
                .collect();
            delta.push(row);
            i += 1;
        }
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            states: (0..pairs.len()).map(|i| format!("p{i}")).collect(),
            initial: 0,
            accepting: pairs
                .iter()
                .map(|&(x, y)| op.apply(self.accepting[x], other.accepting[y]))
                .collect(),
            delta,
        })
    }

    pub fn complement(&self) -> Dfa {
        let mut out = self.clone();
        out.accepting.iter_mut().for_each(|f| *f = !*f);
        out
    }

    /// Shortest accepted word, lexicographically least among the shortest.
    pub fn witness(&self) -> Option<Word> {
        let mut parent: Vec<Option<(StateId, usize)>> = vec![None; self.states.len()];
        let mut seen = vec![false; self.states.len()];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            if self.accepting[q] {
                let mut word = Vec::new();
                let mut cur = q;
                while let Some((p, l)) = parent[cur] {
                    word.push(self.alphabet[l].clone());
                    cur = p;
                }
                word.reverse();
                return Some(word);
            }
            for (l, &t) in self.delta[q].iter().enumerate() {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((q, l));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    pub fn is_empty(&self) -> bool {
        self.witness().is_none()
    }

    /// The same automaton read over a larger alphabet; new letters lead
    /// to a fresh rejecting sink.
    pub fn extend_alphabet(&self, letters: impl IntoIterator<Item = Symbol>) -> Dfa {
        let all: BTreeSet<Symbol> = self.alphabet.iter().cloned().chain(letters).collect();
        if all.len() == self.alphabet.len() {
            return self.clone();
        }
        let mut states = self.states.clone();
        let mut sink_name = "sink".to_string();
        while states.contains(&sink_name) {
            sink_name.push('_');
        }
        states.push(sink_name);
        let sink = states.len() - 1;
        let mut transitions = Vec::new();
        for q in 0..states.len() {
            for x in &all {
                let to = if q == sink { sink } else { self.next(q, x).unwrap_or(sink) };
                transitions.push((q, x.clone(), to));
            }
        }
        let accepting: Vec<StateId> = (0..self.states.len()).filter(|&q| self.accepting[q]).collect();
        Dfa::new(all, states, self.initial, accepting, transitions).expect("total by construction")
    }
}

/// Seeded random DFA with `num_states` states and a random accepting set.
pub fn random_dfa<R: Rng>(rng: &mut R, num_states: usize, alphabet: &[Symbol]) -> Dfa {
    let states: Vec<String> = (0..num_states).map(|i| format!("k{i}")).collect();
    let mut transitions = Vec::new();
    for q in 0..num_states {
        for x in alphabet {
            transitions.push((q, x.clone(), rng.random_range(0..num_states)));
        }
    }
    let accepting: Vec<StateId> = (0..num_states).filter(|_| rng.random_bool(0.5)).collect();
    Dfa::new(alphabet.iter().cloned(), states, 0, accepting, transitions)
        .expect("random DFA is total")
}

/// Text format:
///
/// ```text
/// alphabet: p q
/// states: k0 k1
/// initial: k0
/// accepting: k1
/// k0 p -> k1
/// ```
impl fmt::Display for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<&str> = self.alphabet.iter().map(Symbol::as_str).collect();
        writeln!(f, "alphabet: {}", letters.join(" "))?;
        writeln!(f, "states: {}", self.states.join(" "))?;
        writeln!(f, "initial: {}", self.states[self.initial])?;
        let acc: Vec<&str> = (0..self.states.len())
            .filter(|&q| self.accepting[q])
            .map(|q| self.states[q].as_str())
            .collect();
        writeln!(f, "accepting: {}", acc.join(" "))?;
        for (q, row) in self.delta.iter().enumerate() {
            for (l, &t) in row.iter().enumerate() {
                writeln!(f, "{} {} -> {}", self.states[q], self.alphabet[l], self.states[t])?;
            }
        }
        Ok(())
    }
}

impl FromStr for Dfa {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let mut alphabet = Vec::new();
        let mut states = StateTable::default();
        let mut initial = None;
        let mut accepting = Vec::new();
        let mut transitions = Vec::new();
        let mut pending = Vec::new();
        for line in lines(input) {
            match line.header() {
                Some(("alphabet", rest)) => {
                    alphabet.extend(names(&line, rest)?.into_iter().map(Symbol::new))
                }
                Some(("states", rest)) => {
                    for n in names(&line, rest)? {
                        states.declare(&line, n)?;
                    }
                }
                Some(("initial", rest)) => initial = Some((line, rest.to_string())),
                Some(("accepting", rest)) => {
                    accepting.extend(names(&line, rest)?.into_iter().map(|n| (line, n.to_string())))
                }
                Some((key, _)) => return Err(line.error(format!("unknown header `{key}`"))),
                None => pending.push(line),
            }
        }
        for line in pending {
            let (lhs, rhs) = line
                .text
                .split_once("->")
                .ok_or_else(|| line.error("expected `state letter -> state`"))?;
            let parts = names(&line, lhs)?;
            let [from, letter] = parts[..] else {
                return Err(line.error("expected `state letter -> state`"));
            };
            transitions.push((
                states.lookup(&line, from)?,
                Symbol::new(letter),
                states.lookup(&line, rhs)?,
            ));
        }
        let (l, init) = initial.ok_or_else(|| Error::parse(1, 1, "missing `initial:` header"))?;
        let initial = states.lookup(&l, &init)?;
        let accepting = accepting
            .iter()
            .map(|(l, n)| states.lookup(l, n))
            .collect::<Result<Vec<_>>>()?;
        Dfa::new(alphabet, states.names, initial, accepting, transitions)
    }
}
