use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use super::dbta::{Dbta, StateId};
use super::explore::explore;
use crate::trees::{RankedAlphabet, Symbol, Tree};
use crate::{Error, Result};

pub(crate) type Relation = BTreeMap<Vec<StateId>, BTreeSet<StateId>>;

/// Nondeterministic bottom-up tree automaton: each letter has a transition
/// relation from child-state tuples to sets of states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nta {
    pub(crate) alphabet: RankedAlphabet,
    pub(crate) states: Vec<String>,
    pub(crate) accepting: Vec<bool>,
    pub(crate) delta: BTreeMap<Symbol, Relation>,
}

impl Nta {
    pub fn new(
        alphabet: RankedAlphabet,
        states: Vec<String>,
        accepting: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (Symbol, Vec<StateId>, StateId)>,
    ) -> Result<Self> {
        let n = states.len();
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
        let mut delta: BTreeMap<Symbol, Relation> = alphabet
            .letters()
            .map(|(s, _)| (s.clone(), Relation::new()))
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
            delta
                .get_mut(&letter)
                .unwrap()
                .entry(args)
                .or_default()
                .insert(target);
        }
        Ok(Nta {
            alphabet,
            states,
            accepting: acc,
            delta,
        })
    }

    pub fn alphabet(&self) -> &RankedAlphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
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

    /// Relation entries of one letter.
    pub fn transitions(
        &self,
        letter: &Symbol,
    ) -> impl Iterator<Item = (&[StateId], &BTreeSet<StateId>)> + '_ {
        self.delta
            .get(letter)
            .into_iter()
            .flat_map(|r| r.iter().map(|(k, v)| (k.as_slice(), v)))
    }

    /// States reachable at a node labeled `letter` whose children may be in
    /// any of the given state sets.
    pub fn step_sets(&self, letter: &Symbol, args: &[&BTreeSet<StateId>]) -> BTreeSet<StateId> {
        let mut out = BTreeSet::new();
        if let Some(rel) = self.delta.get(letter) {
            for (tuple, targets) in rel {
                if tuple.iter().zip(args).all(|(q, set)| set.contains(q)) {
                    out.extend(targets);
                }
            }
        }
        out
    }

    /// Set of states reachable at the root of `tree`.
    pub fn eval_set(&self, tree: &Tree) -> Result<BTreeSet<StateId>> {
        self.alphabet.check_tree(tree)?;
        Ok(self.eval_set_unchecked(tree))
    }

    fn eval_set_unchecked(&self, tree: &Tree) -> BTreeSet<StateId> {
        let kids: Vec<BTreeSet<StateId>> = tree
            .children()
            .iter()
            .map(|c| self.eval_set_unchecked(c))
            .collect();
        let refs: Vec<&BTreeSet<StateId>> = kids.iter().collect();
        self.step_sets(tree.label(), &refs)
    }

    pub fn accepts(&self, tree: &Tree) -> Result<bool> {
        Ok(self.eval_set(tree)?.iter().any(|&q| self.accepting[q]))
    }
}

/// Subset construction over reachable subsets. The empty subset, when
/// reachable, is an ordinary rejecting state that absorbs everything.
pub fn determinize(nta: &Nta) -> Dbta {
    explore(
        &nta.alphabet,
        |letter, args| nta.step_sets(letter, args),
        |q, _| format!("d{q}"),
        |set| set.iter().any(|&q| nta.accepting[q]),
    )
    .0
}

#[derive(Default)]
struct SubsetCache {
    subsets: Vec<BTreeSet<StateId>>,
    index: HashMap<BTreeSet<StateId>, usize>,
    steps: HashMap<(Symbol, Vec<usize>), usize>,
}

impl SubsetCache {
    fn intern(&mut self, set: BTreeSet<StateId>) -> usize {
        if let Some(&i) = self.index.get(&set) {
            return i;
        }
        let i = self.subsets.len();
        self.index.insert(set.clone(), i);
        self.subsets.push(set);
        i
    }
}

/// On-the-fly determinization: subsets are computed only for the trees
/// actually evaluated, and every subset transition is memoized.
pub struct SubsetEvaluator<'a> {
    nta: &'a Nta,
    cache: Mutex<SubsetCache>,
}

impl<'a> SubsetEvaluator<'a> {
    pub fn new(nta: &'a Nta) -> Self {
        SubsetEvaluator {
            nta,
            cache: Mutex::new(SubsetCache::default()),
        }
    }

    pub fn nta(&self) -> &Nta {
        self.nta
    }

    pub fn eval(&self, tree: &Tree) -> Result<BTreeSet<StateId>> {
        self.nta.alphabet.check_tree(tree)?;
        let mut cache = self.cache.lock().unwrap_or_else(|e| e.into_inner());
        let id = self.eval_in(&mut cache, tree);
        Ok(cache.subsets[id].clone())
    }

    fn eval_in(&self, cache: &mut SubsetCache, tree: &Tree) -> usize {
        let kids: Vec<usize> = tree
            .children()
            .iter()
            .map(|c| self.eval_in(cache, c))
            .collect();
        let key = (tree.label().clone(), kids);
        if let Some(&id) = cache.steps.get(&key) {
            return id;
        }
        let refs: Vec<&BTreeSet<StateId>> = key.1.iter().map(|&i| &cache.subsets[i]).collect();
        let set = self.nta.step_sets(tree.label(), &refs);
        let id = cache.intern(set);
        cache.steps.insert(key, id);
        id
    }

    pub fn accepts(&self, tree: &Tree) -> Result<bool> {
        Ok(self.eval(tree)?.iter().any(|&q| self.nta.accepting[q]))
    }

    /// Number of distinct subsets met so far.
    pub fn subsets_seen(&self) -> usize {
        self.cache.lock().unwrap_or_else(|e| e.into_inner()).subsets.len()
    }
}

/// Incremental construction of an [`Nta`] by state name.
#[derive(Debug, Clone)]
pub struct NtaBuilder {
    alphabet: RankedAlphabet,
    states: Vec<String>,
    accepting: Vec<StateId>,
    transitions: Vec<(Symbol, Vec<StateId>, StateId)>,
}

impl NtaBuilder {
    pub fn new(alphabet: RankedAlphabet) -> Self {
        NtaBuilder {
            alphabet,
            states: Vec::new(),
            accepting: Vec::new(),
            transitions: Vec::new(),
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

    pub fn accept(&mut self, name: &str) -> &mut Self {
        let q = self.state(name);
        self.accepting.push(q);
        self
    }

    pub fn transition(&mut self, letter: &str, args: &[&str], target: &str) -> &mut Self {
        let args = args.iter().map(|a| self.state(a)).collect();
        let target = self.state(target);
        self.transitions.push((Symbol::new(letter), args, target));
        self
    }

    pub fn build(&self) -> Result<Nta> {
        Nta::new(
            self.alphabet.clone(),
            self.states.clone(),
            self.accepting.iter().copied(),
            self.transitions.iter().cloned(),
        )
    }
}
