use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::text::is_name;
use crate::{Error, Result};

/// Interned letter name. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    /// The reserved port symbol `*`.
    pub fn port() -> Self {
        static PORT: OnceLock<Symbol> = OnceLock::new();
        PORT.get_or_init(|| Symbol::new("*")).clone()
    }

    pub fn is_port(&self) -> bool {
        &*self.0 == "*"
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

impl From<&Symbol> for Symbol {
    fn from(s: &Symbol) -> Self {
        s.clone()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Finite set of letters, each with an arity.
///
/// At least one letter has arity zero, so the set of trees is nonempty.
/// The port symbol `*` is reserved and never part of an alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RankedAlphabet {
    letters: BTreeMap<Symbol, usize>,
    maxarity: usize,
}

impl RankedAlphabet {
    pub fn new<I, S>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<Symbol>,
    {
        let mut map = BTreeMap::new();
        for (name, arity) in letters {
            let name = name.into();
            if name.is_port() {
                return Err(Error::alphabet("`*` is reserved for ports"));
            }
            if !is_name(name.as_str()) {
                return Err(Error::alphabet(format!("invalid letter name `{name}`")));
            }
            if map.insert(name.clone(), arity).is_some() {
                return Err(Error::alphabet(format!("letter `{name}` declared twice")));
            }
        }
        if !map.values().any(|&a| a == 0) {
            return Err(Error::alphabet("alphabet has no letter of arity 0"));
        }
        let maxarity = map.values().copied().max().unwrap_or(0);
        Ok(RankedAlphabet {
            letters: map,
            maxarity,
        })
    }

    pub fn arity(&self, letter: &Symbol) -> Option<usize> {
        self.letters.get(letter).copied()
    }

    pub fn contains(&self, letter: &Symbol) -> bool {
        self.letters.contains_key(letter)
    }

    pub fn maxarity(&self) -> usize {
        self.maxarity
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters with their arities, sorted by name.
    pub fn letters(&self) -> impl Iterator<Item = (&Symbol, usize)> + '_ {
        self.letters.iter().map(|(s, &a)| (s, a))
    }

    /// Arity-0 letters, sorted by name.
    pub fn leaf_letters(&self) -> impl Iterator<Item = &Symbol> + '_ {
        self.letters
            .iter()
            .filter(|(_, &a)| a == 0)
            .map(|(s, _)| s)
    }

    /// Union of two alphabets; a letter declared in both must agree on arity.
    pub fn union(&self, other: &RankedAlphabet) -> Result<RankedAlphabet> {
        let mut letters = self.letters.clone();
        for (s, &a) in &other.letters {
            match letters.get(s) {
                Some(&b) if b != a => {
                    return Err(Error::alphabet(format!(
                        "letter `{s}` has arities {b} and {a}"
                    )))
                }
                _ => {
                    letters.insert(s.clone(), a);
                }
            }
        }
        RankedAlphabet::new(letters)
    }

    pub fn is_subset_of(&self, other: &RankedAlphabet) -> bool {
        self.letters
            .iter()
            .all(|(s, a)| other.letters.get(s) == Some(a))
    }

    /// Checks that every node of `tree` carries a letter of this alphabet
    /// with the right number of children. Ports are accepted only when
    /// `allow_ports` is set.
    pub(crate) fn check(&self, tree: &super::Tree, allow_ports: bool) -> Result<()> {
        let mut stack = vec![tree];
        while let Some(node) = stack.pop() {
            let label = node.label();
            if label.is_port() {
                if !allow_ports {
                    return Err(Error::alphabet("port `*` in a tree"));
                }
                if !node.is_leaf() {
                    return Err(Error::Shape("port `*` with children".into()));
                }
                continue;
            }
            match self.arity(label) {
                None => {
                    return Err(Error::alphabet(format!(
                        "letter `{label}` is not in the alphabet {self}"
                    )))
                }
                Some(a) if a != node.children().len() => {
                    return Err(Error::ArgumentCount {
                        expected: a,
                        got: node.children().len(),
                    })
                }
                Some(_) => stack.extend(node.children()),
            }
        }
        Ok(())
    }

    pub fn check_tree(&self, tree: &super::Tree) -> Result<()> {
        self.check(tree, false)
    }

    pub fn check_term(&self, term: &super::Term) -> Result<()> {
        self.check(term.tree(), true)
    }
}

impl fmt::Display for RankedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, a) in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{s}/{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RankedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Parses `a/2 p/0 c/0` (whitespace or comma separated).
impl FromStr for RankedAlphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (i, item) in s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .enumerate()
        {
            let (name, arity) = item
                .split_once('/')
                .ok_or_else(|| Error::parse(1, i + 1, format!("expected `letter/arity`, got `{item}`")))?;
            let arity = arity
                .parse::<usize>()
                .map_err(|_| Error::parse(1, i + 1, format!("bad arity in `{item}`")))?;
            letters.push((Symbol::new(name), arity));
        }
        RankedAlphabet::new(letters)
    }
}
