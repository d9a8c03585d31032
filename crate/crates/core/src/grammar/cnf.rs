use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::text::{is_name, lines};
use crate::trees::{RankedAlphabet, Symbol};
use crate::{Error, Result};

/// A grammar with rules `X -> Y Z` and `X -> σ`, normalized so that every
/// nonterminal is productive and reachable from the start symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfGrammar {
    pub(crate) nonterminals: Vec<Symbol>,
    pub(crate) terminals: BTreeSet<Symbol>,
    /// `(X, Y, Z)` by nonterminal index.
    pub(crate) binary: Vec<(usize, usize, usize)>,
    pub(crate) leaf: Vec<(usize, Symbol)>,
    pub(crate) start: usize,
    removed: Vec<Symbol>,
}

impl CnfGrammar {
    /// Builds and normalizes a grammar from named rules. A right-hand side
    /// of one symbol is a terminal rule, of two symbols a binary rule.
    pub fn new(start: &str, rules: &[(&str, &[&str])]) -> Result<Self> {
        let lhs: BTreeSet<&str> = rules.iter().map(|(x, _)| *x).collect();
        let mut raw = Vec::new();
        for (x, rhs) in rules {
            raw.push(classify(&lhs, x, rhs).map_err(Error::NonCnf)?);
        }
        normalize(start, raw)
    }

    pub fn start(&self) -> &Symbol {
        &self.nonterminals[self.start]
    }

    pub fn nonterminals(&self) -> &[Symbol] {
        &self.nonterminals
    }

    pub fn terminals(&self) -> &BTreeSet<Symbol> {
        &self.terminals
    }

    /// Symbols dropped by normalization because they were unproductive or
    /// unreachable.
    pub fn removed(&self) -> &[Symbol] {
        &self.removed
    }

    pub fn binary_rules(&self) -> impl Iterator<Item = (&Symbol, &Symbol, &Symbol)> + '_ {
        self.binary
            .iter()
            .map(|&(x, y, z)| (&self.nonterminals[x], &self.nonterminals[y], &self.nonterminals[z]))
    }

    pub fn leaf_rules(&self) -> impl Iterator<Item = (&Symbol, &Symbol)> + '_ {
        self.leaf.iter().map(|(x, s)| (&self.nonterminals[*x], s))
    }

    /// Terminals with arity 0 and nonterminals with arity 2.
    pub fn derivation_alphabet(&self) -> RankedAlphabet {
        let letters = self
            .terminals
            .iter()
            .map(|t| (t.as_str(), 0))
            .chain(self.nonterminals.iter().map(|n| (n.as_str(), 2)));
        RankedAlphabet::new(letters).expect("terminals and nonterminals are disjoint")
    }

    pub(crate) fn index_of(&self, x: &Symbol) -> Option<usize> {
        self.nonterminals.iter().position(|n| n == x)
    }
}

enum RawRule {
    Binary(String, String, String),
    Leaf(String, String),
}

fn classify(lhs: &BTreeSet<&str>, x: &str, rhs: &[&str]) -> std::result::Result<RawRule, String> {
    let rule = format!("{x} -> {}", rhs.join(" "));
    if !is_name(x) || rhs.iter().any(|s| !is_name(s)) {
        return Err(format!("invalid symbol in `{rule}`"));
    }
    match rhs {
        [s] if lhs.contains(s) => Err(format!("unit rule `{rule}`")),
        [s] => Ok(RawRule::Leaf(x.to_string(), s.to_string())),
        [y, z] if lhs.contains(y) && lhs.contains(z) => {
            Ok(RawRule::Binary(x.to_string(), y.to_string(), z.to_string()))
        }
        [_, _] => Err(format!("terminal in binary rule `{rule}`")),
        _ => Err(format!("rule `{rule}` is not in Chomsky normal form")),
    }
}

fn normalize(start: &str, raw: Vec<RawRule>) -> Result<CnfGrammar> {
    let mut names: Vec<String> = Vec::new();
    for r in &raw {
        let x = match r {
            RawRule::Binary(x, _, _) | RawRule::Leaf(x, _) => x,
        };
        if !names.contains(x) {
            names.push(x.clone());
        }
    }
    if !names.iter().any(|n| n == start) {
        return Err(Error::invalid(format!("start symbol `{start}` has no rules")));
    }

    let mut productive: BTreeSet<&str> = raw
        .iter()
        .filter_map(|r| match r {
            RawRule::Leaf(x, _) => Some(x.as_str()),
            _ => None,
        })
        .collect();
    loop {
        let before = productive.len();
        for r in &raw {
            if let RawRule::Binary(x, y, z) = r {
                if productive.contains(y.as_str()) && productive.contains(z.as_str()) {
                    productive.insert(x);
                }
            }
        }
        if productive.len() == before {
            break;
        }
    }
    if !productive.contains(start) {
        return Err(Error::invalid("the grammar generates no words"));
    }
    let useful = |r: &&RawRule| match r {
        RawRule::Binary(x, y, z) => [x, y, z].iter().all(|s| productive.contains(s.as_str())),
        RawRule::Leaf(x, _) => productive.contains(x.as_str()),
    };
    let kept: Vec<&RawRule> = raw.iter().filter(useful).collect();

    let mut reachable = vec![start.to_string()];
    let mut i = 0;
    while i < reachable.len() {
        for r in &kept {
            if let RawRule::Binary(x, y, z) = r {
                if *x == reachable[i] {
                    for s in [y, z] {
                        if !reachable.contains(s) {
                            reachable.push(s.clone());
                        }
                    }
                }
            }
        }
        i += 1;
    }

    let nonterminals: Vec<Symbol> = names
        .iter()
        .filter(|n| reachable.contains(n))
        .map(|n| Symbol::new(n))
        .collect();
    let removed = names
        .iter()
        .filter(|n| !reachable.contains(n))
        .map(|n| Symbol::new(n))
        .collect();
    let index: BTreeMap<&str, usize> = nonterminals
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let mut binary = Vec::new();
    let mut leaf = Vec::new();
    for r in kept {
        match r {
            RawRule::Binary(x, y, z) => {
                if let Some(&xi) = index.get(x.as_str()) {
                    let rule = (xi, index[y.as_str()], index[z.as_str()]);
                    if !binary.contains(&rule) {
                        binary.push(rule);
                    }
                }
            }
            RawRule::Leaf(x, s) => {
                if let Some(&xi) = index.get(x.as_str()) {
                    let rule = (xi, Symbol::new(s));
                    if !leaf.contains(&rule) {
                        leaf.push(rule);
                    }
                }
            }
        }
    }
    binary.sort();
    leaf.sort();
    let terminals = leaf.iter().map(|(_, s)| s.clone()).collect();
    Ok(CnfGrammar {
        start: index[start],
        nonterminals,
        terminals,
        binary,
        leaf,
        removed,
    })
}

/// Format: rules `X -> Y Z | σ` separated by newlines or `;`, with an
/// optional `start:` header; otherwise the first left-hand side is the
/// start symbol. A symbol is a nonterminal iff it has rules.
impl FromStr for CnfGrammar {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let mut start = None;
        let mut rules: Vec<(usize, String, Vec<String>)> = Vec::new();
        for line in lines(input) {
            if let Some((key, rest)) = line.header() {
                if key != "start" {
                    return Err(line.error(format!("unknown header `{key}`")));
                }
                if !is_name(rest) {
                    return Err(line.error(format!("invalid start symbol `{rest}`")));
                }
                start = Some(rest.to_string());
                continue;
            }
            let (lhs, rhs) = line
                .text
                .split_once("->")
                .ok_or_else(|| line.error("expected `X -> Y Z` or `X -> σ`"))?;
            let lhs = lhs.trim();
            if !is_name(lhs) {
                return Err(line.error(format!("invalid nonterminal `{lhs}`")));
            }
            for alt in rhs.split('|') {
                let syms: Vec<String> = alt.split_whitespace().map(str::to_string).collect();
                if syms.is_empty() {
                    return Err(line.error(format!("empty alternative for `{lhs}`")));
                }
                rules.push((line.number, lhs.to_string(), syms));
            }
        }
        let first = rules
            .first()
            .map(|(_, x, _)| x.clone())
            .ok_or_else(|| Error::parse(1, 1, "grammar has no rules"))?;
        let start = start.unwrap_or(first);
        let lhs: BTreeSet<&str> = rules.iter().map(|(_, x, _)| x.as_str()).collect();
        let mut raw = Vec::new();
        for (number, x, rhs) in &rules {
            let rhs: Vec<&str> = rhs.iter().map(String::as_str).collect();
            raw.push(classify(&lhs, x, &rhs).map_err(|m| Error::NonCnf(format!("line {number}: {m}")))?);
        }
        normalize(&start, raw)
    }
}

impl fmt::Display for CnfGrammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start: {}", self.start())?;
        for (x, name) in self.nonterminals.iter().enumerate() {
            let mut alts: Vec<String> = self
                .binary
                .iter()
                .filter(|r| r.0 == x)
                .map(|&(_, y, z)| format!("{} {}", self.nonterminals[y], self.nonterminals[z]))
                .collect();
            alts.extend(self.leaf.iter().filter(|r| r.0 == x).map(|(_, s)| s.to_string()));
            writeln!(f, "{name} -> {}", alts.join(" | "))?;
        }
        Ok(())
    }
}
