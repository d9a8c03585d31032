//! Text format for walking automata:
//!
//! ```text
//! alphabet: a/2 p/0
//! states: s t
//! initial: s
//! a[root] s -> t child 1
//! p[1] t -> t parent
//! p[root] s -> accept
//! ```

use std::fmt;
use std::str::FromStr;

use super::dtwa::{Action, Dtwa, Move, Tag};
use crate::text::{lines, names, Line, StateTable};
use crate::trees::{RankedAlphabet, Symbol};
use crate::{Error, Result};

impl fmt::Display for Dtwa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alphabet: {}", self.alphabet)?;
        writeln!(f, "states: {}", self.states.join(" "))?;
        writeln!(f, "initial: {}", self.states[self.initial])?;
        let num_tags = self.num_tags();
        for (letter, actions) in &self.delta {
            for (i, action) in actions.iter().enumerate() {
                let (q, tag) = (i / num_tags, Tag::from_index(i % num_tags));
                write!(f, "{letter}[{tag}] {} -> ", self.states[q])?;
                match action {
                    Action::Accept => writeln!(f, "accept")?,
                    Action::Reject => writeln!(f, "reject")?,
                    Action::Go(t, mv) => {
                        let t = &self.states[*t];
                        match mv {
                            Move::Parent => writeln!(f, "{t} parent")?,
                            Move::Stay => writeln!(f, "{t} stay")?,
                            Move::Child(i) => writeln!(f, "{t} child {i}")?,
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn parse_tag(line: &Line<'_>, s: &str) -> Result<Tag> {
    if s == "root" {
        return Ok(Tag::Root);
    }
    match s.parse::<usize>() {
        Ok(i) if i > 0 => Ok(Tag::Child(i)),
        _ => Err(line.error(format!("bad position tag `{s}`"))),
    }
}

fn parse_rule(line: &Line<'_>, states: &StateTable) -> Result<(Symbol, Tag, usize, Action)> {
    let (lhs, rhs) = line
        .text
        .split_once("->")
        .ok_or_else(|| line.error("expected `letter[pos] state -> action`"))?;
    let (letter, rest) = lhs
        .split_once('[')
        .ok_or_else(|| line.error("missing `[pos]`"))?;
    let (tag, state) = rest
        .split_once(']')
        .ok_or_else(|| line.error("missing `]`"))?;
    let tag = parse_tag(line, tag.trim())?;
    let q = states.lookup(line, state)?;
    let words: Vec<&str> = rhs.split_whitespace().collect();
    let action = match words[..] {
        ["accept"] => Action::Accept,
        ["reject"] => Action::Reject,
        [t, "parent"] => Action::Go(states.lookup(line, t)?, Move::Parent),
        [t, "stay"] => Action::Go(states.lookup(line, t)?, Move::Stay),
        [t, "child", i] => {
            let i = i
                .parse::<usize>()
                .map_err(|_| line.error(format!("bad child number `{i}`")))?;
            Action::Go(states.lookup(line, t)?, Move::Child(i))
        }
        _ => return Err(line.error(format!("bad action `{}`", rhs.trim()))),
    };
    Ok((Symbol::new(letter.trim()), tag, q, action))
}

impl FromStr for Dtwa {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let mut alphabet_src = String::new();
        let mut states = StateTable::default();
        let mut initial = None;
        let mut rules = Vec::new();
        for line in lines(input) {
            match line.header() {
                Some(("alphabet", rest)) => {
                    alphabet_src.push(' ');
                    alphabet_src.push_str(rest);
                }
                Some(("states", rest)) => {
                    for n in names(&line, rest)? {
                        states.declare(&line, n)?;
                    }
                }
                Some(("initial", rest)) => initial = Some((line, rest.to_string())),
                Some((key, _)) => return Err(line.error(format!("unknown header `{key}`"))),
                None => rules.push(line),
            }
        }
        let alphabet: RankedAlphabet = alphabet_src
            .parse()
            .map_err(|e| Error::parse(1, 1, format!("bad alphabet: {e}")))?;
        let (l, init) = initial.ok_or_else(|| Error::parse(1, 1, "missing `initial:` header"))?;
        let initial = states.lookup(&l, &init)?;
        let transitions = rules
            .iter()
            .map(|line| parse_rule(line, &states))
            .collect::<Result<Vec<_>>>()?;
        Dtwa::new(alphabet, states.names, initial, transitions)
    }
}
