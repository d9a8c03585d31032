//! Text format for bottom-up automata:
//!
//! ```text
//! alphabet: a/2 p/0 q/0
//! states: even odd
//! accepting: even
//! sink: dead            # optional, deterministic automata only
//! p -> odd
//! a(even,odd) -> odd    # deterministic
//! a(odd,odd) -> {even}  # nondeterministic
//! ```

use std::fmt;
use std::str::FromStr;

use super::dbta::{Dbta, StateId};
use super::nta::Nta;
use crate::text::{lines, names, Line, StateTable};
use crate::trees::{RankedAlphabet, Symbol};
use crate::{Error, Result};

struct Header {
    alphabet: RankedAlphabet,
    states: StateTable,
    accepting: Vec<StateId>,
    sink: Option<StateId>,
}

enum Target {
    One(StateId),
    Many(Vec<StateId>),
}

struct Rule {
    letter: Symbol,
    args: Vec<StateId>,
    target: Target,
}

fn parse_text(input: &str) -> Result<(Header, Vec<Rule>)> {
    let mut alphabet_src = String::new();
    let mut states = StateTable::default();
    let mut accepting_names: Vec<(Line<'_>, String)> = Vec::new();
    let mut sink_name: Option<(Line<'_>, String)> = None;
    let mut rules_src: Vec<Line<'_>> = Vec::new();

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
            Some(("accepting", rest)) => {
                for n in names(&line, rest)? {
                    accepting_names.push((line, n.to_string()));
                }
            }
            Some(("sink", rest)) => sink_name = Some((line, rest.to_string())),
            Some((key, _)) => return Err(line.error(format!("unknown header `{key}`"))),
            None => rules_src.push(line),
        }
    }
    let alphabet: RankedAlphabet = alphabet_src
        .parse()
        .map_err(|e| Error::parse(1, 1, format!("bad alphabet: {e}")))?;
    if states.is_empty() {
        return Err(Error::parse(1, 1, "missing `states:` header"));
    }
    let accepting = accepting_names
        .iter()
        .map(|(l, n)| states.lookup(l, n))
        .collect::<Result<_>>()?;
    let sink = sink_name
        .map(|(l, n)| states.lookup(&l, &n))
        .transpose()?;

    let mut rules = Vec::new();
    for line in rules_src {
        let (lhs, rhs) = line
            .text
            .split_once("->")
            .ok_or_else(|| line.error("expected `letter(states) -> target`"))?;
        let lhs = lhs.trim();
        let (letter, args) = match lhs.split_once('(') {
            Some((l, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| line.error("missing `)`"))?;
                let args = names(&line, inner)?
                    .into_iter()
                    .map(|n| states.lookup(&line, n))
                    .collect::<Result<Vec<_>>>()?;
                (l.trim(), args)
            }
            None => (lhs, Vec::new()),
        };
        let rhs = rhs.trim();
        let target = if let Some(inner) = rhs.strip_prefix('{') {
            let inner = inner
                .strip_suffix('}')
                .ok_or_else(|| line.error("missing `}`"))?;
            Target::Many(
                names(&line, inner)?
                    .into_iter()
                    .map(|n| states.lookup(&line, n))
                    .collect::<Result<_>>()?,
            )
        } else {
            Target::One(states.lookup(&line, rhs)?)
        };
        let letter = Symbol::new(letter);
        match alphabet.arity(&letter) {
            None => return Err(line.error(format!("letter `{letter}` not in the alphabet"))),
            Some(a) if a != args.len() => {
                return Err(line.error(format!(
                    "letter `{letter}` has arity {a}, got {} argument(s)",
                    args.len()
                )))
            }
            Some(_) => {}
        }
        rules.push(Rule {
            letter,
            args,
            target,
        });
    }
    Ok((
        Header {
            alphabet,
            states,
            accepting,
            sink,
        },
        rules,
    ))
}

impl FromStr for Dbta {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let (h, rules) = parse_text(input)?;
        let mut transitions = Vec::new();
        for r in rules {
            match r.target {
                Target::One(q) => transitions.push((r.letter, r.args, q)),
                Target::Many(_) => {
                    return Err(Error::parse(
                        1,
                        1,
                        "set-valued target in a deterministic automaton",
                    ))
                }
            }
        }
        Dbta::new(h.alphabet, h.states.names, h.accepting, transitions, h.sink)
    }
}

impl FromStr for Nta {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let (h, rules) = parse_text(input)?;
        if h.sink.is_some() {
            return Err(Error::parse(1, 1, "`sink:` is only allowed for deterministic automata"));
        }
        let mut transitions = Vec::new();
        for r in rules {
            match r.target {
                Target::One(q) => transitions.push((r.letter, r.args, q)),
                Target::Many(qs) => {
                    transitions.extend(qs.into_iter().map(|q| (r.letter.clone(), r.args.clone(), q)))
                }
            }
        }
        Nta::new(h.alphabet, h.states.names, h.accepting, transitions)
    }
}

fn write_header(
    f: &mut fmt::Formatter<'_>,
    alphabet: &RankedAlphabet,
    states: &[String],
    accepting: &[bool],
) -> fmt::Result {
    writeln!(f, "alphabet: {alphabet}")?;
    writeln!(f, "states: {}", states.join(" "))?;
    let acc: Vec<&str> = states
        .iter()
        .zip(accepting)
        .filter(|(_, &a)| a)
        .map(|(s, _)| s.as_str())
        .collect();
    writeln!(f, "accepting: {}", acc.join(" "))
}

fn write_lhs(f: &mut fmt::Formatter<'_>, letter: &Symbol, args: &[StateId], states: &[String]) -> fmt::Result {
    write!(f, "{letter}")?;
    if !args.is_empty() {
        let names: Vec<&str> = args.iter().map(|&q| states[q].as_str()).collect();
        write!(f, "({})", names.join(","))?;
    }
    Ok(())
}

impl fmt::Display for Dbta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_header(f, &self.alphabet, &self.states, &self.accepting)?;
        if let Some(s) = self.sink {
            writeln!(f, "sink: {}", self.states[s])?;
        }
        for (letter, table) in &self.delta {
            for (args, &q) in table {
                write_lhs(f, letter, args, &self.states)?;
                writeln!(f, " -> {}", self.states[q])?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Nta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_header(f, &self.alphabet, &self.states, &self.accepting)?;
        for (letter, rel) in &self.delta {
            for (args, targets) in rel {
                write_lhs(f, letter, args, &self.states)?;
                let names: Vec<&str> = targets.iter().map(|&q| self.states[q].as_str()).collect();
                writeln!(f, " -> {{{}}}", names.join(","))?;
            }
        }
        Ok(())
    }
}
