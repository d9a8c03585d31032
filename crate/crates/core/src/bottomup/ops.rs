use std::fmt;
use std::str::FromStr;

use super::dbta::{Dbta, StateId};
use super::explore::explore;
use super::minimize::reachable;
use crate::{Error, Result};

/// Boolean combination used by products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    And,
    Or,
    AndNot,
}

impl BoolOp {
    pub fn apply(self, x: bool, y: bool) -> bool {
        match self {
            BoolOp::And => x && y,
            BoolOp::Or => x || y,
            BoolOp::AndNot => x && !y,
        }
    }
}

impl fmt::Display for BoolOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoolOp::And => "and",
            BoolOp::Or => "or",
            BoolOp::AndNot => "andnot",
        })
    }
}

impl FromStr for BoolOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "and" => Ok(BoolOp::And),
            "or" => Ok(BoolOp::Or),
            "andnot" => Ok(BoolOp::AndNot),
            _ => Err(Error::Unsupported(format!("unknown Boolean operation `{s}`"))),
        }
    }
}

/// Pairing construction over reachable state pairs.
pub fn product(a: &Dbta, b: &Dbta, op: BoolOp) -> Result<Dbta> {
    if a.alphabet != b.alphabet {
        return Err(Error::alphabet(format!(
            "product of automata over {} and {}",
            a.alphabet, b.alphabet
        )));
    }
    Ok(explore(
        &a.alphabet,
        |letter, args: &[&(StateId, StateId)]| {
            let left: Vec<StateId> = args.iter().map(|p| p.0).collect();
            let right: Vec<StateId> = args.iter().map(|p| p.1).collect();
            (a.step(letter, &left), b.step(letter, &right))
        },
        |q, _| format!("p{q}"),
        |&(x, y)| op.apply(a.accepting[x], b.accepting[y]),
    )
    .0)
}

/// Automaton for the complement language. The sink, if any, is made
/// explicit before accepting states are flipped.
pub fn complement(a: &Dbta) -> Dbta {
    let mut r = reachable(a);
    for f in r.accepting.iter_mut() {
        *f = !*f;
    }
    r
}
