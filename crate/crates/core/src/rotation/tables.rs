use sha2::{Digest, Sha256};

use crate::bottomup::{minimize, Dbta, StateId};
use crate::trees::{compose, Term};
use crate::{Error, Result};

/// Largest term arity for which a full transformation table is built.
pub const MAX_TABLE_ARITY: usize = 3;

/// A minimized automaton with every state reachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDbta(Dbta);

impl MinDbta {
    pub fn new(a: &Dbta) -> Self {
        MinDbta(minimize(a))
    }

    pub fn dbta(&self) -> &Dbta {
        &self.0
    }

    /// SHA-256 of the automaton's text form, in hex.
    pub fn fingerprint(&self) -> String {
        Sha256::digest(self.0.to_string().as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

/// The function a term computes on states: port states in, root state out.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transformation {
    arity: usize,
    num_states: usize,
    /// Indexed by the port-state tuple read as a base-`num_states` number,
    /// first port most significant.
    table: Vec<StateId>,
}

impl Transformation {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn apply(&self, states: &[StateId]) -> StateId {
        assert_eq!(states.len(), self.arity, "wrong number of port states");
        let index = states.iter().fold(0, |acc, &q| acc * self.num_states + q);
        self.table[index]
    }
}

/// Transformation table of `t` on `a`.
pub fn transformation(a: &MinDbta, t: &Term) -> Result<Transformation> {
    let arity = t.arity();
    if arity > MAX_TABLE_ARITY {
        return Err(Error::Resource(format!(
            "transformation tables are limited to arity {MAX_TABLE_ARITY}, term has {arity} ports"
        )));
    }
    let dbta = a.dbta();
    dbta.alphabet().check_term(t)?;
    let n = dbta.num_states();
    let mut table = Vec::with_capacity(n.pow(arity as u32));
    let mut tuple = vec![0; arity];
    loop {
        table.push(dbta.eval_term_unchecked(t.tree(), &mut tuple.iter().copied()));
        // Odometer with the last port fastest.
        let mut i = arity;
        loop {
            if i == 0 {
                return Ok(Transformation {
                    arity,
                    num_states: n,
                    table,
                });
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < n {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// Whether `t` and `u` can replace each other in every context without
/// changing membership.
pub fn l_equivalent(a: &MinDbta, t: &Term, u: &Term) -> Result<bool> {
    if t.arity() != u.arity() {
        return Err(Error::ArgumentCount {
            expected: t.arity(),
            got: u.arity(),
        });
    }
    Ok(transformation(a, t)? == transformation(a, u)?)
}

/// Whether `t(t(x,y),z)` and `t(x,t(y,z))` are L-equivalent.
pub fn is_associative(a: &MinDbta, t: &Term) -> Result<bool> {
    if t.arity() != 2 {
        return Err(Error::ArgumentCount {
            expected: 2,
            got: t.arity(),
        });
    }
    let table = transformation(a, t)?;
    Ok(associative_table(&table))
}

pub(crate) fn associative_table(table: &Transformation) -> bool {
    let n = table.num_states;
    let f = |x, y| table.table[x * n + y];
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(f(x, y), z) == f(x, f(y, z)))))
}

/// The two ternary terms compared by [`is_associative`].
pub fn associations(t: &Term) -> Result<(Term, Term)> {
    let left = compose(t, &[t.clone(), Term::port()])?;
    let right = compose(t, &[Term::port(), t.clone()])?;
    Ok((left, right))
}
