use std::cmp::Ordering;

use super::{Dfa, Word};
use crate::grammar::CnfGrammar;
use crate::{Error, Result};

/// Shortest words first, then lexicographic.
fn shorter(a: &Word, b: &Word) -> bool {
    match a.len().cmp(&b.len()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => a < b,
    }
}

fn check_alphabet(g: &CnfGrammar, k: &Dfa) -> Result<()> {
    match g.terminals().iter().find(|t| k.alphabet().binary_search(t).is_err()) {
        Some(t) => Err(Error::alphabet(format!("terminal `{t}` is not a letter of the DFA"))),
        None => Ok(()),
    }
}

/// A word in `L(g) ∩ L(k)`, shortest and then lexicographically least, or
/// `None` when the intersection is empty.
///
/// Works on the product grammar with nonterminals `(p, X, q)`: such a
/// triple derives `w` iff `X` derives `w` and `k` moves from `p` to `q` on
/// `w`. The best word for every triple is found by relaxation.
pub fn cfg_dfa_witness(g: &CnfGrammar, k: &Dfa) -> Result<Option<Word>> {
    check_alphabet(g, k)?;
    let n = k.num_states();
    let nts = g.nonterminals.len();
    let slot = |p: usize, x: usize, q: usize| (p * nts + x) * n + q;
    let mut best: Vec<Option<Word>> = vec![None; n * nts * n];
    for (x, sigma) in &g.leaf {
        for p in 0..n {
            let q = k.next(p, sigma).expect("checked alphabet");
            let cand = vec![sigma.clone()];
            let cur = &mut best[slot(p, *x, q)];
            if cur.as_ref().is_none_or(|w| shorter(&cand, w)) {
                *cur = Some(cand);
            }
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &(x, y, z) in &g.binary {
            for p in 0..n {
                for r in 0..n {
                    let Some(u) = best[slot(p, y, r)].clone() else { continue };
                    for q in 0..n {
                        let Some(v) = &best[slot(r, z, q)] else { continue };
                        let target = slot(p, x, q);
                        let better = match &best[target] {
                            None => true,
                            Some(w) => {
                                u.len() + v.len() < w.len()
                                    || (u.len() + v.len() == w.len()
                                        && u.iter().chain(v.iter()).lt(w.iter()))
                            }
                        };
                        if better {
                            let mut w = u.clone();
                            w.extend(v.iter().cloned());
                            best[target] = Some(w);
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    let mut result: Option<Word> = None;
    for q in (0..n).filter(|&q| k.is_accepting(q)) {
        if let Some(w) = &best[slot(k.initial(), g.start, q)] {
            if result.as_ref().is_none_or(|r| shorter(w, r)) {
                result = Some(w.clone());
            }
        }
    }
    Ok(result)
}

/// True iff no word is both generated by `g` and accepted by `k`.
pub fn cfg_dfa_intersection_empty(g: &CnfGrammar, k: &Dfa) -> Result<bool> {
    Ok(cfg_dfa_witness(g, k)?.is_none())
}
