use crate::bottomup::Dbta;
use crate::trees::{compose, Symbol, Term, Tree};
use crate::words::Dfa;
use crate::{Error, Result};

/// Members of `t*` with `n` ports, at most `budget` of them, sorted.
///
/// `t*` contains the port itself and is closed under `t(t₁, t₂)`; for
/// `n ≥ 2` its members are the binary skeletons with `n` leaves whose
/// inner nodes are replaced by `t`.
pub fn tstar_members(t: &Term, n: usize, budget: usize) -> Result<Vec<Term>> {
    if t.arity() != 2 {
        return Err(Error::ArgumentCount {
            expected: 2,
            got: t.arity(),
        });
    }
    if n == 0 {
        return Err(Error::invalid("members of t* have at least one port"));
    }
    let mut out = skeletons(n)
        .iter()
        .map(|s| instantiate(s, t))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|x, y| x.tree().cmp(y.tree()));
    out.dedup();
    out.truncate(budget);
    Ok(out)
}

/// Letter used for the inner nodes of skeletons.
pub const SKELETON: &str = "b";

/// All binary trees with `n` ports, inner nodes labelled `b`, sorted.
pub fn skeletons(n: usize) -> Vec<Term> {
    let mut by_ports: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::leaf(Symbol::port())]];
    for k in 2..=n {
        let mut trees = Vec::new();
        for split in 1..k {
            for l in &by_ports[split] {
                for r in &by_ports[k - split] {
                    trees.push(Tree::new(SKELETON, vec![l.clone(), r.clone()]));
                }
            }
        }
        trees.sort();
        by_ports.push(trees);
    }
    by_ports
        .get(n)
        .map(|ts| ts.iter().map(|s| Term::new(s.clone()).expect("ports at leaves")).collect())
        .unwrap_or_default()
}

/// Replaces every inner node of a skeleton by the binary term `t`.
pub fn instantiate(skeleton: &Term, t: &Term) -> Result<Term> {
    fn go(s: &Tree, t: &Term) -> Result<Term> {
        match s.children() {
            [] if s.label().is_port() => Ok(Term::port()),
            [l, r] if s.label().as_str() == SKELETON => compose(t, &[go(l, t)?, go(r, t)?]),
            _ => Err(Error::Shape(format!("`{s}` is not a skeleton"))),
        }
    }
    go(skeleton.tree(), t)
}

/// Word automaton reading `a₁⋯aₙ` as the comb `t(…t(t(a₁,a₂),a₃)…,aₙ)`.
///
/// States are those of `a` plus a fresh initial state; the first letter
/// moves to the state of its one-node tree, and every later letter `σ`
/// moves `q` to the value of `t` on `q` and the state of `σ`. For `n ≥ 2`
/// the automaton accepts exactly the words whose comb `a` accepts.
pub fn comb_dfa(a: &Dbta, t: &Term, gamma: &[Symbol]) -> Result<Dfa> {
    if t.arity() != 2 {
        return Err(Error::ArgumentCount {
            expected: 2,
            got: t.arity(),
        });
    }
    a.alphabet().check_term(t)?;
    for x in gamma {
        if a.alphabet().arity(x) != Some(0) {
            return Err(Error::alphabet(format!("`{x}` is not a leaf letter of {}", a.alphabet())));
        }
    }
    let n = a.num_states();
    let mut states = a.state_names().to_vec();
    let mut init = "init".to_string();
    while states.contains(&init) {
        init.push('_');
    }
    states.push(init);
    let mut transitions = Vec::new();
    for x in gamma {
        let leaf = a.step(x, &[]);
        transitions.push((n, x.clone(), leaf));
        for q in 0..n {
            transitions.push((q, x.clone(), a.eval_term(t, &[q, leaf])?));
        }
    }
    Dfa::new(gamma.iter().cloned(), states, n, a.accepting_states(), transitions)
}
