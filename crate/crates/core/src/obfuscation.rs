//! Obfuscation of grammar derivations: every nonterminal node of a
//! derivation is replaced by an arbitrary binary term over two fresh
//! letters, `a` of arity 2 and `c` of arity 0.

use std::collections::BTreeSet;

use crate::bottomup::{Nta, StateId, SubsetEvaluator};
use crate::grammar::CnfGrammar;
use crate::trees::{compose, enumerate_terms, RankedAlphabet, Symbol, Term, Tree};
use crate::{Error, Result};

pub const BRANCH: &str = "a";
pub const PAD: &str = "c";

/// The alphabet `{a/2, c/0}` of the replacement terms.
pub fn padding_alphabet() -> RankedAlphabet {
    RankedAlphabet::new([(BRANCH, 2), (PAD, 0)]).expect("valid alphabet")
}

/// `Γ ∪ {a/2, c/0}`, where the letters of `gamma` become leaf letters.
pub fn obf_alphabet<'g>(gamma: impl IntoIterator<Item = &'g Symbol>) -> Result<RankedAlphabet> {
    let gamma: Vec<&Symbol> = gamma.into_iter().collect();
    if let Some(bad) = gamma.iter().find(|s| [BRANCH, PAD].contains(&s.as_str())) {
        return Err(Error::alphabet(format!("terminal `{bad}` clashes with the padding letters")));
    }
    let letters = gamma
        .into_iter()
        .map(|s| (s.clone(), 0))
        .chain([(Symbol::new(BRANCH), 2), (Symbol::new(PAD), 0)]);
    RankedAlphabet::new(letters)
}

/// All obfuscations of the derivation `d` with at most `max_nodes` nodes,
/// by direct recursion over the derivation.
pub fn kop_oracle(d: &Tree, max_nodes: usize) -> BTreeSet<Tree> {
    let mut out = BTreeSet::new();
    match d.children() {
        [] => {
            if max_nodes >= 1 {
                out.insert(d.clone());
            }
        }
        [l, r] => {
            if max_nodes < 3 {
                return out;
            }
            let lefts = kop_oracle(l, max_nodes - 2);
            let rights = kop_oracle(r, max_nodes - 2);
            let pad = padding_alphabet();
            for s1 in &lefts {
                for s2 in &rights {
                    let filled = s1.size() + s2.size();
                    if filled + 1 > max_nodes {
                        continue;
                    }
                    let args = [Term::ground(s1.clone()).unwrap(), Term::ground(s2.clone()).unwrap()];
                    for s in enumerate_terms(&pad, 2, max_nodes + 2 - filled) {
                        out.insert(compose(&s, &args).expect("binary term").into_tree());
                    }
                }
            }
        }
        _ => {}
    }
    out
}

/// Nondeterministic automaton for the obfuscation of `g` over
/// `terminals(g) ∪ {a, c}`.
pub fn kop_nta(g: &CnfGrammar) -> Result<Nta> {
    kop_nta_over(g, g.terminals())
}

/// [`kop_nta`] over a larger terminal set, for comparing grammars whose
/// terminals differ. `gamma` must contain the terminals of `g`.
///
/// States: `C` for pure padding trees; for every nonterminal `X`, `Tl_X`
/// for a bare terminal leaf derived from `X`, `Tp_X` for such a leaf under
/// padding, and `Tb_X` for an obfuscated binary derivation from `X`.
/// Padding around a bare leaf yields `Tp_X`, which may be combined but is
/// never accepting, so `kop(σ) = {σ}`.
pub fn kop_nta_over<'g>(g: &CnfGrammar, gamma: impl IntoIterator<Item = &'g Symbol>) -> Result<Nta> {
    let gamma: BTreeSet<&Symbol> = gamma.into_iter().collect();
    if let Some(t) = g.terminals().iter().find(|t| !gamma.contains(t)) {
        return Err(Error::alphabet(format!("terminal `{t}` missing from the leaf alphabet")));
    }
    let alphabet = obf_alphabet(gamma)?;
    let k = g.nonterminals().len();
    let c: StateId = 0;
    let tl = |x: usize| 1 + 3 * x;
    let tp = |x: usize| 2 + 3 * x;
    let tb = |x: usize| 3 + 3 * x;
    let mut states = vec!["C".to_string()];
    for x in g.nonterminals() {
        states.extend([format!("Tl_{x}"), format!("Tp_{x}"), format!("Tb_{x}")]);
    }
    let a = Symbol::new(BRANCH);
    let mut rules = vec![(Symbol::new(PAD), vec![], c), (a.clone(), vec![c, c], c)];
    for (x, sigma) in &g.leaf {
        rules.push((sigma.clone(), vec![], tl(*x)));
    }
    for x in 0..k {
        for from in [tl(x), tp(x)] {
            rules.push((a.clone(), vec![from, c], tp(x)));
            rules.push((a.clone(), vec![c, from], tp(x)));
        }
        rules.push((a.clone(), vec![tb(x), c], tb(x)));
        rules.push((a.clone(), vec![c, tb(x)], tb(x)));
    }
    for &(x, y, z) in &g.binary {
        for left in [tl(y), tp(y), tb(y)] {
            for right in [tl(z), tp(z), tb(z)] {
                rules.push((a.clone(), vec![left, right], tb(x)));
            }
        }
    }
    Nta::new(alphabet, states, [tl(g.start), tb(g.start)], rules)
}

/// Membership in the obfuscation of `g`, by on-the-fly determinization.
pub fn kop_member(g: &CnfGrammar, s: &Tree) -> Result<bool> {
    let nta = kop_nta(g)?;
    SubsetEvaluator::new(&nta).accepts(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bottomup::NtaBuilder;
    use crate::grammar::{cyk_member, derivations, fixtures};
    use crate::trees::{enumerate_trees, leaf_word, parse_tree};

    fn t(s: &str) -> Tree {
        parse_tree(s).unwrap()
    }

    fn words_up_to(n: usize) -> Vec<Vec<Symbol>> {
        let mut out = Vec::new();
        let mut layer: Vec<Vec<Symbol>> = vec![vec![]];
        for _ in 0..n {
            layer = layer
                .iter()
                .flat_map(|w| {
                    ["p", "q"].map(|x| {
                        let mut w = w.clone();
                        w.push(Symbol::new(x));
                        w
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(kop_oracle(&t("p"), 9), BTreeSet::from([t("p")]));
        let d = t("S(p,q)");
        assert_eq!(kop_oracle(&d, 3), BTreeSet::from([t("a(p,q)")]));
        let five: BTreeSet<Tree> = [
            "a(p,q)",
            "a(a(p,q),c)",
            "a(c,a(p,q))",
            "a(a(p,c),q)",
            "a(a(c,p),q)",
            "a(p,a(q,c))",
            "a(p,a(c,q))",
        ]
        .into_iter()
        .map(t)
        .collect();
        assert_eq!(kop_oracle(&d, 5), five);
    }

    #[test]
    fn nta_examples() {
        let g = fixtures::pq();
        for (s, expected) in [("a(p,q)", true), ("a(a(p,c),q)", true), ("a(q,p)", false), ("a(c,c)", false), ("c", false)] {
            assert_eq!(kop_member(&g, &t(s)).unwrap(), expected, "{s}");
        }
        let single: CnfGrammar = "S -> p".parse().unwrap();
        assert!(kop_member(&single, &t("p")).unwrap());
        assert!(!kop_member(&single, &t("a(p,c)")).unwrap());
        assert!(matches!(kop_member(&g, &t("b(p)")), Err(Error::Alphabet(_))));
        let clash: CnfGrammar = "S -> c".parse().unwrap();
        assert!(matches!(kop_nta(&clash), Err(Error::Alphabet(_))));
    }

    #[test]
    fn agrees_with_oracle() {
        for g in [fixtures::pq(), fixtures::pn_qn(), fixtures::palindromes()] {
            let mut expected = BTreeSet::new();
            // A tree with at most 9 nodes has at most 5 leaves.
            for w in words_up_to(5) {
                for d in derivations(&g, &w) {
                    expected.extend(kop_oracle(&d, 7));
                }
            }
            let nta = kop_nta(&g).unwrap();
            let eval = SubsetEvaluator::new(&nta);
            let alphabet = obf_alphabet(g.terminals()).unwrap();
            for s in enumerate_trees(&alphabet, 7) {
                assert_eq!(eval.accepts(&s).unwrap(), expected.contains(&s), "{s}");
            }
        }
    }

    #[test]
    fn leaf_words_are_generated() {
        let g = fixtures::palindromes();
        let nta = kop_nta(&g).unwrap();
        let eval = SubsetEvaluator::new(&nta);
        let alphabet = obf_alphabet(g.terminals()).unwrap();
        let gamma: BTreeSet<Symbol> = g.terminals().clone();
        for s in enumerate_trees(&alphabet, 9) {
            let w = leaf_word(&s, Some(&gamma));
            let generated = !w.is_empty() && cyk_member(&g, &w).unwrap();
            if eval.accepts(&s).unwrap() {
                assert!(generated, "{s}");
            }
            if w.is_empty() {
                assert!(!eval.accepts(&s).unwrap());
            }
        }
    }

    #[test]
    fn swapping_obfuscated_subtrees_preserves_membership() {
        // Members for the same sub-derivation are interchangeable.
        let g = fixtures::pn_qn();
        let inner: Vec<Tree> = kop_oracle(&t("S(p,q)"), 5).into_iter().collect();
        for x in &inner {
            for pad in ["a(*,a(*,c))", "a(a(*,*),c)", "a(*,*)"] {
                let s = compose(&crate::trees::parse_term(pad).unwrap(), &[
                    Term::ground(t("a(p,c)")).unwrap(),
                    Term::ground(Tree::new("a", vec![x.clone(), t("q")])).unwrap(),
                ])
                .unwrap();
                assert!(kop_member(&g, s.tree()).unwrap(), "{}", s.tree());
            }
        }
    }

    #[test]
    fn naive_single_state_per_nonterminal_over_accepts() {
        // One state per nonterminal with padding allowed everywhere.
        let g: CnfGrammar = "S -> p".parse().unwrap();
        let mut b = NtaBuilder::new(obf_alphabet(g.terminals()).unwrap());
        b.accept("T_S")
            .transition("c", &[], "C")
            .transition("a", &["C", "C"], "C")
            .transition("p", &[], "T_S")
            .transition("a", &["T_S", "C"], "T_S")
            .transition("a", &["C", "T_S"], "T_S");
        let naive = b.build().unwrap();
        let s = t("a(p,c)");
        assert!(naive.accepts(&s).unwrap());
        assert!(kop_oracle(&t("p"), 9).get(&s).is_none());
        assert!(!kop_member(&g, &s).unwrap());
    }
}
