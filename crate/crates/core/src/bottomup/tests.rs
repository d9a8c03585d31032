use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::trees::{compose, enumerate_terms, enumerate_trees, parse_term, parse_tree, RankedAlphabet, Symbol, Term, Tree};
use crate::Error;

fn sigma() -> RankedAlphabet {
    "a/2 p/0 q/0".parse().unwrap()
}

fn parity() -> Dbta {
    let mut b = DbtaBuilder::new(sigma());
    b.accept("even")
        .transition("p", &[], "odd")
        .transition("q", &[], "even")
        .transition("a", &["even", "even"], "even")
        .transition("a", &["even", "odd"], "odd")
        .transition("a", &["odd", "even"], "odd")
        .transition("a", &["odd", "odd"], "even");
    b.build().unwrap()
}

pub(crate) fn random_dbta(rng: &mut ChaCha8Rng, alphabet: &RankedAlphabet, n: usize) -> Dbta {
    let mut transitions = Vec::new();
    for (letter, arity) in alphabet.letters() {
        let mut tuple = vec![0; arity];
        loop {
            transitions.push((letter.clone(), tuple.clone(), rng.random_range(0..n)));
            if !explore::advance(&mut tuple, n) {
                break;
            }
        }
    }
    let accepting: Vec<StateId> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
    let names = (0..n).map(|i| format!("s{i}")).collect();
    Dbta::new(alphabet.clone(), names, accepting, transitions, None).unwrap()
}

fn random_nta(rng: &mut ChaCha8Rng, alphabet: &RankedAlphabet, n: usize) -> Nta {
    let mut transitions = Vec::new();
    for (letter, arity) in alphabet.letters() {
        let mut tuple = vec![0; arity];
        loop {
            for q in 0..n {
                if rng.random_bool(0.3) {
                    transitions.push((letter.clone(), tuple.clone(), q));
                }
            }
            if !explore::advance(&mut tuple, n) {
                break;
            }
        }
    }
    let accepting: Vec<StateId> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
    let names = (0..n).map(|i| format!("n{i}")).collect();
    Nta::new(alphabet.clone(), names, accepting, transitions).unwrap()
}

/// Existence of a run reaching `q`, straight from the relation.
fn nta_reaches(nta: &Nta, tree: &Tree, q: StateId) -> bool {
    nta.transitions(tree.label()).any(|(args, targets)| {
        targets.contains(&q)
            && args
                .iter()
                .zip(tree.children())
                .all(|(&qi, c)| nta_reaches(nta, c, qi))
    })
}

fn nta_accepts_oracle(nta: &Nta, tree: &Tree) -> bool {
    (0..nta.num_states()).any(|q| nta.is_accepting(q) && nta_reaches(nta, tree, q))
}

/// Table-filling: the set of state pairs told apart by some context.
fn distinguishable_pairs(a: &Dbta) -> BTreeSet<(StateId, StateId)> {
    let n = a.num_states();
    let mut marked: BTreeSet<(StateId, StateId)> = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            if a.is_accepting(x) != a.is_accepting(y) {
                marked.insert((x, y));
            }
        }
    }
    loop {
        let mut grew = false;
        for x in 0..n {
            for y in 0..n {
                if marked.contains(&(x, y)) {
                    continue;
                }
                'letters: for (letter, arity) in a.alphabet().letters().filter(|(_, a)| *a > 0) {
                    for pos in 0..arity {
                        let mut sib = vec![0; arity - 1];
                        loop {
                            let mut ax = sib.clone();
                            ax.insert(pos, x);
                            let mut ay = sib.clone();
                            ay.insert(pos, y);
                            if marked.contains(&(a.step(letter, &ax), a.step(letter, &ay))) {
                                marked.insert((x, y));
                                grew = true;
                                break 'letters;
                            }
                            if !explore::advance(&mut sib, n) {
                                break;
                            }
                        }
                    }
                }
            }
        }
        if !grew {
            return marked;
        }
    }
}

fn trees7() -> Vec<Tree> {
    enumerate_trees(&sigma(), 7).collect()
}

#[test]
fn one_state_automaton_evaluates_everything_to_its_state() {
    let mut b = DbtaBuilder::new(sigma());
    b.accept("q")
        .transition("p", &[], "q")
        .transition("q", &[], "q")
        .transition("a", &["q", "q"], "q");
    let a = b.build().unwrap();
    for t in trees7() {
        assert_eq!(a.eval(&t).unwrap(), 0);
    }
}

#[test]
fn parity_example_and_count_oracle() {
    let a = parity();
    let even = a.state_by_name("even").unwrap();
    assert_eq!(a.eval(&parse_tree("a(p,a(q,p))").unwrap()).unwrap(), even);
    for t in trees7() {
        let ps = t.leaves().iter().filter(|s| s.as_str() == "p").count();
        assert_eq!(a.accepts(&t).unwrap(), ps % 2 == 0, "{t}");
    }
}

#[test]
fn eval_rejects_foreign_letters() {
    assert!(matches!(
        parity().eval(&parse_tree("a(p,z)").unwrap()),
        Err(Error::Alphabet(_))
    ));
    assert!(parity().eval(&parse_tree("a(p)").unwrap()).is_err());
}

#[test]
fn eval_term_identity_and_ground_cases() {
    let a = parity();
    assert_eq!(a.eval_term(&Term::port(), &[1]).unwrap(), 1);
    let ground = parse_term("a(p,q)").unwrap();
    assert_eq!(
        a.eval_term(&ground, &[]).unwrap(),
        a.eval(ground.tree()).unwrap()
    );
    assert_eq!(
        a.eval_term(&parse_term("a(*,*)").unwrap(), &[0]),
        Err(Error::ArgumentCount {
            expected: 2,
            got: 1
        })
    );
}

#[test]
fn eval_term_matches_substitution() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let alphabet: RankedAlphabet = "a/2 c/0 p/0".parse().unwrap();
    let trees: Vec<Tree> = enumerate_trees(&alphabet, 3).collect();
    for _ in 0..5 {
        let a = random_dbta(&mut rng, &alphabet, 3);
        for n in 0..=3 {
            for t in enumerate_terms(&alphabet, n, 9 - 2 * n).filter(|t| t.size() <= 9) {
                let args: Vec<Term> = (0..n)
                    .map(|_| Term::ground(trees[rng.random_range(0..trees.len())].clone()).unwrap())
                    .collect();
                let states: Vec<StateId> = args.iter().map(|s| a.eval(s.tree()).unwrap()).collect();
                let whole = compose(&t, &args).unwrap();
                assert_eq!(
                    a.eval_term(&t, &states).unwrap(),
                    a.eval(whole.tree()).unwrap(),
                    "{t}"
                );
            }
        }
    }
}

#[test]
fn determinize_deterministic_input_is_isomorphic() {
    let d = parity();
    let mut b = NtaBuilder::new(sigma());
    for (letter, _) in d.alphabet().letters() {
        for (args, q) in d.transitions(letter) {
            let args: Vec<&str> = args.iter().map(|&s| d.state_name(s)).collect();
            b.transition(letter.as_str(), &args, d.state_name(q));
        }
    }
    b.accept("even");
    let det = determinize(&b.build().unwrap());
    assert_eq!(det.num_states(), 2);
    for t in trees7() {
        assert_eq!(det.accepts(&t).unwrap(), d.accepts(&t).unwrap());
    }
}

#[test]
fn determinize_empty_relation_gives_empty_subset_sink() {
    let mut b = NtaBuilder::new(sigma());
    b.accept("x").transition("p", &[], "x").transition("a", &["x", "x"], "x");
    let det = determinize(&b.build().unwrap());
    // {x} and ∅ (from q)
    assert_eq!(det.num_states(), 2);
    assert!(!det.accepts(&parse_tree("a(p,q)").unwrap()).unwrap());
    assert!(det.accepts(&parse_tree("a(p,p)").unwrap()).unwrap());
}

#[test]
fn determinize_preserves_language_of_random_ntas() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let trees = trees7();
    for _ in 0..20 {
        let nta = random_nta(&mut rng, &sigma(), 3);
        let det = determinize(&nta);
        let lazy = SubsetEvaluator::new(&nta);
        for t in &trees {
            let expected = nta_accepts_oracle(&nta, t);
            assert_eq!(det.accepts(t).unwrap(), expected, "{t}");
            assert_eq!(lazy.accepts(t).unwrap(), expected, "{t}");
        }
    }
}

#[test]
fn minimize_keeps_minimal_automata() {
    assert_eq!(minimize(&parity()).num_states(), 2);
}

#[test]
fn minimize_merges_duplicated_states() {
    let mut b = DbtaBuilder::new(sigma());
    // odd split into two copies
    b.accept("even")
        .transition("p", &[], "odd1")
        .transition("q", &[], "even");
    let class = |s: &str| if s == "even" { 0 } else { 1 };
    for x in ["even", "odd1", "odd2"] {
        for y in ["even", "odd1", "odd2"] {
            let target = match (class(x) + class(y)) % 2 {
                0 => "even",
                _ if x == "odd1" => "odd2",
                _ => "odd1",
            };
            b.transition("a", &[x, y], target);
        }
    }
    let a = b.build().unwrap();
    assert_eq!(a.num_states(), 3);
    let m = minimize(&a);
    assert_eq!(m.num_states(), 2);
    for t in trees7() {
        assert_eq!(m.accepts(&t).unwrap(), a.accepts(&t).unwrap());
    }
}

#[test]
fn minimize_random_automata() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let trees = trees7();
    for n in 1..=6 {
        for _ in 0..8 {
            let a = random_dbta(&mut rng, &sigma(), n);
            let m = minimize(&a);
            assert!(m.num_states() <= a.num_states());
            for t in &trees {
                assert_eq!(m.accepts(t).unwrap(), a.accepts(t).unwrap());
            }
            let marked = distinguishable_pairs(&m);
            for x in 0..m.num_states() {
                for y in 0..m.num_states() {
                    assert_eq!(marked.contains(&(x, y)), x != y, "states {x},{y} of\n{m}");
                }
            }
            let again = minimize(&m);
            assert_eq!(again, m);
        }
    }
}

#[test]
fn determinize_then_minimize_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..10 {
        let nta = random_nta(&mut rng, &sigma(), 3);
        let m = minimize(&determinize(&nta));
        assert_eq!(minimize(&m), m);
    }
}

#[test]
fn boolean_operations() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let trees = trees7();
    for _ in 0..10 {
        let a = random_dbta(&mut rng, &sigma(), 3);
        let b = random_dbta(&mut rng, &sigma(), 2);
        let cc = complement(&complement(&a));
        for op in [BoolOp::And, BoolOp::Or, BoolOp::AndNot] {
            let p = product(&a, &b, op).unwrap();
            for t in &trees {
                let (x, y) = (a.accepts(t).unwrap(), b.accepts(t).unwrap());
                assert_eq!(p.accepts(t).unwrap(), op.apply(x, y));
            }
        }
        for t in &trees {
            assert_eq!(cc.accepts(t).unwrap(), a.accepts(t).unwrap());
        }
        assert!(product(&a, &a, BoolOp::AndNot).unwrap().is_empty());
    }
    let other: RankedAlphabet = "a/2 p/0".parse().unwrap();
    let c = random_dbta(&mut rng, &other, 2);
    assert!(matches!(
        product(&parity(), &c, BoolOp::And),
        Err(Error::Alphabet(_))
    ));
}

#[test]
fn complement_of_partial_automaton_accepts_sink_trees() {
    let mut b = DbtaBuilder::new(sigma());
    b.accept("x").sink("dead").transition("p", &[], "x");
    let a = b.build().unwrap();
    assert!(!a.accepts(&parse_tree("a(p,p)").unwrap()).unwrap());
    let c = complement(&a);
    assert!(c.accepts(&parse_tree("a(p,p)").unwrap()).unwrap());
    assert!(!c.accepts(&parse_tree("p").unwrap()).unwrap());
}

#[test]
fn witnesses_are_accepted_and_minimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let trees = trees7();
    for _ in 0..30 {
        let a = random_dbta(&mut rng, &sigma(), 4);
        let smallest = trees.iter().find(|t| a.accepts(t).unwrap());
        match a.witness() {
            Some(w) => {
                assert!(a.accepts(&w).unwrap());
                if let Some(s) = smallest {
                    assert_eq!(w.size(), s.size());
                    assert!(&w <= s);
                }
            }
            None => assert!(smallest.is_none()),
        }
    }
}

#[test]
fn parity_witness_is_lexicographically_least() {
    assert_eq!(parity().witness().unwrap().to_string(), "q");
    assert_eq!(complement(&parity()).witness().unwrap().to_string(), "p");
}

#[test]
fn text_format_round_trip() {
    let a = parity();
    let back: Dbta = a.to_string().parse().unwrap();
    assert_eq!(back, a);

    let src = "alphabet: a/2 p/0 q/0\nstates: x dead\naccepting: x\nsink: dead\na(x,x) -> x\np -> x\n";
    let partial: Dbta = src.parse().unwrap();
    assert_eq!(partial.to_string(), src);

    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let nta = random_nta(&mut rng, &sigma(), 3);
    let back: Nta = nta.to_string().parse().unwrap();
    assert_eq!(back, nta);
}

#[test]
fn text_format_errors() {
    let missing = "alphabet: a/2 p/0\nstates: x\naccepting: x\np -> x\n";
    assert!(matches!(missing.parse::<Dbta>(), Err(Error::Invalid(_))));
    let bad = "alphabet: a/2 p/0\nstates: x\np -> y\n";
    assert!(matches!(bad.parse::<Dbta>(), Err(Error::Parse { line: 3, .. })));
    let arity = "alphabet: a/2 p/0\nstates: x\na(x) -> x\n";
    assert!(matches!(arity.parse::<Dbta>(), Err(Error::Parse { line: 3, .. })));
    let nd = "alphabet: p/0\nstates: x y\np -> {x,y}\n";
    assert!(nd.parse::<Dbta>().is_err());
    assert_eq!(nd.parse::<Nta>().unwrap().eval_set(&Tree::leaf(Symbol::new("p"))).unwrap().len(), 2);
}
