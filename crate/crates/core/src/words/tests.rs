use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::bottomup::BoolOp;
use crate::grammar::{fixtures, generate_words, CnfGrammar};
use crate::trees::Symbol;
use crate::Error;

fn gamma() -> Vec<Symbol> {
    vec![Symbol::new("p"), Symbol::new("q")]
}

fn word(s: &str) -> Word {
    s.chars().map(|c| Symbol::new(&c.to_string())).collect()
}

/// All words of length `0..=max_len` in length-then-lexicographic order.
fn all_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Word| {
                gamma().into_iter().map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn dfa(src: &str) -> Dfa {
    src.parse().unwrap()
}

fn p_start() -> Dfa {
    dfa("alphabet: p q\nstates: i y n\ninitial: i\naccepting: y\n\
         i p -> y; i q -> n; y p -> y; y q -> y; n p -> n; n q -> n")
}

fn universal() -> Dfa {
    dfa("alphabet: p q\nstates: k\ninitial: k\naccepting: k\nk p -> k; k q -> k")
}

fn empty() -> Dfa {
    universal().complement()
}

fn has_qp() -> Dfa {
    dfa("alphabet: p q\nstates: s t f\ninitial: s\naccepting: f\n\
         s p -> s; s q -> t; t q -> t; t p -> f; f p -> f; f q -> f")
}

#[test]
fn complement_twice_preserves_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..5 {
        let k = random_dfa(&mut rng, n, &gamma());
        let kk = k.complement().complement();
        for w in all_words(8) {
            assert_eq!(k.accepts(&w).unwrap(), kk.accepts(&w).unwrap());
            assert_ne!(k.accepts(&w).unwrap(), k.complement().accepts(&w).unwrap());
        }
    }
}

#[test]
fn product_is_pointwise() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..6 {
        let a = random_dfa(&mut rng, 3, &gamma());
        let b = random_dfa(&mut rng, 3, &gamma());
        for op in [BoolOp::And, BoolOp::Or, BoolOp::AndNot] {
            let c = a.product(&b, op).unwrap();
            for w in all_words(6) {
                let expected = op.apply(a.accepts(&w).unwrap(), b.accepts(&w).unwrap());
                assert_eq!(c.accepts(&w).unwrap(), expected);
            }
        }
    }
    let other = dfa("alphabet: p\nstates: k\ninitial: k\naccepting: k\nk p -> k");
    assert!(matches!(universal().product(&other, BoolOp::And), Err(Error::Alphabet(_))));
}

#[test]
fn witness_is_shortest_then_least() {
    assert!(empty().is_empty());
    assert_eq!(universal().witness(), Some(vec![]));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let k = random_dfa(&mut rng, 4, &gamma());
        // Four states: a shortest accepted word has at most three letters.
        let expected = all_words(4).into_iter().find(|w| k.accepts(w).unwrap());
        assert_eq!(k.witness(), expected);
    }
}

#[test]
fn text_format_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in 1..5 {
        let k = random_dfa(&mut rng, n, &gamma());
        assert_eq!(k.to_string().parse::<Dfa>().unwrap(), k);
    }
    assert!(matches!(
        "alphabet: p\nstates: k\ninitial: k\naccepting: k".parse::<Dfa>(),
        Err(Error::Invalid(_))
    ));
    assert!(matches!(
        "alphabet: p\nstates: k\ninitial: k\nk p -> z".parse::<Dfa>(),
        Err(Error::Parse { line: 4, .. })
    ));
}

#[test]
fn extend_alphabet_rejects_new_letters() {
    let k = universal().extend_alphabet([Symbol::new("r")]);
    assert!(k.accepts(&word("pq")).unwrap());
    assert!(!k.accepts(&word("pr")).unwrap());
}

#[test]
fn intersection_examples() {
    let g = fixtures::pn_qn();
    assert!(cfg_dfa_intersection_empty(&g, &has_qp()).unwrap());
    assert_eq!(cfg_dfa_witness(&g, &universal()).unwrap(), Some(word("pq")));
    for g in [fixtures::pq(), fixtures::palindromes(), fixtures::ambiguous()] {
        let k = empty().extend_alphabet(g.terminals().iter().cloned());
        assert!(cfg_dfa_intersection_empty(&g, &k).unwrap());
    }
    let narrow = dfa("alphabet: p\nstates: k\ninitial: k\naccepting: k\nk p -> k");
    assert!(matches!(cfg_dfa_intersection_empty(&g, &narrow), Err(Error::Alphabet(_))));
}

#[test]
fn intersection_agrees_with_enumeration() {
    let grammars: Vec<CnfGrammar> = vec![
        fixtures::pq(),
        fixtures::pn_qn(),
        fixtures::palindromes(),
        fixtures::non_palindromes(),
        fixtures::p_initial(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in &grammars {
        let words = generate_words(g, 8);
        for i in 0..12 {
            let k = random_dfa(&mut rng, 1 + i % 4, &gamma());
            let w = cfg_dfa_witness(g, &k).unwrap();
            // Enumeration in length-then-lexicographic order.
            let mut found: Vec<&Word> = words.iter().filter(|w| k.accepts(w).unwrap()).collect();
            found.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
            match (&w, found.first()) {
                (Some(w), Some(f)) => assert_eq!(w, *f),
                (None, f) => assert!(f.is_none()),
                (Some(w), None) => assert!(w.len() > 8),
            }
        }
    }
}

#[test]
fn separator_examples() {
    let (g, h) = (fixtures::p_initial(), fixtures::q_initial());
    let r = verify_separator(&p_start(), &g, &h).unwrap();
    assert_eq!(r, SeparationReport { separates: true, violation_g: None, violation_h: None });

    let r = verify_separator(&universal(), &g, &h).unwrap();
    assert!(!r.separates);
    assert_eq!(r.violation_g, None);
    assert_eq!(r.violation_h, Some(word("q")));

    // Complement of the regular cover "starts with q" of H.
    let k = dfa("alphabet: p q\nstates: i y n\ninitial: i\naccepting: i n\n\
                 i q -> y; i p -> n; y p -> y; y q -> y; n p -> n; n q -> n");
    assert!(verify_separator(&k, &fixtures::pn_qn(), &h).unwrap().separates);
}

#[test]
fn verified_separators_hold_on_short_words() {
    let (g, h) = (fixtures::p_initial(), fixtures::q_initial());
    let gw = generate_words(&g, 8);
    let hw = generate_words(&h, 8);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut verified = 0;
    let mut candidates = vec![p_start()];
    candidates.extend((0..40).map(|i| random_dfa(&mut rng, 1 + i % 4, &gamma())));
    for k in candidates {
        let r = verify_separator(&k, &g, &h).unwrap();
        let brute = gw.iter().all(|w| k.accepts(w).unwrap()) && hw.iter().all(|w| !k.accepts(w).unwrap());
        if r.separates {
            verified += 1;
            assert!(brute);
        }
        let words: BTreeSet<&Word> = r.violation_g.iter().chain(r.violation_h.iter()).collect();
        for w in words {
            assert!(gw.contains(w) || hw.contains(w));
        }
    }
    assert!(verified >= 1);
}
