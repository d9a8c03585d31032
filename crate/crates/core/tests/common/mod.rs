#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treesep::bottomup::{Dbta, DbtaBuilder};
use treesep::words::{random_dfa, Dfa, Word};
use treesep::{RankedAlphabet, Symbol};

pub const SIGMA: &str = "a/2 c/0 p/0 q/0";

pub fn sigma() -> RankedAlphabet {
    SIGMA.parse().unwrap()
}

pub fn gamma() -> Vec<Symbol> {
    vec![Symbol::new("p"), Symbol::new("q")]
}

pub const P_START: &str = "alphabet: p q
states: i y n
initial: i
accepting: y
i p -> y; i q -> n
y p -> y; y q -> y
n p -> n; n q -> n
";

pub const P_INITIAL: &str = "S -> P W | p; W -> p | q | P W | Q W; P -> p; Q -> q\n";
pub const Q_INITIAL: &str = "S -> Q W | q; W -> p | q | P W | Q W; P -> p; Q -> q\n";

pub fn p_start() -> Dfa {
    P_START.parse().unwrap()
}

/// The twenty seeded DFAs with one to four states over `{p, q}`.
pub fn random_dfas() -> Vec<Dfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..20).map(|i| random_dfa(&mut rng, 1 + i % 4, &gamma())).collect()
}

/// Words over `{p, q}` of exactly `len` letters, lexicographic.
pub fn words(len: usize) -> Vec<Word> {
    let mut layer: Vec<Word> = vec![vec![]];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w| {
                gamma().into_iter().map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    layer
}

/// The left child of the root is a leaf; `dup` is an extra copy of `no`
/// so the automaton is not minimal.
pub fn root_left_leaf() -> Dbta {
    let mut b = DbtaBuilder::new(sigma());
    b.accept("yes");
    for x in ["c", "p", "q"] {
        b.transition(x, &[], "leaf");
    }
    for l in ["leaf", "yes", "no", "dup"] {
        for r in ["leaf", "yes", "no", "dup"] {
            let target = match (l, r) {
                ("leaf", _) => "yes",
                (_, "dup") => "dup",
                _ => "no",
            };
            b.transition("a", &[l, r], target);
        }
    }
    b.build().unwrap()
}

/// A language of shapes with no small rotation term.
pub fn shape_sensitive() -> Dbta {
    "alphabet: a/2 c/0 p/0 q/0
     states: s0 s1 s2
     accepting: s1 s2
     a(s0,s0) -> s1; a(s0,s1) -> s1; a(s0,s2) -> s2
     a(s1,s0) -> s0; a(s1,s1) -> s2; a(s1,s2) -> s1
     a(s2,s0) -> s2; a(s2,s1) -> s0; a(s2,s2) -> s0
     c -> s0; p -> s0; q -> s0"
        .parse()
        .unwrap()
}
