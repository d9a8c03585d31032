use std::collections::HashMap;
use std::rc::Rc;

use super::{RankedAlphabet, Symbol, Term, Tree};

/// Memoizing enumerator of terms by exact size and port count.
///
/// Terms of one size come out sorted by preorder label sequence, so the
/// concatenation over increasing sizes is the deterministic
/// size-then-lexicographic order used by the searches.
pub struct TermEnumerator {
    letters: Vec<(Symbol, usize)>,
    memo: HashMap<(usize, usize), Rc<Vec<Tree>>>,
}

impl TermEnumerator {
    pub fn new(alphabet: &RankedAlphabet) -> Self {
        TermEnumerator {
            letters: alphabet.letters().map(|(s, a)| (s.clone(), a)).collect(),
            memo: HashMap::new(),
        }
    }

    /// All terms with exactly `size` nodes (ports included) and `ports`
    /// ports.
    pub fn of_size(&mut self, size: usize, ports: usize) -> Rc<Vec<Tree>> {
        if let Some(hit) = self.memo.get(&(size, ports)) {
            return hit.clone();
        }
        let mut out = Vec::new();
        if size == 1 {
            match ports {
                0 => out.extend(
                    self.letters
                        .iter()
                        .filter(|(_, a)| *a == 0)
                        .map(|(s, _)| Tree::leaf(s)),
                ),
                1 => out.push(Tree::leaf(Symbol::port())),
                _ => {}
            }
        } else if ports <= size {
            let letters = self.letters.clone();
            for (letter, arity) in letters.iter().filter(|(_, a)| *a > 0) {
                for kids in self.child_lists(*arity, size - 1, ports) {
                    out.push(Tree::new(letter, kids));
                }
            }
            out.sort();
        }
        let out = Rc::new(out);
        self.memo.insert((size, ports), out.clone());
        out
    }

    fn child_lists(&mut self, count: usize, size: usize, ports: usize) -> Vec<Vec<Tree>> {
        if count == 0 {
            return if size == 0 && ports == 0 {
                vec![Vec::new()]
            } else {
                Vec::new()
            };
        }
        if size < count {
            return Vec::new();
        }
        let mut out = Vec::new();
        for first_size in 1..=size - (count - 1) {
            for first_ports in 0..=ports.min(first_size) {
                let firsts = self.of_size(first_size, first_ports);
                if firsts.is_empty() {
                    continue;
                }
                let rests = self.child_lists(count - 1, size - first_size, ports - first_ports);
                for f in firsts.iter() {
                    for r in &rests {
                        let mut kids = Vec::with_capacity(count);
                        kids.push(f.clone());
                        kids.extend(r.iter().cloned());
                        out.push(kids);
                    }
                }
            }
        }
        out
    }
}

/// Terms of the given arity with exactly `size` nodes, sorted.
pub fn terms_of_size(alphabet: &RankedAlphabet, arity: usize, size: usize) -> Vec<Term> {
    let mut en = TermEnumerator::new(alphabet);
    to_terms(&en.of_size(size, arity))
}

fn to_terms(trees: &[Tree]) -> Vec<Term> {
    trees
        .iter()
        .map(|t| Term::new(t.clone()).expect("enumerated terms are well formed"))
        .collect()
}

/// All terms of the given arity with at most `max_nodes` nodes, by
/// nondecreasing size, ties in lexicographic label order.
pub fn enumerate_terms(
    alphabet: &RankedAlphabet,
    arity: usize,
    max_nodes: usize,
) -> impl Iterator<Item = Term> {
    let mut en = TermEnumerator::new(alphabet);
    (1..=max_nodes).flat_map(move |size| to_terms(&en.of_size(size, arity)))
}

/// All trees with at most `max_nodes` nodes, in the same order.
pub fn enumerate_trees(alphabet: &RankedAlphabet, max_nodes: usize) -> impl Iterator<Item = Tree> {
    let mut en = TermEnumerator::new(alphabet);
    (1..=max_nodes).flat_map(move |size| en.of_size(size, 0).as_ref().clone())
}
