use std::collections::{BTreeSet, HashMap};

use super::CnfGrammar;
use crate::trees::{leaf_word, Symbol, Tree};
use crate::words::Word;
use crate::{Error, Result};

/// `table[i][l - 1][x]`: nonterminal `x` derives `word[i..i + l]`.
fn cyk_table(g: &CnfGrammar, word: &[Symbol]) -> Vec<Vec<Vec<bool>>> {
    let n = word.len();
    let k = g.nonterminals.len();
    let mut table = vec![vec![vec![false; k]; n]; n];
    for (i, letter) in word.iter().enumerate() {
        for (x, s) in &g.leaf {
            if s == letter {
                table[i][0][*x] = true;
            }
        }
    }
    for len in 2..=n {
        for i in 0..=n - len {
            for split in 1..len {
                for &(x, y, z) in &g.binary {
                    if table[i][split - 1][y] && table[i + split][len - split - 1][z] {
                        table[i][len - 1][x] = true;
                    }
                }
            }
        }
    }
    table
}

/// CYK membership. The empty word is never generated by a CNF grammar and
/// is reported as unsupported.
pub fn cyk_member(g: &CnfGrammar, word: &[Symbol]) -> Result<bool> {
    if word.is_empty() {
        return Err(Error::Unsupported("the empty word has no CNF derivation".into()));
    }
    Ok(cyk_table(g, word)[0][word.len() - 1][g.start])
}

/// Every derivation tree of `word`, sorted. Empty when the word is not
/// generated.
pub fn derivations(g: &CnfGrammar, word: &[Symbol]) -> Vec<Tree> {
    if word.is_empty() {
        return Vec::new();
    }
    let table = cyk_table(g, word);
    let mut memo = HashMap::new();
    let mut out = build(g, word, &table, g.start, 0, word.len(), &mut memo);
    out.sort();
    out.dedup();
    out
}

type Memo = HashMap<(usize, usize, usize), Vec<Tree>>;

fn build(
    g: &CnfGrammar,
    word: &[Symbol],
    table: &[Vec<Vec<bool>>],
    x: usize,
    i: usize,
    len: usize,
    memo: &mut Memo,
) -> Vec<Tree> {
    if let Some(v) = memo.get(&(x, i, len)) {
        return v.clone();
    }
    let mut out = Vec::new();
    if table[i][len - 1][x] {
        if len == 1 {
            if g.leaf.iter().any(|(y, s)| *y == x && *s == word[i]) {
                out.push(Tree::leaf(word[i].clone()));
            }
        } else {
            for split in 1..len {
                for &(_, y, z) in g.binary.iter().filter(|r| r.0 == x) {
                    if !table[i][split - 1][y] || !table[i + split][len - split - 1][z] {
                        continue;
                    }
                    let lefts = build(g, word, table, y, i, split, memo);
                    let rights = build(g, word, table, z, i + split, len - split, memo);
                    for l in &lefts {
                        for r in &rights {
                            out.push(Tree::new(g.nonterminals[x].clone(), vec![l.clone(), r.clone()]));
                        }
                    }
                }
            }
        }
    }
    memo.insert((x, i, len), out.clone());
    out
}

/// Left-to-right terminal leaves of a derivation.
pub fn yield_word(derivation: &Tree) -> Word {
    leaf_word(derivation, None)
}

/// True iff `tree` is a derivation of `g` from its start symbol.
pub fn is_derivation(g: &CnfGrammar, tree: &Tree) -> bool {
    // Returns the set of nonterminals the subtree can stand for.
    fn roots(g: &CnfGrammar, t: &Tree) -> Option<BTreeSet<usize>> {
        match t.children() {
            [] => {
                let xs: BTreeSet<usize> =
                    g.leaf.iter().filter(|(_, s)| s == t.label()).map(|(x, _)| *x).collect();
                (!xs.is_empty()).then_some(xs)
            }
            [l, r] => {
                let x = g.index_of(t.label())?;
                let (ls, rs) = (roots(g, l)?, roots(g, r)?);
                let ok = g.binary.iter().any(|&(rx, y, z)| rx == x && ls.contains(&y) && rs.contains(&z));
                ok.then(|| BTreeSet::from([x]))
            }
            _ => None,
        }
    }
    roots(g, tree).is_some_and(|xs| xs.contains(&g.start))
}

/// All generated words of length `1..=max_len`.
pub fn generate_words(g: &CnfGrammar, max_len: usize) -> BTreeSet<Word> {
    let k = g.nonterminals.len();
    // by_len[l][x]: words of length l derived from x.
    let mut by_len: Vec<Vec<BTreeSet<Word>>> = vec![vec![BTreeSet::new(); k]; max_len + 1];
    if max_len >= 1 {
        for (x, s) in &g.leaf {
            by_len[1][*x].insert(vec![s.clone()]);
        }
    }
    for len in 2..=max_len {
        for &(x, y, z) in &g.binary {
            let mut new = BTreeSet::new();
            for split in 1..len {
                for u in &by_len[split][y] {
                    for v in &by_len[len - split][z] {
                        let mut w = u.clone();
                        w.extend(v.iter().cloned());
                        new.insert(w);
                    }
                }
            }
            by_len[len][x].extend(new);
        }
    }
    by_len.into_iter().flat_map(|mut row| std::mem::take(&mut row[g.start])).collect()
}
