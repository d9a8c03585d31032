use std::fmt;

use super::{RankedAlphabet, RotationDirection, Symbol, Tree};
use crate::{Error, Result};

/// Linear term: a tree whose `*` leaves are ports, numbered 1..n in
/// left-to-right leaf order. Every port is used exactly once.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    tree: Tree,
    arity: usize,
}

impl Term {
    /// Wraps a tree over `Σ ∪ {*}`; `*` must only label leaves.
    pub fn new(tree: Tree) -> Result<Self> {
        let mut stack = vec![&tree];
        while let Some(node) = stack.pop() {
            if node.label().is_port() && !node.is_leaf() {
                return Err(Error::Shape("port `*` with children".into()));
            }
            stack.extend(node.children());
        }
        let arity = tree.port_count();
        Ok(Term { tree, arity })
    }

    /// The unary identity term `*`.
    pub fn port() -> Self {
        Term {
            tree: Tree::leaf(Symbol::port()),
            arity: 1,
        }
    }

    /// A tree seen as a term with no ports.
    pub fn ground(tree: Tree) -> Result<Self> {
        let term = Term::new(tree)?;
        if term.arity != 0 {
            return Err(Error::Shape("ground term contains ports".into()));
        }
        Ok(term)
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn into_tree(self) -> Tree {
        self.tree
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn size(&self) -> usize {
        self.tree.size()
    }

    /// The underlying tree when the term has no ports.
    pub fn as_ground(&self) -> Option<&Tree> {
        (self.arity == 0).then_some(&self.tree)
    }

    pub fn rotate_at(&self, path: &[usize], direction: RotationDirection) -> Result<Term> {
        Ok(Term {
            tree: self.tree.rotate_at(path, direction)?,
            arity: self.arity,
        })
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.tree, f)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.tree, f)
    }
}

/// Substitutes `args[i]` for the i-th port of `t`.
pub fn compose(t: &Term, args: &[Term]) -> Result<Term> {
    if args.len() != t.arity {
        return Err(Error::ArgumentCount {
            expected: t.arity,
            got: args.len(),
        });
    }
    let mut next = args.iter();
    let tree = substitute(&t.tree, &mut next);
    Ok(Term {
        tree,
        arity: args.iter().map(Term::arity).sum(),
    })
}

fn substitute<'a>(t: &Tree, args: &mut impl Iterator<Item = &'a Term>) -> Tree {
    if t.label().is_port() {
        // port count was checked by the caller
        return args.next().expect("port without argument").tree.clone();
    }
    Tree::new(
        t.label(),
        t.children().iter().map(|c| substitute(c, args)).collect(),
    )
}

/// [`compose`] after checking that all terms are over `alphabet`.
pub fn compose_checked(alphabet: &RankedAlphabet, t: &Term, args: &[Term]) -> Result<Term> {
    alphabet.check_term(t)?;
    for a in args {
        alphabet.check_term(a)?;
    }
    compose(t, args)
}

/// The left comb `t(t(…t(*,*)…,*),*)` with `n ≥ 2` ports.
pub fn comb_term(t: &Term, n: usize) -> Result<Term> {
    if t.arity != 2 {
        return Err(Error::ArgumentCount {
            expected: 2,
            got: t.arity,
        });
    }
    if n < 2 {
        return Err(Error::Size(format!("comb needs at least 2 leaves, got {n}")));
    }
    let mut acc = t.clone();
    for _ in 2..n {
        acc = compose(t, &[acc, Term::port()])?;
    }
    Ok(acc)
}

/// `comb(x₁,…,xₙ) = t(t(…t(x₁,x₂)…,xₙ₋₁),xₙ)` for arity-0 letters `xs`.
pub fn comb(t: &Term, xs: &[Symbol]) -> Result<Tree> {
    let shape = comb_term(t, xs.len())?;
    let leaves: Vec<Term> = xs
        .iter()
        .map(|x| Term::ground(Tree::leaf(x)))
        .collect::<Result<_>>()?;
    Ok(compose(&shape, &leaves)?.into_tree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{parse_term, parse_tree};

    fn term(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn syms(xs: &[&str]) -> Vec<Symbol> {
        xs.iter().map(|s| Symbol::new(s)).collect()
    }

    #[test]
    fn compose_examples() {
        let r = compose(&term("a(*,*)"), &[term("c"), term("c")]).unwrap();
        assert_eq!(r, term("a(c,c)"));
        assert_eq!(r.arity(), 0);

        let r = compose(&Term::port(), &[term("a(c,c)")]).unwrap();
        assert_eq!(r, term("a(c,c)"));

        let r = compose(&term("a(*,c)"), &[term("a(*,*)")]).unwrap();
        assert_eq!(r, term("a(a(*,*),c)"));
        assert_eq!(r.arity(), 2);
    }

    #[test]
    fn compose_argument_errors() {
        assert_eq!(
            compose(&term("a(*,*)"), &[term("c")]),
            Err(Error::ArgumentCount {
                expected: 2,
                got: 1
            })
        );
        let sigma: RankedAlphabet = "a/2 c/0".parse().unwrap();
        assert!(matches!(
            compose_checked(&sigma, &term("a(*,*)"), &[term("c"), term("d")]),
            Err(Error::Alphabet(_))
        ));
    }

    #[test]
    fn comb_examples() {
        let t = term("a(*,*)");
        assert_eq!(comb(&t, &syms(&["p", "q"])).unwrap(), parse_tree("a(p,q)").unwrap());
        assert_eq!(
            comb(&t, &syms(&["p", "q", "r"])).unwrap(),
            parse_tree("a(a(p,q),r)").unwrap()
        );
        assert!(matches!(comb(&t, &syms(&["p"])), Err(Error::Size(_))));
    }

    #[test]
    fn comb_matches_iterated_compose() {
        let t = term("a(*,c)");
        // arity 1 term: comb needs binary t
        assert!(comb(&t, &syms(&["p", "q"])).is_err());

        let t = term("a(a(*,c),*)");
        let leaf = |s: &str| term(s);
        let step1 = compose(&t, &[leaf("p"), leaf("q")]).unwrap();
        let step2 = compose(&t, &[step1, leaf("r")]).unwrap();
        assert_eq!(comb(&t, &syms(&["p", "q", "r"])).unwrap(), step2.into_tree());
    }
}
