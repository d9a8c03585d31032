//! S-expression parsing (`label(child,…,child)`) and the XML encoding.

use super::{Symbol, Term, Tree};
use crate::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(self.pos, |i| self.pos - i - 1) + 1;
        Error::parse(line, column, message)
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn label(&mut self) -> Result<Symbol> {
        self.skip_ws();
        if self.peek() == Some('*') {
            self.pos += 1;
            return Ok(Symbol::port());
        }
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected a label, found `{c}`")),
                None => self.error("expected a label, found end of input"),
            });
        }
        self.pos += len;
        Ok(Symbol::new(&rest[..len]))
    }

    fn tree(&mut self, depth: usize) -> Result<Tree> {
        if depth > 10_000 {
            return Err(self.error("tree nested too deeply"));
        }
        let label = self.label()?;
        self.skip_ws();
        let mut children = Vec::new();
        if self.peek() == Some('(') {
            if label.is_port() {
                return Err(self.error("port `*` cannot have children"));
            }
            self.pos += 1;
            loop {
                children.push(self.tree(depth + 1)?);
                self.skip_ws();
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(c) => return Err(self.error(format!("expected `,` or `)`, found `{c}`"))),
                    None => return Err(self.error("unclosed `(`")),
                }
            }
        }
        Ok(Tree::new(label, children))
    }

    fn finish(&mut self, tree: Tree) -> Result<Tree> {
        self.skip_ws();
        match self.peek() {
            None => Ok(tree),
            Some(c) => Err(self.error(format!("unexpected `{c}` after tree"))),
        }
    }
}

fn parse(text: &str) -> Result<Tree> {
    let mut p = Parser { src: text, pos: 0 };
    let t = p.tree(0)?;
    p.finish(t)
}

/// Parses a tree in s-expression format. Ports are rejected.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let tree = parse(text)?;
    if tree.port_count() > 0 || tree.preorder().iter().any(|s| s.is_port()) {
        return Err(Error::parse(1, 1, "port `*` in a tree; use a term"));
    }
    Ok(tree)
}

/// Parses a term in s-expression format, `*` marking ports.
pub fn parse_term(text: &str) -> Result<Term> {
    Term::new(parse(text)?)
}

/// The XML encoding: `<label>children</label>`, no attributes and no
/// whitespace.
pub fn encode_xml(tree: &Tree) -> String {
    fn go(t: &Tree, out: &mut String) {
        out.push('<');
        out.push_str(t.label().as_str());
        out.push('>');
        for c in t.children() {
            go(c, out);
        }
        out.push_str("</");
        out.push_str(t.label().as_str());
        out.push('>');
    }
    let mut out = String::new();
    go(tree, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn xml_encoding_of_the_running_example() {
        let t = parse_tree("a(b(c,d),e)").unwrap();
        assert_eq!(encode_xml(&t), "<a><b><c></c><d></d></b><e></e></a>");
        assert_eq!(encode_xml(&parse_tree("c").unwrap()), "<c></c>");
    }

    #[test]
    fn whitespace_is_insignificant() {
        let t = parse_tree(" a ( b(c , d),\n e ) ").unwrap();
        assert_eq!(t.to_string(), "a(b(c,d),e)");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_tree("a(b,)") {
            Err(Error::Parse { line: 1, column: 5, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_tree("a(b\n,c") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_tree("a(b) c").is_err());
        assert!(parse_tree("a(*,b)").is_err());
        assert!(parse_term("*(a)").is_err());
        assert_eq!(parse_term("a(*,b(*,c))").unwrap().arity(), 2);
    }

    fn arb_tree() -> impl Strategy<Value = Tree> {
        let leaf = prop::sample::select(vec!["c", "p", "q1", "x_y"]).prop_map(Tree::leaf);
        leaf.prop_recursive(4, 12, 3, |inner| {
            (
                prop::sample::select(vec!["a", "b", "f"]),
                prop::collection::vec(inner, 1..=3),
            )
                .prop_map(|(l, kids)| Tree::new(l, kids))
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(t in arb_tree().prop_filter("≤ 12 nodes", |t| t.size() <= 12)) {
            prop_assert_eq!(parse_tree(&t.to_string()).unwrap(), t);
        }
    }
}
