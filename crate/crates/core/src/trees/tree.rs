use std::collections::BTreeSet;
use std::fmt;

use super::Symbol;
use crate::{Error, Result};

/// Finite, sibling-ordered, labeled tree.
///
/// The derived order compares labels in preorder, which is the
/// lexicographic order used for enumeration and witness tie-breaking.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    label: Symbol,
    children: Vec<Tree>,
}

/// Direction of a single rotation at a binary node labeled `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationDirection {
    /// `b(b(x,y),z)` becomes `b(x,b(y,z))`.
    Right,
    /// `b(x,b(y,z))` becomes `b(b(x,y),z)`.
    Left,
}

impl RotationDirection {
    pub fn inverse(self) -> Self {
        match self {
            RotationDirection::Right => RotationDirection::Left,
            RotationDirection::Left => RotationDirection::Right,
        }
    }
}

impl Tree {
    pub fn new(label: impl Into<Symbol>, children: Vec<Tree>) -> Self {
        Tree {
            label: label.into(),
            children,
        }
    }

    pub fn leaf(label: impl Into<Symbol>) -> Self {
        Tree::new(label, Vec::new())
    }

    pub fn label(&self) -> &Symbol {
        &self.label
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tree::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(Tree::depth).max().unwrap_or(0)
    }

    /// Leaf labels from left to right.
    pub fn leaves(&self) -> Vec<&Symbol> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Symbol>) {
        if self.children.is_empty() {
            out.push(&self.label);
        }
        for c in &self.children {
            c.collect_leaves(out);
        }
    }

    pub(crate) fn port_count(&self) -> usize {
        if self.children.is_empty() {
            usize::from(self.label.is_port())
        } else {
            self.children.iter().map(Tree::port_count).sum()
        }
    }

    /// Subtree at a path of 0-based child indices.
    pub fn subtree(&self, path: &[usize]) -> Option<&Tree> {
        path.iter().try_fold(self, |t, &i| t.children.get(i))
    }

    /// Labels in preorder.
    pub fn preorder(&self) -> Vec<&Symbol> {
        let mut out = Vec::with_capacity(self.size());
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            out.push(&t.label);
            stack.extend(t.children.iter().rev());
        }
        out
    }

    /// Applies one rotation at the node reached by `path` (0-based child
    /// indices). The node and the child being rotated through must carry
    /// the same letter with exactly two children.
    pub fn rotate_at(&self, path: &[usize], direction: RotationDirection) -> Result<Tree> {
        match path.split_first() {
            None => self.rotate_root(direction),
            Some((&i, rest)) => {
                let child = self.children.get(i).ok_or_else(|| {
                    Error::Shape(format!("node has no child {i} on rotation path"))
                })?;
                let mut out = self.clone();
                out.children[i] = child.rotate_at(rest, direction)?;
                Ok(out)
            }
        }
    }

    fn rotate_root(&self, direction: RotationDirection) -> Result<Tree> {
        let b = &self.label;
        let binary = |t: &Tree| t.children.len() == 2 && &t.label == b;
        if !binary(self) {
            return Err(Error::Shape(format!("`{self}` is not binary at the root")));
        }
        let (left, right) = (&self.children[0], &self.children[1]);
        match direction {
            RotationDirection::Right if binary(left) => Ok(Tree::new(
                b,
                vec![
                    left.children[0].clone(),
                    Tree::new(b, vec![left.children[1].clone(), right.clone()]),
                ],
            )),
            RotationDirection::Left if binary(right) => Ok(Tree::new(
                b,
                vec![
                    Tree::new(b, vec![left.clone(), right.children[0].clone()]),
                    right.children[1].clone(),
                ],
            )),
            _ => Err(Error::Shape(format!(
                "`{self}` cannot be rotated {direction:?}"
            ))),
        }
    }
}

/// Left-to-right sequence of leaf labels. With a filter, only leaves whose
/// label is in the filter are kept.
pub fn leaf_word(tree: &Tree, filter: Option<&BTreeSet<Symbol>>) -> Vec<Symbol> {
    tree.leaves()
        .into_iter()
        .filter(|s| filter.is_none_or(|f| f.contains(*s)))
        .cloned()
        .collect()
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
