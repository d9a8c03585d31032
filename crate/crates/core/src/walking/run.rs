use std::fmt;

use super::dtwa::{Action, Dtwa, Move, Tag};
use crate::bottomup::StateId;
use crate::trees::{Symbol, Tree};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Accept,
    Reject,
    /// A configuration repeated.
    Loop,
    /// A parent move at the root.
    Escape,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Accept => "Accept",
            Outcome::Reject => "Reject",
            Outcome::Loop => "Loop",
            Outcome::Escape => "Escape",
        })
    }
}

/// Result of a run together with the number of moves made.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOutcome {
    pub outcome: Outcome,
    pub steps: usize,
}

/// One visited configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub state: StateId,
    /// 1-based child numbers from the root.
    pub path: Vec<usize>,
    pub tag: Tag,
}

pub(crate) struct Node<'t> {
    pub label: &'t Symbol,
    pub parent: Option<usize>,
    pub tag: Tag,
    pub children: Vec<usize>,
}

/// Flattens a tree into an arena in preorder.
pub(crate) fn arena(tree: &Tree) -> Vec<Node<'_>> {
    fn go<'t>(t: &'t Tree, parent: Option<usize>, tag: Tag, out: &mut Vec<Node<'t>>) -> usize {
        let id = out.len();
        out.push(Node {
            label: t.label(),
            parent,
            tag,
            children: Vec::new(),
        });
        for (i, c) in t.children().iter().enumerate() {
            let child = go(c, Some(id), Tag::Child(i + 1), out);
            out[id].children.push(child);
        }
        id
    }
    let mut out = Vec::with_capacity(tree.size());
    go(tree, None, Tag::Root, &mut out);
    out
}

fn path_of(nodes: &[Node<'_>], mut v: usize) -> Vec<usize> {
    let mut path = Vec::new();
    while let Some(p) = nodes[v].parent {
        if let Tag::Child(i) = nodes[v].tag {
            path.push(i);
        }
        v = p;
    }
    path.reverse();
    path
}

impl Dtwa {
    /// Runs the automaton from the initial state at the root.
    pub fn run(&self, tree: &Tree) -> Result<RunOutcome> {
        self.alphabet.check_tree(tree)?;
        Ok(self.simulate(tree, None))
    }

    /// [`Dtwa::run`] that also records every visited configuration.
    pub fn run_traced(&self, tree: &Tree) -> Result<(RunOutcome, Vec<TraceStep>)> {
        self.alphabet.check_tree(tree)?;
        let mut trace = Vec::new();
        let out = self.simulate(tree, Some(&mut trace));
        Ok((out, trace))
    }

    /// True iff the run accepts; loops, escapes and rejections all reject.
    pub fn accepts(&self, tree: &Tree) -> Result<bool> {
        Ok(self.run(tree)?.outcome == Outcome::Accept)
    }

    fn simulate(&self, tree: &Tree, mut trace: Option<&mut Vec<TraceStep>>) -> RunOutcome {
        let nodes = arena(tree);
        let n = self.states.len();
        let mut seen = vec![false; n * nodes.len()];
        let (mut q, mut v, mut steps) = (self.initial, 0usize, 0usize);
        loop {
            if let Some(t) = trace.as_deref_mut() {
                t.push(TraceStep {
                    state: q,
                    path: path_of(&nodes, v),
                    tag: nodes[v].tag,
                });
            }
            let slot = v * n + q;
            if seen[slot] {
                return RunOutcome {
                    outcome: Outcome::Loop,
                    steps,
                };
            }
            seen[slot] = true;
            let node = &nodes[v];
            let (next, mv) = match self.action(node.label, q, node.tag) {
                Action::Accept => {
                    return RunOutcome {
                        outcome: Outcome::Accept,
                        steps,
                    }
                }
                Action::Reject => {
                    return RunOutcome {
                        outcome: Outcome::Reject,
                        steps,
                    }
                }
                Action::Go(next, mv) => (next, mv),
            };
            steps += 1;
            v = match mv {
                Move::Stay => v,
                Move::Child(i) => node.children[i - 1],
                Move::Parent => match node.parent {
                    Some(p) => p,
                    None => {
                        return RunOutcome {
                            outcome: Outcome::Escape,
                            steps,
                        }
                    }
                },
            };
            q = next;
        }
    }
}

/// One line per visited configuration: `state @ node-path (tag)`; the
/// root path is `/`.
pub fn format_trace(dtwa: &Dtwa, trace: &[TraceStep]) -> String {
    let mut out = String::new();
    for step in trace {
        let path = if step.path.is_empty() {
            "/".to_string()
        } else {
            step.path.iter().map(|i| format!("/{i}")).collect()
        };
        out.push_str(&format!("{} @ {} ({})\n", dtwa.state_name(step.state), path, step.tag));
    }
    out
}
