use std::collections::BTreeSet;

use serde::Serialize;

use super::comb::comb_dfa;
use super::search::{find_rotation_term, RotationSearch, RotationWitness};
use super::tables::MinDbta;
use crate::grammar::CnfGrammar;
use crate::trees::Symbol;
use crate::walking::{to_dbta, Dtwa};
use crate::words::{format_word, verify_separator, Dfa, SeparationReport};
use crate::{Error, Result};

/// Result of a completed extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionReport {
    pub witness: RotationWitness,
    pub dfa: Dfa,
    pub verification: SeparationReport,
}

impl ExtractionReport {
    pub fn verified(&self) -> bool {
        self.verification.separates
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extraction {
    Done(ExtractionReport),
    /// The rotation search found nothing within `bound` nodes.
    Exhausted { bound: usize },
}

#[derive(Serialize)]
struct Json<'a> {
    status: &'static str,
    bound: Option<usize>,
    term: Option<String>,
    found_at_size: Option<usize>,
    fingerprint: Option<&'a str>,
    dfa: Option<String>,
    verified: Option<bool>,
    violation_g: Option<String>,
    violation_h: Option<String>,
}

impl Extraction {
    /// Pretty-printed JSON document describing the outcome.
    pub fn to_json(&self) -> String {
        let doc = match self {
            Extraction::Exhausted { bound } => Json {
                status: "exhausted",
                bound: Some(*bound),
                term: None,
                found_at_size: None,
                fingerprint: None,
                dfa: None,
                verified: None,
                violation_g: None,
                violation_h: None,
            },
            Extraction::Done(r) => Json {
                status: if r.verified() { "verified" } else { "not-separating" },
                bound: None,
                term: Some(r.witness.term.to_string()),
                found_at_size: Some(r.witness.found_at_size),
                fingerprint: Some(&r.witness.fingerprint),
                dfa: Some(r.dfa.to_string()),
                verified: Some(r.verified()),
                violation_g: r.verification.violation_g.as_deref().map(format_word),
                violation_h: r.verification.violation_h.as_deref().map(format_word),
            },
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }
}

/// Turns a walking automaton that separates the obfuscations of `g` and
/// `h` into a word automaton separating `L(g)` from `L(h)`, and checks the
/// result exactly.
pub fn extract_separator(w: &Dtwa, g: &CnfGrammar, h: &CnfGrammar, bound: usize) -> Result<Extraction> {
    let gamma: BTreeSet<Symbol> = g.terminals().union(h.terminals()).cloned().collect();
    for x in &gamma {
        if w.alphabet().arity(x) != Some(0) {
            return Err(Error::alphabet(format!(
                "terminal `{x}` is not a leaf letter of the walking automaton"
            )));
        }
    }
    let min = MinDbta::new(&to_dbta(w));
    let witness = match find_rotation_term(min.dbta(), bound)? {
        RotationSearch::Found(witness) => witness,
        RotationSearch::Exhausted { bound } => return Ok(Extraction::Exhausted { bound }),
    };
    let gamma: Vec<Symbol> = gamma.into_iter().collect();
    let dfa = comb_dfa(min.dbta(), &witness.term, &gamma)?;
    let verification = verify_separator(&dfa, g, h)?;
    Ok(Extraction::Done(ExtractionReport {
        witness,
        dfa,
        verification,
    }))
}
