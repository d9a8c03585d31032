use super::intersection::cfg_dfa_witness;
use super::{Dfa, Word};
use crate::grammar::CnfGrammar;
use crate::Result;

/// Outcome of checking that `K ⊇ L(G)` and `K ∩ L(H) = ∅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub separates: bool,
    /// A word of `G` that `K` rejects.
    pub violation_g: Option<Word>,
    /// A word of `H` that `K` accepts.
    pub violation_h: Option<Word>,
}

/// Exact check that `k` separates `L(g)` from `L(h)`.
pub fn verify_separator(k: &Dfa, g: &CnfGrammar, h: &CnfGrammar) -> Result<SeparationReport> {
    let violation_g = cfg_dfa_witness(g, &k.complement())?;
    let violation_h = cfg_dfa_witness(h, k)?;
    Ok(SeparationReport {
        separates: violation_g.is_none() && violation_h.is_none(),
        violation_g,
        violation_h,
    })
}
