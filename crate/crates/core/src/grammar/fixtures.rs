//! Small grammars over the terminals `p` and `q`.

use super::CnfGrammar;

fn parse(src: &str) -> CnfGrammar {
    src.parse().expect("fixture grammar is valid")
}

/// The single word `pq`.
pub fn pq() -> CnfGrammar {
    parse("S -> P Q; P -> p; Q -> q")
}

/// `pⁿqⁿ` for `n ≥ 1`.
pub fn pn_qn() -> CnfGrammar {
    parse("S -> P Q | P B; B -> S Q; P -> p; Q -> q")
}

/// Palindromes of length at least 2. In every derivation the right child
/// of the root is a terminal leaf.
pub fn palindromes() -> CnfGrammar {
    parse(
        "S -> Lp P | Lq Q
         Lp -> p | P S | P U
         Lq -> q | Q S | Q U
         U -> p | q
         P -> p; Q -> q",
    )
}

/// Non-palindromes. In every derivation the left child of the root is a
/// terminal leaf.
pub fn non_palindromes() -> CnfGrammar {
    parse(
        "H -> P Rp | Q Rq
         Rp -> q | W Q | H P
         Rq -> p | W P | H Q
         W -> p | q | P W | Q W
         P -> p; Q -> q",
    )
}

/// Words starting with `p`.
pub fn p_initial() -> CnfGrammar {
    parse("S -> P W | p; W -> p | q | P W | Q W; P -> p; Q -> q")
}

/// Words starting with `q`.
pub fn q_initial() -> CnfGrammar {
    parse("S -> Q W | q; W -> p | q | P W | Q W; P -> p; Q -> q")
}

/// `S -> S S | p`: the word `pⁿ` has Catalan(n - 1) derivations.
pub fn ambiguous() -> CnfGrammar {
    parse("S -> S S | p")
}
