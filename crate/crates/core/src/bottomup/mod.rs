//! Bottom-up tree automata.
//!
//! [`Dbta`] is deterministic, with transition tables that may be partial
//! when a rejecting sink is declared; [`Nta`] is nondeterministic and is
//! turned into a [`Dbta`] by [`determinize`] or evaluated lazily through
//! [`SubsetEvaluator`].

mod dbta;
mod explore;
mod format;
mod minimize;
mod nta;
mod ops;

pub use dbta::{Dbta, DbtaBuilder, StateId};
pub use minimize::minimize;
pub use nta::{determinize, Nta, NtaBuilder, SubsetEvaluator};
pub use ops::{complement, product, BoolOp};

pub(crate) use explore::explore;

#[cfg(test)]
pub(crate) mod tests;
