//! Words acting on subsets of states of complete deterministic automata:
//! extending (`|S·w⁻¹| > |S|`), totally extending (`S·w⁻¹ = Q`), avoiding
//! (`Q·w ∩ S = ∅`) and resizing (`|S·w⁻¹| ≠ |S|`), with an exhaustive
//! subset-search oracle and the reduction constructions used to show
//! hardness of the general problems.

pub mod automaton;
pub mod avoid;
pub mod error;
pub mod extend;
pub mod format;
pub mod gadgets;
pub mod oracle;
pub mod pair;
pub mod resize;
pub mod scc;
mod search;
pub mod state_set;
pub mod word;

pub use automaton::Automaton;
pub use error::{Error, Result};
pub use search::{SearchBudget, SearchResult};
pub use state_set::StateSet;
pub use word::Word;
