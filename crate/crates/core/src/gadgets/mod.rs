//! Reduction constructions as automaton transformations, and seeded random
//! automata.

mod binarize;
mod intersection;
mod large_extend;
mod random;
mod sink;

pub use binarize::binarize;
pub use intersection::{intersection_gadget, product_nonempty};
pub use large_extend::large_extend_gadget;
pub use random::{random_automaton, random_dfa, Constraint, ATTEMPT_CAP};
pub use sink::sink_binarize;

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::state_set::StateSet;

/// A DFA: an automaton with an initial state and accepting states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfaWithAcceptance {
    pub automaton: Automaton,
    pub initial: usize,
    pub accepting: StateSet,
}

impl DfaWithAcceptance {
    pub fn new(automaton: Automaton, initial: usize, accepting: StateSet) -> Result<Self> {
        automaton.check_state(initial)?;
        automaton.check_set(&accepting)?;
        Ok(DfaWithAcceptance {
            automaton,
            initial,
            accepting,
        })
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        let end = word
            .iter()
            .fold(self.initial, |q, &a| self.automaton.step(q, a));
        self.accepting.contains(end)
    }

    /// The DFA restricted to states reachable from the initial state.
    pub fn trim(&self) -> DfaWithAcceptance {
        let a = &self.automaton;
        let mut reach = StateSet::empty(a.num_states());
        let mut todo = vec![self.initial];
        reach.insert(self.initial);
        while let Some(q) = todo.pop() {
            for l in 0..a.num_letters() {
                let t = a.step(q, l);
                if reach.insert(t) {
                    todo.push(t);
                }
            }
        }
        let (sub, old) = a.restrict(&reach).expect("reachable set is closed");
        let new_of = |q: usize| old.binary_search(&q).expect("reachable");
        let accepting = StateSet::from_states(
            sub.num_states(),
            old.iter()
                .enumerate()
                .filter(|(_, &q)| self.accepting.contains(q))
                .map(|(i, _)| i),
        )
        .expect("in range");
        DfaWithAcceptance {
            automaton: sub,
            initial: new_of(self.initial),
            accepting,
        }
    }
}

/// A constructed automaton, its designated subset, and a name for every
/// state describing its role in the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetOutput {
    pub automaton: Automaton,
    pub subset: StateSet,
    pub names: Vec<String>,
}

impl GadgetOutput {
    fn new(automaton: Automaton, subset: StateSet, names: Vec<String>) -> Self {
        debug_assert_eq!(names.len(), automaton.num_states());
        debug_assert_eq!(subset.universe(), automaton.num_states());
        GadgetOutput {
            automaton,
            subset,
            names,
        }
    }

    /// Index of the state with the given name.
    pub fn state(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Names are pairwise distinct and cover every state.
    pub fn names_are_bijective(&self) -> bool {
        let mut sorted: Vec<&String> = self.names.iter().collect();
        sorted.sort();
        sorted.dedup();
        sorted.len() == self.automaton.num_states()
            && self.names.len() == self.automaton.num_states()
    }
}

fn require_binary(a: &Automaton) -> Result<()> {
    if a.num_letters() != 2 {
        return Err(Error::NotBinary {
            letters: a.num_letters(),
        });
    }
    Ok(())
}
