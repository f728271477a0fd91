use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::DfaWithAcceptance;
use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::pair::is_synchronizing;
use crate::scc::is_strongly_connected;
use crate::state_set::StateSet;

/// Draws per constrained automaton before giving up.
pub const ATTEMPT_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Constraint {
    #[default]
    None,
    StronglyConnected,
    Synchronizing,
    Permutation,
}

impl std::str::FromStr for Constraint {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "none" => Ok(Constraint::None),
            "strongly-connected" => Ok(Constraint::StronglyConnected),
            "synchronizing" => Ok(Constraint::Synchronizing),
            "permutation" => Ok(Constraint::Permutation),
            _ => Err(format!("unknown constraint `{s}`")),
        }
    }
}

fn uniform(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Automaton {
    let table = (0..n * k).map(|_| rng.random_range(0..n)).collect();
    Automaton::new(n, k, table).expect("entries in range")
}

fn permutations(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Automaton {
    let letters: Vec<Vec<usize>> = (0..k)
        .map(|_| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    Automaton::from_letters(n, &letters).expect("permutations are valid")
}

/// Uniformly random complete automaton, deterministic in `seed`. Constraints
/// other than `Permutation` are met by rejection sampling.
pub fn random_automaton(
    n: usize,
    k: usize,
    seed: u64,
    constraint: Constraint,
) -> Result<Automaton> {
    if n == 0 || k == 0 {
        return Err(Error::EmptyAutomaton {
            states: n,
            letters: k,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let accept: fn(&Automaton) -> bool = match constraint {
        Constraint::None => return Ok(uniform(&mut rng, n, k)),
        Constraint::Permutation => return Ok(permutations(&mut rng, n, k)),
        Constraint::StronglyConnected => is_strongly_connected,
        Constraint::Synchronizing => is_synchronizing,
    };
    for _ in 0..ATTEMPT_CAP {
        let a = uniform(&mut rng, n, k);
        if accept(&a) {
            return Ok(a);
        }
    }
    Err(Error::AttemptCapExceeded {
        attempts: ATTEMPT_CAP,
    })
}

/// Random DFA with initial state 0, trimmed to its reachable part, with a
/// nonempty accepting set.
pub fn random_dfa(n: usize, k: usize, seed: u64) -> Result<DfaWithAcceptance> {
    let a = random_automaton(n, k, seed, Constraint::None)?;
    let trimmed = DfaWithAcceptance::new(a, 0, StateSet::empty(n))?.trim();
    let m = trimmed.automaton.num_states();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut accepting = StateSet::empty(m);
    while accepting.is_empty() {
        for q in 0..m {
            if rng.random_bool(0.5) {
                accepting.insert(q);
            }
        }
    }
    DfaWithAcceptance::new(trimmed.automaton, trimmed.initial, accepting)
}
