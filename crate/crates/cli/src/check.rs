//! Method selection for `check` and `oracle`.

use std::time::Instant;

use clap::ValueEnum;

use preimage::avoid::avoiding_word;
use preimage::extend::{
    shortest_extending_word_small, totally_extending_word_small, totally_extensible_synchronizing,
};
use preimage::oracle::{oracle_shortest, Goal, OracleConfig};
use preimage::pair::avoidable_state_with_hint;
use preimage::resize::{resizable_decision_fast, shortest_resizing_word};
use preimage::{Automaton, Error, SearchBudget, StateSet, Word};

use crate::report::{Answer, Classification, Method, Problem, Stats, WitnessReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Auto,
    Poly,
    Oracle,
}

pub struct Request<'a> {
    pub automaton: &'a Automaton,
    pub subset: &'a StateSet,
    pub problem: Problem,
    pub method: MethodChoice,
    pub max_len: Option<usize>,
    pub witness: bool,
    pub timing: bool,
    pub node_limit: usize,
    pub oracle_cap: usize,
}

/// What one method said.
struct Outcome {
    exists: bool,
    word: Option<Word>,
    /// The word is a shortest one.
    shortest: bool,
    method: Method,
    stats: Stats,
}

fn goal(p: Problem) -> Goal {
    match p {
        Problem::Extend => Goal::Extending,
        Problem::ExtendTotal => Goal::TotallyExtending,
        Problem::Avoid => Goal::Avoiding,
        Problem::Resize => Goal::Resizing,
    }
}

fn is_budget(e: &Error) -> bool {
    matches!(
        e,
        Error::BudgetExceeded { .. }
            | Error::SubsetTooLarge { .. }
            | Error::OracleCapExceeded { .. }
    )
}

/// Whether `w` solves the problem; also returns `|S·w⁻¹|`.
pub fn verify(a: &Automaton, s: &StateSet, problem: Problem, w: &Word) -> (bool, usize) {
    let pre = a.preimage_word(s, w).expect("witness letters in range");
    let ok = match problem {
        Problem::Extend => pre.len() > s.len(),
        Problem::ExtendTotal => pre.is_full(),
        Problem::Avoid => pre.is_empty(),
        Problem::Resize => !w.is_empty() && pre.len() != s.len(),
    };
    (ok, pre.len())
}

impl Request<'_> {
    fn budget(&self) -> SearchBudget {
        SearchBudget::with_node_limit(self.node_limit)
    }

    fn oracle_config(&self) -> OracleConfig {
        OracleConfig {
            max_states: self.oracle_cap,
            node_limit: self.node_limit,
        }
    }

    fn oracle_allowed(&self) -> bool {
        self.automaton.num_states() <= self.oracle_cap.min(preimage::oracle::HARD_STATE_CAP)
    }

    fn wants_word(&self) -> bool {
        self.witness || self.max_len.is_some()
    }

    fn oracle(&self) -> Result<Outcome, Error> {
        let word = oracle_shortest(
            self.automaton,
            self.subset,
            goal(self.problem),
            &self.oracle_config(),
        )?;
        Ok(Outcome {
            exists: word.is_some(),
            word,
            shortest: true,
            method: Method::Oracle,
            stats: Stats::default(),
        })
    }

    fn searched(word: Option<Word>, nodes: usize, shortest: bool) -> Outcome {
        Outcome {
            exists: word.is_some(),
            word,
            shortest,
            method: Method::Poly,
            stats: Stats {
                nodes_expanded: Some(nodes),
                ..Stats::default()
            },
        }
    }

    fn poly(&self, synchronizing: bool) -> Result<Outcome, Error> {
        let (a, s) = (self.automaton, self.subset);
        let auto = self.method == MethodChoice::Auto;
        match self.problem {
            Problem::Extend => {
                let r = shortest_extending_word_small(a, s, &self.budget())?;
                Ok(Self::searched(r.word, r.nodes_expanded, true))
            }
            Problem::ExtendTotal => {
                if auto && synchronizing {
                    let r = totally_extensible_synchronizing(a, s, self.wants_word())?;
                    return Ok(Outcome {
                        exists: r.extensible,
                        word: r.witness,
                        shortest: false,
                        method: Method::FastPath,
                        stats: Stats::default(),
                    });
                }
                let r = totally_extending_word_small(a, s, &self.budget())?;
                Ok(Self::searched(r.word, r.nodes_expanded, false))
            }
            Problem::Avoid => {
                if auto && s.len() == 1 && !self.wants_word() {
                    let q = s.first().expect("one state");
                    let exists = avoidable_state_with_hint(a, q, Some(synchronizing))?;
                    return Ok(Outcome {
                        exists,
                        word: None,
                        shortest: false,
                        method: Method::Poly,
                        stats: Stats::default(),
                    });
                }
                let r = avoiding_word(a, s, &self.budget())?;
                Ok(Self::searched(r.word, r.nodes_expanded, false))
            }
            Problem::Resize => {
                if auto && !self.wants_word() {
                    if let Some(exists) = resizable_decision_fast(s, synchronizing) {
                        return Ok(Outcome {
                            exists,
                            word: None,
                            shortest: false,
                            method: Method::FastPath,
                            stats: Stats::default(),
                        });
                    }
                }
                let r = shortest_resizing_word(a, s)?;
                Ok(Outcome {
                    exists: r.word.is_some(),
                    word: r.word,
                    shortest: true,
                    method: Method::Poly,
                    stats: Stats {
                        basis_size: Some(r.basis_size),
                        vectors_checked: Some(r.vectors_checked),
                        ..Stats::default()
                    },
                })
            }
        }
    }

    fn run_methods(&self, class: &Classification) -> Result<Outcome, Error> {
        match self.method {
            MethodChoice::Oracle => self.oracle(),
            MethodChoice::Poly => self.poly(class.synchronizing),
            MethodChoice::Auto => match self.poly(class.synchronizing) {
                Err(e) if is_budget(&e) && self.oracle_allowed() => self.oracle(),
                other => other,
            },
        }
    }

    pub fn run(&self) -> Result<WitnessReport, Error> {
        let start = Instant::now();
        let (a, s) = (self.automaton, self.subset);
        let class = Classification::of(a);
        let mut note = None;
        let outcome = match self.run_methods(&class) {
            Ok(o) => Some(o),
            Err(e) if is_budget(&e) => {
                note = Some(e.to_string());
                None
            }
            Err(e) => return Err(e),
        };

        let mut method = self.method_label();
        let mut answer = Answer::UnknownBudget;
        let mut word = None;
        let mut stats = Stats::default();
        if let Some(mut o) = outcome {
            // a witness longer than the bound from a non-shortest method
            // decides nothing; the oracle may settle it
            if let (Some(limit), Some(w)) = (self.max_len, &o.word) {
                if !o.shortest
                    && w.len() > limit
                    && self.method == MethodChoice::Auto
                    && self.oracle_allowed()
                {
                    match self.oracle() {
                        Ok(exact) => o = exact,
                        Err(e) if is_budget(&e) => note = Some(e.to_string()),
                        Err(e) => return Err(e),
                    }
                }
            }
            if let Some(w) = &o.word {
                let (ok, _) = verify(a, s, self.problem, w);
                assert!(ok, "internal error: witness {w} fails re-verification");
            }
            answer = match (self.max_len, &o.word) {
                (_, _) if !o.exists => Answer::No,
                (None, _) => Answer::Yes,
                (Some(limit), Some(w)) if w.len() <= limit => Answer::Yes,
                (Some(_), Some(_)) if o.shortest => Answer::No,
                (Some(_), _) => {
                    note.get_or_insert_with(|| {
                        "witness found is longer than the bound and may not be shortest".into()
                    });
                    Answer::Unknown
                }
            };
            method = o.method;
            word = o.word;
            stats = o.stats;
        }
        if self.timing {
            stats.elapsed_us = Some(start.elapsed().as_micros() as u64);
        }
        let k = a.num_letters();
        let preimage_size = word.as_ref().map(|w| verify(a, s, self.problem, w).1);
        Ok(WitnessReport {
            problem: self.problem,
            answer,
            witness: word.as_ref().map(|w| w.render(k)),
            witness_letters: word.as_ref().map(|w| w.letters().to_vec()),
            witness_length: word.as_ref().map(Word::len),
            subset: s.iter().collect(),
            subset_size: s.len(),
            preimage_size,
            max_len: self.max_len,
            method,
            note,
            stats,
            automaton: class,
        })
    }

    fn method_label(&self) -> Method {
        match self.method {
            MethodChoice::Oracle => Method::Oracle,
            _ => Method::Poly,
        }
    }
}
