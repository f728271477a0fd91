use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "automaton must have at least one state and one letter (got n = {states}, k = {letters})"
    )]
    EmptyAutomaton { states: usize, letters: usize },

    #[error("transition table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },

    #[error("transition ({state}, {letter}) leads to {target}, outside [0, {states})")]
    TargetOutOfRange {
        state: usize,
        letter: usize,
        target: usize,
        states: usize,
    },

    #[error("state {state} out of range for an automaton with {states} states")]
    StateOutOfRange { state: usize, states: usize },

    #[error("letter {letter} out of range for an alphabet of {letters} letters")]
    LetterOutOfRange { letter: usize, letters: usize },

    #[error("state set is bound to {found} states but the automaton has {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: usize },

    #[error("subset of size {size} exceeds the configured bound {bound}")]
    SubsetTooLarge { size: usize, bound: usize },

    #[error("automaton is not synchronizing")]
    NotSynchronizing,

    #[error("oracle refuses automata with {states} states (cap is {cap})")]
    OracleCapExceeded { states: usize, cap: usize },

    #[error("DFA {index} uses {found} letters, expected {expected}")]
    AlphabetMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("DFA {index} has no accepting state")]
    NoAcceptingState { index: usize },

    #[error("at least one DFA is required")]
    NoDfas,

    #[error("expected a binary automaton, got {letters} letters")]
    NotBinary { letters: usize },

    #[error("no automaton satisfying the constraint found after {attempts} attempts")]
    AttemptCapExceeded { attempts: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
