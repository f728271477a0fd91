//! The `preimage` command line.

pub mod check;
pub mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use preimage::format::{parse_automaton, parse_dfa, write_automaton};
use preimage::gadgets::{
    binarize, intersection_gadget, large_extend_gadget, random_automaton, sink_binarize,
    Constraint, GadgetOutput,
};
use preimage::oracle::{oracle_shortest_reset, OracleConfig, DEFAULT_STATE_CAP};
use preimage::pair::{greedy_reset_word, minimal_rank_word};
use preimage::{Automaton, StateSet, Word};

use check::{MethodChoice, Request};
use report::{Classification, Problem};

pub const DEFAULT_NODE_LIMIT: usize = 50_000_000;

/// Exit code for usage, input and internal errors.
pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "preimage",
    version,
    about = "Extending, avoiding and resizing words for subsets of automaton states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ResetMethod {
    Greedy,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstraintArg {
    None,
    StronglyConnected,
    Synchronizing,
    Permutation,
}

impl From<ConstraintArg> for Constraint {
    fn from(c: ConstraintArg) -> Self {
        match c {
            ConstraintArg::None => Constraint::None,
            ConstraintArg::StronglyConnected => Constraint::StronglyConnected,
            ConstraintArg::Synchronizing => Constraint::Synchronizing,
            ConstraintArg::Permutation => Constraint::Permutation,
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct CheckArgs {
    /// Automaton file.
    pub file: PathBuf,
    /// Comma-separated 0-based states; an empty string is the empty set.
    #[arg(long, allow_hyphen_values = true)]
    pub subset: String,
    #[arg(long, value_enum)]
    pub problem: Problem,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodChoice,
    /// Ask whether a word of length at most L exists.
    #[arg(long, value_name = "L")]
    pub max_len: Option<usize>,
    /// Compute a witness even where a decision alone is cheaper.
    #[arg(long)]
    pub witness: bool,
    #[arg(long)]
    pub json: bool,
    /// Include the elapsed time in the report.
    #[arg(long)]
    pub timing: bool,
    /// Maximum number of subsets stored by a search.
    #[arg(long, env = "PREIMAGE_NODE_LIMIT", default_value_t = DEFAULT_NODE_LIMIT)]
    pub node_limit: usize,
    /// Largest automaton the exhaustive oracle accepts (at most 64).
    #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
    pub oracle_cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum GadgetCommand {
    /// Strongly connected automaton whose subset is extensible iff the DFAs share a word.
    Intersection {
        /// DFA files: an automaton followed by `initial q` and `accepting q ...` lines.
        #[arg(required = true)]
        dfas: Vec<PathBuf>,
    },
    /// Two-letter automaton preserving connectivity and (total) extensibility.
    Binarize {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
    },
    /// Synchronizing binary automaton with a sink, preserving extensibility.
    Sink {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
    },
    /// Subset with two missing states, extensible iff the input subset is totally extensible.
    LargeExtend {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        #[arg(long)]
        f: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide a problem for a subset and optionally produce a witness.
    Check(CheckArgs),
    /// Structural properties of an automaton.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Minimal rank and a word attaining it.
    Rank {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// A reset word, greedy or shortest.
    Reset {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "greedy")]
        method: ResetMethod,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        oracle_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Reduction constructions; prints the automaton with state names and the subset.
    #[command(subcommand)]
    Gadget(GadgetCommand),
    /// Seeded random automaton.
    Random {
        #[arg(long)]
        states: usize,
        #[arg(long)]
        letters: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "none")]
        constraint: ConstraintArg,
    },
    /// Shortest word by exhaustive subset search.
    Oracle {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        #[arg(long, value_enum)]
        goal: Problem,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        max_states: usize,
        #[arg(long, env = "PREIMAGE_NODE_LIMIT", default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: usize,
    },
}

/// Text to print and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError(pub String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<preimage::Error> for CliError {
    fn from(e: preimage::Error) -> Self {
        CliError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Automaton, CliError> {
    parse_automaton(&read(path)?).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

pub fn parse_subset(text: &str, n: usize) -> Result<StateSet, CliError> {
    let states = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CliError(format!("bad state {t:?} in subset")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StateSet::from_states(n, states)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn shown(w: &Word, k: usize) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        w.render(k)
    }
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
}

fn check(req: Request<'_>, json: bool) -> Result<Output, CliError> {
    let report = req.run()?;
    let code = report.answer.exit_code();
    let text = if json {
        report
            .to_checked_json()
            .map_err(|e| CliError(format!("internal error: {e}")))?
            + "\n"
    } else {
        report.to_text()
    };
    Ok(Output { text, code })
}

fn gadget_text(kind: &str, g: &GadgetOutput) -> String {
    let subset: Vec<String> = g.subset.iter().map(|q| q.to_string()).collect();
    format!(
        "# gadget: {kind}\n# subset: {}\n{}",
        subset.join(","),
        write_automaton(&g.automaton, Some(&g.names))
    )
}

fn gadget(cmd: GadgetCommand) -> Result<Output, CliError> {
    let (kind, g) = match cmd {
        GadgetCommand::Intersection { dfas } => {
            let parsed = dfas
                .iter()
                .map(|p| {
                    parse_dfa(&read(p)?)
                        .map(|d| d.trim())
                        .map_err(|e| CliError(format!("{}: {e}", p.display())))
                })
                .collect::<Result<Vec<_>, _>>()?;
            ("intersection", intersection_gadget(&parsed)?)
        }
        GadgetCommand::Binarize { file, subset } => {
            let a = load(&file)?;
            let s = parse_subset(&subset, a.num_states())?;
            ("binarize", binarize(&a, &s)?)
        }
        GadgetCommand::Sink { file, subset } => {
            let a = load(&file)?;
            let s = parse_subset(&subset, a.num_states())?;
            ("sink", sink_binarize(&a, &s)?)
        }
        GadgetCommand::LargeExtend { file, subset, f } => {
            let a = load(&file)?;
            let s = parse_subset(&subset, a.num_states())?;
            ("large-extend", large_extend_gadget(&a, &s, f)?)
        }
    };
    Ok(Output::ok(gadget_text(kind, &g)))
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Check(c) => {
            let a = load(&c.file)?;
            let s = parse_subset(&c.subset, a.num_states())?;
            let req = Request {
                automaton: &a,
                subset: &s,
                problem: c.problem,
                method: c.method,
                max_len: c.max_len,
                witness: c.witness,
                timing: c.timing,
                node_limit: c.node_limit,
                oracle_cap: c.oracle_cap,
            };
            check(req, c.json)
        }
        Command::Oracle {
            file,
            subset,
            goal,
            max_len,
            json,
            max_states,
            node_limit,
        } => {
            let a = load(&file)?;
            let s = parse_subset(&subset, a.num_states())?;
            let req = Request {
                automaton: &a,
                subset: &s,
                problem: goal,
                method: MethodChoice::Oracle,
                max_len,
                witness: true,
                timing: false,
                node_limit,
                oracle_cap: max_states,
            };
            check(req, json)
        }
        Command::Classify { file, json } => {
            let c = Classification::of(&load(&file)?);
            let text = if json {
                pretty(serde_json::to_value(&c).expect("serializable"))
            } else {
                let sink = c.sink_state.map_or("none".to_string(), |q| q.to_string());
                format!(
                    "states: {}\nletters: {}\nstrongly-connected: {}\nsynchronizing: {}\npermutation: {}\nsink-state: {sink}\n",
                    c.states,
                    c.letters,
                    yes_no(c.strongly_connected),
                    yes_no(c.synchronizing),
                    yes_no(c.permutation),
                )
            };
            Ok(Output::ok(text))
        }
        Command::Rank { file, json } => {
            let a = load(&file)?;
            let r = minimal_rank_word(&a);
            let k = a.num_letters();
            let image: Vec<usize> = r.image.iter().collect();
            let text = if json {
                pretty(json!({
                    "rank": r.rank,
                    "word": r.word.render(k),
                    "word_letters": r.word.letters(),
                    "image": image,
                }))
            } else {
                format!(
                    "rank: {}\nword: {}\nimage: {}\n",
                    r.rank,
                    shown(&r.word, k),
                    r.image
                )
            };
            Ok(Output::ok(text))
        }
        Command::Reset {
            file,
            method,
            oracle_cap,
            json,
        } => {
            let a = load(&file)?;
            let word = match method {
                ResetMethod::Greedy => greedy_reset_word(&a),
                ResetMethod::Oracle => {
                    oracle_shortest_reset(&a, &OracleConfig::with_max_states(oracle_cap))?
                }
            };
            if let Some(w) = &word {
                let img = a.apply_word(&StateSet::full(a.num_states()), w)?;
                assert_eq!(
                    img.len(),
                    1,
                    "internal error: reset word {w} fails re-verification"
                );
            }
            let k = a.num_letters();
            let name = match method {
                ResetMethod::Greedy => "greedy",
                ResetMethod::Oracle => "oracle",
            };
            let text = if json {
                pretty(json!({
                    "method": name,
                    "synchronizing": word.is_some(),
                    "word": word.as_ref().map(|w| w.render(k)),
                    "word_letters": word.as_ref().map(|w| w.letters().to_vec()),
                    "length": word.as_ref().map(Word::len),
                }))
            } else {
                let mut t = format!(
                    "method: {name}\nsynchronizing: {}\n",
                    yes_no(word.is_some())
                );
                if let Some(w) = &word {
                    let _ = write!(t, "length: {}\nword: {}\n", w.len(), shown(w, k));
                }
                t
            };
            Ok(Output {
                text,
                code: if word.is_some() { 0 } else { 1 },
            })
        }
        Command::Gadget(g) => gadget(g),
        Command::Random {
            states,
            letters,
            seed,
            constraint,
        } => {
            let a = random_automaton(states, letters, seed, constraint.into())?;
            Ok(Output::ok(write_automaton(&a, None)))
        }
    }
}
