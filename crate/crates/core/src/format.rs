//! Plain-text automaton files.
//!
//! ```text
//! # comment
//! n k
//! δ(0,0) ... δ(0,k-1)
//! ...
//! δ(n-1,0) ... δ(n-1,k-1)
//! ```
//!
//! DFA files add `initial q` and `accepting q ...` lines after the table.

use std::fmt::Write;

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::gadgets::DfaWithAcceptance;
use crate::state_set::StateSet;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            (!tokens.is_empty()).then_some((i + 1, tokens))
        })
        .collect()
}

fn number(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| {
        err(
            line,
            format!("expected a nonnegative integer, found {token:?}"),
        )
    })
}

fn parse_table<'a>(
    lines: &mut impl Iterator<Item = &'a (usize, Vec<&'a str>)>,
) -> Result<Automaton> {
    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header \"n k\""))?;
    if header.len() != 2 {
        return Err(err(*hline, "header must be two integers \"n k\""));
    }
    let n = number(*hline, header[0])?;
    let k = number(*hline, header[1])?;
    if n == 0 || k == 0 {
        return Err(err(*hline, "n and k must be positive"));
    }
    let mut table = Vec::with_capacity(n * k);
    let mut last = *hline;
    for q in 0..n {
        let Some((line, row)) = lines.next() else {
            return Err(err(last, format!("expected {n} rows, found {q}")));
        };
        last = *line;
        if row.len() != k {
            return Err(err(
                *line,
                format!("row {q} has {} entries, expected {k}", row.len()),
            ));
        }
        for tok in row {
            let t = number(*line, tok)?;
            if t >= n {
                return Err(err(*line, format!("entry {t} out of range [0, {n})")));
            }
            table.push(t);
        }
    }
    Automaton::new(n, k, table)
}

pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let lines = content_lines(text);
    let mut it = lines.iter();
    let a = parse_table(&mut it)?;
    if let Some((line, _)) = it.next() {
        return Err(err(
            *line,
            format!("expected {} rows, found more", a.num_states()),
        ));
    }
    Ok(a)
}

pub fn parse_dfa(text: &str) -> Result<DfaWithAcceptance> {
    let lines = content_lines(text);
    let mut it = lines.iter();
    let a = parse_table(&mut it)?;
    let n = a.num_states();
    let mut initial = None;
    let mut accepting = None;
    for (line, tokens) in it {
        let state = |t: &str| -> Result<usize> {
            let q = number(*line, t)?;
            if q >= n {
                return Err(err(*line, format!("state {q} out of range [0, {n})")));
            }
            Ok(q)
        };
        match tokens[0] {
            "initial" if tokens.len() == 2 && initial.is_none() => {
                initial = Some(state(tokens[1])?)
            }
            "accepting" if accepting.is_none() => {
                let qs = tokens[1..]
                    .iter()
                    .map(|t| state(t))
                    .collect::<Result<Vec<_>>>()?;
                accepting = Some(StateSet::from_states(n, qs)?);
            }
            _ => return Err(err(*line, "expected `initial q` or `accepting q ...`")),
        }
    }
    let last = lines.last().map_or(1, |(l, _)| *l);
    let initial = initial.ok_or_else(|| err(last, "missing `initial` line"))?;
    let accepting = accepting.ok_or_else(|| err(last, "missing `accepting` line"))?;
    DfaWithAcceptance::new(a, initial, accepting)
}

/// Serializes the table; `names`, when given, are appended as row comments.
pub fn write_automaton(a: &Automaton, names: Option<&[String]>) -> String {
    let mut out = format!("{} {}\n", a.num_states(), a.num_letters());
    for q in 0..a.num_states() {
        let row: Vec<String> = (0..a.num_letters())
            .map(|l| a.step(q, l).to_string())
            .collect();
        out.push_str(&row.join(" "));
        if let Some(name) = names.and_then(|ns| ns.get(q)) {
            let _ = write!(out, "  # {q}: {name}");
        }
        out.push('\n');
    }
    out
}

pub fn write_dfa(d: &DfaWithAcceptance) -> String {
    let mut out = write_automaton(&d.automaton, None);
    let acc: Vec<String> = d.accepting.iter().map(|q| q.to_string()).collect();
    let _ = writeln!(out, "initial {}", d.initial);
    let _ = writeln!(out, "accepting {}", acc.join(" "));
    out
}
