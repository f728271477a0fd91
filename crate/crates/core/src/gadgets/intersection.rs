use std::collections::{HashSet, VecDeque};

use super::{DfaWithAcceptance, GadgetOutput};
use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::state_set::StateSet;

/// Builds the strongly connected automaton `D'` and subset `S` such that
/// `S` is extensible iff it is totally extensible iff the DFAs accept a
/// common word.
///
/// Layout: block 0 is `s0`, `t0`, `Γ0`; block `i >= 1` is `Q_i ∖ {f_i}`
/// followed by `Γ_i`, where `f_i` is the smallest accepting state and each
/// `Γ_i` is a cycle of `2M` copies of `f_i` (`M = Σ|Q_i|`). Letters are the
/// DFA alphabet followed by `α` and `β`.
///
/// The DFAs should be trimmed to their reachable part; otherwise strong
/// connectivity of the output is not guaranteed.
pub fn intersection_gadget(dfas: &[DfaWithAcceptance]) -> Result<GadgetOutput> {
    let first = dfas.first().ok_or(Error::NoDfas)?;
    let k = first.automaton.num_letters();
    for (i, d) in dfas.iter().enumerate() {
        if d.automaton.num_letters() != k {
            return Err(Error::AlphabetMismatch {
                index: i,
                expected: k,
                found: d.automaton.num_letters(),
            });
        }
        if d.accepting.is_empty() {
            return Err(Error::NoAcceptingState { index: i });
        }
    }
    let m = dfas.len();
    let big_m: usize = dfas.iter().map(|d| d.automaton.num_states()).sum();
    let cycle = 2 * big_m;
    let alpha = k;
    let beta = k + 1;
    let finals: Vec<usize> = dfas
        .iter()
        .map(|d| d.accepting.first().expect("nonempty"))
        .collect();

    let mut names = Vec::new();
    // block 0
    let s0 = 0;
    let t0 = 1;
    names.push("s0".to_string());
    names.push("t0".to_string());
    let mut gamma_start = vec![2];
    for j in 0..cycle {
        names.push(format!("G0[{j}]"));
    }
    // blocks 1..=m; plain[i][q] = index of q in block i+1 (q != f_i)
    let mut plain: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut block_start = vec![0];
    for (i, d) in dfas.iter().enumerate() {
        block_start.push(names.len());
        let mut ids = vec![usize::MAX; d.automaton.num_states()];
        for (q, id) in ids.iter_mut().enumerate() {
            if q != finals[i] {
                *id = names.len();
                names.push(format!("D{}.q{q}", i + 1));
            }
        }
        plain.push(ids);
        gamma_start.push(names.len());
        for j in 0..cycle {
            names.push(format!("G{}[{j}]", i + 1));
        }
    }
    let total = names.len();
    block_start.push(total);

    // lift_i(q): the state standing for q of DFA i (0-based) in D'
    let lift = |i: usize, q: usize| -> usize {
        if q == finals[i] {
            gamma_start[i + 1]
        } else {
            plain[i][q]
        }
    };
    let block_entry = |b: usize| -> usize {
        if b == 0 {
            s0
        } else {
            lift(b - 1, dfas[b - 1].initial)
        }
    };

    let width = k + 2;
    let mut table = vec![usize::MAX; total * width];
    let mut set = |q: usize, l: usize, t: usize| table[q * width + l] = t;

    // block 0
    for l in 0..k {
        set(s0, l, s0);
        set(t0, l, t0);
    }
    set(s0, beta, gamma_start[0]);
    set(t0, beta, t0);
    for j in 0..cycle {
        let g = gamma_start[0] + j;
        for l in 0..k {
            set(g, l, t0);
        }
        set(g, beta, gamma_start[0] + (j + 1) % cycle);
    }
    // blocks 1..=m
    for (i, d) in dfas.iter().enumerate() {
        let a = &d.automaton;
        for (q, &pq) in plain[i].iter().enumerate() {
            if q == finals[i] {
                continue;
            }
            for l in 0..k {
                set(pq, l, lift(i, a.step(q, l)));
            }
            set(pq, beta, pq);
        }
        for j in 0..cycle {
            let g = gamma_start[i + 1] + j;
            for l in 0..k {
                set(g, l, lift(i, a.step(finals[i], l)));
            }
            set(g, beta, gamma_start[i + 1] + (j + 1) % cycle);
        }
    }
    // α moves every state of block b to the entry of block b + 1 (mod m + 1)
    for b in 0..=m {
        let target = block_entry((b + 1) % (m + 1));
        for q in block_start[b]..block_start[b + 1] {
            set(q, alpha, target);
        }
    }
    debug_assert!(table.iter().all(|&t| t != usize::MAX));

    let mut subset = StateSet::empty(total);
    subset.insert(s0);
    for (i, d) in dfas.iter().enumerate() {
        for f in &d.accepting {
            if f != finals[i] {
                subset.insert(plain[i][f]);
            }
        }
    }
    for &g in &gamma_start {
        for j in 0..cycle {
            subset.insert(g + j);
        }
    }

    let automaton = Automaton::new(total, width, table)?;
    Ok(GadgetOutput::new(automaton, subset, names))
}

/// Whether the DFAs accept a common word, by search in the product.
pub fn product_nonempty(dfas: &[DfaWithAcceptance]) -> bool {
    let Some(first) = dfas.first() else {
        return true;
    };
    let k = first.automaton.num_letters();
    let start: Vec<usize> = dfas.iter().map(|d| d.initial).collect();
    let accepting = |t: &[usize]| dfas.iter().zip(t).all(|(d, &q)| d.accepting.contains(q));
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        if accepting(&t) {
            return true;
        }
        for l in 0..k {
            let next: Vec<usize> = dfas
                .iter()
                .zip(&t)
                .map(|(d, &q)| d.automaton.step(q, l))
                .collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}
