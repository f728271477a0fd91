//! Pair-automaton algorithms: compressible pairs, synchronization, greedy
//! compression towards minimal rank, and avoidability of single states.

use std::collections::VecDeque;

use crate::automaton::Automaton;
use crate::error::Result;
use crate::scc::scc;
use crate::state_set::StateSet;
use crate::word::Word;

const INF: u32 = u32::MAX;

/// Shortest compressing words for every pair of states.
///
/// Built by one multi-source backward BFS over the pair automaton, starting
/// from all diagonal pairs at distance 0.
#[derive(Debug, Clone)]
pub struct PairTable {
    n: usize,
    // indexed by p * n + q with p <= q
    dist: Vec<u32>,
    // letter taken from {p, q} on a shortest compressing word
    letter: Vec<u32>,
}

impl PairTable {
    pub fn build(a: &Automaton) -> Self {
        let n = a.num_states();
        let k = a.num_letters();
        let inv = a.inverse_lists();
        let mut dist = vec![INF; n * n];
        let mut letter = vec![INF; n * n];
        let mut queue = VecDeque::new();
        for p in 0..n {
            dist[p * n + p] = 0;
            queue.push_back((p, p));
        }
        while let Some((p, q)) = queue.pop_front() {
            let d = dist[p * n + q];
            for (l, lists) in inv.iter().enumerate().take(k) {
                let (xs, ys) = (&lists[p], &lists[q]);
                for &x in xs {
                    for &y in ys {
                        if x == y {
                            continue;
                        }
                        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                        let i = lo * n + hi;
                        if dist[i] == INF {
                            dist[i] = d + 1;
                            letter[i] = l as u32;
                            queue.push_back((lo, hi));
                        }
                    }
                }
            }
        }
        PairTable { n, dist, letter }
    }

    fn index(&self, p: usize, q: usize) -> usize {
        let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
        lo * self.n + hi
    }

    /// Length of a shortest word merging `p` and `q` (0 when `p == q`).
    pub fn distance(&self, p: usize, q: usize) -> Option<usize> {
        match self.dist[self.index(p, q)] {
            INF => None,
            d => Some(d as usize),
        }
    }

    pub fn is_compressible(&self, p: usize, q: usize) -> bool {
        self.distance(p, q).is_some()
    }

    /// A shortest word `w` with `p·w = q·w`.
    pub fn compressing_word(&self, a: &Automaton, p: usize, q: usize) -> Option<Word> {
        self.distance(p, q)?;
        let (mut p, mut q) = (p, q);
        let mut w = Word::empty();
        while p != q {
            let l = self.letter[self.index(p, q)] as usize;
            w.push(l);
            p = a.step(p, l);
            q = a.step(q, l);
        }
        Some(w)
    }

    /// True iff every pair is compressible.
    pub fn all_compressible(&self) -> bool {
        self.dist.iter().enumerate().all(|(i, &d)| {
            let (p, q) = (i / self.n, i % self.n);
            p > q || d != INF
        })
    }

    /// Among pairs inside `set`, the one with the shortest compressing word,
    /// ties broken by the lexicographically smallest `(p, q)`.
    pub fn best_pair_in(&self, set: &StateSet) -> Option<(usize, usize, usize)> {
        let members: Vec<usize> = set.iter().collect();
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, &p) in members.iter().enumerate() {
            for &q in &members[i + 1..] {
                if let Some(d) = self.distance(p, q) {
                    if best.is_none_or(|(bd, _, _)| d < bd) {
                        best = Some((d, p, q));
                    }
                }
            }
        }
        best.map(|(d, p, q)| (p, q, d))
    }
}

pub fn pair_table(a: &Automaton) -> PairTable {
    PairTable::build(a)
}

pub fn is_synchronizing(a: &Automaton) -> bool {
    PairTable::build(a).all_compressible()
}

/// A word `u` whose image `Q·u` contains no compressible pair, so `|Q·u|`
/// is the minimal rank of the automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub word: Word,
    pub image: StateSet,
    pub rank: usize,
}

fn compress_greedily(a: &Automaton, table: &PairTable) -> RankResult {
    let mut image = StateSet::full(a.num_states());
    let mut word = Word::empty();
    while let Some((p, q, _)) = table.best_pair_in(&image) {
        let w = table
            .compressing_word(a, p, q)
            .expect("best pair is compressible");
        image = a.apply_word(&image, &w).expect("same automaton");
        word.extend_from(&w);
    }
    let rank = image.len();
    RankResult { word, image, rank }
}

pub fn minimal_rank_word(a: &Automaton) -> RankResult {
    compress_greedily(a, &PairTable::build(a))
}

pub fn minimal_rank_word_with(a: &Automaton, table: &PairTable) -> RankResult {
    compress_greedily(a, table)
}

/// A reset word built by repeatedly compressing the closest pair of the
/// current image. Not necessarily shortest.
pub fn greedy_reset_word(a: &Automaton) -> Option<Word> {
    let r = minimal_rank_word(a);
    (r.rank == 1).then_some(r.word)
}

/// Whether some word avoids `q`, i.e. `q ∉ Q·w`.
///
/// Decided structurally: states outside every sink component are avoidable,
/// and inside a sink component `q` is avoidable iff it belongs to a
/// compressible pair of that component.
pub fn avoidable_state(a: &Automaton, q: usize) -> Result<bool> {
    avoidable_state_with_hint(a, q, None)
}

/// Like [`avoidable_state`]; when `synchronizing` is already known to be
/// `Some(true)` the answer is just "q is not a sink state".
pub fn avoidable_state_with_hint(
    a: &Automaton,
    q: usize,
    synchronizing: Option<bool>,
) -> Result<bool> {
    a.check_state(q)?;
    if synchronizing == Some(true) {
        return Ok((0..a.num_letters()).any(|l| a.step(q, l) != q));
    }
    let d = scc(a);
    let c = d.component_of(q);
    if !d.is_sink(c) {
        return Ok(true);
    }
    let members = d.members(c, a.num_states());
    let (sub, old) = a.restrict(&members)?;
    let local = old.binary_search(&q).expect("q in its component");
    let table = PairTable::build(&sub);
    Ok((0..sub.num_states()).any(|p| p != local && table.is_compressible(p, local)))
}
