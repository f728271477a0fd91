//! Exhaustive ground truth over the full power set, for small automata.
//!
//! Subsets are 64-bit masks here, independent of [`StateSet`], so the
//! oracle shares no search code with the algorithms it checks.

use std::collections::{HashMap, VecDeque};

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::word::Word;

pub const DEFAULT_STATE_CAP: usize = 20;
/// Masks are `u64`, so no override can go beyond this.
pub const HARD_STATE_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_states: usize,
    pub node_limit: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_states: DEFAULT_STATE_CAP,
            node_limit: 1 << DEFAULT_STATE_CAP,
        }
    }
}

impl OracleConfig {
    pub fn with_max_states(max_states: usize) -> Self {
        OracleConfig {
            max_states,
            ..Self::default()
        }
    }

    fn check(&self, a: &Automaton) -> Result<()> {
        let n = a.num_states();
        let cap = self.max_states.min(HARD_STATE_CAP);
        if n > cap {
            return Err(Error::OracleCapExceeded { states: n, cap });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Edges `T → T·a⁻¹`.
    Preimage,
    /// Edges `T → T·a`.
    Image,
}

/// All subsets reachable from an origin, with shortest depths.
#[derive(Debug, Clone)]
pub struct SubsetBfsResult {
    pub direction: Direction,
    n: usize,
    masks: Vec<u64>,
    depth: Vec<u32>,
    // (parent index, letter); the origin points to itself
    back: Vec<(usize, usize)>,
    index: HashMap<u64, usize>,
}

impl SubsetBfsResult {
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn origin(&self) -> StateSet {
        StateSet::from_mask(self.n, self.masks[0])
    }

    pub fn depth_of(&self, t: &StateSet) -> Option<usize> {
        let i = *self.index.get(&t.to_mask()?)?;
        Some(self.depth[i] as usize)
    }

    /// Reached subsets in BFS order with their depths.
    pub fn reached(&self) -> impl Iterator<Item = (StateSet, usize)> + '_ {
        self.masks
            .iter()
            .zip(&self.depth)
            .map(|(&m, &d)| (StateSet::from_mask(self.n, m), d as usize))
    }

    /// A shortest word leading from the origin to `t`: `origin·w⁻¹ = t`
    /// for preimages, `origin·w = t` for images.
    pub fn word_to(&self, t: &StateSet) -> Option<Word> {
        let i = *self.index.get(&t.to_mask()?)?;
        Some(self.word_at(i))
    }

    fn word_at(&self, mut i: usize) -> Word {
        // Walking back from the node lists letters goal-first. For preimages
        // (S·w⁻¹)·a⁻¹ = S·(aw)⁻¹, so the last edge is the first letter and
        // this order is already left to right.
        let mut letters = Vec::with_capacity(self.depth[i] as usize);
        while i != 0 {
            let (p, l) = self.back[i];
            letters.push(l);
            i = p;
        }
        if self.direction == Direction::Image {
            letters.reverse();
        }
        Word::new(letters)
    }
}

fn letter_masks(a: &Automaton) -> Vec<Vec<u64>> {
    // pre[l][q] = mask of {p : p·l = q}
    let n = a.num_states();
    let mut pre = vec![vec![0u64; n]; a.num_letters()];
    for p in 0..n {
        for (l, row) in pre.iter_mut().enumerate() {
            row[a.step(p, l)] |= 1 << p;
        }
    }
    pre
}

fn step_mask(a: &Automaton, pre: &[Vec<u64>], mask: u64, l: usize, dir: Direction) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let q = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= match dir {
            Direction::Preimage => pre[l][q],
            Direction::Image => 1 << a.step(q, l),
        };
    }
    out
}

fn bfs(
    a: &Automaton,
    origin: &StateSet,
    dir: Direction,
    config: &OracleConfig,
    mut stop: impl FnMut(u64, usize) -> bool,
) -> Result<(SubsetBfsResult, Option<usize>)> {
    config.check(a)?;
    a.check_set(origin)?;
    let n = a.num_states();
    let pre = letter_masks(a);
    let start = origin.to_mask().expect("n <= 64");
    let mut r = SubsetBfsResult {
        direction: dir,
        n,
        masks: vec![start],
        depth: vec![0],
        back: vec![(0, 0)],
        index: HashMap::from([(start, 0)]),
    };
    if stop(start, 0) {
        return Ok((r, Some(0)));
    }
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (mask, d) = (r.masks[i], r.depth[i]);
        for l in 0..a.num_letters() {
            let t = step_mask(a, &pre, mask, l, dir);
            if r.index.contains_key(&t) {
                continue;
            }
            if r.masks.len() >= config.node_limit {
                return Err(Error::BudgetExceeded {
                    limit: config.node_limit,
                });
            }
            let j = r.masks.len();
            r.masks.push(t);
            r.depth.push(d + 1);
            r.back.push((i, l));
            r.index.insert(t, j);
            if stop(t, d as usize + 1) {
                return Ok((r, Some(j)));
            }
            queue.push_back(j);
        }
    }
    Ok((r, None))
}

/// Every preimage `S·w⁻¹`, explored backwards from `S`.
pub fn backward_subset_bfs(
    a: &Automaton,
    s: &StateSet,
    config: &OracleConfig,
) -> Result<SubsetBfsResult> {
    Ok(bfs(a, s, Direction::Preimage, config, |_, _| false)?.0)
}

/// Every image `T0·w`.
pub fn forward_subset_bfs(
    a: &Automaton,
    t0: &StateSet,
    config: &OracleConfig,
) -> Result<SubsetBfsResult> {
    Ok(bfs(a, t0, Direction::Image, config, |_, _| false)?.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Goal {
    /// `|S·w⁻¹| > |S|`
    Extending,
    /// `S·w⁻¹ = Q`
    TotallyExtending,
    /// `S·w⁻¹ = ∅`, i.e. `(Q·w) ∩ S = ∅`
    Avoiding,
    /// `|S·w⁻¹| ≠ |S|` with `w` nonempty
    Resizing,
}

/// A shortest word reaching the goal, or `None` if no word does.
pub fn oracle_shortest(
    a: &Automaton,
    s: &StateSet,
    goal: Goal,
    config: &OracleConfig,
) -> Result<Option<Word>> {
    let n = a.num_states() as u32;
    let size = s.len() as u32;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let (r, hit) = bfs(a, s, Direction::Preimage, config, |t, depth| match goal {
        Goal::Extending => t.count_ones() > size,
        Goal::TotallyExtending => t == full,
        Goal::Avoiding => t == 0,
        Goal::Resizing => depth > 0 && t.count_ones() != size,
    })?;
    Ok(hit.map(|i| r.word_at(i)))
}

/// A shortest reset word, if the automaton is synchronizing.
pub fn oracle_shortest_reset(a: &Automaton, config: &OracleConfig) -> Result<Option<Word>> {
    let full = StateSet::full(a.num_states());
    let (r, hit) = bfs(a, &full, Direction::Image, config, |t, _| {
        t.count_ones() == 1
    })?;
    Ok(hit.map(|i| r.word_at(i)))
}

/// The minimum of `|Q·w|` over all words.
pub fn oracle_min_rank(a: &Automaton, config: &OracleConfig) -> Result<usize> {
    let r = forward_subset_bfs(a, &StateSet::full(a.num_states()), config)?;
    Ok(r.masks
        .iter()
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("origin"))
}
