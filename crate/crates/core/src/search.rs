//! Shared breadth-first search over subsets under the image action.

use std::collections::{HashMap, VecDeque};

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::word::Word;

pub const DEFAULT_NODE_LIMIT: usize = 50_000_000;

/// Resource limits for the subset searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum number of subset nodes stored (sources included).
    pub node_limit: usize,
    /// Optional bound on `|S|` for the small-subset searches.
    pub max_subset_size: Option<usize>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: DEFAULT_NODE_LIMIT,
            max_subset_size: None,
        }
    }
}

impl SearchBudget {
    pub fn with_node_limit(node_limit: usize) -> Self {
        SearchBudget {
            node_limit,
            ..Self::default()
        }
    }

    pub(crate) fn check_subset(&self, size: usize) -> Result<()> {
        match self.max_subset_size {
            Some(bound) if size > bound => Err(Error::SubsetTooLarge { size, bound }),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_estimate(&self, estimate: usize) -> Result<()> {
        if estimate > self.node_limit {
            return Err(Error::BudgetExceeded {
                limit: self.node_limit,
            });
        }
        Ok(())
    }
}

/// Outcome of a witness search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub word: Option<Word>,
    /// Subset nodes stored during the search.
    pub nodes_expanded: usize,
}

const ROOT: usize = usize::MAX;

/// Forward BFS on subsets; every node remembers its parent and the letter
/// that produced it. Sources may carry a letter that is prepended to every
/// path starting there.
pub(crate) struct SubsetBfs<'a> {
    a: &'a Automaton,
    limit: usize,
    nodes: Vec<StateSet>,
    parent: Vec<usize>,
    letter: Vec<Option<usize>>,
    index: HashMap<StateSet, usize>,
    queue: VecDeque<usize>,
}

impl<'a> SubsetBfs<'a> {
    pub fn new(a: &'a Automaton, limit: usize) -> Self {
        SubsetBfs {
            a,
            limit,
            nodes: Vec::new(),
            parent: Vec::new(),
            letter: Vec::new(),
            index: HashMap::new(),
            queue: VecDeque::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    fn insert(
        &mut self,
        set: StateSet,
        parent: usize,
        letter: Option<usize>,
    ) -> Result<Option<usize>> {
        if self.index.contains_key(&set) {
            return Ok(None);
        }
        if self.nodes.len() >= self.limit {
            return Err(Error::BudgetExceeded { limit: self.limit });
        }
        let i = self.nodes.len();
        self.index.insert(set.clone(), i);
        self.nodes.push(set);
        self.parent.push(parent);
        self.letter.push(letter);
        self.queue.push_back(i);
        Ok(Some(i))
    }

    /// Adds a source node; returns its index if it was new.
    pub fn add_source(&mut self, set: StateSet, tag: Option<usize>) -> Result<Option<usize>> {
        self.insert(set, ROOT, tag)
    }

    /// Runs the search; `goal` is tested on every newly inserted child.
    /// Sources must be tested by the caller.
    pub fn run(&mut self, mut goal: impl FnMut(&StateSet) -> bool) -> Result<Option<usize>> {
        let k = self.a.num_letters();
        while let Some(i) = self.queue.pop_front() {
            for l in 0..k {
                let child = self.a.image_letter(&self.nodes[i], l);
                if let Some(j) = self.insert(child, i, Some(l))? {
                    if goal(&self.nodes[j]) {
                        return Ok(Some(j));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Letters from the source to node `i`, with the source tag (if any) first.
    pub fn word_to(&self, mut i: usize) -> Word {
        let mut rev = Vec::new();
        loop {
            if let Some(l) = self.letter[i] {
                rev.push(l);
            }
            if self.parent[i] == ROOT {
                break;
            }
            i = self.parent[i];
        }
        rev.reverse();
        Word::new(rev)
    }
}

/// Number of subsets of an `n`-set of size at most `k`, saturating.
pub(crate) fn subsets_up_to(n: usize, k: usize) -> usize {
    (0..=k.min(n)).fold(0usize, |acc, i| acc.saturating_add(binomial(n, i)))
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Calls `f` on every `size`-subset of `items` in lexicographic order of
/// positions. Stops early when `f` returns an error.
pub(crate) fn for_each_combination<E>(
    items: &[usize],
    size: usize,
    mut f: impl FnMut(&[usize]) -> std::result::Result<(), E>,
) -> std::result::Result<(), E> {
    if size > items.len() {
        return Ok(());
    }
    let mut pos: Vec<usize> = (0..size).collect();
    let mut chosen: Vec<usize> = pos.iter().map(|&p| items[p]).collect();
    loop {
        f(&chosen)?;
        let m = items.len();
        let mut i = size;
        while i > 0 && pos[i - 1] == m - size + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return Ok(());
        }
        i -= 1;
        pos[i] += 1;
        for j in i + 1..size {
            pos[j] = pos[j - 1] + 1;
        }
        for j in i..size {
            chosen[j] = items[pos[j]];
        }
    }
}
