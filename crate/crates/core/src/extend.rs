//! Extending and totally extending words for small subsets, searched in the
//! automaton of subsets of bounded size, plus the synchronizing shortcut
//! for total extensibility.

use std::collections::VecDeque;

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::pair::{greedy_reset_word, minimal_rank_word};
use crate::scc::scc;
use crate::search::{for_each_combination, subsets_up_to, SearchBudget, SearchResult, SubsetBfs};
use crate::state_set::StateSet;
use crate::word::Word;

/// A shortest word `w` with `|S·w⁻¹| > |S|`, or `None` if `S` is not
/// extensible.
///
/// Every subset `A` with `|A| <= |S|` and `|A·a⁻¹| > |S|` for some letter
/// `a` is a source tagged with the smallest such `a`. A single forward BFS
/// from all sources stops at the first node contained in `S`; the answer is
/// the tag followed by the path. If `A·w ⊆ S` then `A ⊆ S·w⁻¹`, so
/// `|S·(aw)⁻¹| >= |A·a⁻¹| > |S|`. Conversely a shortest extending word `aw`
/// makes `S·w⁻¹` a source, since minimality forces `|S·w⁻¹| <= |S|`.
pub fn shortest_extending_word_small(
    a: &Automaton,
    s: &StateSet,
    budget: &SearchBudget,
) -> Result<SearchResult> {
    a.check_set(s)?;
    let n = a.num_states();
    let k = a.num_letters();
    let size = s.len();
    if size == 0 || size == n {
        return Ok(SearchResult {
            word: None,
            nodes_expanded: 0,
        });
    }
    budget.check_subset(size)?;
    budget.check_estimate(subsets_up_to(n, size) - 1)?;

    let indegree = a.letter_indegrees();
    let states: Vec<usize> = (0..n).collect();
    let mut bfs = SubsetBfs::new(a, budget.node_limit);
    let mut sums = vec![0usize; k];
    let mut found = None;

    for m in 1..=size {
        let outcome = for_each_combination(&states, m, |members| {
            sums.iter_mut().for_each(|x| *x = 0);
            for &q in members {
                for (l, sum) in sums.iter_mut().enumerate() {
                    *sum += indegree[q * k + l];
                }
            }
            let Some(l) = sums.iter().position(|&x| x > size) else {
                return Ok(());
            };
            let node = StateSet::from_states(n, members.iter().copied()).expect("valid states");
            let inside = node.is_subset(s).expect("same universe");
            if let Some(i) = bfs.add_source(node, Some(l)).map_err(Some)? {
                if inside {
                    found = Some(i);
                    return Err(None);
                }
            }
            Ok(())
        });
        match outcome {
            Ok(()) => {}
            Err(None) => break,
            Err(Some(e)) => return Err(e),
        }
    }

    if found.is_none() {
        found = bfs.run(|t| t.is_subset(s).expect("same universe"))?;
    }
    Ok(SearchResult {
        word: found.map(|i| bfs.word_to(i)),
        nodes_expanded: bfs.len(),
    })
}

/// A word `w` with `S·w⁻¹ = Q` (equivalently `Q·w ⊆ S`), not necessarily
/// shortest, or `None` if `S` is not totally extensible.
///
/// Starts from a minimal-rank word `u`; the image `Q·u` is incompressible,
/// so every subset reached from it has the same size `r`. If `r > |S|` no
/// word exists, otherwise BFS from `Q·u` looks for a subset of `S`.
pub fn totally_extending_word_small(
    a: &Automaton,
    s: &StateSet,
    budget: &SearchBudget,
) -> Result<SearchResult> {
    a.check_set(s)?;
    if s.is_empty() {
        return Ok(SearchResult {
            word: None,
            nodes_expanded: 0,
        });
    }
    budget.check_subset(s.len())?;
    let rank = minimal_rank_word(a);
    if rank.rank > s.len() {
        return Ok(SearchResult {
            word: None,
            nodes_expanded: 0,
        });
    }
    let mut bfs = SubsetBfs::new(a, budget.node_limit);
    let start = bfs
        .add_source(rank.image.clone(), None)?
        .expect("first node");
    let found = if rank.image.is_subset(s)? {
        Some(start)
    } else {
        bfs.run(|t| {
            debug_assert_eq!(t.len(), rank.rank);
            t.is_subset(s).expect("same universe")
        })?
    };
    Ok(SearchResult {
        word: found.map(|i| rank.word.concat(&bfs.word_to(i))),
        nodes_expanded: bfs.len(),
    })
}

/// Answer of the synchronizing shortcut for total extensibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalExtension {
    pub extensible: bool,
    pub witness: Option<Word>,
}

/// In a synchronizing automaton `S` is totally extensible iff it meets the
/// unique sink component. The optional witness is a greedy reset word to
/// some `p` followed by a shortest path from `p` into `S`.
///
/// The decision alone runs in `O(|Σ|n)` and trusts the caller that the
/// automaton is synchronizing; it only notices a violation when there are
/// several sink components. Asking for a witness checks synchronization.
pub fn totally_extensible_synchronizing(
    a: &Automaton,
    s: &StateSet,
    want_witness: bool,
) -> Result<TotalExtension> {
    a.check_set(s)?;
    let n = a.num_states();
    let d = scc(a);
    let mut sinks = d.sink_components();
    let sink = sinks.next().expect("every automaton has a sink component");
    if sinks.next().is_some() {
        return Err(Error::NotSynchronizing);
    }
    let target = d.members(sink, n).intersection(s)?;
    let extensible = !target.is_empty();
    let witness = if extensible && want_witness {
        let reset = greedy_reset_word(a).ok_or(Error::NotSynchronizing)?;
        let p = a.run(0, &reset);
        let path = state_path(a, p, &target).expect("sink component is reachable from everywhere");
        Some(reset.concat(&path))
    } else {
        None
    };
    Ok(TotalExtension {
        extensible,
        witness,
    })
}

/// Shortest word leading `from` into `targets`.
fn state_path(a: &Automaton, from: usize, targets: &StateSet) -> Option<Word> {
    let n = a.num_states();
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(q) = queue.pop_front() {
        if targets.contains(q) {
            let mut letters = Vec::new();
            let mut cur = q;
            while let Some((p, l)) = prev[cur] {
                letters.push(l);
                cur = p;
            }
            letters.reverse();
            return Some(Word::new(letters));
        }
        for l in 0..a.num_letters() {
            let t = a.step(q, l);
            if !seen[t] {
                seen[t] = true;
                prev[t] = Some((q, l));
                queue.push_back(t);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::samples::*;

    fn set(n: usize, states: &[usize]) -> StateSet {
        StateSet::from_states(n, states.iter().copied()).unwrap()
    }

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn extending_reference_cases() {
        let a = cerny4();
        let r = shortest_extending_word_small(&a, &set(4, &[1, 2]), &budget()).unwrap();
        let w = r.word.unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(
            a.preimage_word(&set(4, &[1, 2]), &w).unwrap(),
            set(4, &[0, 1, 3])
        );

        let r = shortest_extending_word_small(&perm3(), &set(3, &[0]), &budget()).unwrap();
        assert_eq!(r.word, None);

        let r = shortest_extending_word_small(&chain2(), &set(2, &[1]), &budget()).unwrap();
        assert_eq!(r.word, Some(Word::new(vec![0])));
    }

    #[test]
    fn extending_trivial_subsets() {
        let a = cerny4();
        for s in [StateSet::empty(4), StateSet::full(4)] {
            assert_eq!(
                shortest_extending_word_small(&a, &s, &budget())
                    .unwrap()
                    .word,
                None
            );
        }
    }

    #[test]
    fn extending_budget_and_bound_errors() {
        let a = cerny(30);
        let s = set(30, &[0, 1, 2, 3, 4, 5]);
        assert!(matches!(
            shortest_extending_word_small(&a, &s, &SearchBudget::with_node_limit(1000)),
            Err(Error::BudgetExceeded { limit: 1000 })
        ));
        let bounded = SearchBudget {
            max_subset_size: Some(3),
            ..budget()
        };
        assert!(matches!(
            shortest_extending_word_small(&a, &s, &bounded),
            Err(Error::SubsetTooLarge { size: 6, bound: 3 })
        ));
    }

    #[test]
    fn totally_extending_reference_cases() {
        assert_eq!(
            totally_extending_word_small(&perm3(), &set(3, &[0, 1]), &budget())
                .unwrap()
                .word,
            None
        );
        assert_eq!(
            totally_extending_word_small(&chain2(), &set(2, &[1]), &budget())
                .unwrap()
                .word,
            Some(Word::new(vec![0]))
        );
        let a = cerny4();
        let w = totally_extending_word_small(&a, &set(4, &[0]), &budget())
            .unwrap()
            .word
            .unwrap();
        assert_eq!(a.apply_word(&StateSet::full(4), &w).unwrap(), set(4, &[0]));
    }

    #[test]
    fn synchronizing_shortcut() {
        let a = cerny4();
        let r = totally_extensible_synchronizing(&a, &set(4, &[2]), true).unwrap();
        assert!(r.extensible);
        let w = r.witness.unwrap();
        assert!(a.preimage_word(&set(4, &[2]), &w).unwrap().is_full());

        let c = chain2();
        assert!(
            !totally_extensible_synchronizing(&c, &set(2, &[0]), true)
                .unwrap()
                .extensible
        );
        let r = totally_extensible_synchronizing(&c, &set(2, &[1]), true).unwrap();
        assert_eq!(r.witness, Some(Word::new(vec![0])));

        assert_eq!(
            totally_extensible_synchronizing(&perm3(), &set(3, &[0]), true),
            Err(Error::NotSynchronizing)
        );
        let two_sinks = Automaton::from_letters(2, &[vec![0, 1]]).unwrap();
        assert_eq!(
            totally_extensible_synchronizing(&two_sinks, &set(2, &[0]), false),
            Err(Error::NotSynchronizing)
        );
    }
}
