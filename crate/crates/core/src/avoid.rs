//! Words avoiding a subset: `(Q·w) ∩ S = ∅`, equivalently `(Q∖S)·w⁻¹ = Q`.

use crate::automaton::Automaton;
use crate::error::Result;
use crate::pair::minimal_rank_word;
use crate::search::{binomial, for_each_combination, SearchBudget, SearchResult, SubsetBfs};
use crate::state_set::StateSet;
use crate::word::Word;

/// The partition of `Q` induced by a minimal-rank word `u`: `p₁ ~ p₂` iff
/// `p₁·u = p₂·u`. Class `i` is the preimage of the `i`-th smallest state of
/// `Q·u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankPartition {
    pub word: Word,
    pub image: StateSet,
    pub class_of: Vec<usize>,
    pub classes: Vec<StateSet>,
    /// Number of classes meeting `S`.
    pub z: usize,
}

impl RankPartition {
    pub fn rank(&self) -> usize {
        self.classes.len()
    }
}

pub fn rank_partition(a: &Automaton, s: &StateSet) -> Result<RankPartition> {
    a.check_set(s)?;
    let n = a.num_states();
    let rank = minimal_rank_word(a);
    let reps: Vec<usize> = rank.image.iter().collect();
    let mut slot = vec![usize::MAX; n];
    for (i, &r) in reps.iter().enumerate() {
        slot[r] = i;
    }
    let mut classes = vec![StateSet::empty(n); reps.len()];
    let mut class_of = vec![0; n];
    for q in 0..n {
        let c = slot[a.run(q, &rank.word)];
        class_of[q] = c;
        classes[c].insert(q);
    }
    let z = classes
        .iter()
        .filter(|c| !c.is_disjoint(s).expect("same universe"))
        .count();
    Ok(RankPartition {
        word: rank.word,
        image: rank.image,
        class_of,
        classes,
        z,
    })
}

/// A word `w` with `(Q·w) ∩ S = ∅`, or `None` if `S` is unavoidable.
///
/// With `u` of minimal rank, every image `Q·uw'` holds exactly one state
/// per `~`-class. `S` is avoidable iff some `z`-subset `Q' ⊆ Q·u` is mapped
/// by some `w'` onto a set meeting `C ∖ S` for every class `C` that meets
/// `S`; then `uw'` avoids `S`. All `z`-subsets are searched at once by one
/// multi-source BFS. Not necessarily shortest.
pub fn avoiding_word(a: &Automaton, s: &StateSet, budget: &SearchBudget) -> Result<SearchResult> {
    a.check_set(s)?;
    let n = a.num_states();
    if s.is_empty() {
        return Ok(SearchResult {
            word: Some(Word::empty()),
            nodes_expanded: 0,
        });
    }
    let part = rank_partition(a, s)?;
    let z = part.z;
    let image: Vec<usize> = part.image.iter().collect();
    budget.check_estimate(binomial(image.len(), z))?;

    let meets: Vec<bool> = part
        .classes
        .iter()
        .map(|c| !c.is_disjoint(s).expect("same universe"))
        .collect();
    let mut marked = vec![false; part.rank()];
    let mut goal = |t: &StateSet| {
        debug_assert_eq!(t.len(), z);
        marked.iter_mut().for_each(|m| *m = false);
        let mut hit = 0;
        for q in t {
            let c = part.class_of[q];
            if meets[c] && !s.contains(q) && !marked[c] {
                marked[c] = true;
                hit += 1;
            }
        }
        hit == z
    };

    let mut bfs = SubsetBfs::new(a, budget.node_limit);
    let mut found = None;
    let outcome = for_each_combination(&image, z, |members| {
        let node = StateSet::from_states(n, members.iter().copied()).expect("valid states");
        let done = goal(&node);
        if let Some(i) = bfs.add_source(node, None).map_err(Some)? {
            if done {
                found = Some(i);
                return Err(None);
            }
        }
        Ok(())
    });
    match outcome {
        Ok(()) | Err(None) => {}
        Err(Some(e)) => return Err(e),
    }
    if found.is_none() {
        found = bfs.run(&mut goal)?;
    }
    Ok(SearchResult {
        word: found.map(|i| part.word.concat(&bfs.word_to(i))),
        nodes_expanded: bfs.len(),
    })
}

/// `w` avoids `S` iff `w` totally extends `Q ∖ S`.
pub fn avoids(a: &Automaton, s: &StateSet, w: &Word) -> Result<bool> {
    a.check_set(s)?;
    a.apply_word(&StateSet::full(a.num_states()), w)?
        .is_disjoint(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::samples::*;

    fn set(n: usize, states: &[usize]) -> StateSet {
        StateSet::from_states(n, states.iter().copied()).unwrap()
    }

    #[test]
    fn partitions_of_reference_automata() {
        let p = rank_partition(&perm3(), &set(3, &[0])).unwrap();
        assert_eq!(p.word, Word::empty());
        assert_eq!(p.rank(), 3);
        assert!(p.classes.iter().all(|c| c.len() == 1));
        assert_eq!(p.z, 1);

        let p = rank_partition(&cerny4(), &set(4, &[0])).unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.classes[0], StateSet::full(4));
        assert_eq!(p.z, 1);

        let p = rank_partition(&chain2(), &set(2, &[1])).unwrap();
        assert_eq!((p.rank(), p.z), (1, 1));
    }

    #[test]
    fn avoiding_reference_cases() {
        let budget = SearchBudget::default();
        let a = cerny4();
        assert!(avoids(&a, &set(4, &[0]), &Word::new(vec![1, 0])).unwrap());
        let w = avoiding_word(&a, &set(4, &[0]), &budget)
            .unwrap()
            .word
            .unwrap();
        assert!(avoids(&a, &set(4, &[0]), &w).unwrap());
        // avoiding S is totally extending the complement
        assert!(a.preimage_word(&set(4, &[1, 2, 3]), &w).unwrap().is_full());

        assert_eq!(
            avoiding_word(&perm3(), &set(3, &[0]), &budget)
                .unwrap()
                .word,
            None
        );
        assert_eq!(
            avoiding_word(&chain2(), &set(2, &[1]), &budget)
                .unwrap()
                .word,
            None
        );
        assert_eq!(
            avoiding_word(&chain2(), &set(2, &[0]), &budget)
                .unwrap()
                .word,
            Some(Word::new(vec![0]))
        );
    }

    #[test]
    fn avoiding_edge_subsets() {
        let budget = SearchBudget::default();
        let a = cerny4();
        assert_eq!(
            avoiding_word(&a, &StateSet::empty(4), &budget)
                .unwrap()
                .word,
            Some(Word::empty())
        );
        assert_eq!(
            avoiding_word(&a, &StateSet::full(4), &budget).unwrap().word,
            None
        );
    }
}
