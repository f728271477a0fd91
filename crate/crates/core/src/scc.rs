//! Strongly connected components of the transition graph.

use crate::automaton::Automaton;
use crate::state_set::StateSet;

/// Components are numbered in ascending order of their smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    component_of: Vec<usize>,
    components: Vec<Vec<usize>>,
    is_sink: Vec<bool>,
}

impl SccDecomposition {
    pub fn component_of(&self, q: usize) -> usize {
        self.component_of[q]
    }

    /// Members of each component, ascending.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_sink(&self, component: usize) -> bool {
        self.is_sink[component]
    }

    pub fn sink_components(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&c| self.is_sink[c])
    }

    pub fn members(&self, component: usize, n: usize) -> StateSet {
        StateSet::from_states(n, self.components[component].iter().copied())
            .expect("component members are states")
    }
}

/// Tarjan's algorithm, iterative so deep chains do not overflow the stack.
pub fn scc(a: &Automaton) -> SccDecomposition {
    let n = a.num_states();
    let k = a.num_letters();
    const UNVISITED: usize = usize::MAX;

    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut raw: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0;
    // (state, next letter to explore)
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        frames.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut next)) = frames.last_mut() {
            if *next < k {
                let w = a.step(v, *next);
                *next += 1;
                if index[w] == UNVISITED {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut members = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    members.push(w);
                    if w == v {
                        break;
                    }
                }
                members.sort_unstable();
                raw.push(members);
            }
        }
    }

    raw.sort_unstable_by_key(|c| c[0]);
    let mut component_of = vec![0; n];
    for (c, members) in raw.iter().enumerate() {
        for &q in members {
            component_of[q] = c;
        }
    }
    let is_sink = raw
        .iter()
        .enumerate()
        .map(|(c, members)| {
            members
                .iter()
                .all(|&q| (0..k).all(|l| component_of[a.step(q, l)] == c))
        })
        .collect();
    SccDecomposition {
        component_of,
        components: raw,
        is_sink,
    }
}

pub fn is_strongly_connected(a: &Automaton) -> bool {
    scc(a).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::samples::*;
    use proptest::prelude::*;

    fn reachable_from(a: &Automaton, q: usize) -> Vec<bool> {
        let mut seen = vec![false; a.num_states()];
        let mut todo = vec![q];
        seen[q] = true;
        while let Some(p) = todo.pop() {
            for l in 0..a.num_letters() {
                let t = a.step(p, l);
                if !seen[t] {
                    seen[t] = true;
                    todo.push(t);
                }
            }
        }
        seen
    }

    #[test]
    fn reference_automata() {
        let d = scc(&cerny4());
        assert_eq!(d.len(), 1);
        assert!(d.is_sink(0));

        let d = scc(&chain2());
        assert_eq!(d.components(), &[vec![0], vec![1]]);
        assert_eq!(d.sink_components().collect::<Vec<_>>(), vec![1]);

        let d = scc(&perm3());
        assert_eq!(d.len(), 1);
        assert!(d.is_sink(0));
        assert!(is_strongly_connected(&perm3()));
        assert!(!is_strongly_connected(&chain2()));
    }

    #[test]
    fn long_chain_does_not_overflow() {
        let n = 200_000;
        let rows: Vec<usize> = (0..n).map(|q| (q + 1).min(n - 1)).collect();
        let a = Automaton::new(n, 1, rows).unwrap();
        let d = scc(&a);
        assert_eq!(d.len(), n);
        assert_eq!(d.sink_components().collect::<Vec<_>>(), vec![n - 1]);
    }

    proptest! {
        #[test]
        fn matches_mutual_reachability(
            (n, k, table) in (1usize..9, 1usize..4).prop_flat_map(|(n, k)| (Just(n), Just(k), prop::collection::vec(0..n, n * k)))
        ) {
            let a = Automaton::new(n, k, table).unwrap();
            let d = scc(&a);
            let reach: Vec<Vec<bool>> = (0..n).map(|q| reachable_from(&a, q)).collect();
            for (p, rp) in reach.iter().enumerate() {
                for (q, rq) in reach.iter().enumerate() {
                    let same = d.component_of(p) == d.component_of(q);
                    prop_assert_eq!(same, rp[q] && rq[p]);
                }
            }
            for c in 0..d.len() {
                let members = &d.components()[c];
                let leaves = members.iter().any(|&q| (0..k).any(|l| d.component_of(a.step(q, l)) != c));
                prop_assert_eq!(d.is_sink(c), !leaves);
            }
            // Numbering by smallest member.
            let firsts: Vec<usize> = d.components().iter().map(|c| c[0]).collect();
            let mut sorted = firsts.clone();
            sorted.sort_unstable();
            prop_assert_eq!(firsts, sorted);
        }
    }
}
