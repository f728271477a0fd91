//! Complete deterministic automata and the image / preimage actions of words.

use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::word::Word;

/// A complete deterministic semiautomaton with states `0..n` and letters `0..k`.
///
/// The transition table is stored row-major: entry `q * k + a` is `δ(q, a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automaton {
    n: usize,
    k: usize,
    table: Vec<usize>,
}

impl Automaton {
    pub fn new(n: usize, k: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::EmptyAutomaton {
                states: n,
                letters: k,
            });
        }
        if table.len() != n * k {
            return Err(Error::TableSize {
                expected: n * k,
                found: table.len(),
            });
        }
        if let Some(i) = table.iter().position(|&t| t >= n) {
            return Err(Error::TargetOutOfRange {
                state: i / k,
                letter: i % k,
                target: table[i],
                states: n,
            });
        }
        Ok(Automaton { n, k, table })
    }

    /// Builds from one row of targets per state.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        let k = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != k) {
            return Err(Error::TableSize {
                expected: n * k,
                found: n * k - k + bad.len(),
            });
        }
        Self::new(n, k, rows.concat())
    }

    /// Builds from one transformation per letter: `letters[a][q] = δ(q, a)`.
    pub fn from_letters(n: usize, letters: &[Vec<usize>]) -> Result<Self> {
        let k = letters.len();
        let mut table = vec![0; n * k];
        for (a, map) in letters.iter().enumerate() {
            if map.len() != n {
                return Err(Error::TableSize {
                    expected: n * k,
                    found: n * (k - 1) + map.len(),
                });
            }
            for (q, &t) in map.iter().enumerate() {
                table[q * k + a] = t;
            }
        }
        Self::new(n, k, table)
    }

    pub fn num_states(&self) -> usize {
        self.n
    }

    pub fn num_letters(&self) -> usize {
        self.k
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn step(&self, q: usize, a: usize) -> usize {
        self.table[q * self.k + a]
    }

    /// `q · w`.
    pub fn run(&self, q: usize, w: &Word) -> usize {
        w.letters().iter().fold(q, |p, &a| self.step(p, a))
    }

    pub fn check_state(&self, q: usize) -> Result<()> {
        if q >= self.n {
            return Err(Error::StateOutOfRange {
                state: q,
                states: self.n,
            });
        }
        Ok(())
    }

    pub fn check_set(&self, s: &StateSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: s.universe(),
            });
        }
        Ok(())
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&a| a >= self.k) {
            Some(&a) => Err(Error::LetterOutOfRange {
                letter: a,
                letters: self.k,
            }),
            None => Ok(()),
        }
    }

    /// `S · a`.
    pub fn image_letter(&self, s: &StateSet, a: usize) -> StateSet {
        let mut out = StateSet::empty(self.n);
        for q in s {
            out.insert(self.step(q, a));
        }
        out
    }

    /// `S · a⁻¹ = { q : q·a ∈ S }`.
    pub fn preimage_letter(&self, s: &StateSet, a: usize) -> StateSet {
        let mut out = StateSet::empty(self.n);
        for q in 0..self.n {
            if s.contains(self.step(q, a)) {
                out.insert(q);
            }
        }
        out
    }

    /// Image `S · w`.
    pub fn apply_word(&self, s: &StateSet, w: &Word) -> Result<StateSet> {
        self.check_set(s)?;
        self.check_word(w)?;
        let mut out = StateSet::empty(self.n);
        for q in s {
            out.insert(self.run(q, w));
        }
        Ok(out)
    }

    /// Preimage `S · w⁻¹ = { q : q·w ∈ S }`.
    pub fn preimage_word(&self, s: &StateSet, w: &Word) -> Result<StateSet> {
        self.check_set(s)?;
        self.check_word(w)?;
        let mut out = StateSet::empty(self.n);
        for q in 0..self.n {
            if s.contains(self.run(q, w)) {
                out.insert(q);
            }
        }
        Ok(out)
    }

    /// Whether every letter acts as a bijection on the states.
    pub fn is_permutation_automaton(&self) -> bool {
        let mut seen = vec![false; self.n];
        (0..self.k).all(|a| {
            seen.iter_mut().for_each(|s| *s = false);
            (0..self.n).all(|q| !std::mem::replace(&mut seen[self.step(q, a)], true))
        })
    }

    /// Smallest state fixed by every letter.
    pub fn sink_state(&self) -> Option<usize> {
        (0..self.n).find(|&q| (0..self.k).all(|a| self.step(q, a) == q))
    }

    /// `c[q * k + a] = |{q} · a⁻¹|`.
    pub fn letter_indegrees(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n * self.k];
        for q in 0..self.n {
            for a in 0..self.k {
                counts[self.step(q, a) * self.k + a] += 1;
            }
        }
        counts
    }

    /// Inverse transitions: `result[a][q]` lists `{ p : p·a = q }` ascending.
    pub fn inverse_lists(&self) -> Vec<Vec<Vec<usize>>> {
        let mut inv = vec![vec![Vec::new(); self.n]; self.k];
        for p in 0..self.n {
            for (a, lists) in inv.iter_mut().enumerate() {
                lists[self.step(p, a)].push(p);
            }
        }
        inv
    }

    /// The sub-automaton on a set closed under every letter, with states
    /// renumbered in ascending order. Returns the automaton and the map from
    /// new indices to old ones.
    pub fn restrict(&self, closed: &StateSet) -> Result<(Automaton, Vec<usize>)> {
        self.check_set(closed)?;
        let old: Vec<usize> = closed.iter().collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &q) in old.iter().enumerate() {
            new_index[q] = i;
        }
        let mut table = Vec::with_capacity(old.len() * self.k);
        for &q in &old {
            for a in 0..self.k {
                let t = new_index[self.step(q, a)];
                assert!(t != usize::MAX, "restrict: set not closed under letter {a}");
                table.push(t);
            }
        }
        Ok((Automaton::new(old.len(), self.k, table)?, old))
    }
}

/// Small automata used throughout the tests and documentation.
pub mod samples {
    use super::Automaton;

    /// The 4-state Černý automaton: `a` is the cycle 0→1→2→3→0, `b` fixes
    /// 0, 1, 2 and sends 3 to 0.
    pub fn cerny4() -> Automaton {
        cerny(4)
    }

    /// The `n`-state Černý automaton (`n >= 2`).
    pub fn cerny(n: usize) -> Automaton {
        let a: Vec<usize> = (0..n).map(|q| (q + 1) % n).collect();
        let b: Vec<usize> = (0..n).map(|q| if q == n - 1 { 0 } else { q }).collect();
        Automaton::from_letters(n, &[a, b]).expect("valid table")
    }

    /// Three states; `a` is a 3-cycle, `b` swaps 0 and 1.
    pub fn perm3() -> Automaton {
        Automaton::from_letters(3, &[vec![1, 2, 0], vec![1, 0, 2]]).expect("valid table")
    }

    /// Two states, one letter: 0→1, 1→1.
    pub fn chain2() -> Automaton {
        Automaton::from_letters(2, &[vec![1, 1]]).expect("valid table")
    }
}

#[cfg(test)]
mod tests {
    use super::samples::*;
    use super::*;
    use proptest::prelude::*;

    fn set(n: usize, states: &[usize]) -> StateSet {
        StateSet::from_states(n, states.iter().copied()).unwrap()
    }

    fn word(letters: &[usize]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn cerny4_compressing_example() {
        // {q2,q3}·aab = {q1}
        let a = cerny4();
        assert_eq!(
            a.apply_word(&set(4, &[1, 2]), &word(&[0, 0, 1])).unwrap(),
            set(4, &[0])
        );
    }

    #[test]
    fn cerny4_extending_example() {
        let a = cerny4();
        let s = set(4, &[1, 2]);
        assert_eq!(a.preimage_word(&s, &word(&[0])).unwrap(), set(4, &[0, 1]));
        assert_eq!(
            a.preimage_word(&s, &word(&[1, 0])).unwrap(),
            set(4, &[0, 1, 3])
        );
        assert_eq!(
            a.preimage_word(&set(4, &[0, 1]), &word(&[1])).unwrap(),
            set(4, &[0, 1, 3])
        );
    }

    #[test]
    fn cerny4_shrinking_example() {
        // {q2,q4}·b⁻¹ = {q2}
        let a = cerny4();
        assert_eq!(
            a.preimage_word(&set(4, &[1, 3]), &word(&[1])).unwrap(),
            set(4, &[1])
        );
        // {q1,q4}·b⁻¹ stays {q1,q4} under this table.
        assert_eq!(
            a.preimage_word(&set(4, &[0, 3]), &word(&[1])).unwrap(),
            set(4, &[0, 3])
        );
    }

    #[test]
    fn empty_word_is_identity() {
        let a = cerny4();
        let s = set(4, &[0, 2]);
        assert_eq!(a.apply_word(&s, &Word::empty()).unwrap(), s);
        assert_eq!(a.preimage_word(&s, &Word::empty()).unwrap(), s);
    }

    #[test]
    fn chain2_actions() {
        let a = chain2();
        assert_eq!(
            a.apply_word(&StateSet::full(2), &word(&[0])).unwrap(),
            set(2, &[1])
        );
        assert_eq!(
            a.preimage_word(&set(2, &[1]), &word(&[0])).unwrap(),
            StateSet::full(2)
        );
    }

    #[test]
    fn perm3_preserves_cardinality() {
        let a = perm3();
        assert_eq!(
            a.preimage_word(&set(3, &[0, 1]), &word(&[0, 1]))
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn dimension_and_letter_errors() {
        let a = cerny4();
        assert!(matches!(
            a.apply_word(&StateSet::full(3), &Word::empty()),
            Err(Error::DimensionMismatch {
                expected: 4,
                found: 3
            })
        ));
        assert!(matches!(
            a.preimage_word(&StateSet::full(4), &word(&[2])),
            Err(Error::LetterOutOfRange {
                letter: 2,
                letters: 2
            })
        ));
    }

    #[test]
    fn construction_validation() {
        assert!(matches!(
            Automaton::new(0, 1, vec![]),
            Err(Error::EmptyAutomaton { .. })
        ));
        assert!(matches!(
            Automaton::new(2, 1, vec![1]),
            Err(Error::TableSize { .. })
        ));
        assert_eq!(
            Automaton::new(2, 1, vec![2, 0]),
            Err(Error::TargetOutOfRange {
                state: 0,
                letter: 0,
                target: 2,
                states: 2
            })
        );
    }

    #[test]
    fn structural_queries() {
        assert_eq!(chain2().sink_state(), Some(1));
        assert_eq!(cerny4().sink_state(), None);
        assert!(perm3().is_permutation_automaton());
        assert!(!cerny4().is_permutation_automaton());
    }

    fn arb_instance() -> impl Strategy<Value = (Automaton, u64, u64, Vec<usize>, Vec<usize>)> {
        (1usize..7, 1usize..4).prop_flat_map(|(n, k)| {
            (
                prop::collection::vec(0..n, n * k),
                any::<u64>(),
                any::<u64>(),
                prop::collection::vec(0..k, 0..6),
                prop::collection::vec(0..k, 0..6),
            )
                .prop_map(move |(t, s, t2, u, v)| (Automaton::new(n, k, t).unwrap(), s, t2, u, v))
        })
    }

    proptest! {
        #[test]
        fn singleton_preimages_partition(a in arb_instance().prop_map(|x| x.0)) {
            let n = a.num_states();
            for l in 0..a.num_letters() {
                let total: usize = (0..n)
                    .map(|q| a.preimage_letter(&StateSet::singleton(n, q).unwrap(), l).len())
                    .sum();
                prop_assert_eq!(total, n);
            }
        }

        #[test]
        fn galois_connection((a, s, t, u, _) in arb_instance()) {
            let n = a.num_states();
            let s = StateSet::from_mask(n, s);
            let t = StateSet::from_mask(n, t);
            let w = Word::new(u);
            let lhs = t.is_subset(&a.preimage_word(&s, &w).unwrap()).unwrap();
            let rhs = a.apply_word(&t, &w).unwrap().is_subset(&s).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn composition_orders((a, s, _, u, v) in arb_instance()) {
            let n = a.num_states();
            let s = StateSet::from_mask(n, s);
            let (u, v) = (Word::new(u), Word::new(v));
            let uv = u.concat(&v);
            let pre = a.preimage_word(&a.preimage_word(&s, &v).unwrap(), &u).unwrap();
            prop_assert_eq!(a.preimage_word(&s, &uv).unwrap(), pre);
            let img = a.apply_word(&a.apply_word(&s, &u).unwrap(), &v).unwrap();
            prop_assert_eq!(a.apply_word(&s, &uv).unwrap(), img);
            // Letter-by-letter folds agree with the whole-word actions.
            let folded = uv.letters().iter().rev().fold(s.clone(), |acc, &l| a.preimage_letter(&acc, l));
            prop_assert_eq!(a.preimage_word(&s, &uv).unwrap(), folded);
            prop_assert!(a.apply_word(&s, &uv).unwrap().len() <= s.len());
        }

        #[test]
        fn permutation_automata_preserve_preimage_size(
            perms in (1usize..7).prop_flat_map(|n| prop::collection::vec(Just((0..n).collect::<Vec<_>>()).prop_shuffle(), 1..4)),
            mask in any::<u64>(),
            w in prop::collection::vec(0usize..3, 0..8),
        ) {
            let n = perms[0].len();
            let a = Automaton::from_letters(n, &perms).unwrap();
            prop_assert!(a.is_permutation_automaton());
            let w: Word = w.into_iter().map(|l| l % perms.len()).collect();
            let s = StateSet::from_mask(n, mask);
            prop_assert_eq!(a.preimage_word(&s, &w).unwrap().len(), s.len());
        }
    }
}
