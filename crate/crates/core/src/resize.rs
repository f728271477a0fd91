//! Shortest resizing words: `|S·w⁻¹| ≠ |S|`.
//!
//! Words are explored by prepending letters. The word `w` is represented by
//! the vector `z_w = (χ(S·w⁻¹), 1)` of length `n + 1`; prepending `a` maps
//! it to `z_{aw}[q] = z_w[q·a]` and keeps the constant coordinate. Both
//! maps are linear, and so is the discrepancy `h(z) = Σ_{q<n} z[q] − |S|·z[n]`.
//! Once every vector met so far has `h = 0` and the span is closed under all
//! letters, no word can resize `S`.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::automaton::Automaton;
use crate::error::Result;
use crate::state_set::StateSet;
use crate::word::Word;

/// Exact-rational vector with the constant coordinate last.
pub type AugVector = Vec<BigRational>;

/// Outcome of [`RationalBasis::insert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    Inserted { pivot: usize },
    Dependent,
}

/// Linearly independent vectors kept in reduced form: vector `j` has a 1 at
/// its pivot coordinate and every other stored vector has a 0 there.
///
/// Stored fraction-free: row `j` is `numer[j] / denom`, where `denom` is the
/// determinant of the inserted vectors restricted to the pivot columns.
/// Every entry of the reduced form is a minor over that determinant, so the
/// numerators stay integral and updates divide exactly.
#[derive(Debug, Clone)]
pub struct RationalBasis {
    numer: Vec<Vec<BigInt>>,
    denom: BigInt,
    pivots: Vec<usize>,
}

impl Default for RationalBasis {
    fn default() -> Self {
        RationalBasis {
            numer: Vec::new(),
            denom: BigInt::one(),
            pivots: Vec::new(),
        }
    }
}

impl RationalBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    /// The stored vectors as exact rationals.
    pub fn vectors(&self) -> Vec<AugVector> {
        self.numer
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| BigRational::new(x.clone(), self.denom.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `g − Σ_r g(i_r)·g_r`, which is zero on every pivot coordinate.
    pub fn reduce(&self, g: &[BigRational]) -> AugVector {
        let mut residual: AugVector = g.to_vec();
        for (row, &p) in self.numer.iter().zip(&self.pivots) {
            if g[p].is_zero() {
                continue;
            }
            let c = &g[p] / BigRational::from_integer(self.denom.clone());
            for (x, y) in residual.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &c * BigRational::from_integer(y.clone());
                }
            }
        }
        residual
    }

    pub fn contains(&self, g: &[BigRational]) -> bool {
        self.reduce(g).iter().all(Zero::is_zero)
    }

    /// Adds `g` if it is independent of the stored vectors. The residual is
    /// normalized to 1 at its first nonzero coordinate, and that coordinate
    /// is then cleared from the earlier vectors so the reduced form holds.
    pub fn insert(&mut self, g: &[BigRational]) -> Insertion {
        // clearing denominators does not change the span
        let lcm = g.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let scaled: Vec<BigInt> = g.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        self.insert_scaled(scaled)
    }

    /// [`RationalBasis::insert`] for an integer vector.
    pub fn insert_integers(&mut self, g: &[i64]) -> Insertion {
        self.insert_scaled(g.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn insert_scaled(&mut self, g: Vec<BigInt>) -> Insertion {
        // denom · (g − Σ g(i_r)·g_r), kept integral
        let mut residual: Vec<BigInt> = if self.denom.is_one() {
            g.clone()
        } else {
            g.iter().map(|x| x * &self.denom).collect()
        };
        for (row, &p) in self.numer.iter().zip(&self.pivots) {
            let c = &g[p];
            if c.is_zero() {
                continue;
            }
            let unit = c.is_one();
            for (x, y) in residual.iter_mut().zip(row) {
                if y.is_zero() {
                    continue;
                }
                if unit {
                    *x -= y;
                } else {
                    *x -= c * y;
                }
            }
        }
        let Some(pivot) = residual.iter().position(|x| !x.is_zero()) else {
            return Insertion::Dependent;
        };
        if residual[pivot].is_negative() {
            residual.iter_mut().for_each(|x| *x = -&*x);
        }
        let new_denom = residual[pivot].clone();
        for row in &mut self.numer {
            let c = row[pivot].clone();
            for (x, y) in row.iter_mut().zip(&residual) {
                let t = &*x * &new_denom - &c * y;
                let (q, r) = t.div_rem(&self.denom);
                assert!(r.is_zero(), "fraction-free update must divide exactly");
                *x = q;
            }
        }
        self.numer.push(residual);
        self.pivots.push(pivot);
        self.denom = new_denom;
        Insertion::Inserted { pivot }
    }
}

/// Result of the resizing search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResizeResult {
    pub word: Option<Word>,
    /// Vectors in the basis when the search stopped.
    pub basis_size: usize,
    /// Child vectors tested against the discrepancy.
    pub vectors_checked: usize,
}

fn characteristic(s: &StateSet) -> Vec<i64> {
    let n = s.universe();
    let mut z: Vec<i64> = (0..n).map(|q| s.contains(q) as i64).collect();
    z.push(1);
    z
}

/// A shortest word `w` with `|S·w⁻¹| ≠ |S|`, or `None` if every preimage of
/// `S` has size `|S|`. The empty word is never returned.
pub fn shortest_resizing_word(a: &Automaton, s: &StateSet) -> Result<ResizeResult> {
    a.check_set(s)?;
    let size = s.len();
    let mut basis = RationalBasis::new();
    // Queue entries hold the word and its preimage set; generated vectors are
    // 0/1, so the set is the exact vector without its constant coordinate.
    let mut queue: VecDeque<(Word, StateSet)> = VecDeque::new();
    basis.insert_integers(&characteristic(s));
    queue.push_back((Word::empty(), s.clone()));
    let mut checked = 0;

    while let Some((w, pre)) = queue.pop_front() {
        for l in 0..a.num_letters() {
            let child = a.preimage_letter(&pre, l);
            checked += 1;
            let aw: Word = std::iter::once(l)
                .chain(w.letters().iter().copied())
                .collect();
            if child.len() != size {
                return Ok(ResizeResult {
                    word: Some(aw),
                    basis_size: basis.len(),
                    vectors_checked: checked,
                });
            }
            if let Insertion::Inserted { .. } = basis.insert_integers(&characteristic(&child)) {
                queue.push_back((aw, child));
            }
        }
    }
    Ok(ResizeResult {
        word: None,
        basis_size: basis.len(),
        vectors_checked: checked,
    })
}

/// Synchronizing shortcut: when the automaton is known to be synchronizing,
/// `S` is resizable iff `∅ ≠ S ≠ Q`. Returns `None` (unknown) otherwise.
pub fn resizable_decision_fast(s: &StateSet, synchronizing: bool) -> Option<bool> {
    synchronizing.then(|| !s.is_empty() && !s.is_full())
}
