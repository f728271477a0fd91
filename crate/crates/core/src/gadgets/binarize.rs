use super::GadgetOutput;
use crate::automaton::Automaton;
use crate::error::Result;
use crate::state_set::StateSet;

/// Binary automaton on `Q × Σ`: state `(q, a_i)` has index `q·k + i`.
/// Letter 0 is `a'`, which applies `a_i` and keeps the coordinate; letter 1
/// is `b'`, which moves to `(q, a_{(i+1) mod k})`.
///
/// The subset is `S × {a_0} ∪ U_0` with `U_0 = Q × (Σ ∖ {a_0})`.
pub fn binarize(a: &Automaton, s: &StateSet) -> Result<GadgetOutput> {
    a.check_set(s)?;
    let n = a.num_states();
    let k = a.num_letters();
    let id = |q: usize, i: usize| q * k + i;
    let mut table = vec![0; n * k * 2];
    let mut names = Vec::with_capacity(n * k);
    let mut subset = StateSet::empty(n * k);
    for q in 0..n {
        for i in 0..k {
            let p = id(q, i);
            table[2 * p] = id(a.step(q, i), i);
            table[2 * p + 1] = id(q, (i + 1) % k);
            names.push(format!("({q},{i})"));
            if i != 0 || s.contains(q) {
                subset.insert(p);
            }
        }
    }
    Ok(GadgetOutput::new(
        Automaton::new(n * k, 2, table)?,
        subset,
        names,
    ))
}
