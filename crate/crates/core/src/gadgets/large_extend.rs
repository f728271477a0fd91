use super::GadgetOutput;
use crate::automaton::Automaton;
use crate::error::Result;
use crate::state_set::StateSet;

/// Adds states `e = n`, `s = n + 1` and a letter `α = k`. Old letters act as
/// before on `Q` and fix `e`, `s`; `α` sends `S ∪ {s}` to `f` and everything
/// else to `e`. The subset is `Q`, so its complement has two states.
pub fn large_extend_gadget(a: &Automaton, s: &StateSet, f: usize) -> Result<GadgetOutput> {
    a.check_set(s)?;
    a.check_state(f)?;
    let n = a.num_states();
    let k = a.num_letters();
    let (e, fresh) = (n, n + 1);
    let width = k + 1;
    let mut table = vec![0; (n + 2) * width];
    for q in 0..n + 2 {
        for l in 0..k {
            table[q * width + l] = if q < n { a.step(q, l) } else { q };
        }
        let into_f = q == fresh || (q < n && s.contains(q));
        table[q * width + k] = if into_f { f } else { e };
    }
    let mut names: Vec<String> = (0..n).map(|q| format!("q{q}")).collect();
    names.push("e".to_string());
    names.push("s".to_string());
    let subset = StateSet::from_states(n + 2, 0..n)?;
    Ok(GadgetOutput::new(
        Automaton::new(n + 2, width, table)?,
        subset,
        names,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::samples::*;
    use crate::error::Error;
    use crate::word::Word;

    #[test]
    fn shape() {
        let s = StateSet::from_states(2, [1]).unwrap();
        let g = large_extend_gadget(&chain2(), &s, 0).unwrap();
        assert_eq!(g.automaton.num_states(), 4);
        assert_eq!(g.subset.len(), 2);
        assert!(g.names_are_bijective());
        let (e, fresh) = (g.state("e").unwrap(), g.state("s").unwrap());
        assert_eq!(g.automaton.step(fresh, 1), 0);
        assert_eq!(g.automaton.step(1, 1), 0);
        assert_eq!(g.automaton.step(0, 1), e);
        assert_eq!(g.automaton.step(e, 0), e);
        // `a` totally extends {r1}, so `aα` extends Q
        let pre = g
            .automaton
            .preimage_word(&g.subset, &Word::new(vec![0, 1]))
            .unwrap();
        assert_eq!(pre.len(), 3);
    }

    #[test]
    fn rejects_bad_f() {
        assert_eq!(
            large_extend_gadget(&chain2(), &StateSet::empty(2), 2).unwrap_err(),
            Error::StateOutOfRange {
                state: 2,
                states: 2
            }
        );
    }
}
