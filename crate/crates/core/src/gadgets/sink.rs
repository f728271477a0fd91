use super::{require_binary, GadgetOutput};
use crate::automaton::Automaton;
use crate::error::Result;
use crate::state_set::StateSet;

/// Adds a sink `z` reachable by a word from every state while staying
/// binary. States: `q_i` at `i`, `qᵃ_i` at `n + i`, `qᵇ_i` at `2n + i`, `z`
/// at `3n`. Letters `a`, `b` are 0 and 1:
/// `q_i → qᵃ_i` by `a` and `→ qᵇ_i` by `b`; `qᵃ_i → δ(q_i, x)` by `x`;
/// `qᵇ_i → z` by both letters; `z` is fixed.
///
/// `S ⊆ Q` is embedded as `{q_i : i ∈ S}`.
pub fn sink_binarize(a: &Automaton, s: &StateSet) -> Result<GadgetOutput> {
    require_binary(a)?;
    a.check_set(s)?;
    let n = a.num_states();
    let z = 3 * n;
    let mut table = vec![0; 2 * (3 * n + 1)];
    let mut names = vec![String::new(); 3 * n + 1];
    for i in 0..n {
        table[2 * i] = n + i;
        table[2 * i + 1] = 2 * n + i;
        table[2 * (n + i)] = a.step(i, 0);
        table[2 * (n + i) + 1] = a.step(i, 1);
        table[2 * (2 * n + i)] = z;
        table[2 * (2 * n + i) + 1] = z;
        names[i] = format!("q{i}");
        names[n + i] = format!("q{i}^a");
        names[2 * n + i] = format!("q{i}^b");
    }
    table[2 * z] = z;
    table[2 * z + 1] = z;
    names[z] = "z".to_string();
    let subset = StateSet::from_states(3 * n + 1, s.iter())?;
    Ok(GadgetOutput::new(
        Automaton::new(3 * n + 1, 2, table)?,
        subset,
        names,
    ))
}
