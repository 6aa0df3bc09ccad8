use crate::graph::StrengthGraph;
use crate::value::{Value, ValueSpec};

use super::binary::PopularityPartition;
use super::{Algorithm, SolveError, SolveResult};

/// Level-by-level approximation for popularity values on any strength graph.
///
/// For each popularity level, the players at that level are treated as the
/// only popular ones and the 0/1 partition algorithm is run; the seeding with
/// the highest true value wins. With `k` distinct levels one of which is zero
/// there are `k - 1` runs and the result is within `1/(k - 1)` of optimal;
/// without a zero level all `k` levels are tried and the guarantee is `1/k`.
///
/// A single level is solved exactly (every match is worth the same), and so
/// is `{0, v}`, which is a scaled 0/1 instance.
pub fn approx_popularity<V: Value>(g: &StrengthGraph, p: &[V]) -> Result<SolveResult<V>, SolveError> {
    let spec = ValueSpec::PlayerPopularity(p.to_vec());
    spec.validate(g.n())?;
    let levels = ValueSpec::popularity_levels(p);
    let k = levels.len();
    let has_zero = levels.last().is_some_and(|v| v.is_zero());
    let runs: Vec<V> = levels.iter().copied().filter(|v| !v.is_zero()).collect();
    let denominator = runs.len().max(1);
    let optimal = k == 1 || (k == 2 && has_zero);

    let mut best: Option<SolveResult<V>> = None;
    if runs.is_empty() {
        // Everybody has popularity zero.
        let seeding = PopularityPartition::new(g, &vec![false; g.n()]).seeding(g);
        best = Some(SolveResult::from_seeding(g, &spec, seeding, Algorithm::Approximation { denominator }, true)?);
    }
    for level in runs {
        let popular: Vec<bool> = p.iter().map(|&x| x == level).collect();
        let seeding = PopularityPartition::new(g, &popular).seeding(g);
        let candidate =
            SolveResult::from_seeding(g, &spec, seeding, Algorithm::Approximation { denominator }, optimal)?;
        if best.as_ref().is_none_or(|b| candidate.value > b.value) {
            best = Some(candidate);
        }
    }
    Ok(best.expect("at least one level was tried"))
}
