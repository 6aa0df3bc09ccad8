use rayon::prelude::*;

use crate::graph::{Player, StrengthGraph};
use crate::tournament::{seeding_to_caterpillar, Caterpillar, Seeding};
use crate::value::{Instance, Value, ValueError, ValueSpec};

use super::{Algorithm, SolveError, SolveResult};

/// Default player limit for exhaustive search (10! seedings).
pub const DEFAULT_LIMIT: usize = 10;

/// Depth-first walk over all seedings in lexicographic order, tracking the
/// value incrementally match by match.
struct Search<'a, V> {
    g: &'a StrengthGraph,
    spec: &'a ValueSpec<V>,
    used: Vec<bool>,
    wins: Vec<usize>,
    order: Vec<Player>,
    best: Option<(V, Vec<Player>)>,
    overflow: bool,
}

impl<'a, V: Value> Search<'a, V> {
    fn new(g: &'a StrengthGraph, spec: &'a ValueSpec<V>) -> Self {
        let n = g.n();
        Search {
            g,
            spec,
            used: vec![false; n],
            wins: vec![0; n],
            order: Vec::with_capacity(n),
            best: None,
            overflow: false,
        }
    }

    fn run_from(mut self, first: Player, base: V) -> Result<Option<(V, Vec<Player>)>, ValueError> {
        self.used[first] = true;
        self.order.push(first);
        self.descend(first, base);
        if self.overflow {
            return Err(ValueError::Overflow);
        }
        Ok(self.best)
    }

    fn descend(&mut self, champ: Player, value: V) {
        let n = self.g.n();
        if self.order.len() == n {
            // Strict comparison keeps the lexicographically first maximizer.
            if self.best.as_ref().is_none_or(|(b, _)| value > *b) {
                self.best = Some((value, self.order.clone()));
            }
            return;
        }
        for challenger in 0..n {
            if self.used[challenger] {
                continue;
            }
            let winner = self.g.winner(challenger, champ);
            let loser = if winner == challenger { champ } else { challenger };
            self.wins[winner] += 1;
            let gain = self.spec.match_value(winner, loser, self.wins[winner]);
            match value.checked_add(&gain) {
                Some(next) => {
                    self.used[challenger] = true;
                    self.order.push(challenger);
                    self.descend(winner, next);
                    self.order.pop();
                    self.used[challenger] = false;
                }
                None => self.overflow = true,
            }
            self.wins[winner] -= 1;
        }
    }
}

/// Best seeding by enumerating all `n!` of them.
///
/// Ties go to the lexicographically smallest seeding. Branches for different
/// initial champs run in parallel; the merge preserves the sequential answer.
pub fn exact_bruteforce<V: Value>(inst: &Instance<V>, limit: usize) -> Result<SolveResult<V>, SolveError> {
    let g = &inst.graph;
    let n = g.n();
    if n > limit {
        return Err(SolveError::TooLarge { n, limit });
    }
    inst.value.validate(n)?;
    let base = inst.value.base_value()?;
    let branches: Vec<Option<(V, Vec<Player>)>> = (0..n)
        .into_par_iter()
        .map(|first| Search::new(g, &inst.value).run_from(first, base))
        .collect::<Result<_, _>>()?;
    let mut best: Option<(V, Vec<Player>)> = None;
    for (v, order) in branches.into_iter().flatten() {
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, order));
        }
    }
    let (value, order) = best.expect("at least one seeding");
    let result = SolveResult::from_seeding(g, &inst.value, Seeding(order), Algorithm::BruteForce, true)?;
    debug_assert_eq!(result.value, value);
    Ok(result.with_target(inst.target))
}

/// Maximum-weight spanning caterpillar arborescence of an acyclic graph with
/// 0/1 arc weights (`weights[i * n + j]` on arc `i -> j`), found by exhaustive
/// search over the equivalent pair-valued tournament.
pub fn solve_caterpillar_maxweight<V: Value>(
    g: &StrengthGraph,
    weights: &[V],
    limit: usize,
) -> Result<(Caterpillar, V), SolveError> {
    if !g.is_dag() {
        return Err(SolveError::NotADag);
    }
    let n = g.n();
    let spec = ValueSpec::PairBased { n, f: weights.to_vec() };
    spec.validate(n)?;
    for (i, j) in g.edges() {
        if weights[i * n + j] > V::one() {
            return Err(SolveError::NonBinaryWeight(i, j));
        }
    }
    let inst = Instance { graph: g.clone(), value: spec, target: None };
    let r = exact_bruteforce(&inst, limit)?;
    Ok((seeding_to_caterpillar(g, &r.seeding)?, r.value))
}
