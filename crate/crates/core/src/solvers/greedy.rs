use crate::graph::{Player, StrengthGraph};
use crate::tournament::{caterpillar_to_seeding, Caterpillar};
use crate::value::{Value, ValueError, ValueSpec};

use super::{Algorithm, SolveError, SolveResult};

/// Backbone picks of the greedy, as strength ranks (0 = weakest).
///
/// The first pick is the most popular player overall; each later pick is the
/// most popular player strictly stronger than the previous one, until the
/// strongest player is picked. Ties go to the stronger player.
pub fn greedy_picks<V: Value>(p_by_rank: &[V]) -> Vec<usize> {
    let n = p_by_rank.len();
    let mut picks = Vec::new();
    let mut from = 0;
    while from < n {
        let mut best = from;
        for r in from + 1..n {
            if p_by_rank[r] >= p_by_rank[best] {
                best = r;
            }
        }
        picks.push(best);
        from = best + 1;
    }
    picks
}

/// Value of the greedy caterpillar without simulating it: the first pick wins
/// against everyone weaker, each later pick against the previous pick and
/// everyone in between.
pub fn greedy_closed_form<V: Value>(p_by_rank: &[V], picks: &[usize]) -> Result<V, ValueError> {
    let mut total = V::zero();
    let mut prev: Option<usize> = None;
    for &r in picks {
        let wins = match prev {
            None => r,
            Some(q) => r - q,
        };
        let term = V::from_usize(wins).and_then(|w| w.checked_mul(&p_by_rank[r])).ok_or(ValueError::Overflow)?;
        total = total.checked_add(&term).ok_or(ValueError::Overflow)?;
        prev = Some(r);
    }
    Ok(total)
}

/// Optimal seeding for popularity values on an acyclic strength graph.
pub fn solve_dag_popularity_greedy<V: Value>(g: &StrengthGraph, p: &[V]) -> Result<SolveResult<V>, SolveError> {
    let order = g.strength_order().ok_or(SolveError::NotADag)?;
    let spec = ValueSpec::PlayerPopularity(p.to_vec());
    spec.validate(g.n())?;
    let p_by_rank: Vec<V> = order.iter().map(|&pl| p[pl]).collect();
    let picks = greedy_picks(&p_by_rank);

    let mut backbone: Vec<Player> = Vec::with_capacity(picks.len());
    let mut leaves = Vec::with_capacity(picks.len());
    let mut from = 0;
    for &r in &picks {
        backbone.push(order[r]);
        leaves.push(order[from..r].to_vec());
        from = r + 1;
    }
    backbone.reverse();
    leaves.reverse();
    let seeding = caterpillar_to_seeding(g, &Caterpillar::new(backbone, leaves))?;
    SolveResult::from_seeding(g, &spec, seeding, Algorithm::Greedy, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::simulate;

    #[test]
    fn four_player_example() {
        // Popularity (0, 3, 1, 2) by strength 1..=4, players labelled by strength.
        let g = StrengthGraph::transitive(&[0, 1, 2, 3]).unwrap();
        let r = solve_dag_popularity_greedy(&g, &[0u64, 3, 1, 2]).unwrap();
        assert_eq!(r.value, 7);
        assert!(r.optimal);
        assert_eq!(r.seeding.0, vec![1, 0, 3, 2]);
        assert_eq!(greedy_picks(&[0u64, 3, 1, 2]), vec![1, 3]);
        assert_eq!(greedy_closed_form(&[0u64, 3, 1, 2], &[1, 3]), Ok(7));
    }

    #[test]
    fn constant_popularity() {
        let g = StrengthGraph::transitive(&[3, 0, 4, 1, 2]).unwrap();
        let r = solve_dag_popularity_greedy(&g, &[6u64; 5]).unwrap();
        assert_eq!(r.value, 24);
    }

    #[test]
    fn only_strongest_popular() {
        let order = [2, 4, 0, 3, 1];
        let g = StrengthGraph::transitive(&order).unwrap();
        let mut p = vec![0u64; 5];
        p[1] = 1;
        let r = solve_dag_popularity_greedy(&g, &p).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.seeding.0[0], 1);
        let t = simulate(&g, &r.seeding).unwrap();
        assert_eq!(t.wins[1], 4);
    }

    #[test]
    fn single_player_and_cycles() {
        let g = StrengthGraph::from_edges(1, &[]).unwrap();
        let r = solve_dag_popularity_greedy(&g, &[5u64]).unwrap();
        assert_eq!((r.seeding.0.clone(), r.value), (vec![0], 0));

        let cyc = StrengthGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(solve_dag_popularity_greedy(&cyc, &[1u64, 1, 1]), Err(SolveError::NotADag));
    }

    #[test]
    fn most_popular_is_weakest() {
        // First pick has nobody below it, so its backbone slot folds into a leaf.
        let g = StrengthGraph::transitive(&[0, 1, 2]).unwrap();
        let r = solve_dag_popularity_greedy(&g, &[9u64, 1, 2]).unwrap();
        assert_eq!(r.value, 2 + 2);
    }
}
