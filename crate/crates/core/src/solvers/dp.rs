use crate::graph::StrengthGraph;
use crate::tournament::Seeding;
use crate::value::{Value, ValueError, ValueSpec};

use super::{Algorithm, SolveError, SolveResult};

/// Table of best values for win-count functions on a transitive tournament.
///
/// Players are strength ranks `0..n` (rank `r` beats every lower rank).
/// `best(i, k)` is the maximum value of a tournament with `k` matches among
/// some of the `i` weakest players, defined for `k <= i - 1`. The strongest of
/// those `i` players either sits out, or enters after a `k - l` match
/// sub-tournament among the others and wins `l` matches: one against the
/// sub-tournament champion and `l - 1` against players who have not played.
#[derive(Debug, Clone)]
pub struct WinCountDp<V> {
    n: usize,
    /// `best[i - 1][k]` for `k <= i - 1`.
    best: Vec<Vec<V>>,
    /// Wins taken by the strongest player in the optimum for `(i, k)`.
    choice: Vec<Vec<usize>>,
}

impl<V: Value> WinCountDp<V> {
    /// Fills the table from per-rank win-value rows (`rows[r][k - 1]` is the
    /// value of rank `r`'s `k`-th win). O(n³).
    pub fn build(rows: &[Vec<V>]) -> Result<Self, ValueError> {
        let n = rows.len();
        let mut prefix: Vec<Vec<V>> = Vec::with_capacity(n);
        for row in rows {
            let mut acc = vec![V::zero(); n];
            for l in 1..n {
                acc[l] = acc[l - 1].checked_add(&row[l - 1]).ok_or(ValueError::Overflow)?;
            }
            prefix.push(acc);
        }

        let mut best: Vec<Vec<V>> = Vec::with_capacity(n);
        let mut choice: Vec<Vec<usize>> = Vec::with_capacity(n);
        for i in 1..=n {
            let mut row_best = vec![V::zero(); i];
            let mut row_choice = vec![0; i];
            for k in 1..i {
                let mut top: Option<(V, usize)> = None;
                // l = 0 needs the sub-tournament to fit: k <= (i - 1) - 1.
                let l_min = if k <= i - 2 { 0 } else { 1 };
                for l in l_min..=k {
                    let rest = best[i - 2][k - l];
                    let v = prefix[i - 1][l].checked_add(&rest).ok_or(ValueError::Overflow)?;
                    if top.is_none_or(|(t, _)| v > t) {
                        top = Some((v, l));
                    }
                }
                let (v, l) = top.expect("at least one feasible split");
                row_best[k] = v;
                row_choice[k] = l;
            }
            best.push(row_best);
            choice.push(row_choice);
        }
        Ok(WinCountDp { n, best, choice })
    }

    /// `best(i, k)`, or `None` outside `1 <= i <= n`, `k <= i - 1`.
    pub fn get(&self, i: usize, k: usize) -> Option<V> {
        if i == 0 || i > self.n || k >= i {
            return None;
        }
        Some(self.best[i - 1][k])
    }

    /// Optimal value over all `n` players.
    pub fn value(&self) -> V {
        self.best[self.n - 1][self.n - 1]
    }

    /// Seeding over ranks attaining [`WinCountDp::value`].
    ///
    /// Fresh opponents are the lowest unused ranks.
    pub fn seeding_by_rank(&self) -> Vec<usize> {
        let n = self.n;
        let mut steps = Vec::new();
        let (mut i, mut k) = (n, n - 1);
        while k > 0 {
            let l = self.choice[i - 1][k];
            steps.push((i, l));
            k -= l;
            i -= 1;
        }
        let mut used = vec![false; n];
        let mut order = vec![0];
        used[0] = true;
        for &(i, l) in steps.iter().rev() {
            if l == 0 {
                continue;
            }
            order.push(i - 1);
            used[i - 1] = true;
            let fresh: Vec<usize> = (0..i - 1).filter(|&r| !used[r]).take(l - 1).collect();
            debug_assert_eq!(fresh.len(), l - 1);
            for r in fresh {
                used[r] = true;
                order.push(r);
            }
        }
        order
    }
}

/// Optimal seeding for any win-count family on an acyclic strength graph.
///
/// Threshold families are expanded into explicit tables first.
pub fn solve_dag_wincount_dp<V: Value>(g: &StrengthGraph, spec: &ValueSpec<V>) -> Result<SolveResult<V>, SolveError> {
    let strength = g.strength_order().ok_or(SolveError::NotADag)?;
    spec.validate(g.n())?;
    let (table, _offset) =
        spec.to_win_count_table().ok_or(SolveError::WrongFamily { algorithm: "dp", family: spec.family().as_str() })?;
    let rows: Vec<Vec<V>> = strength.iter().map(|&p| table[p].clone()).collect();
    let dp = WinCountDp::build(&rows)?;
    let seeding = Seeding(dp.seeding_by_rank().into_iter().map(|r| strength[r]).collect());
    SolveResult::from_seeding(g, spec, seeding, Algorithm::WinCountDp, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::simulate;

    #[test]
    fn three_player_example() {
        // Strongest has (1, 10), middle has (5, 0).
        let g = StrengthGraph::transitive(&[0, 1, 2]).unwrap();
        let spec = ValueSpec::<u64>::WinCount(vec![vec![3, 3], vec![5, 0], vec![1, 10]]);
        let r = solve_dag_wincount_dp(&g, &spec).unwrap();
        assert_eq!(r.value, 11);
        let t = simulate(&g, &r.seeding).unwrap();
        assert_eq!(t.wins[2], 2);
    }

    #[test]
    fn single_player() {
        let g = StrengthGraph::from_edges(1, &[]).unwrap();
        let r = solve_dag_wincount_dp(&g, &ValueSpec::<u64>::WinCount(vec![vec![]])).unwrap();
        assert_eq!((r.seeding.0, r.value), (vec![0], 0));
    }

    #[test]
    fn table_is_only_defined_below_diagonal() {
        let rows = vec![vec![1u64, 2, 3]; 4];
        let dp = WinCountDp::build(&rows).unwrap();
        for i in 1..=4 {
            assert_eq!(dp.get(i, 0), Some(0));
            assert!(dp.get(i, i - 1).is_some());
            assert_eq!(dp.get(i, i), None);
        }
        assert_eq!(dp.get(0, 0), None);
        // Strongest takes all three wins: 1 + 2 + 3.
        assert_eq!(dp.value(), 6);
    }

    #[test]
    fn reconstruction_covers_everyone() {
        let rows: Vec<Vec<u64>> = (0..6).map(|r| (0..5).map(|k| ((r * 7 + k * 3) % 5) as u64).collect()).collect();
        let dp = WinCountDp::build(&rows).unwrap();
        let mut order = dp.seeding_by_rank();
        order.sort_unstable();
        assert_eq!(order, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_cycles_and_other_families() {
        let cyc = StrengthGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let spec = ValueSpec::<u64>::WinCount(vec![vec![1, 1]; 3]);
        assert_eq!(solve_dag_wincount_dp(&cyc, &spec), Err(SolveError::NotADag));
        let g = StrengthGraph::transitive(&[0, 1, 2]).unwrap();
        assert!(matches!(
            solve_dag_wincount_dp(&g, &ValueSpec::<u64>::PlayerPopularity(vec![1; 3])),
            Err(SolveError::WrongFamily { .. })
        ));
    }
}
