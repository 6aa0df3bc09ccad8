//! Seeding optimizers.
//!
//! Polynomial algorithms for the tractable classes (greedy on acyclic graphs
//! with popularity values, the partition algorithm for 0/1 popularity, the
//! win-count dynamic program on acyclic graphs), the level-by-level
//! approximation for popularity values, and an exhaustive search used as the
//! optimality oracle and for the NP-hard classes at small sizes.

use std::fmt;

use thiserror::Error;

use crate::graph::StrengthGraph;
use crate::tournament::{simulate, Seeding, TournamentError};
use crate::value::{Family, Instance, Value, ValueError, ValueSpec};

mod approx;
mod binary;
mod brute;
mod dp;
mod greedy;

pub use approx::approx_popularity;
pub use binary::{solve_binary_popularity, PopularityPartition};
pub use brute::{exact_bruteforce, solve_caterpillar_maxweight, DEFAULT_LIMIT};
pub use dp::{solve_dag_wincount_dp, WinCountDp};
pub use greedy::{greedy_closed_form, greedy_picks, solve_dag_popularity_greedy};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("strength graph is not acyclic")]
    NotADag,
    #[error("popularity of player {0} is not 0 or 1")]
    NonBinaryPopularity(usize),
    #[error("weight on edge ({0}, {1}) is not 0 or 1")]
    NonBinaryWeight(usize, usize),
    #[error("{algorithm} does not apply to {family} value functions")]
    WrongFamily { algorithm: &'static str, family: &'static str },
    #[error("{n} players exceeds the exhaustive search limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("no algorithm for {class} with {n} players (exhaustive search limit {limit}); this class is NP-hard")]
    NoAlgorithm { class: String, n: usize, limit: usize },
    #[error(transparent)]
    Value(#[from] ValueError),
    #[error(transparent)]
    Tournament(#[from] TournamentError),
}

/// Which algorithm produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Greedy,
    BinaryPopularity,
    WinCountDp,
    /// Level-by-level approximation with guarantee `1 / denominator`.
    Approximation {
        denominator: usize,
    },
    BruteForce,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Greedy => f.write_str("greedy"),
            Algorithm::BinaryPopularity => f.write_str("binary"),
            Algorithm::WinCountDp => f.write_str("dp"),
            Algorithm::Approximation { denominator } => write!(f, "approx(1/{denominator})"),
            Algorithm::BruteForce => f.write_str("brute"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<V> {
    pub seeding: Seeding,
    /// Always equal to evaluating the seeding's simulated trace.
    pub value: V,
    pub algorithm: Algorithm,
    /// True only when the algorithm guarantees optimality on this instance.
    pub optimal: bool,
    pub meets_target: Option<bool>,
}

impl<V: Value> SolveResult<V> {
    /// Evaluates `seeding` and wraps it up.
    pub(crate) fn from_seeding(
        g: &StrengthGraph,
        spec: &ValueSpec<V>,
        seeding: Seeding,
        algorithm: Algorithm,
        optimal: bool,
    ) -> Result<Self, SolveError> {
        let value = spec.evaluate(&simulate(g, &seeding)?)?;
        Ok(SolveResult { seeding, value, algorithm, optimal, meets_target: None })
    }

    pub fn with_target(mut self, target: Option<V>) -> Self {
        self.meets_target = target.map(|t| self.value >= t);
        self
    }
}

/// Algorithm selection for [`solve`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AlgoChoice {
    #[default]
    Auto,
    Greedy,
    Binary,
    Dp,
    Approx,
    Brute,
}

/// Runs the requested algorithm, or picks one with [`dispatch`].
pub fn solve<V: Value>(inst: &Instance<V>, algo: AlgoChoice, limit: usize) -> Result<SolveResult<V>, SolveError> {
    let g = &inst.graph;
    let popularity = |name| match &inst.value {
        ValueSpec::PlayerPopularity(p) => Ok(p.as_slice()),
        other => Err(SolveError::WrongFamily { algorithm: name, family: other.family().as_str() }),
    };
    let result = match algo {
        AlgoChoice::Auto => return dispatch(inst, limit),
        AlgoChoice::Greedy => solve_dag_popularity_greedy(g, popularity("greedy")?)?,
        AlgoChoice::Binary => solve_binary_popularity(g, popularity("binary")?)?,
        AlgoChoice::Approx => approx_popularity(g, popularity("approx")?)?,
        AlgoChoice::Dp => solve_dag_wincount_dp(g, &inst.value)?,
        AlgoChoice::Brute => exact_bruteforce(inst, limit)?,
    };
    Ok(result.with_target(inst.target))
}

/// Picks the best available algorithm for the instance's class.
///
/// Acyclic popularity goes to the greedy, acyclic win-count families to the
/// dynamic program, 0/1 popularity to the partition algorithm. Everything
/// else is NP-hard: exhaustive search up to `limit` players, then the
/// approximation for popularity values or [`SolveError::NoAlgorithm`].
pub fn dispatch<V: Value>(inst: &Instance<V>, limit: usize) -> Result<SolveResult<V>, SolveError> {
    let class = inst.classify();
    let g = &inst.graph;
    let n = inst.n();
    let result = match (&inst.value, class.dag) {
        (ValueSpec::PlayerPopularity(p), true) => solve_dag_popularity_greedy(g, p)?,
        (ValueSpec::PlayerPopularity(p), false) => {
            let levels = ValueSpec::popularity_levels(p);
            let exact_by_levels = levels.len() == 1 || (levels.len() == 2 && levels[1].is_zero());
            if exact_by_levels && levels[0] <= V::one() {
                solve_binary_popularity(g, p)?
            } else if exact_by_levels || n > limit {
                approx_popularity(g, p)?
            } else {
                exact_bruteforce(inst, limit)?
            }
        }
        (ValueSpec::WinCount(_) | ValueSpec::BinaryThreshold(_) | ValueSpec::LinearAfterThreshold(_), true) => {
            solve_dag_wincount_dp(g, &inst.value)?
        }
        (spec, dag) => {
            if n > limit {
                let graph = if dag { "acyclic" } else { "cyclic" };
                let family = match spec.family() {
                    Family::Pair => "pair-based",
                    other => other.as_str(),
                };
                return Err(SolveError::NoAlgorithm { class: format!("{family} values on {graph} graphs"), n, limit });
            }
            exact_bruteforce(inst, limit)?
        }
    };
    Ok(result.with_target(inst.target))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_tournament(n: usize, seed: u64) -> StrengthGraph {
        let mut x = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
        StrengthGraph::from_fn(n, |_, _| {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            x & 1 == 1
        })
        .unwrap()
    }

    fn cyclic(n: usize) -> StrengthGraph {
        (0..).map(|s| random_tournament(n, s)).find(|g| !g.is_dag()).unwrap()
    }

    #[test]
    fn dag_binary_threshold_routes_to_dp() {
        let g = StrengthGraph::transitive(&[0, 1, 2, 3, 4]).unwrap();
        let inst = Instance::new(g, ValueSpec::<u64>::BinaryThreshold(vec![1, 1, 2, 1, 1]), Some(2)).unwrap();
        let r = dispatch(&inst, DEFAULT_LIMIT).unwrap();
        assert_eq!(r.algorithm, Algorithm::WinCountDp);
        assert!(r.optimal);
        assert_eq!(r.meets_target, Some(true));
    }

    #[test]
    fn cyclic_ternary_popularity_beyond_limit_routes_to_approx() {
        let g = cyclic(20);
        let p: Vec<u64> = (0..20).map(|i| i % 3).collect();
        let r = dispatch(&Instance::new(g, ValueSpec::PlayerPopularity(p), None).unwrap(), DEFAULT_LIMIT).unwrap();
        assert!(matches!(r.algorithm, Algorithm::Approximation { denominator: 2 }));
        assert!(!r.optimal);
        assert_eq!(r.meets_target, None);
    }

    #[test]
    fn cyclic_pair_small_routes_to_brute() {
        let g = cyclic(8);
        let spec = ValueSpec::<u64>::pair_from_fn(8, |i, j| ((i * 3 + j) % 4) as u64);
        let r = dispatch(&Instance::new(g, spec, None).unwrap(), DEFAULT_LIMIT).unwrap();
        assert_eq!(r.algorithm, Algorithm::BruteForce);
        assert!(r.optimal);
    }

    #[test]
    fn cyclic_wincount_beyond_limit_has_no_algorithm() {
        let g = cyclic(12);
        let inst = Instance::new(g, ValueSpec::<u64>::BinaryThreshold(vec![2; 12]), None).unwrap();
        match dispatch(&inst, DEFAULT_LIMIT) {
            Err(SolveError::NoAlgorithm { class, n: 12, limit: 10 }) => assert!(class.contains("cyclic")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn binary_popularity_routes_to_partition() {
        let g = cyclic(15);
        let p: Vec<u64> = (0..15).map(|i| (i % 2) as u64).collect();
        let r = dispatch(&Instance::new(g, ValueSpec::PlayerPopularity(p), None).unwrap(), DEFAULT_LIMIT).unwrap();
        assert_eq!(r.algorithm, Algorithm::BinaryPopularity);
        assert!(r.optimal);
    }

    #[test]
    fn forced_algorithm_checks_family() {
        let g = StrengthGraph::transitive(&[0, 1, 2]).unwrap();
        let inst = Instance::new(g, ValueSpec::<u64>::BinaryThreshold(vec![1; 3]), None).unwrap();
        assert!(matches!(solve(&inst, AlgoChoice::Greedy, 10), Err(SolveError::WrongFamily { .. })));
        assert_eq!(solve(&inst, AlgoChoice::Dp, 10).unwrap().value, 2);
    }

    #[test]
    fn algorithm_tags() {
        assert_eq!(Algorithm::Approximation { denominator: 2 }.to_string(), "approx(1/2)");
        assert_eq!(Algorithm::BruteForce.to_string(), "brute");
    }
}
