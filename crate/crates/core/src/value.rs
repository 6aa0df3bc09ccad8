//! Tournament value functions.
//!
//! Four families are supported: player popularity, win-count (with the
//! binary-threshold and linear-after-threshold special cases as their own
//! variants) and pair-based values. All arithmetic is exact and checked; the
//! value type is any unsigned primitive integer.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{NumCast, PrimInt, Unsigned};
use thiserror::Error;

use crate::graph::{Player, StrengthGraph};
use crate::tournament::TournamentTrace;

/// Scalar used for match and tournament values.
pub trait Value: PrimInt + Unsigned + Debug + Display + Default + Hash + Send + Sync + 'static {
    fn from_usize(x: usize) -> Option<Self> {
        <Self as NumCast>::from(x)
    }

    fn checked_sum<I: IntoIterator<Item = Self>>(items: I) -> Option<Self> {
        items.into_iter().try_fold(Self::zero(), |acc, x| acc.checked_add(&x))
    }
}

impl<T> Value for T where T: PrimInt + Unsigned + Debug + Display + Default + Hash + Send + Sync + 'static {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValueError {
    #[error("value function covers {found} players, graph has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("win-count table for player {player} has length {found}, expected {expected}")]
    LengthMismatch { player: Player, expected: usize, found: usize },
    #[error("linear threshold for player {0} must be at least 1")]
    ZeroThreshold(Player),
    #[error("wins {wins} out of range 0..={max}")]
    OutOfRange { wins: usize, max: usize },
    #[error("value arithmetic overflowed")]
    Overflow,
    #[error("value function is not win-count based")]
    NotWinCount,
}

/// Tagged union over the supported value-function families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueSpec<V> {
    /// Each win by player `i` is worth `p[i]`.
    PlayerPopularity(Vec<V>),
    /// The `k`-th win of player `i` is worth `f[i][k - 1]`; rows have length `n - 1`.
    WinCount(Vec<Vec<V>>),
    /// Player `i` contributes 1 iff it wins at least `lambda[i]` matches.
    BinaryThreshold(Vec<usize>),
    /// Player `i` contributes `max(0, w_i - lambda[i] + 1)`.
    LinearAfterThreshold(Vec<usize>),
    /// A win of `i` over `j` is worth `f[i * n + j]`.
    PairBased { n: usize, f: Vec<V> },
}

/// Value-function family, without payload.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Popularity,
    WinCount,
    BinaryThreshold,
    LinearThreshold,
    Pair,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Popularity => "popularity",
            Family::WinCount => "wincount",
            Family::BinaryThreshold => "binary_threshold",
            Family::LinearThreshold => "linear_threshold",
            Family::Pair => "pair",
        }
    }
}

/// What solver dispatch needs to know about an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemClass {
    pub family: Family,
    pub dag: bool,
    /// Number of distinct popularity values, for the popularity family only.
    pub popularity_levels: Option<usize>,
}

impl<V: Value> ValueSpec<V> {
    pub fn family(&self) -> Family {
        match self {
            ValueSpec::PlayerPopularity(_) => Family::Popularity,
            ValueSpec::WinCount(_) => Family::WinCount,
            ValueSpec::BinaryThreshold(_) => Family::BinaryThreshold,
            ValueSpec::LinearAfterThreshold(_) => Family::LinearThreshold,
            ValueSpec::PairBased { .. } => Family::Pair,
        }
    }

    /// Pair-based values from a closure over `(winner, loser)`.
    pub fn pair_from_fn(n: usize, mut f: impl FnMut(Player, Player) -> V) -> Self {
        let mut values = vec![V::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    values[i * n + j] = f(i, j);
                }
            }
        }
        ValueSpec::PairBased { n, f: values }
    }

    /// Number of players the value function is defined on.
    pub fn players(&self) -> usize {
        match self {
            ValueSpec::PlayerPopularity(p) => p.len(),
            ValueSpec::WinCount(f) => f.len(),
            ValueSpec::BinaryThreshold(l) | ValueSpec::LinearAfterThreshold(l) => l.len(),
            ValueSpec::PairBased { n, .. } => *n,
        }
    }

    /// Checks dimensions and thresholds against a graph with `n` players.
    pub fn validate(&self, n: usize) -> Result<(), ValueError> {
        let found = self.players();
        if found != n {
            return Err(ValueError::DimensionMismatch { expected: n, found });
        }
        match self {
            ValueSpec::WinCount(f) => {
                if let Some((player, row)) = f.iter().enumerate().find(|(_, row)| row.len() != n - 1) {
                    return Err(ValueError::LengthMismatch { player, expected: n - 1, found: row.len() });
                }
            }
            ValueSpec::LinearAfterThreshold(l) => {
                if let Some(p) = l.iter().position(|&x| x == 0) {
                    return Err(ValueError::ZeroThreshold(p));
                }
            }
            ValueSpec::PairBased { f, .. } if f.len() != n * n => {
                return Err(ValueError::DimensionMismatch { expected: n * n, found: f.len() });
            }
            _ => {}
        }
        Ok(())
    }

    /// Tournament value of a simulated trace, computed from the family's
    /// closed-form definition.
    pub fn evaluate(&self, trace: &TournamentTrace) -> Result<V, ValueError> {
        let n = trace.n();
        self.validate(n)?;
        let count = |x: usize| V::from_usize(x).ok_or(ValueError::Overflow);
        let sum = |items: Vec<V>| V::checked_sum(items).ok_or(ValueError::Overflow);
        match self {
            ValueSpec::PlayerPopularity(p) => {
                let terms = trace
                    .wins
                    .iter()
                    .zip(p)
                    .map(|(&w, &pi)| count(w)?.checked_mul(&pi).ok_or(ValueError::Overflow))
                    .collect::<Result<Vec<_>, _>>()?;
                sum(terms)
            }
            ValueSpec::WinCount(_) => {
                let terms =
                    (0..n).map(|i| self.cumulative_win_value(i, trace.wins[i])).collect::<Result<Vec<_>, _>>()?;
                sum(terms)
            }
            ValueSpec::BinaryThreshold(l) => count(trace.wins.iter().zip(l).filter(|(&w, &li)| w >= li).count()),
            ValueSpec::LinearAfterThreshold(l) => {
                count(trace.wins.iter().zip(l).map(|(&w, &li)| (w + 1).saturating_sub(li)).sum())
            }
            ValueSpec::PairBased { f, .. } => {
                let terms =
                    trace.beaten.iter().enumerate().flat_map(|(i, ms)| ms.iter().map(move |&j| f[i * n + j])).collect();
                sum(terms)
            }
        }
    }

    /// Prefix sum `F_i(wins)` of a win-count table; `F_i(0) = 0`.
    pub fn cumulative_win_value(&self, player: Player, wins: usize) -> Result<V, ValueError> {
        let ValueSpec::WinCount(f) = self else {
            return Err(ValueError::NotWinCount);
        };
        let row = f.get(player).ok_or(ValueError::DimensionMismatch { expected: player + 1, found: f.len() })?;
        if wins > row.len() {
            return Err(ValueError::OutOfRange { wins, max: row.len() });
        }
        V::checked_sum(row[..wins].iter().copied()).ok_or(ValueError::Overflow)
    }

    /// Value added when `winner` beats `loser` for its `win_index`-th win
    /// (1-based). Together with [`ValueSpec::base_value`] this gives the
    /// tournament value incrementally, match by match.
    #[inline]
    pub fn match_value(&self, winner: Player, loser: Player, win_index: usize) -> V {
        match self {
            ValueSpec::PlayerPopularity(p) => p[winner],
            ValueSpec::WinCount(f) => f[winner][win_index - 1],
            ValueSpec::BinaryThreshold(l) => {
                if win_index == l[winner] {
                    V::one()
                } else {
                    V::zero()
                }
            }
            ValueSpec::LinearAfterThreshold(l) => {
                if win_index >= l[winner] {
                    V::one()
                } else {
                    V::zero()
                }
            }
            ValueSpec::PairBased { n, f } => f[winner * n + loser],
        }
    }

    /// Value every seeding receives before any match: the players whose
    /// binary threshold is zero.
    pub fn base_value(&self) -> Result<V, ValueError> {
        match self {
            ValueSpec::BinaryThreshold(l) => {
                V::from_usize(l.iter().filter(|&&x| x == 0).count()).ok_or(ValueError::Overflow)
            }
            _ => Ok(V::zero()),
        }
    }

    /// Expands any win-count family into an explicit table plus a constant
    /// offset (the binary-threshold players with threshold zero).
    ///
    /// Returns `None` for popularity and pair-based values.
    pub fn to_win_count_table(&self) -> Option<(Vec<Vec<V>>, V)> {
        let n = self.players();
        let len = n.saturating_sub(1);
        match self {
            ValueSpec::PlayerPopularity(_) | ValueSpec::PairBased { .. } => None,
            ValueSpec::WinCount(f) => Some((f.clone(), V::zero())),
            ValueSpec::BinaryThreshold(l) => {
                let table = l
                    .iter()
                    .map(|&li| (1..=len).map(|k| if k == li { V::one() } else { V::zero() }).collect())
                    .collect();
                Some((table, self.base_value().ok()?))
            }
            ValueSpec::LinearAfterThreshold(l) => {
                let table = l
                    .iter()
                    .map(|&li| (1..=len).map(|k| if k >= li { V::one() } else { V::zero() }).collect())
                    .collect();
                Some((table, V::zero()))
            }
        }
    }

    /// The popularity vector as a constant win-count table.
    pub fn popularity_as_win_count(p: &[V]) -> Self {
        let len = p.len().saturating_sub(1);
        ValueSpec::WinCount(p.iter().map(|&pi| vec![pi; len]).collect())
    }

    /// Distinct values of a popularity vector, largest first.
    pub fn popularity_levels(p: &[V]) -> Vec<V> {
        let mut levels = p.to_vec();
        levels.sort_unstable_by(|a, b| b.cmp(a));
        levels.dedup();
        levels
    }

    pub fn classify(&self, g: &StrengthGraph) -> ProblemClass {
        let popularity_levels = match self {
            ValueSpec::PlayerPopularity(p) => Some(Self::popularity_levels(p).len()),
            _ => None,
        };
        ProblemClass { family: self.family(), dag: g.is_dag(), popularity_levels }
    }
}

/// A value-maximization instance: graph, value function and optional target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance<V> {
    pub graph: StrengthGraph,
    pub value: ValueSpec<V>,
    pub target: Option<V>,
}

impl<V: Value> Instance<V> {
    pub fn new(graph: StrengthGraph, value: ValueSpec<V>, target: Option<V>) -> Result<Self, ValueError> {
        value.validate(graph.n())?;
        Ok(Self { graph, value, target })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn classify(&self) -> ProblemClass {
        self.value.classify(&self.graph)
    }
}
