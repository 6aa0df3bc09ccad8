//! Instance generators from the NP-hardness reductions.
//!
//! Each generator maps a source instance (3-D matching or independent set) to
//! a tournament value-maximization instance with a target value, such that
//! the source is a YES instance iff some seeding reaches the target. Matching
//! witness constructors turn a source solution into such a seeding, and small
//! exhaustive oracles label source instances for testing.
//!
//! Edges the constructions leave free are oriented lower-id-beats-higher, so
//! identical inputs always give identical instances.

use std::fmt;

use thiserror::Error;

use crate::graph::GraphError;
use crate::tournament::TournamentError;
use crate::value::{Instance, ValueError};

mod independent_set;
mod three_dm;

pub use independent_set::{
    oracle_is, reduce_is_scaled, reduce_is_to_binary_wincount, reduce_is_to_linear_threshold, witness_is,
    IndependentSetInstance,
};
pub use three_dm::{
    oracle_3dm, reduce_3dm_to_pairbased_dag, reduce_3dm_to_ternary_popularity, witness_3dm, ThreeDmInstance,
};

/// Largest source instance the exhaustive oracles accept.
pub const ORACLE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("triple {index} is invalid: {reason}")]
    InvalidTriples { index: usize, reason: String },
    #[error("invalid independent-set instance: {0}")]
    InvalidGraph(String),
    #[error("source solution is infeasible: {0}")]
    InvalidSolution(String),
    #[error("source instance has {size} items, oracle limit is {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("witness does not belong to a {expected} reduction")]
    WrongReduction { expected: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Tournament(#[from] TournamentError),
    #[error(transparent)]
    Value(#[from] ValueError),
}

/// Which construction produced an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    /// 3-D matching to popularity values in {0, 1, 2}.
    ThreeDmPopularity,
    /// 3-D matching to 0/1 pair values on an acyclic graph.
    ThreeDmPair,
    /// Independent set to binary-threshold win-count values.
    IsBinary,
    /// Independent set to linear-after-threshold win-count values.
    IsLinear,
}

impl ReductionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ReductionKind::ThreeDmPopularity => "3dm-popularity",
            ReductionKind::ThreeDmPair => "3dm-pair",
            ReductionKind::IsBinary => "is-binary",
            ReductionKind::IsLinear => "is-linear",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Self::ThreeDmPopularity, Self::ThreeDmPair, Self::IsBinary, Self::IsLinear]
            .into_iter()
            .find(|k| k.as_str() == s)
    }
}

/// Conditions under which a generated instance may not carry the reduction's
/// YES/NO guarantee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// The source has no elements or no triples.
    Degenerate,
    /// Edge-player multiplicity differs from the `n²` the counting argument needs.
    ScaledMultiplicity { multiplicity: usize, required: usize },
    /// The linear threshold formula fell below 1 for this vertex; clamped to 1.
    ThresholdUnderflow { vertex: usize },
    /// Isolated vertex given an unreachable linear threshold.
    IsolatedVertex { vertex: usize },
    /// No seeding can reach the target.
    TargetUnreachable,
}

impl Warning {
    pub fn code(&self) -> &'static str {
        match self {
            Warning::Degenerate => "degenerate",
            Warning::ScaledMultiplicity { .. } => "scaled_multiplicity",
            Warning::ThresholdUnderflow { .. } => "threshold_underflow",
            Warning::IsolatedVertex { .. } => "isolated_vertex",
            Warning::TargetUnreachable => "target_unreachable",
        }
    }
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::Degenerate => f.write_str("source instance is empty; the target may not match YES instances"),
            Warning::ScaledMultiplicity { multiplicity, required } => {
                write!(f, "edge multiplicity {multiplicity} instead of {required}; the equivalence may fail")
            }
            Warning::ThresholdUnderflow { vertex } => {
                write!(f, "threshold of vertex {vertex} underflows the formula and was clamped to 1")
            }
            Warning::IsolatedVertex { vertex } => write!(f, "vertex {vertex} is isolated and can never score"),
            Warning::TargetUnreachable => f.write_str("target value is unreachable by any seeding"),
        }
    }
}

/// A generated instance with player names and validity warnings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced<V> {
    pub kind: ReductionKind,
    pub instance: Instance<V>,
    /// Symbolic name of each player, e.g. `h`, `S0`, `x1`.
    pub names: Vec<String>,
    pub warnings: Vec<Warning>,
}
