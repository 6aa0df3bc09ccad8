//! Seeding optimization for Challenge the Champ tournaments.
//!
//! In a Challenge the Champ tournament the first seeded player is the initial
//! champion and every later player challenges whoever currently holds the
//! title. Match outcomes come from a [`StrengthGraph`]; each seeding yields a
//! value under a [`ValueSpec`], and the [`solvers`] look for seedings of
//! maximum value.
//!
//! The core is generic over the unsigned integer type holding values
//! ([`value::Value`]); the aliases below fix it to `u64`.

pub mod graph;
pub mod io;
pub mod reductions;
pub mod solvers;
pub mod tournament;
pub mod value;

pub use graph::{GraphError, HamPath, Player, StrengthGraph};
pub use solvers::{dispatch, exact_bruteforce, solve, AlgoChoice, Algorithm, SolveError};
pub use tournament::{
    caterpillar_to_seeding, seeding_to_caterpillar, simulate, Caterpillar, Match, Seeding, TournamentError,
    TournamentTrace,
};
pub use value::{Family, ProblemClass, Value, ValueError};

pub type ValueSpec = value::ValueSpec<u64>;
pub type Instance = value::Instance<u64>;
pub type SolveResult = solvers::SolveResult<u64>;
pub type Reduced = reductions::Reduced<u64>;
