use crate::graph::{Player, StrengthGraph};
use crate::tournament::{caterpillar_to_seeding, Caterpillar, Seeding};
use crate::value::{Value, ValueSpec};

use super::{Algorithm, SolveError, SolveResult};

/// Three-way split of the players for 0/1 popularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PopularityPartition {
    pub popular: Vec<Player>,
    /// Unpopular players that beat every popular player.
    pub dominant: Vec<Player>,
    /// Unpopular players beaten by at least one popular player.
    pub beatable: Vec<Player>,
}

impl PopularityPartition {
    pub fn new(g: &StrengthGraph, popular: &[bool]) -> Self {
        let popular_ids = (0..g.n()).filter(|&v| popular[v]).collect();
        let mut part = PopularityPartition { popular: popular_ids, dominant: Vec::new(), beatable: Vec::new() };
        for v in (0..g.n()).filter(|&v| !popular[v]) {
            if part.popular.iter().all(|&q| g.beats(v, q)) {
                part.dominant.push(v);
            } else {
                part.beatable.push(v);
            }
        }
        part
    }

    /// Upper bound on the number of value-1 matches, attained by the
    /// partition algorithm: `|popular| + |beatable| - 1`, or 0 when nobody
    /// is popular.
    pub fn optimum(&self) -> usize {
        if self.popular.is_empty() {
            0
        } else {
            self.popular.len() + self.beatable.len() - 1
        }
    }

    /// Caterpillar achieving [`PopularityPartition::optimum`].
    ///
    /// The backbone is a Hamiltonian path through the dominant players
    /// followed by one through the popular players (the last dominant player
    /// beats the first popular one). Each beatable player hangs off the first
    /// popular backbone player that beats it.
    pub fn caterpillar(&self, g: &StrengthGraph) -> Caterpillar {
        if self.popular.is_empty() {
            let path = g.hamiltonian_path().order;
            let k = path.len();
            return Caterpillar::new(path, vec![Vec::new(); k]);
        }
        let mut backbone = g.hamiltonian_path_of(&self.dominant);
        let popular_from = backbone.len();
        backbone.extend(g.hamiltonian_path_of(&self.popular));
        let mut leaves = vec![Vec::new(); backbone.len()];
        for &u in &self.beatable {
            let slot = (popular_from..backbone.len())
                .find(|&i| g.beats(backbone[i], u))
                .expect("beatable player is beaten by some popular player");
            leaves[slot].push(u);
        }
        Caterpillar::new(backbone, leaves)
    }

    pub fn seeding(&self, g: &StrengthGraph) -> Seeding {
        caterpillar_to_seeding(g, &self.caterpillar(g)).expect("partition caterpillar is valid by construction")
    }
}

/// Optimal seeding when every popularity is 0 or 1, on any strength graph.
pub fn solve_binary_popularity<V: Value>(g: &StrengthGraph, p: &[V]) -> Result<SolveResult<V>, SolveError> {
    let spec = ValueSpec::PlayerPopularity(p.to_vec());
    spec.validate(g.n())?;
    if let Some(bad) = p.iter().position(|&x| x > V::one()) {
        return Err(SolveError::NonBinaryPopularity(bad));
    }
    let popular: Vec<bool> = p.iter().map(|x| x.is_one()).collect();
    let seeding = PopularityPartition::new(g, &popular).seeding(g);
    SolveResult::from_seeding(g, &spec, seeding, Algorithm::BinaryPopularity, true)
}
