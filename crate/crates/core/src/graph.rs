//! Complete directed strength graphs.
//!
//! A strength graph fixes the outcome of every possible match: for each
//! unordered pair of players exactly one of them beats the other. Players are
//! identified by `0..n`.

use std::fmt;

use thiserror::Error;

/// A player identifier, `0..n`.
pub type Player = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("strength graph needs at least one player")]
    NoPlayers,
    #[error("edge ({0}, {1}) names a player outside 0..{2}")]
    PlayerOutOfRange(Player, Player, usize),
    #[error("self loop on player {0}")]
    SelfLoop(Player),
    #[error("pair {{{0}, {1}}} is given more than once")]
    DuplicateEdge(Player, Player),
    #[error("pair {{{0}, {1}}} has no edge")]
    MissingEdge(Player, Player),
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset names player {0}, outside 0..{1}")]
    SubsetOutOfRange(Player, usize),
    #[error("strength order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
}

/// Complete antisymmetric beat relation over `n` players, stored densely.
#[derive(Clone, PartialEq, Eq)]
pub struct StrengthGraph {
    n: usize,
    beats: Vec<bool>,
}

impl fmt::Debug for StrengthGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StrengthGraph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl StrengthGraph {
    /// Builds a graph from a list of `(winner, loser)` pairs, which must cover
    /// every unordered pair exactly once.
    pub fn from_edges(n: usize, edges: &[(Player, Player)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoPlayers);
        }
        let mut beats = vec![false; n * n];
        for &(w, l) in edges {
            if w >= n || l >= n {
                return Err(GraphError::PlayerOutOfRange(w, l, n));
            }
            if w == l {
                return Err(GraphError::SelfLoop(w));
            }
            if beats[w * n + l] || beats[l * n + w] {
                return Err(GraphError::DuplicateEdge(w.min(l), w.max(l)));
            }
            beats[w * n + l] = true;
        }
        for i in 0..n {
            for j in i + 1..n {
                if !beats[i * n + j] && !beats[j * n + i] {
                    return Err(GraphError::MissingEdge(i, j));
                }
            }
        }
        Ok(Self { n, beats })
    }

    /// Builds a graph where, for `i < j`, `i` beats `j` iff `lower_wins(i, j)`.
    ///
    /// The predicate is only consulted for `i < j`, so the result is always a
    /// valid complete antisymmetric relation.
    pub fn from_fn(n: usize, mut lower_wins: impl FnMut(Player, Player) -> bool) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoPlayers);
        }
        let mut beats = vec![false; n * n];
        for i in 0..n {
            for j in i + 1..n {
                if lower_wins(i, j) {
                    beats[i * n + j] = true;
                } else {
                    beats[j * n + i] = true;
                }
            }
        }
        Ok(Self { n, beats })
    }

    /// Transitive tournament where later entries of `order` beat earlier ones.
    ///
    /// `order` must be a permutation of `0..order.len()`; it is listed weakest
    /// first, matching [`StrengthGraph::strength_order`].
    pub fn transitive(order: &[Player]) -> Result<Self, GraphError> {
        let n = order.len();
        let mut rank = vec![usize::MAX; n];
        for (r, &p) in order.iter().enumerate() {
            if p >= n || rank[p] != usize::MAX {
                return Err(GraphError::NotAPermutation(n));
            }
            rank[p] = r;
        }
        Self::from_fn(n, |i, j| rank[i] > rank[j])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `winner` beats `loser`. Irreflexive.
    #[inline]
    pub fn beats(&self, winner: Player, loser: Player) -> bool {
        self.beats[winner * self.n + loser]
    }

    /// Winner of a match between `a` and `b`.
    #[inline]
    pub fn winner(&self, a: Player, b: Player) -> Player {
        if self.beats(a, b) {
            a
        } else {
            b
        }
    }

    pub fn out_degree(&self, p: Player) -> usize {
        self.beats[p * self.n..(p + 1) * self.n].iter().filter(|&&b| b).count()
    }

    /// All `(winner, loser)` pairs in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (Player, Player)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| (0..n).filter(move |&j| self.beats(i, j)).map(move |j| (i, j)))
    }

    /// The unique strength order (weakest first) if the graph is acyclic.
    ///
    /// A complete digraph is acyclic iff its out-degrees are exactly
    /// `0, 1, ..., n-1`; the player at position `r` beats exactly `r` others.
    pub fn strength_order(&self) -> Option<Vec<Player>> {
        let mut order = vec![usize::MAX; self.n];
        for p in 0..self.n {
            let d = self.out_degree(p);
            if order[d] != usize::MAX {
                return None;
            }
            order[d] = p;
        }
        Some(order)
    }

    pub fn is_dag(&self) -> bool {
        self.strength_order().is_some()
    }

    /// Hamiltonian path by insertion: each player goes in front of the first
    /// player on the current path that it beats, or at the end.
    pub fn hamiltonian_path(&self) -> HamPath {
        let players: Vec<Player> = (0..self.n).collect();
        HamPath { order: self.hamiltonian_path_of(&players) }
    }

    /// Hamiltonian path through the induced subgraph on `players`, returned
    /// in terms of the original ids.
    pub fn hamiltonian_path_of(&self, players: &[Player]) -> Vec<Player> {
        let mut path: Vec<Player> = Vec::with_capacity(players.len());
        for &v in players {
            match path.iter().position(|&u| self.beats(v, u)) {
                Some(at) => path.insert(at, v),
                None => path.push(v),
            }
        }
        path
    }

    /// Subgraph induced by `subset`, relabelled to `0..k`.
    ///
    /// The subset is sorted and deduplicated first; the returned map sends new
    /// ids to original ids.
    pub fn induced_subgraph(&self, subset: &[Player]) -> Result<(StrengthGraph, Vec<Player>), GraphError> {
        if subset.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        if let Some(&p) = subset.iter().find(|&&p| p >= self.n) {
            return Err(GraphError::SubsetOutOfRange(p, self.n));
        }
        let mut map = subset.to_vec();
        map.sort_unstable();
        map.dedup();
        let g = Self::from_fn(map.len(), |i, j| self.beats(map[i], map[j]))?;
        Ok((g, map))
    }
}

/// A sequence of all players where each entry beats the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamPath {
    pub order: Vec<Player>,
}

impl HamPath {
    /// Checks both path invariants against `g`.
    pub fn is_valid_for(&self, g: &StrengthGraph) -> bool {
        let n = g.n();
        if self.order.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in &self.order {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return false;
            }
        }
        self.order.windows(2).all(|w| g.beats(w[0], w[1]))
    }
}
