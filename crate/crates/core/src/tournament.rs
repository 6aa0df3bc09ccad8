//! Challenge-the-Champ simulation and the seeding/caterpillar correspondence.
//!
//! A seeding fixes the challenge order: the first player is the initial champ
//! and each later player challenges whoever holds the title. Every seeding
//! induces a spanning caterpillar arborescence of the strength graph (the
//! backbone is the sequence of players who win at least one match, each loser
//! hangs off the player that eliminated it) and every caterpillar yields a
//! seeding that plays exactly its matches.

use thiserror::Error;

use crate::graph::{Player, StrengthGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TournamentError {
    #[error("seeding is not a permutation of 0..{n}: {reason}")]
    InvalidSeeding { n: usize, reason: String },
    #[error("invalid caterpillar: {0}")]
    InvalidCaterpillar(String),
}

/// Challenge order; `order[0]` is the initial champ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seeding(pub Vec<Player>);

impl Seeding {
    /// Checks that the seeding is a permutation of `0..n`.
    pub fn validate(&self, n: usize) -> Result<(), TournamentError> {
        let invalid = |reason: String| TournamentError::InvalidSeeding { n, reason };
        if self.0.len() != n {
            return Err(invalid(format!("has {} entries", self.0.len())));
        }
        let mut seen = vec![false; n];
        for &p in &self.0 {
            if p >= n {
                return Err(invalid(format!("player {p} out of range")));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(invalid(format!("player {p} appears twice")));
            }
        }
        Ok(())
    }

    pub fn players(&self) -> &[Player] {
        &self.0
    }
}

impl From<Vec<Player>> for Seeding {
    fn from(order: Vec<Player>) -> Self {
        Seeding(order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Match {
    /// 1-based round number.
    pub round: usize,
    pub challenger: Player,
    pub champ_before: Player,
    pub winner: Player,
}

impl Match {
    pub fn loser(&self) -> Player {
        if self.winner == self.challenger {
            self.champ_before
        } else {
            self.challenger
        }
    }
}

/// Full record of one simulated tournament.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TournamentTrace {
    pub matches: Vec<Match>,
    /// `wins[i]` is the number of matches player `i` won.
    pub wins: Vec<usize>,
    /// `beaten[i]` lists the players `i` eliminated, in round order.
    pub beaten: Vec<Vec<Player>>,
    pub champion: Player,
}

impl TournamentTrace {
    pub fn n(&self) -> usize {
        self.wins.len()
    }
}

/// Plays out `seeding` on `g`.
pub fn simulate(g: &StrengthGraph, seeding: &Seeding) -> Result<TournamentTrace, TournamentError> {
    let n = g.n();
    seeding.validate(n)?;
    let order = seeding.players();
    let mut wins = vec![0; n];
    let mut beaten = vec![Vec::new(); n];
    let mut matches = Vec::with_capacity(n - 1);
    let mut champ = order[0];
    for (r, &challenger) in order.iter().enumerate().skip(1) {
        let winner = g.winner(challenger, champ);
        let loser = if winner == challenger { champ } else { challenger };
        wins[winner] += 1;
        beaten[winner].push(loser);
        matches.push(Match { round: r, challenger, champ_before: champ, winner });
        champ = winner;
    }
    Ok(TournamentTrace { matches, wins, beaten, champion: champ })
}

/// Spanning caterpillar arborescence of a strength graph.
///
/// `backbone[0]` is the root (the tournament champion) and each backbone
/// player beats the next one. `leaves[i]` lists the leaves hanging off
/// `backbone[i]`, in the order they are played.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caterpillar {
    pub backbone: Vec<Player>,
    pub leaves: Vec<Vec<Player>>,
}

impl Caterpillar {
    /// Assembles a caterpillar, folding a leafless backbone tail into the
    /// leaves of its predecessor.
    ///
    /// A backbone vertex with no out-edges is a leaf, so a tail with no leaves
    /// is not part of the backbone. Folding it in front of its parent's other
    /// leaves keeps the played matches unchanged.
    pub fn new(mut backbone: Vec<Player>, mut leaves: Vec<Vec<Player>>) -> Self {
        leaves.resize(backbone.len(), Vec::new());
        if backbone.len() >= 2 && leaves.last().is_some_and(|l| l.is_empty()) {
            let tail = backbone.pop().unwrap();
            leaves.pop();
            leaves.last_mut().unwrap().insert(0, tail);
        }
        Caterpillar { backbone, leaves }
    }

    pub fn root(&self) -> Player {
        self.backbone[0]
    }

    /// Total number of players covered.
    pub fn len(&self) -> usize {
        self.backbone.len() + self.leaves.iter().map(Vec::len).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.backbone.is_empty()
    }

    /// All arcs `(parent, child)` of the arborescence.
    pub fn arcs(&self) -> Vec<(Player, Player)> {
        let mut arcs: Vec<_> = self.backbone.windows(2).map(|w| (w[0], w[1])).collect();
        for (&b, ls) in self.backbone.iter().zip(&self.leaves) {
            arcs.extend(ls.iter().map(|&l| (b, l)));
        }
        arcs
    }

    /// Checks the structural invariants against `g`: the backbone and leaves
    /// partition the players and every arc is a win in `g`.
    pub fn validate(&self, g: &StrengthGraph) -> Result<(), TournamentError> {
        let bad = |msg: String| Err(TournamentError::InvalidCaterpillar(msg));
        let n = g.n();
        if self.backbone.is_empty() {
            return bad("empty backbone".into());
        }
        if self.leaves.len() != self.backbone.len() {
            return bad(format!("{} leaf lists for {} backbone players", self.leaves.len(), self.backbone.len()));
        }
        let mut seen = vec![false; n];
        for &p in self.backbone.iter().chain(self.leaves.iter().flatten()) {
            if p >= n {
                return bad(format!("player {p} out of range"));
            }
            if std::mem::replace(&mut seen[p], true) {
                return bad(format!("player {p} appears twice"));
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return bad(format!("player {missing} is missing"));
        }
        for (parent, child) in self.arcs() {
            if !g.beats(parent, child) {
                return bad(format!("arc ({parent}, {child}) but {child} beats {parent}"));
            }
        }
        Ok(())
    }
}

/// The caterpillar induced by `seeding`.
///
/// The backbone lists players with at least one win, champion first. Losers
/// hang off the player that eliminated them, in seeding order. An initial
/// champ that never wins is a leaf of its conqueror.
pub fn seeding_to_caterpillar(g: &StrengthGraph, seeding: &Seeding) -> Result<Caterpillar, TournamentError> {
    let trace = simulate(g, seeding)?;
    if g.n() == 1 {
        return Ok(Caterpillar { backbone: vec![seeding.0[0]], leaves: vec![Vec::new()] });
    }
    // Title holders in seeding order; every holder after the first beat its
    // predecessor, so only the initial champ can have zero wins.
    let mut holders = vec![seeding.0[0]];
    for m in &trace.matches {
        if m.winner != m.champ_before {
            holders.push(m.winner);
        }
    }
    if trace.wins[holders[0]] == 0 {
        holders.remove(0);
    }
    holders.reverse();
    let mut slot = vec![usize::MAX; g.n()];
    for (i, &b) in holders.iter().enumerate() {
        slot[b] = i;
    }
    let mut leaves = vec![Vec::new(); holders.len()];
    // The zero-win initial champ is eliminated in round 1, ahead of any
    // challenger, so a single pass over the rounds keeps seeding order.
    for m in &trace.matches {
        let loser = m.loser();
        if slot[loser] == usize::MAX {
            leaves[slot[m.winner]].push(loser);
        }
    }
    Ok(Caterpillar { backbone: holders, leaves })
}

/// Seeding that plays exactly the caterpillar's matches.
///
/// Canonical form: walk the backbone from its tail to the root, emitting each
/// backbone player followed by its leaves.
pub fn caterpillar_to_seeding(g: &StrengthGraph, c: &Caterpillar) -> Result<Seeding, TournamentError> {
    c.validate(g)?;
    let mut order = Vec::with_capacity(g.n());
    for (&b, ls) in c.backbone.iter().zip(&c.leaves).rev() {
        order.push(b);
        order.extend_from_slice(ls);
    }
    Ok(Seeding(order))
}
