use crate::graph::{Player, StrengthGraph};
use crate::tournament::{caterpillar_to_seeding, Caterpillar, Seeding};
use crate::value::{Instance, Value, ValueError, ValueSpec};

use super::{Reduced, ReductionError, ReductionKind, Warning, ORACLE_LIMIT};

/// 3-D matching: `X`, `Y`, `Z` each have `n` elements and a triple picks one
/// from each, `[x, y, z]` with every coordinate in `0..n`.
///
/// Elements are numbered `x`, then `n + y`, then `2n + z` in the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeDmInstance {
    pub n: usize,
    pub triples: Vec<[usize; 3]>,
}

impl ThreeDmInstance {
    pub fn validate(&self) -> Result<(), ReductionError> {
        for (index, t) in self.triples.iter().enumerate() {
            if let Some(axis) = t.iter().position(|&c| c >= self.n) {
                let reason = format!("coordinate {} is {} but n is {}", axis, t[axis], self.n);
                return Err(ReductionError::InvalidTriples { index, reason });
            }
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.triples.len()
    }

    /// Universe ids of a triple's three elements.
    pub fn elements(&self, s: usize) -> [usize; 3] {
        let [x, y, z] = self.triples[s];
        [x, self.n + y, 2 * self.n + z]
    }

    pub fn contains(&self, s: usize, element: usize) -> bool {
        self.elements(s).contains(&element)
    }

    fn element_name(&self, u: usize) -> String {
        let axis = ["x", "y", "z"][u / self.n];
        format!("{axis}{}", u % self.n)
    }

    /// Number of universe elements covered by the chosen triples.
    pub fn covered(&self, chosen: &[usize]) -> usize {
        let mut hit = vec![false; 3 * self.n];
        for &s in chosen {
            for u in self.elements(s) {
                hit[u] = true;
            }
        }
        hit.iter().filter(|&&h| h).count()
    }

    /// Checks that `chosen` is an exact cover by `n` distinct triples.
    pub fn check_matching(&self, chosen: &[usize]) -> Result<(), ReductionError> {
        let bad = |msg: String| Err(ReductionError::InvalidSolution(msg));
        if chosen.len() != self.n {
            return bad(format!("{} triples chosen, need {}", chosen.len(), self.n));
        }
        if let Some(&s) = chosen.iter().find(|&&s| s >= self.m()) {
            return bad(format!("triple {s} does not exist"));
        }
        if self.covered(chosen) != 3 * self.n {
            return bad("chosen triples overlap or leave elements uncovered".into());
        }
        Ok(())
    }
}

fn checked_target<V: Value>(x: usize) -> Result<V, ReductionError> {
    V::from_usize(x).ok_or(ReductionError::Value(ValueError::Overflow))
}

fn degenerate(tdm: &ThreeDmInstance) -> Vec<Warning> {
    if tdm.n == 0 || tdm.triples.is_empty() {
        vec![Warning::Degenerate]
    } else {
        Vec::new()
    }
}

/// Player layout shared by both 3-D matching reductions: the special player
/// is 0, triple `s` is `1 + s`, element `u` is `1 + m + u`.
fn set_player(s: usize) -> Player {
    1 + s
}

fn element_player(tdm: &ThreeDmInstance, u: usize) -> Player {
    1 + tdm.m() + u
}

fn names(tdm: &ThreeDmInstance, head: &str, set_prefix: &str, elem_prefix: &str) -> Vec<String> {
    let mut names = vec![head.to_string()];
    names.extend((0..tdm.m()).map(|s| format!("{set_prefix}S{s}")));
    names.extend((0..3 * tdm.n).map(|u| format!("{elem_prefix}{}", tdm.element_name(u))));
    names
}

/// 3-D matching to popularity values in {0, 1, 2}.
///
/// Element players have popularity 0, triple players 1, and one extra player
/// `h` has 2. A triple player beats exactly its three elements, `h` beats
/// every triple player and loses to every element player. Target
/// `2m + 2n + 1`.
pub fn reduce_3dm_to_ternary_popularity<V: Value>(tdm: &ThreeDmInstance) -> Result<Reduced<V>, ReductionError> {
    tdm.validate()?;
    let m = tdm.m();
    let total = 1 + m + 3 * tdm.n;
    let is_set = |p: Player| (1..=m).contains(&p);
    let graph = StrengthGraph::from_fn(total, |i, j| {
        // i < j, so the only mixed pairs are (h, set), (h, element) and (set, element).
        match (i, is_set(i), is_set(j)) {
            (0, _, true) => true,
            (0, _, false) => false,
            (_, true, false) => tdm.contains(i - 1, j - 1 - m),
            _ => true,
        }
    })?;
    let two = V::one() + V::one();
    let mut p = vec![V::zero(); total];
    p[0] = two;
    for s in 0..m {
        p[set_player(s)] = V::one();
    }
    let target = checked_target(2 * m + 2 * tdm.n + 1)?;
    Ok(Reduced {
        kind: ReductionKind::ThreeDmPopularity,
        instance: Instance::new(graph, ValueSpec::PlayerPopularity(p), Some(target))?,
        names: names(tdm, "h", "v_", "v_"),
        warnings: degenerate(tdm),
    })
}

/// 3-D matching to 0/1 pair values on an acyclic graph.
///
/// Player `c` beats everyone, every triple player beats every element player,
/// and the rest follows id order. Beating a triple player is worth 1 to `c`;
/// a triple player beating one of its own elements is worth 1. Target
/// `m + 2n + 1`.
pub fn reduce_3dm_to_pairbased_dag<V: Value>(tdm: &ThreeDmInstance) -> Result<Reduced<V>, ReductionError> {
    tdm.validate()?;
    let m = tdm.m();
    let total = 1 + m + 3 * tdm.n;
    let graph = StrengthGraph::from_fn(total, |_, _| true)?;
    let value = ValueSpec::pair_from_fn(total, |w, l| {
        let hit = match (w, l) {
            (0, l) => (1..=m).contains(&l),
            (w, l) if (1..=m).contains(&w) && l > m => tdm.contains(w - 1, l - 1 - m),
            _ => false,
        };
        if hit {
            V::one()
        } else {
            V::zero()
        }
    });
    let target = checked_target(m + 2 * tdm.n + 1)?;
    Ok(Reduced {
        kind: ReductionKind::ThreeDmPair,
        instance: Instance::new(graph, value, Some(target))?,
        names: names(tdm, "c", "a_", "b_"),
        warnings: degenerate(tdm),
    })
}

/// Seeding for a reduced 3-D matching instance built from an exact cover.
///
/// The backbone is the special player followed by a Hamiltonian path through
/// the chosen triple players; element players hang off the chosen triple that
/// contains them and unchosen triple players hang off the special player.
pub fn witness_3dm<V: Value>(
    tdm: &ThreeDmInstance,
    reduced: &Reduced<V>,
    chosen: &[usize],
) -> Result<Seeding, ReductionError> {
    if !matches!(reduced.kind, ReductionKind::ThreeDmPair | ReductionKind::ThreeDmPopularity) {
        return Err(ReductionError::WrongReduction { expected: "3-D matching" });
    }
    tdm.check_matching(chosen)?;
    let g = &reduced.instance.graph;
    let chosen_players: Vec<Player> = chosen.iter().map(|&s| set_player(s)).collect();
    let mut backbone = vec![0];
    backbone.extend(g.hamiltonian_path_of(&chosen_players));
    let mut leaves = vec![Vec::new(); backbone.len()];
    leaves[0] = (0..tdm.m()).filter(|s| !chosen.contains(s)).map(set_player).collect();
    for u in 0..3 * tdm.n {
        let slot = (1..backbone.len())
            .find(|&i| tdm.contains(backbone[i] - 1, u))
            .expect("exact cover contains every element");
        leaves[slot].push(element_player(tdm, u));
    }
    Ok(caterpillar_to_seeding(g, &Caterpillar::new(backbone, leaves))?)
}

/// Lexicographically first exact cover (as triple indices), if any.
pub fn oracle_3dm(tdm: &ThreeDmInstance) -> Result<Option<Vec<usize>>, ReductionError> {
    tdm.validate()?;
    if tdm.m() > ORACLE_LIMIT {
        return Err(ReductionError::TooLarge { size: tdm.m(), limit: ORACLE_LIMIT });
    }
    fn go(tdm: &ThreeDmInstance, from: usize, used: &mut Vec<bool>, picked: &mut Vec<usize>) -> bool {
        if picked.len() == tdm.n {
            return true;
        }
        for s in from..tdm.m() {
            let es = tdm.elements(s);
            if es.iter().any(|&u| used[u]) {
                continue;
            }
            es.iter().for_each(|&u| used[u] = true);
            picked.push(s);
            if go(tdm, s + 1, used, picked) {
                return true;
            }
            picked.pop();
            es.iter().for_each(|&u| used[u] = false);
        }
        false
    }
    let mut used = vec![false; 3 * tdm.n];
    let mut picked = Vec::new();
    Ok(go(tdm, 0, &mut used, &mut picked).then_some(picked))
}
