//! Helpers shared by the integration tests: random instances and oracles that
//! only use `simulate` and `evaluate`, independent of the solver code.

#![allow(dead_code)]

use ctc_core::reductions::ThreeDmInstance;
use ctc_core::value::ValueSpec;
use ctc_core::{simulate, Player, Seeding, StrengthGraph};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_tournament<R: Rng>(rng: &mut R, n: usize) -> StrengthGraph {
    StrengthGraph::from_fn(n, |_, _| rng.gen()).unwrap()
}

/// Transitive tournament over a random strength order.
pub fn random_dag<R: Rng>(rng: &mut R, n: usize) -> StrengthGraph {
    let mut order: Vec<Player> = (0..n).collect();
    order.shuffle(rng);
    StrengthGraph::transitive(&order).unwrap()
}

pub fn random_seeding<R: Rng>(rng: &mut R, n: usize) -> Seeding {
    let mut s: Vec<Player> = (0..n).collect();
    s.shuffle(rng);
    Seeding(s)
}

pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[Player])) {
    fn go(prefix: &mut Vec<Player>, used: &mut [bool], f: &mut dyn FnMut(&[Player])) {
        if prefix.len() == used.len() {
            f(prefix);
            return;
        }
        for p in 0..used.len() {
            if !used[p] {
                used[p] = true;
                prefix.push(p);
                go(prefix, used, f);
                prefix.pop();
                used[p] = false;
            }
        }
    }
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut f);
}

/// Best value over all seedings, by simulating each one.
pub fn naive_optimum(g: &StrengthGraph, spec: &ValueSpec<u64>) -> u64 {
    let mut best = 0;
    for_each_permutation(g.n(), |order| {
        let t = simulate(g, &Seeding(order.to_vec())).unwrap();
        best = best.max(spec.evaluate(&t).unwrap());
    });
    best
}

/// Exact cover by checking every subset of triples.
pub fn naive_3dm(tdm: &ThreeDmInstance) -> bool {
    let m = tdm.triples.len();
    (0u32..1 << m).any(|mask| {
        let chosen: Vec<usize> = (0..m).filter(|&s| mask & (1 << s) != 0).collect();
        chosen.len() == tdm.n && tdm.covered(&chosen) == 3 * tdm.n
    })
}

/// Random 3-D matching instance; with `plant` an exact cover is hidden among
/// the triples.
pub fn random_3dm<R: Rng>(rng: &mut R, n: usize, m: usize, plant: bool) -> ThreeDmInstance {
    let mut triples = Vec::with_capacity(m);
    if plant && m >= n {
        let mut ys: Vec<usize> = (0..n).collect();
        let mut zs: Vec<usize> = (0..n).collect();
        ys.shuffle(rng);
        zs.shuffle(rng);
        triples.extend((0..n).map(|x| [x, ys[x], zs[x]]));
    }
    while triples.len() < m {
        triples.push([rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)]);
    }
    triples.shuffle(rng);
    ThreeDmInstance { n, triples }
}
