//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ctc_core::io::parse_instance;
use ctc_core::reductions::{
    oracle_3dm, reduce_3dm_to_pairbased_dag, reduce_3dm_to_ternary_popularity, witness_3dm, ThreeDmInstance,
};
use ctc_core::solvers::{
    approx_popularity, solve_binary_popularity, solve_dag_popularity_greedy, solve_dag_wincount_dp, DEFAULT_LIMIT,
};
use ctc_core::value::{Instance, ValueSpec};
use ctc_core::{caterpillar_to_seeding, exact_bruteforce, seeding_to_caterpillar, simulate, StrengthGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn brute(g: &StrengthGraph, spec: &ValueSpec<u64>) -> u64 {
    let inst = Instance::new(g.clone(), spec.clone(), None).unwrap();
    exact_bruteforce(&inst, DEFAULT_LIMIT).unwrap().value
}

fn fixture(name: &str) -> Vec<u8> {
    std::fs::read(format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn three_branches_optimum() -> Outcome {
    let inst = parse_instance(&fixture("three_branches.json")).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let r = exact_bruteforce(&inst, DEFAULT_LIMIT).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    check(r.value == 7, || format!("value {} instead of 7", r.value))?;
    check(took < Duration::from_secs(1), || format!("took {took:?}"))?;
    Ok(format!("value 7 in {took:?}"))
}

fn greedy_matches_brute() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let start = Instant::now();
    for case in 0..200 {
        let n = rng.gen_range(2..=7);
        let g = random_dag(&mut rng, n);
        let p: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=9)).collect();
        let spec = ValueSpec::PlayerPopularity(p.clone());
        let greedy = solve_dag_popularity_greedy(&g, &p).map_err(|e| e.to_string())?.value;
        let opt = brute(&g, &spec);
        check(greedy == opt, || format!("case {case}: greedy {greedy}, brute force {opt}"))?;
    }
    let took = start.elapsed();
    check(took < Duration::from_secs(30), || format!("took {took:?}"))?;
    Ok(format!("200/200 equal in {took:?}"))
}

fn binary_matches_brute() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for case in 0..200 {
        let n = rng.gen_range(2..=7);
        let g = random_tournament(&mut rng, n);
        let p: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
        let r = solve_binary_popularity(&g, &p).map_err(|e| e.to_string())?;
        let opt = brute(&g, &ValueSpec::PlayerPopularity(p.clone()));
        check(r.value == opt, || format!("case {case}: binary {}, brute force {opt}", r.value))?;
        // Popular, plus unpopular players some popular player beats.
        let popular: Vec<usize> = (0..n).filter(|&i| p[i] == 1).collect();
        if !popular.is_empty() {
            let beatable = (0..n).filter(|&v| p[v] == 0 && popular.iter().any(|&q| g.beats(q, v))).count();
            let formula = (popular.len() + beatable - 1) as u64;
            check(r.value == formula, || format!("case {case}: value {}, |P|+|U|-1 = {formula}", r.value))?;
        }
    }
    Ok("200/200 equal to brute force and |P|+|U|-1".into())
}

fn dp_matches_brute() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for case in 0..200 {
        let n = rng.gen_range(2..=7);
        let g = random_dag(&mut rng, n);
        let f: Vec<Vec<u64>> = (0..n).map(|_| (1..n).map(|_| rng.gen_range(0..=9)).collect()).collect();
        let spec = ValueSpec::WinCount(f);
        let r = solve_dag_wincount_dp(&g, &spec).map_err(|e| e.to_string())?;
        let opt = brute(&g, &spec);
        check(r.value == opt, || format!("case {case}: dp {}, brute force {opt}", r.value))?;
        let simulated = spec.evaluate(&simulate(&g, &r.seeding).unwrap()).unwrap();
        check(simulated == r.value, || format!("case {case}: seeding simulates to {simulated}"))?;
    }
    Ok("200/200 equal; seedings simulate to the DP value".into())
}

fn approx_within_half() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = f64::INFINITY;
    for case in 0..100 {
        let n = rng.gen_range(4..=7);
        let g = random_tournament(&mut rng, n);
        // Every level present so there really are three.
        let mut p: Vec<u64> = (0..n).map(|i| if i < 3 { i as u64 } else { rng.gen_range(0..=2) }).collect();
        rand::seq::SliceRandom::shuffle(&mut p[..], &mut rng);
        let a = approx_popularity(&g, &p).map_err(|e| e.to_string())?.value;
        let opt = brute(&g, &ValueSpec::PlayerPopularity(p));
        check(2 * a >= opt, || format!("case {case}: approx {a}, OPT {opt}"))?;
        if opt > 0 {
            worst = worst.min(a as f64 / opt as f64);
        }
    }
    Ok(format!("0 violations in 100; worst ratio {worst:.3}"))
}

fn small_matching_reductions() -> Outcome {
    let tdm = ThreeDmInstance { n: 2, triples: vec![[0, 0, 0], [1, 0, 1], [1, 1, 1]] };
    let pair = reduce_3dm_to_pairbased_dag::<u64>(&tdm).map_err(|e| e.to_string())?;
    let pop = reduce_3dm_to_ternary_popularity::<u64>(&tdm).map_err(|e| e.to_string())?;
    check(pair.instance.target == Some(8), || format!("pair target {:?}", pair.instance.target))?;
    check(pop.instance.target == Some(11), || format!("ternary target {:?}", pop.instance.target))?;
    for (r, want) in [(&pair, 8), (&pop, 11)] {
        let s = witness_3dm(&tdm, r, &[0, 2]).map_err(|e| e.to_string())?;
        let v = r.instance.value.evaluate(&simulate(&r.instance.graph, &s).unwrap()).unwrap();
        check(v == want, || format!("{} witness reaches {v}, want {want}", r.kind.as_str()))?;
    }
    let opt = exact_bruteforce(&pair.instance, DEFAULT_LIMIT).map_err(|e| e.to_string())?.value;
    check(opt == 8, || format!("pair-based optimum {opt}, want 8"))?;
    Ok("targets 8/11, witnesses 8/11, pair optimum 8".into())
}

fn reduction_sweep() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut yes, mut no) = (0, 0);
    for case in 0..50 {
        // Reduced size is m + 3n + 1 <= 10.
        let n = rng.gen_range(1..=2);
        let m = rng.gen_range(1..=(9 - 3 * n));
        let plant = rng.gen_bool(0.5);
        let tdm = random_3dm(&mut rng, n, m, plant);
        let cover = oracle_3dm(&tdm).map_err(|e| e.to_string())?;
        check(cover.is_some() == naive_3dm(&tdm), || format!("case {case}: oracles disagree"))?;
        let r = reduce_3dm_to_pairbased_dag::<u64>(&tdm).map_err(|e| e.to_string())?;
        check(r.instance.n() <= 10, || format!("case {case}: {} players", r.instance.n()))?;
        let opt = exact_bruteforce(&r.instance, DEFAULT_LIMIT).map_err(|e| e.to_string())?.value;
        let reached = opt >= r.instance.target.unwrap();
        check(reached == cover.is_some(), || {
            format!("case {case}: {tdm:?} oracle {}, optimum {opt} vs target {:?}", cover.is_some(), r.instance.target)
        })?;
        if reached {
            yes += 1;
        } else {
            no += 1;
        }
    }
    Ok(format!("50/50 agree ({yes} YES, {no} NO)"))
}

fn trace_and_path_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for case in 0..1000 {
        let n = rng.gen_range(1..=12);
        let g = if rng.gen_bool(0.5) { random_tournament(&mut rng, n) } else { random_dag(&mut rng, n) };
        let s = random_seeding(&mut rng, n);
        let t = simulate(&g, &s).unwrap();
        check(t.wins.iter().sum::<usize>() == n - 1, || format!("case {case}: wins sum {:?}", t.wins))?;
        let losers: BTreeSet<usize> = t.matches.iter().map(|m| m.loser()).collect();
        let unbeaten: Vec<usize> = (0..n).filter(|p| !losers.contains(p)).collect();
        check(unbeaten == vec![t.champion], || format!("case {case}: unbeaten {unbeaten:?}"))?;
    }
    for case in 0..1000 {
        let n = rng.gen_range(1..=12);
        let g = random_tournament(&mut rng, n);
        let s = random_seeding(&mut rng, n);
        let c = seeding_to_caterpillar(&g, &s).unwrap();
        let back = caterpillar_to_seeding(&g, &c).unwrap();
        let again = seeding_to_caterpillar(&g, &back).unwrap();
        check(again == c, || format!("case {case}: round-trip A changed {c:?} into {again:?}"))?;
        let (t1, t2) = (simulate(&g, &s).unwrap(), simulate(&g, &back).unwrap());
        let sorted =
            |b: &Vec<Vec<usize>>| b.iter().map(|x| x.iter().copied().collect::<BTreeSet<_>>()).collect::<Vec<_>>();
        check(sorted(&t1.beaten) == sorted(&t2.beaten), || format!("case {case}: round-trip B changed M_i"))?;
    }
    let mut slowest = Duration::ZERO;
    for case in 0..100 {
        let g = random_tournament(&mut rng, 1000);
        let start = Instant::now();
        let path = g.hamiltonian_path();
        let took = start.elapsed();
        slowest = slowest.max(took);
        let mut seen = path.order.clone();
        seen.sort_unstable();
        check(seen == (0..1000).collect::<Vec<_>>(), || format!("path {case} is not a permutation"))?;
        check(path.order.windows(2).all(|w| g.beats(w[0], w[1])), || format!("path {case} breaks an edge"))?;
        check(took < Duration::from_millis(50), || format!("path {case} took {took:?}"))?;
    }
    Ok(format!("1000 traces, 1000 round-trips, 100 paths (slowest {slowest:?})"))
}

fn family_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for case in 0..500 {
        let n = rng.gen_range(1..=10);
        let dag = case % 2 == 0;
        let g = if dag { random_dag(&mut rng, n) } else { random_tournament(&mut rng, n) };
        let p: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=50)).collect();
        let t = simulate(&g, &random_seeding(&mut rng, n)).unwrap();
        let v = ValueSpec::PlayerPopularity(p.clone()).evaluate(&t).unwrap();
        let wc = ValueSpec::WinCount(p.iter().map(|&x| vec![x; n - 1]).collect()).evaluate(&t).unwrap();
        check(v == wc, || format!("case {case}: popularity {v}, constant win-count {wc}"))?;
        let pair = ValueSpec::pair_from_fn(n, |w, _| p[w]).evaluate(&t).unwrap();
        check(v == pair, || format!("case {case}: popularity {v}, winner-keyed pair {pair}"))?;
        if dag {
            let strongest = g.strength_order().unwrap()[n - 1];
            let both = ValueSpec::pair_from_fn(n, |w, l| p[w] + p[l]).evaluate(&t).unwrap();
            let rest: u64 = (0..n).filter(|&i| i != strongest).map(|i| p[i]).sum();
            check(both == v + rest, || format!("case {case}: V' {both}, V + sum {}", v + rest))?;
        }
    }
    Ok("500 traces, all three identities exact".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("three-branch instance optimum", three_branches_optimum),
        ("greedy = brute force on acyclic popularity", greedy_matches_brute),
        ("0/1 popularity = brute force = |P|+|U|-1", binary_matches_brute),
        ("win-count DP = brute force", dp_matches_brute),
        ("approximation within 1/2 for levels {0,1,2}", approx_within_half),
        ("small 3-D matching reduction targets and witnesses", small_matching_reductions),
        ("3-D matching sweep, pair-based reduction", reduction_sweep),
        ("trace, caterpillar and Hamiltonian path properties", trace_and_path_properties),
        ("family identities", family_identities),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
