//! JSON documents for instances, source problems and results, plus seeded
//! random instance generation.
//!
//! Instance documents look like
//!
//! ```json
//! {"n": 3, "edges": [[1, 0], [2, 0], [2, 1]],
//!  "value": {"kind": "popularity", "p": [0, 4, 1]}, "target": 4}
//! ```
//!
//! `edges` lists `[winner, loser]` pairs. It may be replaced by `dag_order`,
//! a permutation in which later players beat earlier ones. Value payloads are
//! `p` (popularity), `f` (wincount rows of length `n - 1`, or the dense
//! `n × n` pair matrix indexed `[winner][loser]`) and `lambda` (thresholds).
//! An optional `meta` object is carried through untouched.
//!
//! Emission is canonical: sorted keys, explicit sorted edges, no whitespace.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value as Json};
use thiserror::Error;

use crate::graph::{GraphError, Player, StrengthGraph};
use crate::reductions::{IndependentSetInstance, Reduced, ThreeDmInstance};
use crate::solvers::SolveResult;
use crate::tournament::{Seeding, TournamentTrace};
use crate::value::{Instance, ValueError, ValueSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Value(#[from] ValueError),
    #[error("bad generator parameters: {0}")]
    BadParams(String),
}

fn schema<T>(path: &str, msg: impl Into<String>) -> Result<T, IoError> {
    Err(IoError::Schema { path: path.to_string(), msg: msg.into() })
}

/// A JSON object being read, with its path for error messages.
struct Obj<'a> {
    map: &'a Map<String, Json>,
    path: String,
}

impl<'a> Obj<'a> {
    fn new(v: &'a Json, path: &str) -> Result<Self, IoError> {
        match v.as_object() {
            Some(map) => Ok(Obj { map, path: path.to_string() }),
            None => schema(path, "expected an object"),
        }
    }

    fn only(&self, allowed: &[&str]) -> Result<(), IoError> {
        match self.map.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => schema(&self.at(k), "unknown key"),
            None => Ok(()),
        }
    }

    fn at(&self, key: &str) -> String {
        format!("{}.{key}", self.path)
    }

    fn opt(&self, key: &str) -> Option<(&'a Json, String)> {
        self.map.get(key).map(|v| (v, self.at(key)))
    }

    fn req(&self, key: &str) -> Result<(&'a Json, String), IoError> {
        match self.opt(key) {
            Some(x) => Ok(x),
            None => schema(&self.at(key), "missing"),
        }
    }
}

fn as_u64(v: &Json, path: &str) -> Result<u64, IoError> {
    match v.as_u64() {
        Some(x) => Ok(x),
        None => schema(path, "expected a non-negative integer"),
    }
}

fn as_usize(v: &Json, path: &str) -> Result<usize, IoError> {
    let x = as_u64(v, path)?;
    match usize::try_from(x) {
        Ok(x) => Ok(x),
        Err(_) => schema(path, "integer too large"),
    }
}

fn as_array<'a>(v: &'a Json, path: &str) -> Result<&'a Vec<Json>, IoError> {
    match v.as_array() {
        Some(a) => Ok(a),
        None => schema(path, "expected an array"),
    }
}

fn list<T>(v: &Json, path: &str, f: impl Fn(&Json, &str) -> Result<T, IoError>) -> Result<Vec<T>, IoError> {
    as_array(v, path)?.iter().enumerate().map(|(i, x)| f(x, &format!("{path}[{i}]"))).collect()
}

fn list_len<T>(
    v: &Json,
    path: &str,
    len: usize,
    f: impl Fn(&Json, &str) -> Result<T, IoError>,
) -> Result<Vec<T>, IoError> {
    let items = list(v, path, f)?;
    if items.len() != len {
        return schema(path, format!("expected {len} entries, found {}", items.len()));
    }
    Ok(items)
}

fn fixed<const K: usize>(v: &Json, path: &str) -> Result<[usize; K], IoError> {
    let items = list_len(v, path, K, as_usize)?;
    Ok(items.try_into().expect("length checked"))
}

fn parse_json(bytes: &[u8]) -> Result<Json, IoError> {
    serde_json::from_slice(bytes).map_err(|e| IoError::Json(e.to_string()))
}

fn to_bytes(v: &Json) -> Vec<u8> {
    let mut out = serde_json::to_vec(v).expect("JSON values always serialize");
    out.push(b'\n');
    out
}

/// An instance together with its free-form `meta` object.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceDocument {
    pub instance: Instance<u64>,
    pub meta: Option<Json>,
}

pub fn parse_instance(bytes: &[u8]) -> Result<Instance<u64>, IoError> {
    Ok(parse_document(bytes)?.instance)
}

pub fn parse_document(bytes: &[u8]) -> Result<InstanceDocument, IoError> {
    document_from_json(&parse_json(bytes)?)
}

pub fn document_from_json(root: &Json) -> Result<InstanceDocument, IoError> {
    let doc = Obj::new(root, "$")?;
    doc.only(&["n", "edges", "dag_order", "value", "target", "meta"])?;
    let (nv, np) = doc.req("n")?;
    let n = as_usize(nv, &np)?;
    if n == 0 {
        return schema(&np, "need at least one player");
    }
    let graph = match (doc.opt("edges"), doc.opt("dag_order")) {
        (Some(_), Some(_)) => return schema("$", "give either edges or dag_order, not both"),
        (None, None) => return schema(&doc.at("edges"), "missing"),
        (Some((ev, ep)), None) => {
            let edges: Vec<(Player, Player)> = list(ev, &ep, fixed::<2>)?.into_iter().map(|[w, l]| (w, l)).collect();
            StrengthGraph::from_edges(n, &edges)?
        }
        (None, Some((ov, op))) => StrengthGraph::transitive(&list_len(ov, &op, n, as_usize)?)?,
    };
    let (vv, vp) = doc.req("value")?;
    let value = parse_value(vv, &vp, n)?;
    let target = match doc.opt("target") {
        Some((Json::Null, _)) | None => None,
        Some((tv, tp)) => Some(as_u64(tv, &tp)?),
    };
    let meta = match doc.opt("meta") {
        Some((m @ Json::Object(_), _)) => Some(m.clone()),
        Some((_, mp)) => return schema(&mp, "expected an object"),
        None => None,
    };
    Ok(InstanceDocument { instance: Instance::new(graph, value, target)?, meta })
}

fn parse_value(v: &Json, path: &str, n: usize) -> Result<ValueSpec<u64>, IoError> {
    let obj = Obj::new(v, path)?;
    let (kv, kp) = obj.req("kind")?;
    let kind = match kv.as_str() {
        Some(k) => k,
        None => return schema(&kp, "expected a string"),
    };
    let payload = match kind {
        "popularity" => "p",
        "wincount" | "pair" => "f",
        "binary_threshold" | "linear_threshold" => "lambda",
        other => return schema(&kp, format!("unknown value kind {other:?}")),
    };
    obj.only(&["kind", payload])?;
    let (pv, pp) = obj.req(payload)?;
    Ok(match kind {
        "popularity" => ValueSpec::PlayerPopularity(list_len(pv, &pp, n, as_u64)?),
        "wincount" => ValueSpec::WinCount(list_len(pv, &pp, n, |x, p| list_len(x, p, n - 1, as_u64))?),
        "binary_threshold" => ValueSpec::BinaryThreshold(list_len(pv, &pp, n, as_usize)?),
        "linear_threshold" => ValueSpec::LinearAfterThreshold(list_len(pv, &pp, n, as_usize)?),
        _ => {
            let rows = list_len(pv, &pp, n, |x, p| list_len(x, p, n, as_u64))?;
            ValueSpec::PairBased { n, f: rows.concat() }
        }
    })
}

fn value_to_json(v: &ValueSpec<u64>) -> Json {
    match v {
        ValueSpec::PlayerPopularity(p) => json!({"kind": "popularity", "p": p}),
        ValueSpec::WinCount(f) => json!({"kind": "wincount", "f": f}),
        ValueSpec::BinaryThreshold(l) => json!({"kind": "binary_threshold", "lambda": l}),
        ValueSpec::LinearAfterThreshold(l) => json!({"kind": "linear_threshold", "lambda": l}),
        ValueSpec::PairBased { n, f } => {
            let rows: Vec<&[u64]> = if *n == 0 { Vec::new() } else { f.chunks(*n).collect() };
            json!({"kind": "pair", "f": rows})
        }
    }
}

pub fn document_to_json(doc: &InstanceDocument) -> Json {
    let inst = &doc.instance;
    let mut edges: Vec<[Player; 2]> = inst.graph.edges().map(|(w, l)| [w, l]).collect();
    edges.sort_unstable();
    let mut out = json!({
        "n": inst.n(),
        "edges": edges,
        "value": value_to_json(&inst.value),
    });
    if let Some(t) = inst.target {
        out["target"] = json!(t);
    }
    if let Some(m) = &doc.meta {
        out["meta"] = m.clone();
    }
    out
}

pub fn emit_document(doc: &InstanceDocument) -> Vec<u8> {
    to_bytes(&document_to_json(doc))
}

pub fn emit_instance(inst: &Instance<u64>) -> Vec<u8> {
    emit_document(&InstanceDocument { instance: inst.clone(), meta: None })
}

/// Instance document for a reduction output; names and warnings go in `meta`.
pub fn emit_reduced(r: &Reduced<u64>) -> Vec<u8> {
    let warnings: Vec<Json> = r.warnings.iter().map(|w| json!({"code": w.code(), "message": w.to_string()})).collect();
    let meta = json!({"provenance": r.kind.as_str(), "names": r.names, "warnings": warnings});
    emit_document(&InstanceDocument { instance: r.instance.clone(), meta: Some(meta) })
}

/// `{"n": 2, "triples": [[0, 0, 0], [1, 1, 1]]}`.
pub fn parse_3dm(bytes: &[u8]) -> Result<ThreeDmInstance, IoError> {
    let root = parse_json(bytes)?;
    let doc = Obj::new(&root, "$")?;
    doc.only(&["n", "triples"])?;
    let (nv, np) = doc.req("n")?;
    let (tv, tp) = doc.req("triples")?;
    Ok(ThreeDmInstance { n: as_usize(nv, &np)?, triples: list(tv, &tp, fixed::<3>)? })
}

pub fn emit_3dm(tdm: &ThreeDmInstance) -> Vec<u8> {
    to_bytes(&json!({"n": tdm.n, "triples": tdm.triples}))
}

/// `{"vertices": 3, "edges": [[0, 1]], "k": 2}`.
pub fn parse_is(bytes: &[u8]) -> Result<IndependentSetInstance, IoError> {
    let root = parse_json(bytes)?;
    let doc = Obj::new(&root, "$")?;
    doc.only(&["vertices", "edges", "k"])?;
    let (vv, vp) = doc.req("vertices")?;
    let (ev, ep) = doc.req("edges")?;
    let (kv, kp) = doc.req("k")?;
    let edges = list(ev, &ep, fixed::<2>)?.into_iter().map(|[a, b]| (a, b)).collect();
    Ok(IndependentSetInstance { vertices: as_usize(vv, &vp)?, edges, k: as_usize(kv, &kp)? })
}

pub fn emit_is(is: &IndependentSetInstance) -> Vec<u8> {
    let edges: Vec<[usize; 2]> = is.edges.iter().map(|&(a, b)| [a, b]).collect();
    to_bytes(&json!({"vertices": is.vertices, "edges": edges, "k": is.k}))
}

/// Source solution: a list of indices under `key` (`"triples"` or `"vertices"`).
pub fn parse_solution(bytes: &[u8], key: &str) -> Result<Vec<usize>, IoError> {
    let root = parse_json(bytes)?;
    let doc = Obj::new(&root, "$")?;
    doc.only(&[key])?;
    let (v, p) = doc.req(key)?;
    list(v, &p, as_usize)
}

/// Comma-separated player ids, e.g. `2,3,1,0`.
pub fn parse_seeding_arg(s: &str) -> Result<Seeding, IoError> {
    let ids: Result<Vec<Player>, _> = s.split(',').map(|x| x.trim().parse::<Player>()).collect();
    match ids {
        Ok(ids) => Ok(Seeding(ids)),
        Err(e) => schema("--seeding", format!("expected comma-separated player ids: {e}")),
    }
}

pub fn solve_result_to_json(r: &SolveResult<u64>, target: Option<u64>) -> Json {
    json!({
        "algorithm": r.algorithm.to_string(),
        "seeding": r.seeding.0,
        "value": r.value,
        "optimal": r.optimal,
        "target": target,
        "meets_target": r.meets_target,
    })
}

pub fn trace_to_json(t: &TournamentTrace, value: u64) -> Json {
    let matches: Vec<Json> = t
        .matches
        .iter()
        .map(|m| {
            json!({"round": m.round, "challenger": m.challenger, "champ_before": m.champ_before, "winner": m.winner})
        })
        .collect();
    json!({"champion": t.champion, "matches": matches, "wins": t.wins, "value": value})
}

pub fn seeding_to_json(s: &Seeding, value: u64, target: Option<u64>) -> Json {
    json!({"seeding": s.0, "value": value, "target": target})
}

pub fn to_line(v: &Json) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

/// Graph shape for [`gen_random`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenClass {
    /// Each pair oriented by a fair coin.
    Tournament,
    /// Transitive tournament over a random strength order.
    Dag,
}

impl GenClass {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "tournament" => Some(GenClass::Tournament),
            "dag" => Some(GenClass::Dag),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    /// Values (popularity, win values, pair values) are drawn from `0..=max_value`.
    pub max_value: u64,
    /// Popularity levels to draw from instead of `0..=max_value`. When
    /// `n >= levels.len()` every level is used at least once.
    pub levels: Option<Vec<u64>>,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { max_value: 9, levels: None }
    }
}

/// Reproducible random instance. The generator is ChaCha8 seeded with
/// `seed` through `SeedableRng::seed_from_u64`, and draws are made in a fixed
/// order, so the same arguments always give the same instance.
///
/// Thresholds are drawn from `1..n` (or `1..=1` for a single player).
pub fn gen_random(
    seed: u64,
    class: GenClass,
    n: usize,
    kind: &str,
    params: &GenParams,
) -> Result<Instance<u64>, IoError> {
    if n == 0 {
        return Err(IoError::BadParams("n must be at least 1".into()));
    }
    if params.levels.as_ref().is_some_and(|l| l.is_empty()) {
        return Err(IoError::BadParams("levels must not be empty".into()));
    }
    if params.levels.is_some() && kind != "popularity" {
        return Err(IoError::BadParams("levels only apply to popularity values".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = match class {
        GenClass::Tournament => {
            let coins: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen()).collect();
            let mut it = coins.into_iter();
            StrengthGraph::from_fn(n, |_, _| it.next().expect("one coin per pair"))?
        }
        GenClass::Dag => {
            let mut order: Vec<Player> = (0..n).collect();
            order.shuffle(&mut rng);
            StrengthGraph::transitive(&order)?
        }
    };
    let max = params.max_value;
    let lambda_hi = (n - 1).max(1);
    let value = match kind {
        "popularity" => match &params.levels {
            Some(levels) => {
                let mut p: Vec<u64> = (0..n)
                    .map(|i| levels.get(i).copied().unwrap_or_else(|| *levels.choose(&mut rng).unwrap()))
                    .collect();
                p.shuffle(&mut rng);
                ValueSpec::PlayerPopularity(p)
            }
            None => ValueSpec::PlayerPopularity((0..n).map(|_| rng.gen_range(0..=max)).collect()),
        },
        "wincount" => ValueSpec::WinCount((0..n).map(|_| (1..n).map(|_| rng.gen_range(0..=max)).collect()).collect()),
        "binary_threshold" => ValueSpec::BinaryThreshold((0..n).map(|_| rng.gen_range(1..=lambda_hi)).collect()),
        "linear_threshold" => ValueSpec::LinearAfterThreshold((0..n).map(|_| rng.gen_range(1..=lambda_hi)).collect()),
        "pair" => ValueSpec::pair_from_fn(n, |_, _| rng.gen_range(0..=max)),
        other => return Err(IoError::BadParams(format!("unknown value kind {other:?}"))),
    };
    Ok(Instance::new(graph, value, None)?)
}
