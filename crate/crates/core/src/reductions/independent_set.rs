use crate::graph::{Player, StrengthGraph};
use crate::tournament::Seeding;
use crate::value::{Instance, Value, ValueError, ValueSpec};

use super::{Reduced, ReductionError, ReductionKind, Warning, ORACLE_LIMIT};

/// Independent set: is there a set of `k` pairwise non-adjacent vertices?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSetInstance {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
}

impl IndependentSetInstance {
    pub fn validate(&self) -> Result<(), ReductionError> {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            if u >= self.vertices || v >= self.vertices {
                return Err(ReductionError::InvalidGraph(format!(
                    "edge ({u}, {v}) leaves the {} vertices",
                    self.vertices
                )));
            }
            if u == v {
                return Err(ReductionError::InvalidGraph(format!("self-loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(ReductionError::InvalidGraph(format!("edge ({u}, {v}) appears twice")));
            }
        }
        Ok(())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.edges.iter().all(|&(a, b)| !(set.contains(&a) && set.contains(&b)))
    }

    /// Edge-player copies per edge the counting argument needs: `|V|²`.
    pub fn required_multiplicity(&self) -> usize {
        self.vertices * self.vertices
    }
}

/// Builds the shared strength graph. Vertex `v` is player `v`; copy `l` of
/// edge `e` is player `|V| + e * multiplicity + l`.
fn is_graph(is: &IndependentSetInstance, multiplicity: usize) -> Result<StrengthGraph, ReductionError> {
    let nv = is.vertices;
    let total = nv + is.edges.len() * multiplicity;
    let edge_of = |p: Player| is.edges[(p - nv) / multiplicity];
    Ok(StrengthGraph::from_fn(total, |i, j| {
        // i < j; the only constrained pairs are vertex i against edge player j.
        if i < nv && j >= nv {
            let (a, b) = edge_of(j);
            a == i || b == i
        } else {
            true
        }
    })?)
}

fn is_names(is: &IndependentSetInstance, multiplicity: usize) -> Vec<String> {
    let mut names: Vec<String> = (0..is.vertices).map(|v| format!("p_v{v}")).collect();
    for e in 0..is.edges.len() {
        names.extend((0..multiplicity).map(|l| format!("p_e{e}_{l}")));
    }
    names
}

fn common_warnings(is: &IndependentSetInstance, multiplicity: usize) -> Vec<Warning> {
    let mut warnings = Vec::new();
    let required = is.required_multiplicity();
    if multiplicity != required {
        warnings.push(Warning::ScaledMultiplicity { multiplicity, required });
    }
    warnings
}

/// Independent set to binary-threshold values.
///
/// Each vertex player beats the `|V|²` copies of each incident edge and
/// loses to every other edge player. A vertex player scores 1 once it wins
/// `d(v)·|V|²` matches; edge players never score. Target `k`.
pub fn reduce_is_to_binary_wincount<V: Value>(is: &IndependentSetInstance) -> Result<Reduced<V>, ReductionError> {
    reduce_is_scaled(is, ReductionKind::IsBinary, is.required_multiplicity())
}

/// Independent set to linear-after-threshold values.
///
/// Same graph as [`reduce_is_to_binary_wincount`]. Vertex thresholds are
/// `d(v)·|V|² - 2|V|`; isolated vertices and edge players get the
/// unreachable threshold `|N|`. Target `2|V|k`.
pub fn reduce_is_to_linear_threshold<V: Value>(is: &IndependentSetInstance) -> Result<Reduced<V>, ReductionError> {
    reduce_is_scaled(is, ReductionKind::IsLinear, is.required_multiplicity())
}

/// Either independent-set reduction with a chosen number of copies per edge.
///
/// Anything other than `|V|²` copies is flagged, since the NO direction of
/// the argument may fail.
pub fn reduce_is_scaled<V: Value>(
    is: &IndependentSetInstance,
    kind: ReductionKind,
    multiplicity: usize,
) -> Result<Reduced<V>, ReductionError> {
    is.validate()?;
    let nv = is.vertices;
    let multiplicity = if is.edges.is_empty() { is.required_multiplicity() } else { multiplicity.max(1) };
    let graph = is_graph(is, multiplicity)?;
    let total = graph.n();
    let mut warnings = common_warnings(is, multiplicity);
    let (value, target) = match kind {
        ReductionKind::IsBinary => {
            let mut lambda = vec![total; total];
            for (v, l) in lambda.iter_mut().enumerate().take(nv) {
                *l = is.degree(v) * multiplicity;
            }
            (ValueSpec::BinaryThreshold(lambda), is.k)
        }
        ReductionKind::IsLinear => {
            let mut lambda = vec![total; total];
            for (v, l) in lambda.iter_mut().enumerate().take(nv) {
                let d = is.degree(v);
                if d == 0 {
                    warnings.push(Warning::IsolatedVertex { vertex: v });
                    continue;
                }
                let raw = d * multiplicity;
                *l = if raw > 2 * nv {
                    raw - 2 * nv
                } else {
                    warnings.push(Warning::ThresholdUnderflow { vertex: v });
                    1
                };
            }
            if is.edges.is_empty() && is.k >= 1 {
                warnings.push(Warning::TargetUnreachable);
            }
            (ValueSpec::LinearAfterThreshold(lambda), 2 * nv * is.k)
        }
        _ => return Err(ReductionError::WrongReduction { expected: "independent set" }),
    };
    if is.k > nv && !warnings.contains(&Warning::TargetUnreachable) {
        warnings.push(Warning::TargetUnreachable);
    }
    let target = V::from_usize(target).ok_or(ReductionError::Value(ValueError::Overflow))?;
    Ok(Reduced {
        kind,
        instance: Instance::new(graph, value, Some(target))?,
        names: is_names(is, multiplicity),
        warnings,
    })
}

/// Seeding for a reduced independent-set instance built from an independent
/// set of at least `k` vertices.
///
/// The chosen vertex players enter weakest first along a Hamiltonian path,
/// each followed by the edge players it beats; everyone else follows in id
/// order.
pub fn witness_is<V: Value>(
    is: &IndependentSetInstance,
    reduced: &Reduced<V>,
    chosen: &[usize],
) -> Result<Seeding, ReductionError> {
    if !matches!(reduced.kind, ReductionKind::IsBinary | ReductionKind::IsLinear) {
        return Err(ReductionError::WrongReduction { expected: "independent set" });
    }
    is.validate()?;
    let bad = |msg: String| Err(ReductionError::InvalidSolution(msg));
    if let Some(&v) = chosen.iter().find(|&&v| v >= is.vertices) {
        return bad(format!("vertex {v} does not exist"));
    }
    let mut distinct = chosen.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != chosen.len() {
        return bad("vertex chosen twice".into());
    }
    if chosen.len() < is.k {
        return bad(format!("{} vertices chosen, need {}", chosen.len(), is.k));
    }
    if !is.is_independent(chosen) {
        return bad("chosen vertices are adjacent".into());
    }

    let g = &reduced.instance.graph;
    let nv = is.vertices;
    let multiplicity = if is.edges.is_empty() { 0 } else { (g.n() - nv) / is.edges.len() };
    let mut path = g.hamiltonian_path_of(chosen);
    path.reverse();
    let mut used = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for v in path {
        order.push(v);
        used[v] = true;
        for (e, &(a, b)) in is.edges.iter().enumerate() {
            if a == v || b == v {
                for l in 0..multiplicity {
                    let p = nv + e * multiplicity + l;
                    order.push(p);
                    used[p] = true;
                }
            }
        }
    }
    order.extend((0..g.n()).filter(|&p| !used[p]));
    Ok(Seeding(order))
}

/// Lexicographically first maximum independent set.
pub fn oracle_is(is: &IndependentSetInstance) -> Result<Vec<usize>, ReductionError> {
    is.validate()?;
    if is.vertices > ORACLE_LIMIT {
        return Err(ReductionError::TooLarge { size: is.vertices, limit: ORACLE_LIMIT });
    }
    let n = is.vertices;
    let mut adj = vec![0u32; n];
    for &(a, b) in &is.edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    // Include-first DFS visits sets in lexicographic order, so the first
    // set of the largest size is kept.
    fn go(v: usize, n: usize, adj: &[u32], mask: u32, best: &mut u32) {
        if v == n {
            if mask.count_ones() > best.count_ones() {
                *best = mask;
            }
            return;
        }
        if (mask.count_ones() as usize) + (n - v) <= best.count_ones() as usize {
            return;
        }
        if adj[v] & mask == 0 {
            go(v + 1, n, adj, mask | (1 << v), best);
        }
        go(v + 1, n, adj, mask, best);
    }
    let mut best = 0u32;
    go(0, n, &adj, 0, &mut best);
    Ok((0..n).filter(|&v| best & (1 << v) != 0).collect())
}
