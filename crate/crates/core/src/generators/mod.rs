//! Random graph models and filtered, isomorph-free dataset construction.

mod manifest;

pub use manifest::{load_dataset, write_dataset, LoadedDataset, Manifest, ManifestBody, ManifestEntry, MANIFEST_FILE};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::io::ParseError;
use crate::graph::{canonical_key, invariant_hash, GraphError, GraphInvariant, SimpleGraph, MAX_VERTICES};
use crate::par::*;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error(
        "quota not met for {model} graphs on {order} vertices: {accepted}/{quota} accepted after {attempts} attempts \
         (acceptance rate {rate:.3e})"
    )]
    Quota { model: GraphModel, order: usize, quota: usize, accepted: usize, attempts: u64, rate: f64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("dataset integrity check failed: {0}")]
    Integrity(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphModel {
    Er,
    Ba,
    Ws,
}

impl GraphModel {
    pub const ALL: [GraphModel; 3] = [GraphModel::Er, GraphModel::Ba, GraphModel::Ws];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphModel::Er => "er",
            GraphModel::Ba => "ba",
            GraphModel::Ws => "ws",
        }
    }

    fn code(self) -> u64 {
        match self {
            GraphModel::Er => 1,
            GraphModel::Ba => 2,
            GraphModel::Ws => 3,
        }
    }
}

impl fmt::Display for GraphModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphModel {
    type Err = DatasetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphModel::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| DatasetError::Parameter(format!("unknown model '{s}'")))
    }
}

/// Graphs requested per model, applied to every order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quotas {
    pub er: usize,
    pub ba: usize,
    pub ws: usize,
}

impl Quotas {
    pub fn get(&self, model: GraphModel) -> usize {
        match model {
            GraphModel::Er => self.er,
            GraphModel::Ba => self.ba,
            GraphModel::Ws => self.ws,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSpec {
    pub orders: Vec<usize>,
    pub quotas: Quotas,
    pub er_p: f64,
    pub ba_m: usize,
    pub ws_k: usize,
    pub ws_beta: f64,
    pub master_seed: u64,
    /// Consecutive rejected attempts tolerated before a cell gives up.
    pub max_attempts: u64,
}

impl DatasetSpec {
    pub const DEFAULT_ER_P: f64 = 0.3;
    pub const DEFAULT_BA_M: usize = 2;
    pub const DEFAULT_WS_K: usize = 4;
    pub const DEFAULT_WS_BETA: f64 = 0.2;
    pub const DEFAULT_MAX_ATTEMPTS: u64 = 100_000;

    pub fn new(orders: Vec<usize>, quotas: Quotas, master_seed: u64) -> Self {
        DatasetSpec {
            orders,
            quotas,
            er_p: Self::DEFAULT_ER_P,
            ba_m: Self::DEFAULT_BA_M,
            ws_k: Self::DEFAULT_WS_K,
            ws_beta: Self::DEFAULT_WS_BETA,
            master_seed,
            max_attempts: Self::DEFAULT_MAX_ATTEMPTS,
        }
    }

    pub fn validate(&self) -> Result<(), DatasetError> {
        let bad = |msg: String| Err(DatasetError::Parameter(msg));
        if self.orders.is_empty() {
            return bad("no orders requested".into());
        }
        // p = 0 is allowed through so that it surfaces as a quota failure.
        if !(0.0..=1.0).contains(&self.er_p) {
            return bad(format!("er_p = {} outside [0, 1]", self.er_p));
        }
        if self.ba_m < 2 {
            return bad(format!("ba_m = {} below 2", self.ba_m));
        }
        if self.ws_k < 2 || !self.ws_k.is_multiple_of(2) {
            return bad(format!("ws_k = {} must be even and at least 2", self.ws_k));
        }
        if !(0.0..=1.0).contains(&self.ws_beta) {
            return bad(format!("ws_beta = {} outside [0, 1]", self.ws_beta));
        }
        if self.max_attempts == 0 {
            return bad("max_attempts must be positive".into());
        }
        for &n in &self.orders {
            if !(3..=MAX_VERTICES).contains(&n) {
                return bad(format!("order {n} outside 3..={MAX_VERTICES}"));
            }
            if self.quotas.ba > 0 && self.ba_m >= n {
                return bad(format!("ba_m = {} not below order {n}", self.ba_m));
            }
            if self.quotas.ws > 0 && self.ws_k >= n {
                return bad(format!("ws_k = {} not below order {n}", self.ws_k));
            }
        }
        Ok(())
    }
}

fn check_order(n: usize) -> Result<(), DatasetError> {
    if !(2..=MAX_VERTICES).contains(&n) {
        return Err(DatasetError::Parameter(format!("order {n} outside 2..={MAX_VERTICES}")));
    }
    Ok(())
}

fn from_rows(rows: &[u64]) -> Result<SimpleGraph, GraphError> {
    let edges = (0..rows.len()).flat_map(|i| (i + 1..rows.len()).filter(move |&j| rows[i] >> j & 1 == 1).map(move |j| (i, j)));
    SimpleGraph::from_edges(rows.len(), edges)
}

/// Erdős–Rényi G(n, p): pairs visited in row-major order, one uniform draw each.
pub fn gen_er<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<SimpleGraph, DatasetError> {
    check_order(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(DatasetError::Parameter(format!("p = {p} outside [0, 1]")));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(SimpleGraph::from_edges(n, edges)?)
}

/// Barabási–Albert preferential attachment grown from a clique on `m` vertices.
pub fn gen_ba<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<SimpleGraph, DatasetError> {
    check_order(n)?;
    if m < 2 || m >= n {
        return Err(DatasetError::Parameter(format!("attachment count {m} outside 2..{n}")));
    }
    let mut rows = vec![0u64; n];
    let mut degree = vec![0usize; n];
    for i in 0..m {
        for j in i + 1..m {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
            degree[i] += 1;
            degree[j] += 1;
        }
    }
    for v in m..n {
        let mut chosen = 0u64;
        for _ in 0..m {
            let total: usize = (0..v).filter(|&u| chosen >> u & 1 == 0).map(|u| degree[u]).sum();
            let mut ticket = rng.random_range(0..total);
            let target = (0..v)
                .filter(|&u| chosen >> u & 1 == 0)
                .find(|&u| {
                    if ticket < degree[u] {
                        true
                    } else {
                        ticket -= degree[u];
                        false
                    }
                })
                .expect("ticket falls inside the total weight");
            chosen |= 1 << target;
        }
        for u in crate::graph::BitIter(chosen) {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    Ok(from_rows(&rows)?)
}

/// Watts–Strogatz: ring lattice of even degree `k`, each lattice edge
/// `(u, u + s)` rewired with probability `beta` to a fresh endpoint.
pub fn gen_ws<R: Rng + ?Sized>(n: usize, k: usize, beta: f64, rng: &mut R) -> Result<SimpleGraph, DatasetError> {
    check_order(n)?;
    if k < 2 || !k.is_multiple_of(2) || k >= n {
        return Err(DatasetError::Parameter(format!("k = {k} must be even with 2 <= k < {n}")));
    }
    if !(0.0..=1.0).contains(&beta) {
        return Err(DatasetError::Parameter(format!("beta = {beta} outside [0, 1]")));
    }
    let mut rows = vec![0u64; n];
    for u in 0..n {
        for s in 1..=k / 2 {
            let v = (u + s) % n;
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    for s in 1..=k / 2 {
        for u in 0..n {
            let v = (u + s) % n;
            if rows[u] >> v & 1 == 0 || rng.random::<f64>() >= beta {
                continue;
            }
            let free: Vec<usize> = (0..n).filter(|&w| w != u && rows[u] >> w & 1 == 0).collect();
            if free.is_empty() {
                continue;
            }
            let w = free[rng.random_range(0..free.len())];
            rows[u] &= !(1 << v);
            rows[v] &= !(1 << u);
            rows[u] |= 1 << w;
            rows[w] |= 1 << u;
        }
    }
    Ok(from_rows(&rows)?)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Mixes `index` into `seed`, giving independent substreams.
pub fn derive_stream(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index))
}

/// Seed of one generation attempt; independent of every other cell's stream.
pub fn derive_seed(master_seed: u64, model: GraphModel, order: usize, attempt: u64) -> u64 {
    [model.code(), order as u64, attempt].into_iter().fold(master_seed, derive_stream)
}

pub fn generate(spec: &DatasetSpec, model: GraphModel, n: usize, seed: u64) -> Result<SimpleGraph, DatasetError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match model {
        GraphModel::Er => gen_er(n, spec.er_p, &mut rng),
        GraphModel::Ba => gen_ba(n, spec.ba_m, &mut rng),
        GraphModel::Ws => gen_ws(n, spec.ws_k, spec.ws_beta, &mut rng),
    }
}

/// Connected and free of pendant (and isolated) vertices.
pub fn passes_filter(g: &SimpleGraph) -> bool {
    g.is_connected() && g.min_degree() >= 2
}

/// Isomorphism classes seen so far, bucketed by a cheap invariant.
#[derive(Debug, Default, Clone)]
pub struct DedupSet {
    buckets: HashMap<GraphInvariant, Vec<Vec<u8>>>,
    len: usize,
}

impl DedupSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, invariant: &GraphInvariant, key: &[u8]) -> bool {
        self.buckets.get(invariant).is_some_and(|b| b.iter().any(|k| k == key))
    }

    /// Returns false if an isomorphic graph was already present.
    pub fn insert(&mut self, invariant: GraphInvariant, key: Vec<u8>) -> bool {
        let bucket = self.buckets.entry(invariant).or_default();
        if bucket.contains(&key) {
            return false;
        }
        bucket.push(key);
        self.len += 1;
        true
    }

    pub fn insert_graph(&mut self, g: &SimpleGraph) -> bool {
        self.insert(invariant_hash(g), canonical_key(g))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetEntry {
    pub id: String,
    pub model: GraphModel,
    pub order: usize,
    pub attempt: u64,
    pub seed: u64,
    pub graph: SimpleGraph,
    pub key: Vec<u8>,
}

/// Bookkeeping for one (model, order) cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CellStats {
    pub model: GraphModel,
    pub order: usize,
    pub quota: usize,
    pub accepted: usize,
    pub attempts: u64,
    pub rejected_filter: u64,
    pub rejected_duplicate: u64,
}

impl CellStats {
    pub fn acceptance_rate(&self) -> f64 {
        if self.attempts == 0 {
            0.0
        } else {
            self.accepted as f64 / self.attempts as f64
        }
    }
}

#[derive(Debug, Clone)]
pub struct Dataset {
    pub spec: DatasetSpec,
    pub graphs: Vec<DatasetEntry>,
    pub stats: Vec<CellStats>,
}

struct Accepted {
    attempt: u64,
    seed: u64,
    graph: SimpleGraph,
    invariant: GraphInvariant,
    key: Vec<u8>,
}

struct CellRun {
    accepted: Vec<Accepted>,
    next_attempt: u64,
}

/// Draws attempts from `start` until `need` new classes (absent from
/// `exclude`) are found.
fn fill(
    spec: &DatasetSpec,
    stats: &mut CellStats,
    start: u64,
    need: usize,
    exclude: &DedupSet,
) -> Result<CellRun, DatasetError> {
    let mut own = DedupSet::new();
    let mut accepted = Vec::with_capacity(need);
    let mut attempt = start;
    let mut since_last = 0u64;
    while accepted.len() < need {
        if since_last == spec.max_attempts {
            return Err(DatasetError::Quota {
                model: stats.model,
                order: stats.order,
                quota: stats.quota,
                accepted: stats.accepted + accepted.len(),
                attempts: stats.attempts,
                rate: (stats.accepted + accepted.len()) as f64 / stats.attempts.max(1) as f64,
            });
        }
        let seed = derive_seed(spec.master_seed, stats.model, stats.order, attempt);
        let graph = generate(spec, stats.model, stats.order, seed)?;
        attempt += 1;
        since_last += 1;
        stats.attempts += 1;
        if !passes_filter(&graph) {
            stats.rejected_filter += 1;
            continue;
        }
        let invariant = invariant_hash(&graph);
        let key = canonical_key(&graph);
        if exclude.contains(&invariant, &key) || !own.insert(invariant.clone(), key.clone()) {
            stats.rejected_duplicate += 1;
            continue;
        }
        since_last = 0;
        accepted.push(Accepted { attempt: attempt - 1, seed, graph, invariant, key });
    }
    Ok(CellRun { accepted, next_attempt: attempt })
}

/// Rejection-samples every (order, model) cell.
///
/// Cells run concurrently with only their own dedup; a sequential pass in
/// cell order then drops cross-cell isomorphs and tops each cell back up by
/// continuing its attempt stream, so the result is independent of scheduling.
pub fn build_dataset(spec: &DatasetSpec) -> Result<Dataset, DatasetError> {
    spec.validate()?;
    let cells: Vec<CellStats> = spec
        .orders
        .iter()
        .flat_map(|&order| {
            GraphModel::ALL.into_iter().map(move |model| CellStats {
                model,
                order,
                quota: spec.quotas.get(model),
                accepted: 0,
                attempts: 0,
                rejected_filter: 0,
                rejected_duplicate: 0,
            })
        })
        .collect();
    let empty = DedupSet::new();
    let runs: Vec<Result<(CellStats, CellRun), DatasetError>> = cells
        .into_par_iter()
        .map(|mut stats| {
            let quota = stats.quota;
            let run = fill(spec, &mut stats, 0, quota, &empty)?;
            Ok((stats, run))
        })
        .collect();

    let mut global = DedupSet::new();
    let mut graphs = Vec::new();
    let mut all_stats = Vec::new();
    for run in runs {
        let (mut stats, run) = run?;
        let mut next_attempt = run.next_attempt;
        let mut batch = run.accepted;
        loop {
            for a in batch {
                if !global.insert(a.invariant, a.key.clone()) {
                    stats.rejected_duplicate += 1;
                    continue;
                }
                stats.accepted += 1;
                graphs.push(DatasetEntry {
                    id: format!("g{:05}", graphs.len()),
                    model: stats.model,
                    order: stats.order,
                    attempt: a.attempt,
                    seed: a.seed,
                    graph: a.graph,
                    key: a.key,
                });
            }
            if stats.accepted == stats.quota {
                break;
            }
            let need = stats.quota - stats.accepted;
            let top_up = fill(spec, &mut stats, next_attempt, need, &global)?;
            next_attempt = top_up.next_attempt;
            batch = top_up.accepted;
        }
        all_stats.push(stats);
    }
    Ok(Dataset { spec: spec.clone(), graphs, stats: all_stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn er_extremes_and_determinism() {
        assert_eq!(gen_er(7, 1.0, &mut rng(1)).unwrap(), k(7));
        assert_eq!(gen_er(7, 0.0, &mut rng(1)).unwrap().m(), 0);
        assert_eq!(gen_er(12, 0.4, &mut rng(9)).unwrap(), gen_er(12, 0.4, &mut rng(9)).unwrap());
        assert!(gen_er(1, 0.5, &mut rng(0)).is_err());
        assert!(gen_er(5, 1.5, &mut rng(0)).is_err());
    }

    #[test]
    fn er_edge_density() {
        let mut r = rng(3);
        let trials = 400;
        let total: usize = (0..trials).map(|_| gen_er(10, 0.3, &mut r).unwrap().m()).sum();
        let mean = total as f64 / trials as f64;
        // 45 pairs at p = 0.3: mean 13.5, sd of the mean about 0.15.
        assert!((mean - 13.5).abs() < 0.8, "{mean}");
    }

    #[test]
    fn ba_examples() {
        assert_eq!(gen_ba(3, 2, &mut rng(0)).unwrap(), k(3));
        assert_eq!(gen_ba(5, 4, &mut rng(0)).unwrap(), k(5));
        for seed in 0..50 {
            let g = gen_ba(15, 2, &mut rng(seed)).unwrap();
            assert!(g.min_degree() >= 2);
            assert!(g.is_connected());
            assert_eq!(g.m(), 1 + 2 * 13);
        }
        assert_eq!(gen_ba(12, 3, &mut rng(5)).unwrap(), gen_ba(12, 3, &mut rng(5)).unwrap());
        assert!(gen_ba(4, 1, &mut rng(0)).is_err());
        assert!(gen_ba(4, 4, &mut rng(0)).is_err());
    }

    #[test]
    fn ws_examples() {
        assert_eq!(gen_ws(9, 2, 0.0, &mut rng(0)).unwrap(), SimpleGraph::cycle(9).unwrap());
        let lattice = gen_ws(10, 4, 0.0, &mut rng(0)).unwrap();
        assert!(lattice.degrees().iter().all(|&d| d == 4));
        assert!(lattice.has_edge(0, 2) && lattice.has_edge(0, 8) && !lattice.has_edge(0, 3));
        for seed in 0..50 {
            let g = gen_ws(12, 4, 0.5, &mut rng(seed)).unwrap();
            assert_eq!(g.m(), 24);
        }
        assert_eq!(gen_ws(12, 4, 0.3, &mut rng(2)).unwrap(), gen_ws(12, 4, 0.3, &mut rng(2)).unwrap());
        assert!(gen_ws(8, 3, 0.1, &mut rng(0)).is_err());
        assert!(gen_ws(4, 4, 0.1, &mut rng(0)).is_err());
        assert!(gen_ws(8, 2, -0.1, &mut rng(0)).is_err());
    }

    #[test]
    fn seeds_are_stream_separated() {
        let a = derive_seed(7, GraphModel::Er, 10, 0);
        assert_eq!(a, derive_seed(7, GraphModel::Er, 10, 0));
        assert_ne!(a, derive_seed(7, GraphModel::Ba, 10, 0));
        assert_ne!(a, derive_seed(7, GraphModel::Er, 11, 0));
        assert_ne!(a, derive_seed(7, GraphModel::Er, 10, 1));
        assert_ne!(a, derive_seed(8, GraphModel::Er, 10, 0));
    }

    fn small_spec(er: usize, ba: usize, ws: usize) -> DatasetSpec {
        DatasetSpec::new(vec![10], Quotas { er, ba, ws }, 2024)
    }

    #[test]
    fn five_er_graphs() {
        let d = build_dataset(&small_spec(5, 0, 0)).unwrap();
        assert_eq!(d.graphs.len(), 5);
        let mut seen = DedupSet::new();
        for e in &d.graphs {
            assert_eq!(e.graph.n(), 10);
            assert!(passes_filter(&e.graph));
            assert!(seen.insert_graph(&e.graph));
            assert_eq!(e.seed, derive_seed(2024, GraphModel::Er, 10, e.attempt));
        }
        let again = build_dataset(&small_spec(5, 0, 0)).unwrap();
        assert_eq!(d.graphs, again.graphs);
    }

    #[test]
    fn zero_probability_fails_quota() {
        let mut spec = small_spec(2, 0, 0);
        spec.er_p = 0.0;
        spec.max_attempts = 500;
        match build_dataset(&spec) {
            Err(DatasetError::Quota { accepted: 0, attempts: 500, rate, .. }) => assert_eq!(rate, 0.0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn deleting_a_model_keeps_other_streams() {
        let full = build_dataset(&small_spec(4, 3, 3)).unwrap();
        let er_only = build_dataset(&small_spec(4, 0, 0)).unwrap();
        let er_full: Vec<_> = full.graphs.iter().filter(|e| e.model == GraphModel::Er).map(|e| &e.graph).collect();
        let er_alone: Vec<_> = er_only.graphs.iter().map(|e| &e.graph).collect();
        assert_eq!(er_full, er_alone);
    }

    #[test]
    fn injected_isomorph_is_rejected() {
        let mut set = DedupSet::new();
        let g = petersen();
        assert!(set.insert_graph(&g));
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert!(!set.insert_graph(&g.relabel(&perm)));
        assert!(set.insert_graph(&c5()));
        assert_eq!(set.len(), 2);
    }

    #[test]
    fn cross_cell_duplicates_are_replaced() {
        // Tiny order with many requests forces BA and WS cells to collide
        // with each other and with ER; the merged set must stay isomorph-free.
        let spec = DatasetSpec { ws_beta: 0.6, ..DatasetSpec::new(vec![6], Quotas { er: 6, ba: 4, ws: 4 }, 11) };
        let d = build_dataset(&spec).unwrap();
        assert_eq!(d.graphs.len(), 14);
        let mut set = DedupSet::new();
        assert!(d.graphs.iter().all(|e| set.insert_graph(&e.graph)));
        for s in &d.stats {
            assert_eq!(s.accepted, s.quota);
            assert!(s.attempts >= s.accepted as u64);
        }
    }

    #[test]
    fn spec_validation() {
        assert!(small_spec(1, 1, 1).validate().is_ok());
        let bad = [
            DatasetSpec { orders: vec![], ..small_spec(1, 0, 0) },
            DatasetSpec { er_p: 1.2, ..small_spec(1, 0, 0) },
            DatasetSpec { ba_m: 1, ..small_spec(1, 0, 0) },
            DatasetSpec { ws_k: 3, ..small_spec(1, 0, 0) },
            DatasetSpec { ws_k: 10, ..small_spec(0, 0, 1) },
            DatasetSpec { ws_beta: 2.0, ..small_spec(1, 0, 0) },
            DatasetSpec { max_attempts: 0, ..small_spec(1, 0, 0) },
            DatasetSpec { orders: vec![2], ..small_spec(1, 0, 0) },
        ];
        for spec in bad {
            assert!(matches!(spec.validate(), Err(DatasetError::Parameter(_))), "{spec:?}");
        }
        assert_eq!("ws".parse::<GraphModel>().unwrap(), GraphModel::Ws);
        assert!("xx".parse::<GraphModel>().is_err());
    }
}
