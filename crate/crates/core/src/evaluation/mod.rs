//! Scoring heuristics against exact reliability.
//!
//! For every graph, each heuristic's insertions are scored by
//! `F = integral of R(G + e, p) dp`; the relative deviation index of an
//! insertion is `(F_B - F) / (F_B - F_W)`, where `F_B` and `F_W` are the best
//! and worst scores among all insertions proposed by the basic heuristics.

mod report;
mod timing;
mod wilcoxon;

pub use report::{ReportHeader, ReportFiles};
pub use timing::{timing_benchmark, TimingRow, TimingTable};
pub use wilcoxon::{bonferroni, signed_rank_test, wilcoxon_one_sided, WilcoxonMode, WilcoxonResult, NORMAL_MIN_PAIRS};

use std::collections::{BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{EdgeInsertion, SimpleGraph};
use crate::heuristics::{
    derive_post_hoc, heuristic_alpha, heuristic_beta, heuristic_delta, heuristic_gamma, heuristic_random,
    phi_cap_from_phi, phi_from_spectrum, HeuristicError, HeuristicId, HeuristicResult,
};
use crate::par::*;
use crate::reliability::{classify_subsets, count_connected, recount_for_insertion, ReliabilityError};
use crate::spectral::{SpectralData, SpectralError, DEFAULT_MULTIPLICITY_TOLERANCE};

#[derive(Debug, Error)]
pub enum EvaluationError {
    #[error("score {f} outside [{worst}, {best}]")]
    OutOfRange { f: String, best: String, worst: String },
    #[error("nothing to average")]
    Empty,
    #[error("incomplete records: {0}")]
    Incomplete(String),
    #[error("repetitions must be positive")]
    NoRepetitions,
    #[error("graph {id}: {source}")]
    Graph { id: String, source: Box<EvaluationError> },
    #[error(transparent)]
    Heuristic(#[from] HeuristicError),
    #[error(transparent)]
    Reliability(#[from] ReliabilityError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

impl EvaluationError {
    /// Whether the root cause is a graph above the enumeration budget.
    pub fn is_budget(&self) -> bool {
        match self {
            EvaluationError::Reliability(ReliabilityError::OverBudget(_)) => true,
            EvaluationError::Graph { source, .. } => source.is_budget(),
            _ => false,
        }
    }
}

/// `(F_B - F) / (F_B - F_W)`, or 0 when every insertion scores the same.
pub fn rdi_insertion(f: &BigRational, best: &BigRational, worst: &BigRational) -> Result<BigRational, EvaluationError> {
    if f > best || f < worst {
        return Err(EvaluationError::OutOfRange { f: f.to_string(), best: best.to_string(), worst: worst.to_string() });
    }
    if best == worst {
        return Ok(BigRational::zero());
    }
    Ok((best - f) / (best - worst))
}

fn mean(values: &[BigRational]) -> Result<BigRational, EvaluationError> {
    if values.is_empty() {
        return Err(EvaluationError::Empty);
    }
    let sum: BigRational = values.iter().sum();
    Ok(sum / BigRational::from_integer(values.len().into()))
}

/// Mean RDI over one heuristic's insertions on one graph.
pub fn rdi_heuristic(rdis: &[BigRational]) -> Result<BigRational, EvaluationError> {
    mean(rdis)
}

/// Mean of per-graph heuristic RDIs.
pub fn mrdi(per_graph: &[BigRational]) -> Result<BigRational, EvaluationError> {
    mean(per_graph)
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Seed of the random heuristic on the `index`-th graph of a run.
pub fn random_seed(seed: u64, index: usize) -> u64 {
    crate::generators::derive_stream(seed, index as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInput {
    pub id: String,
    pub model: String,
    pub graph: SimpleGraph,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InsertionScore {
    pub edge: EdgeInsertion,
    pub f: BigRational,
    pub rdi: BigRational,
}

/// One heuristic on one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct RdiRecord {
    pub heuristic: HeuristicId,
    pub insertions: Vec<InsertionScore>,
    /// Mean of the insertion RDIs.
    pub rdi: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphEvaluation {
    pub id: String,
    pub model: String,
    pub order: usize,
    /// Score of the graph before any insertion.
    pub f_graph: BigRational,
    pub f_best: BigRational,
    pub f_worst: BigRational,
    /// One record per heuristic, in `HeuristicId::ALL` order.
    pub records: Vec<RdiRecord>,
}

impl GraphEvaluation {
    pub fn record(&self, id: HeuristicId) -> Option<&RdiRecord> {
        self.records.iter().find(|r| r.heuristic == id)
    }
}

/// Runs every heuristic on one graph and scores all proposed insertions.
///
/// The subset classification of `G` is built once; each candidate
/// supergraph is scored by re-testing only the subsets the new edge can join.
pub fn evaluate_graph(input: &GraphInput, random_seed: u64) -> Result<GraphEvaluation, EvaluationError> {
    let g = &input.graph;
    let cls = classify_subsets(g)?;
    let spectral = SpectralData::new(g, DEFAULT_MULTIPLICITY_TOLERANCE)?;
    let phi = phi_from_spectrum(g, &spectral);
    let basic: Vec<HeuristicResult> = vec![
        heuristic_alpha(g)?,
        heuristic_beta(g)?,
        heuristic_gamma(g)?,
        heuristic_delta(g)?,
        phi,
        heuristic_random(g, random_seed)?,
    ];

    let edges: BTreeSet<EdgeInsertion> = basic.iter().flat_map(|r| r.edges()).collect();
    let mut scores = HashMap::with_capacity(edges.len());
    for &e in &edges {
        scores.insert(e, recount_for_insertion(g, &cls, e)?.score());
    }
    let f_best = scores.values().max().cloned().expect("a non-complete graph has candidates");
    let f_worst = scores.values().min().cloned().expect("a non-complete graph has candidates");

    let by_id = |id| basic.iter().find(|r| r.id == id).expect("basic heuristic present");
    let derived = [
        derive_post_hoc(by_id(HeuristicId::Beta), &scores)?,
        derive_post_hoc(by_id(HeuristicId::Gamma), &scores)?,
        phi_cap_from_phi(g, by_id(HeuristicId::Phi))?,
    ];

    let mut records = Vec::with_capacity(HeuristicId::ALL.len());
    for result in basic.iter().chain(&derived) {
        let insertions = result
            .edges()
            .map(|edge| {
                let f = scores[&edge].clone();
                let rdi = rdi_insertion(&f, &f_best, &f_worst)?;
                Ok(InsertionScore { edge, f, rdi })
            })
            .collect::<Result<Vec<_>, EvaluationError>>()?;
        let rdi = rdi_heuristic(&insertions.iter().map(|s| s.rdi.clone()).collect::<Vec<_>>())?;
        records.push(RdiRecord { heuristic: result.id, insertions, rdi });
    }
    records.sort_by_key(|r| HeuristicId::ALL.iter().position(|&h| h == r.heuristic));

    Ok(GraphEvaluation {
        id: input.id.clone(),
        model: input.model.clone(),
        order: g.n(),
        f_graph: count_connected(&cls).score(),
        f_best,
        f_worst,
        records,
    })
}

/// Evaluates every graph on up to `jobs` threads (0 = all cores); output
/// order follows `inputs` regardless of completion order.
pub fn evaluate_dataset(inputs: &[GraphInput], seed: u64, jobs: usize) -> Result<Vec<GraphEvaluation>, EvaluationError> {
    with_jobs(jobs, || {
        inputs
            .par_iter()
            .enumerate()
            .map(|(k, input)| {
                evaluate_graph(input, random_seed(seed, k))
                    .map_err(|e| EvaluationError::Graph { id: input.id.clone(), source: Box::new(e) })
            })
            .collect()
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub heuristic: HeuristicId,
    pub insertions: usize,
    /// Insertions reaching the graph's best score.
    pub best: usize,
    /// Graphs on which at least one insertion reaches the best score.
    pub unique: usize,
    pub mrdi: BigRational,
    /// Population SD over all per-insertion RDIs.
    pub sd_rdi: f64,
    /// Population SD over the per-graph heuristic RDIs.
    pub sd_graph_rdi: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestRow {
    pub first: HeuristicId,
    pub second: HeuristicId,
    /// `None` when there are too few graphs to test.
    pub result: Option<WilcoxonResult>,
    pub p_bonferroni: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub graphs: usize,
    pub rows: Vec<SummaryRow>,
    pub tests: Vec<TestRow>,
}

impl Summary {
    pub fn row(&self, id: HeuristicId) -> Option<&SummaryRow> {
        self.rows.iter().find(|r| r.heuristic == id)
    }

    /// Heuristics sharing the lowest MRDI.
    pub fn best(&self) -> Vec<HeuristicId> {
        let Some(min) = self.rows.iter().map(|r| &r.mrdi).min() else {
            return Vec::new();
        };
        self.rows.iter().filter(|r| &r.mrdi == min).map(|r| r.heuristic).collect()
    }
}

/// Pairs compared by the signed-rank test; each tests whether the first
/// heuristic's per-graph RDI is lower than the second's.
pub const TEST_PAIRS: [(HeuristicId, HeuristicId); 3] = [
    (HeuristicId::PhiCap, HeuristicId::BPostHoc),
    (HeuristicId::PhiCap, HeuristicId::GammaPostHoc),
    (HeuristicId::GammaPostHoc, HeuristicId::BPostHoc),
];

/// Fewer graphs than this and the tests are skipped.
pub const MIN_TEST_GRAPHS: usize = 2;

/// Exact population SD, rounded once at the end.
fn population_sd(values: &[BigRational]) -> f64 {
    let Ok(mu) = mean(values) else { return 0.0 };
    let squares: Vec<BigRational> = values.iter().map(|v| (v - &mu) * (v - &mu)).collect();
    to_f64(&mean(&squares).expect("nonempty")).sqrt()
}

pub fn summarize(evals: &[GraphEvaluation], mode: WilcoxonMode) -> Result<Summary, EvaluationError> {
    if evals.is_empty() {
        return Err(EvaluationError::Empty);
    }
    for e in evals {
        if HeuristicId::ALL.iter().any(|&h| e.record(h).is_none_or(|r| r.insertions.is_empty())) {
            return Err(EvaluationError::Incomplete(format!("graph {} lacks a heuristic record", e.id)));
        }
    }
    let per_graph = |h: HeuristicId| evals.iter().map(move |e| e.record(h).expect("checked above"));

    let mut rows = Vec::with_capacity(HeuristicId::ALL.len());
    for h in HeuristicId::ALL {
        let mut all = Vec::new();
        let mut graph_rdis = Vec::with_capacity(evals.len());
        let (mut best, mut unique) = (0, 0);
        for (e, rec) in evals.iter().zip(per_graph(h)) {
            let hits = rec.insertions.iter().filter(|s| s.f == e.f_best).count();
            best += hits;
            unique += usize::from(hits > 0);
            all.extend(rec.insertions.iter().map(|s| s.rdi.clone()));
            graph_rdis.push(rec.rdi.clone());
        }
        rows.push(SummaryRow {
            heuristic: h,
            insertions: all.len(),
            best,
            unique,
            mrdi: mrdi(&graph_rdis)?,
            sd_rdi: population_sd(&all),
            sd_graph_rdi: population_sd(&graph_rdis),
        });
    }

    let tests = TEST_PAIRS
        .iter()
        .map(|&(first, second)| {
            if evals.len() < MIN_TEST_GRAPHS {
                return TestRow { first, second, result: None, p_bonferroni: None };
            }
            let d: Vec<f64> = per_graph(second).zip(per_graph(first)).map(|(s, f)| to_f64(&(&s.rdi - &f.rdi))).collect();
            let result = signed_rank_test(&d, mode);
            TestRow { first, second, p_bonferroni: Some(bonferroni(result.p, TEST_PAIRS.len())), result: Some(result) }
        })
        .collect();

    Ok(Summary { graphs: evals.len(), rows, tests })
}
