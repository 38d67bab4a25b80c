//! Single-edge insertion heuristics.
//!
//! Basic heuristics (`alpha`, `phi`, `beta`, `gamma`, `delta`, `random`)
//! return every insertion that ties on their criterion. Derivative ones
//! return exactly one: `phi-cap` breaks `phi` ties by the algebraic
//! connectivity of the supergraph, and the post-hoc `b-posthoc` and
//! `gamma-posthoc` pick the best-scoring insertion among `beta` and `gamma`
//! candidates once scores are known.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{betweenness_all, BetweennessMode, BitIter, EdgeInsertion, GraphError, SimpleGraph};
use crate::spectral::{algebraic_connectivity, SpectralData, SpectralError, DEFAULT_MULTIPLICITY_TOLERANCE};

/// Absolute tolerance under which two spectral criterion values tie.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HeuristicId {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Phi,
    Random,
    #[serde(rename = "b-posthoc")]
    BPostHoc,
    #[serde(rename = "gamma-posthoc")]
    GammaPostHoc,
    PhiCap,
}

impl HeuristicId {
    /// Basic heuristics in report order.
    pub const BASIC: [HeuristicId; 6] = [
        HeuristicId::Alpha,
        HeuristicId::Beta,
        HeuristicId::Gamma,
        HeuristicId::Delta,
        HeuristicId::Phi,
        HeuristicId::Random,
    ];

    /// Every heuristic in report order.
    pub const ALL: [HeuristicId; 9] = [
        HeuristicId::Alpha,
        HeuristicId::Beta,
        HeuristicId::Gamma,
        HeuristicId::Delta,
        HeuristicId::Phi,
        HeuristicId::Random,
        HeuristicId::BPostHoc,
        HeuristicId::GammaPostHoc,
        HeuristicId::PhiCap,
    ];

    /// Heuristics that run on a graph alone (everything but the post-hoc pair).
    pub const OPERATIONAL: [HeuristicId; 7] = [
        HeuristicId::Alpha,
        HeuristicId::Beta,
        HeuristicId::Gamma,
        HeuristicId::Delta,
        HeuristicId::Phi,
        HeuristicId::Random,
        HeuristicId::PhiCap,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            HeuristicId::Alpha => "alpha",
            HeuristicId::Phi => "phi",
            HeuristicId::PhiCap => "phi-cap",
            HeuristicId::Beta => "beta",
            HeuristicId::Gamma => "gamma",
            HeuristicId::Delta => "delta",
            HeuristicId::Random => "random",
            HeuristicId::BPostHoc => "b-posthoc",
            HeuristicId::GammaPostHoc => "gamma-posthoc",
        }
    }

    /// Short table label.
    pub fn symbol(self) -> &'static str {
        match self {
            HeuristicId::Alpha => "α",
            HeuristicId::Phi => "φ",
            HeuristicId::PhiCap => "Φ",
            HeuristicId::Beta => "β",
            HeuristicId::Gamma => "γ",
            HeuristicId::Delta => "δ",
            HeuristicId::Random => "r",
            HeuristicId::BPostHoc => "B",
            HeuristicId::GammaPostHoc => "Γ",
        }
    }

    pub fn is_basic(self) -> bool {
        Self::BASIC.contains(&self)
    }

    /// The post-hoc refinement built on this heuristic, if any.
    pub fn post_hoc(self) -> Option<HeuristicId> {
        match self {
            HeuristicId::Beta => Some(HeuristicId::BPostHoc),
            HeuristicId::Gamma => Some(HeuristicId::GammaPostHoc),
            _ => None,
        }
    }
}

impl fmt::Display for HeuristicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HeuristicId {
    type Err = HeuristicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HeuristicId::ALL
            .into_iter()
            .find(|h| h.as_str() == s)
            .ok_or_else(|| HeuristicError::UnknownId(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HeuristicError {
    #[error("no insertion possible: the graph is complete")]
    CompleteGraph,
    #[error("unknown heuristic {0:?}")]
    UnknownId(String),
    #[error("no score for candidate {0}")]
    MissingScore(EdgeInsertion),
    #[error("{0} has no post-hoc refinement")]
    NoPostHoc(HeuristicId),
    #[error("{0} needs scores and cannot run on a graph alone")]
    NeedsScores(HeuristicId),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Value a candidate was ranked by.
#[derive(Debug, Clone, PartialEq)]
pub enum Criterion {
    /// Algebraic connectivity of the supergraph.
    Alpha(f64),
    FiedlerDistance(f64),
    /// Fiedler distance in `G`, then algebraic connectivity of the supergraph.
    FiedlerThenAlpha { distance: f64, alpha: f64 },
    /// Endpoint betweenness, smaller first.
    Betweenness(BigRational, BigRational),
    /// Endpoint degrees, smaller first.
    Degrees(usize, usize),
    /// Distance from the hub endpoint.
    Distance(u32),
    Uniform { seed: u64 },
    Score(BigRational),
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Criterion::Alpha(a) => write!(f, "alpha(Y)={a:.9}"),
            Criterion::FiedlerDistance(d) => write!(f, "fiedler_distance={d:.9}"),
            Criterion::FiedlerThenAlpha { distance, alpha } => {
                write!(f, "fiedler_distance={distance:.9};alpha(Y)={alpha:.9}")
            }
            Criterion::Betweenness(a, b) => write!(f, "betweenness=({a};{b})"),
            Criterion::Degrees(a, b) => write!(f, "degrees=({a};{b})"),
            Criterion::Distance(d) => write!(f, "distance={d}"),
            Criterion::Uniform { seed } => write!(f, "seed={seed}"),
            Criterion::Score(s) => write!(f, "F={s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub edge: EdgeInsertion,
    pub criterion: Criterion,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeuristicResult {
    pub id: HeuristicId,
    /// Nonempty, sorted by edge.
    pub candidates: Vec<Candidate>,
}

impl HeuristicResult {
    pub fn edges(&self) -> impl Iterator<Item = EdgeInsertion> + '_ {
        self.candidates.iter().map(|c| c.edge)
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }
}

fn check_input(g: &SimpleGraph) -> Result<(), HeuristicError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    if g.non_edge_count() == 0 {
        return Err(HeuristicError::CompleteGraph);
    }
    Ok(())
}

/// Keeps the candidates within `TIE_TOLERANCE` of the largest value.
fn keep_max_real(id: HeuristicId, scored: Vec<(EdgeInsertion, f64)>, wrap: fn(f64) -> Criterion) -> HeuristicResult {
    let best = scored.iter().map(|(_, v)| *v).fold(f64::NEG_INFINITY, f64::max);
    let candidates = scored
        .into_iter()
        .filter(|(_, v)| best - v <= TIE_TOLERANCE)
        .map(|(edge, v)| Candidate { edge, criterion: wrap(v) })
        .collect();
    HeuristicResult { id, candidates }
}

/// Keeps the candidates whose exact key is minimal.
fn keep_min_exact<K: Ord + Clone>(
    id: HeuristicId,
    keyed: Vec<(EdgeInsertion, K)>,
    wrap: impl Fn(K) -> Criterion,
) -> HeuristicResult {
    let best = keyed.iter().map(|(_, k)| k).min().cloned().expect("nonempty candidate list");
    let candidates = keyed
        .into_iter()
        .filter(|(_, k)| *k == best)
        .map(|(edge, k)| Candidate { edge, criterion: wrap(k) })
        .collect();
    HeuristicResult { id, candidates }
}

/// Insertions whose supergraph has the largest algebraic connectivity.
pub fn heuristic_alpha(g: &SimpleGraph) -> Result<HeuristicResult, HeuristicError> {
    check_input(g)?;
    let scored = g
        .non_edges()
        .map(|e| Ok((e, algebraic_connectivity(&g.insert_edge(e)?)?)))
        .collect::<Result<Vec<_>, HeuristicError>>()?;
    Ok(keep_max_real(HeuristicId::Alpha, scored, Criterion::Alpha))
}

/// Insertions between the non-adjacent pair farthest apart in the Fiedler eigenspace.
pub fn heuristic_phi(g: &SimpleGraph) -> Result<HeuristicResult, HeuristicError> {
    check_input(g)?;
    let spectral = SpectralData::new(g, DEFAULT_MULTIPLICITY_TOLERANCE)?;
    Ok(phi_from_spectrum(g, &spectral))
}

pub fn phi_from_spectrum(g: &SimpleGraph, spectral: &SpectralData) -> HeuristicResult {
    let scored = g.non_edges().map(|e| (e, spectral.fiedler_distance(e.i, e.j))).collect();
    keep_max_real(HeuristicId::Phi, scored, Criterion::FiedlerDistance)
}

/// `phi` with ties broken by the supergraph's algebraic connectivity, then
/// by the lexicographically smallest pair.
pub fn heuristic_phi_cap(g: &SimpleGraph) -> Result<HeuristicResult, HeuristicError> {
    let phi = heuristic_phi(g)?;
    phi_cap_from_phi(g, &phi)
}

pub fn phi_cap_from_phi(g: &SimpleGraph, phi: &HeuristicResult) -> Result<HeuristicResult, HeuristicError> {
    let mut scored = Vec::with_capacity(phi.len());
    for c in &phi.candidates {
        let Criterion::FiedlerDistance(distance) = c.criterion else {
            unreachable!("phi candidates carry Fiedler distances")
        };
        scored.push((c.edge, distance, algebraic_connectivity(&g.insert_edge(c.edge)?)?));
    }
    let best = scored.iter().map(|s| s.2).fold(f64::NEG_INFINITY, f64::max);
    let (edge, distance, alpha) = scored
        .into_iter()
        .filter(|s| best - s.2 <= TIE_TOLERANCE)
        .min_by_key(|s| s.0)
        .expect("phi is nonempty");
    Ok(HeuristicResult {
        id: HeuristicId::PhiCap,
        candidates: vec![Candidate { edge, criterion: Criterion::FiedlerThenAlpha { distance, alpha } }],
    })
}

/// Non-adjacent pairs of least betweenness (smaller endpoint value first, then larger).
pub fn heuristic_beta(g: &SimpleGraph) -> Result<HeuristicResult, HeuristicError> {
    heuristic_beta_with(g, BetweennessMode::GlobalRatio)
}

pub fn heuristic_beta_with(g: &SimpleGraph, mode: BetweennessMode) -> Result<HeuristicResult, HeuristicError> {
    check_input(g)?;
    let b = betweenness_all(g, mode)?;
    let keyed = g
        .non_edges()
        .map(|e| {
            let (lo, hi) = if b[e.i] <= b[e.j] { (e.i, e.j) } else { (e.j, e.i) };
            (e, (b[lo].clone(), b[hi].clone()))
        })
        .collect();
    Ok(keep_min_exact(HeuristicId::Beta, keyed, |(x, y)| Criterion::Betweenness(x, y)))
}

/// Non-adjacent pairs of least degree (smaller endpoint degree first, then larger).
pub fn heuristic_gamma(g: &SimpleGraph) -> Result<HeuristicResult, HeuristicError> {
    check_input(g)?;
    let keyed = g
        .non_edges()
        .map(|e| {
            let (a, b) = (g.degree(e.i), g.degree(e.j));
            (e, (a.min(b), a.max(b)))
        })
        .collect();
    Ok(keep_min_exact(HeuristicId::Gamma, keyed, |(a, b)| Criterion::Degrees(a, b)))
}

/// Pairs joining a maximum-degree vertex to a vertex geodesically farthest from it.
///
/// All vertices sharing the top degree contribute; if every one of them is
/// already adjacent to all others, the next degree tier is used.
pub fn heuristic_delta(g: &SimpleGraph) -> Result<HeuristicResult, HeuristicError> {
    check_input(g)?;
    let full = g.full_mask();
    let mut tiers: Vec<usize> = g.degrees();
    tiers.sort_unstable_by(|a, b| b.cmp(a));
    tiers.dedup();
    for degree in tiers {
        let hubs: Vec<usize> = (0..g.n())
            .filter(|&u| g.degree(u) == degree && g.row(u) | 1 << u != full)
            .collect();
        if hubs.is_empty() {
            continue;
        }
        let mut pairs: Vec<(EdgeInsertion, u32)> = Vec::new();
        for &u in &hubs {
            let dist = crate::graph::bfs_distances(g, u);
            let free = full & !g.row(u) & !(1 << u);
            for w in BitIter(free) {
                pairs.push((EdgeInsertion::new(u, w), dist[w]));
            }
        }
        let far = pairs.iter().map(|p| p.1).max().expect("hubs have a non-neighbour");
        let mut candidates: Vec<Candidate> = pairs
            .into_iter()
            .filter(|p| p.1 == far)
            .map(|(edge, d)| Candidate { edge, criterion: Criterion::Distance(d) })
            .collect();
        candidates.sort_by_key(|c| c.edge);
        candidates.dedup_by_key(|c| c.edge);
        return Ok(HeuristicResult { id: HeuristicId::Delta, candidates });
    }
    unreachable!("a non-complete graph has a vertex with a non-neighbour")
}

/// One non-adjacent pair drawn uniformly with a ChaCha8 stream seeded by `seed`.
pub fn heuristic_random(g: &SimpleGraph, seed: u64) -> Result<HeuristicResult, HeuristicError> {
    check_input(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(0..g.non_edge_count());
    let edge = g.non_edges().nth(k).expect("index below non-edge count");
    Ok(HeuristicResult {
        id: HeuristicId::Random,
        candidates: vec![Candidate { edge, criterion: Criterion::Uniform { seed } }],
    })
}

/// Best-scoring candidate of `base`; equal scores go to the smaller pair.
pub fn derive_post_hoc(
    base: &HeuristicResult,
    scores: &HashMap<EdgeInsertion, BigRational>,
) -> Result<HeuristicResult, HeuristicError> {
    let id = base.id.post_hoc().ok_or(HeuristicError::NoPostHoc(base.id))?;
    let mut best: Option<(EdgeInsertion, &BigRational)> = None;
    let mut edges: Vec<EdgeInsertion> = base.edges().collect();
    edges.sort();
    for e in edges {
        let s = scores.get(&e).ok_or(HeuristicError::MissingScore(e))?;
        if best.is_none_or(|(_, b)| s > b) {
            best = Some((e, s));
        }
    }
    let (edge, score) = best.expect("base result is nonempty");
    Ok(HeuristicResult { id, candidates: vec![Candidate { edge, criterion: Criterion::Score(score.clone()) }] })
}

/// Runs any heuristic that needs only the graph.
pub fn apply(id: HeuristicId, g: &SimpleGraph, seed: u64) -> Result<HeuristicResult, HeuristicError> {
    match id {
        HeuristicId::Alpha => heuristic_alpha(g),
        HeuristicId::Phi => heuristic_phi(g),
        HeuristicId::PhiCap => heuristic_phi_cap(g),
        HeuristicId::Beta => heuristic_beta(g),
        HeuristicId::Gamma => heuristic_gamma(g),
        HeuristicId::Delta => heuristic_delta(g),
        HeuristicId::Random => heuristic_random(g, seed),
        HeuristicId::BPostHoc | HeuristicId::GammaPostHoc => Err(HeuristicError::NeedsScores(id)),
    }
}
