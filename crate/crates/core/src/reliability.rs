//! Exact vertex reliability.
//!
//! With every vertex surviving independently with probability `p`,
//!
//! ```text
//! R(G, p) = sum_{r=1}^{n} S_r p^r (1 - p)^(n - r)
//! ```
//!
//! where `S_r` counts the connected induced subgraphs on `r` vertices. The
//! counts come from one pass over all `2^n - 1` vertex subsets; the pass is
//! kept as a [`SubsetClassification`] so that every single-edge supergraph
//! can be recounted by re-testing only the subsets the new edge can affect.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{EdgeInsertion, GraphError, SimpleGraph, VertexMask};

/// Largest order accepted by [`classify_subsets`].
pub const MAX_ENUMERATION_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReliabilityError {
    #[error("order {0} exceeds the enumeration budget of {MAX_ENUMERATION_ORDER} vertices")]
    OverBudget(usize),
    #[error("classification is for n = {classified} but the graph has n = {graph}")]
    StaleClassification { classified: usize, graph: usize },
    #[error("probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("invalid profile: {0}")]
    Profile(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Connectivity flag for every vertex subset of one graph.
#[derive(Clone, PartialEq, Eq)]
pub struct SubsetClassification {
    n: usize,
    flags: Vec<u64>,
    counts: Vec<u64>,
}

impl std::fmt::Debug for SubsetClassification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubsetClassification").field("n", &self.n).field("counts", &self.counts).finish()
    }
}

impl SubsetClassification {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `mask` induces a connected subgraph. The empty mask is not connected.
    #[inline]
    pub fn is_connected(&self, mask: VertexMask) -> bool {
        let m = mask as usize;
        self.flags[m >> 6] >> (m & 63) & 1 == 1
    }

    pub fn connected_count(&self) -> u64 {
        self.counts.iter().sum()
    }
}

pub fn classify_subsets(g: &SimpleGraph) -> Result<SubsetClassification, ReliabilityError> {
    let n = g.n();
    if n > MAX_ENUMERATION_ORDER {
        return Err(ReliabilityError::OverBudget(n));
    }
    let total = 1usize << n;
    let mut flags = vec![0u64; total.div_ceil(64)];
    let mut counts = vec![0u64; n];
    for mask in 1..total {
        if g.induced_connected(mask as VertexMask) {
            flags[mask >> 6] |= 1 << (mask & 63);
            counts[mask.count_ones() as usize - 1] += 1;
        }
    }
    Ok(SubsetClassification { n, flags, counts })
}

/// The counts `S_1..S_n` of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReliabilityProfile {
    counts: Vec<u64>,
}

fn binomial(n: usize, r: usize) -> u64 {
    (0..r).fold(1u64, |acc, k| acc * (n - k) as u64 / (k + 1) as u64)
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, x| acc * x)
}

impl ReliabilityProfile {
    /// Wraps `S_1..S_n`, checking `0 <= S_r <= C(n, r)` and `S_n <= 1`.
    pub fn new(counts: Vec<u64>) -> Result<Self, ReliabilityError> {
        let n = counts.len();
        if n == 0 {
            return Err(ReliabilityError::Profile("empty count sequence".into()));
        }
        for (k, &s) in counts.iter().enumerate() {
            if s > binomial(n, k + 1) {
                return Err(ReliabilityError::Profile(format!("S_{} = {s} exceeds C({n}, {})", k + 1, k + 1)));
            }
        }
        Ok(ReliabilityProfile { counts })
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    /// `S_1..S_n`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `S_r` for `1 <= r <= n`.
    pub fn s(&self, r: usize) -> u64 {
        self.counts[r - 1]
    }

    /// Number of `(n - r)`-vertex cut sets, `C(n, r) - S_r`.
    pub fn cut_sets(&self, r: usize) -> u64 {
        binomial(self.n(), r) - self.s(r)
    }

    pub fn is_connected(&self) -> bool {
        self.s(self.n()) == 1
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &ReliabilityProfile) -> bool {
        self.n() == other.n() && self.counts.iter().zip(&other.counts).all(|(a, b)| a >= b)
    }

    /// `R(G, p)` in floating point from the exact counts.
    pub fn evaluate(&self, p: f64) -> Result<f64, ReliabilityError> {
        if !(0.0..=1.0).contains(&p) {
            return Err(ReliabilityError::Probability(p));
        }
        let n = self.n() as i32;
        Ok(self
            .counts
            .iter()
            .enumerate()
            .map(|(k, &s)| {
                let r = k as i32 + 1;
                s as f64 * p.powi(r) * (1.0 - p).powi(n - r)
            })
            .sum())
    }

    /// `F = integral of R(G, p) over [0, 1]`, exactly.
    ///
    /// Uses the Beta integral `int_0^1 p^r (1-p)^(n-r) dp = r! (n-r)! / (n+1)!`.
    pub fn score(&self) -> BigRational {
        let n = self.n();
        let numer: BigInt = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 0)
            .map(|(k, &s)| BigInt::from(s) * factorial(k + 1) * factorial(n - k - 1))
            .sum();
        if numer.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(numer, factorial(n + 1))
    }
}

pub fn count_connected(cls: &SubsetClassification) -> ReliabilityProfile {
    ReliabilityProfile { counts: cls.counts.clone() }
}

/// Profile of `g + e` from the classification of `g`.
///
/// A subset connected in `g` stays connected in the supergraph, and a
/// disconnected subset can only change if it holds both endpoints of `e`,
/// so only those subsets are re-tested.
pub fn recount_for_insertion(
    g: &SimpleGraph,
    cls: &SubsetClassification,
    e: EdgeInsertion,
) -> Result<ReliabilityProfile, ReliabilityError> {
    if cls.n != g.n() {
        return Err(ReliabilityError::StaleClassification { classified: cls.n, graph: g.n() });
    }
    let y = g.insert_edge(e)?;
    let pair = e.mask();
    let rest = g.full_mask() & !pair;
    let mut counts = cls.counts.clone();
    let mut sub = rest;
    loop {
        let mask = sub | pair;
        if !cls.is_connected(mask) && y.induced_connected(mask) {
            counts[mask.count_ones() as usize - 1] += 1;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    Ok(ReliabilityProfile { counts })
}

pub fn evaluate_polynomial(prof: &ReliabilityProfile, p: f64) -> Result<f64, ReliabilityError> {
    prof.evaluate(p)
}

pub fn score_f(prof: &ReliabilityProfile) -> BigRational {
    prof.score()
}

/// One row per graph: `graph,n,S_1..S_max,F`, with `F` as `num/den`.
pub fn profiles_csv<'a>(rows: impl IntoIterator<Item = (&'a str, &'a ReliabilityProfile)>) -> String {
    let rows: Vec<_> = rows.into_iter().collect();
    let width = rows.iter().map(|(_, p)| p.n()).max().unwrap_or(0);
    let mut s = String::from("graph,n");
    for r in 1..=width {
        let _ = write!(s, ",S_{r}");
    }
    s.push_str(",F\n");
    for (id, p) in rows {
        let _ = write!(s, "{id},{}", p.n());
        for r in 1..=width {
            if r <= p.n() {
                let _ = write!(s, ",{}", p.s(r));
            } else {
                s.push(',');
            }
        }
        let _ = writeln!(s, ",{}", p.score());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn profile(g: &SimpleGraph) -> ReliabilityProfile {
        count_connected(&classify_subsets(g).unwrap())
    }

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    /// Direct expansion: sum over every subset of surviving vertices.
    fn reliability_by_subsets(g: &SimpleGraph, p: f64) -> f64 {
        let n = g.n();
        (1u64..1 << n)
            .filter(|&m| g.induced_connected(m))
            .map(|m| {
                let r = m.count_ones() as i32;
                p.powi(r) * (1.0 - p).powi(n as i32 - r)
            })
            .sum()
    }

    #[test]
    fn classification_examples() {
        let cls = classify_subsets(&k(3)).unwrap();
        assert!((1..8).all(|m| cls.is_connected(m)));
        let cls = classify_subsets(&p(3)).unwrap();
        assert_eq!(cls.connected_count(), 6);
        assert!(!cls.is_connected(0b101));
        assert!(!cls.is_connected(0));
        let cls = classify_subsets(&c5()).unwrap();
        assert_eq!(cls.connected_count(), 21);
        assert!(cls.is_connected(0b11111));
        assert!((0..5).all(|v| cls.is_connected(1 << v)));
    }

    #[test]
    fn over_budget() {
        let g = SimpleGraph::cycle(25).unwrap();
        assert_eq!(classify_subsets(&g).unwrap_err(), ReliabilityError::OverBudget(25));
    }

    #[test]
    fn count_examples() {
        assert_eq!(profile(&c5()).counts(), &[5, 5, 5, 5, 1]);
        assert_eq!(profile(&k(3)).counts(), &[3, 3, 1]);
        assert_eq!(profile(&p(3)).counts(), &[3, 2, 1]);
    }

    #[test]
    fn golden_small_graph_values() {
        let c = c5();
        let cls = classify_subsets(&c).unwrap();
        let base = count_connected(&cls);
        assert_eq!(format!("{:.5}", base.evaluate(0.9).unwrap()), "0.95949");
        let y = recount_for_insertion(&c, &cls, EdgeInsertion::new(2, 4)).unwrap();
        assert_eq!(y.counts(), &[5, 6, 7, 5, 1]);
        assert_eq!(format!("{:.5}", y.evaluate(0.9).unwrap()), "0.97488");
    }

    #[test]
    fn reinserting_missing_edge_completes() {
        for n in 3..8 {
            let g = SimpleGraph::from_edges(n, k(n).edges().filter(|&e| e != (0, n - 1))).unwrap();
            let cls = classify_subsets(&g).unwrap();
            let y = recount_for_insertion(&g, &cls, EdgeInsertion::new(0, n - 1)).unwrap();
            for r in 1..=n {
                assert_eq!(y.s(r), binomial(n, r));
            }
        }
    }

    #[test]
    fn recount_errors() {
        let cls = classify_subsets(&c5()).unwrap();
        assert_eq!(
            recount_for_insertion(&p(4), &cls, EdgeInsertion::new(0, 2)),
            Err(ReliabilityError::StaleClassification { classified: 5, graph: 4 })
        );
        assert!(matches!(
            recount_for_insertion(&c5(), &cls, EdgeInsertion::new(0, 1)),
            Err(ReliabilityError::Graph(GraphError::EdgePresent(0, 1)))
        ));
    }

    #[test]
    fn polynomial_endpoints_and_range() {
        let prof = profile(&petersen());
        assert!((prof.evaluate(1.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(prof.evaluate(0.0).unwrap(), 0.0);
        assert_eq!(prof.evaluate(1.5), Err(ReliabilityError::Probability(1.5)));
        assert!(prof.evaluate(-0.1).is_err());
    }

    #[test]
    fn polynomial_matches_subset_expansion() {
        for g in [c5(), petersen(), star(5), p(7)] {
            let prof = profile(&g);
            for k in 0..=10 {
                let p = k as f64 / 10.0;
                assert!((prof.evaluate(p).unwrap() - reliability_by_subsets(&g, p)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn score_examples() {
        assert_eq!(profile(&k(3)).score(), ratio(3, 4));
        assert_eq!(profile(&c5()).score(), ratio(2, 3));
        for n in 1..10 {
            assert_eq!(profile(&k(n)).score(), ratio(n as i64, n as i64 + 1));
        }
    }

    #[test]
    fn score_at_enumeration_limit() {
        // (n+1)! for n = 24 exceeds u64.
        let counts: Vec<u64> = (1..=24).map(|r| binomial(24, r)).collect();
        assert_eq!(ReliabilityProfile::new(counts).unwrap().score(), ratio(24, 25));
    }

    #[test]
    fn profile_validation() {
        assert!(ReliabilityProfile::new(vec![]).is_err());
        assert!(ReliabilityProfile::new(vec![3, 4, 1]).is_err());
        let p3 = profile(&p(3));
        assert_eq!(p3.cut_sets(2), 1);
        assert!(p3.is_connected());
    }

    #[test]
    fn csv_rows() {
        let a = profile(&c5());
        let b = profile(&k(3));
        let csv = profiles_csv([("c5", &a), ("k3", &b)]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "graph,n,S_1,S_2,S_3,S_4,S_5,F");
        assert_eq!(lines[1], "c5,5,5,5,5,5,1,2/3");
        assert_eq!(lines[2], "k3,3,3,3,1,,,3/4");
    }
}
