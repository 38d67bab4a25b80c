//! Wall-clock cost of running each heuristic.

use std::collections::BTreeMap;
use std::hint::black_box;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{random_seed, EvaluationError};
use crate::graph::SimpleGraph;
use crate::heuristics::{apply, HeuristicId};

/// Milliseconds for one heuristic over all graphs of one order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingRow {
    pub heuristic: HeuristicId,
    pub order: usize,
    pub graphs: usize,
    pub min_ms: f64,
    pub max_ms: f64,
    pub median_ms: f64,
    pub mean_ms: f64,
    pub sd_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingTable {
    pub repetitions: usize,
    /// Grouped by order, then in the requested heuristic order.
    pub rows: Vec<TimingRow>,
}

impl TimingTable {
    pub fn row(&self, heuristic: HeuristicId, order: usize) -> Option<&TimingRow> {
        self.rows.iter().find(|r| r.heuristic == heuristic && r.order == order)
    }
}

fn median(sorted: &[f64]) -> f64 {
    let k = sorted.len();
    if k % 2 == 1 {
        sorted[k / 2]
    } else {
        (sorted[k / 2 - 1] + sorted[k / 2]) / 2.0
    }
}

/// Times each heuristic on each graph, keeping the best of `repetitions`
/// runs. Only the heuristic itself is timed; nothing is scored.
pub fn timing_benchmark(
    graphs: &[SimpleGraph],
    heuristics: &[HeuristicId],
    repetitions: usize,
    seed: u64,
) -> Result<TimingTable, EvaluationError> {
    if repetitions == 0 {
        return Err(EvaluationError::NoRepetitions);
    }
    if graphs.is_empty() || heuristics.is_empty() {
        return Err(EvaluationError::Empty);
    }
    let mut by_order: BTreeMap<usize, Vec<(usize, &SimpleGraph)>> = BTreeMap::new();
    for (k, g) in graphs.iter().enumerate() {
        by_order.entry(g.n()).or_default().push((k, g));
    }
    let mut rows = Vec::new();
    for (&order, members) in &by_order {
        for &h in heuristics {
            let mut times = Vec::with_capacity(members.len());
            for &(k, g) in members {
                let mut best = f64::INFINITY;
                for _ in 0..repetitions {
                    let start = Instant::now();
                    black_box(apply(h, black_box(g), random_seed(seed, k))?);
                    best = best.min(start.elapsed().as_secs_f64() * 1e3);
                }
                times.push(best);
            }
            times.sort_by(f64::total_cmp);
            let count = times.len() as f64;
            let mean = times.iter().sum::<f64>() / count;
            let var = times.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / count;
            rows.push(TimingRow {
                heuristic: h,
                order,
                graphs: times.len(),
                min_ms: times[0],
                max_ms: times[times.len() - 1],
                median_ms: median(&times),
                mean_ms: mean,
                sd_ms: var.sqrt(),
            });
        }
    }
    Ok(TimingTable { repetitions, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn table_shape() {
        let graphs = vec![c5(), petersen(), p(5)];
        let ids = [HeuristicId::Gamma, HeuristicId::Phi];
        let t = timing_benchmark(&graphs, &ids, 2, 0).unwrap();
        assert_eq!(t.rows.len(), 4);
        let r = t.row(HeuristicId::Gamma, 5).unwrap();
        assert_eq!(r.graphs, 2);
        assert!(r.min_ms <= r.median_ms && r.median_ms <= r.max_ms);
        assert!(r.sd_ms >= 0.0);
        assert_eq!(t.rows[0].order, 5);
    }

    #[test]
    fn errors() {
        assert!(matches!(timing_benchmark(&[c5()], &[HeuristicId::Gamma], 0, 0), Err(EvaluationError::NoRepetitions)));
        assert!(matches!(timing_benchmark(&[], &[HeuristicId::Gamma], 1, 0), Err(EvaluationError::Empty)));
        assert!(timing_benchmark(&[c5()], &[HeuristicId::BPostHoc], 1, 0).is_err());
    }

    #[test]
    fn median_of_even_count() {
        assert_eq!(median(&[1.0, 2.0, 3.0, 10.0]), 2.5);
        assert_eq!(median(&[4.0]), 4.0);
    }
}
