//! One-sided Wilcoxon signed-rank test.

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use super::EvaluationError;

/// Below this many nonzero differences `Auto` switches to the exact null distribution.
pub const NORMAL_MIN_PAIRS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WilcoxonMode {
    Exact,
    Normal,
    #[default]
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WilcoxonResult {
    /// Nonzero differences that entered the ranking.
    pub n: usize,
    /// Sum of ranks of the positive differences.
    pub w_plus: f64,
    /// Standardized statistic (continuity-corrected).
    pub t_star: f64,
    /// One-sided p-value for "median difference > 0".
    pub p: f64,
    /// Effect size `|T*| / sqrt(n)`.
    pub r: f64,
    pub exact: bool,
}

/// Tests `x - y` pairwise.
pub fn wilcoxon_one_sided(x: &[f64], y: &[f64], mode: WilcoxonMode) -> Result<WilcoxonResult, EvaluationError> {
    if x.len() != y.len() {
        return Err(EvaluationError::Incomplete(format!("paired samples of lengths {} and {}", x.len(), y.len())));
    }
    let d: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    Ok(signed_rank_test(&d, mode))
}

/// Average ranks (1-based) of `values`, plus the tie groups' sizes.
fn average_ranks(values: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut ties = Vec::new();
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let avg = (start + end + 1) as f64 / 2.0;
        for &k in &order[start..end] {
            ranks[k] = avg;
        }
        if end - start > 1 {
            ties.push(end - start);
        }
        start = end;
    }
    (ranks, ties)
}

/// `P(W+ >= observed)` under random signs, by dynamic programming over
/// doubled ranks (average ranks are multiples of 1/2).
fn exact_upper_tail(ranks: &[f64], w_plus: f64) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|r| (2.0 * r).round() as usize).collect();
    let total: usize = doubled.iter().sum();
    let mut dist = vec![0.0f64; total + 1];
    dist[0] = 1.0;
    let mut reach = 0;
    for &r in &doubled {
        for s in (0..=reach).rev() {
            let here = dist[s] * 0.5;
            dist[s] = here;
            dist[s + r] += here;
        }
        reach += r;
    }
    let threshold = (2.0 * w_plus).round() as usize;
    dist[threshold..].iter().sum::<f64>().min(1.0)
}

/// Signed-rank test on paired differences; zeros are dropped.
pub fn signed_rank_test(differences: &[f64], mode: WilcoxonMode) -> WilcoxonResult {
    let nonzero: Vec<f64> = differences.iter().copied().filter(|&d| d != 0.0).collect();
    let n = nonzero.len();
    if n == 0 {
        return WilcoxonResult { n, w_plus: 0.0, t_star: 0.0, p: 1.0, r: 0.0, exact: mode != WilcoxonMode::Normal };
    }
    let magnitudes: Vec<f64> = nonzero.iter().map(|d| d.abs()).collect();
    let (ranks, ties) = average_ranks(&magnitudes);
    let w_plus: f64 = ranks.iter().zip(&nonzero).filter(|(_, &d)| d > 0.0).map(|(r, _)| r).sum();

    let nf = n as f64;
    let mean = nf * (nf + 1.0) / 4.0;
    let tie_term: f64 = ties.iter().map(|&t| (t * t * t - t) as f64).sum::<f64>() / 48.0;
    let var = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0 - tie_term;
    let t_star = if var > 0.0 { (w_plus - mean - 0.5) / var.sqrt() } else { 0.0 };

    let exact = match mode {
        WilcoxonMode::Exact => true,
        WilcoxonMode::Normal => false,
        WilcoxonMode::Auto => n < NORMAL_MIN_PAIRS,
    };
    let p = if exact {
        exact_upper_tail(&ranks, w_plus)
    } else {
        let std_normal = Normal::standard();
        1.0 - std_normal.cdf(t_star)
    };
    WilcoxonResult { n, w_plus, t_star, p, r: t_star.abs() / nf.sqrt(), exact }
}

/// Bonferroni adjustment for `comparisons` simultaneous tests.
pub fn bonferroni(p: f64, comparisons: usize) -> f64 {
    (p * comparisons as f64).min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Full enumeration of the 2^n sign assignments.
    fn brute_force_p(d: &[f64]) -> f64 {
        let nz: Vec<f64> = d.iter().copied().filter(|&x| x != 0.0).collect();
        let (ranks, _) = average_ranks(&nz.iter().map(|x| x.abs()).collect::<Vec<_>>());
        let observed: f64 = ranks.iter().zip(&nz).filter(|(_, &x)| x > 0.0).map(|(r, _)| r).sum();
        let n = nz.len();
        let hits = (0u32..1 << n)
            .filter(|signs| {
                let w: f64 = (0..n).filter(|k| signs >> k & 1 == 1).map(|k| ranks[k]).sum();
                w >= observed - 1e-9
            })
            .count();
        hits as f64 / (1u64 << n) as f64
    }

    #[test]
    fn hand_case_one_eighth() {
        let r = signed_rank_test(&[1.0, 2.0, 3.0], WilcoxonMode::Exact);
        assert_eq!(r.n, 3);
        assert_eq!(r.w_plus, 6.0);
        assert_eq!(r.p, 0.125);
    }

    #[test]
    fn no_evidence_cases() {
        let r = signed_rank_test(&[0.0; 8], WilcoxonMode::Auto);
        assert_eq!((r.n, r.p, r.r), (0, 1.0, 0.0));
        let x = [0.3, 0.1, 0.7, 0.2, 0.9, 0.4, 0.5, 0.6, 0.8, 0.05, 0.33];
        for mode in [WilcoxonMode::Exact, WilcoxonMode::Normal, WilcoxonMode::Auto] {
            assert_eq!(wilcoxon_one_sided(&x, &x, mode).unwrap().p, 1.0);
        }
        assert!(wilcoxon_one_sided(&x, &x[1..], WilcoxonMode::Auto).is_err());
    }

    #[test]
    fn ranks_average_ties() {
        let (r, ties) = average_ranks(&[2.0, 1.0, 2.0, 3.0]);
        assert_eq!(r, vec![2.5, 1.0, 2.5, 4.0]);
        assert_eq!(ties, vec![2]);
    }

    #[test]
    fn exact_matches_enumeration_with_ties() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.random_range(1..=12);
            let d: Vec<f64> = (0..n).map(|_| rng.random_range(-3i32..=3) as f64 / 2.0).collect();
            let r = signed_rank_test(&d, WilcoxonMode::Exact);
            assert!((r.p - brute_force_p(&d)).abs() < 1e-12, "{d:?}");
        }
    }

    #[test]
    fn normal_tracks_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let n = rng.random_range(10..=12);
            let shift = rng.random_range(-0.5..0.5);
            let d: Vec<f64> = (0..n).map(|_| rng.random::<f64>() - 0.5 + shift).collect();
            let e = signed_rank_test(&d, WilcoxonMode::Exact).p;
            let a = signed_rank_test(&d, WilcoxonMode::Normal).p;
            assert!((e - a).abs() <= 0.02, "{e} vs {a}");
        }
    }

    #[test]
    fn auto_switch_and_bonferroni() {
        assert!(signed_rank_test(&[1.0; 9], WilcoxonMode::Auto).exact);
        assert!(!signed_rank_test(&[1.0; 10], WilcoxonMode::Auto).exact);
        assert_eq!(bonferroni(0.02, 3), 0.06);
        assert_eq!(bonferroni(0.5, 3), 1.0);
    }

    #[test]
    fn one_sided_direction() {
        let up: Vec<f64> = (1..=30).map(|k| k as f64 / 10.0).collect();
        let down: Vec<f64> = up.iter().map(|x| -x).collect();
        let hi = signed_rank_test(&up, WilcoxonMode::Normal);
        assert!(hi.p < 1e-4 && hi.t_star > 0.0);
        assert!((hi.r - hi.t_star / 30f64.sqrt()).abs() < 1e-12);
        assert!(signed_rank_test(&down, WilcoxonMode::Normal).p > 0.999);
    }
}
