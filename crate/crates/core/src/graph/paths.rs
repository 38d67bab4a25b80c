use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{GraphError, SimpleGraph};

/// Geodesic distance; `Infinite` when no path exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

/// BFS layers from `source`: `dist[v]` or `u32::MAX` when unreachable.
pub(crate) fn bfs_levels(g: &SimpleGraph, source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.n()];
    dist[source] = 0;
    let mut seen = 1u64 << source;
    let mut frontier = seen;
    let mut level = 0;
    while frontier != 0 {
        level += 1;
        let mut next = 0u64;
        for v in super::BitIter(frontier) {
            next |= g.row(v);
        }
        next &= !seen;
        for v in super::BitIter(next) {
            dist[v] = level;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

/// Distances from `source` to every vertex, `u32::MAX` marking unreachable ones.
pub fn bfs_distances(g: &SimpleGraph, source: usize) -> Vec<u32> {
    bfs_levels(g, source)
}

pub fn distance(g: &SimpleGraph, i: usize, j: usize) -> Result<Distance, GraphError> {
    for index in [i, j] {
        if index >= g.n() {
            return Err(GraphError::IndexOutOfRange { index, n: g.n() });
        }
    }
    Ok(match bfs_levels(g, i)[j] {
        u32::MAX => Distance::Infinite,
        d => Distance::Finite(d),
    })
}

pub fn diameter(g: &SimpleGraph) -> Result<u32, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok((0..g.n())
        .map(|s| bfs_levels(g, s).into_iter().max().unwrap_or(0))
        .max()
        .unwrap_or(0))
}

/// How shortest-path counts are turned into a centrality value.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum BetweennessMode {
    /// Paths through `v` over all shortest paths of all pairs, as one global ratio.
    #[default]
    GlobalRatio,
    /// Classical form: sum over pairs of `sigma_st(v) / sigma_st`.
    PairNormalized,
}

/// All-pairs distances and shortest-path counts.
struct PathCounts {
    dist: Vec<Vec<u32>>,
    sigma: Vec<Vec<u128>>,
}

fn path_counts(g: &SimpleGraph) -> PathCounts {
    let n = g.n();
    let mut dist = Vec::with_capacity(n);
    let mut sigma = Vec::with_capacity(n);
    for s in 0..n {
        let d = bfs_levels(g, s);
        let mut order: Vec<usize> = (0..n).filter(|&v| d[v] != u32::MAX).collect();
        order.sort_by_key(|&v| d[v]);
        let mut count = vec![0u128; n];
        count[s] = 1;
        for &v in order.iter().skip(1) {
            count[v] = super::BitIter(g.row(v))
                .filter(|&u| d[u] != u32::MAX && d[u] + 1 == d[v])
                .map(|u| count[u])
                .sum();
        }
        dist.push(d);
        sigma.push(count);
    }
    PathCounts { dist, sigma }
}

/// Betweenness of every vertex under `mode`.
pub fn betweenness_all(g: &SimpleGraph, mode: BetweennessMode) -> Result<Vec<BigRational>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.n();
    let pc = path_counts(g);
    let mut total = 0u128;
    for s in 0..n {
        for t in s + 1..n {
            total += pc.sigma[s][t];
        }
    }
    let mut out = Vec::with_capacity(n);
    for v in 0..n {
        let mut through = 0u128;
        let mut normalized = BigRational::zero();
        for s in 0..n {
            if s == v {
                continue;
            }
            for t in s + 1..n {
                if t == v || pc.dist[s][v] + pc.dist[v][t] != pc.dist[s][t] {
                    continue;
                }
                let via = pc.sigma[s][v] * pc.sigma[v][t];
                match mode {
                    BetweennessMode::GlobalRatio => through += via,
                    BetweennessMode::PairNormalized => {
                        normalized += BigRational::new(BigInt::from(via), BigInt::from(pc.sigma[s][t]))
                    }
                }
            }
        }
        out.push(match mode {
            BetweennessMode::GlobalRatio if total == 0 => BigRational::zero(),
            BetweennessMode::GlobalRatio => BigRational::new(BigInt::from(through), BigInt::from(total)),
            BetweennessMode::PairNormalized => normalized,
        });
    }
    Ok(out)
}

/// Betweenness of `v` under the global-ratio reading.
pub fn betweenness(g: &SimpleGraph, v: usize) -> Result<BigRational, GraphError> {
    if v >= g.n() {
        return Err(GraphError::IndexOutOfRange { index: v, n: g.n() });
    }
    Ok(betweenness_all(g, BetweennessMode::GlobalRatio)?.swap_remove(v))
}
