//! Canonical labeling by individualization-refinement.
//!
//! The search tree is the usual one: refine an ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell,
//! recurse. Leaves are discrete partitions, i.e. vertex orderings, and the
//! key is the lexicographically smallest upper-triangle adjacency encoding
//! over all leaves. Vertices of the target cell that are twins of an earlier
//! vertex in that cell are skipped, since swapping twins is an automorphism
//! that fixes the partition.

use super::paths::bfs_levels;
use super::SimpleGraph;

type Partition = Vec<Vec<usize>>;

fn refine(g: &SimpleGraph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let signature = |v: usize| -> Vec<u32> { masks.iter().map(|&m| (g.row(v) & m).count_ones()).collect() };
        let mut next: Partition = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let before = next.len();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|(_, v)| *v).collect());
                    start = k;
                }
            }
            split |= next.len() - before > 1;
        }
        if !split {
            return next;
        }
        cells = next;
    }
}

fn encode(g: &SimpleGraph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut bytes = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(8));
    bytes.push(n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for a in 0..n {
        for b in a + 1..n {
            acc = acc << 1 | g.has_edge(order[a], order[b]) as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    bytes
}

fn are_twins(g: &SimpleGraph, u: usize, w: usize) -> bool {
    g.row(u) & !(1 << w) == g.row(w) & !(1 << u)
}

fn search(g: &SimpleGraph, cells: Partition, best: &mut Option<Vec<u8>>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = encode(g, &order);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let cell = &cells[target];
    for (k, &v) in cell.iter().enumerate() {
        if cell[..k].iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cell.iter().copied().filter(|&u| u != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        search(g, refine(g, child), best);
    }
}

/// Byte string that is equal for two graphs exactly when they are isomorphic.
pub fn canonical_key(g: &SimpleGraph) -> Vec<u8> {
    let mut best = None;
    search(g, refine(g, vec![(0..g.n()).collect()]), &mut best);
    best.expect("search visits at least one leaf")
}

/// Cheap isomorphism invariant used to bucket graphs before comparing keys.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphInvariant {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub distances: Vec<u32>,
}

pub fn invariant_hash(g: &SimpleGraph) -> GraphInvariant {
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    let mut distances: Vec<u32> = (0..g.n())
        .flat_map(|s| {
            let d = bfs_levels(g, s);
            d.into_iter().skip(s + 1).collect::<Vec<_>>()
        })
        .collect();
    distances.sort_unstable();
    GraphInvariant { n: g.n(), m: g.m(), degrees, distances }
}
