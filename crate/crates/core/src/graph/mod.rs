//! Simple undirected graphs on at most 64 vertices.
//!
//! Every adjacency row is a single `u64`, so a vertex subset is one machine
//! word and induced-subgraph connectivity is a handful of bit operations.

mod canonical;
mod connectivity;
pub mod io;
mod paths;

pub use canonical::{canonical_key, invariant_hash, GraphInvariant};
pub use connectivity::vertex_connectivity;
pub use paths::{bfs_distances, betweenness, betweenness_all, diameter, distance, BetweennessMode, Distance};

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, bit `i` standing for vertex `i`.
pub type VertexMask = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("vertex index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) already present")]
    EdgePresent(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least {0} vertices")]
    TooSmall(usize),
    #[error("empty vertex mask")]
    EmptyMask,
}

/// Undirected simple graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    rows: Vec<u64>,
    m: usize,
}

/// An unordered vertex pair `{i, j}` stored with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub struct EdgeInsertion {
    pub i: usize,
    pub j: usize,
}

impl EdgeInsertion {
    /// Normalizes the pair so that `i < j`. Panics on `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "edge endpoints must differ");
        if a < b {
            EdgeInsertion { i: a, j: b }
        } else {
            EdgeInsertion { i: b, j: a }
        }
    }

    pub fn mask(&self) -> VertexMask {
        (1u64 << self.i) | (1u64 << self.j)
    }
}

impl fmt::Display for EdgeInsertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> VertexMask {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl SimpleGraph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(SimpleGraph { n, rows: vec![0; n], m: 0 })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (a, b) in edges {
            for index in [a, b] {
                if index >= n {
                    return Err(GraphError::IndexOutOfRange { index, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if g.has_edge(a, b) {
                let e = EdgeInsertion::new(a, b);
                return Err(GraphError::DuplicateEdge(e.i, e.j));
            }
            g.set_edge(a, b);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooSmall(3));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    fn set_edge(&mut self, a: usize, b: usize) {
        self.rows[a] |= 1 << b;
        self.rows[b] |= 1 << a;
        self.m += 1;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn row(&self, v: usize) -> VertexMask {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn full_mask(&self) -> VertexMask {
        full_mask(self.n)
    }

    /// Edges as `(i, j)` with `i < j`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            let upper = self.rows[i] & !full_mask(i + 1);
            BitIter(upper).map(move |j| (i, j))
        })
    }

    /// Non-adjacent pairs in lexicographic order; these are the candidate insertions.
    pub fn non_edges(&self) -> impl Iterator<Item = EdgeInsertion> + '_ {
        (0..self.n).flat_map(move |i| {
            let free = !self.rows[i] & self.full_mask() & !full_mask(i + 1);
            BitIter(free).map(move |j| EdgeInsertion { i, j })
        })
    }

    pub fn non_edge_count(&self) -> usize {
        self.n * (self.n - 1) / 2 - self.m
    }

    /// Returns the supergraph with `e` added; `self` is left untouched.
    pub fn insert_edge(&self, e: EdgeInsertion) -> Result<SimpleGraph, GraphError> {
        for index in [e.i, e.j] {
            if index >= self.n {
                return Err(GraphError::IndexOutOfRange { index, n: self.n });
            }
        }
        if e.i == e.j {
            return Err(GraphError::SelfLoop(e.i));
        }
        if self.has_edge(e.i, e.j) {
            return Err(GraphError::EdgePresent(e.i, e.j));
        }
        let mut g = self.clone();
        g.set_edge(e.i, e.j);
        Ok(g)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (a, b) in self.edges() {
            rows[perm[a]] |= 1 << perm[b];
            rows[perm[b]] |= 1 << perm[a];
        }
        SimpleGraph { n: self.n, rows, m: self.m }
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, self.full_mask()) == self.full_mask()
    }

    /// Whether the subgraph induced by `mask` is connected.
    pub fn subset_connected(&self, mask: VertexMask) -> Result<bool, GraphError> {
        if mask == 0 {
            return Err(GraphError::EmptyMask);
        }
        if mask & !self.full_mask() != 0 {
            let index = 63 - (mask & !self.full_mask()).leading_zeros() as usize;
            return Err(GraphError::IndexOutOfRange { index, n: self.n });
        }
        Ok(self.induced_connected(mask))
    }

    /// Unchecked variant of [`subset_connected`](Self::subset_connected) for hot loops.
    #[inline]
    pub fn induced_connected(&self, mask: VertexMask) -> bool {
        let start = mask.trailing_zeros() as usize;
        self.reach_within(start, mask) == mask
    }

    /// Vertices reachable from `start` using only vertices in `mask`.
    #[inline]
    pub fn reach_within(&self, start: usize, mask: VertexMask) -> VertexMask {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            next &= mask & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn build_examples() {
        let k3 = SimpleGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.m(), 3);
        let c = c5();
        assert_eq!(c.m(), 5);
        assert!(c.degrees().iter().all(|&d| d == 2));
        assert_eq!(SimpleGraph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
    }

    #[test]
    fn build_errors_are_distinct() {
        assert_eq!(
            SimpleGraph::from_edges(3, [(0, 3)]),
            Err(GraphError::IndexOutOfRange { index: 3, n: 3 })
        );
        assert_eq!(
            SimpleGraph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(SimpleGraph::empty(0), Err(GraphError::VertexCount(0)));
        assert_eq!(SimpleGraph::empty(65), Err(GraphError::VertexCount(65)));
        assert!(SimpleGraph::empty(64).is_ok());
    }

    #[test]
    fn insert_edge_examples() {
        let c = c5();
        let y = c.insert_edge(EdgeInsertion::new(2, 4)).unwrap();
        assert_eq!(y.m(), 6);
        assert_eq!(c.m(), 5);
        let k3 = k(3);
        assert!(k3.non_edges().next().is_none());
        assert_eq!(k3.insert_edge(EdgeInsertion::new(0, 1)), Err(GraphError::EdgePresent(0, 1)));
        assert_eq!(p(3).insert_edge(EdgeInsertion::new(0, 2)).unwrap(), SimpleGraph::cycle(3).unwrap());
    }

    #[test]
    fn connectivity_examples() {
        assert!(c5().is_connected());
        assert!(!SimpleGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(SimpleGraph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn subset_connected_examples() {
        let c = c5();
        assert!(c.subset_connected(0b11111).unwrap());
        assert!(!c.subset_connected(0b00101).unwrap());
        assert!(c.subset_connected(0b00111).unwrap());
        assert!(c.subset_connected(0b10011).unwrap());
        assert_eq!(c.subset_connected(0), Err(GraphError::EmptyMask));
    }

    #[test]
    fn full_word_graph() {
        let g = SimpleGraph::cycle(64).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.non_edge_count(), 64 * 63 / 2 - 64);
        assert_eq!(g.non_edges().count(), g.non_edge_count());
    }

    #[test]
    fn non_edges_are_lexicographic() {
        let got: Vec<_> = c5().non_edges().map(|e| (e.i, e.j)).collect();
        assert_eq!(got, vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
    }
}
