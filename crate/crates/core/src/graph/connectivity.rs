use std::collections::VecDeque;

use super::{GraphError, SimpleGraph};

const UNBOUNDED: i32 = i32::MAX / 4;

/// Maximum number of internally vertex-disjoint `s`-`t` paths, for non-adjacent `s`, `t`.
///
/// Each vertex `v` becomes `v_in -> v_out` with unit capacity, every edge
/// `{u, v}` becomes `u_out -> v_in` and `v_out -> u_in` with unbounded
/// capacity; the answer is the max flow from `s_out` to `t_in`.
fn local_connectivity(g: &SimpleGraph, s: usize, t: usize) -> usize {
    let n = g.n();
    let size = 2 * n;
    let inn = |v: usize| 2 * v;
    let out = |v: usize| 2 * v + 1;
    let mut cap = vec![0i32; size * size];
    for v in 0..n {
        cap[inn(v) * size + out(v)] = if v == s || v == t { UNBOUNDED } else { 1 };
    }
    for (a, b) in g.edges() {
        cap[out(a) * size + inn(b)] = UNBOUNDED;
        cap[out(b) * size + inn(a)] = UNBOUNDED;
    }
    let (source, sink) = (out(s), inn(t));
    let mut flow = 0;
    let mut parent = vec![usize::MAX; size];
    loop {
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for v in 0..size {
                if parent[v] == usize::MAX && cap[u * size + v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return flow;
        }
        // Every augmenting path crosses at least one unit vertex arc.
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u * size + v] -= 1;
            cap[v * size + u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// Vertex connectivity: `n - 1` for complete graphs, otherwise the minimum
/// local connectivity over non-adjacent pairs.
pub fn vertex_connectivity(g: &SimpleGraph) -> Result<usize, GraphError> {
    if g.n() < 2 {
        return Err(GraphError::TooSmall(2));
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(g
        .non_edges()
        .map(|e| local_connectivity(g, e.i, e.j))
        .min()
        .unwrap_or(g.n() - 1))
}
