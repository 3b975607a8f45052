use std::collections::VecDeque;

use rayon::prelude::*;

use super::Graph;
use crate::error::{Error, Result};
use crate::matrix::SymMatrix;
use crate::oracle::max_dense_order;

const UNREACHED: u32 = u32::MAX;

/// True iff one BFS from vertex 0 reaches every vertex. The empty graph is
/// not connected.
pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() > 0 && bfs_levels(g, 0).iter().all(|&d| d != UNREACHED)
}

/// True iff some component fails to 2-colour.
pub fn has_odd_cycle(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut colour = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if colour[root] != u8::MAX {
            continue;
        }
        colour[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if colour[u] == u8::MAX {
                    colour[u] = 1 - colour[v];
                    queue.push_back(u);
                } else if colour[u] == colour[v] {
                    return true;
                }
            }
        }
    }
    false
}

/// Connectivity of `g ⊗ h` predicted from the factors: for connected factors
/// the product is connected iff at least one factor has an odd cycle.
pub fn kronecker_connectivity_predicted(g: &Graph, h: &Graph) -> Result<bool> {
    if !is_connected(g) || !is_connected(h) {
        return Err(Error::DisconnectedGraph);
    }
    Ok(has_odd_cycle(g) || has_odd_cycle(h))
}

/// Dense all-pairs shortest-path lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    /// Largest entry (the diameter); 0 for orders 0 and 1.
    pub fn max(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn to_sym_matrix(&self) -> SymMatrix {
        SymMatrix::from_row_major(self.order, self.entries.iter().map(|&d| d as f64).collect())
    }
}

/// BFS from every vertex (sources in parallel, one row each).
///
/// Fails with `DisconnectedGraph` if any pair is unreachable and with
/// `OrderCap` above the dense-matrix limit.
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let cap = max_dense_order();
    if n > cap {
        return Err(Error::OrderCap { order: n, cap });
    }
    let mut entries = vec![UNREACHED; n * n];
    let complete = entries
        .par_chunks_mut(n)
        .enumerate()
        .map(|(s, row)| bfs_into(g, s, row))
        .all(|reached_all| reached_all);
    if !complete {
        return Err(Error::DisconnectedGraph);
    }
    Ok(DistanceMatrix { order: n, entries })
}

/// Largest eccentricity, computed by BFS without materializing the matrix.
pub fn diameter(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let ecc: Option<u32> = (0..n)
        .into_par_iter()
        .map(|s| {
            let levels = bfs_levels(g, s);
            levels
                .iter()
                .try_fold(0, |m, &d| (d != UNREACHED).then(|| m.max(d)))
        })
        .reduce(|| Some(0), |a, b| Some(a?.max(b?)));
    ecc.map(|d| d as usize).ok_or(Error::DisconnectedGraph)
}

fn bfs_levels(g: &Graph, source: usize) -> Vec<u32> {
    let mut levels = vec![UNREACHED; g.vertex_count()];
    bfs_into(g, source, &mut levels);
    levels
}

/// Fills `levels` (pre-set to `UNREACHED`) and reports whether every vertex
/// was reached. Stops as soon as the last vertex is labelled.
fn bfs_into(g: &Graph, source: usize, levels: &mut [u32]) -> bool {
    let n = levels.len();
    let mut queue = Vec::with_capacity(n);
    levels[source] = 0;
    queue.push(source);
    let mut head = 0;
    while head < queue.len() && queue.len() < n {
        let v = queue[head];
        head += 1;
        let next = levels[v] + 1;
        for &u in g.neighbors(v) {
            if levels[u] == UNREACHED {
                levels[u] = next;
                queue.push(u);
            }
        }
    }
    queue.len() == n
}

/// How many edges lie on a triangle. Decides the diagonal blocks of the
/// distance matrix of `K_n ⊗ G`: two copies of a vertex pair joined by an
/// edge are at distance 2 when the edge lies on a triangle, 3 otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleProfile {
    pub edge_count: usize,
    pub edges_on_triangles: usize,
}

impl TriangleProfile {
    pub fn every_edge(&self) -> bool {
        self.edges_on_triangles == self.edge_count
    }

    pub fn no_edge(&self) -> bool {
        self.edges_on_triangles == 0
    }
}

pub fn triangle_profile(g: &Graph) -> TriangleProfile {
    let edges_on_triangles = g
        .edges()
        .filter(|&(u, v)| sorted_intersect(g.neighbors(u), g.neighbors(v)))
        .count();
    TriangleProfile {
        edge_count: g.edge_count(),
        edges_on_triangles,
    }
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}
