//! Simple undirected graphs, the families studied here, Kronecker products
//! and exact metric data.

mod family;
mod metric;
mod walks;

pub use family::{build_family, kronecker_product, FamilySpec, MAX_PRODUCT_ORDER};
pub use metric::{
    diameter, distance_matrix, has_odd_cycle, is_connected, kronecker_connectivity_predicted,
    triangle_profile, DistanceMatrix, TriangleProfile,
};
pub use walks::{
    complete_multipartite_parts, default_walk_bound, gamma, predicted_kron_diameter, walk_gamma,
};

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;

/// Simple undirected graph in compressed sorted-adjacency form.
///
/// Neighbour lists are strictly increasing, symmetric and loop-free.
/// Labels, when present, are one distinct string per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds from per-vertex neighbour lists, validating every invariant.
    pub fn from_adjacency(
        adjacency: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Graph> {
        let n = adjacency.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(adjacency.iter().map(Vec::len).sum());
        offsets.push(0);
        for (v, list) in adjacency.iter().enumerate() {
            for (i, &u) in list.iter().enumerate() {
                if u >= n {
                    return Err(Error::ParameterDomain(format!(
                        "neighbour {u} of vertex {v} out of range"
                    )));
                }
                if u == v {
                    return Err(Error::ParameterDomain(format!("self-loop at vertex {v}")));
                }
                if i > 0 && list[i - 1] >= u {
                    return Err(Error::ParameterDomain(format!(
                        "neighbour list of vertex {v} not strictly sorted"
                    )));
                }
            }
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        let g = Graph {
            offsets,
            targets,
            labels: None,
        };
        for v in 0..n {
            for &u in g.neighbors(v) {
                if !g.has_edge(u, v) {
                    return Err(Error::ParameterDomain(format!(
                        "edge {v}->{u} has no reverse"
                    )));
                }
            }
        }
        g.with_labels(labels)
    }

    /// Builds from an undirected edge list; duplicates are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::ParameterDomain(format!(
                    "edge ({u},{v}) out of range"
                )));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph::from_adjacency(adjacency, None)
    }

    /// Trusted constructor for generators that emit sorted symmetric lists.
    pub(crate) fn from_sorted_unchecked(
        adjacency: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Graph {
        let mut offsets = Vec::with_capacity(adjacency.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for list in adjacency {
            debug_assert!(list.windows(2).all(|w| w[0] < w[1]));
            targets.extend(list);
            offsets.push(targets.len());
        }
        Graph {
            offsets,
            targets,
            labels,
        }
    }

    fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Graph> {
        if let Some(l) = &labels {
            if l.len() != self.vertex_count() {
                return Err(Error::ParameterDomain(format!(
                    "{} labels for {} vertices",
                    l.len(),
                    self.vertex_count()
                )));
            }
            let mut sorted: Vec<&String> = l.iter().collect();
            sorted.sort();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::ParameterDomain("labels are not distinct".into()));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Common degree if the graph is regular (`None` for the empty graph).
    pub fn regular_degree(&self) -> Option<usize> {
        if self.vertex_count() == 0 {
            return None;
        }
        let d = self.degree(0);
        (0..self.vertex_count())
            .all(|v| self.degree(v) == d)
            .then_some(d)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn adjacency_matrix(&self) -> SymMatrix {
        let n = self.vertex_count();
        let mut a = SymMatrix::zeros(n);
        for u in 0..n {
            for &v in self.neighbors(u) {
                a.set(u, v, 1.0);
            }
        }
        a
    }

    /// Edge-list text: `p <vertex_count> <edge_count>` followed by one
    /// `u v` line per edge, 0-indexed, `u < v`, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p {} {}", self.vertex_count(), self.edge_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Parses the format written by [`Graph::to_edge_list`]. Blank lines are
    /// ignored; the edge count in the header must match.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::EdgeList {
            line: 1,
            msg: "missing header".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (n, m) = match fields.as_slice() {
            ["p", n, m] => (parse_field(n, hline)?, parse_field(m, hline)?),
            _ => {
                return Err(Error::EdgeList {
                    line: hline,
                    msg: "expected `p <vertex_count> <edge_count>`".into(),
                })
            }
        };
        let mut edges = Vec::with_capacity(m);
        let mut prev: Option<(usize, usize)> = None;
        for (line, l) in lines {
            let f: Vec<&str> = l.split_whitespace().collect();
            let (u, v) = match f.as_slice() {
                [u, v] => (parse_field(u, line)?, parse_field(v, line)?),
                _ => {
                    return Err(Error::EdgeList {
                        line,
                        msg: "expected `u v`".into(),
                    })
                }
            };
            if u >= v || v >= n {
                return Err(Error::EdgeList {
                    line,
                    msg: format!("edge ({u},{v}) needs u < v < {n}"),
                });
            }
            if prev.is_some_and(|p| p >= (u, v)) {
                return Err(Error::EdgeList {
                    line,
                    msg: "edges not strictly sorted".into(),
                });
            }
            prev = Some((u, v));
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::EdgeList {
                line: hline,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }
}

fn parse_field(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::EdgeList {
        line,
        msg: format!("`{s}` is not a non-negative integer"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_broken_invariants() {
        assert!(Graph::from_adjacency(vec![vec![0]], None).is_err());
        assert!(Graph::from_adjacency(vec![vec![1], vec![]], None).is_err());
        assert!(Graph::from_adjacency(vec![vec![1, 1], vec![0]], None).is_err());
        assert!(
            Graph::from_adjacency(vec![vec![1], vec![0]], Some(vec!["a".into(), "a".into()]))
                .is_err()
        );
    }

    #[test]
    fn edge_list_format() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "p 4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            Graph::from_edge_list("p 3 1\n1 0\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(Graph::from_edge_list("p 3 2\n0 1\n").is_err());
        assert!(Graph::from_edge_list("p 3 2\n0 2\n0 1\n").is_err());
        assert!(Graph::from_edge_list("q 3 0\n").is_err());
        assert!(Graph::from_edge_list("").is_err());
    }

    proptest! {
        #[test]
        fn edge_list_roundtrip(n in 1usize..30, raw in prop::collection::vec((0usize..30, 0usize..30), 0..80)) {
            let mut edges: Vec<(usize, usize)> = raw
                .into_iter()
                .map(|(a, b)| (a % n, b % n))
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            let g = Graph::from_edges(n, &edges).unwrap();
            prop_assert_eq!(g.edge_count(), edges.len());
            let back = Graph::from_edge_list(&g.to_edge_list()).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
