//! Simple undirected graphs: construction, edge-list I/O, and the
//! structural queries the rest of the crate builds on.

use crate::bitset::VertexSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("empty graph: vertex count must be at least 1")]
    EmptyGraph,
    #[error("malformed header: expected \"n m\", got {0:?}")]
    MalformedHeader(String),
    #[error("malformed edge line: {0:?}")]
    MalformedEdge(String),
    #[error("vertex index {index} out of range for order {order}")]
    VertexOutOfRange { index: u64, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(u32, u32),
    #[error("declared {declared} edges but found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Immutable after construction; edges are kept sorted as `(min, max)`
/// pairs so two graphs with the same edge set compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct BaseGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl BaseGraph {
    /// Builds a graph from (unordered) edge pairs, validating simplicity.
    pub fn new(n: usize, edge_iter: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edge_iter {
            if a as usize >= n {
                return Err(GraphError::VertexOutOfRange { index: a as u64, order: n });
            }
            if b as usize >= n {
                return Err(GraphError::VertexOutOfRange { index: b as u64, order: n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(BaseGraph { n, edges, adj })
    }

    /// Parses the edge-list format: first non-comment line `n m`, then
    /// exactly `m` lines `u v`. Lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| GraphError::MalformedHeader(String::new()))?;
        let mut it = header.split_ascii_whitespace();
        let (n, m) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => {
                let n: usize = a.parse().map_err(|_| GraphError::MalformedHeader(header.into()))?;
                let m: usize = b.parse().map_err(|_| GraphError::MalformedHeader(header.into()))?;
                (n, m)
            }
            _ => return Err(GraphError::MalformedHeader(header.into())),
        };
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut edges = Vec::with_capacity(m);
        let mut found = 0usize;
        for line in lines {
            let mut it = line.split_ascii_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => {
                    let u: u64 = a.parse().map_err(|_| GraphError::MalformedEdge(line.into()))?;
                    let v: u64 = b.parse().map_err(|_| GraphError::MalformedEdge(line.into()))?;
                    (u, v)
                }
                _ => return Err(GraphError::MalformedEdge(line.into())),
            };
            for x in [u, v] {
                if x >= n as u64 {
                    return Err(GraphError::VertexOutOfRange { index: x, order: n });
                }
            }
            edges.push((u as u32, v as u32));
            found += 1;
        }
        if found != m {
            return Err(GraphError::EdgeCountMismatch { declared: m, found });
        }
        Self::new(n, edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Vertices of degree exactly one.
    pub fn leaves(&self) -> VertexSet {
        VertexSet::from_iter(self.n, self.vertices().filter(|&v| self.degree(v) == 1))
    }

    /// Support vertices (those adjacent to at least one leaf), together
    /// with the number of adjacent leaves per vertex.
    pub fn supports(&self) -> SupportInfo {
        let leaves = self.leaves();
        let mut eps = vec![0u32; self.n];
        for l in leaves.iter() {
            for &s in self.neighbors(l) {
                eps[s as usize] += 1;
            }
        }
        let set = VertexSet::from_iter(self.n, (0..self.n).filter(|&v| eps[v] > 0));
        SupportInfo { set, eps }
    }

    /// Number of members of `s` with no neighbor inside `s`.
    pub fn induced_isolated_count(&self, s: &VertexSet) -> usize {
        assert_eq!(s.universe(), self.n, "set universe must match graph order");
        s.iter()
            .filter(|&v| !self.adj[v].iter().any(|&w| s.contains(w as usize)))
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut visited = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    visited += 1;
                    stack.push(w as usize);
                }
            }
        }
        visited == self.n
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.size() == self.n - 1 && self.is_connected()
    }

    /// Canonical edge-list serialization; `parse_edge_list` round-trips it.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// DOT serialization with plain integer labels.
    pub fn to_dot(&self, one_indexed: bool) -> String {
        let off = usize::from(one_indexed);
        let mut out = String::from("graph {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {};", v + off);
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {} -- {};", u as usize + off, v as usize + off);
        }
        out.push_str("}\n");
        out
    }
}

impl std::fmt::Debug for BaseGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BaseGraph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

/// Support set plus per-vertex adjacent-leaf counts.
pub struct SupportInfo {
    pub set: VertexSet,
    /// `eps[v]` = number of leaves adjacent to `v` (0 for non-supports).
    pub eps: Vec<u32>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::testutil::seven_vertex_graph;
    use proptest::prelude::*;

    #[test]
    fn parse_seven_vertex_graph() {
        let g = seven_vertex_graph();
        assert_eq!(g.order(), 7);
        assert_eq!(g.size(), 7);
        assert!(g.has_edge(0, 2));
        assert!(!g.has_edge(0, 1));
    }

    #[test]
    fn parse_k1_and_k3() {
        let k1 = BaseGraph::parse_edge_list("1 0\n").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let k3 = BaseGraph::parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));
        assert!(k3.has_edge(0, 2));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert_eq!(BaseGraph::parse_edge_list("0 0\n"), Err(GraphError::EmptyGraph));
        assert!(matches!(
            BaseGraph::parse_edge_list("x y\n"),
            Err(GraphError::MalformedHeader(_))
        ));
        assert!(matches!(
            BaseGraph::parse_edge_list("2 1\n0\n"),
            Err(GraphError::MalformedEdge(_))
        ));
        assert_eq!(
            BaseGraph::parse_edge_list("2 1\n0 2\n"),
            Err(GraphError::VertexOutOfRange { index: 2, order: 2 })
        );
        assert_eq!(
            BaseGraph::parse_edge_list("2 1\n1 1\n"),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            BaseGraph::parse_edge_list("3 2\n0 1\n1 0\n"),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            BaseGraph::parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::EdgeCountMismatch { declared: 2, found: 1 })
        );
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let g = BaseGraph::parse_edge_list("# a comment\n\n2 1\n# another\n0 1\n").unwrap();
        assert_eq!((g.order(), g.size()), (2, 1));
    }

    #[test]
    fn leaves_examples() {
        let star = corpus::star(3);
        assert_eq!(star.leaves().to_vec(), vec![1, 2, 3]);
        assert_eq!(seven_vertex_graph().leaves().to_vec(), vec![0, 1, 6]);
        let k3 = corpus::complete(3);
        assert!(k3.leaves().is_empty());
    }

    #[test]
    fn supports_examples() {
        let star = corpus::star(3);
        let info = star.supports();
        assert_eq!(info.set.to_vec(), vec![0]);
        assert_eq!(info.eps[0], 3);

        let info = seven_vertex_graph().supports();
        assert_eq!(info.set.to_vec(), vec![2, 3, 5]);
        assert_eq!((info.eps[2], info.eps[3], info.eps[5]), (1, 1, 1));

        // P2: both endpoints are mutually leaf and support.
        let p2 = corpus::path(2);
        let info = p2.supports();
        assert_eq!(info.set.to_vec(), vec![0, 1]);
        assert_eq!(p2.leaves().to_vec(), vec![0, 1]);
        assert_eq!(info.eps, vec![1, 1]);
    }

    #[test]
    fn induced_isolated_count_examples() {
        let c4 = corpus::cycle(4);
        assert_eq!(c4.induced_isolated_count(&VertexSet::from_iter(4, [0, 1])), 0);
        assert_eq!(c4.induced_isolated_count(&VertexSet::from_iter(4, [0, 2])), 2);
        assert_eq!(c4.induced_isolated_count(&VertexSet::empty(4)), 0);
    }

    #[test]
    fn is_tree_examples() {
        assert!(corpus::path(4).is_tree());
        assert!(!corpus::complete(3).is_tree());
        assert!(!seven_vertex_graph().is_tree());
        // Disconnected with n-1 edges is not a tree.
        let g = BaseGraph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!g.is_tree());
    }

    #[test]
    fn dot_export() {
        let k1 = BaseGraph::new(1, []).unwrap();
        assert_eq!(k1.to_dot(false), "graph {\n  0;\n}\n");
        let p2 = corpus::path(2);
        assert_eq!(p2.to_dot(false), "graph {\n  0;\n  1;\n  0 -- 1;\n}\n");
        assert_eq!(p2.to_dot(true), "graph {\n  1;\n  2;\n  1 -- 2;\n}\n");
    }

    fn arb_graph() -> impl Strategy<Value = BaseGraph> {
        (1usize..10).prop_flat_map(|n| {
            let pairs: Vec<(u32, u32)> = (0..n as u32)
                .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
                .collect();
            proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
                let edges = pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, &keep)| keep)
                    .map(|(&e, _)| e);
                BaseGraph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn degree_sum_is_twice_size(g in arb_graph()) {
            let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
            prop_assert_eq!(sum, 2 * g.size());
        }

        #[test]
        fn edge_list_round_trips(g in arb_graph()) {
            let again = BaseGraph::parse_edge_list(&g.to_edge_list()).unwrap();
            prop_assert_eq!(again.edges(), g.edges());
            prop_assert_eq!(again.order(), g.order());
            prop_assert_eq!(BaseGraph::parse_edge_list(&again.to_edge_list()).unwrap(), again);
        }

        #[test]
        fn support_leaf_counts_sum_to_leaf_count(g in arb_graph()) {
            let info = g.supports();
            let total: u32 = info.eps.iter().sum();
            prop_assert_eq!(total as usize, g.leaves().count());
        }
    }
}
