//! Finite simple undirected graphs with dense vertex indices.
//!
//! One representation serves the whole crate: sorted adjacency lists over
//! vertices `0..n`, no self-loops, no parallel edges. Disconnected graphs are
//! representable (they arise as intermediate states of vertex deletion);
//! operations that assume connectivity check it themselves.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse to one;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        g.sort_adjacency();
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for &x in &[u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.adj[u].contains(&v) {
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
        Ok(())
    }

    fn sort_adjacency(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.m() == self.n() - 1 && self.is_connected()
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// The degree-one neighbors of `v`.
    pub fn leaves_adjacent(&self, v: usize) -> VertexSet {
        let mut set = VertexSet::new(self.n());
        for &u in &self.adj[v] {
            if self.degree(u) == 1 {
                set.insert(u);
            }
        }
        set
    }

    /// Induced subgraph on the complement of `remove`, re-indexed densely.
    /// The returned map transports vertex data between old and new indices.
    pub fn delete_vertices(&self, remove: &VertexSet) -> (Graph, VertexMap) {
        let n = self.n();
        let mut old_to_new = vec![None; n];
        let mut new_to_old = Vec::new();
        for v in 0..n {
            if !remove.contains(v) {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let mut g = Graph::empty(new_to_old.len());
        for (u, v) in self.edges() {
            if let (Some(nu), Some(nv)) = (old_to_new[u], old_to_new[v]) {
                g.adj[nu].push(nv);
                g.adj[nv].push(nu);
            }
        }
        g.sort_adjacency();
        (
            g,
            VertexMap {
                old_to_new,
                new_to_old,
            },
        )
    }

    /// Attaches `count` fresh pendant vertices to `v`.
    pub fn add_pendants(&self, v: usize, count: usize) -> Graph {
        let n = self.n();
        assert!(v < n, "pendant anchor out of range");
        let mut g = self.clone();
        for i in 0..count {
            g.adj.push(vec![v]);
            g.adj[v].push(n + i);
        }
        g.sort_adjacency();
        g
    }

    /// Parses the edge-list format: first non-comment line `n m`, then `m`
    /// lines `u v` with 0-based indices. `#` starts a comment; tokens are
    /// whitespace-delimited. Duplicate edge lines collapse to one edge.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut graph = Graph::empty(0);
        let mut edges_seen = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            let parse_int = |tok: &str| -> Result<usize, GraphError> {
                tok.parse().map_err(|_| GraphError::Parse {
                    line: line_no,
                    message: format!("expected a non-negative integer, got {tok:?}"),
                })
            };
            match header {
                None => {
                    if tokens.len() != 2 {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: format!(
                                "malformed header: expected \"n m\", got {} token(s)",
                                tokens.len()
                            ),
                        });
                    }
                    let n = parse_int(tokens[0])?;
                    let m = parse_int(tokens[1])?;
                    header = Some((n, m));
                    graph = Graph::empty(n);
                }
                Some((n, m)) => {
                    if tokens.len() != 2 {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: format!(
                                "expected edge \"u v\", got {} token(s)",
                                tokens.len()
                            ),
                        });
                    }
                    if edges_seen == m {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: format!("more than the declared {m} edge lines"),
                        });
                    }
                    let u = parse_int(tokens[0])?;
                    let v = parse_int(tokens[1])?;
                    for &x in &[u, v] {
                        if x >= n {
                            return Err(GraphError::Parse {
                                line: line_no,
                                message: format!("vertex index {x} out of range (n = {n})"),
                            });
                        }
                    }
                    if u == v {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: format!("self-loop {u} {v}"),
                        });
                    }
                    graph.insert_edge(u, v).expect("validated above");
                    edges_seen += 1;
                }
            }
        }
        let (_, m) = header.ok_or(GraphError::Parse {
            line: text.lines().count().max(1),
            message: "missing header line \"n m\"".to_string(),
        })?;
        if edges_seen != m {
            return Err(GraphError::Parse {
                line: text.lines().count().max(1),
                message: format!("declared {m} edges but found {edges_seen}"),
            });
        }
        graph.sort_adjacency();
        Ok(graph)
    }

    /// Serializes in the same edge-list format `parse` accepts.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// One-line rendering used in reports.
    pub fn compact_string(&self) -> String {
        let body: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        format!("n={} [{}]", self.n(), body.join(" "))
    }

    /// Structural summary: degrees, leaves, pairwise distances, and (when the
    /// graph is connected) diameter and Jordan centers.
    pub fn structure(&self) -> StructureSummary {
        let n = self.n();
        let degrees: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let leaves = self.leaves();
        let distances: Vec<Vec<Option<usize>>> =
            self.vertices().map(|v| self.bfs_distances(v)).collect();
        let is_connected = n > 0 && distances[0].iter().all(Option::is_some);
        let is_tree = is_connected && self.m() == n - 1;
        let (diameter, centers) = if is_connected {
            let ecc: Vec<usize> = distances
                .iter()
                .map(|row| row.iter().map(|d| d.unwrap()).max().unwrap())
                .collect();
            let diameter = *ecc.iter().max().unwrap();
            let radius = *ecc.iter().min().unwrap();
            let centers = (0..n).filter(|&v| ecc[v] == radius).collect();
            (Some(diameter), centers)
        } else {
            // Diameter and centers are undefined on disconnected graphs.
            (None, Vec::new())
        };
        StructureSummary {
            is_connected,
            is_tree,
            degrees,
            leaves,
            distances,
            diameter,
            centers,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.compact_string())
    }
}

#[derive(Debug, Clone)]
pub struct StructureSummary {
    pub is_connected: bool,
    pub is_tree: bool,
    pub degrees: Vec<usize>,
    pub leaves: Vec<usize>,
    pub distances: Vec<Vec<Option<usize>>>,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    /// Empty when the graph is disconnected.
    pub centers: Vec<usize>,
}

/// Subset of the vertex range `0..n` of an owning graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    member: Vec<bool>,
}

impl VertexSet {
    pub fn new(n: usize) -> VertexSet {
        VertexSet {
            member: vec![false; n],
        }
    }

    pub fn from_iter(n: usize, vertices: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut s = VertexSet::new(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.member.len(), "vertex out of range");
        self.member[v] = true;
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.member.len() && self.member[v]
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.member.iter().all(|&b| !b)
    }

    /// Range size of the owning graph.
    pub fn universe(&self) -> usize {
        self.member.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }
}

/// Re-indexing map returned by [`Graph::delete_vertices`].
#[derive(Debug, Clone)]
pub struct VertexMap {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(r: usize) -> Graph {
        Graph::from_edges(r + 1, (1..=r).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn parse_p3() {
        let g = Graph::parse("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        let deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(deg, vec![1, 2, 1]);
    }

    #[test]
    fn parse_p4() {
        let g = Graph::parse("4 3\n0 1\n1 2\n2 3").unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert!(g.is_tree());
    }

    #[test]
    fn parse_out_of_range_names_line() {
        let err = Graph::parse("3 2\n0 1\n1 3").unwrap_err();
        match err {
            GraphError::Parse { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("out of range"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_self_loop_rejected() {
        let err = Graph::parse("3 2\n0 0\n1 2").unwrap_err();
        match err {
            GraphError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_collapses_duplicate_edges() {
        let g = Graph::parse("3 3\n0 1\n1 0\n1 2").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn parse_comments_and_blank_lines() {
        let g = Graph::parse("# path\n3 2 # header\n\n0 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
    }

    #[test]
    fn structure_p5() {
        let s = path(5).structure();
        assert_eq!(s.diameter, Some(4));
        assert_eq!(s.centers, vec![2]);
        assert!(s.is_tree);
    }

    #[test]
    fn structure_c5() {
        let s = cycle(5).structure();
        assert_eq!(s.diameter, Some(2));
        assert_eq!(s.centers, vec![0, 1, 2, 3, 4]);
        assert!(!s.is_tree);
    }

    #[test]
    fn structure_star() {
        let s = star(4).structure();
        assert_eq!(s.diameter, Some(2));
        assert_eq!(s.centers, vec![0]);
    }

    #[test]
    fn structure_disconnected_is_undefined() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let s = g.structure();
        assert!(!s.is_connected);
        assert_eq!(s.diameter, None);
        assert!(s.centers.is_empty());
    }

    #[test]
    fn leaves_adjacent_examples() {
        // Double star S_{2,3}: centers 0,1 with 2 and 3 leaves.
        let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)]).unwrap();
        let l0 = g.leaves_adjacent(0);
        assert_eq!(l0.iter().collect::<Vec<_>>(), vec![2, 3]);
        let p4 = path(4);
        assert_eq!(p4.leaves_adjacent(1).iter().collect::<Vec<_>>(), vec![0]);
        assert!(cycle(5).leaves_adjacent(0).is_empty());
    }

    #[test]
    fn delete_endpoint_of_p5_gives_p4() {
        let (g, map) = path(5).delete_vertices(&VertexSet::from_iter(5, [4]));
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(map.new_to_old, vec![0, 1, 2, 3]);
    }

    #[test]
    fn delete_middle_of_p5_gives_two_p2() {
        let (g, _) = path(5).delete_vertices(&VertexSet::from_iter(5, [2]));
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
        assert!(!g.is_connected());
    }

    #[test]
    fn delete_nothing_is_identity() {
        let g = path(5);
        let (h, map) = g.delete_vertices(&VertexSet::new(5));
        assert_eq!(g.edges(), h.edges());
        assert_eq!(map.new_to_old, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn deleting_a_leaf_preserves_treeness() {
        let g = star(4);
        let (h, _) = g.delete_vertices(&VertexSet::from_iter(5, [3]));
        assert!(h.is_tree());
    }

    #[test]
    fn distance_matrix_symmetric_zero_diagonal() {
        for g in [path(6), cycle(6), star(5)] {
            let s = g.structure();
            for u in g.vertices() {
                assert_eq!(s.distances[u][u], Some(0));
                for v in g.vertices() {
                    assert_eq!(s.distances[u][v], s.distances[v][u]);
                    // triangle inequality through any w
                    for w in g.vertices() {
                        let (duv, duw, dwv) = (
                            s.distances[u][v].unwrap(),
                            s.distances[u][w].unwrap(),
                            s.distances[w][v].unwrap(),
                        );
                        assert!(duv <= duw + dwv);
                    }
                }
            }
        }
    }

    #[test]
    fn roundtrip_edge_list() {
        let g = cycle(5);
        let h = Graph::parse(&g.to_edge_list_string()).unwrap();
        assert_eq!(g.edges(), h.edges());
    }

    #[test]
    fn add_pendants_extends_graph() {
        let g = star(3).add_pendants(0, 2);
        assert_eq!(g.n(), 6);
        assert_eq!(g.degree(0), 5);
        assert!(g.is_tree());
    }
}
