//! Named graph families and branch-graph machinery.
//!
//! Generators cover paths, cycles, stars, double stars, wounded/healthy
//! spiders, and rooted products. Branch graphs are rooted products whose
//! branches are copies of P4 or P5 rooted at a center; `recognize_branch`
//! decides membership exactly by backtracking over clean path embeddings.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("graph must be connected for branch recognition")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Branch shapes admitted by the branch-graph constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchKind {
    P4,
    P5,
}

impl BranchKind {
    pub fn order(self) -> usize {
        match self {
            BranchKind::P4 => 4,
            BranchKind::P5 => 5,
        }
    }
}

/// Plain edge-list payload used when a family spec embeds a graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphSpec {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.edges.iter().copied())
    }

    pub fn of(g: &Graph) -> GraphSpec {
        GraphSpec {
            n: g.n(),
            edges: g.edges(),
        }
    }
}

/// Parameterized description of every named family in scope.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    /// Star S_r: one center adjacent to `leaves` leaves.
    Star { leaves: usize },
    /// Double star S_{r,s}: adjacent centers with `r` and `s` leaves.
    DoubleStar { r: usize, s: usize },
    /// Star S_legs with `subdivided` of its edges subdivided. Healthy when
    /// `subdivided == legs`, wounded otherwise.
    Spider { legs: usize, subdivided: usize },
    /// Rooted product of `host` with a P4 or P5 branch per host vertex.
    Branch {
        host: GraphSpec,
        kinds: Vec<BranchKind>,
    },
}

/// Vertex roles reported by the generators so tests can address the shapes
/// the way the constructions do (head, feet, centers, roots).
#[derive(Debug, Clone, Default, Serialize)]
pub struct Roles {
    pub centers: Vec<usize>,
    pub head: Option<usize>,
    pub healthy_feet: Vec<usize>,
    pub wounded_feet: Vec<usize>,
    pub leg_middles: Vec<usize>,
    pub roots: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct FamilyGraph {
    pub graph: Graph,
    pub roles: Roles,
    /// Present for branch families: the decomposition the generator built.
    pub decomposition: Option<BranchDecomposition>,
}

pub fn make_family(spec: &FamilySpec) -> Result<FamilyGraph, FamilyError> {
    match spec {
        FamilySpec::Path { n } => {
            if *n < 1 {
                return Err(FamilyError::InvalidParameters("path needs n >= 1".into()));
            }
            let graph = Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i)))?;
            let centers = graph.structure().centers;
            Ok(FamilyGraph {
                graph,
                roles: Roles {
                    centers,
                    ..Roles::default()
                },
                decomposition: None,
            })
        }
        FamilySpec::Cycle { n } => {
            if *n < 3 {
                return Err(FamilyError::InvalidParameters("cycle needs n >= 3".into()));
            }
            let graph = Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))?;
            Ok(FamilyGraph {
                graph,
                roles: Roles::default(),
                decomposition: None,
            })
        }
        FamilySpec::Star { leaves } => {
            if *leaves < 1 {
                return Err(FamilyError::InvalidParameters("star needs r >= 1".into()));
            }
            let graph = Graph::from_edges(leaves + 1, (1..=*leaves).map(|i| (0, i)))?;
            Ok(FamilyGraph {
                graph,
                roles: Roles {
                    centers: vec![0],
                    ..Roles::default()
                },
                decomposition: None,
            })
        }
        FamilySpec::DoubleStar { r, s } => {
            if *r < 1 || *s < 1 {
                return Err(FamilyError::InvalidParameters(
                    "double star needs r, s >= 1".into(),
                ));
            }
            // 0 and 1 are the centers; r leaves on 0, then s leaves on 1.
            let mut edges = vec![(0, 1)];
            edges.extend((0..*r).map(|i| (0, 2 + i)));
            edges.extend((0..*s).map(|i| (1, 2 + r + i)));
            let graph = Graph::from_edges(r + s + 2, edges)?;
            Ok(FamilyGraph {
                graph,
                roles: Roles {
                    centers: vec![0, 1],
                    ..Roles::default()
                },
                decomposition: None,
            })
        }
        FamilySpec::Spider { legs, subdivided } => {
            if *legs < 1 || *subdivided < 1 || subdivided > legs {
                return Err(FamilyError::InvalidParameters(
                    "spider needs 1 <= subdivided <= legs".into(),
                ));
            }
            // head 0; wounded feet first, then (middle, foot) pairs.
            let wounded = legs - subdivided;
            let mut edges = Vec::new();
            let mut roles = Roles {
                head: Some(0),
                ..Roles::default()
            };
            for i in 0..wounded {
                edges.push((0, 1 + i));
                roles.wounded_feet.push(1 + i);
            }
            let mut next = 1 + wounded;
            for _ in 0..*subdivided {
                let middle = next;
                let foot = next + 1;
                next += 2;
                edges.push((0, middle));
                edges.push((middle, foot));
                roles.leg_middles.push(middle);
                roles.healthy_feet.push(foot);
            }
            let graph = Graph::from_edges(next, edges)?;
            Ok(FamilyGraph {
                graph,
                roles,
                decomposition: None,
            })
        }
        FamilySpec::Branch { host, kinds } => {
            let host_graph = host.build()?;
            if !host_graph.is_connected() {
                return Err(FamilyError::InvalidParameters(
                    "branch host must be connected".into(),
                ));
            }
            if kinds.len() != host_graph.n() {
                return Err(FamilyError::InvalidParameters(format!(
                    "need one branch kind per host vertex ({} != {})",
                    kinds.len(),
                    host_graph.n()
                )));
            }
            let branches: Vec<(Graph, usize)> = kinds.iter().map(|k| rooted_path(*k)).collect();
            let product = rooted_product(&host_graph, &branches)?;
            let decomposition = BranchDecomposition {
                branches: kinds
                    .iter()
                    .zip(&product.blocks)
                    .map(|(kind, block)| Branch {
                        kind: *kind,
                        path: block.clone(),
                        root: block[rooted_path(*kind).1],
                    })
                    .collect(),
                host_edges: host_graph
                    .edges()
                    .iter()
                    .map(|&(x, y)| (product.roots[x], product.roots[y]))
                    .collect(),
            };
            Ok(FamilyGraph {
                graph: product.graph,
                roles: Roles {
                    roots: product.roots,
                    ..Roles::default()
                },
                decomposition: Some(decomposition),
            })
        }
    }
}

/// Path of the given kind with vertices `0..order` in path order, rooted at
/// its lower-indexed center (P4 has two centers; its path-reversing
/// automorphism makes either choice isomorphic).
fn rooted_path(kind: BranchKind) -> (Graph, usize) {
    let order = kind.order();
    let g = Graph::from_edges(order, (1..order).map(|i| (i - 1, i))).unwrap();
    let root = match kind {
        BranchKind::P4 => 1,
        BranchKind::P5 => 2,
    };
    (g, root)
}

/// Result of a rooted product: the graph, the image of each host vertex
/// (the root its branch was identified with), and each branch's vertex block.
#[derive(Debug, Clone)]
pub struct RootedProduct {
    pub graph: Graph,
    pub roots: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

/// Rooted product H(K): one rooted graph per host vertex; host vertex x is
/// identified with the root of K_x, and H's edges join the identified roots.
pub fn rooted_product(host: &Graph, branches: &[(Graph, usize)]) -> Result<RootedProduct, FamilyError> {
    if branches.len() != host.n() {
        return Err(FamilyError::InvalidParameters(format!(
            "need one rooted branch per host vertex ({} != {})",
            branches.len(),
            host.n()
        )));
    }
    for (branch, root) in branches {
        if *root >= branch.n() {
            return Err(FamilyError::InvalidParameters(format!(
                "branch root {root} out of range"
            )));
        }
    }
    let mut offset = 0usize;
    let mut blocks = Vec::with_capacity(branches.len());
    let mut roots = Vec::with_capacity(branches.len());
    let mut edges = Vec::new();
    for (branch, root) in branches {
        let block: Vec<usize> = (0..branch.n()).map(|v| offset + v).collect();
        for (u, v) in branch.edges() {
            edges.push((offset + u, offset + v));
        }
        roots.push(offset + root);
        blocks.push(block);
        offset += branch.n();
    }
    for (x, y) in host.edges() {
        edges.push((roots[x], roots[y]));
    }
    Ok(RootedProduct {
        graph: Graph::from_edges(offset, edges)?,
        roots,
        blocks,
    })
}

/// One branch of a decomposition: its path in order and the root vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub kind: BranchKind,
    pub path: Vec<usize>,
    pub root: usize,
}

/// Partition of a graph into P4/P5 branches plus host edges between roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchDecomposition {
    pub branches: Vec<Branch>,
    pub host_edges: Vec<(usize, usize)>,
}

impl BranchDecomposition {
    /// Count of branches per kind `(p4, p5)`.
    pub fn kind_counts(&self) -> (usize, usize) {
        let p4 = self
            .branches
            .iter()
            .filter(|b| b.kind == BranchKind::P4)
            .count();
        (p4, self.branches.len() - p4)
    }
}

/// A candidate branch embedding whose non-root vertices have no edges
/// leaving the path. Only such "clean" paths can appear in a decomposition.
#[derive(Debug, Clone)]
struct Candidate {
    kind: BranchKind,
    path: Vec<usize>,
    root: usize,
}

fn p4_candidates(g: &Graph, out: &mut Vec<Candidate>) {
    for (b, c) in g.edges() {
        for &a in g.neighbors(b) {
            if a == c {
                continue;
            }
            for &d in g.neighbors(c) {
                if d == b || d == a {
                    continue;
                }
                // induced path: no chords a-c, a-d, b-d
                if g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, d) {
                    continue;
                }
                // ends must be pendant; at most one center may look outside
                if g.degree(a) != 1 || g.degree(d) != 1 {
                    continue;
                }
                let ext_b = g.degree(b) > 2;
                let ext_c = g.degree(c) > 2;
                if ext_b && ext_c {
                    continue;
                }
                let root = if ext_b {
                    b
                } else if ext_c {
                    c
                } else {
                    b.min(c)
                };
                out.push(Candidate {
                    kind: BranchKind::P4,
                    path: vec![a, b, c, d],
                    root,
                });
            }
        }
    }
}

fn p5_candidates(g: &Graph, out: &mut Vec<Candidate>) {
    for c in g.vertices() {
        let nbrs = g.neighbors(c);
        for (i, &b) in nbrs.iter().enumerate() {
            for &d in &nbrs[i + 1..] {
                if g.degree(b) != 2 || g.degree(d) != 2 {
                    continue;
                }
                let a = other_neighbor(g, b, c);
                let e = other_neighbor(g, d, c);
                if a == e || a == d || e == b || a == c || e == c {
                    continue;
                }
                if g.degree(a) != 1 || g.degree(e) != 1 {
                    continue;
                }
                // deg(b) = deg(d) = 2 already forbids chords at b, d; rule
                // out the remaining ones at the ends and across.
                if g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(a, e) || g.has_edge(b, d)
                    || g.has_edge(b, e) || g.has_edge(c, e)
                {
                    continue;
                }
                out.push(Candidate {
                    kind: BranchKind::P5,
                    path: vec![a, b, c, d, e],
                    root: c,
                });
            }
        }
    }
}

fn other_neighbor(g: &Graph, v: usize, not: usize) -> usize {
    let nbrs = g.neighbors(v);
    if nbrs[0] == not {
        nbrs[1]
    } else {
        nbrs[0]
    }
}

/// Exact recognizer: returns a decomposition using only `allowed` branch
/// kinds if one exists, `None` for a definitive negative. Worst-case
/// exponential backtracking; the corpora stay far below that.
pub fn recognize_branch(
    g: &Graph,
    allowed: &[BranchKind],
) -> Result<Option<BranchDecomposition>, FamilyError> {
    if !g.is_connected() {
        return Err(FamilyError::Disconnected);
    }
    let n = g.n();
    // order must be expressible as 4r + 5r' over the allowed kinds
    if !order_reachable(n, allowed) {
        return Ok(None);
    }
    let mut candidates = Vec::new();
    if allowed.contains(&BranchKind::P4) {
        p4_candidates(g, &mut candidates);
    }
    if allowed.contains(&BranchKind::P5) {
        p5_candidates(g, &mut candidates);
    }
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, cand) in candidates.iter().enumerate() {
        for &v in &cand.path {
            by_vertex[v].push(i);
        }
    }
    let mut assigned = vec![false; n];
    let mut chosen: Vec<usize> = Vec::new();
    if !cover(g, &candidates, &by_vertex, &mut assigned, &mut chosen) {
        return Ok(None);
    }
    let mut branches: Vec<Branch> = chosen
        .iter()
        .map(|&i| Branch {
            kind: candidates[i].kind,
            path: candidates[i].path.clone(),
            root: candidates[i].root,
        })
        .collect();
    branches.sort_by_key(|b| *b.path.iter().min().unwrap());
    let in_branch = branch_index_of(n, &branches);
    let mut host_edges = Vec::new();
    for (u, v) in g.edges() {
        if in_branch[u] != in_branch[v] {
            host_edges.push((u, v));
        }
    }
    let dec = BranchDecomposition {
        branches,
        host_edges,
    };
    debug_assert!(validate_decomposition(g, &dec, allowed).is_ok());
    Ok(Some(dec))
}

fn order_reachable(n: usize, allowed: &[BranchKind]) -> bool {
    let p4 = allowed.contains(&BranchKind::P4);
    let p5 = allowed.contains(&BranchKind::P5);
    (0..=n / 4).any(|r| {
        (0..=n / 5).any(|s| {
            4 * r + 5 * s == n && (r == 0 || p4) && (s == 0 || p5) && r + s > 0
        })
    })
}

fn cover(
    g: &Graph,
    candidates: &[Candidate],
    by_vertex: &[Vec<usize>],
    assigned: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
) -> bool {
    let v = match assigned.iter().position(|&b| !b) {
        None => return true,
        Some(v) => v,
    };
    for &i in &by_vertex[v] {
        let cand = &candidates[i];
        if cand.path.iter().any(|&u| assigned[u]) {
            continue;
        }
        for &u in &cand.path {
            assigned[u] = true;
        }
        chosen.push(i);
        if cover(g, candidates, by_vertex, assigned, chosen) {
            return true;
        }
        chosen.pop();
        for &u in &cand.path {
            assigned[u] = false;
        }
    }
    false
}

fn branch_index_of(n: usize, branches: &[Branch]) -> Vec<usize> {
    let mut idx = vec![usize::MAX; n];
    for (i, b) in branches.iter().enumerate() {
        for &v in &b.path {
            idx[v] = i;
        }
    }
    idx
}

/// Re-validates a decomposition against the definition from scratch:
/// the paths partition V, each induces its kind, roots are centers, every
/// non-branch edge joins two roots, and the host is connected.
pub fn validate_decomposition(
    g: &Graph,
    dec: &BranchDecomposition,
    allowed: &[BranchKind],
) -> Result<(), String> {
    let n = g.n();
    let mut seen = vec![false; n];
    for branch in &dec.branches {
        if !allowed.contains(&branch.kind) {
            return Err(format!("branch kind {:?} not allowed", branch.kind));
        }
        if branch.path.len() != branch.kind.order() {
            return Err("branch path length does not match its kind".into());
        }
        for &v in &branch.path {
            if v >= n || seen[v] {
                return Err(format!("vertex {v} missing or covered twice"));
            }
            seen[v] = true;
        }
        // consecutive vertices adjacent, all other pairs non-adjacent
        let p = &branch.path;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                let adjacent = g.has_edge(p[i], p[j]);
                if (j == i + 1) != adjacent {
                    return Err(format!(
                        "path {:?} is not induced as a path in the graph",
                        p
                    ));
                }
            }
        }
        let centers: Vec<usize> = match branch.kind {
            BranchKind::P4 => vec![p[1], p[2]],
            BranchKind::P5 => vec![p[2]],
        };
        if !centers.contains(&branch.root) {
            return Err(format!("root {} is not a center of its path", branch.root));
        }
    }
    if seen.iter().any(|&b| !b) {
        return Err("branches do not cover every vertex".into());
    }
    let idx = branch_index_of(n, &dec.branches);
    let mut cross = Vec::new();
    for (u, v) in g.edges() {
        if idx[u] != idx[v] {
            // a cross edge must join the two branches at their roots
            if u != dec.branches[idx[u]].root || v != dec.branches[idx[v]].root {
                return Err(format!("edge {u}-{v} leaves a branch at a non-root"));
            }
            cross.push((u, v));
        }
    }
    let mut expected = dec.host_edges.clone();
    expected.sort_unstable();
    cross.sort_unstable();
    if expected != cross {
        return Err("host edge list does not match the cross edges".into());
    }
    // host connectivity over branches
    if !dec.branches.is_empty() {
        let b = dec.branches.len();
        let mut adj = vec![Vec::new(); b];
        for &(u, v) in &cross {
            adj[idx[u]].push(idx[v]);
            adj[idx[v]].push(idx[u]);
        }
        let mut seen = vec![false; b];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err("host graph on the roots is not connected".into());
        }
    } else {
        return Err("decomposition has no branches".into());
    }
    Ok(())
}
