//! Exact computation of the domination number, the Roman k-domination
//! number, and the strong Roman k-domination number.
//!
//! Two independent routes exist on purpose. `gamma_k` / `gamma_k_strong`
//! run a depth-first branch-and-bound over weight assignments and work on
//! any connected graph. `tree_solve` is a rooted dynamic program that is
//! polynomial for fixed k but only applies to trees; the two are checked
//! against each other in the test suites.
//!
//! Tree DP state: a vertex contributes `(own weight a, residual demand d)`
//! where `d` is the part of the vertex's own covering condition that the
//! parent must still supply. At merge time the parent is the only
//! unassigned member of the child's closed neighborhood, so for the rdf
//! variant the child state is usable exactly when the parent weight
//! satisfies `a >= d`. For the srdf variant only strictly heavy parents
//! (`2a > k`) can discharge a positive demand, again with `a >= d`.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{verdict, Variant, Verdict, WeightFunction};

/// Default node budget: deterministic failure instead of a silent hang.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("node budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("input is not a tree")]
    NotATree,
    #[error("k must be at least 2 (got {0})")]
    KTooSmall(usize),
    #[error("graph too large for this solver (n = {n}, max {max})")]
    TooLarge { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    Restricted,
    TreeDp,
    DomBrute,
}

/// Weight alphabet for the strong solver. `Restricted` drops every weight
/// strictly between 0 and k/2 (the normal form of optimal k-SRDFs) and must
/// produce the same optimal value as `Full`; the acceptance suite checks
/// that equivalence exhaustively on small graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    Full,
    Restricted,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: WeightFunction,
    pub method: Method,
    pub nodes: u64,
    pub millis: u128,
}

fn allowed_weights(k: usize, alphabet: Alphabet) -> Vec<usize> {
    match alphabet {
        Alphabet::Full => (0..=k).collect(),
        Alphabet::Restricted => (0..=k).filter(|&w| w == 0 || 2 * w >= k).collect(),
    }
}

fn check_common(g: &Graph, k: usize) -> Result<(), SolveError> {
    if g.n() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if k < 2 {
        return Err(SolveError::KTooSmall(k));
    }
    Ok(())
}

/// Minimum dominating set by cardinality-ordered subset enumeration. The
/// witness encodes membership as weight 1 (with modulus 2, the smallest the
/// weight-function type allows); it is a set indicator, not a k-RDF.
pub fn domination_number(g: &Graph) -> Result<SolveResult, SolveError> {
    domination_number_budgeted(g, DEFAULT_NODE_BUDGET)
}

pub fn domination_number_budgeted(g: &Graph, budget: u64) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let n = g.n();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > 63 {
        return Err(SolveError::TooLarge { n, max: 63 });
    }
    let closed: Vec<u64> = g
        .vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << v, |m, &u| m | (1u64 << u))
        })
        .collect();
    let full = (1u64 << n) - 1;
    let mut nodes = 0u64;
    for size in 1..=n {
        // Gosper's hack: subsets of fixed popcount in increasing order.
        let mut mask = (1u64 << size) - 1;
        while mask <= full {
            nodes += 1;
            if nodes > budget {
                return Err(SolveError::BudgetExceeded { nodes });
            }
            let mut covered = 0u64;
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                covered |= closed[v];
                bits &= bits - 1;
            }
            if covered == full {
                let weights: Vec<usize> =
                    (0..n).map(|v| usize::from(mask >> v & 1 == 1)).collect();
                return Ok(SolveResult {
                    value: size,
                    witness: WeightFunction::new(2, weights).expect("indicator weights"),
                    method: Method::DomBrute,
                    nodes,
                    millis: start.elapsed().as_millis(),
                });
            }
            // next mask with the same popcount
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            if r == 0 {
                break;
            }
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set always dominates a non-empty graph")
}

/// Exact Roman k-domination number by branch-and-bound.
pub fn gamma_k(g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    gamma_k_budgeted(g, k, DEFAULT_NODE_BUDGET)
}

pub fn gamma_k_budgeted(g: &Graph, k: usize, budget: u64) -> Result<SolveResult, SolveError> {
    check_common(g, k)?;
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let start = Instant::now();
    let allowed = allowed_weights(k, Alphabet::Full);
    let (value, weights, nodes) = branch_and_bound(g, k, Variant::Rdf, &allowed, budget)?;
    Ok(SolveResult {
        value,
        witness: WeightFunction::new(k, weights).expect("witness in range"),
        method: Method::Brute,
        nodes,
        millis: start.elapsed().as_millis(),
    })
}

/// Exact strong Roman k-domination number by branch-and-bound over the
/// chosen alphabet.
pub fn gamma_k_strong(g: &Graph, k: usize, alphabet: Alphabet) -> Result<SolveResult, SolveError> {
    gamma_k_strong_budgeted(g, k, alphabet, DEFAULT_NODE_BUDGET)
}

pub fn gamma_k_strong_budgeted(
    g: &Graph,
    k: usize,
    alphabet: Alphabet,
    budget: u64,
) -> Result<SolveResult, SolveError> {
    check_common(g, k)?;
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let start = Instant::now();
    let allowed = allowed_weights(k, alphabet);
    let (value, weights, nodes) = branch_and_bound(g, k, Variant::Srdf, &allowed, budget)?;
    Ok(SolveResult {
        value,
        witness: WeightFunction::new(k, weights).expect("witness in range"),
        method: match alphabet {
            Alphabet::Full => Method::Brute,
            Alphabet::Restricted => Method::Restricted,
        },
        nodes,
        millis: start.elapsed().as_millis(),
    })
}

/// Exact values on trees via the rooted dynamic program.
pub fn tree_solve(t: &Graph, k: usize, variant: Variant) -> Result<SolveResult, SolveError> {
    tree_solve_with_alphabet(t, k, variant, Alphabet::Full)
}

/// Tree DP over a chosen alphabet. Restricted mode is only meaningful for
/// the srdf variant, where it also makes the witness normal-form.
pub fn tree_solve_with_alphabet(
    t: &Graph,
    k: usize,
    variant: Variant,
    alphabet: Alphabet,
) -> Result<SolveResult, SolveError> {
    check_common(t, k)?;
    if !t.is_tree() {
        return Err(SolveError::NotATree);
    }
    let start = Instant::now();
    let allowed = allowed_weights(k, alphabet);
    let (value, weights, nodes) = tree_dp(t, k, variant, &allowed);
    Ok(SolveResult {
        value,
        witness: WeightFunction::new(k, weights).expect("witness in range"),
        method: Method::TreeDp,
        nodes,
        millis: start.elapsed().as_millis(),
    })
}

/// Summary of a full optimal-set enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct OptimalSet {
    pub value: usize,
    pub emitted: u64,
    /// False when the visitor stopped the stream early.
    pub complete: bool,
    pub nodes: u64,
}

/// Streams every optimal function exactly once, in lexicographic order of
/// the weight vector. The visitor returns `false` to stop early; nothing is
/// materialized.
pub fn all_min_functions(
    g: &Graph,
    k: usize,
    variant: Variant,
    budget: u64,
    mut visit: impl FnMut(&WeightFunction) -> bool,
) -> Result<OptimalSet, SolveError> {
    check_common(g, k)?;
    let allowed = allowed_weights(k, Alphabet::Full);
    // Optimal value first; enumeration then collects everything at that value.
    let (target, _, nodes_opt) = if g.is_connected() {
        branch_and_bound(g, k, variant, &allowed, budget)?
    } else {
        branch_and_bound_seeded(
            g,
            k,
            variant,
            &allowed,
            budget,
            constant_seed(g.n(), k),
            natural_order(g.n()),
        )?
    };
    let mut search = Search::new(g, k, variant, &allowed, natural_order(g.n()), budget);
    search.nodes = nodes_opt;
    let mut emitted = 0u64;
    let mut complete = true;
    {
        let mut sink = |weights: &[usize]| -> bool {
            let f = WeightFunction::new(k, weights.to_vec()).expect("weights in range");
            emitted += 1;
            let keep_going = visit(&f);
            if !keep_going {
                complete = false;
            }
            keep_going
        };
        search.enumerate_at(target, &mut sink)?;
    }
    Ok(OptimalSet {
        value: target,
        emitted,
        complete,
        nodes: search.nodes,
    })
}

fn natural_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn constant_seed(n: usize, k: usize) -> (usize, Vec<usize>) {
    // f ≡ ceil(k/2) triggers no covering condition on any graph.
    let half = k.div_ceil(2);
    (half * n, vec![half; n])
}

/// BFS assignment order from a maximum-degree start: closes neighborhoods
/// early so the deficit pruning fires sooner.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let start = (0..n).max_by_key(|&v| g.degree(v)).unwrap_or(0);
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(start);
    seen[start] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    // disconnected graphs: append remaining vertices in index order
    for v in 0..n {
        if !seen[v] {
            order.push(v);
        }
    }
    order
}

/// BFS spanning tree on the same vertex ids. A valid function on a spanning
/// tree stays valid on the host graph (extra edges only add neighborhood
/// weight), so its DP optimum seeds the incumbent.
fn bfs_spanning_tree(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(0usize);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                edges.push((u, v));
                queue.push_back(v);
            }
        }
    }
    Graph::from_edges(n, edges).expect("spanning tree edges are valid")
}

fn branch_and_bound(
    g: &Graph,
    k: usize,
    variant: Variant,
    allowed: &[usize],
    budget: u64,
) -> Result<(usize, Vec<usize>, u64), SolveError> {
    let seed = if g.n() == 1 {
        constant_seed(1, k)
    } else {
        let st = bfs_spanning_tree(g);
        let (v, w, _) = tree_dp(&st, k, variant, allowed);
        debug_assert!(matches!(
            verdict(g, &WeightFunction::new(k, w.clone()).unwrap(), variant),
            Ok(Verdict::Valid)
        ));
        (v, w)
    };
    branch_and_bound_seeded(g, k, variant, allowed, budget, seed, bfs_order(g))
}

fn branch_and_bound_seeded(
    g: &Graph,
    k: usize,
    variant: Variant,
    allowed: &[usize],
    budget: u64,
    seed: (usize, Vec<usize>),
    order: Vec<usize>,
) -> Result<(usize, Vec<usize>, u64), SolveError> {
    let mut search = Search::new(g, k, variant, allowed, order, budget);
    let (value, weights) = search.optimize(seed)?;
    Ok((value, weights, search.nodes))
}

const UNASSIGNED: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    variant: Variant,
    allowed: &'a [usize],
    order: Vec<usize>,
    value: Vec<usize>,
    partial: usize,
    // rdf bookkeeping: assigned weight sum and unassigned count over N[u]
    closed_sum: Vec<usize>,
    closed_unassigned: Vec<usize>,
    // srdf bookkeeping: assigned heavy weight sum and unassigned count over N(u)
    heavy_open: Vec<usize>,
    open_unassigned: Vec<usize>,
    nodes: u64,
    budget: u64,
    best: usize,
    best_weights: Vec<usize>,
}

enum Flow {
    Continue,
    Stop,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        k: usize,
        variant: Variant,
        allowed: &'a [usize],
        order: Vec<usize>,
        budget: u64,
    ) -> Search<'a> {
        let n = g.n();
        Search {
            g,
            k,
            variant,
            allowed,
            order,
            value: vec![UNASSIGNED; n],
            partial: 0,
            closed_sum: vec![0; n],
            closed_unassigned: (0..n).map(|v| g.degree(v) + 1).collect(),
            heavy_open: vec![0; n],
            open_unassigned: (0..n).map(|v| g.degree(v)).collect(),
            nodes: 0,
            budget,
            best: usize::MAX,
            best_weights: Vec::new(),
        }
    }

    fn optimize(&mut self, seed: (usize, Vec<usize>)) -> Result<(usize, Vec<usize>), SolveError> {
        self.best = seed.0;
        self.best_weights = seed.1;
        self.dfs_optimize(0)?;
        Ok((self.best, self.best_weights.clone()))
    }

    fn enumerate_at(
        &mut self,
        target: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<(), SolveError> {
        self.dfs_enumerate(0, target, visit)?;
        Ok(())
    }

    fn place(&mut self, v: usize, w: usize) {
        self.value[v] = w;
        self.partial += w;
        self.closed_sum[v] += w;
        self.closed_unassigned[v] -= 1;
        let heavy = 2 * w > self.k;
        for i in 0..self.g.neighbors(v).len() {
            let u = self.g.neighbors(v)[i];
            self.closed_sum[u] += w;
            self.closed_unassigned[u] -= 1;
            self.open_unassigned[u] -= 1;
            if heavy {
                self.heavy_open[u] += w;
            }
        }
    }

    fn unplace(&mut self, v: usize, w: usize) {
        self.value[v] = UNASSIGNED;
        self.partial -= w;
        self.closed_sum[v] -= w;
        self.closed_unassigned[v] += 1;
        let heavy = 2 * w > self.k;
        for i in 0..self.g.neighbors(v).len() {
            let u = self.g.neighbors(v)[i];
            self.closed_sum[u] -= w;
            self.closed_unassigned[u] += 1;
            self.open_unassigned[u] += 1;
            if heavy {
                self.heavy_open[u] -= w;
            }
        }
    }

    /// Can vertex u still satisfy its covering condition in some completion?
    fn still_feasible(&self, u: usize) -> bool {
        let fu = self.value[u];
        if fu == UNASSIGNED || 2 * fu >= self.k {
            return true;
        }
        match self.variant {
            Variant::Rdf => {
                let deficit = self.k.saturating_sub(self.closed_sum[u]);
                deficit <= self.k * self.closed_unassigned[u]
            }
            Variant::Srdf => {
                let deficit = self.k.saturating_sub(fu + self.heavy_open[u]);
                deficit <= self.k * self.open_unassigned[u]
            }
        }
    }

    fn neighborhood_feasible(&self, v: usize) -> bool {
        self.still_feasible(v) && self.g.neighbors(v).iter().all(|&u| self.still_feasible(u))
    }

    fn dfs_optimize(&mut self, pos: usize) -> Result<(), SolveError> {
        if pos == self.order.len() {
            if self.partial < self.best {
                self.best = self.partial;
                self.best_weights = self.value.clone();
            }
            return Ok(());
        }
        let v = self.order[pos];
        for idx in 0..self.allowed.len() {
            let w = self.allowed[idx];
            if self.partial + w >= self.best {
                break; // weights ascend; nothing better remains
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(SolveError::BudgetExceeded { nodes: self.nodes });
            }
            self.place(v, w);
            if self.neighborhood_feasible(v) {
                self.dfs_optimize(pos + 1)?;
            }
            self.unplace(v, w);
        }
        Ok(())
    }

    fn dfs_enumerate(
        &mut self,
        pos: usize,
        target: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<Flow, SolveError> {
        if pos == self.order.len() {
            if self.partial == target && !visit(&self.value) {
                return Ok(Flow::Stop);
            }
            return Ok(Flow::Continue);
        }
        let v = self.order[pos];
        for idx in 0..self.allowed.len() {
            let w = self.allowed[idx];
            if self.partial + w > target {
                break;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(SolveError::BudgetExceeded { nodes: self.nodes });
            }
            self.place(v, w);
            let flow = if self.neighborhood_feasible(v) {
                self.dfs_enumerate(pos + 1, target, visit)?
            } else {
                Flow::Continue
            };
            self.unplace(v, w);
            if matches!(flow, Flow::Stop) {
                return Ok(Flow::Stop);
            }
        }
        Ok(Flow::Continue)
    }
}

/// Rooted tree DP; returns (optimal value, witness weights, states touched).
pub(crate) fn tree_dp(
    t: &Graph,
    k: usize,
    variant: Variant,
    allowed: &[usize],
) -> (usize, Vec<usize>, u64) {
    const INF: usize = usize::MAX;
    let n = t.n();
    let root = 0usize;
    // BFS gives parents before children; reversal is a valid merge order.
    let mut parent = vec![usize::MAX; n];
    let mut bfs = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    bfs.push(root);
    seen[root] = true;
    let mut head = 0;
    while head < bfs.len() {
        let u = bfs[head];
        head += 1;
        for &v in t.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                bfs.push(v);
            }
        }
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in &bfs {
        if v != root {
            children[parent[v]].push(v);
        }
    }
    let a_count = allowed.len();
    // dp[v][a_idx][d]: min weight of v's subtree with f(v) = allowed[a_idx]
    // and residual demand d on the parent.
    let mut dp: Vec<Vec<Vec<usize>>> = vec![vec![vec![INF; k + 1]; a_count]; n];
    // choices[v][a_idx][child position][d after merge] = (d before, child a_idx, child d)
    let mut choices: Vec<Vec<Vec<Vec<Option<(usize, usize, usize)>>>>> =
        vec![Vec::new(); n];
    let mut states: u64 = 0;
    for &v in bfs.iter().rev() {
        let kids = &children[v];
        choices[v] = vec![vec![vec![None; k + 1]; kids.len()]; a_count];
        for (ai, &a) in allowed.iter().enumerate() {
            let mut cur = vec![INF; k + 1];
            let init_demand = if 2 * a >= k { 0 } else { k - a };
            cur[init_demand] = a;
            for (ci, &c) in kids.iter().enumerate() {
                let mut next = vec![INF; k + 1];
                for d in 0..=k {
                    if cur[d] == INF {
                        continue;
                    }
                    for (cai, &ca) in allowed.iter().enumerate() {
                        let discharges_ok = match variant {
                            Variant::Rdf => |demand: usize| a >= demand,
                            Variant::Srdf => |demand: usize| 2 * a > k && a >= demand,
                        };
                        for cd in 0..=k {
                            let sub = dp[c][cai][cd];
                            if sub == INF {
                                continue;
                            }
                            states += 1;
                            if cd > 0 && !discharges_ok(cd) {
                                continue;
                            }
                            let contrib = match variant {
                                Variant::Rdf => ca,
                                Variant::Srdf => {
                                    if 2 * ca > k {
                                        ca
                                    } else {
                                        0
                                    }
                                }
                            };
                            let nd = d.saturating_sub(contrib);
                            let cost = cur[d] + sub;
                            if cost < next[nd] {
                                next[nd] = cost;
                                choices[v][ai][ci][nd] = Some((d, cai, cd));
                            }
                        }
                    }
                }
                cur = next;
            }
            dp[v][ai] = cur;
        }
    }
    let (best_ai, best_val) = (0..a_count)
        .map(|ai| (ai, dp[root][ai][0]))
        .min_by_key(|&(_, val)| val)
        .expect("non-empty alphabet");
    assert_ne!(best_val, INF, "every tree admits the all-k function");
    let mut weights = vec![0usize; n];
    reconstruct(
        root,
        best_ai,
        0,
        allowed,
        &children,
        &choices,
        &mut weights,
    );
    (best_val, weights, states)
}

fn reconstruct(
    v: usize,
    a_idx: usize,
    demand: usize,
    allowed: &[usize],
    children: &[Vec<usize>],
    choices: &[Vec<Vec<Vec<Option<(usize, usize, usize)>>>>],
    weights: &mut Vec<usize>,
) {
    weights[v] = allowed[a_idx];
    let mut d = demand;
    for ci in (0..children[v].len()).rev() {
        let (prev_d, child_ai, child_d) =
            choices[v][a_idx][ci][d].expect("backpointer exists on optimal path");
        reconstruct(
            children[v][ci],
            child_ai,
            child_d,
            allowed,
            children,
            choices,
            weights,
        );
        d = prev_d;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{is_krdf, is_ksrdf};

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
    fn domination_examples() {
        assert_eq!(domination_number(&star(4)).unwrap().value, 1);
        assert_eq!(domination_number(&path(4)).unwrap().value, 2);
        assert_eq!(domination_number(&cycle(5)).unwrap().value, 2);
    }

    #[test]
    fn domination_witness_dominates() {
        let g = path(7);
        let res = domination_number(&g).unwrap();
        let set: Vec<usize> = (0..g.n()).filter(|&v| res.witness.get(v) == 1).collect();
        for v in g.vertices() {
            let dominated =
                set.contains(&v) || g.neighbors(v).iter().any(|u| set.contains(u));
            assert!(dominated, "vertex {v} uncovered");
        }
        assert_eq!(set.len(), res.value);
    }

    #[test]
    fn empty_graph_is_an_error() {
        assert!(matches!(
            domination_number(&Graph::empty(0)),
            Err(SolveError::EmptyGraph)
        ));
    }

    #[test]
    fn gamma_k_p4_examples() {
        assert_eq!(gamma_k(&path(4), 2).unwrap().value, 3);
        assert_eq!(gamma_k(&path(4), 4).unwrap().value, 6);
    }

    #[test]
    fn gamma_k_star_k5() {
        let res = gamma_k(&star(3), 5).unwrap();
        assert_eq!(res.value, 5);
        assert!(is_krdf(&star(3), &res.witness).unwrap());
    }

    #[test]
    fn strong_c5_paper_values() {
        for (k, expected) in [(2, 4), (4, 8), (6, 12), (8, 15)] {
            let res = gamma_k_strong(&cycle(5), k, Alphabet::Restricted).unwrap();
            assert_eq!(res.value, expected, "k = {k}");
            assert!(is_ksrdf(&cycle(5), &res.witness).unwrap());
        }
    }

    #[test]
    fn strong_p4_k2_full() {
        let res = gamma_k_strong(&path(4), 2, Alphabet::Full).unwrap();
        assert_eq!(res.value, 3);
    }

    #[test]
    fn restricted_witness_is_normal_form() {
        let res = gamma_k_strong(&cycle(5), 8, Alphabet::Restricted).unwrap();
        for v in 0..5 {
            let w = res.witness.get(v);
            assert!(w == 0 || 2 * w >= 8);
        }
    }

    #[test]
    fn tree_solve_p5_examples() {
        assert_eq!(
            tree_solve(&path(5), 4, Variant::Srdf).unwrap().value,
            8
        );
        assert_eq!(
            tree_solve(&path(5), 3, Variant::Srdf).unwrap().value,
            6
        );
    }

    #[test]
    fn tree_solve_two_branch_p4_tree() {
        // two P4s joined at their roots (lower centers)
        let g = Graph::from_edges(
            8,
            [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (1, 5)],
        )
        .unwrap();
        let res = tree_solve(&g, 8, Variant::Srdf).unwrap();
        assert_eq!(res.value, 24); // 3kn/8 = 3*8*8/8
        assert!(is_ksrdf(&g, &res.witness).unwrap());
    }

    #[test]
    fn tree_solve_rejects_non_trees() {
        assert!(matches!(
            tree_solve(&cycle(4), 2, Variant::Rdf),
            Err(SolveError::NotATree)
        ));
    }

    #[test]
    fn tree_solve_single_vertex() {
        let g = Graph::empty(1);
        for k in 2..=7 {
            for variant in [Variant::Rdf, Variant::Srdf] {
                let res = tree_solve(&g, k, variant).unwrap();
                assert_eq!(res.value, k.div_ceil(2), "k = {k}");
            }
        }
    }

    #[test]
    fn tree_dp_matches_brute_on_small_paths() {
        for n in 1..=6 {
            let g = path(n);
            for k in 2..=5 {
                for variant in [Variant::Rdf, Variant::Srdf] {
                    let dp = tree_solve(&g, k, variant).unwrap();
                    let bb = match variant {
                        Variant::Rdf => gamma_k(&g, k).unwrap(),
                        Variant::Srdf => gamma_k_strong(&g, k, Alphabet::Full).unwrap(),
                    };
                    assert_eq!(dp.value, bb.value, "n = {n}, k = {k}, {variant:?}");
                    assert!(verdict(&g, &dp.witness, variant).unwrap().is_valid());
                    assert!(verdict(&g, &bb.witness, variant).unwrap().is_valid());
                }
            }
        }
    }

    #[test]
    fn witnesses_revalidate() {
        let g = cycle(6);
        for k in 2..=6 {
            let r = gamma_k(&g, k).unwrap();
            assert!(is_krdf(&g, &r.witness).unwrap());
            assert_eq!(r.witness.weight(), r.value);
            let s = gamma_k_strong(&g, k, Alphabet::Restricted).unwrap();
            assert!(is_ksrdf(&g, &s.witness).unwrap());
            assert_eq!(s.witness.weight(), s.value);
        }
    }

    #[test]
    fn budget_exceeded_is_loud() {
        let err = gamma_k_budgeted(&path(6), 4, 5).unwrap_err();
        assert!(matches!(err, SolveError::BudgetExceeded { .. }));
    }

    #[test]
    fn all_min_p3_k2_rdf() {
        let g = path(3);
        let mut seen = Vec::new();
        let summary = all_min_functions(&g, 2, Variant::Rdf, 1 << 20, |f| {
            seen.push(f.weights().to_vec());
            true
        })
        .unwrap();
        assert_eq!(summary.value, 2);
        assert_eq!(seen, vec![vec![0, 2, 0], vec![1, 0, 1]]);
        assert!(summary.complete);
    }

    #[test]
    fn all_min_star_k3_srdf() {
        let g = star(3);
        let summary = all_min_functions(&g, 3, Variant::Srdf, 1 << 22, |f| {
            assert_eq!(f.weight(), 3);
            assert!(is_ksrdf(&g, f).unwrap());
            true
        })
        .unwrap();
        assert_eq!(summary.value, 3);
        assert!(summary.emitted >= 1);
    }

    #[test]
    fn all_min_matches_naive_filter() {
        let g = path(4);
        let (k, variant) = (3, Variant::Rdf);
        let mut streamed = Vec::new();
        all_min_functions(&g, k, variant, 1 << 22, |f| {
            streamed.push(f.weights().to_vec());
            true
        })
        .unwrap();
        // naive (k+1)^n scan
        let mut naive = Vec::new();
        let mut best = usize::MAX;
        let n = g.n();
        let total = (k + 1).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut w = Vec::with_capacity(n);
            for _ in 0..n {
                w.push(c % (k + 1));
                c /= k + 1;
            }
            let f = WeightFunction::new(k, w.clone()).unwrap();
            if is_krdf(&g, &f).unwrap() {
                let wt = f.weight();
                if wt < best {
                    best = wt;
                    naive.clear();
                }
                if wt == best {
                    naive.push(w);
                }
            }
        }
        naive.sort();
        assert_eq!(streamed, naive);
    }

    #[test]
    fn all_min_early_stop_reports_incomplete() {
        let summary = all_min_functions(&path(3), 2, Variant::Rdf, 1 << 20, |_| false).unwrap();
        assert_eq!(summary.emitted, 1);
        assert!(!summary.complete);
    }

    #[test]
    fn disconnected_input_rejected_by_bb() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(gamma_k(&g, 2), Err(SolveError::Disconnected)));
    }
}
