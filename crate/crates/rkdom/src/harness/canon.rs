//! Canonical forms: a permutation-minimal adjacency bit-string for graphs
//! up to seven vertices (7! = 5040 permutations brute-forced), and a
//! center-rooted AHU encoding for trees of any corpus size. Two graphs in
//! the supported range share a key exactly when they are isomorphic.

use crate::graph::Graph;
use crate::harness::HarnessError;

/// Largest order for which the permutation-minimal key is computed.
pub(crate) const MAX_PERM_KEY_N: usize = 7;

pub(crate) fn triangle_bit(i: usize, j: usize, n: usize) -> u32 {
    debug_assert!(i < j && j < n);
    (i * n - i * (i + 1) / 2 + (j - i - 1)) as u32
}

pub(crate) fn graph_to_bits(g: &Graph) -> u32 {
    let n = g.n();
    let mut bits = 0u32;
    for (u, v) in g.edges() {
        bits |= 1 << triangle_bit(u, v, n);
    }
    bits
}

pub(crate) fn bits_to_graph(n: usize, bits: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if bits >> triangle_bit(i, j, n) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("triangle bits are a valid edge set")
}

fn apply_permutation(edges: &[(usize, usize)], perm: &[usize], n: usize) -> u32 {
    let mut bits = 0u32;
    for &(u, v) in edges {
        let (a, b) = (perm[u], perm[v]);
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        bits |= 1 << triangle_bit(i, j, n);
    }
    bits
}

/// Minimum adjacency bit-string over all vertex permutations. `None` when
/// the graph is too large for the brute-force sweep.
pub fn permutation_min_key(g: &Graph) -> Option<u32> {
    let n = g.n();
    if n > MAX_PERM_KEY_N {
        return None;
    }
    let edges = g.edges();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = apply_permutation(&edges, &perm, n);
    // Heap's algorithm: every permutation by adjacent swaps.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let key = apply_permutation(&edges, &perm, n);
            if key < best {
                best = key;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Some(best)
}

/// Peeling centers: repeatedly strip the current leaf layer until one or
/// two vertices remain.
pub(crate) fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = g.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &u in g.neighbors(v) {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    g.vertices().filter(|&v| !removed[v]).collect()
}

fn ahu_encode(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut subs: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&u| Some(u) != parent)
        .map(|&u| ahu_encode(g, u, Some(v)))
        .collect();
    subs.sort();
    format!("({})", subs.concat())
}

/// AHU canonical string of a tree, rooted at its center (the smaller of the
/// two encodings when the tree is bicentral). `None` for non-trees.
pub fn tree_key(g: &Graph) -> Option<String> {
    if !g.is_tree() {
        return None;
    }
    let centers = tree_centers(g);
    centers
        .iter()
        .map(|&c| ahu_encode(g, c, None))
        .min()
}

/// Canonical form string used for deduplication and deterministic report
/// ordering. Graphs up to seven vertices use the permutation-minimal key;
/// larger trees use the AHU key. Larger non-trees are unsupported.
pub fn corpus_key(g: &Graph) -> Result<String, HarnessError> {
    let n = g.n();
    if n <= MAX_PERM_KEY_N {
        let bits = permutation_min_key(g).expect("within range");
        return Ok(format!("g{n}:{bits:06x}"));
    }
    match tree_key(g) {
        Some(key) => Ok(format!("t{n:02}:{key}")),
        None => Err(HarnessError::KeyUnsupported { n }),
    }
}
