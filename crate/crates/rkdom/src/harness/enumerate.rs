//! Isomorphism-free corpora.
//!
//! Trees grow by leaf augmentation with AHU deduplication; connected graphs
//! grow by vertex augmentation (attach a new vertex along every nonempty
//! neighbor subset) with permutation-minimal deduplication. Both streams are
//! ordered by corpus key, so reports built over them are deterministic.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::graph::Graph;
use crate::harness::canon::{bits_to_graph, corpus_key, graph_to_bits, permutation_min_key, tree_key};
use crate::harness::HarnessError;

pub const MAX_TREE_N: usize = 14;
pub const MAX_CONNECTED_N: usize = 7;

/// One representative per isomorphism class of trees with 1..=max_n
/// vertices, ordered by (n, corpus key).
pub fn enumerate_trees(max_n: usize) -> Result<Vec<Graph>, HarnessError> {
    if max_n < 1 || max_n > MAX_TREE_N {
        return Err(HarnessError::UnsupportedSize {
            requested: max_n,
            max: MAX_TREE_N,
        });
    }
    let mut out = vec![Graph::empty(1)];
    let mut level = vec![Graph::empty(1)];
    for _ in 2..=max_n {
        let mut unique: BTreeMap<String, Graph> = BTreeMap::new();
        for tree in &level {
            let n = tree.n();
            for v in tree.vertices() {
                let mut edges = tree.edges();
                edges.push((v, n));
                let bigger = Graph::from_edges(n + 1, edges).expect("leaf augmentation");
                let key = tree_key(&bigger).expect("still a tree");
                unique.entry(key).or_insert(bigger);
            }
        }
        level = unique.into_values().collect();
        sort_by_corpus_key(&mut level);
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

/// One representative per isomorphism class of connected graphs with
/// 1..=max_n vertices, ordered by (n, corpus key). Every connected graph has
/// a non-cut vertex, so attaching a new vertex to every connected
/// representative along every nonempty neighbor subset reaches every class.
pub fn enumerate_connected(max_n: usize) -> Result<Vec<Graph>, HarnessError> {
    if max_n < 1 || max_n > MAX_CONNECTED_N {
        return Err(HarnessError::UnsupportedSize {
            requested: max_n,
            max: MAX_CONNECTED_N,
        });
    }
    let mut out = vec![Graph::empty(1)];
    let mut level: Vec<u32> = vec![0]; // canonical bit-strings at the current order
    for n in 2..=max_n {
        let mut unique: BTreeSet<u32> = BTreeSet::new();
        for &bits in &level {
            let base = bits_to_graph(n - 1, bits);
            let base_edges = base.edges();
            for attach in 1u32..(1 << (n - 1)) {
                let mut edges = base_edges.clone();
                for i in 0..n - 1 {
                    if attach >> i & 1 == 1 {
                        edges.push((i, n - 1));
                    }
                }
                let candidate = Graph::from_edges(n, edges).expect("augmentation");
                let canon = permutation_min_key(&candidate).expect("n <= 7");
                unique.insert(canon);
            }
        }
        level = unique.into_iter().collect();
        // ascending bit-strings coincide with corpus-key order at fixed n
        out.extend(level.iter().map(|&bits| bits_to_graph(n, bits)));
    }
    Ok(out)
}

fn sort_by_corpus_key(graphs: &mut [Graph]) {
    graphs.sort_by_key(|g| corpus_key(g).expect("corpus graphs have keys"));
}

/// Decodes a Pruefer sequence over `0..seq.len() + 2` into the tree it
/// encodes. Used both as the random-tree sampler and as an independent
/// oracle for the tree enumeration counts.
pub fn tree_from_pruefer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, edges).expect("pruefer decoding yields a tree")
}

/// Uniform random labeled tree on n vertices via a random Pruefer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    match n {
        0 => Graph::empty(0),
        1 => Graph::empty(1),
        2 => Graph::from_edges(2, [(0, 1)]).unwrap(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_pruefer(&seq)
        }
    }
}
