//! Weight functions `f: V -> {0..k}` and the two validity predicates.
//!
//! A function is a Roman k-dominating function (k-RDF) when every vertex `u`
//! with `f(u) < k/2` has closed-neighborhood weight at least `k`. It is a
//! strong Roman k-dominating function (k-SRDF) when every such `u` satisfies
//! `f(u) + sum of f(v) over open neighbors v with f(v) > k/2 >= k`.
//!
//! Both threshold comparisons are parity-sensitive, so they are evaluated in
//! exact integer arithmetic as `2*f(u) < k` and `2*f(v) > k`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum LabelingError {
    #[error("k must be at least 2 (got {0})")]
    KTooSmall(usize),
    #[error("weight {weight} at vertex {vertex} exceeds k = {k}")]
    WeightOutOfRange {
        vertex: usize,
        weight: usize,
        k: usize,
    },
    #[error("function has {got} weights but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Which domination variant a function or solver targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Rdf,
    Srdf,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Rdf => "rdf",
            Variant::Srdf => "srdf",
        }
    }
}

/// Assignment `f: V -> {0..k}` together with its modulus `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightFunction {
    k: usize,
    weights: Vec<usize>,
}

impl WeightFunction {
    pub fn new(k: usize, weights: Vec<usize>) -> Result<WeightFunction, LabelingError> {
        if k < 2 {
            return Err(LabelingError::KTooSmall(k));
        }
        for (vertex, &weight) in weights.iter().enumerate() {
            if weight > k {
                return Err(LabelingError::WeightOutOfRange { vertex, weight, k });
            }
        }
        Ok(WeightFunction { k, weights })
    }

    /// The constant function `f ≡ value` on `n` vertices.
    pub fn constant(k: usize, n: usize, value: usize) -> Result<WeightFunction, LabelingError> {
        WeightFunction::new(k, vec![value; n])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn get(&self, v: usize) -> usize {
        self.weights[v]
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Total weight `w(f)`.
    pub fn weight(&self) -> usize {
        self.weights.iter().sum()
    }

    /// `|V_i|`, the number of vertices with weight exactly `i`.
    pub fn class_size(&self, i: usize) -> usize {
        self.weights.iter().filter(|&&w| w == i).count()
    }

    /// Copy with one weight replaced.
    pub fn with_weight(&self, v: usize, weight: usize) -> Result<WeightFunction, LabelingError> {
        let mut weights = self.weights.clone();
        weights[v] = weight;
        WeightFunction::new(self.k, weights)
    }

    /// Parses the weight-function file format: first line `k`, second line
    /// `n` whitespace-separated integers in graph vertex order.
    pub fn parse(text: &str) -> Result<WeightFunction, LabelingError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (kline_no, kline) = lines.next().ok_or(LabelingError::Parse {
            line: 1,
            message: "missing k line".into(),
        })?;
        let k: usize = kline.parse().map_err(|_| LabelingError::Parse {
            line: kline_no,
            message: format!("expected integer k, got {kline:?}"),
        })?;
        let (wline_no, wline) = lines.next().ok_or(LabelingError::Parse {
            line: kline_no + 1,
            message: "missing weights line".into(),
        })?;
        let mut weights = Vec::new();
        for tok in wline.split_whitespace() {
            let w: usize = tok.parse().map_err(|_| LabelingError::Parse {
                line: wline_no,
                message: format!("expected integer weight, got {tok:?}"),
            })?;
            weights.push(w);
        }
        WeightFunction::new(k, weights)
    }

    pub fn to_file_string(&self) -> String {
        let body: Vec<String> = self.weights.iter().map(usize::to_string).collect();
        format!("{}\n{}\n", self.k, body.join(" "))
    }
}

/// Outcome of a validity check: valid, or the smallest-index violating vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Violated { vertex: usize },
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

fn check_sizes(g: &Graph, f: &WeightFunction) -> Result<(), LabelingError> {
    if g.n() != f.n() {
        return Err(LabelingError::SizeMismatch {
            expected: g.n(),
            got: f.n(),
        });
    }
    Ok(())
}

/// Roman k-domination check. Scans vertices in index order and reports the
/// first violation, which keeps error messages deterministic.
pub fn krdf_verdict(g: &Graph, f: &WeightFunction) -> Result<Verdict, LabelingError> {
    check_sizes(g, f)?;
    let k = f.k();
    for u in g.vertices() {
        if 2 * f.get(u) < k {
            let closed: usize = f.get(u) + g.neighbors(u).iter().map(|&v| f.get(v)).sum::<usize>();
            if closed < k {
                return Ok(Verdict::Violated { vertex: u });
            }
        }
    }
    Ok(Verdict::Valid)
}

/// Strong Roman k-domination check: only strictly heavy open neighbors
/// (`2*f(v) > k`) count toward covering the demand.
pub fn srdf_verdict(g: &Graph, f: &WeightFunction) -> Result<Verdict, LabelingError> {
    check_sizes(g, f)?;
    let k = f.k();
    for u in g.vertices() {
        if 2 * f.get(u) < k {
            let heavy: usize = g
                .neighbors(u)
                .iter()
                .map(|&v| f.get(v))
                .filter(|&w| 2 * w > k)
                .sum();
            if f.get(u) + heavy < k {
                return Ok(Verdict::Violated { vertex: u });
            }
        }
    }
    Ok(Verdict::Valid)
}

pub fn verdict(g: &Graph, f: &WeightFunction, variant: Variant) -> Result<Verdict, LabelingError> {
    match variant {
        Variant::Rdf => krdf_verdict(g, f),
        Variant::Srdf => srdf_verdict(g, f),
    }
}

pub fn is_krdf(g: &Graph, f: &WeightFunction) -> Result<bool, LabelingError> {
    krdf_verdict(g, f).map(Verdict::is_valid)
}

pub fn is_ksrdf(g: &Graph, f: &WeightFunction) -> Result<bool, LabelingError> {
    srdf_verdict(g, f).map(Verdict::is_valid)
}
