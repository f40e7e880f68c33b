//! Construction of generalized Sierpinski graphs S(G,t).
//!
//! Vertices of S(G,t) are the length-t words over the base graph's
//! vertex set. Two words are adjacent iff there is a position i with
//! equal letters before i, distinct adjacent letters at i, and swapped
//! constant tails after i. Equivalently, every edge has the canonical
//! form {w x y..y, w y x..x} for a base edge {x,y} and a prefix w,
//! which is what both builders enumerate.

use crate::graph::BaseGraph;
use crate::word::{Word, WordError};
use std::fmt::Write as _;
use thiserror::Error;

/// Default cap on the number of vertices a build may materialize.
pub const DEFAULT_VERTEX_BUDGET: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("vertex budget exceeded: n^t > {limit} for n={n}, t={t}")]
    VertexBudget { n: usize, t: u32, limit: usize },
}

/// A materialized S(G,t): the flattened graph on word codes plus the
/// base graph and depth that produced it.
#[derive(Debug)]
pub struct SierpinskiGraph {
    base: BaseGraph,
    t: u32,
    graph: BaseGraph,
}

impl SierpinskiGraph {
    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn depth(&self) -> u32 {
        self.t
    }

    /// The flattened simple graph on vertex codes `0..n^t`.
    pub fn graph(&self) -> &BaseGraph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn size(&self) -> usize {
        self.graph.size()
    }

    pub fn word(&self, code: u64) -> Word {
        Word::from_code(code, self.base.order(), self.t)
    }

    pub fn code(&self, w: &Word) -> u64 {
        w.code(self.base.order())
    }

    /// The n constant words `x..x`.
    pub fn extreme_vertices(&self) -> Vec<Word> {
        (0..self.base.order() as u32)
            .map(|x| Word::constant(x, self.t))
            .collect()
    }

    /// Edge-list serialization: a `# sierpinski` comment header, then the
    /// same format as a base graph on the word codes.
    pub fn to_edge_list(&self) -> String {
        format!(
            "# sierpinski base_n={} t={}\n{}",
            self.base.order(),
            self.t,
            self.graph.to_edge_list()
        )
    }

    /// DOT serialization with word labels ("132" style).
    pub fn to_dot(&self, one_indexed: bool) -> String {
        let mut out = String::from("graph {\n");
        for code in 0..self.order() as u64 {
            let _ = writeln!(out, "  \"{}\";", self.word(code).display(one_indexed));
        }
        for &(u, v) in self.graph.edges() {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                self.word(u as u64).display(one_indexed),
                self.word(v as u64).display(one_indexed)
            );
        }
        out.push_str("}\n");
        out
    }
}

/// The paper's adjacency predicate on equal-length words: some position
/// has equal letters before it, distinct base-adjacent letters at it,
/// and swapped constant tails after it.
pub fn edge_rule(base: &BaseGraph, u: &Word, v: &Word) -> Result<bool, WordError> {
    if u.len() != v.len() {
        return Err(WordError::LengthMismatch(u.len(), v.len()));
    }
    let (us, vs) = (u.letters(), v.letters());
    let Some(i) = us.iter().zip(vs).position(|(a, b)| a != b) else {
        return Ok(false); // u = v
    };
    let (x, y) = (us[i], vs[i]);
    if !base.has_edge(x as usize, y as usize) {
        return Ok(false);
    }
    Ok(us[i + 1..].iter().all(|&l| l == y) && vs[i + 1..].iter().all(|&l| l == x))
}

/// Neighbors of `u` in S(G,t) computed from the edge rule alone, without
/// materializing the graph. Ascending code order.
pub fn implicit_neighbors(base: &BaseGraph, u: &Word) -> Vec<Word> {
    let t = u.len();
    let us = u.letters();
    let mut out = Vec::new();
    // Cross-copy edge: u = w x y^k with {x,y} in E gives partner w y x^k.
    let mut k = 1;
    while k < t && us[t - 1 - k] == us[t - 1] {
        k += 1;
    }
    if k < t {
        let (x, y) = (us[t - 1 - k], us[t - 1]);
        if base.has_edge(x as usize, y as usize) {
            let mut letters = us.to_vec();
            letters[t - 1 - k] = y;
            for l in &mut letters[t - k..] {
                *l = x;
            }
            out.push(Word::new(letters, base.order()).expect("letters from a valid word"));
        }
    }
    // In-copy edges: replace the last letter by a base neighbor.
    for &z in base.neighbors(us[t - 1] as usize) {
        let mut letters = us.to_vec();
        letters[t - 1] = z;
        out.push(Word::new(letters, base.order()).expect("letters from a valid word"));
    }
    out.sort_unstable();
    out
}

fn check_budget(base: &BaseGraph, t: u32, limit: usize) -> Result<usize, BuildError> {
    if t == 0 {
        return Err(BuildError::ZeroDepth);
    }
    let n = base.order();
    // Codes are stored as u32, so the hard ceiling is u32::MAX vertices.
    let cap = limit.min(u32::MAX as usize);
    let mut order: u128 = 1;
    for _ in 0..t {
        order = order.saturating_mul(n as u128);
        if order > cap as u128 {
            return Err(BuildError::VertexBudget { n, t, limit });
        }
    }
    Ok(order as usize)
}

/// Code of the constant word `y^k` over an alphabet of size n, i.e.
/// y * (n^k - 1) / (n - 1).
fn constant_code(y: u32, k: u32, n: u64) -> u64 {
    let mut acc = 0u64;
    for _ in 0..k {
        acc = acc * n + y as u64;
    }
    acc
}

/// Builds S(G,t) by enumerating every edge in its canonical
/// (prefix, base edge, tail length) form.
pub fn build_direct(base: &BaseGraph, t: u32, limit: usize) -> Result<SierpinskiGraph, BuildError> {
    let order = check_budget(base, t, limit)?;
    let n = base.order() as u64;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    // Tail length s: u = w x y^s, v = w y x^s with |w| = t - s - 1.
    for s in 0..t {
        let prefixes = (order as u64) / n.pow(s + 1);
        for p in 0..prefixes {
            let head = p * n.pow(s + 1);
            for &(x, y) in base.edges() {
                let a = head + (x as u64) * n.pow(s) + constant_code(y, s, n);
                let b = head + (y as u64) * n.pow(s) + constant_code(x, s, n);
                edges.push((a.min(b) as u32, a.max(b) as u32));
            }
        }
    }
    let graph = BaseGraph::new(order, edges).expect("canonical enumeration yields a simple graph");
    Ok(SierpinskiGraph { base: base.clone(), t, graph })
}

/// Builds S(G,t) by the recursive process: n shifted copies of
/// S(G,t-1) plus one linking edge per base edge.
pub fn build_recursive(base: &BaseGraph, t: u32, limit: usize) -> Result<SierpinskiGraph, BuildError> {
    check_budget(base, t, limit)?;
    let n = base.order() as u64;
    let mut edges: Vec<(u64, u64)> = base
        .edges()
        .iter()
        .map(|&(u, v)| (u as u64, v as u64))
        .collect();
    for level in 2..=t {
        let shift = n.pow(level - 1);
        let mut next = Vec::with_capacity(edges.len() * n as usize + base.size());
        for x in 0..n {
            next.extend(edges.iter().map(|&(a, b)| (x * shift + a, x * shift + b)));
        }
        for &(x, y) in base.edges() {
            // x y..y -- y x..x
            let a = (x as u64) * shift + constant_code(y, level - 1, n);
            let b = (y as u64) * shift + constant_code(x, level - 1, n);
            next.push((a.min(b), a.max(b)));
        }
        edges = next;
    }
    let order = n.pow(t) as usize;
    let graph = BaseGraph::new(order, edges.into_iter().map(|(a, b)| (a as u32, b as u32)))
        .expect("recursive construction yields a simple graph");
    Ok(SierpinskiGraph { base: base.clone(), t, graph })
}

/// The unique vertex of the copy `V_w` of the form `w' x x .. x`:
/// `w` followed by its own last letter.
pub fn copy_extreme(w: &Word) -> Word {
    w.append(w.last())
}
