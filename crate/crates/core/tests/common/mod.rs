//! Naive enumeration oracles, independent of every solver code path:
//! plain subset scans and exhaustive color assignment over the full
//! search space. Only usable for small orders.
#![allow(dead_code)] // shared by several test binaries

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sierpinski_core::{BaseGraph, VertexSet};

pub const ORACLE_MAX_N: usize = 16;

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn is_clique_mask(g: &BaseGraph, mask: u32, n: usize) -> bool {
    let vs = members(mask, n);
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn is_cover_mask(g: &BaseGraph, mask: u32) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
}

fn is_independent_mask(g: &BaseGraph, mask: u32) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| !(mask >> u & 1 == 1 && mask >> v & 1 == 1))
}

fn is_dominating_mask(g: &BaseGraph, mask: u32) -> bool {
    (0..g.order()).all(|v| {
        mask >> v & 1 == 1 || g.neighbors(v).iter().any(|&w| mask >> w & 1 == 1)
    })
}

/// Smallest/largest subsets passing a predicate, with the
/// lexicographically smallest witness among the optima.
fn optimum_subset(
    g: &BaseGraph,
    accept: impl Fn(&BaseGraph, u32) -> bool,
    maximize: bool,
) -> (usize, Vec<usize>) {
    let n = g.order();
    assert!(n <= ORACLE_MAX_N);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0u32..1 << n {
        if !accept(g, mask) {
            continue;
        }
        let size = mask.count_ones() as usize;
        let vs = members(mask, n);
        let better = match &best {
            None => true,
            Some((s, w)) => {
                if maximize {
                    size > *s || (size == *s && vs < *w)
                } else {
                    size < *s || (size == *s && vs < *w)
                }
            }
        };
        if better {
            best = Some((size, vs));
        }
    }
    best.expect("some subset always qualifies")
}

pub fn clique_naive(g: &BaseGraph) -> (usize, Vec<usize>) {
    let n = g.order();
    optimum_subset(g, |g, m| is_clique_mask(g, m, n) && m != 0, true)
}

pub fn cover_naive(g: &BaseGraph) -> (usize, Vec<usize>) {
    optimum_subset(g, is_cover_mask, false)
}

pub fn independent_naive(g: &BaseGraph) -> (usize, Vec<usize>) {
    optimum_subset(g, is_independent_mask, true)
}

pub fn domination_naive(g: &BaseGraph) -> (usize, Vec<usize>) {
    optimum_subset(g, is_dominating_mask, false)
}

/// All minimum dominating sets, as sorted vertex lists in
/// lexicographic order.
pub fn gamma_family_naive(g: &BaseGraph) -> (usize, Vec<Vec<usize>>) {
    let n = g.order();
    assert!(n <= ORACLE_MAX_N);
    let gamma = domination_naive(g).0;
    let mut sets = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize == gamma && is_dominating_mask(g, mask) {
            sets.push(members(mask, n));
        }
    }
    sets.sort();
    (gamma, sets)
}

/// Largest subset of `d` whose induced subgraph has no isolated
/// vertex, by scanning every subset of `d`.
pub fn xi_subset_max_for(g: &BaseGraph, d: &[usize]) -> usize {
    let n = g.order();
    let d_mask: u32 = d.iter().map(|&v| 1 << v).sum();
    let mut best = 0;
    let mut sub = d_mask;
    loop {
        let vs = members(sub, n);
        let no_isolated = vs.iter().all(|&v| {
            g.neighbors(v).iter().any(|&w| sub >> w & 1 == 1)
        });
        if no_isolated {
            best = best.max(vs.len());
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & d_mask;
    }
    best
}

/// xi(G) by brute-force subset maximization over every gamma-set.
pub fn xi_naive(g: &BaseGraph) -> usize {
    let (_, family) = gamma_family_naive(g);
    family.iter().map(|d| xi_subset_max_for(g, d)).max().unwrap_or(0)
}

/// The shortcut for a fixed gamma-set: D minus its vertices isolated in
/// the subgraph induced by D.
pub fn xi_shortcut_for(g: &BaseGraph, d: &[usize]) -> usize {
    d.iter()
        .filter(|&&v| g.neighbors(v).iter().any(|&w| d.contains(&(w as usize))))
        .count()
}

/// The smallest k admitting a proper coloring, by exhaustive assignment
/// in vertex order; also returns the first (= lexicographically
/// smallest) proper coloring found at that k.
pub fn chromatic_naive(g: &BaseGraph) -> (usize, Vec<u32>) {
    let n = g.order();
    assert!(n <= ORACLE_MAX_N);
    for k in 1..=n {
        let mut colors = vec![0u32; n];
        if try_color(g, k as u32, 0, &mut colors) {
            return (k, colors);
        }
    }
    unreachable!("n colors always suffice")
}

fn try_color(g: &BaseGraph, k: u32, v: usize, colors: &mut Vec<u32>) -> bool {
    if v == g.order() {
        return true;
    }
    for c in 1..=k {
        let clash = g.neighbors(v).iter().any(|&w| (w as usize) < v && colors[w as usize] == c);
        if clash {
            continue;
        }
        colors[v] = c;
        if try_color(g, k, v + 1, colors) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

pub fn to_sorted(s: &VertexSet) -> Vec<usize> {
    s.to_vec()
}

pub fn vertex_set_of(g: &BaseGraph, vs: &[usize]) -> VertexSet {
    VertexSet::from_iter(g.order(), vs.iter().copied())
}

/// Deterministic sample of random graphs on 1..=8 vertices.
pub fn random_sample(count: usize, seed: u64) -> Vec<BaseGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.random_range(1..=8usize);
        let p: f64 = rng.random_range(0.05..0.95);
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        out.push(BaseGraph::new(n, edges).expect("random simple graph"));
    }
    out
}

/// The seven-vertex regression fixture: edges 0-2, 1-3, 2-3, 2-4, 3-4,
/// 4-5, 5-6.
pub fn seven_vertex_graph() -> BaseGraph {
    BaseGraph::parse_edge_list("7 7\n0 2\n1 3\n2 3\n2 4\n3 4\n4 5\n5 6").unwrap()
}
