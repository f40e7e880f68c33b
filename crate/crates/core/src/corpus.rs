//! Graph families for verification campaigns: standard generators plus
//! isomorph-free exhaustive enumeration of small connected graphs and
//! trees by orderly augmentation.

use crate::graph::BaseGraph;

/// Largest order the canonical-form machinery accepts (the upper
/// triangle of the adjacency matrix must fit in a u64 key).
pub const MAX_ENUM_ORDER: usize = 11;

/// Path on n vertices, edges i - i+1.
pub fn path(n: usize) -> BaseGraph {
    BaseGraph::new(n, (1..n as u32).map(|v| (v - 1, v))).expect("valid path")
}

/// Cycle on n >= 3 vertices.
pub fn cycle(n: usize) -> BaseGraph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let edges = (1..n as u32).map(|v| (v - 1, v)).chain([(0, n as u32 - 1)]);
    BaseGraph::new(n, edges).expect("valid cycle")
}

/// Complete graph on n vertices.
pub fn complete(n: usize) -> BaseGraph {
    let edges = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
    BaseGraph::new(n, edges).expect("valid complete graph")
}

/// Star K_{1,r}: center 0 with r leaves.
pub fn star(r: usize) -> BaseGraph {
    BaseGraph::new(r + 1, (1..=r as u32).map(|v| (0, v))).expect("valid star")
}

/// Canonical key for isomorphism classes of graphs with at most
/// [`MAX_ENUM_ORDER`] vertices: the minimum upper-triangle bit pattern
/// over all vertex relabelings.
pub fn canonical_key(g: &BaseGraph) -> u64 {
    let n = g.order();
    assert!(n <= MAX_ENUM_ORDER, "canonical_key supports n <= {MAX_ENUM_ORDER}");
    let mut rows = vec![0u16; n];
    for &(u, v) in g.edges() {
        rows[u as usize] |= 1 << v;
        rows[v as usize] |= 1 << u;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut key = 0u64;
        let mut bit = 0;
        for i in 0..n {
            let row = rows[p[i]];
            for &pj in &p[i + 1..] {
                key |= u64::from(row >> pj & 1) << bit;
                bit += 1;
            }
        }
        best = best.min(key);
    });
    best
}

fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn from_key(n: usize, key: u64) -> BaseGraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            if key >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    BaseGraph::new(n, edges).expect("key encodes a simple graph")
}

/// All connected graphs on exactly `n` vertices, one per isomorphism
/// class, in ascending canonical-key order.
///
/// Augmentation: every connected graph arises from a connected graph on
/// one fewer vertex by attaching a new vertex to a nonempty subset of
/// the old ones (delete a spanning-tree leaf to see the converse).
pub fn connected_graphs(n: usize) -> Vec<BaseGraph> {
    assert!((1..=MAX_ENUM_ORDER).contains(&n));
    let mut level: Vec<u64> = vec![canonical_key(&path(1))];
    for k in 2..=n {
        let mut next: Vec<u64> = Vec::new();
        for &key in &level {
            let g = from_key(k - 1, key);
            for subset in 1u32..(1 << (k - 1)) {
                let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
                for v in 0..k as u32 - 1 {
                    if subset >> v & 1 == 1 {
                        edges.push((v, k as u32 - 1));
                    }
                }
                let h = BaseGraph::new(k, edges).expect("augmented graph is simple");
                next.push(canonical_key(&h));
            }
        }
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    level.into_iter().map(|key| from_key(n, key)).collect()
}

/// All connected graphs with `1..=max_n` vertices, each with a stable
/// display id such as `conn4-03`.
pub fn connected_corpus(max_n: usize) -> Vec<(String, BaseGraph)> {
    (1..=max_n)
        .flat_map(|n| {
            connected_graphs(n)
                .into_iter()
                .enumerate()
                .map(move |(i, g)| (format!("conn{n}-{i:02}"), g))
        })
        .collect()
}

/// All trees on exactly `n` vertices, one per isomorphism class, in
/// ascending canonical-key order. Augmentation attaches a single leaf.
pub fn trees(n: usize) -> Vec<BaseGraph> {
    assert!((1..=MAX_ENUM_ORDER).contains(&n));
    let mut level: Vec<u64> = vec![canonical_key(&path(1))];
    for k in 2..=n {
        let mut next: Vec<u64> = Vec::new();
        for &key in &level {
            let g = from_key(k - 1, key);
            for v in 0..k as u32 - 1 {
                let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
                edges.push((v, k as u32 - 1));
                let h = BaseGraph::new(k, edges).expect("leaf augmentation is simple");
                next.push(canonical_key(&h));
            }
        }
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    level.into_iter().map(|key| from_key(n, key)).collect()
}

/// All trees with `1..=max_n` vertices with stable display ids.
pub fn tree_corpus(max_n: usize) -> Vec<(String, BaseGraph)> {
    (1..=max_n)
        .flat_map(|n| {
            trees(n)
                .into_iter()
                .enumerate()
                .map(move |(i, g)| (format!("tree{n}-{i:02}"), g))
        })
        .collect()
}
