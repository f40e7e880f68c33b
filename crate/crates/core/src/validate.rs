//! Direct-from-definition witness validators, kept independent of the
//! solvers whose outputs they check.

use crate::bitset::VertexSet;
use crate::graph::BaseGraph;

/// Every edge gets two distinct colors and every vertex has a color.
pub fn is_proper_coloring(g: &BaseGraph, colors: &[u32]) -> bool {
    colors.len() == g.order()
        && colors.iter().all(|&c| c >= 1)
        && g.edges().iter().all(|&(u, v)| colors[u as usize] != colors[v as usize])
}

/// All pairs of members are adjacent.
pub fn is_clique(g: &BaseGraph, s: &VertexSet) -> bool {
    let members = s.to_vec();
    members
        .iter()
        .enumerate()
        .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Every edge has an endpoint in the set.
pub fn is_vertex_cover(g: &BaseGraph, s: &VertexSet) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| s.contains(u as usize) || s.contains(v as usize))
}

/// No two members are adjacent.
pub fn is_independent_set(g: &BaseGraph, s: &VertexSet) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| !(s.contains(u as usize) && s.contains(v as usize)))
}

/// Every vertex outside the set has a neighbor inside it.
pub fn is_dominating_set(g: &BaseGraph, s: &VertexSet) -> bool {
    g.vertices()
        .all(|v| s.contains(v) || g.neighbors(v).iter().any(|&w| s.contains(w as usize)))
}
