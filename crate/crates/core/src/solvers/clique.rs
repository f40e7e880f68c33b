//! Exact maximum clique via Bron-Kerbosch branch and bound with
//! pivoting.

use super::{BitGraph, Search, SolverBudget, SolverError};
use crate::bitset::VertexSet;
use crate::graph::BaseGraph;

/// Exact clique number with the lexicographically smallest maximum
/// clique as witness.
pub fn clique_number(g: &BaseGraph, budget: &SolverBudget) -> Result<(usize, VertexSet), SolverError> {
    let bg = BitGraph::build(g)?;
    let mut search = Search::new(budget);
    let omega = max_clique(&bg, &mut search)?.count();
    let all = VertexSet::full(bg.n);

    // Lexicographically smallest maximum clique: grow the sorted prefix
    // greedily, testing extendability with an early-exit search.
    let mut chosen = VertexSet::empty(bg.n);
    let mut allowed = all;
    for v in 0..bg.n {
        if chosen.count() == omega {
            break;
        }
        if !allowed.contains(v) {
            continue;
        }
        let mut with_v = chosen.clone();
        with_v.insert(v);
        // Candidates must extend the prefix and keep the list sorted.
        let mut cands = allowed.intersection(&bg.rows[v]);
        for w in 0..=v {
            if cands.contains(w) {
                cands.remove(w);
            }
        }
        if with_v.count() + cands.count() >= omega
            && extends_to(&bg, &mut search, &with_v, cands, omega)?
        {
            chosen = with_v;
            allowed = allowed.intersection(&bg.rows[v]);
        } else {
            allowed.remove(v);
        }
    }
    debug_assert_eq!(chosen.count(), omega);
    Ok((omega, chosen))
}

/// Some maximum clique, not necessarily the lexicographically smallest.
pub(crate) fn max_clique(bg: &BitGraph, search: &mut Search) -> Result<VertexSet, SolverError> {
    let mut best = VertexSet::empty(bg.n);
    expand(
        bg,
        search,
        &VertexSet::empty(bg.n),
        VertexSet::full(bg.n),
        VertexSet::empty(bg.n),
        &mut best,
        None,
    )?;
    Ok(best)
}

/// Bron-Kerbosch with pivoting. Keeps the largest clique seen; with
/// `target` set, stops as soon as a clique of that size exists.
fn expand(
    bg: &BitGraph,
    search: &mut Search,
    r: &VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    best: &mut VertexSet,
    target: Option<usize>,
) -> Result<bool, SolverError> {
    search.tick()?;
    let r_count = r.count();
    if let Some(t) = target {
        if r_count >= t {
            *best = r.clone();
            return Ok(true);
        }
    }
    if p.is_empty() {
        if x.is_empty() && r_count > best.count() {
            *best = r.clone();
        }
        return Ok(false);
    }
    if r_count + p.count() <= best.count() && target.is_none() {
        return Ok(false);
    }
    if let Some(t) = target {
        if r_count + p.count() < t {
            return Ok(false);
        }
    }
    // Pivot with the most neighbors in P.
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection(&bg.rows[u]).count())
        .expect("p is non-empty");
    let branch: Vec<usize> = p.difference(&bg.rows[pivot]).iter().collect();
    for v in branch {
        let mut r2 = r.clone();
        r2.insert(v);
        let p2 = p.intersection(&bg.rows[v]);
        let x2 = x.intersection(&bg.rows[v]);
        if expand(bg, search, &r2, p2, x2, best, target)? {
            return Ok(true);
        }
        p.remove(v);
        x.insert(v);
    }
    Ok(false)
}

/// Does some clique of size `target` contain all of `prefix` and
/// otherwise use only vertices from `cands`?
fn extends_to(
    bg: &BitGraph,
    search: &mut Search,
    prefix: &VertexSet,
    cands: VertexSet,
    target: usize,
) -> Result<bool, SolverError> {
    let mut scratch = VertexSet::empty(bg.n);
    expand(bg, search, prefix, cands, VertexSet::empty(bg.n), &mut scratch, Some(target))
}
