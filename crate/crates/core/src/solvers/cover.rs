//! Exact minimum vertex cover by branch and reduce, and maximum
//! independent set as its complement.

use super::{BitGraph, Search, SolverBudget, SolverError};
use crate::bitset::VertexSet;
use crate::graph::BaseGraph;

/// Exact vertex cover number with the lexicographically smallest
/// minimum cover as witness.
pub fn vertex_cover_number(g: &BaseGraph, budget: &SolverBudget) -> Result<(usize, VertexSet), SolverError> {
    let bg = BitGraph::build(g)?;
    let mut search = Search::new(budget);
    let none = VertexSet::empty(bg.n);
    let beta = min_cover(&bg, &mut search, &none, &none, None)?
        .expect("a cover always exists without exclusions")
        .count();

    let witness = lex_min_cover(&bg, &mut search, beta)?;
    Ok((beta, witness))
}

/// Exact independence number via the Gallai complement: alpha = n - beta.
/// The witness is the lexicographically smallest maximum independent set.
pub fn independence_number(g: &BaseGraph, budget: &SolverBudget) -> Result<(usize, VertexSet), SolverError> {
    let bg = BitGraph::build(g)?;
    let mut search = Search::new(budget);
    let none = VertexSet::empty(bg.n);
    let beta = min_cover(&bg, &mut search, &none, &none, None)?
        .expect("a cover always exists without exclusions")
        .count();
    let alpha = bg.n - beta;

    // Lex-min independent prefix: v joins the set iff some cover of size
    // beta avoids the chosen vertices and contains the rejected ones.
    let mut chosen = VertexSet::empty(bg.n);
    let mut rejected = VertexSet::empty(bg.n);
    for v in 0..bg.n {
        if chosen.count() == alpha {
            break;
        }
        let mut out = chosen.clone();
        out.insert(v);
        if min_cover(&bg, &mut search, &rejected, &out, Some(beta))?.is_some() {
            chosen = out;
        } else {
            rejected.insert(v);
        }
    }
    debug_assert_eq!(chosen.count(), alpha);
    Ok((alpha, chosen))
}

fn lex_min_cover(bg: &BitGraph, search: &mut Search, beta: usize) -> Result<VertexSet, SolverError> {
    let mut chosen = VertexSet::empty(bg.n);
    let mut rejected = VertexSet::empty(bg.n);
    for v in 0..bg.n {
        if chosen.count() == beta {
            break;
        }
        let mut with_v = chosen.clone();
        with_v.insert(v);
        if min_cover(bg, search, &with_v, &rejected, Some(beta))?.is_some() {
            chosen = with_v;
        } else {
            rejected.insert(v);
        }
    }
    debug_assert_eq!(chosen.count(), beta);
    Ok(chosen)
}

/// Smallest vertex cover containing `forced_in` and avoiding
/// `forced_out`; with a `target`, any cover of size <= target, else
/// None. Optimization mode (target None) always returns Some.
pub(crate) fn min_cover(
    bg: &BitGraph,
    search: &mut Search,
    forced_in: &VertexSet,
    forced_out: &VertexSet,
    target: Option<usize>,
) -> Result<Option<VertexSet>, SolverError> {
    let mut active = VertexSet::full(bg.n);
    let mut picked: Vec<usize> = Vec::new();
    for v in forced_in.iter() {
        picked.push(v);
        active.remove(v);
    }
    // An excluded vertex forces all its still-active neighbors in; two
    // adjacent excluded vertices are infeasible.
    for r in forced_out.iter() {
        if !active.contains(r) {
            continue;
        }
        let nbrs = bg.rows[r].intersection(&active);
        if nbrs.intersects(forced_out) {
            return Ok(None);
        }
        for w in nbrs.iter() {
            picked.push(w);
            active.remove(w);
        }
        active.remove(r);
    }
    if let Some(t) = target {
        if picked.len() > t {
            return Ok(None);
        }
    }

    let mut ctx = Ctx {
        best_size: match target {
            Some(t) => t + 1,
            None => bg.n + 1,
        },
        best: None,
        stop_at: target,
        done: false,
    };
    recurse(bg, search, &mut ctx, active, &mut picked)?;
    Ok(ctx.best)
}

struct Ctx {
    best_size: usize,
    best: Option<VertexSet>,
    stop_at: Option<usize>,
    done: bool,
}

fn recurse(
    bg: &BitGraph,
    search: &mut Search,
    ctx: &mut Ctx,
    mut active: VertexSet,
    picked: &mut Vec<usize>,
) -> Result<(), SolverError> {
    search.tick()?;
    let mark = picked.len();

    // Reductions: isolated vertices drop out, a degree-1 vertex forces
    // its neighbor in, a degree-2 vertex in a triangle forces both
    // neighbors in.
    loop {
        if picked.len() >= ctx.best_size {
            picked.truncate(mark);
            return Ok(());
        }
        let mut step = None;
        for v in active.iter() {
            let nbrs = bg.rows[v].intersection(&active);
            match nbrs.count() {
                0 => {
                    step = Some((v, None));
                    break;
                }
                1 => {
                    let u = nbrs.first().expect("degree 1");
                    step = Some((v, Some((u, None))));
                    break;
                }
                2 => {
                    let mut it = nbrs.iter();
                    let (a, b) = (it.next().unwrap(), it.next().unwrap());
                    if bg.rows[a].contains(b) {
                        step = Some((v, Some((a, Some(b)))));
                        break;
                    }
                }
                _ => {}
            }
        }
        match step {
            Some((v, take)) => {
                active.remove(v);
                if let Some((a, more)) = take {
                    picked.push(a);
                    active.remove(a);
                    if let Some(b) = more {
                        picked.push(b);
                        active.remove(b);
                    }
                }
            }
            None => break,
        }
    }

    if active.is_empty() {
        if picked.len() < ctx.best_size {
            ctx.best_size = picked.len();
            ctx.best = Some(VertexSet::from_iter(bg.n, picked.iter().copied()));
            if ctx.stop_at.is_some_and(|t| ctx.best_size <= t) {
                ctx.done = true;
            }
        }
        picked.truncate(mark);
        return Ok(());
    }

    if picked.len() + clique_cover_lb(bg, &active) >= ctx.best_size {
        picked.truncate(mark);
        return Ok(());
    }

    // Branch on a maximum-degree vertex: first exclude it (all
    // neighbors in), then include it.
    let v = active
        .iter()
        .max_by_key(|&v| (bg.rows[v].intersection(&active).count(), std::cmp::Reverse(v)))
        .expect("active is non-empty");
    let nbrs = bg.rows[v].intersection(&active);

    let before = picked.len();
    picked.extend(nbrs.iter());
    let mut rest = active.difference(&nbrs);
    rest.remove(v);
    recurse(bg, search, ctx, rest, picked)?;
    picked.truncate(before);
    if ctx.done {
        picked.truncate(mark);
        return Ok(());
    }

    picked.push(v);
    let mut rest = active.clone();
    rest.remove(v);
    recurse(bg, search, ctx, rest, picked)?;
    picked.truncate(mark);
    Ok(())
}

/// Disjoint greedy clique cover of the active subgraph: a clique on q
/// vertices forces q-1 of them into any cover.
fn clique_cover_lb(bg: &BitGraph, active: &VertexSet) -> usize {
    let mut unused = active.clone();
    let mut lb = 0;
    while let Some(v) = unused.first() {
        unused.remove(v);
        let mut pool = bg.rows[v].intersection(&unused);
        let mut size = 1;
        while let Some(u) = pool.first() {
            unused.remove(u);
            size += 1;
            pool.remove(u);
            pool = pool.intersection(&bg.rows[u]);
        }
        lb += size - 1;
    }
    lb
}
