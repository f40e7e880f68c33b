//! The closed-formula layer: exact evaluations of the order/size, leaf
//! count, cover/independence, and domination-bound formulas, the
//! constructive witnesses behind them, and the certificates tying the
//! domination bound to its equality conditions.
//!
//! All arithmetic is exact in unbounded integers; exactness of every
//! division is asserted, never assumed.

use crate::bitset::VertexSet;
use crate::graph::BaseGraph;
use crate::sierpinski::{build_direct, BuildError};
use crate::solvers::{
    domination_number, enumerate_gamma_sets, vertex_cover_number, xi_with_witness, SolverBudget,
    SolverError,
};
use crate::validate::{is_dominating_set, is_proper_coloring, is_vertex_cover};
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("input graph is not a tree")]
    NotATree,
    #[error("depth {t} below minimum {min} for this formula")]
    DepthTooSmall { t: u32, min: u32 },
    #[error("input coloring is not a proper coloring of the base graph")]
    ImproperColoring,
    #[error("input set is not a vertex cover of the base graph")]
    NotACover,
    #[error("input set does not dominate the base graph")]
    NotDominating,
    #[error("D' is not a subset of D")]
    WitnessSubset,
    #[error("the subgraph induced by D' has an isolated vertex")]
    WitnessIsolated,
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Resource limits for certificate checks that build and solve S(G,t).
#[derive(Clone, Debug)]
pub struct Limits {
    pub budget: SolverBudget,
    /// Largest S(G,t) order that will be materialized.
    pub build_vertices: usize,
    /// Largest S(G,t) order handed to the exact solvers.
    pub solve_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            budget: SolverBudget::default(),
            build_vertices: crate::sierpinski::DEFAULT_VERTEX_BUDGET,
            solve_vertices: 200,
        }
    }
}

fn pow(n: u64, t: u32) -> BigUint {
    BigUint::from(n).pow(t)
}

/// Order and size of S(G,t): (n^t, m (n^t - 1) / (n - 1)); a single
/// vertex has size 0.
pub fn order_size_formula(n: u64, m: u64, t: u32) -> (BigUint, BigUint) {
    assert!(n >= 1 && t >= 1, "formula requires n >= 1 and t >= 1");
    let order = pow(n, t);
    if n == 1 {
        return (order, BigUint::from(0u32));
    }
    let numer = BigUint::from(m) * (&order - 1u32);
    let denom = BigUint::from(n - 1);
    let size = &numer / &denom;
    assert!(&size * &denom == numer, "size formula must divide exactly");
    (order, size)
}

/// Number of leaves of S(T,t) for a tree T:
/// eps(T) (n^t - 2 n^(t-1) + 1) / (n - 1).
pub fn leaf_count_formula(tree: &BaseGraph, t: u32) -> Result<BigUint, InvariantError> {
    if !tree.is_tree() {
        return Err(InvariantError::NotATree);
    }
    assert!(t >= 1, "formula requires t >= 1");
    let n = tree.order() as u64;
    if n == 1 {
        return Ok(BigUint::from(0u32));
    }
    let eps = tree.leaves().count() as u64;
    // n^t - 2 n^(t-1) + 1 = n^(t-1) (n - 2) + 1, nonnegative for n >= 2.
    let inner = pow(n, t - 1) * (n - 2) + 1u32;
    let numer = BigUint::from(eps) * inner;
    let denom = BigUint::from(n - 1);
    let count = &numer / &denom;
    assert!(&count * &denom == numer, "leaf formula must divide exactly");
    Ok(count)
}

/// beta(S(G,t)) = n^(t-1) beta(G).
pub fn beta_formula(n: u64, t: u32, beta: u64) -> BigUint {
    assert!(n >= 1 && t >= 1);
    pow(n, t - 1) * beta
}

/// alpha(S(G,t)) = n^(t-1) alpha(G).
pub fn alpha_formula(n: u64, t: u32, alpha: u64) -> BigUint {
    assert!(n >= 1 && t >= 1);
    pow(n, t - 1) * alpha
}

/// The domination upper bound n^(t-2) (n gamma(G) - xi(G)), defined for
/// t >= 2.
pub fn domination_upper_bound(n: u64, t: u32, gamma: u64, xi: u64) -> Result<BigUint, InvariantError> {
    if t < 2 {
        return Err(InvariantError::DepthTooSmall { t, min: 2 });
    }
    assert!(xi <= gamma, "xi never exceeds gamma");
    Ok(pow(n, t - 2) * (BigUint::from(n) * gamma - xi))
}

fn checked_order(n: usize, t: u32, limit: usize) -> Result<usize, InvariantError> {
    let mut order: u128 = 1;
    for _ in 0..t {
        order = order.saturating_mul(n as u128);
        if order > limit as u128 {
            return Err(BuildError::VertexBudget { n, t, limit }.into());
        }
    }
    Ok(order as usize)
}

/// Lifts a proper coloring f of the base graph to S(G,t) by coloring
/// each word with the color of its last letter.
pub fn lift_coloring(
    base: &BaseGraph,
    f: &[u32],
    t: u32,
    limit: usize,
) -> Result<Vec<u32>, InvariantError> {
    if !is_proper_coloring(base, f) {
        return Err(InvariantError::ImproperColoring);
    }
    assert!(t >= 1);
    let n = base.order();
    let order = checked_order(n, t, limit)?;
    Ok((0..order).map(|code| f[code % n]).collect())
}

/// Lifts a vertex cover C of the base graph to the cover
/// C' = { wv : v in C, w in V^(t-1) } of S(G,t).
pub fn lift_cover(
    base: &BaseGraph,
    cover: &VertexSet,
    t: u32,
    limit: usize,
) -> Result<VertexSet, InvariantError> {
    if !is_vertex_cover(base, cover) {
        return Err(InvariantError::NotACover);
    }
    assert!(t >= 1);
    let n = base.order();
    let order = checked_order(n, t, limit)?;
    let mut lifted = VertexSet::empty(order);
    for code in 0..order {
        if cover.contains(code % n) {
            lifted.insert(code);
        }
    }
    debug_assert_eq!(
        BigUint::from(lifted.count() as u64),
        pow(n as u64, t - 1) * cover.count() as u64
    );
    Ok(lifted)
}

/// The constructed dominating set D* = D_(t-1) - D_(t-2) of S(G,t),
/// where D_(t-1) lifts the dominating set D to all words ending in D
/// and D_(t-2) removes the words ending in a repeated letter of D'.
///
/// Requires D dominating, D' a subset of D whose induced subgraph has
/// no isolated vertices, and t >= 2.
pub fn domination_witness(
    base: &BaseGraph,
    d: &VertexSet,
    d_prime: &VertexSet,
    t: u32,
    limit: usize,
) -> Result<VertexSet, InvariantError> {
    if t < 2 {
        return Err(InvariantError::DepthTooSmall { t, min: 2 });
    }
    if !is_dominating_set(base, d) {
        return Err(InvariantError::NotDominating);
    }
    if !d_prime.is_subset_of(d) {
        return Err(InvariantError::WitnessSubset);
    }
    if !d_prime.is_empty() && base.induced_isolated_count(d_prime) > 0 {
        return Err(InvariantError::WitnessIsolated);
    }
    let n = base.order();
    let order = checked_order(n, t, limit)?;
    let mut star = VertexSet::empty(order);
    for code in 0..order {
        let last = code % n;
        if !d.contains(last) {
            continue;
        }
        let second_last = code / n % n;
        if second_last == last && d_prime.contains(last) {
            continue; // member of D_(t-2)
        }
        star.insert(code);
    }
    debug_assert_eq!(
        BigUint::from(star.count() as u64),
        pow(n as u64, t - 1) * d.count() as u64 - pow(n as u64, t - 2) * d_prime.count() as u64
    );
    Ok(star)
}

/// Outcome of a certificate check against an exact solve of S(G,t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertStatus {
    /// The hypotheses (unique gamma-set and gamma = beta) fail.
    NotApplicable,
    /// Exact gamma(S(G,t)) equals the bound.
    EqualityConfirmed,
    /// Exact gamma(S(G,t)) differs from the claimed equality value.
    EqualityRefuted,
    /// Witness validated, bound holds; exact value out of solve limits.
    BoundHolds,
    /// Instance too large to build or solve within limits.
    Untested,
}

/// Result of checking the domination equality under its hypotheses.
#[derive(Clone, Debug)]
pub struct EqualityCertificate {
    pub gamma: usize,
    pub beta: usize,
    pub xi: usize,
    pub unique_gamma_set: bool,
    pub bound: BigUint,
    pub exact: Option<usize>,
    pub witness_valid: Option<bool>,
    pub status: CertStatus,
}

/// Checks whether a graph satisfies the equality hypotheses (unique
/// gamma-set and gamma = beta) and, when it does, verifies
/// gamma(S(G,t)) = n^(t-2) (n gamma - xi) as far as the limits allow.
pub fn equality_certificate(
    g: &BaseGraph,
    t: u32,
    limits: &Limits,
) -> Result<EqualityCertificate, InvariantError> {
    if t < 2 {
        return Err(InvariantError::DepthTooSmall { t, min: 2 });
    }
    let family = enumerate_gamma_sets(g, &limits.budget)?;
    let (beta, _) = vertex_cover_number(g, &limits.budget)?;
    let cert = xi_with_witness(g, &limits.budget)?;
    let n = g.order() as u64;
    let unique = family.sets.len() == 1;
    let bound = domination_upper_bound(n, t, family.gamma as u64, cert.xi as u64)?;

    let mut out = EqualityCertificate {
        gamma: family.gamma,
        beta,
        xi: cert.xi,
        unique_gamma_set: unique,
        bound: bound.clone(),
        exact: None,
        witness_valid: None,
        status: CertStatus::NotApplicable,
    };
    if !(unique && family.gamma == beta) {
        return Ok(out);
    }

    let Ok(sg) = build_direct(g, t, limits.build_vertices) else {
        out.status = CertStatus::Untested;
        return Ok(out);
    };
    let star = domination_witness(g, &cert.d, &cert.d_prime, t, limits.build_vertices)?;
    let witness_ok = is_dominating_set(sg.graph(), &star)
        && BigUint::from(star.count() as u64) == bound;
    out.witness_valid = Some(witness_ok);

    if sg.order() <= limits.solve_vertices {
        match domination_number(sg.graph(), &limits.budget) {
            Ok((gamma_s, _)) => {
                out.exact = Some(gamma_s);
                out.status = if BigUint::from(gamma_s as u64) == bound {
                    CertStatus::EqualityConfirmed
                } else {
                    CertStatus::EqualityRefuted
                };
                return Ok(out);
            }
            Err(SolverError::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    out.status = if witness_ok { CertStatus::BoundHolds } else { CertStatus::EqualityRefuted };
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceOutcome {
    /// gamma = beta fails, so the theorem says nothing.
    NotApplicable,
    /// (a) and (b) agree, as the equivalence demands.
    Match,
    /// (a) and (b) disagree: a counterexample.
    Mismatch,
    /// Exact solve of S(G,t) was out of limits.
    Untested,
}

/// Result of checking the t >= 3 equivalence between
/// (a) gamma(S(G,t)) = n^(t-1) gamma(G) and
/// (b) xi(G) = 0 with a unique gamma-set, under gamma(G) = beta(G).
#[derive(Clone, Debug)]
pub struct EquivalenceVerdict {
    pub gamma: usize,
    pub beta: usize,
    pub xi: usize,
    pub unique_gamma_set: bool,
    pub lift_value: BigUint,
    pub gamma_s: Option<usize>,
    pub outcome: EquivalenceOutcome,
}

pub fn equivalence_check(
    g: &BaseGraph,
    t: u32,
    limits: &Limits,
) -> Result<EquivalenceVerdict, InvariantError> {
    if t < 3 {
        return Err(InvariantError::DepthTooSmall { t, min: 3 });
    }
    let family = enumerate_gamma_sets(g, &limits.budget)?;
    let (beta, _) = vertex_cover_number(g, &limits.budget)?;
    let cert = xi_with_witness(g, &limits.budget)?;
    let n = g.order() as u64;
    let unique = family.sets.len() == 1;
    let lift_value = pow(n, t - 1) * family.gamma as u64;

    let mut verdict = EquivalenceVerdict {
        gamma: family.gamma,
        beta,
        xi: cert.xi,
        unique_gamma_set: unique,
        lift_value: lift_value.clone(),
        gamma_s: None,
        outcome: EquivalenceOutcome::NotApplicable,
    };
    if family.gamma != beta {
        return Ok(verdict);
    }

    let solvable = checked_order(g.order(), t, limits.solve_vertices.min(limits.build_vertices));
    let Ok(_) = solvable else {
        verdict.outcome = EquivalenceOutcome::Untested;
        return Ok(verdict);
    };
    let sg = build_direct(g, t, limits.build_vertices)?;
    match domination_number(sg.graph(), &limits.budget) {
        Ok((gamma_s, _)) => {
            verdict.gamma_s = Some(gamma_s);
            let a = BigUint::from(gamma_s as u64) == lift_value;
            let b = cert.xi == 0 && unique;
            verdict.outcome = if a == b {
                EquivalenceOutcome::Match
            } else {
                EquivalenceOutcome::Mismatch
            };
        }
        Err(SolverError::BudgetExceeded { .. }) => {
            verdict.outcome = EquivalenceOutcome::Untested;
        }
        Err(e) => return Err(e.into()),
    }
    Ok(verdict)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaOutcome {
    NotApplicable,
    /// Every vertex of the unique gamma-set has at least two degree-one
    /// neighbors.
    Holds,
    /// Counterexample vertex with fewer than two degree-one neighbors.
    Fails { vertex: usize },
}

/// Under gamma = beta and a unique gamma-set D, every x in D must have
/// at least two degree-one neighbors.
pub fn support_leaf_lemma_check(
    g: &BaseGraph,
    limits: &Limits,
) -> Result<LemmaOutcome, InvariantError> {
    let family = enumerate_gamma_sets(g, &limits.budget)?;
    let (beta, _) = vertex_cover_number(g, &limits.budget)?;
    if family.gamma != beta || family.sets.len() != 1 {
        return Ok(LemmaOutcome::NotApplicable);
    }
    let d = &family.sets[0];
    let leaves = g.leaves();
    for x in d.iter() {
        let leaf_neighbors = g
            .neighbors(x)
            .iter()
            .filter(|&&w| leaves.contains(w as usize))
            .count();
        if leaf_neighbors < 2 {
            return Ok(LemmaOutcome::Fails { vertex: x });
        }
    }
    Ok(LemmaOutcome::Holds)
}
