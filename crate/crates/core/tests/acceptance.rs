//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test -- --nocapture`).

mod common;

use num_bigint::BigUint;
use sierpinski_core::formulas::{
    self, alpha_formula, beta_formula, domination_upper_bound, domination_witness,
    leaf_count_formula, order_size_formula, EquivalenceOutcome, Limits,
};
use sierpinski_core::solvers::SolverBudget;
use sierpinski_core::validate::is_dominating_set;
use sierpinski_core::verify::{run, CheckParam, CheckStatus, CorpusSpec, Family};
use sierpinski_core::{
    build_direct, build_recursive, chromatic_number, clique_number, corpus, domination_number,
    enumerate_gamma_sets, has_unique_gamma_set, independence_number, vertex_cover_number,
    xi_with_witness, BaseGraph, DEFAULT_VERTEX_BUDGET,
};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn budget() -> SolverBudget {
    SolverBudget::default()
}

fn limits(solve_vertices: usize) -> Limits {
    Limits {
        budget: budget(),
        build_vertices: DEFAULT_VERTEX_BUDGET,
        solve_vertices,
    }
}

fn report_clean(name: &str, spec: &CorpusSpec, expected_checks: usize) {
    let report = run(spec);
    assert_eq!(
        report.records.len(),
        expected_checks,
        "{name}: scheduled checks changed\n{}",
        report.to_table()
    );
    assert_eq!(report.mismatches(), 0, "{name}: FAIL\n{}", report.to_table());
    assert_eq!(
        report.count(CheckStatus::Untested),
        0,
        "{name}: untested checks\n{}",
        report.to_table()
    );
    println!("{name}: PASS ({} checks)", report.records.len());
}

#[test]
fn criterion_01_construction_equivalence() {
    let corpus = corpus::connected_corpus(5);
    assert_eq!(corpus.len(), 31, "corpus counts 1+1+2+6+21");
    let spec = CorpusSpec {
        family: Family::AllConnected { max_n: 5 },
        t_min: 1,
        t_max: 3,
        params: vec![CheckParam::Construction],
        limits: limits(0),
    };
    report_clean("criterion 01 construction-equivalence", &spec, 31 * 3);
}

#[test]
fn criterion_02_order_size_formula() {
    let spec = CorpusSpec {
        family: Family::AllConnected { max_n: 5 },
        t_min: 1,
        t_max: 4,
        params: vec![CheckParam::OrderSize],
        limits: limits(0),
    };
    report_clean("criterion 02 order-size", &spec, 31 * 4);
}

#[test]
fn criterion_03_tree_leaf_formula() {
    let trees = corpus::tree_corpus(7);
    assert_eq!(trees.len(), 25, "tree counts 1+1+1+2+3+6+11");
    let spec = CorpusSpec {
        family: Family::Trees { max_n: 7 },
        t_min: 1,
        t_max: 4,
        params: vec![CheckParam::Leaves],
        limits: limits(0),
    };
    report_clean("criterion 03 tree-leaves", &spec, 25 * 4);
}

#[test]
fn criterion_04_chromatic_and_clique() {
    let spec = CorpusSpec {
        family: Family::AllConnected { max_n: 5 },
        t_min: 1,
        t_max: 3,
        params: vec![CheckParam::Chi, CheckParam::Omega],
        limits: limits(125),
    };
    report_clean("criterion 04 chi-omega", &spec, 31 * 3 * 2);
}

#[test]
fn criterion_05_cover_and_independence() {
    let spec = CorpusSpec {
        family: Family::AllConnected { max_n: 5 },
        t_min: 1,
        t_max: 3,
        params: vec![CheckParam::Beta, CheckParam::Alpha],
        limits: limits(125),
    };
    report_clean("criterion 05 beta-alpha", &spec, 31 * 3 * 2);
}

#[test]
fn criterion_06_domination_bound_t2() {
    let spec = CorpusSpec {
        family: Family::AllConnected { max_n: 5 },
        t_min: 2,
        t_max: 2,
        params: vec![CheckParam::Gamma],
        limits: limits(25),
    };
    let report = run(&spec);
    assert_eq!(report.records.len(), 31, "one gamma record per graph\n{}", report.to_table());
    assert_eq!(report.mismatches(), 0, "criterion 06: FAIL\n{}", report.to_table());
    for r in &report.records {
        assert_eq!(r.status, CheckStatus::Match, "criterion 06: {} not exact", r.graph);
        assert_eq!(r.witness, Some(true), "criterion 06: D* invalid on {}", r.graph);
    }
    println!("criterion 06 gamma-bound-t2: PASS ({} checks)", report.records.len());
}

#[test]
fn criterion_07_star_corollary() {
    let lim = limits(125);
    let mut failures = Vec::new();
    let mut checks = 0;

    // Exact grid: the corollary value must equal the exact solver.
    let exact_grid: Vec<(u64, u32)> =
        vec![(1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3)];
    for &(r, t) in &exact_grid {
        checks += 1;
        let g = corpus::star(r as usize);
        let claimed = big(r + 1).pow(t - 1);
        let sg = build_direct(&g, t, lim.build_vertices).expect("within budget");
        let (gamma_s, witness) = domination_number(sg.graph(), &lim.budget).expect("solvable");
        assert!(is_dominating_set(sg.graph(), &witness));
        if big(gamma_s as u64) != claimed {
            failures.push(format!(
                "K_1_{r} t={t}: claimed {claimed}, exact gamma(S)={gamma_s}"
            ));
        }
    }

    // Larger pairs: the constructed witness certifies the upper bound.
    for &(r, t) in &[(3u64, 3u32), (4, 3), (2, 4), (3, 4)] {
        checks += 1;
        let g = corpus::star(r as usize);
        let claimed = big(r + 1).pow(t - 1);
        let cert = xi_with_witness(&g, &lim.budget).expect("tiny base");
        let star = domination_witness(&g, &cert.d, &cert.d_prime, t, lim.build_vertices)
            .expect("preconditions hold");
        let sg = build_direct(&g, t, lim.build_vertices).expect("within budget");
        assert!(
            is_dominating_set(sg.graph(), &star),
            "criterion 07: witness fails on K_1_{r} t={t}"
        );
        assert_eq!(
            big(star.count() as u64),
            claimed,
            "criterion 07: witness size on K_1_{r} t={t}"
        );
    }

    if failures.is_empty() {
        println!("criterion 07 star-corollary: PASS ({checks} checks)");
    } else {
        println!("criterion 07 star-corollary: FAIL ({})", failures.join("; "));
        panic!("criterion 07 star-corollary: FAIL ({})", failures.join("; "));
    }
}

#[test]
fn criterion_08_equivalence_t3() {
    let lim = limits(64);
    let mut applicable = 0;
    for (id, g) in corpus::connected_corpus(4) {
        let (gamma, _) = domination_number(&g, &lim.budget).unwrap();
        let (beta, _) = vertex_cover_number(&g, &lim.budget).unwrap();
        if gamma != beta {
            continue;
        }
        applicable += 1;
        let verdict = formulas::equivalence_check(&g, 3, &lim).unwrap();
        assert_eq!(
            verdict.outcome,
            EquivalenceOutcome::Match,
            "criterion 08: violation on {id}: gamma_s={:?} lift={} xi={} unique={}",
            verdict.gamma_s,
            verdict.lift_value,
            verdict.xi,
            verdict.unique_gamma_set
        );
    }
    assert!(applicable >= 5, "expected at least P2, P3, P4, C4, K_1_3");
    println!("criterion 08 equivalence-t3: PASS ({applicable} applicable graphs)");
}

#[test]
fn criterion_09_oracle_equivalence() {
    let bud = budget();
    let mut graphs: Vec<(String, BaseGraph)> = corpus::connected_corpus(5);
    for (i, g) in common::random_sample(200, 0x5157).into_iter().enumerate() {
        graphs.push((format!("rand-{i:03}"), g));
    }
    let mut checks = 0;
    for (id, g) in &graphs {
        let (chi_n, chi_w) = common::chromatic_naive(g);
        let coloring = chromatic_number(g, &bud).unwrap();
        assert_eq!(coloring.num_colors, chi_n, "chi on {id}");
        assert_eq!(coloring.colors, chi_w, "lex-min coloring on {id}");

        let (omega_n, omega_w) = common::clique_naive(g);
        let (omega, clique) = clique_number(g, &bud).unwrap();
        assert_eq!(omega, omega_n, "omega on {id}");
        assert_eq!(clique.to_vec(), omega_w, "lex-min clique on {id}");

        let (beta_n, beta_w) = common::cover_naive(g);
        let (beta, cover) = vertex_cover_number(g, &bud).unwrap();
        assert_eq!(beta, beta_n, "beta on {id}");
        assert_eq!(cover.to_vec(), beta_w, "lex-min cover on {id}");

        let (alpha_n, alpha_w) = common::independent_naive(g);
        let (alpha, ind) = independence_number(g, &bud).unwrap();
        assert_eq!(alpha, alpha_n, "alpha on {id}");
        assert_eq!(ind.to_vec(), alpha_w, "lex-min independent set on {id}");
        assert_eq!(alpha + beta, g.order(), "Gallai on {id}");

        let (gamma_n, gamma_w) = common::domination_naive(g);
        let (gamma, dom) = domination_number(g, &bud).unwrap();
        assert_eq!(gamma, gamma_n, "gamma on {id}");
        assert_eq!(dom.to_vec(), gamma_w, "lex-min dominating set on {id}");

        let (fam_gamma, fam_naive) = common::gamma_family_naive(g);
        let family = enumerate_gamma_sets(g, &bud).unwrap();
        assert_eq!(family.gamma, fam_gamma, "family gamma on {id}");
        let listed: Vec<Vec<usize>> = family.sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(listed, fam_naive, "gamma family on {id}");
        assert_eq!(
            has_unique_gamma_set(g, &bud).unwrap(),
            fam_naive.len() == 1,
            "uniqueness on {id}"
        );

        // The xi shortcut (D minus vertices isolated in <D>) must match
        // brute-force subset maximization for every gamma-set.
        for d in &fam_naive {
            assert_eq!(
                common::xi_subset_max_for(g, d),
                common::xi_shortcut_for(g, d),
                "xi shortcut on {id} for D={d:?}"
            );
        }
        let cert = xi_with_witness(g, &bud).unwrap();
        assert_eq!(cert.xi, common::xi_naive(g), "xi on {id}");
        checks += 1;
    }
    assert!(checks >= 231);
    println!("criterion 09 oracle-equivalence: PASS ({checks} graphs, 5 solvers + family + xi each)");
}

#[test]
fn criterion_10_regression_fixture() {
    let g = common::seven_vertex_graph();
    let bud = budget();

    assert_eq!(vertex_cover_number(&g, &bud).unwrap().0, 3, "beta");
    assert_eq!(independence_number(&g, &bud).unwrap().0, 4, "alpha");
    assert_eq!(chromatic_number(&g, &bud).unwrap().num_colors, 3, "chi");
    assert_eq!(clique_number(&g, &bud).unwrap().0, 3, "omega");
    assert_eq!(domination_number(&g, &bud).unwrap().0, 3, "gamma");

    let s2 = build_direct(&g, 2, DEFAULT_VERTEX_BUDGET).unwrap();
    assert_eq!((s2.order(), s2.size()), (49, 56), "S(G,2)");
    let s3 = build_recursive(&g, 3, DEFAULT_VERTEX_BUDGET).unwrap();
    assert_eq!((s3.order(), s3.size()), (343, 399), "S(G,3)");

    // Formula layer agrees with the built instances.
    assert_eq!(order_size_formula(7, 7, 2), (big(49), big(56)));
    assert_eq!(order_size_formula(7, 7, 3), (big(343), big(399)));
    assert_eq!(beta_formula(7, 2, 3), big(21));
    assert_eq!(alpha_formula(7, 2, 4), big(28));
    assert_eq!(domination_upper_bound(7, 2, 3, 2).unwrap(), big(19));
    assert!(leaf_count_formula(&g, 2).is_err(), "not a tree");

    println!("criterion 10 regression-fixture: PASS");
}
