mod common;

use fextremal::enumerate::{
    count_with_spec, generate_free_trees, max_f_search, EnumConfig, EnumFilter,
};
use fextremal::extremal::extremal_spec;
use fextremal::ilp::{build_instance, solve, IlpSolution, Var};
use fextremal::invariants::cube_sum;
use fextremal::routes::{erratum_for, run_routes, Route, TableColumn};
use fextremal::{canonical_code, Tree};

use common::{leaf_growth_classes, prufer_class_count, spec_histogram};

#[test]
fn prufer_oracle_matches_generator() {
    let cfg = EnumConfig::default();
    for n in 1..=8 {
        let generated = generate_free_trees(n, &EnumFilter::default(), &cfg)
            .unwrap()
            .count();
        assert_eq!(generated, prufer_class_count(n), "n={n}");
    }
}

#[test]
fn generator_classes_are_distinct_and_complete() {
    let cfg = EnumConfig::default();
    let grown = leaf_growth_classes(12);
    for (n, classes) in grown.iter().enumerate().skip(1) {
        let mut codes: Vec<Vec<u8>> = generate_free_trees(n, &EnumFilter::default(), &cfg)
            .unwrap()
            .map(|t| canonical_code(&t))
            .collect();
        codes.sort();
        let before = codes.len();
        codes.dedup();
        assert_eq!(before, codes.len(), "duplicate class at n={n}");
        let mut expected: Vec<Vec<u8>> = classes.iter().map(canonical_code).collect();
        expected.sort();
        assert_eq!(codes, expected, "n={n}");
    }
}

/// Counts per spec from an independent generator, for every extremal row up
/// to order 15 under bounds 4 and 5 (including the rows whose published
/// counts are misprinted).
#[test]
fn extremal_counts_match_leaf_growth_oracle() {
    let cfg = EnumConfig::default();
    let grown = leaf_growth_classes(15);
    for delta in [4u64, 5] {
        for n in 4..=15u64 {
            let hist = spec_histogram(&grown[n as usize]);
            let spec = extremal_spec(n, delta).unwrap().spec;
            let oracle = hist[&spec];
            assert_eq!(
                count_with_spec(n as usize, &spec, &cfg).unwrap(),
                oracle,
                "n={n} delta={delta}"
            );
            let report = max_f_search(n as usize, delta.min(n - 1) as usize, &cfg).unwrap();
            assert_eq!(report.unique().unwrap().count, oracle);
            if let Some(e) = erratum_for(n, delta).filter(|e| e.column == TableColumn::TreeCount) {
                assert_ne!(e.printed, oracle as u128);
            }
        }
    }
    let spec15 = "4^4,2^1,1^10".parse().unwrap();
    assert_eq!(spec_histogram(&grown[15])[&spec15], 7);
    let spec11 = "5^2,2^1,1^8".parse().unwrap();
    assert_eq!(spec_histogram(&grown[11])[&spec11], 2);
}

#[test]
fn max_f_matches_brute_force_over_classes() {
    let grown = leaf_growth_classes(13);
    for (n, classes) in grown.iter().enumerate().skip(2) {
        for delta in 2..n.max(3) {
            let best = classes
                .iter()
                .filter(|t| t.max_degree() <= delta)
                .map(|t| cube_sum(&t.vertex_degrees()))
                .max()
                .unwrap();
            let closed = extremal_spec(n as u64, delta as u64).unwrap();
            assert_eq!(closed.f_value, best, "n={n} delta={delta}");
        }
    }
}

#[test]
fn three_routes_agree_on_small_orders() {
    let cfg = EnumConfig::default();
    for delta in 2u64..=5 {
        for n in (delta + 1)..=16 {
            let r = run_routes(n, delta, Route::All, &cfg).unwrap();
            assert_eq!(r.f_value(), extremal_spec(n, delta).unwrap().f_value);
        }
    }
}

fn solution_vector(sol: &IlpSolution, vars: &[Var]) -> Vec<i64> {
    vars.iter()
        .map(|v| match *v {
            Var::N(i) => sol.ni.get(&i).copied().unwrap_or(0) as i64,
            Var::M(i, j) => sol.mij.get(&(i, j)).copied().unwrap_or(0) as i64,
        })
        .collect()
}

/// Generic branch and bound over the full model against the structured solver.
#[test]
fn branch_and_bound_matches_structured_solver() {
    for delta in 2u64..=8 {
        for n in (delta + 1)..=60 {
            let inst = build_instance(n, delta).unwrap();
            let sol = solve(&inst).unwrap();
            let (program, vars) = inst.to_program();
            let best = program
                .maximize()
                .unwrap_or_else(|| panic!("infeasible n={n} delta={delta}"));
            assert_eq!(best.objective as u128, sol.objective, "n={n} delta={delta}");
            assert!(program.is_feasible(&solution_vector(&sol, &vars)));
        }
    }
}

#[test]
fn star_is_the_unbounded_maximizer() {
    let cfg = EnumConfig::default();
    for n in 3..=14usize {
        let report = max_f_search(n, n - 1, &cfg).unwrap();
        let g = report.unique().unwrap();
        assert_eq!(g.count, 1);
        assert_eq!(
            canonical_code(&g.representatives[0]),
            canonical_code(&Tree::star(n))
        );
    }
}
