//! Acceptance suite: the verification gate for the whole artifact.
//!
//! Every test here pins exact expected values (golden fixture matrices,
//! enumeration cross-checks) or exact identities over fixed seeded corpora,
//! and enforces its runtime budget. Run with
//! `cargo test -p resdist-core --test acceptance -- --nocapture` to see one
//! summary line per criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use resdist_core::digraph::Digraph;
use resdist_core::generators::{seeded_balanced, seeded_cactus};
use resdist_core::linalg::{self, parse_rational, IntMatrix, Matrix, RatMatrix};
use resdist_core::oracle::{self, ForestConstraint};
use resdist_core::{checks, resistance};

const BALANCED5_EDGE_LIST: &str = "\
5 10
1 2
1 3
2 3
2 4
2 5
3 2
3 4
4 1
4 2
5 1
";

const CACTUS7_EDGE_LIST: &str = "\
7 9
1 2
2 3
3 1
1 4
4 5
5 6
6 1
1 7
7 1
";

fn balanced5() -> Digraph {
    Digraph::parse_edge_list(BALANCED5_EDGE_LIST).unwrap()
}

fn cactus7() -> Digraph {
    Digraph::parse_edge_list(CACTUS7_EDGE_LIST).unwrap()
}

fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

fn rat_matrix(rows: &[&[&str]]) -> RatMatrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| parse_rational(s).unwrap()).collect())
            .collect(),
    )
}

/// 150 cacti and 150 general balanced graphs, n <= 12.
fn mixed_corpus_12() -> Vec<Digraph> {
    let mut graphs: Vec<Digraph> = (0..150).map(|s| seeded_cactus(s, 12)).collect();
    graphs.extend((0..150).map(|s| seeded_balanced(s, 12)));
    graphs
}

fn finish(name: &str, started: Instant, budget: Duration, detail: &str) {
    let elapsed = started.elapsed();
    println!("PASS {name} ({elapsed:.2?}): {detail}");
    assert!(
        elapsed < budget,
        "{name} exceeded its runtime budget: {elapsed:.2?} >= {budget:.2?}"
    );
}

#[test]
fn five_vertex_fixture_reproduces_golden_matrices() {
    let started = Instant::now();
    let g = balanced5();

    let expected_l = int_matrix(&[
        &[2, -1, -1, 0, 0],
        &[0, 3, -1, -1, -1],
        &[0, -1, 2, -1, 0],
        &[-1, -1, 0, 2, 0],
        &[-1, 0, 0, 0, 1],
    ]);
    assert_eq!(g.laplacian(), expected_l);

    let expected_pinv = rat_matrix(&[
        &["9/35", "0", "1/35", "-3/35", "-1/5"],
        &["-4/35", "1/5", "-2/35", "-1/35", "0"],
        &["-6/35", "0", "11/35", "2/35", "-1/5"],
        &["-1/35", "0", "-4/35", "12/35", "-1/5"],
        &["2/35", "-1/5", "-6/35", "-2/7", "3/5"],
    ]);
    assert_eq!(
        linalg::moore_penrose_laplacian(&g.laplacian()).unwrap(),
        expected_pinv
    );

    let expected_r = rat_matrix(&[
        &["0", "16/35", "18/35", "27/35", "44/35"],
        &["24/35", "0", "22/35", "3/5", "4/5"],
        &["32/35", "18/35", "0", "19/35", "46/35"],
        &["23/35", "19/35", "31/35", "0", "47/35"],
        &["26/35", "6/5", "44/35", "53/35", "0"],
    ]);
    assert_eq!(resistance::resistance_matrix(&g).unwrap(), expected_r);

    let expected_d = int_matrix(&[
        &[0, 1, 1, 2, 2],
        &[2, 0, 1, 1, 1],
        &[2, 1, 0, 1, 2],
        &[1, 1, 2, 0, 2],
        &[1, 2, 2, 3, 0],
    ]);
    assert_eq!(g.distance_matrix().unwrap(), expected_d);

    finish(
        "five-vertex fixture",
        started,
        Duration::from_secs(1),
        "L, L†, R, D all match the golden matrices entry-for-entry",
    );
}

#[test]
fn seven_vertex_cactus_fixture_reproduces_golden_matrices() {
    let started = Instant::now();
    let g = cactus7();

    let expected_r = rat_matrix(&[
        &["0", "6/7", "8/7", "5/7", "1", "9/7", "1"],
        &["8/7", "0", "2/7", "13/7", "15/7", "17/7", "15/7"],
        &["6/7", "12/7", "0", "11/7", "13/7", "15/7", "13/7"],
        &["9/7", "15/7", "17/7", "0", "2/7", "4/7", "16/7"],
        &["1", "13/7", "15/7", "12/7", "0", "2/7", "2"],
        &["5/7", "11/7", "13/7", "10/7", "12/7", "0", "12/7"],
        &["1", "13/7", "15/7", "12/7", "2", "16/7", "0"],
    ]);
    let expected_d = int_matrix(&[
        &[0, 1, 2, 1, 2, 3, 1],
        &[2, 0, 1, 3, 4, 5, 3],
        &[1, 2, 0, 2, 3, 4, 2],
        &[3, 4, 5, 0, 1, 2, 4],
        &[2, 3, 4, 3, 0, 1, 3],
        &[1, 2, 3, 2, 3, 0, 2],
        &[1, 2, 3, 2, 3, 4, 0],
    ]);

    let report = resistance::analyze(&g).unwrap();
    assert_eq!(report.resistance, expected_r);
    assert_eq!(report.distance, expected_d);
    assert!(report.is_cactus);
    assert!(report.r_le_d);
    assert!(report.violations.is_empty());

    finish(
        "seven-vertex cactus fixture",
        started,
        Duration::from_secs(1),
        "R and D match the golden matrices; r <= d holds",
    );
}

#[test]
fn penrose_conditions_hold_across_the_seeded_corpus() {
    let started = Instant::now();
    let graphs = mixed_corpus_12();
    assert_eq!(graphs.len(), 300);
    for (k, g) in graphs.iter().enumerate() {
        let l = g.laplacian();
        let pinv = linalg::moore_penrose_laplacian(&l).unwrap();
        assert!(
            linalg::is_moore_penrose(&l.to_rational(), &pinv).unwrap(),
            "graph {k} fails a Penrose condition"
        );
    }
    finish(
        "pseudoinverse conditions",
        started,
        Duration::from_secs(120),
        "all four Penrose conditions hold exactly on 300 graphs (150 cacti + 150 general, n <= 12)",
    );
}

#[test]
fn matrix_tree_identities_match_enumeration() {
    let started = Instant::now();
    let mut graphs: Vec<Digraph> = (0..50).map(|s| seeded_cactus(s, 8)).collect();
    graphs.extend((0..50).map(|s| seeded_balanced(s, 8)));
    assert_eq!(graphs.len(), 100);

    for (k, g) in graphs.iter().enumerate() {
        let n = g.n();
        let l = g.laplacian();

        // tree count at two distinct roots equals kappa
        let kappa = resistance::kappa(g).unwrap();
        for root in [1, n] {
            let trees = oracle::enumerate_rooted_spanning_trees(g, root).unwrap();
            assert_eq!(
                BigInt::from(trees.len() as u64),
                kappa,
                "graph {k}, root {root}"
            );
        }

        // two-tree forest counts, every unordered pair
        for i in 1..=n {
            for j in i + 1..=n {
                let det_route = resistance::two_forest_count(g, i, j).unwrap();
                let forests =
                    oracle::enumerate_two_tree_forests(g, &ForestConstraint::new([i, j], [i, j]))
                        .unwrap();
                assert_eq!(
                    det_route,
                    BigInt::from(forests.len() as u64),
                    "graph {k}, pair ({i},{j})"
                );
            }
        }

        // anchored counts at both canonical anchors, every ordered pair
        for anchor in [1, n] {
            for i in 1..=n {
                for j in 1..=n {
                    if i == anchor || j == anchor {
                        continue;
                    }
                    let det_route = resistance::anchored_forest_count(g, anchor, i, j).unwrap();
                    let forests = oracle::enumerate_two_tree_forests(
                        g,
                        &ForestConstraint::new([anchor, i], [anchor, j]),
                    )
                    .unwrap();
                    assert_eq!(
                        det_route,
                        BigInt::from(forests.len() as u64),
                        "graph {k}, anchor {anchor}, pair ({i},{j})"
                    );
                }
            }
        }

        // signed all-minors sum equals the complement-minor determinant for
        // every index-set pair with |Δ| <= 2
        let singles: Vec<BTreeSet<usize>> = (1..=n).map(|v| BTreeSet::from([v])).collect();
        let mut doubles: Vec<BTreeSet<usize>> = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                doubles.push(BTreeSet::from([i, j]));
            }
        }
        for group in [&singles, &doubles] {
            for d1 in group {
                for d2 in group {
                    let sum = oracle::all_minors_signed_sum(
                        g,
                        &ForestConstraint::new(d1.clone(), d2.clone()),
                    )
                    .unwrap();
                    let det =
                        linalg::determinant_int(&l.complement_minor(d1, d2).unwrap()).unwrap();
                    assert_eq!(sum, det, "graph {k}, Δ1 {d1:?}, Δ2 {d2:?}");
                }
            }
        }
    }
    finish(
        "matrix-tree identities",
        started,
        Duration::from_secs(300),
        "determinants equal enumeration on 100 graphs (n <= 8): tree counts, two-tree forests, anchored forests, signed minors",
    );
}

#[test]
fn pair_sum_identity_holds_across_the_corpus() {
    let started = Instant::now();
    // spot value first: the five-vertex fixture pair (1,2) gives 8/7
    assert_eq!(
        resistance::pair_resistance_sum(&balanced5(), 1, 2).unwrap(),
        parse_rational("8/7").unwrap()
    );
    for (k, g) in mixed_corpus_12().iter().enumerate() {
        let r = resistance::resistance_matrix(g).unwrap();
        for i in 1..=g.n() {
            for j in i + 1..=g.n() {
                let sum = resistance::pair_resistance_sum(g, i, j).unwrap();
                let direct = &r[(i - 1, j - 1)] + &r[(j - 1, i - 1)];
                assert_eq!(sum, direct, "graph {k}, pair ({i},{j})");
            }
        }
    }
    finish(
        "pair-sum identity",
        started,
        Duration::from_secs(300),
        "r_ij + r_ji = 2·det(L[{i,j}ᶜ,{i,j}ᶜ])/kappa for every pair on all 300 corpus graphs",
    );
}

#[test]
fn cactus_resistance_never_exceeds_distance() {
    let started = Instant::now();
    let mut max_n = 0;
    for seed in 0..500 {
        let g = seeded_cactus(seed, 14);
        max_n = max_n.max(g.n());
        let report = resistance::analyze(&g).unwrap();
        assert!(report.is_cactus, "seed {seed}");
        assert!(
            report.violations.is_empty(),
            "seed {seed}: r > d at {:?}",
            report.violations
        );
    }
    finish(
        "cactus r <= d",
        started,
        Duration::from_secs(180),
        &format!("zero violating pairs across 500 seeded cacti (largest n = {max_n})"),
    );
}

#[test]
fn supporting_bounds_and_patterns_hold_across_the_corpus() {
    let started = Instant::now();
    let graphs = mixed_corpus_12();
    let mut degree_one_edges = 0usize;
    let mut cactus_edges = 0usize;
    let mut path_checked_cacti = 0usize;

    for (k, g) in graphs.iter().enumerate() {
        let report = resistance::analyze(g).unwrap();

        // adjacent two-tree forest count never exceeds the tree count
        for &(i, j) in g.edges() {
            let count = resistance::two_forest_count(g, i, j).unwrap();
            assert!(
                count <= report.kappa,
                "graph {k}, edge ({i},{j}): {count} > kappa"
            );
        }

        // degree-1 endpoint on an edge bounds its resistance by 1
        let one = parse_rational("1").unwrap();
        for &(i, j) in g.edges() {
            if g.out_degree(i) == 1 || g.out_degree(j) == 1 {
                degree_one_edges += 1;
                assert!(
                    report.resistance[(i - 1, j - 1)] <= one,
                    "graph {k}, edge ({i},{j}): r > 1 with a degree-1 endpoint"
                );
            }
        }

        if report.is_cactus {
            // unique directed path per ordered pair, within the oracle guard
            if g.n() <= oracle::MAX_VERTICES {
                path_checked_cacti += 1;
                for i in 1..=g.n() {
                    for j in 1..=g.n() {
                        if i != j {
                            let paths = oracle::enumerate_simple_paths(g, i, j).unwrap();
                            assert_eq!(paths.len(), 1, "graph {k}, pair ({i},{j})");
                        }
                    }
                }
            }
            // partition and inverse-row patterns on every edge
            for &(i, j) in g.edges() {
                cactus_edges += 1;
                assert!(
                    checks::edge_partition_ok(g, i, j).unwrap(),
                    "graph {k}, edge ({i},{j}): partition fails"
                );
                let (rows_ok, cols_ok) = checks::edge_inverse_patterns(g, i, j).unwrap();
                assert!(rows_ok, "graph {k}, edge ({i},{j}): row pattern fails");
                assert!(cols_ok, "graph {k}, edge ({i},{j}): column bound fails");
            }
        }
    }
    assert!(degree_one_edges > 0, "corpus must exercise degree-1 edges");
    assert!(cactus_edges > 0, "corpus must exercise cactus edges");
    finish(
        "supporting bounds and patterns",
        started,
        Duration::from_secs(300),
        &format!(
            "minor bounds, {degree_one_edges} degree-1 edges, unique paths on {path_checked_cacti} cacti, partitions and inverse patterns on {cactus_edges} cactus edges"
        ),
    );
}

#[test]
fn conjecture_probe_finds_no_violation_on_general_balanced_graphs() {
    let started = Instant::now();
    let mut violations = 0usize;
    let mut first_offender: Option<Digraph> = None;
    for seed in 0..1000 {
        let g = seeded_balanced(seed, 9);
        let report = resistance::analyze(&g).unwrap();
        if !report.violations.is_empty() {
            violations += report.violations.len();
            if first_offender.is_none() {
                first_offender = Some(g);
            }
        }
    }
    if let Some(g) = &first_offender {
        // full counterexample edge list for manual audit
        eprintln!("counterexample candidate: {} {}", g.n(), g.edge_count());
        for &(u, v) in g.edges() {
            eprintln!("{u} {v}");
        }
    }
    assert_eq!(
        violations, 0,
        "violating pairs found; edge list printed above"
    );
    finish(
        "conjecture probe",
        started,
        Duration::from_secs(300),
        "0 violating pairs across 1000 seeded general balanced digraphs (n <= 9)",
    );
}
