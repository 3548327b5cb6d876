//! The named invariant suite behind `resdist verify`.
//!
//! Every check is exact. A check that does not apply to the input (cactus
//! structure on a non-cactus, enumeration above the oracle guard) reports
//! `Skipped`, never a silent pass.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::digraph::{Digraph, Vertex};
use crate::linalg::{self, format_rational, Rational};
use crate::oracle;
use crate::resistance::{self, ResistanceError, ResistanceReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Pass,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Fail,
            detail: detail.into(),
        }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Skipped,
            detail: detail.into(),
        }
    }

    fn verdict(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name, detail)
        } else {
            Self::fail(name, detail)
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub report: ResistanceReport,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

/// The pair-sum identity needs one near-full-size determinant per vertex
/// pair; above this size the check is reported as skipped rather than run
/// partially.
const PAIR_SUM_LIMIT: usize = 64;

/// Runs every applicable invariant on a balanced strongly connected graph.
pub fn verify(g: &Digraph) -> Result<VerifyReport, ResistanceError> {
    let report = resistance::analyze(g)?;
    let mut checks = vec![
        laplacian_zero_sums(&report),
        penrose_conditions(&report)?,
        anchor_independence(&report),
        resistance_nonnegative(&report),
        resistance_zero_diagonal(&report),
        triangle_inequality(&report),
        pair_sum_identity(g, &report)?,
        adjacent_minor_bound(g, &report)?,
        degree_one_edge_resistance(g, &report),
    ];

    if report.is_cactus {
        checks.push(cactus_unique_paths(g, &report));
        checks.push(cactus_partition(g)?);
        let (rows, cols) = cactus_inverse_patterns(g)?;
        checks.push(rows);
        checks.push(cols);
    } else {
        for name in [
            "cactus-unique-paths",
            "cactus-reachability-partition",
            "cactus-inverse-row-pattern",
            "cactus-inverse-column-bound",
        ] {
            checks.push(CheckOutcome::skipped(name, "not a directed cactus"));
        }
    }

    checks.push(resistance_le_distance(&report));
    Ok(VerifyReport { report, checks })
}

fn laplacian_zero_sums(report: &ResistanceReport) -> CheckOutcome {
    let l = &report.laplacian;
    let ok = (0..l.n()).all(|i| l.row_sum(i).is_zero() && l.col_sum(i).is_zero());
    CheckOutcome::verdict(
        "laplacian-zero-sums",
        ok,
        "every row and column of L sums to 0",
    )
}

fn penrose_conditions(report: &ResistanceReport) -> Result<CheckOutcome, ResistanceError> {
    let ok = linalg::is_moore_penrose(&report.laplacian.to_rational(), &report.pinv)?;
    Ok(CheckOutcome::verdict(
        "pseudoinverse-penrose-conditions",
        ok,
        "L†L and LL† symmetric, LL†L = L, L†LL† = L†",
    ))
}

fn anchor_independence(report: &ResistanceReport) -> CheckOutcome {
    // kappa() already asserts anchors 1 and n agree; re-derive here across
    // every anchor so the verify output stands on its own (past the budget,
    // one near-full determinant per anchor gets expensive, so fall back to
    // the two canonical anchors)
    let l = &report.laplacian;
    let n = l.n();
    let anchors: Vec<Vertex> = if n <= PAIR_SUM_LIMIT {
        (1..=n).collect()
    } else {
        vec![1, n]
    };
    let exhaustive = anchors.len() == n;
    let mut ok = true;
    for &anchor in &anchors {
        let delta = BTreeSet::from([anchor]);
        let minor = l.complement_minor(&delta, &delta).expect("anchor in range");
        if linalg::det_int_unguarded(&minor) != report.kappa {
            ok = false;
            break;
        }
    }
    let detail = if exhaustive {
        format!("kappa = {} at every anchor", report.kappa)
    } else {
        format!("kappa = {} at anchors 1 and {n}", report.kappa)
    };
    CheckOutcome::verdict("tree-count-anchor-independence", ok, detail)
}

fn resistance_nonnegative(report: &ResistanceReport) -> CheckOutcome {
    use num_traits::Signed;
    let ok = report.resistance.entries().all(|e| !e.is_negative());
    CheckOutcome::verdict("resistance-nonnegative", ok, "r_ij >= 0 for all pairs")
}

fn resistance_zero_diagonal(report: &ResistanceReport) -> CheckOutcome {
    let r = &report.resistance;
    let ok = (0..r.n()).all(|i| r[(i, i)].is_zero());
    CheckOutcome::verdict("resistance-zero-diagonal", ok, "r_ii = 0")
}

fn triangle_inequality(report: &ResistanceReport) -> CheckOutcome {
    let r = &report.resistance;
    let n = r.n();
    let mut ok = true;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if r[(i, j)] > &r[(i, k)] + &r[(k, j)] {
                    ok = false;
                    break 'outer;
                }
            }
        }
    }
    CheckOutcome::verdict(
        "resistance-triangle-inequality",
        ok,
        "r_ij <= r_ik + r_kj for all triples",
    )
}

fn pair_sum_identity(
    g: &Digraph,
    report: &ResistanceReport,
) -> Result<CheckOutcome, ResistanceError> {
    let name = "pair-sum-forest-identity";
    let n = g.n();
    if n > PAIR_SUM_LIMIT {
        return Ok(CheckOutcome::skipped(
            name,
            format!("n = {n} exceeds the per-pair determinant budget ({PAIR_SUM_LIMIT})"),
        ));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let lhs = resistance::pair_resistance_sum(g, i, j)?;
            let rhs = &report.resistance[(i - 1, j - 1)] + &report.resistance[(j - 1, i - 1)];
            if lhs != rhs {
                return Ok(CheckOutcome::fail(
                    name,
                    format!(
                        "pair ({i},{j}): 2·det/kappa = {}, r_ij + r_ji = {}",
                        format_rational(&lhs),
                        format_rational(&rhs)
                    ),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        "r_ij + r_ji = 2·det(L[{i,j}ᶜ,{i,j}ᶜ])/kappa for every pair",
    ))
}

fn adjacent_minor_bound(
    g: &Digraph,
    report: &ResistanceReport,
) -> Result<CheckOutcome, ResistanceError> {
    let name = "adjacent-pair-minor-bound";
    for &(i, j) in g.edges() {
        let count = resistance::two_forest_count(g, i, j)?;
        if count > report.kappa {
            return Ok(CheckOutcome::fail(
                name,
                format!(
                    "edge ({i},{j}): two-tree forest count {count} exceeds kappa {}",
                    report.kappa
                ),
            ));
        }
    }
    Ok(CheckOutcome::pass(
        name,
        "det(L[{i,j}ᶜ,{i,j}ᶜ]) <= kappa for every adjacent pair",
    ))
}

fn degree_one_edge_resistance(g: &Digraph, report: &ResistanceReport) -> CheckOutcome {
    let name = "degree-one-edge-resistance";
    let one = Rational::from(num_bigint::BigInt::from(1));
    let mut applicable = 0usize;
    for &(i, j) in g.edges() {
        if g.out_degree(i) == 1 || g.out_degree(j) == 1 {
            applicable += 1;
            if report.resistance[(i - 1, j - 1)] > one {
                return CheckOutcome::fail(
                    name,
                    format!(
                        "edge ({i},{j}) with a degree-1 endpoint has r = {}",
                        format_rational(&report.resistance[(i - 1, j - 1)])
                    ),
                );
            }
        }
    }
    if applicable == 0 {
        CheckOutcome::pass(name, "vacuous: no edge has a degree-1 endpoint")
    } else {
        CheckOutcome::pass(name, format!("r <= 1 on all {applicable} degree-1 edges"))
    }
}

fn cactus_unique_paths(g: &Digraph, report: &ResistanceReport) -> CheckOutcome {
    let name = "cactus-unique-paths";
    if g.n() > oracle::MAX_VERTICES {
        return CheckOutcome::skipped(name, format!("n = {} exceeds the enumeration guard", g.n()));
    }
    for i in 1..=g.n() {
        for j in 1..=g.n() {
            if i == j {
                continue;
            }
            let paths = match oracle::enumerate_simple_paths(g, i, j) {
                Ok(p) => p,
                Err(e) => return CheckOutcome::skipped(name, e.to_string()),
            };
            if paths.len() != 1 {
                return CheckOutcome::fail(name, format!("{} paths from {i} to {j}", paths.len()));
            }
            let len = num_bigint::BigInt::from(paths[0].len() as u64 - 1);
            if len != report.distance[(i - 1, j - 1)] {
                return CheckOutcome::fail(
                    name,
                    format!(
                        "unique path {i}→{j} has length {len} but d = {}",
                        report.distance[(i - 1, j - 1)]
                    ),
                );
            }
        }
    }
    CheckOutcome::pass(
        name,
        "exactly one directed path per ordered pair, with length d_ij",
    )
}

/// Edge partition check on a directed cactus: for every edge `(i, j)`,
/// `{i,j}`, the forward set and the backward set are pairwise disjoint and
/// cover the vertex set, the forward set sits inside the co-reach set, and
/// both sets are nonempty when both endpoints have degree > 1.
pub fn edge_partition_ok(g: &Digraph, i: Vertex, j: Vertex) -> Result<bool, ResistanceError> {
    let p = g.reachability_partition(i, j)?;
    if p.forward.contains(&i)
        || p.forward.contains(&j)
        || p.backward.contains(&i)
        || p.backward.contains(&j)
    {
        return Ok(false);
    }
    if p.forward.intersection(&p.backward).next().is_some() {
        return Ok(false);
    }
    let covered = 2 + p.forward.len() + p.backward.len();
    if covered != g.n() {
        return Ok(false);
    }
    if !p.forward.is_subset(&p.co_reach) {
        return Ok(false);
    }
    if g.out_degree(i) > 1 && g.out_degree(j) > 1 && (p.forward.is_empty() || p.backward.is_empty())
    {
        return Ok(false);
    }
    Ok(true)
}

fn cactus_partition(g: &Digraph) -> Result<CheckOutcome, ResistanceError> {
    let name = "cactus-reachability-partition";
    for &(i, j) in g.edges() {
        if !edge_partition_ok(g, i, j)? {
            return Ok(CheckOutcome::fail(
                name,
                format!("edge ({i},{j}) breaks the partition"),
            ));
        }
    }
    Ok(CheckOutcome::pass(
        name,
        "{i,j} ∪ forward ∪ backward partitions V for every edge, with forward ⊆ co-reach",
    ))
}

/// Inverse-row patterns on a directed cactus edge `(i, j)`: relabel
/// `i ↦ 1`, `j ↦ n`, take `C = (L[{n}ᶜ,{n}ᶜ])⁻¹`. Returns
/// `(row_pattern_ok, column_bound_ok)` where the row pattern is
/// `c_1k = 1/kappa` for `k` in the forward set and `0` otherwise, and the
/// column bound is `c_k1 >= 1/kappa` on the forward set.
pub fn edge_inverse_patterns(
    g: &Digraph,
    i: Vertex,
    j: Vertex,
) -> Result<(bool, bool), ResistanceError> {
    let n = g.n();
    let perm = Digraph::permutation_pinning(n, &[(i, 1), (j, n)]);
    let h = g.relabel(&perm);
    let l = h.laplacian();
    let anchor = BTreeSet::from([n]);
    let b = l.complement_minor(&anchor, &anchor)?.to_rational();
    let kappa = linalg::determinant(&b)?;
    let c = linalg::inverse(&b)?;
    let forward = h.reachability_partition(1, n)?.forward;
    let inv_kappa = kappa.recip();
    let mut row_ok = true;
    let mut col_ok = true;
    for k in 2..n {
        let expected = if forward.contains(&k) {
            inv_kappa.clone()
        } else {
            Rational::zero()
        };
        if c[(0, k - 1)] != expected {
            row_ok = false;
        }
        if forward.contains(&k) && c[(k - 1, 0)] < inv_kappa {
            col_ok = false;
        }
    }
    Ok((row_ok, col_ok))
}

fn cactus_inverse_patterns(g: &Digraph) -> Result<(CheckOutcome, CheckOutcome), ResistanceError> {
    let row_name = "cactus-inverse-row-pattern";
    let col_name = "cactus-inverse-column-bound";
    for &(i, j) in g.edges() {
        let (row_ok, col_ok) = edge_inverse_patterns(g, i, j)?;
        if !row_ok {
            return Ok((
                CheckOutcome::fail(
                    row_name,
                    format!("edge ({i},{j}) breaks the 1/kappa-or-0 row pattern"),
                ),
                CheckOutcome::skipped(col_name, "not evaluated past the row failure"),
            ));
        }
        if !col_ok {
            return Ok((
                CheckOutcome::pass(row_name, "rows match on every edge"),
                CheckOutcome::fail(
                    col_name,
                    format!("edge ({i},{j}) breaks the c_k1 >= 1/kappa bound"),
                ),
            ));
        }
    }
    Ok((
        CheckOutcome::pass(
            row_name,
            "c_1k is 1/kappa on the forward set and 0 elsewhere, every edge",
        ),
        CheckOutcome::pass(col_name, "c_k1 >= 1/kappa on the forward set, every edge"),
    ))
}

fn resistance_le_distance(report: &ResistanceReport) -> CheckOutcome {
    let name = "resistance-le-distance";
    let class = if report.is_cactus {
        "theorem class: directed cactus"
    } else {
        "conjecture class: balanced strongly connected, not a cactus"
    };
    if report.violations.is_empty() {
        CheckOutcome::pass(
            name,
            format!("r_ij <= d_ij for every ordered pair ({class})"),
        )
    } else {
        let v = &report.violations[0];
        CheckOutcome::fail(
            name,
            format!(
                "{} violating pairs; first: r_{}{} = {} > d = {} ({class})",
                report.violations.len(),
                v.i,
                v.j,
                format_rational(&v.resistance),
                v.distance
            ),
        )
    }
}
