//! Resistance distances and the determinant identities around them.
//!
//! For a balanced strongly connected digraph with Laplacian `L` and
//! Moore-Penrose inverse `L† = (l†_ij)`, the resistance between `i` and `j`
//! is `r_ij = l†_ii + l†_jj - 2 l†_ij`. It is nonnegative, satisfies the
//! triangle inequality, and on directed cactus graphs is bounded by the
//! shortest-path distance: `r_ij <= d_ij`. For general balanced strongly
//! connected digraphs that bound is an open conjecture, and
//! [`analyze`] reports every violating pair exactly (no rounding is ever
//! involved in the verdict).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::digraph::{Digraph, GraphError, Vertex};
use crate::linalg::{self, format_rational, IntMatrix, LinalgError, Matrix, RatMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResistanceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn require_analyzable(g: &Digraph) -> Result<(), ResistanceError> {
    g.require_balanced()?;
    g.require_strongly_connected()?;
    Ok(())
}

fn check_vertex(g: &Digraph, v: Vertex) -> Result<(), ResistanceError> {
    if v == 0 || v > g.n() {
        return Err(GraphError::VertexOutOfRange { id: v, n: g.n() }.into());
    }
    Ok(())
}

/// The number of spanning trees rooted at any fixed vertex,
/// `κ(G) = det(L[{i}ᶜ,{i}ᶜ])`. Root-independent on balanced strongly
/// connected digraphs; computed at anchors `n` and `1` and asserted equal
/// rather than trusted.
pub fn kappa(g: &Digraph) -> Result<BigInt, ResistanceError> {
    require_analyzable(g)?;
    Ok(kappa_unchecked(g))
}

fn kappa_unchecked(g: &Digraph) -> BigInt {
    let l = g.laplacian();
    let at = |anchor: Vertex| {
        let delta = BTreeSet::from([anchor]);
        let minor = l.complement_minor(&delta, &delta).expect("anchor in range");
        linalg::det_int_unguarded(&minor)
    };
    let at_last = at(g.n());
    let at_first = at(1);
    assert_eq!(
        at_last, at_first,
        "equal-cofactor self-check failed: anchors n and 1 disagree"
    );
    at_last
}

/// `det(L[{i,j}ᶜ,{i,j}ᶜ])`: the number of spanning forests of two trees
/// rooted at `i` and `j`.
pub fn two_forest_count(g: &Digraph, i: Vertex, j: Vertex) -> Result<BigInt, ResistanceError> {
    check_vertex(g, i)?;
    check_vertex(g, j)?;
    if i == j {
        return Err(GraphError::EqualVertices { vertex: i }.into());
    }
    let delta = BTreeSet::from([i, j]);
    let minor = g.laplacian().complement_minor(&delta, &delta)?;
    Ok(linalg::determinant_int(&minor)?)
}

/// The count of spanning forests of two trees, one rooted at `anchor`, the
/// other rooted at `j` and containing `i`. The anchor is relabeled to the
/// largest index first (where the sign pattern of the minor identity is
/// known to be inversion-free), then the count is
/// `(-1)^(i'+j') · det(L'[{n,i'}ᶜ,{n,j'}ᶜ])`. With `i = j` this degenerates
/// to the two-tree count rooted at `{j, anchor}`.
pub fn anchored_forest_count(
    g: &Digraph,
    anchor: Vertex,
    i: Vertex,
    j: Vertex,
) -> Result<BigInt, ResistanceError> {
    check_vertex(g, anchor)?;
    check_vertex(g, i)?;
    check_vertex(g, j)?;
    if i == anchor || j == anchor {
        return Err(GraphError::EqualVertices { vertex: anchor }.into());
    }
    let n = g.n();
    let perm = Digraph::permutation_pinning(n, &[(anchor, n)]);
    let relabeled = g.relabel(&perm);
    let (ip, jp) = (perm[i - 1], perm[j - 1]);
    let minor = relabeled
        .laplacian()
        .complement_minor(&BTreeSet::from([n, ip]), &BTreeSet::from([n, jp]))?;
    let det = linalg::determinant_int(&minor)?;
    Ok(if (ip + jp) % 2 == 0 { det } else { -det })
}

/// `2 · det(L[{i,j}ᶜ,{i,j}ᶜ]) / κ(G)`, which equals `r_ij + r_ji`.
pub fn pair_resistance_sum(g: &Digraph, i: Vertex, j: Vertex) -> Result<Rational, ResistanceError> {
    require_analyzable(g)?;
    let minor_det = two_forest_count(g, i, j)?;
    let kappa = kappa_unchecked(g);
    Ok(Rational::new(BigInt::from(2) * minor_det, kappa))
}

/// The resistance matrix `R` with `r_ij = l†_ii + l†_jj - 2 l†_ij`, exact.
pub fn resistance_matrix(g: &Digraph) -> Result<RatMatrix, ResistanceError> {
    require_analyzable(g)?;
    let pinv = linalg::moore_penrose_laplacian(&g.laplacian())?;
    Ok(resistance_from_pinv(&pinv))
}

pub(crate) fn resistance_from_pinv(pinv: &RatMatrix) -> RatMatrix {
    Matrix::from_fn(pinv.n(), |i, j| {
        &pinv[(i, i)] + &pinv[(j, j)] - Rational::from(BigInt::from(2)) * &pinv[(i, j)]
    })
}

/// An ordered pair where the resistance exceeds the shortest-path distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub i: Vertex,
    pub j: Vertex,
    pub resistance: Rational,
    pub distance: BigInt,
}

/// Everything [`analyze`] computes for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResistanceReport {
    pub graph: Digraph,
    pub laplacian: IntMatrix,
    pub pinv: RatMatrix,
    pub resistance: RatMatrix,
    pub distance: IntMatrix,
    pub kappa: BigInt,
    pub is_cactus: bool,
    pub r_le_d: bool,
    pub violations: Vec<Violation>,
}

/// Full analysis: Laplacian, pseudoinverse, resistance and distance
/// matrices, `κ`, the cactus flag, and every ordered pair with
/// `r_ij > d_ij` (exact rational comparison). Rejects graphs above the
/// dimension guard; `analyze_unguarded` is the `--force` path.
pub fn analyze(g: &Digraph) -> Result<ResistanceReport, ResistanceError> {
    if g.n() > linalg::DIM_GUARD {
        return Err(LinalgError::SizeGuard {
            n: g.n(),
            limit: linalg::DIM_GUARD,
        }
        .into());
    }
    analyze_impl(g)
}

/// [`analyze`] without the dimension guard. Dense exact inversion is cubic
/// with bignum growth on top; expect large graphs to take a while.
pub fn analyze_unguarded(g: &Digraph) -> Result<ResistanceReport, ResistanceError> {
    analyze_impl(g)
}

fn analyze_impl(g: &Digraph) -> Result<ResistanceReport, ResistanceError> {
    require_analyzable(g)?;
    let laplacian = g.laplacian();
    let pinv = linalg::moore_penrose_unguarded(&laplacian)?;
    let resistance = resistance_from_pinv(&pinv);
    let distance = g.distance_matrix()?;
    let kappa = kappa_unchecked(g);
    let is_cactus = g.is_directed_cactus();
    let mut violations = Vec::new();
    for i in 0..g.n() {
        for j in 0..g.n() {
            if i == j {
                continue;
            }
            let d = Rational::from(distance[(i, j)].clone());
            if resistance[(i, j)] > d {
                violations.push(Violation {
                    i: i + 1,
                    j: j + 1,
                    resistance: resistance[(i, j)].clone(),
                    distance: distance[(i, j)].clone(),
                });
            }
        }
    }
    Ok(ResistanceReport {
        graph: g.clone(),
        laplacian,
        pinv,
        resistance,
        distance,
        kappa,
        is_cactus,
        r_le_d: violations.is_empty(),
        violations,
    })
}

#[derive(Serialize)]
struct ViolationJson {
    i: usize,
    j: usize,
    r: String,
    d: u64,
}

#[derive(Serialize)]
struct ReportJson {
    n: usize,
    kappa: String,
    cactus: bool,
    r_le_d: bool,
    #[serde(rename = "R")]
    resistance: Vec<Vec<String>>,
    #[serde(rename = "D")]
    distance: Vec<Vec<u64>>,
    violations: Vec<ViolationJson>,
}

impl ResistanceReport {
    /// JSON form with fixed key order
    /// (`n`, `kappa`, `cactus`, `r_le_d`, `R`, `D`, `violations`);
    /// byte-identical across runs for identical inputs.
    pub fn to_json_string(&self) -> String {
        let rational_rows = |m: &RatMatrix| -> Vec<Vec<String>> {
            m.rows()
                .map(|r| r.iter().map(format_rational).collect())
                .collect()
        };
        let int_rows = |m: &IntMatrix| -> Vec<Vec<u64>> {
            m.rows()
                .map(|r| {
                    r.iter()
                        .map(|e| e.to_u64().expect("distances fit in u64"))
                        .collect()
                })
                .collect()
        };
        let json = ReportJson {
            n: self.graph.n(),
            kappa: self.kappa.to_string(),
            cactus: self.is_cactus,
            r_le_d: self.r_le_d,
            resistance: rational_rows(&self.resistance),
            distance: int_rows(&self.distance),
            violations: self
                .violations
                .iter()
                .map(|v| ViolationJson {
                    i: v.i,
                    j: v.j,
                    r: format_rational(&v.resistance),
                    d: v.distance.to_u64().expect("distances fit in u64"),
                })
                .collect(),
        };
        serde_json::to_string(&json).expect("report serialization cannot fail")
    }
}

/// Exact check that a resistance matrix is a quasi-metric: zero diagonal,
/// nonnegative entries, triangle inequality.
pub fn is_quasi_metric(r: &RatMatrix) -> bool {
    let n = r.n();
    for i in 0..n {
        if !r[(i, i)].is_zero() {
            return false;
        }
        for j in 0..n {
            if r[(i, j)].is_negative() {
                return false;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if r[(i, j)] > &r[(i, k)] + &r[(k, j)] {
                    return false;
                }
            }
        }
    }
    true
}
