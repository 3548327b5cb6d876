//! Exact resistance distances on strongly connected balanced digraphs.
//!
//! Everything in this crate computes over arbitrary-precision integers and
//! rationals; there is no floating point anywhere. The central objects are
//! the digraph Laplacian `L`, its Moore-Penrose inverse `L†`, the resistance
//! matrix `R` with `r_ij = l†_ii + l†_jj - 2 l†_ij`, and the shortest-path
//! distance matrix `D`. On directed cactus graphs the inequality
//! `r_ij <= d_ij` is a theorem; on general balanced strongly connected
//! digraphs it is an open conjecture that [`resistance::analyze`] and the
//! CLI `search` command probe for counterexamples.
//!
//! Module map:
//!
//! - [`digraph`] — graph type, structural predicates, BFS distances,
//!   reachability partitions, Laplacian construction.
//! - [`linalg`] — exact rational matrix kernel: determinants (fraction-free
//!   Bareiss on integers), inverses, adjugates, complement minors, cofactor
//!   sums, and the block-formula Moore-Penrose construction.
//! - [`resistance`] — resistance matrix, spanning-tree count `kappa`,
//!   forest-count identities, and the full [`resistance::analyze`] report.
//! - [`oracle`] — brute-force enumeration ground truth for spanning trees,
//!   constrained two-tree forests, simple paths, and the signed all-minors
//!   forest sum.
//! - [`generators`] — seeded, reproducible construction of directed cycles,
//!   random directed cacti, and random balanced digraphs.
//! - [`checks`] — the named invariant suite behind `resdist verify`.
//!
//! ```
//! use resdist_core::{digraph::Digraph, resistance};
//!
//! let g = Digraph::parse_edge_list("3 3\n1 2\n2 3\n3 1\n")?;
//! let report = resistance::analyze(&g)?;
//! assert!(report.is_cactus);
//! assert_eq!(report.kappa.to_string(), "1");
//! assert!(report.r_le_d); // exact: no pair has resistance above its distance
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod checks;
pub mod digraph;
pub mod generators;
pub mod linalg;
pub mod oracle;
pub mod resistance;

pub use digraph::Digraph;
pub use linalg::{IntMatrix, Matrix, RatMatrix, Rational};
pub use resistance::ResistanceReport;

#[cfg(test)]
pub(crate) mod testgraphs;
