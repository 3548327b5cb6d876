//! Brute-force enumeration ground truth.
//!
//! Everything here enumerates rather than computes: rooted spanning trees,
//! constrained two-tree spanning forests, simple directed paths, and the
//! signed all-minors forest sum. These are the independent oracles the
//! determinant identities are tested against, so they must never return a
//! partial answer: the size guards are hard errors, not truncation.
//!
//! Enumeration strategy: every vertex that is not a root picks exactly one
//! incoming edge (ascending order), and cyclic configurations are rejected.
//! This bounds the work by the product of indegrees, far below subset
//! enumeration at these sizes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use thiserror::Error;

use crate::digraph::{Digraph, Vertex};

/// Guards: enumeration is refused above this many vertices...
pub const MAX_VERTICES: usize = 10;
/// ...or above `3 * n` edges.
pub const MAX_EDGE_FACTOR: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph too large for enumeration: {n} vertices, {edges} edges (limits: {MAX_VERTICES} vertices, {MAX_EDGE_FACTOR}·n edges)")]
    SizeGuard { n: usize, edges: usize },
    #[error("constraint sets differ in size: |Δ1| = {d1}, |Δ2| = {d2}")]
    ConstraintSizeMismatch { d1: usize, d2: usize },
    #[error("constraint size {size} unsupported (must be 1..={max})")]
    ConstraintSizeUnsupported { size: usize, max: usize },
    #[error("vertex {id} out of range 1..={n}")]
    VertexOutOfRange { id: Vertex, n: usize },
    #[error("vertices must be distinct, got {vertex} twice")]
    EqualVertices { vertex: Vertex },
}

/// Root/membership specification for constrained spanning forests. A forest
/// matches when it has exactly `|roots|` trees, every `roots` vertex is the
/// root of its tree, and every tree contains exactly one vertex of
/// `membership` (and exactly one of `roots`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestConstraint {
    /// Δ1: tree-membership marks.
    pub membership: BTreeSet<Vertex>,
    /// Δ2: roots.
    pub roots: BTreeSet<Vertex>,
}

impl ForestConstraint {
    pub fn new(
        membership: impl IntoIterator<Item = Vertex>,
        roots: impl IntoIterator<Item = Vertex>,
    ) -> Self {
        ForestConstraint {
            membership: membership.into_iter().collect(),
            roots: roots.into_iter().collect(),
        }
    }

    fn validate(&self, g: &Digraph, max_size: usize) -> Result<(), OracleError> {
        if self.membership.len() != self.roots.len() {
            return Err(OracleError::ConstraintSizeMismatch {
                d1: self.membership.len(),
                d2: self.roots.len(),
            });
        }
        let size = self.roots.len();
        if size == 0 || size > max_size {
            return Err(OracleError::ConstraintSizeUnsupported {
                size,
                max: max_size,
            });
        }
        for &v in self.membership.iter().chain(self.roots.iter()) {
            if v == 0 || v > g.n() {
                return Err(OracleError::VertexOutOfRange { id: v, n: g.n() });
            }
        }
        Ok(())
    }
}

fn check_guard(g: &Digraph) -> Result<(), OracleError> {
    if g.n() > MAX_VERTICES || g.edge_count() > MAX_EDGE_FACTOR * g.n() {
        return Err(OracleError::SizeGuard {
            n: g.n(),
            edges: g.edge_count(),
        });
    }
    Ok(())
}

/// Walks every assignment of one in-edge per non-root vertex, invoking the
/// callback with `parent[v]` (0 for roots) for each acyclic configuration.
fn for_each_forest(g: &Digraph, roots: &BTreeSet<Vertex>, mut found: impl FnMut(&[Vertex])) {
    let choosers: Vec<Vertex> = g.vertices().filter(|v| !roots.contains(v)).collect();
    // a non-root vertex with no in-edges admits no forest at all
    if choosers.iter().any(|&v| g.in_neighbors(v).is_empty()) {
        return;
    }
    let mut parent = vec![0usize; g.n() + 1];
    let mut choice = vec![0usize; choosers.len()];
    loop {
        for (k, &v) in choosers.iter().enumerate() {
            parent[v] = g.in_neighbors(v)[choice[k]];
        }
        if assignment_is_acyclic(g.n(), &parent) {
            found(&parent);
        }
        // odometer increment
        let mut k = choosers.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < g.in_neighbors(choosers[k]).len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

fn assignment_is_acyclic(n: usize, parent: &[Vertex]) -> bool {
    const NEW: u8 = 0;
    const ON_PATH: u8 = 1;
    const DONE: u8 = 2;
    let mut state = vec![NEW; n + 1];
    for start in 1..=n {
        if state[start] != NEW {
            continue;
        }
        let mut cur = start;
        let mut path = Vec::new();
        loop {
            match state[cur] {
                ON_PATH => return false,
                DONE => break,
                _ => {}
            }
            state[cur] = ON_PATH;
            path.push(cur);
            if parent[cur] == 0 {
                break;
            }
            cur = parent[cur];
        }
        for v in path {
            state[v] = DONE;
        }
    }
    true
}

/// Root of the tree containing `v` under the given parent assignment.
fn tree_root(parent: &[Vertex], mut v: Vertex) -> Vertex {
    while parent[v] != 0 {
        v = parent[v];
    }
    v
}

fn forest_edges(parent: &[Vertex], n: usize) -> Vec<(Vertex, Vertex)> {
    let mut edges: Vec<(Vertex, Vertex)> = (1..=n)
        .filter(|&v| parent[v] != 0)
        .map(|v| (parent[v], v))
        .collect();
    edges.sort_unstable();
    edges
}

/// All spanning trees rooted at `root` (every other vertex has indegree 1,
/// the root has indegree 0, no directed cycles), as sorted edge lists.
pub fn enumerate_rooted_spanning_trees(
    g: &Digraph,
    root: Vertex,
) -> Result<Vec<Vec<(Vertex, Vertex)>>, OracleError> {
    check_guard(g)?;
    if root == 0 || root > g.n() {
        return Err(OracleError::VertexOutOfRange { id: root, n: g.n() });
    }
    let roots = BTreeSet::from([root]);
    let mut trees = Vec::new();
    for_each_forest(g, &roots, |parent| trees.push(forest_edges(parent, g.n())));
    Ok(trees)
}

/// All spanning forests of exactly two trees matching the constraint, as
/// sorted edge lists. The count is the list length.
pub fn enumerate_two_tree_forests(
    g: &Digraph,
    constraint: &ForestConstraint,
) -> Result<Vec<Vec<(Vertex, Vertex)>>, OracleError> {
    check_guard(g)?;
    constraint.validate(g, 2)?;
    if constraint.roots.len() != 2 {
        return Err(OracleError::ConstraintSizeUnsupported {
            size: constraint.roots.len(),
            max: 2,
        });
    }
    let mut forests = Vec::new();
    for_each_forest(g, &constraint.roots, |parent| {
        if forest_matches_membership(parent, constraint) {
            forests.push(forest_edges(parent, g.n()));
        }
    });
    Ok(forests)
}

fn forest_matches_membership(parent: &[Vertex], constraint: &ForestConstraint) -> bool {
    let roots: Vec<Vertex> = constraint.roots.iter().copied().collect();
    let mut per_root_count = vec![0usize; roots.len()];
    for &m in &constraint.membership {
        let r = tree_root(parent, m);
        match roots.binary_search(&r) {
            Ok(idx) => per_root_count[idx] += 1,
            Err(_) => return false,
        }
    }
    per_root_count.iter().all(|&c| c == 1)
}

/// All simple directed paths from `i` to `j`, exhaustive DFS with ascending
/// neighbor order; each path is the full vertex sequence from `i` to `j`.
pub fn enumerate_simple_paths(
    g: &Digraph,
    i: Vertex,
    j: Vertex,
) -> Result<Vec<Vec<Vertex>>, OracleError> {
    check_guard(g)?;
    for v in [i, j] {
        if v == 0 || v > g.n() {
            return Err(OracleError::VertexOutOfRange { id: v, n: g.n() });
        }
    }
    if i == j {
        return Err(OracleError::EqualVertices { vertex: i });
    }
    let mut paths = Vec::new();
    let mut on_path = vec![false; g.n() + 1];
    let mut current = vec![i];
    on_path[i] = true;
    dfs_paths(g, j, &mut current, &mut on_path, &mut paths);
    Ok(paths)
}

fn dfs_paths(
    g: &Digraph,
    target: Vertex,
    current: &mut Vec<Vertex>,
    on_path: &mut Vec<bool>,
    paths: &mut Vec<Vec<Vertex>>,
) {
    let v = *current.last().expect("path never empty");
    for &w in g.out_neighbors(v) {
        if w == target {
            let mut complete = current.clone();
            complete.push(w);
            paths.push(complete);
            continue;
        }
        if on_path[w] {
            continue;
        }
        on_path[w] = true;
        current.push(w);
        dfs_paths(g, target, current, on_path, paths);
        current.pop();
        on_path[w] = false;
    }
}

/// The signed forest sum of the all-minors matrix-tree identity:
/// `(-1)^(α(Δ1)+α(Δ2)) · Σ_F (-1)^(n(π))` over spanning forests `F` with
/// `|Δ2|` trees, each tree rooted at its `Δ2` vertex and containing exactly
/// one `Δ1` vertex. `π : Δ1 → Δ2` sends each `Δ1` vertex to the root of its
/// tree; `n(π)` counts inversions. The result equals
/// `det(L[Δ1ᶜ, Δ2ᶜ])` exactly.
pub fn all_minors_signed_sum(
    g: &Digraph,
    constraint: &ForestConstraint,
) -> Result<BigInt, OracleError> {
    check_guard(g)?;
    constraint.validate(g, 3)?;
    let delta1: Vec<Vertex> = constraint.membership.iter().copied().collect();
    let mut sum = BigInt::from(0);
    for_each_forest(g, &constraint.roots, |parent| {
        if !forest_matches_membership(parent, constraint) {
            return;
        }
        let pi: Vec<Vertex> = delta1.iter().map(|&m| tree_root(parent, m)).collect();
        let mut inversions = 0usize;
        for a in 0..pi.len() {
            for b in a + 1..pi.len() {
                if pi[a] > pi[b] {
                    inversions += 1;
                }
            }
        }
        sum += if inversions % 2 == 0 { 1 } else { -1 };
    });
    let alpha: usize = delta1.iter().sum::<usize>() + constraint.roots.iter().sum::<usize>();
    Ok(if alpha % 2 == 0 { sum } else { -sum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::determinant_int;
    use crate::testgraphs::{balanced5, cactus7, cycle, digon, two_tree_example};

    #[test]
    fn two_spanning_trees_in_the_augmented_cycle() {
        let trees = enumerate_rooted_spanning_trees(&two_tree_example(), 1).unwrap();
        assert_eq!(trees.len(), 2);
        assert!(trees.contains(&vec![(1, 2), (2, 3), (3, 4), (4, 5)]));
        assert!(trees.contains(&vec![(1, 2), (1, 5), (2, 3), (3, 4)]));
    }

    #[test]
    fn cycle_has_one_tree_per_root() {
        let trees = enumerate_rooted_spanning_trees(&cycle(5), 3).unwrap();
        assert_eq!(trees.len(), 1);
        // the unique tree drops the edge entering the root
        assert_eq!(trees[0], vec![(1, 2), (3, 4), (4, 5), (5, 1)]);
    }

    #[test]
    fn balanced5_has_seven_trees_rooted_at_one() {
        let trees = enumerate_rooted_spanning_trees(&balanced5(), 1).unwrap();
        assert_eq!(trees.len(), 7);
        // agrees with the principal-minor determinant
        let l = balanced5().laplacian();
        let minor = l
            .complement_minor(&BTreeSet::from([1]), &BTreeSet::from([1]))
            .unwrap();
        assert_eq!(determinant_int(&minor).unwrap(), BigInt::from(7));
    }

    #[test]
    fn two_tree_forest_counts() {
        let b5_pair12 =
            enumerate_two_tree_forests(&balanced5(), &ForestConstraint::new([1, 2], [1, 2]))
                .unwrap();
        assert_eq!(b5_pair12.len(), 4);

        let digon_forests =
            enumerate_two_tree_forests(&digon(), &ForestConstraint::new([1, 2], [1, 2])).unwrap();
        assert_eq!(digon_forests.len(), 1);
        assert!(digon_forests[0].is_empty()); // two isolated vertices

        let c7_pair45 =
            enumerate_two_tree_forests(&cactus7(), &ForestConstraint::new([4, 5], [4, 5])).unwrap();
        assert_eq!(c7_pair45.len(), 1);

        for i in 1..=5 {
            for j in 1..=5 {
                if i < j {
                    let c = enumerate_two_tree_forests(
                        &cycle(5),
                        &ForestConstraint::new([i, j], [i, j]),
                    )
                    .unwrap();
                    assert_eq!(c.len(), 1, "C_5 pair ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn unique_path_on_the_cactus() {
        let paths = enumerate_simple_paths(&cactus7(), 1, 6).unwrap();
        assert_eq!(paths, vec![vec![1, 4, 5, 6]]);
    }

    #[test]
    fn three_paths_in_balanced5() {
        let paths = enumerate_simple_paths(&balanced5(), 2, 1).unwrap();
        assert_eq!(paths, vec![vec![2, 3, 4, 1], vec![2, 4, 1], vec![2, 5, 1]]);
    }

    #[test]
    fn cycles_have_one_path_between_any_pair() {
        for n in 2..=6 {
            let g = cycle(n);
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        assert_eq!(enumerate_simple_paths(&g, i, j).unwrap().len(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn signed_sum_reduces_to_tree_count_for_singletons() {
        for g in [balanced5(), cactus7(), cycle(4)] {
            for i in 1..=g.n() {
                let sum = all_minors_signed_sum(&g, &ForestConstraint::new([i], [i])).unwrap();
                let trees = enumerate_rooted_spanning_trees(&g, i).unwrap();
                assert_eq!(sum, BigInt::from(trees.len() as u64));
            }
        }
    }

    #[test]
    fn signed_sum_matches_determinant_on_balanced5() {
        let g = balanced5();
        let l = g.laplacian();
        let d1 = BTreeSet::from([5, 2]);
        let d2 = BTreeSet::from([5, 1]);
        let det = determinant_int(&l.complement_minor(&d1, &d2).unwrap()).unwrap();
        let sum = all_minors_signed_sum(&g, &ForestConstraint::new([2, 5], [1, 5])).unwrap();
        assert_eq!(sum, det);
    }

    #[test]
    fn signed_sum_on_triangle_anchored_pair() {
        // exactly one forest, {1→2} ∪ {3}, with no inversions; the global
        // sign (-1)^(α(Δ1)+α(Δ2)) = (-1)^9 makes the signed sum -1, equal to
        // the deleted-minor determinant det(L[{3,2}ᶜ,{3,1}ᶜ]) = l_12
        let g = cycle(3);
        let sum = all_minors_signed_sum(&g, &ForestConstraint::new([3, 2], [3, 1])).unwrap();
        assert_eq!(sum, BigInt::from(-1));
        let l = g.laplacian();
        let det = determinant_int(
            &l.complement_minor(&BTreeSet::from([3, 2]), &BTreeSet::from([3, 1]))
                .unwrap(),
        )
        .unwrap();
        assert_eq!(sum, det);
        // reversed membership admits no forest: vertex 2's only out-edge enters 3
        let none = all_minors_signed_sum(&g, &ForestConstraint::new([3, 1], [3, 2])).unwrap();
        assert_eq!(none, BigInt::from(0));
    }

    #[test]
    fn guards_and_constraint_validation() {
        let big = cycle(11);
        assert!(matches!(
            enumerate_rooted_spanning_trees(&big, 1),
            Err(OracleError::SizeGuard { n: 11, .. })
        ));

        // complete digraph on 5 vertices: 20 > 3·5 edges
        let mut edges = Vec::new();
        for u in 1..=5 {
            for v in 1..=5 {
                if u != v {
                    edges.push((u, v));
                }
            }
        }
        let dense = Digraph::new(5, edges).unwrap();
        assert!(matches!(
            enumerate_simple_paths(&dense, 1, 2),
            Err(OracleError::SizeGuard { .. })
        ));

        let g = cactus7();
        assert!(matches!(
            enumerate_two_tree_forests(&g, &ForestConstraint::new([1], [1, 2])),
            Err(OracleError::ConstraintSizeMismatch { d1: 1, d2: 2 })
        ));
        assert!(matches!(
            all_minors_signed_sum(&g, &ForestConstraint::new([1, 2, 3, 4], [1, 2, 3, 4])),
            Err(OracleError::ConstraintSizeUnsupported { size: 4, max: 3 })
        ));
        assert!(matches!(
            all_minors_signed_sum(&g, &ForestConstraint::new([9], [1])),
            Err(OracleError::VertexOutOfRange { id: 9, n: 7 })
        ));
        assert!(matches!(
            enumerate_simple_paths(&g, 3, 3),
            Err(OracleError::EqualVertices { vertex: 3 })
        ));
    }

    #[test]
    fn adding_the_edge_maps_forests_into_trees_injectively() {
        // for (i,j) an edge: F ↦ F + (i,j) sends two-tree forests rooted at
        // (i, j) into spanning trees rooted at i, injectively
        for g in [balanced5(), cactus7(), two_tree_example()] {
            for &(i, j) in g.edges() {
                let forests =
                    enumerate_two_tree_forests(&g, &ForestConstraint::new([i, j], [i, j])).unwrap();
                let trees = enumerate_rooted_spanning_trees(&g, i).unwrap();
                let mut images = BTreeSet::new();
                for f in &forests {
                    let mut t = f.clone();
                    t.push((i, j));
                    t.sort_unstable();
                    assert!(
                        trees.contains(&t),
                        "forest + ({i},{j}) must be a tree rooted at {i}"
                    );
                    assert!(images.insert(t), "map must be injective");
                }
            }
        }
    }
}
