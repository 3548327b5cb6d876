//! Shared fixture graphs for unit tests.

use crate::digraph::Digraph;

/// The 5-vertex strongly connected balanced digraph whose Laplacian,
/// pseudoinverse, resistance and distance matrices are pinned as goldens in
/// the test suites. Not a cactus: edge (2,4) lies on the directed cycles
/// 2→4→2 and 1→2→4→1.
pub fn balanced5() -> Digraph {
    Digraph::new(
        5,
        [
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 2),
            (3, 4),
            (4, 1),
            (4, 2),
            (5, 1),
        ],
    )
    .unwrap()
}

pub const CACTUS7_EDGE_LIST: &str = "\
# 7-vertex directed cactus: a triangle, a 4-cycle and a digon glued at vertex 1
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

/// The 7-vertex directed cactus fixture: triangle 1-2-3, 4-cycle 1-4-5-6,
/// digon 1-7, all sharing vertex 1.
pub fn cactus7() -> Digraph {
    Digraph::parse_edge_list(CACTUS7_EDGE_LIST).unwrap()
}

/// Directed cycle on `n` vertices.
pub fn cycle(n: usize) -> Digraph {
    let edges = (1..=n).map(|v| (v, v % n + 1));
    Digraph::new(n, edges).unwrap()
}

pub fn digon() -> Digraph {
    cycle(2)
}

/// The 5-vertex graph with exactly two spanning trees rooted at 1:
/// the path cycle 1→2→3→4→5→1 plus the extra edge (1,5).
pub fn two_tree_example() -> Digraph {
    Digraph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 5)]).unwrap()
}
