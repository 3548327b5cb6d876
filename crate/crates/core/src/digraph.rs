//! Simple digraphs with 1-based vertex ids, structural predicates, BFS
//! distances, reachability partitions, and Laplacian construction.
//!
//! A digraph here is simple: no self-loops, no duplicate edges. A digon
//! (both `(u,v)` and `(v,u)`) is two distinct edges and counts as a directed
//! 2-cycle. Values are immutable after construction and safe to share across
//! threads.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use thiserror::Error;

use crate::linalg::IntMatrix;

/// 1-based vertex id.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("no header line \"n m\" found")]
    MissingHeader,
    #[error("line {line}: malformed header {content:?}, expected \"n m\"")]
    MalformedHeader { line: usize, content: String },
    #[error("line {line}: vertex count must be positive")]
    InvalidVertexCount { line: usize },
    #[error("line {line}: malformed edge line {content:?}, expected \"u v\"")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: vertex id {id} out of range 1..={n}")]
    VertexOutOfRange { line: usize, id: u64, n: usize },
    #[error("edge count mismatch: header says {expected}, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: Vertex },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: Vertex, v: Vertex },
    #[error("vertex id {id} out of range 1..={n}")]
    VertexOutOfRange { id: Vertex, n: usize },
    #[error("no directed path from {from} to {to}: graph is not strongly connected")]
    NotStronglyConnected { from: Vertex, to: Vertex },
    #[error("vertex {vertex} is not balanced: indegree {indegree}, outdegree {outdegree}")]
    NotBalanced {
        vertex: Vertex,
        indegree: usize,
        outdegree: usize,
    },
    #[error("vertices must be distinct, got {vertex} twice")]
    EqualVertices { vertex: Vertex },
}

/// The reachability sets around an ordered pair `(i, j)`:
///
/// - `forward`  = `V_j(i→)`, vertices other than `i, j` reachable from `i`
///   by a directed path avoiding `j`;
/// - `backward` = `V_i(j→)`, same from `j` avoiding `i`;
/// - `co_reach` = `V_j(→i)`, vertices other than `i, j` with a directed
///   path *to* `i` avoiding `j`.
///
/// On a directed cactus with `(i, j)` an edge, `{i,j} ∪ forward ∪ backward`
/// partitions the vertex set and `forward ⊆ co_reach`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    pub pair: (Vertex, Vertex),
    pub forward: BTreeSet<Vertex>,
    pub backward: BTreeSet<Vertex>,
    pub co_reach: BTreeSet<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
}

impl Digraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut sorted: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
        sorted.sort_unstable();
        for &(u, v) in &sorted {
            if u == 0 || u > n {
                return Err(GraphError::VertexOutOfRange { id: u, n });
            }
            if v == 0 || v > n {
                return Err(GraphError::VertexOutOfRange { id: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
        }
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge {
                    u: w[0].0,
                    v: w[0].1,
                });
            }
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &sorted {
            out_adj[u - 1].push(v);
            in_adj[v - 1].push(u);
        }
        for l in in_adj.iter_mut() {
            l.sort_unstable();
        }
        Ok(Digraph {
            n,
            edges: sorted,
            out_adj,
            in_adj,
        })
    }

    /// Parses the edge-list text format: first non-comment line `n m`, then
    /// `m` lines `u v`. Lines starting with `#` and blank lines are ignored;
    /// LF and CRLF both work.
    pub fn parse_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize, usize)> = None; // (n, m, line)
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match header {
                None => {
                    let (n, m) = match tokens.as_slice() {
                        [a, b] => match (a.parse::<u64>(), b.parse::<u64>()) {
                            (Ok(n), Ok(m)) => (n, m),
                            _ => {
                                return Err(ParseError::MalformedHeader {
                                    line: lineno,
                                    content: line.to_string(),
                                })
                            }
                        },
                        _ => {
                            return Err(ParseError::MalformedHeader {
                                line: lineno,
                                content: line.to_string(),
                            })
                        }
                    };
                    if n == 0 {
                        return Err(ParseError::InvalidVertexCount { line: lineno });
                    }
                    header = Some((n as usize, m as usize, lineno));
                }
                Some((n, _, _)) => {
                    let (u, v) = match tokens.as_slice() {
                        [a, b] => match (a.parse::<u64>(), b.parse::<u64>()) {
                            (Ok(u), Ok(v)) => (u, v),
                            _ => {
                                return Err(ParseError::MalformedLine {
                                    line: lineno,
                                    content: line.to_string(),
                                })
                            }
                        },
                        _ => {
                            return Err(ParseError::MalformedLine {
                                line: lineno,
                                content: line.to_string(),
                            })
                        }
                    };
                    for id in [u, v] {
                        if id == 0 || id > n as u64 {
                            return Err(ParseError::VertexOutOfRange {
                                line: lineno,
                                id,
                                n,
                            });
                        }
                    }
                    let (u, v) = (u as Vertex, v as Vertex);
                    if u == v {
                        return Err(ParseError::SelfLoop {
                            line: lineno,
                            vertex: u,
                        });
                    }
                    if !seen.insert((u, v)) {
                        return Err(ParseError::DuplicateEdge { line: lineno, u, v });
                    }
                    edges.push((u, v));
                }
            }
        }
        let (n, m, _) = header.ok_or(ParseError::MissingHeader)?;
        if edges.len() != m {
            return Err(ParseError::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            });
        }
        Ok(Digraph::new(n, edges).expect("edge list already validated"))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in ascending lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.binary_search(&(u, v)).is_ok()
    }

    /// Out-neighbors of `v` in ascending order.
    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v - 1]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v - 1]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_adj[v - 1].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_adj[v - 1].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn is_balanced(&self) -> bool {
        self.vertices()
            .all(|v| self.in_degree(v) == self.out_degree(v))
    }

    /// Err names the first unbalanced vertex.
    pub fn require_balanced(&self) -> Result<(), GraphError> {
        for v in self.vertices() {
            if self.in_degree(v) != self.out_degree(v) {
                return Err(GraphError::NotBalanced {
                    vertex: v,
                    indegree: self.in_degree(v),
                    outdegree: self.out_degree(v),
                });
            }
        }
        Ok(())
    }

    fn bfs_reach(&self, start: Vertex, avoid: Option<Vertex>, reversed: bool) -> Vec<bool> {
        let mut seen = vec![false; self.n + 1];
        if Some(start) == avoid {
            return seen;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let next = if reversed {
                self.in_neighbors(v)
            } else {
                self.out_neighbors(v)
            };
            for &w in next {
                if Some(w) == avoid || seen[w] {
                    continue;
                }
                seen[w] = true;
                queue.push_back(w);
            }
        }
        seen
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let fwd = self.bfs_reach(1, None, false);
        let bwd = self.bfs_reach(1, None, true);
        self.vertices().all(|v| fwd[v] && bwd[v])
    }

    /// Err names the first unreachable ordered pair (ascending scan order).
    pub fn require_strongly_connected(&self) -> Result<(), GraphError> {
        let fwd = self.bfs_reach(1, None, false);
        for v in self.vertices() {
            if !fwd[v] {
                return Err(GraphError::NotStronglyConnected { from: 1, to: v });
            }
        }
        let bwd = self.bfs_reach(1, None, true);
        for v in self.vertices() {
            if !bwd[v] {
                return Err(GraphError::NotStronglyConnected { from: v, to: 1 });
            }
        }
        Ok(())
    }

    /// BFS shortest directed path lengths, `d_ii = 0`.
    pub fn distance_matrix(&self) -> Result<IntMatrix, GraphError> {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(self.n);
        for src in self.vertices() {
            let mut dist: Vec<Option<u64>> = vec![None; self.n + 1];
            dist[src] = Some(0);
            let mut queue = VecDeque::from([src]);
            while let Some(v) = queue.pop_front() {
                let next = dist[v].unwrap() + 1;
                for &w in self.out_neighbors(v) {
                    if dist[w].is_none() {
                        dist[w] = Some(next);
                        queue.push_back(w);
                    }
                }
            }
            let mut row = Vec::with_capacity(self.n);
            for dst in self.vertices() {
                match dist[dst] {
                    Some(d) => row.push(BigInt::from(d)),
                    None => return Err(GraphError::NotStronglyConnected { from: src, to: dst }),
                }
            }
            rows.push(row);
        }
        Ok(IntMatrix::from_rows(rows))
    }

    /// Laplacian: out-degrees on the diagonal, `-1` at `(i, j)` for each
    /// edge `(i, j)`. For balanced graphs every row and column sums to zero.
    pub fn laplacian(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| {
            if i == j {
                BigInt::from(self.out_degree(i + 1) as u64)
            } else if self.has_edge(i + 1, j + 1) {
                BigInt::from(-1)
            } else {
                BigInt::from(0)
            }
        })
    }

    /// Reachability sets around the ordered pair `(i, j)`; see
    /// [`VertexPartition`]. Each set is computed by BFS on the graph with
    /// the avoided vertex deleted.
    pub fn reachability_partition(
        &self,
        i: Vertex,
        j: Vertex,
    ) -> Result<VertexPartition, GraphError> {
        for v in [i, j] {
            if v == 0 || v > self.n {
                return Err(GraphError::VertexOutOfRange { id: v, n: self.n });
            }
        }
        if i == j {
            return Err(GraphError::EqualVertices { vertex: i });
        }
        let collect = |seen: Vec<bool>, exclude: Vertex| -> BTreeSet<Vertex> {
            self.vertices()
                .filter(|&v| seen[v] && v != exclude)
                .collect()
        };
        Ok(VertexPartition {
            pair: (i, j),
            forward: collect(self.bfs_reach(i, Some(j), false), i),
            backward: collect(self.bfs_reach(j, Some(i), false), j),
            co_reach: collect(self.bfs_reach(i, Some(j), true), i),
        })
    }

    /// True iff the graph is strongly connected and every edge lies in
    /// exactly one directed cycle. Implemented by block decomposition of the
    /// underlying undirected multigraph (a digon keeps both parallel edges
    /// and forms its own block): every block must be a single cycle whose
    /// directed edges form one directed cycle.
    pub fn is_directed_cactus(&self) -> bool {
        if !self.is_strongly_connected() {
            return false;
        }
        for block in self.undirected_blocks() {
            let mut verts: BTreeSet<Vertex> = BTreeSet::new();
            for &e in &block {
                let (u, v) = self.edges[e];
                verts.insert(u);
                verts.insert(v);
            }
            if block.len() != verts.len() {
                return false;
            }
            // each block vertex must have exactly one in- and one out-edge
            // within the block; with the block connected this forces a
            // single directed cycle
            let mut out_count = vec![0usize; self.n + 1];
            let mut in_count = vec![0usize; self.n + 1];
            for &e in &block {
                let (u, v) = self.edges[e];
                out_count[u] += 1;
                in_count[v] += 1;
            }
            if verts.iter().any(|&v| out_count[v] != 1 || in_count[v] != 1) {
                return false;
            }
        }
        true
    }

    /// Biconnected components (blocks) of the underlying undirected
    /// multigraph, as lists of edge indices into `self.edges`. Parallel
    /// edges arising from digons are kept distinct. Iterative
    /// Hopcroft-Tarjan with an edge stack; only the specific tree edge used
    /// to enter a vertex is skipped, so the second edge of a digon registers
    /// as a back edge.
    fn undirected_blocks(&self) -> Vec<Vec<usize>> {
        const UNSET: usize = usize::MAX;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n + 1]; // (other, edge id)
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let mut disc = vec![UNSET; self.n + 1];
        let mut low = vec![UNSET; self.n + 1];
        let mut timer = 0usize;
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<usize> = Vec::new();

        struct Frame {
            v: usize,
            parent_edge: Option<usize>,
            next: usize,
        }

        for root in 1..=self.n {
            if disc[root] != UNSET {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut stack = vec![Frame {
                v: root,
                parent_edge: None,
                next: 0,
            }];
            while let Some(frame) = stack.last_mut() {
                let v = frame.v;
                if frame.next < adj[v].len() {
                    let (w, eid) = adj[v][frame.next];
                    frame.next += 1;
                    if Some(eid) == frame.parent_edge {
                        continue;
                    }
                    if disc[w] == UNSET {
                        edge_stack.push(eid);
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push(Frame {
                            v: w,
                            parent_edge: Some(eid),
                            next: 0,
                        });
                    } else if disc[w] < disc[v] {
                        edge_stack.push(eid);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    let done = stack.pop().expect("frame present");
                    if let Some(parent) = stack.last_mut() {
                        low[parent.v] = low[parent.v].min(low[done.v]);
                        if low[done.v] >= disc[parent.v] {
                            let tree_edge = done.parent_edge.expect("non-root has a parent edge");
                            let mut block = Vec::new();
                            loop {
                                let e = edge_stack.pop().expect("edge stack holds the block");
                                block.push(e);
                                if e == tree_edge {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks
    }

    /// Builds the relabeling that sends each `(old, new)` pin as given and
    /// fills the remaining vertices into the remaining slots in ascending
    /// order. Returned as `perm[old - 1] = new`, ready for [`Self::relabel`].
    pub fn permutation_pinning(n: usize, pins: &[(Vertex, Vertex)]) -> Vec<Vertex> {
        let mut perm = vec![0; n];
        let mut taken = vec![false; n + 1];
        for &(old, new) in pins {
            assert!(
                old >= 1 && old <= n && new >= 1 && new <= n,
                "pin out of range"
            );
            assert!(perm[old - 1] == 0 && !taken[new], "pins must not collide");
            perm[old - 1] = new;
            taken[new] = true;
        }
        let mut free_new = (1..=n).filter(|&v| !taken[v]);
        for slot in perm.iter_mut() {
            if *slot == 0 {
                *slot = free_new.next().expect("bijection leaves equal counts");
            }
        }
        perm
    }

    /// Relabels vertices: `perm[old - 1]` is the new id of `old`. `perm`
    /// must be a bijection onto `1..=n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Digraph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut hit = vec![false; self.n + 1];
        for &p in perm {
            assert!(
                p >= 1 && p <= self.n && !hit[p],
                "not a permutation of 1..=n"
            );
            hit[p] = true;
        }
        let edges = self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1]));
        Digraph::new(self.n, edges).expect("relabeling a valid graph stays valid")
    }
}
