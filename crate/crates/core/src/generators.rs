//! Seeded, reproducible graph generators for property tests and conjecture
//! search.
//!
//! The random source is ChaCha8 (`rand_chacha`), seeded from a `u64`: a
//! named, documented algorithm with platform-independent output, so a seed
//! identifies one graph forever. Identical specs yield identical edge sets.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::digraph::{Digraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("directed cycle needs n > 1, got {n}")]
    CycleTooShort { n: usize },
    #[error("cactus spec needs at least one cycle")]
    NoCycles,
    #[error("max cycle length must be at least 2, got {len}")]
    MaxLenTooShort { len: usize },
    #[error("balanced spec needs at least 2 vertices, got {n}")]
    TargetTooSmall { n: usize },
}

/// Spec for [`random_directed_cactus`]: attach `cycles` directed cycles of
/// length `2..=max_cycle_len` each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CactusSpec {
    pub seed: u64,
    pub cycles: usize,
    pub max_cycle_len: usize,
}

/// Spec for [`random_balanced_digraph`]: a Hamiltonian base cycle on `n`
/// vertices plus `overlays` extra edge-disjoint directed cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalancedSpec {
    pub seed: u64,
    pub n: usize,
    pub overlays: usize,
    pub max_cycle_len: usize,
}

/// The directed cycle `1→2→…→n→1`.
pub fn directed_cycle(n: usize) -> Result<Digraph, GenError> {
    if n <= 1 {
        return Err(GenError::CycleTooShort { n });
    }
    let edges = (1..=n).map(|v| (v, v % n + 1));
    Ok(Digraph::new(n, edges).expect("cycle edges are valid"))
}

/// A random directed cactus: one starting cycle, then each further cycle is
/// attached at a uniformly chosen existing vertex with all of its other
/// vertices fresh. The output is always a directed cactus (hence balanced
/// and strongly connected).
pub fn random_directed_cactus(spec: &CactusSpec) -> Result<Digraph, GenError> {
    if spec.cycles == 0 {
        return Err(GenError::NoCycles);
    }
    if spec.max_cycle_len < 2 {
        return Err(GenError::MaxLenTooShort {
            len: spec.max_cycle_len,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut n = rng.gen_range(2..=spec.max_cycle_len);
    for v in 1..=n {
        edges.push((v, v % n + 1));
    }
    for _ in 1..spec.cycles {
        let attach = rng.gen_range(1..=n);
        let len = rng.gen_range(2..=spec.max_cycle_len);
        // attach → n+1 → … → n+len-1 → attach
        let mut prev = attach;
        for fresh in n + 1..n + len {
            edges.push((prev, fresh));
            prev = fresh;
        }
        edges.push((prev, attach));
        n += len - 1;
    }
    Ok(Digraph::new(n, edges).expect("attachment never duplicates an edge"))
}

/// How many times an overlay cycle is re-drawn before giving up on it.
const OVERLAY_ATTEMPTS: usize = 20;

/// A random balanced strongly connected digraph: the Hamiltonian cycle
/// `1→…→n→1` overlaid with extra directed cycles on random vertex subsets.
/// Any overlay that would duplicate an existing edge is redrawn a bounded
/// number of times and then dropped, so the result is always an
/// edge-disjoint union of cycles: balanced, and strongly connected through
/// the base cycle.
pub fn random_balanced_digraph(spec: &BalancedSpec) -> Result<Digraph, GenError> {
    if spec.n < 2 {
        return Err(GenError::TargetTooSmall { n: spec.n });
    }
    if spec.max_cycle_len < 2 {
        return Err(GenError::MaxLenTooShort {
            len: spec.max_cycle_len,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let mut edge_set: std::collections::BTreeSet<(Vertex, Vertex)> =
        (1..=n).map(|v| (v, v % n + 1)).collect();
    let max_len = spec.max_cycle_len.min(n);
    for _ in 0..spec.overlays {
        'attempts: for _ in 0..OVERLAY_ATTEMPTS {
            let len = rng.gen_range(2..=max_len);
            let picked = sample(&mut rng, n, len);
            let verts: Vec<Vertex> = picked.iter().map(|idx| idx + 1).collect();
            let cycle_edges: Vec<(Vertex, Vertex)> =
                (0..len).map(|k| (verts[k], verts[(k + 1) % len])).collect();
            if cycle_edges.iter().any(|e| edge_set.contains(e)) {
                continue 'attempts;
            }
            edge_set.extend(cycle_edges);
            break 'attempts;
        }
    }
    Ok(Digraph::new(n, edge_set).expect("cycle overlays keep the graph simple"))
}

/// Derives a cactus from a bare seed with at most `max_n` vertices.
/// Deterministic in `(seed, max_n)`; used by the search CLI and the test
/// corpora.
pub fn seeded_cactus(seed: u64, max_n: usize) -> Digraph {
    assert!(max_n >= 2, "need room for at least a digon");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_cycle_len = rng.gen_range(2..=max_n.min(6));
    // worst case n = 1 + cycles·(max_cycle_len - 1) stays within max_n
    let cycle_budget = (max_n - 1) / (max_cycle_len - 1);
    let cycles = rng.gen_range(1..=cycle_budget.max(1));
    let spec = CactusSpec {
        seed: rng.gen(),
        cycles,
        max_cycle_len,
    };
    random_directed_cactus(&spec).expect("derived spec is valid")
}

/// Derives a balanced strongly connected digraph from a bare seed with at
/// most `max_n` vertices. Overlay count stays at most 2 so the edge count
/// stays within `3n` (the enumeration-oracle guard).
pub fn seeded_balanced(seed: u64, max_n: usize) -> Digraph {
    assert!(max_n >= 2, "need at least 2 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n);
    let overlays = rng.gen_range(0..=2);
    let max_cycle_len = rng.gen_range(2..=n.min(6));
    let spec = BalancedSpec {
        seed: rng.gen(),
        n,
        overlays,
        max_cycle_len,
    };
    random_balanced_digraph(&spec).expect("derived spec is valid")
}
