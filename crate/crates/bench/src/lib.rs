//! Deterministic inputs for the benchmarks.

use safeset_core::campaign::mix_seed;
use safeset_core::Graph;

/// Connected graph on `n` vertices: a random recursive tree plus each other
/// pair with probability `percent / 100`, all drawn from `seed`.
pub fn random_connected(n: usize, percent: u64, seed: u64) -> Graph {
    let mut state = seed;
    let mut next = || {
        state = mix_seed(state, 0);
        state
    };
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push(((next() % v as u64) as usize, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if next() % 100 < percent && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("vertices in range")
}
