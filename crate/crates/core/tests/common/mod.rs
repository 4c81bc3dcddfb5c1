//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the solver; components are found with a plain DFS on
//! adjacency queries and weights are summed as rationals.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use safeset_core::{Graph, Rational, VertexSet, WeightFn};

pub fn components(g: &Graph, members: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let inside: Vec<bool> = (0..g.order()).map(|v| members.contains(&v)).collect();
    let mut out = Vec::new();
    for &start in members {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..g.order() {
                if inside[v] && !seen[v] && g.has_edge(u, v) {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn weight(w: &WeightFn, vs: &[usize]) -> Rational {
    vs.iter().fold(Rational::zero(), |acc, &v| acc + w.get(v).clone())
}

fn touches(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|&u| b.iter().any(|&v| g.has_edge(u, v)))
}

/// Safe-set predicate straight from the definition.
pub fn is_safe(g: &Graph, w: &WeightFn, s: &[usize]) -> bool {
    let rest: Vec<usize> = (0..g.order()).filter(|v| !s.contains(v)).collect();
    let outside = components(g, &rest);
    components(g, s).iter().all(|c| outside.iter().all(|d| !touches(g, c, d) || weight(w, c) >= weight(w, d)))
}

pub struct Oracle {
    pub s: Rational,
    pub cs: Rational,
    /// All minimum safe sets, in lexicographic order of their sorted
    /// vertex lists.
    pub s_optima: Vec<VertexSet>,
    pub cs_optima: Vec<VertexSet>,
}

/// Exhaustive `s`, `cs` and their optimal sets over all `2^n - 1` subsets.
pub fn oracle(g: &Graph, w: &WeightFn) -> Oracle {
    let n = g.order();
    let mut best: Option<(Rational, Vec<VertexSet>)> = None;
    let mut best_c: Option<(Rational, Vec<VertexSet>)> = None;
    for mask in 1u64..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if !is_safe(g, w, &s) {
            continue;
        }
        let ws = weight(w, &s);
        let set = VertexSet::from_bits(mask);
        let connected = components(g, &s).len() == 1;
        for (slot, ok) in [(&mut best, true), (&mut best_c, connected)] {
            if !ok {
                continue;
            }
            match slot {
                Some((b, sets)) if *b == ws => sets.push(set),
                Some((b, _)) if *b < ws => {}
                _ => *slot = Some((ws.clone(), vec![set])),
            }
        }
    }
    let (s, mut s_optima) = best.expect("V(G) is always safe");
    let (cs, mut cs_optima) = best_c.expect("V(G) is connected");
    s_optima.sort_by_key(|s| s.to_vec());
    cs_optima.sort_by_key(|s| s.to_vec());
    Oracle { s, cs, s_optima, cs_optima }
}

/// Random connected graph: a random tree plus each remaining pair with
/// probability `density`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_integer_weights(rng: &mut ChaCha8Rng, n: usize, max: i64) -> WeightFn {
    let values: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=max)).collect();
    WeightFn::from_integers(&values).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
